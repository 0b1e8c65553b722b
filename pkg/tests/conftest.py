from hypothesis import strategies as st

from schubpres.symgroup import Permutation


@st.composite
def permutations_of(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    word = draw(st.permutations(range(1, n + 1)))
    return Permutation(tuple(word))


def perm(text: str) -> Permutation:
    return Permutation.parse(text)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
