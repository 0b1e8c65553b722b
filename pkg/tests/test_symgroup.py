import pytest
from hypothesis import given, settings

from conftest import perm, permutations_of
from schubpres.symgroup import (
    Permutation,
    PermutationError,
    all_permutations,
    bigrassmannian_parameters,
    bigrassmannians,
    bruhat_leq,
    bruhat_leq_subword,
    classify_grassmannian,
    complement_max_formula,
    diagram,
    dissector_complement_max,
    essential_set,
    essential_set_bruteforce,
    fulton_essential,
    grassmannian_to_partition,
    is_bigrassmannian,
    make_bigrassmannian,
    parabolic_cosets,
    parabolic_subgroup,
    partition_to_grassmannian,
    pattern_class,
    perm_basics,
    rank_function,
    rank_triples,
)


# ---- basics -----------------------------------------------------------------

def test_perm_basics_425163():
    info = perm_basics(perm("425163"))
    assert info["length"] == 7
    assert info["descents"] == [1, 3, 5]
    assert info["inverse"] * perm("425163") == Permutation.identity(6)


@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_identity_and_longest(n):
    e = Permutation.identity(n)
    assert e.length == 0 and e.descents == frozenset()
    assert Permutation.longest(n).length == n * (n - 1) // 2


@pytest.mark.parametrize("bad", ["1224", "0123", "135", "12a", ""])
def test_malformed_words_rejected(bad):
    with pytest.raises(PermutationError):
        Permutation.parse(bad)


def test_parse_forms_and_str():
    assert perm("3,1,2") == perm("312") == perm("3 1 2")
    big = Permutation(tuple(range(10, 0, -1)))
    assert str(big) == "10,9,8,7,6,5,4,3,2,1"
    assert Permutation.parse(str(big)) == big


@given(permutations_of(max_n=7))
def test_length_is_reduced_word_length(w):
    word = w.reduced_word()
    assert len(word) == w.length
    x = Permutation.identity(w.n)
    for i in word:
        x = x.times_simple(i)
    assert x == w


@given(permutations_of(min_n=2, max_n=7))
def test_left_and_right_simple_multiplication(w):
    for i in range(1, w.n):
        s = Permutation.simple(i, w.n)
        assert w.times_simple(i) == w * s
        assert w.simple_times(i) == s * w


# ---- rank function and Bruhat order ------------------------------------------

def test_rank_function_examples():
    w = perm("425163")
    assert rank_function(w, 2, 4) == 2
    assert rank_function(w, 2, 2) == 1
    e = Permutation.identity(5)
    assert all(rank_function(e, r, s) == min(r, s) for r in range(1, 6) for s in range(1, 6))


def test_rank_function_out_of_range():
    with pytest.raises(PermutationError):
        rank_function(perm("123"), 0, 2)
    with pytest.raises(PermutationError):
        rank_function(perm("123"), 1, 4)


def test_bruhat_examples():
    assert not bruhat_leq(perm("1324"), perm("1243"))
    assert bruhat_leq(perm("132"), perm("231"))
    w = perm("425163")
    assert bruhat_leq(Permutation.identity(6), w)
    with pytest.raises(PermutationError):
        bruhat_leq(perm("12"), perm("123"))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_bruhat_matches_subword_oracle(n):
    perms = all_permutations(n)
    for u in perms:
        for w in perms:
            assert bruhat_leq(u, w) == bruhat_leq_subword(u, w), (u, w)


# ---- grassmannian and bigrassmannian ----------------------------------------

def test_classify_examples():
    c = classify_grassmannian(perm("341256"))
    assert c == {"grassmannian": True, "bigrassmannian": True, "descent_index": 2}
    assert perm("341256").inverse.descents == {2}
    c = classify_grassmannian(Permutation.identity(4))
    assert c["grassmannian"] and c["bigrassmannian"] and c["descent_index"] is None
    assert not classify_grassmannian(perm("321"))["grassmannian"]


def test_make_bigrassmannian_examples():
    assert make_bigrassmannian(2, 2, 1, 6) == perm("341256")
    assert make_bigrassmannian(2, 4, 2, 6) == perm("152346")
    assert make_bigrassmannian(2, 2, 2, 4) == perm("1324")


@pytest.mark.parametrize("args", [(2, 2, 3, 6), (2, 2, 0, 6), (4, 4, 1, 6), (7, 1, 1, 6)])
def test_make_bigrassmannian_bad_triples(args):
    with pytest.raises(PermutationError):
        make_bigrassmannian(*args)


@pytest.mark.parametrize("n", range(2, 7))
def test_bigrassmannian_rank_conditions(n):
    perms = all_permutations(n)
    for r, s, t in rank_triples(n):
        v = make_bigrassmannian(r, s, t, n)
        if v.is_identity():
            continue
        assert v.descents == {r} and v.inverse.descents == {s}
        assert v[t] == s + 1
        assert rank_function(v, r, s) == t - 1
        assert bigrassmannian_parameters(v) == (r, s, t, n)
        for w in perms:
            assert (rank_function(w, r, s) >= t) == (not bruhat_leq(v, w))


@pytest.mark.parametrize("n", range(2, 7))
def test_bigrassmannian_enumeration_is_complete(n):
    brute = {u for u in all_permutations(n) if is_bigrassmannian(u) and not u.is_identity()}
    assert set(bigrassmannians(n)) == brute


# ---- essential sets ------------------------------------------------------------

def test_essential_set_examples():
    assert essential_set(perm("425163")) == {perm(x) for x in ("341256", "152346", "134526", "123645")}
    assert essential_set(Permutation.longest(5)) == set()
    assert essential_set(perm("1243")) == {perm("2134"), perm("1324")}
    assert essential_set(perm("23541")) == {perm("14235"), perm("31245")}


@pytest.mark.parametrize("n", range(1, 7))
def test_essential_set_matches_bruteforce(n):
    for w in all_permutations(n):
        ess = essential_set(w)
        assert ess == essential_set_bruteforce(w), w
        assert all(is_bigrassmannian(v) for v in ess)


# ---- complement maximum -------------------------------------------------------

def test_complement_max_examples():
    assert dissector_complement_max(perm("2134")) == perm("1432")
    w = dissector_complement_max(perm("1324"))
    assert w == perm("2143")
    assert essential_set(w) == {perm("1324")}
    assert dissector_complement_max(perm("21")) == perm("12")
    with pytest.raises(PermutationError):
        dissector_complement_max(perm("321"))
    with pytest.raises(PermutationError):
        dissector_complement_max(perm("123"))


@pytest.mark.parametrize("n", range(2, 7))
def test_complement_max_dissects_the_group(n):
    perms = all_permutations(n)
    for v in bigrassmannians(n):
        w = dissector_complement_max(v)
        assert essential_set(w) == {v}
        for u in perms:
            # exactly one of: above v, below w
            assert bruhat_leq(v, u) != bruhat_leq(u, w)
        assert complement_max_formula(*bigrassmannian_parameters(v)) == w.word


def test_typeset_formula_variant_differs():
    # the run n-r+t, n-r+t-3, ... skips two values, so it cannot be a permutation
    word = complement_max_formula(2, 2, 1, 6, printed=True)
    assert sorted(word) != list(range(1, 7))
    assert complement_max_formula(2, 2, 1, 6) == dissector_complement_max(perm("341256")).word


# ---- Fulton diagram -----------------------------------------------------------

def test_fulton_425163():
    cells = fulton_essential(perm("425163"))
    got = [((c.row, c.col), c.condition, str(c.bigrassmannian)) for c in cells]
    assert got == [
        ((2, 3), (2, 2, 1), "341256"),
        ((2, 5), (2, 4, 2), "152346"),
        ((4, 3), (4, 2, 2), "134526"),
        ((4, 6), (4, 5, 4), "123645"),
    ]
    assert len(diagram(perm("425163"))) == 8


@pytest.mark.parametrize("n", range(1, 7))
def test_fulton_bijection_and_diagram_size(n):
    w0 = Permutation.longest(n)
    for w in all_permutations(n):
        d = diagram(w)
        assert len(d) == (w0 * w).length
        cells = fulton_essential(w)
        images = [c.bigrassmannian for c in cells]
        assert len(set(images)) == len(images)
        assert set(images) == essential_set(w)


def test_fulton_identity_and_longest():
    for n in range(2, 7):
        assert len(diagram(Permutation.identity(n))) == n * (n - 1) // 2
        assert len(fulton_essential(Permutation.identity(n))) == n - 1
        assert diagram(Permutation.longest(n)) == set()


# ---- parabolic cosets -----------------------------------------------------------

def test_parabolic_examples():
    c = parabolic_cosets(perm("312"), {1})
    assert c["u"] == perm("132") and c["x"] == Permutation.simple(1, 3)
    assert perm("312").length == c["u"].length + 1
    c = parabolic_cosets(perm("2413"), set())
    assert c["u"] == perm("2413") and c["x"].is_identity()
    assert parabolic_cosets(perm("213"), {2})["w_max"] == perm("231")


@pytest.mark.parametrize("n", range(1, 6))
def test_parabolic_factorization(n):
    from itertools import combinations

    for k in range(n):
        for J in combinations(range(1, n), k):
            J = set(J)
            WJ = parabolic_subgroup(J, n)
            for w in all_permutations(n):
                c = parabolic_cosets(w, J)
                u, x = c["u"], c["x"]
                assert u * x == w
                assert w.length == u.length + x.length
                assert not (u.descents & J)
                coset = [w * y for y in WJ]
                assert all(bruhat_leq(c["w_min"], z) and bruhat_leq(z, c["w_max"]) for z in coset)
                wmin, wmax = c["w_min"], c["w_max"]
                for v in all_permutations(n):
                    if not v.descents & J:
                        assert bruhat_leq(v, wmax) == bruhat_leq(v, wmin)


# ---- partitions and patterns ------------------------------------------------------

def test_grassmannian_to_partition_examples():
    assert grassmannian_to_partition(perm("1324"), 2) == (1,)
    assert grassmannian_to_partition(Permutation.identity(5), 3) == ()
    assert grassmannian_to_partition(perm("341256"), 2) == (2, 2)
    with pytest.raises(PermutationError):
        grassmannian_to_partition(perm("321"), 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_partition_round_trip(n):
    for u in all_permutations(n):
        if len(u.descents) == 1:
            (r,) = u.descents
            lam = grassmannian_to_partition(u, r)
            assert sum(lam) == u.length
            assert partition_to_grassmannian(lam, r, n) == u


def test_pattern_class_examples():
    assert pattern_class(perm("4231")) == {"defined_by_inclusions": False, "smooth": False}
    assert pattern_class(perm("1234")) == {"defined_by_inclusions": True, "smooth": True}
    assert pattern_class(perm("3412")) == {"defined_by_inclusions": True, "smooth": False}
    assert not pattern_class(perm("351624"))["defined_by_inclusions"]
    assert pattern_class(perm("351624"))["smooth"] is False


@settings(max_examples=50)
@given(permutations_of(max_n=6))
def test_smooth_implies_defined_by_inclusions(w):
    c = pattern_class(w)
    # the forbidden inclusion patterns all contain 3412 or 4231
    if c["smooth"]:
        assert c["defined_by_inclusions"]
