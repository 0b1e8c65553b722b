"""Finite Weyl groups of types A, B, D realized as signed permutations.

An element is a tuple ``w`` with ``w(e_i) = sign(w[i-1]) * e_{|w[i-1]|}``.
Roots are integer vectors; a root is positive when its first nonzero
coordinate is positive (Bourbaki simple roots ``e_i - e_{i+1}`` plus ``e_n``
in type B, ``e_{n-1} + e_n`` in type D).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial

from .polyengine import ExactPolynomial, _multiplication_table, _schubert_from_top

MAX_ORDER = 50_000
SUPPORTED = {"A": range(1, 8), "B": range(2, 5), "D": range(4, 5)}


class CoxeterError(ValueError):
    pass


def compose(u, v):
    """``(u v)(e_i) = u(v(e_i))``."""
    out = []
    for x in v:
        y = u[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def invert(w):
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[abs(x) - 1] = i if x > 0 else -i
    return tuple(out)


def act(w, vec):
    """Apply ``w`` to a coordinate vector."""
    out = [0] * len(vec)
    for i, x in enumerate(w):
        out[abs(x) - 1] = vec[i] if x > 0 else -vec[i]
    return tuple(out)


def is_positive(vec) -> bool:
    for c in vec:
        if c:
            return c > 0
    raise CoxeterError("zero vector is not a root")


def reflection(alpha):
    """The reflection ``v -> v - 2(v.alpha)/(alpha.alpha) alpha`` as a signed permutation."""
    n = len(alpha)
    norm = sum(a * a for a in alpha)
    w = []
    for i in range(n):
        img = [Fraction(-2 * alpha[i] * a, norm) for a in alpha]
        img[i] += 1
        nz = [(k, c) for k, c in enumerate(img) if c]
        if len(nz) != 1 or abs(nz[0][1]) != 1:
            raise CoxeterError(f"reflection in {alpha} is not a signed permutation")
        k, c = nz[0]
        w.append(k + 1 if c > 0 else -(k + 1))
    return tuple(w)


def _unit(n, i, sign=1):
    v = [0] * n
    v[i] = sign
    return v


def root_data(type_label: str, rank: int):
    """``(dimension, simple roots, positive roots)`` for the given type."""
    if type_label == "A":
        n = rank + 1
        simple = [tuple(_unit(n, i)[k] - _unit(n, i + 1)[k] for k in range(n)) for i in range(rank)]
        pos = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [0] * n
                v[i], v[j] = 1, -1
                pos.append(tuple(v))
        return n, simple, pos
    n = rank
    pos = []
    for i in range(n):
        for j in range(i + 1, n):
            for sign in (-1, 1):
                v = [0] * n
                v[i], v[j] = 1, sign
                pos.append(tuple(v))
    simple = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        simple.append(tuple(v))
    if type_label == "B":
        pos += [tuple(_unit(n, i)) for i in range(n)]
        simple.append(tuple(_unit(n, n - 1)))
    elif type_label == "D":
        v = [0] * n
        v[n - 2], v[n - 1] = 1, 1
        simple.append(tuple(v))
    else:
        raise CoxeterError(f"unsupported type {type_label!r}")
    return n, simple, pos


def classical_order(type_label: str, rank: int) -> int:
    if type_label == "A":
        return factorial(rank + 1)
    if type_label == "B":
        return 2 ** rank * factorial(rank)
    if type_label == "D":
        return 2 ** (rank - 1) * factorial(rank)
    raise CoxeterError(f"unsupported type {type_label!r}")


@dataclass(frozen=True, order=True)
class CoxeterElement:
    word: tuple[int, ...]

    def __str__(self):
        return " ".join(map(str, self.word))


class CoxeterGroup:
    """Enumerated finite Weyl group with Hiller Schubert calculus over Q.

    Simple reflections are indexed ``0..rank-1`` in the order of
    :func:`root_data`'s simple roots.
    """

    def __init__(self, type_label: str, rank: int):
        if type_label not in SUPPORTED or rank not in SUPPORTED[type_label]:
            raise CoxeterError(f"unsupported Coxeter type {type_label}{rank}")
        if classical_order(type_label, rank) > MAX_ORDER:
            raise CoxeterError(f"|W({type_label}{rank})| exceeds the enumeration budget")
        self.type_label = type_label
        self.rank = rank
        self.nvars, self.simple_roots, self.positive_roots = root_data(type_label, rank)
        self.simple = tuple(range(rank))
        self.reflections = tuple(reflection(a) for a in self.simple_roots)
        self._positive = set(self.positive_roots)
        self._schubert: dict = {}
        self._mult: dict = {}
        self._below: dict = {}
        self._leq: dict = {}

    def __repr__(self):
        return f"CoxeterGroup({self.type_label!r}, {self.rank})"

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @cached_property
    def identity(self) -> CoxeterElement:
        return CoxeterElement(tuple(range(1, self.nvars + 1)))

    def element(self, word) -> CoxeterElement:
        word = tuple(int(x) for x in word)
        el = CoxeterElement(word)
        if el not in self._index:
            raise CoxeterError(f"{word} is not an element of {self.name}")
        return el

    def parse(self, text: str) -> CoxeterElement:
        return self.element(text.replace(",", " ").split())

    def format_element(self, w: CoxeterElement) -> str:
        return str(w)

    @cached_property
    def elements(self) -> list[CoxeterElement]:
        """All elements, sorted by (length, word); generated by BFS over simple reflections."""
        seen = {self.identity.word}
        queue = deque([self.identity.word])
        while queue:
            w = queue.popleft()
            for s in self.reflections:
                ws = compose(w, s)
                if ws not in seen:
                    seen.add(ws)
                    queue.append(ws)
        return sorted((CoxeterElement(w) for w in seen), key=lambda w: (self.length(w), w.word))

    @cached_property
    def _index(self) -> dict:
        return {w: k for k, w in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, u: CoxeterElement, v: CoxeterElement) -> CoxeterElement:
        return CoxeterElement(compose(u.word, v.word))

    def inverse(self, w: CoxeterElement) -> CoxeterElement:
        return CoxeterElement(invert(w.word))

    def left_mul(self, s: int, w: CoxeterElement) -> CoxeterElement:
        return CoxeterElement(compose(self.reflections[s], w.word))

    def right_mul(self, w: CoxeterElement, s: int) -> CoxeterElement:
        return CoxeterElement(compose(w.word, self.reflections[s]))

    def length(self, w: CoxeterElement) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for a in self.positive_roots if not is_positive(act(w.word, a)))

    def right_ascent(self, w: CoxeterElement, s: int) -> bool:
        return is_positive(act(w.word, self.simple_roots[s]))

    def left_ascent(self, s: int, w: CoxeterElement) -> bool:
        return is_positive(act(invert(w.word), self.simple_roots[s]))

    def descents(self, w: CoxeterElement) -> frozenset:
        return frozenset(s for s in self.simple if not self.right_ascent(w, s))

    def left_descents(self, w: CoxeterElement) -> frozenset:
        return frozenset(s for s in self.simple if not self.left_ascent(s, w))

    def is_grassmannian(self, w: CoxeterElement) -> bool:
        return len(self.descents(w)) <= 1

    def is_bigrassmannian(self, w: CoxeterElement) -> bool:
        return len(self.descents(w)) <= 1 and len(self.left_descents(w)) <= 1

    def reduced_word(self, w: CoxeterElement) -> tuple:
        out = []
        cur = w
        while cur != self.identity:
            s = next(s for s in self.simple if not self.right_ascent(cur, s))
            out.append(s)
            cur = self.right_mul(cur, s)
        return tuple(reversed(out))

    def word_length(self, w: CoxeterElement) -> int:
        """BFS distance from the identity (independent of root counting)."""
        return self._word_lengths[w.word]

    @cached_property
    def _word_lengths(self) -> dict:
        dist = {self.identity.word: 0}
        queue = deque([self.identity.word])
        while queue:
            w = queue.popleft()
            for s in self.reflections:
                ws = compose(w, s)
                if ws not in dist:
                    dist[ws] = dist[w] + 1
                    queue.append(ws)
        return dist

    @cached_property
    def w0(self) -> CoxeterElement:
        return self.elements[-1]

    def leq(self, u: CoxeterElement, w: CoxeterElement) -> bool:
        return bruhat_leq_general(self, u, w)

    @cached_property
    def all_reflections(self) -> tuple:
        """One signed permutation per positive root."""
        return tuple(reflection(a) for a in self.positive_roots)

    @cached_property
    def _lower_covers(self) -> dict:
        out = {}
        for u in self.elements:
            lu = self.length(u)
            covers = set()
            for t in self.all_reflections:
                x = CoxeterElement(compose(u.word, t))
                if self.length(x) == lu - 1:
                    covers.add(x)
            out[u] = frozenset(covers)
        return out

    def lower_covers(self, w: CoxeterElement) -> frozenset:
        """Elements covered by ``w`` in Bruhat order: ``w t`` with length one less."""
        return self._lower_covers[w]

    def below(self, w: CoxeterElement) -> frozenset:
        """Lower interval ``{u : u <= w}``; if ``sw < w`` it is ``B(sw) ∪ s B(sw)``."""
        if w in self._below:
            return self._below[w]
        if w == self.identity:
            res = frozenset([w])
        else:
            s = next(s for s in self.simple if not self.left_ascent(s, w))
            sub = self.below(self.left_mul(s, w))
            res = sub | {self.left_mul(s, u) for u in sub}
        self._below[w] = res
        return res

    # Hiller Schubert calculus

    def act_poly(self, s: int, f: ExactPolynomial) -> ExactPolynomial:
        return f.signed_permute(self.reflections[s])

    def divided_difference(self, f: ExactPolynomial, s: int) -> ExactPolynomial:
        diff = f - self.act_poly(s, f)
        if not diff:
            return ExactPolynomial.zero(self.nvars)
        return diff.divide_by_linear(self.simple_roots[s])

    def top_polynomial(self) -> ExactPolynomial:
        prod = ExactPolynomial.constant(1, self.nvars)
        for a in self.positive_roots:
            prod = prod * ExactPolynomial.linear(a)
        return prod.scale(Fraction(1, self.order))

    def schubert(self, w: CoxeterElement) -> ExactPolynomial:
        return _schubert_from_top(self, w)

    def multiplication_table(self, k: int) -> dict:
        return _multiplication_table(self, k)


_GROUPS: dict = {}


def build_group(type_label: str, rank: int) -> CoxeterGroup:
    key = (type_label.upper(), rank)
    if key not in _GROUPS:
        _GROUPS[key] = CoxeterGroup(*key)
    return _GROUPS[key]


def parse_group(name: str) -> CoxeterGroup:
    name = name.strip().upper()
    try:
        return build_group(name[0], int(name[1:]))
    except (IndexError, ValueError) as e:
        raise CoxeterError(f"bad group name {name!r}") from e


def bruhat_leq_general(group: CoxeterGroup, u: CoxeterElement, w: CoxeterElement) -> bool:
    """Recursion on a left descent ``s`` of ``w`` (lifting property)."""
    key = (u, w)
    memo = group._leq
    if key in memo:
        return memo[key]
    if u == group.identity:
        res = True
    elif w == group.identity:
        res = False
    else:
        s = next(s for s in group.simple if not group.left_ascent(s, w))
        sw = group.left_mul(s, w)
        if not group.left_ascent(s, u):
            res = bruhat_leq_general(group, group.left_mul(s, u), sw)
        else:
            res = bruhat_leq_general(group, u, sw)
    memo[key] = res
    return res


def essential_set_general(group: CoxeterGroup, w: CoxeterElement) -> set[CoxeterElement]:
    """Bruhat-minimal elements of ``{u : u not <= w}`` by full enumeration."""
    if group.order > MAX_ORDER:
        raise CoxeterError("group too large for enumeration")
    below = group.below(w)
    # u outside the ideal is minimal iff everything it covers lies inside
    return {
        u for u in group.elements
        if u not in below and group.lower_covers(u) <= below
    }


def join_irreducibles(group: CoxeterGroup) -> set[CoxeterElement]:
    """Elements that are not the least upper bound of everything strictly below them."""
    elems = group.elements
    out = set()
    for a in elems:
        if a == group.identity:
            continue
        covered = group.lower_covers(a)
        uppers = [b for b in elems if all(x in group.below(b) for x in covered)]
        if any(a not in group.below(b) for b in uppers):
            out.add(a)
    return out


def scan_bigrassmannian_property(group: CoxeterGroup) -> dict:
    violations = []
    for w in group.elements:
        for v in essential_set_general(group, w):
            if not group.is_bigrassmannian(v):
                violations.append({"w": str(w), "v": str(v)})
    return {
        "group": group.name,
        "order": group.order,
        "scanned": len(group.elements),
        "violations": violations,
        "pass": not violations,
    }
