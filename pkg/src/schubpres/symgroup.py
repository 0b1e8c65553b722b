"""Type-A combinatorics: permutations of ``{1..n}`` in one-line notation.

Simple reflections are indexed ``1..n-1``; ``s_i`` acts on the right by
swapping positions ``i`` and ``i+1``, so ``Des(w) = {i : w_i > w_{i+1}}``.
Products compose as functions: ``(u * v)(k) = u(v(k))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, permutations


class PermutationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        n = len(word)
        if n == 0 or sorted(word) != list(range(1, n + 1)):
            raise PermutationError(f"not a permutation of 1..{n}: {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"425163"`` or ``"10,2,3,..."`` (commas required above n=9)."""
        text = text.strip()
        if "," in text:
            parts = [p for p in text.replace(" ", "").split(",") if p]
        elif " " in text:
            parts = text.split()
        else:
            parts = list(text)
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as e:
            raise PermutationError(f"malformed permutation {text!r}") from e

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        if not 1 <= i < n:
            raise PermutationError(f"s_{i} is not a simple reflection of S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(tuple(w))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __getitem__(self, k: int) -> int:
        """1-based entry ``w_k``."""
        return self.word[k - 1]

    def __str__(self):
        if self.n > 9:
            return ",".join(map(str, self.word))
        return "".join(map(str, self.word))

    def __repr__(self):
        return f"Permutation({str(self)!r})"

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise PermutationError("size mismatch")
        return Permutation(tuple(self.word[k - 1] for k in other.word))

    @cached_property
    def length(self) -> int:
        w = self.word
        return sum(1 for a, b in combinations(range(self.n), 2) if w[a] > w[b])

    @cached_property
    def descents(self) -> frozenset[int]:
        w = self.word
        return frozenset(i + 1 for i in range(self.n - 1) if w[i] > w[i + 1])

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.word, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.word == tuple(range(1, self.n + 1))

    def times_simple(self, i: int) -> Permutation:
        """Right multiplication by ``s_i`` (swap positions i, i+1)."""
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def simple_times(self, i: int) -> Permutation:
        """Left multiplication by ``s_i`` (swap values i, i+1)."""
        return Permutation(tuple(i + 1 if x == i else i if x == i + 1 else x for x in self.word))

    def reduced_word(self) -> tuple[int, ...]:
        """A reduced word ``(i_1, ..., i_l)`` with ``w = s_{i_1} ... s_{i_l}``."""
        w = list(self.word)
        out = []
        # peel right descents: w = (w s_i) s_i
        while True:
            for i in range(len(w) - 1):
                if w[i] > w[i + 1]:
                    w[i], w[i + 1] = w[i + 1], w[i]
                    out.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(out))

    @cached_property
    def rank_matrix(self) -> tuple[tuple[int, ...], ...]:
        """``R[r][s] = t_{r,s}(w)`` for ``0 <= r, s <= n``."""
        n = self.n
        rows = [[0] * (n + 1)]
        seen = [0] * (n + 1)
        for r in range(1, n + 1):
            seen[self.word[r - 1]] = 1
            row = [0] * (n + 1)
            acc = 0
            for s in range(1, n + 1):
                acc += seen[s]
                row[s] = acc
            rows.append(row)
        return tuple(tuple(r) for r in rows)


def perm_basics(w: Permutation) -> dict:
    return {"length": w.length, "descents": sorted(w.descents), "inverse": w.inverse}


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def rank_function(w: Permutation, r: int, s: int) -> int:
    """``t_{r,s}(w) = |{w_1..w_r} ∩ {1..s}|``."""
    if not (1 <= r <= w.n and 1 <= s <= w.n):
        raise PermutationError(f"rank indices ({r},{s}) out of range for n={w.n}")
    return w.rank_matrix[r][s]


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Tableau/rank criterion: ``u <= w`` iff ``t_{r,s}(u) >= t_{r,s}(w)`` everywhere."""
    if u.n != w.n:
        raise PermutationError("size mismatch")
    ru, rw = u.rank_matrix, w.rank_matrix
    n = u.n
    for r in range(1, n):
        a, b = ru[r], rw[r]
        for s in range(1, n):
            if a[s] < b[s]:
                return False
    return True


def bruhat_leq_subword(u: Permutation, w: Permutation) -> bool:
    """Subword property; exponential, kept as an independent oracle."""
    if u.n != w.n:
        raise PermutationError("size mismatch")
    if u.length > w.length:
        return False
    word = w.reduced_word()
    target = u.length
    for pos in combinations(range(len(word)), target):
        x = Permutation.identity(u.n)
        for p in pos:
            x = x.times_simple(word[p])
        if x == u:
            return True
    return False


def classify_grassmannian(v: Permutation) -> dict:
    grass = len(v.descents) <= 1
    bigrass = grass and len(v.inverse.descents) <= 1
    idx = next(iter(v.descents)) if len(v.descents) == 1 else None
    return {"grassmannian": grass, "bigrassmannian": bigrass, "descent_index": idx}


def is_grassmannian(v: Permutation) -> bool:
    return len(v.descents) <= 1


def is_bigrassmannian(v: Permutation) -> bool:
    return len(v.descents) <= 1 and len(v.inverse.descents) <= 1


def check_rank_triple(r: int, s: int, t: int, n: int) -> None:
    if not (1 <= t <= r <= n and t <= s <= n and t > r + s - n):
        raise PermutationError(f"invalid rank triple r={r}, s={s}, t={t}, n={n}")


def make_bigrassmannian(r: int, s: int, t: int, n: int) -> Permutation:
    """The bigrassmannian ``v_{r,s,t,n}`` with Des = {s_r}, Des(v^-1) = {s_s}, v_t = s+1."""
    check_rank_triple(r, s, t, n)
    word = (
        list(range(1, t))
        + list(range(s + 1, s + r - t + 2))
        + list(range(t, s + 1))
        + list(range(s + r - t + 2, n + 1))
    )
    return Permutation(tuple(word))


def rank_triples(n: int):
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            for t in range(max(1, r + s - n + 1), min(r, s) + 1):
                yield r, s, t


@lru_cache(maxsize=None)
def bigrassmannians(n: int) -> tuple[Permutation, ...]:
    """All non-identity bigrassmannians of ``S_n``, one per valid ``(r, s, t)``."""
    out = {make_bigrassmannian(r, s, t, n) for r, s, t in rank_triples(n)}
    out.discard(Permutation.identity(n))
    return tuple(sorted(out))


def _bruhat_minimal(elems) -> set:
    elems = list(elems)
    return {
        v for v in elems
        if not any(u != v and u.length < v.length and bruhat_leq(u, v) for u in elems)
    }


def essential_set(w: Permutation) -> set[Permutation]:
    """Bruhat-minimal elements of ``{u : u not <= w}``.

    Only bigrassmannians need be enumerated: every minimal non-below element
    is bigrassmannian, and the non-below set is an upper set.
    """
    candidates = [v for v in bigrassmannians(w.n) if not bruhat_leq(v, w)]
    return _bruhat_minimal(candidates)


def essential_set_bruteforce(w: Permutation) -> set[Permutation]:
    return _bruhat_minimal(u for u in all_permutations(w.n) if not bruhat_leq(u, w))


def dissector_complement_max(v: Permutation) -> Permutation:
    """The unique ``w`` with ``E(w) = {v}``: the Bruhat maximum of ``{u : v not <= u}``."""
    if not is_bigrassmannian(v) or v.is_identity():
        raise PermutationError(f"{v} is not a non-identity bigrassmannian")
    rest = [u for u in all_permutations(v.n) if not bruhat_leq(v, u)]
    top = max(rest, key=lambda u: u.length)
    if not all(bruhat_leq(u, top) for u in rest):
        raise AssertionError(f"complement of the filter above {v} has no maximum")
    return top


def bigrassmannian_parameters(v: Permutation) -> tuple[int, int, int, int]:
    """Recover ``(r, s, t, n)`` with ``v = v_{r,s,t,n}``."""
    if not is_bigrassmannian(v) or v.is_identity():
        raise PermutationError(f"{v} is not a non-identity bigrassmannian")
    (r,) = v.descents
    (s,) = v.inverse.descents
    t = v.inverse[s + 1]
    return r, s, t, v.n


def complement_max_formula(r: int, s: int, t: int, n: int, printed: bool = False) -> tuple[int, ...]:
    """Closed form for ``w_{r,s,t,n}``.

    The third block is the decreasing run ``n-r+t, n-r+t-1, ..., s+1``. With
    ``printed=True`` the run instead steps from ``n-r+t`` straight to
    ``n-r+t-3`` (the typeset variant), which is generally not a permutation.
    """
    check_rank_triple(r, s, t, n)
    block3 = list(range(n - r + t, s, -1))
    if printed and len(block3) >= 2:
        block3 = [n - r + t] + list(range(n - r + t - 3, s, -1))
    return tuple(
        list(range(n, n - r + t, -1))
        + list(range(s, s - t, -1))
        + block3
        + list(range(s - t, 0, -1))
    )


def diagram(w: Permutation) -> set[tuple[int, int]]:
    """Bubbles left after erasing hooks weakly below and to the left of each ``(i, w_i)``."""
    n = w.n
    erased = set()
    for i in range(1, n + 1):
        c = w[i]
        erased.update((i, j) for j in range(1, c + 1))
        erased.update((k, c) for k in range(i, n + 1))
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if (i, j) not in erased}


@dataclass(frozen=True, order=True)
class FultonCell:
    row: int
    col: int
    t: int
    bigrassmannian: Permutation = field(compare=False)

    @property
    def condition(self) -> tuple[int, int, int]:
        """``(r, s, t)`` of the Schubert condition ``dim(V_r ∩ C^s) >= t``."""
        return self.row, self.col - 1, self.t


def fulton_essential(w: Permutation) -> list[FultonCell]:
    d = diagram(w)
    cells = []
    for i, j in sorted(d):
        if (i + 1, j) in d or (i, j - 1) in d:
            continue
        t = sum(1 for k in range(1, i + 1) if (k, j) in d)
        r, s = i, j - 1
        cells.append(FultonCell(i, j, t, make_bigrassmannian(r, s, t, w.n)))
    return cells


def parabolic_blocks(J, n: int) -> list[list[int]]:
    """Position blocks permuted by ``W_J``; ``J`` is a set of indices in ``1..n-1``."""
    J = set(J)
    if not J <= set(range(1, n)):
        raise PermutationError(f"J={sorted(J)} is not a subset of S for n={n}")
    blocks, cur = [], [1]
    for i in range(1, n):
        if i in J:
            cur.append(i + 1)
        else:
            blocks.append(cur)
            cur = [i + 1]
    blocks.append(cur)
    return blocks


def parabolic_cosets(w: Permutation, J) -> dict:
    """Factor ``w = u * x`` with ``u`` in ``W^J`` and ``x`` in ``W_J``."""
    lo, hi = list(w.word), list(w.word)
    for block in parabolic_blocks(J, w.n):
        vals = sorted(w[p] for p in block)
        for p, val in zip(block, vals):
            lo[p - 1] = val
        for p, val in zip(block, reversed(vals)):
            hi[p - 1] = val
    u = Permutation(tuple(lo))
    x = u.inverse * w
    return {"u": u, "x": x, "w_min": u, "w_max": Permutation(tuple(hi))}


def parabolic_subgroup(J, n: int) -> list[Permutation]:
    """All elements of ``W_J``."""
    e = Permutation.identity(n)
    return [x for x in all_permutations(n) if parabolic_cosets(x, J)["u"] == e]


def grassmannian_to_partition(w: Permutation, r: int) -> tuple[int, ...]:
    if not w.descents <= {r}:
        raise PermutationError(f"{w} is not {r}-grassmannian")
    lam = tuple(w[k] - k for k in range(r, 0, -1))
    return tuple(p for p in lam if p > 0)


def contains_pattern(w: Permutation, pattern) -> bool:
    pattern = tuple(pattern)
    k = len(pattern)
    order = sorted(range(k), key=lambda a: pattern[a])
    for pos in combinations(range(w.n), k):
        vals = [w.word[p] for p in pos]
        if all(vals[order[a]] < vals[order[a + 1]] for a in range(k - 1)):
            return True
    return False


INCLUSION_PATTERNS = ((4, 2, 3, 1), (3, 5, 1, 4, 2), (4, 2, 5, 1, 3), (3, 5, 1, 6, 2, 4))
SMOOTH_PATTERNS = ((3, 4, 1, 2), (4, 2, 3, 1))


def pattern_class(w: Permutation) -> dict:
    return {
        "defined_by_inclusions": not any(contains_pattern(w, p) for p in INCLUSION_PATTERNS),
        "smooth": not any(contains_pattern(w, p) for p in SMOOTH_PATTERNS),
    }


def partition_to_grassmannian(lam, r: int, n: int) -> Permutation:
    """The ``r``-grassmannian permutation of ``S_n`` whose partition is ``lam``."""
    lam = tuple(lam)
    if len(lam) > r or (lam and lam[0] > n - r):
        raise PermutationError(f"{list(lam)} does not fit in a {r} x {n - r} box")
    padded = list(lam) + [0] * (r - len(lam))
    first = [padded[r - k] + k for k in range(1, r + 1)]
    rest = sorted(set(range(1, n + 1)) - set(first))
    return Permutation(tuple(first + rest))
