"""Partitions and integer combinations of Schur functions.

Partitions are tuples of positive, weakly decreasing ints. Elements of the
ring of symmetric functions are :class:`SchurVector` instances (maps from
partition to nonzero integer coefficient).
"""

from __future__ import annotations

from functools import lru_cache

from .polyengine import ExactPolynomial


class PartitionError(ValueError):
    pass


def partition(parts) -> tuple[int, ...]:
    lam = tuple(int(p) for p in parts)
    if any(p < 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise PartitionError(f"not a partition: {lam}")
    return tuple(p for p in lam if p > 0)


def size(lam) -> int:
    return sum(lam)


def conjugate(lam) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def contains(big, small) -> bool:
    """Young-diagram containment ``small ⊆ big``."""
    if len(small) > len(big):
        return False
    return all(b >= s for b, s in zip(big, small))


def fits_box(lam, rows: int, cols: int) -> bool:
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def rectangle(width: int, height: int) -> tuple[int, ...]:
    """``width^height``: ``height`` rows of length ``width``."""
    return (width,) * height if width > 0 else ()


def dominates(lam, mu) -> bool:
    """``lam >= mu`` in dominance order (equal sizes assumed)."""
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def sort_key(lam):
    """Total order by degree then lex; lex refines dominance."""
    return (sum(lam), tuple(lam))


def partitions_of(d: int, max_part: int | None = None, max_len: int | None = None):
    if max_part is None:
        max_part = d
    if max_len is None:
        max_len = d
    if d == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions_of(d - first, first, max_len - 1):
            yield (first,) + rest


def partitions_in_box(rows: int, cols: int, d: int | None = None):
    if d is None:
        for k in range(rows * cols + 1):
            yield from partitions_in_box(rows, cols, k)
        return
    yield from partitions_of(d, cols, rows)


def interval(lo, hi) -> list[tuple[int, ...]]:
    """All partitions ``mu`` with ``lo ⊆ mu ⊆ hi``, sorted by :func:`sort_key`."""
    if not contains(hi, lo):
        return []
    hi = list(hi)
    lo = list(lo) + [0] * (len(hi) - len(lo))
    out = []

    def rec(k, prev, acc):
        if k == len(hi):
            out.append(tuple(p for p in acc if p > 0))
            return
        for p in range(lo[k], min(hi[k], prev) + 1):
            acc.append(p)
            rec(k + 1, p, acc)
            acc.pop()

    rec(0, hi[0] if hi else 0, [])
    return sorted(out, key=sort_key)


def horizontal_strips(lam, k: int, max_rows: int | None = None, max_cols: int | None = None):
    """Partitions ``mu ⊇ lam`` with ``mu/lam`` a horizontal strip of size ``k``."""
    lam = list(lam)
    rows = len(lam) + 1
    if max_rows is not None:
        rows = min(rows, max_rows)
    if len(lam) > rows:
        return
    out = []

    def rec(idx, remaining, acc):
        if idx == rows:
            if remaining == 0:
                out.append(tuple(p for p in acc if p > 0))
            return
        base = lam[idx] if idx < len(lam) else 0
        cap = lam[idx - 1] if idx > 0 else base + remaining
        if max_cols is not None:
            cap = min(cap, max_cols)
        for add in range(0, min(remaining, cap - base) + 1):
            acc.append(base + add)
            rec(idx + 1, remaining - add, acc)
            acc.pop()

    rec(0, k, [])
    yield from out


def vertical_strips(lam, k: int, max_rows: int | None = None, max_cols: int | None = None):
    for mu in horizontal_strips(conjugate(lam), k, max_cols, max_rows):
        yield conjugate(mu)


class SchurVector:
    """Finite integer combination of Schur functions ``s_lambda``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for lam, c in (terms or {}).items():
            if c:
                lam = partition(lam)
                clean[lam] = clean.get(lam, 0) + c
        self.terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def schur(cls, lam, coeff: int = 1) -> SchurVector:
        return cls({partition(lam): coeff})

    @classmethod
    def h(cls, k: int) -> SchurVector:
        if k < 0:
            return cls()
        return cls.schur((k,))

    @classmethod
    def e(cls, k: int) -> SchurVector:
        if k < 0:
            return cls()
        return cls.schur((1,) * k)

    @classmethod
    def one(cls) -> SchurVector:
        return cls.schur(())

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SchurVector):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: sort_key(kv[0])))

    def __getitem__(self, lam):
        return self.terms.get(tuple(lam), 0)

    def __add__(self, other: SchurVector) -> SchurVector:
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchurVector(out)

    def __neg__(self):
        return SchurVector({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: SchurVector) -> SchurVector:
        return self + (-other)

    def scale(self, c: int) -> SchurVector:
        return SchurVector({lam: c * v for lam, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, int):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, SchurVector):
            return multiply(self, other)
        return NotImplemented

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def to_json(self) -> dict:
        return {format_partition(lam): c for lam, c in self}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*s{list(lam)}" for lam, c in self)


def format_partition(lam) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip().strip("[]()")
    if not text:
        return ()
    return partition(int(p) for p in text.replace(" ", "").split(",") if p)


def pieri(kind: str, k: int, v: SchurVector, max_rows: int | None = None,
          max_cols: int | None = None) -> SchurVector:
    """Multiply ``v`` by ``e_k`` (vertical strips) or ``h_k`` (horizontal strips).

    ``max_rows``/``max_cols`` discard terms outside a box as they are generated.
    """
    if kind not in ("e", "h"):
        raise ValueError(f"unknown Pieri kind {kind!r}")
    if k < 0:
        return SchurVector()
    strips = horizontal_strips if kind == "h" else vertical_strips
    out: dict = {}
    for lam, c in v.terms.items():
        for mu in strips(lam, k, max_rows, max_cols):
            out[mu] = out.get(mu, 0) + c
    return SchurVector(out)


def project_quotient(v: SchurVector, r: int, n: int) -> SchurVector:
    """Image in ``Λ/I_{r,n-r}``: drop every ``s_lambda`` not inside ``(n-r)^r``."""
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    return SchurVector({lam: c for lam, c in v.terms.items() if fits_box(lam, r, n - r)})


def omega(v: SchurVector) -> SchurVector:
    return SchurVector({conjugate(lam): c for lam, c in v.terms.items()})


@lru_cache(maxsize=None)
def _jt_terms(lam: tuple[int, ...]) -> tuple:
    ell = len(lam)
    acc: dict = {}

    def rec(row, used, sign, factors):
        if row == ell:
            key = tuple(sorted((f for f in factors if f > 0), reverse=True))
            acc[key] = acc.get(key, 0) + sign
            return
        # sign of the permutation via count of used columns to the right
        for col in range(ell):
            if col in used:
                continue
            idx = lam[row] - row + col
            if idx < 0:
                continue
            inv = sum(1 for u in used if u > col)
            rec(row + 1, used | {col}, -sign if inv % 2 else sign, factors + (idx,))

    rec(0, frozenset(), 1, ())
    return tuple(sorted((k, c) for k, c in acc.items() if c))


def jacobi_trudi(lam) -> dict[tuple[int, ...], int]:
    """``det(h_{lam_i - i + j})`` as ``{(k1, k2, ...): coeff}`` meaning ``coeff*h_k1*h_k2*...``."""
    return dict(_jt_terms(partition(lam)))


def h_monomial(ks, v: SchurVector | None = None, max_rows=None, max_cols=None) -> SchurVector:
    out = SchurVector.one() if v is None else v
    for k in ks:
        out = pieri("h", k, out, max_rows, max_cols)
    return out


def jacobi_trudi_verify(lam) -> bool:
    total = SchurVector()
    for ks, c in jacobi_trudi(lam).items():
        total = total + h_monomial(ks).scale(c)
    return total == SchurVector.schur(lam)


def multiply(u: SchurVector, v: SchurVector, max_rows=None, max_cols=None) -> SchurVector:
    """Product via the Jacobi-Trudi expansion of ``u`` and iterated h-Pieri on ``v``."""
    out = SchurVector()
    for lam, c in u.terms.items():
        for ks, d in jacobi_trudi(lam).items():
            out = out + h_monomial(ks, v, max_rows, max_cols).scale(c * d)
    return out


def hook_identity_sides(nu, k: int, restrict_rows: bool = True) -> tuple[SchurVector, SchurVector]:
    """Both sides of ``s_(nu,1^k) = sum_l (-1)^l e_{k-l} sum_lambda s_lambda``.

    The inner sum runs over horizontal ``l``-strips added to ``nu``; with
    ``restrict_rows`` only strips inside the first ``len(nu)`` rows count
    (without it the identity fails already for ``nu=(1), k=1``).
    """
    nu = partition(nu)
    if k < 0:
        raise ValueError("k must be nonnegative")
    lhs = SchurVector.schur(nu + (1,) * k)
    rhs = SchurVector()
    for ell in range(k + 1):
        rows = len(nu) if restrict_rows else None
        strip = SchurVector({lam: 1 for lam in horizontal_strips(nu, ell, rows)})
        rhs = rhs + pieri("e", k - ell, strip).scale((-1) ** ell)
    return lhs, rhs


def hook_identity_check(nu, k: int) -> bool:
    lhs, rhs = hook_identity_sides(nu, k)
    return lhs == rhs


def column_length(mu, i: int) -> int:
    """Length of column ``i+1`` of ``mu`` (number of parts exceeding ``i``)."""
    return sum(1 for p in mu if p > i)


def column_identity_terms(mu, i: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Terms ``(sign, h-index, mu^(m))`` for ``m = 1..k`` of the column expansion of ``s_mu``."""
    mu = partition(mu)
    k = column_length(mu, i)
    if i < 0 or k <= i:
        raise PartitionError(f"column {i + 1} of {list(mu)} has length {k}, need > {i}")
    out = []
    for m in range(1, k + 1):
        new = list(mu[: m - 1]) + [p - 1 for p in mu[m:k]] + [i] + list(mu[k:])
        out.append(((-1) ** (k - m), mu[m - 1] + k - i - m, partition(new)))
    return out


def column_identity_check(mu, i: int) -> bool:
    total = SchurVector()
    for sign, hk, nu in column_identity_terms(mu, i):
        total = total + pieri("h", hk, SchurVector.schur(nu)).scale(sign)
    return total == SchurVector.schur(mu)


def semistandard_tableaux(lam, r: int):
    """Yield fillings (as row lists) of shape ``lam`` with entries in ``1..r``."""
    cells = [(a, b) for a, row in enumerate(lam) for b in range(row)]
    filling: dict = {}

    def rec(idx):
        if idx == len(cells):
            yield filling
            return
        a, b = cells[idx]
        lo = 1
        if b > 0:
            lo = max(lo, filling[(a, b - 1)])
        if a > 0:
            lo = max(lo, filling[(a - 1, b)] + 1)
        for x in range(lo, r + 1):
            filling[(a, b)] = x
            yield from rec(idx + 1)
        filling.pop((a, b), None)

    yield from rec(0)


def schur_in_variables(lam, r: int, nvars: int | None = None) -> ExactPolynomial:
    """``s_lambda(x_1..x_r)`` as a tableau sum; zero when ``len(lam) > r``."""
    lam = partition(lam)
    nvars = r if nvars is None else nvars
    if len(lam) > r:
        return ExactPolynomial.zero(nvars)
    terms: dict = {}
    for tab in semistandard_tableaux(lam, r):
        exp = [0] * nvars
        for x in tab.values():
            exp[x - 1] += 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + 1
    return ExactPolynomial(nvars, terms)


def schur_vector_in_variables(v: SchurVector, r: int, nvars: int | None = None) -> ExactPolynomial:
    nvars = r if nvars is None else nvars
    out = ExactPolynomial.zero(nvars)
    for lam, c in v.terms.items():
        out = out + schur_in_variables(lam, r, nvars).scale(c)
    return out


def q_binomial(top: int, bottom: int) -> list[int]:
    """Coefficient list of the Gaussian polynomial ``[top choose bottom]_q``."""
    if bottom < 0 or bottom > top:
        return [0]
    if bottom == 0 or bottom == top:
        return [1]
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    a = q_binomial(top - 1, bottom - 1)
    b = [0] * bottom + q_binomial(top - 1, bottom)
    out = [0] * max(len(a), len(b))
    for idx, c in enumerate(a):
        out[idx] += c
    for idx, c in enumerate(b):
        out[idx] += c
    return out
