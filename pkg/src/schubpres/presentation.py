"""Generating sets for ``J_v`` and ``I_w`` and their minimal generator counts.

Ideals live in one of two graded algebras, both with a distinguished basis:

* :class:`GrassmannianQuotient` -- ``Λ/I_{r,n-r}`` with Schur basis ``s_mu``,
  ``mu`` inside the ``r x (n-r)`` box, acted on by ``h_1, h_2, ...``;
* :class:`CoinvariantAlgebra` -- the coinvariant algebra of a Weyl group with
  its Schubert basis, acted on by the variables ``x_1..x_n``.

The ideal generated by homogeneous elements is closed degree by degree:
``M_d = span(G_d + sum_k m_k M_{d-k})``. The number of minimal generators
in degree ``d`` is the minimal number of generators of the abelian group
``M_d / (R_+ M)_d`` (free rank plus number of torsion invariant factors).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import symfunc as sf
from .coxgen import essential_set_general
from .lattice import Lattice
from .polyengine import ExactPolynomial, TypeA, type_a
from .symgroup import (
    Permutation,
    all_permutations,
    bigrassmannian_parameters,
    bigrassmannians,
    bruhat_leq,
    essential_set,
    make_bigrassmannian,
    parabolic_cosets,
    partition_to_grassmannian,
)

VARIANTS = ("full", "one", "two")


class GrassmannianQuotient:
    """``Λ/I_{r,n-r}``; ``closure`` picks the multiplying family ``h`` or ``e``."""

    ring = "ZZ"

    def __init__(self, r: int, n: int, closure: str = "h"):
        if not 1 <= r < n:
            raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
        if closure not in ("h", "e"):
            raise ValueError(f"unknown closure {closure!r}")
        self.r, self.n, self.k = r, n, n - r
        self.closure = closure
        self.top_degree = r * (n - r)
        self._basis = {d: list(sf.partitions_in_box(r, n - r, d)) for d in range(self.top_degree + 1)}
        self._index = {d: {lam: k for k, lam in enumerate(b)} for d, b in self._basis.items()}

    def basis(self, d: int) -> list:
        return self._basis.get(d, [])

    def index(self, d: int) -> dict:
        return self._index.get(d, {})

    def multipliers(self):
        # beyond the box width (h) or height (e) every product vanishes
        top = self.k if self.closure == "h" else self.r
        return [(k, k) for k in range(1, top + 1)]

    def multiply(self, tag, key) -> dict:
        v = sf.pieri(self.closure, tag, sf.SchurVector.schur(key), self.r, self.k)
        return v.terms

    def label(self, key) -> str:
        return sf.format_partition(key)


class CoinvariantAlgebra:
    """Coinvariant algebra of ``group`` (``TypeA`` over Z, others over Q)."""

    def __init__(self, group):
        self.group = group
        self.ring = "ZZ" if isinstance(group, TypeA) else "QQ"
        by_len: dict = {}
        for w in group.elements:
            by_len.setdefault(group.length(w), []).append(w)
        self._basis = by_len
        self._index = {d: {w: k for k, w in enumerate(b)} for d, b in by_len.items()}
        self.top_degree = max(by_len)

    def basis(self, d: int) -> list:
        return self._basis.get(d, [])

    def index(self, d: int) -> dict:
        return self._index.get(d, {})

    def multipliers(self):
        return [(1, k) for k in range(1, self.group.nvars + 1)]

    def multiply(self, tag, key) -> dict:
        return self.group.multiplication_table(tag)[key]

    def label(self, key) -> str:
        return self.group.format_element(key)


def _vector(algebra, d: int, terms: dict) -> list:
    idx = algebra.index(d)
    row = [0] * len(idx)
    for key, c in terms.items():
        if key not in idx:
            raise ValueError(f"{key} is not a basis element of degree {d}")
        row[idx[key]] += c
    return row


def _combine(algebra, d: int, coeffs, keys_terms) -> dict:
    out: dict = {}
    for c, terms in zip(coeffs, keys_terms):
        if c:
            for key, v in terms.items():
                out[key] = out.get(key, 0) + c * v
    return out


@dataclass
class GradedLattice:
    """Per-degree spans: ``ideal[d]`` is ``M_d``, ``decomposable[d]`` is ``(R_+ M)_d``."""

    algebra: object
    ideal: dict = field(default_factory=dict)
    decomposable: dict = field(default_factory=dict)

    def rank(self, d: int) -> int:
        return self.ideal[d].rank

    def ranks(self) -> dict:
        return {d: L.rank for d, L in sorted(self.ideal.items())}

    def same_span(self, other: GradedLattice) -> bool:
        return all(self.ideal[d] == other.ideal[d] for d in self.ideal)

    def equals_coordinate_span(self, keys) -> bool:
        """Whether every ``M_d`` is the span of the given basis elements of degree ``d``."""
        keys = set(keys)
        for d, L in self.ideal.items():
            idx = self.algebra.index(d)
            target = Lattice.coordinate(
                [k for key, k in idx.items() if key in keys], len(idx), self.algebra.ring
            )
            if L != target:
                return False
        return True


def _as_terms(gen):
    """Normalize a generator into ``{basis key: coeff}``."""
    if isinstance(gen, sf.SchurVector):
        return dict(gen.terms)
    if isinstance(gen, dict):
        return dict(gen)
    if isinstance(gen, tuple) and len(gen) == 2:
        # (descent r, partition) as from gen_set_Iw(..., form="schur"), or (partition, r)
        if isinstance(gen[1], tuple) and isinstance(gen[0], int):
            return {gen[1]: 1}
        if isinstance(gen[0], tuple) and isinstance(gen[1], int):
            return {gen[0]: 1}
    return {gen: 1}


def _degree_of(algebra, terms: dict) -> int:
    degs = set()
    for key in terms:
        if isinstance(algebra, GrassmannianQuotient):
            degs.add(sum(key))
        else:
            degs.add(algebra.group.length(key))
    if len(degs) != 1:
        raise ValueError("generators must be homogeneous and nonzero")
    return degs.pop()


def ideal_graded_span(gens, r: int | None = None, n: int | None = None,
                      up_to: int | None = None, algebra=None) -> GradedLattice:
    """Degree-by-degree span of the ideal generated by homogeneous ``gens``.

    Without ``algebra`` the ideal is taken in ``Λ/I_{r,n-r}``.
    """
    if algebra is None:
        algebra = GrassmannianQuotient(r, n)
    top = algebra.top_degree if up_to is None else up_to
    if top > algebra.top_degree:
        raise ValueError(f"degree budget {top} exceeds the top degree {algebra.top_degree}")
    by_degree: dict = {}
    for g in gens:
        terms = {k: c for k, c in _as_terms(g).items() if c}
        if isinstance(algebra, GrassmannianQuotient):
            terms = {k: c for k, c in terms.items() if sf.fits_box(k, algebra.r, algebra.k)}
        if not terms:
            continue
        by_degree.setdefault(_degree_of(algebra, terms), []).append(terms)

    out = GradedLattice(algebra)
    ring = algebra.ring
    mults = algebra.multipliers()
    for d in range(top + 1):
        width = len(algebra.basis(d))
        prod_rows = []
        for deg, tag in mults:
            if d - deg < 0:
                continue
            below = out.ideal[d - deg]
            keys = algebra.basis(d - deg)
            images = [algebra.multiply(tag, key) for key in keys]
            for row in below.basis:
                prod_rows.append(_vector(algebra, d, _combine(algebra, d, row, images)))
        dec = Lattice(prod_rows, width, ring)
        gen_rows = [_vector(algebra, d, t) for t in by_degree.get(d, [])]
        out.decomposable[d] = dec
        out.ideal[d] = Lattice(dec.basis + gen_rows, width, ring)
    return out


@dataclass
class GeneratorReport:
    counts_per_degree: dict
    torsion: dict
    input_size: int
    label: str = ""
    variant: str = ""

    @property
    def total(self) -> int:
        return sum(self.counts_per_degree.values())

    @property
    def degree_polynomial(self) -> list[int]:
        if not self.counts_per_degree:
            return [0]
        top = max(self.counts_per_degree)
        return [self.counts_per_degree.get(d, 0) for d in range(top + 1)]

    @property
    def degrees(self) -> list[int]:
        return [d for d, c in sorted(self.counts_per_degree.items()) for _ in range(c)]

    @property
    def minimal(self) -> bool:
        """Whether the supplied generating set had no redundancy."""
        return self.total == self.input_size

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion.values())

    def to_json(self) -> dict:
        return {
            "input": self.label,
            "variant": self.variant,
            "counts_per_degree": {str(d): c for d, c in sorted(self.counts_per_degree.items())},
            "degree_polynomial": self.degree_polynomial,
            "total": self.total,
            "minimal": self.minimal,
            "torsion": {str(d): t for d, t in sorted(self.torsion.items()) if t},
        }


def minimal_generators(gens, r: int | None = None, n: int | None = None, algebra=None,
                       label: str = "", variant: str = "") -> GeneratorReport:
    """Minimal generator counts of the ideal generated by ``gens`` (graded Nakayama)."""
    gens = list(gens)
    if algebra is None:
        algebra = GrassmannianQuotient(r, n)
    span = ideal_graded_span(gens, algebra=algebra)
    counts, torsion = {}, {}
    for d in span.ideal:
        free, tors = span.ideal[d].quotient(span.decomposable[d])
        if free + len(tors):
            counts[d] = free + len(tors)
        if tors:
            torsion[d] = tors
    return GeneratorReport(counts, torsion, len(gens), label, variant)


@dataclass(frozen=True)
class BigrassmannianData:
    r: int
    s: int
    t: int
    n: int

    @property
    def i(self) -> int:
        return self.s - self.t + 1

    @property
    def j(self) -> int:
        return self.r - self.t + 1

    @property
    def a(self) -> int:
        return min(self.n - self.r - self.i, self.r - self.j)

    @property
    def b(self) -> int:
        return min(self.i, self.j)

    @property
    def permutation(self) -> Permutation:
        return make_bigrassmannian(self.r, self.s, self.t, self.n)

    @classmethod
    def from_rectangle(cls, r: int, n: int, i: int, j: int) -> BigrassmannianData:
        """The bigrassmannian with descent ``r`` whose partition is ``i^j``."""
        t = r - j + 1
        return cls(r, i + t - 1, t, n)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("r", "s", "t", "n", "i", "j", "a", "b")}


def bigrassmannian_data(v) -> BigrassmannianData:
    if isinstance(v, BigrassmannianData):
        return v
    return BigrassmannianData(*bigrassmannian_parameters(v))


def gen_set(v, variant: str = "one") -> list[tuple[int, ...]]:
    """Shapes ``mu`` of the Schur generators of ``J_v``, sorted by (degree, lex)."""
    data = bigrassmannian_data(v)
    i, j, a, b, r, n = data.i, data.j, data.a, data.b, data.r, data.n
    low = sf.rectangle(i, j)
    if variant == "full":
        high = sf.rectangle(n - r, r)
    elif variant == "one":
        high = sf.rectangle(i + a, b) + sf.rectangle(i, j - b)
    elif variant == "two":
        high = sf.rectangle(i, j) + sf.rectangle(b, a)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return sf.interval(low, high)


def full_ideal_shapes(v) -> list[tuple[int, ...]]:
    """Basis of ``J_v`` in Schur coordinates: all ``mu`` with ``i^j ⊆ mu ⊆ (n-r)^r``."""
    return gen_set(v, "full")


def gen_set_Iw(w: Permutation, form: str = "grassmannian") -> list:
    """Generators of ``I_w``.

    ``grassmannian``: permutations ``u`` with ``u >= v`` and ``Des(u) = Des(v)``
    for some ``v`` in ``E(w)``. ``schur``: ``(r, mu)`` pairs, the concatenation
    of ``gen_set(v, "one")`` over ``E(w)``; ``(r, mu)`` stands for ``s_mu(x_1..x_r)``.
    """
    ess = sorted(essential_set(w), key=lambda v: (v.length, v.word))
    if form == "grassmannian":
        out = set()
        for u in all_permutations(w.n):
            if len(u.descents) != 1:
                continue
            if any(u.descents == v.descents and bruhat_leq(v, u) for v in ess):
                out.add(u)
        return sorted(out, key=lambda u: (u.length, u.word))
    if form == "schur":
        out = []
        for v in ess:
            (r,) = v.descents
            out.extend((r, mu) for mu in gen_set(v, "one"))
        return out
    raise ValueError(f"unknown form {form!r}")


def verify_ideal_equality(v, variant: str = "one", closure: str = "h") -> bool:
    data = bigrassmannian_data(v)
    algebra = GrassmannianQuotient(data.r, data.n, closure)
    span = ideal_graded_span(gen_set(data, variant), algebra=algebra)
    return span.equals_coordinate_span(full_ideal_shapes(data))


def expected_profile(v) -> list[int]:
    """Coefficients of ``q^{ij} [a+b choose a]_q``."""
    data = bigrassmannian_data(v)
    return [0] * (data.i * data.j) + sf.q_binomial(data.a + data.b, data.a)


def degree_genfun_check(v) -> bool:
    data = bigrassmannian_data(v)
    expect = expected_profile(data)
    size = comb(data.a + data.b, data.a)
    for variant in ("one", "two"):
        shapes = gen_set(data, variant)
        if len(shapes) != size:
            return False
        prof = [0] * (max(sum(m) for m in shapes) + 1)
        for m in shapes:
            prof[sum(m)] += 1
        if prof != expect:
            return False
    return True


def minimal_generators_Jv(v, variant: str = "one") -> GeneratorReport:
    data = bigrassmannian_data(v)
    return minimal_generators(
        gen_set(data, variant), data.r, data.n,
        label=str(data.permutation), variant=variant,
    )


def coinvariant_generators(pairs, n: int) -> list[dict]:
    """``(r, mu)`` pairs as Schubert basis vectors ``{u: 1}`` of ``S_n``."""
    return [{partition_to_grassmannian(mu, r, n): 1} for r, mu in pairs]


def minimal_generators_Iw(w: Permutation, form: str = "schur") -> GeneratorReport:
    """Minimal generator count of ``I_w`` inside the integral coinvariant algebra of ``S_n``."""
    algebra = CoinvariantAlgebra(type_a(w.n))
    raw = gen_set_Iw(w, form)
    if form == "schur":
        gens = coinvariant_generators(raw, w.n)
    else:
        gens = [{u: 1} for u in raw]
    return minimal_generators(gens, algebra=algebra, label=str(w), variant=form)


def _essential(group, w):
    if isinstance(group, TypeA):
        return essential_set(w)
    return essential_set_general(group, w)


def grassmannian_generators(group, w) -> list:
    """``{u : exists v in E(w), u >= v, Des(u) = Des(v)}`` in any backend."""
    ess = _essential(group, w)
    out = []
    for u in group.elements:
        du = group.descents(u)
        if len(du) != 1:
            continue
        if any(du == group.descents(v) and group.leq(v, u) for v in ess):
            out.append(u)
    return out


def verify_Iw_generation(group, w) -> bool:
    """Ideal generated by :func:`grassmannian_generators` equals ``span{S_u : u not <= w}``."""
    algebra = CoinvariantAlgebra(group)
    gens = [{u: 1} for u in grassmannian_generators(group, w)]
    span = ideal_graded_span(gens, algebra=algebra)
    return span.equals_coordinate_span(u for u in group.elements if not group.leq(u, w))


def proper_subsets_fail(shapes, data: BigrassmannianData) -> bool:
    """Dropping any single generator loses part of ``J_v``."""
    algebra = GrassmannianQuotient(data.r, data.n)
    target = full_ideal_shapes(data)
    for k in range(len(shapes)):
        rest = shapes[:k] + shapes[k + 1:]
        if ideal_graded_span(rest, algebra=algebra).equals_coordinate_span(target):
            return False
    return True


def conjecture_cases(r_max: int, k_max: int):
    """Every bigrassmannian with descent ``r <= r_max`` and ``n - r <= k_max``."""
    for r in range(1, r_max + 1):
        for k in range(1, k_max + 1):
            for j in range(1, r + 1):
                for i in range(1, k + 1):
                    yield BigrassmannianData.from_rectangle(r, r + k, i, j)


def check_minimality(data: BigrassmannianData, variant: str, drop_one: bool = True) -> dict:
    shapes = gen_set(data, variant)
    rep = minimal_generators(shapes, data.r, data.n, label=str(data.permutation), variant=variant)
    expect = expected_profile(data)
    got = rep.degree_polynomial
    got = got + [0] * (len(expect) - len(got))
    generates = verify_ideal_equality(data, variant)
    ok = (
        generates
        and rep.total == comb(data.a + data.b, data.a)
        and got == expect
    )
    rec = {
        "v": str(data.permutation),
        **data.as_dict(),
        "variant": variant,
        "generates": generates,
        "size": len(shapes),
        "minimal_count": rep.total,
        "degree_polynomial": rep.degree_polynomial,
        "torsion": {str(d): t for d, t in rep.torsion.items()},
    }
    if drop_one:
        rec["proper_subsets_fail"] = proper_subsets_fail(shapes, data)
        ok = ok and rec["proper_subsets_fail"]
    rec["pass"] = ok
    return rec


def verify_minimality_conjecture(r_max: int, k_max: int, drop_one: bool = True, progress=None) -> dict:
    records = []
    for data in conjecture_cases(r_max, k_max):
        for variant in ("one", "two"):
            records.append(check_minimality(data, variant, drop_one))
            if progress is not None:
                progress(records[-1])
    return {
        "r_max": r_max,
        "k_max": k_max,
        "cases": len(records),
        "failures": [rec for rec in records if not rec["pass"]],
        "torsion_seen": any(rec["torsion"] for rec in records),
        "records": records,
        "pass": all(rec["pass"] for rec in records),
    }


def verify_inclusion_case(v) -> bool:
    data = bigrassmannian_data(v)
    if data.t != data.s:
        raise ValueError(f"{data.permutation} is not an inclusion case (t={data.t}, s={data.s})")
    r, s = data.r, data.s
    expect = [(1,) * m for m in range(r - s + 1, data.a + r - s + 2)]
    return sorted(gen_set(data, "two"), key=sf.sort_key) == sorted(expect, key=sf.sort_key)


def verify_parabolic(w: Permutation, J, check_ideal: bool = True) -> dict:
    """Checks for the partial flag reduction around ``w_max`` of ``w W_J``."""
    J = set(J)
    cos = parabolic_cosets(w, J)
    wmax, wmin = cos["w_max"], cos["w_min"]
    ess = essential_set(wmax)
    ess_in_WJ = all(not (v.descents & J) for v in ess)
    gens = grassmannian_generators(type_a(w.n), wmax)
    gens_grass = all(len(u.descents) == 1 and not (u.descents & J) for u in gens)
    group = type_a(w.n)
    invariant = all(
        group.schubert(u).swap(s) == group.schubert(u) for u in gens for s in J
    )
    same_order = all(
        bruhat_leq(u, wmax) == bruhat_leq(u, wmin)
        for u in all_permutations(w.n) if not (u.descents & J)
    )
    report = {
        "w": str(w),
        "J": sorted(J),
        "w_min": str(wmin),
        "w_max": str(wmax),
        "essential_set": sorted(str(v) for v in ess),
        "essential_in_WJ": ess_in_WJ,
        "generators_grassmannian_outside_J": gens_grass,
        "generators_WJ_invariant": invariant,
        "min_max_order_agree": same_order,
    }
    checks = [ess_in_WJ, gens_grass, invariant, same_order]
    if check_ideal:
        report["generators_generate"] = verify_Iw_generation(group, wmax)
        checks.append(report["generators_generate"])
    report["pass"] = all(checks)
    return report


def lower_bound_case(m: int) -> BigrassmannianData:
    """``n = 4m``, ``r = 2m``, ``i = j = m`` (so ``a = b = m``)."""
    return BigrassmannianData.from_rectangle(2 * m, 4 * m, m, m)


def omega_pairs(n: int):
    """``(v, v')`` with ``v'`` the bigrassmannian of descent ``n-r`` and rectangle ``j^i``."""
    for v in bigrassmannians(n):
        d = bigrassmannian_data(v)
        yield d, BigrassmannianData.from_rectangle(n - d.r, n, d.j, d.i)


def schur_generator_polynomials(w: Permutation) -> list[ExactPolynomial]:
    """The ``schur`` form of :func:`gen_set_Iw` as explicit polynomials ``s_mu(x_1..x_r)``."""
    return [sf.schur_in_variables(mu, r, w.n) for r, mu in gen_set_Iw(w, "schur")]


__all__ = [
    "BigrassmannianData", "CoinvariantAlgebra", "GeneratorReport", "GradedLattice",
    "GrassmannianQuotient", "bigrassmannian_data", "check_minimality", "conjecture_cases",
    "degree_genfun_check", "expected_profile", "gen_set", "gen_set_Iw", "ideal_graded_span",
    "lower_bound_case", "minimal_generators", "minimal_generators_Iw", "minimal_generators_Jv",
    "omega_pairs", "grassmannian_generators", "verify_Iw_generation", "verify_ideal_equality",
    "verify_inclusion_case", "verify_minimality_conjecture", "verify_parabolic",
]
