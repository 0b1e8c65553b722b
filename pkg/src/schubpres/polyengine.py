"""Exact sparse polynomials, divided differences and Schubert polynomials.

Two Coxeter backends share one protocol (see :class:`TypeA` and
:class:`schubpres.coxgen.CoxeterGroup`): enumerate elements by length,
multiply by simple reflections on the left, apply divided differences, and
produce Schubert polynomials. Type A runs over the integers with the
Lascoux-Schützenberger polynomials; other types use the rational polynomials
``S_w = d_{w^-1 w0} (prod of positive roots)/|W|``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .symgroup import Permutation, all_permutations, bruhat_leq, parabolic_cosets


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _exact_div(c, a):
    if isinstance(c, int) and isinstance(a, int) and c % a == 0:
        return c // a
    return _normalize(Fraction(c) / a)


class ExactPolynomial:
    """Polynomial in ``x_1..x_nvars`` with int or Fraction coefficients.

    Stored as ``{exponent tuple: coefficient}``; zero coefficients are never kept.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            if c:
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} entries")
                clean[tuple(exp)] = _normalize(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> ExactPolynomial:
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> ExactPolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> ExactPolynomial:
        """The variable ``x_i`` (1-based)."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp, coeff=1) -> ExactPolynomial:
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def linear(cls, coeffs) -> ExactPolynomial:
        """``sum_i coeffs[i] * x_{i+1}``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * n
                exp[i] = 1
                terms[tuple(exp)] = c
        return cls(n, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPolynomial.constant(other, self.nvars)
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return ExactPolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> ExactPolynomial:
        if not c:
            return ExactPolynomial.zero(self.nvars)
        return ExactPolynomial(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ExactPolynomial(self.nvars, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = ExactPolynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_components(self) -> dict[int, ExactPolynomial]:
        parts: dict = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: ExactPolynomial(self.nvars, t) for d, t in sorted(parts.items())}

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def coefficients(self):
        return self.terms.values()

    def signed_permute(self, w) -> ExactPolynomial:
        """Substitute ``x_i -> sign(w_i) x_{|w_i|}`` (action of a signed permutation)."""
        n = self.nvars
        out = {}
        for e, c in self.terms.items():
            new = [0] * n
            sign = 1
            for i, k in enumerate(e):
                if k:
                    img = w[i]
                    new[abs(img) - 1] = k
                    if img < 0 and k % 2:
                        sign = -sign
            out[tuple(new)] = sign * c
        return ExactPolynomial(n, out)

    def swap(self, i: int) -> ExactPolynomial:
        """Exchange ``x_i`` and ``x_{i+1}``."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return ExactPolynomial(self.nvars, out)

    def divide_by_linear(self, alpha) -> ExactPolynomial:
        """Exact quotient by the linear form ``sum alpha[i] x_{i+1}``.

        Long division along one pivot variable; a nonzero remainder raises.
        """
        p = max(i for i, a in enumerate(alpha) if a)
        ap = alpha[p]
        others = [(k, a) for k, a in enumerate(alpha) if a and k != p]
        levels: dict = {}
        for e, c in self.terms.items():
            levels.setdefault(e[p], {})[e] = c
        quot: dict = {}
        for d in range(max(levels, default=0), 0, -1):
            for e, c in levels.get(d, {}).items():
                if not c:
                    continue
                q = list(e)
                q[p] -= 1
                q = tuple(q)
                qc = _exact_div(c, ap)
                quot[q] = quot.get(q, 0) + qc
                lower = levels.setdefault(d - 1, {})
                for k, a in others:
                    m = list(q)
                    m[k] += 1
                    m = tuple(m)
                    lower[m] = lower.get(m, 0) - qc * a
        if any(levels.get(0, {}).values()):
            raise AssertionError(f"inexact division of {self} by linear form {tuple(alpha)}")
        return ExactPolynomial(self.nvars, quot)

    def sort_key(self, e):
        return (-sum(e), tuple(-x for x in e))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=self.sort_key):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"ExactPolynomial({self.nvars}, {str(self)!r})"


def divided_difference_A(f: ExactPolynomial, i: int) -> ExactPolynomial:
    """``(f - s_i f)/(x_i - x_{i+1})`` monomial by monomial.

    ``(x_i^p x_{i+1}^q - x_i^q x_{i+1}^p)/(x_i - x_{i+1})`` is a geometric sum.
    """
    out: dict = {}
    a, b = i - 1, i
    for e, c in f.terms.items():
        p, q = e[a], e[b]
        if p == q:
            continue
        sign = 1
        if p < q:
            p, q, sign = q, p, -1
        base = list(e)
        for k in range(p - q):
            base[a], base[b] = p - 1 - k, q + k
            key = tuple(base)
            out[key] = out.get(key, 0) + sign * c
    return ExactPolynomial(f.nvars, out)


class TypeA:
    """Symmetric group ``S_n`` with Lascoux-Schützenberger Schubert polynomials over Z."""

    type_label = "A"

    def __init__(self, n: int):
        self.n = n
        self.nvars = n
        self.simple = tuple(range(1, n))
        self._schubert: dict = {}
        self._mult: dict = {}

    def __eq__(self, other):
        return isinstance(other, TypeA) and other.n == self.n

    def __hash__(self):
        return hash(("A", self.n))

    @cached_property
    def elements(self) -> list[Permutation]:
        return sorted(all_permutations(self.n), key=lambda w: (w.length, w.word))

    @cached_property
    def identity(self) -> Permutation:
        return Permutation.identity(self.n)

    @cached_property
    def w0(self) -> Permutation:
        return Permutation.longest(self.n)

    def length(self, w: Permutation) -> int:
        return w.length

    def descents(self, w: Permutation) -> frozenset:
        return w.descents

    def left_ascent(self, s: int, w: Permutation) -> bool:
        inv = w.inverse
        return inv[s] < inv[s + 1]

    def right_ascent(self, w: Permutation, s: int) -> bool:
        return w[s] < w[s + 1]

    def left_mul(self, s: int, w: Permutation) -> Permutation:
        return w.simple_times(s)

    def right_mul(self, w: Permutation, s: int) -> Permutation:
        return w.times_simple(s)

    def reduced_word(self, w: Permutation) -> tuple:
        return w.reduced_word()

    def leq(self, u: Permutation, w: Permutation) -> bool:
        return bruhat_leq(u, w)

    def divided_difference(self, f: ExactPolynomial, s: int) -> ExactPolynomial:
        return divided_difference_A(f, s)

    def act(self, s: int, f: ExactPolynomial) -> ExactPolynomial:
        return f.swap(s)

    def top_polynomial(self) -> ExactPolynomial:
        n = self.n
        return ExactPolynomial.monomial(tuple(range(n - 1, -1, -1)))

    def schubert(self, w: Permutation) -> ExactPolynomial:
        return _schubert_from_top(self, w)

    def format_element(self, w: Permutation) -> str:
        return str(w)

    def multiplication_table(self, k: int) -> dict:
        return _multiplication_table(self, k)


def _schubert_from_top(ctx, w):
    """``S_w = d_s S_{ws}`` for any right ascent ``s`` of ``w``, down from ``S_{w0}``."""
    cache = ctx._schubert
    if w in cache:
        return cache[w]
    chain = []
    cur = w
    while cur not in cache and cur != ctx.w0:
        s = next(s for s in ctx.simple if ctx.right_ascent(cur, s))
        chain.append((cur, s))
        cur = ctx.right_mul(cur, s)
    if cur not in cache:
        cache[cur] = ctx.top_polynomial()
    poly = cache[cur]
    for elem, s in reversed(chain):
        poly = ctx.divided_difference(poly, s)
        cache[elem] = poly
    return cache[w]


def divided_difference(f: ExactPolynomial, s, group=None) -> ExactPolynomial:
    """``d_s f``; ``s`` is a type-A index unless ``group`` supplies another backend."""
    if group is None:
        return divided_difference_A(f, s)
    return group.divided_difference(f, s)


def apply_word(f: ExactPolynomial, word, group=None) -> ExactPolynomial:
    """``d_{i_1} ... d_{i_l} f`` (the last letter acts first)."""
    for s in reversed(tuple(word)):
        f = divided_difference(f, s, group)
        if not f:
            break
    return f


def schubert_polynomial(w: Permutation) -> ExactPolynomial:
    return _type_a(w.n).schubert(w)


def hiller_schubert(group, w) -> ExactPolynomial:
    return group.schubert(w)


_TYPE_A_CACHE: dict = {}


def _type_a(n: int) -> TypeA:
    if n not in _TYPE_A_CACHE:
        _TYPE_A_CACHE[n] = TypeA(n)
    return _TYPE_A_CACHE[n]


def type_a(n: int) -> TypeA:
    """Shared :class:`TypeA` backend for ``S_n`` (caches Schubert polynomials)."""
    return _type_a(n)


def _context_for(f_or_n, group):
    if group is not None:
        return group
    return _type_a(f_or_n)


def all_derivatives(f: ExactPolynomial, group, max_len: int) -> dict:
    """``{w: d_w f}`` for every ``w`` with ``l(w) <= max_len`` and nonzero result."""
    out = {group.identity: f}
    frontier = {group.identity: f}
    for _ in range(max_len):
        nxt: dict = {}
        for w, g in frontier.items():
            for s in group.simple:
                if not group.left_ascent(s, w):
                    continue
                sw = group.left_mul(s, w)
                if sw in nxt:
                    continue
                h = group.divided_difference(g, s)
                if h:
                    nxt[sw] = h
        out.update(nxt)
        frontier = nxt
        if not frontier:
            break
    return out


def coinvariant_expand(f: ExactPolynomial, group=None) -> dict:
    """Coefficients ``c_w`` with ``f = sum c_w S_w`` modulo positive-degree invariants.

    ``c_w`` is the constant ``d_w f_d`` for the degree ``d = l(w)`` component.
    """
    group = _context_for(f.nvars, group)
    out = {}
    for d, comp in f.homogeneous_components().items():
        derivs = all_derivatives(comp, group, d)
        for w, g in derivs.items():
            if group.length(w) == d:
                if g.degree > 0:
                    raise AssertionError(f"d_w f is not constant for l(w) = deg f = {d}")
                c = g.constant_term()
                if c:
                    out[w] = c
    return out


def schubert_combination(vec: dict, group=None, nvars: int | None = None) -> ExactPolynomial:
    """``sum_w vec[w] S_w``."""
    if group is None:
        if not vec:
            return ExactPolynomial.zero(nvars or 1)
        group = _type_a(next(iter(vec)).n)
    out = ExactPolynomial.zero(group.nvars)
    for w, c in vec.items():
        out = out + group.schubert(w).scale(c)
    return out


def _multiplication_table(group, k: int) -> dict:
    """``{u: expansion of x_k * S_u}`` over the whole basis."""
    key = ("x", k)
    if key not in group._mult:
        xk = ExactPolynomial.var(k, group.nvars)
        group._mult[key] = {
            u: coinvariant_expand(xk * group.schubert(u), group) for u in group.elements
        }
    return group._mult[key]


def structure_constant(u, v, w, group=None):
    """``c_{u,v}^w``: constant term of ``d_w(S_u S_v)``; 0 unless lengths add."""
    if group is None:
        group = _type_a(u.n)
    if group.length(w) != group.length(u) + group.length(v):
        return 0
    prod = group.schubert(u) * group.schubert(v)
    return apply_word(prod, group.reduced_word(w), group).constant_term()


def verify_sparsity(u: Permutation, x: Permutation, x2: Permutation, J) -> bool:
    """``c_{u,x}^{u x2} = delta_{x, x2}`` for ``u`` in ``W^J`` and same-length ``x, x2`` in ``W_J``."""
    J = set(J)
    if u.descents & J:
        raise ValueError(f"{u} is not a minimal coset representative for J={sorted(J)}")
    e = Permutation.identity(u.n)
    for y in (x, x2):
        if parabolic_cosets(y, J)["u"] != e:
            raise ValueError(f"{y} is not in W_J for J={sorted(J)}")
    if x.length != x2.length:
        raise ValueError("x and x' must have the same length")
    c = structure_constant(u, x, u * x2)
    return c == (1 if x == x2 else 0)


def vector_to_json(vec: dict, group=None) -> dict:
    fmt = group.format_element if group is not None else str
    return {fmt(w): (c if isinstance(c, int) else str(c)) for w, c in sorted(vec.items(), key=lambda kv: fmt(kv[0]))}
