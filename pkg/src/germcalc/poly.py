"""Sparse multivariate polynomials with exact coefficients.

Variables are ``x_t`` for positive integers ``t``. A monomial is a tuple of
``(index, exponent)`` pairs sorted by index with no zero exponents; a
polynomial maps monomials to nonzero coefficients of a single field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import Field, FieldMismatch, GaussianRational, coerce, field_of, one, zero

Monomial = tuple  # tuple[tuple[int, int], ...]

ONE_MONOMIAL: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def grevlex_key(m: Monomial):
    """Sort key realising graded reverse lex with x_1 > x_2 > ...

    Larger key means larger monomial.
    """
    return (mono_degree(m), tuple((-v, -e) for v, e in reversed(m)))


def _check_index(t: int) -> int:
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise ValueError(f"variable index must be a positive integer, got {t!r}")
    return t


class Polynomial:
    """Immutable sparse polynomial over Q or Q(i)."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, field: Field = Field.REAL):
        field = Field.parse(field)
        clean = {}
        if terms:
            for m, c in terms.items():
                c = coerce(c, field)
                if c:
                    for v, e in m:
                        _check_index(v)
                        if e <= 0:
                            raise ValueError(f"bad exponent {e} in monomial {m}")
                    clean[m] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, terms: dict, field: Field) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        object.__setattr__(p, "field", field)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def constant(cls, c, field: Field = Field.REAL) -> "Polynomial":
        return cls({ONE_MONOMIAL: c}, field)

    @classmethod
    def var(cls, t: int, field: Field = Field.REAL) -> "Polynomial":
        return cls({((_check_index(t), 1),): 1}, field)

    @classmethod
    def zero(cls, field: Field = Field.REAL) -> "Polynomial":
        return cls._raw({}, Field.parse(field))

    @classmethod
    def one(cls, field: Field = Field.REAL) -> "Polynomial":
        return cls.constant(1, field)

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == ONE_MONOMIAL for m in self.terms)

    def constant_term(self):
        return self.terms.get(ONE_MONOMIAL, zero(self.field))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def support(self) -> frozenset:
        return frozenset(v for m in self.terms for v, _ in m)

    def sorted_terms(self) -> list:
        """Terms in decreasing grevlex order."""
        return sorted(self.terms.items(), key=lambda mc: grevlex_key(mc[0]), reverse=True)

    def to_field(self, field: Field) -> "Polynomial":
        field = Field.parse(field)
        if field is self.field:
            return self
        return Polynomial(self.terms, field)

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.field is not self.field:
                raise FieldMismatch(f"cannot combine {self.field.value} and {other.field.value} polynomials")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            if isinstance(other, GaussianRational) and self.field is Field.REAL and other.im != 0:
                raise FieldMismatch("complex scalar with a real polynomial")
            return Polynomial.constant(other, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m)
                out[m] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._raw({m: c for m, c in out.items() if c}, self.field)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = coerce(c, self.field)
        if not c:
            return Polynomial.zero(self.field)
        return Polynomial._raw({m: c * v for m, v in self.terms.items()}, self.field)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Polynomial.one(self.field), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field is other.field and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            try:
                return self == Polynomial.constant(other, self.field)
            except FieldMismatch:
                return False
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        from .parser import print_canonical

        return f"Polynomial({print_canonical(self)!r}, {self.field.value})"

    def __str__(self):
        from .parser import print_canonical

        return print_canonical(self)

    def rename(self, mapping: Mapping[int, int]) -> "Polynomial":
        """Substitute variable x_v -> x_mapping[v] (unmapped variables kept)."""
        out: dict = {}
        for m, c in self.terms.items():
            nm = tuple(sorted(_merge_pairs((mapping.get(v, v), e) for v, e in m)))
            out[nm] = out.get(nm, zero(self.field)) + c
        return Polynomial._raw({m: c for m, c in out.items() if c}, self.field)

    def substitute(self, values: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace x_v by the polynomial values[v]."""
        result = Polynomial.zero(self.field)
        for m, c in self.terms.items():
            term = Polynomial.constant(c, self.field)
            for v, e in m:
                term = term * (values[v] ** e if v in values else Polynomial.var(v, self.field) ** e)
            result = result + term
        return result


def _merge_pairs(pairs: Iterable[tuple[int, int]]) -> list:
    acc: dict = {}
    for v, e in pairs:
        acc[v] = acc.get(v, 0) + e
    return list(acc.items())


def var(t: int, field: Field = Field.REAL) -> Polynomial:
    return Polynomial.var(t, field)


def const(c, field: Field = Field.REAL) -> Polynomial:
    return Polynomial.constant(c, field)


def support(p: Polynomial) -> frozenset:
    return p.support()


def support_of(polys: Iterable[Polynomial]) -> frozenset:
    out: set = set()
    for p in polys:
        out |= p.support()
    return frozenset(out)


class BasePoint:
    """A point of K^T with finitely many nonzero coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, coords: Mapping[int, object] | None = None, field: Field = Field.REAL):
        field = Field.parse(field)
        clean = {}
        for t, c in (coords or {}).items():
            _check_index(t)
            c = coerce(c, field)
            if c:
                clean[t] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("BasePoint is immutable")

    @classmethod
    def origin(cls, field: Field = Field.REAL) -> "BasePoint":
        return cls({}, field)

    def __getitem__(self, t: int):
        return self.coords.get(t, zero(self.field))

    def coordinate_germ(self, t: int) -> Polynomial:
        """The polynomial x_t - x0_t."""
        return Polynomial.var(t, self.field) - Polynomial.constant(self[t], self.field)

    def to_field(self, field: Field) -> "BasePoint":
        return BasePoint(self.coords, field)

    def same_point(self, other: "BasePoint") -> bool:
        return self.coords == other.coords

    def __eq__(self, other):
        return isinstance(other, BasePoint) and self.field is other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, tuple(self.coords.items())))

    def __repr__(self):
        return f"BasePoint({self.coords!r}, {self.field.value})"


def evaluate(p: Polynomial, x0: BasePoint):
    """Exact value of ``p`` at ``x0``; only coordinates in the support are read."""
    if p.field is not x0.field:
        raise FieldMismatch("polynomial and base point over different fields")
    total = zero(p.field)
    for m, c in p.terms.items():
        for v, e in m:
            c = c * x0[v] ** e
            if not c:
                break
        total = total + c
    return total


# -- univariate polynomials in the curve parameter s -------------------------

UniPoly = tuple  # dense coefficients (c0, c1, ...) of Fractions, trailing zeros trimmed


def uni_trim(coeffs) -> UniPoly:
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def uni_add(a: UniPoly, b: UniPoly) -> UniPoly:
    n = max(len(a), len(b))
    return uni_trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)])


def uni_mul(a: UniPoly, b: UniPoly) -> UniPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return uni_trim(out)


def uni_pow(a: UniPoly, n: int) -> UniPoly:
    result = (Fraction(1),)
    for _ in range(n):
        result = uni_mul(result, a)
    return result


def uni_eval(a: UniPoly, s) -> Fraction:
    total = Fraction(0)
    for c in reversed(a):
        total = total * s + c
    return total


class RationalCurve:
    """A polynomial curve s -> z(s) in R^T through a base point at s = 0.

    ``components`` maps a variable index to its coefficient tuple in s;
    unlisted coordinates stay at the base-point value.
    """

    __slots__ = ("base", "components")

    def __init__(self, components: Mapping[int, Iterable] | None = None, base: BasePoint | None = None):
        base = base if base is not None else BasePoint.origin(Field.REAL)
        if base.field is not Field.REAL:
            raise FieldMismatch("curves live in the real field")
        comps = {}
        for t, coeffs in (components or {}).items():
            _check_index(t)
            c = uni_trim(coeffs)
            if uni_eval(c, 0) != base[t]:
                raise ValueError(f"curve component {t} does not pass through the base point at s = 0")
            comps[t] = c
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "components", dict(sorted(comps.items())))

    def __setattr__(self, name, value):
        raise AttributeError("RationalCurve is immutable")

    def component(self, t: int) -> UniPoly:
        if t in self.components:
            return self.components[t]
        return uni_trim([self.base[t]])

    def __eq__(self, other):
        return isinstance(other, RationalCurve) and self.base == other.base and self.components == other.components

    def __hash__(self):
        return hash((self.base, tuple(self.components.items())))

    def __repr__(self):
        return f"RationalCurve({ {t: format_univariate(c) for t, c in self.components.items()} })"


def compose_curve(p: Polynomial, z: RationalCurve) -> UniPoly:
    """Exact coefficients of s -> p(z(s))."""
    if p.field is not Field.REAL:
        raise FieldMismatch("curve composition is only defined for real polynomials")
    total: UniPoly = ()
    cache: dict = {}
    for m, c in p.terms.items():
        term: UniPoly = (c,)
        for v, e in m:
            key = (v, e)
            if key not in cache:
                cache[key] = uni_pow(z.component(v), e)
            term = uni_mul(term, cache[key])
            if not term:
                break
        total = uni_add(total, term)
    return total


def format_univariate(a: UniPoly, name: str = "s") -> str:
    if not a:
        return "0"
    from .parser import print_canonical

    p = Polynomial({((1, k),) if k else (): c for k, c in enumerate(a)}, Field.REAL)
    return print_canonical(p, names={1: name})
