"""Germs of finitely presented polynomial functions at a base point.

A :class:`Germ` carries a polynomial representative, the base point and an
explicit indexing set (a finite set of coordinates the function depends on).
Vanishing questions are local: they concern the germ of the zero set at the
base point, not the global variety.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .groebner import (
    BudgetExhausted,
    eliminate,
    fresh_variable,
    groebner_basis,
    ideal_quotient,
    is_member,
    normal_form,
)
from .parser import GeneratorTemplate, instantiate
from .poly import BasePoint, Polynomial, evaluate, support_of
from .scalars import Field, FieldMismatch
from .verdict import Budget, Outcome, Verdict
from .witness import base_json, text, texts


class NotASuperset(ValueError):
    pass


class NotIndexedBy(ValueError):
    def __init__(self, missing):
        self.missing = frozenset(missing)
        super().__init__(f"germ depends on variables {sorted(self.missing)} outside the indexing set")


class BaseMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Germ:
    poly: Polynomial
    base: BasePoint
    indexing_set: frozenset = None

    def __post_init__(self):
        if self.poly.field is not self.base.field:
            raise FieldMismatch("germ polynomial and base point over different fields")
        s = self.indexing_set
        s = self.poly.support() if s is None else frozenset(s)
        missing = self.poly.support() - s
        if missing:
            raise NotIndexedBy(missing)
        object.__setattr__(self, "indexing_set", s)

    @property
    def field(self) -> Field:
        return self.poly.field

    def value(self):
        return evaluate(self.poly, self.base)

    def __str__(self):
        return text(self.poly)


@dataclass(frozen=True)
class GermIdeal:
    base: BasePoint
    generators: tuple = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if g.base != self.base:
                raise BaseMismatch("all generators must share the ideal's base point")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, polys: Iterable[Polynomial], base: BasePoint) -> "GermIdeal":
        return cls(base, tuple(Germ(p, base) for p in polys))

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def polys(self) -> list:
        return [g.poly for g in self.generators]

    @property
    def indexing_set(self) -> frozenset:
        out = frozenset()
        for g in self.generators:
            out |= g.indexing_set
        return out

    def with_generators(self, extra: Iterable[Polynomial]) -> "GermIdeal":
        return GermIdeal(self.base, self.generators + tuple(Germ(p, self.base) for p in extra))


def as_germ(obj, base: BasePoint) -> Germ:
    if isinstance(obj, Germ):
        return obj
    return Germ(obj, base)


# -- extension and restriction ---------------------------------------------------


def extend_indexing(g: Germ, S2: Iterable[int]) -> Germ:
    S2 = frozenset(S2)
    if not g.indexing_set <= S2:
        raise NotASuperset(f"{sorted(S2)} does not contain {sorted(g.indexing_set)}")
    return Germ(g.poly, g.base, S2)


def restrict(g: Germ, S: Iterable[int]) -> Germ:
    """Re-index ``g`` by ``S``; defined exactly when the support lies in ``S``."""
    S = frozenset(S)
    missing = g.poly.support() - S
    if missing:
        raise NotIndexedBy(missing)
    return Germ(g.poly, g.base, S)


def is_invertible(g: Germ) -> bool:
    return g.value() != 0


def in_maximal_ideal(g: Germ) -> bool:
    return g.value() == 0


# -- generator streams ---------------------------------------------------------


class GeneratorStream:
    """An enumerable presentation g_0, g_1, ... of an ideal at a base point.

    ``Finite`` streams wrap a :class:`GermIdeal`. ``Templated`` streams
    enumerate ``(k, template)`` pairs in order of k, then template position.
    With ``centered`` set, template polynomials are read in coordinates
    centred at the base point (x_t replaced by x_t - x0_t).
    """

    def __init__(self, base: BasePoint, finite: Sequence[Polynomial] | None = None,
                 templates: Sequence[GeneratorTemplate] | None = None, centered: bool = False):
        if (finite is None) == (templates is None):
            raise ValueError("a stream is either finite or templated")
        self.base = base
        self.templates = tuple(templates) if templates is not None else None
        self.centered = centered
        self._finite = tuple(finite) if finite is not None else None
        if self._finite is not None:
            for p in self._finite:
                if p.field is not base.field:
                    raise FieldMismatch("stream generator over a different field")
        self._cache: list = []
        self._lock = threading.Lock()

    @classmethod
    def finite(cls, ideal: GermIdeal) -> "GeneratorStream":
        return cls(ideal.base, finite=ideal.polys)

    @classmethod
    def templated(cls, templates: Sequence[GeneratorTemplate], base: BasePoint, centered: bool = False) -> "GeneratorStream":
        if not templates:
            raise ValueError("a templated stream needs at least one template")
        return cls(base, templates=templates, centered=centered)

    @classmethod
    def coordinates(cls, base: BasePoint) -> "GeneratorStream":
        """The generators x_t - x0_t of the maximal ideal, t = 1, 2, ..."""
        from .parser import parse_template

        return cls(base, templates=[parse_template("x_{k+1}")], centered=True)

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def is_finite(self) -> bool:
        return self._finite is not None

    def __len__(self):
        if self._finite is None:
            raise TypeError("templated streams are infinite")
        return len(self._finite)

    def _make(self, j: int) -> Polynomial:
        k, ti = divmod(j, len(self.templates))
        p = instantiate(self.templates[ti], k, self.field)
        if self.centered:
            shift = {t: Polynomial.var(t, self.field) - self.base[t] for t in p.support() if self.base[t]}
            if shift:
                p = p.substitute(shift)
        return p

    def element(self, j: int) -> Polynomial:
        if self._finite is not None:
            return self._finite[j]
        # write-once memo: concurrent callers may compute the same entry twice,
        # but entries are deterministic so the stored values agree
        if j < len(self._cache):
            return self._cache[j]
        values = [self._make(i) for i in range(len(self._cache), j + 1)]
        with self._lock:
            if len(self._cache) < j + 1:
                self._cache.extend(values[len(self._cache) - (j + 1 - len(values)):])
        return self._cache[j]

    def prefix(self, n: int) -> list:
        return [self.element(j) for j in range(n)]

    def window(self, n: int) -> "GeneratorStream":
        """The finite stream of the first ``n`` generators."""
        if self._finite is not None:
            return GeneratorStream(self.base, finite=self._finite[:n])
        return GeneratorStream(self.base, finite=self.prefix(n))

    def to_json(self) -> dict:
        out = {"base": base_json(self.base), "field": self.field.value}
        if self._finite is not None:
            out["kind"] = "finite"
            out["generators"] = texts(self._finite)
        else:
            out["kind"] = "templated"
            out["templates"] = [t.text for t in self.templates]
            out["centered"] = self.centered
        return out


# -- complex local radical ---------------------------------------------------------


_radical_cache: dict = {}


def _cache_key(polys, f, base):
    return (base, tuple(sorted(text(p) for p in polys)), text(f))


def _exponent_for(e: Polynomial, f: Polynomial, gens: list, budget: Budget, limit: int = 256):
    """Smallest n with e * f^n in (gens)."""
    if not gens:
        return 0 if e.is_zero() else None
    G = groebner_basis(gens, budget.step_budget(), _order_for(gens, [e, f]))
    power = e
    for n in range(limit + 1):
        if normal_form(power, G).is_zero():
            return n
        power = power * f
    return None


def _order_for(gens, extra):
    from .groebner import default_order

    return default_order(list(gens) + list(extra))


def _radical_witness(kind: str, I_polys, f, base, **extra) -> dict:
    w = {
        "kind": kind,
        "field": f.field.value,
        "base": base_json(base),
        "generators": texts(I_polys),
        "f": text(f),
    }
    w.update(extra)
    return w


def local_radical_member_complex(I: GermIdeal, f, budget: Budget | None = None) -> Verdict:
    """Decide whether ``f`` vanishes on the complex zero germ of ``I`` at the base point.

    Adjoins u with 1 - u*f, eliminates u, and evaluates the reduced
    elimination basis at the base point.
    """
    budget = budget or Budget()
    f = as_germ(f, I.base)
    if f.base != I.base:
        raise BaseMismatch("germ and ideal at different base points")
    polys = [p for p in I.polys if not p.is_zero()]
    fp = f.poly
    key = _cache_key(polys, fp, I.base)
    hit = _radical_cache.get(key)
    if hit is not None:
        return hit
    start = budget.snapshot()
    u = fresh_variable(polys + [fp])
    uv = Polynomial.var(u, fp.field)
    keep = sorted(support_of(polys + [fp]))
    try:
        elim = eliminate(polys + [1 - uv * fp], {u}, budget.step_budget(), keep=keep)
        nonvanishing = [e for e in elim if evaluate(e, I.base) != 0]
        if nonvanishing:
            e = min(nonvanishing, key=lambda p: (p.degree(), len(p.terms), text(p)))
            n = _exponent_for(e, fp, polys, budget)
            if n is None:
                return Verdict.unknown("exponent search exhausted", _spent(budget, start))
            verdict = Verdict(
                Outcome.PROVED,
                _radical_witness("local_radical", polys, fp, I.base, multiplier=text(e), exponent=n),
                _spent(budget, start),
            )
        else:
            verdict = Verdict(
                Outcome.REFUTED,
                _radical_witness("local_radical", polys, fp, I.base, elimination_basis=texts(elim)),
                _spent(budget, start),
            )
    except BudgetExhausted:
        return Verdict.unknown("gb budget exhausted", _spent(budget, start))
    _radical_cache.setdefault(key, verdict)
    return verdict


def _spent(budget: Budget, start: dict) -> dict:
    now = budget.snapshot()
    return {k: now.get(k, 0) - start.get(k, 0) for k in now}


def local_radical_by_quotients(I: GermIdeal, f, budget: Budget | None = None, max_steps: int = 64) -> Verdict:
    """Second, independent decision of local radical membership.

    Walks the chain I : f, I : f^2, ... until some quotient has a generator
    that does not vanish at the base point (membership) or the chain
    stabilises with every generator vanishing there (non-membership).
    """
    budget = budget or Budget()
    f = as_germ(f, I.base)
    fp = f.poly
    polys = [p for p in I.polys if not p.is_zero()]
    start = budget.snapshot()
    if fp.is_zero():
        return Verdict(Outcome.PROVED, _radical_witness("local_radical", polys, fp, I.base, multiplier="1", exponent=1),
                       _spent(budget, start))
    current = polys
    previous_basis = None
    try:
        for n in range(0, max_steps + 1):
            if n > 0:
                current = ideal_quotient(current, fp, budget.step_budget())
            basis = groebner_basis(current, budget.step_budget(), _order_for(current, [fp])) if current else None
            gens_now = list(basis.generators) if basis is not None else []
            nonvanishing = [g for g in gens_now if evaluate(g, I.base) != 0]
            if nonvanishing:
                e = min(nonvanishing, key=lambda p: (p.degree(), len(p.terms), text(p)))
                return Verdict(
                    Outcome.PROVED,
                    _radical_witness("local_radical", polys, fp, I.base, multiplier=text(e), exponent=n),
                    _spent(budget, start),
                )
            stable = previous_basis is not None and sorted(texts(gens_now)) == sorted(texts(previous_basis))
            if stable:
                return Verdict(
                    Outcome.REFUTED,
                    _radical_witness("local_radical", polys, fp, I.base, saturation_basis=texts(gens_now), exponent=n),
                    _spent(budget, start),
                )
            previous_basis = gens_now
            current = gens_now
    except BudgetExhausted:
        return Verdict.unknown("gb budget exhausted", _spent(budget, start))
    return Verdict.unknown("quotient chain did not stabilise", _spent(budget, start))


def member(I: GermIdeal, f, budget: Budget | None = None) -> Verdict:
    """Polynomial ideal membership of a germ's representative."""
    budget = budget or Budget()
    f = as_germ(f, I.base)
    start = budget.snapshot()
    v = is_member(f.poly, I.polys, budget.step_budget())
    return Verdict(v.outcome, v.witness, _spent(budget, start))


def clear_caches():
    _radical_cache.clear()
