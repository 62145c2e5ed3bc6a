"""Buchberger's algorithm over Q and Q(i), with elimination orders.

Internally a polynomial is a dict from dense exponent tuples (aligned with the
order's variable list) to coefficients. Public functions accept and return
:class:`~germcalc.poly.Polynomial` values.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .poly import Polynomial, support_of
from .scalars import Field, FieldMismatch, one
from .verdict import Outcome, Verdict

DEFAULT_GB_BUDGET = 10_000


class UnknownVariable(ValueError):
    pass


class BudgetExhausted(Exception):
    """Raised when a computation runs out of its step allowance."""

    def __init__(self, consumed: int, what: str = "pair reductions"):
        super().__init__(f"budget exhausted after {consumed} {what}")
        self.consumed = consumed
        self.what = what


class StepBudget:
    """Allowance of S-pair reductions for one basis computation."""

    def __init__(self, max_pair_reductions: int = DEFAULT_GB_BUDGET):
        if max_pair_reductions < 1:
            raise ValueError("budget must be positive")
        self.max_pair_reductions = max_pair_reductions
        self.consumed = 0

    def charge(self):
        if self.consumed >= self.max_pair_reductions:
            raise BudgetExhausted(self.consumed)
        self.consumed += 1


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class TermOrder:
    """Grevlex on ``rest``, or a block order eliminating ``eliminated`` first.

    Variables are listed from largest to smallest.
    """

    rest: tuple
    eliminated: tuple = ()

    def __post_init__(self):
        allv = self.eliminated + self.rest
        if len(set(allv)) != len(allv):
            raise ValueError("duplicate variables in term order")

    @classmethod
    def grevlex(cls, variables: Iterable[int]) -> "TermOrder":
        return cls(tuple(variables))

    @classmethod
    def elimination(cls, eliminated: Iterable[int], rest: Iterable[int]) -> "TermOrder":
        return cls(tuple(rest), tuple(eliminated))

    @property
    def variables(self) -> tuple:
        return self.eliminated + self.rest

    @property
    def kind(self) -> str:
        return "elimination" if self.eliminated else "grevlex"

    def key_function(self):
        b = len(self.eliminated)
        if not b:
            return _grevlex_key
        return lambda e: (_grevlex_key(e[:b]), _grevlex_key(e[b:]))


def _to_dense(p: Polynomial, pos: dict, n: int) -> dict:
    out = {}
    for m, c in p.terms.items():
        e = [0] * n
        for v, k in m:
            try:
                e[pos[v]] = k
            except KeyError:
                raise UnknownVariable(f"x_{v} is not covered by the term order") from None
        out[tuple(e)] = c
    return out


def _from_dense(d: dict, variables: tuple, field: Field) -> Polynomial:
    terms = {}
    for e, c in d.items():
        terms[tuple(sorted((variables[i], k) for i, k in enumerate(e) if k))] = c
    return Polynomial._raw(terms, field)


class _Ring:
    """Dense exponent arithmetic for one term order."""

    def __init__(self, order: TermOrder, field: Field):
        self.order = order
        self.field = field
        self.variables = order.variables
        self.pos = {v: i for i, v in enumerate(self.variables)}
        self.n = len(self.variables)
        self.key = order.key_function()

    def dense(self, p: Polynomial) -> dict:
        return _to_dense(p, self.pos, self.n)

    def poly(self, d: dict) -> Polynomial:
        return _from_dense(d, self.variables, self.field)

    def lead(self, d: dict):
        return max(d, key=self.key)

    def monic(self, d: dict) -> dict:
        lm = self.lead(d)
        inv = 1 / d[lm]
        if inv == 1:
            return d
        return {e: c * inv for e, c in d.items()}

    def reduce(self, f: dict, basis: list, leads: list, full: bool = True) -> dict:
        """Remainder of ``f`` on division by monic ``basis`` with leading exponents ``leads``."""
        f = dict(f)
        rem = {}
        key = self.key
        while f:
            lm = max(f, key=key)
            c = f[lm]
            for g, lg in zip(basis, leads):
                if all(a >= b for a, b in zip(lm, lg)):
                    shift = tuple(a - b for a, b in zip(lm, lg))
                    for e, gc in g.items():
                        t = tuple(a + b for a, b in zip(e, shift))
                        v = f.get(t)
                        v = -c * gc if v is None else v - c * gc
                        if v:
                            f[t] = v
                        else:
                            f.pop(t, None)
                    break
            else:
                if not full:
                    rem.update(f)
                    return rem
                rem[lm] = c
                del f[lm]
        return rem


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(r: _Ring, f: dict, lf, g: dict, lg) -> dict:
    l = _lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(l, lf))
    sg = tuple(a - b for a, b in zip(l, lg))
    out = {}
    for e, c in f.items():
        out[tuple(a + b for a, b in zip(e, sf))] = c
    for e, c in g.items():
        t = tuple(a + b for a, b in zip(e, sg))
        v = out.get(t)
        v = -c if v is None else v - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: TermOrder
    reduced: bool = True
    field: Field = Field.REAL
    _dense: tuple = dc_field(default=(), compare=False, repr=False)
    _leads: tuple = dc_field(default=(), compare=False, repr=False)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def ring(self) -> _Ring:
        return _Ring(self.order, self.field)


def _make_basis(r: _Ring, dense: list, reduced: bool) -> GroebnerBasis:
    leads = [r.lead(g) for g in dense]
    gens = tuple(r.poly(g) for g in dense)
    return GroebnerBasis(gens, r.order, reduced, r.field, tuple(dense), tuple(leads))


def _interreduce(r: _Ring, polys: list) -> list:
    polys = [r.monic(p) for p in polys if p]
    leads = [r.lead(p) for p in polys]
    # drop generators whose leading monomial is divisible by another's
    keep = []
    for i, li in enumerate(leads):
        redundant = False
        for j, lj in enumerate(leads):
            if i != j and _divides(lj, li) and (lj != li or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    polys = [polys[i] for i in keep]
    leads = [leads[i] for i in keep]
    out = []
    for i, p in enumerate(polys):
        others = polys[:i] + polys[i + 1:]
        other_leads = leads[:i] + leads[i + 1:]
        tail = {e: c for e, c in p.items() if e != leads[i]}
        red = r.reduce(tail, others, other_leads)
        red[leads[i]] = p[leads[i]]
        out.append(red)
    out.sort(key=lambda d: r.key(r.lead(d)))
    return out


def buchberger(
    gens: Sequence[Polynomial],
    order: TermOrder,
    budget: StepBudget | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of ``gens`` under ``order``.

    Pairs are processed by the normal strategy (smallest lcm degree first,
    ties by pair indices); Buchberger's coprime and chain criteria skip
    useless pairs. Raises :class:`BudgetExhausted` when ``budget`` runs out.
    """
    budget = budget if budget is not None else StepBudget()
    gens = list(gens)
    field = gens[0].field if gens else Field.REAL
    for g in gens:
        if g.field is not field:
            raise FieldMismatch("generators over different fields")
    r = _Ring(order, field)
    G = [r.monic(r.dense(g)) for g in gens if not g.is_zero()]
    if not G:
        return _make_basis(r, [], True)
    for g in G:
        if all(x == 0 for x in r.lead(g)):
            return _make_basis(r, [{(0,) * r.n: one(field)}], True)
    G = list({tuple(sorted(g.items())): g for g in G}.values())
    leads = [r.lead(g) for g in G]
    pairs: set = set()
    queue: list = []

    def push(i, j):
        pairs.add((i, j))
        heapq.heappush(queue, (sum(_lcm(leads[i], leads[j])), i, j))

    for i, j in itertools.combinations(range(len(G)), 2):
        push(i, j)

    while queue:
        _, i, j = heapq.heappop(queue)
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        l = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(leads[k], l):
                ik = (min(i, k), max(i, k))
                jk = (min(j, k), max(j, k))
                if ik not in pairs and jk not in pairs:
                    chain = True
                    break
        if chain:
            continue
        budget.charge()
        s = _spoly(r, G[i], li, G[j], lj)
        h = r.reduce(s, G, leads)
        if not h:
            continue
        h = r.monic(h)
        lh = r.lead(h)
        if all(x == 0 for x in lh):
            return _make_basis(r, [h], True)
        k = len(G)
        G.append(h)
        leads.append(lh)
        for a in range(k):
            push(a, k)
    return _make_basis(r, _interreduce(r, G), True)


def default_order(polys: Iterable[Polynomial]) -> TermOrder:
    return TermOrder.grevlex(sorted(support_of(polys)))


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on full division by the basis ``G``."""
    r = G.ring()
    if f.field is not G.field and G.generators:
        raise FieldMismatch("polynomial and basis over different fields")
    d = r.dense(f)
    if G._dense:
        dense, leads = list(G._dense), list(G._leads)
    else:
        dense = [r.monic(r.dense(g)) for g in G.generators]
        leads = [r.lead(g) for g in dense]
    return r.poly(r.reduce(d, dense, leads)) if dense else f


def groebner_basis(gens: Sequence[Polynomial], budget: StepBudget | None = None, order: TermOrder | None = None) -> GroebnerBasis:
    order = order or default_order(gens)
    return buchberger(gens, order, budget)


def _covering_order(f: Polynomial, gens: Sequence[Polynomial]) -> TermOrder:
    return default_order(list(gens) + [f])


def is_member(
    f: Polynomial,
    gens: Sequence[Polynomial],
    budget: StepBudget | None = None,
    order: TermOrder | None = None,
) -> Verdict:
    """Decide ``f`` in the polynomial ideal generated by ``gens``."""
    from .witness import membership_witness

    budget = budget if budget is not None else StepBudget()
    order = order or _covering_order(f, gens)
    gens = [g for g in gens if not g.is_zero()]
    try:
        G = buchberger(gens, order, budget) if gens else None
    except BudgetExhausted as exc:
        return Verdict.unknown("gb budget exhausted", {"gb": exc.consumed})
    nf = normal_form(f, G) if G is not None else f
    consumed = {"gb": budget.consumed}
    if nf.is_zero():
        return Verdict(Outcome.PROVED, membership_witness(f, gens, nf), consumed)
    return Verdict(Outcome.REFUTED, membership_witness(f, gens, nf), consumed)


def eliminate(
    gens: Sequence[Polynomial],
    drop: Iterable[int],
    budget: StepBudget | None = None,
    keep: Iterable[int] | None = None,
) -> list:
    """Generators of the ideal of ``gens`` intersected with the kept-variable subring."""
    drop = sorted(set(drop))
    allv = support_of(gens)
    rest = sorted(set(keep) if keep is not None else (allv - set(drop)))
    if set(rest) & set(drop):
        raise ValueError("dropped and kept variables overlap")
    extra = allv - set(drop) - set(rest)
    if extra:
        raise UnknownVariable(f"variables {sorted(extra)} are neither kept nor dropped")
    order = TermOrder.elimination(drop, rest)
    G = buchberger([g for g in gens if not g.is_zero()], order, budget)
    dropped = set(drop)
    return [g for g in G.generators if not (g.support() & dropped)]


def s_polynomials_reduce_to_zero(G: GroebnerBasis) -> bool:
    """Buchberger criterion: every S-polynomial of ``G`` reduces to zero."""
    r = G.ring()
    dense = [r.monic(r.dense(g)) for g in G.generators]
    leads = [r.lead(g) for g in dense]
    for i, j in itertools.combinations(range(len(dense)), 2):
        s = _spoly(r, dense[i], leads[i], dense[j], leads[j])
        if r.reduce(s, dense, leads):
            return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    r = G.ring()
    dense = [r.dense(g) for g in G.generators]
    leads = [r.lead(g) for g in dense]
    for i, g in enumerate(dense):
        if g[leads[i]] != 1:
            return False
        for j, lj in enumerate(leads):
            if i != j and any(_divides(lj, e) for e in g):
                return False
    return True


# -- Macaulay-matrix membership oracle -------------------------------------------


def _monomials_up_to(n: int, degree: int):
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            yield tuple(e)


def macaulay_membership_oracle(f: Polynomial, gens: Sequence[Polynomial], degree_bound: int) -> Verdict:
    """Degree-bounded linear-algebra membership test, independent of Buchberger.

    Proved means ``f = sum h_i g_i`` with every ``deg(h_i g_i) <= degree_bound``.
    Otherwise the answer is Unknown at the bound (never a disproof).
    """
    if degree_bound < max(f.degree(), 0):
        raise ValueError("degree bound below deg f")
    gens = [g for g in gens if not g.is_zero()]
    if f.is_zero():
        return Verdict(Outcome.PROVED, {"kind": "macaulay", "degree_bound": degree_bound}, {})
    order = _covering_order(f, gens)
    r = _Ring(order, f.field)
    key = r.key
    pivots: dict = {}

    def reduce(v: dict) -> dict:
        v = dict(v)
        while v:
            lm = max(v, key=key)
            p = pivots.get(lm)
            if p is None:
                return v
            c = v[lm]
            for e, pc in p.items():
                w = v.get(e)
                w = -c * pc if w is None else w - c * pc
                if w:
                    v[e] = w
                else:
                    v.pop(e, None)
        return v

    columns = 0
    for g in gens:
        dg = r.dense(g)
        deg_g = g.degree()
        if deg_g > degree_bound:
            continue
        for m in _monomials_up_to(r.n, degree_bound - deg_g):
            v = {tuple(a + b for a, b in zip(e, m)): c for e, c in dg.items()}
            v = reduce(v)
            columns += 1
            if v:
                v = r.monic(v)
                pivots[max(v, key=key)] = v
    rem = reduce(r.dense(f))
    witness = {"kind": "macaulay", "degree_bound": degree_bound, "columns": columns, "rank": len(pivots)}
    if not rem:
        return Verdict(Outcome.PROVED, witness, {})
    return Verdict.unknown("no representation within the degree bound", {}, witness)


# -- quotients -------------------------------------------------------------------


def exact_quotient(g: Polynomial, h: Polynomial) -> Polynomial:
    """The polynomial q with g = q*h; raises ValueError when h does not divide g."""
    if h.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = _Ring(default_order([g, h]), g.field)
    hd = r.dense(h)
    lh = r.lead(hd)
    lc = hd[lh]
    f = r.dense(g)
    q: dict = {}
    while f:
        lm = max(f, key=r.key)
        if not _divides(lh, lm):
            raise ValueError(f"{h} does not divide {g}")
        shift = tuple(a - b for a, b in zip(lm, lh))
        c = f[lm] / lc
        q[shift] = c
        for e, hc in hd.items():
            t = tuple(a + b for a, b in zip(e, shift))
            v = f.get(t, 0) - c * hc
            if v:
                f[t] = v
            else:
                f.pop(t, None)
    return r.poly(q)


def fresh_variable(polys: Iterable[Polynomial]) -> int:
    return max(support_of(polys), default=0) + 1


def ideal_quotient(gens: Sequence[Polynomial], h: Polynomial, budget: StepBudget | None = None) -> list:
    """Generators of (gens) : h, via the intersection (gens) cap (h)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    if h.is_zero():
        return [Polynomial.one(h.field)]
    t = fresh_variable(list(gens) + [h])
    tv = Polynomial.var(t, h.field)
    system = [tv * g for g in gens] + [(1 - tv) * h]
    inter = eliminate(system, {t}, budget)
    return [exact_quotient(g, h) for g in inter]
