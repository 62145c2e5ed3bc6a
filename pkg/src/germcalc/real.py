"""Real radical reasoning: certificates, closure, and curve refutations.

Membership in the real radical is only semi-decided. Positive answers come
from checkable identities ``f^(2m) + b_1^2 + ... + b_k^2`` in the ideal,
chained by the closure rules below. Negative answers come from a polynomial
curve through the base point that lies in the zero set of the ideal but on
which ``f`` is not identically zero.

Closure rules:

* R1: generators and members of the ideal are in the real radical;
* R2: anything in the ideal generated by the ideal and already proven
  elements is in the real radical;
* R3: a verified certificate over that augmented ideal proves its target.

Complex local-radical membership over the augmented ideal is also accepted
(rule CX): the complex radical is contained in the real one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .germs import BaseMismatch, Germ, GermIdeal, _spent, as_germ, local_radical_member_complex
from .groebner import BudgetExhausted, default_order, groebner_basis, is_member
from .poly import ONE_MONOMIAL, BasePoint, Polynomial, RationalCurve, compose_curve, mono_mul, support_of
from .scalars import Field, FieldMismatch
from .verdict import Budget, Outcome, Verdict
from .witness import InvalidWitness, base_json, curve_json, text, texts

# observers of conclusive real verdicts: callables (ideal_texts, f_text, outcome, kind)
audit_hooks: list = []


def _audit(I_polys, f: Polynomial, verdict: Verdict, kind: str):
    if verdict.conclusive():
        key = tuple(sorted(texts(I_polys)))
        for hook in list(audit_hooks):
            hook(key, text(f), verdict.outcome, kind)


def _require_real(field_: Field):
    if field_ is not Field.REAL:
        raise FieldMismatch("real-radical reasoning needs the real field")


@dataclass(frozen=True)
class RealCertificate:
    """Claim ``target^(2m) + sum(b_i^2)`` lies in the context ideal."""

    target: Germ
    m: int
    b_list: tuple
    context: GermIdeal

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("certificate exponent m must be positive")
        object.__setattr__(self, "b_list", tuple(as_germ(b, self.context.base) for b in self.b_list))

    def combination(self) -> Polynomial:
        total = self.target.poly ** (2 * self.m)
        for b in self.b_list:
            total = total + b.poly * b.poly
        return total

    def to_json(self) -> dict:
        return {
            "target": text(self.target.poly),
            "m": self.m,
            "b": [text(b.poly) for b in self.b_list],
            "context": texts(self.context.polys),
        }


def verify_real_certificate(cert: RealCertificate, budget: Budget | None = None) -> Verdict:
    _require_real(cert.context.field)
    budget = budget or Budget()
    start = budget.snapshot()
    v = is_member(cert.combination(), cert.context.polys, budget.step_budget())
    w = {"kind": "real_certificate", "field": "real", "certificate": cert.to_json(), "membership": v.witness}
    if v.unknown_:
        return Verdict(Outcome.UNKNOWN, w, _spent(budget, start))
    return Verdict(v.outcome, w, _spent(budget, start))


# -- sums of squares ---------------------------------------------------------------


def four_squares(n: int) -> tuple:
    """Integers (a, b, c, d) with a^2 + b^2 + c^2 + d^2 == n."""
    if n < 0:
        raise ValueError("negative")
    from sympy.solvers.diophantine.diophantine import sum_of_four_squares  # slow import, rarely needed

    return tuple(int(x) for x in sum_of_four_squares(n))


def weighted_square_as_squares(weight: Fraction, q: Polynomial) -> list:
    """Polynomials r_i with weight * q^2 == sum r_i^2, for a positive rational weight."""
    weight = Fraction(weight)
    if weight <= 0:
        raise ValueError("weight must be positive")
    num, den = weight.numerator, weight.denominator
    return [q.scale(Fraction(s, den)) for s in four_squares(num * den) if s]


def _half_monomials(p: Polynomial) -> list:
    variables = sorted(p.support())
    half = max(p.degree(), 0) // 2
    out = []
    for d in range(half + 1):
        for combo in itertools.combinations_with_replacement(variables, d):
            m: dict = {}
            for v in combo:
                m[v] = m.get(v, 0) + 1
            out.append(tuple(sorted(m.items())))
    return out


def sos_decompose(p: Polynomial):
    """Try to write ``p = sum w_j q_j^2`` with positive rational weights.

    Uses one Gram matrix (coefficients of non-square monomials are split over
    the first available pair) and a rational LDL^T factorisation. Exact for
    quadratic polynomials; a heuristic in higher degree. Returns a list of
    ``(weight, q)`` or None.
    """
    if p.field is not Field.REAL or p.is_zero() or p.degree() % 2:
        return None
    basis = _half_monomials(p)
    n = len(basis)
    index = {m: i for i, m in enumerate(basis)}
    products: dict = {}
    for i in range(n):
        for j in range(i, n):
            products.setdefault(mono_mul(basis[i], basis[j]), []).append((i, j))
    Q = [[Fraction(0)] * n for _ in range(n)]
    for m, c in p.terms.items():
        pairs = products.get(m)
        if not pairs:
            return None
        diag = [(i, j) for i, j in pairs if i == j]
        i, j = diag[0] if diag else pairs[0]
        if i == j:
            Q[i][i] += c
        else:
            Q[i][j] += c / 2
            Q[j][i] += c / 2
    out = []
    for k in range(n):
        d = Q[k][k]
        if d < 0:
            return None
        if d == 0:
            if any(Q[k][j] for j in range(k, n)):
                return None
            continue
        row = [Q[k][j] / d for j in range(n)]
        q = Polynomial({basis[j]: row[j] for j in range(k, n) if row[j]}, Field.REAL)
        out.append((d, q))
        for a in range(k, n):
            if row[a]:
                for b in range(k, n):
                    Q[a][b] -= d * row[a] * row[b]
    total = Polynomial.zero(Field.REAL)
    for w, q in out:
        total = total + (q * q).scale(w)
    if total != p:
        return None
    return out


def certificates_from_sos(g: Polynomial, context: GermIdeal) -> list:
    """Certificates for each square root in an SOS decomposition of ``g`` (g in context)."""
    parts = sos_decompose(g)
    if not parts:
        return []
    certs = []
    for k, (wk, qk) in enumerate(parts):
        if qk.is_constant():
            continue
        bs = []
        for j, (wj, qj) in enumerate(parts):
            if j != k:
                bs += weighted_square_as_squares(wj / wk, qj)
        certs.append(RealCertificate(Germ(qk, context.base), 1, tuple(bs), context))
    return certs


# -- closure -----------------------------------------------------------------


@dataclass
class _ClosureState:
    ideal: GermIdeal
    targets: list = field(default_factory=list)
    proven: list = field(default_factory=list)
    steps: list = field(default_factory=list)
    results: dict = field(default_factory=dict)

    def context(self) -> GermIdeal:
        return self.ideal.with_generators(self.proven)

    def add(self, p: Polynomial, step: dict) -> bool:
        if any(p == q for q in self.proven) or p.is_zero():
            return False
        self.proven.append(p)
        self.steps.append(step)
        if p in self.targets and p not in self.results:
            self.results[p] = list(self.steps)
        return True


def _sos_round(state: "_ClosureState", candidates, budget: Budget):
    ctx = state.context()
    for g in candidates:
        for cert in certificates_from_sos(g, ctx):
            if any(cert.target.poly == q for q in state.proven):
                continue
            if is_member(cert.target.poly, ctx.polys, budget.step_budget()).proved:
                continue
            v = verify_real_certificate(cert, budget)
            if v.proved:
                state.add(cert.target.poly, {"rule": "R3", "certificate": cert.to_json()})


def real_radical_closure(
    I: GermIdeal,
    targets: Sequence,
    hints: Sequence[RealCertificate] = (),
    budget: Budget | None = None,
    auto: bool = True,
    max_rounds: int = 16,
) -> dict:
    """Fixed point of R1-R3 (and CX) over ``targets``.

    Returns ``{target polynomial: Verdict}``. A Proved verdict carries the
    derivation: the ordered steps that establish the target. Targets that
    cannot be proven get Unknown; this never refutes.
    """
    _require_real(I.field)
    budget = budget or Budget()
    start = budget.snapshot()
    targets = [as_germ(t, I.base).poly for t in targets]
    state = _ClosureState(I, targets)
    results = state.results
    exhausted = False

    def try_targets():
        ctx = state.context()
        for t in targets:
            if t in results:
                continue
            v = is_member(t, ctx.polys, budget.step_budget())
            if v.proved:
                rule = "R1" if not state.proven else "R2"
                state.add(t, {"rule": rule, "target": text(t), "context": texts(ctx.polys)})
            elif v.unknown_:
                raise BudgetExhausted(budget.consumed.get("gb", 0))

    try:
        try_targets()
        used_hints: set = set()
        for _ in range(max_rounds):
            if len(results) == len(targets):
                break
            before = len(state.proven)
            ctx = state.context()
            # R3 from user hints, re-anchored to the current augmented context
            for h_idx, h in enumerate(hints):
                if h_idx in used_hints:
                    continue
                cert = RealCertificate(h.target, h.m, h.b_list, ctx)
                v = verify_real_certificate(cert, budget)
                if v.proved:
                    used_hints.add(h_idx)
                    state.add(h.target.poly, {"rule": "R3", "certificate": cert.to_json()})
            if auto:
                ctx = state.context()
                _sos_round(state, ctx.polys, budget)
                if len(state.proven) == before:
                    # nothing from the presentation itself: try the reduced basis
                    G = groebner_basis(ctx.polys, budget.step_budget(), default_order(ctx.polys)) if ctx.polys else None
                    _sos_round(state, G.generators if G is not None else (), budget)
            try_targets()
            if auto:
                ctx = state.context()
                for t in targets:
                    if t in results:
                        continue
                    v = local_radical_member_complex(ctx, t, budget)
                    if v.proved:
                        state.add(t, {"rule": "CX", "target": text(t), "context": texts(ctx.polys),
                                      "multiplier": v.witness["multiplier"], "exponent": v.witness["exponent"]})
            if len(state.proven) == before:
                break
    except BudgetExhausted:
        exhausted = True

    spent = _spent(budget, start)
    out = {}
    for t in targets:
        if t in results:
            w = {
                "kind": "real_closure",
                "field": "real",
                "base": base_json(I.base),
                "ideal": texts(I.polys),
                "target": text(t),
                "derivation": results[t],
            }
            v = Verdict(Outcome.PROVED, w, spent)
        else:
            reason = "gb budget exhausted" if exhausted else "closure reached a fixed point without a proof"
            v = Verdict.unknown(reason, spent, {"target": text(t), "proven": texts(state.proven)})
        _audit(I.polys, t, v, "closure")
        out[t] = v
    return out


# -- curve refutation ----------------------------------------------------------


def curve_witness(I_polys, f: Polynomial, z: RationalCurve) -> dict:
    return {
        "kind": "curve",
        "field": "real",
        "base": base_json(z.base),
        "generators": texts(I_polys),
        "f": text(f),
        "curve": curve_json(z),
        "f_on_curve": _uni_text(compose_curve(f, z)),
    }


def _uni_text(c) -> str:
    from .poly import format_univariate

    return format_univariate(c)


def check_curve(I_polys, f: Polynomial, z: RationalCurve) -> bool:
    """True iff every generator vanishes identically on z and f does not."""
    if any(compose_curve(g, z) for g in I_polys):
        return False
    return bool(compose_curve(f, z))


def candidate_curves(base: BasePoint, variables: Sequence[int], must_move: Iterable[int] | None = None):
    """Coordinate-sparse affine curves: moving coordinates follow x0_t + s or x0_t - s.

    Ordered by number of moving coordinates, then lexicographically, with
    + before -. ``must_move``: skip curves that leave all of these fixed.
    """
    variables = sorted(variables)
    must = frozenset(must_move) if must_move is not None else None
    yield RationalCurve({}, base)
    for r in range(1, len(variables) + 1):
        for combo in itertools.combinations(variables, r):
            if must is not None and not (must & set(combo)):
                continue
            for signs in itertools.product((1, -1), repeat=r):
                comps = {t: (base[t], sg) for t, sg in zip(combo, signs)}
                yield RationalCurve(comps, base)


def search_curve(I_polys, base: BasePoint, accept: Callable[[RationalCurve], bool], variables, must_move, budget: Budget):
    spent = 0
    for z in candidate_curves(base, variables, must_move):
        if spent >= budget.curve:
            return None, spent
        spent += 1
        budget.add("curve")
        if all(not compose_curve(g, z) for g in I_polys) and accept(z):
            return z, spent
    return None, spent


def refute_real_vanishing(I: GermIdeal, f, curve: RationalCurve | None = None, budget: Budget | None = None) -> Verdict:
    """Refute ``f`` in the real radical of ``I`` by a curve through the base point.

    A supplied curve that fails exact verification raises InvalidWitness.
    """
    _require_real(I.field)
    budget = budget or Budget()
    f = as_germ(f, I.base)
    polys = I.polys
    start = budget.snapshot()
    if curve is not None:
        if not curve.base.same_point(I.base):
            raise BaseMismatch("curve does not start at the ideal's base point")
        if not check_curve(polys, f.poly, curve):
            raise InvalidWitness("curve does not lie in the zero set, or f vanishes on it")
        v = Verdict(Outcome.REFUTED, curve_witness(polys, f.poly, curve), _spent(budget, start))
        _audit(polys, f.poly, v, "curve")
        return v
    fp = f.poly
    variables = support_of(polys + [fp])
    # curves fixing every coordinate of f keep f at f(x0); the constant curve covers that case
    z, _ = search_curve(polys, I.base, lambda c: bool(compose_curve(fp, c)), variables, fp.support(), budget)
    if z is None:
        return Verdict.unknown("no refuting curve within the curve budget", _spent(budget, start))
    v = Verdict(Outcome.REFUTED, curve_witness(polys, fp, z), _spent(budget, start))
    _audit(polys, fp, v, "curve")
    return v


def real_membership(I: GermIdeal, f, hints: Sequence[RealCertificate] = (), budget: Budget | None = None) -> Verdict:
    """Closure first, then curve refutation; Unknown when neither concludes."""
    budget = budget or Budget()
    f = as_germ(f, I.base)
    v = real_radical_closure(I, [f], hints, budget)[f.poly]
    if v.proved:
        return v
    r = refute_real_vanishing(I, f, budget=budget)
    if r.refuted:
        return r
    return Verdict.unknown("real radical membership undecided", budget.snapshot(),
                           {"target": text(f.poly)})
