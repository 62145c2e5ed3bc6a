"""Set-germs, systems of germs, and multigerms at a base point.

Set-germs are intensional: ``SetGerm`` holds defining germs and stands for
the germ at the base point of their common zero set. All set reasoning goes
through radical membership (complex) or closure/curve refutation (real).

Systems come in two forms. ``ExplicitSystem`` is a finite directed family of
set-germs. ``ZeroSystem`` is the family Z(alpha) over finite subsets alpha of
an ideal given by a generator stream; it is enumerated lazily.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .germs import (
    BaseMismatch,
    Germ,
    GermIdeal,
    GeneratorStream,
    _spent,
    as_germ,
    is_invertible,
    local_radical_by_quotients,
    local_radical_member_complex,
)
from .parser import GeneratorTemplate, instantiate
from .poly import BasePoint, Polynomial, support_of
from .real import real_membership, real_radical_closure, search_curve, curve_witness
from .scalars import Field
from .verdict import Budget, Outcome, Verdict, combine
from .witness import base_json, text, texts


class NotAntitone(ValueError):
    """An explicit system has beta << alpha but A^alpha is not inside A^beta."""


class NotDirected(ValueError):
    pass


# -- set-germs ---------------------------------------------------------------


@dataclass(frozen=True)
class SetGerm:
    base: BasePoint
    defining: tuple = ()

    def __post_init__(self):
        defs = tuple(as_germ(d, self.base) for d in self.defining)
        for d in defs:
            if d.base != self.base:
                raise BaseMismatch("defining germs must share the base point")
        object.__setattr__(self, "defining", defs)

    @classmethod
    def of(cls, polys: Iterable[Polynomial], base: BasePoint) -> "SetGerm":
        return cls(base, tuple(Germ(p, base) for p in polys))

    @classmethod
    def full(cls, base: BasePoint) -> "SetGerm":
        return cls(base, ())

    @classmethod
    def empty(cls, base: BasePoint) -> "SetGerm":
        return cls.of([Polynomial.one(base.field)], base)

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def polys(self) -> list:
        return [d.poly for d in self.defining]

    def ideal(self) -> GermIdeal:
        return GermIdeal(self.base, self.defining)

    def intersection(self, other: "SetGerm") -> "SetGerm":
        _same_base(self, other)
        return SetGerm(self.base, self.defining + other.defining)

    def union(self, other: "SetGerm") -> "SetGerm":
        """Zero set of all pairwise products of defining germs."""
        _same_base(self, other)
        prods = []
        seen = set()
        for a in self.polys:
            for b in other.polys:
                p = a * b
                if p not in seen:
                    seen.add(p)
                    prods.append(p)
        return SetGerm.of(prods, self.base)


def _same_base(a, b):
    if a.base != b.base:
        raise BaseMismatch("objects live at different base points or fields")


def setgerm_is_empty(A: SetGerm) -> bool:
    return any(is_invertible(d) for d in A.defining)


def setgerm_contains(A: SetGerm, B: SetGerm, budget: Budget | None = None) -> Verdict:
    """Decide Z(A) inside Z(B) as germs at the base point.

    Complete for the complex field (up to budget); a semi-decision for the
    real field.
    """
    _same_base(A, B)
    budget = budget or Budget()
    start = budget.snapshot()
    I = A.ideal()
    per = []
    for b in B.defining:
        if A.field is Field.COMPLEX:
            v = local_radical_member_complex(I, b, budget)
        else:
            v = real_membership(I, b, budget=budget)
        per.append(v)
        if v.refuted:
            break
    outcome = combine(per)
    w = {
        "kind": "containment",
        "field": A.field.value,
        "base": base_json(A.base),
        "A": texts(A.polys),
        "B": texts(B.polys),
        "per_generator": [v.to_json() for v in per],
    }
    return Verdict(outcome, w, _spent(budget, start))


# -- directed index sets ---------------------------------------------------------


def label_text(label) -> str:
    if isinstance(label, frozenset):
        return "{" + ",".join(label_text(x) for x in sorted(label)) + "}"
    if isinstance(label, tuple):
        return "(" + ",".join(label_text(x) for x in label) + ")"
    return str(label)


class DirectedIndex:
    """A finite preordered set of labels satisfying Moore-Smith.

    The given relation is closed under reflexivity and transitivity.
    """

    def __init__(self, elements: Sequence[Hashable], relation: Iterable[tuple]):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate labels")
        if not self.elements:
            raise ValueError("a directed set needs at least one label")
        rel = set(relation)
        members = set(self.elements)
        for a, b in rel:
            if a not in members or b not in members:
                raise ValueError(f"relation mentions unknown label {a!r} or {b!r}")
        # store the reflexive-transitive closure
        rel |= {(a, a) for a in self.elements}
        changed = True
        while changed:
            changed = False
            for (a, b), (c, d) in itertools.product(list(rel), list(rel)):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
        self.relation = frozenset(rel)
        self._top = self._find_top()

    def precedes(self, a, b) -> bool:
        return (a, b) in self.relation

    def _find_top(self):
        for g in self.elements:
            if all((a, g) in self.relation for a in self.elements):
                return g
        # Moore-Smith fails: some pair has no upper bound
        for a, b in itertools.combinations_with_replacement(self.elements, 2):
            if not any((a, g) in self.relation and (b, g) in self.relation for g in self.elements):
                raise NotDirected(f"labels {label_text(a)} and {label_text(b)} have no upper bound")
        raise NotDirected("no upper bound for the whole index set")

    @property
    def top(self):
        """A label above every label; in a finite directed set one always exists."""
        return self._top

    @classmethod
    def chain(cls, labels: Sequence[Hashable]) -> "DirectedIndex":
        labels = list(labels)
        rel = {(labels[i], labels[j]) for i in range(len(labels)) for j in range(i, len(labels))}
        return cls(labels, rel)

    @classmethod
    def single(cls, label="*") -> "DirectedIndex":
        return cls([label], {(label, label)})

    @classmethod
    def subsets(cls, dims: Iterable[int]) -> "DirectedIndex":
        dims = sorted(set(dims))
        labels = [frozenset(c) for r in range(1, len(dims) + 1) for c in itertools.combinations(dims, r)]
        rel = {(a, b) for a in labels for b in labels if a <= b}
        return cls(labels, rel)

    @classmethod
    def product(cls, A: "DirectedIndex", B: "DirectedIndex") -> "DirectedIndex":
        labels = [(a, b) for a in A.elements for b in B.elements]
        rel = {((a1, b1), (a2, b2)) for (a1, a2) in A.relation for (b1, b2) in B.relation}
        return cls(labels, rel)

    def to_json(self) -> dict:
        return {
            "labels": [label_text(x) for x in self.elements],
            "relation": sorted([label_text(a), label_text(b)] for a, b in self.relation),
        }


# -- systems -----------------------------------------------------------------------


class SystemOfGerms:
    base: BasePoint
    kind: str

    @property
    def field(self) -> Field:
        return self.base.field

    def forall_targets(self, window: int | None = None):
        """A cofinal finite list of (label, SetGerm), or None when none is available."""
        raise NotImplementedError

    def exists_candidates(self, budget: Budget):
        """Yield (label, SetGerm) candidates; returns whether the search was exhaustive."""
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


class ExplicitSystem(SystemOfGerms):
    """A finite system {A^alpha} over a directed index.

    Construction checks antitonicity (beta << alpha implies A^alpha inside
    A^beta) for every related pair. A Refuted check raises NotAntitone;
    Unknown checks are recorded in ``validation`` and the system is then
    searched exhaustively rather than through its top label.
    """

    kind = "explicit"

    def __init__(self, index: DirectedIndex, assignment: Mapping, base: BasePoint,
                 validate: bool = True, validated: bool | None = None, budget: Budget | None = None,
                 strict: bool = True):
        self.index = index
        self.base = base
        self.assignment = {}
        for label in index.elements:
            germ = assignment[label]
            if not isinstance(germ, SetGerm):
                germ = SetGerm.of(germ, base)
            if germ.base != base:
                raise BaseMismatch("set-germ at a different base point")
            self.assignment[label] = germ
        self.strict = strict
        self.validation = {"proved": 0, "unknown": 0, "refuted": [], "checked": False}
        if validated is not None:
            self.validated = validated
        elif validate:
            self.validated = self._validate(budget or Budget())
        else:
            self.validated = False

    def _validate(self, budget: Budget) -> bool:
        self.validation["checked"] = True
        ok = True
        for beta, alpha in sorted(self.index.relation, key=lambda p: (label_text(p[0]), label_text(p[1]))):
            if beta == alpha:
                continue
            v = setgerm_contains(self.assignment[alpha], self.assignment[beta], budget.fresh())
            if v.refuted:
                if self.strict:
                    raise NotAntitone(
                        f"{label_text(beta)} << {label_text(alpha)} but A^{label_text(alpha)} is not inside A^{label_text(beta)}"
                    )
                self.validation["refuted"].append([label_text(beta), label_text(alpha)])
                ok = False
            elif v.proved:
                self.validation["proved"] += 1
            else:
                self.validation["unknown"] += 1
                ok = False
        return ok

    def germ(self, label) -> SetGerm:
        return self.assignment[label]

    def labels(self):
        return self.index.elements

    def forall_targets(self, window=None):
        if self.validated:
            top = self.index.top
            return [(top, self.assignment[top])]
        return [(l, self.assignment[l]) for l in self.index.elements]

    def exists_candidates(self, budget):
        if self.validated:
            top = self.index.top
            yield top, self.assignment[top]
        else:
            for l in self.index.elements:
                yield l, self.assignment[l]
        return True

    def to_json(self) -> dict:
        return {
            "kind": "explicit",
            "strict": self.strict,
            "field": self.field.value,
            "base": base_json(self.base),
            "index": self.index.to_json(),
            "germs": {label_text(l): texts(g.polys) for l, g in self.assignment.items()},
            "validated": self.validated,
        }


def fin_enumeration(n: int | None):
    """Nonempty subsets of generator indices, graded by (max index, size), then lex.

    ``n`` is the number of generators, or None for an infinite stream.
    """
    j = 0
    while n is None or j < n:
        for size in range(1, j + 2):
            for rest in itertools.combinations(range(j), size - 1):
                yield rest + (j,)
        j += 1


class ZeroSystem(SystemOfGerms):
    """The zero-system {Z(alpha) : alpha in fin(I)} of a generator stream."""

    kind = "zero"

    def __init__(self, stream: GeneratorStream):
        self.stream = stream
        self.base = stream.base

    def germ(self, label: tuple) -> SetGerm:
        return SetGerm.of([self.stream.element(j) for j in label], self.base)

    def labels(self, limit: int | None = None):
        n = len(self.stream) if self.stream.is_finite else None
        if n == 0:
            return [()]
        return list(itertools.islice(fin_enumeration(n), limit))

    def _prefix(self, n: int) -> tuple:
        return tuple(range(n))

    def forall_targets(self, window=None):
        if self.stream.is_finite:
            n = len(self.stream) if window is None else min(window, len(self.stream))
        elif window is not None:
            n = window
        else:
            return None
        label = self._prefix(n)
        return [(label, self.germ(label))]

    def exists_candidates(self, budget):
        # a subset is dominated by the prefix ending at its largest index
        if self.stream.is_finite:
            label = self._prefix(len(self.stream))
            budget.add("enum")
            yield label, self.germ(label)
            return True
        for j in range(budget.enum):
            label = self._prefix(j + 1)
            budget.add("enum")
            yield label, self.germ(label)
        return False

    def to_json(self) -> dict:
        return {"kind": "zero", "field": self.field.value, "base": base_json(self.base), "stream": self.stream.to_json()}


class SequenceSystem(SystemOfGerms):
    """Germs A^n, n = 1, 2, ..., over the natural order, generated lazily.

    A^n is the zero set of the first n - 1 stream elements together with
    ``tail`` instantiated at k = n - 1. No antitonicity check is made, so
    comparisons use the plain for-all/exists definition: the exists side is
    searched up to the enumeration budget and the for-all side needs a window.
    """

    kind = "sequence"

    def __init__(self, stream: GeneratorStream, tail: GeneratorTemplate):
        self.stream = stream
        self.tail = tail
        self.base = stream.base

    def germ(self, n: int) -> SetGerm:
        if n < 1:
            raise ValueError("sequence labels start at 1")
        extra = instantiate(self.tail, n - 1, self.field)
        if self.stream.centered:
            shift = {t: Polynomial.var(t, self.field) - self.base[t] for t in extra.support() if self.base[t]}
            if shift:
                extra = extra.substitute(shift)
        return SetGerm.of(self.stream.prefix(n - 1) + [extra], self.base)

    def forall_targets(self, window=None):
        if window is None:
            return None
        return [(n, self.germ(n)) for n in range(1, window + 1)]

    def exists_candidates(self, budget):
        for n in range(1, budget.enum + 1):
            budget.add("enum")
            yield n, self.germ(n)
        return False

    def to_json(self) -> dict:
        return {"kind": "sequence", "field": self.field.value, "base": base_json(self.base),
                "stream": self.stream.to_json(), "tail": self.tail.text}


def zero_system(stream: GeneratorStream | GermIdeal) -> ZeroSystem:
    if isinstance(stream, GermIdeal):
        stream = GeneratorStream.finite(stream)
    return ZeroSystem(stream)


def point_system(base: BasePoint, dims: Iterable[int]) -> ExplicitSystem:
    """The point-germ system restricted to the nonempty subsets of ``dims``."""
    index = DirectedIndex.subsets(dims)
    assignment = {S: SetGerm.of([base.coordinate_germ(t) for t in sorted(S)], base) for S in index.elements}
    return ExplicitSystem(index, assignment, base, validated=True)


def constant_system(germ: SetGerm) -> ExplicitSystem:
    return ExplicitSystem(DirectedIndex.single(), {"*": germ}, germ.base, validated=True)


def full_system(base: BasePoint) -> ExplicitSystem:
    return constant_system(SetGerm.full(base))


def empty_system(base: BasePoint) -> ExplicitSystem:
    return constant_system(SetGerm.empty(base))


def chain_system(base: BasePoint, germs: Sequence, budget: Budget | None = None) -> ExplicitSystem:
    """Explicit system over labels 0 < 1 < ... with the given set-germs."""
    germs = [g if isinstance(g, SetGerm) else SetGerm.of(g, base) for g in germs]
    index = DirectedIndex.chain(range(len(germs)))
    return ExplicitSystem(index, dict(enumerate(germs)), base, budget=budget)


def as_explicit(S: SystemOfGerms) -> ExplicitSystem:
    """Explicit presentation; finite zero-systems become their prefix chain."""
    if isinstance(S, ExplicitSystem):
        return S
    if isinstance(S, ZeroSystem):
        if not S.stream.is_finite:
            raise ValueError("restrict an infinite zero-system to a window before combining it")
        n = len(S.stream)
        if n == 0:
            return full_system(S.base)
        index = DirectedIndex.chain([tuple(range(j)) for j in range(1, n + 1)])
        return ExplicitSystem(index, {l: S.germ(l) for l in index.elements}, S.base, validated=True)
    raise TypeError(f"not a system: {S!r}")


def _product(A: SystemOfGerms, B: SystemOfGerms, op: Callable) -> ExplicitSystem:
    A, B = as_explicit(A), as_explicit(B)
    _same_base(A, B)
    index = DirectedIndex.product(A.index, B.index)
    assignment = {(a, b): op(A.germ(a), B.germ(b)) for a, b in index.elements}
    return ExplicitSystem(index, assignment, A.base, validated=A.validated and B.validated)


def sys_intersection(A: SystemOfGerms, B: SystemOfGerms) -> ExplicitSystem:
    return _product(A, B, SetGerm.intersection)


def sys_union(A: SystemOfGerms, B: SystemOfGerms) -> ExplicitSystem:
    return _product(A, B, SetGerm.union)


# -- comparison ----------------------------------------------------------------------


def _drain(gen):
    """Iterate a generator, returning (items, return value)."""
    items = []
    while True:
        try:
            items.append(next(gen))
        except StopIteration as stop:
            return items, stop.value


def precedes(A: SystemOfGerms, B: SystemOfGerms, budget: Budget | None = None, window: int | None = None) -> Verdict:
    """Decide A << B: for every index beta of B some A^alpha lies inside B^beta."""
    _same_base(A, B)
    budget = budget or Budget()
    start = budget.snapshot()
    targets = B.forall_targets(window)
    base_w = {"kind": "precedes", "A": A.to_json(), "B": B.to_json()}
    if window is not None:
        base_w["window"] = window
    if targets is None:
        return Verdict.unknown("the right-hand system has an infinite index set; give a window",
                               _spent(budget, start), {"frontier": 0})
    pairs = []
    pending = False
    for beta, Bb in targets:
        found = None
        refutations = []
        gen = A.exists_candidates(budget)
        exhaustive = False
        all_refuted = True
        while True:
            try:
                alpha, Aa = next(gen)
            except StopIteration as stop:
                exhaustive = bool(stop.value)
                break
            v = setgerm_contains(Aa, Bb, budget)
            if v.proved:
                found = (alpha, v)
                break
            if not v.refuted:
                all_refuted = False
            refutations.append({"alpha": label_text(alpha), "containment": v.to_json()})
        if found is not None:
            pairs.append({"beta": label_text(beta), "alpha": label_text(found[0]), "containment": found[1].to_json()})
            continue
        if exhaustive and all_refuted and refutations:
            w = dict(base_w, beta=label_text(beta), candidates=refutations)
            return Verdict(Outcome.REFUTED, w, _spent(budget, start))
        pending = True
        base_w.setdefault("open", []).append(label_text(beta))
    if pending:
        return Verdict.unknown("some index has no containing germ within budget", _spent(budget, start),
                               {"open": base_w.get("open", []), "frontier": budget.consumed.get("enum", 0)})
    return Verdict(Outcome.PROVED, dict(base_w, pairs=pairs), _spent(budget, start))


def equiv(A: SystemOfGerms, B: SystemOfGerms, budget: Budget | None = None, window: int | None = None) -> Verdict:
    budget = budget or Budget()
    start = budget.snapshot()
    fwd = precedes(A, B, budget, window)
    if fwd.refuted:
        return Verdict(Outcome.REFUTED, {"kind": "equiv", "forward": fwd.to_json()}, _spent(budget, start))
    bwd = precedes(B, A, budget, window)
    outcome = combine([fwd, bwd])
    return Verdict(outcome, {"kind": "equiv", "forward": fwd.to_json(), "backward": bwd.to_json()}, _spent(budget, start))


# -- zero ideals and point multigerms ---------------------------------------------------


def zero_ideal_member(f, A: SystemOfGerms, budget: Budget | None = None) -> Verdict:
    """Decide f in J([A]): some A^alpha lies inside Z(f)."""
    budget = budget or Budget()
    start = budget.snapshot()
    f = as_germ(f, A.base)
    Zf = SetGerm(A.base, (f,))
    gen = A.exists_candidates(budget)
    refutations = []
    all_refuted = True
    exhaustive = False
    while True:
        try:
            alpha, Aa = next(gen)
        except StopIteration as stop:
            exhaustive = bool(stop.value)
            break
        v = setgerm_contains(Aa, Zf, budget)
        if v.proved:
            w = {"kind": "zero_ideal", "f": text(f.poly), "system": A.to_json(), "alpha": label_text(alpha),
                 "containment": v.to_json()}
            return Verdict(Outcome.PROVED, w, _spent(budget, start))
        if not v.refuted:
            all_refuted = False
        refutations.append({"alpha": label_text(alpha), "containment": v.to_json()})
    w = {"kind": "zero_ideal", "f": text(f.poly), "system": A.to_json(), "candidates": refutations}
    if exhaustive and all_refuted and refutations:
        return Verdict(Outcome.REFUTED, w, _spent(budget, start))
    return Verdict.unknown("no index of the system lies inside Z(f) within budget", _spent(budget, start),
                           {"frontier": budget.consumed.get("enum", 0)})


def _coordinates_proved(alpha: list, base: BasePoint, dims: Sequence[int], budget: Budget):
    """Per-coordinate verdicts for x_t - x0_t in the (real or complex) radical of (alpha)."""
    I = GermIdeal.of(alpha, base)
    coords = [base.coordinate_germ(t) for t in dims]
    if base.field is Field.COMPLEX:
        out = []
        for c in coords:
            v = local_radical_member_complex(I, c, budget)
            out.append(v)
            if not v.proved:
                break
        return out
    results = real_radical_closure(I, coords, budget=budget)
    return [results[c] for c in coords]


def is_point_multigerm(stream: GeneratorStream, dims: Iterable[int], budget: Budget | None = None) -> Verdict:
    """Search alpha in fin(I) whose radical contains every x_t - x0_t, t in dims."""
    dims = sorted(set(dims))
    if not dims:
        raise ValueError("dims must be a nonempty finite set")
    budget = budget or Budget()
    start = budget.snapshot()
    base = stream.base
    n = len(stream) if stream.is_finite else None
    limit = budget.enum if n is None else min(n, budget.enum)
    last = None

    def check(indices):
        budget.add("enum")
        return _coordinates_proved([stream.element(j) for j in indices], base, dims, budget)

    for j in range(1, limit + 1):
        alpha = list(range(j))
        per = check(alpha)
        last = per
        if all(v.proved for v in per) and len(per) == len(dims):
            # drop generators that are not needed, keeping the first working subset
            for idx in list(alpha):
                trial = [a for a in alpha if a != idx]
                if not trial:
                    continue
                per_t = check(trial)
                if all(v.proved for v in per_t) and len(per_t) == len(dims):
                    alpha, per = trial, per_t
            w = {
                "kind": "pointgerm",
                "stream": stream.to_json(),
                "dims": dims,
                "alpha_indices": alpha,
                "alpha": texts(stream.element(a) for a in alpha),
                "per_coordinate": [v.to_json() for v in per],
            }
            return Verdict(Outcome.PROVED, w, _spent(budget, start))
    if n is not None and (n == 0 or limit == n):
        gens = stream.prefix(n)
        base_w = {"kind": "pointgerm", "stream": stream.to_json(), "dims": dims}
        if base.field is Field.COMPLEX:
            per = last if last is not None else _coordinates_proved(gens, base, dims, budget)
            for t, v in zip(dims, per):
                if v.refuted:
                    w = dict(base_w, coordinate=t, refutation=v.to_json())
                    return Verdict(Outcome.REFUTED, w, _spent(budget, start))
        else:
            variables = set(dims) | support_of(gens)
            z, _ = search_curve(gens, base, lambda c: any(t in c.components for t in dims),
                                variables, dims, budget)
            if z is not None:
                t = next(t for t in dims if t in z.components)
                cw = curve_witness(gens, base.coordinate_germ(t), z)
                w = dict(base_w, coordinate=t, refutation={"outcome": "refuted", "witness": cw, "budget_consumed": {}})
                return Verdict(Outcome.REFUTED, w, _spent(budget, start))
    return Verdict.unknown("no point-germ witness within budget", _spent(budget, start),
                           {"frontier": budget.consumed.get("enum", 0) - start.get("enum", 0)})


# -- nullstellensatz checks -----------------------------------------------------------


@dataclass(frozen=True)
class NullstellensatzReport:
    field: Field
    j_side: Verdict
    radical_side: Verdict

    @property
    def agreement(self) -> str:
        a, b = self.j_side, self.radical_side
        if a.conclusive() and b.conclusive():
            return "agree" if a.outcome is b.outcome else "disagree"
        return "consistent"

    @property
    def defect(self) -> bool:
        return self.agreement == "disagree"

    def to_json(self) -> dict:
        return {
            "kind": "nullstellensatz",
            "field": self.field.value,
            "agreement": self.agreement,
            "j_side": self.j_side.to_json(),
            "radical_side": self.radical_side.to_json(),
        }


def nullstellensatz_check(I: GermIdeal, f, budget: Budget | None = None) -> NullstellensatzReport:
    """Run f in J([Z(I)]) and f in the (real) radical of I by separate routes.

    Complex: the J-side uses elimination and the radical side the quotient
    chain. Real: the J-side may refute by curves, while the radical side
    only searches for certificates, so it is Proved or Unknown.
    """
    budget = budget or Budget()
    f = as_germ(f, I.base)
    j_side = zero_ideal_member(f, zero_system(I), budget)
    if I.field is Field.COMPLEX:
        radical_side = local_radical_by_quotients(I, f, budget)
    else:
        # certificates only: a curve would repeat the J-side's reasoning
        radical_side = real_radical_closure(I, [f], budget=budget)[f.poly]
    return NullstellensatzReport(I.field, j_side, radical_side)
