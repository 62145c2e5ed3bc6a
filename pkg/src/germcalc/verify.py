"""Replay of verdict witnesses from their JSON form.

``verify_verdict`` takes a serialized Proved or Refuted verdict, rebuilds
every polynomial from canonical text, and re-checks the claim with exact
arithmetic. Refuted local-radical claims are re-derived by the other
decision route, so a verdict is never confirmed by the code that made it.
"""

from __future__ import annotations

import functools
import json

from .germs import (
    GermIdeal,
    GeneratorStream,
    as_germ,
    local_radical_by_quotients,
    local_radical_member_complex,
)
from .groebner import default_order, groebner_basis, normal_form, s_polynomials_reduce_to_zero
from .parser import parse_template
from .poly import BasePoint, Polynomial, evaluate
from .real import RealCertificate, check_curve
from .scalars import Field
from .verdict import Budget, Outcome, Verdict
from .witness import InvalidWitness, base_from, curve_from, field_of_witness, poly_from, polys_from, texts


def _require(cond: bool, message: str):
    if not cond:
        raise InvalidWitness(message)


def _ideal_contains(f: Polynomial, gens: list) -> bool:
    """Recompute a basis, check Buchberger's criterion on it, and reduce ``f``."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return f.is_zero()
    G = groebner_basis(gens, None, default_order(gens + [f]))
    _require(s_polynomials_reduce_to_zero(G), "recomputed basis fails Buchberger's criterion")
    _require(all(normal_form(g, G).is_zero() for g in gens), "recomputed basis misses a generator")
    return normal_form(f, G).is_zero()


def _same_polys(a: list, b: list) -> bool:
    return sorted(texts(a)) == sorted(texts(b))


# -- per-kind checks ------------------------------------------------------------------


def _membership(w: dict, outcome: Outcome):
    F = field_of_witness(w)
    f = poly_from(w["f"], F)
    gens = polys_from(w["generators"], F)
    inside = _ideal_contains(f, gens)
    _require(inside == (outcome is Outcome.PROVED), "membership does not replay")
    if outcome is Outcome.REFUTED:
        nf = poly_from(w["normal_form"], F)
        _require(not nf.is_zero(), "refutation with a zero normal form")
        _require(_ideal_contains(f - nf, gens), "reported normal form is not congruent to f")


def _local_radical(w: dict, outcome: Outcome):
    F = field_of_witness(w)
    base = base_from(w["base"], F)
    f = poly_from(w["f"], F)
    gens = polys_from(w["generators"], F)
    if outcome is Outcome.PROVED:
        e = poly_from(w["multiplier"], F)
        n = int(w["exponent"])
        _require(evaluate(e, base) != 0, "multiplier vanishes at the base point")
        _require(n >= 0, "negative exponent")
        _require(_ideal_contains(e * f ** n, gens), "multiplier times f^n is not in the ideal")
        return
    basis = polys_from(w.get("elimination_basis", w.get("saturation_basis", [])), F)
    _require(all(evaluate(g, base) == 0 for g in basis), "a listed basis element is nonzero at the base point")
    I = GermIdeal.of(gens, base)
    # re-derive with the route that did not produce the witness
    if "elimination_basis" in w:
        other = local_radical_by_quotients(I, f, Budget())
    else:
        other = local_radical_member_complex(I, f, Budget())
    _require(other.refuted, f"independent route does not refute (got {other.outcome.value})")


def _certificate_from(c: dict, base: BasePoint) -> RealCertificate:
    F = Field.REAL
    ctx = GermIdeal.of(polys_from(c["context"], F), base)
    return RealCertificate(as_germ(poly_from(c["target"], F), base), int(c["m"]), tuple(polys_from(c["b"], F)), ctx)


def _real_certificate(w: dict, outcome: Outcome):
    c = w["certificate"]
    base = BasePoint({}, Field.REAL)
    cert = _certificate_from(c, base)
    inside = _ideal_contains(cert.combination(), cert.context.polys)
    _require(inside == (outcome is Outcome.PROVED), "certificate combination does not replay")


def _real_closure(w: dict, outcome: Outcome):
    _require(outcome is Outcome.PROVED, "closure verdicts are never refutations")
    F = Field.REAL
    base = base_from(w["base"], F)
    ideal = polys_from(w["ideal"], F)
    target = poly_from(w["target"], F)
    known = list(ideal)
    for step in w["derivation"]:
        rule = step["rule"]
        if rule == "R3":
            cert = _certificate_from(step["certificate"], base)
            ctx = cert.context.polys
            derived = cert.target.poly
            _require(cert.m >= 1, "certificate exponent must be positive")
            _require(all(any(p == q for q in known) for p in ctx), "certificate context uses an underived germ")
            _require(_ideal_contains(cert.combination(), ctx), "certificate combination is not in its context")
        else:
            ctx = polys_from(step["context"], F)
            derived = poly_from(step["target"], F)
            _require(all(any(p == q for q in known) for p in ctx), f"{rule} context uses an underived germ")
            if rule in ("R1", "R2"):
                _require(_ideal_contains(derived, ctx), f"{rule} step target is not in its context")
            elif rule == "CX":
                e = poly_from(step["multiplier"], F)
                n = int(step["exponent"])
                _require(evaluate(e, base) != 0, "CX multiplier vanishes at the base point")
                _require(_ideal_contains(e * derived ** n, ctx), "CX product is not in its context")
            else:
                raise InvalidWitness(f"unknown closure rule {rule!r}")
        known.append(derived)
    _require(any(p == target for p in known[len(ideal):]) or _ideal_contains(target, ideal),
             "derivation does not reach the target")


def _curve(w: dict, outcome: Outcome):
    _require(outcome is Outcome.REFUTED, "curves only refute")
    F = Field.REAL
    base = base_from(w["base"], F)
    z = curve_from(w["curve"], base)
    gens = polys_from(w["generators"], F)
    f = poly_from(w["f"], F)
    _require(check_curve(gens, f, z), "curve leaves the zero set or f vanishes on it")


@functools.lru_cache(maxsize=4096)
def _verify_text(claim: str) -> bool:
    # sub-claims repeat across witnesses of one report; a check is a pure function of its text
    return verify_verdict(json.loads(claim))


def _sub(vjson: dict) -> Verdict:
    v = Verdict.from_json(vjson)
    if v.conclusive():
        _verify_text(json.dumps(vjson, sort_keys=True))
    return v


def _containment(w: dict, outcome: Outcome):
    F = field_of_witness(w)
    A = polys_from(w["A"], F)
    B = polys_from(w["B"], F)
    per = w["per_generator"]
    subs = [_sub(p) for p in per]
    for b, sub in zip(B, subs):
        if sub.conclusive():
            _require(_claims_about(sub, A, b), "per-generator verdict is about a different ideal or germ")
    if outcome is Outcome.PROVED:
        _require(len(subs) == len(B) and all(s.proved for s in subs), "some generator is not proved")
    else:
        _require(any(s.refuted for s in subs), "no refuted generator")


def _claims_about(v: Verdict, gens: list, f: Polynomial) -> bool:
    w = v.witness
    kind = w.get("kind")
    F = f.field
    if kind in ("local_radical", "curve"):
        return _same_polys(polys_from(w["generators"], F), [g for g in gens if not g.is_zero()]) and poly_from(w["f"], F) == f
    if kind == "real_closure":
        return _same_polys(polys_from(w["ideal"], F), gens) and poly_from(w["target"], F) == f
    return False


# -- systems ----------------------------------------------------------------------


def stream_from_json(d: dict) -> GeneratorStream:
    F = Field.parse(d["field"])
    base = base_from(d["base"], F)
    if d["kind"] == "finite":
        return GeneratorStream(base, finite=polys_from(d["generators"], F))
    return GeneratorStream(base, templates=[parse_template(t) for t in d["templates"]], centered=d.get("centered", False))


def system_from_json(d: dict):
    return _system_from_text(json.dumps(d, sort_keys=True))


@functools.lru_cache(maxsize=1024)
def _system_from_text(text_: str):
    from .multigerm import DirectedIndex, ExplicitSystem, SequenceSystem, ZeroSystem

    d = json.loads(text_)
    F = Field.parse(d["field"])
    base = base_from(d["base"], F)
    kind = d["kind"]
    if kind == "zero":
        return ZeroSystem(stream_from_json(d["stream"]))
    if kind == "sequence":
        return SequenceSystem(stream_from_json(d["stream"]), parse_template(d["tail"]))
    if kind == "explicit":
        index = DirectedIndex(d["index"]["labels"], [tuple(p) for p in d["index"]["relation"]])
        germs = {l: polys_from(d["germs"][l], F) for l in index.elements}
        # a claimed validation is re-established, not trusted
        sys_ = ExplicitSystem(index, germs, base, validate=d.get("validated", False), strict=d.get("strict", True))
        _require(sys_.validated == d.get("validated", False), "system validation does not replay")
        return sys_
    raise InvalidWitness(f"unknown system kind {kind!r}")


def _germ_of(S, label: str):
    from .multigerm import label_text

    if S.kind == "explicit":
        return S.germ(label)
    if S.kind == "sequence":
        return S.germ(int(label))
    # zero systems: labels are tuples of stream indices
    inner = label.strip("()")
    idx = tuple(int(x) for x in inner.split(",") if x.strip())
    _require(label_text(idx) == label, f"malformed zero-system label {label!r}")
    return S.germ(idx)


def _check_containment_between(vjson: dict, A_germ, B_germ):
    v = _sub(vjson)
    w = v.witness
    F = A_germ.field
    _require(_same_polys(polys_from(w["A"], F), A_germ.polys), "containment is about a different germ")
    _require(_same_polys(polys_from(w["B"], F), B_germ.polys), "containment is about a different germ")
    return v


def _precedes(w: dict, outcome: Outcome):
    from .multigerm import label_text

    A = system_from_json(w["A"])
    B = system_from_json(w["B"])
    window = w.get("window")
    targets = B.forall_targets(window)
    _require(targets is not None, "for-all side is not finite")
    if outcome is Outcome.PROVED:
        by_beta = {p["beta"]: p for p in w["pairs"]}
        for beta, Bb in targets:
            p = by_beta.get(label_text(beta))
            _require(p is not None, f"no containing germ given for index {label_text(beta)}")
            Aa = _germ_of(A, p["alpha"])
            v = _check_containment_between(p["containment"], Aa, Bb)
            _require(v.proved, "pair containment is not proved")
        return
    beta = w["beta"]
    _require(beta in {label_text(b) for b, _ in targets}, "refuted index is not in the for-all range")
    Bb = _germ_of(B, beta)
    budget = Budget(enum=10 ** 6)
    candidates, exhaustive = [], False
    gen = A.exists_candidates(budget)
    while True:
        try:
            candidates.append(label_text(next(gen)[0]))
        except StopIteration as stop:
            exhaustive = bool(stop.value)
            break
    _require(exhaustive, "exists side is not exhaustive")
    given = {c["alpha"]: c for c in w["candidates"]}
    for alpha in candidates:
        c = given.get(alpha)
        _require(c is not None, f"candidate {alpha} has no refutation")
        v = _check_containment_between(c["containment"], _germ_of(A, alpha), Bb)
        _require(v.refuted, "candidate containment is not refuted")


def _equiv(w: dict, outcome: Outcome):
    subs = [Verdict.from_json(w["forward"])]
    if "backward" in w:
        subs.append(Verdict.from_json(w["backward"]))
    for s in subs:
        if s.conclusive():
            verify_verdict(s.to_json())
    if outcome is Outcome.PROVED:
        _require(len(subs) == 2 and all(s.proved for s in subs), "both directions must be proved")
    else:
        _require(any(s.refuted for s in subs), "no refuted direction")


def _pointgerm(w: dict, outcome: Outcome):
    stream = stream_from_json(w["stream"])
    base = stream.base
    dims = [int(t) for t in w["dims"]]
    coords = [base.coordinate_germ(t) for t in dims]
    if outcome is Outcome.PROVED:
        alpha = [stream.element(j) for j in w["alpha_indices"]]
        _require(_same_polys(alpha, polys_from(w["alpha"], stream.field)), "alpha does not match the stream")
        per = [_sub(p) for p in w["per_coordinate"]]
        _require(len(per) == len(dims) and all(v.proved for v in per), "some coordinate is not proved")
        for c, v in zip(coords, per):
            _require(_claims_about(v, alpha, c), "coordinate verdict is about a different ideal")
        return
    _require(stream.is_finite, "refutation needs a finite stream")
    t = int(w["coordinate"])
    _require(t in dims, "refuted coordinate is outside dims")
    gens = stream.prefix(len(stream))
    v = _sub(w["refutation"])
    _require(v.refuted, "coordinate is not refuted")
    vw = v.witness
    _require(_same_polys(polys_from(vw["generators"], stream.field), [g for g in gens if not g.is_zero()]),
             "refutation is about a different ideal")
    if vw["kind"] == "curve":
        # the curve moves x_t, so x_t - x0_t does not vanish on it
        z = curve_from(vw["curve"], base)
        _require(t in z.components, "curve does not move the refuted coordinate")
    else:
        _require(poly_from(vw["f"], stream.field) == base.coordinate_germ(t), "refutation targets another germ")


def _zero_ideal(w: dict, outcome: Outcome):
    S = system_from_json(w["system"])
    F = S.field
    f = poly_from(w["f"], F)
    from .multigerm import SetGerm

    Zf = SetGerm.of([f], S.base)
    if outcome is Outcome.PROVED:
        v = _check_containment_between(w["containment"], _germ_of(S, w["alpha"]), Zf)
        _require(v.proved, "containment is not proved")
        return
    from .multigerm import label_text

    budget = Budget(enum=10 ** 6)
    gen = S.exists_candidates(budget)
    labels = []
    while True:
        try:
            labels.append(label_text(next(gen)[0]))
        except StopIteration as stop:
            _require(bool(stop.value), "exists side is not exhaustive")
            break
    given = {c["alpha"]: c for c in w["candidates"]}
    for l in labels:
        _require(l in given, f"candidate {l} has no refutation")
        v = _check_containment_between(given[l]["containment"], _germ_of(S, l), Zf)
        _require(v.refuted, "candidate containment is not refuted")


def _nullstellensatz(w: dict, outcome: Outcome):
    for side in ("j_side", "radical_side"):
        v = Verdict.from_json(w[side])
        if v.conclusive():
            verify_verdict(v.to_json())


_CHECKS = {
    "membership": _membership,
    "local_radical": _local_radical,
    "real_certificate": _real_certificate,
    "real_closure": _real_closure,
    "curve": _curve,
    "containment": _containment,
    "precedes": _precedes,
    "equiv": _equiv,
    "pointgerm": _pointgerm,
    "zero_ideal": _zero_ideal,
    "nullstellensatz": _nullstellensatz,
}


def verify_verdict(data: dict) -> bool:
    """Re-check a serialized verdict; raises InvalidWitness on failure.

    Unknown verdicts carry no claim and are rejected as unverifiable.
    """
    if "kind" in data and "outcome" not in data:
        # a bare nullstellensatz report
        _nullstellensatz(data, Outcome.PROVED)
        return True
    outcome = Outcome(data["outcome"])
    if outcome is Outcome.UNKNOWN:
        raise InvalidWitness("an Unknown verdict has nothing to verify")
    w = data.get("witness") or {}
    check = _CHECKS.get(w.get("kind"))
    if check is None:
        raise InvalidWitness(f"unknown witness kind {w.get('kind')!r}")
    try:
        check(w, outcome)
    except InvalidWitness:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidWitness(f"malformed witness: {exc}") from exc
    return True
