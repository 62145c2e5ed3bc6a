import copy
import json

import pytest

from germcalc.germs import GermIdeal, GeneratorStream, local_radical_member_complex, member
from germcalc.multigerm import (
    SetGerm,
    chain_system,
    equiv,
    is_point_multigerm,
    nullstellensatz_check,
    point_system,
    precedes,
    setgerm_contains,
    zero_ideal_member,
    zero_system,
)
from germcalc.parser import parse_poly, parse_template
from germcalc.poly import BasePoint
from germcalc.real import real_membership, refute_real_vanishing
from germcalc.scalars import Field
from germcalc.verdict import Budget
from germcalc.verify import verify_verdict
from germcalc.witness import InvalidWitness

R, C = Field.REAL, Field.COMPLEX
FAMILY = "x_{2k+1}^2 + (x_{2k+2} - x_{2k+3})^2"


def roundtrip(v):
    return json.loads(json.dumps(v.to_json(), sort_keys=True))


def ideal(*gens, field=R):
    return GermIdeal.of([parse_poly(g, field) for g in gens], BasePoint.origin(field))


def verdicts():
    O_R, O_C = BasePoint.origin(R), BasePoint.origin(C)
    fam = GeneratorStream.templated([parse_template(FAMILY)], O_R)
    yield "member-proved", member(ideal("x_1", "x_2", field=C), parse_poly("x_1*x_2 + x_2", C))
    yield "member-refuted", member(ideal("x_1^2", field=C), parse_poly("x_1", C))
    yield "radical-proved", local_radical_member_complex(ideal("x_1^2", field=C), parse_poly("x_1", C))
    yield "radical-refuted", local_radical_member_complex(ideal("x_1*x_2", field=C), parse_poly("x_1", C))
    yield "real-closure", real_membership(ideal("x_1^2 + (x_2 - x_3)^2"), parse_poly("x_2 - x_3"))
    yield "curve", refute_real_vanishing(ideal("x_1^2 + (x_2 - x_3)^2"), parse_poly("x_2"))
    yield "containment", setgerm_contains(
        SetGerm.of([parse_poly("x_1*x_2", C)], O_C), SetGerm.of([parse_poly("x_1", C)], O_C)
    )
    A = chain_system(O_C, [[parse_poly("x_1", C)], [parse_poly("x_1", C), parse_poly("x_2", C)]])
    yield "precedes", precedes(point_system(O_C, [1, 2]), A)
    yield "precedes-refuted", precedes(A, point_system(O_C, [1, 2]))
    yield "equiv", equiv(zero_system(ideal("x_1", field=C)), zero_system(ideal("x_1^2", field=C)))
    yield "pointgerm", is_point_multigerm(fam, [1, 2, 3])
    yield "pointgerm-refuted", is_point_multigerm(fam.window(1), [1, 2, 3])
    yield "zero-ideal", zero_ideal_member(parse_poly("x_1", C), zero_system(ideal("x_1^2", field=C)))


CASES = list(verdicts())


@pytest.mark.parametrize("name,verdict", CASES, ids=[c[0] for c in CASES])
def test_conclusive_verdicts_replay(name, verdict):
    assert verdict.conclusive
    assert verify_verdict(roundtrip(verdict))


def test_nullstellensatz_report_replays():
    r = nullstellensatz_check(ideal("x_1^2", field=C), parse_poly("x_1", C))
    assert verify_verdict(json.loads(json.dumps(r.to_json())))


def test_unknown_is_rejected():
    fam = GeneratorStream.templated([parse_template(FAMILY)], BasePoint.origin(C))
    v = is_point_multigerm(fam, [1], Budget(enum=4))
    assert v.unknown_
    with pytest.raises(InvalidWitness):
        verify_verdict(roundtrip(v))


def _tamper(name, mutate):
    data = copy.deepcopy(roundtrip(dict(CASES)[name]))
    mutate(data)
    with pytest.raises(InvalidWitness):
        verify_verdict(data)


def test_flipped_outcome_is_rejected():
    def flip(d):
        d["outcome"] = "refuted" if d["outcome"] == "proved" else "proved"

    for name in ("member-proved", "member-refuted", "radical-proved", "radical-refuted", "curve"):
        _tamper(name, flip)


def test_tampered_multiplier_is_rejected():
    _tamper("radical-proved", lambda d: d["witness"].update(exponent=0))


def test_tampered_curve_is_rejected():
    _tamper("curve", lambda d: d["witness"].update(curve={"2": "s", "3": "2*s"}))


def test_tampered_derivation_is_rejected():
    def drop_context(d):
        for step in d["witness"]["derivation"]:
            holder = step.get("certificate", step)
            holder["context"] = ["x_5"]

    _tamper("real-closure", drop_context)


def test_unknown_kind_is_rejected():
    _tamper("member-proved", lambda d: d["witness"].update(kind="oracle"))


def test_malformed_polynomial_is_rejected():
    _tamper("member-proved", lambda d: d["witness"].update(f="x_1 +"))


def test_certificate_with_wrong_sign_is_rejected():
    def negate(d):
        d["witness"]["derivation"][0]["certificate"]["b"] = ["x_2 + x_3"]

    _tamper("real-closure", negate)
