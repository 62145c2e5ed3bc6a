"""JSON witness encoding and independent replay of verdict witnesses.

Every polynomial inside a witness is stored as canonical text, so a witness
can be re-checked from its JSON alone. Replay only uses exact arithmetic:
polynomial identities, evaluation at the base point, curve composition and
Groebner normal forms.
"""

from __future__ import annotations

from fractions import Fraction

from .parser import parse_poly, print_canonical
from .poly import BasePoint, Polynomial, RationalCurve, compose_curve, evaluate, format_univariate
from .scalars import Field, GaussianRational, format_scalar


class InvalidWitness(ValueError):
    """A witness failed exact re-verification."""


# -- encoding --------------------------------------------------------------------


def text(p: Polynomial) -> str:
    return print_canonical(p)


def texts(ps) -> list:
    return [print_canonical(p) for p in ps]


def base_json(x0: BasePoint) -> dict:
    return {str(t): format_scalar(c) for t, c in x0.coords.items()}


def curve_json(z: RationalCurve) -> dict:
    return {str(t): format_univariate(c) for t, c in z.components.items()}


def membership_witness(f: Polynomial, gens, nf: Polynomial) -> dict:
    return {
        "kind": "membership",
        "field": f.field.value,
        "f": text(f),
        "generators": texts(gens),
        "normal_form": text(nf),
    }


# -- decoding --------------------------------------------------------------------


def field_of_witness(w: dict) -> Field:
    return Field.parse(w.get("field", "real"))


def poly_from(s: str, field: Field) -> Polynomial:
    return parse_poly(s, field)


def polys_from(items, field: Field) -> list:
    return [parse_poly(s, field) for s in items]


def base_from(d: dict, field: Field) -> BasePoint:
    coords = {}
    for t, v in (d or {}).items():
        c = parse_poly(v, field)
        if not c.is_constant():
            raise InvalidWitness(f"base coordinate {v!r} is not a constant")
        coords[int(t)] = c.constant_term()
    return BasePoint(coords, field)


def curve_from(d: dict, base: BasePoint) -> RationalCurve:
    comps = {}
    for t, v in d.items():
        p = parse_poly(v, Field.REAL, symbols={"s": 1})
        if p.support() - {1}:
            raise InvalidWitness(f"curve component {v!r} is not univariate in s")
        deg = max(p.degree(), 0)
        comps[int(t)] = [p.terms.get(((1, k),) if k else (), Fraction(0)) for k in range(deg + 1)]
    return RationalCurve(comps, base)
