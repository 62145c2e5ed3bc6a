"""Exact reasoning about ideals of polynomial germs at a point of K^T."""

from .scalars import Field, GaussianRational
from .poly import BasePoint, Polynomial, RationalCurve, evaluate
from .parser import GeneratorTemplate, ParseError, instantiate, parse_poly, parse_template, print_canonical, print_template
from .groebner import BudgetExhausted, GroebnerBasis, StepBudget, TermOrder, groebner_basis, is_member, normal_form
from .verdict import Budget, Outcome, Verdict
from .germs import (
    Germ,
    GermIdeal,
    GeneratorStream,
    NotIndexedBy,
    extend_indexing,
    is_invertible,
    local_radical_by_quotients,
    local_radical_member_complex,
    restrict,
)
from .real import RealCertificate, real_membership, real_radical_closure, refute_real_vanishing
from .multigerm import (
    DirectedIndex,
    ExplicitSystem,
    SequenceSystem,
    SetGerm,
    ZeroSystem,
    equiv,
    is_point_multigerm,
    nullstellensatz_check,
    point_system,
    precedes,
    setgerm_contains,
    sys_intersection,
    sys_union,
    zero_ideal_member,
    zero_system,
)
from .verify import verify_verdict
from .witness import InvalidWitness

__version__ = "0.1.0"
