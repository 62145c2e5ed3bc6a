"""Acceptance gate: one test per criterion, each timed against its limit.

Every conclusive verdict produced by criteria 1-6 is collected and replayed
through the command-line verifier in criterion 9.
"""

import functools
import itertools
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

from germcalc.germs import GermIdeal, GeneratorStream, local_radical_member_complex
from germcalc.groebner import (
    TermOrder,
    groebner_basis,
    is_member,
    macaulay_membership_oracle,
    s_polynomials_reduce_to_zero,
)
from germcalc.multigerm import (
    empty_system,
    equiv,
    full_system,
    is_point_multigerm,
    precedes,
    sys_intersection,
    sys_union,
    zero_ideal_member,
    zero_system,
)
from germcalc.parser import instantiate, parse_poly, parse_template, print_canonical, print_template
from germcalc.poly import BasePoint, Polynomial
from germcalc.real import real_membership, real_radical_closure, refute_real_vanishing
from germcalc.scalars import Field, GaussianRational
from germcalc.verdict import Budget
from germcalc.verify import verify_verdict

import conftest
from corpus import cylinder_poly, homogeneous_corpus, ideal_pairs, random_system

R, C = Field.REAL, Field.COMPLEX
FAMILY = "x_{2k+1}^2 + (x_{2k+2} - x_{2k+3})^2"
SHIFT = "x_{k+1} - x_{k+2}"
RABINOWITSCH_VAR = 99


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def conclusive(verdicts):
    return [v for v in verdicts if v.conclusive()]


def to_complex(p: Polynomial) -> Polynomial:
    return Polynomial({m: GaussianRational(c) for m, c in p.terms.items()}, C)


# -- criterion bodies, cached so criterion 9 can reuse their verdicts


@functools.lru_cache(maxsize=None)
def criterion_1():
    out = []
    with Timer() as t:
        for field in (R, C):
            stream = GeneratorStream.coordinates(BasePoint.origin(field))
            for r in range(1, 6):
                for dims in itertools.combinations(range(1, 6), r):
                    v = is_point_multigerm(stream, dims, Budget(enum=32))
                    out.append((dims, v))
    return out, t.seconds


@functools.lru_cache(maxsize=None)
def criterion_2():
    O = BasePoint.origin(R)
    fam = GeneratorStream.templated([parse_template(FAMILY)], O)
    prefixes, full = [], []
    with Timer() as t:
        for k in range(1, 5):
            prefixes.append((k, is_point_multigerm(fam.window(k), range(1, 2 * k + 2))))
        for n in (3, 5):
            full.append((n, is_point_multigerm(fam, range(1, n + 1))))
    return prefixes, full, t.seconds


@functools.lru_cache(maxsize=None)
def criterion_3():
    rows = []
    with Timer() as t:
        for gens, candidates in homogeneous_corpus():
            gens_c = [to_complex(g) for g in gens]
            O = BasePoint.origin(C)
            I = GermIdeal.of(gens_c, O)
            Z = zero_system(I)
            for cand in candidates:
                f = to_complex(cand)
                zv = zero_ideal_member(f, Z)
                rv = local_radical_member_complex(I, f)
                u = Polynomial.var(RABINOWITSCH_VAR, C)
                oracle = macaulay_membership_oracle(
                    Polynomial.one(C), gens_c + [Polynomial.one(C) - u * f], degree_bound=8
                )
                rows.append((gens_c, f, zv, rv, oracle))
    return rows, t.seconds


def _real_corpus():
    O = BasePoint.origin(R)
    cases = []
    for gens, candidates in homogeneous_corpus(seed=21, count=12):
        cases += [(gens, c) for c in candidates]
    fam0 = parse_poly("x_1^2 + (x_2 - x_3)^2")
    for f in ("x_1", "x_2", "x_2 - x_3", "x_1 + x_2 - x_3", "x_4", "x_1*x_4"):
        cases.append(([fam0], parse_poly(f)))
    rng = random.Random(5)
    for I, J in ideal_pairs(seed=13, count=15, field=R):
        cases.append((I, J[0]))
    cases.append(([parse_poly("x_1^2 + x_2^2")], parse_poly("x_1 + 2*x_2")))
    cases.append(([parse_poly("x_1^4 + x_2^2*x_3^2")], parse_poly("x_1")))
    cases.append(([parse_poly("x_1^3 - x_2^2")], cylinder_poly(rng, R)))
    return [(GermIdeal.of(g, O), f) for g, f in cases]


@functools.lru_cache(maxsize=None)
def criterion_4():
    results = []
    for I, f in _real_corpus():
        proofs = [real_membership(I, f), real_radical_closure(I, [f])[f]]
        refutes = [refute_real_vanishing(I, f)]
        results.append((I, f, proofs, refutes))
    return results


@functools.lru_cache(maxsize=None)
def criterion_5():
    O = BasePoint.origin(C)
    rng = random.Random(2024)
    systems = [random_system(rng, O) for _ in range(50)]
    laws = []
    with Timer() as t:
        E, F = empty_system(O), full_system(O)
        for i, A in enumerate(systems):
            B, D = systems[(i + 1) % 50], systems[(i + 7) % 50]
            cup, cap = sys_union, sys_intersection
            laws += [
                ("union commutes", equiv(cup(A, B), cup(B, A))),
                ("meet commutes", equiv(cap(A, B), cap(B, A))),
                ("union associates", equiv(cup(cup(A, B), D), cup(A, cup(B, D)))),
                ("meet associates", equiv(cap(cap(A, B), D), cap(A, cap(B, D)))),
                ("union idempotent", equiv(cup(A, A), A)),
                ("meet idempotent", equiv(cap(A, A), A)),
                ("union identity", equiv(cup(A, E), A)),
                ("meet identity", equiv(cap(A, F), A)),
                ("union absorbs", equiv(cup(A, cap(A, B)), A)),
                ("meet absorbs", equiv(cap(A, cup(A, B)), A)),
            ]
        matrix = [[precedes(A, B) for B in systems] for A in systems]
    return systems, laws, matrix, t.seconds


@functools.lru_cache(maxsize=None)
def criterion_6():
    O = BasePoint.origin(C)
    out = []
    with Timer() as t:
        for I, J in ideal_pairs():
            ZIJ = zero_system(GermIdeal.of(I + J, O))
            meet = sys_intersection(zero_system(GermIdeal.of(I, O)), zero_system(GermIdeal.of(J, O)))
            out.append((precedes(ZIJ, meet), precedes(meet, ZIJ)))
    return out, t.seconds


# -- criteria


def test_criterion_1_coordinate_stream_is_point_multigerm():
    rows, seconds = criterion_1()
    assert len(rows) == 62
    for dims, v in rows:
        assert v.proved, (dims, v)
        assert v.witness["alpha"] == [f"x_{t}" for t in dims]
        assert v.budget_consumed["enum"] <= 32
    assert seconds < 5, seconds


def test_criterion_2_family_prefixes_fail_but_stream_succeeds():
    prefixes, full, seconds = criterion_2()
    for k, v in prefixes:
        assert v.refuted, k
        curve = v.witness["refutation"]["witness"]["curve"]
        assert curve == {str(2 * k): "s", str(2 * k + 1): "s"}
    for n, v in full:
        assert v.proved, n
        assert v.witness["alpha_indices"] == list(range((n + 1) // 2))
        for entry in v.witness["per_coordinate"]:
            w = entry["witness"]
            assert w["kind"] == "real_closure"
            assert {step["rule"] for step in w["derivation"]} <= {"R1", "R2", "R3"}
    assert seconds < 30, seconds


def test_criterion_3_complex_nullstellensatz_coherence():
    rows, seconds = criterion_3()
    assert len({tuple(map(print_canonical, r[0])) for r in rows}) >= 20
    both = oracle_hits = 0
    for gens, f, zv, rv, oracle in rows:
        if zv.conclusive() and rv.conclusive():
            both += 1
            assert zv.outcome is rv.outcome, (gens, f)
        if oracle.proved:
            oracle_hits += 1
            assert not zv.refuted and not rv.refuted, (gens, f)
    assert both >= len(rows) * 0.9 and oracle_hits > 0
    assert seconds < 120, seconds


def test_criterion_4_real_soundness_exclusion():
    pairs = 0
    for I, f, proofs, refutes in criterion_4():
        proved = [v for v in proofs if v.proved and verify_verdict(json.loads(v.dumps()))]
        refuted = [v for v in refutes if v.refuted and verify_verdict(json.loads(v.dumps()))]
        assert not (proved and refuted), (I.polys, f)
        pairs += 1
    assert pairs >= 50
    assert conftest.REAL_VERDICTS, "the real audit hook saw nothing"
    assert conftest.soundness_violations() == []


def test_criterion_5_multigerm_lattice():
    systems, laws, matrix, seconds = criterion_5()
    bad = [name for name, v in laws if not v.proved]
    assert not bad, bad
    n = len(systems)
    assert all(matrix[i][i].proved for i in range(n))
    assert all(not matrix[i][j].unknown_ for i in range(n) for j in range(n))
    le = [[matrix[i][j].proved for j in range(n)] for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        if le[i][j] and le[j][k]:
            assert le[i][k], (i, j, k)
    assert seconds < 120, seconds


def test_criterion_6_sum_law():
    rows, seconds = criterion_6()
    assert len(rows) == 20
    for forward, backward in rows:
        assert forward.proved and backward.proved
    assert seconds < 60, seconds


def test_criterion_7_groebner_kernel():
    for gens, candidates in homogeneous_corpus():
        G = groebner_basis(gens)
        assert s_polynomials_reduce_to_zero(G)
        again = groebner_basis(list(G.generators), order=G.order)
        assert again.generators == G.generators
        variables = sorted(set().union(*(g.support() for g in gens + candidates)))
        orders = [TermOrder.grevlex(variables), TermOrder.grevlex(variables[::-1]),
                  TermOrder.elimination(variables[:1], variables[1:])]
        for f in candidates:
            outcomes = set()
            for order in orders:
                H = groebner_basis(gens, order=order)
                assert s_polynomials_reduce_to_zero(H)
                outcomes.add(is_member(f, gens, order=order).outcome)
            assert len(outcomes) == 1
            u = Polynomial.var(RABINOWITSCH_VAR)
            assert s_polynomials_reduce_to_zero(groebner_basis(gens + [Polynomial.one() - u * f]))


def _random_poly(rng: random.Random, field: Field) -> Polynomial:
    p = Polynomial.zero(field)
    for _ in range(rng.randint(0, 5)):
        mono = Polynomial.one(field)
        for _ in range(rng.randint(0, 4)):
            mono = mono * Polynomial.var(rng.randint(1, 12), field)
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if field is C:
            c = GaussianRational(c, Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
        p = p + Polynomial.constant(c, field) * mono
    return p


def test_criterion_8_parser_round_trip():
    rng = random.Random(8)
    for n in range(100):
        field = C if n % 4 == 3 else R
        p = _random_poly(rng, field)
        text = print_canonical(p)
        q = parse_poly(text, field)
        assert q == p and print_canonical(q) == text
    for src in (FAMILY, SHIFT):
        t = parse_template(src)
        t2 = parse_template(print_template(t))
        assert t2.body == t.body and print_template(t2) == print_template(t)
    fam = parse_template(FAMILY)
    assert instantiate(fam, 0) == parse_poly("x_1^2+(x_2-x_3)^2")
    assert instantiate(fam, 1) == parse_poly("x_3^2+(x_4-x_5)^2")


def _all_conclusive():
    out = [v for _, v in criterion_1()[0]]
    prefixes, full, _ = criterion_2()
    out += [v for _, v in prefixes] + [v for _, v in full]
    for _, _, zv, rv, _ in criterion_3()[0]:
        out += [zv, rv]
    for _, _, proofs, refutes in criterion_4():
        out += proofs + refutes
    _, laws, matrix, _ = criterion_5()
    out += [v for _, v in laws] + [v for row in matrix for v in row]
    for pair in criterion_6()[0]:
        out += list(pair)
    return conclusive(out)


def test_criterion_9_witness_replay(tmp_path):
    verdicts = _all_conclusive()
    assert len(verdicts) > 500
    path = tmp_path / "verdicts.jsonl"
    path.write_text("".join(v.dumps() + "\n" for v in verdicts), encoding="utf-8")
    p = subprocess.run([sys.executable, "-m", "germcalc", "verify-witness", str(path)],
                       capture_output=True, text=True, timeout=1200)
    statuses = [json.loads(line) for line in p.stdout.splitlines()]
    failures = [s for s in statuses if not s["valid"]]
    assert not failures, failures[:3]
    assert len(statuses) == len(verdicts)
    assert p.returncode == 0
