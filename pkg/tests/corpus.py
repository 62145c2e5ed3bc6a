"""Deterministic generated corpora shared by the property and acceptance tests."""

import random
from fractions import Fraction

from germcalc.multigerm import DirectedIndex, ExplicitSystem, SetGerm
from germcalc.poly import BasePoint, Polynomial
from germcalc.scalars import Field


def _var(t, field):
    return Polynomial.var(t, field)


def cylinder_poly(rng: random.Random, field: Field, nvars: int = 3) -> Polynomial:
    """A polynomial in x_1..x_nvars vanishing at the origin."""
    i, j = rng.sample(range(1, nvars + 1), 2)
    xi, xj = _var(i, field), _var(j, field)
    shape = rng.randrange(6)
    if shape == 0:
        return xi
    if shape == 1:
        return xi - xj
    if shape == 2:
        return xi * xj
    if shape == 3:
        return xi + xj * xj
    if shape == 4:
        return xi * xi
    return xi * (xj - xi)


def random_system(rng: random.Random, base: BasePoint, nvars: int = 3) -> ExplicitSystem:
    """An antitone explicit system over at most three labels, built from nested equations."""
    field = base.field
    fresh = lambda: [cylinder_poly(rng, field, nvars) for _ in range(rng.randint(0, 1))]
    shape = rng.choice(["one", "chain2", "chain3", "vee"])
    if shape == "one":
        labels, rel = [0], {(0, 0)}
        eqs = {0: [cylinder_poly(rng, field, nvars)]}
    elif shape.startswith("chain"):
        n = int(shape[-1])
        labels = list(range(n))
        index = DirectedIndex.chain(labels)
        acc, eqs = [], {}
        for l in labels:
            acc = acc + fresh() + ([cylinder_poly(rng, field, nvars)] if l == 0 else [])
            eqs[l] = list(acc)
        return ExplicitSystem(index, {l: SetGerm.of(eqs[l], base) for l in labels}, base)
    else:
        labels = ["a", "b", "top"]
        rel = {("a", "a"), ("b", "b"), ("top", "top"), ("a", "top"), ("b", "top")}
        a = [cylinder_poly(rng, field, nvars)]
        b = [cylinder_poly(rng, field, nvars)]
        eqs = {"a": a, "b": b, "top": a + b + fresh()}
    index = DirectedIndex(labels, rel)
    return ExplicitSystem(index, {l: SetGerm.of(eqs[l], base) for l in labels}, base)


def homogeneous_poly(rng: random.Random, nvars: int, degree: int, terms: int = 2) -> Polynomial:
    out = Polynomial.zero()
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(degree):
            exps[rng.randrange(nvars)] += 1
        mono = tuple((i + 1, e) for i, e in enumerate(exps) if e)
        out = out + Polynomial({mono: Fraction(rng.choice([-2, -1, 1, 2, 3]))})
    return out


def homogeneous_corpus(seed: int = 7, count: int = 24):
    """Pairs (generators, candidates): homogeneous ideals in <= 3 variables, degree <= 3."""
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < count:
        nvars = rng.choice([2, 3])
        gens = []
        for _ in range(rng.randint(1, 2)):
            kind = rng.randrange(3)
            if kind == 0:
                t = rng.randint(1, nvars)
                gens.append(Polynomial.var(t) ** rng.randint(2, 3))  # forces a radical step
            elif kind == 1:
                a, b = rng.sample(range(1, nvars + 1), 2)
                gens.append(Polynomial.var(a) * Polynomial.var(b))
            else:
                p = homogeneous_poly(rng, nvars, rng.randint(1, 3))
                if not p.is_zero():
                    gens.append(p)
        if not gens:
            gens.append(Polynomial.var(1) ** 2)
        key = frozenset(gens)
        if key in seen:
            continue
        seen.add(key)
        candidates = [Polynomial.var(t) for t in range(1, nvars + 1)]
        candidates.append(gens[0] * Polynomial.var(1))
        candidates.append(homogeneous_poly(rng, nvars, rng.randint(1, 2)))
        candidates = [c for c in candidates if not c.is_zero()]
        out.append((gens, candidates))
    return out


def ideal_pairs(seed: int = 11, count: int = 20, field: Field = Field.COMPLEX):
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        I = [cylinder_poly(rng, field) for _ in range(rng.randint(1, 2))]
        J = [cylinder_poly(rng, field) for _ in range(rng.randint(1, 2))]
        pairs.append((I, J))
    return pairs
