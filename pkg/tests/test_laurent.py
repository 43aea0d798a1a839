"""Tests for Laurent polynomial arithmetic, cluster mutation and characters."""

import random

import pytest

from gradalg.errors import (
    GradalgError,
    InexactDivision,
    MissingEmptySubmodule,
    NonHomogeneous,
    ZeroPolynomial,
)
from gradalg.intlin import FgAbelianGroup, IntMatrix
from gradalg.laurent import (
    ClusterState,
    LaurentPoly,
    degree_of,
    divide_exact,
    evaluate_cluster_character,
    initial_state,
    mutate_cluster,
)
from gradalg.seedcore import Grading, Seed

Z = FgAbelianGroup((0,))

MARKOV_B = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
A2_B = [[0, 1], [-1, 0]]
A3_B = [[0, -1, 0], [1, 0, -1], [0, 1, 0]]


def test_basic_arithmetic():
    x = LaurentPoly.monomial(2, (1, 0))
    y = LaurentPoly.monomial(2, (0, 1))
    p = x + y
    assert p.terms == {(1, 0): 1, (0, 1): 1}
    q = p * p
    assert q.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (x ** 3).terms == {(3, 0): 1}
    assert (p - p).terms == {}
    inv = LaurentPoly.monomial(2, (-1, -1))
    assert (x * inv).terms == {(0, -1): 1}


def test_zero_coefficients_dropped():
    p = LaurentPoly(2, {(0, 0): 1, (1, 0): 0})
    assert p.terms == {(0, 0): 1}


def test_serialize_sorted_and_stable():
    p = LaurentPoly(2, {(-1, 1): 1, (-1, 0): 1})
    assert p.serialize() == "1:-1,0;1:-1,1"
    assert LaurentPoly.zero(2).serialize() == "0"
    assert LaurentPoly(1, {(3,): -2}).serialize() == "-2:3"


def test_divide_exact():
    x = LaurentPoly.monomial(2, (1, 0))
    y = LaurentPoly.monomial(2, (0, 1))
    p = (x + y) * (x * x + y)
    assert divide_exact(p, x + y) == x * x + y
    assert divide_exact(p, x * x + y) == x + y
    # Laurent shifts are handled
    shifted = p * LaurentPoly.monomial(2, (-5, 2))
    assert divide_exact(shifted, x + y) == (x * x + y) * LaurentPoly.monomial(2, (-5, 2))


def test_divide_by_monomial_is_always_exact():
    # monomials are units in the Laurent ring
    x = LaurentPoly.monomial(2, (1, 0))
    y = LaurentPoly.monomial(2, (0, 1))
    assert divide_exact(x + y, x).terms == {(0, 0): 1, (-1, 1): 1}


def test_divide_exact_failures():
    x = LaurentPoly.monomial(2, (1, 0))
    y = LaurentPoly.monomial(2, (0, 1))
    with pytest.raises(InexactDivision):
        divide_exact(x * x + y, x + y)
    with pytest.raises(InexactDivision):
        divide_exact(x + y, LaurentPoly.constant(2, 2))
    with pytest.raises(ZeroPolynomial):
        divide_exact(x, LaurentPoly.zero(2))


def test_divide_exact_randomized():
    rng = random.Random(2024)
    for _ in range(200):
        nvars = rng.randint(1, 3)
        f = random_poly(rng, nvars)
        g = random_poly(rng, nvars)
        if not g.terms:
            continue
        product = f * g
        assert divide_exact(product, g) == f


def test_initial_state_and_a2_mutation():
    seed = Seed(A2_B)
    state = initial_state(seed)
    assert [v.serialize() for v in state.variables] == ["1:1,0", "1:0,1"]
    out = mutate_cluster(state, 1)
    # (1 + x2) / x1
    assert out.variables[0].terms == {(-1, 0): 1, (-1, 1): 1}
    assert out.variables[1].terms == {(0, 1): 1}
    assert out.seed.matrix == IntMatrix([[0, -1], [1, 0]])


def test_a2_pentagon():
    seed = Seed(A2_B)
    state = initial_state(seed)
    seen = {v.serialize() for v in state.variables}
    for k in (1, 2, 1, 2, 1):
        state = mutate_cluster(state, k)
        seen.update(v.serialize() for v in state.variables)
    assert len(seen) == 5
    # after the five steps the cluster is the initial one with variables swapped
    assert {v.serialize() for v in state.variables} == {"1:1,0", "1:0,1"}


def test_mutation_is_involutive_randomized():
    rng = random.Random(99)
    seeds = [Seed(A2_B), Seed(A3_B), Seed(MARKOV_B)]
    for _ in range(25):
        base = rng.choice(seeds)
        state = initial_state(base)
        for _ in range(rng.randint(0, 4)):
            state = mutate_cluster(state, rng.randint(1, base.r))
        k = rng.randint(1, base.r)
        back = mutate_cluster(mutate_cluster(state, k), k)
        assert [v.serialize() for v in back.variables] == [
            v.serialize() for v in state.variables
        ]
        assert back.seed.matrix == state.seed.matrix


def test_frozen_variables_never_change():
    # A2 with one frozen row
    seed = Seed([[0, 1], [-1, 0], [1, -1]])
    state = initial_state(seed)
    for k in (1, 2, 1, 2):
        state = mutate_cluster(state, k)
        assert state.variables[2].serialize() == "1:0,0,1"


def test_markov_denominators_grow():
    state = initial_state(Seed(MARKOV_B))
    for k in (1, 2, 3, 1, 2, 3):
        state = mutate_cluster(state, k)
    # all exchangeable variables are genuine Laurent polynomials by now
    for v in state.variables:
        assert any(e < 0 for exp in v.terms for e in exp)


def test_degree_of():
    grading = Grading(Z, ((1,), (1,)))
    x = LaurentPoly.monomial(2, (1, 0))
    y = LaurentPoly.monomial(2, (0, 1))
    assert degree_of(x * y, grading) == (2,)
    assert degree_of(x + y, grading) == (1,)
    with pytest.raises(NonHomogeneous) as info:
        degree_of(x * x + y, grading)
    assert info.value.witnesses is not None
    with pytest.raises(ZeroPolynomial):
        degree_of(LaurentPoly.zero(2), grading)


def test_degree_of_torsion_group():
    group = FgAbelianGroup((2,))
    grading = Grading(group, ((1,), (1,)))
    x = LaurentPoly.monomial(2, (1, 0))
    y = LaurentPoly.monomial(2, (0, 1))
    # x^2 and y^0 both have degree 0 mod 2
    assert degree_of(x * x + LaurentPoly.one(2), grading) == (0,)
    assert degree_of(x + y, grading) == (1,)


def test_mutated_variable_degrees_markov():
    # (x2^2 + x3^2) / x1 has degree 2 - 1 = 1: every variable here stays in
    # degree one because the grading vector is fixed by mutation
    grading = Grading(Z, ((1,), (1,), (1,)))
    state = initial_state(Seed(MARKOV_B))
    for k in (1, 2, 3, 1):
        state = mutate_cluster(state, k)
        assert degree_of(state.variables[k - 1], grading) == (1,)


def test_cluster_character_reproduces_a2_example():
    out = evaluate_cluster_character(IntMatrix(A2_B), (-1, 0), {(0, 0): 1, (1, 0): 1})
    assert out.terms == {(-1, 0): 1, (-1, 1): 1}


def test_cluster_character_initial_variables():
    B = IntMatrix(A3_B)
    for i in range(3):
        index = tuple(1 if j == i else 0 for j in range(3))
        out = evaluate_cluster_character(B, index, {(0, 0, 0): 1})
        assert out == LaurentPoly.monomial(3, index)


def test_cluster_character_requires_empty_submodule():
    B = IntMatrix(A2_B)
    with pytest.raises(MissingEmptySubmodule):
        evaluate_cluster_character(B, (-1, 0), {(1, 0): 1})
    with pytest.raises(MissingEmptySubmodule):
        evaluate_cluster_character(B, (-1, 0), {(0, 0): 2, (1, 0): 1})


def test_cluster_character_homogeneous_for_any_data():
    # with B^t.G = 0 every monomial x^(A - B.v) has the same degree A.G,
    # so characters are homogeneous no matter what submodule data comes in
    rng = random.Random(7)
    B = IntMatrix(A3_B)
    grading = Grading(Z, ((1,), (0,), (1,)))
    for _ in range(40):
        index = tuple(rng.randint(-3, 3) for _ in range(3))
        data = {(0, 0, 0): 1}
        for _ in range(rng.randint(1, 5)):
            v = tuple(rng.randint(0, 2) for _ in range(3))
            if v != (0, 0, 0):
                data[v] = rng.randint(1, 4)
        out = evaluate_cluster_character(B, index, data)
        expected = sum(index[i] * grading.values[i][0] for i in range(3))
        assert degree_of(out, grading) == (expected,)


def test_cluster_character_shape_errors():
    with pytest.raises(GradalgError):
        evaluate_cluster_character(IntMatrix(A2_B), (1, 0, 0), {(0, 0): 1})
    with pytest.raises(GradalgError):
        evaluate_cluster_character(IntMatrix(A2_B), (1, 0), {(0, 0, 0): 1})


def random_poly(rng, nvars, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(-3, 3) for _ in range(nvars))
        terms[exp] = rng.randint(-5, 5)
    return LaurentPoly(nvars, terms)
