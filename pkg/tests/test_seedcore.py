"""Tests for seeds, mutation, gradings and the seed file format."""

import json
import random

import pytest

from gradalg.errors import BadShape, GradingCondition, IndexOutOfRange, NonSkewSymmetrizable
from gradalg.intlin import FgAbelianGroup, IntMatrix, solve_hom_into_group
from gradalg.seedcore import (
    GradedSeed,
    Grading,
    Seed,
    exchange_vectors,
    matrix_from_quiver,
    mutate_graded_seed,
    mutate_matrix,
    seed_from_json,
    seed_to_json,
    standard_gradings,
)

MARKOV_B = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
A2_B = [[0, 1], [-1, 0]]
A3_B = [[0, -1, 0], [1, 0, -1], [0, 1, 0]]

Z = FgAbelianGroup((0,))


def markov_graded():
    seed = Seed(MARKOV_B)
    grading = Grading(Z, ((1,), (1,), (1,)))
    return GradedSeed(seed, (grading,))


def test_validation_accepts_skew_symmetrizable():
    Seed(MARKOV_B)
    Seed(A3_B)
    # genuinely skew-symmetrizable but not skew-symmetric (symmetrizer (2,1))
    Seed([[0, 1], [-2, 0]])
    # frozen rows are unconstrained
    Seed([[0, 1], [-1, 0], [5, -7]])


def test_validation_rejects_bad_principal_parts():
    with pytest.raises(NonSkewSymmetrizable):
        Seed([[0, 1], [1, 0]])
    with pytest.raises(NonSkewSymmetrizable):
        Seed([[1, 1], [-1, 0]])
    with pytest.raises(NonSkewSymmetrizable):
        Seed([[0, 1], [0, 0]])
    # inconsistent ratios around a triangle
    with pytest.raises(NonSkewSymmetrizable):
        Seed([[0, 1, -1], [-1, 0, 1], [2, -1, 0]])


def test_validation_rejects_bad_shapes():
    with pytest.raises(BadShape):
        Seed([[0, 1, 0], [-1, 0, 1]])  # r > n
    with pytest.raises(BadShape):
        Seed(A2_B, names=("x1",))
    with pytest.raises(BadShape):
        Seed(A2_B, names=("x", "x"))


def test_exchange_vectors_markov():
    seed = Seed(MARKOV_B)
    ev = exchange_vectors(seed, 1)
    assert ev.plus == (-1, 0, 2)
    assert ev.minus == (-1, 2, 0)


def test_exchange_vectors_invariants_randomized():
    rng = random.Random(9)
    for _ in range(60):
        seed = random_seed(rng)
        B = seed.matrix
        for k in range(1, seed.r + 1):
            ev = exchange_vectors(seed, k)
            assert ev.plus[k - 1] == -1 and ev.minus[k - 1] == -1
            diff = tuple(p - m for p, m in zip(ev.plus, ev.minus))
            assert diff == B.column(k - 1)


def test_mutate_matrix_markov_negates():
    out = mutate_matrix(IntMatrix(MARKOV_B), 1)
    assert [list(r) for r in out.rows] == [[0, -2, 2], [2, 0, -2], [-2, 2, 0]]


def test_mutate_matrix_is_involutive_and_stays_valid():
    rng = random.Random(31)
    for _ in range(80):
        seed = random_seed(rng)
        for k in range(1, seed.r + 1):
            once = mutate_matrix(seed.matrix, k)
            Seed(once)  # mutation preserves skew-symmetrizability
            assert mutate_matrix(once, k) == seed.matrix


def test_mutate_matrix_index_range():
    with pytest.raises(IndexOutOfRange):
        mutate_matrix(IntMatrix(MARKOV_B), 0)
    with pytest.raises(IndexOutOfRange):
        mutate_matrix(IntMatrix(MARKOV_B), 4)


def test_mutate_graded_seed_markov_fixed():
    gs = markov_graded()
    for k in (1, 2, 3):
        out = mutate_graded_seed(gs, k)
        assert out.gradings[0].values == ((1,), (1,), (1,))


def test_mutate_graded_seed_a3():
    seed = Seed(A3_B)
    gs = GradedSeed(seed, (Grading(Z, ((1,), (0,), (1,))),))
    out = mutate_graded_seed(gs, 2)
    assert out.gradings[0].values == ((1,), (1,), (1,))


def test_grading_condition_checked():
    with pytest.raises(GradingCondition):
        GradedSeed(Seed(A3_B), (Grading(Z, ((1,), (1,), (1,))),))


def test_graded_mutation_preserves_condition_randomized():
    rng = random.Random(1234)
    groups = [Z, FgAbelianGroup((2,)), FgAbelianGroup((0, 3))]
    count = 0
    for _ in range(60):
        seed = random_seed(rng)
        group = rng.choice(groups)
        space = solve_hom_into_group([list(r) for r in seed.matrix.rows], group)
        if not space.generators:
            continue
        values = rng.choice(space.generators)
        gs = GradedSeed(seed, (Grading(group, values),))  # constructor re-checks B^t G = 0
        for _ in range(4):
            k = rng.randint(1, seed.r)
            gs = mutate_graded_seed(gs, k)  # would raise if the condition broke
        count += 1
    assert count > 20


def test_graded_mutation_involutive():
    rng = random.Random(555)
    for _ in range(40):
        seed = random_seed(rng)
        vectors = standard_gradings(seed)
        k = rng.randint(1, seed.r)
        back = mutate_graded_seed(mutate_graded_seed(vectors, k), k)
        assert back.gradings == vectors.gradings
        assert back.seed.matrix == seed.matrix


def test_standard_gradings_examples():
    a3 = standard_gradings(Seed(A3_B))
    assert [g.values for g in a3.gradings] == [((1,), (0,), (1,))]
    markov = standard_gradings(Seed(MARKOV_B))
    assert [g.values for g in markov.gradings] == [((1,), (1,), (1,))]
    a2 = standard_gradings(Seed(A2_B))
    assert a2.gradings == ()


def test_standard_grading_count_mutation_invariant():
    rng = random.Random(8080)
    for _ in range(30):
        seed = random_seed(rng)
        count = len(standard_gradings(seed).gradings)
        B = seed.matrix
        for _ in range(3):
            B = mutate_matrix(B, rng.randint(1, seed.r))
        assert len(standard_gradings(Seed(B, names=seed.names)).gradings) == count


def test_markov_matrix_from_doubled_cycle_quiver():
    arrows = [(2, 1), (2, 1), (3, 2), (3, 2), (1, 3), (1, 3)]
    assert matrix_from_quiver(3, 3, arrows) == IntMatrix(MARKOV_B)


def test_seed_json_round_trip_and_determinism():
    gs = markov_graded()
    text = seed_to_json(gs)
    assert text == (
        '{"n":3,"r":3,"B":[[0,2,-2],[-2,0,2],[2,-2,0]],'
        '"names":["x1","x2","x3"],'
        '"gradings":[{"factors":[0],"vectors":[[1],[1],[1]]}]}'
    )
    back = seed_from_json(text)
    assert back.seed.matrix == gs.seed.matrix
    assert back.seed.names == gs.seed.names
    assert back.gradings == gs.gradings
    assert seed_to_json(back) == text


def test_seed_json_rejects_garbage():
    with pytest.raises(BadShape):
        seed_from_json(json.dumps({"n": 2, "r": 1}))
    with pytest.raises(NonSkewSymmetrizable):
        seed_from_json(
            json.dumps({"n": 2, "r": 2, "B": [[0, 1], [1, 0]], "names": ["a", "b"], "gradings": []})
        )


def random_seed(rng, max_n=4):
    """Random valid seed: skew-symmetric principal part plus frozen rows."""
    r = rng.randint(1, max_n - 1)
    n = rng.randint(r, max_n)
    rows = [[0] * r for _ in range(n)]
    for i in range(r):
        for j in range(i + 1, r):
            v = rng.randint(-2, 2)
            rows[i][j] = v
            rows[j][i] = -v
    for i in range(r, n):
        for j in range(r):
            rows[i][j] = rng.randint(-2, 2)
    return Seed(rows)
