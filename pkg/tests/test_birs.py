"""Tests for categorified seeds built from Weyl group words."""

import random
from fractions import Fraction

import pytest

from gradalg.errors import NotInFac, NotReduced
from gradalg.intlin import smith_normal_form
from gradalg.preproj.category import (
    birs_modules,
    exchange_sequences,
    ext1_dim,
    index_degrees,
    index_vector,
)
from gradalg.preproj.dynkin import dynkin_diagram, weyl_dimension_vector
from gradalg.preproj.modules import (
    cokernel_rep,
    direct_sum,
    hom_dim,
    hom_space,
    quotient_rep,
    socle_letter,
)

A5_WORD_DISPLAY = (3, 2, 1, 4, 3, 2, 5, 4, 3)


def a2_model():
    return birs_modules(dynkin_diagram("A", 2), (1, 2, 1))


def a5_model():
    return birs_modules(dynkin_diagram("A", 5), A5_WORD_DISPLAY)


def test_not_reduced_rejected():
    with pytest.raises(NotReduced):
        birs_modules(dynkin_diagram("A", 2), (1, 1, 2))


def test_a2_model_shape():
    model = a2_model()
    assert [v.dims for v in model.modules] == [(1, 0), (1, 1), (1, 1)]
    assert model.proj_indices == frozenset({2, 3})
    assert model.mutable_indices == (1,)
    assert model.hom_matrix == ((1, 0, 1), (1, 1, 1), (0, 1, 1))
    assert model.exchange_matrix.rows == ((0,), (1,), (-1,))


def test_a2_graded_seed():
    model = a2_model()
    graded = model.to_graded_seed()
    assert graded.seed.names == ("V1", "V2", "V3")
    assert graded.seed.r == 1
    assert graded.seed.matrix.rows == ((0,), (1,), (-1,))
    values = [g.values for g in graded.gradings]
    assert values == [((0,), (1,), (1,)), ((1,), (1,), (1,))]


def test_a2_exchange_sequences():
    model = a2_model()
    seqs = exchange_sequences(model, 1)
    assert seqs.right_multiplicities == (0, 1, 0)
    assert seqs.left_multiplicities == (0, 0, 1)
    assert seqs.kernel.dims == (0, 1)
    assert seqs.cokernel.dims == (0, 1)


def test_a5_dimension_vectors_match_weyl_formula():
    model = a5_model()
    diagram = model.diagram
    expected = [
        (0, 0, 1, 0, 0),
        (0, 0, 1, 1, 0),
        (0, 0, 1, 1, 1),
        (0, 1, 1, 0, 0),
        (0, 1, 2, 1, 0),
        (0, 1, 2, 2, 1),
        (1, 1, 1, 0, 0),
        (1, 2, 2, 1, 0),
        (1, 2, 3, 2, 1),
    ]
    for s, module in enumerate(model.modules, start=1):
        assert module.dims == expected[s - 1]
        assert module.dims == weyl_dimension_vector(diagram, model.word, s)


def test_a5_frozen_and_mutable_indices():
    model = a5_model()
    assert model.proj_indices == frozenset({3, 6, 7, 8, 9})
    assert model.mutable_indices == (1, 2, 4, 5)


def test_a5_hom_examples():
    model = a5_model()
    h = model.hom_matrix
    assert h[0][3] == 0  # no maps V_1 -> V_4
    assert h[3][0] == 1  # one map V_4 -> V_1 up to scalar


def test_a5_exchange_matrix_rank_and_kernel():
    model = a5_model()
    b = model.exchange_matrix
    assert (b.m, b.n) == (9, 4)
    assert smith_normal_form(b).rank == 4
    # each vertexwise dimension function is a degree: B^t annihilates it
    for vertex in range(5):
        column = [module.dims[vertex] for module in model.modules]
        for c in range(4):
            assert sum(b.rows[j][c] * column[j] for j in range(9)) == 0


def test_a5_arrow_sums_at_first_module():
    model = a5_model()
    a = model.arrow_counts
    incoming = [Fraction(0)] * 5
    outgoing = [Fraction(0)] * 5
    for m in range(1, 10):
        for v in range(5):
            incoming[v] += a[m - 1][0] * model.modules[m - 1].dims[v]
            outgoing[v] += a[0][m - 1] * model.modules[m - 1].dims[v]
    assert tuple(incoming) == (0, 1, 2, 1, 0)
    assert tuple(outgoing) == (0, 1, 2, 1, 0)


def test_a5_graded_seed_checks_out():
    model = a5_model()
    graded = model.to_graded_seed()
    assert graded.seed.n == 9 and graded.seed.r == 4
    assert len(graded.gradings) == 5
    assert graded.seed.names == (
        "V1", "V2", "V4", "V5", "V3", "V6", "V7", "V8", "V9",
    )


def test_ext1_vanishes_on_all_pairs():
    model = a5_model()
    for x in model.modules:
        for y in model.modules:
            assert ext1_dim(model.diagram, x, y) == 0


def test_ext1_nonzero_example():
    model = a2_model()
    s1 = model.modules[0]
    quiver = model.algebra.quiver
    from gradalg.preproj.modules import simple_rep

    s2 = simple_rep(quiver, 2)
    assert ext1_dim(model.diagram, s1, s2) == 1


def test_index_of_generators_is_standard_basis():
    for model in (a2_model(), a5_model()):
        size = len(model.modules)
        for k in range(1, size + 1):
            expected = tuple(1 if j == k else 0 for j in range(1, size + 1))
            assert index_vector(model, model.modules[k - 1]) == expected


def test_index_on_quotients_of_generators():
    model = a5_model()
    rng = random.Random(31)
    quiver = model.algebra.quiver
    checked = 0
    for _ in range(12):
        a = rng.randrange(1, 10)
        b = rng.randrange(1, 10)
        basis = hom_space(model.modules[a - 1], model.modules[b - 1])
        if not basis:
            continue
        coeffs = [Fraction(rng.randint(-2, 2)) for _ in basis]
        f = {
            v: sum_mats([scale_mat(c, m[v]) for c, m in zip(coeffs, basis)])
            for v in range(1, 6)
        }
        x = cokernel_rep(f, model.modules[a - 1], model.modules[b - 1])
        index = index_vector(model, x)
        # degree two ways: through the index against each frozen column,
        # and directly as maps into the frozen generator
        degrees = index_degrees(model, index)
        for i in sorted(model.proj_indices):
            assert degrees[i] == hom_dim(x, model.modules[i - 1])
        checked += 1
    assert checked >= 6


def sum_mats(mats):
    from gradalg.preproj.ratlin import FMat

    base = mats[0]
    rows = tuple(
        tuple(sum(m.rows[i][j] for m in mats) for j in range(base.n))
        for i in range(base.m)
    )
    return FMat(base.m, base.n, rows)


def scale_mat(c, m):
    from gradalg.preproj.ratlin import FMat

    return FMat(m.m, m.n, tuple(tuple(c * x for x in row) for row in m.rows))


def test_exchange_sequences_a5():
    model = a5_model()
    b = model.exchange_matrix
    for col, k in enumerate(model.mutable_indices):
        seqs = exchange_sequences(model, k)
        assert seqs.kernel.dims == seqs.cokernel.dims
        for j in range(1, 10):
            diff = seqs.right_multiplicities[j - 1] - seqs.left_multiplicities[j - 1]
            assert diff == b.rows[j - 1][col]
        # degree additivity for every frozen grading, on both sequences
        kernel_index = index_vector(model, seqs.kernel)
        kernel_degrees = index_degrees(model, kernel_index)
        for i in sorted(model.proj_indices):
            h_col = [model.hom_matrix[j][i - 1] for j in range(9)]
            right_total = sum(
                m * h_col[j] for j, m in enumerate(seqs.right_multiplicities)
            )
            left_total = sum(
                m * h_col[j] for j, m in enumerate(seqs.left_multiplicities)
            )
            assert kernel_degrees[i] == right_total - h_col[k - 1]
            assert kernel_degrees[i] == left_total - h_col[k - 1]


def test_not_in_fac():
    model = a5_model()
    from gradalg.preproj.modules import simple_rep

    s5 = simple_rep(model.algebra.quiver, 5)
    # no generator surjects onto S_5: there are no maps to it at all,
    # so it cannot be a quotient of sums of generators
    for v in model.modules:
        assert hom_dim(v, s5) == 0
    with pytest.raises(NotInFac):
        index_vector(model, s5)
