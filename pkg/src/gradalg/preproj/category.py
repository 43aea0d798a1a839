"""Categorified seeds from Weyl group words.

A reduced word produces one module per letter through iterated socle
pullbacks inside an injective; the endomorphism quiver of their sum
carries an exchange matrix whose mutable directions are the letters that
occur again later. Indices with respect to the sum of generators turn
modules into integer vectors, and the maps into each projective-injective
generator give the degrees.
"""

from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Tuple

from ..errors import (
    AlgebraMismatch,
    GramSingular,
    IndexOutOfRange,
    NonIntegralSolution,
    NotInFac,
    NotReduced,
    RadicalFailure,
)
from ..intlin import FgAbelianGroup, IntMatrix
from ..seedcore import GradedSeed, Grading, Seed
from .algebra import PreprojectiveAlgebra
from .dynkin import DynkinDiagram, cartan_matrix, is_reduced
from .modules import (
    Morphism,
    QuiverRep,
    direct_sum,
    hom_dim,
    hom_space,
    image_subspaces,
    injective_module,
    kernel_subspaces,
    quotient_rep,
    socle_sequence_submodule,
    submodule_rep,
)
from .ratlin import (
    FMat,
    fmat,
    hstack,
    mul,
    nullspace_f,
    rank_f,
    row_space,
    solve_f,
    vstack,
    zero_f,
)

INTEGERS = FgAbelianGroup((0,))


def _compose(g: Morphism, f: Morphism, vertices: int) -> Morphism:
    return {v: mul(g[v], f[v]) for v in range(1, vertices + 1)}


def _flatten(f: Morphism, vertices: int) -> Tuple[Fraction, ...]:
    out: List[Fraction] = []
    for v in range(1, vertices + 1):
        for row in f[v].rows:
            out.extend(row)
    return tuple(out)


def _trace(f: Morphism, vertices: int) -> Fraction:
    total = Fraction(0)
    for v in range(1, vertices + 1):
        block = f[v]
        total += sum((block.rows[i][i] for i in range(block.m)), Fraction(0))
    return total


class CategoryModel:
    """Modules attached to the letters of a reduced word, together with
    the hom data of their sum."""

    def __init__(self, diagram: DynkinDiagram, word_display: Sequence[int]):
        word_display = tuple(word_display)
        if not is_reduced(diagram, word_display):
            raise NotReduced(f"word {word_display} is not reduced")
        self.diagram = diagram
        self.word_display = word_display
        # position 1 of the internal word is the innermost letter
        self.word = tuple(reversed(word_display))
        self.algebra = PreprojectiveAlgebra(diagram)
        self.size = len(self.word)

        injectives = {
            letter: injective_module(self.algebra, letter)
            for letter in set(self.word)
        }
        self.modules: Tuple[QuiverRep, ...] = tuple(
            socle_sequence_submodule(
                injectives[self.word[s - 1]],
                tuple(reversed(self.word[:s])),
            )
            for s in range(1, self.size + 1)
        )

        last_seen: Dict[int, int] = {}
        for s, letter in enumerate(self.word, start=1):
            last_seen[letter] = s
        self.proj_indices = frozenset(last_seen.values())
        self.mutable_indices = tuple(
            s for s in range(1, self.size + 1) if s not in self.proj_indices
        )

        vertices = diagram.rank
        self.hom_bases: Dict[Tuple[int, int], List[Morphism]] = {}
        for j in range(1, self.size + 1):
            for k in range(1, self.size + 1):
                self.hom_bases[(j, k)] = hom_space(
                    self.modules[j - 1], self.modules[k - 1]
                )
        self.hom_matrix: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(len(self.hom_bases[(j, k)]) for k in range(1, self.size + 1))
            for j in range(1, self.size + 1)
        )
        self.radical_bases = self._radical_bases(vertices)
        self.arrow_counts = self._arrow_counts(vertices)
        self.exchange_matrix = self._exchange_matrix()
        self._check_pairing()

    def _radical_bases(self, vertices: int) -> Dict[Tuple[int, int], List[Morphism]]:
        rad: Dict[Tuple[int, int], List[Morphism]] = {}
        for j in range(1, self.size + 1):
            for k in range(1, self.size + 1):
                if j != k:
                    rad[(j, k)] = list(self.hom_bases[(j, k)])
                    continue
                basis = self.hom_bases[(j, j)]
                gram = fmat(
                    [
                        [
                            _trace(_compose(x, y, vertices), vertices)
                            for y in basis
                        ]
                        for x in basis
                    ],
                    n=len(basis),
                )
                coeffs = nullspace_f(gram)
                if len(coeffs) != len(basis) - 1:
                    raise RadicalFailure(
                        f"endomorphisms of generator {j} have a "
                        f"{len(basis) - len(coeffs)}-dimensional semisimple part"
                    )
                rad[(j, j)] = [
                    _combine(basis, c, vertices) for c in coeffs
                ]
        return rad

    def _arrow_counts(self, vertices: int) -> Tuple[Tuple[int, ...], ...]:
        counts = []
        for j in range(1, self.size + 1):
            row = []
            for k in range(1, self.size + 1):
                composites = []
                for m in range(1, self.size + 1):
                    for f in self.radical_bases[(j, m)]:
                        for g in self.radical_bases[(m, k)]:
                            composites.append(
                                _flatten(_compose(g, f, vertices), vertices)
                            )
                square_dim = len(row_space(composites))
                row.append(len(self.radical_bases[(j, k)]) - square_dim)
            counts.append(tuple(row))
        return tuple(counts)

    def _exchange_matrix(self) -> IntMatrix:
        a = self.arrow_counts
        rows = [
            [
                a[j - 1][k - 1] - a[k - 1][j - 1]
                for k in self.mutable_indices
            ]
            for j in range(1, self.size + 1)
        ]
        return IntMatrix(rows)

    def _check_pairing(self) -> None:
        # the exchange matrix pairs to twice the identity against the
        # antisymmetrized hom-dimension matrix on mutable directions
        b = self.exchange_matrix
        h = self.hom_matrix
        for ck, k in enumerate(self.mutable_indices):
            for j in self.mutable_indices:
                total = sum(
                    b.rows[m][ck] * (h[m][j - 1] - h[j - 1][m])
                    for m in range(self.size)
                )
                expected = 2 if j == k else 0
                if total != expected:
                    raise AlgebraMismatch(
                        "exchange matrix fails the pairing identity at "
                        f"({j}, {k}): {total} != {expected}"
                    )

    def seed_order(self) -> Tuple[int, ...]:
        return self.mutable_indices + tuple(sorted(self.proj_indices))

    def to_graded_seed(self) -> GradedSeed:
        order = self.seed_order()
        rows = [list(self.exchange_matrix.rows[s - 1]) for s in order]
        names = tuple(f"V{s}" for s in order)
        seed = Seed(IntMatrix(rows), names)
        gradings = tuple(
            Grading(
                INTEGERS,
                tuple((self.hom_matrix[s - 1][i - 1],) for s in order),
            )
            for i in sorted(self.proj_indices)
        )
        return GradedSeed(seed, gradings)


def _combine(
    basis: Sequence[Morphism], coeffs: Sequence[Fraction], vertices: int
) -> Morphism:
    out: Morphism = {}
    for v in range(1, vertices + 1):
        block = basis[0][v]
        rows = tuple(
            tuple(
                sum(
                    (c * b[v].rows[i][j] for c, b in zip(coeffs, basis)),
                    Fraction(0),
                )
                for j in range(block.n)
            )
            for i in range(block.m)
        )
        out[v] = FMat(block.m, block.n, rows)
    return out


def birs_modules(diagram: DynkinDiagram, word_display: Sequence[int]) -> CategoryModel:
    return CategoryModel(diagram, word_display)


def _top_representatives(
    homs: Sequence[Morphism],
    composites: Sequence[Tuple[Fraction, ...]],
    vertices: int,
) -> List[Morphism]:
    current = row_space(list(composites))
    chosen: List[Morphism] = []
    for f in homs:
        extended = row_space(current + [_flatten(f, vertices)])
        if len(extended) > len(current):
            chosen.append(f)
            current = extended
    return chosen


def _assemble_map(
    model: CategoryModel,
    chosen_per_generator: Sequence[Tuple[int, List[Morphism]]],
    target: QuiverRep,
) -> Tuple[QuiverRep, Morphism]:
    """Direct sum of generators with chosen maps into the target."""
    vertices = model.diagram.rank
    summands: List[QuiverRep] = []
    blocks: List[Morphism] = []
    for j, chosen in chosen_per_generator:
        for f in chosen:
            summands.append(model.modules[j - 1])
            blocks.append(f)
    source = direct_sum(model.algebra.quiver, summands)
    morphism: Morphism = {}
    for v in range(1, vertices + 1):
        if blocks:
            acc = blocks[0][v]
            for f in blocks[1:]:
                acc = hstack(acc, f[v])
            morphism[v] = acc
        else:
            morphism[v] = zero_f(target.dims[v - 1], 0)
    return source, morphism


def index_vector(model: CategoryModel, x: QuiverRep) -> Tuple[int, ...]:
    """Index of a module with respect to the sum of generators."""
    vertices = model.diagram.rank
    hom_x = {
        j: hom_space(model.modules[j - 1], x) for j in range(1, model.size + 1)
    }
    # evaluation must be onto, vertex by vertex
    for v in range(1, vertices + 1):
        columns: List[Tuple[Fraction, ...]] = []
        for j in range(1, model.size + 1):
            for f in hom_x[j]:
                block = f[v]
                for c in range(block.n):
                    columns.append(tuple(block.rows[r][c] for r in range(block.m)))
        if len(row_space(columns)) != x.dims[v - 1]:
            raise NotInFac(
                f"module is not a quotient of sums of generators at vertex {v}"
            )

    chosen_per_j: List[Tuple[int, List[Morphism]]] = []
    for j in range(1, model.size + 1):
        composites = [
            _flatten(_compose(g, rho, vertices), vertices)
            for m in range(1, model.size + 1)
            for rho in model.radical_bases[(j, m)]
            for g in hom_x[m]
        ]
        chosen = _top_representatives(hom_x[j], composites, vertices)
        chosen_per_j.append((j, chosen))

    source, f = _assemble_map(model, chosen_per_j, x)
    for v in range(1, vertices + 1):
        if rank_f(f[v]) != x.dims[v - 1]:
            raise NotInFac(f"approximation misses vertex {v}")
    kernel = submodule_rep(source, kernel_subspaces(f, source))

    h = fmat(model.hom_matrix)
    if rank_f(h) != model.size:
        raise GramSingular("hom matrix of the generators is singular")
    homvec_kernel = [
        len(hom_space(model.modules[j - 1], kernel))
        for j in range(1, model.size + 1)
    ]
    solution = solve_f(h, homvec_kernel)
    assert solution is not None
    if any(c.denominator != 1 or c < 0 for c in solution):
        raise NonIntegralSolution(
            "kernel multiplicities are not nonnegative integers: "
            f"{solution}"
        )
    approx = tuple(len(chosen) for _, chosen in chosen_per_j)
    index = tuple(int(a - s) for a, s in zip(approx, solution))
    for j in range(1, model.size + 1):
        predicted = sum(
            model.hom_matrix[j - 1][k] * index[k] for k in range(model.size)
        )
        if predicted != len(hom_x[j]):
            raise AlgebraMismatch(
                f"index does not reproduce maps from generator {j}"
            )
    return index


def index_degrees(model: CategoryModel, index: Sequence[int]) -> Dict[int, int]:
    """Degree of an index vector for each projective-injective grading."""
    return {
        i: sum(
            index[j] * model.hom_matrix[j][i - 1] for j in range(model.size)
        )
        for i in sorted(model.proj_indices)
    }


class ExchangeSequencePair(NamedTuple):
    k: int
    right_multiplicities: Tuple[int, ...]
    kernel: QuiverRep
    left_multiplicities: Tuple[int, ...]
    cokernel: QuiverRep


def exchange_sequences(model: CategoryModel, k: int) -> ExchangeSequencePair:
    """Both approximation sequences replacing the k-th generator."""
    if k not in model.mutable_indices:
        raise IndexOutOfRange(f"generator {k} is not mutable")
    vertices = model.diagram.rank
    vk = model.modules[k - 1]

    right_chosen: List[Tuple[int, List[Morphism]]] = []
    for j in range(1, model.size + 1):
        if j == k:
            right_chosen.append((j, []))
            continue
        composites = [
            _flatten(_compose(g, rho, vertices), vertices)
            for m in range(1, model.size + 1)
            if m != k
            for rho in model.radical_bases[(j, m)]
            for g in model.hom_bases[(m, k)]
        ]
        chosen = _top_representatives(
            model.hom_bases[(j, k)], composites, vertices
        )
        right_chosen.append((j, chosen))
    source, f = _assemble_map(model, right_chosen, vk)
    for v in range(1, vertices + 1):
        if rank_f(f[v]) != vk.dims[v - 1]:
            raise NotInFac(
                f"generator {k} is not covered by the other generators"
            )
    kernel = submodule_rep(source, kernel_subspaces(f, source))

    left_chosen: List[Tuple[int, List[Morphism]]] = []
    for j in range(1, model.size + 1):
        if j == k:
            left_chosen.append((j, []))
            continue
        composites = [
            _flatten(_compose(rho, g, vertices), vertices)
            for m in range(1, model.size + 1)
            if m != k
            for g in model.hom_bases[(k, m)]
            for rho in model.radical_bases[(m, j)]
        ]
        chosen = _top_representatives(
            model.hom_bases[(k, j)], composites, vertices
        )
        left_chosen.append((j, chosen))
    target_sum = direct_sum(
        model.algebra.quiver,
        [
            model.modules[j - 1]
            for j, chosen in left_chosen
            for _ in chosen
        ],
    )
    g_map: Morphism = {}
    for v in range(1, vertices + 1):
        blocks = [part[v] for _, chosen in left_chosen for part in chosen]
        if blocks:
            acc = blocks[0]
            for b in blocks[1:]:
                acc = vstack(acc, b)
            g_map[v] = acc
        else:
            g_map[v] = zero_f(0, vk.dims[v - 1])
    for v in range(1, vertices + 1):
        if nullspace_f(g_map[v]):
            raise AlgebraMismatch(
                f"left approximation of generator {k} is not injective"
            )
    coker, _ = quotient_rep(target_sum, image_subspaces(g_map, target_sum))
    return ExchangeSequencePair(
        k,
        tuple(len(chosen) for _, chosen in right_chosen),
        kernel,
        tuple(len(chosen) for _, chosen in left_chosen),
        coker,
    )


def ext1_dim(diagram: DynkinDiagram, m: QuiverRep, n: QuiverRep) -> int:
    """Extension dimension from hom dimensions and the Cartan pairing."""
    c = cartan_matrix(diagram)
    pairing = sum(
        c[u][v] * m.dims[u] * n.dims[v]
        for u in range(diagram.rank)
        for v in range(diagram.rank)
    )
    return hom_dim(m, n) + hom_dim(n, m) - pairing
