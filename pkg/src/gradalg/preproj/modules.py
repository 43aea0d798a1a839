"""Finite-dimensional representations of a preprojective algebra.

A representation assigns a rational vector space to every vertex and a
matrix to every arrow of the double quiver, subject to the mesh
relations. Morphisms are vertexwise matrices intertwining the arrow
actions; they are computed exactly as nullspaces of one linear system.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Sequence, Tuple

from ..errors import AlgebraMismatch
from .algebra import DoubleQuiver, PreprojectiveAlgebra
from .ratlin import (
    FMat,
    Vec,
    fmat,
    mat_vec,
    mul,
    nullspace_f,
    quotient_with_section,
    row_space,
    solve_f,
    transpose_f,
    vstack,
    zero_f,
)

Morphism = Dict[int, FMat]  # vertex -> matrix, shape dims_N[v] x dims_M[v]
Subspaces = Mapping[int, Sequence[Vec]]


@dataclass(frozen=True)
class QuiverRep:
    quiver: DoubleQuiver
    dims: Tuple[int, ...]
    maps: Mapping[str, FMat]

    def dim_at(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


def make_rep(
    quiver: DoubleQuiver,
    dims: Sequence[int],
    maps: Mapping[str, FMat],
    check: bool = True,
) -> QuiverRep:
    dims = tuple(dims)
    full: Dict[str, FMat] = {}
    for arrow in quiver.arrows:
        m = maps.get(arrow.name)
        if m is None:
            m = zero_f(dims[arrow.target - 1], dims[arrow.source - 1])
        if (m.m, m.n) != (dims[arrow.target - 1], dims[arrow.source - 1]):
            raise AlgebraMismatch(f"map for {arrow.name} has the wrong shape")
        full[arrow.name] = m
    rep = QuiverRep(quiver, dims, full)
    if check:
        _check_relations(rep)
    return rep


def _check_relations(rep: QuiverRep) -> None:
    for v in range(1, rep.quiver.vertices + 1):
        d = rep.dims[v - 1]
        total = [[Fraction(0)] * d for _ in range(d)]
        for arrow in rep.quiver.arrows:
            if not arrow.original:
                continue
            star = rep.quiver.by_name[arrow.partner]
            if arrow.target == v:
                part, sign = mul(rep.maps[arrow.name], rep.maps[star.name]), 1
            elif arrow.source == v:
                part, sign = mul(rep.maps[star.name], rep.maps[arrow.name]), -1
            else:
                continue
            for i in range(d):
                for j in range(d):
                    total[i][j] += sign * part.rows[i][j]
        if any(x != 0 for row in total for x in row):
            raise AlgebraMismatch(f"mesh relation fails at vertex {v}")


def zero_rep(quiver: DoubleQuiver) -> QuiverRep:
    return make_rep(quiver, (0,) * quiver.vertices, {}, check=False)


def simple_rep(quiver: DoubleQuiver, v: int) -> QuiverRep:
    dims = tuple(1 if w == v else 0 for w in range(1, quiver.vertices + 1))
    return make_rep(quiver, dims, {}, check=False)


def injective_module(algebra: PreprojectiveAlgebra, i: int) -> QuiverRep:
    """Dual of the component of the algebra with target i."""
    quiver = algebra.quiver
    comp = {
        v: algebra.basis_indices(target=i, source=v)
        for v in range(1, quiver.vertices + 1)
    }
    dims = tuple(len(comp[v]) for v in range(1, quiver.vertices + 1))
    maps: Dict[str, FMat] = {}
    for arrow in quiver.arrows:
        v, w = arrow.source, arrow.target
        a_elem = algebra.arrow_element(arrow.name)
        rows = []
        for x in comp[w]:
            expansion = algebra.product(x, a_elem)
            rows.append(tuple(expansion.get(y, Fraction(0)) for y in comp[v]))
        maps[arrow.name] = FMat(len(comp[w]), len(comp[v]), tuple(rows))
    return make_rep(quiver, dims, maps)


def direct_sum(quiver: DoubleQuiver, reps: Sequence[QuiverRep]) -> QuiverRep:
    dims = tuple(
        sum(r.dims[v] for r in reps) for v in range(quiver.vertices)
    )
    maps: Dict[str, FMat] = {}
    for arrow in quiver.arrows:
        rows: List[Tuple[Fraction, ...]] = []
        for k, r in enumerate(reps):
            block = r.maps[arrow.name]
            before = sum(x.dims[arrow.source - 1] for x in reps[:k])
            after = dims[arrow.source - 1] - before - block.n
            for row in block.rows:
                rows.append(
                    (Fraction(0),) * before + row + (Fraction(0),) * after
                )
        maps[arrow.name] = FMat(
            dims[arrow.target - 1], dims[arrow.source - 1], tuple(rows)
        )
    return make_rep(quiver, dims, maps, check=False)


def hom_space(m: QuiverRep, n: QuiverRep) -> List[Morphism]:
    """Basis of the space of morphisms m -> n."""
    quiver = m.quiver
    offsets: Dict[int, int] = {}
    total = 0
    for v in range(1, quiver.vertices + 1):
        offsets[v] = total
        total += n.dims[v - 1] * m.dims[v - 1]
    rows: List[Tuple[Fraction, ...]] = []
    for arrow in quiver.arrows:
        v, w = arrow.source, arrow.target
        ma, na = m.maps[arrow.name], n.maps[arrow.name]
        for i in range(n.dims[w - 1]):
            for j in range(m.dims[v - 1]):
                row = [Fraction(0)] * total
                # (N_a X_v)_ij
                for k in range(n.dims[v - 1]):
                    row[offsets[v] + k * m.dims[v - 1] + j] += na.rows[i][k]
                # -(X_w M_a)_ij
                for k in range(m.dims[w - 1]):
                    row[offsets[w] + i * m.dims[w - 1] + k] -= ma.rows[k][j]
                if any(x != 0 for x in row):
                    rows.append(tuple(row))
    system = FMat(len(rows), total, tuple(rows))
    basis = []
    for coeffs in nullspace_f(system):
        morphism: Morphism = {}
        for v in range(1, quiver.vertices + 1):
            nv, mv = n.dims[v - 1], m.dims[v - 1]
            block = tuple(
                tuple(coeffs[offsets[v] + i * mv + j] for j in range(mv))
                for i in range(nv)
            )
            morphism[v] = FMat(nv, mv, block)
        basis.append(morphism)
    return basis


def hom_dim(m: QuiverRep, n: QuiverRep) -> int:
    return len(hom_space(m, n))


def socle_letter(rep: QuiverRep, letter: int) -> List[Vec]:
    """Vectors at the given vertex killed by every arrow out of it."""
    stacked = FMat(0, rep.dims[letter - 1], ())
    for arrow in rep.quiver.arrows:
        if arrow.source == letter:
            stacked = vstack(stacked, rep.maps[arrow.name])
    return nullspace_f(stacked)


def socle_sequence_submodule(rep: QuiverRep, letters: Sequence[int]) -> QuiverRep:
    """Iterated socle pullbacks: at each letter, enlarge the submodule by
    the preimage of the letter-isotypic socle of the quotient."""
    vertices = range(1, rep.quiver.vertices + 1)
    current: Dict[int, List[Vec]] = {v: [] for v in vertices}
    for letter in letters:
        parts = {
            v: quotient_with_section(current[v], rep.dims[v - 1]) for v in vertices
        }
        stacked = FMat(0, parts[letter][0].m, ())
        for arrow in rep.quiver.arrows:
            if arrow.source == letter:
                q_w = parts[arrow.target][0]
                block = mul(q_w, mul(rep.maps[arrow.name], parts[letter][1]))
                stacked = vstack(stacked, block)
        section = parts[letter][1]
        found = [mat_vec(section, y) for y in nullspace_f(stacked)]
        current[letter] = row_space(current[letter] + found)
    return submodule_rep(rep, current)


def submodule_rep(rep: QuiverRep, subspaces: Subspaces) -> QuiverRep:
    """The submodule spanned by the given vertexwise subspaces, which must
    already be closed under all arrows."""
    vertices = range(1, rep.quiver.vertices + 1)
    bases = {v: row_space(subspaces.get(v, [])) for v in vertices}
    inclusions = {
        v: transpose_f(fmat(bases[v], n=rep.dims[v - 1])) if bases[v]
        else zero_f(rep.dims[v - 1], 0)
        for v in vertices
    }
    dims = tuple(len(bases[v]) for v in vertices)
    maps: Dict[str, FMat] = {}
    for arrow in rep.quiver.arrows:
        v, w = arrow.source, arrow.target
        image = mul(rep.maps[arrow.name], inclusions[v])
        cols = []
        for c in range(image.n):
            col = tuple(image.rows[r][c] for r in range(image.m))
            solution = solve_f(inclusions[w], col)
            if solution is None:
                raise AlgebraMismatch("subspaces are not arrow-closed")
            cols.append(solution)
        maps[arrow.name] = transpose_f(fmat(cols, n=dims[w - 1]))
    return make_rep(rep.quiver, dims, maps)


def quotient_rep(
    rep: QuiverRep, subspaces: Subspaces
) -> Tuple[QuiverRep, Dict[int, FMat]]:
    """Quotient by an arrow-closed family of subspaces, with projections."""
    vertices = range(1, rep.quiver.vertices + 1)
    parts = {
        v: quotient_with_section(subspaces.get(v, []), rep.dims[v - 1])
        for v in vertices
    }
    dims = tuple(parts[v][0].m for v in vertices)
    maps = {
        arrow.name: mul(
            parts[arrow.target][0],
            mul(rep.maps[arrow.name], parts[arrow.source][1]),
        )
        for arrow in rep.quiver.arrows
    }
    quotient = make_rep(rep.quiver, dims, maps)
    return quotient, {v: parts[v][0] for v in vertices}


def kernel_subspaces(f: Morphism, m: QuiverRep) -> Dict[int, List[Vec]]:
    return {
        v: nullspace_f(f[v]) for v in range(1, m.quiver.vertices + 1)
    }


def image_subspaces(f: Morphism, n: QuiverRep) -> Dict[int, List[Vec]]:
    return {
        v: row_space(transpose_f(f[v]).rows)
        for v in range(1, n.quiver.vertices + 1)
    }


def cokernel_rep(f: Morphism, m: QuiverRep, n: QuiverRep) -> QuiverRep:
    quotient, _ = quotient_rep(n, image_subspaces(f, n))
    return quotient
