"""Preprojective algebras of simply laced Dynkin diagrams over Q.

The algebra is built degree by degree from the double quiver: new path
monomials arrow . basis are cut down by the mesh relations, whose degree
d+1 component is spanned by relation . basis element of degree d-1.
Basis elements are the surviving monomials, so every element of degree
at least one factors as arrow . shorter basis element.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..errors import NotDynkin
from .dynkin import DynkinDiagram
from .ratlin import FMat, fmat, rref


class Arrow(NamedTuple):
    name: str
    source: int
    target: int
    original: bool
    partner: str


@dataclass(frozen=True)
class DoubleQuiver:
    vertices: int
    arrows: Tuple[Arrow, ...]

    @property
    def by_name(self) -> Dict[str, Arrow]:
        return {a.name: a for a in self.arrows}


def double_quiver(diagram: DynkinDiagram) -> DoubleQuiver:
    arrows: List[Arrow] = []
    for idx, (a, b) in enumerate(diagram.edges, start=1):
        name, star = f"a{idx}", f"a{idx}s"
        arrows.append(Arrow(name, a, b, True, star))
        arrows.append(Arrow(star, b, a, False, name))
    return DoubleQuiver(diagram.rank, tuple(arrows))


class BasisElement(NamedTuple):
    index: int
    degree: int
    source: int
    target: int
    # for degree >= 1: the element equals factor_arrow . basis[factor_rest]
    factor_arrow: Optional[str]
    factor_rest: Optional[int]


SparseVec = Dict[int, Fraction]


class PreprojectiveAlgebra:
    def __init__(self, diagram: DynkinDiagram, max_degree: int = 64):
        self.diagram = diagram
        self.quiver = double_quiver(diagram)
        self.basis: List[BasisElement] = []
        self._by_degree: List[List[int]] = []
        # (arrow name, basis index) -> sparse vector over the basis
        self._left_mult: Dict[Tuple[str, int], SparseVec] = {}
        self._product_cache: Dict[Tuple[int, int], SparseVec] = {}
        self._build(max_degree)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def dim_at(self, i: int, j: int) -> int:
        """Dimension of the component with target i and source j."""
        return sum(1 for b in self.basis if b.target == i and b.source == j)

    def idempotent(self, v: int) -> int:
        return v - 1

    def arrow_element(self, name: str) -> int:
        for idx in self._by_degree[1]:
            if self.basis[idx].factor_arrow == name:
                return idx
        raise KeyError(name)

    def basis_indices(self, target: Optional[int] = None, source: Optional[int] = None):
        return [
            b.index
            for b in self.basis
            if (target is None or b.target == target)
            and (source is None or b.source == source)
        ]

    def _build(self, max_degree: int) -> None:
        for v in range(1, self.quiver.vertices + 1):
            self.basis.append(BasisElement(v - 1, 0, v, v, None, None))
        self._by_degree.append(list(range(self.quiver.vertices)))
        degree = 0
        while self._by_degree[degree]:
            if degree + 1 > max_degree:
                raise NotDynkin(
                    f"no finite basis below degree {max_degree}; "
                    "the diagram is not of finite type"
                )
            new = self._extend(degree)
            self._by_degree.append(new)
            degree += 1
            if not new:
                break

    def _extend(self, degree: int) -> List[int]:
        current = self._by_degree[degree]
        # formal products arrow . b for composable pairs
        pairs: List[Tuple[str, int]] = []
        for arrow in self.quiver.arrows:
            for b_idx in current:
                if self.basis[b_idx].target == arrow.source:
                    pairs.append((arrow.name, b_idx))
        if not pairs:
            return []
        slot = {pair: i for i, pair in enumerate(pairs)}

        relation_rows: List[List[Fraction]] = []
        if degree >= 1:
            for q_idx in self._by_degree[degree - 1]:
                q = self.basis[q_idx]
                row = [Fraction(0)] * len(pairs)
                for arrow in self.quiver.arrows:
                    if not arrow.original:
                        continue
                    if arrow.target == q.target:
                        inner = self._left_mult.get((arrow.partner, q_idx), {})
                        outer, sign = arrow.name, 1
                    elif arrow.source == q.target:
                        inner = self._left_mult.get((arrow.name, q_idx), {})
                        outer, sign = arrow.partner, -1
                    else:
                        continue
                    for mid_idx, coeff in inner.items():
                        row[slot[(outer, mid_idx)]] += sign * coeff
                if any(x != 0 for x in row):
                    relation_rows.append(row)

        if relation_rows:
            reduced, pivots = rref(fmat(relation_rows, n=len(pairs)))
        else:
            reduced, pivots = FMat(0, len(pairs), ()), ()
        pivot_slot = {p: k for k, p in enumerate(pivots)}
        free = [i for i in range(len(pairs)) if i not in pivot_slot]

        new_indices: List[int] = []
        pair_to_vec: Dict[int, SparseVec] = {}
        for f in free:
            arrow_name, rest = pairs[f]
            arrow = self.quiver.by_name[arrow_name]
            idx = len(self.basis)
            self.basis.append(
                BasisElement(
                    idx,
                    degree + 1,
                    self.basis[rest].source,
                    arrow.target,
                    arrow_name,
                    rest,
                )
            )
            new_indices.append(idx)
            pair_to_vec[f] = {idx: Fraction(1)}
        for p, k in pivot_slot.items():
            vec: SparseVec = {}
            for pos, f in enumerate(free):
                coeff = reduced.rows[k][f]
                if coeff != 0:
                    vec[next(iter(pair_to_vec[f]))] = -coeff
            pair_to_vec[p] = vec
        for pair, i in slot.items():
            arrow_name, b_idx = pair
            self._left_mult[(arrow_name, b_idx)] = pair_to_vec[i]
        return new_indices

    def product(self, x: int, y: int) -> SparseVec:
        """Product basis[x] . basis[y] as a sparse vector, composition order."""
        key = (x, y)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        bx, by = self.basis[x], self.basis[y]
        result: SparseVec
        if bx.source != by.target:
            result = {}
        elif bx.degree == 0:
            result = {y: Fraction(1)}
        elif by.degree == 0:
            result = {x: Fraction(1)}
        elif bx.degree == 1:
            result = dict(self._left_mult.get((bx.factor_arrow, y), {}))
        else:
            inner = self.product(bx.factor_rest, y)
            result = {}
            for mid, coeff in inner.items():
                for idx, c2 in self._left_mult.get((bx.factor_arrow, mid), {}).items():
                    value = result.get(idx, Fraction(0)) + coeff * c2
                    if value == 0:
                        result.pop(idx, None)
                    else:
                        result[idx] = value
        self._product_cache[key] = result
        return result


def multiply_vectors(
    algebra: PreprojectiveAlgebra, u: SparseVec, v: SparseVec
) -> SparseVec:
    out: SparseVec = {}
    for i, ci in u.items():
        for j, cj in v.items():
            for idx, c in algebra.product(i, j).items():
                value = out.get(idx, Fraction(0)) + ci * cj * c
                if value == 0:
                    out.pop(idx, None)
                else:
                    out[idx] = value
    return out
