"""Simply laced Dynkin diagrams, root systems, and Weyl group words."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..errors import BadParameters
from .ratlin import fmat, solve_f

Edge = Tuple[int, int]


def dynkin_edges(kind: str, rank: int) -> List[Edge]:
    """Edges of a simply laced Dynkin diagram, 1-based, lexicographic."""
    if kind == "A":
        if rank < 1:
            raise BadParameters(f"type A needs rank >= 1, got {rank}")
        edges = [(i, i + 1) for i in range(1, rank)]
    elif kind == "D":
        if rank < 4:
            raise BadParameters(f"type D needs rank >= 4, got {rank}")
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    elif kind == "E":
        if rank not in (6, 7, 8):
            raise BadParameters(f"type E needs rank 6, 7 or 8, got {rank}")
        edges = [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)]
        edges += [(i, i + 1) for i in range(6, rank)]
    else:
        raise BadParameters(f"unknown Dynkin type {kind!r}")
    return sorted(edges)


@dataclass(frozen=True)
class DynkinDiagram:
    kind: str
    rank: int
    edges: Tuple[Edge, ...]

    def neighbours(self, v: int) -> Tuple[int, ...]:
        out = [b for a, b in self.edges if a == v]
        out += [a for a, b in self.edges if b == v]
        return tuple(sorted(out))


def dynkin_diagram(kind: str, rank: int) -> DynkinDiagram:
    return DynkinDiagram(kind, rank, tuple(dynkin_edges(kind, rank)))


def cartan_matrix(diagram: DynkinDiagram) -> Tuple[Tuple[int, ...], ...]:
    m = diagram.rank
    c = [[2 if i == j else 0 for j in range(m)] for i in range(m)]
    for a, b in diagram.edges:
        c[a - 1][b - 1] = -1
        c[b - 1][a - 1] = -1
    return tuple(tuple(row) for row in c)


def reflect(diagram: DynkinDiagram, j: int, v: Sequence) -> tuple:
    """Simple reflection s_j on a vector in simple-root coordinates."""
    c = cartan_matrix(diagram)
    pairing = sum(c[j - 1][i] * v[i] for i in range(diagram.rank))
    out = list(v)
    out[j - 1] = out[j - 1] - pairing
    return tuple(out)


def positive_roots(diagram: DynkinDiagram) -> List[Tuple[int, ...]]:
    """All positive roots in simple-root coordinates, sorted."""
    simples = [
        tuple(1 if i == j else 0 for i in range(diagram.rank))
        for j in range(diagram.rank)
    ]
    found = set(simples)
    frontier = list(simples)
    while frontier:
        root = frontier.pop()
        for j in range(1, diagram.rank + 1):
            image = reflect(diagram, j, root)
            if all(x >= 0 for x in image) and image not in found:
                found.add(image)
                frontier.append(image)
    return sorted(found)


def weyl_length(diagram: DynkinDiagram, word: Sequence[int]) -> int:
    """Length of the Weyl group element spelled by the word.

    Counted as the number of positive roots made negative, which does not
    depend on which end of the word acts first.
    """
    count = 0
    for root in positive_roots(diagram):
        v = root
        for letter in word:
            v = reflect(diagram, letter, v)
        if all(x <= 0 for x in v):
            count += 1
    return count


def is_reduced(diagram: DynkinDiagram, word: Sequence[int]) -> bool:
    return weyl_length(diagram, word) == len(word)


def fundamental_weight(diagram: DynkinDiagram, i: int) -> Tuple[Fraction, ...]:
    """Fundamental weight in simple-root coordinates."""
    c = fmat(cartan_matrix(diagram))
    target = [Fraction(1) if j == i - 1 else Fraction(0) for j in range(diagram.rank)]
    coords = solve_f(c, target)
    assert coords is not None
    return coords


def weyl_dimension_vector(
    diagram: DynkinDiagram, word: Sequence[int], k: int
) -> Tuple[int, ...]:
    """Dimension vector attached to position k of a Weyl group word.

    The word lists reflections outermost first, so position k acts first:
    the result is w_k = omega_{i_k} - s_{i_1}(s_{i_2}(... s_{i_k}(omega))).
    """
    if not 1 <= k <= len(word):
        raise BadParameters(f"position {k} outside word of length {len(word)}")
    v: Sequence = fundamental_weight(diagram, word[k - 1])
    for j in range(k - 1, -1, -1):
        v = reflect(diagram, word[j], v)
    weight = fundamental_weight(diagram, word[k - 1])
    diff = [weight[i] - v[i] for i in range(diagram.rank)]
    assert all(x.denominator == 1 for x in diff)
    return tuple(int(x) for x in diff)
