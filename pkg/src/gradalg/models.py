"""Ready-made seeds: the Markov quiver, Dynkin diagrams with a chosen
orientation, and the rectangles seed of a Grassmannian, plus the sublattice
of integer vectors with coordinate sum divisible by k that indexes its
content degrees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .errors import BadParameters, BadShape, NotInLattice
from .intlin import FgAbelianGroup, IntMatrix
from .preproj.dynkin import dynkin_edges
from .seedcore import GradedSeed, Grading, Seed, matrix_from_quiver

INTEGERS = FgAbelianGroup((0,))

MARKOV_MATRIX = IntMatrix([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def markov_seed() -> GradedSeed:
    """The Markov seed with its degree-one grading."""
    grading = Grading(INTEGERS, ((1,), (1,), (1,)))
    return GradedSeed(Seed(MARKOV_MATRIX), (grading,))


def dynkin_seed(
    kind: str, rank: int, orientation: Union[str, Sequence[int]] = "linear"
) -> Seed:
    """Seed of an oriented simply laced Dynkin diagram.

    `orientation` is either "linear" (every edge points from its lower to
    its higher label) or one sign per edge, edges taken in lexicographic
    order, with -1 reversing that edge.
    """
    edges = dynkin_edges(kind, rank)
    if orientation == "linear":
        signs: Sequence[int] = (1,) * len(edges)
    else:
        signs = tuple(orientation)
        if len(signs) != len(edges):
            raise BadParameters(
                f"orientation needs {len(edges)} signs, got {len(signs)}"
            )
        if any(s not in (1, -1) for s in signs):
            raise BadParameters("orientation entries must be +1 or -1")
    arrows = [
        (a, b) if sign == 1 else (b, a) for (a, b), sign in zip(edges, signs)
    ]
    return Seed(matrix_from_quiver(rank, rank, arrows))


Rectangle = Optional[Tuple[int, int]]  # None is the empty rectangle


def _rectangle_label(vertex: Rectangle, k: int) -> Tuple[int, ...]:
    if vertex is None:
        return tuple(range(1, k + 1))
    i, j = vertex
    return tuple(range(1, k - i + 1)) + tuple(range(k - i + j + 1, k + j + 1))


def _plucker_name(label: Tuple[int, ...], n: int) -> str:
    if n <= 9:
        return "p" + "".join(str(c) for c in label)
    return "p" + "_".join(str(c) for c in label)


def grassmannian_seed(k: int, n: int) -> GradedSeed:
    """Rectangles seed of the Grassmannian of k-planes in n-space.

    Vertices are the rectangles that fit in a k x (n - k) box, labelled by
    their Plucker coordinates; mutable ones avoid the last row and column.
    Carries two gradings: total Plucker degree and the content grading by
    indicator vectors of the labels.
    """
    if not 2 <= k <= n - 2:
        raise BadParameters(
            f"need 2 <= k <= n - 2 for exchangeable rectangles, got k={k}, n={n}"
        )
    cols = n - k
    mutable: List[Rectangle] = [
        (i, j) for i in range(1, k) for j in range(1, cols)
    ]
    frozen: List[Rectangle] = [None]
    frozen += [(k, j) for j in range(1, cols + 1)]
    frozen += [(i, cols) for i in range(1, k)]
    vertices = mutable + frozen
    index = {v: pos + 1 for pos, v in enumerate(vertices)}

    def resolve(i: int, j: int) -> int:
        if i == 0 or j == 0:
            return index[None]
        return index[(i, j)]

    arrows = []
    for i in range(1, k + 1):
        for j in range(1, cols + 1):
            arrows.append((resolve(i, j), resolve(i, j - 1)))
            arrows.append((resolve(i, j), resolve(i - 1, j)))
    for i in range(k):
        for j in range(cols):
            arrows.append((resolve(i, j), resolve(i + 1, j + 1)))

    r = len(mutable)
    total = len(vertices)
    matrix = matrix_from_quiver(total, r, arrows)
    labels = [_rectangle_label(v, k) for v in vertices]
    names = tuple(_plucker_name(label, n) for label in labels)
    plucker = Grading(INTEGERS, ((1,),) * total)
    content_group = FgAbelianGroup((0,) * n)
    content = Grading(
        content_group,
        tuple(
            tuple(1 if c + 1 in label else 0 for c in range(n)) for label in labels
        ),
    )
    return GradedSeed(Seed(matrix, names=names), (plucker, content))


@dataclass(frozen=True)
class SumLattice:
    """Vectors in Z^n whose coordinate sum is divisible by k.

    Basis: the differences e_(j+1) - e_j together with b = e_1 + ... + e_k;
    the coefficient of b is the coordinate sum divided by k.
    """

    n: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise BadParameters(f"need n >= 2, got {self.n}")
        if not 1 <= self.k <= self.n:
            raise BadParameters(f"need 1 <= k <= n, got k={self.k}")

    def _check_length(self, x: Sequence[int], length: int, what: str) -> Tuple[int, ...]:
        x = tuple(x)
        if len(x) != length:
            raise BadShape(f"{what} has length {len(x)}, expected {length}")
        return x

    def contains(self, x: Sequence[int]) -> bool:
        x = self._check_length(x, self.n, "vector")
        return sum(x) % self.k == 0

    def delta(self, x: Sequence[int]) -> int:
        x = self._check_length(x, self.n, "vector")
        total = sum(x)
        if total % self.k:
            raise NotInLattice(f"coordinate sum {total} not divisible by {self.k}")
        return total // self.k

    def to_basis(self, x: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
        x = self._check_length(x, self.n, "vector")
        d = self.delta(x)
        y = [x[i] - d * (1 if i < self.k else 0) for i in range(self.n)]
        coeffs = [-y[0]]
        for i in range(1, self.n - 1):
            coeffs.append(coeffs[-1] - y[i])
        return tuple(coeffs), d

    def from_basis(self, coeffs: Sequence[int], delta: int) -> Tuple[int, ...]:
        coeffs = self._check_length(coeffs, self.n - 1, "coefficient vector")
        padded = (0,) + tuple(coeffs) + (0,)
        return tuple(
            delta * (1 if i < self.k else 0) + padded[i] - padded[i + 1]
            for i in range(self.n)
        )
