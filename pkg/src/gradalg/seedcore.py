"""Seeds, matrix mutation and gradings.

A seed is an n x r integer exchange matrix whose principal r x r part is
skew-symmetrizable, together with variable names.  Rows r+1..n belong to
frozen variables and are unconstrained.  A grading assigns to every row an
element of a finitely generated abelian group subject to B^t . G = 0; that
condition is exactly what makes every exchange relation homogeneous, and it
is preserved by the mutation rule implemented here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import BadShape, GradingCondition, IndexOutOfRange, NonSkewSymmetrizable
from .intlin import FgAbelianGroup, IntMatrix, kernel_basis

MatrixLike = Union[IntMatrix, Sequence[Sequence[int]]]

INTEGERS = FgAbelianGroup((0,))


def _as_matrix(matrix: MatrixLike) -> IntMatrix:
    if isinstance(matrix, IntMatrix):
        return matrix
    return IntMatrix(matrix)


def _check_skew_symmetrizable(matrix: IntMatrix) -> None:
    """Require a positive diagonal D with (D . P) skew-symmetric, P the principal part."""
    r = matrix.n
    for i in range(r):
        if matrix[i][i] != 0:
            raise NonSkewSymmetrizable(f"nonzero diagonal entry at row {i + 1}")
        for j in range(i + 1, r):
            a, b = matrix[i][j], matrix[j][i]
            if (a == 0) != (b == 0) or a * b > 0:
                raise NonSkewSymmetrizable(
                    f"sign pattern fails at ({i + 1},{j + 1}): {a} vs {b}"
                )
    # propagate the symmetrizer ratios d_j / d_i = a / (-b) over each component
    scale: List[Optional[Fraction]] = [None] * r
    for start in range(r):
        if scale[start] is not None:
            continue
        scale[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                a, b = matrix[i][j], matrix[j][i]
                if a == 0:
                    continue
                ratio = scale[i] * Fraction(a, -b)
                if scale[j] is None:
                    scale[j] = ratio
                    stack.append(j)
                elif scale[j] != ratio:
                    raise NonSkewSymmetrizable(
                        f"no consistent symmetrizer along ({i + 1},{j + 1})"
                    )


class Seed:
    """Validated exchange matrix plus variable names."""

    __slots__ = ("matrix", "names")

    def __init__(self, matrix: MatrixLike, names: Optional[Sequence[str]] = None):
        m = _as_matrix(matrix)
        if m.n > m.m:
            raise BadShape(f"more exchangeable columns ({m.n}) than rows ({m.m})")
        _check_skew_symmetrizable(m)
        if names is None:
            names = tuple(f"x{i + 1}" for i in range(m.m))
        else:
            names = tuple(str(s) for s in names)
        if len(names) != m.m:
            raise BadShape(f"expected {m.m} names, got {len(names)}")
        if len(set(names)) != len(names):
            raise BadShape("variable names must be distinct")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "names", names)

    def __setattr__(self, name, value):
        raise AttributeError("Seed is immutable")

    @property
    def n(self) -> int:
        return self.matrix.m

    @property
    def r(self) -> int:
        return self.matrix.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return self.matrix == other.matrix and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.matrix, self.names))

    def __repr__(self) -> str:
        return f"Seed(n={self.n}, r={self.r}, names={self.names!r})"


@dataclass(frozen=True)
class Grading:
    """Group-valued degrees for the rows of an exchange matrix."""

    group: FgAbelianGroup
    values: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        reduced = tuple(self.group.reduce(v) for v in self.values)
        object.__setattr__(self, "values", reduced)


class GradedSeed:
    """Seed with any number of gradings, each checked against B^t . G = 0."""

    __slots__ = ("seed", "gradings")

    def __init__(self, seed: Seed, gradings: Sequence[Grading] = ()):
        gradings = tuple(gradings)
        B = seed.matrix
        for idx, grading in enumerate(gradings):
            if len(grading.values) != seed.n:
                raise BadShape(
                    f"grading {idx}: expected {seed.n} degrees, got {len(grading.values)}"
                )
            group = grading.group
            for j in range(seed.r):
                total = group.zero()
                for i in range(seed.n):
                    total = group.add(total, group.scale(B[i][j], grading.values[i]))
                if not group.is_zero(total):
                    raise GradingCondition(
                        f"grading {idx} fails B^t.G = 0 at column {j + 1}"
                    )
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "gradings", gradings)

    def __setattr__(self, name, value):
        raise AttributeError("GradedSeed is immutable")

    def __repr__(self) -> str:
        return f"GradedSeed({self.seed!r}, {len(self.gradings)} gradings)"


class ExchangeVectors(NamedTuple):
    plus: Tuple[int, ...]
    minus: Tuple[int, ...]


def exchange_vectors(seed: Seed, k: int) -> ExchangeVectors:
    """Exponent vectors of the two monomials exchanged at direction k (1-based).

    Both have entry -1 at position k; their difference is column k of the
    exchange matrix.
    """
    if not 1 <= k <= seed.r:
        raise IndexOutOfRange(f"k must be in 1..{seed.r}, got {k}")
    col = seed.matrix.column(k - 1)
    kk = k - 1
    plus = tuple(-1 if i == kk else max(c, 0) for i, c in enumerate(col))
    minus = tuple(-1 if i == kk else max(-c, 0) for i, c in enumerate(col))
    return ExchangeVectors(plus, minus)


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def mutate_matrix(matrix: MatrixLike, k: int) -> IntMatrix:
    """Matrix mutation in direction k (1-based column index)."""
    B = _as_matrix(matrix)
    if not 1 <= k <= B.n:
        raise IndexOutOfRange(f"k must be in 1..{B.n}, got {k}")
    kk = k - 1
    rows = []
    for i in range(B.m):
        row = []
        for j in range(B.n):
            if i == kk or j == kk:
                row.append(-B[i][j])
            else:
                row.append(B[i][j] + _sgn(B[i][kk]) * max(B[i][kk] * B[kk][j], 0))
        rows.append(row)
    return IntMatrix(rows)


def mutate_graded_seed(graded: GradedSeed, k: int) -> GradedSeed:
    """Mutate matrix and gradings together.

    The new degree in direction k is the old degree of the positive exchange
    monomial, which equals that of the negative one precisely because of the
    grading condition; all other degrees are unchanged.
    """
    seed = graded.seed
    plus = exchange_vectors(seed, k).plus
    new_matrix = mutate_matrix(seed.matrix, k)
    new_seed = Seed(new_matrix, names=seed.names)
    new_gradings = []
    for grading in graded.gradings:
        group = grading.group
        degree = group.zero()
        for i, c in enumerate(plus):
            if i == k - 1:
                continue
            degree = group.add(degree, group.scale(c, grading.values[i]))
        # plus has -1 at k itself: new deg = (monomial part) - old deg_k
        degree = group.add(degree, group.neg(grading.values[k - 1]))
        values = list(grading.values)
        values[k - 1] = degree
        new_gradings.append(Grading(group, tuple(values)))
    return GradedSeed(new_seed, tuple(new_gradings))


def standard_gradings(seed: Seed) -> GradedSeed:
    """Attach one integer grading per kernel vector of B^t.

    These span every Z-valued grading of the seed; there are n - rank(B)
    of them.
    """
    vectors = kernel_basis([list(r) for r in seed.matrix.transpose().rows])
    gradings = tuple(
        Grading(INTEGERS, tuple((v,) for v in vec)) for vec in vectors
    )
    return GradedSeed(seed, gradings)


def matrix_from_quiver(n: int, r: int, arrows: Sequence[Tuple[int, int]]) -> IntMatrix:
    """Exchange matrix of a quiver on vertices 1..n, first r exchangeable.

    Entry (i, j) counts arrows j -> i minus arrows i -> j, so opposite pairs
    cancel.
    """
    if r > n or n < 1:
        raise BadShape(f"bad vertex counts n={n}, r={r}")
    counts = [[0] * n for _ in range(n)]
    for src, tgt in arrows:
        if not (1 <= src <= n and 1 <= tgt <= n):
            raise BadShape(f"arrow ({src}, {tgt}) leaves 1..{n}")
        counts[src - 1][tgt - 1] += 1
    rows = [
        [counts[j][i] - counts[i][j] for j in range(r)]
        for i in range(n)
    ]
    return IntMatrix(rows)


def seed_to_document(graded: GradedSeed) -> dict:
    seed = graded.seed
    return {
        "n": seed.n,
        "r": seed.r,
        "B": [list(row) for row in seed.matrix.rows],
        "names": list(seed.names),
        "gradings": [
            {
                "factors": list(g.group.factors),
                "vectors": [list(v) for v in g.values],
            }
            for g in graded.gradings
        ],
    }


def seed_from_document(doc: dict) -> GradedSeed:
    if not isinstance(doc, dict):
        raise BadShape("seed document must be a JSON object")
    for key in ("n", "r", "B", "names"):
        if key not in doc:
            raise BadShape(f"seed document missing field {key!r}")
    matrix = IntMatrix(doc["B"])
    if matrix.m != doc["n"] or matrix.n != doc["r"]:
        raise BadShape("matrix shape disagrees with declared n, r")
    seed = Seed(matrix, names=doc["names"])
    gradings = []
    for entry in doc.get("gradings", []):
        if "factors" not in entry or "vectors" not in entry:
            raise BadShape("grading entry needs 'factors' and 'vectors'")
        group = FgAbelianGroup(tuple(entry["factors"]))
        vectors = tuple(tuple(v) for v in entry["vectors"])
        gradings.append(Grading(group, vectors))
    return GradedSeed(seed, tuple(gradings))


def seed_to_json(graded: GradedSeed) -> str:
    return json.dumps(seed_to_document(graded), separators=(",", ":"))


def seed_from_json(text: str) -> GradedSeed:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadShape(f"unparseable seed document: {exc}") from exc
    return seed_from_document(doc)
