"""Exact linear algebra over the integers and finitely generated abelian groups.

Everything here works with native Python integers, so results are exact at
any size.  The central tool is the Smith normal form with explicit unimodular
witnesses U and V; kernels, cokernel invariants and grading-vector solving
over an arbitrary finitely generated abelian group are all derived from it.

Pivoting rule: always the entry of smallest nonzero absolute value in the
remaining region (first occurrence on ties), which keeps intermediate entries
small and makes the output deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import BadShape

Vector = Tuple[int, ...]


class IntMatrix:
    """Immutable rectangular integer matrix."""

    __slots__ = ("rows", "m", "n")

    def __init__(self, rows: Iterable[Sequence[int]]):
        data = tuple(tuple(row) for row in rows)
        if not data or not data[0]:
            raise BadShape("matrix must have at least one row and one column")
        width = len(data[0])
        for row in data:
            if len(row) != width:
                raise BadShape("ragged rows")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise BadShape(f"non-integer entry {x!r}")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "m", len(data))
        object.__setattr__(self, "n", width)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    def __getitem__(self, i: int) -> Tuple[int, ...]:
        return self.rows[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)])

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(col) for col in zip(*self.rows)])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.m:
            raise BadShape(f"cannot multiply {self.m}x{self.n} by {other.m}x{other.n}")
        cols = other.transpose().rows
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.n:
            raise BadShape("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.rows)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A * V = S with U, V unimodular and S diagonal, d_i | d_{i+1} >= 0."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    diagonal: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _coerce(rows) -> IntMatrix:
    return rows if isinstance(rows, IntMatrix) else IntMatrix(rows)


def smith_normal_form(matrix) -> SmithDecomposition:
    """Smith normal form with unimodular row/column witnesses."""
    A = _coerce(matrix)
    m, n = A.m, A.n
    S = [list(row) for row in A.rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def row_sub(i, j, q):
        # row_i -= q * row_j
        S[i] = [a - q * b for a, b in zip(S[i], S[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_sub(i, j, q):
        # col_i -= q * col_j
        for row in S:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = abs(S[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    row_sub(i, t, S[i][t] // S[t][t])
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    col_sub(j, t, S[t][j] // S[t][t])
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            d = S[t][t]
            culprit = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % d:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            S[t] = [a + b for a, b in zip(S[t], S[culprit])]
            U[t] = [a + b for a, b in zip(U[t], U[culprit])]
        if t < min(m, n) and S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]

    diag = tuple(S[i][i] for i in range(min(m, n)))
    return SmithDecomposition(IntMatrix(U), IntMatrix(S), IntMatrix(V), diag)


def _sign_normalize(v: Vector) -> Vector:
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


def kernel_basis(matrix) -> List[Vector]:
    """Z-basis of the integer kernel: columns of V at zero Smith diagonal slots."""
    A = _coerce(matrix)
    dec = smith_normal_form(A)
    basis = []
    for j in range(A.n):
        d = dec.diagonal[j] if j < len(dec.diagonal) else 0
        if d == 0:
            basis.append(_sign_normalize(dec.V.column(j)))
    return basis


def _factorize(d: int) -> dict:
    out = {}
    p = 2
    while p * p <= d:
        while d % p == 0:
            out[p] = out.get(p, 0) + 1
            d //= p
        p += 1 if p == 2 else 2
    if d > 1:
        out[d] = out.get(d, 0) + 1
    return out


def canonical_invariant_factors(orders: Iterable[int]) -> Tuple[int, ...]:
    """Canonical invariant-factor chain d_1 | d_2 | ... with free ranks as trailing zeros."""
    orders = list(orders)
    free = sum(1 for d in orders if d == 0)
    primes: dict = {}
    for d in orders:
        if d > 1:
            for p, e in _factorize(d).items():
                primes.setdefault(p, []).append(e)
    width = max((len(v) for v in primes.values()), default=0)
    chain = [1] * width
    for p, exps in primes.items():
        exps.sort()
        exps = [0] * (width - len(exps)) + exps
        for idx, e in enumerate(exps):
            chain[idx] *= p**e
    return tuple(d for d in chain if d != 1) + (0,) * free


class FgAbelianGroup:
    """Finitely generated abelian group as a factor list; 0 encodes a free Z factor.

    Elements are integer tuples aligned with the factor list and are reduced
    componentwise into 0 <= x < d for each torsion factor d.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[int] = ()):
        fs = tuple(int(d) for d in factors)
        if any(d < 0 for d in fs):
            raise BadShape("factors must be nonnegative")
        object.__setattr__(self, "factors", tuple(d for d in fs if d != 1))

    def __setattr__(self, name, value):
        raise AttributeError("FgAbelianGroup is immutable")

    def __len__(self) -> int:
        return len(self.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, FgAbelianGroup) and canonical_invariant_factors(
            self.factors
        ) == canonical_invariant_factors(other.factors)

    def __hash__(self) -> int:
        return hash(canonical_invariant_factors(self.factors))

    def __repr__(self) -> str:
        return f"FgAbelianGroup({self.factors})"

    def is_trivial(self) -> bool:
        return not self.factors

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.factors if d == 0)

    def _check(self, v: Sequence[int]) -> None:
        if len(v) != len(self.factors):
            raise BadShape(f"element length {len(v)} != {len(self.factors)} factors")

    def reduce(self, v: Sequence[int]) -> Vector:
        self._check(v)
        return tuple(x % d if d else x for x, d in zip(v, self.factors))

    def zero(self) -> Vector:
        return (0,) * len(self.factors)

    def is_zero(self, v: Sequence[int]) -> bool:
        return self.reduce(v) == self.zero()

    def add(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        self._check(a)
        self._check(b)
        return self.reduce(tuple(x + y for x, y in zip(a, b)))

    def neg(self, a: Sequence[int]) -> Vector:
        return self.reduce(tuple(-x for x in a))

    def scale(self, c: int, a: Sequence[int]) -> Vector:
        return self.reduce(tuple(c * x for x in a))

    def describe(self) -> str:
        """Human-readable name like 'Z^2 x Z/2 x Z/4'; '0' for the trivial group."""
        chain = canonical_invariant_factors(self.factors)
        free = sum(1 for d in chain if d == 0)
        parts = []
        if free == 1:
            parts.append("Z")
        elif free > 1:
            parts.append(f"Z^{free}")
        parts.extend(f"Z/{d}" for d in chain if d)
        return " x ".join(parts) if parts else "0"


@dataclass
class SolutionSpace:
    """Generating set for {G in A^n : R^t G = 0} plus its abstract shape."""

    generators: List[Tuple[Vector, ...]]
    orders: List[int]
    structure: FgAbelianGroup


def _annihilator_generators(d: int, group: FgAbelianGroup):
    """Generators (element, additive order) of {a in A : d*a = 0}."""
    out = []
    for f, modulus in enumerate(group.factors):
        if modulus == 0:
            if d == 0:
                elt = tuple(1 if i == f else 0 for i in range(len(group.factors)))
                out.append((elt, 0))
        else:
            g = math.gcd(d, modulus)
            if g > 1:
                elt = tuple(modulus // g if i == f else 0 for i in range(len(group.factors)))
                out.append((elt, g))
    return out


def solve_hom_into_group(matrix, group: FgAbelianGroup) -> SolutionSpace:
    """Solve R^t G = 0 for G in A^n, R an n x r integer matrix.

    Change variables through the Smith form of R^t: with S = U R^t V diagonal
    and G = V H, the system decouples into d_j h_j = 0, so the solution set is
    generated by V e_j * a over annihilator generators a of each d_j.  Because
    V acts as an automorphism of A^n, those generators are independent and the
    abstract shape of the solution group is the direct sum of annihilators.
    """
    n = len(matrix.rows) if isinstance(matrix, IntMatrix) else len(matrix)
    r = (matrix.n if isinstance(matrix, IntMatrix) else (len(matrix[0]) if n else 0))
    if n == 0:
        return SolutionSpace([], [], FgAbelianGroup(()))
    if r == 0:
        generators, orders = [], []
        for j in range(n):
            for elt, order in _annihilator_generators(0, group):
                gen = tuple(elt if i == j else group.zero() for i in range(n))
                generators.append(gen)
                orders.append(order)
        return SolutionSpace(
            generators, orders, FgAbelianGroup(canonical_invariant_factors(orders))
        )

    R = _coerce(matrix)
    dec = smith_normal_form(R.transpose())
    generators, orders = [], []
    for j in range(n):
        d = dec.diagonal[j] if j < len(dec.diagonal) else 0
        for elt, order in _annihilator_generators(d, group):
            gen = tuple(group.scale(dec.V[i][j], elt) for i in range(n))
            generators.append(gen)
            orders.append(order)
    return SolutionSpace(
        generators, orders, FgAbelianGroup(canonical_invariant_factors(orders))
    )
