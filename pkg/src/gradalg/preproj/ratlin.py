"""Exact linear algebra over the rationals.

Matrices carry their shape explicitly so that zero-dimensional spaces
(which occur constantly as vertex components of quiver representations)
behave correctly.
"""

from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

Vec = Tuple[Fraction, ...]


class FMat(NamedTuple):
    m: int
    n: int
    rows: Tuple[Vec, ...]


def fmat(rows: Sequence[Sequence], n: Optional[int] = None) -> FMat:
    converted = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if converted:
        width = len(converted[0])
        if any(len(row) != width for row in converted):
            raise ValueError("ragged rows")
        if n is not None and n != width:
            raise ValueError("width mismatch")
        return FMat(len(converted), width, converted)
    return FMat(0, 0 if n is None else n, ())


def zero_f(m: int, n: int) -> FMat:
    return FMat(m, n, ((Fraction(0),) * n,) * m)


def identity_f(n: int) -> FMat:
    rows = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )
    return FMat(n, n, rows)


def transpose_f(a: FMat) -> FMat:
    rows = tuple(tuple(a.rows[i][j] for i in range(a.m)) for j in range(a.n))
    return FMat(a.n, a.m, rows)


def mul(a: FMat, b: FMat) -> FMat:
    if a.n != b.m:
        raise ValueError("shape mismatch in mul")
    bt = transpose_f(b)
    rows = tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt.rows)
        for row in a.rows
    )
    return FMat(a.m, b.n, rows)


def mat_vec(a: FMat, v: Sequence) -> Vec:
    vv = tuple(Fraction(x) for x in v)
    if len(vv) != a.n:
        raise ValueError("shape mismatch in mat_vec")
    return tuple(sum((x * y for x, y in zip(row, vv)), Fraction(0)) for row in a.rows)


def vstack(a: FMat, b: FMat) -> FMat:
    if a.n != b.n and a.m and b.m:
        raise ValueError("width mismatch in vstack")
    n = a.n if a.m else b.n
    return FMat(a.m + b.m, n, a.rows + b.rows)


def hstack(a: FMat, b: FMat) -> FMat:
    if a.m != b.m:
        raise ValueError("height mismatch in hstack")
    rows = tuple(ra + rb for ra, rb in zip(a.rows, b.rows))
    return FMat(a.m, a.n + b.n, rows)


def rref(a: FMat) -> Tuple[FMat, Tuple[int, ...]]:
    rows = [list(r) for r in a.rows]
    pivots: List[int] = []
    lead = 0
    for col in range(a.n):
        pivot_row = None
        for i in range(lead, a.m):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
        inv = Fraction(1) / rows[lead][col]
        rows[lead] = [x * inv for x in rows[lead]]
        for i in range(a.m):
            if i != lead and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == a.m:
            break
    return FMat(a.m, a.n, tuple(tuple(r) for r in rows)), tuple(pivots)


def rank_f(a: FMat) -> int:
    return len(rref(a)[1])


def nullspace_f(a: FMat) -> List[Vec]:
    r, pivots = rref(a)
    free = [j for j in range(a.n) if j not in pivots]
    basis: List[Vec] = []
    for f in free:
        v = [Fraction(0)] * a.n
        v[f] = Fraction(1)
        for row_index, p in enumerate(pivots):
            v[p] = -r.rows[row_index][f]
        basis.append(tuple(v))
    return basis


def solve_f(a: FMat, b: Sequence) -> Optional[Vec]:
    bb = tuple(Fraction(x) for x in b)
    if len(bb) != a.m:
        raise ValueError("shape mismatch in solve_f")
    aug = FMat(a.m, a.n + 1, tuple(row + (bi,) for row, bi in zip(a.rows, bb)))
    r, pivots = rref(aug)
    if a.n in pivots:
        return None
    x = [Fraction(0)] * a.n
    for row_index, p in enumerate(pivots):
        x[p] = r.rows[row_index][a.n]
    return tuple(x)


def row_space(vectors: Sequence[Sequence]) -> List[Vec]:
    if not vectors:
        return []
    width = len(vectors[0])
    r, pivots = rref(fmat(vectors, n=width))
    return [r.rows[i] for i in range(len(pivots))]


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    if not basis:
        return all(Fraction(x) == 0 for x in v)
    a = transpose_f(fmat(basis))
    return solve_f(a, v) is not None


def intersect_spaces(
    u: Sequence[Sequence], v: Sequence[Sequence], dim: int
) -> List[Vec]:
    """Basis of span(u) meet span(v) inside Q^dim."""
    ub = row_space(u)
    vb = row_space(v)
    if not ub or not vb:
        return []
    # columns: coefficients on u-basis then v-basis; rows: ambient coords
    cols = [tuple(w) for w in ub] + [tuple(-x for x in w) for w in vb]
    a = transpose_f(fmat(cols, n=dim))
    meet = []
    for coeffs in nullspace_f(a):
        w = [Fraction(0)] * dim
        for c, basis_vec in zip(coeffs[: len(ub)], ub):
            for i in range(dim):
                w[i] += c * basis_vec[i]
        meet.append(tuple(w))
    return row_space(meet)


def quotient_with_section(sub_basis: Sequence[Sequence], dim: int) -> Tuple[FMat, FMat]:
    """Projection Q^dim -> Q^dim/span(sub_basis) plus a linear section.

    Quotient coordinates are the non-pivot coordinates after reducing
    against the row-reduced subspace basis, so the section is just the
    inclusion of those coordinate vectors.
    """
    basis = row_space(sub_basis)
    reduced = fmat(basis, n=dim) if basis else FMat(0, dim, ())
    pivots = tuple(
        next(j for j in range(dim) if row[j] != 0) for row in reduced.rows
    )
    free = [j for j in range(dim) if j not in pivots]
    pivot_slot = {p: k for k, p in enumerate(pivots)}
    q_rows = []
    for f in free:
        # coordinate f of e_j after reducing e_j against the basis rows
        row = []
        for j in range(dim):
            if j == f:
                row.append(Fraction(1))
            elif j in pivot_slot:
                row.append(-reduced.rows[pivot_slot[j]][f])
            else:
                row.append(Fraction(0))
        q_rows.append(tuple(row))
    q = FMat(len(free), dim, tuple(q_rows))
    sec_rows = tuple(
        tuple(Fraction(1) if free[c] == i else Fraction(0) for c in range(len(free)))
        for i in range(dim)
    )
    section = FMat(dim, len(free), sec_rows)
    return q, section
