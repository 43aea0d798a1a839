"""Euler characteristics of quiver Grassmannians.

A quiver Grassmannian collects the subrepresentations of a fixed
representation with a prescribed dimension vector.  Its Euler
characteristic equals the value at 1 of the polynomial that counts
points over finite fields, so we count stable subspace tuples over
F_p for enough primes, interpolate, and evaluate.
"""

from fractions import Fraction
from itertools import combinations, product
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import BadParameters, InterpolationMismatch
from .modules import QuiverRep

IntRows = Tuple[Tuple[int, ...], ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _maps_mod_p(rep: QuiverRep, p: int) -> Dict[str, Tuple[int, int, IntRows]]:
    out = {}
    for name, mat in rep.maps.items():
        rows = tuple(
            tuple(
                e.numerator % p * pow(e.denominator % p, -1, p) % p
                for e in row
            )
            for row in mat.rows
        )
        out[name] = (mat.m, mat.n, rows)
    return out


def _subspaces(dim: int, k: int, p: int):
    """Yield (rows, pivots) for every k-dimensional subspace of F_p^dim.

    Rows are in reduced echelon form, so each subspace appears once.
    """
    if k == 0:
        yield (), ()
        return
    for pivots in combinations(range(dim), k):
        free = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, dim)
            if c not in pivots
        ]
        base = [[0] * dim for _ in range(k)]
        for r, pc in enumerate(pivots):
            base[r][pc] = 1
        for values in product(range(p), repeat=len(free)):
            rows = [list(row) for row in base]
            for (r, c), val in zip(free, values):
                rows[r][c] = val
            yield tuple(tuple(row) for row in rows), pivots


def _in_subspace(vec: List[int], rows, pivots, p: int) -> bool:
    x = list(vec)
    for row, pc in zip(rows, pivots):
        c = x[pc]
        if c:
            for j in range(pc, len(x)):
                x[j] = (x[j] - c * row[j]) % p
    return not any(x)


def _count_points(rep: QuiverRep, v: Tuple[int, ...], p: int) -> int:
    maps_p = _maps_mod_p(rep, p)
    choices = [
        list(_subspaces(rep.dims[i], v[i], p)) for i in range(len(rep.dims))
    ]
    count = 0
    for combo in product(*choices):
        stable = True
        for arrow in rep.quiver.arrows:
            m, n, mat = maps_p[arrow.name]
            basis, _ = combo[arrow.source - 1]
            target_rows, target_pivots = combo[arrow.target - 1]
            for u in basis:
                img = [
                    sum(mat[i][j] * u[j] for j in range(n)) % p
                    for i in range(m)
                ]
                if not _in_subspace(img, target_rows, target_pivots, p):
                    stable = False
                    break
            if not stable:
                break
        if stable:
            count += 1
    return count


def _lagrange(points: Sequence[Tuple[int, int]], t: int) -> Fraction:
    total = Fraction(0)
    for j, (xj, yj) in enumerate(points):
        term = Fraction(yj)
        for i, (xi, _) in enumerate(points):
            if i != j:
                term *= Fraction(t - xi, xj - xi)
        total += term
    return total


def quiver_grassmannian_euler(
    rep: QuiverRep,
    v: Sequence[int],
    degree_bound: Optional[int] = None,
) -> int:
    """Euler characteristic of the variety of subrepresentations of
    dimension vector ``v`` inside ``rep``.

    ``degree_bound`` overrides the default bound sum(v_i * (d_i - v_i))
    on the degree of the counting polynomial; lowering it trades safety
    for fewer primes.
    """
    dims = rep.dims
    if len(v) != len(dims):
        raise BadParameters(
            f"dimension vector has {len(v)} entries, representation has "
            f"{len(dims)} vertices"
        )
    v = tuple(int(c) for c in v)
    if any(c < 0 or c > d for c, d in zip(v, dims)):
        return 0
    if degree_bound is None:
        bound = sum(c * (d - c) for c, d in zip(v, dims))
    else:
        bound = degree_bound
        if bound < 0:
            raise BadParameters("degree bound must be nonnegative")

    bad = 1
    for mat in rep.maps.values():
        for row in mat.rows:
            for entry in row:
                bad = lcm(bad, entry.denominator)

    # bound + 1 interpolation points plus one more to detect a bad bound
    primes: List[int] = []
    candidate = 2
    while len(primes) < bound + 2:
        if _is_prime(candidate) and bad % candidate != 0:
            primes.append(candidate)
        candidate += 1

    counts = [(p, _count_points(rep, v, p)) for p in primes]
    sample, (check_p, check_n) = counts[:-1], counts[-1]
    predicted = _lagrange(sample, check_p)
    if predicted != check_n:
        raise InterpolationMismatch(
            f"point counts do not fit a degree {bound} polynomial: "
            f"predicted {predicted} over F_{check_p}, counted {check_n}"
        )
    value = _lagrange(sample, 1)
    if value.denominator != 1:
        raise InterpolationMismatch(
            "interpolated Euler characteristic is not an integer"
        )
    return int(value)
