"""Grothendieck group presentations and spaces of group-valued gradings.

The class group of a seed is presented by one generator per variable and
one relation per exchangeable column of the exchange matrix; its isomorphism
type falls out of the Smith normal form.  Gradings valued in a group A are
exactly homomorphisms from that presentation into A, which gives two
independent ways to compute their structure; `grading_space` runs both and
insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Tuple

from .intlin import (
    FgAbelianGroup,
    IntMatrix,
    SolutionSpace,
    canonical_invariant_factors,
    smith_normal_form,
    solve_hom_into_group,
)
from .seedcore import GradedSeed, Seed, mutate_graded_seed


@dataclass(frozen=True)
class K0Presentation:
    generators: Tuple[str, ...]
    relations: IntMatrix
    group: FgAbelianGroup


def presentation_from_exchange_matrix(seed: Seed) -> K0Presentation:
    """Cokernel of B acting on Z^r, presented on the variable classes."""
    decomposition = smith_normal_form(seed.matrix)
    orders = list(decomposition.diagonal)
    orders += [0] * (seed.n - len(orders))
    group = FgAbelianGroup(canonical_invariant_factors(orders))
    return K0Presentation(generators=seed.names, relations=seed.matrix, group=group)


def hom_structure(source: FgAbelianGroup, target: FgAbelianGroup) -> FgAbelianGroup:
    """Isomorphism type of Hom(source, target), factor by factor.

    Hom(Z, C) = C and Hom(Z/d, C) is the d-torsion of C, which on a cyclic
    factor Z/m is cyclic of order gcd(d, m) and vanishes on free factors.
    """
    orders = []
    for d in source.factors:
        for m in target.factors:
            if d == 0:
                orders.append(m)
            elif m != 0:
                orders.append(gcd(d, m))
    return FgAbelianGroup(canonical_invariant_factors(orders))


def grading_space(seed: Seed, group: FgAbelianGroup) -> SolutionSpace:
    """All gradings of the seed valued in `group`, with generators.

    Solves B^t . G = 0 directly, then recomputes the expected structure as
    Hom of the presented class group and checks the two answers agree.
    """
    space = solve_hom_into_group([list(row) for row in seed.matrix.rows], group)
    expected = hom_structure(presentation_from_exchange_matrix(seed).group, group)
    assert space.structure == expected, (
        f"grading space {space.structure.describe()} disagrees with "
        f"Hom computation {expected.describe()}"
    )
    return space


def transport_grading(graded: GradedSeed, sequence: Iterable[int]) -> GradedSeed:
    """Push a graded seed along a mutation path (1-based directions)."""
    current = graded
    for k in sequence:
        current = mutate_graded_seed(current, k)
    return current
