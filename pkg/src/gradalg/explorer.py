"""Breadth-first enumeration of clusters and their graded variables.

Clusters are identified by the set of their exchangeable variables written
in the initial variables, so revisiting a known cluster along another
mutation path costs nothing.  Exploration stops either at the depth limit
or as soon as a whole frontier produces nothing new, in which case the
exchange graph is finite and fully known.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

from .errors import DepthLimitZero, UnknownGrading
from .laurent import ClusterState, LaurentPoly, degree_of, initial_state, mutate_cluster
from .seedcore import GradedSeed

Degree = Tuple[int, ...]


@dataclass(frozen=True)
class DiscoveredVariable:
    poly: LaurentPoly
    degrees: Tuple[Degree, ...]  # one entry per grading of the seed
    depth: int


@dataclass(frozen=True)
class ExplorationReport:
    graded: GradedSeed
    depth_limit: int
    closed: bool
    clusters_visited: int
    mutable_variables: Tuple[DiscoveredVariable, ...]
    frozen_variables: Tuple[DiscoveredVariable, ...]


def _cluster_key(state: ClusterState, r: int) -> FrozenSet[str]:
    return frozenset(v.serialize() for v in state.variables[:r])


def explore(graded: GradedSeed, depth_limit: int) -> ExplorationReport:
    """Walk the mutation graph out to `depth_limit` steps from the seed."""
    if depth_limit < 1:
        raise DepthLimitZero(f"depth limit must be at least 1, got {depth_limit}")
    seed = graded.seed
    r = seed.r
    gradings = graded.gradings

    def record(poly: LaurentPoly, depth: int) -> DiscoveredVariable:
        degrees = tuple(degree_of(poly, g) for g in gradings)
        return DiscoveredVariable(poly, degrees, depth)

    start = initial_state(seed)
    found: Dict[str, DiscoveredVariable] = {}
    for poly in start.variables[:r]:
        found[poly.serialize()] = record(poly, 0)
    frozen = tuple(record(poly, 0) for poly in start.variables[r:])

    visited = {_cluster_key(start, r)}
    frontier = [start]
    closed = False
    depth = 0
    while frontier and depth < depth_limit:
        depth += 1
        next_frontier = []
        for state in frontier:
            for k in range(1, r + 1):
                child = mutate_cluster(state, k)
                key = _cluster_key(child, r)
                if key in visited:
                    continue
                visited.add(key)
                next_frontier.append(child)
                poly = child.variables[k - 1]
                text = poly.serialize()
                if text not in found:
                    found[text] = record(poly, depth)
        if not next_frontier:
            closed = True
            break
        frontier = next_frontier

    return ExplorationReport(
        graded=graded,
        depth_limit=depth_limit,
        closed=closed,
        clusters_visited=len(visited),
        mutable_variables=tuple(found.values()),
        frozen_variables=frozen,
    )


def _grading_at(report: ExplorationReport, grading_index: int):
    gradings = report.graded.gradings
    if not 0 <= grading_index < len(gradings):
        raise UnknownGrading(
            f"grading index {grading_index} out of range for {len(gradings)} gradings"
        )
    return gradings[grading_index]


def degree_report(report: ExplorationReport, grading_index: int = 0) -> Counter:
    """Multiset of degrees of the discovered exchangeable variables."""
    _grading_at(report, grading_index)
    return Counter(v.degrees[grading_index] for v in report.mutable_variables)


@dataclass(frozen=True)
class BalancedVerdict:
    verdict: str  # "balanced" | "unbalanced" | "inconclusive"
    witness: Optional[Degree]


def balanced_check(report: ExplorationReport, grading_index: int = 0) -> BalancedVerdict:
    """Is the degree multiset symmetric under negation?

    Decisive only when exploration closed; otherwise the verdict is
    inconclusive, with a currently unmatched degree as witness when one
    exists.
    """
    grading = _grading_at(report, grading_index)
    counts = degree_report(report, grading_index)
    group = grading.group
    witness = None
    for degree in sorted(counts):
        if counts[degree] != counts.get(group.neg(degree), 0):
            witness = degree
            break
    if not report.closed:
        return BalancedVerdict("inconclusive", witness)
    if witness is None:
        return BalancedVerdict("balanced", None)
    return BalancedVerdict("unbalanced", witness)
