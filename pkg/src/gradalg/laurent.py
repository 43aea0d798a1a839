"""Exact Laurent polynomial arithmetic over the integers.

Cluster variables are stored as dictionaries mapping exponent tuples to
integer coefficients.  Mutation divides an exchange binomial by the old
variable; by the Laurent phenomenon that division is exact whenever the
state really arose from a seed, and `InexactDivision` flags any drift.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from .errors import (
    BadShape,
    IndexOutOfRange,
    InexactDivision,
    MissingEmptySubmodule,
    NonHomogeneous,
    ZeroPolynomial,
)
from .intlin import IntMatrix
from .seedcore import Grading, Seed, exchange_vectors, mutate_matrix

Exponent = Tuple[int, ...]


class LaurentPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int]):
        if nvars < 1:
            raise BadShape("need at least one variable")
        clean: Dict[Exponent, int] = {}
        for exp, coeff in terms.items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise BadShape(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if not all(isinstance(e, int) and not isinstance(e, bool) for e in exp):
                raise BadShape(f"non-integer exponent {exp}")
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise BadShape(f"non-integer coefficient {coeff!r}")
            if coeff != 0:
                clean[exp] = clean.get(exp, 0) + coeff
                if clean[exp] == 0:
                    del clean[exp]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, value: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, nvars: int, exponent: Exponent, coeff: int = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exponent): coeff})

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise BadShape(f"mixed variable counts {self.nvars} and {other.nvars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPoly(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        out: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    def __pow__(self, power: int) -> "LaurentPoly":
        if not isinstance(power, int) or power < 0:
            raise BadShape(f"exponent must be a nonnegative integer, got {power!r}")
        result = LaurentPoly.one(self.nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.nvars, tuple(sorted(self.terms.items()))))
            )
        return self._hash

    def serialize(self) -> str:
        """Canonical string: 'coeff:e1,...,en' per term, sorted by exponent."""
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            parts.append(f"{self.terms[exp]}:{','.join(str(e) for e in exp)}")
        return ";".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self.terms!r})"


def _shift(terms: Mapping[Exponent, int], offset: Exponent) -> Dict[Exponent, int]:
    return {tuple(e + o for e, o in zip(exp, offset)): c for exp, c in terms.items()}


def divide_exact(numerator: LaurentPoly, divisor: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials; raises InexactDivision otherwise.

    Both operands are shifted into ordinary polynomials first (lowest
    exponents of a product add coordinatewise over a domain, so the shift
    cannot hide a genuine quotient), then reduced by lexicographically
    leading terms.
    """
    numerator._check_compatible(divisor)
    if not divisor.terms:
        raise ZeroPolynomial("division by the zero polynomial")
    if not numerator.terms:
        return LaurentPoly.zero(numerator.nvars)
    nvars = numerator.nvars
    num_min = tuple(min(exp[i] for exp in numerator.terms) for i in range(nvars))
    div_min = tuple(min(exp[i] for exp in divisor.terms) for i in range(nvars))
    rem = _shift(numerator.terms, tuple(-v for v in num_min))
    div = _shift(divisor.terms, tuple(-v for v in div_min))
    lead_div = max(div)
    lead_coeff = div[lead_div]
    quotient: Dict[Exponent, int] = {}
    while rem:
        lead_rem = max(rem)
        diff = tuple(a - b for a, b in zip(lead_rem, lead_div))
        if any(d < 0 for d in diff):
            raise InexactDivision("leading monomial not divisible")
        coeff, residue = divmod(rem[lead_rem], lead_coeff)
        if residue:
            raise InexactDivision("leading coefficient not divisible")
        quotient[diff] = coeff
        for exp, c in div.items():
            target = tuple(a + b for a, b in zip(diff, exp))
            value = rem.get(target, 0) - coeff * c
            if value:
                rem[target] = value
            else:
                rem.pop(target, None)
    offset = tuple(a - b for a, b in zip(num_min, div_min))
    return LaurentPoly(nvars, _shift(quotient, offset))


@dataclass(frozen=True)
class ClusterState:
    """A seed together with the current cluster as Laurent polynomials."""

    seed: Seed
    variables: Tuple[LaurentPoly, ...]


def initial_state(seed: Seed) -> ClusterState:
    n = seed.n
    variables = tuple(
        LaurentPoly.monomial(n, tuple(1 if j == i else 0 for j in range(n)))
        for i in range(n)
    )
    return ClusterState(seed, variables)


def mutate_cluster(state: ClusterState, k: int) -> ClusterState:
    """Replace variable k (1-based, exchangeable) by its exchange partner."""
    seed = state.seed
    if not 1 <= k <= seed.r:
        raise IndexOutOfRange(f"k must be in 1..{seed.r}, got {k}")
    ev = exchange_vectors(seed, k)
    n = seed.n
    plus_part = LaurentPoly.one(n)
    minus_part = LaurentPoly.one(n)
    for i in range(n):
        if i == k - 1:
            continue
        if ev.plus[i]:
            plus_part = plus_part * state.variables[i] ** ev.plus[i]
        if ev.minus[i]:
            minus_part = minus_part * state.variables[i] ** ev.minus[i]
    new_var = divide_exact(plus_part + minus_part, state.variables[k - 1])
    variables = list(state.variables)
    variables[k - 1] = new_var
    new_seed = Seed(mutate_matrix(seed.matrix, k), names=seed.names)
    return ClusterState(new_seed, tuple(variables))


def degree_of(poly: LaurentPoly, grading: Grading) -> Tuple[int, ...]:
    """Common degree of all monomials, or NonHomogeneous with two witnesses."""
    if not poly.terms:
        raise ZeroPolynomial("the zero polynomial has no degree")
    if len(grading.values) != poly.nvars:
        raise BadShape(
            f"grading has {len(grading.values)} degrees for {poly.nvars} variables"
        )
    group = grading.group
    result = None
    first_exp = None
    for exp in poly.terms:
        degree = group.zero()
        for e, value in zip(exp, grading.values):
            if e:
                degree = group.add(degree, group.scale(e, value))
        if result is None:
            result, first_exp = degree, exp
        elif degree != result:
            raise NonHomogeneous(
                f"monomials {first_exp} and {exp} have degrees {result} and {degree}",
                witnesses=((first_exp, result), (exp, degree)),
            )
    return result


def evaluate_cluster_character(
    matrix: IntMatrix, index: Exponent, data: Mapping[Exponent, int]
) -> LaurentPoly:
    """Laurent polynomial x^index * sum_v chi(v) x^(-B.v).

    `data` maps submodule dimension vectors (length r) to Euler
    characteristics; the empty submodule must appear with multiplicity one.
    """
    n, r = matrix.m, matrix.n
    index = tuple(index)
    if len(index) != n:
        raise BadShape(f"index has length {len(index)}, expected {n}")
    empty = (0,) * r
    items = {tuple(v): chi for v, chi in data.items()}
    if items.get(empty) != 1:
        raise MissingEmptySubmodule(
            "submodule data must contain the zero vector with multiplicity 1"
        )
    terms: Dict[Exponent, int] = {}
    for v, chi in items.items():
        if len(v) != r:
            raise BadShape(f"dimension vector {v} has length {len(v)}, expected {r}")
        exp = tuple(
            index[i] - sum(matrix[i][j] * v[j] for j in range(r)) for i in range(n)
        )
        terms[exp] = terms.get(exp, 0) + chi
    return LaurentPoly(n, terms)
