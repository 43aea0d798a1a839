"""Error taxonomy shared across the package.

Every domain failure raises a subclass of GradalgError so the CLI can map
them to exit code 1 while genuine usage errors stay on argparse's exit 2.
"""


class GradalgError(Exception):
    """Base class for all domain errors raised by this package."""


class BadShape(GradalgError):
    """Matrix or vector dimensions do not match the declared shape."""


class NonSkewSymmetrizable(GradalgError):
    """The principal part of an exchange matrix admits no positive symmetrizer."""


class IndexOutOfRange(GradalgError):
    """A mutation or vertex index falls outside the mutable range 1..r."""


class GradingCondition(GradalgError):
    """A proposed grading vector fails B^t G = 0 in its group."""


class UnknownGrading(GradalgError):
    """A grading index refers to no attached grading."""


class InexactDivision(GradalgError):
    """An exchange-relation division left a remainder; the Laurent property failed."""


class ZeroPolynomial(GradalgError):
    """Degree of the zero polynomial is undefined."""


class NonHomogeneous(GradalgError):
    """A polynomial mixes degrees; carries two witness terms."""

    def __init__(self, message, witnesses=None):
        super().__init__(message)
        self.witnesses = witnesses or []


class MissingEmptySubmodule(GradalgError):
    """Grassmannian data lacks the mandatory chi(Gr_0) = 1 entry."""


class DepthLimitZero(GradalgError):
    """Exploration needs a positive depth limit."""


class Inconclusive(GradalgError):
    """Balancedness cannot be decided because exploration did not close."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotDynkin(GradalgError):
    """The diagram is not (or the construction escaped) type A/D/E."""


class NotReduced(GradalgError):
    """A Weyl group word is not a reduced expression."""


class AlgebraMismatch(GradalgError):
    """Modules over different algebras were combined."""


class RadicalFailure(GradalgError):
    """The trace-form radical criterion returned something inconsistent."""


class NotInFac(GradalgError):
    """The module is not generated by the fixed rigid module."""


class GramSingular(GradalgError):
    """The Hom-pairing matrix is singular; decomposition multiplicities are not determined."""


class NonIntegralSolution(GradalgError):
    """A decomposition multiplicity came out non-integral or negative."""


class InterpolationMismatch(GradalgError):
    """Finite-field point counts are not the expected polynomial in q."""


class NotInLattice(GradalgError):
    """A vector fails the congruence defining the sublattice."""


class BadParameters(GradalgError):
    """Model parameters are out of the supported range."""


class UnknownSession(GradalgError):
    """No session with the requested id."""
