"""Exception hierarchy for the verifier."""


class HCVError(Exception):
    """Base class for every error raised by :mod:`hcv`."""


class NonConvergence(HCVError):
    """The root finder hit its iteration cap.

    Callers must treat the parameter point as unverified, never as false.
    """


class DegenerateParameter(HCVError):
    """A construction parameter sits on a singular value (e.g. beta in {0, pi})."""


class ZeroConstantTerm(HCVError):
    """Series division by a series whose constant term vanishes."""


class DegenerateShear(HCVError):
    """Shearing is impossible because 1 + omega(0) = 0."""


class HypothesisViolated(HCVError):
    """Cohn's rule needs |a_0| < |a_n| and the input does not satisfy it."""


class BranchMismatch(HCVError):
    """Parameters do not satisfy the hypotheses of the requested case branch."""


class SplitInconsistent(HCVError):
    """Column-split vectors do not add up to the column they split."""


class FormMismatch(HCVError):
    """Block and Schur-complement evaluations of a minor disagree."""
