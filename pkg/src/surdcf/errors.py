"""Error classes shared across the package.

Two failure modes must never be conflated with ordinary precondition
errors (which raise ValueError): a counterexample to a proven statement,
and a broken by-construction identity.  Both map to exit status 2 in the
CLI so a scan cannot silently swallow either.
"""


class TheoremFalsified(Exception):
    """A proven statement failed on a concrete instance.

    This is a counterexample report.  On a correct implementation it never
    fires; if it does, the instance is printed, not suppressed.
    """


class InternalConsistencyError(Exception):
    """An identity that holds by construction failed.

    The expansion engine itself is wrong: abort the computation rather
    than emit a verdict.
    """


class PrecisionError(Exception):
    """A certified interval cannot reach the requested width within the
    configured summation / precision cap."""
