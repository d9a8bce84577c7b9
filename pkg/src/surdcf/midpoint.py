"""Half-period structure of even-period expansions.

When T_D = 2L, the states around the midpoint satisfy P_{L+1} = P_L and
4 Q_L Q_{L+1} = 4D - a_L^2 Q_L^2; for D = p or 2p (p prime) additionally
Q_L = 2 and P_L = a_L lies in {floor(sqrt(D)) - 1, floor(sqrt(D))} with
the parity of D.  Period parity itself obeys the mod-4 / mod-8 laws for
prime D.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cf import SqrtExpansion, expand_sqrt
from .errors import InternalConsistencyError


@dataclass(frozen=True)
class MidpointData:
    D: int
    L: int
    P_L: int
    Q_L: int
    a_L: int
    floor_sqrt: int


@dataclass(frozen=True)
class ParityClaims:
    even: bool
    div4: bool


@dataclass(frozen=True)
class ParityVerdict:
    D: int
    T: int
    predicted: ParityClaims
    observed: ParityClaims

    @property
    def agree(self) -> bool:
        return self.predicted == self.observed


def midpoint_data(D: int, e: SqrtExpansion | None = None) -> MidpointData | None:
    """Midpoint state of sqrt(D), or None when the period is odd.

    Both half-period identities are asserted; a violation means the
    expansion engine is broken, so it aborts instead of returning a
    verdict.
    """
    if e is None or e.trace is None:
        e = expand_sqrt(D)
    if e.T % 2:
        return None
    L = e.T // 2
    P_L, Q_L, a_L = e.trace[L - 1]
    P_next, Q_next, _ = e.trace[L]
    if P_next != P_L:
        raise InternalConsistencyError(f"D={D}: P_(L+1) != P_L at the midpoint")
    if 4 * Q_L * Q_next != 4 * D - a_L * a_L * Q_L * Q_L:
        raise InternalConsistencyError(f"D={D}: midpoint product identity failed")
    return MidpointData(D, L, P_L, Q_L, a_L, e.a0)


def verify_T2(p: int, form: str, e: SqrtExpansion | None = None) -> bool:
    """Midpoint claims for D = p or 2p with even period: Q_L = 2 and
    P_L = a_L in {a0 - 1, a0} with the parity of D."""
    if form not in ("p", "2p"):
        raise ValueError(f"form must be 'p' or '2p', got {form!r}")
    D = p if form == "p" else 2 * p
    md = midpoint_data(D, e)
    if md is None:
        raise ValueError(f"D={D} has odd period; midpoint claims do not apply")
    return (
        md.Q_L == 2
        and md.P_L == md.a_L
        and md.a_L in (md.floor_sqrt - 1, md.floor_sqrt)
        and md.a_L % 2 == D % 2
    )


def verify_C1_C2(p: int, e: SqrtExpansion | None = None) -> ParityVerdict:
    """Period parity of sqrt(p) against the mod-4 / mod-8 classification
    (odd prime p)."""
    if p == 2 or p % 2 == 0:
        raise ValueError("parity laws are stated for odd primes")
    if e is None:
        e = expand_sqrt(p, with_trace=False)
    predicted = ParityClaims(even=p % 4 == 3, div4=p % 8 == 7)
    observed = ParityClaims(even=e.T % 2 == 0, div4=e.T % 4 == 0)
    return ParityVerdict(p, e.T, predicted, observed)


def q_mod4_scan(p: int, e: SqrtExpansion | None = None) -> bool:
    """For p = 1 (mod 4): no Q_k = 2 (mod 4) over a full period."""
    if p % 4 != 1:
        raise ValueError("q_mod4_scan applies to primes p = 1 (mod 4)")
    if e is None or e.trace is None:
        e = expand_sqrt(p)
    return all(Q % 4 != 2 for _, Q, _ in e.trace)
