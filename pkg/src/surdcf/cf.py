"""Expansion of quadratic surds into periodic continued fractions.

The automaton state is the surd (P + sqrt(D))/Q, advanced by the exact
integer recurrences

    a  = floor((P + sqrt(D)) / Q),
    P' = a*Q - P,
    Q' = (D - P'^2) / Q        (always an exact division).

For sqrt(D) itself the period ends at the first k >= 1 with Q_k = 1; for
general surds the cycle is detected by the first repeated (P, Q) state.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import InternalConsistencyError

Trace = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class QuadraticSurd:
    """(P + sqrt(D))/Q with D a non-square and Q dividing D - P^2.

    Non-normalized inputs are rejected rather than rescaled, so D stays
    stable across a scan.
    """

    D: int
    P: int
    Q: int

    def __post_init__(self):
        if self.D < 2 or isqrt(self.D) ** 2 == self.D:
            raise ValueError(f"D={self.D} must be a non-square >= 2")
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if (self.D - self.P * self.P) % self.Q != 0:
            raise ValueError(
                f"non-normalized surd: Q={self.Q} does not divide D - P^2"
            )


@dataclass(frozen=True)
class SqrtExpansion:
    """Full periodic expansion of sqrt(D).

    `period` is (a_1, ..., a_l), `T` its length, and `trace` (if kept) the
    per-step states (P_k, Q_k, a_k) for k = 1..l.
    """

    D: int
    a0: int
    period: tuple[int, ...]
    T: int
    trace: Trace | None = None


@dataclass(frozen=True)
class Convergent:
    i: int
    p: int
    q: int


def _floor_surd(P: int, Q: int, sq: int) -> int:
    # sq = isqrt(D); exactness relies on sqrt(D) being irrational
    num = P + sq
    if Q > 0:
        return num // Q
    q, r = divmod(num, Q)
    return q - 1 if r == 0 else q


def step(s: QuadraticSurd) -> tuple[int, QuadraticSurd]:
    """One Gauss-map step: returns (partial quotient, next state)."""
    a = _floor_surd(s.P, s.Q, isqrt(s.D))
    P1 = a * s.Q - s.P
    Q1 = (s.D - P1 * P1) // s.Q
    return a, QuadraticSurd(s.D, P1, Q1)


def _require_nonsquare(D: int) -> int:
    a0 = isqrt(D)
    if D < 2 or a0 * a0 == D:
        raise ValueError(f"D={D} must be a non-square >= 2")
    return a0


def sqrt_period(D: int) -> tuple[int, list[int]]:
    """(a0, period word) of sqrt(D); the fast trace-free path."""
    a0 = _require_nonsquare(D)
    P, Q = a0, D - a0 * a0
    period: list[int] = []
    append = period.append
    while True:
        a = (P + a0) // Q
        append(a)
        if Q == 1:
            return a0, period
        P = a * Q - P
        Q = (D - P * P) // Q


def period_length(D: int) -> int:
    """T_D without materializing the word."""
    a0 = _require_nonsquare(D)
    P, Q = a0, D - a0 * a0
    T = 1
    while Q != 1:
        a = (P + a0) // Q
        P = a * Q - P
        Q = (D - P * P) // Q
        T += 1
    return T


def count_in_period(D: int, letter: int) -> int:
    """Occurrences of `letter` in the period of sqrt(D), trace-free."""
    a0 = _require_nonsquare(D)
    P, Q = a0, D - a0 * a0
    count = 0
    while True:
        a = (P + a0) // Q
        if a == letter:
            count += 1
        if Q == 1:
            return count
        P = a * Q - P
        Q = (D - P * P) // Q


def expand_sqrt(D: int, with_trace: bool = True) -> SqrtExpansion:
    """Expand sqrt(D) = [a0; period...] with the (P_k, Q_k, a_k) trace.

    Terminates at the smallest k >= 1 with Q_k = 1, which is the period
    length; pass with_trace=False on large scans that only need letters.
    """
    a0 = _require_nonsquare(D)
    P, Q = a0, D - a0 * a0
    period: list[int] = []
    trace: list[tuple[int, int, int]] | None = [] if with_trace else None
    while True:
        a = (P + a0) // Q
        period.append(a)
        if with_trace:
            trace.append((P, Q, a))
        if Q == 1:
            break
        P = a * Q - P
        Q = (D - P * P) // Q
    return SqrtExpansion(
        D, a0, tuple(period), len(period), tuple(trace) if with_trace else None
    )


def _surd_cycle(
    D: int, P: int, Q: int
) -> tuple[list[int], list[int], tuple[int, int]]:
    """Iterate the Gauss map from (P, Q) until a state repeats.

    Returns (preperiod word, cycle word, state at cycle start).
    """
    sq = isqrt(D)
    seen: dict[tuple[int, int], int] = {}
    word: list[int] = []
    states: list[tuple[int, int]] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(word)
        states.append((P, Q))
        a = _floor_surd(P, Q, sq)
        word.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    return word[:start], word[start:], states[start]


def expand_surd(s: QuadraticSurd) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(preperiod, period) of a general quadratic surd, with the minimal
    preperiod found by state repetition."""
    pre, cycle, _ = _surd_cycle(s.D, s.P, s.Q)
    return tuple(pre), tuple(cycle)


def convergents(D: int, n: int) -> list[Convergent]:
    """Convergents p_i/q_i of sqrt(D) for i = -1 .. n."""
    e = expand_sqrt(D, with_trace=False)
    out = [Convergent(-1, 1, 0)]
    if n < 0:
        return out
    p_prev, q_prev = 1, 0
    p, q = e.a0, 1
    out.append(Convergent(0, p, q))
    for i in range(1, n + 1):
        a = e.period[(i - 1) % e.T]
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append(Convergent(i, p, q))
    return out


def occurrence_count(e: SqrtExpansion, a: int) -> int:
    """How many of a_1..a_l equal a."""
    return e.period.count(a)


def norm_identity_check(D: int, e: SqrtExpansion | None = None) -> bool:
    """p_{k-1}^2 - D q_{k-1}^2 == (-1)^k Q_k for k = 1..T, exactly."""
    if e is None or e.trace is None:
        e = expand_sqrt(D)
    p_prev, q_prev = 1, 0
    p, q = e.a0, 1
    sign = -1
    for k in range(e.T):
        Qk = e.trace[k][1]
        if p * p - D * q * q != sign * Qk:
            return False
        a = e.period[k]
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        sign = -sign
    return True


def validate_expansion(e: SqrtExpansion) -> None:
    """Assert every structural invariant of a sqrt expansion.

    Raises InternalConsistencyError on the first violation; used by range
    sweeps, not by the hot expansion path.
    """
    D, a0, T = e.D, e.a0, e.T
    if a0 != isqrt(D):
        raise InternalConsistencyError(f"D={D}: a0 != isqrt(D)")
    if e.period[-1] != 2 * a0:
        raise InternalConsistencyError(f"D={D}: last letter != 2*a0")
    for j in range(1, T):
        if e.period[j - 1] != e.period[T - 1 - j]:
            raise InternalConsistencyError(f"D={D}: period not palindromic")
    if e.trace is not None:
        if e.trace[-1][1] != 1:
            raise InternalConsistencyError(f"D={D}: Q_T != 1")
        for k, (P, Q, a) in enumerate(e.trace, start=1):
            if not (0 < P and 0 < Q and P * P < D and (D - P * P) % Q == 0):
                raise InternalConsistencyError(f"D={D}: bad trace entry k={k}")
            if k < T and Q == 1:
                raise InternalConsistencyError(f"D={D}: period not minimal")


def expansion_record(e: SqrtExpansion) -> dict:
    """Wire format of one expansion (one JSON object per line)."""
    return {"D": e.D, "a0": e.a0, "period": list(e.period), "T": e.T}
