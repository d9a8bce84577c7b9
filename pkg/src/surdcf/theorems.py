"""Predicted classifications of the structure theorems, checked against
actual expansions.

Each predicate encodes one proven statement about periods of sqrt(p) and
sqrt(2p): odd-occurrence letters, forced 1s when 4 | T, the continuant
midpoint equality, the prime-power midpoint, occurrence sets of 1, and
Pell solvability laws.  A disagreement is a counterexample and raises
TheoremFalsified rather than returning False.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import isqrt

from .cf import SqrtExpansion, count_in_period, expand_sqrt
from .continuant import continuant
from .errors import TheoremFalsified
from .kernel import is_square, primes_between

FORMS = ("p", "2p")


@dataclass(frozen=True)
class TAClaim:
    a: int
    p: int
    form: str
    predicted_odd: bool
    witness_interval: str


@dataclass(frozen=True)
class LSetResult:
    i: int
    bound: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class PellVerdict:
    D: int
    c: int
    solvable: bool
    witness: tuple[int, int] | None


def _form_D(p: int, form: str) -> int:
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    return p if form == "p" else 2 * p


def predict_TA(
    a: int, p: int, form: str, period_even: bool | None = None
) -> TAClaim:
    """Pure arithmetic classification of whether `a` occurs an odd number
    of times in the period of sqrt(p) / sqrt(2p).

    The 2p second clause genuinely depends on the parity of T_2p; it is
    taken from `period_even` or computed from the expansion (no congruence
    shortcut exists).
    """
    if a < 1:
        raise ValueError("partial quotients are positive")
    odd = False
    note = ""
    if form == "p":
        if a % 2:
            if p % 4 == 3 and a * a < p < (a + 2) ** 2:
                odd, note = True, "odd a: p=3 (mod 4), a^2 < p < (a+2)^2"
        else:
            if a * a < 4 * p < (a + 2) ** 2:
                odd, note = True, "even a: a^2/4 < p < (a+2)^2/4"
    else:
        D = _form_D(p, form)
        if a % 2 == 0:
            if a * a < 8 * p < (a + 2) ** 2:
                odd, note = True, "even a: a^2/8 < p < (a+2)^2/8"
            elif a * a < 2 * p < (a + 2) ** 2:
                if period_even is None:
                    period_even = expand_sqrt(D, with_trace=False).T % 2 == 0
                if period_even:
                    odd, note = True, "even a: a^2/2 < p < (a+2)^2/2 and 2 | T"
    return TAClaim(a, p, form, odd, note)


def observed_odd_letters(e: SqrtExpansion) -> set[int]:
    """Letters occurring an odd number of times in the period."""
    return {a for a, c in Counter(e.period).items() if c % 2}


def predicted_odd_letters(
    p: int, form: str, e: SqrtExpansion
) -> set[int]:
    """All letters predicted to occur an odd number of times.

    Only a0-1, a0, and 2a0 can satisfy the interval clauses (each clause
    pins a to floor of a square root), so those are the only candidates
    that need the pure predicate.
    """
    even = e.T % 2 == 0
    out = set()
    for a in {e.a0 - 1, e.a0, 2 * e.a0}:
        if a >= 1 and predict_TA(a, p, form, period_even=even).predicted_odd:
            out.add(a)
    return out


def verify_TA(
    a: int, p: int, form: str, e: SqrtExpansion | None = None
) -> bool:
    """Predicted parity equals observed occurrence parity for one letter
    (zero occurrences count as even)."""
    D = _form_D(p, form)
    if e is None:
        e = expand_sqrt(D, with_trace=False)
    claim = predict_TA(a, p, form, period_even=e.T % 2 == 0)
    return claim.predicted_odd == (e.period.count(a) % 2 == 1)


def verify_TA_exhaustive(p: int, form: str, e: SqrtExpansion) -> set[int]:
    """Symmetric difference of predicted and observed odd-letter sets
    (empty on agreement); equivalent to running verify_TA for every a up
    to the largest letter."""
    return predicted_odd_letters(p, form, e) ^ observed_odd_letters(e)


def verify_TB(D: int, e: SqrtExpansion | None = None) -> int:
    """For D = p or 2p with 4 | T_D: return a position j (1-based) with
    a_j = 1.  Absence of such a position falsifies the theorem."""
    if e is None:
        e = expand_sqrt(D, with_trace=False)
    if e.T % 4:
        raise ValueError(f"D={D}: TB requires 4 | T, got T={e.T}")
    try:
        return e.period.index(1) + 1
    except ValueError:
        raise TheoremFalsified(
            f"D={D}: 4 | T_D={e.T} but no partial quotient equals 1"
        ) from None


def ta2_positions(m: int) -> tuple[int, ...]:
    """The refined same-parity index set for T = 4m, as literally stated:
    {2, 4, ..., 2*ceil(m/2)-2, m, 2*floor(m/2)+3, ..., 2m-5, 2m-3}."""
    evens = range(2, 2 * ((m + 1) // 2) - 1, 2)
    tail = range(2 * (m // 2) + 3, 2 * m - 2, 2)
    return tuple(sorted({*evens, m, *tail}))


def verify_TA2(D: int, e: SqrtExpansion | None = None) -> bool:
    """Position claims for the forced 1 when T_D = 4m.

    Different parity of floor(sqrt(D)) and D: a_(2m-1) = a_(2m+1) = 1.
    Same parity: a_j = 1 for some j in the refined index set; a 1 in the
    first half occurring only outside that set is reported as a
    falsification, never suppressed.
    """
    if e is None:
        e = expand_sqrt(D, with_trace=False)
    if e.T % 4:
        raise ValueError(f"D={D}: TA2 requires 4 | T, got T={e.T}")
    m = e.T // 4
    if e.a0 % 2 != D % 2:
        if e.period[2 * m - 2] == 1 and e.period[2 * m] == 1:
            return True
        raise TheoremFalsified(
            f"D={D}: different-parity branch, a_(2m-1), a_(2m+1) not both 1"
        )
    positions = ta2_positions(m)
    if any(e.period[j - 1] == 1 for j in positions):
        return True
    if 1 in e.period[: 2 * m - 1]:
        raise TheoremFalsified(
            f"D={D}: same-parity branch, 1 occurs only outside {positions}"
        )
    raise TheoremFalsified(f"D={D}: 4 | T_D but no 1 in the first half-period")


def c3_check(D: int, e: SqrtExpansion | None = None) -> bool | None:
    """Continuant midpoint equality for same-parity even periods.

    With T = 2L and inner prefix (a_1 .. a_(L-1)) this is
    K(a_2..a_(L-1)) == 2 K(a_1..a_(L-2)); both sides are the empty-word
    seeds when L <= 2.  Returns None when the parity precondition filters
    D out.
    """
    if e is None:
        e = expand_sqrt(D, with_trace=False)
    if e.T % 2:
        raise ValueError(f"D={D}: even period required, got T={e.T}")
    if e.a0 % 2 != D % 2:
        return None
    L = e.T // 2
    if L == 1:
        return True  # both sides are the K_(-1) = 0 seed
    inner = e.period[: L - 1]
    return continuant(inner[1:]) == 2 * continuant(inner[:-1])


def mod8_pattern_check(p: int, e: SqrtExpansion | None = None) -> bool | None:
    """For p = 3 (mod 8) whose period avoids 1: the middle quotient equals
    floor(sqrt(p)), which is odd.  Returns None when a 1 occurs."""
    if p % 8 != 3:
        raise ValueError("applies to primes p = 3 (mod 8)")
    if e is None:
        e = expand_sqrt(p, with_trace=False)
    if 1 in e.period:
        return None
    if e.T % 2:
        raise TheoremFalsified(f"p={p}: T_p odd for p = 3 (mod 8)")
    a_L = e.period[e.T // 2 - 1]
    if a_L == e.a0 and e.a0 % 2 == 1:
        return True
    raise TheoremFalsified(
        f"p={p}: no 1 in period but middle quotient {a_L} != odd floor sqrt {e.a0}"
    )


def prime_power_midpoint(p: int, n: int, form: str) -> bool | None:
    """For D = p^n or 2p^n (odd n) with even period and floor(sqrt(D))
    of different parity than D: a_(L+1) = 1.

    Returns None when D is square or either precondition filters it out.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    D = p**n if form == "p" else 2 * p**n if form == "2p" else None
    if D is None:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    if D < 2 or is_square(D):
        return None
    e = expand_sqrt(D, with_trace=False)
    if e.T % 2 or e.a0 % 2 == D % 2:
        return None
    L = e.T // 2
    if e.period[L] == 1:
        return True
    raise TheoremFalsified(
        f"D={D}=({form} with n={n}): a_(L+1)={e.period[L]} != 1"
    )


def l_sets_scan(bound: int, primes: tuple[int, ...] | None = None) -> dict[int, list[int]]:
    """Map odd occurrence-counts of the letter 1 to the primes attaining
    them, over all primes <= bound."""
    if primes is None:
        primes = primes_between(1, bound).primes
    out: dict[int, list[int]] = {}
    for p in primes:
        c = count_in_period(p, 1)
        if c % 2:
            out.setdefault(c, []).append(p)
    return out


def l_sets(i: int, bound: int) -> LSetResult:
    """Primes p <= bound whose sqrt(p) period contains 1 exactly i times."""
    members = [
        p
        for p in primes_between(1, bound).primes
        if count_in_period(p, 1) == i
    ]
    return LSetResult(i, bound, tuple(members))


def _pell_scan(D: int, e: SqrtExpansion | None = None) -> dict[int, tuple[int, int]]:
    """First witness for each c in {1, -1, 2, -2} realized as (-1)^k Q_k
    along one period (two when T is odd, so both signs meet every Q)."""
    if e is None or e.trace is None:
        e = expand_sqrt(D)
    steps = e.T if e.T % 2 == 0 else 2 * e.T
    found: dict[int, tuple[int, int]] = {}
    p_prev, q_prev = 1, 0
    p, q = e.a0, 1
    sign = -1
    for k in range(1, steps + 1):
        v = sign * e.trace[(k - 1) % e.T][1]
        if v in (1, -1, 2, -2) and v not in found:
            if p * p - D * q * q != v:
                raise TheoremFalsified(
                    f"D={D}: witness ({p},{q}) fails x^2-Dy^2={v}"
                )
            found[v] = (p, q)
        a = e.period[(k - 1) % e.T]
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        sign = -sign
    return found


def pell_solvable(D: int, c: int, e: SqrtExpansion | None = None) -> PellVerdict:
    """Solvability of x^2 - D y^2 = c for c in {1, -1, 2, -2} by scanning
    (-1)^k Q_k over one period (two periods when T is odd, so both signs
    meet every Q value); the witness is the convergent pair (p_(k-1),
    q_(k-1))."""
    if c not in (1, -1, 2, -2):
        raise ValueError("c must be one of 1, -1, 2, -2")
    witness = _pell_scan(D, e).get(c)
    return PellVerdict(D, c, witness is not None, witness)


def pell_laws_agree(p: int, e: SqrtExpansion | None = None) -> bool:
    """Classical congruence laws for odd primes: -1 solvable iff p = 1
    (mod 4); +2 iff p = 7 (mod 8); -2 iff p = 3 (mod 8)."""
    if p == 2:
        raise ValueError("the congruence laws are stated for odd primes")
    found = _pell_scan(p, e)
    return (
        (-1 in found) == (p % 4 == 1)
        and (2 in found) == (p % 8 == 7)
        and (-2 in found) == (p % 8 == 3)
    )
