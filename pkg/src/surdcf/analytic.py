"""L(1, chi) with certified error bars, fundamental units, class numbers,
and the period-length bound they imply.

The quadratic character chi attached to the fundamental discriminant of
Q(sqrt(D)) is tabulated exactly over one period; the L-series partial sum
is cut at a whole number of periods so the character sum at the cut is
exactly zero, and the tail is bounded by max|S(t)|/(N+1) with the maximum
partial sum taken exactly over one period (periodicity makes that the
global maximum; it also respects the sqrt(Delta) log Delta bound, which
is asserted).  Square roots and log 2 enter inequality verdicts only as
exact rational brackets; logarithms of units go through interval
arithmetic with outward rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv, mp, mpf

from .cf import SqrtExpansion, _surd_cycle, expand_sqrt, period_length
from .continuant import matrix_product
from .errors import InternalConsistencyError, PrecisionError
from .kernel import first_primes, is_squarefree, isqrt, kronecker

# ln 2 = 0.6931471805599453094...; bracket checked against mpmath in tests
LOG2_LO = Fraction(693147180559945, 10**15)
LOG2_HI = Fraction(693147180559946, 10**15)

_FLOAT_SLOP = Fraction(1, 10**12)  # covers fsum + per-term rounding


@dataclass(frozen=True)
class Interval:
    """Closed rational interval certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class FundamentalUnit:
    """epsilon = (x + y sqrt(delta))/2 > 1, the smallest such unit of the
    maximal order; norm = (x^2 - delta y^2)/4 in {1, -1}."""

    D: int
    delta: int
    x: int
    y: int
    norm: int

    def sqrtD_half_coords(self) -> tuple[int, int]:
        """(u, v) with epsilon = (u + v sqrt(D))/2."""
        if self.delta == self.D:
            return self.x, self.y
        return self.x, 2 * self.y


@dataclass(frozen=True)
class UnitTower:
    D: int
    alpha: tuple[int, int]  # (p_(l-1), q_(l-1))
    exponent: int  # alpha = epsilon^exponent


@dataclass(frozen=True)
class AnalyticReport:
    D: int
    delta: int
    L1: Interval
    epsilon: FundamentalUnit
    regulator: float
    regulator_err: float
    h: int
    l: int
    bound_rhs: Fraction  # certified lower bound of (4/log 2) sqrt(D) L(1,chi)
    holds: bool


@dataclass(frozen=True)
class Q51Row:
    m: int
    p: int
    T: int
    ratio: float

    @property
    def below_one(self) -> bool:
        return self.ratio < 1.0


@dataclass(frozen=True)
class Q51Result:
    max_ratio: float
    argmax_m: int
    all_below_one: bool
    rows: tuple[Q51Row, ...]


def fundamental_discriminant(D: int) -> int:
    """Delta = D for D = 1 (mod 4), else 4D; D must be squarefree > 1."""
    if D < 2:
        raise ValueError("D must exceed 1")
    if not is_squarefree(D):
        raise ValueError(f"D={D} is not squarefree")
    return D if D % 4 == 1 else 4 * D


def is_fundamental_discriminant(delta: int) -> bool:
    if delta <= 1:
        return False
    if delta % 4 == 1:
        return is_squarefree(delta)
    if delta % 4 == 0:
        m = delta // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


# ---------------------------------------------------------------------------
# character tables

_spf: list[int] = []


def _ensure_spf(n: int) -> None:
    global _spf
    if len(_spf) > n:
        return
    size = max(n + 1, 2 * len(_spf), 1 << 12)
    spf = list(range(size))
    for p in range(2, isqrt(size - 1) + 1):
        if spf[p] == p:
            for m in range(p * p, size, p):
                if spf[m] == m:
                    spf[m] = p
    _spf = spf


@lru_cache(maxsize=8)
def _chi_data(delta: int) -> tuple[tuple[int, ...], int]:
    """(chi values on 0..delta-1, exact max |partial sum| over a period).

    chi is completely multiplicative, so composites fill in from the
    smallest-prime-factor table and only primes pay a Kronecker call.
    """
    _ensure_spf(delta)
    spf = _spf
    chi = [0] * delta
    if delta > 1:
        chi[1] = 1
    for n in range(2, delta):
        p = spf[n]
        chi[n] = kronecker(delta, n) if p == n else chi[p] * chi[n // p]
    s = 0
    max_abs = 0
    for v in chi[1:]:
        s += v
        if s > max_abs:
            max_abs = s
        elif -s > max_abs:
            max_abs = -s
    if s + chi[0] != 0:
        raise InternalConsistencyError(
            f"character sum over a full period is {s}, not 0 (delta={delta})"
        )
    if max_abs > math.sqrt(delta) * math.log(delta) + 1:
        raise InternalConsistencyError(
            f"partial character sums exceed the sqrt(d) log d bound (delta={delta})"
        )
    return tuple(chi), max_abs


def dirichlet_L1(
    delta: int,
    target_precision: Fraction | float = Fraction(1, 100),
    max_terms: int = 50_000_000,
) -> Interval:
    """Certified bracket of L(1, chi_delta) of width <= target_precision.

    Sums N = (whole periods) terms so the character sum vanishes at the
    cut; the tail is then at most max|S|/(N+1).
    """
    if not is_fundamental_discriminant(delta):
        raise ValueError(f"{delta} is not a fundamental discriminant > 1")
    target = Fraction(target_precision)
    if target <= 2 * _FLOAT_SLOP:
        raise PrecisionError(f"target {target} below float bookkeeping slop")
    chi, max_abs = _chi_data(delta)
    budget = target / 2 - _FLOAT_SLOP
    # smallest number of whole periods with max_abs/(m*delta) <= budget
    num, den = (Fraction(max_abs) / budget).as_integer_ratio()
    periods = max(1, -(-num // (den * delta)))
    N = periods * delta
    if N > max_terms:
        raise PrecisionError(
            f"needs {N} terms for width {target} (cap {max_terms}, delta={delta})"
        )
    total = math.fsum(chi[n % delta] / n for n in range(1, N + 1))
    err = Fraction(max_abs, N + 1) + _FLOAT_SLOP
    t = Fraction(total)
    return Interval(t - err, t + err)


# ---------------------------------------------------------------------------
# units

def fundamental_unit(D: int) -> FundamentalUnit:
    """Smallest unit > 1 of the maximal order of Q(sqrt(D)).

    For D = 2, 3 (mod 4) this is p + q sqrt(D) from the last convergent
    of the period; for D = 1 (mod 4) it is the cycle multiplier of the
    continued fraction of (1 + sqrt(D))/2.
    """
    if D < 2 or not is_squarefree(D):
        raise ValueError(f"D={D} must be squarefree > 1")
    if D % 4 == 1:
        _, word, (Ps, Qs) = _surd_cycle(D, 1, 2)
        m = matrix_product(word)
        x2 = 2 * (m.F_bot * Ps + m.G * Qs)
        y2 = 2 * m.F_bot
        if x2 % Qs or y2 % Qs:
            raise InternalConsistencyError(f"cycle multiplier not integral (D={D})")
        x, y, delta = x2 // Qs, y2 // Qs, D
    else:
        e = expand_sqrt(D, with_trace=False)
        p, q = e.a0, 1
        p_prev, q_prev = 1, 0
        for a in e.period[:-1]:
            p, p_prev = a * p + p_prev, p
            q, q_prev = a * q + q_prev, q
        x, y, delta = 2 * p, q, 4 * D
    n4 = x * x - delta * y * y
    if n4 not in (4, -4) or x < 1 or y < 1:
        raise InternalConsistencyError(f"not a unit > 1: D={D}, x={x}, y={y}")
    return FundamentalUnit(D, delta, x, y, n4 // 4)


def _half_mul(a: tuple[int, int], b: tuple[int, int], D: int) -> tuple[int, int]:
    # product of (u + v sqrt(D))/2 representatives, staying in half-coords
    u1, v1 = a
    u2, v2 = b
    un = u1 * u2 + v1 * v2 * D
    vn = u1 * v2 + u2 * v1
    if un % 2 or vn % 2:
        raise InternalConsistencyError("unit product left half-coordinates")
    return un // 2, vn // 2


def unit_tower(D: int) -> UnitTower:
    """Express alpha = p_(l-1) + q_(l-1) sqrt(D) as a power of the
    fundamental unit; the exponent is always 1, 2, or 3."""
    eps = fundamental_unit(D)
    e = expand_sqrt(D, with_trace=False)
    p, q = e.a0, 1
    p_prev, q_prev = 1, 0
    for a in e.period[:-1]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    target = (2 * p, 2 * q)
    base = eps.sqrtD_half_coords()
    cur = base
    for j in (1, 2, 3):
        if cur == target:
            return UnitTower(D, (p, q), j)
        cur = _half_mul(cur, base, D)
    raise InternalConsistencyError(
        f"alpha_(l-1) is not epsilon^j for any j <= 3 (D={D})"
    )


# ---------------------------------------------------------------------------
# interval plumbing (mpmath)

def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpf(x)._mpf_
    if man == 0 and exp == 0:
        return Fraction(0)
    v = Fraction(man) * Fraction(2) ** exp
    return -v if sign else v


def _fraction_endpoints_to_iv(lo: Fraction, hi: Fraction):
    flo = float(lo)
    if Fraction(flo) > lo:
        flo = math.nextafter(flo, -math.inf)
    fhi = float(hi)
    if Fraction(fhi) < hi:
        fhi = math.nextafter(fhi, math.inf)
    return iv.mpf([flo, fhi])


def _log_eps_iv(eps: FundamentalUnit):
    val = (iv.mpf(eps.x) + iv.mpf(eps.y) * iv.sqrt(eps.delta)) / 2
    return iv.log(val)


def regulator_interval(eps: FundamentalUnit, prec: int = 80) -> Interval:
    """Certified bracket of log(epsilon)."""
    old = iv.prec
    try:
        iv.prec = prec
        r = _log_eps_iv(eps)
        return Interval(_mpf_to_fraction(r.a), _mpf_to_fraction(r.b))
    finally:
        iv.prec = old


def class_number(D: int) -> int:
    """h = sqrt(Delta) L(1,chi) / (2 log eps), rounded through a certified
    interval that must isolate a unique integer >= 1."""
    delta = fundamental_discriminant(D)
    eps = fundamental_unit(D)
    target = Fraction(1, 50)
    prec = 80
    for _ in range(10):
        L = dirichlet_L1(delta, target)
        old = iv.prec
        try:
            iv.prec = prec
            h_iv = (
                iv.sqrt(delta)
                * _fraction_endpoints_to_iv(L.lo, L.hi)
                / (2 * _log_eps_iv(eps))
            )
            lo = _mpf_to_fraction(h_iv.a)
            hi = _mpf_to_fraction(h_iv.b)
        finally:
            iv.prec = old
        lo_int = -((-lo.numerator) // lo.denominator)  # ceil
        hi_int = hi.numerator // hi.denominator  # floor
        if lo_int == hi_int and lo_int >= 1:
            return lo_int
        target /= 8
        prec += 24
    raise PrecisionError(f"class-number interval for D={D} did not round")


# ---------------------------------------------------------------------------
# growth of convergent units (exact)

def _quad_pos(a: int, b: int, D: int) -> bool:
    """a + b sqrt(D) > 0, exactly (sqrt(D) irrational)."""
    if a >= 0 and b >= 0:
        return a > 0 or b > 0
    if a < 0 and b < 0:
        return False
    if b > 0:
        return b * b * D > a * a
    return a * a > b * b * D


def alpha_growth_check(D: int, e: SqrtExpansion | None = None) -> None:
    """alpha_(i+1) > 2 alpha_(i-1) for every step and alpha_(l-1) >
    2^(l/2), verified in exact integer arithmetic on (p, q) pairs.

    Raises InternalConsistencyError on any violation.
    """
    if e is None:
        e = expand_sqrt(D, with_trace=False)
    l = e.T
    pairs = [(1, 0), (e.a0, 1)]  # alpha_(-1), alpha_0
    p_prev, q_prev = 1, 0
    p, q = e.a0, 1
    for i in range(1, l):
        a = e.period[i - 1]
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        pairs.append((p, q))
    # pairs[k] = alpha_(k-1); check alpha_(i+1) > 2 alpha_(i-1) for i >= 0
    for i in range(0, l - 1):
        p2, q2 = pairs[i + 2]
        p0, q0 = pairs[i]
        if not _quad_pos(p2 - 2 * p0, q2 - 2 * q0, D):
            raise InternalConsistencyError(
                f"alpha growth failed at D={D}, i={i}"
            )
    pl, ql = pairs[l]
    if l % 2 == 0:
        ok = _quad_pos(pl - (1 << (l // 2)), ql, D)
    else:
        # compare squares: (p + q sqrt(D))^2 vs 2^l
        ok = _quad_pos(pl * pl + ql * ql * D - (1 << l), 2 * pl * ql, D)
    if not ok:
        raise InternalConsistencyError(f"alpha_(l-1) <= 2^(l/2) at D={D}")


# ---------------------------------------------------------------------------
# the period-length bound

def _sqrt_bounds(n: int, digits: int = 9) -> tuple[Fraction, Fraction]:
    scale = 10**digits
    r = isqrt(n * scale * scale)
    return Fraction(r, scale), Fraction(r + 1, scale)


def period_bound_check(
    D: int, l1_target: Fraction | float = Fraction(1, 20)
) -> AnalyticReport:
    """Verdict of l < (4/log 2) sqrt(D) L(1, chi) for squarefree D > 1,
    with every real quantity entering the comparison as a certified
    bracket; the convergent growth inequalities are asserted exactly on
    the side."""
    delta = fundamental_discriminant(D)
    e = expand_sqrt(D, with_trace=False)
    alpha_growth_check(D, e)
    eps = fundamental_unit(D)
    h = class_number(D)
    reg = regulator_interval(eps)
    sqrt_lo, _ = _sqrt_bounds(D)
    target = Fraction(l1_target)
    L = dirichlet_L1(delta, target)
    rhs_lo = 4 * sqrt_lo * L.lo / LOG2_HI
    holds = e.T < rhs_lo
    while not holds and target > Fraction(1, 10**7):
        target /= 10
        L = dirichlet_L1(delta, target)
        rhs_lo = 4 * sqrt_lo * L.lo / LOG2_HI
        holds = e.T < rhs_lo
    mid = (reg.lo + reg.hi) / 2
    return AnalyticReport(
        D=D,
        delta=delta,
        L1=L,
        epsilon=eps,
        regulator=float(mid),
        regulator_err=float(reg.width / 2),
        h=h,
        l=e.T,
        bound_rhs=rhs_lo,
        holds=holds,
    )


def q51_scan(M: int, keep_rows: bool = True) -> Q51Result:
    """max of T_(p_m) / (sqrt(m) log m) over 5 <= m <= M.

    Purely deterministic; a ratio >= 1 would be flagged in its row, not
    suppressed.
    """
    if M < 5:
        raise ValueError("scan starts at m = 5")
    primes = first_primes(M)
    best, best_m = -1.0, 5
    rows: list[Q51Row] = []
    below = True
    for m in range(5, M + 1):
        p = primes[m - 1]
        T = period_length(p)
        ratio = T / (math.sqrt(m) * math.log(m))
        if ratio > best:
            best, best_m = ratio, m
        if ratio >= 1.0:
            below = False
        if keep_rows:
            rows.append(Q51Row(m, p, T, ratio))
    return Q51Result(best, best_m, below, tuple(rows))
