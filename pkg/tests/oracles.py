"""Independent brute-force oracles used by the test suite.

Everything here deliberately avoids the library's own computational paths:
Legendre symbols by direct square search, class numbers by reduced-form
cycle counting, fundamental units by minimal-y search plus a no-root
certificate, and continued-fraction words re-evaluated through exact
quadratic arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from surdcf.continuant import matrix_product
from surdcf.kernel import is_square, isqrt


def legendre_table(p: int) -> dict[int, int]:
    """Legendre symbols mod an odd prime by exhaustive square search."""
    squares = {(x * x) % p for x in range(1, p)}
    table = {0: 0}
    for a in range(1, p):
        table[a] = 1 if a in squares else -1
    return table


def rational_cf_denominator(seq) -> int:
    """Denominator of [0; seq] by exact rational folding (positive
    letters): equals the continuant of seq."""
    acc = Fraction(seq[-1])
    for x in reversed(seq[:-1]):
        acc = x + 1 / acc
    return (1 / acc).denominator


def word_squares_to_D(a0: int, period, D: int) -> bool:
    """Re-evaluate [a0; overline(period)] through the matrix of the period
    and check, in exact integer arithmetic, that its square is D."""
    m = matrix_product(list(period))
    A, B, C, E = m.E, m.F_top, m.F_bot, m.G
    # tail y = [overline(period)] satisfies C y^2 + (E - A) y - B = 0;
    # x = a0 + 1/y is sqrt(D) iff the rational part vanishes and the
    # discriminant matches 4 B^2 D
    return A - E == 2 * a0 * B and (A - E) ** 2 + 4 * B * C == 4 * B * B * D


def minimal_unit(D: int, y_cap: int = 10**6) -> tuple[int, int, int]:
    """(x, y, norm) of the smallest unit (x + y sqrt(delta))/2 > 1 of the
    maximal order, by scanning y upward; y_cap guards runaway scans."""
    delta = D if D % 4 == 1 else 4 * D
    for y in range(1, y_cap + 1):
        base = delta * y * y
        # same y: the -4 solution has the smaller x, hence the smaller unit
        for n4 in (-4, 4):
            x2 = base + n4
            if x2 > 0 and is_square(x2):
                return isqrt(x2), y, n4 // 4
    raise RuntimeError(f"no unit with y <= {y_cap} for D={D}")


def no_smaller_unit(D: int, x: int, y: int, scan_cap: int = 10**5) -> bool:
    """Certificate that (x + y sqrt(delta))/2 is fundamental.

    For small y, re-run the minimal-y scan.  Otherwise check that the
    unit has no k-th root in the order for any prime k that could have
    produced it (a non-fundamental unit is a perfect power of the
    fundamental one).
    """
    delta = D if D % 4 == 1 else 4 * D
    if y <= scan_cap:
        return minimal_unit(D, y_cap=y)[:2] == (x, y)
    with mpmath.workdps(60):
        val = (x + y * mpmath.sqrt(delta)) / 2
        logv = mpmath.log(val)
        k = 2
        while k * mpmath.log((1 + mpmath.sqrt(5)) / 2) <= logv:
            root = mpmath.exp(logv / k)
            conj = 1 / root
            for s in (1, -1):
                xk = int(mpmath.nint(root + s * conj))
                yk = int(mpmath.nint((root - s * conj) / mpmath.sqrt(delta)))
                if yk >= 1 and xk * xk - delta * yk * yk == 4 * s:
                    if _power_equals(xk, yk, k, delta, x, y):
                        return False
            k += 1
    return True


def _power_equals(xk, yk, k, delta, x, y):
    u, v = 2, 0  # the unit 1 in half-coordinates
    for _ in range(k):
        u, v = (u * xk + v * yk * delta) // 2, (u * yk + v * xk) // 2
    return (u, v) == (x, y)


def _reduced_forms(delta: int) -> list[tuple[int, int, int]]:
    rt = isqrt(delta)
    forms = []
    for b in range(1, rt + 1):
        if (delta - b) % 2:
            continue
        m = (b * b - delta) // 4  # = a*c < 0
        am = -m
        for d in range(1, am + 1):
            if am % d:
                continue
            for a in (d, -d):
                c = m // a
                # reduced: |sqrt(delta) - 2|a|| < b, exactly
                t = 2 * abs(a) - b
                if (t < 0 or t * t < delta) and delta < (2 * abs(a) + b) ** 2:
                    forms.append((a, b, c))
    return forms


def _rho(form, delta, rt):
    a, b, c = form
    step = 2 * abs(c)
    r = rt - ((rt + b) % step)
    return (c, r, (r * r - delta) // (4 * c))


def form_class_count(delta: int) -> int:
    """Narrow class number of a positive fundamental discriminant: the
    number of cycles of reduced indefinite forms under the reduction
    step."""
    forms = _reduced_forms(delta)
    form_set = set(forms)
    rt = isqrt(delta)
    seen = set()
    cycles = 0
    for f in forms:
        if f in seen:
            continue
        cycles += 1
        g = f
        while True:
            seen.add(g)
            g = _rho(g, delta, rt)
            if g not in form_set:
                raise RuntimeError(f"rho left the reduced set: {g} (delta={delta})")
            if g == f:
                break
    return cycles


def class_number_bruteforce(D: int) -> int:
    """h of Q(sqrt(D)) from the narrow class number and the norm of the
    brute-forced fundamental unit."""
    delta = D if D % 4 == 1 else 4 * D
    _, _, norm = minimal_unit(D)
    hplus = form_class_count(delta)
    if norm == -1:
        return hplus
    if hplus % 2:
        raise RuntimeError(f"narrow class number odd with norm +1 (D={D})")
    return hplus // 2


def pell_bruteforce(D: int, c: int, y_max: int = 4000):
    """Smallest-y solution of x^2 - D y^2 = c, or None within the cap."""
    for y in range(0, y_max + 1):
        x2 = D * y * y + c
        if x2 >= 0 and is_square(x2):
            return isqrt(x2), y
    return None
