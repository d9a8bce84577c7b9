"""Continued-fraction families: from a palindromic inner word to the
quadratic polynomial D(t) whose square roots realize that word.

The word (a_1 .. a_(l-1)) folds into (E, F, G) with F^2 - EG = (-1)^l; a
family exists iff F or G is even, and D(t) = a t^2 + b t + c for t >= t0
with coefficients split into two cases by parity.  For even l, D(t)
factors into two linear-in-t integer factors built from the gcd splits
E_pm, G_pm of F +- 1, which also pin the residue classes of any prime
value of D(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cf import expand_sqrt
from .errors import InternalConsistencyError
from .kernel import is_square, is_squarefree


@dataclass(frozen=True)
class FamilySpec:
    inner_word: tuple[int, ...]
    l: int
    E: int
    F: int
    G: int


@dataclass(frozen=True)
class FamilyPoly:
    case_tag: str  # "case1" | "case2" | "infeasible"
    a: int
    b: int
    c: int
    t0: int
    discriminant: int

    def value(self, t: int) -> int:
        return (self.a * t + self.b) * t + self.c


@dataclass(frozen=True)
class Factorization:
    E_plus: int
    E_minus: int
    G_plus: int
    G_minus: int
    left: tuple[int, int]  # (A1, B1) meaning the factor A1*t - B1
    right: tuple[int, int]


@dataclass(frozen=True)
class PrimeCandidate:
    numerator: int
    denominator: int
    residue: int | None
    modulus: int | None
    integral: bool
    value: int | None
    excluded: bool
    note: str


def efg(inner_word) -> FamilySpec:
    """Fold a palindromic word into its (E, F, G) triple.

    The empty word (period length 1) uses the identity-matrix convention
    E = 1, F = 0, G = 1, which still satisfies F^2 - EG = (-1)^l.
    """
    word = tuple(inner_word)
    if any(a < 1 for a in word):
        raise ValueError("letters must be positive integers")
    if word != word[::-1]:
        raise ValueError(f"inner word {word} is not palindromic")
    l = len(word) + 1
    e, ft = 1, 0
    fb, g = 0, 1
    for x in word:
        e, ft = x * e + ft, e
        fb, g = x * fb + g, fb
    if ft != fb:
        raise InternalConsistencyError("palindromic word gave asymmetric matrix")
    sign = -1 if l % 2 else 1
    if ft * ft - e * g != sign:
        raise InternalConsistencyError(
            f"F^2 - EG != (-1)^l for word {word}: {ft*ft - e*g}"
        )
    return FamilySpec(word, l, e, ft, g)


def family_poly(spec: FamilySpec) -> FamilyPoly:
    """Coefficients of D(t), the case tag, and the first admissible t0.

    Infeasible exactly when F and G are both odd.  t0 is the smallest t
    with a0(t) = sqrt(a)*t - (-1)^l FG/2 >= 1, the floor-sqrt of D(t);
    the source formula floor((-1)^l FG/E) + 1 misses that by a constant
    in both directions (it would admit D(-1) = 2 into the (1,1,1,1)
    family and exclude the prime 23 from the (1,3,1) family), so the
    derived value is used and validated by the round-trip oracle.
    """
    E, F, G, l = spec.E, spec.F, spec.G, spec.l
    s = -1 if l % 2 else 1
    if F % 2 == 1 and G % 2 == 1:
        return FamilyPoly("infeasible", 0, 0, 0, 0, 0)
    if F % 2 == 1 and E % 2 == 0 and G % 2 == 0:
        case = "case2"
        a4, r = divmod(E * E, 4)
        if r:
            raise InternalConsistencyError("case2 with E^2 not divisible by 4")
        a = a4
        half, r = divmod(s * E * F * G, 2)
        if r:
            raise InternalConsistencyError("case2 with odd EFG")
        b = F - half
        sqrt_a = E // 2
    else:
        # F even with E, G odd, or E, F odd with G even
        case = "case1"
        a = E * E
        b = 2 * F - s * E * F * G
        sqrt_a = E
    c4, r = divmod((F * F - 4 * s) * G * G, 4)
    if r:
        raise InternalConsistencyError("c coefficient not integral")
    c = c4
    # feasible cases always have FG even, so s*F*G/2 is an integer
    t0 = (s * F * G // 2) // sqrt_a + 1
    disc = b * b - 4 * a * c
    expected = 4 * s if case == "case1" else s
    if disc != expected:
        raise InternalConsistencyError(
            f"discriminant {disc} != {expected} for word {spec.inner_word}"
        )
    return FamilyPoly(case, a, b, c, t0, disc)


def closed_form_t0(spec: FamilySpec) -> int:
    """The source's t0 formula, kept for report transparency only."""
    s = -1 if spec.l % 2 else 1
    return (s * spec.F * spec.G) // spec.E + 1


def factorize(spec: FamilySpec) -> Factorization:
    """Split D(t) into its two positive linear factors (even l only).

    The gcd-split identities (F +- 1 = E_pm G_pm, E = E_- E_+,
    G = G_- G_+, doubled in case 2) are asserted at construction, as is
    the coefficient-wise expansion back to D(t) and positivity of both
    factors at t0.
    """
    if spec.l % 2:
        raise ValueError("factorization requires an even period length")
    poly = family_poly(spec)
    if poly.case_tag == "infeasible":
        raise ValueError("infeasible family has no factorization")
    E, F, G = spec.E, spec.F, spec.G
    gEp, gEm = gcd(F + 1, E), gcd(F - 1, E)
    gGp, gGm = gcd(F + 1, G), gcd(F - 1, G)
    if poly.case_tag == "case1":
        Ep, Em, Gp, Gm = gEp, gEm, gGp, gGm
        ok = (
            F + 1 == Ep * Gp
            and F - 1 == Em * Gm
            and E == Em * Ep
            and G == Gm * Gp
        )
        B1 = Gm * Gm * (F + 2) // 2
        B2 = Gp * Gp * (F - 2) // 2
        ok = ok and Gm * Gm * (F + 2) % 2 == 0 and Gp * Gp * (F - 2) % 2 == 0
    else:
        if gEp % 2 or gEm % 2 or gGp % 2 or gGm % 2:
            raise InternalConsistencyError("case2 gcd splits not even")
        Ep, Em, Gp, Gm = gEp // 2, gEm // 2, gGp // 2, gGm // 2
        ok = (
            F + 1 == 2 * Ep * Gp
            and F - 1 == 2 * Em * Gm
            and E == 2 * Em * Ep
            and G == 2 * Gm * Gp
        )
        B1 = Gm * Gm * (F + 2)
        B2 = Gp * Gp * (F - 2)
    if not ok:
        raise InternalConsistencyError(
            f"gcd-split identities failed for word {spec.inner_word}"
        )
    A1, A2 = Ep * Ep, Em * Em
    if (
        A1 * A2 != poly.a
        or -(A1 * B2 + A2 * B1) != poly.b
        or B1 * B2 != poly.c
    ):
        raise InternalConsistencyError(
            f"factorization does not expand to D(t) for word {spec.inner_word}"
        )
    if A1 * poly.t0 - B1 < 1 or A2 * poly.t0 - B2 < 1:
        raise InternalConsistencyError(
            f"factor not positive at t0 for word {spec.inner_word}"
        )
    return Factorization(Ep, Em, Gp, Gm, (A1, B1), (A2, B2))


def prime_candidates(spec: FamilySpec) -> list[PrimeCandidate]:
    """The rational forms a prime member of an even-l family must take,
    with their forced residue classes.

    Case 1 primes are (E_+^2 - 2)/E_-^2 = 7 (mod 8) or (E_-^2 + 2)/E_+^2
    = 3 (mod 8).  Case 2 allows (E_+^2 - 1)/E_-^2 only: the other branch
    would be = 1 (mod 4), impossible with an even period.
    """
    fac = factorize(spec)
    poly = family_poly(spec)
    Ep2, Em2 = fac.E_plus**2, fac.E_minus**2
    if poly.case_tag == "case1":
        raw = [
            (Ep2 - 2, Em2, 7, 8, False, "right factor = 1"),
            (Em2 + 2, Ep2, 3, 8, False, "left factor = 1"),
        ]
    else:
        raw = [
            (Ep2 - 1, Em2, None, None, False, "right factor = 1"),
            (
                Em2 + 1,
                Ep2,
                1,
                4,
                True,
                "left factor = 1 forces D = 1 (mod 4), impossible for even period",
            ),
        ]
    out = []
    for num, den, res, mod, excluded, note in raw:
        integral = num % den == 0 and num // den > 1
        out.append(
            PrimeCandidate(
                num, den, res, mod, integral,
                num // den if integral else None, excluded, note,
            )
        )
    return out


def closed_form_a0(spec: FamilySpec, t: int) -> Fraction:
    """The source's closed form (E t - F G)/2 for a0, kept as an exact
    rational because it disagrees with isqrt(D(t)) in case 1 (it matches
    under t -> 2t there); reports carry both values."""
    return Fraction(spec.E * t - spec.F * spec.G, 2)


def roundtrip_validate(spec: FamilySpec, t: int) -> bool | None:
    """Expand sqrt(D(t)) and compare its partial-quotient word against the
    family word.

    None (skipped, not a failure) when D(t) <= 1 or is not squarefree.
    True iff inner_word + (2*a0,) is a whole repetition of the minimal
    period: degenerate members whose minimal period properly divides l
    (e.g. word (2,) at D = 2) realize the prescribed sequence and belong
    to the family.  a0 always comes from isqrt, never from the closed
    form.
    """
    poly = family_poly(spec)
    if poly.case_tag == "infeasible":
        raise ValueError("infeasible family")
    if t < poly.t0:
        raise ValueError(f"t={t} below t0={poly.t0}")
    D = poly.value(t)
    if D <= 1 or is_square(D) or not is_squarefree(D):
        return None
    e = expand_sqrt(D, with_trace=False)
    target = spec.inner_word + (2 * e.a0,)
    if len(target) % e.T:
        return False
    return target == e.period * (len(target) // e.T)


def admissible_values(spec: FamilySpec, count: int):
    """Yield the first `count` pairs (t, D(t)) with D(t) > 1 squarefree."""
    poly = family_poly(spec)
    if poly.case_tag == "infeasible":
        return
    t, found = poly.t0, 0
    while found < count:
        D = poly.value(t)
        if D > 1 and is_squarefree(D):
            yield t, D
            found += 1
        t += 1
