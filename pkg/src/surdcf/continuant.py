"""Continuant polynomials evaluated on integer words.

The continuants K_n satisfy K_n(x_1..x_n) = x_n K_{n-1}(x_1..x_{n-1}) +
K_{n-2}(x_1..x_{n-2}) with K_0 = 1 (empty word) and K_{-1} = 0, and are
exactly the numerators/denominators of finite continued fractions.  The
module evaluates them by left-to-right 2x2 matrix folding and checks the
matrix, reversal, and determinant identities they obey.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ContinuantMatrix:
    """Entries of the ordered product of [[x_i, 1], [1, 0]] over a word.

    Rows are (E, F_top) and (F_bot, G): E is the continuant of the whole
    word, F_top drops the last letter, F_bot drops the first, G drops
    both.  For palindromic words F_top == F_bot.
    """

    E: int
    F_top: int
    F_bot: int
    G: int

    def det(self) -> int:
        return self.E * self.G - self.F_top * self.F_bot


def continuant(seq: Sequence[int]) -> int:
    """Continuant of the word, by the three-term recurrence (1 on the
    empty word)."""
    prev, cur = 0, 1
    for x in seq:
        prev, cur = cur, x * cur + prev
    return cur


def matrix_product(seq: Sequence[int]) -> ContinuantMatrix:
    """Fold the word into its 2x2 matrix; identity on the empty word."""
    e, ft = 1, 0
    fb, g = 0, 1
    for x in seq:
        e, ft = x * e + ft, e
        fb, g = x * fb + g, fb
    return ContinuantMatrix(e, ft, fb, g)


def reversal_check(seq: Sequence[int]) -> bool:
    """Continuants are invariant under word reversal."""
    return continuant(seq) == continuant(list(reversed(seq)))


def determinant_check(seq: Sequence[int]) -> bool:
    """K_n(x_1..x_n) K_{n-2}(x_2..x_{n-1}) - K_{n-1}(x_1..x_{n-1})
    K_{n-1}(x_2..x_n) == (-1)^n, evaluated via four independent
    continuant computations (not the matrix fold)."""
    n = len(seq)
    if n < 1:
        raise ValueError("determinant identity needs a nonempty word")
    lhs = continuant(seq) * continuant(seq[1:-1]) - continuant(
        seq[:-1]
    ) * continuant(seq[1:])
    return lhs == (-1) ** n
