"""Integer points of the two planar boxes behind the H^1 counts.

``sol1`` counts (x, y) with

    0 < x, y < alpha - 1
    beta <= x + y <= 2 alpha - beta - 2
    beta + 1 - alpha <= x - y <= alpha - beta - 1

and ``sol2`` counts (x, y) with

    0 < x < alpha - 1, 0 < y < beta - 1
    beta <= x + y <= alpha - 2
    1 <= x - y <= alpha - beta - 1

Each comes with a closed form and a direct double loop.
"""

from __future__ import annotations

from fractions import Fraction


class InvalidWeights(ValueError):
    pass


def clamp(m: int) -> int:
    """The bar operator: max(m, 0)."""
    return max(m, 0)


def parity_case(alpha: int, beta: int) -> tuple[str, str]:
    return ("odd" if alpha % 2 else "even", "odd" if beta % 2 else "even")


def _exact(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral count {value}")
    return int(value)


def sol1_closed(alpha: int, beta: int) -> int:
    if not (alpha > beta >= 1):
        raise InvalidWeights(f"need alpha > beta >= 1, got ({alpha}, {beta})")
    d = alpha - beta
    if alpha % 2:
        return d * d + (d - 1) ** 2 - clamp(alpha - 2 * beta + 1) ** 2
    return 2 * d * (d - 1) - clamp(alpha - 2 * beta) * (alpha - 2 * beta + 2)


def sol1_brute(alpha: int, beta: int) -> int:
    if not (alpha > beta >= 1):
        raise InvalidWeights(f"need alpha > beta >= 1, got ({alpha}, {beta})")
    return sum(
        1
        for x in range(1, alpha - 1)
        for y in range(1, alpha - 1)
        if beta <= x + y <= 2 * alpha - beta - 2 and beta + 1 - alpha <= x - y <= alpha - beta - 1
    )


def sol2_closed(alpha: int, beta: int) -> int:
    if not (beta > 1 and alpha >= beta + 2):
        raise InvalidWeights(f"need beta > 1 and alpha >= beta + 2, got ({alpha}, {beta})")
    d = alpha - beta
    m1 = clamp(alpha - 2 * beta + 1)
    m0 = clamp(alpha - 2 * beta)
    match parity_case(alpha, beta):
        case ("odd", "even"):
            value = Fraction((d - 1) ** 2 - m1 ** 2, 2)
        case ("odd", "odd"):
            value = Fraction(d * d + (d - 2) ** 2 - 2 * m1 ** 2, 4)
        case ("even", "even"):
            value = Fraction(d * (d - 2) - m0 * (alpha - 2 * beta + 2), 2)
        case _:
            value = Fraction((d - 1) ** 2 - m0 * (alpha - 2 * beta + 2), 2)
    return _exact(value)


def sol2_brute(alpha: int, beta: int) -> int:
    if not (beta > 1 and alpha >= beta + 2):
        raise InvalidWeights(f"need beta > 1 and alpha >= beta + 2, got ({alpha}, {beta})")
    return sum(
        1
        for x in range(1, alpha - 1)
        for y in range(1, beta - 1)
        if beta <= x + y <= alpha - 2 and 1 <= x - y <= alpha - beta - 1
    )
