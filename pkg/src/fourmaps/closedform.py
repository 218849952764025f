"""Closed-form counts of rooted one-face maps.

Everything here is exact integer arithmetic.  Quotients of factorials are
taken with :func:`exact_div`, which refuses to truncate.
"""

from __future__ import annotations

from math import comb, factorial

__all__ = [
    "EmptyFamily",
    "exact_div",
    "params14",
    "fuss_catalan4",
    "eps_trees14",
    "eps14",
    "eps4_rooted",
    "recurrence_sides14",
    "recurrence_holds14",
]


class EmptyFamily(ValueError):
    """The requested parameters describe no maps at all."""


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _check_nonneg(**kw: int) -> None:
    for name, v in kw.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{name} must be an int, got {v!r}")
        if v < 0:
            raise ValueError(f"{name} must be >= 0, got {v}")


def params14(g: int, k: int) -> tuple[int, int]:
    """Edge and leaf counts ``(n, s)`` of a genus-``g`` map with ``k`` four-valent vertices.

    Raises :class:`EmptyFamily` when ``n < 1`` or ``s < 0``.
    """
    _check_nonneg(g=g, k=k)
    n = 3 * k + 1 - 2 * g
    s = 2 * k + 2 - 4 * g
    if n < 1 or s < 0:
        raise EmptyFamily(f"no (1,4)-valent maps with g={g}, k={k}: n={n}, s={s}")
    return n, s


def fuss_catalan4(k: int) -> int:
    """Rooted 4-ary trees with ``k`` internal vertices, ``binom(3k, k-1) / k``."""
    _check_nonneg(k=k)
    if k == 0:
        return 1
    return exact_div(comb(3 * k, k - 1), k)


def eps_trees14(kt: int) -> int:
    """Rooted plane trees with ``kt`` vertices of degree 4 and all others leaves."""
    _check_nonneg(kt=kt)
    nt, st = 3 * kt + 1, 2 * kt + 2
    return exact_div(2 * factorial(nt), factorial(kt) * factorial(st))


def eps14(g: int, k: int) -> int:
    """Rooted one-face maps of genus ``g`` whose ``k`` vertices of degree 4
    are the only non-leaves.  Zero for empty families."""
    try:
        n, s = params14(g, k)
    except EmptyFamily:
        return 0
    if k < g:
        return 0
    return exact_div(
        2 * factorial(n),
        4**g * factorial(g) * factorial(s) * factorial(k - g),
    )


def eps4_rooted(g: int) -> int:
    """Rooted 4-regular one-face maps of genus ``g >= 1``."""
    _check_nonneg(g=g)
    if g < 1:
        raise ValueError("genus must be >= 1 for 4-regular one-face maps")
    return exact_div(
        2 * factorial(4 * g - 2),
        4**g * factorial(g) * factorial(g - 1),
    )


def recurrence_sides14(g: int, k: int) -> tuple[int, int]:
    """Both sides of ``2g eps14(g, k) = n binom(s+2, s) eps14(g-1, k-1)``.

    Empty families make the corresponding side zero.
    """
    if g < 1 or k < 1:
        raise ValueError(f"recurrence needs g >= 1 and k >= 1, got g={g}, k={k}")
    lhs = 2 * g * eps14(g, k)
    n = 3 * k + 1 - 2 * g
    s = 2 * k + 2 - 4 * g
    rhs = 0 if (n < 1 or s < 0) else n * comb(s + 2, s) * eps14(g - 1, k - 1)
    return lhs, rhs


def recurrence_holds14(g: int, k: int) -> bool:
    lhs, rhs = recurrence_sides14(g, k)
    return lhs == rhs
