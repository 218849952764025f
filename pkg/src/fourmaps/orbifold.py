"""Unrooted counting of 4-regular one-face maps via cyclic orbifold quotients.

A map on ``2n = 8g - 4`` darts fixed by a rotation of period ``L`` is an
``L``-fold branched cover of a quotient map drawn on an orbifold.  Summing
(number of epimorphisms) x (number of rooted quotient maps) over admissible
orbifolds and dividing by ``2n`` counts maps up to orientation-preserving
homeomorphism.  For 4-regular one-face maps only ``L`` in ``{1, 2, 4}``
contributes.

All arithmetic is exact: ``int`` for counts, :class:`fractions.Fraction` for
partial sums, which are genuinely fractional before the final total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, factorial, gcd
from typing import Iterable

from .closedform import eps14, eps4_rooted, exact_div

__all__ = [
    "factorize",
    "euler_phi",
    "moebius",
    "jordan_totient",
    "big_phi",
    "big_e",
    "OrbifoldSignature",
    "epi0",
    "signatures_for",
    "quotient_maps",
    "contribution",
    "f2",
    "f2_by_orbifold_genus",
    "f2_slice0_closed",
    "f4",
    "f4_by_signature",
    "eps4_unrooted",
    "eps4_unrooted_formula",
    "eps4_unrooted_reconstructed",
    "eps4_unrooted_by_signatures",
]


# -- multiplicative functions -------------------------------------------------

def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def jordan_totient(k: int, n: int) -> int:
    """``J_k(n) = n**k * prod_{p | n} (1 - p**-k)``; ``J_1`` is Euler's phi."""
    if k < 0:
        raise ValueError(f"jordan_totient needs k >= 0, got {k}")
    result = 1
    for p, e in factorize(n).items():
        result *= p ** (k * (e - 1)) * (p**k - 1)
    return result


def euler_phi(n: int) -> int:
    return jordan_totient(1, n)


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def big_phi(k: int, m: int) -> Fraction:
    ni = m // gcd(k, m)
    return Fraction(euler_phi(m), euler_phi(ni)) * moebius(ni)


def _lcm(xs: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), xs, 1)


def big_e(indices: Iterable[int]) -> Fraction:
    """Average over ``k = 1..m`` of ``prod_i big_phi(k, m_i)``, ``m = lcm(m_i)``.

    The empty multiset gives 1.
    """
    indices = tuple(indices)
    m = _lcm(indices)
    total = Fraction(0)
    for k in range(1, m + 1):
        prod = Fraction(1)
        for mi in indices:
            prod *= big_phi(k, mi)
        total += prod
    return total / m


# -- orbifold signatures ------------------------------------------------------

@dataclass(frozen=True)
class OrbifoldSignature:
    """Cover of genus ``genus`` over an orbifold of genus ``orbifold_genus``
    with cyclic period ``period`` and the given branch indices."""

    genus: int
    orbifold_genus: int
    period: int
    branch_indices: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "branch_indices", tuple(sorted(self.branch_indices)))

    @property
    def lcm(self) -> int:
        return _lcm(self.branch_indices)

    def count(self, m: int) -> int:
        return self.branch_indices.count(m)

    def riemann_hurwitz(self) -> bool:
        defect = sum((1 - Fraction(1, m) for m in self.branch_indices), Fraction(0))
        return 2 - 2 * self.genus == self.period * (2 - 2 * self.orbifold_genus - defect)

    def lcm_divides_period(self) -> bool:
        return self.period % self.lcm == 0

    def lcm_stable(self) -> bool:
        """Dropping any single branch index leaves the lcm unchanged."""
        idx, m = self.branch_indices, self.lcm
        return all(_lcm(idx[:i] + idx[i + 1:]) == m for i in range(len(idx)))

    def has_face_branch(self) -> bool:
        """The single face needs a branch point of full index (vacuous for ``L = 1``)."""
        return self.period == 1 or self.period in self.branch_indices

    def is_valid(self) -> bool:
        return (
            self.genus >= 1
            and self.orbifold_genus >= 0
            and self.period >= 1
            and all(m > 1 for m in self.branch_indices)
            and self.riemann_hurwitz()
            and self.lcm_divides_period()
            and self.lcm_stable()
            and self.has_face_branch()
        )

    def __str__(self) -> str:
        idx = ",".join(map(str, self.branch_indices))
        return f"(g={self.genus}, orbifold_genus={self.orbifold_genus}, L={self.period}, [{idx}])"


def epi0(sig: OrbifoldSignature) -> int:
    """Order-preserving epimorphisms from the orbifold group onto ``Z_L``."""
    m = sig.lcm
    if sig.period % m:
        return 0
    two_g = 2 * sig.orbifold_genus
    value = m**two_g * jordan_totient(two_g, sig.period // m) * big_e(sig.branch_indices)
    assert value.denominator == 1 and value >= 0, f"non-integral epimorphism count {value} for {sig}"
    return int(value)


def signatures_for(g: int, period: int) -> list[OrbifoldSignature]:
    """Admissible signatures of period 1, 2 or 4 for 4-regular one-face maps of genus ``g``."""
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if period == 1:
        return [OrbifoldSignature(g, g, 1)]
    if period == 2:
        return [
            OrbifoldSignature(g, og, 2, (2,) * (2 * g + 2 - 4 * og))
            for og in range(g // 2 + 1)
        ]
    if period == 4:
        out = []
        for og in range(g // 4 + 1):
            for r4 in range(2, 2 * (g + 3 - 4 * og) // 3 + 1, 2):
                r2 = 2 * g - 8 * og + 6 - 3 * r4
                if r2 < 0:
                    continue
                out.append(OrbifoldSignature(g, og, 4, (2,) * (r2 // 2) + (4,) * r4))
        return out
    raise ValueError(f"period must be 1, 2 or 4, got {period}")


# -- quotient maps ------------------------------------------------------------

def _fact_ratio(num: int, dens: Iterable[int]) -> Fraction:
    """``num! / prod(d!)``, or 0 if any argument is negative."""
    dens = tuple(dens)
    if num < 0 or any(d < 0 for d in dens):
        return Fraction(0)
    den = 1
    for d in dens:
        den *= factorial(d)
    return Fraction(factorial(num), den)


def _multichoose(n: int, l: int) -> int:
    return comb(n + l - 1, l)


def quotient_maps(sig: OrbifoldSignature) -> Fraction:
    """Rooted quotient maps on the orbifold of ``sig``, with the root-count
    correction back to ``8g - 4`` darts upstairs.

    Built from rooted (1,4)-valent maps on the orbifold surface: subdivide
    edges with ``l`` degree-2 vertices and, for period 4, choose which leaves
    are dangling semi-edges.
    """
    g, og, L = sig.genus, sig.orbifold_genus, sig.period
    if L == 1:
        return Fraction(eps4_rooted(g))
    total = Fraction(0)
    if L == 2:
        for k in range(g):
            l = 2 * g - 1 - 2 * k
            n = 3 * k + 1 - 2 * og
            e = eps14(og, k)
            if e == 0:
                continue
            total += Fraction(e * _multichoose(n, l), 2 * n)
        return (4 * g - 2) * total
    if L == 4:
        r4 = sig.count(4)
        for k in range(g + 1):
            l = g - 2 * k - r4 // 2
            s = 2 * k + 3 - 4 * og - r4
            if l < 0 or s < 0:
                continue
            n = 3 * k + 1 - 2 * og
            e = eps14(og, k)
            if e == 0:
                continue
            leaves = s + r4 - 1
            total += Fraction(e * _multichoose(n, l) * comb(leaves, s) * (2 * g - 1), 2 * n)
        return total
    raise ValueError(f"no quotient maps for period {L}")


def contribution(sig: OrbifoldSignature) -> Fraction:
    """Additive share of ``sig`` in the unrooted count."""
    return epi0(sig) * quotient_maps(sig) / (8 * sig.genus - 4)


# -- f2, f4 and the unrooted count --------------------------------------------

def _f2_k_range(g: int, og: int) -> range:
    return range(max(0, 2 * og - 1, og), g)


def f2_by_orbifold_genus(g: int) -> dict[int, Fraction]:
    out = {}
    for og in range(g // 2 + 1):
        total = Fraction(0)
        for k in _f2_k_range(g, og):
            total += _fact_ratio(
                2 * g - 2 * og + k - 1,
                (og, 2 * k - 4 * og + 2, k - og, 2 * g - 1 - 2 * k),
            )
        out[og] = (4 * g - 2) * total
    return out


def f2(g: int) -> Fraction:
    """Period-2 term: fixed rooted maps summed over period-2 rotations."""
    return sum(f2_by_orbifold_genus(g).values(), Fraction(0))


def f2_slice0_closed(g: int) -> Fraction:
    """Closed form of the orbifold-genus-0 part of :func:`f2`."""
    return Fraction(3, 2 * g + 1) * comb(4 * g - 2, 2 * g)


def _f4_k_range(g: int, og: int, r4: int) -> range:
    # from s = 2k + 3 - 4og - r4 >= 0, l = g - 2k - r4/2 >= 0, k >= og
    lo = max(og, -((3 - 4 * og - r4) // 2))
    hi = (g - r4 // 2) // 2
    return range(lo, hi + 1)


def f4_by_signature(g: int) -> dict[tuple[int, int], Fraction]:
    """Period-4 term split by ``(orbifold_genus, r4)``."""
    out = {}
    for og in range(g // 4 + 1):
        for r4 in range(2, 2 * (g + 3 - 4 * og) // 3 + 1, 2):
            total = Fraction(0)
            for k in _f4_k_range(g, og, r4):
                total += Fraction(2) ** (2 * og - 1 + r4) * _fact_ratio(
                    k - 2 * og + g - r4 // 2,
                    (og, k - og, g - r4 // 2 - 2 * k, 2 * k + 3 - 4 * og - r4, r4 - 1),
                )
            out[og, r4] = (2 * g - 1) * total
    return out


def f4(g: int) -> Fraction:
    """Period-4 term: fixed rooted maps summed over period-4 rotations."""
    return sum(f4_by_signature(g).values(), Fraction(0))


def eps4_unrooted_formula(g: int) -> Fraction:
    """The four-part closed expression, summed exactly."""
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    total = Fraction(factorial(4 * g - 3), 4**g * factorial(g) * factorial(g - 1))
    total += Fraction(3 * factorial(4 * g - 3), 2 * factorial(2 * g + 1) * factorial(2 * g - 2))
    for og in range(1, g // 2 + 1):
        for k in range(2 * og - 1, g):
            total += _fact_ratio(
                2 * g - 2 * og + k - 1,
                (2 * k - 4 * og + 2, og, k - og, 2 * g - 1 - 2 * k),
            ) / 2
    for og in range(g // 4 + 1):
        for r4 in range(2, 2 * (g + 3 - 4 * og) // 3 + 1, 2):
            # upper limit g/2 + r4/4 overshoots; those terms carry a negative factorial
            for k in range(2 * og - 1 + r4 // 2, (2 * g + r4) // 4 + 1):
                total += Fraction(2) ** (2 * og - 3 + r4) * _fact_ratio(
                    k - 2 * og + g - r4 // 2,
                    (og, k - og, g - r4 // 2 - 2 * k, 2 * k + 3 - 4 * og - r4, r4 - 1),
                )
    return total


def eps4_unrooted_reconstructed(g: int) -> Fraction:
    """``(eps4_rooted + f2 + f4) / (8g - 4)``."""
    return (eps4_rooted(g) + f2(g) + f4(g)) / (8 * g - 4)


def eps4_unrooted_by_signatures(g: int) -> Fraction:
    """Sum of :func:`contribution` over every admissible signature."""
    return sum(
        (contribution(sig) for L in (1, 2, 4) for sig in signatures_for(g, L)),
        Fraction(0),
    )


def eps4_unrooted(g: int) -> int:
    """Unrooted 4-regular one-face maps of genus ``g >= 1``."""
    value = eps4_unrooted_formula(g)
    other = eps4_unrooted_reconstructed(g)
    assert value == other, f"unrooted count disagrees at g={g}: {value} != {other}"
    assert value.denominator == 1, f"unrooted count at g={g} is not an integer: {value}"
    return exact_div(value.numerator, value.denominator)
