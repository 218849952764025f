"""Cross-checks between the closed formulas and the brute-force oracle.

Each check yields :class:`CheckResult` records; :func:`run_checks` strings
them together for ``fourmaps verify``.  Failures inside a check (including
assertion errors raised by the counting code) are reported, not raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from . import bijection, closedform, oracle, orbifold
from .known import KNOWN_COUNTS
from .permmap import RootedMap

__all__ = [
    "CheckResult",
    "random_map",
    "glue_cases",
    "cut_cases",
    "run_checks",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def _eq(name: str, expected, got) -> CheckResult:
    if expected == got:
        return CheckResult(name, True, str(got))
    return CheckResult(name, False, f"expected {expected}, got {got}")


def random_map(rng: random.Random, darts: int) -> RootedMap:
    """A uniformly random fixed-point-free involution on ``darts`` darts."""
    order = list(range(darts))
    rng.shuffle(order)
    return RootedMap.from_pairs(darts, zip(order[::2], order[1::2]))


def glue_cases(rng: random.Random, count: int, max_genus: int = 1, max_darts: int = 16):
    """Random ``(map, triple)`` pairs valid for gluing, with map genus <= ``max_genus``."""
    out = []
    while len(out) < count:
        m = random_map(rng, rng.randrange(6, max_darts + 1, 2))
        if m.genus() > max_genus:
            continue
        verts = m.vertices()
        if len(verts) < 3:
            continue
        picked = rng.sample(verts, 3)
        t = bijection.Triple(*sorted(rng.choice(v) for v in picked))
        out.append((m, t))
    return out


def cut_cases(rng: random.Random, count: int, max_genus: int = 2, max_darts: int = 16):
    """Random ``(map, intertwined triple)`` pairs with 1 <= genus <= ``max_genus``."""
    out = []
    while len(out) < count:
        m = random_map(rng, rng.randrange(4, max_darts + 1, 2))
        if not 1 <= m.genus() <= max_genus:
            continue
        triples = bijection.intertwined_triples(m)
        out.append((m, rng.choice(triples)))
    return out


def check_known(max_genus: int = 15) -> Iterator[CheckResult]:
    for g in range(1, max_genus + 1):
        rooted, unrooted = KNOWN_COUNTS[g]
        yield _eq(f"rooted formula g={g}", rooted, closedform.eps4_rooted(g))
        yield _eq(f"unrooted formula g={g}", unrooted, orbifold.eps4_unrooted(g))


def check_oracle(max_genus: int, workers: int = 1) -> Iterator[CheckResult]:
    for g in range(1, max_genus + 1):
        spec = oracle.SearchSpec.four_regular(g, workers)
        yield _eq(f"oracle rooted g={g}", closedform.eps4_rooted(g), oracle.count_rooted(spec))
        yield _eq(
            f"oracle unrooted g={g}",
            orbifold.eps4_unrooted(g),
            oracle.count_unrooted_burnside(spec),
        )


def cases14(max_darts: int) -> list[tuple[int, int]]:
    """All ``(g, k)`` whose (1,4)-valent maps have at most ``max_darts`` darts."""
    out = []
    for g in range(max_darts // 4 + 1):
        for k in range(max_darts):
            n = 3 * k + 1 - 2 * g
            if 1 <= n and 2 * n <= max_darts:
                out.append((g, k))
    return out


def check_family14(max_darts: int) -> Iterator[CheckResult]:
    for g, k in cases14(max_darts):
        yield _eq(f"(1,4) family g={g} k={k}", closedform.eps14(g, k), oracle.count_rooted14(g, k))


def check_recurrence(max_genus: int = 6, max_k: int = 12) -> Iterator[CheckResult]:
    bad = [
        (g, k, closedform.recurrence_sides14(g, k))
        for g in range(1, max_genus + 1)
        for k in range(1, max_k + 1)
        if not closedform.recurrence_holds14(g, k)
    ]
    yield CheckResult(
        f"recurrence g<={max_genus} k<={max_k}",
        not bad,
        f"fails at {bad[:3]}" if bad else "",
    )


def trisection_specs(max_genus: int = 2, max_darts14: int = 16) -> list[tuple[int, oracle.SearchSpec]]:
    specs = [(g, oracle.SearchSpec.four_regular(g)) for g in range(1, max_genus + 1)]
    specs += [(g, oracle.SearchSpec.one_four(g, k)) for g, k in cases14(max_darts14)
              if closedform.eps14(g, k)]
    return specs


def check_trisections(max_genus: int = 2, max_darts14: int = 16) -> Iterator[CheckResult]:
    seen = bad = 0
    for g, spec in trisection_specs(max_genus, max_darts14):
        for m in oracle.enumerate_rooted(spec):
            seen += 1
            if len(bijection.trisections(m)) != 2 * g:
                bad += 1
    yield CheckResult("trisection count 2g", bad == 0 and seen > 0, f"{seen} maps, {bad} violations")


def check_surgery(samples: int = 1000, seed: int = 0) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    bad = 0
    for m, t in glue_cases(rng, samples, max_genus=1):
        up, image = bijection.glue_with_triple(m, t)
        back, t2 = bijection.cut_with_triple(up, image)
        if back != m or t2 != t or up.genus() != m.genus() + 1:
            bad += 1
    for m, t in cut_cases(rng, samples, max_genus=2):
        down, image = bijection.cut_with_triple(m, t)
        back, t2 = bijection.glue_with_triple(down, image)
        if back != m or t2 != t or down.genus() != m.genus() - 1:
            bad += 1
    yield CheckResult("cut/glue round trip", bad == 0, f"{2 * samples} cases, {bad} failures")


def check_identities(max_genus: int = 30) -> Iterator[CheckResult]:
    bad_recon, bad_slice = [], []
    for g in range(1, max_genus + 1):
        lhs = (8 * g - 4) * orbifold.eps4_unrooted_formula(g)
        rhs = closedform.eps4_rooted(g) + orbifold.f2(g) + orbifold.f4(g)
        if lhs != rhs:
            bad_recon.append((g, lhs, rhs))
        slice0 = orbifold.f2_by_orbifold_genus(g)[0]
        if slice0 != orbifold.f2_slice0_closed(g):
            bad_slice.append((g, slice0, orbifold.f2_slice0_closed(g)))
    yield CheckResult(f"reconstruction identity g<={max_genus}", not bad_recon,
                      f"fails at {bad_recon[:1]}" if bad_recon else "")
    yield CheckResult(f"orbifold-genus-0 slice of f2 g<={max_genus}", not bad_slice,
                      f"fails at {bad_slice[:1]}" if bad_slice else "")


def check_signatures(max_genus: int = 30) -> Iterator[CheckResult]:
    bad = [
        g for g in range(1, max_genus + 1)
        if orbifold.eps4_unrooted_by_signatures(g) != orbifold.eps4_unrooted(g)
    ]
    yield CheckResult(f"per-signature sum g<={max_genus}", not bad, f"fails at g={bad}" if bad else "")


def _guard(name: str, fn: Callable[[], Iterator[CheckResult]]) -> Iterator[CheckResult]:
    try:
        yield from fn()
    except (AssertionError, ArithmeticError, ValueError) as exc:
        yield CheckResult(name, False, f"{type(exc).__name__}: {exc}")


def run_checks(max_genus: int, workers: int = 1) -> Iterator[CheckResult]:
    """Every cross-check; oracle checks run up to ``max_genus`` (at most 3)."""
    if not 1 <= max_genus <= 3:
        raise ValueError(f"max genus must be in [1, 3], got {max_genus}")
    yield from _guard("known counts", lambda: check_known(15))
    yield from _guard("oracle", lambda: check_oracle(max_genus, workers))
    yield from _guard("(1,4) family", lambda: check_family14(min(16, 8 * max_genus - 4)))
    yield from _guard("recurrence", check_recurrence)
    yield from _guard("trisections", lambda: check_trisections(min(max_genus, 2), 16))
    yield from _guard("surgery", check_surgery)
    yield from _guard("identities", check_identities)
    yield from _guard("signatures", check_signatures)
