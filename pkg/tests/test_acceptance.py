"""Exit criteria, one test per criterion, each at its stated tolerance.

Every test records a single PASS/FAIL line; the lines are printed in the
pytest terminal summary.
"""

import random
import time

from fourmaps import bijection, closedform, orbifold
from fourmaps.checks import cases14, cut_cases, glue_cases, trisection_specs
from fourmaps.known import KNOWN_COUNTS
from fourmaps.oracle import SearchSpec, count_rooted, count_rooted14, count_unrooted_burnside, enumerate_rooted

RESULTS: list[str] = []


def report(number, title, ok, detail=""):
    RESULTS.append(f"[{number:>2}] {'PASS' if ok else 'FAIL'} {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def test_01_rooted_closed_form():
    start = time.perf_counter()
    got = {g: closedform.eps4_rooted(g) for g in range(1, 16)}
    elapsed = time.perf_counter() - start
    bad = [g for g in got if got[g] != KNOWN_COUNTS[g][0]]
    report(1, "rooted closed form = labelled column, g=1..15", not bad and elapsed < 1.0,
           f"mismatches {bad}, {elapsed:.3f}s")


def test_02_unrooted_formula():
    start = time.perf_counter()
    got = {g: orbifold.eps4_unrooted(g) for g in range(1, 16)}
    elapsed = time.perf_counter() - start
    bad = [g for g in got if got[g] != KNOWN_COUNTS[g][1]]
    report(2, "unrooted formula = unlabelled column, g=1..15", not bad and elapsed < 1.0,
           f"mismatches {bad}, {elapsed:.3f}s")


def test_03_oracle_rooted():
    details, ok = [], True
    for g, limit in ((1, 1.0), (2, 1.0), (3, 600.0)):
        start = time.perf_counter()
        spec = SearchSpec.four_regular(g, workers=2 if g == 3 else 1)
        got = count_rooted(spec)
        elapsed = time.perf_counter() - start
        ok &= got == closedform.eps4_rooted(g) and elapsed < limit
        details.append(f"g={g}: {got} in {elapsed:.2f}s")
    report(3, "oracle rooted = formula, g=1,2,3", ok, "; ".join(details))


def test_04_oracle_unrooted():
    details, ok = [], True
    for g, expected in ((1, 1), (2, 6), (3, 510)):
        got = count_unrooted_burnside(SearchSpec.four_regular(g, workers=2 if g == 3 else 1))
        ok &= got == orbifold.eps4_unrooted(g) == expected
        details.append(f"g={g}: {got}")
    report(4, "Burnside oracle = unrooted formula, g=1,2,3", ok, "; ".join(details))


def test_05_family14():
    # every case up to 16 darts, then up to 20 darts to reach ten nonempty families
    cases = cases14(20)
    bad, nonempty, nonempty16 = [], 0, 0
    for g, k in cases:
        expected = closedform.eps14(g, k)
        if count_rooted14(g, k) != expected:
            bad.append((g, k))
        if expected:
            nonempty += 1
            nonempty16 += 2 * (3 * k + 1 - 2 * g) <= 16
    ok = not bad and nonempty >= 10
    report(5, "(1,4) family oracle = formula", ok,
           f"{len(cases)} cases, {nonempty16} nonempty with 2n<=16, {nonempty} nonempty with 2n<=20, bad {bad}")


def test_06_recurrence():
    bad = [(g, k) for g in range(1, 7) for k in range(1, 13) if not closedform.recurrence_holds14(g, k)]
    report(6, "recurrence holds, g<=6, k<=12", not bad, f"bad {bad}" if bad else "72 cases")


def test_07_trisection_lemma():
    seen, bad = 0, 0
    for g, spec in trisection_specs(max_genus=2, max_darts14=16):
        for m in enumerate_rooted(spec):
            seen += 1
            bad += len(bijection.trisections(m)) != 2 * g
    report(7, "every enumerated map has exactly 2g trisections", bad == 0 and seen >= 200,
           f"{seen} maps, {bad} violations")


def test_08_cut_glue_round_trip():
    rng = random.Random(2024)
    bad = checked = 0
    for m, t in glue_cases(rng, 1000, max_genus=1):
        up, image = bijection.glue_with_triple(m, t)
        ok = up.genus() == m.genus() + 1 and bijection.cut_with_triple(up, image) == (m, t)
        bad += not ok
        checked += 1
    for m, t in cut_cases(rng, 1000, max_genus=2):
        down, image = bijection.cut_with_triple(m, t)
        ok = down.genus() == m.genus() - 1 and bijection.glue_with_triple(down, image) == (m, t)
        bad += not ok
        checked += 1
    report(8, "cut(glue(m, t)) = m and glue(cut(m, t)) = m, genus shifts +-1", bad == 0 and checked >= 1000,
           f"{checked} pairs, {bad} failures")


def test_09_reconstruction_identity():
    bad = []
    for g in range(1, 31):
        lhs = (8 * g - 4) * orbifold.eps4_unrooted_formula(g)
        rhs = closedform.eps4_rooted(g) + orbifold.f2(g) + orbifold.f4(g)
        if lhs != rhs:
            bad.append(("reconstruction", g))
        if orbifold.f2_by_orbifold_genus(g)[0] != orbifold.f2_slice0_closed(g):
            bad.append(("slice", g))
    report(9, "reconstruction identity and f2 slice, g=1..30", not bad, f"bad {bad}" if bad else "60 identities")


def test_10_integrality():
    bad = [g for g in range(1, 51) if orbifold.eps4_unrooted_formula(g).denominator != 1]
    ints = all(isinstance(orbifold.eps4_unrooted(g), int) for g in range(1, 51))
    report(10, "unrooted count is an integer, g=1..50", not bad and ints, f"non-integral at {bad}" if bad else "")
