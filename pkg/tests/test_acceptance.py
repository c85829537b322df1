"""Acceptance gate: one test (and one pass/fail line) per criterion."""

import itertools
import random
import time

import numpy as np

from delpezzo import census, weyl
from delpezzo.effectivity import brute_force_effective, is_effective
from delpezzo.picard import PicardLattice, vneg
from delpezzo.surface import SurfaceModel, catalog_load
from delpezzo.toric import is_exceptional, is_strong_exceptional


def _gate(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"{status} criterion {number}: {label}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} failed: {label}\n{detail}"


def test_criterion_01_class_inventories():
    t0 = time.time()
    report = census.verify_table1()
    elapsed = time.time() - t0
    _gate(
        1,
        "class counts per degree match the table",
        report.passed and elapsed < 60,
        f"{elapsed:.1f}s",
    )


def test_criterion_02_weyl_order_and_freeness(iib_run):
    ok = (
        weyl.group_order(2) == 2903040
        and iib_run.orbit_total == 2903040
        and iib_run.complete
    )
    _gate(2, "|W| at degree 2 is 2903040 and the orbit is free", ok)


def test_criterion_03_strong_census(iib_run):
    report = census.verify_table7(iib_run)
    _gate(3, "strong-mode census counts", report.passed, report.render())


def test_criterion_04_exceptional_census(iib_run):
    report = census.verify_table8(iib_run)
    _gate(4, "exceptional-mode census counts", report.passed, report.render())


def test_criterion_05_explicit_counterexample():
    report = census.verify_section13()
    _gate(5, "explicit degree-2 counterexample verifies", report.passed,
          report.render())


def test_criterion_06_admissible_sequence_table():
    report = census.verify_table3()
    _gate(6, "15 cyclic strong admissible sequences", report.passed,
          report.render())


def test_criterion_07_ixa_cardinalities():
    report = census.verify_ixa_counts()
    _gate(7, "I(X,A) cardinalities for first-kind rows", report.passed,
          report.render())


def test_criterion_08_good_class_propositions():
    report = census.verify_good_class_tables()
    for degree in (5, 4, 3):
        report.extend(census.verify_good_class_propositions(degree))
    _gate(8, "good-class propositions, degrees 3-5", report.passed,
          report.render())


def test_criterion_09_effectiveness_oracles(iib_run):
    rng = random.Random(20260824)
    checked = 0
    for degree in (7, 6, 5, 4, 3):
        for s in catalog_load(degree).entries:
            lat = s.lattice
            minus_k = vneg(lat.canonical)
            for _ in range(1000):
                d = tuple(rng.randint(-4, 4) for _ in range(lat.rank))
                bound = max(0, lat.intersect(d, minus_k))
                got = is_effective(s, d)[0]
                want = brute_force_effective(s, d, bound)
                assert got == want, (s.name, d)
                checked += 1
    cross = iib_run.stats["deep_cross_checks"]
    ok = checked >= 52_000 and cross == iib_run.stats["deep_tests"] > 0
    _gate(
        9,
        "effectiveness deciders agree with the search oracle",
        ok,
        f"{checked} random divisors; {cross} census anti-class cross-checks",
    )


def test_criterion_10_checker_equivalence():
    surfaces = [
        catalog_load(2).get(label) for label in ("A1+2A3", "7A1", "D4+3A1")
    ]
    names = ("IIb-deg2",) + census.A11_PRESET_NAMES
    pairs = 0
    for i, name in enumerate(names):
        A0 = census.SEQUENCE_PRESETS[name].initial_system()
        s = surfaces[i % len(surfaces)]
        for A in itertools.islice(weyl.orbit_of_toric_system(A0), 500):
            for checker in (is_exceptional, is_strong_exceptional):
                ref = checker(s, A, method="reference").ok
                opt = checker(s, A, method="optimized").ok
                assert ref == opt, (name, s.name, A.terms)
                pairs += 1
    _gate(10, "reference and optimized checkers agree",
          pairs >= 500 * len(names) * 2, f"{pairs} comparisons")


def test_criterion_11_classification():
    report = census.verify_cyclic_strong_classification()
    _gate(11, "cyclic strong classification incl. degree-5 negatives",
          report.passed, report.render())


def test_criterion_12_long_run_checkpoint_resume(tmp_path):
    dp1 = SurfaceModel(PicardLattice.standard(1), (), "X_{1}", None)
    kwargs = dict(surfaces=(dp1,), modes=("strong",), finalize=False)
    truncated = census.census_for_preset(
        "VI-deg1", **kwargs, checkpoint_dir=tmp_path, max_layers=4
    )
    resumed = census.census_for_preset(
        "VI-deg1", **kwargs, checkpoint_dir=tmp_path, resume=True, max_layers=7
    )
    fresh = census.census_for_preset("VI-deg1", **kwargs, max_layers=7)
    counts_ok = all(
        truncated.raw_counts[key] + resumed.raw_counts[key]
        == fresh.raw_counts[key]
        for key in fresh.raw_counts
    )
    ok = (
        not truncated.complete
        and truncated.orbit_total < fresh.orbit_total == resumed.orbit_total
        and counts_ok
    )
    _gate(
        12,
        "long-run mode starts, checkpoints, and resumes",
        ok,
        f"truncated {truncated.orbit_total} -> full {fresh.orbit_total}",
    )
