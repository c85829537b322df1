import random

import pytest

from delpezzo.effectivity import (
    brute_force_effective,
    is_absolutely_effective,
    is_effective,
    is_effective_anticlass_fast,
    is_hole,
    solve_root_combination,
)
from delpezzo.picard import parse_divisor, vneg, vscale
from delpezzo.surface import catalog_load
from delpezzo import census


def _bound(s, d):
    return max(0, s.lattice.intersect(d, vneg(s.lattice.canonical)))


def test_basic_effectivity():
    s = catalog_load(3).get("dP")
    lat = s.lattice
    assert is_effective(s, parse_divisor(lat, "E1"))[0]
    assert is_effective(s, parse_divisor(lat, "-K"))[0]
    assert is_effective(s, lat.zero())[0]
    assert not is_effective(s, parse_divisor(lat, "-E1"))[0]
    assert not is_effective(s, lat.canonical)[0]
    # A root is effective iff the surface has it.
    root = parse_divisor(lat, "E1-E2")
    assert not is_effective(s, root)[0]
    assert is_effective(catalog_load(3).get("A4"), root)[0]


def test_trace_replays():
    s = catalog_load(3).get("A1+A2")
    d = parse_divisor(s.lattice, "3L-E1-2E2-E5")
    verdict, trace = is_effective(s, d)
    assert trace.verdict is verdict
    trace.replay(s.lattice)


def test_brute_force_agreement_sample():
    rng = random.Random(7)
    for degree, label in [(3, "E6"), (4, "D5"), (5, "A2"), (6, "2A1")]:
        s = catalog_load(degree).get(label)
        for _ in range(60):
            d = tuple(rng.randint(-4, 4) for _ in range(s.lattice.rank))
            assert (
                is_effective(s, d)[0]
                == brute_force_effective(s, d, _bound(s, d))
            ), (s.name, d)


def test_anticlass_fast_on_explicit_windows():
    s = census.section13_surface()
    A = census.section13_system()
    for k, l in [(10, 10), (9, 10)]:
        d = vneg(A.window(k, l))
        assert is_effective_anticlass_fast(s, d) == is_effective(s, d)[0]
        assert not is_effective_anticlass_fast(s, d)


def test_holes():
    s = census.section13_surface()
    A = census.section13_system()
    assert is_hole(s, vneg(A.window(10, 10)))
    assert is_hole(s, vneg(A.window(9, 10)))
    lat = s.lattice
    # Effective classes and classes with non-effective multiples are not holes.
    assert not is_hole(s, parse_divisor(lat, "E1"))
    dp = catalog_load(3).get("dP")
    assert not is_hole(dp, parse_divisor(dp.lattice, "E1-E2"))


def test_absolutely_effective():
    lat3 = catalog_load(3).get("dP").lattice
    assert is_absolutely_effective(3, parse_divisor(lat3, "E1"))
    assert is_absolutely_effective(3, parse_divisor(lat3, "-K"))
    # Roots pair to zero with K; the line cone has strictly negative
    # K-degree away from the origin.
    assert not is_absolutely_effective(3, parse_divisor(lat3, "L123"))
    assert not is_absolutely_effective(3, parse_divisor(lat3, "-E1"))


def test_solve_root_combination():
    s = catalog_load(3).get("A4")
    lat = s.lattice
    d = parse_divisor(lat, "E1-E3")  # (E1-E2) + (E2-E3)
    combo = solve_root_combination(s, d)
    assert combo is not None
    assert solve_root_combination(s, parse_divisor(lat, "E3-E1")) is None


def test_fast_anticlass_precondition():
    s = catalog_load(3).get("A4")
    with pytest.raises(Exception):
        is_effective_anticlass_fast(s, parse_divisor(s.lattice, "L"))


def test_multiple_of_effective_is_effective():
    s = catalog_load(4).get("D4")
    d = parse_divisor(s.lattice, "2L-E1235")
    assert is_effective(s, d)[0]
    assert is_effective(s, vscale(3, d))[0]
