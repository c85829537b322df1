import itertools

import pytest
from hypothesis import given, strategies as st

from delpezzo import census, weyl
from delpezzo.errors import InputError
from delpezzo.picard import PicardLattice, parse_divisor_list
from delpezzo.surface import catalog_load
from delpezzo.toric import (
    TABLE_CYCLIC_STRONG,
    ToricSystem,
    augment_sequence,
    augmentation_chain,
    blow_down,
    canonical_cyclic,
    classify_sequence,
    compute_IXA,
    compute_IXA_windows,
    enumerate_cyclic_strong_admissible,
    find_system_with_squares,
    from_json,
    is_admissible,
    is_cyclic_strong_exceptional,
    is_elementary_augmentation,
    is_exceptional,
    is_strong_exceptional,
    perm,
    sequence_shift,
    sequence_symmetry,
    shift,
    symmetry,
    system_violations,
)


def _system(degree, text):
    lat = PicardLattice.standard(degree)
    return ToricSystem(lat, parse_divisor_list(lat, text))


SYS13 = census.section13_system()
SYS9_DEG6 = _system(6, census.TABLE9_SYSTEM_TEXTS[6])


def test_validation_errors():
    lat = PicardLattice.standard(6)
    terms = parse_divisor_list(lat, "L13,E1,L12,E2,L23,E3")
    assert system_violations(lat, terms) == []
    assert system_violations(lat, terms[:-1])  # wrong length
    bad = terms[:-1] + (terms[0],)
    assert any("A_" in p or "sum" in p for p in system_violations(lat, bad))
    with pytest.raises(InputError):
        ToricSystem(lat, bad)


def test_windows():
    A = SYS9_DEG6
    assert A.window(1, 1) == A.terms[0]
    assert A.window(6, 1) == tuple(
        x + y for x, y in zip(A.terms[5], A.terms[0])
    )
    # Window square via the additivity identity (asserted internally):
    # three terms of square -1 give (3 * (-1 + 2)) - 2 = 1.
    assert A.window_square(2, 4) == 1


def test_perm_shift_symmetry():
    A = SYS13
    squares = A.squares()
    for k in range(1, A.n + 1):
        if squares[k - 1] != -2:
            continue
        B = perm(A, k)
        assert B.squares() == squares
        assert perm(B, k) == A
    assert shift(A).squares() == sequence_shift(squares)
    assert symmetry(A).squares() == sequence_symmetry(squares)
    assert shift(A).terms[-1] == A.terms[0]


def test_json_roundtrip():
    assert from_json(SYS13.to_json()) == SYS13


def test_augment_sequence():
    assert augment_sequence((0, 0, 0, 0), 2) == (-1, -1, -1, 0, 0)
    assert augment_sequence((0, 0, 0, 0), 1) == (-1, -1, 0, 0, -1)
    with pytest.raises(InputError):
        augment_sequence((0, 0, 0, 0), 7)


def test_admissibility():
    assert is_admissible((1, 1, 1))
    assert is_admissible((0, 0, 0, 0))
    assert is_admissible((-1, -2, -2, -2, -1, -2, -2, -1, -2, -3))
    assert is_admissible((-2, -2, -1, -2, -2, -1, -2, -2, -1))
    assert not is_admissible((0, 0, 0))
    for a in TABLE_CYCLIC_STRONG.values():
        assert is_admissible(a)


@given(
    st.sampled_from(sorted(TABLE_CYCLIC_STRONG.values())),
    st.integers(0, 8),
    st.booleans(),
)
def test_admissibility_invariance(a, rot, flip):
    b = a
    for _ in range(rot % len(a)):
        b = sequence_shift(b)
    if flip:
        b = sequence_symmetry(b)
    assert is_admissible(b)
    assert canonical_cyclic(b) == canonical_cyclic(a)


def test_classify_sequence():
    kt = classify_sequence((-1, -2, -2, -2, -1, -2, -2, -1, -2, -3))
    assert (kt.kind, kt.type_tag) == ("second", "IIb")
    kt = classify_sequence((0, 0, -1, -1, -1))
    assert kt.kind == "first"
    for name, preset in census.SEQUENCE_PRESETS.items():
        tag = classify_sequence(preset.squares).type_tag
        assert name.startswith(tag), (name, tag)


def test_enumerate_cyclic_strong():
    rows = list(enumerate_cyclic_strong_admissible())
    assert len(rows) == 15
    assert sum(1 for a in rows if len(a) == 4) == 3
    assert sum(1 for a in rows if len(a) == 9) == 1


def test_ixa_windows():
    assert set(compute_IXA_windows((0, 0, -1, -1, -1))) == {
        (3, 3),
        (4, 4),
        (5, 5),
    }
    assert len(compute_IXA_windows(TABLE_CYCLIC_STRONG["9"])) == 27
    assert len(compute_IXA(SYS13)) == 22


def test_checkers_on_explicit_system():
    s = census.section13_surface()
    assert is_strong_exceptional(s, SYS13).ok
    assert is_exceptional(s, SYS13).ok
    res = is_cyclic_strong_exceptional(s, SYS13)
    assert not res.ok and res.witness is not None


def test_checker_methods_agree_on_samples():
    s = census.section13_surface()
    for A in itertools.islice(weyl.orbit_of_toric_system(SYS13), 25):
        for checker in (is_exceptional, is_strong_exceptional):
            assert (
                checker(s, A, method="reference").ok
                == checker(s, A, method="optimized").ok
            )


def test_cyclic_strong_on_table_systems():
    dp6 = catalog_load(6).get("dP")
    assert is_cyclic_strong_exceptional(dp6, SYS9_DEG6).ok
    s = catalog_load(3).get("3A2")
    A3 = _system(3, census.TABLE9_SYSTEM_TEXTS[3])
    assert is_cyclic_strong_exceptional(s, A3).ok
    # Cyclic strong exceptionality is preserved by shift and symmetry.
    assert is_cyclic_strong_exceptional(s, shift(A3)).ok
    assert is_cyclic_strong_exceptional(s, symmetry(A3)).ok


def test_elementary_augmentation_and_blow_down():
    dp6 = catalog_load(6).get("dP")
    i = is_elementary_augmentation(dp6, SYS9_DEG6)
    assert i is not None
    s2, A2 = blow_down(dp6, SYS9_DEG6, i)
    assert A2.n == SYS9_DEG6.n - 1
    assert A2.lattice.degree == 7


def test_augmentation_chain():
    dp6 = catalog_load(6).get("dP")
    chain = augmentation_chain(dp6, SYS9_DEG6)
    assert chain is not None and len(chain) == 2
    # The explicit counterexample admits no chain.
    assert augmentation_chain(census.section13_surface(), SYS13) is None


def test_find_system_with_squares():
    lat = PicardLattice.standard(7)
    for key in ("5a", "5b"):
        a = TABLE_CYCLIC_STRONG[key]
        A = find_system_with_squares(lat, a)
        assert A is not None and A.squares() == a
