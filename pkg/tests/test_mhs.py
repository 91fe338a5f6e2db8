import json

import pytest

from avor3.mhs import (CohomologyTable, MhsVector, UnsupportedTwist,
                       poincare_dualize)

T = MhsVector.tate
F = MhsVector.atom_f


def test_vector_normalization_and_dimension():
    v = MhsVector(tates=(3, 1, 1))
    assert v.tates == (1, 1, 3)
    assert v.dimension() == 3
    assert F().dimension() == 2
    assert MhsVector.zero().is_zero()
    assert T(2, mult=3).tates == (2, 2, 2)


def test_addition_is_multiset_union():
    v = T(0) + T(2) + F()
    assert v.tates == (0, 2)
    assert v.f_count == 1
    assert (v + v).dimension() == 2 * v.dimension()


def test_weights():
    assert (T(0) + T(3)).weights() == (0, 6)
    assert F().weights() == (0, 6)
    assert (F() + T(1)).weight_counter() == {0: 1, 2: 1, 6: 1}


def test_tate_twist():
    assert T(1).tate_twist(2) == T(3)
    assert F().tate_twist(0) == F()
    with pytest.raises(UnsupportedTwist):
        F().tate_twist(1)


def test_remove_weight_prefers_tate_pieces():
    v = T(0) + F()
    # a weight-0 removal takes the plain Tate class first
    assert v.remove_weight(0) == F()
    # with only the atom left, removal splits it
    assert F().remove_weight(0) == T(3)
    assert F().remove_weight(6) == T(0)
    with pytest.raises(ValueError):
        T(1).remove_weight(0)
    with pytest.raises(ValueError):
        F().remove_weight(2)


def test_class_roundtrip_and_str():
    v = T(2) + T(2) + T(0) + F()
    classes = v.to_classes()
    assert MhsVector.from_classes(classes) == v
    assert MhsVector.from_classes([{"atom": "F", "mult": 2}]) == F(mult=2)
    with pytest.raises(ValueError):
        MhsVector.from_classes([{"atom": "G"}])
    assert str(v) == "Q + Q(-2)^2 + F"
    assert str(MhsVector.zero()) == "0"


def test_table_drops_zero_entries_and_sorts():
    t = CohomologyTable("x", ((4, T(2)), (0, T(0)), (2, MhsVector.zero())))
    assert t.degrees() == (0, 4)
    assert t.entry(2).is_zero()
    with pytest.raises(ValueError):
        CohomologyTable("x", ((0, T(0)), (0, T(1))))


def test_table_operations():
    a = CohomologyTable("a", ((0, T(0)), (2, T(1))))
    b = CohomologyTable("b", ((2, T(1)), (3, T(0))))
    merged = a.add(b, "m")
    assert dict(merged.entries) == {0: T(0), 2: T(1) + T(1), 3: T(0)}
    assert merged.total_dimension() == 4
    assert merged.euler_characteristic() == 1 + 2 - 1
    twisted = a.tate_twist(1)
    assert dict(twisted.entries) == {0: T(1), 2: T(2)}
    shifted = a.shift_degrees(5)
    assert shifted.degrees() == (5, 7)
    assert a.betti(4) == (1, 0, 1, 0, 0)


def test_table_json_roundtrip_is_canonical():
    t = CohomologyTable("demo", ((0, T(0)), (2, T(1) + F())))
    text = t.to_json()
    again = CohomologyTable.from_json_dict(json.loads(text))
    assert again == t
    assert text == again.to_json()
    assert text.endswith("\n")


def test_poincare_dualize_frozen_example():
    # open 3-fold: compactly supported from ordinary cohomology
    t = CohomologyTable("open", ((0, T(0)), (1, T(0) + T(1))))
    dual = poincare_dualize(t, 3, "dual")
    assert dict(dual.entries) == {6: T(3), 5: T(3) + T(2)}
    assert dual.label == "dual"


def test_poincare_dualize_is_an_involution():
    t = CohomologyTable("t", ((2, T(1)), (3, T(0) + T(2)), (6, T(3))))
    assert poincare_dualize(poincare_dualize(t, 3, "d"), 3, "t") == t


def test_poincare_dualize_rejects_impossible_twists():
    with pytest.raises(ValueError):
        poincare_dualize(CohomologyTable("t", ((0, T(4)),)), 3)


def test_poincare_dualize_carries_atom_unchanged():
    t = CohomologyTable("t", ((6, F()),))
    dual = poincare_dualize(t, 6, "d")
    assert dict(dual.entries) == {6: F()}
