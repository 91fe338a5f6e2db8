from math import comb

import pytest

from avor3.fan import (SIGMA6, Cone, EquivalenceResult, SpanDeficient,
                       classify_orbits, equivalent, stabilizer,
                       stratum_character_lattice, torus_coordinates,
                       unimodular_matrices)
from avor3.forms import GENERATORS, SymForm, act_on_form, pairing
from avor3.equivariant import order_histogram


def test_cone_parsing_and_names():
    c = Cone.from_names("b3, a1 ,a2")
    assert c.name() == "a1,a2,b3"
    assert Cone.from_names("0").dim() == 0
    assert Cone.from_names("").name() == "0"
    with pytest.raises(ValueError):
        Cone.from_names("a1,a9")
    with pytest.raises(ValueError):
        Cone.from_names("a1,a1")


def test_cone_rejects_dependent_generators():
    # (x2 - x3)^2 is in the span of x2^2, x3^2 and x2 x3 but the six
    # generators are pairwise independent; a repeated square is not
    q = GENERATORS["a1"]
    with pytest.raises(ValueError):
        Cone((q, SymForm(4, 0, 0, 0, 0, 0)))  # (2 x1)^2 is a dependent rank-1 form


def test_face_counts_are_binomial():
    for d in range(7):
        assert len(SIGMA6.faces(d)) == comb(6, d)


def test_cusp_and_span_ranks():
    assert Cone.from_names("0").cusp_rank() == 0
    assert Cone.from_names("a1").cusp_rank() == 1
    assert Cone.from_names("a1,a2").cusp_rank() == 2
    assert Cone.from_names("a1,a2,a3").cusp_rank() == 3
    assert Cone.from_names("a1,a2,b3").cusp_rank() == 2
    assert Cone.from_names("a1,a2,b3").span_rank() == 2
    assert Cone.from_names("a1,a2,a3,b1").span_rank() == 3


def test_equivalence_produces_checkable_witness():
    c1 = Cone.from_names("a1,a2,a3")
    c2 = Cone.from_names("a1,b2,b3")
    res = equivalent(c1, c2)
    if res:
        g = res.witness
        assert {act_on_form(g, q) for q in c1.generators} == set(c2.generators)
    # the two dimension-3 orbit representatives are separated by cusp rank
    res = equivalent(Cone.from_names("a1,a2,a3"), Cone.from_names("a1,a2,b3"))
    assert res.verdict == "inequivalent"
    assert not res


def test_equivalence_of_single_rays():
    res = equivalent(Cone.from_names("a1"), Cone.from_names("b2"), bound=2)
    assert res.verdict == "equivalent"
    g = res.witness
    assert act_on_form(g, GENERATORS["a1"]) == GENERATORS["b2"]


def test_bounded_search_is_only_inconclusive_on_failure():
    v = (2, 3, 1)
    q = SymForm.from_matrix(tuple(tuple(a * b for b in v) for a in v))
    far = Cone((q,))
    near = Cone.from_names("a1")
    assert equivalent(near, far, bound=2).verdict == "inconclusive"
    assert equivalent(near, far, bound=3).verdict == "equivalent"


def test_unimodular_enumeration_counts():
    # frozen from a brute-force scan of all entry patterns
    m1 = unimodular_matrices(1)
    assert len(m1) == 6960
    assert len(unimodular_matrices(2)) == 135408
    assert all(abs(int(r)) <= 1 for row in m1[:10] for r in row)


EXPECTED_CENSUS = {
    0: [("0", 1, 0)],
    1: [("a1", 6, 1)],
    2: [("a1,a2", 15, 2)],
    3: [("a1,a2,a3", 16, 3), ("a1,a2,b3", 4, 2)],
    4: [("a1,a2,a3,b1", 12, 3), ("a1,a2,b1,b2", 3, 3)],
    5: [("a1,a2,a3,b1,b2", 6, 3)],
    6: [("a1,a2,a3,b1,b2,b3", 1, 3)],
}


@pytest.mark.parametrize("dim", sorted(EXPECTED_CENSUS))
def test_orbit_census_frozen(dim):
    census = classify_orbits(dim, bound=2)
    got = [(o.representative.name(), o.size, o.cusp_rank) for o in census.orbits]
    assert got == EXPECTED_CENSUS[dim]
    assert sum(census.counts()) == comb(6, dim)


@pytest.mark.parametrize("dim", [1, 2])
def test_low_dimensions_stable_under_larger_bound(dim):
    a = classify_orbits(dim, bound=2)
    b = classify_orbits(dim, bound=3)
    assert [(o.representative.name(), o.size, o.cusp_rank) for o in a.orbits] \
        == [(o.representative.name(), o.size, o.cusp_rank) for o in b.orbits]


EXPECTED_STABILIZERS = {
    "a1,a2,a3": (48, 3, 24),
    "a1,a2,a3,b1": (24, 2, 12),
    "a1,a2,b1,b2": (48, 2, 6),
    "a1,a2,a3,b1,b2": (16, 1, 2),
    "a1,a2,a3,b1,b2,b3": (48, 0, 1),
}


@pytest.mark.parametrize("name", sorted(EXPECTED_STABILIZERS))
def test_stabilizer_orders_frozen(name):
    cone = Cone.from_names(name)
    order, lat_dim, eff = EXPECTED_STABILIZERS[name]
    stab = stabilizer(cone)
    assert stab.order() == order
    lattice = stratum_character_lattice(cone)
    assert lattice.dimension() == lat_dim
    assert lattice.effective_order() == eff
    assert lattice.stabilizer_order == order


def test_stabilizer_elements_fix_the_cone():
    cone = Cone.from_names("a1,a2,a3,b1")
    for g in stabilizer(cone).elements:
        assert {act_on_form(g, q) for q in cone.generators} == set(cone.generators)


def test_stabilizer_needs_full_span():
    with pytest.raises(SpanDeficient):
        stabilizer(Cone.from_names("a1,a2,b3"))


def test_effective_histograms_frozen():
    hist4a = order_histogram(stratum_character_lattice(
        Cone.from_names("a1,a2,a3,b1")).effective)
    assert hist4a == {1: 1, 2: 7, 3: 2, 6: 2}
    hist4b = order_histogram(stratum_character_lattice(
        Cone.from_names("a1,a2,b1,b2")).effective)
    assert hist4b == {1: 1, 2: 3, 3: 2}


def test_character_lattice_basis_for_triple_of_squares():
    lattice = stratum_character_lattice(Cone.from_names("a1,a2,a3"))
    exps = {ch.exponents() for ch in lattice.basis}
    assert exps == {(0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)}
    # lattice characters vanish on the cone generators
    for ch in lattice.basis:
        for q in Cone.from_names("a1,a2,a3").generators:
            assert pairing(q, ch) == 0


def test_torus_coordinates_are_dual_basis():
    coords = torus_coordinates()
    expected = (
        (1, 0, 0, 0, 1, 1),
        (0, 1, 0, 1, 0, 1),
        (0, 0, 1, 1, 1, 0),
        (0, 0, 0, -1, 0, 0),
        (0, 0, 0, 0, -1, 0),
        (0, 0, 0, 0, 0, -1),
    )
    assert tuple(ch.exponents() for ch in coords) == expected
    from avor3.forms import GENERATOR_NAMES
    for i, name in enumerate(GENERATOR_NAMES):
        for j, ch in enumerate(coords):
            assert pairing(GENERATORS[name], ch) == int(i == j)
