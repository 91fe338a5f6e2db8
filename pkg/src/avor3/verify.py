"""Named verification checks, one per acceptance criterion.

Each check returns (ok, detail); `run_all` wraps them with exception
capture so a single failure cannot hide the others.  The checks recompute
everything from scratch through the public pipelines and compare against
independently frozen expectations.
"""

from __future__ import annotations

import random

from . import strata
from .equivariant import (LinearRep, element_order, exterior_invariant_dims,
                          fixed_subspace_dims_bruteforce, group_closure,
                          order_histogram)
from .fan import (Cone, classify_orbits, stratum_character_lattice, stabilizer,
                  torus_coordinates)
from .forms import (COEFF_ORDER, GENERATOR_NAMES, GENERATORS, GroupElement,
                    act_on_form, dual_action_on_character, pairing)
from .mhs import MhsVector
from .registry import load_registry
from .ssengine import AmbiguousResolution, resolve

EXPECTED_BETTI = (1, 0, 2, 0, 4, 0, 6, 0, 4, 0, 2, 0, 1)

_T = MhsVector.tate

EXPECTED_RANK1 = {4: _T(2), 5: _T(0), 6: _T(3) + _T(3), 8: _T(4) + _T(4), 10: _T(5)}
EXPECTED_RANK2 = {2: _T(1), 4: _T(2), 6: _T(3) + _T(3), 8: _T(4)}
EXPECTED_RANK3 = {0: _T(0), 2: _T(1), 4: _T(2) + _T(2), 6: _T(3)}

EXPECTED_TORUS_COORDS = (
    (1, 0, 0, 0, 1, 1),
    (0, 1, 0, 1, 0, 1),
    (0, 0, 1, 1, 1, 0),
    (0, 0, 0, -1, 0, 0),
    (0, 0, 0, 0, -1, 0),
    (0, 0, 0, 0, 0, -1),
)

DISTINGUISHED_HISTOGRAM = {1: 1, 2: 7, 3: 2, 6: 2}

_SEED = 20260823


def _table_matches(table, expected):
    return dict(table.entries) == expected


def check_betti_vector(registry, bound):
    result = strata.compactification_betti(registry, bound)
    ok = result.betti == EXPECTED_BETTI
    return ok, " ".join(str(b) for b in result.betti)


def check_main_page_resolution(registry, bound):
    page = strata.main_first_page(registry, bound)
    limit, report = resolve(page)
    nonzero = [d for d in report.candidates[0].decisions if d.rank]
    if [(d.r, d.p, d.q, d.rank, d.kind) for d in nonzero] != [(1, 2, 3, 1, "solver")]:
        return False, "unexpected decisions %r" % (nonzero,)
    if not all(w == p + q for (p, q), v in limit.entries for w in v.weights()):
        return False, "limit page is not pure"
    loose = strata.SSPage(1, page.entries, (), abutment_smooth_proper=False,
                          label=page.label)
    try:
        resolve(loose)
        return False, "resolution without purity was unexpectedly unique"
    except AmbiguousResolution as exc:
        n = len(exc.report.candidates)
        ranks = sorted(sum(d.rank for d in c.decisions) for c in exc.report.candidates)
        if n != 2 or ranks != [0, 1]:
            return False, "purity-off candidates %d with ranks %r" % (n, ranks)
    return True, "unique with purity (1 differential), 2 candidates without"


def check_orbit_census(registry, bound):
    expected_classes = {1: 1, 2: 1, 3: 2, 4: 2, 5: 1, 6: 1}
    details = []
    for dim, classes in sorted(expected_classes.items()):
        census = classify_orbits(dim, bound=bound)
        if len(census.orbits) != classes:
            return False, "dimension %d: %d classes" % (dim, len(census.orbits))
        details.append("%d:%d" % (dim, classes))
    dim3 = classify_orbits(3, bound=bound)
    if sorted(o.cusp_rank for o in dim3.orbits) != [2, 3]:
        return False, "dimension-3 cusp ranks %r" % [o.cusp_rank for o in dim3.orbits]
    for dim in (1, 2):
        a = classify_orbits(dim, bound=2)
        b = classify_orbits(dim, bound=3)
        same = ([(o.representative.name(), o.size) for o in a.orbits]
                == [(o.representative.name(), o.size) for o in b.orbits])
        if not same:
            return False, "dimension %d census changed between bounds 2 and 3" % dim
    return True, "classes per dimension " + " ".join(details)


def check_local_cone_symmetries(registry, bound):
    cone = Cone.from_names("a1,a2,a3")
    stab = stabilizer(cone)
    lattice = stratum_character_lattice(cone)
    if stab.order() != 48 or lattice.effective_order() != 24:
        return False, "orders %d/%d" % (stab.order(), lattice.effective_order())
    diag = {m for m in lattice.effective
            if all(m[i][j] == 0 for i in range(3) for j in range(3) if i != j)}
    expected_diag = {tuple(tuple(signs[i] if i == j else 0 for j in range(3))
                           for i in range(3))
                     for signs in [(1, 1, 1), (-1, -1, 1), (-1, 1, -1), (1, -1, -1)]}
    if diag != expected_diag:
        return False, "diagonal part has order %d" % len(diag)
    quotient = lattice.effective_order() // len(diag)
    ok = quotient == 6
    return ok, "order 48, effective 24 = 4 diagonal x %d" % quotient


def check_distinguished_dim4_symmetry(registry, bound):
    census = classify_orbits(4, bound=bound)
    matches = []
    for orbit in census.orbits:
        lattice = stratum_character_lattice(orbit.representative)
        hist = order_histogram(lattice.effective)
        if lattice.effective_order() == 12 and hist == DISTINGUISHED_HISTOGRAM:
            matches.append(orbit.representative.name())
    ok = len(matches) == 1
    detail = ("%s carries the order-12 action" % matches[0]) if ok \
        else "%d matching classes" % len(matches)
    return ok, detail


def random_signed_permutation_rep(rng, max_dim=4):
    """Small random finite matrix group: signed permutation generators."""
    dim = rng.randint(2, max_dim)
    gens = []
    for _ in range(rng.randint(1, 3)):
        perm = list(range(dim))
        rng.shuffle(perm)
        signs = [rng.choice((1, -1)) for _ in range(dim)]
        gens.append(tuple(tuple(signs[i] if j == perm[i] else 0
                                for j in range(dim)) for i in range(dim)))
    return LinearRep(dim, tuple(gens))


def check_stratum_invariants(registry, bound):
    reps = 0
    for cone_dim in range(3, 7):
        for orbit in classify_orbits(cone_dim, bound=bound).orbits:
            cone = orbit.representative
            if cone.cusp_rank() != 3:
                continue
            lattice = stratum_character_lattice(cone)
            m = lattice.dimension()
            if m == 0:
                continue
            rep = LinearRep(m, lattice.effective)
            molien = exterior_invariant_dims(rep)
            brute = fixed_subspace_dims_bruteforce(rep)
            if molien != (1,) + (0,) * m or molien != brute:
                return False, "%s gives %r / %r" % (cone.name(), molien, brute)
            reps += 1
    rng = random.Random(_SEED)
    for _ in range(50):
        rep = random_signed_permutation_rep(rng)
        if exterior_invariant_dims(rep) != fixed_subspace_dims_bruteforce(rep):
            return False, "dual-route disagreement on a random representation"
    return True, "%d stratum actions concentrated, 50 random dual-route checks" % reps


def check_rank_one_pipeline(registry, bound):
    result = strata.rank_one_locus(registry)
    if result.limit.entries != result.page.entries:
        return False, "page does not degenerate"
    if any(d.rank for d in result.report.candidates[0].decisions):
        return False, "nonzero differential decided"
    if not _table_matches(result.table, EXPECTED_RANK1):
        return False, "table %r" % (result.table.entries,)
    if result.table.entry(5).weights() != (0,):
        return False, "degree-5 class has weights %r" % (result.table.entry(5).weights(),)
    return True, "degenerate page, weight-0 class in degree 5"


def check_rank_two_pipeline(registry, bound):
    result = strata.rank_two_locus(registry)
    used = [(d.r, d.p, d.q, d.rank, d.kind)
            for d in result.report.candidates[0].decisions if d.rank]
    if used != [(2, 2, 2, 1, "known")]:
        return False, "decisions %r" % (used,)
    if not _table_matches(result.torus_table, {6: _T(3), 8: _T(4)}):
        return False, "bundle part %r" % (result.torus_table.entries,)
    if not _table_matches(result.product_table, {2: _T(1), 4: _T(2), 6: _T(3)}):
        return False, "product part %r" % (result.product_table.entries,)
    ok = _table_matches(result.table, EXPECTED_RANK2)
    return ok, "known rank-1 differential applied, split justified"


def check_rank_three_attribution(registry, bound):
    result = strata.rank_three_locus(bound)
    expected = {
        ("a1,a2,a3", 3, 3, 6),
        ("a1,a2,a3,b1", 4, 2, 4),
        ("a1,a2,b1,b2", 4, 2, 4),
        ("a1,a2,a3,b1,b2", 5, 1, 2),
        ("a1,a2,a3,b1,b2,b3", 6, 0, 0),
    }
    got = {(c.cone_name, c.cone_dim, c.stratum_dim, c.degree)
           for c in result.contributions}
    if got != expected:
        return False, "contributions %r" % (sorted(got),)
    ok = _table_matches(result.table, EXPECTED_RANK3)
    return ok, "5 strata attributed across dimensions 3..6"


def check_torus_coordinates(registry, bound):
    got = tuple(ch.exponents() for ch in torus_coordinates())
    ok = got == EXPECTED_TORUS_COORDS
    return ok, "six dual characters reproduced" if ok else "coordinates %r" % (got,)


def check_product_symmetry(registry, bound):
    rep = strata.product_symmetry_rep()
    group = group_closure(rep)
    if len(group) != 12:
        return False, "group order %d" % len(group)
    orders = {element_order(m) for m, _ in group}
    if 6 not in orders:
        return False, "no element of order 6"
    molien = exterior_invariant_dims(rep)
    brute = fixed_subspace_dims_bruteforce(rep)
    ok = molien == (1, 0, 1, 0, 1) and molien == brute
    return ok, "order 12 with an order-6 element, invariants 1 0 1 0 1"


def check_conservation_properties(registry, bound):
    rng = random.Random(_SEED)
    mats = []
    for _ in range(6):
        while True:
            rows = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
            det = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
                   - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
                   + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
            if det in (1, -1):
                mats.append(GroupElement(tuple(tuple(r) for r in rows)))
                break
    forms = [GENERATORS[n] for n in GENERATOR_NAMES]
    for g in mats:
        for h in mats:
            for q in forms:
                if act_on_form(g * h, q) != act_on_form(g, act_on_form(h, q)):
                    return False, "composition law fails"
    chars = torus_coordinates()
    for g in mats:
        for q in forms:
            for f in chars:
                if pairing(act_on_form(g, q), dual_action_on_character(g, f)) \
                        != pairing(q, f):
                    return False, "pairing is not invariant"
    eulers = [strata.stratum_table(name, registry, bound).euler_characteristic()
              for name in strata.STRATUM_NAMES]
    if eulers != [5, 5, 5, 5]:
        return False, "stratum euler characteristics %r" % (eulers,)
    result = strata.compactification_betti(registry, bound)
    balanced = (result.page.euler_characteristic() == 20
                and result.table.euler_characteristic() == 20
                and sum(result.betti) == 20)
    if not balanced:
        return False, "euler characteristic not conserved"
    return True, "composition, pairing and euler conservation hold"


ALL_CHECKS = (
    ("betti_vector", check_betti_vector),
    ("main_page_resolution", check_main_page_resolution),
    ("orbit_census", check_orbit_census),
    ("local_cone_symmetries", check_local_cone_symmetries),
    ("distinguished_dim4_symmetry", check_distinguished_dim4_symmetry),
    ("stratum_invariants", check_stratum_invariants),
    ("rank_one_pipeline", check_rank_one_pipeline),
    ("rank_two_pipeline", check_rank_two_pipeline),
    ("rank_three_attribution", check_rank_three_attribution),
    ("torus_coordinates", check_torus_coordinates),
    ("product_symmetry", check_product_symmetry),
    ("conservation_properties", check_conservation_properties),
)


def run_all(registry=None, bound=2):
    """Run every check; returns a list of (name, ok, detail) triples."""
    registry = registry or load_registry()
    results = []
    for name, fn in ALL_CHECKS:
        try:
            ok, detail = fn(registry, bound)
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, "raised %s: %s" % (type(exc).__name__, exc)
        results.append((name, ok, detail))
    return results
