"""Stratum-by-stratum cohomology of the compactified moduli space.

The second Voronoi compactification of the moduli space of principally
polarized abelian threefolds is stratified by the torus rank of the
degenerating semi-abelian variety: the open part (rank 0), a Kummer-type
family over the abelian surface moduli (rank 1), a locus mixing a
C*-bundle piece with products of elliptic curves (rank 2), and the fully
degenerate locus assembled from torus-orbit strata of the fan (rank 3).
Each pipeline here produces a table of compactly supported cohomology
with its Tate-type decomposition; the four tables feed a first-quadrant
page whose resolved limit gives the Betti numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equivariant import LinearRep, exterior_invariant_dims, h1_pullback
from .fan import classify_orbits, stratum_character_lattice
from .mhs import CohomologyTable, MhsVector
from .registry import Registry, load_registry
from .ssengine import SSPage, abutment, gysin_split, leray_assemble, resolve

STRATUM_NAMES = ("a3", "beta1", "beta2", "beta3")

COMPACTIFICATION_DIMENSION = 6


class InvariantNotConcentrated(RuntimeError):
    """A symmetry group leaves more cohomology than the pipeline assumes."""


class ExpectedPageMismatch(RuntimeError):
    """A freshly assembled page disagrees with the stored cross-check copy."""


@dataclass(frozen=True)
class StratumContribution:
    """One torus-orbit stratum's class: which cone, and where it lands."""

    cone_name: str
    cone_dim: int
    stratum_dim: int
    degree: int


@dataclass(frozen=True)
class RankThreeResult:
    table: CohomologyTable
    contributions: tuple
    bound: int


@dataclass(frozen=True)
class FibrationResult:
    page: SSPage
    limit: SSPage
    table: CohomologyTable
    report: object


@dataclass(frozen=True)
class RankTwoResult:
    page: SSPage
    torus_table: CohomologyTable
    product_table: CohomologyTable
    table: CohomologyTable
    report: object


@dataclass(frozen=True)
class BettiResult:
    page: SSPage
    limit: SSPage
    table: CohomologyTable
    betti: tuple
    report: object


def rank_three_locus(bound: int = 2) -> RankThreeResult:
    """Classes of the fully degenerate locus, one per torus-orbit stratum.

    Strata correspond to fan orbits whose generators span all of space
    (cusp rank 3); the quotient of each orbit torus by its stabilizer must
    carry no cohomology beyond degree zero, so each stratum of complex
    dimension m contributes a single Tate class Q(-m) in degree 2m.
    """
    entries = {}
    contributions = []
    for cone_dim in range(3, 7):
        census = classify_orbits(cone_dim, bound=bound)
        for orbit in census.orbits:
            cone = orbit.representative
            if cone.cusp_rank() != 3:
                continue
            lattice = stratum_character_lattice(cone)
            m = lattice.dimension()
            if m != COMPACTIFICATION_DIMENSION - cone_dim:
                raise AssertionError("character lattice dimension mismatch")
            if m:
                rep = LinearRep(m, lattice.effective)
                dims = exterior_invariant_dims(rep)
                if dims != (1,) + (0,) * m:
                    raise InvariantNotConcentrated(
                        "stratum of %s has stabilizer invariants %r"
                        % (cone.name(), dims))
            entries[2 * m] = entries.get(2 * m, MhsVector.zero()) + MhsVector.tate(m)
            contributions.append(
                StratumContribution(cone.name(), cone_dim, m, 2 * m))
    table = CohomologyTable("beta3", tuple(entries.items()))
    return RankThreeResult(table, tuple(contributions), bound)


def rank_one_locus(registry: Registry = None) -> FibrationResult:
    """Kummer-type family over the abelian surface moduli."""
    registry = registry or load_registry()
    page = leray_assemble(registry.base_tables(), registry.fiber("kummer_fiber"),
                          label="beta1")
    expected = registry.pages.get("kummer_e2_expected")
    if expected is not None and expected.entries != page.entries:
        raise ExpectedPageMismatch(
            "assembled rank-1 page differs from the stored cross-check")
    limit, report = resolve(page)
    table = abutment(limit, "beta1")
    return FibrationResult(page, limit, table, report)


def product_symmetry_generators():
    """Base automorphisms of the square of an elliptic curve used here:
    swap the factors, negation, and the shear (x, y) -> (x + y, -y)."""
    return (((0, 1), (1, 0)), ((-1, 0), (0, -1)), ((1, 1), (0, -1)))


def product_symmetry_rep() -> LinearRep:
    return LinearRep(4, tuple(h1_pullback(b) for b in product_symmetry_generators()))


def product_factor_rep() -> LinearRep:
    """Swap of two distinct elliptic factors plus negation on each, on H^1."""
    swap = ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))
    neg_first = ((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    neg_second = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))
    return LinearRep(4, (swap, neg_first, neg_second))


def invariant_fiber_table(rep: LinearRep, label: str) -> CohomologyTable:
    """Invariant cohomology of an abelian-surface fiber under a finite group.

    Degree-k classes live in the k-th exterior power of H^1 and have pure
    weight k; surviving invariants here are classes of algebraic cycles,
    hence Tate of type Q(-k/2).  Odd-degree invariants would break that
    reading, so they are rejected.
    """
    dims = exterior_invariant_dims(rep)
    if any(mult and k % 2 for k, mult in enumerate(dims)):
        raise InvariantNotConcentrated(
            "odd-degree invariants %r do not form a Tate-type table" % (dims,))
    entries = {}
    for k, mult in enumerate(dims):
        if mult:
            vec = MhsVector.zero()
            for _ in range(mult):
                vec = vec + MhsVector.tate(k // 2)
            entries[k] = vec
    return CohomologyTable(label, tuple(entries.items()))


def _tensor_vectors(v: MhsVector, w: MhsVector) -> MhsVector:
    if v.f_count or w.f_count:
        raise ValueError("tensor product with the non-Tate atom is not supported")
    out = MhsVector.zero()
    for a in v.tates:
        for b in w.tates:
            out = out + MhsVector.tate(a + b)
    return out


def tensor_tables(a: CohomologyTable, b: CohomologyTable, label: str) -> CohomologyTable:
    entries = {}
    for d1, v in a.entries:
        for d2, w in b.entries:
            key = d1 + d2
            entries[key] = entries.get(key, MhsVector.zero()) + _tensor_vectors(v, w)
    return CohomologyTable(label, tuple(entries.items()))


def rank_two_locus(registry: Registry = None) -> RankTwoResult:
    """Rank-2 locus: C*-bundle piece plus the elliptic-product piece.

    The bundle piece is a fibration whose page carries one externally
    known differential rank; the product piece is the invariant fiber
    cohomology of the symmetrized elliptic square spread over the modular
    line.  The two merge through a degreewise split that must be justified
    by weight disjointness.
    """
    registry = registry or load_registry()
    stored = registry.page("cstar_bundle_e2")
    known = registry.known("cstar_bundle_d2")
    page = leray_assemble(registry.base_tables(), registry.fiber("cstar_fiber"),
                          label=stored.label, knowns=(known,))
    if page.entries != stored.entries:
        raise ExpectedPageMismatch(
            "assembled rank-2 bundle page differs from the stored cross-check")
    limit, report = resolve(page)
    torus_table = abutment(limit, "beta2_bundle")
    fiber_invariants = invariant_fiber_table(product_symmetry_rep(),
                                             "product_fiber_invariants")
    product_table = tensor_tables(fiber_invariants,
                                  registry.table("modular_line").table,
                                  "beta2_products")
    table = gysin_split(torus_table, product_table, "beta2")
    return RankTwoResult(page, torus_table, product_table, table, report)


def open_locus_table(registry: Registry = None) -> CohomologyTable:
    registry = registry or load_registry()
    return CohomologyTable("a3", registry.table("a3_open").table.entries)


def stratum_table(name: str, registry: Registry = None, bound: int = 2) -> CohomologyTable:
    if name == "a3":
        return open_locus_table(registry)
    if name == "beta1":
        return rank_one_locus(registry).table
    if name == "beta2":
        return rank_two_locus(registry).table
    if name == "beta3":
        return rank_three_locus(bound).table
    raise ValueError("unknown stratum %r; expected one of %s"
                     % (name, ", ".join(STRATUM_NAMES)))


def main_first_page(registry: Registry = None, bound: int = 2) -> SSPage:
    """First page of the stratification sequence for the whole space.

    Column p holds the rank-(3-p) locus: a class of degree d in that
    locus's table sits at position (p, d - p).  The abutment is the
    cohomology of the compact space, so purity of the limit is enforced.
    """
    registry = registry or load_registry()
    columns = (
        rank_three_locus(bound).table,
        rank_two_locus(registry).table,
        rank_one_locus(registry).table,
        registry.table("a3_open").table,
    )
    entries = {}
    for p, table in enumerate(columns):
        for d, vec in table.entries:
            pos = (p, d - p)
            entries[pos] = entries.get(pos, MhsVector.zero()) + vec
    page = SSPage(1, tuple(entries.items()), (),
                  abutment_smooth_proper=True,
                  abutment_dimension=COMPACTIFICATION_DIMENSION, label="main")
    expected = registry.pages.get("main_e1_expected")
    if expected is not None and expected.entries != page.entries:
        raise ExpectedPageMismatch(
            "assembled first page differs from the stored cross-check")
    return page


def compactification_betti(registry: Registry = None, bound: int = 2) -> BettiResult:
    """Betti numbers of the compactification from the resolved main page."""
    registry = registry or load_registry()
    page = main_first_page(registry, bound)
    limit, report = resolve(page)
    table = abutment(limit, "avor3")
    betti = table.betti(2 * COMPACTIFICATION_DIMENSION)
    return BettiResult(page, limit, table, betti, report)
