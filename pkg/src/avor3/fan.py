"""Cones of the genus-3 second Voronoi fan and their GL(3,Z) symmetries.

The basic 6-dimensional cone is spanned by the six rank-one forms
x1^2, x2^2, x3^2, (x2-x3)^2, (x1-x3)^2, (x1-x2)^2 (named a1..a3, b1..b3);
its faces are exactly the subsets of these generators.  Two faces are
equivalent when some g in GL(3,Z) maps one generator set onto the other
under q |-> g^-T q g^-1, i.e. when the primitive generator lines match up
to sign under v |-> g^-T v.

When a face's generator vectors span R^3 any witness is determined by the
images of an independent triple, so the search over signed line assignments
is complete and inequivalence is provable.  Otherwise we fall back to an
exhaustive scan of the unimodular matrices with entries in [-bound, bound];
failure there is only inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from . import linalg
from .forms import (
    Character,
    GENERATOR_NAMES,
    GENERATORS,
    GroupElement,
    SymForm,
    act_on_form,
    dual_action_on_character,
    rank1_vector,
)


class SpanDeficient(ValueError):
    """The operation needs generator vectors spanning R^3."""


class InconclusiveAtBound(RuntimeError):
    """A bounded witness search could neither match nor separate two faces."""


_FORM_NAMES = {form: name for name, form in GENERATORS.items()}


@dataclass(frozen=True)
class Cone:
    """A face of the fan, given by a tuple of independent rank-one forms."""

    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        vectors = tuple(rank1_vector(q) for q in gens)
        if len(set(gens)) != len(gens):
            raise ValueError("repeated generator")
        if gens and linalg.rank([q.coeffs() for q in gens]) != len(gens):
            raise ValueError("generators are not linearly independent")
        object.__setattr__(self, "_vectors", vectors)

    @classmethod
    def from_names(cls, text):
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        names = [t.strip() for t in text.split(",")]
        for n in names:
            if n not in GENERATORS:
                raise ValueError("unknown generator %r (use a1..a3, b1..b3)" % n)
        ordered = sorted(set(names), key=GENERATOR_NAMES.index)
        if len(ordered) != len(names):
            raise ValueError("repeated generator in %r" % text)
        return cls(tuple(GENERATORS[n] for n in ordered))

    def name(self):
        if not self.generators:
            return "0"
        if all(q in _FORM_NAMES for q in self.generators):
            return ",".join(_FORM_NAMES[q] for q in self.generators)
        return "<cone dim %d>" % self.dim()

    def dim(self):
        return len(self.generators)

    def vectors(self):
        return self._vectors

    def cusp_rank(self):
        total = SymForm()
        for q in self.generators:
            total = total + q
        return total.rank()

    def span_rank(self):
        if not self.generators:
            return 0
        return linalg.rank([list(v) for v in self._vectors])

    def faces(self, dim):
        return [Cone(sub) for sub in combinations(self.generators, dim)]


SIGMA6 = Cone(tuple(GENERATORS[n] for n in GENERATOR_NAMES))


@dataclass(frozen=True)
class EquivalenceResult:
    witness: object
    verdict: str  # "equivalent" | "inequivalent" | "inconclusive"
    detail: str

    def __bool__(self):
        return self.verdict == "equivalent"


_UNIMODULAR_CACHE = {}


def unimodular_matrices(bound):
    """All of GL(3,Z) with entries in [-bound, bound], as an (n, 9) int array.

    The 3x3 determinant is linear in the first row once the complementary
    minors are fixed, so the scan computes the three minors over all tails
    (rows 2 and 3) once and sweeps the 2*bound+1 choices per first-row entry.
    """
    if bound in _UNIMODULAR_CACHE:
        return _UNIMODULAR_CACHE[bound]
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    tail = np.stack(np.meshgrid(*([vals] * 6), indexing="ij"), axis=-1).reshape(-1, 6)
    d, e, f, g, h, i = (tail[:, k] for k in range(6))
    m1 = e * i - f * h
    m2 = d * i - f * g
    m3 = d * h - e * g
    chunks = []
    for a in vals:
        for b in vals:
            for c in vals:
                dets = a * m1 - b * m2 + c * m3
                mask = np.abs(dets) == 1
                if mask.any():
                    sel = tail[mask]
                    head = np.empty((sel.shape[0], 3), dtype=np.int64)
                    head[:, 0], head[:, 1], head[:, 2] = a, b, c
                    chunks.append(np.hstack([head, sel]))
    out = np.vstack(chunks)
    _UNIMODULAR_CACHE[bound] = out
    return out


def _line_maps_complete(source, target):
    """All h in GL(3,Z) mapping the source line set onto the target line set.

    Complete only when the source vectors span R^3: h is then pinned by the
    images of an independent triple, and every signed assignment is tried.
    """
    idx = linalg.independent_triple([list(v) for v in source])
    if idx is None:
        raise SpanDeficient("generator vectors do not span R^3")
    vmat = [[Fraction(source[i][r]) for i in idx] for r in range(3)]
    vinv = linalg.inverse(vmat)
    found = []
    tset = set(target)
    for triple in permutations(range(len(target)), 3):
        for signs in product((1, -1), repeat=3):
            wmat = [[signs[c] * target[triple[c]][r] for c in range(3)] for r in range(3)]
            hq = linalg.mat_mul(wmat, vinv)
            if any(x.denominator != 1 for row in hq for x in row):
                continue
            h = [[int(x) for x in row] for row in hq]
            if abs(linalg.det(h)) != 1:
                continue
            images = set()
            ok = True
            for v in source:
                w = tuple(sum(h[r][k] * v[k] for k in range(3)) for r in range(3))
                w = w if next(x for x in w if x) > 0 else tuple(-x for x in w)
                if w not in tset:
                    ok = False
                    break
                images.add(w)
            if ok and len(images) == len(tset):
                if h not in found:
                    found.append(h)
    return found


def _line_maps_bounded(source, target, bound):
    """Unimodular h with entries in [-bound, bound] mapping source lines onto target lines."""
    cands = unimodular_matrices(bound).reshape(-1, 3, 3)
    if source:
        vmat = np.array(source, dtype=np.int64).T
        images = cands @ vmat  # (n, 3, k)
        ok = np.ones(len(cands), dtype=bool)
        tarr = [np.array(t, dtype=np.int64) for t in target]
        for col in range(images.shape[2]):
            w = images[:, :, col]
            col_ok = np.zeros(len(cands), dtype=bool)
            for t in tarr:
                col_ok |= np.all(w == t, axis=1) | np.all(w == -t, axis=1)
            ok &= col_ok
        cands = cands[ok]
    tset = set(target)
    found = []
    for harr in cands:
        h = [[int(x) for x in row] for row in harr]
        images = set()
        for v in source:
            w = tuple(sum(h[r][k] * v[k] for k in range(3)) for r in range(3))
            w = w if next(x for x in w if x) > 0 else tuple(-x for x in w)
            images.add(w)
        if images != tset:
            continue
        found.append(h)
        break  # one witness is enough for equivalence
    return found


def _witness_from_line_map(h, c1, c2):
    g = GroupElement(tuple(tuple(row) for row in h)).transpose().inverse()
    assert {act_on_form(g, q) for q in c1.generators} == set(c2.generators), \
        "witness failed re-verification"
    return g


def equivalent(c1: Cone, c2: Cone, bound: int = 2) -> EquivalenceResult:
    """Search for g in GL(3,Z) with g . c1 = c2; absence may be a proof.

    The verdict is "inequivalent" when invariants separate the cones or when
    the complete spanning-triple search is exhausted, and "inconclusive" when
    only the bounded fallback applies and finds nothing.
    """
    invariants = (
        ("dimension", Cone.dim),
        ("cusp rank", Cone.cusp_rank),
        ("vector span rank", Cone.span_rank),
    )
    for label, fn in invariants:
        x, y = fn(c1), fn(c2)
        if x != y:
            return EquivalenceResult(None, "inequivalent", "%s differs: %d vs %d" % (label, x, y))
    if c1.dim() == 0:
        return EquivalenceResult(GroupElement.identity(), "equivalent", "zero cone")
    if c1.span_rank() == 3:
        maps = _line_maps_complete(c1.vectors(), c2.vectors())
        if maps:
            g = _witness_from_line_map(maps[0], c1, c2)
            return EquivalenceResult(g, "equivalent", "spanning-triple search")
        return EquivalenceResult(None, "inequivalent",
                                 "no line correspondence exists (complete search)")
    maps = _line_maps_bounded(c1.vectors(), c2.vectors(), bound)
    if maps:
        g = _witness_from_line_map(maps[0], c1, c2)
        return EquivalenceResult(g, "equivalent", "bounded search (bound %d)" % bound)
    return EquivalenceResult(None, "inconclusive",
                             "no witness with entries within %d" % bound)


@dataclass(frozen=True)
class OrbitClass:
    representative: Cone
    size: int
    cusp_rank: int


@dataclass(frozen=True)
class OrbitCensus:
    dimension: int
    bound: int
    orbits: tuple

    def counts(self):
        return tuple(o.size for o in self.orbits)


@lru_cache(maxsize=None)
def classify_orbits(dim, bound=2, ambient=None) -> OrbitCensus:
    """Group the dimension-`dim` faces of the basic cone into GL(3,Z) orbits.

    Faces are scanned in subset order, so each orbit's representative is its
    first (lexicographically least) face.  Raises InconclusiveAtBound if a
    bounded fallback search can neither match nor separate a pair.
    """
    ambient = SIGMA6 if ambient is None else ambient
    classes = []  # [representative, member count]
    for face in ambient.faces(dim):
        for cls in classes:
            res = equivalent(face, cls[0], bound)
            if res.verdict == "equivalent":
                cls[1] += 1
                break
            if res.verdict == "inconclusive":
                raise InconclusiveAtBound(
                    "faces %s and %s: %s" % (face.name(), cls[0].name(), res.detail))
        else:
            classes.append([face, 1])
    orbits = tuple(OrbitClass(rep, size, rep.cusp_rank()) for rep, size in classes)
    return OrbitCensus(dim, bound, orbits)


@dataclass(frozen=True)
class StabilizerGroup:
    """The full GL(3,Z) setwise stabilizer of a cone (a finite matrix group)."""

    cone: Cone
    elements: tuple

    def order(self):
        return len(self.elements)


@lru_cache(maxsize=None)
def stabilizer(c: Cone) -> StabilizerGroup:
    """All g in GL(3,Z) with g . c = c; needs the generator vectors to span R^3."""
    if c.span_rank() != 3:
        raise SpanDeficient(
            "stabilizer of %s is infinite: generator vectors span rank %d < 3"
            % (c.name(), c.span_rank()))
    maps = _line_maps_complete(c.vectors(), c.vectors())
    elements = sorted(
        (GroupElement(tuple(tuple(row) for row in h)).transpose().inverse() for h in maps),
        key=lambda g: g.rows)
    group = StabilizerGroup(c, tuple(elements))
    eset = set(group.elements)
    for g in group.elements:
        if g.inverse() not in eset:
            raise AssertionError("stabilizer not closed under inverse")
    return group


@dataclass(frozen=True)
class CharacterLattice:
    """Characters of the big torus that restrict to a stratum's torus factor.

    `basis` spans the sublattice of characters pairing to zero with every
    cone generator; `effective` is the (deduplicated) image of the cone's
    stabilizer acting on that sublattice, written in the basis by columns.
    """

    cone: Cone
    basis: tuple
    effective: tuple
    stabilizer_order: int

    def dimension(self):
        return len(self.basis)

    def effective_order(self):
        return len(self.effective)


@lru_cache(maxsize=None)
def stratum_character_lattice(c: Cone) -> CharacterLattice:
    stab = stabilizer(c)
    rows = [q.coeffs() for q in c.generators]
    basis_rows = linalg.int_kernel(rows) if rows else linalg.identity(6)
    basis = tuple(Character.from_exponents(r) for r in basis_rows)
    d = len(basis)
    seen = set()
    effective = []
    for g in stab.elements:
        cols = []
        for f in basis:
            img = dual_action_on_character(g, f)
            coeffs = linalg.solve_in_span(basis_rows, list(img.exponents()))
            if coeffs is None or any(x.denominator != 1 for x in coeffs):
                raise AssertionError("stabilizer does not preserve the character sublattice")
            cols.append([int(x) for x in coeffs])
        mat = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
        if mat not in seen:
            seen.add(mat)
            effective.append(mat)
    return CharacterLattice(c, basis, tuple(sorted(effective)), stab.order())


def torus_coordinates():
    """The six characters dual to (a1, a2, a3, b1, b2, b3) under the pairing."""
    m = [list(GENERATORS[n].coeffs()) for n in GENERATOR_NAMES]
    inv = linalg.inverse(m)
    cols = linalg.transpose(linalg.mat_int(inv))
    return tuple(Character.from_exponents(col) for col in cols)
