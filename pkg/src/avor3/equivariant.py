"""Finite matrix groups over Q and their exterior-power invariants.

Invariant dimensions of wedge powers are computed two independent ways:
a Molien-style average of the coefficients of det(I + t g) over the group,
and a brute-force average of the induced matrices on each wedge power
followed by an exact rank computation.  The first is the production path,
the second is the oracle used to cross-check it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import linalg


class NotClosedWithinCap(RuntimeError):
    """Generating more group elements than the cap allows."""


def _freeze(m):
    return tuple(tuple(Fraction(x) for x in row) for row in m)


@dataclass(frozen=True)
class LinearRep:
    """A finite subgroup of GL(n,Q) given by generating matrices.

    `signs` optionally assigns each generator a value of a multiplicative
    order-two character; invariants are then taken with that twist.
    """

    dimension: int
    generators: tuple
    signs: tuple = None

    def __post_init__(self):
        gens = tuple(_freeze(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.dimension or any(len(row) != self.dimension for row in g):
                raise ValueError("generator shape does not match dimension")
        if self.signs is not None:
            signs = tuple(int(s) for s in self.signs)
            if len(signs) != len(gens) or any(s not in (1, -1) for s in signs):
                raise ValueError("signs must be one value in {1, -1} per generator")
            object.__setattr__(self, "signs", signs)


def _mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def group_closure(rep: LinearRep, cap: int = 10000):
    """All elements of the generated group as (matrix, character value) pairs.

    Breadth-first products of generators; raises NotClosedWithinCap once more
    than `cap` distinct elements appear, and ValueError if the declared sign
    character is not constant on each element.
    """
    n = rep.dimension
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    signs = rep.signs or tuple(1 for _ in rep.generators)
    chi = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g, s in zip(rep.generators, signs):
                prod = _mat_mul(m, g)
                val = chi[m] * s
                if prod in chi:
                    if chi[prod] != val:
                        raise ValueError("sign character is not well-defined on the group")
                    continue
                chi[prod] = val
                nxt.append(prod)
                if len(chi) > cap:
                    raise NotClosedWithinCap("more than %d elements generated" % cap)
        frontier = nxt
    return sorted(chi.items())


def element_order(m, cap: int = 10000):
    """Multiplicative order of a matrix of finite order."""
    n = len(m)
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    m = _freeze(m)
    p, k = m, 1
    while p != ident:
        p = _mat_mul(p, m)
        k += 1
        if k > cap:
            raise NotClosedWithinCap("element order exceeds %d" % cap)
    return k


def order_histogram(mats, cap: int = 10000):
    """{element order: count} over an iterable of matrices."""
    hist = Counter(element_order(m, cap) for m in mats)
    return dict(sorted(hist.items()))


def exterior_invariant_dims(rep: LinearRep, cap: int = 10000):
    """(dim (Lambda^k V)^G)_{k=0..n} via the group average of det(I + t g).

    With a sign character the result is the dimension of the isotypic part
    for that character in each wedge power.
    """
    group = group_closure(rep, cap)
    n = rep.dimension
    total = [Fraction(0)] * (n + 1)
    for mat, s in group:
        coeffs = linalg.char_poly_elementary([list(row) for row in mat])
        for k in range(n + 1):
            total[k] += s * coeffs[k]
    out = []
    for k in range(n + 1):
        val = total[k] / len(group)
        if val.denominator != 1 or val < 0:
            raise AssertionError("group average is not a nonnegative integer")
        out.append(int(val))
    return tuple(out)


def fixed_subspace_dims_bruteforce(rep: LinearRep, cap: int = 10000):
    """Oracle for exterior_invariant_dims: explicit projectors on wedge powers.

    Builds the induced matrix of every group element on each wedge power,
    averages them (with the sign twist), and takes the exact rank of the
    resulting projector.  Only sensible for small dimensions.
    """
    if rep.dimension > 6:
        raise ValueError("brute-force oracle restricted to dimension <= 6")
    group = group_closure(rep, cap)
    n = rep.dimension
    out = []
    from math import comb
    for k in range(n + 1):
        size = comb(n, k)
        acc = [[Fraction(0)] * size for _ in range(size)]
        for mat, s in group:
            wedge = linalg.exterior_power_matrix([list(row) for row in mat], k)
            for i in range(size):
                row = wedge[i]
                for j in range(size):
                    acc[i][j] += s * row[j]
        scale = Fraction(1, len(group))
        proj = [[x * scale for x in row] for row in acc]
        out.append(linalg.rank(proj))
    return tuple(out)


def h1_pullback(b):
    """Pullback on H^1 of a product of two elliptic curves.

    `b` is a 2x2 integer matrix describing an endomorphism of E x E by
    integer combinations of the two factors; on H^1 = Q^2 (+) Q^2 it induces
    the block matrix b^T tensor I_2.
    """
    out = [[0] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            out[2 * i][2 * j] = b[j][i]
            out[2 * i + 1][2 * j + 1] = b[j][i]
    return tuple(tuple(row) for row in out)
