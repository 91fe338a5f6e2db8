"""Bookkeeping for the Hodge structures appearing in the computation.

Everything that occurs is a direct sum of one-dimensional Tate pieces Q(-n)
(weight 2n) plus copies of a single two-dimensional atom F: the non-split
extension of Q by Q(-3) showing up in middle degree of the open moduli
part.  F has weight multiset {0, 6}; its weight-0 piece is a sub-object, so
a rank-one map from a weight-0 class into F can cancel it and leave Q(-3),
while cancelling the weight-6 piece leaves Q.  F does not admit Tate twists
here (none are ever needed), and twisting it raises UnsupportedTwist.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass


class UnsupportedTwist(ValueError):
    """Tate twist requested for the extension atom F."""


@dataclass(frozen=True, order=True)
class MhsVector:
    """A finite multiset of Tate pieces plus copies of the atom F."""

    tates: tuple = ()
    f_count: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tates", tuple(sorted(int(n) for n in self.tates)))
        if self.f_count < 0:
            raise ValueError("negative multiplicity")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def tate(cls, n, mult=1):
        return cls(tates=(n,) * mult)

    @classmethod
    def atom_f(cls, mult=1):
        return cls(f_count=mult)

    def is_zero(self):
        return not self.tates and self.f_count == 0

    def dimension(self):
        return len(self.tates) + 2 * self.f_count

    def __add__(self, other):
        return MhsVector(self.tates + other.tates, self.f_count + other.f_count)

    def weights(self):
        """The weight multiset as a sorted tuple (F contributes 0 and 6)."""
        w = [2 * n for n in self.tates]
        w.extend([0, 6] * self.f_count)
        return tuple(sorted(w))

    def weight_counter(self):
        return Counter(self.weights())

    def tate_twist(self, n):
        """Tensor with Q(-n): each Q(-m) becomes Q(-m-n)."""
        if n != 0 and self.f_count:
            raise UnsupportedTwist("the extension atom F cannot be Tate twisted")
        return MhsVector(tuple(m + n for m in self.tates), self.f_count)

    def remove_weight(self, w):
        """Drop one dimension of weight w (a differential cancelled it).

        Removing a graded piece of an F atom leaves the complementary piece
        as a pure Tate class: weight 0 leaves Q(-3), weight 6 leaves Q.
        """
        if w % 2 == 0 and (w // 2) in self.tates:
            t = list(self.tates)
            t.remove(w // 2)
            return MhsVector(tuple(t), self.f_count)
        if self.f_count and w in (0, 6):
            left = 3 if w == 0 else 0
            return MhsVector(self.tates + (left,), self.f_count - 1)
        raise ValueError("no weight-%d piece to remove" % w)

    def to_classes(self):
        out = []
        for n, mult in sorted(Counter(self.tates).items()):
            out.append({"tate": n, "mult": mult})
        out.extend({"atom": "F"} for _ in range(self.f_count))
        return out

    @classmethod
    def from_classes(cls, classes):
        tates = []
        f_count = 0
        for c in classes:
            if "atom" in c:
                if c["atom"] != "F":
                    raise ValueError("unknown atom %r" % c["atom"])
                f_count += int(c.get("mult", 1))
            else:
                tates.extend([int(c["tate"])] * int(c.get("mult", 1)))
        return cls(tuple(tates), f_count)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for n, mult in sorted(Counter(self.tates).items()):
            base = "Q" if n == 0 else "Q(%d)" % (-n)
            parts.append(base if mult == 1 else "%s^%d" % (base, mult))
        if self.f_count:
            parts.append("F" if self.f_count == 1 else "F^%d" % self.f_count)
        return " + ".join(parts)


def weights(v: MhsVector):
    return v.weights()


@dataclass(frozen=True)
class CohomologyTable:
    """A graded collection of MhsVectors indexed by cohomological degree."""

    label: str
    entries: tuple = ()  # sorted tuple of (degree, MhsVector), zero entries dropped

    def __post_init__(self):
        cleaned = tuple(sorted((int(d), v) for d, v in self.entries if not v.is_zero()))
        if len({d for d, _ in cleaned}) != len(cleaned):
            raise ValueError("repeated degree")
        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_dict(cls, label, mapping):
        return cls(label, tuple(mapping.items()))

    def entry(self, degree):
        for d, v in self.entries:
            if d == degree:
                return v
        return MhsVector.zero()

    def degrees(self):
        return tuple(d for d, _ in self.entries)

    def as_dict(self):
        return dict(self.entries)

    def add(self, other, label=None):
        acc = {}
        for d, v in self.entries + other.entries:
            acc[d] = acc.get(d, MhsVector.zero()) + v
        return CohomologyTable(label or self.label, tuple(acc.items()))

    def tate_twist(self, n, label=None):
        return CohomologyTable(label or self.label,
                               tuple((d, v.tate_twist(n)) for d, v in self.entries))

    def shift_degrees(self, n, label=None):
        return CohomologyTable(label or self.label,
                               tuple((d + n, v) for d, v in self.entries))

    def total_dimension(self):
        return sum(v.dimension() for _, v in self.entries)

    def euler_characteristic(self):
        return sum((-1) ** d * v.dimension() for d, v in self.entries)

    def betti(self, max_degree):
        return tuple(self.entry(d).dimension() for d in range(max_degree + 1))

    def to_json_dict(self):
        return {
            "label": self.label,
            "entries": [{"degree": d, "classes": v.to_classes()} for d, v in self.entries],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_dict(cls, data):
        entries = tuple((e["degree"], MhsVector.from_classes(e["classes"]))
                        for e in data["entries"])
        return cls(data["label"], entries)


def poincare_dualize(table: CohomologyTable, dim: int, label=None) -> CohomologyTable:
    """H_c^k = dual(H^{2 dim - k}) tensor Q(-dim) for a smooth space.

    Tate pieces Q(-m) in degree d land as Q(-(dim - m)) in degree 2 dim - d;
    a negative resulting twist is an error.  The atom F is carried across
    unchanged (weight multiset {0, 6} reflected onto itself); this is only
    meaningful in middle degree of a 6-dimensional space, where it is used.
    """
    out = {}
    for d, v in table.entries:
        nd = 2 * dim - d
        if nd < 0:
            raise ValueError("degree %d exceeds twice the dimension" % d)
        tates = []
        for m in v.tates:
            if dim - m < 0:
                raise ValueError("dualizing Q(%d) in dimension %d gives a negative twist"
                                 % (-m, dim))
            tates.append(dim - m)
        out[nd] = out.get(nd, MhsVector.zero()) + MhsVector(tuple(tates), v.f_count)
    return CohomologyTable(label or table.label, tuple(out.items()))
