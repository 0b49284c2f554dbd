"""Shape space of triangles and its measures.

A triangle shape is the triple of side lengths normalized so their sum is
2.  Sorting ascending gives the moduli representative (one point per
similarity class); keeping labels gives a six-point orbit under relabeling,
except on the isosceles loci where the orbit degenerates.  Dropping the
largest coordinate projects the labeled space onto the open plane region
{(a, b) : a < 1, b < 1, a + b > 1}, a triangle of area 1/2.

Closed forms used as references:

* labeled (ab-plane) area: 1/2
* moduli space area (a <= b <= c slice of the same plane): 1/12
* obtuse part of the labeled region: 9/2 - 6 ln 2, i.e. three copies of
  the single-label region of area 3/2 - 2 ln 2 below the right-angle
  locus a = 2(1 - b)/(2 - b)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import permutations

import numpy as np

from .errors import GuardError
from .lattice import SimilarityKey

SUM_TOL = 1e-12


def _check_finite(value: float, what: str) -> float:
    v = float(value)
    if not math.isfinite(v):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return v


@dataclass(frozen=True, slots=True)
class ShapeTriple:
    """Moduli representative: sorted normalized side lengths, sum 2."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _check_finite(getattr(self, name), name))
        if not (0.0 < self.a <= self.b <= self.c):
            raise ValueError(f"sides must satisfy 0 < a <= b <= c, got {self}")
        if self.c >= 1.0:
            raise ValueError(f"largest side must be < 1 (degenerate shape), got c={self.c}")
        if abs(self.a + self.b + self.c - 2.0) > SUM_TOL:
            raise ValueError(f"sides must sum to 2 within {SUM_TOL}, got {self}")

    @property
    def triple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def distance_to(self, other: "ShapeTriple") -> float:
        return math.sqrt(
            (self.a - other.a) ** 2 + (self.b - other.b) ** 2 + (self.c - other.c) ** 2
        )


@dataclass(frozen=True, slots=True)
class LabeledTriple:
    """Labeled normalized side lengths: order carries the labeling."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = _check_finite(getattr(self, name), name)
            if not (0.0 < v < 1.0):
                raise ValueError(f"{name}={v} outside the open interval (0, 1)")
            object.__setattr__(self, name, v)
        if abs(self.a + self.b + self.c - 2.0) > SUM_TOL:
            raise ValueError(f"sides must sum to 2 within {SUM_TOL}, got {self}")

    def sorted_shape(self) -> ShapeTriple:
        s = sorted((self.a, self.b, self.c))
        return ShapeTriple(s[0], s[1], s[2])


@dataclass(frozen=True, slots=True)
class PlanePoint:
    """ab-plane projection of a labeled shape (largest coordinate dropped
    by the projection used here: we keep (a, b))."""

    a: float
    b: float

    def __post_init__(self):
        for name in ("a", "b"):
            v = _check_finite(getattr(self, name), name)
            if not (0.0 < v < 1.0):
                raise ValueError(f"{name}={v} outside (0, 1)")
            object.__setattr__(self, name, v)
        if self.a + self.b <= 1.0:
            raise ValueError(f"point ({self.a}, {self.b}) outside the region a + b > 1")


def shape_of(key: SimilarityKey) -> ShapeTriple:
    """Normalized side lengths of the similarity class: sides sqrt(p) <=
    sqrt(q) <= sqrt(r) scaled so they sum to 2."""
    sp, sq, sr = math.sqrt(key.p), math.sqrt(key.q), math.sqrt(key.r)
    half = (sp + sq + sr) / 2.0
    return ShapeTriple(sp / half, sq / half, sr / half)


def to_plane(t: LabeledTriple) -> PlanePoint:
    """Drop the third coordinate; injective on the sum-2 plane."""
    return PlanePoint(t.a, t.b)


def s3_orbit(s: ShapeTriple) -> set[LabeledTriple]:
    """All relabelings of s.  Cardinality 6 for scalene, 3 for isosceles,
    1 for equilateral; the set dedupes coincident permutations."""
    return {LabeledTriple(x, y, z) for x, y, z in permutations(s.triple)}


def measure_teich() -> float:
    """Lebesgue area of the labeled ab-plane region: the open triangle
    with corners (1,0), (0,1), (1,1)."""
    return 0.5


def measure_moduli() -> float:
    """Area of the moduli slice {a <= b, a + 2b <= 2, a + b > 1}: one sixth
    of the labeled region."""
    return 1.0 / 12.0


def obtuse_region_measure() -> float:
    """Area of the obtuse part of the labeled region: 9/2 - 6 ln 2.

    Three congruent single-label pieces of area 3/2 - 2 ln 2 each, one per
    choice of which labeled side is the longest.
    """
    return 4.5 - 6.0 * math.log(2.0)


def right_locus(b: float) -> float:
    """The a-coordinate of the right-angle locus at height b: shapes with
    c the hypotenuse satisfy a = 2(1 - b)/(2 - b)."""
    b = _check_finite(b, "b")
    if not (0.0 < b < 1.0):
        raise ValueError(f"b={b} outside (0, 1)")
    return 2.0 * (1.0 - b) / (2.0 - b)


class ModuliRegion(Enum):
    """Angle-class regions of shape space."""

    OBTUSE_ALL = "obtuse"
    ACUTE = "acute"
    FULL = "full"

    def contains_key(self, key: SimilarityKey) -> bool:
        if self is ModuliRegion.FULL:
            return True
        if self is ModuliRegion.OBTUSE_ALL:
            return key.r > key.p + key.q
        return key.r < key.p + key.q

    def contains_shape(self, s: ShapeTriple) -> bool:
        if self is ModuliRegion.FULL:
            return True
        cc = s.c * s.c
        ab = s.a * s.a + s.b * s.b
        if self is ModuliRegion.OBTUSE_ALL:
            return cc > ab
        return cc < ab

    def key_mask(self, p: np.ndarray, q: np.ndarray, r: np.ndarray) -> np.ndarray:
        """Vectorized contains_key over column arrays of reduced triples."""
        if self is ModuliRegion.FULL:
            return np.ones(len(p), dtype=bool)
        if self is ModuliRegion.OBTUSE_ALL:
            return r > p + q
        return r < p + q


def region_contains(region: ModuliRegion, key: SimilarityKey) -> bool:
    return region.contains_key(key)


def uniform_target(region: ModuliRegion) -> float:
    """Mass the uniform measure on the labeled region assigns to region."""
    if region is ModuliRegion.FULL:
        return 1.0
    obtuse = obtuse_region_measure() / measure_teich()
    if region is ModuliRegion.OBTUSE_ALL:
        return obtuse
    return 1.0 - obtuse


class WeightedShapeSet:
    """Immutable weighted set of similarity classes (key -> multiplicity).

    Backed by int64 column arrays sorted lexicographically by (p, q, r),
    so censuses with ~10^6 classes stay compact and export order is
    canonical.  Weights are positive integers.
    """

    __slots__ = ("_p", "_q", "_r", "_w", "_total", "_packed", "_shift")

    def __init__(self, entries):
        rows = []
        for key, weight in entries.items():
            if isinstance(key, SimilarityKey):
                trip = key.triple
            else:
                trip = SimilarityKey(*key).triple  # validates arbitrary tuples
            w = int(weight)
            if w <= 0:
                raise ValueError(f"weight for {trip} must be positive, got {weight}")
            rows.append((*trip, w))
        rows.sort()
        cols = np.array(rows, dtype=np.int64).reshape(len(rows), 4)
        self._init_columns(cols[:, 0], cols[:, 1], cols[:, 2], cols[:, 3], checked=True)

    @classmethod
    def from_columns(cls, p, q, r, w) -> "WeightedShapeSet":
        """Build from parallel int64 arrays sorted lexicographically by
        (p, q, r).  Re-validates the invariants vectorized; meant for the
        enumeration fast path."""
        self = object.__new__(cls)
        self._init_columns(
            np.ascontiguousarray(p, dtype=np.int64),
            np.ascontiguousarray(q, dtype=np.int64),
            np.ascontiguousarray(r, dtype=np.int64),
            np.ascontiguousarray(w, dtype=np.int64),
            checked=False,
        )
        return self

    def _init_columns(self, p, q, r, w, checked: bool):
        if not (len(p) == len(q) == len(r) == len(w)):
            raise ValueError("column lengths differ")
        if not checked and len(p):
            if np.any(w <= 0):
                raise ValueError("weights must be positive")
            if np.any((p < 1) | (p > q) | (q > r)):
                raise ValueError("triples must be sorted with p >= 1")
            d = r - p - q
            if np.any((d >= 0) & (d * d >= 4 * p * q)):
                raise ValueError("some triple fails the strict triangle test")
            if np.any(np.gcd(np.gcd(p, q), r) != 1):
                raise ValueError("some triple is not gcd-reduced")
            order = np.lexsort((r, q, p))
            if not np.array_equal(order, np.arange(len(p))):
                raise ValueError("columns must be sorted lexicographically by (p, q, r)")
            same = (p[1:] == p[:-1]) & (q[1:] == q[:-1]) & (r[1:] == r[:-1])
            if np.any(same):
                raise ValueError("duplicate keys in columns")
        for arr, name in ((p, "_p"), (q, "_q"), (r, "_r"), (w, "_w")):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "_total", int(w.sum()))
        object.__setattr__(self, "_packed", None)
        shift = int(r[-1]).bit_length() if len(r) else 1
        object.__setattr__(self, "_shift", shift)

    @property
    def total_weight(self) -> int:
        return self._total

    def columns(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Read-only (p, q, r, weight) columns sorted by (p, q, r)."""
        return (self._p, self._q, self._r, self._w)

    def __len__(self) -> int:
        return len(self._w)

    def _pack(self) -> np.ndarray:
        if self._packed is None:
            s = self._shift
            if 3 * s <= 63:
                packed = (self._p << (2 * s)) | (self._q << s) | self._r
            else:  # keys too wide for one word; packed lookup disabled
                packed = None
            object.__setattr__(self, "_packed", packed)
        return self._packed

    def _row_of(self, key) -> int:
        trip = key.triple if isinstance(key, SimilarityKey) else tuple(key)
        if len(self) == 0:
            return -1
        packed = self._pack()
        if packed is not None:
            s = self._shift
            if any(v < 0 or v.bit_length() > s for v in trip):
                return -1
            target = (trip[0] << (2 * s)) | (trip[1] << s) | trip[2]
            i = int(np.searchsorted(packed, target))
            if i < len(packed) and packed[i] == target:
                return i
            return -1
        lo = int(np.searchsorted(self._p, trip[0], side="left"))
        hi = int(np.searchsorted(self._p, trip[0], side="right"))
        for i in range(lo, hi):
            if self._q[i] == trip[1] and self._r[i] == trip[2]:
                return i
        return -1

    def weight_of(self, key) -> int:
        """Multiplicity of key; 0 when absent."""
        i = self._row_of(key)
        return int(self._w[i]) if i >= 0 else 0

    def __contains__(self, key) -> bool:
        return self._row_of(key) >= 0

    def keys(self):
        for i in range(len(self._w)):
            yield SimilarityKey(int(self._p[i]), int(self._q[i]), int(self._r[i]))

    def items(self):
        for i in range(len(self._w)):
            yield (
                SimilarityKey(int(self._p[i]), int(self._q[i]), int(self._r[i])),
                int(self._w[i]),
            )

    def as_dict(self) -> dict[SimilarityKey, int]:
        return dict(self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedShapeSet):
            return NotImplemented
        return (
            len(self) == len(other)
            and np.array_equal(self._p, other._p)
            and np.array_equal(self._q, other._q)
            and np.array_equal(self._r, other._r)
            and np.array_equal(self._w, other._w)
        )

    def __repr__(self) -> str:
        return f"WeightedShapeSet({len(self)} classes, total weight {self._total})"


def dirac_ratio(s: WeightedShapeSet, region: ModuliRegion) -> float:
    """Weighted fraction of s lying in region."""
    if s.total_weight <= 0 or len(s) == 0:
        raise GuardError("dirac_ratio of an empty weighted set")
    p, q, r, w = s.columns()
    mask = region.key_mask(p, q, r)
    return int(w[mask].sum()) / s.total_weight
