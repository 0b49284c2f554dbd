"""Census of lattice triangles in [-n, n]^2 by similarity class.

The weighted census is translation-reduced.  A triangle with vertices
A, B, C anchored at A is the ordered pair of edge vectors (u, v) =
(B - A, C - A); the number of integer translates of its bounding box that
fit inside the (2n+1) x (2n+1) grid is

    (2n + 1 - w) (2n + 1 - h),   w = max(0, ux, vx) - min(0, ux, vx),

and likewise h, provided w, h <= 2n.  Summing that multiplicity over all
ordered pairs with nonzero cross product counts every (triangle, position)
combination exactly six times: each unordered triangle is anchored at any
of its 3 vertices with 2 orderings of the remaining two, and the six
resulting pairs are pairwise distinct because u, v, u - v are nonzero and
u != v.  The accumulated totals are therefore divided by 6 at the end, and
the division is checked to be exact; a remainder fails the run loudly.

Components of the pairs live in [-2n, 2n]^2, so squared sides are at most
8 n^2 and the per-pair arithmetic fits comfortably in int64.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import GuardError
from .lattice import SimilarityKey, reduced_triple
from .moduli import WeightedShapeSet
from .parallel import map_ordered, worker_count

MAX_N = 512
NAIVE_POINT_GUARD = 400  # enumerate_naive is cubic in the point count

_ROW_TARGET = 1 << 20  # ordered pairs per vectorized batch
_COMPACT_AT = 1 << 23  # merge partial results once this many rows pile up


@dataclass(frozen=True, slots=True)
class BoundingBox:
    """Width and height of the axis-aligned bounding box of an anchored
    triangle {0, u, v}."""

    w: int
    h: int

    def __post_init__(self):
        if self.w < 0 or self.h < 0:
            raise ValueError(f"bounding box must be non-negative, got {self}")
        if self.w == 0 and self.h == 0:
            raise ValueError("bounding box of a non-degenerate triangle cannot be 0x0")


@dataclass(frozen=True, slots=True)
class TranslationClass:
    """Triangle modulo translation: ordered edge vectors (u, v) from the
    anchor vertex."""

    u: tuple[int, int]
    v: tuple[int, int]

    def __post_init__(self):
        ux, uy = self.u
        vx, vy = self.v
        if ux * vy - uy * vx == 0:
            raise ValueError(f"edge vectors {self.u}, {self.v} span no area")

    def bounding_box(self) -> BoundingBox:
        ux, uy = self.u
        vx, vy = self.v
        return BoundingBox(
            max(0, ux, vx) - min(0, ux, vx),
            max(0, uy, vy) - min(0, uy, vy),
        )

    def squared_sides(self) -> tuple[int, int, int]:
        ux, uy = self.u
        vx, vy = self.v
        p0 = ux * ux + uy * uy
        q0 = vx * vx + vy * vy
        r0 = (vx - ux) ** 2 + (vy - uy) ** 2
        return tuple(sorted((p0, q0, r0)))

    def key(self) -> SimilarityKey:
        return SimilarityKey(*reduced_triple(*self.squared_sides()))


def translation_multiplicity(box: BoundingBox, n: int) -> int:
    """Number of translates of a w x h bounding box inside [-n, n]^2."""
    _check_n(n)
    span = 2 * n
    if box.w > span or box.h > span:
        return 0
    return (span + 1 - box.w) * (span + 1 - box.h)


def _check_n(n) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise GuardError(f"n must be an integer, got {n!r}")
    n = int(n)
    if not (1 <= n <= MAX_N):
        raise GuardError(f"n must be in [1, {MAX_N}], got {n}")
    return n


def _batch_totals(n: int, lo: int, hi: int, reverse: bool = False):
    """Accumulate translate multiplicities over ordered pairs whose u-index
    lies in [lo, hi).  Returns (packed keys, int64 totals) with packed keys
    sorted ascending; packing is (p << 2s) | (q << s) | r which preserves
    lexicographic order of the reduced triples."""
    span = 2 * n
    side = 2 * span + 1
    shift = _pack_shift(n)

    c = np.arange(-span, span + 1, dtype=np.int64)
    vx = np.repeat(c, side)
    vy = np.tile(c, side)
    idx = np.arange(lo, hi, dtype=np.int64)
    if reverse:
        idx = idx[::-1]
        vx = vx[::-1].copy()
        vy = vy[::-1].copy()
    ux = (idx // side - span)[:, None]
    uy = (idx % side - span)[:, None]

    valid = (ux * vy - uy * vx) != 0
    wspan = np.maximum(np.maximum(ux, vx), 0) - np.minimum(np.minimum(ux, vx), 0)
    valid &= wspan <= span
    hspan = np.maximum(np.maximum(uy, vy), 0) - np.minimum(np.minimum(uy, vy), 0)
    valid &= hspan <= span

    mult = ((span + 1 - wspan) * (span + 1 - hspan))[valid]
    del wspan, hspan
    UX = np.broadcast_to(ux, valid.shape)[valid]
    UY = np.broadcast_to(uy, valid.shape)[valid]
    VX = np.broadcast_to(vx, valid.shape)[valid]
    VY = np.broadcast_to(vy, valid.shape)[valid]
    del valid

    p0 = UX * UX + UY * UY
    q0 = VX * VX + VY * VY
    dx = VX - UX
    dy = VY - UY
    r0 = dx * dx + dy * dy
    lo3 = np.minimum(np.minimum(p0, q0), r0)
    hi3 = np.maximum(np.maximum(p0, q0), r0)
    mid = p0 + q0 + r0 - lo3 - hi3
    g = np.gcd(np.gcd(lo3, mid), hi3)
    lo3 //= g
    mid //= g
    hi3 //= g

    packed = (lo3 << (2 * shift)) | (mid << shift) | hi3
    keys, inverse = np.unique(packed, return_inverse=True)
    totals = np.zeros(len(keys), dtype=np.int64)
    np.add.at(totals, inverse, mult)  # exact int64 accumulation
    return keys, totals


def _pack_shift(n: int) -> int:
    shift = (8 * n * n).bit_length()
    if 3 * shift > 63:
        # n = 512 alone overflows the single-word packing; keys then carry
        # 22-bit fields and need 66 bits.  Pack (p, q) and r separately.
        return -1
    return shift


def _merge_parts(parts):
    keys = np.concatenate([k for k, _ in parts])
    weights = np.concatenate([w for _, w in parts])
    uniq, inverse = np.unique(keys, return_inverse=True)
    totals = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(totals, inverse, weights)
    return uniq, totals


def _ordered_pair_totals(n: int, reverse: bool = False):
    """Raw per-key multiplicity sums over all ordered pairs, before the
    division by 6.  Returns (p, q, r, totals) columns sorted by (p, q, r)."""
    n = _check_n(n)
    shift = _pack_shift(n)
    if shift < 0:
        return _ordered_pair_totals_wide(n, reverse)
    side = 4 * n + 1
    u_total = side * side
    batch = max(1, _ROW_TARGET // u_total)
    ranges = [
        (n, b, min(b + batch, u_total), reverse) for b in range(0, u_total, batch)
    ]
    if reverse:
        ranges = ranges[::-1]

    workers = worker_count()
    parts: list = []
    rows = 0
    for part in map_ordered(_batch_totals, ranges, workers):
        parts.append(part)
        rows += len(part[0])
        if rows > _COMPACT_AT:
            parts = [_merge_parts(parts)]
            rows = len(parts[0][0])
    keys, totals = _merge_parts(parts) if len(parts) != 1 else parts[0]

    mask = np.int64((1 << shift) - 1)
    p = keys >> (2 * shift)
    q = (keys >> shift) & mask
    r = keys & mask
    return p, q, r, totals


def _ordered_pair_totals_wide(n: int, reverse: bool):
    # Fallback for keys wider than a 63-bit pack: unique over 2-D rows.
    # Only n = 512 reaches this; kept correct rather than fast.
    span = 2 * n
    side = 2 * span + 1
    u_total = side * side
    batch = max(1, _ROW_TARGET // u_total)
    rows_parts = []
    weight_parts = []
    order = range(0, u_total, batch)
    for b in order if not reverse else reversed(list(order)):
        keys, totals = _batch_totals_wide(n, b, min(b + batch, u_total), reverse)
        rows_parts.append(keys)
        weight_parts.append(totals)
    allrows = np.concatenate(rows_parts)
    allweights = np.concatenate(weight_parts)
    uniq, inverse = np.unique(allrows, axis=0, return_inverse=True)
    totals = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(totals, np.asarray(inverse).ravel(), allweights)
    return uniq[:, 0], uniq[:, 1], uniq[:, 2], totals


def _batch_totals_wide(n: int, lo: int, hi: int, reverse: bool):
    # Same pair scan as _batch_totals but deduplicating on (p, q, r) rows.
    span = 2 * n
    side = 2 * span + 1
    c = np.arange(-span, span + 1, dtype=np.int64)
    vx = np.repeat(c, side)
    vy = np.tile(c, side)
    idx = np.arange(lo, hi, dtype=np.int64)
    if reverse:
        idx = idx[::-1]
        vx = vx[::-1].copy()
        vy = vy[::-1].copy()
    ux = (idx // side - span)[:, None]
    uy = (idx % side - span)[:, None]
    valid = (ux * vy - uy * vx) != 0
    wspan = np.maximum(np.maximum(ux, vx), 0) - np.minimum(np.minimum(ux, vx), 0)
    valid &= wspan <= span
    hspan = np.maximum(np.maximum(uy, vy), 0) - np.minimum(np.minimum(uy, vy), 0)
    valid &= hspan <= span
    mult = ((span + 1 - wspan) * (span + 1 - hspan))[valid]
    UX = np.broadcast_to(ux, valid.shape)[valid]
    UY = np.broadcast_to(uy, valid.shape)[valid]
    VX = np.broadcast_to(vx, valid.shape)[valid]
    VY = np.broadcast_to(vy, valid.shape)[valid]
    p0 = UX * UX + UY * UY
    q0 = VX * VX + VY * VY
    r0 = (VX - UX) ** 2 + (VY - UY) ** 2
    lo3 = np.minimum(np.minimum(p0, q0), r0)
    hi3 = np.maximum(np.maximum(p0, q0), r0)
    mid = p0 + q0 + r0 - lo3 - hi3
    g = np.gcd(np.gcd(lo3, mid), hi3)
    rows = np.stack([lo3 // g, mid // g, hi3 // g], axis=1)
    uniq, inverse = np.unique(rows, axis=0, return_inverse=True)
    totals = np.zeros(len(uniq), dtype=np.int64)
    np.add.at(totals, np.asarray(inverse).ravel(), mult)
    return uniq, totals


def enumerate_weighted(n: int, *, _reverse: bool = False) -> WeightedShapeSet:
    """Weighted census of all lattice triangles with vertices in [-n, n]^2,
    keyed by similarity class.

    The _reverse knob re-runs the scan with the iteration order of u and v
    reversed; the result must be identical and the equality is exercised by
    the test suite, not here.
    """
    p, q, r, totals = _ordered_pair_totals(n, reverse=_reverse)
    bad = totals % 6
    if np.any(bad):
        raise RuntimeError(
            f"ordered-pair totals not divisible by 6 for {int(np.count_nonzero(bad))} "
            "keys; the 6-fold anchor/ordering symmetry was violated"
        )
    return WeightedShapeSet.from_columns(p, q, r, totals // 6)


def enumerate_naive(box: tuple[int, int, int, int]) -> WeightedShapeSet:
    """Reference census over an explicit rectangle of lattice points.

    box is (xmin, xmax, ymin, ymax), bounds inclusive.  Iterates all
    3-subsets of the points, so the rectangle is capped at
    NAIVE_POINT_GUARD points.  This is the oracle the fast census is
    checked against.
    """
    try:
        xmin, xmax, ymin, ymax = (int(v) for v in box)
    except (TypeError, ValueError):
        raise GuardError(f"box must be four integers (xmin, xmax, ymin, ymax), got {box!r}")
    if xmin > xmax or ymin > ymax:
        raise GuardError(f"empty box {box!r}")
    count = (xmax - xmin + 1) * (ymax - ymin + 1)
    if count > NAIVE_POINT_GUARD:
        raise GuardError(
            f"box has {count} points; enumerate_naive is capped at {NAIVE_POINT_GUARD}"
        )
    pts = [(x, y) for x in range(xmin, xmax + 1) for y in range(ymin, ymax + 1)]
    counts: dict[tuple[int, int, int], int] = {}
    for (ax, ay), (bx, by), (cx, cy) in combinations(pts, 3):
        ubx = bx - ax
        uby = by - ay
        ucx = cx - ax
        ucy = cy - ay
        if ubx * ucy - uby * ucx == 0:
            continue
        p0 = ubx * ubx + uby * uby
        q0 = ucx * ucx + ucy * ucy
        r0 = (cx - bx) ** 2 + (cy - by) ** 2
        key = reduced_triple(p0, q0, r0)
        counts[key] = counts.get(key, 0) + 1
    return WeightedShapeSet(counts)


def distinct_classes(n: int) -> set[SimilarityKey]:
    """The set of similarity classes realized in [-n, n]^2."""
    return set(enumerate_weighted(n).keys())


def collinear_triple_count(box: tuple[int, int, int, int]) -> int:
    """Count collinear (degenerate) point triples in the box; used to
    cross-check census totals against C(points, 3)."""
    xmin, xmax, ymin, ymax = (int(v) for v in box)
    count = (xmax - xmin + 1) * (ymax - ymin + 1)
    if count > NAIVE_POINT_GUARD:
        raise GuardError(f"box has {count} points; cap is {NAIVE_POINT_GUARD}")
    pts = [(x, y) for x in range(xmin, xmax + 1) for y in range(ymin, ymax + 1)]
    total = 0
    for (ax, ay), (bx, by), (cx, cy) in combinations(pts, 3):
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
            total += 1
    return total


def total_triangle_count(n: int) -> int:
    """Number of non-degenerate triangles with vertices in [-n, n]^2."""
    return enumerate_weighted(n).total_weight
