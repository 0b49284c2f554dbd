"""Monte Carlo baselines: uniform random triangles in the unit square.

Vertices are drawn uniformly from [0,1]^2.  Exactly collinear draws (a
measure-zero event that double precision can still produce) are resampled
from the same stream, so every retained triangle is non-degenerate.

Estimates come with the exact references they are checked against:

* P(obtuse) for three uniform points in a square: 97/150 + pi/40
* mean distance of two uniform points: (2 + sqrt 2 + 5 asinh 1)/15

Sampling runs in fixed blocks with per-block streams (see rng); block
results are reduced in block-index order, so estimates are bit-identical
regardless of the worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import GuardError
from .parallel import map_ordered, worker_count
from .rng import BLOCK_SAMPLES, block_generator, block_sizes

OBTUSE_MARGIN = 1e-15  # squared-length slack; ties count as not obtuse

MIN_SAMPLES = 1000
MAX_BINS = 4096


def langford_obtuse_probability() -> float:
    """Exact probability that three uniform points in a square form an
    obtuse triangle: 97/150 + pi/40."""
    return 97.0 / 150.0 + math.pi / 40.0


def unit_square_mean_distance() -> float:
    """Exact mean distance of two uniform points in the unit square:
    (2 + sqrt 2 + 5 asinh 1)/15."""
    return (2.0 + math.sqrt(2.0) + 5.0 * math.asinh(1.0)) / 15.0


@dataclass(frozen=True, slots=True)
class McEstimate:
    """A Monte Carlo estimate with its standard error."""

    mean: float
    std_error: float
    samples: int
    seed: int

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError(f"samples must be positive, got {self.samples}")
        if self.std_error < 0:
            raise ValueError(f"std_error cannot be negative, got {self.std_error}")


@dataclass(eq=False)
class Histogram2D:
    """Binned mass of sampled shapes on the ab-plane region.

    counts[ix, iy] bins the square [0,1)^2 uniformly, ix from the first
    coordinate.  In labeled mode every sample contributes its 6 labeled
    projections; in sorted mode just the moduli representative.
    obtuse_count counts obtuse samples (not projections) for consistency
    checks against the obtuse estimator.
    """

    counts: np.ndarray
    bin_count: int
    samples: int
    seed: int
    labeled: bool
    obtuse_count: int
    total: int = field(init=False)

    def __post_init__(self):
        if self.counts.shape != (self.bin_count, self.bin_count):
            raise ValueError("counts grid does not match bin_count")
        self.total = int(self.counts.sum())
        expected = self.samples * (6 if self.labeled else 1)
        if self.total != expected:
            raise ValueError(
                f"histogram holds {self.total} points, expected {expected}"
            )


def pair_distances(x1, y1, x2, y2) -> np.ndarray:
    """Euclidean distance kernel used by the samplers."""
    return np.hypot(np.asarray(x2) - np.asarray(x1), np.asarray(y2) - np.asarray(y1))


def _triangle_uniforms(gen: np.random.Generator, count: int) -> np.ndarray:
    """(count, 6) uniforms (ax, ay, bx, by, cx, cy) with exactly collinear
    rows resampled from the same stream."""
    u = gen.random((count, 6))
    while True:
        cx = (u[:, 2] - u[:, 0]) * (u[:, 5] - u[:, 1]) - (u[:, 3] - u[:, 1]) * (
            u[:, 4] - u[:, 0]
        )
        bad = cx == 0.0
        n_bad = int(bad.sum())
        if n_bad == 0:
            return u
        u[bad] = gen.random((n_bad, 6))


def _squared_sides_cols(u: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    ab = (u[:, 2] - u[:, 0]) ** 2 + (u[:, 3] - u[:, 1]) ** 2
    bc = (u[:, 4] - u[:, 2]) ** 2 + (u[:, 5] - u[:, 3]) ** 2
    ca = (u[:, 0] - u[:, 4]) ** 2 + (u[:, 1] - u[:, 5]) ** 2
    return ab, bc, ca


def _obtuse_mask(ab: np.ndarray, bc: np.ndarray, ca: np.ndarray) -> np.ndarray:
    hi = np.maximum(np.maximum(ab, bc), ca)
    rest = ab + bc + ca - hi
    return hi > rest + OBTUSE_MARGIN


def _obtuse_block(seed: int, index: int, size: int) -> int:
    gen = block_generator(seed, index)
    u = _triangle_uniforms(gen, size)
    return int(np.count_nonzero(_obtuse_mask(*_squared_sides_cols(u))))


def _distance_block(seed: int, index: int, size: int) -> tuple[float, float]:
    gen = block_generator(seed, index)
    u = gen.random((size, 4))
    d = pair_distances(u[:, 0], u[:, 1], u[:, 2], u[:, 3])
    return (float(d.sum()), float(np.square(d).sum()))


def _check_mc_args(samples, seed) -> tuple[int, int]:
    samples = int(samples)
    seed = int(seed)
    if samples < MIN_SAMPLES:
        raise GuardError(f"samples must be >= {MIN_SAMPLES}, got {samples}")
    return samples, seed


def obtuse_probability(samples: int, seed: int) -> McEstimate:
    """Estimate P(obtuse) for uniform random triangles in the unit square."""
    samples, seed = _check_mc_args(samples, seed)
    sizes = block_sizes(samples)
    args = [(seed, i, sz) for i, sz in enumerate(sizes)]
    hits = 0
    for h in map_ordered(_obtuse_block, args, worker_count()):
        hits += h
    mean = hits / samples
    se = math.sqrt(mean * (1.0 - mean) / samples)
    return McEstimate(mean=mean, std_error=se, samples=samples, seed=seed)


def mean_pair_distance(samples: int, seed: int) -> McEstimate:
    """Estimate the mean distance of two uniform points in the unit square."""
    samples, seed = _check_mc_args(samples, seed)
    sizes = block_sizes(samples)
    args = [(seed, i, sz) for i, sz in enumerate(sizes)]
    total = 0.0
    total_sq = 0.0
    for s, s2 in map_ordered(_distance_block, args, worker_count()):
        total += s
        total_sq += s2
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    se = math.sqrt(var / samples)
    return McEstimate(mean=mean, std_error=se, samples=samples, seed=seed)


def _histogram_block(
    seed: int, index: int, size: int, bins: int, labeled: bool
) -> tuple[np.ndarray, int]:
    gen = block_generator(seed, index)
    u = _triangle_uniforms(gen, size)
    ab, bc, ca = _squared_sides_cols(u)
    obtuse = int(np.count_nonzero(_obtuse_mask(ab, bc, ca)))
    la = np.sqrt(ab)
    lb = np.sqrt(bc)
    lc = np.sqrt(ca)
    half = (la + lb + lc) / 2.0
    na = la / half
    nb = lb / half
    nc = lc / half
    if labeled:
        x = np.concatenate([na, na, nb, nb, nc, nc])
        y = np.concatenate([nb, nc, na, nc, na, nb])
    else:
        tri = np.sort(np.stack([na, nb, nc], axis=1), axis=1)
        x = tri[:, 0]
        y = tri[:, 1]
    ix = np.clip((x * bins).astype(np.int64), 0, bins - 1)
    iy = np.clip((y * bins).astype(np.int64), 0, bins - 1)
    grid = np.bincount(ix * bins + iy, minlength=bins * bins).reshape(bins, bins)
    return grid.astype(np.int64), obtuse


def shape_histogram(
    samples: int, bins: int, seed: int, labeled: bool = True
) -> Histogram2D:
    """Histogram of sampled triangle shapes on the ab-plane."""
    samples = int(samples)
    bins = int(bins)
    seed = int(seed)
    if samples < 1:
        raise GuardError(f"samples must be >= 1, got {samples}")
    if not (2 <= bins <= MAX_BINS):
        raise GuardError(f"bins must be in [2, {MAX_BINS}], got {bins}")
    sizes = block_sizes(samples)
    args = [(seed, i, sz, bins, labeled) for i, sz in enumerate(sizes)]
    grid = np.zeros((bins, bins), dtype=np.int64)
    obtuse = 0
    for g, ob in map_ordered(_histogram_block, args, worker_count()):
        grid += g
        obtuse += ob
    return Histogram2D(
        counts=grid,
        bin_count=bins,
        samples=samples,
        seed=seed,
        labeled=labeled,
        obtuse_count=obtuse,
    )
