"""Deterministic random generation: sphere sampling and random needles.

The reproducibility contract: a :class:`RngSpec` names a 64-bit seed and the
``pcg64`` generator; identical specs yield identical streams on every
platform.  Parallel work never shares a stream -- substreams are derived by
spawn keys from fixed task indices, so results are bitwise independent of
the thread count and schedule.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .densities import HALF_PI, Interval, SinAffineDensity, normalize
from .errors import OutOfDomain, RetryExhausted, ZeroMass

_MC_CHUNK = 1 << 14


@dataclass(frozen=True)
class RngSpec:
    """A named deterministic generator: same seed, same stream, anywhere."""

    seed: int
    algorithm: str = "pcg64"

    def __post_init__(self):
        if self.algorithm != "pcg64":
            raise OutOfDomain(f"unsupported rng algorithm {self.algorithm!r}")

    def generator(self, *spawn_key):
        seq = np.random.SeedSequence(self.seed, spawn_key=tuple(spawn_key))
        return np.random.Generator(np.random.PCG64(seq))


def as_rng_spec(rng):
    if isinstance(rng, RngSpec):
        return rng
    return RngSpec(int(rng))


def deterministic_map(fn, items, threads=1):
    """Ordered map; thread pool only affects wall time, never results."""
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def mc_cap_mass(n, cap_radius, samples, rng, stream=0, threads=1):
    """Monte Carlo estimate of the normalized volume of a spherical cap.

    Uniform samples on S^n come from normalized isotropic Gaussian vectors
    (dimension-agnostic and unbiased); the cap of radius r around the first
    basis vector is the event ``x_0 >= cos r``.  Returns the binomial
    estimate and its standard error.  Sampling is chunked with one
    substream per fixed chunk index, so the estimate does not depend on the
    thread count.
    """
    if samples < 1:
        raise OutOfDomain("samples must be >= 1")
    spec = as_rng_spec(rng)
    cos_r = math.cos(cap_radius)
    chunks = []
    start = 0
    idx = 0
    while start < samples:
        chunks.append((idx, min(_MC_CHUNK, samples - start)))
        start += _MC_CHUNK
        idx += 1

    def count_chunk(chunk):
        chunk_idx, size = chunk
        gen = spec.generator(stream, chunk_idx)
        x = gen.standard_normal((size, n + 1))
        norms = np.linalg.norm(x, axis=1)
        return int(np.count_nonzero(x[:, 0] >= cos_r * norms))

    hits = sum(deterministic_map(count_chunk, chunks, threads=threads))
    p = hits / samples
    stderr = math.sqrt(max(p * (1.0 - p), 1e-300) / samples)
    return {"estimate": p, "stderr": stderr, "samples": samples}


def random_affine_needle(
    interval_length_max, p_range, rng, min_length=1e-3, retries=100
):
    """Draw a valid, normalized sin^p-affine needle.

    The support is ``[0, L]`` with ``L`` uniform up to the cap (needles are
    translation invariant for separation purposes); the phase is uniform in
    the window keeping ``cos(t - phase)`` positive on the open support; the
    power is uniform over ``p_range``.  Redraws on degenerate mass, raising
    :class:`RetryExhausted` after ``retries`` failures.
    """
    p_choices = sorted(p_range)
    if not p_choices:
        raise OutOfDomain("p_range must be nonempty")
    gen = rng if isinstance(rng, np.random.Generator) else as_rng_spec(rng).generator()
    cap = min(float(interval_length_max), math.pi)
    for _ in range(retries):
        length = gen.uniform(min_length, cap)
        power = float(p_choices[int(gen.integers(0, len(p_choices)))])
        phase = gen.uniform(length - HALF_PI, HALF_PI)
        try:
            return normalize(
                SinAffineDensity(
                    phase=float(phase),
                    power=power,
                    interval=Interval(0.0, float(length)),
                )
            )
        except ZeroMass:
            continue
    raise RetryExhausted(f"no valid affine needle after {retries} draws")
