"""Needle separation bounds over the admissible comparison families.

For spheres the comparison needle is ``C cos^(n-1)`` on ``[-pi/2, pi/2]``;
for the diameter-pi/2 spaces the family is ``C cos^m sin^k`` on
``[0, pi/2]`` over integer exponents with ``m + k >= dim - 1``.  A seeded
random search over sin^p-affine needles provides the verification
counterpart.

Both bounds assume the mass pair straddles 1/2 (one mass at most 1/2, the
other at least 1/2); callers may force the computation anyway, in which
case the result is flagged as heuristic.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import betainc, betaln

from .cross_spaces import SPHERE
from .densities import (
    HALF_PI,
    Interval,
    SinAffineDensity,
    TrigDensity,
    _quarter_integral,
    normalize,
)
from .errors import HypothesisViolated, NotApplicable, OutOfDomain
from .separation import as_mass_pair, sep_1d

_TIE_TOL = 1e-12


@dataclass(frozen=True)
class NeedleBoundResult:
    """A needle separation bound together with the maximizing needle."""

    bound: float
    family: str  # "sphere-cos" | "trig" | "affine"
    params: dict
    ties: tuple
    hypothesis_satisfied: bool

    @property
    def argmax(self):
        return self.ties[0]

    def to_dict(self):
        m, k = (None, None)
        if self.family == "sphere-cos":
            m, k = self.params["m"], 0
        elif self.family == "trig":
            m, k = self.ties[0]
        rec = {
            "bound": self.bound,
            "family": self.family,
            "m": m,
            "k": k,
            "ties": [list(t) for t in self.ties],
            "hypothesis_satisfied": self.hypothesis_satisfied,
        }
        rec.update({k_: v for k_, v in self.params.items() if k_ not in rec})
        return rec


def _require_straddle(mp, force, context):
    if mp.straddles_half:
        return True
    if not force:
        raise HypothesisViolated(
            f"{context}: mass pair ({mp.k1}, {mp.k2}) must straddle 1/2 "
            "(pass force=True for a heuristic value)"
        )
    return False


def sphere_needle_bound(n, masses, force=False):
    """Needle separation distance for the n-sphere: sep of ``C cos^(n-1)``.

    Exact for straddling mass pairs; with ``force=True`` the same formula is
    evaluated for non-straddling pairs and flagged as heuristic.
    """
    if n < 2:
        raise OutOfDomain(f"sphere dimension must be >= 2, got {n}")
    mp = as_mass_pair(masses)
    ok = _require_straddle(mp, force, "sphere needle bound")
    needle = normalize(TrigDensity(m=n - 1, k=0, interval=Interval(-HALF_PI, HALF_PI)))
    res = sep_1d(needle, mp)
    return NeedleBoundResult(
        bound=res.sep,
        family="sphere-cos",
        params={"n": n, "m": n - 1},
        ties=((n - 1, 0),),
        hypothesis_satisfied=ok,
    )


def cross_needle_bound(space, masses, max_total_power=None, force=False):
    """Max separation over ``C cos^m sin^k`` needles on ``[0, diameter]``.

    The integer grid runs over ``m, k >= 0`` with
    ``dim - 1 <= m + k <= max_total_power`` (default ``dim + 7``).  All
    maximizing pairs within 1e-12 are reported as ties.
    """
    if space.family == SPHERE:
        raise NotApplicable("use sphere_needle_bound for spheres")
    if abs(space.diameter - HALF_PI) > 1e-12:
        raise NotApplicable("the trig-monomial grid applies to diameter pi/2 spaces")
    mp = as_mass_pair(masses)
    ok = _require_straddle(mp, force, "cross needle bound")
    low = max(space.dim - 1, 1)
    mtp = space.dim + 7 if max_total_power is None else int(max_total_power)
    if mtp < low:
        raise OutOfDomain(
            f"max_total_power={mtp} is below the admissibility floor {low}"
        )
    pairs = [
        (total - k, k) for total in range(low, mtp + 1) for k in range(0, total + 1)
    ]
    m_arr = np.array([p[0] for p in pairs], dtype=float)
    k_arr = np.array([p[1] for p in pairs], dtype=float)
    seps = batch_trig_sep(m_arr, k_arr, 0.0, space.diameter, mp.k1, mp.k2)
    best = float(np.max(seps))
    ties = tuple(sorted(p for p, s in zip(pairs, seps) if s >= best - _TIE_TOL))
    return NeedleBoundResult(
        bound=best,
        family="trig",
        params={"space": space.name, "max_total_power": mtp},
        ties=ties,
        hypothesis_satisfied=ok,
    )


def batch_trig_sep(m, k, lo, hi, k1, k2, iters=64):
    """Separations for a batch of trig-monomial needles inside [0, pi/2].

    Same 64-step CDF bisection as ``sep_1d`` on the equivalent
    :class:`TrigDensity`, vectorized over needles; all arguments broadcast.
    Intervals must lie inside [0, pi/2], where the quarter-period
    antiderivative covers every exponent combination.
    """
    m, k, lo, hi, k1, k2 = np.broadcast_arrays(
        *(np.asarray(x, dtype=float) for x in (m, k, lo, hi, k1, k2))
    )
    if np.any(lo < -1e-12) or np.any(hi > HALF_PI + 1e-12):
        raise OutOfDomain("batch_trig_sep expects intervals inside [0, pi/2]")
    g0 = _quarter_integral(m, k, lo)
    total = _quarter_integral(m, k, hi) - g0
    targets = np.stack([k1, 1.0 - k2, k2, 1.0 - k1])
    a = np.broadcast_to(lo, targets.shape).copy()
    b = np.broadcast_to(hi, targets.shape).copy()
    mm = np.broadcast_to(m, targets.shape)
    kk = np.broadcast_to(k, targets.shape)
    for _ in range(iters):
        mid = 0.5 * (a + b)
        cdf = (_quarter_integral(mm, kk, mid) - g0) / total
        below = cdf < targets
        a = np.where(below, mid, a)
        b = np.where(below, b, mid)
    t = 0.5 * (a + b)
    return np.maximum(np.maximum(t[1] - t[0], t[3] - t[2]), 0.0)


def _affine_antiderivative(power, u):
    """Vectorized antiderivative of ``cos^power`` at ``u`` in [-pi/2, pi/2]."""
    a = 0.5
    b = 0.5 * (power + 1.0)
    au = np.abs(u)
    s2 = np.sin(au) ** 2
    c2 = np.cos(au) ** 2
    val = np.where(
        s2 <= 0.5,
        betainc(a, b, np.minimum(s2, 1.0)),
        1.0 - betainc(b, a, np.minimum(c2, 1.0)),
    )
    return np.sign(u) * 0.5 * np.exp(betaln(a, b)) * val


def batch_affine_sep(phase, power, lo, hi, k1, k2, iters=64):
    """Separation distances for a batch of sin^p-affine needles.

    All arguments broadcast elementwise.  Identical algorithm to
    ``sep_1d(SinAffineDensity(...), (k1, k2))`` -- a 64-step bisection of the
    exact CDF -- just vectorized over the batch.
    """
    phase, power, lo, hi, k1, k2 = np.broadcast_arrays(
        *(np.asarray(x, dtype=float) for x in (phase, power, lo, hi, k1, k2))
    )
    u0 = np.clip(lo - phase, -HALF_PI, HALF_PI)
    u1 = np.clip(hi - phase, -HALF_PI, HALF_PI)
    g0 = _affine_antiderivative(power, u0)
    total = _affine_antiderivative(power, u1) - g0
    targets = np.stack([k1, 1.0 - k2, k2, 1.0 - k1])
    a = np.broadcast_to(lo, targets.shape).copy()
    b = np.broadcast_to(hi, targets.shape).copy()
    pw = np.broadcast_to(power, targets.shape)
    ph = np.broadcast_to(phase, targets.shape)
    for _ in range(iters):
        mid = 0.5 * (a + b)
        u = np.clip(mid - ph, -HALF_PI, HALF_PI)
        cdf = (_affine_antiderivative(pw, u) - g0) / total
        below = cdf < targets
        a = np.where(below, mid, a)
        b = np.where(below, b, mid)
    t = 0.5 * (a + b)
    gap_12 = t[1] - t[0]
    gap_21 = t[3] - t[2]
    return np.maximum(np.maximum(gap_12, gap_21), 0.0)


def optimize_affine_family(
    interval_length_max, p_range, masses, samples, seed, min_length=1e-3
):
    """Seeded random search over valid sin^p-affine needles.

    Samples ``(phase, p, sub-interval)`` with the density positive on the
    open support and support length at most ``interval_length_max``; returns
    the best separation found.  Deterministic for a fixed seed.
    """
    if samples < 1:
        raise OutOfDomain("samples must be >= 1")
    mp = as_mass_pair(masses)
    p_choices = np.asarray(sorted(p_range), dtype=float)
    if p_choices.size == 0:
        raise OutOfDomain("p_range must be nonempty")
    rng = np.random.Generator(np.random.PCG64(seed))
    length_cap = min(float(interval_length_max), math.pi)
    lengths = rng.uniform(min_length, length_cap, size=samples)
    powers = p_choices[rng.integers(0, p_choices.size, size=samples)]
    # positivity of cos(t - phase) on (0, L) requires phase in [L - pi/2, pi/2]
    phases = rng.uniform(lengths - HALF_PI, HALF_PI)
    los = np.zeros(samples)
    seps = batch_affine_sep(phases, powers, los, lengths, mp.k1, mp.k2)
    best_idx = int(np.argmax(seps))
    best_needle = normalize(
        SinAffineDensity(
            phase=float(phases[best_idx]),
            power=float(powers[best_idx]),
            interval=Interval(0.0, float(lengths[best_idx])),
        )
    )
    return {
        "best_sep": float(seps[best_idx]),
        "best_needle": best_needle,
        "all_samples": {
            "phase": phases,
            "power": powers,
            "lo": los,
            "hi": lengths,
            "sep": seps,
        },
    }


def bound_profile(bound_fn, mass_pairs):
    """Tabulate a needle bound over mass pairs, sorted by ``(k1, k2)``.

    ``bound_fn`` maps a :class:`MassPair` to a :class:`NeedleBoundResult`;
    each row records the bound and the (first) maximizing needle.
    """
    rows = []
    for pair in mass_pairs:
        mp = as_mass_pair(pair)
        res = bound_fn(mp)
        if res.family == "sphere-cos":
            m, k = res.params["m"], 0
        elif res.family == "trig":
            m, k = res.ties[0]
        else:
            m, k = None, None
        rows.append(
            {
                "k1": mp.k1,
                "k2": mp.k2,
                "bound": res.bound,
                "family": res.family,
                "m": m,
                "k": k,
            }
        )
    rows.sort(key=lambda r: (r["k1"], r["k2"]))
    return rows


def bound_profile_csv(rows):
    """CSV emission with the stable header ``k1,k2,bound,family,m,k``."""
    lines = ["k1,k2,bound,family,m,k"]
    for r in rows:
        m = "" if r["m"] is None else r["m"]
        k = "" if r["k"] is None else r["k"]
        lines.append(f"{r['k1']!r},{r['k2']!r},{r['bound']!r},{r['family']},{m},{k}")
    return "\n".join(lines) + "\n"
