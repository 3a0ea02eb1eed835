"""Probability densities on angular intervals.

Three families:

* :class:`TrigDensity` -- ``C cos^m(t) sin^k(t)`` with real exponents
  ``m, k >= 0``.  Masses reduce to the regularized incomplete beta function
  through the substitution ``u = sin^2 t``, so CDFs are exact and fast.
* :class:`SinAffineDensity` -- ``C (C1 sin t + C2 cos t)^p`` with
  ``C1 = sin(phase)``, ``C2 = cos(phase)``.  Since
  ``C1 sin t + C2 cos t = cos(t - phase)``, everything delegates to the
  pure-cosine antiderivative on a shifted interval.
* :class:`TabulatedDensity` -- piecewise-linear samples; the oracle
  representation used by brute-force checks.

Quantiles invert the CDF by bisection (64 fixed iterations, so results are
deterministic and independent of any parallel schedule).
"""

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import betainc, betaln

from . import quadrature
from .errors import OutOfDomain, ZeroMass

HALF_PI = math.pi / 2.0

_DOMAIN_TOL = 1e-9
_MASS_FLOOR = 1e-14
_BISECT_ITERS = 64


@dataclass(frozen=True)
class Interval:
    """A closed interval of angles, at most pi long."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (self.lo < self.hi):
            raise OutOfDomain(f"interval requires lo < hi, got [{self.lo}, {self.hi}]")
        if self.hi - self.lo > math.pi + 1e-12:
            raise OutOfDomain(
                f"interval length {self.hi - self.lo:.6g} exceeds pi"
            )

    @property
    def length(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return 0.5 * (self.lo + self.hi)

    def contains(self, t, tol=_DOMAIN_TOL):
        t = np.asarray(t, dtype=float)
        return bool(np.all(t >= self.lo - tol) and np.all(t <= self.hi + tol))

    def grid(self, n):
        return np.linspace(self.lo, self.hi, n)


def _beta_complete(a, b):
    return np.exp(betaln(a, b))


def _quarter_integral(m, k, t):
    """``int_0^t cos^m sin^k`` for ``t`` in ``[0, pi/2]`` (vectorized)."""
    t = np.clip(np.asarray(t, dtype=float), 0.0, HALF_PI)
    a = 0.5 * (k + 1.0)
    b = 0.5 * (m + 1.0)
    s2 = np.sin(t) ** 2
    c2 = np.cos(t) ** 2
    # complement form in the upper half for conditioning near t = pi/2
    val = np.where(
        s2 <= 0.5,
        betainc(a, b, np.minimum(s2, 1.0)),
        1.0 - betainc(b, a, np.minimum(c2, 1.0)),
    )
    return 0.5 * _beta_complete(a, b) * val


def trig_antiderivative(m, k, t):
    """Antiderivative ``G`` of ``cos^m sin^k`` on the family's natural domain.

    Domains: both exponents positive -> [0, pi/2]; pure cosine -> [-pi/2,
    pi/2] (odd extension); pure sine -> [0, pi] (reflection about pi/2);
    constant -> all of R.
    """
    t = np.asarray(t, dtype=float)
    if m == 0.0 and k == 0.0:
        return t.copy()
    if k == 0.0:
        return np.sign(t) * _quarter_integral(m, 0.0, np.abs(t))
    if m == 0.0:
        half = _quarter_integral(0.0, k, HALF_PI)
        upper = 2.0 * half - _quarter_integral(0.0, k, math.pi - t)
        return np.where(t <= HALF_PI, _quarter_integral(0.0, k, t), upper)
    return _quarter_integral(m, k, t)


def trig_mass(m, k, lo, hi):
    """Exact ``int_lo^hi cos^m sin^k dt`` on the family's valid domain."""
    return float(trig_antiderivative(m, k, hi) - trig_antiderivative(m, k, lo))


def _validate_trig_domain(m, k, interval):
    tol = 1e-9
    if m < 0 or k < 0:
        raise OutOfDomain("exponents must be nonnegative")
    if k > 0 and not (interval.lo >= -tol and interval.hi <= math.pi + tol):
        raise OutOfDomain(
            f"sin^{k} requires the interval inside [0, pi], got "
            f"[{interval.lo:.6g}, {interval.hi:.6g}]"
        )
    if m > 0 and not (interval.lo >= -HALF_PI - tol and interval.hi <= HALF_PI + tol):
        raise OutOfDomain(
            f"cos^{m} requires the interval inside [-pi/2, pi/2], got "
            f"[{interval.lo:.6g}, {interval.hi:.6g}]"
        )


def _bisect_quantile(cdf, lo, hi, q):
    """Vectorized bisection of a monotone CDF; endpoints for q in {0, 1}."""
    q = np.asarray(q, dtype=float)
    if np.any(q < -1e-12) or np.any(q > 1.0 + 1e-12):
        raise OutOfDomain("mass fractions must lie in [0, 1]")
    a = np.full(q.shape, float(lo))
    b = np.full(q.shape, float(hi))
    for _ in range(_BISECT_ITERS):
        mid = 0.5 * (a + b)
        below = cdf(mid) < q
        a = np.where(below, mid, a)
        b = np.where(below, b, mid)
    t = 0.5 * (a + b)
    t = np.where(q <= 0.0, float(lo), t)
    t = np.where(q >= 1.0, float(hi), t)
    return t if t.shape else float(t)


class _DensityBase:
    """Shared CDF/quantile plumbing; subclasses provide raw antiderivatives."""

    def _raw_cdf(self, t):  # pragma: no cover - abstract
        raise NotImplementedError

    @property
    def raw_mass(self):
        return self._raw_total

    def pdf(self, t):
        raise NotImplementedError

    def cdf(self, t):
        """Normalized mass of ``[lo, t]``; raises OutOfDomain outside."""
        t = np.asarray(t, dtype=float)
        if not self.interval.contains(t):
            raise OutOfDomain(
                f"abscissa outside [{self.interval.lo:.6g}, {self.interval.hi:.6g}]"
            )
        t = np.clip(t, self.interval.lo, self.interval.hi)
        out = (self._raw_cdf(t) - self._raw_lo) / self._raw_total
        out = np.clip(out, 0.0, 1.0)
        return out if out.shape else float(out)

    def quantile(self, q):
        """Inverse CDF by bisection; returns endpoints for q in {0, 1}."""
        return _bisect_quantile(self.cdf, self.interval.lo, self.interval.hi, q)

    def mass(self, a, b):
        return float(self.cdf(b) - self.cdf(a))


def _finalize(density, raw_lo, raw_hi):
    total = float(raw_hi - raw_lo)
    if not np.isfinite(total) or total <= _MASS_FLOOR:
        raise ZeroMass(f"density integrates to {total:.3e}")
    object.__setattr__(density, "_raw_lo", float(raw_lo))
    object.__setattr__(density, "_raw_total", total)


@dataclass(frozen=True)
class TrigDensity(_DensityBase):
    """Density proportional to ``cos^m(t) sin^k(t)`` on an interval.

    ``norm`` is the normalization constant; ``norm=None`` marks an
    unnormalized density (``pdf`` then returns the bare monomial).  CDF and
    quantile are always those of the normalized density.
    """

    m: float
    k: float
    interval: Interval
    norm: float | None = None

    family = "trig"

    def __post_init__(self):
        _validate_trig_domain(self.m, self.k, self.interval)
        raw = trig_antiderivative(self.m, self.k, np.array([self.interval.lo, self.interval.hi]))
        _finalize(self, raw[0], raw[1])

    def _raw_cdf(self, t):
        return trig_antiderivative(self.m, self.k, t)

    def pdf(self, t):
        t = np.asarray(t, dtype=float)
        c = np.maximum(np.cos(t), 0.0)
        s = np.maximum(np.sin(t), 0.0)
        scale = 1.0 if self.norm is None else self.norm
        out = scale * np.power(c, self.m) * np.power(s, self.k)
        return out if out.shape else float(out)

    def to_dict(self):
        return {
            "family": "trig",
            "m": self.m,
            "k": self.k,
            "lo": self.interval.lo,
            "hi": self.interval.hi,
        }


@dataclass(frozen=True)
class SinAffineDensity(_DensityBase):
    """Density proportional to ``(sin(phase) sin t + cos(phase) cos t)^power``.

    The affine form equals ``cos(t - phase)``, so it must stay positive on
    the open interval: ``(lo - phase, hi - phase)`` inside ``(-pi/2, pi/2)``.
    """

    phase: float
    power: float
    interval: Interval
    norm: float | None = None

    family = "affine"

    def __post_init__(self):
        if self.power < 0:
            raise OutOfDomain("power must be nonnegative")
        tol = 1e-9
        if self.interval.lo - self.phase < -HALF_PI - tol or self.interval.hi - self.phase > HALF_PI + tol:
            raise OutOfDomain(
                "affine density not positive on the open interval: phase "
                f"{self.phase:.6g} leaves cos(t - phase) nonpositive inside "
                f"[{self.interval.lo:.6g}, {self.interval.hi:.6g}]"
            )
        raw = self._raw_cdf(np.array([self.interval.lo, self.interval.hi]))
        _finalize(self, raw[0], raw[1])

    def _raw_cdf(self, t):
        u = np.asarray(t, dtype=float) - self.phase
        u = np.clip(u, -HALF_PI, HALF_PI)
        return trig_antiderivative(self.power, 0.0, u)

    def pdf(self, t):
        t = np.asarray(t, dtype=float)
        base = np.maximum(np.cos(t - self.phase), 0.0)
        scale = 1.0 if self.norm is None else self.norm
        out = scale * np.power(base, self.power)
        return out if out.shape else float(out)

    @property
    def c1(self):
        return math.sin(self.phase)

    @property
    def c2(self):
        return math.cos(self.phase)

    def to_dict(self):
        return {
            "family": "affine",
            "phase": self.phase,
            "power": self.power,
            "lo": self.interval.lo,
            "hi": self.interval.hi,
        }


@dataclass(frozen=True)
class TabulatedDensity(_DensityBase):
    """Piecewise-linear density samples on a strictly increasing grid."""

    grid: tuple
    values: tuple
    norm: float | None = None

    family = "tabulated"

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if g.ndim != 1 or g.size < 2 or v.shape != g.shape:
            raise OutOfDomain("grid and values must be 1-D arrays of equal length >= 2")
        if np.any(np.diff(g) <= 0):
            raise OutOfDomain("grid must be strictly increasing")
        if np.any(v < -1e-12):
            raise OutOfDomain("density samples must be nonnegative")
        object.__setattr__(self, "grid", tuple(float(x) for x in g))
        object.__setattr__(self, "values", tuple(max(float(x), 0.0) for x in v))
        object.__setattr__(self, "_g", np.asarray(self.grid))
        object.__setattr__(self, "_v", np.asarray(self.values))
        seg = 0.5 * (self._v[1:] + self._v[:-1]) * np.diff(self._g)
        cum = np.concatenate([[0.0], np.cumsum(seg)])
        object.__setattr__(self, "_cum", cum)
        object.__setattr__(self, "interval", Interval(self.grid[0], self.grid[-1]))
        _finalize(self, 0.0, cum[-1])

    @classmethod
    def from_callable(cls, f, interval, n=2049):
        g = interval.grid(n)
        return cls(grid=tuple(g), values=tuple(np.asarray(f(g), dtype=float)))

    @classmethod
    def from_density(cls, density, n=2049):
        return cls.from_callable(density.pdf, density.interval, n=n)

    def _raw_cdf(self, t):
        t = np.asarray(t, dtype=float)
        idx = np.clip(np.searchsorted(self._g, t, side="right") - 1, 0, self._g.size - 2)
        t0 = self._g[idx]
        h = self._g[idx + 1] - t0
        f0 = self._v[idx]
        f1 = self._v[idx + 1]
        s = np.clip(t - t0, 0.0, h)
        return self._cum[idx] + f0 * s + 0.5 * (f1 - f0) * s * s / h

    def pdf(self, t):
        t = np.asarray(t, dtype=float)
        scale = 1.0 if self.norm is None else self.norm
        out = scale * np.interp(t, self._g, self._v)
        return out if out.shape else float(out)

    def to_dict(self):
        return {
            "family": "tabulated",
            "lo": self.interval.lo,
            "hi": self.interval.hi,
            "grid": list(self.grid),
            "values": list(self.values),
        }


def normalize(density):
    """Return a copy whose ``pdf`` integrates to one.

    Raises :class:`ZeroMass` when the raw integral is below the numeric
    floor.  The integral check is exact for trig/affine families (incomplete
    beta closed form); tabulated masses use the trapezoid rule.
    """
    total = density.raw_mass
    if total <= _MASS_FLOOR:
        raise ZeroMass(f"density integrates to {total:.3e}")
    if density.family == "tabulated":
        scaled = tuple(v / total for v in density.values)
        return TabulatedDensity(grid=density.grid, values=scaled, norm=1.0)
    return replace(density, norm=1.0 / total)


def verify_unit_mass(density, atol=1e-10):
    """Cross-check the normalized mass against an independent integral.

    Smooth families go through adaptive Gauss-Legendre; tabulated densities
    are defined by their trapezoid integral, which is used directly (the
    kinks would defeat the adaptive error estimate).
    """
    if density.family == "tabulated":
        g = np.asarray(density.grid)
        v = np.asarray(density.values) * (1.0 if density.norm is None else density.norm)
        total = float(np.trapezoid(v, g))
    else:
        total = quadrature.integrate(
            density.pdf, density.interval.lo, density.interval.hi, atol=min(atol, 1e-12)
        )
    return abs(total - 1.0) <= atol


def reflect(density):
    """Reflect a density about its interval midpoint (t -> lo + hi - t)."""
    lo, hi = density.interval.lo, density.interval.hi
    if density.family == "tabulated":
        g = lo + hi - np.asarray(density.grid)[::-1]
        v = np.asarray(density.values)[::-1]
        return TabulatedDensity(grid=tuple(g), values=tuple(v), norm=density.norm)
    n = 4097
    g = np.linspace(lo, hi, n)
    vals = density.pdf(lo + hi - g)
    d = TabulatedDensity(grid=tuple(g), values=tuple(np.asarray(vals)))
    return normalize(d)


def density_to_dict(density):
    return density.to_dict()


def density_from_dict(rec, normalized=True):
    """Rebuild a density from its JSON record."""
    fam = rec.get("family")
    interval = Interval(float(rec["lo"]), float(rec["hi"]))
    if fam == "trig":
        d = TrigDensity(m=float(rec["m"]), k=float(rec["k"]), interval=interval)
    elif fam == "affine":
        d = SinAffineDensity(
            phase=float(rec["phase"]), power=float(rec["power"]), interval=interval
        )
    elif fam == "tabulated":
        d = TabulatedDensity(
            grid=tuple(float(x) for x in rec["grid"]),
            values=tuple(float(x) for x in rec["values"]),
        )
    else:
        raise OutOfDomain(f"unknown density family: {fam!r}")
    return normalize(d) if normalized else d
