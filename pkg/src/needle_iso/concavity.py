"""Concavity predicates for needle densities and the cosine-envelope checks.

A nonnegative function ``f`` on an interval of length at most pi is
*sin^N-concave* when, for every pair ``x1, x2`` with ``|x2 - x1| < pi``,

    f((x1 + x2)/2)^(1/N) >= (f(x1)^(1/N) + f(x2)^(1/N)) / (2 cos(|x2 - x1|/2)).

``is_sin_concave`` is a sound-but-sampled verifier of that inequality: it
checks all midpoint-aligned pairs of a uniform grid and can therefore reject
with certainty but accepts only up to the grid resolution.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import quadrature
from .densities import HALF_PI, Interval, trig_mass
from .errors import InvalidOrder, NonIntegerPower, OutOfDomain, PreconditionFailed


def _as_callable(f, interval):
    if hasattr(f, "pdf") and hasattr(f, "interval"):
        return f.pdf, f.interval
    if interval is None:
        raise OutOfDomain("an explicit interval is required for bare callables")
    return f, interval


def is_sin_concave(f, order, interval=None, grid_size=1024, tol=1e-9):
    """Sampled check of the sin^N midpoint concavity inequality.

    ``f`` may be a density object or a callable (then ``interval`` is
    required).  Pairs are checked only where both endpoint values exceed
    ``tol`` (zero values satisfy the inequality vacuously on the right-hand
    side); any negative value rejects outright, since a density cannot be
    negative.  Pairs at distance >= pi are skipped (the cosine factor would
    vanish).
    """
    if order <= 0:
        raise InvalidOrder(f"concavity order must be positive, got {order}")
    func, iv = _as_callable(f, interval)
    x = iv.grid(grid_size)
    v = np.asarray(func(x), dtype=float)
    if np.any(v < -tol):
        return False
    v = np.maximum(v, 0.0)
    u = np.power(v, 1.0 / order)
    step = x[1] - x[0]
    max_d = grid_size - 1
    for d in range(1, (max_d // 2) + 1):
        gap = 2 * d * step
        if gap >= math.pi - 1e-9:
            break
        i1 = slice(0, grid_size - 2 * d)
        i2 = slice(2 * d, grid_size)
        imid = slice(d, grid_size - d)
        valid = (v[i1] > tol) & (v[i2] > tol)
        if not np.any(valid):
            continue
        rhs = (u[i1] + u[i2]) / (2.0 * math.cos(0.5 * gap))
        bad = valid & (u[imid] < rhs - tol)
        if np.any(bad):
            return False
    return True


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of the cosine-envelope comparison for one density."""

    pointwise_ok: bool
    ratio_ok: bool
    tau_within_quarter_period: bool
    envelope_constant: float
    ratio_lhs: float
    ratio_rhs: float


def check_comparison_lemma(
    f,
    order,
    epsilon,
    k,
    interval=None,
    grid_size=512,
    pointwise_tol=1e-8,
    ratio_tol=1e-9,
    verify_concavity=True,
):
    """Compare a concave needle density against its matched cosine envelope.

    ``f`` must be sin^order-concave on ``[0, tau]`` with its maximum at 0.
    The envelope is ``h = C cos^order`` with ``C`` chosen so ``f(eps) =
    h(eps)``.  Checks, on a ``grid_size`` grid, that ``f >= h`` left of
    ``eps`` and ``f <= h`` right of it, and that the sine-weighted head-mass
    ratio of ``f`` on ``[0, tau]`` dominates that of ``cos^order`` on
    ``[0, pi/2]``:

        int_0^eps f sin^k / int_0^tau f sin^k
            >= int_0^eps cos^order sin^k / int_0^{pi/2} cos^order sin^k.
    """
    if order <= 0:
        raise InvalidOrder(f"concavity order must be positive, got {order}")
    if k < 0:
        raise OutOfDomain("sine weight exponent k must be nonnegative")
    func, iv = _as_callable(f, interval)
    if abs(iv.lo) > 1e-12:
        raise PreconditionFailed("the comparison domain must start at 0")
    tau = iv.hi
    if not (0.0 < epsilon < HALF_PI):
        raise PreconditionFailed("epsilon must lie in (0, pi/2)")
    if tau <= epsilon:
        raise PreconditionFailed("tau must exceed epsilon")

    x = iv.grid(grid_size)
    fx = np.asarray(func(x), dtype=float)
    if verify_concavity:
        if fx[0] + pointwise_tol < np.max(fx):
            raise PreconditionFailed("density must attain its maximum at 0")
        if not is_sin_concave(func, order, interval=iv, grid_size=min(grid_size, 512)):
            raise PreconditionFailed(
                f"density is not sin^{order}-concave on its interval"
            )

    f_eps = float(np.asarray(func(np.array([epsilon])))[0])
    if f_eps <= 0:
        raise PreconditionFailed("density must be positive at epsilon")
    envelope_c = f_eps / math.cos(epsilon) ** order

    hx = envelope_c * np.cos(x) ** order
    left = x <= epsilon
    right = ~left
    pointwise_ok = bool(
        np.all(fx[left] >= hx[left] - pointwise_tol)
        and np.all(fx[right] <= hx[right] + pointwise_tol)
    )

    def weighted(t):
        return func(t) * np.sin(t) ** k if k > 0 else func(t)

    head = quadrature.integrate(weighted, 0.0, min(epsilon, tau), atol=1e-13)
    total = quadrature.integrate(weighted, 0.0, tau, atol=1e-13)
    lhs = head / total
    rhs = trig_mass(order, k, 0.0, epsilon) / trig_mass(order, k, 0.0, HALF_PI)
    ratio_ok = bool(lhs >= rhs - ratio_tol)

    return ComparisonReport(
        pointwise_ok=pointwise_ok,
        ratio_ok=ratio_ok,
        tau_within_quarter_period=bool(tau <= HALF_PI + 1e-12),
        envelope_constant=envelope_c,
        ratio_lhs=lhs,
        ratio_rhs=rhs,
    )


@dataclass(frozen=True)
class BinomialDecomposition:
    """Expansion of an affine-power density into trig monomial components.

    ``components[i] = (coefficient, (m_i, k_i))`` with ``m_i = p - i`` cosine
    and ``k_i = i`` sine exponents; ``masses[i]`` is the integral of the i-th
    term over the interval, so the masses always sum to one for a normalized
    density (and match the nonnegative-coefficient case exactly).
    """

    components: tuple
    masses: tuple
    interval: Interval

    @property
    def power(self):
        return len(self.components) - 1

    def reconstruct(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        for coef, (m, k) in self.components:
            out += coef * np.cos(t) ** m * np.sin(t) ** k
        return out

    def max_reconstruction_error(self, pdf, n=1025):
        x = self.interval.grid(n)
        return float(np.max(np.abs(self.reconstruct(x) - np.asarray(pdf(x)))))


def binomial_decompose(affine):
    """Expand ``C (C1 sin t + C2 cos t)^p`` for integer ``p >= 0``.

    The i-th coefficient is ``C * binom(p, i) C1^i C2^(p-i)`` attached to the
    monomial ``cos^(p-i) sin^i``.  Component masses are computed by adaptive
    quadrature so sign-carrying coefficients (phases outside [0, pi/2]) are
    handled too.
    """
    p_real = affine.power
    p = round(p_real)
    if abs(p_real - p) > 1e-12:
        raise NonIntegerPower(f"power {p_real} is not an integer")
    scale = 1.0 if affine.norm is None else affine.norm
    c1, c2 = affine.c1, affine.c2
    comps = []
    masses = []
    for i in range(p + 1):
        coef = scale * math.comb(p, i) * (c1**i) * (c2 ** (p - i))
        m_exp, k_exp = p - i, i
        comps.append((coef, (float(m_exp), float(k_exp))))
        if coef == 0.0:
            masses.append(0.0)
            continue
        mass = coef * quadrature.integrate(
            lambda t, m=m_exp, k=k_exp: np.cos(t) ** m * np.sin(t) ** k,
            affine.interval.lo,
            affine.interval.hi,
            atol=1e-13,
        )
        masses.append(mass)
    return BinomialDecomposition(
        components=tuple(comps), masses=tuple(masses), interval=affine.interval
    )
