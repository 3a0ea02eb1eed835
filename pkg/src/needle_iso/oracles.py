"""Property-suite driver: every module-level invariant behind one runner.

``run_property_suite`` executes a named set of seeded checks and returns a
machine-readable report.  Reports are byte-stable: identical
``RngSpec`` inputs give identical reports regardless of thread count,
because every randomized check derives its draws from fixed substreams of
the base seed (never from the schedule).

The coverage manifest at the bottom maps each documented invariant to the
check that exercises it; the test suite enforces that the map is total.

Two checks (``needle.cross_dominance``, ``needle.component_bound``) and one
leg of ``density.order_reduction`` encode claimed properties of the
quarter-period comparison family that this package's own oracles refute;
they are kept faithful to the configured claims and report the violations
they find.  See README "Findings".
"""

import json
import math

import numpy as np

from . import quadrature
from .concavity import binomial_decompose, is_sin_concave
from .cross_spaces import (
    CrossSpace,
    catalog,
    enlarged_volume,
    polar_of,
    profile_cdf,
    profile_quantile,
)
from .densities import (
    HALF_PI,
    Interval,
    SinAffineDensity,
    TrigDensity,
    normalize,
)
from .errors import OutOfDomain
from .needle_bound import (
    batch_affine_sep,
    batch_trig_sep,
    cross_needle_bound,
    sphere_needle_bound,
)
from .sampling import as_rng_spec, random_affine_needle
from .separation import MassPair, sep_1d, sep_1d_bruteforce
from .solver import (
    SolveRequest,
    check_main_inequality,
    check_realization,
    solve_isoperimetric,
    solve_with_complement_reduction,
)

_DOM_TOL = 1e-10


def _pyify(obj):
    if isinstance(obj, dict):
        return {k: _pyify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_pyify(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return [_pyify(v) for v in obj.tolist()]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    return obj


def _random_trig(gen, max_exp=5, min_length=0.3, integer_only=True):
    """A random normalized trig density on a random valid sub-interval."""
    m = int(gen.integers(0, max_exp + 1))
    k = int(gen.integers(0, max_exp + 1))
    if not integer_only and gen.uniform() < 0.3:
        m += float(gen.uniform(0, 1))
        k += float(gen.uniform(0, 1))
    if k > 0 and m > 0:
        window = (0.0, HALF_PI)
    elif k > 0:
        window = (0.0, math.pi)
    elif m > 0:
        window = (-HALF_PI, HALF_PI)
    else:
        window = (0.0, 1.0)
    span = window[1] - window[0]
    length = gen.uniform(min_length, min(span, math.pi))
    lo = window[0] + gen.uniform(0.0, span - length)
    return normalize(TrigDensity(m=m, k=k, interval=Interval(lo, lo + length)))


def _straddling_pair(gen, lo=0.05, hi=0.95):
    return MassPair(float(gen.uniform(lo, 0.5)), float(gen.uniform(0.5, hi)))


# ---------------------------------------------------------------------------
# density suite
# ---------------------------------------------------------------------------


def _check_normalization_cross_check(ctx):
    gen = ctx.spec.generator(10)
    worst = 0.0
    for _ in range(8):
        d = _random_trig(gen, integer_only=False)
        total = quadrature.integrate(d.pdf, d.interval.lo, d.interval.hi, atol=1e-13)
        worst = max(worst, abs(total - 1.0))
    for _ in range(4):
        needle = random_affine_needle(math.pi, range(1, 7), gen)
        total = quadrature.integrate(
            needle.pdf, needle.interval.lo, needle.interval.hi, atol=1e-13
        )
        worst = max(worst, abs(total - 1.0))
    return {"passed": worst < 1e-10, "details": {"max_unit_mass_error": worst}}


def _check_quantile_cdf_round_trip(ctx):
    gen = ctx.spec.generator(11)
    q = np.linspace(0.0, 1.0, 1000)
    worst = 0.0
    for _ in range(8):
        d = _random_trig(gen, integer_only=False)
        err = np.max(np.abs(d.cdf(d.quantile(q)) - q))
        worst = max(worst, float(err))
    return {"passed": worst < 1e-9, "details": {"max_round_trip_error": worst}}


def _check_cdf_monotone_lipschitz(ctx):
    gen = ctx.spec.generator(12)
    ok = True
    worst_slack = -np.inf
    for _ in range(8):
        d = _random_trig(gen)
        t = d.interval.grid(512)
        f = d.cdf(t)
        if np.any(np.diff(f) < -1e-12):
            ok = False
        # per-segment mass bounded by the local sup of the density; the
        # 3-point segment max under-reads the true sup by O(dt^2), hence the
        # small relative inflation
        ends = d.pdf(t)
        mids = d.pdf(0.5 * (t[:-1] + t[1:]))
        seg_peak = np.maximum(np.maximum(ends[:-1], ends[1:]), mids)
        slack = np.max(
            np.abs(np.diff(f)) - seg_peak * np.diff(t) * (1 + 1e-6) - 1e-9
        )
        worst_slack = max(worst_slack, float(slack))
        if slack > 0:
            ok = False
    return {"passed": ok, "details": {"max_lipschitz_slack": worst_slack}}


def _check_order_reduction(ctx):
    """Faithful check of the configured claim: passing at order c implies
    passing at every integer order below c.  The package's own oracles
    refute this (pure cosine powers pin their order from below), so this
    check honestly reports the violations it finds."""
    gen = ctx.spec.generator(13)
    violations = 0
    example = None
    for _ in range(100):
        d = _random_trig(gen, max_exp=4, min_length=0.6)
        natural = int(d.m + d.k)
        if natural == 0:
            continue
        passing = [
            n
            for n in range(1, natural + 1)
            if is_sin_concave(d, n, grid_size=256)
        ]
        if not passing:
            continue
        top = max(passing)
        missing = [s for s in range(1, top) if s not in passing]
        if missing:
            violations += 1
            if example is None:
                example = {
                    "m": d.m,
                    "k": d.k,
                    "lo": d.interval.lo,
                    "hi": d.interval.hi,
                    "passes_at": top,
                    "fails_at": missing[:3],
                }
    return {
        "passed": violations == 0,
        "details": {"violations": violations, "example": example},
    }


def _check_order_reduction_within_family_band(ctx):
    """Provable part of order reduction for trig monomials: every order in
    [max(m,k), m+k] passes on any valid interval."""
    gen = ctx.spec.generator(14)
    failures = 0
    for _ in range(40):
        m = int(gen.integers(1, 5))
        k = int(gen.integers(1, 5))
        length = gen.uniform(0.4, HALF_PI)
        lo = gen.uniform(0.0, HALF_PI - length)
        d = normalize(TrigDensity(m=m, k=k, interval=Interval(lo, lo + length)))
        for order in range(max(m, k), m + k + 1):
            if not is_sin_concave(d, order, grid_size=256):
                failures += 1
    return {"passed": failures == 0, "details": {"failures": failures}}


def _check_product_closure(ctx):
    gen = ctx.spec.generator(15)
    failures = 0
    for _ in range(60):
        length = gen.uniform(0.4, HALF_PI)
        lo = gen.uniform(0.0, HALF_PI - length)
        iv = Interval(lo, lo + length)
        p1 = int(gen.integers(1, 5))
        ph1 = gen.uniform(iv.hi - HALF_PI, iv.lo + HALF_PI)
        f = SinAffineDensity(phase=float(ph1), power=p1, interval=iv)
        if gen.uniform() < 0.5:
            p2 = int(gen.integers(1, 5))
            ph2 = gen.uniform(iv.hi - HALF_PI, iv.lo + HALF_PI)
            g = SinAffineDensity(phase=float(ph2), power=p2, interval=iv)
            order2 = p2
        else:
            m2 = int(gen.integers(0, 3))
            k2 = int(gen.integers(0, 3))
            if m2 + k2 == 0:
                m2 = 1
            g = TrigDensity(m=m2, k=k2, interval=iv)
            order2 = m2 + k2

        def product(t, f=f, g=g):
            return np.asarray(f.pdf(t)) * np.asarray(g.pdf(t))

        if not is_sin_concave(product, p1 + order2, interval=iv, grid_size=512):
            failures += 1
    return {"passed": failures == 0, "details": {"failures": failures}}


def _check_binomial_reconstruction(ctx):
    gen = ctx.spec.generator(16)
    worst_err = 0.0
    worst_mass = 0.0
    for p in range(0, 13):
        length = gen.uniform(0.5, HALF_PI)
        lo = gen.uniform(0.0, HALF_PI - length)
        iv = Interval(lo, lo + length)
        phase = gen.uniform(0.0, HALF_PI)  # nonnegative coefficients
        d = normalize(SinAffineDensity(phase=float(phase), power=p, interval=iv))
        dec = binomial_decompose(d)
        worst_err = max(worst_err, dec.max_reconstruction_error(d.pdf))
        worst_mass = max(worst_mass, abs(sum(dec.masses) - 1.0))
    return {
        "passed": worst_err < 1e-10 and worst_mass < 1e-9,
        "details": {
            "max_pointwise_error": worst_err,
            "max_mass_defect": worst_mass,
        },
    }


# ---------------------------------------------------------------------------
# separation suite
# ---------------------------------------------------------------------------


def _check_mass_swap_symmetry(ctx):
    gen = ctx.spec.generator(20)
    exact = True
    for _ in range(30):
        d = _random_trig(gen)
        mp = MassPair(float(gen.uniform(0.05, 0.95)), float(gen.uniform(0.05, 0.95)))
        if sep_1d(d, mp).sep != sep_1d(d, mp.swapped()).sep:
            exact = False
    return {"passed": exact, "details": {}}


def _check_mass_monotonicity(ctx):
    gen = ctx.spec.generator(21)
    ok = True
    grid = np.linspace(0.05, 0.9, 12)
    for _ in range(6):
        d = _random_trig(gen)
        for fixed in (0.2, 0.5):
            seps = [sep_1d(d, MassPair(float(x), fixed)).sep for x in grid]
            if np.any(np.diff(seps) > 1e-12):
                ok = False
            seps = [sep_1d(d, MassPair(fixed, float(x))).sep for x in grid]
            if np.any(np.diff(seps) > 1e-12):
                ok = False
    return {"passed": ok, "details": {}}


def _check_complementary_masses_zero(ctx):
    gen = ctx.spec.generator(22)
    ok = True
    for _ in range(20):
        d = _random_trig(gen)
        k1 = float(gen.uniform(0.1, 0.9))
        k2 = float(gen.uniform(1.0 - k1, 1.0))
        if sep_1d(d, MassPair(k1, k2)).sep != 0.0:
            ok = False
    return {"passed": ok, "details": {}}


def _check_bruteforce_agreement(ctx):
    gen = ctx.spec.generator(23)
    grid_size = 4096
    worst = 0.0
    ok = True
    for _ in range(50):
        d = _random_trig(gen, max_exp=6, min_length=0.4)
        mp = _straddling_pair(gen, lo=0.1, hi=0.9)
        exact = sep_1d(d, mp).sep
        brute = sep_1d_bruteforce(d, mp, grid_size=grid_size)
        tol = 2.0 * d.interval.length / grid_size
        err = abs(exact - brute)
        worst = max(worst, err - tol)
        if err > tol:
            ok = False
    return {"passed": ok, "details": {"worst_excess_over_tolerance": worst}}


def _check_reflection_invariance(ctx):
    gen = ctx.spec.generator(24)
    worst = 0.0
    for _ in range(30):
        needle = random_affine_needle(math.pi, range(1, 6), gen)
        mp = MassPair(float(gen.uniform(0.05, 0.95)), float(gen.uniform(0.05, 0.95)))
        iv = needle.interval
        mirrored = normalize(
            SinAffineDensity(
                phase=(iv.lo + iv.hi) - needle.phase,
                power=needle.power,
                interval=iv,
            )
        )
        worst = max(worst, abs(sep_1d(needle, mp).sep - sep_1d(mirrored, mp).sep))
    return {"passed": worst < 1e-9, "details": {"max_reflection_error": worst}}


# ---------------------------------------------------------------------------
# needle suite
# ---------------------------------------------------------------------------


def _sample_affine_batch(gen, count, length_cap, p_lo, p_hi):
    lengths = gen.uniform(0.05, length_cap, count)
    powers = gen.integers(p_lo, p_hi + 1, count).astype(float)
    phases = gen.uniform(lengths - HALF_PI, HALF_PI)
    return phases, powers, lengths


def _check_sphere_dominance(ctx):
    gen = ctx.spec.generator(30)
    count = 1000
    details = {}
    violations = 0
    # needles of order >= n-1 against the cos^(n-1) needle on the half period
    for n, p_lo in ((2, 1), (3, 2)):
        phases, powers, lengths = _sample_affine_batch(gen, count, math.pi, p_lo, 6)
        k1 = gen.uniform(0.02, 0.5, count)
        k2 = gen.uniform(0.5, 0.98, count)
        needle_seps = batch_affine_sep(phases, powers, 0.0, lengths, k1, k2)
        bound_seps = batch_affine_sep(0.0, float(n - 1), -HALF_PI, HALF_PI, k1, k2)
        margin = needle_seps - bound_seps
        violations += int(np.count_nonzero(margin > 1e-10))
        details[f"max_margin_n{n}"] = float(np.max(margin))
    return {
        "passed": violations == 0,
        "details": {"needles_per_dimension": count, "violations": violations, **details},
    }


def _check_cross_dominance(ctx):
    """Faithful check of the configured claim that the cos^m sin^k family on
    [0, pi/2] dominates every sin^p-affine needle of support <= pi/2.  The
    package's oracles refute the claim near k2 = 1/2; violations are
    reported honestly."""
    gen = ctx.spec.generator(31)
    space = CrossSpace.complex_projective(1)
    pool_k1 = gen.uniform(0.05, 0.5, 20)
    pool_k2 = gen.uniform(0.5, 0.95, 20)
    bounds = np.array(
        [
            cross_needle_bound(space, MassPair(float(a), float(b)), max_total_power=8).bound
            for a, b in zip(pool_k1, pool_k2)
        ]
    )
    count = 1000
    phases, powers, lengths = _sample_affine_batch(gen, count, HALF_PI, 1, 8)
    idx = gen.integers(0, 20, count)
    seps = batch_affine_sep(phases, powers, 0.0, lengths, pool_k1[idx], pool_k2[idx])
    margin = seps - bounds[idx]
    bad = margin > 1e-10
    violations = int(np.count_nonzero(bad))
    worst = None
    if violations:
        w = int(np.argmax(margin))
        worst = {
            "phase": float(phases[w]),
            "power": float(powers[w]),
            "length": float(lengths[w]),
            "k1": float(pool_k1[idx[w]]),
            "k2": float(pool_k2[idx[w]]),
            "sep": float(seps[w]),
            "bound": float(bounds[idx[w]]),
            "margin": float(margin[w]),
        }
    return {
        "passed": violations == 0,
        "details": {"needles": count, "violations": violations, "worst": worst},
    }


def _check_component_bound(ctx):
    """Faithful check of the configured claim that an affine needle with
    nonnegative binomial coefficients separates no better than its best
    decomposition component; refuted by symmetric-peak needles, reported
    honestly."""
    gen = ctx.spec.generator(32)
    violations = 0
    worst = None
    for _ in range(100):
        length = float(gen.uniform(0.3, HALF_PI))
        power = int(gen.integers(1, 7))
        phase = float(gen.uniform(0.0, HALF_PI))
        iv = Interval(0.0, length)
        needle = normalize(SinAffineDensity(phase=phase, power=power, interval=iv))
        mp = _straddling_pair(gen)
        needle_sep = sep_1d(needle, mp).sep
        dec = binomial_decompose(needle)
        ms = np.array([mk[0] for _, mk in dec.components])
        ks = np.array([mk[1] for _, mk in dec.components])
        comp_seps = batch_trig_sep(ms, ks, 0.0, length, mp.k1, mp.k2)
        margin = needle_sep - float(np.max(comp_seps))
        if margin > 1e-10:
            violations += 1
            if worst is None or margin > worst["margin"]:
                worst = {
                    "phase": phase,
                    "power": power,
                    "length": length,
                    "k1": mp.k1,
                    "k2": mp.k2,
                    "needle_sep": needle_sep,
                    "best_component_sep": float(np.max(comp_seps)),
                    "margin": margin,
                }
    return {
        "passed": violations == 0,
        "details": {"violations": violations, "worst": worst},
    }


def _check_power_monotonicity_observation(ctx):
    """Numerical observation (logged, never asserted): per-(m,k) separation
    shrinks as m+k grows with the m/k ratio fixed."""
    mp = MassPair(0.3, 0.6)
    data = {}
    monotone = True
    for base in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        seq = []
        for scale in range(1, 6):
            m, k = base[0] * scale, base[1] * scale
            seq.append(float(batch_trig_sep(m, k, 0.0, HALF_PI, mp.k1, mp.k2)))
        data[f"{base[0]}:{base[1]}"] = seq
        if np.any(np.diff(seq) > 1e-12):
            monotone = False
    return {
        "passed": True,
        "details": {"observed_monotone": monotone, "sequences": data},
    }


def _check_sphere_bound_dimension_monotone(ctx):
    ok = True
    for mp in [MassPair(0.2, 0.5), MassPair(0.3, 0.7), MassPair(0.5, 0.5)]:
        seq = [sphere_needle_bound(n, mp).bound for n in range(2, 11)]
        if np.any(np.diff(seq) > 1e-12):
            ok = False
    return {"passed": ok, "details": {}}


# ---------------------------------------------------------------------------
# spaces suite
# ---------------------------------------------------------------------------


def _suite_spaces():
    spaces = [CrossSpace.real_projective(n) for n in range(2, 9)]
    spaces += [CrossSpace.complex_projective(n) for n in range(1, 4)]
    spaces += [CrossSpace.quaternionic_projective(n) for n in range(1, 4)]
    spaces.append(CrossSpace.cayley_plane())
    return spaces


def _check_polar_duality_identity(ctx):
    worst = 0.0
    r = np.linspace(0.0, HALF_PI, 257)
    for space in _suite_spaces():
        for cand in catalog(space):
            polar = polar_of(cand, space)
            total = profile_cdf(cand, space, r) + profile_cdf(polar, space, HALF_PI - r)
            worst = max(worst, float(np.max(np.abs(total - 1.0))))
    return {"passed": worst < _DOM_TOL, "details": {"max_duality_error": worst}}


def _check_low_dim_sphere_coincidence(ctx):
    r = np.linspace(0.0, HALF_PI, 1000)
    cp1 = CrossSpace.complex_projective(1)
    err_cp1 = np.max(
        np.abs(profile_cdf(catalog(cp1)[0], cp1, r) - 0.5 * (1.0 - np.cos(2 * r)))
    )
    hp1 = CrossSpace.quaternionic_projective(1)
    c = np.cos(2 * r)
    s4_cap = (2.0 - 3.0 * c + c**3) / 4.0
    err_hp1 = np.max(np.abs(profile_cdf(catalog(hp1)[0], hp1, r) - s4_cap))
    cap2 = CrossSpace.cayley_plane()
    ball, tube = catalog(cap2)
    err_cap = np.max(
        np.abs(
            profile_cdf(tube, cap2, r) + profile_cdf(ball, cap2, HALF_PI - r) - 1.0
        )
    )
    worst = float(max(err_cp1, err_hp1, err_cap))
    return {
        "passed": worst < 1e-9,
        "details": {
            "cp1_vs_s2": float(err_cp1),
            "hp1_vs_s4": float(err_hp1),
            "cap1_complement_consistency": float(err_cap),
        },
    }


def _check_exponent_admissibility(ctx):
    ok = True
    for space in _suite_spaces() + [CrossSpace.sphere(n) for n in (2, 3, 7)]:
        for cand in catalog(space):
            if cand.a + cand.b < space.dim - 1:
                ok = False
    return {"passed": ok, "details": {}}


def _check_profile_monotone_inverse(ctx):
    worst = 0.0
    ok = True
    v = np.linspace(0.0, 1.0, 201)
    for space in _suite_spaces()[:6] + [CrossSpace.sphere(3)]:
        for cand in catalog(space):
            r = np.linspace(0.0, space.diameter, 201)
            f = profile_cdf(cand, space, r)
            if np.any(np.diff(f) < 0):
                ok = False
            # strict increase wherever the increments are representable
            interior = (f[:-1] > 1e-9) & (f[1:] < 1 - 1e-9)
            if np.any(np.diff(f)[interior] <= 0):
                ok = False
            q = profile_quantile(cand, space, v)
            worst = max(worst, float(np.max(np.abs(profile_cdf(cand, space, q) - v))))
    return {
        "passed": ok and worst < 1e-9,
        "details": {"max_inverse_error": worst},
    }


# ---------------------------------------------------------------------------
# solver suite
# ---------------------------------------------------------------------------


def _solver_spaces():
    return [
        CrossSpace.sphere(2),
        CrossSpace.real_projective(3),
        CrossSpace.complex_projective(2),
        CrossSpace.quaternionic_projective(2),
        CrossSpace.cayley_plane(),
    ]


def _check_winner_in_catalog(ctx):
    ok = True
    for space in _solver_spaces():
        labels = {c.label for c in catalog(space)}
        for v in (0.1, 0.3, 0.5):
            for eps in (0.05, 0.2):
                res = solve_isoperimetric(SolveRequest(space, v, eps))
                if res.winner.label not in labels or not res.co_winners:
                    ok = False
    return {"passed": ok, "details": {}}


def _check_complement_reduction_duality(ctx):
    ok = True
    worst = 0.0
    for space in [CrossSpace.real_projective(3), CrossSpace.complex_projective(2)]:
        for v in (0.55, 0.7):
            eps = 0.05
            res = solve_with_complement_reduction(space, v, eps)
            direct = min(
                enlarged_volume(c, space, v, eps) for c in catalog(space)
            )
            worst = max(worst, abs(res.enlarged - direct))
            if abs(res.enlarged - direct) > 1e-10:
                ok = False
            w = 1.0 - res.enlarged
            if w > 1e-6:
                dual = solve_isoperimetric(SolveRequest(space, w, eps))
                polar_labels = {polar_of(c, space).label for c in res.co_winners}
                if not polar_labels & {c.label for c in dual.co_winners}:
                    ok = False
    return {"passed": ok, "details": {"max_direct_gap": worst}}


def _check_enlargement_monotonicity(ctx):
    ok = True
    for space in [CrossSpace.real_projective(3), CrossSpace.complex_projective(2)]:
        for cand in catalog(space):
            vals = [enlarged_volume(cand, space, 0.3, e) for e in np.linspace(0.02, 0.3, 8)]
            if np.any(np.diff(vals) <= 1e-12):
                ok = False
            vals = [enlarged_volume(cand, space, v, 0.05) for v in np.linspace(0.05, 0.45, 8)]
            if np.any(np.diff(vals) <= 1e-12):
                ok = False
    return {"passed": ok, "details": {}}


def _check_needle_bound_consistency(ctx):
    ok = True
    worst_sphere = 0.0
    realized = 0
    skipped = 0
    for n in (2, 3, 7):
        space = CrossSpace.sphere(n)
        for v in (0.1, 0.3, 0.5):
            res = solve_isoperimetric(SolveRequest(space, v, 0.1))
            check = res.needle_bound_check
            if check["bound"] is None:
                continue
            worst_sphere = max(worst_sphere, check["residual"])
            if check["residual"] >= 1e-6:
                ok = False
    for space in [CrossSpace.real_projective(3), CrossSpace.complex_projective(2)]:
        for v in (0.2, 0.4):
            res = solve_isoperimetric(SolveRequest(space, v, 0.05))
            check = res.needle_bound_check
            w = check["w"]
            if w <= 1e-9:
                continue
            real = check_realization(space, res.winner, (v, w))
            if real["realizes"]:
                realized += 1
                if check["residual"] >= 1e-6:
                    ok = False
            else:
                skipped += 1
    return {
        "passed": ok,
        "details": {
            "max_sphere_residual": worst_sphere,
            "cross_realized": realized,
            "cross_not_realized": skipped,
        },
    }


def _check_request_determinism(ctx):
    reqs = [
        (CrossSpace.real_projective(3), 0.3, 0.05),
        (CrossSpace.sphere(2), 0.25, 0.2),
    ]
    ok = True
    for space, v, eps in reqs:
        a = json.dumps(solve_isoperimetric(SolveRequest(space, v, eps)).to_dict(), sort_keys=True)
        b = json.dumps(solve_isoperimetric(SolveRequest(space, v, eps)).to_dict(), sort_keys=True)
        if a != b:
            ok = False
    s2 = CrossSpace.sphere(2)
    m1 = check_main_inequality(
        s2, (0.3, 0.5), mc_samples=ctx.mc_samples, seed=ctx.spec.seed, threads=ctx.threads
    )
    m2 = check_main_inequality(
        s2, (0.3, 0.5), mc_samples=ctx.mc_samples, seed=ctx.spec.seed, threads=1
    )
    if json.dumps(m1, sort_keys=True) != json.dumps(m2, sort_keys=True):
        ok = False
    return {"passed": ok, "details": {}}


def _check_main_inequality_mc(ctx):
    ok = True
    results = {}
    for n in (2, 3):
        space = CrossSpace.sphere(n)
        for mp in [(0.3, 0.5), (0.25, 0.5)]:
            rep = check_main_inequality(
                space,
                mp,
                mc_samples=ctx.mc_samples,
                seed=ctx.spec.seed,
                threads=ctx.threads,
            )
            key = f"s{n}_{mp[0]}_{mp[1]}"
            results[key] = {
                "sep": rep["sep_estimate"],
                "bound": rep["bound"],
                "ok": rep["ok"],
                "mc_ok": rep["mc_within_3_sigma"],
            }
            if not (rep["ok"] and rep["mc_within_3_sigma"]):
                ok = False
            if abs(rep["sep_estimate"] - rep["bound"]) > 1e-9:
                ok = False
    return {"passed": ok, "details": results}


# ---------------------------------------------------------------------------
# registry, coverage manifest, runner
# ---------------------------------------------------------------------------


class _Ctx:
    def __init__(self, spec, threads, mc_samples):
        self.spec = spec
        self.threads = threads
        self.mc_samples = mc_samples


_REGISTRY = [
    ("density.normalization_cross_check", "density", _check_normalization_cross_check),
    ("density.quantile_cdf_round_trip", "density", _check_quantile_cdf_round_trip),
    ("density.cdf_monotone_lipschitz", "density", _check_cdf_monotone_lipschitz),
    ("density.order_reduction", "density", _check_order_reduction),
    (
        "density.order_reduction_within_family_band",
        "density",
        _check_order_reduction_within_family_band,
    ),
    ("density.product_closure", "density", _check_product_closure),
    ("density.binomial_reconstruction", "density", _check_binomial_reconstruction),
    ("separation.mass_swap_symmetry", "separation", _check_mass_swap_symmetry),
    ("separation.mass_monotonicity", "separation", _check_mass_monotonicity),
    (
        "separation.complementary_masses_zero",
        "separation",
        _check_complementary_masses_zero,
    ),
    ("separation.bruteforce_agreement", "separation", _check_bruteforce_agreement),
    ("separation.reflection_invariance", "separation", _check_reflection_invariance),
    ("needle.sphere_dominance", "needle", _check_sphere_dominance),
    ("needle.cross_dominance", "needle", _check_cross_dominance),
    ("needle.component_bound", "needle", _check_component_bound),
    (
        "needle.power_monotonicity_observation",
        "needle",
        _check_power_monotonicity_observation,
    ),
    (
        "needle.sphere_bound_dimension_monotone",
        "needle",
        _check_sphere_bound_dimension_monotone,
    ),
    ("spaces.polar_duality_identity", "spaces", _check_polar_duality_identity),
    ("spaces.low_dim_sphere_coincidence", "spaces", _check_low_dim_sphere_coincidence),
    ("spaces.exponent_admissibility", "spaces", _check_exponent_admissibility),
    ("spaces.profile_monotone_inverse", "spaces", _check_profile_monotone_inverse),
    ("solver.winner_in_catalog", "solver", _check_winner_in_catalog),
    (
        "solver.complement_reduction_duality",
        "solver",
        _check_complement_reduction_duality,
    ),
    ("solver.enlargement_monotonicity", "solver", _check_enlargement_monotonicity),
    ("solver.needle_bound_consistency", "solver", _check_needle_bound_consistency),
    ("solver.request_determinism", "solver", _check_request_determinism),
    ("solver.main_inequality_mc", "solver", _check_main_inequality_mc),
]

SUITE_NAMES = ("density", "separation", "needle", "spaces", "solver", "all")

# Every documented module invariant maps to the check exercising it.
INVARIANT_COVERAGE = {
    "density_core/quantile_cdf_round_trip": "density.quantile_cdf_round_trip",
    "density_core/monotone_order_reduction": "density.order_reduction",
    "density_core/product_closure": "density.product_closure",
    "density_core/decomposition_reconstruction": "density.binomial_reconstruction",
    "density_core/cdf_monotone_lipschitz": "density.cdf_monotone_lipschitz",
    "separation_1d/mass_swap_symmetry": "separation.mass_swap_symmetry",
    "separation_1d/mass_monotonicity": "separation.mass_monotonicity",
    "separation_1d/complementary_masses_zero": "separation.complementary_masses_zero",
    "separation_1d/bruteforce_agreement": "separation.bruteforce_agreement",
    "separation_1d/reflection_invariance": "separation.reflection_invariance",
    "needle_bound/sphere_dominance": "needle.sphere_dominance",
    "needle_bound/cross_dominance": "needle.cross_dominance",
    "needle_bound/power_monotonicity": "needle.power_monotonicity_observation",
    "needle_bound/component_bound": "needle.component_bound",
    "needle_bound/dimension_monotonicity": "needle.sphere_bound_dimension_monotone",
    "cross_spaces/duality_identity": "spaces.polar_duality_identity",
    "cross_spaces/coincidence_oracle": "spaces.low_dim_sphere_coincidence",
    "cross_spaces/exponent_admissibility": "spaces.exponent_admissibility",
    "cross_spaces/profile_monotone_inverse": "spaces.profile_monotone_inverse",
    "isoperimetry_solver/winner_containment": "solver.winner_in_catalog",
    "isoperimetry_solver/complement_reduction_consistency": "solver.complement_reduction_duality",
    "isoperimetry_solver/enlargement_monotonicity": "solver.enlargement_monotonicity",
    "isoperimetry_solver/needle_bound_consistency": "solver.needle_bound_consistency",
    "isoperimetry_solver/determinism": "solver.request_determinism",
}


def suite_check_names(suite):
    if suite not in SUITE_NAMES:
        raise OutOfDomain(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    return [
        name
        for name, group, _ in _REGISTRY
        if suite == "all" or group == suite
    ]


def run_property_suite(suite, rng, threads=1, mc_samples=100000):
    """Run a named invariant suite; the report is byte-stable per seed.

    The report never contains wall-clock data or the thread count, so runs
    with different parallelism compare equal byte-for-byte.
    """
    spec = as_rng_spec(rng)
    ctx = _Ctx(spec, threads, mc_samples)
    selected = [
        (name, fn)
        for name, group, fn in _REGISTRY
        if suite == "all" or group == suite
    ]
    if not selected:
        raise OutOfDomain(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    checks = []
    for name, fn in selected:
        out = fn(ctx)
        checks.append(
            {
                "name": name,
                "passed": bool(out["passed"]),
                "details": _pyify(out["details"]),
            }
        )
    failures = [c["name"] for c in checks if not c["passed"]]
    return {
        "suite": suite,
        "seed": spec.seed,
        "algorithm": spec.algorithm,
        "mc_samples": mc_samples,
        "checks": checks,
        "pass_count": len(checks) - len(failures),
        "fail_count": len(failures),
        "failures": failures,
    }


def report_to_json(report):
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
