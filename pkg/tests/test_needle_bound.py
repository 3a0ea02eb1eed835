import math

import numpy as np
import pytest

from needle_iso import (
    CrossSpace,
    HypothesisViolated,
    Interval,
    MassPair,
    NotApplicable,
    OutOfDomain,
    SinAffineDensity,
    TrigDensity,
    batch_affine_sep,
    batch_trig_sep,
    binomial_decompose,
    bound_profile,
    bound_profile_csv,
    cross_needle_bound,
    normalize,
    optimize_affine_family,
    sep_1d,
    sphere_needle_bound,
)

HALF_PI = math.pi / 2
CP1 = CrossSpace.complex_projective(1)


class TestSphereBound:
    def test_medians_give_zero(self):
        assert sphere_needle_bound(2, (0.5, 0.5)).bound == 0.0

    def test_quarter_half_closed_form(self):
        # oracle: quantiles of (1 + sin t)/2 at 0.25 and 0.5 -> pi/6
        res = sphere_needle_bound(2, (0.25, 0.5))
        assert res.bound == pytest.approx(math.pi / 6, abs=1e-9)
        assert res.hypothesis_satisfied

    def test_straddle_hypothesis_enforced(self):
        with pytest.raises(HypothesisViolated):
            sphere_needle_bound(2, (0.25, 0.25))

    def test_forced_non_straddling_value(self):
        res = sphere_needle_bound(2, (0.25, 0.25), force=True)
        assert res.bound == pytest.approx(math.pi / 3, abs=1e-9)
        assert not res.hypothesis_satisfied

    def test_bound_equals_sep_of_reported_needle(self):
        res = sphere_needle_bound(4, (0.3, 0.6))
        m, k = res.argmax
        needle = normalize(TrigDensity(m=m, k=k, interval=Interval(-HALF_PI, HALF_PI)))
        assert res.bound == pytest.approx(sep_1d(needle, (0.3, 0.6)).sep, abs=1e-9)

    def test_nonincreasing_in_dimension(self):
        for mp in [(0.2, 0.5), (0.3, 0.7)]:
            seq = [sphere_needle_bound(n, mp).bound for n in range(2, 11)]
            assert all(a >= b - 1e-12 for a, b in zip(seq, seq[1:]))

    def test_dimension_floor(self):
        with pytest.raises(OutOfDomain):
            sphere_needle_bound(1, (0.3, 0.5))


class TestCrossBound:
    def test_cp1_quarter_masses(self):
        # oracle: invert F = sin t and F = 1 - cos t at 0.25 / 0.75;
        # both mirror needles tie at asin(3/4) - asin(1/4)
        res = cross_needle_bound(CP1, (0.25, 0.25), max_total_power=9, force=True)
        expect = math.asin(0.75) - math.asin(0.25)
        assert res.bound == pytest.approx(expect, abs=1e-9)
        assert res.ties == ((0, 1), (1, 0))

    def test_medians_give_zero(self):
        for space in [CP1, CrossSpace.real_projective(3), CrossSpace.cayley_plane()]:
            assert cross_needle_bound(space, (0.5, 0.5)).bound == pytest.approx(
                0.0, abs=1e-12
            )

    def test_rp3_argmax_at_admissibility_floor(self):
        res = cross_needle_bound(CrossSpace.real_projective(3), (0.2, 0.5), max_total_power=10)
        assert res.ties == ((0, 2), (2, 0))
        assert res.bound == pytest.approx(0.3415640573884551, abs=1e-9)

    def test_bound_equals_sep_of_reported_needle(self):
        space = CrossSpace.complex_projective(2)
        res = cross_needle_bound(space, (0.3, 0.5))
        m, k = res.argmax
        needle = normalize(TrigDensity(m=m, k=k, interval=Interval(0.0, HALF_PI)))
        assert res.bound == pytest.approx(sep_1d(needle, (0.3, 0.5)).sep, abs=1e-9)

    def test_sphere_routed_elsewhere(self):
        with pytest.raises(NotApplicable):
            cross_needle_bound(CrossSpace.sphere(2), (0.3, 0.5))

    def test_power_cap_below_floor(self):
        with pytest.raises(OutOfDomain):
            cross_needle_bound(CrossSpace.cayley_plane(), (0.3, 0.5), max_total_power=8)


class TestBatchHelpers:
    def test_batch_affine_matches_scalar(self):
        gen = np.random.Generator(np.random.PCG64(5))
        for _ in range(10):
            length = float(gen.uniform(0.3, math.pi))
            phase = float(gen.uniform(length - HALF_PI, HALF_PI))
            power = float(gen.integers(1, 7))
            mp = (float(gen.uniform(0.1, 0.5)), float(gen.uniform(0.5, 0.9)))
            needle = normalize(
                SinAffineDensity(phase=phase, power=power, interval=Interval(0.0, length))
            )
            scalar = sep_1d(needle, mp).sep
            batch = float(batch_affine_sep(phase, power, 0.0, length, mp[0], mp[1]))
            assert batch == pytest.approx(scalar, abs=1e-12)

    def test_batch_trig_matches_scalar(self):
        gen = np.random.Generator(np.random.PCG64(6))
        for _ in range(10):
            m = int(gen.integers(0, 5))
            k = int(gen.integers(0, 5))
            mp = (float(gen.uniform(0.1, 0.5)), float(gen.uniform(0.5, 0.9)))
            needle = normalize(TrigDensity(m=m, k=k, interval=Interval(0.0, HALF_PI)))
            scalar = sep_1d(needle, mp).sep
            batch = float(batch_trig_sep(m, k, 0.0, HALF_PI, mp[0], mp[1]))
            assert batch == pytest.approx(scalar, abs=1e-12)

    def test_batch_trig_rejects_bad_window(self):
        with pytest.raises(OutOfDomain):
            batch_trig_sep(1.0, 1.0, 0.0, 2.0, 0.3, 0.6)


class TestOptimizer:
    def test_search_confirms_half_period_dominance(self):
        # every sin^1-affine needle with support <= pi is dominated by the
        # full-interval cosine needle
        out = optimize_affine_family(
            math.pi, {1}, (0.25, 0.5), samples=10000, seed=11
        )
        bound = sphere_needle_bound(2, (0.25, 0.5)).bound
        assert out["best_sep"] <= bound + 1e-10

    def test_equal_halves_give_zero(self):
        out = optimize_affine_family(math.pi, {1, 2}, (0.5, 0.5), samples=2000, seed=3)
        assert out["best_sep"] == pytest.approx(0.0, abs=1e-12)

    def test_deterministic_for_fixed_seed(self):
        a = optimize_affine_family(HALF_PI, {2, 3}, (0.3, 0.5), samples=500, seed=9)
        b = optimize_affine_family(HALF_PI, {2, 3}, (0.3, 0.5), samples=500, seed=9)
        assert a["best_sep"] == b["best_sep"]
        assert np.array_equal(a["all_samples"]["sep"], b["all_samples"]["sep"])

    def test_best_needle_reproduces_best_sep(self):
        out = optimize_affine_family(HALF_PI, {1, 2, 3}, (0.3, 0.5), samples=300, seed=4)
        assert sep_1d(out["best_needle"], (0.3, 0.5)).sep == pytest.approx(
            out["best_sep"], abs=1e-12
        )

    def test_search_stays_below_quarter_period_family_bound(self):
        # KNOWN FINDING (kept faithful to the configured claim): the random
        # search over sin^p-affine needles with support <= pi/2 is expected
        # to stay below the cos^m sin^k grid bound, but needles with an
        # interior maximum exceed it near k2 = 1/2.  See README "Findings"
        # and demos/05_dominance_counterexample.py.
        out = optimize_affine_family(
            HALF_PI, range(2, 7), (0.3, 0.5), samples=10000, seed=12
        )
        bound = cross_needle_bound(CP1, (0.3, 0.5), max_total_power=6).bound
        assert out["best_sep"] <= bound + 1e-10, (
            f"random affine needle separates {out['best_sep']:.9f} > grid bound "
            f"{bound:.9f}; the quarter-period trig family does not dominate"
        )


class TestKnownFindingDominance:
    def test_quarter_period_family_dominates_affine_needles(self):
        # KNOWN FINDING: the shifted-cosine needle cos(t - pi/4) on
        # [0, pi/2] (a valid admissible needle: power 1 >= dim - 1) has
        # separation asin selected by closed forms ~0.36137 at masses
        # (0.25, 0.5), exceeding the best quarter-period trig needle
        # (~0.32446).  The configured dominance claim is kept faithful here
        # and fails; see README "Findings".
        needle = normalize(
            SinAffineDensity(phase=math.pi / 4, power=1, interval=Interval(0.0, HALF_PI))
        )
        sep = sep_1d(needle, (0.25, 0.5)).sep
        bound = cross_needle_bound(CP1, (0.25, 0.5), max_total_power=8).bound
        assert sep <= bound + 1e-10, (
            f"needle sep {sep:.9f} exceeds grid bound {bound:.9f} "
            f"(margin {sep - bound:.9f})"
        )

    def test_needle_bounded_by_best_decomposition_component(self):
        # KNOWN FINDING: mixtures can separate strictly better than every
        # component; cos^2(t - pi/4) on [0, pi/2] at masses (0.25, 0.5)
        # beats all three of its binomial components.  Kept faithful to the
        # configured claim; fails.  See README "Findings".
        needle = normalize(
            SinAffineDensity(phase=math.pi / 4, power=2, interval=Interval(0.0, HALF_PI))
        )
        mp = MassPair(0.25, 0.5)
        needle_sep = sep_1d(needle, mp).sep
        dec = binomial_decompose(needle)
        comp_seps = [
            sep_1d(
                normalize(TrigDensity(m=mk[0], k=mk[1], interval=needle.interval)), mp
            ).sep
            for coef, mk in dec.components
            if coef > 0
        ]
        assert needle_sep <= max(comp_seps) + 1e-10, (
            f"needle sep {needle_sep:.9f} exceeds best component sep "
            f"{max(comp_seps):.9f}"
        )


class TestBoundProfile:
    def test_sphere_slice_is_decreasing_to_zero(self):
        pairs = [(k1, 0.5) for k1 in np.linspace(0.1, 0.5, 5)]
        rows = bound_profile(lambda mp: sphere_needle_bound(2, mp), pairs)
        bounds = [r["bound"] for r in rows]
        assert all(a > b for a, b in zip(bounds, bounds[1:]))
        assert bounds[-1] == pytest.approx(0.0, abs=1e-12)

    def test_single_cell(self):
        rows = bound_profile(lambda mp: sphere_needle_bound(2, mp), [(0.3, 0.5)])
        assert len(rows) == 1
        assert rows[0]["family"] == "sphere-cos" and rows[0]["m"] == 1

    def test_cp2_grid_symmetric_under_swap(self):
        space = CrossSpace.complex_projective(2)
        grid = [0.1, 0.3, 0.5, 0.7, 0.9]
        pairs = [(a, b) for a in grid for b in grid]
        rows = bound_profile(
            lambda mp: cross_needle_bound(space, mp, force=True), pairs
        )
        assert len(rows) == 25
        by_pair = {(r["k1"], r["k2"]): r["bound"] for r in rows}
        for a in grid:
            for b in grid:
                assert by_pair[(a, b)] == pytest.approx(by_pair[(b, a)], abs=1e-12)

    def test_csv_emission(self):
        rows = bound_profile(lambda mp: sphere_needle_bound(2, mp), [(0.25, 0.5)])
        text = bound_profile_csv(rows)
        lines = text.splitlines()
        assert lines[0] == "k1,k2,bound,family,m,k"
        assert lines[1].startswith("0.25,0.5,")
        assert text.endswith("\n")
