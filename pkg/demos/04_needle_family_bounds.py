"""Needle separation bounds and the random-search verifier
===========================================================

The sphere bound is the separation of the cosine-power needle on the full
half period; the diameter-pi/2 bound maximizes over the integer grid of
trig-monomial needles on the quarter period.  A seeded random search over
the sin-affine family probes both claims.
"""

import math

from needle_iso import (
    CrossSpace,
    bound_profile,
    bound_profile_csv,
    cross_needle_bound,
    optimize_affine_family,
    sphere_needle_bound,
)

HALF_PI = math.pi / 2

print("sphere needle bound for a k1-grid at k2 = 0.5:")
rows = bound_profile(
    lambda mp: sphere_needle_bound(2, mp),
    [(k1, 0.5) for k1 in (0.1, 0.2, 0.3, 0.4, 0.5)],
)
print(bound_profile_csv(rows))

cp1 = CrossSpace.complex_projective(1)
res = cross_needle_bound(cp1, (0.25, 0.25), max_total_power=9, force=True)
print(f"quarter-period grid bound at (0.25, 0.25): {res.bound:.6f}")
print(f"  maximizing exponent pairs (ties): {list(res.ties)}")

print("\nrandom search over sin^1-affine needles, support <= pi (10000 draws):")
out = optimize_affine_family(math.pi, {1}, (0.25, 0.5), samples=10000, seed=11)
bound = sphere_needle_bound(2, (0.25, 0.5)).bound
print(f"  best sep found: {out['best_sep']:.9f}")
print(f"  half-period cosine bound: {bound:.9f}")
print(f"  dominated: {out['best_sep'] <= bound + 1e-10}")

print("\nrandom search with support <= pi/2 vs the quarter-period grid bound:")
out = optimize_affine_family(HALF_PI, range(1, 9), (0.3, 0.5), samples=10000, seed=12)
bound = cross_needle_bound(cp1, (0.3, 0.5), max_total_power=8).bound
needle = out["best_needle"]
print(f"  best sep found: {out['best_sep']:.9f}")
print(f"  grid bound:     {bound:.9f}")
print(f"  dominated: {out['best_sep'] <= bound + 1e-10}")
print(
    f"  best needle: phase {needle.phase:.4f}, power {needle.power:g}, "
    f"support [0, {needle.interval.hi:.4f}]"
)
print("  (see demos/05_dominance_counterexample.py for why this one fails)")
