"""Spherical caps minimize enlarged volume
===========================================

On the round sphere the candidate catalog contains only the ball, and its
enlarged volume reproduces the classical cap formulas exactly.  The
antipodal-cap configuration realizes the needle separation bound, and a
Monte Carlo oracle confirms the cap masses from uniform samples.
"""

import math

from needle_iso import (
    CrossSpace,
    SolveRequest,
    catalog,
    check_main_inequality,
    mc_cap_mass,
    profile_quantile,
    solve_isoperimetric,
    sphere_needle_bound,
    RngSpec,
)

s2 = CrossSpace.sphere(2)
ball = catalog(s2)[0]

print("enlargement of the half-sphere cap on S^2 by eps = 0.2")
res = solve_isoperimetric(SolveRequest(s2, 0.5, 0.2))
print(f"  winner: {res.winner.label}")
print(f"  enlarged volume: {res.enlarged:.6f}  (analytic (1 + sin 0.2)/2 = {(1 + math.sin(0.2)) / 2:.6f})")

print("\nantipodal caps vs the needle bound (masses 0.25 and 0.5):")
rep = check_main_inequality(s2, (0.25, 0.5), mc_samples=100000, seed=2024)
print(f"  cap gap:      {rep['sep_estimate']:.9f}")
print(f"  needle bound: {rep['bound']:.9f}   (pi/6 = {math.pi/6:.9f})")
print(f"  gap <= bound: {rep['ok']}; Monte Carlo within 3 sigma: {rep['mc_within_3_sigma']}")

print("\nMonte Carlo cap masses on S^2 (100000 samples, seed 7):")
for kappa in (0.25, 0.5, 0.75):
    r = float(profile_quantile(ball, s2, kappa))
    est = mc_cap_mass(2, r, 100000, RngSpec(7))
    print(
        f"  cap of mass {kappa:.2f} (radius {r:.4f}): estimate {est['estimate']:.4f}"
        f" +- {est['stderr']:.4f}"
    )

print("\nthe needle bound shrinks with dimension (masses 0.3, 0.6):")
for n in (2, 3, 5, 9):
    print(f"  n = {n}: {sphere_needle_bound(n, (0.3, 0.6)).bound:.6f}")
