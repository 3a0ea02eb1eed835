"""A closed-form counterexample to quarter-period dominance
============================================================

Three configured claims state that on a diameter-pi/2 space every
admissible needle separates no better than

  (a) the best trig-monomial needle C cos^m sin^k on [0, pi/2]
      (with m + k at least dim - 1), and
  (b) for needles with nonnegative binomial coefficients, the best
      component of their own expansion.

Both fail.  The witness is the simplest admissible needle with an interior
maximum: f(t) = C cos(t - pi/4) on [0, pi/2], at masses (0.25, 0.5).  Every
number below is reproduced from elementary closed forms, then confirmed by
the library.

Why it fails: the mixture allocates its extreme-interval masses unevenly
across the expansion components (the left set borrows from the left-heavy
component, the right set from the right-heavy one), so the mixture's
extreme intervals can sit farther apart than any single component allows.
The failure region is narrow -- interior-maximum needles on a near-full
quarter period with the larger mass near 1/2 -- which is exactly what the
seeded verification suite reports.
"""

import math

from needle_iso import (
    CrossSpace,
    Interval,
    SinAffineDensity,
    TrigDensity,
    binomial_decompose,
    cross_needle_bound,
    normalize,
    sep_1d,
)

HALF_PI = math.pi / 2
K1, K2 = 0.25, 0.5

print("closed forms (independent of the library)")
print("-----------------------------------------")
# needle cdf: G(t) = sin(t - pi/4) + sin(pi/4), total mass sqrt(2)
total = 2 * math.sin(math.pi / 4)
q_25 = math.pi / 4 + math.asin(K1 * total - math.sin(math.pi / 4))
q_50 = math.pi / 4  # median of a symmetric needle
needle_sep = q_50 - q_25
print(f"needle cos(t - pi/4) on [0, pi/2]: sep(0.25, 0.5) = {needle_sep:.9f}")

# best competitors in the trig-monomial family (both arrangements):
sin_sep = max(
    math.acos(1 - 0.5) - math.acos(1 - 0.25),  # mass 0.25 left
    math.acos(1 - 0.75) - math.acos(1 - 0.5),  # mass 0.25 right
)
cos_sep = max(math.asin(0.5) - math.asin(0.25), math.asin(0.75) - math.asin(0.5))
print(f"pure sine needle:   sep = {sin_sep:.9f}")
print(f"pure cosine needle: sep = {cos_sep:.9f}")
print(f"closed-form violation margin: {needle_sep - max(sin_sep, cos_sep):.9f}")

print("\nlibrary confirmation")
print("--------------------")
needle = normalize(SinAffineDensity(phase=math.pi / 4, power=1, interval=Interval(0.0, HALF_PI)))
lib_sep = sep_1d(needle, (K1, K2)).sep
bound = cross_needle_bound(
    CrossSpace.complex_projective(1), (K1, K2), max_total_power=8
)
print(f"sep_1d:             {lib_sep:.9f}")
print(f"grid bound (<= 8):  {bound.bound:.9f}  maximizers {list(bound.ties)}")
print(f"margin:             {lib_sep - bound.bound:.9f}")

print("\ncomponent-bound failure for the squared needle")
print("----------------------------------------------")
squared = normalize(SinAffineDensity(phase=math.pi / 4, power=2, interval=Interval(0.0, HALF_PI)))
dec = binomial_decompose(squared)
needle_sep2 = sep_1d(squared, (K1, K2)).sep
print(f"needle cos^2(t - pi/4): sep = {needle_sep2:.9f}")
for coef, (m, k) in dec.components:
    comp = normalize(TrigDensity(m=m, k=k, interval=squared.interval))
    print(
        f"  component cos^{m:g} sin^{k:g} (coefficient {coef:.4f}): "
        f"sep = {sep_1d(comp, (K1, K2)).sep:.9f}"
    )
print("every component separates strictly worse than the mixture.")

print("\nwhere the half-period theory still holds")
print("----------------------------------------")
full_bound = sep_1d(
    normalize(TrigDensity(m=1, k=0, interval=Interval(-HALF_PI, HALF_PI))), (K1, K2)
).sep
print(
    f"the same needle against the half-period cosine bound: "
    f"{lib_sep:.6f} <= {full_bound:.6f} (holds)"
)
