"""Profiling how hard separation gets as words grow.

farb_profile sweeps the ball of radius n and records, per radius, the worst
witness bound, the worst exact image order, and the worst over words of the
best reduction (the analogue of dz for matrix groups).  On Z itself the
profile reproduces farb_z exactly; on the Sanov pair it shows the same
logarithmic flavor against exponential ball growth.
"""
from __future__ import annotations

from finquot import (
    ReductionBudget,
    cyclic_group,
    farb_profile,
    farb_z,
    sanov_group,
    subgroup_growth_catalog,
    word_growth,
)

print("Z as a matrix group (powers of [[1,1],[0,1]]):")
cyclic = cyclic_group()
profile = farb_profile(cyclic, 8)
print("  radius | ball | max d_red | farb_z(radius)")
for row in profile.rows:
    print(f"  {row.radius:>6} | {row.ball_size:>4} | {row.max_d_reduction:>9} | {farb_z(row.radius):>3}")
print("  (reductions here are prime quotients, so the profile can exceed")
print("   farb_z, which also admits composite moduli: 5 vs 4 at radius 6)")

print("\nSanov pair, radius 5:")
sanov = sanov_group()
profile = farb_profile(sanov, 5)
print("  radius | ball | max GL bound | max image order | max d_red | exhaustive")
for row in profile.rows:
    print(
        f"  {row.radius:>6} | {row.ball_size:>4} | {row.max_gl_bound:>12} |"
        f" {row.max_image_order:>15} | {row.max_d_reduction:>9} | {row.exhaustive}"
    )

print("\nZ again under a tight budget (primes capped at 3, so a^6 is out of reach):")
capped = farb_profile(cyclic, 6, ReductionBudget(max_prime=3))
row = capped.rows[-1]
print(
    f"  radius 6: max d_red {row.max_d_reduction}, exhaustive={row.exhaustive},"
    f" budget misses {row.budget_misses}"
)

print("\nword growth (ball sizes) for the two groups:")
print(f"  Z:     {word_growth(cyclic, 5)}")
print(f"  Sanov: {word_growth(sanov, 4)}")

print("\nfinite-index subgroups of Z^2 up to index n (sigma sums, checked")
print("against direct Hermite-form enumeration in the test suite):")
for n in (1, 2, 3, 4, 5, 8):
    print(f"  s({n}) = {subgroup_growth_catalog('Z2', n)}")
