"""Warm-up on the integers: the divisibility function and its growth.

For a nonzero integer i, dz(i) is the least modulus m >= 2 with i != 0 mod m;
equivalently the index of the smallest quotient of Z separating i from 0.
farb_z(n) takes the worst case over 1 <= i <= n.  The jumps of farb_z happen
exactly at the running lcm values, which makes the function logarithmic.
"""
from __future__ import annotations

import math

from finquot import dz, farb_z
from finquot.profiler import inequality_audit

print("dz on a few integers")
for i in (1, 2, 6, 12, 30, 60, 420, 2520):
    print(f"  dz({i}) = {dz(i)}")

print("\nfarb_z jumps at lcm(1..m):")
previous = 0
for n in range(1, 1000):
    value = farb_z(n)
    if value != previous:
        print(f"  farb_z({n}) = {value}")
        previous = value

print("\ngrowth against ln n:")
for n in (10**2, 10**3, 10**4, 10**5, 10**6):
    print(f"  n = {n:>8}: farb_z = {farb_z(n):>2}, ratio to ln n = {farb_z(n) / math.log(n):.3f}")

report = inequality_audit(10_000)
print(f"\npigeonhole audit (2n+1 <= F^F) up to 10^4: all_pass={report.all_pass}, "
      f"min ratio {report.min_ratio:.3f} at n={report.min_ratio_at}")
