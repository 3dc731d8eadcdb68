"""A truncated angle spectrum of the modular surface.

Closed geodesics on H^2 / PSL(2,Z) come from conjugacy classes of
hyperbolic words in S and T. Every crossing angle that is a rational
multiple of pi should have a denominator q with phi(q) <= 2.
"""

import math

from anglespec import build_spectrum, preset

report = build_spectrum(preset("modular"), max_word_len=6, max_trace=12, conj_len=6,
                        qmax=50, eps_rat=1e-6)

print("classes:")
for c in report.classes:
    print(f"  #{c.index}  trace {c.trace:5.1f}  length {c.length:.4f}  word {c.word}")

print(f"\n{len(report.records)} intersection records, {len(report.angle_set)} distinct angles")
for theta, mult in report.angle_set:
    print(f"  {theta:.10f}  ({theta / math.pi:.6f} pi)  x{mult}")

print("\nrational multiples of pi:")
for h in report.rational_hits:
    print(f"  {h.label():>6}  phi({h.q}) = {h.phi_q} <= {h.bound}: {h.ok}")

# pi/2 shows up as a self-crossing at 2 + i, a translate of the cone point i
for r in report.records:
    if abs(r.theta - math.pi / 2) < 1e-9:
        print("\nright angle:", r)
