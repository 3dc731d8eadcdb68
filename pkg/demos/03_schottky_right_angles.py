"""A Schottky group symmetric under z -> -conj(z).

The reflection fixes the imaginary axis, which is the axis of A. Where
a closed geodesic that is symmetric under the reflection meets that
line, it has to cross at a right angle.
"""

import math

from anglespec import Geodesic, Moebius, angle_cos2, axis, build_spectrum, ping_pong_certificate, preset

gens = preset("symmetric-schottky")
print("ping-pong certificate:", ping_pong_certificate(gens))

b = Moebius(3, 4, 2, 3)
print("axis of B:", axis(b))
print("cos^2 against the imaginary axis:", angle_cos2(axis(b), Geodesic.vertical(0)))

report = build_spectrum(gens, max_word_len=4, max_trace=50, conj_len=4)
words = {c.index: c.word for c in report.classes}
print(f"\n{len(report.classes)} classes, {len(report.records)} records")
for r in report.records:
    if r.theta == math.pi / 2:
        print(f"  {words[r.class_i]} x {words[r.class_j]} at {r.point.z:.6f}")
