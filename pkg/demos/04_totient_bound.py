"""Which denominators q can a rational angle p pi / q have?

exp(2 i p pi / q) has degree phi(q) over the rationals, and the angle
ties it to the entries of the group, so phi(q) <= 2 d where d bounds the
degree of the entry field. Integer matrices give d = 1.
"""

from anglespec import admissible_q, detect_rational_pi, euler_phi

for q in range(1, 13):
    print(f"phi({q:2d}) = {euler_phi(q)}")

for d in (1, 2, 3):
    print(f"degree bound {d}: q in {admissible_q(d)}")

# recovering p/q from a float
for theta in (1.0471975511965979, 2.356194490192345, 1.0):
    hit = detect_rational_pi(theta, qmax=50, eps=1e-9)
    print(theta, "->", hit.label() if hit else "not a rational multiple of pi")
