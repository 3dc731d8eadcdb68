"""Axes of two hyperbolic elements and the angle at which they cross."""

import math

from anglespec import Moebius, angle_cos2, axis, fixed_points, intersection_point, oriented_angle

g = Moebius(2, 1, 1, 1)
h = Moebius(2, -1, -1, 1)

# fixed points come out as (repelling, attracting)
print("fixed points of g:", fixed_points(g))
print("golden ratio:     ", (1 + math.sqrt(5)) / 2)

ag, ah = axis(g), axis(h)
print("axis of g:", ag)
print("axis of h:", ah)

p = intersection_point(ag, ah)
print("they meet at", p.z)

# cos^2 from centers and radii alone, then the angle from tangent vectors
print("cos^2 (closed form):", angle_cos2(ag, ah))
theta = oriented_angle(ag, ah)
print("theta from tangents:", theta, " cos^2 =", math.cos(theta) ** 2)

# swapping the two geodesics turns theta into pi - theta
print("theta + theta' =", theta + oriented_angle(ah, ag))
