"""Angles between closed geodesics on hyperbolic surfaces H^2 / G."""

from .arithmetic import (
    RationalAngle,
    admissible_q,
    cyclotomic_degree,
    detect_rational_pi,
    euler_phi,
    rationality_detect,
    totient_bound_check,
)
from .geometry import (
    Geodesic,
    HPoint,
    NoCrossing,
    angle_cos2,
    crosses,
    hyperbolic_distance,
    intersection_point,
    oriented_angle,
)
from .group import (
    ClosedGeodesicClass,
    EmptyGeneratorSet,
    GeneratorSet,
    UnknownPreset,
    conjugate_generators,
    enumerate_elements,
    hyperbolic_classes,
    ping_pong_certificate,
    preset,
    primitive_root,
)
from .moebius import (
    ElementClass,
    Moebius,
    NotHyperbolic,
    apply,
    axis,
    classify,
    compose,
    fixed_points,
    inverse,
    mirror,
    translation_length,
)
from .spectrum import (
    IntersectionRecord,
    SpectrumReport,
    angle_set,
    build_spectrum,
    surface_intersections,
)

__version__ = "0.1.0"
