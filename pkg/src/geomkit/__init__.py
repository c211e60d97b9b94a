"""Exact rational Euclidean geometry in Q^3 with certified measurement."""

from .numeric import (DyadicInterval, QuadraticValue, arccos_enclose, dyadic_approx,
                      pi_enclose, separate, sqrt_enclose)
from .space import Angle, Line, Plane, Point, Ray, Segment, between, collinear
from .congruence import angle_congruent, lay_off, seg_congruent, seg_less, triangle_congruence
from .transforms import (Isometry, Similarity, compose, homothety, invert, reflect_plane,
                         rotation, translation)
from .measure import FreeVector, LineFrame, angle_measure, coordinate, length, vec
from .dsl import parse, print_script, run_text
from .suite import run_axiom_suite

__version__ = "0.1.0"
