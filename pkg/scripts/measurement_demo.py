#!/usr/bin/env python3
"""Print a few certified enclosures: sqrt(2) as a length, a triangle's angle
sum against pi, and a length measured in two units."""
from fractions import Fraction

from geomkit.measure import LineFrame, angle_measure, length
from geomkit.numeric import pi_enclose
from geomkit.space import Angle, Point

O = Point(0, 0, 0)
UNIT = LineFrame(O, Point(1, 0, 0))


def show(label, iv):
    print(f"{label:28} [{float(iv.lo.value):.15f}, {float(iv.hi.value):.15f}]  width 2^-{iv.m}")


for m in (10, 20, 30):
    show(f"|diagonal| at m={m}", length(O, Point(1, 1, 0), UNIT, m).enclosure)

A, B, C = Point(0, 0, 0), Point(5, 1, 0), Point(Fraction(3, 2), 4, 2)
m = 20
total = (angle_measure(Angle.at(B, A, C), m).interval()
         + angle_measure(Angle.at(A, B, C), m).interval()
         + angle_measure(Angle.at(A, C, B), m).interval())
show("angle sum at m=20", total)
show("pi at m=20", pi_enclose(m))
print("sum encloses pi:", total.lo.value <= pi_enclose(60).lo.value
      and pi_enclose(60).hi.value <= total.hi.value)

half = LineFrame(O, Point(Fraction(1, 2), 0, 0))
P, Q = Point(1, 2, 2), Point(4, 6, 2)
print(f"|PQ| in unit OE: {length(P, Q, UNIT).exact}, in unit OE/2: {length(P, Q, half).exact}")
