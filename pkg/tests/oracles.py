"""Independent reference computations used by the tests.

Nothing here imports the package's numeric routines: square roots are
bisected on plain Fractions, transcendental values come from mpmath at a
precision far beyond the orders under test, and geometry is redone with
explicit determinants.
"""
from fractions import Fraction

import mpmath

mpmath.mp.prec = 400


def mp(q) -> mpmath.mpf:
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def sqrt_bisect(r: Fraction, m: int) -> tuple[Fraction, Fraction]:
    """Largest k/2^m with (k/2^m)^2 <= r, by plain bisection on integers."""
    lo, hi = 0, 1
    while Fraction(hi, 1 << m) ** 2 <= r:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if Fraction(mid, 1 << m) ** 2 <= r:
            lo = mid
        else:
            hi = mid
    return Fraction(lo, 1 << m), Fraction(lo + 1, 1 << m)


def acos(c) -> mpmath.mpf:
    return mpmath.acos(c if isinstance(c, mpmath.mpf) else mp(c))


def quad(base, radicand, sign=1) -> mpmath.mpf:
    return mp(base) + sign * mpmath.sqrt(mp(radicand))


def det3(a, b, c) -> Fraction:
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def sub(P, Q):
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(P, Q))


def dot(u, v) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


def between_oracle(A, B, C) -> bool:
    """B strictly inside [AC] via B = A + t (C - A), 0 < t < 1."""
    u, v = sub(B, A), sub(C, A)
    if all(x == 0 for x in v):
        return False
    cross = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    if any(cross):
        return False
    t = dot(u, v) / dot(v, v)
    return 0 < t < 1


def cos_angle(A, O, B) -> mpmath.mpf:
    u, v = sub(A, O), sub(B, O)
    return mp(dot(u, v)) / mpmath.sqrt(mp(dot(u, u)) * mp(dot(v, v)))
