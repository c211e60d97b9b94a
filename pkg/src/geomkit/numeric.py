"""Exact rationals, dyadic approximations and certified enclosures.

Rationals are :class:`fractions.Fraction`.  Irrational quantities that the
geometry produces (lengths, cosines) are carried exactly as
:class:`QuadraticValue` and turned into dyadic enclosures on demand.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Union

Rational = Fraction
DEFAULT_ORDER = 53


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not an exact rational: {x!r}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def fmt_rational(q) -> str:
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


def is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def exact_sqrt(q: Fraction) -> Fraction:
    if not is_square(q):
        raise ValueError(f"{q} is not a rational square")
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_single(p: Fraction, s: int, r: Fraction) -> int:
    """Sign of p + s*sqrt(r), r >= 0."""
    if r == 0 or s == 0:
        return _sign(p)
    if p == 0 or _sign(p) == s:
        return s
    # opposite signs: compare magnitudes by squares
    return _sign(p * p - r) * _sign(p) if p * p != r else 0


def _sign_double(p: Fraction, s: int, r: Fraction, t: int, u: Fraction) -> int:
    """Sign of p + s*sqrt(r) + t*sqrt(u)."""
    if r == 0 or s == 0:
        return _sign_single(p, t, u)
    if u == 0 or t == 0:
        return _sign_single(p, s, r)
    if s == t:
        sa = s
    else:
        sa = s if r > u else (t if u > r else 0)
    if sa == 0:
        return _sign(p)
    if p == 0 or _sign(p) == sa:
        return sa
    # |A|^2 - p^2 with A = s*sqrt(r) + t*sqrt(u)
    d = _sign_single(r + u - p * p, s * t, 4 * r * u)
    return sa if d > 0 else (_sign(p) if d < 0 else 0)


@total_ordering
@dataclass(frozen=True, eq=False)
class QuadraticValue:
    """The real number ``base + sign * sqrt(radicand)``."""

    base: Fraction
    radicand: Fraction = Fraction(0)
    sign: int = 1

    def __post_init__(self):
        base = as_rational(self.base)
        rad = as_rational(self.radicand)
        if rad < 0:
            raise ValueError("negative radicand")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        sign = self.sign
        if is_square(rad):
            base += sign * exact_sqrt(rad)
            rad, sign = Fraction(0), 1
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "radicand", rad)
        object.__setattr__(self, "sign", sign)

    @classmethod
    def sqrt(cls, r) -> QuadraticValue:
        return cls(Fraction(0), as_rational(r), 1)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.base

    def signum(self) -> int:
        return _sign_single(self.base, self.sign, self.radicand)

    def compare(self, other) -> int:
        """Exact sign of ``self - other``."""
        if isinstance(other, QuadraticValue):
            return _sign_double(self.base - other.base, self.sign, self.radicand,
                                -other.sign, other.radicand)
        return _sign_single(self.base - as_rational(other), self.sign, self.radicand)

    def __eq__(self, other):
        if not isinstance(other, (QuadraticValue, Fraction, int)):
            return NotImplemented
        return self.compare(other) == 0

    def __lt__(self, other):
        if not isinstance(other, (QuadraticValue, Fraction, int)):
            return NotImplemented
        return self.compare(other) < 0

    __hash__ = None

    def __neg__(self) -> QuadraticValue:
        return QuadraticValue(-self.base, self.radicand, -self.sign)

    def __add__(self, other) -> QuadraticValue:
        if isinstance(other, QuadraticValue):
            if other.is_rational:
                other = other.base
            elif self.is_rational:
                return other + self.base
            else:
                return NotImplemented
        return QuadraticValue(self.base + as_rational(other), self.radicand, self.sign)

    __radd__ = __add__

    def __sub__(self, other) -> QuadraticValue:
        return self + (-other)

    def __rsub__(self, other) -> QuadraticValue:
        return (-self) + other

    def __mul__(self, k) -> QuadraticValue:
        if isinstance(k, QuadraticValue):
            if not k.is_rational:
                return NotImplemented
            k = k.base
        k = as_rational(k)
        if k == 0:
            return QuadraticValue(Fraction(0))
        return QuadraticValue(self.base * k, self.radicand * k * k, self.sign * _sign(k))

    __rmul__ = __mul__

    def __truediv__(self, k) -> QuadraticValue:
        return self * (1 / as_rational(k))

    def __float__(self) -> float:
        return float(self.base) + self.sign * math.sqrt(self.radicand)

    def floor(self) -> int:
        if self.is_rational:
            return math.floor(self.base)
        bd = self.base.denominator
        # s*sqrt(r) = s*sqrt(P*Q)/(Q*bd) with bd^2*r = P/Q
        scaled = self.radicand * bd * bd
        p, q = scaled.numerator, scaled.denominator
        root = math.isqrt(p * q)
        lo = self.base + self.sign * Fraction(root if self.sign > 0 else root + 1, q * bd)
        k = math.floor(lo)
        return k + 1 if self.compare(k + 1) >= 0 else k

    def to_json(self) -> dict:
        return {"base": fmt_rational(self.base), "sign": self.sign,
                "radicand": fmt_rational(self.radicand)}

    def __str__(self) -> str:
        if self.is_rational:
            return fmt_rational(self.base)
        op = "+" if self.sign > 0 else "-"
        if self.base == 0:
            return f"{'' if self.sign > 0 else '-'}sqrt({fmt_rational(self.radicand)})"
        return f"{fmt_rational(self.base)} {op} sqrt({fmt_rational(self.radicand)})"


Exact = Union[Fraction, int, QuadraticValue]


def _floor(x) -> int:
    if isinstance(x, QuadraticValue):
        return x.floor()
    return math.floor(as_rational(x))


def compare(x, y) -> int:
    """Exact sign of x - y for rationals and quadratic values."""
    if isinstance(x, QuadraticValue):
        return x.compare(y)
    if isinstance(y, QuadraticValue):
        return -y.compare(x)
    return _sign(as_rational(x) - as_rational(y))


@total_ordering
@dataclass(frozen=True, eq=False)
class Dyadic:
    """Binary-rational number ``k / 2**m`` kept in lowest terms."""

    k: int
    m: int = 0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("negative orders are not supported")
        k, m = self.k, self.m
        while m > 0 and k % 2 == 0:
            k //= 2
            m -= 1
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m", m)

    @classmethod
    def from_fraction(cls, q) -> Dyadic:
        q = as_rational(q)
        d = q.denominator
        if d & (d - 1):
            raise ValueError(f"{q} is not binary-rational")
        return cls(q.numerator, d.bit_length() - 1)

    @property
    def value(self) -> Fraction:
        return Fraction(self.k, 1 << self.m)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.k == other.k and self.m == other.m
        if isinstance(other, (Fraction, int)):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Dyadic):
            return self.value < other.value
        return compare(self.value, other) < 0

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other: Dyadic) -> Dyadic:
        return Dyadic.from_fraction(self.value + other.value)

    def __sub__(self, other: Dyadic) -> Dyadic:
        return Dyadic.from_fraction(self.value - other.value)

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.k, self.m)

    def half(self) -> Dyadic:
        return Dyadic(self.k, self.m + 1)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return f"{self.k}/2^{self.m}"

    def __repr__(self) -> str:
        return f"Dyadic({self})"


@dataclass(frozen=True)
class DyadicInterval:
    """Closed enclosure ``[lo, hi]`` with binary-rational ends.

    ``m`` is the order the enclosure was requested at; ``hi - lo <= 2**-m``
    unless produced by interval arithmetic, which adds widths.
    """

    lo: Dyadic
    hi: Dyadic
    m: int

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError("empty interval")

    @classmethod
    def exact(cls, q, m: int = 0) -> DyadicInterval:
        d = Dyadic.from_fraction(q)
        return cls(d, d, m)

    @property
    def width(self) -> Fraction:
        return self.hi.value - self.lo.value

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        return compare(self.lo.value, x) <= 0 <= compare(self.hi.value, x)

    def contains_interval(self, other: DyadicInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: DyadicInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other: DyadicInterval) -> DyadicInterval:
        return DyadicInterval(self.lo + other.lo, self.hi + other.hi, min(self.m, other.m))

    def __neg__(self) -> DyadicInterval:
        return DyadicInterval(-self.hi, -self.lo, self.m)

    def __sub__(self, other: DyadicInterval) -> DyadicInterval:
        return self + (-other)

    def half(self) -> DyadicInterval:
        return DyadicInterval(self.lo.half(), self.hi.half(), self.m + 1)

    def midpoint(self) -> Fraction:
        return (self.lo.value + self.hi.value) / 2

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi), "m": self.m}

    def __str__(self) -> str:
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]@{self.m}"


def _outward(lo: Fraction, hi: Fraction, order: int, m: int) -> DyadicInterval:
    scale = 1 << order
    k_lo = math.floor(lo * scale)
    k_hi = math.ceil(hi * scale)
    return DyadicInterval(Dyadic(k_lo, order), Dyadic(k_hi, order), m)


def dyadic_approx(xi: Exact, m: int) -> DyadicInterval:
    """The order-m binary-rational approximations ``a_m <= xi < b_m``."""
    if m < 0:
        raise ValueError("order must be non-negative")
    k = _floor(xi * (1 << m)) if isinstance(xi, QuadraticValue) else math.floor(as_rational(xi) * (1 << m))
    return DyadicInterval(Dyadic(k, m), Dyadic(k + 1, m), m)


def separate(xi: Exact, eta: Exact) -> int:
    """Least n with ``b_m(xi) < a_m(eta)`` for every order m > n."""
    if compare(xi, eta) >= 0:
        raise ValueError("separate() needs xi < eta")
    def holds(m: int) -> bool:
        return dyadic_approx(xi, m).hi < dyadic_approx(eta, m).lo

    # beyond n0 the gap estimate b_m <= xi + 2^-m, a~_m > eta - 2^-m guarantees it
    n0 = 0
    while compare(eta, xi + Fraction(2) ** (1 - n0)) <= 0:
        n0 += 1
    n = n0
    while n > 0 and holds(n):
        n -= 1
    if not holds(n + 1):
        raise AssertionError("separation order failed verification")
    return n


def sqrt_enclose(r, m: int = DEFAULT_ORDER) -> DyadicInterval:
    """Order-m dyadic enclosure of sqrt(r); ``lo**2 <= r < hi**2``.

    Returns the degenerate interval when sqrt(r) is itself binary-rational.
    """
    r = as_rational(r)
    if r < 0:
        raise ValueError("sqrt_enclose of a negative number")
    if m < 0:
        raise ValueError("order must be non-negative")
    if is_square(r):
        root = exact_sqrt(r)
        d = root.denominator
        if not d & (d - 1):
            return DyadicInterval.exact(root, m)
    # floor(sqrt(r) * 2^m) = isqrt(floor(r * 4^m))
    k = math.isqrt((r.numerator << (2 * m)) // r.denominator)
    return DyadicInterval(Dyadic(k, m), Dyadic(k + 1, m), m)


def _arctan_inv(x: int, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Bounds on arctan(1/x) for integer x > 1 from the alternating series."""
    total = Fraction(0)
    j = 0
    while True:
        term = Fraction(1, (2 * j + 1) * x ** (2 * j + 1))
        nxt = Fraction(1, (2 * j + 3) * x ** (2 * j + 3))
        total += term if j % 2 == 0 else -term
        if nxt < tol:
            # the first omitted term carries sign (-1)^(j+1)
            return (total - nxt, total) if j % 2 == 0 else (total, total + nxt)
        j += 1


@lru_cache(maxsize=64)
def _pi_bounds(bits: int) -> tuple[Fraction, Fraction]:
    tol = Fraction(1, 1 << (bits + 6))
    a_lo, a_hi = _arctan_inv(5, tol)
    b_lo, b_hi = _arctan_inv(239, tol)
    return 16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo


def pi_enclose(m: int = DEFAULT_ORDER) -> DyadicInterval:
    """Certified enclosure of pi from Machin's formula, width <= 2**-m."""
    if m < 0:
        raise ValueError("order must be non-negative")
    lo, hi = _pi_bounds(m + 2)
    return _outward(lo, hi, m + 2, m)


def cos_bounds(x: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Rational bounds on cos(x), |x| <= 2, with width at most 2*tol."""
    x = abs(as_rational(x))
    if x > 2:
        raise ValueError("cos_bounds handles |x| <= 2 only")
    x2 = x * x
    total = Fraction(0)
    term = Fraction(1)
    j = 0
    while True:
        total += term if j % 2 == 0 else -term
        nxt = term * x2 / ((2 * j + 1) * (2 * j + 2))
        if nxt <= tol:
            return total - nxt, total + nxt
        term = nxt
        j += 1


def _arccos_pos(c: Exact, m: int) -> DyadicInterval:
    # 0 < c < 1: arccos(c) lies in (0, pi/2) and cos is decreasing on [0, 2]
    lo, hi = Dyadic(0), Dyadic(2)
    target = Fraction(1, 1 << m)
    while hi.value - lo.value > target:
        mid = (lo + hi).half()
        bits = m + 16
        while True:
            c_lo, c_hi = cos_bounds(mid.value, Fraction(1, 1 << bits))
            if compare(c, c_hi) > 0:
                hi = mid
                break
            if compare(c, c_lo) < 0:
                lo = mid
                break
            bits *= 2
            if bits > 1 << 16:
                raise RuntimeError("arccos refinement did not separate")
    return DyadicInterval(lo, hi, m)


def arccos_enclose(c: Exact, m: int = DEFAULT_ORDER) -> DyadicInterval:
    """Enclosure of arccos(c) in [0, pi], width <= 2**-m."""
    if compare(c, 1) > 0 or compare(c, -1) < 0:
        raise ValueError("arccos argument outside [-1, 1]")
    if m < 0:
        raise ValueError("order must be non-negative")
    if compare(c, 1) == 0:
        return DyadicInterval.exact(0, m)
    if compare(c, -1) == 0:
        return pi_enclose(m)
    if compare(c, 0) == 0:
        p = pi_enclose(m + 1)
        return DyadicInterval(p.lo.half(), p.hi.half(), m)
    if compare(c, 0) > 0:
        return _arccos_pos(c, m)
    inner = _arccos_pos(-c, m + 1)
    res = pi_enclose(m + 1) - inner
    return DyadicInterval(res.lo, res.hi, m)


def encloses_pi(iv: DyadicInterval, max_order: int = 4096) -> bool:
    """Certify ``iv.lo <= pi <= iv.hi`` by refining the pi enclosure."""
    order = max(iv.m + 8, 16)
    while order <= max_order:
        p = pi_enclose(order)
        if iv.lo <= p.lo and p.hi <= iv.hi:
            return True
        if p.hi < iv.lo or iv.hi < p.lo:
            return False
        order *= 2
    return False


def archimedes_bound(xi: Exact) -> int:
    """An integer n with n > xi."""
    return _floor(xi) + 1
