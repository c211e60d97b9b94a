"""Small exact linear algebra over Fractions (3-vectors, 3x3 matrices)."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

Vec = tuple  # tuple[Fraction, Fraction, Fraction]
Mat = tuple  # tuple of row tuples


def vec(*xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


ZERO = vec(0, 0, 0)


def add(u: Vec, v: Vec) -> Vec:
    if len(u) == 3:
        return (u[0] + v[0], u[1] + v[1], u[2] + v[2])
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    if len(u) == 3:
        return (u[0] - v[0], u[1] - v[1], u[2] - v[2])
    return tuple(a - b for a, b in zip(u, v))


def scale(k, u: Vec) -> Vec:
    return tuple(k * a for a in u)


def dot(u: Vec, v: Vec) -> Fraction:
    if len(u) == 3:
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def cross(u: Vec, v: Vec) -> Vec:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def norm2(u: Vec) -> Fraction:
    return dot(u, u)


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


def det3(a: Vec, b: Vec, c: Vec) -> Fraction:
    return dot(a, cross(b, c))


def primitive(u: Vec) -> Vec:
    """Primitive integer multiple of u with first nonzero entry positive."""
    if is_zero(u):
        raise ValueError("zero vector has no direction")
    lcm = 1
    for a in u:
        lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
    ints = [int(a * lcm) for a in u]
    g = 0
    for n in ints:
        g = math.gcd(g, n)
    lead = next(n for n in ints if n != 0)
    s = 1 if lead > 0 else -1
    return tuple(Fraction(s * n // g) for n in ints)


def proportional(u: Vec, v: Vec) -> bool:
    return is_zero(cross(u, v))


# --- matrices ----------------------------------------------------------------

def identity(n: int = 3) -> Mat:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def matmul(A: Mat, B: Mat) -> Mat:
    cols = list(zip(*B))
    return tuple(tuple(dot(r, c) for c in cols) for r in A)


def matvec(A: Mat, v: Vec) -> Vec:
    return tuple(dot(r, v) for r in A)


def transpose(A: Mat) -> Mat:
    return tuple(zip(*A))


def mat_sub(A: Mat, B: Mat) -> Mat:
    return tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(A, B))


def outer(u: Vec, v: Vec) -> Mat:
    return tuple(tuple(a * b for b in v) for a in u)


def mat_scale(k, A: Mat) -> Mat:
    return tuple(tuple(k * a for a in r) for r in A)


def det(A: Mat) -> Fraction:
    return det3(*A)


def rref(A: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    M = [[Fraction(x) for x in row] for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def nullspace(A: Sequence[Sequence]) -> list[Vec]:
    """Basis of {x : A x = 0}."""
    M, pivots = rref(A)
    n = len(A[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -M[i][f]
        basis.append(tuple(x))
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> Optional[tuple[Vec, list[Vec]]]:
    """Solve A x = b exactly; returns (particular solution, nullspace basis)
    or None when inconsistent."""
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    M, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        x[p] = M[i][n]
    return tuple(x), nullspace(A)
