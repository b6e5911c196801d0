"""Small exact linear-algebra helpers over ``Fraction``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def vec(xs: Sequence) -> Vector:
    return tuple(Fraction(x) for x in xs)


def intify(xs: Sequence) -> tuple:
    """Same vector with integral entries as plain ``int`` (cheaper arithmetic)."""
    out = []
    for x in xs:
        x = Fraction(x)
        out.append(x.numerator if x.denominator == 1 else x)
    return tuple(out)


def mat(rows: Sequence[Sequence]) -> Matrix:
    return tuple(vec(r) for r in rows)


def dot(x: Sequence, y: Sequence) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return Fraction(sum(a * b for a, b in zip(x, y) if a and b))


def add(x: Sequence, y: Sequence) -> Vector:
    return tuple(Fraction(a) + b for a, b in zip(x, y))


def scale(c, x: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in x)


def sub(x: Sequence, y: Sequence) -> Vector:
    return tuple(Fraction(a) - b for a, b in zip(x, y))


def determinant(m: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [list(vec(r)) for r in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for k in range(col, n):
                    a[r][k] -= f * a[col][k]
    return det


def leading_minors(m: Sequence[Sequence]) -> list[Fraction]:
    return [determinant([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


def _gauss_jordan(m: Sequence[Sequence], rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    a = [list(vec(r)) + list(vec(b)) for r, b in zip(m, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y if y else x for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def solve(m: Sequence[Sequence], b: Sequence) -> Vector:
    """Solve the square nonsingular system ``m x = b`` exactly."""
    return tuple(row[0] for row in _gauss_jordan(m, [[v] for v in b]))


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    eye = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return tuple(tuple(row) for row in _gauss_jordan(m, eye))
