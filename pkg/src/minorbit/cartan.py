"""Lie types, Cartan matrices and the invariant bilinear form.

Conventions (see ``docs/conventions.md``):

* ``a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``;
* Bourbaki node numbering, except that node 1 of G2 is the long root.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from minorbit._exact import Matrix, dot, leading_minors, mat, vec

FAMILIES = "ABCDEFG"

_ISOMORPHS = {
    ("B", 1): "B1 is isomorphic to A1",
    ("C", 1): "C1 is isomorphic to A1",
    ("D", 1): "D1 is not semisimple",
    ("D", 2): "D2 is isomorphic to A1xA1, which is not simple",
    ("D", 3): "D3 is isomorphic to A3",
}


class LieTypeError(ValueError):
    """Malformed or out-of-range Lie type."""


class CartanError(ValueError):
    """Cartan data that does not describe a finite-type root system."""


def rank_range(family: str) -> str:
    """Human readable description of the valid ranks for ``family``."""
    return {
        "A": "≥ 1",
        "B": "≥ 2",
        "C": "≥ 2",
        "D": "≥ 4",
        "E": "one of 6, 7, 8",
        "F": "4",
        "G": "2",
    }[family]


def is_valid_rank(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in "BC":
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES or len(self.family) != 1:
            raise LieTypeError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if not is_valid_rank(self.family, self.rank):
            msg = f"rank for {self.family} must be {rank_range(self.family)}"
            note = _ISOMORPHS.get((self.family, self.rank))
            if note:
                msg += f" ({note})"
            raise LieTypeError(msg)

    def __str__(self):
        return f"{self.family}{self.rank}"


_TYPE_RE = re.compile(r"\s*([A-Ga-g])\s*(\d+)\s*")


def parse_lie_type(text: str) -> LieType:
    """Parse strings like ``"A5"`` or ``"e8"`` into a validated ``LieType``."""
    m = _TYPE_RE.fullmatch(text)
    if not m:
        raise LieTypeError(f"malformed Lie type {text!r}; expected a family letter A-G followed by a rank, e.g. 'E8'")
    return LieType(m.group(1).upper(), int(m.group(2)))


@dataclass(frozen=True)
class CartanMatrix:
    a: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.a)
        object.__setattr__(self, "a", a)
        n = len(a)
        if n == 0 or any(len(row) != n for row in a):
            raise CartanError("Cartan matrix must be square and nonempty")
        for i in range(n):
            if a[i][i] != 2:
                raise CartanError(f"diagonal entry a[{i}][{i}] = {a[i][i]}, expected 2")
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] > 0:
                    raise CartanError(f"off-diagonal entry a[{i}][{j}] = {a[i][j]} is positive")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise CartanError(f"a[{i}][{j}] and a[{j}][{i}] must vanish together")

    @property
    def n(self) -> int:
        return len(self.a)

    def __getitem__(self, ij):
        i, j = ij
        return self.a[i][j]


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _link(a, i, j):
    a[i][j] = a[j][i] = -1


def cartan_matrix(t: LieType) -> CartanMatrix:
    """Cartan matrix of ``t`` in Bourbaki numbering (0-based rows here)."""
    n = t.rank
    f = t.family
    if f == "A":
        a = _chain(n)
    elif f == "B":
        # alpha_n short
        a = _chain(n)
        a[n - 1][n - 2] = -2
    elif f == "C":
        # alpha_n long
        a = _chain(n)
        a[n - 2][n - 1] = -2
    elif f == "D":
        # alpha_{n-1} and alpha_n both attached to alpha_{n-2}
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        _link(a, n - 3, n - 1)
    elif f == "E":
        # 1-3-4-...-n with 2 attached to 4
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        _link(a, 0, 2)
        _link(a, 1, 3)
        for i in range(2, n - 1):
            _link(a, i, i + 1)
    elif f == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a = _chain(4)
        a[2][1] = -2
    else:
        # G2, node 1 long
        a = [[2, -1], [-3, 2]]
    return CartanMatrix(tuple(tuple(r) for r in a))


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric rational Gram matrix ``B[i][j] = (alpha_i, alpha_j)``."""

    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "matrix", mat(self.matrix))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def __getitem__(self, ij):
        i, j = ij
        return self.matrix[i][j]

    @cached_property
    def _scaled(self) -> tuple[tuple[tuple[int, ...], ...], int]:
        # B = M / D with M integral, so integer vectors never touch Fraction
        denom = math.lcm(*(x.denominator for row in self.matrix for x in row))
        m = tuple(tuple(int(x * denom) for x in row) for row in self.matrix)
        return m, denom

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        return inner(self, x, y)

    def norm2(self, x: Sequence) -> Fraction:
        return inner(self, x, x)


def inner(form: BilinearForm, x: Sequence, y: Sequence) -> Fraction:
    """Exact ``x^T B y`` for coordinate vectors over the simple roots."""
    n = form.n
    if len(x) != n or len(y) != n:
        raise ValueError(f"dimension mismatch: form has rank {n}, got vectors of length {len(x)} and {len(y)}")
    m, denom = form._scaled
    x = [_intish(v) for v in x]
    y = [_intish(v) for v in y]
    total = sum(xi * sum(mij * yj for mij, yj in zip(row, y) if yj) for xi, row in zip(x, m) if xi)
    return Fraction(total, denom) if isinstance(total, int) else Fraction(total) / denom


def _intish(v):
    if type(v) is int:
        return v
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def symmetrizer(c: CartanMatrix) -> tuple[Fraction, ...]:
    """Positive rationals ``d`` with ``d_i a[i][j] == d_j a[j][i]``.

    Each connected component of the Dynkin diagram starts at ``d = 1``.
    Raises ``CartanError`` if no symmetrizer exists.
    """
    n = c.n
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j == i or c[i, j] == 0:
                    continue
                dj = d[i] * c[i, j] / c[j, i]
                if d[j] is None:
                    d[j] = dj
                    queue.append(j)
                elif d[j] != dj:
                    raise CartanError("Cartan matrix is not symmetrizable")
    return tuple(d)


def unnormalized_form(c: CartanMatrix) -> BilinearForm:
    """Symmetrized form ``B[i][j] = d_i a[i][j]`` before the global rescale."""
    d = symmetrizer(c)
    b = [[d[i] * c[i, j] for j in range(c.n)] for i in range(c.n)]
    if any(m <= 0 for m in leading_minors(b)):
        raise CartanError("symmetrized Cartan matrix is not positive definite (not of finite type)")
    return BilinearForm(b)


def normalize(form: BilinearForm, theta: Sequence) -> BilinearForm:
    """Rescale ``form`` so that ``(theta, theta) == 2``."""
    s = Fraction(2) / inner(form, theta, theta)
    return BilinearForm([[s * x for x in row] for row in form.matrix])


def bilinear_form(c: CartanMatrix) -> BilinearForm:
    """The form normalized so the highest root has squared length 2."""
    from minorbit.roots import highest_root

    return normalize(unnormalized_form(c), highest_root(c).coords)


def coroot_pairing(c: CartanMatrix, x: Sequence, i: int):
    """``<x, alpha_i^vee> = 2 (x, alpha_i) / (alpha_i, alpha_i)`` from Cartan data alone."""
    return sum(a * v for a, v in zip(c.a[i], x) if a)
