"""Root system enumeration, the highest root and the Weyl vector.

Two independent constructions live here:

``generate_roots``
    works purely from the Cartan matrix, building positive roots one
    height layer at a time with the root-string criterion.
``oracle_roots``
    builds the roots as explicit vectors in an orthonormal basis
    (definitional for A-D, Weyl-orbit closure for E, F, G) and converts
    them to simple-root coordinates afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from minorbit import _tables
from minorbit._exact import Vector, dot, intify, inverse, vec
from minorbit.cartan import (
    BilinearForm,
    CartanMatrix,
    LieType,
    cartan_matrix,
    coroot_pairing,
    normalize,
    unnormalized_form,
)


class RootGenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Root:
    """A root written over the simple roots."""

    coords: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        if not any(c):
            raise ValueError("a root is nonzero")
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            raise ValueError(f"root coordinates must share a sign: {c}")
        object.__setattr__(self, "coords", c)

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> Root:
        return Root(tuple(-x for x in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def sort_key(self):
        return (self.height, self.coords)

    def __str__(self):
        return format_coords(self.coords)


def format_coords(coords: Sequence, name: str = "a") -> str:
    """Render ``(2, 3)`` as ``2a1+3a2``."""
    terms = []
    for i, c in enumerate(coords, 1):
        c = Fraction(c)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag}"
        terms.append(f"{sign}{coef}{name}{i}")
    if not terms:
        return "0"
    s = "".join(terms)
    return s[1:] if s[0] == "+" else s


def unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(n))


def positive_roots(c: CartanMatrix) -> tuple[Root, ...]:
    """Positive roots of ``c`` sorted by (height, coordinates).

    A root ``beta`` extends to ``beta + alpha_i`` iff ``p - <beta, alpha_i^vee> > 0``
    where ``p`` is how far the ``alpha_i``-string through ``beta`` reaches down.
    """
    n = c.n
    simple = [unit(n, i) for i in range(n)]
    known: set[tuple[int, ...]] = set(simple)
    layer = sorted(simple)
    max_layers = 2 * n + 30
    depth = 1
    while layer:
        nxt: set[tuple[int, ...]] = set()
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                down[i] -= 1
                while tuple(down) in known:
                    p += 1
                    down[i] -= 1
                if p - coroot_pairing(c, beta, i) > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        depth += 1
        if depth > max_layers:
            raise RootGenerationError(f"more than {max_layers} height layers; Cartan matrix is not of finite type")
        known |= nxt
        layer = sorted(nxt)
    return tuple(sorted((Root(r) for r in known), key=Root.sort_key))


def highest_root(c: CartanMatrix) -> Root:
    pos = positive_roots(c)
    top = [r for r in pos if r.height == pos[-1].height]
    if len(top) != 1:
        raise RootGenerationError(f"{len(top)} roots share the maximal height")
    return top[0]


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    form: BilinearForm
    positives: tuple[Root, ...]
    theta: Root
    rho: Vector
    type: LieType | None = field(default=None)

    @property
    def rank(self) -> int:
        return self.cartan.n

    @cached_property
    def negatives(self) -> tuple[Root, ...]:
        return tuple(-r for r in self.positives)

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        return self.positives + self.negatives

    @cached_property
    def root_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.coords for r in self.roots)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(Root(unit(self.rank, i)) for i in range(self.rank))

    def is_root(self, x: Iterable) -> bool:
        # Fraction(k) == k and hashes alike, so rational vectors work too.
        return tuple(x) in self.root_set

    def as_root(self, x: Iterable) -> Root:
        x = tuple(x)
        if x not in self.root_set:
            raise ValueError(f"{format_coords(x)} is not a root")
        return Root(tuple(int(v) for v in x))

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        return self.form.inner(x, y)

    def __str__(self):
        return str(self.type) if self.type else f"RootSystem(rank={self.rank})"


def generate_roots(c: CartanMatrix, lie_type: LieType | None = None) -> RootSystem:
    raw = unnormalized_form(c)
    pos = positive_roots(c)
    top = [r for r in pos if r.height == pos[-1].height]
    if len(top) != 1:
        raise RootGenerationError(f"{len(top)} roots share the maximal height")
    theta = top[0]
    n = c.n
    rho = tuple(sum((Fraction(r[i]) for r in pos), Fraction(0)) / 2 for i in range(n))
    return RootSystem(
        cartan=c,
        form=normalize(raw, theta.coords),
        positives=pos,
        theta=theta,
        rho=rho,
        type=lie_type,
    )


def root_system(t: LieType) -> RootSystem:
    return generate_roots(cartan_matrix(t), t)


def root_count(rs: RootSystem) -> tuple[int, int]:
    """``(|roots|, |positive roots|)``."""
    return len(rs.roots), len(rs.positives)


# -- orthonormal-coordinate oracle -------------------------------------------


@dataclass(frozen=True)
class OrthonormalRoots:
    """Roots as vectors in R^m with the standard dot product."""

    type: LieType
    vectors: frozenset[Vector]
    simple_roots: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "vectors", frozenset(intify(v) for v in self.vectors))
        object.__setattr__(self, "simple_roots", tuple(intify(a) for a in self.simple_roots))

    @cached_property
    def _projection(self) -> tuple[tuple[tuple[int, ...], ...], int]:
        # rows of G^-1 S as an integer matrix over a common denominator
        gram = self.gram()
        n = len(gram)
        ginv = inverse(gram)
        m = len(self.simple_roots[0])
        proj = [[dot(ginv[i], [a[k] for a in self.simple_roots]) for k in range(m)] for i in range(n)]
        denom = math.lcm(*(x.denominator for row in proj for x in row))
        return tuple(tuple(int(x * denom) for x in row) for row in proj), denom

    def to_simple(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` over the simple roots (exact, checked)."""
        proj, denom = self._projection
        coords = tuple(_exact_div(sum(p * x for p, x in zip(row, v) if x), denom) for row in proj)
        back = tuple(sum(c * a[k] for c, a in zip(coords, self.simple_roots) if c) for k in range(len(v)))
        if back != tuple(v):
            raise ValueError(f"{v} is not in the span of the simple roots")
        return coords

    def in_simple_coords(self) -> frozenset[tuple[int, ...]]:
        out = set()
        for v in self.vectors:
            c = self.to_simple(v)
            if any(type(x) is not int for x in c):
                raise ValueError(f"non-integral simple-root coordinates for {v}")
            out.add(tuple(int(x) for x in c))
        return frozenset(out)

    def gram(self) -> tuple[Vector, ...]:
        return tuple(tuple(dot(a, b) for b in self.simple_roots) for a in self.simple_roots)


def _exact_div(x, d: int):
    q = Fraction(x) / d
    return q.numerator if q.denominator == 1 else q


def _signed_pairs(m: int, coef: int = 1) -> set[Vector]:
    out = set()
    for i, j in combinations(range(m), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [Fraction(0)] * m
            v[i] = Fraction(si)
            v[j] = Fraction(sj)
            out.add(tuple(v))
    return out


def _signed_units(m: int, length: int) -> set[Vector]:
    out = set()
    for i in range(m):
        for s in (1, -1):
            v = [Fraction(0)] * m
            v[i] = Fraction(s * length)
            out.add(tuple(v))
    return out


def _orthonormal_unit(m: int, *pairs) -> Vector:
    v = [Fraction(0)] * m
    for i, c in pairs:
        v[i] += c
    return tuple(v)


def reflection_closure(simple: Sequence[Vector], limit: int = 10_000) -> frozenset[Vector]:
    """Smallest set containing ``simple`` closed under the simple reflections."""
    simple = [vec(a) for a in simple]
    norms = [dot(a, a) for a in simple]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a, na in zip(simple, norms):
                k = 2 * dot(v, a) / na
                if k == 0:
                    continue
                w = tuple(x - k * y for x, y in zip(v, a))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if len(seen) > limit:
            raise RootGenerationError("reflection closure exceeded its size limit")
        frontier = nxt
    return frozenset(seen)


def oracle_roots(t: LieType) -> OrthonormalRoots:
    n = t.rank
    f = t.family
    if f == "A":
        m = n + 1
        vectors = {
            _orthonormal_unit(m, (i, 1), (j, -1)) for i in range(m) for j in range(m) if i != j
        }
        simple = [_orthonormal_unit(m, (i, 1), (i + 1, -1)) for i in range(n)]
    elif f in "BCD":
        chain = [_orthonormal_unit(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        vectors = _signed_pairs(n)
        if f == "B":
            vectors |= _signed_units(n, 1)
            simple = chain + [_orthonormal_unit(n, (n - 1, 1))]
        elif f == "C":
            vectors |= _signed_units(n, 2)
            simple = chain + [_orthonormal_unit(n, (n - 1, 2))]
        else:
            simple = chain + [_orthonormal_unit(n, (n - 2, 1), (n - 1, 1))]
    else:
        simple = list(_tables.EXCEPTIONAL_SIMPLE[(f, n)])
        vectors = reflection_closure(simple)
    return OrthonormalRoots(t, frozenset(vectors), tuple(vec(a) for a in simple))
