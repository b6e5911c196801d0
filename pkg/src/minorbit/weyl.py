"""Reflections in roots and their Coxeter length.

The length of a Weyl group element ``w`` is taken to be the size of its
inversion set ``{beta > 0 : w(beta) < 0}``, which agrees with the length
of a reduced word in the simple reflections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from minorbit._exact import Vector
from minorbit.roots import Root, RootSystem, format_coords


class PartitionError(RuntimeError):
    """A positive root fell outside the three expected cases."""


def _axis_coords(rs: RootSystem, axis) -> tuple[int, ...]:
    coords = tuple(axis)
    if not rs.is_root(coords):
        raise ValueError(f"reflection axis {format_coords(coords)} is not a root of {rs}")
    return coords


def reflect(rs: RootSystem, axis: Root | Sequence, x: Sequence) -> Vector:
    """``x - 2 (x, axis) / (axis, axis) * axis``, exactly."""
    a = _axis_coords(rs, axis)
    k = 2 * rs.inner(x, a) / rs.inner(a, a)
    if k.denominator == 1:
        k = k.numerator
    # integer inputs stay int; equal Fractions and ints hash alike
    return tuple(xi - k * ai for xi, ai in zip(x, a))


@dataclass(frozen=True)
class Reflection:
    rs: RootSystem
    axis: Root

    def __post_init__(self):
        _axis_coords(self.rs, self.axis)

    def __call__(self, x: Sequence) -> Vector:
        return reflect(self.rs, self.axis, x)

    @cached_property
    def on_roots(self) -> dict[Root, Root]:
        """The permutation of the root set induced by the reflection."""
        return {r: self.rs.as_root(self(r.coords)) for r in self.rs.roots}

    @cached_property
    def inversions(self) -> tuple[Root, ...]:
        return tuple(b for b in self.rs.positives if not self.on_roots[b].is_positive)

    @property
    def length(self) -> int:
        return len(self.inversions)


def reflection_length(rs: RootSystem, axis: Root | Sequence) -> int:
    a = _axis_coords(rs, axis)
    if sum(a) <= 0:
        raise ValueError(f"reflection axis {format_coords(a)} is not a positive root")
    count = 0
    for b in rs.positives:
        image = reflect(rs, a, b.coords)
        if sum(image) < 0:
            count += 1
    return count


class ThetaPartition(NamedTuple):
    theta_part: frozenset[Root]
    special_part: frozenset[Root]
    orthogonal_part: frozenset[Root]


def classify_positives(rs: RootSystem) -> ThetaPartition:
    """Split the positive roots by what the reflection in theta does to them.

    ``-theta`` for theta itself, ``alpha - theta`` (a negative root) for the
    special roots, and ``alpha`` for roots orthogonal to theta.
    """
    theta = rs.theta.coords
    parts: tuple[set, set, set] = (set(), set(), set())
    for alpha in rs.positives:
        a = alpha.coords
        image = reflect(rs, rs.theta, a)
        shifted = tuple(x - t for x, t in zip(a, theta))
        if image == tuple(-t for t in theta):
            parts[0].add(alpha)
        elif image == shifted and rs.is_root(image) and sum(image) < 0:
            parts[1].add(alpha)
        elif image == a:
            parts[2].add(alpha)
        else:
            raise PartitionError(
                f"r_theta({alpha}) = {format_coords(image)} matches none of -theta, alpha-theta, alpha"
            )
    return ThetaPartition(*(frozenset(p) for p in parts))
