"""Brute-force oracles used only by the tests.

They deliberately avoid the library's root-string enumeration and its
inner-product code path.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from minorbit.cartan import LieType, is_valid_rank

BATTERY = [
    LieType(f, n)
    for f in "ABCDEFG"
    for n in range(1, 13)
    if is_valid_rank(f, n)
]

SMALL = [LieType(*x) for x in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]]


def weyl_orbit_roots(a) -> frozenset[tuple[int, ...]]:
    """Roots as the orbit of the simple roots under s_i(b) = b - <b, a_i^vee> a_i."""
    n = len(a)
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        b = queue.popleft()
        for i in range(n):
            k = sum(a[i][j] * b[j] for j in range(n))
            w = tuple(b[j] - (k if j == i else 0) for j in range(n))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def naive_inner(matrix, x, y) -> Fraction:
    n = len(matrix)
    return sum(
        (Fraction(x[i]) * Fraction(matrix[i][j]) * Fraction(y[j]) for i in range(n) for j in range(n)),
        Fraction(0),
    )


def reduced_word_length(rs, target_image) -> int:
    """Shortest word in simple reflections sending rho to ``target_image``.

    rho is regular, so w -> w(rho) identifies Weyl group elements; breadth
    first search over that orbit gives the Coxeter length.
    """
    n = rs.rank
    norms = [naive_inner(rs.form.matrix, e, e) for e in (tuple(int(i == k) for k in range(n)) for i in range(n))]

    def s(i, v):
        e = tuple(int(i == k) for k in range(n))
        c = 2 * naive_inner(rs.form.matrix, v, e) / norms[i]
        return tuple(v[k] - (c if k == i else 0) for k in range(n))

    start = tuple(Fraction(x) for x in rs.rho)
    target = tuple(Fraction(x) for x in target_image)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == target:
            return dist[v]
        for i in range(n):
            w = s(i, v)
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    raise AssertionError("target not in the Weyl orbit of rho")
