"""Simple roots of the exceptional types in orthonormal coordinates.

Taken from the Bourbaki tables (Lie Groups and Lie Algebras, Ch. VI,
Planches V-IX).  E6 and E7 use the first six/seven E8 simple roots inside
R^8.  For G2 the two simple roots are listed long-first so that node 1 is
the long root, matching ``cartan.cartan_matrix``.
"""

from fractions import Fraction

_h = Fraction(1, 2)


def _e(n, *pairs):
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i - 1] += c
    return tuple(v)


E8_SIMPLE = (
    (_h, -_h, -_h, -_h, -_h, -_h, -_h, _h),
    _e(8, (1, 1), (2, 1)),
    _e(8, (2, 1), (1, -1)),
    _e(8, (3, 1), (2, -1)),
    _e(8, (4, 1), (3, -1)),
    _e(8, (5, 1), (4, -1)),
    _e(8, (6, 1), (5, -1)),
    _e(8, (7, 1), (6, -1)),
)

E7_SIMPLE = E8_SIMPLE[:7]
E6_SIMPLE = E8_SIMPLE[:6]

F4_SIMPLE = (
    _e(4, (2, 1), (3, -1)),
    _e(4, (3, 1), (4, -1)),
    _e(4, (4, 1)),
    (_h, -_h, -_h, -_h),
)

G2_SIMPLE = (
    _e(3, (1, -2), (2, 1), (3, 1)),
    _e(3, (1, 1), (2, -1)),
)

EXCEPTIONAL_SIMPLE = {
    ("E", 6): E6_SIMPLE,
    ("E", 7): E7_SIMPLE,
    ("E", 8): E8_SIMPLE,
    ("F", 4): F4_SIMPLE,
    ("G", 2): G2_SIMPLE,
}
