"""Special roots, the dual Coxeter number and the minimal orbit dimension.

With the form normalized so ``(theta, theta) == 2``:

* ``h_dual = (rho, theta) + 1``;
* a positive root ``alpha`` is *special* when ``theta - alpha`` is a root;
* the minimal nonzero nilpotent orbit has dimension
  ``1 + #{alpha > 0 : (alpha, theta) != 0}``, which should equal
  ``2 h_dual - 2``.

``verify`` evaluates every one of these identities for a Lie type and
records the raw numbers next to a pass/fail flag per identity.  Only the
root-combinatorial side is computed; the orbit dimension count itself is
taken as given.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from minorbit._exact import Vector, dot, scale, sub
from minorbit.cartan import LieType, parse_lie_type
from minorbit.roots import Root, RootSystem, format_coords, oracle_roots, root_count, root_system
from minorbit.weyl import classify_positives, reflect, reflection_length

CHECK_NAMES = (
    "lemma2_partition",
    "lemma3_count",
    "eq1_eq2_vector_equality",
    "theorem_dims_equal",
    "corollary_length",
    "special_pairing",
    "nonorthogonal_set_equality",
)


class NormalizationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SpecialRootSet:
    members: frozenset[Root]

    def __len__(self):
        return len(self.members)

    def __contains__(self, r):
        return r in self.members

    def __iter__(self) -> Iterator[Root]:
        return iter(sorted(self.members, key=Root.sort_key))


def special_roots(rs: RootSystem) -> SpecialRootSet:
    theta = rs.theta.coords
    members = {a for a in rs.positives if rs.is_root(x - y for x, y in zip(theta, a.coords))}
    return SpecialRootSet(frozenset(members))


def dual_coxeter(rs: RootSystem) -> int:
    if rs.inner(rs.theta, rs.theta) != 2:
        raise NormalizationError(f"(theta, theta) = {rs.inner(rs.theta, rs.theta)}, expected 2")
    value = rs.inner(rs.rho, rs.theta.coords) + 1
    if value.denominator != 1 or value <= 0:
        raise NormalizationError(f"(rho, theta) + 1 = {value} is not a positive integer")
    return int(value)


def dual_coxeter_oracle(t: LieType) -> int:
    """``1 + sum of dual Kac labels``, from the orthonormal-coordinate roots.

    Writing ``theta = sum c_i alpha_i``, the coroot ``theta^vee`` has
    coefficients ``c_i |alpha_i|^2 / |theta|^2`` over the simple coroots.
    Uses neither the Cartan-matrix enumeration nor the Weyl vector.
    """
    orth = oracle_roots(t)
    by_coords = {orth.to_simple(v): v for v in orth.vectors}
    theta_coords = max(by_coords, key=sum)
    theta = by_coords[theta_coords]
    tt = dot(theta, theta)
    labels = [c * dot(a, a) / tt for c, a in zip(theta_coords, orth.simple_roots)]
    total = 1 + sum(labels)
    if total.denominator != 1:
        raise NormalizationError(f"dual Kac labels sum to non-integer {total - 1}")
    return int(total)


def nonorthogonal_positives(rs: RootSystem) -> frozenset[Root]:
    return frozenset(a for a in rs.positives if rs.inner(a.coords, rs.theta.coords) != 0)


def dim_min_orbit_lemma1(rs: RootSystem) -> int:
    return 1 + len(nonorthogonal_positives(rs))


def dim_min_orbit_theorem(rs: RootSystem) -> int:
    return 2 * dual_coxeter(rs) - 2


def check_lemma3(rs: RootSystem) -> bool:
    return len(special_roots(rs)) == 2 * (dual_coxeter(rs) - 2)


def rho_reflection_images(rs: RootSystem) -> tuple[Vector, Vector, Vector]:
    """``r_theta(rho)`` by direct reflection, via ``h_dual`` and via ``#S``."""
    theta = rs.theta.coords
    direct = reflect(rs, rs.theta, rs.rho)
    via_h = sub(rs.rho, scale(dual_coxeter(rs) - 1, theta))
    via_s = sub(rs.rho, scale(Fraction(len(special_roots(rs)) + 2, 2), theta))
    return direct, via_h, via_s


def check_eq1_eq2(rs: RootSystem) -> bool:
    a, b, c = rho_reflection_images(rs)
    return a == b == c


@dataclass
class VerificationReport:
    type: LieType
    num_roots: int
    num_positive: int
    h_dual: int
    num_special: int
    dim_lemma1: int
    dim_theorem: int
    reflection_length_theta: int
    checks: dict[str, bool]
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks[name] for name in CHECK_NAMES)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["type"] = str(self.type)
        d["checks"] = {name: self.checks[name] for name in CHECK_NAMES}
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> VerificationReport:
        d = dict(d)
        d.pop("all_passed", None)
        d["type"] = parse_lie_type(d["type"])
        d["checks"] = {name: bool(d["checks"][name]) for name in CHECK_NAMES}
        d["failures"] = list(d.get("failures", []))
        return cls(**d)


def _fmt(roots) -> str:
    return "{" + ", ".join(str(r) for r in sorted(roots, key=Root.sort_key)) + "}"


def verify(t: LieType | str) -> VerificationReport:
    if isinstance(t, str):
        t = parse_lie_type(t)
    rs = root_system(t)
    total, npos = root_count(rs)
    h = dual_coxeter(rs)
    S = special_roots(rs)
    special = S.members
    theta = rs.theta
    failures: list[str] = []

    part = classify_positives(rs)
    union = part.theta_part | part.special_part | part.orthogonal_part
    sizes = len(part.theta_part) + len(part.special_part) + len(part.orthogonal_part)
    partition_ok = (
        union == frozenset(rs.positives)
        and sizes == npos
        and part.theta_part == {theta}
        and part.special_part == special
    )
    if not partition_ok:
        failures.append(
            f"lemma2_partition: theta_part={_fmt(part.theta_part)} special_part={_fmt(part.special_part)} "
            f"special={_fmt(special)}"
        )

    count_ok = len(S) == 2 * (h - 2)
    if not count_ok:
        failures.append(f"lemma3_count: #S={len(S)} but 2(h_dual-2)={2 * (h - 2)}")

    images = rho_reflection_images(rs)
    rho_ok = images[0] == images[1] == images[2]
    if not rho_ok:
        failures.append(
            "eq1_eq2_vector_equality: r_theta(rho)="
            + ", ".join(format_coords(v) for v in images)
        )

    dim1 = dim_min_orbit_lemma1(rs)
    dim2 = 2 * h - 2
    if dim1 != dim2:
        failures.append(f"theorem_dims_equal: 1+#nonorthogonal={dim1} but 2h_dual-2={dim2}")

    length = reflection_length(rs, theta)
    length_ok = length == 2 * h - 3 == len(S) + 1
    if not length_ok:
        failures.append(f"corollary_length: l(r_theta)={length}, 2h_dual-3={2 * h - 3}, #S+1={len(S) + 1}")

    unpaired = []
    for a in rs.positives:
        partner = tuple(x - y for x, y in zip(theta.coords, a.coords))
        in_s = a in special
        partner_in_s = any(partner) and all(x >= 0 for x in partner) and Root(partner) in special
        if in_s != partner_in_s or (in_s and partner == a.coords):
            unpaired.append(a)
    pairing = not unpaired and len(S) % 2 == 0
    if not pairing:
        failures.append(f"special_pairing: alpha <-> theta-alpha fails at {_fmt(unpaired)}")

    nonorth = nonorthogonal_positives(rs)
    nonorth_eq = special | {theta} == nonorth
    if not nonorth_eq:
        failures.append(
            f"nonorthogonal_set_equality: S+theta={_fmt(special | {theta})} nonorthogonal={_fmt(nonorth)}"
        )

    checks = dict(
        zip(CHECK_NAMES, (partition_ok, count_ok, rho_ok, dim1 == dim2, length_ok, pairing, nonorth_eq))
    )
    return VerificationReport(
        type=t,
        num_roots=total,
        num_positive=npos,
        h_dual=h,
        num_special=len(S),
        dim_lemma1=dim1,
        dim_theorem=dim2,
        reflection_length_theta=length,
        checks=checks,
        failures=failures,
    )
