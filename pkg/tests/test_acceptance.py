"""Acceptance criteria, one test per criterion.

Every comparison is exact (integers or ``Fraction``); there is no
tolerance anywhere.  Each test records a PASS/FAIL line which
``conftest.py`` prints in the terminal summary; run with ``-s`` to see the
lines inline as well.
"""

import subprocess
import sys
import time

import pytest

from minorbit.cartan import LieType
from minorbit.orbit import (
    dual_coxeter,
    dual_coxeter_oracle,
    nonorthogonal_positives,
    rho_reflection_images,
    special_roots,
    verify,
)
from minorbit.roots import oracle_roots, root_count, root_system
from minorbit.weyl import Reflection, classify_positives, reflect, reflection_length

RESULTS: dict[int, tuple[bool, str]] = {}


def _battery():
    spans = {"A": range(1, 13), "B": range(2, 13), "C": range(2, 13), "D": range(4, 13),
             "E": range(6, 9), "F": (4,), "G": (2,)}
    return [LieType(f, n) for f, ranks in spans.items() for n in ranks]


BATTERY = _battery()


@pytest.fixture(scope="module")
def systems():
    return {t: root_system(t) for t in BATTERY}


def record(num, text, failures):
    ok = not failures
    line = f"criterion {num}: {text}"
    if not ok:
        line += f" -- failing: {failures[:5]}"
    RESULTS[num] = (ok, line)
    print(f"[{'PASS' if ok else 'FAIL'}] {line}")
    assert ok, line


def test_1_orbit_dimension():
    start = time.perf_counter()
    reports = [verify(t) for t in BATTERY]
    elapsed = time.perf_counter() - start
    bad = [str(r.type) for r in reports if r.dim_lemma1 != 2 * r.h_dual - 2]
    if elapsed >= 10:
        bad.append(f"runtime {elapsed:.2f}s >= 10s")
    assert len(BATTERY) == 48
    record(1, f"1 + #nonorthogonal positives == 2 h_dual - 2 on {len(BATTERY)} types ({elapsed:.2f}s)", bad)


def test_2_special_count(systems):
    bad = [str(t) for t, rs in systems.items() if len(special_roots(rs)) != 2 * (dual_coxeter(rs) - 2)]
    record(2, "#special == 2 (h_dual - 2) on every battery type", bad)


def test_3_partition(systems):
    bad = []
    for t, rs in systems.items():
        part = classify_positives(rs)
        S = special_roots(rs).members
        union = part.theta_part | part.special_part | part.orthogonal_part
        disjoint = len(part.theta_part) + len(part.special_part) + len(part.orthogonal_part) == len(rs.positives)
        if not (union == set(rs.positives) and disjoint and part.theta_part == {rs.theta}
                and part.special_part == S and S | {rs.theta} == nonorthogonal_positives(rs)):
            bad.append(str(t))
    record(3, "r_theta partitions the positive roots; special part == S; S + theta == nonorthogonal", bad)


def test_4_rho_images(systems):
    bad = []
    for t, rs in systems.items():
        direct, via_h, via_s = rho_reflection_images(rs)
        if not direct == via_h == via_s:
            bad.append(str(t))
    record(4, "r_theta(rho) by reflection, via h_dual and via #S agree exactly", bad)


def test_5_reflection_length(systems):
    bad = []
    for t, rs in systems.items():
        h = dual_coxeter(rs)
        if not reflection_length(rs, rs.theta) == 2 * h - 3 == len(special_roots(rs)) + 1:
            bad.append(str(t))
    record(5, "l(r_theta) == 2 h_dual - 3 == #S + 1", bad)


def _expected_count(t):
    n = t.rank
    if t.family == "A":
        return n * (n + 1)
    if t.family in "BC":
        return 2 * n * n
    if t.family == "D":
        return 2 * n * (n - 1)
    return {("G", 2): 12, ("F", 4): 48, ("E", 6): 72, ("E", 7): 126, ("E", 8): 240}[(t.family, n)]


def test_6_oracle_equivalence(systems):
    bad = []
    for t, rs in systems.items():
        o = oracle_roots(t)
        if o.in_simple_coords() != rs.root_set:
            bad.append(f"{t}: root sets differ")
        if not len(o.vectors) == root_count(rs)[0] == _expected_count(t):
            bad.append(f"{t}: count {len(o.vectors)} / {root_count(rs)[0]} vs {_expected_count(t)}")
    record(6, "Cartan-matrix enumeration == orthonormal oracle; counts match closed forms", bad)


SPOT = {
    "A1": (2, 2), "A2": (3, 4), "G2": (4, 6), "D4": (6, 10),
    "F4": (9, 16), "E6": (12, 22), "E7": (18, 34), "E8": (30, 58),
}


def test_7_spot_values():
    bad = []
    for name, (h, dim) in SPOT.items():
        t = LieType(name[0], int(name[1:]))
        oracle_h = dual_coxeter_oracle(t)
        r = verify(t)
        if not (oracle_h == h == r.h_dual and 2 * oracle_h - 2 == dim == r.dim_lemma1 == r.dim_theorem):
            bad.append(f"{name}: oracle h={oracle_h} report h={r.h_dual} dim={r.dim_lemma1}")
    record(7, "h_dual and dim for A1 A2 G2 D4 F4 E6 E7 E8", bad)


def test_8_properties(systems):
    bad = []
    for t, rs in systems.items():
        refl = Reflection(rs, rs.theta)
        for x in rs.roots:
            if refl(refl(x.coords)) != x.coords:
                bad.append(f"{t}: involution at {x}")
                break
        images = {y: refl(y.coords) for y in rs.positives}
        for x in rs.simple_roots + (rs.theta,):
            for y in rs.positives:
                if rs.inner(images[x], images[y]) != rs.inner(x, y):
                    bad.append(f"{t}: isometry at {x},{y}")
        # each simple reflection preserves (y, rho) for every positive y
        for a in rs.simple_roots:
            rho_image = reflect(rs, a, rs.rho)
            for y in rs.positives:
                if rs.inner(reflect(rs, a, y.coords), rho_image) != rs.inner(y, rs.rho):
                    bad.append(f"{t}: simple reflection isometry at {a},{y}")
        for a in rs.simple_roots:
            if 2 * rs.inner(rs.rho, a) / rs.inner(a, a) != 1:
                bad.append(f"{t}: (rho, {a}^vee) != 1")
        S = special_roots(rs)
        if len(S) % 2:
            bad.append(f"{t}: #S odd")
        theta = rs.theta.coords
        for a in S:
            partner = tuple(u - v for u, v in zip(theta, a.coords))
            if partner == a.coords or not any(partner == b.coords for b in S):
                bad.append(f"{t}: pairing fails at {a}")
        top = max(r.height for r in rs.positives)
        if [r for r in rs.positives if r.height == top] != [rs.theta]:
            bad.append(f"{t}: maximal height not unique")
    record(8, "involution, isometry, rho property, S pairing and evenness, unique highest root", bad)


def test_9_cli_contract():
    cmd = [sys.executable, "-m", "minorbit", "table", "--max-rank", "12", "--format", "csv"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    d3 = subprocess.run([sys.executable, "-m", "minorbit", "verify", "D3"], capture_output=True)
    bad = []
    if a.returncode != 0 or b.returncode != 0:
        bad.append(f"table exit codes {a.returncode}, {b.returncode}")
    if a.stdout != b.stdout:
        bad.append("table CSV differs between runs")
    if len(a.stdout.decode().splitlines()) != 1 + len(BATTERY):
        bad.append("unexpected number of table rows")
    if d3.returncode != 2:
        bad.append(f"verify D3 exit {d3.returncode}")
    record(9, "table --max-rank 12 exits 0 with byte-identical CSV; verify D3 exits 2", bad)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
