"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``).

Every tolerance here is pinned; none is derived at runtime.
"""

import math
import random
import subprocess
import sys
import time
from fractions import Fraction

from conftest import assert_close, comp_scale
from hyper2d.algebra import (
    CANONICAL_ELLIPTIC,
    CANONICAL_HYPERBOLIC,
    HyperNumber,
    SystemParams,
    canonicalize,
    divide,
)
from hyper2d.analysis import (
    AnalyticFunction,
    Grid2D,
    cr_residual,
    map_grid,
    verification_catalog,
    wave_residual,
)
from hyper2d.fields import (
    boost_invariance_check,
    cr_check_complex,
    four_velocity,
    hyperbolic_motion,
    laplace_radial_solution,
    laplace_residual,
    proper_acceleration,
    radial_wave_residual,
)
from hyper2d.kinematics import Boost, Event, velocity_addition


def _report(num: int, text: str) -> None:
    print(f"PASS [criterion {num:2d}] {text}")


# ---------------------------------------------------------------------------


def test_criterion_01_boost_preserves_interval_and_null_cone():
    rng = random.Random(1001)
    start = time.perf_counter()
    for _ in range(1000):
        b = Boost(rng.uniform(-3, 3))
        e = Event(rng.uniform(-10, 10), rng.uniform(-10, 10))
        out = b.apply(e)
        assert abs(out.interval() - e.interval()) <= 1e-10 * (1 + abs(e.interval()))
        c = rng.uniform(-10, 10)
        plus = b.apply(Event(c, c))
        assert abs(plus.x - plus.t) <= 1e-12 * (1 + abs(plus.t))
        minus = b.apply(Event(c, -c))
        assert abs(minus.x + minus.t) <= 1e-12 * (1 + abs(minus.t))
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    _report(1, f"interval preserved to 1e-10 and null cone invariant to 1e-12 "
               f"over 1000 random boosts ({elapsed:.2f}s)")


def test_criterion_02_rapidity_additivity_and_velocity_addition():
    rng = random.Random(1002)
    for _ in range(100):
        b1, b2 = Boost(rng.uniform(-3, 3)), Boost(rng.uniform(-3, 3))
        e = Event(rng.uniform(-10, 10), rng.uniform(-10, 10))
        once = b1.compose(b2).apply(e)
        twice = b1.apply(b2.apply(e))
        sc = 1 + abs(once.x) + abs(once.t)
        assert abs(once.x - twice.x) <= 1e-12 * sc
        assert abs(once.t - twice.t) <= 1e-12 * sc
    assert abs(velocity_addition(0.5, 0.5) - 0.8) <= 1e-15
    _report(2, "composed boost equals sequential application to 1e-12; "
               "velocity_addition(0.5, 0.5) = 0.8 to 1e-15")


def test_criterion_03_first_order_analyticity_across_catalog():
    start = time.perf_counter()
    worst = 0.0
    for name, func, grid in verification_catalog(CANONICAL_HYPERBOLIC):
        rep = cr_residual(func, grid, 1e-5)
        assert rep.max_abs_cr_residual <= 1e-7, name
        worst = max(worst, rep.max_abs_cr_residual)
    control_grid = Grid2D((-1.0, 1.0, 11), (-1.0, 1.0, 11))
    control = cr_residual(AnalyticFunction.shear_control(), control_grid, 1e-5)
    assert control.max_abs_cr_residual >= 0.5
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    _report(3, f"catalog first-order residuals <= 1e-7 (worst {worst:.2e}); "
               f"control map detected at {control.max_abs_cr_residual:.2f} ({elapsed:.2f}s)")


def test_criterion_04_wave_equation_across_catalog():
    worst = 0.0
    for name, func, grid in verification_catalog(CANONICAL_HYPERBOLIC):
        rep = wave_residual(func, grid, 1e-3)
        assert rep.max_abs_wave_residual <= 1e-5, name
        worst = max(worst, rep.max_abs_wave_residual)
    control_grid = Grid2D((-1.0, 1.0, 11), (-1.0, 1.0, 11))
    control = wave_residual(AnalyticFunction.square_control(), control_grid, 1e-3)
    assert abs(control.max_abs_wave_residual - 2.0) <= 1e-6
    _report(4, f"catalog wave residuals <= 1e-5 (worst {worst:.2e}); "
               f"control map reads {control.max_abs_wave_residual:.6f} (expected 2)")


def test_criterion_05_radial_solution_is_harmonic_and_boost_invariant():
    grid = Grid2D((1.7, 2.9, 41), (-0.6, 0.6, 41))
    for x, t in grid.points():  # the grid sits inside the annular sector
        assert 1.5 <= math.sqrt(x * x - t * t) <= 3.0
    rep = radial_wave_residual(1.0, 0.0, grid, 1e-3)
    assert rep.points_skipped_out_of_domain == 0
    assert rep.max_abs_wave_residual <= 1e-5
    deviation = boost_invariance_check(1.0, 0.0, Boost(0.5), grid)
    assert deviation <= 1e-12
    _report(5, f"log-interval solution: wave residual {rep.max_abs_wave_residual:.2e} <= 1e-5, "
               f"boost deviation {deviation:.2e} <= 1e-12")


def test_criterion_06_constant_acceleration_worldlines():
    for radius in (0.5, 1.0, 2.0, 10.0):
        r2 = radius * radius
        traj = hyperbolic_motion(radius, (-3 * radius, 3 * radius, 201))
        for s in traj.samples:
            assert abs(s.x * s.x - s.t * s.t - r2) <= 1e-12 * r2
        for vt, vx in four_velocity(traj):
            assert abs(vt * vt - vx * vx - 1.0) <= 1e-12
        for a in proper_acceleration(traj, "analytic"):
            assert abs(a - 1.0 / radius) <= 1e-12 / radius
        fine = hyperbolic_motion(radius, (-3 * radius, 3 * radius, 401))
        e1 = max(abs(a - 1 / radius) for a in proper_acceleration(traj, "fd"))
        e2 = max(abs(a - 1 / radius) for a in proper_acceleration(fine, "fd"))
        ratio = e1 / e2
        assert 3.5 <= ratio <= 4.5, f"radius={radius}: ratio {ratio}"
    _report(6, "hyperbola identity, four-velocity normalization and 1/g acceleration "
               "hold to 1e-12 for g in {0.5, 1, 2, 10}; FD acceleration converges at order 2")


def test_criterion_07_trajectory_equals_exponential_image():
    for radius in (0.5, 1.0, 2.0, 10.0):
        traj = hyperbolic_motion(radius, (-3 * radius, 3 * radius, 201))
        grid = Grid2D((math.log(radius), math.log(radius) + 1.0, 2), (-3.0, 3.0, 201))
        image = map_grid(AnalyticFunction.exp(), grid)[:201]
        for s, p in zip(traj.samples, image):
            assert p.in_domain
            assert abs(p.u - s.x) <= 1e-12 * (1 + abs(s.x))
            assert abs(p.v - s.t) <= 1e-12 * (1 + abs(s.t))
    _report(7, "worldline samples coincide with the exponential image of the "
               "line X = ln g, T = tau/g to 1e-12 (two independent routes)")


def _random_system(rng: random.Random, cls: str) -> SystemParams:
    beta = rng.uniform(-10, 10)
    if cls == "parabolic":
        return SystemParams(-(beta * beta) / 4.0, beta)
    shift = rng.uniform(0.1, 10.0)
    if cls == "elliptic":
        shift = -shift
    return SystemParams((shift - beta * beta) / 4.0, beta)


def test_criterion_08_algebra_property_suite():
    rng = random.Random(1008)
    start = time.perf_counter()
    cases = 0
    for cls in ("elliptic", "parabolic", "hyperbolic"):
        for _ in range(400):
            p = _random_system(rng, cls)
            a = HyperNumber(rng.uniform(-10, 10), rng.uniform(-10, 10), p)
            b = HyperNumber(rng.uniform(-10, 10), rng.uniform(-10, 10), p)
            c = HyperNumber(rng.uniform(-10, 10), rng.uniform(-10, 10), p)
            sc3 = comp_scale(a, b, c) * (1 + abs(p.alpha) + abs(p.beta)) ** 2

            left, right = (a * b) * c, a * (b * c)
            assert_close(left.x, right.x, 1e-12, sc3)
            assert_close(left.y, right.y, 1e-12, sc3)
            assert a * b == b * a
            dl, dr = a * (b + c), a * b + a * c
            assert_close(dl.x, dr.x, 1e-12, sc3)
            assert_close(dl.y, dr.y, 1e-12, sc3)

            prod = a * a.conjugate()
            term_scale = 1.0 + abs(a.x * a.y) + abs(p.beta) * a.y * a.y
            assert abs(prod.y) <= 1e-14 * term_scale

            def bound(w):
                return w.x * w.x + abs(p.beta * w.x * w.y) + abs(p.alpha) * w.y * w.y

            assert_close((a * b).norm(), a.norm() * b.norm(), 1e-10, bound(a) * bound(b))

            if abs(b.norm()) > 1e-3 * (1 + abs(b.x) + abs(b.y)) ** 2:
                back = divide(a, b) * b
                assert_close(back.x, a.x, 1e-10, comp_scale(a))
                assert_close(back.y, a.y, 1e-10, comp_scale(a))

            _, cmap = canonicalize(p)
            lhs = cmap.apply(a * b)
            rhs = cmap.apply(a) * cmap.apply(b)
            sc = comp_scale(cmap.apply(a), cmap.apply(b))
            assert_close(lhs.x, rhs.x, 1e-10, sc)
            assert_close(lhs.y, rhs.y, 1e-10, sc)
            cases += 1
    # exactness half of the conjugate-realness check, in rational arithmetic
    for _ in range(150):
        alpha, beta = Fraction(rng.uniform(-10, 10)), Fraction(rng.uniform(-10, 10))
        x, y = Fraction(rng.uniform(-10, 10)), Fraction(rng.uniform(-10, 10))
        assert x * (-y) + y * (x + beta * y) + beta * (y * (-y)) == 0
    elapsed = time.perf_counter() - start
    assert cases >= 1000
    assert elapsed < 2.0, f"took {elapsed:.2f}s"
    _report(8, f"ring axioms, conjugate realness, norm multiplicativity, division "
               f"roundtrip and canonicalization homomorphism over {cases} cases "
               f"in all three classes ({elapsed:.2f}s)")


def test_criterion_09_euclidean_analog():
    worst = 0.0
    for name, func, grid in verification_catalog(CANONICAL_ELLIPTIC):
        rep = cr_check_complex(func, grid, 1e-5)
        assert rep.max_abs_cr_residual <= 1e-7, name
        worst = max(worst, rep.max_abs_cr_residual)
    annulus = Grid2D((0.5, 1.4, 41), (0.5, 1.4, 41))
    for x, y in annulus.points():
        assert 0.5 <= math.hypot(x, y) <= 2.0
    harm = laplace_residual(1.0, 0.0, annulus, 1e-3)
    assert harm.max_abs_wave_residual <= 1e-5
    rng = random.Random(1009)
    reference = laplace_radial_solution(1.0, 0.0, 1.3, 0.0)
    for _ in range(100):
        phi = rng.uniform(0.0, 2 * math.pi)
        value = laplace_radial_solution(1.0, 0.0, 1.3 * math.cos(phi), 1.3 * math.sin(phi))
        assert abs(value - reference) <= 1e-14
    _report(9, f"complex analyticity residuals <= 1e-7 (worst {worst:.2e}); point "
               f"potential harmonic to {harm.max_abs_wave_residual:.2e} and rotation-invariant to 1e-14")


def _cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "hyper2d", *args], capture_output=True, text=True, cwd=cwd
    )


def test_criterion_10_cli_end_to_end(tmp_path):
    events = tmp_path / "events.csv"
    events.write_text("x,t\n1,0\n3,2\n", encoding="utf-8")

    # exit 0: every subcommand succeeds once
    assert _cli("classify", "--alpha", "2", "--beta", "3").returncode == 0
    assert _cli("boost", "--v", "0.6", "--events", str(events)).returncode == 0
    assert _cli("map", "--fn", "exp", "--grid", "-1:1:11,-1:1:11").returncode == 0
    assert _cli("check", "--fn", "exp").returncode == 0
    assert _cli("trajectory", "--g", "1").returncode == 0
    assert _cli("potential", "--mode", "euclidean", "--grid", "0.5:1:5,0.5:1:5").returncode == 0

    # exit 1: a failed verification
    assert _cli("check", "--fn", "test-nonanalytic").returncode == 1

    # exit 2: usage/parse errors
    assert _cli("map", "--fn", "gamma").returncode == 2
    assert _cli("classify", "--alpha", "x", "--beta", "0").returncode == 2

    # exit 3: domain/physics errors
    assert _cli("trajectory", "--g", "-1").returncode == 3
    assert _cli("boost", "--v", "1", "--events", str(events)).returncode == 3

    # determinism: identical bytes across two runs
    pairs = [
        (("map", "--fn", "comp(log,exp)", "--grid", "-1:1:15,-1:1:15"), "map"),
        (("check", "--fn", "log", "--grid", "0.5:2:15,-0.4:0.4:15"), "check"),
        (("trajectory", "--g", "2", "--tau", "-4:4:51"), "trajectory"),
    ]
    for args, stem in pairs:
        first = tmp_path / f"{stem}_1.out"
        second = tmp_path / f"{stem}_2.out"
        for path in (first, second):
            result = _cli(*args, "--out", str(path))
            assert result.returncode == 0
        assert first.read_bytes() == second.read_bytes()
    _report(10, "CLI exit codes 0/1/2/3 all exercised; map, check and trajectory "
                "outputs byte-identical across repeated runs")
