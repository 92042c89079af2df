"""Command-line surface: plot-ready CSV/JSON for every capability.

Subcommands
    classify    system class, discriminant, and canonicalization map
    boost       boost events from a CSV file, with interval columns
    map         image of a grid under a catalog function
    check       first/second-order residual report (JSON), exit 1 on failure
    trajectory  constant-acceleration worldline samples
    potential   radial wave solution or Euclidean log potential on a grid

Exit codes: 0 success/check passed, 1 check failed, 2 usage or parse
error, 3 domain/physics error (superluminal speed, wrong sector, g <= 0).

Function specs use the mini-grammar

    exp | log | pow:N | affine:ar,ah,br,bh | poly:c0r,c0h,c1r,c1h,...
        | comp(SPEC,SPEC) | test-nonanalytic | test-quadratic

where comp(f,g) means f applied after g. Grid specs are
``min:max:count,min:max:count`` (x axis first). Output is deterministic:
identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, fields as dataclass_fields
from pathlib import Path
from typing import Optional

import click

from . import algebra, analysis, fields, kinematics
from .errors import DomainError, InvalidParameterError

EXIT_CHECK_FAILED = 1
EXIT_DOMAIN = 3


@dataclass
class RunConfig:
    """Tunable tolerances and defaults; a JSON config file may override any
    field, and command-line flags override the file."""

    class_epsilon: float = algebra.CLASS_EPSILON
    divisor_epsilon: float = algebra.DIVISOR_EPSILON
    sector_epsilon: float = analysis.SECTOR_EPSILON
    fd_step_first: float = analysis.DEFAULT_FD_STEP_FIRST
    fd_step_second: float = analysis.DEFAULT_FD_STEP_SECOND
    cr_tolerance: float = 1e-7
    wave_tolerance: float = 1e-5
    grid: str = "-1:1:41,-1:1:41"
    format: str = "csv"
    out: Optional[str] = None


_FLOAT_CONFIG_KEYS = (
    "class_epsilon",
    "divisor_epsilon",
    "sector_epsilon",
    "fd_step_first",
    "fd_step_second",
    "cr_tolerance",
    "wave_tolerance",
)


def load_config(path: Optional[str]) -> RunConfig:
    cfg = RunConfig()
    if path is None:
        return cfg
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read config {path}: {exc}")
    if not isinstance(raw, dict):
        raise click.UsageError(f"config {path} must hold a JSON object")
    known = {f.name for f in dataclass_fields(RunConfig)}
    for key, value in raw.items():
        if key not in known:
            raise click.UsageError(f"unknown config key {key!r}")
        setattr(cfg, key, value)
    for key in _FLOAT_CONFIG_KEYS:
        value = getattr(cfg, key)
        if not isinstance(value, (int, float)) or not value > 0:
            raise click.UsageError(f"config {key} must be a number > 0, got {value!r}")
        setattr(cfg, key, float(value))
    if cfg.format not in ("csv", "json"):
        raise click.UsageError(f"config format must be 'csv' or 'json', got {cfg.format!r}")
    return cfg


# ---------------------------------------------------------------------------
# spec parsing
# ---------------------------------------------------------------------------


def parse_axis(spec: str, what: str) -> tuple[float, float, int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise click.UsageError(f"{what} must look like min:max:count, got {spec!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise click.UsageError(f"cannot parse {what} {spec!r}")
    return lo, hi, count


def parse_grid(spec: str) -> analysis.Grid2D:
    axes = spec.split(",")
    if len(axes) != 2:
        raise click.UsageError(f"grid must be two comma-separated axes, got {spec!r}")
    try:
        return analysis.Grid2D(parse_axis(axes[0], "grid axis"), parse_axis(axes[1], "grid axis"))
    except InvalidParameterError as exc:
        raise click.UsageError(str(exc))


def _split_top_level(body: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise click.UsageError(f"unbalanced parentheses in {body!r}")
        elif ch == "," and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    if depth != 0:
        raise click.UsageError(f"unbalanced parentheses in {body!r}")
    parts.append(body[start:])
    return parts


def _floats(csv_text: str, spec: str) -> list[float]:
    try:
        return [float(tok) for tok in csv_text.split(",")]
    except ValueError:
        raise click.UsageError(f"cannot parse numbers in {spec!r}")


def parse_function(spec: str) -> analysis.AnalyticFunction:
    """Parse the function mini-grammar over the canonical hyperbolic system."""
    F = analysis.AnalyticFunction
    s = spec.strip()
    if s == "exp":
        return F.exp()
    if s == "log":
        return F.log()
    if s == "test-nonanalytic":
        return F.shear_control()
    if s == "test-quadratic":
        return F.square_control()
    if s.startswith("pow:"):
        try:
            return F.power(int(s[4:]))
        except ValueError:
            raise click.UsageError(f"pow wants an integer, got {spec!r}")
    if s.startswith("affine:"):
        vals = _floats(s[len("affine:"):], spec)
        if len(vals) != 4:
            raise click.UsageError(f"affine wants 4 numbers ar,ah,br,bh, got {spec!r}")
        return F.affine(
            algebra.HyperNumber.hyperbolic(vals[0], vals[1]),
            algebra.HyperNumber.hyperbolic(vals[2], vals[3]),
        )
    if s.startswith("poly:"):
        vals = _floats(s[len("poly:"):], spec)
        if len(vals) < 2 or len(vals) % 2 != 0:
            raise click.UsageError(f"poly wants an even number (>= 2) of values, got {spec!r}")
        coeffs = [
            algebra.HyperNumber.hyperbolic(vals[i], vals[i + 1])
            for i in range(0, len(vals), 2)
        ]
        return F.polynomial(coeffs)
    if s.startswith("comp(") and s.endswith(")"):
        inner_body = s[len("comp("):-1]
        parts = _split_top_level(inner_body)
        if len(parts) != 2:
            raise click.UsageError(f"comp wants exactly two functions, got {spec!r}")
        return F.compose(parse_function(parts[0]), parse_function(parts[1]))
    raise click.UsageError(f"unknown function spec {spec!r}")


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------


def _fmt_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _json_safe(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _emit_table(columns: list[str], rows: list[tuple], fmt: str, out: Optional[str]) -> None:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt_cell(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        records = [
            {col: _json_safe(v) for col, v in zip(columns, row)} for row in rows
        ]
        text = json.dumps({"rows": records}, indent=2) + "\n"
    _write(text, out)


def _emit_document(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    _write(text, out)


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def output_options(f):
    f = click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                     default=None, help="JSON config file; flags override it.")(f)
    f = click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
                     help="Output file (default: stdout).")(f)
    f = click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default=None,
                     help="Output format (default from config: csv).")(f)
    return f


def _resolve(cfg: RunConfig, fmt: Optional[str], out_path: Optional[str]) -> tuple[str, Optional[str]]:
    return fmt or cfg.format, out_path if out_path is not None else cfg.out


def _domain_exit(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_DOMAIN)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


@click.group()
@click.version_option(package_name="hyper2d")
def cli() -> None:
    """Two-dimensional hypercomplex numbers, boosts, and hyperbolic motion."""


@cli.command()
@click.option("--alpha", type=float, required=True, help="Structure constant alpha in u^2 = alpha + u*beta.")
@click.option("--beta", type=float, required=True, help="Structure constant beta.")
@output_options
def classify(alpha: float, beta: float, fmt, out_path, config_path) -> None:
    """Report the system class, discriminant, and canonicalization map."""
    cfg = load_config(config_path)
    fmt, out_path = _resolve(cfg, fmt, out_path)
    try:
        params = algebra.SystemParams(alpha, beta)
        cls = algebra.classify(params, cfg.class_epsilon)
        target, cmap = algebra.canonicalize(params, cfg.class_epsilon)
    except (InvalidParameterError, DomainError) as exc:
        _domain_exit(exc)
    columns = [
        "class", "delta", "canonical_alpha", "canonical_beta",
        "map_xx", "map_xy", "map_yx", "map_yy",
    ]
    row = (
        cls.value, params.delta, target.alpha, target.beta,
        cmap.xx, cmap.xy, cmap.yx, cmap.yy,
    )
    _emit_table(columns, [row], fmt, out_path)


def _read_events(path: str) -> list[kinematics.Event]:
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise click.UsageError(f"cannot read events file {path}: {exc}")
    rows = [ln.strip() for ln in lines if ln.strip()]
    if not rows or [h.strip() for h in rows[0].split(",")] != ["x", "t"]:
        raise click.UsageError(f"events file {path} must start with the header 'x,t'")
    events = []
    for ln in rows[1:]:
        parts = ln.split(",")
        if len(parts) != 2:
            raise click.UsageError(f"bad events row {ln!r}")
        try:
            x, t = float(parts[0]), float(parts[1])
        except ValueError:
            raise click.UsageError(f"bad events row {ln!r}")
        events.append((x, t))
    return [kinematics.Event(x, t) for x, t in events]


@cli.command()
@click.option("--v", "velocity", type=float, default=None, help="Frame velocity, |v| < 1.")
@click.option("--rapidity", type=float, default=None, help="Rapidity (alternative to --v).")
@click.option("--events", "events_path", type=click.Path(exists=True, dir_okay=False),
              required=True, help="CSV file of events with header x,t.")
@output_options
def boost(velocity, rapidity, events_path, fmt, out_path, config_path) -> None:
    """Boost events from a file; emits both intervals for each event."""
    cfg = load_config(config_path)
    fmt, out_path = _resolve(cfg, fmt, out_path)
    if (velocity is None) == (rapidity is None):
        raise click.UsageError("give exactly one of --v or --rapidity")
    events = _read_events(events_path)
    try:
        b = (
            kinematics.Boost.from_velocity(velocity)
            if velocity is not None
            else kinematics.Boost(rapidity)
        )
        rows = []
        for e in events:
            out = b.apply(e)
            rows.append((e.x, e.t, out.x, out.t, e.interval(), out.interval()))
    except (InvalidParameterError, DomainError) as exc:
        _domain_exit(exc)
    columns = ["x", "t", "x_boosted", "t_boosted", "interval_before", "interval_after"]
    _emit_table(columns, rows, fmt, out_path)


@cli.command(name="map")
@click.option("--fn", "fn_spec", required=True, help="Function spec (see --help of the group).")
@click.option("--grid", "grid_spec", default=None, help="Grid spec min:max:count,min:max:count.")
@output_options
def map_cmd(fn_spec, grid_spec, fmt, out_path, config_path) -> None:
    """Map a grid through a function; out-of-domain points are flagged."""
    cfg = load_config(config_path)
    fmt, out_path = _resolve(cfg, fmt, out_path)
    func = parse_function(fn_spec)
    grid = parse_grid(grid_spec or cfg.grid)
    points = analysis.map_grid(func, grid, cfg.sector_epsilon, cfg.divisor_epsilon)
    columns = ["x", "t", "u", "v", "in_domain"]
    rows = [(p.x, p.t, p.u, p.v, p.in_domain) for p in points]
    _emit_table(columns, rows, fmt, out_path)


@cli.command()
@click.option("--fn", "fn_spec", required=True, help="Function spec.")
@click.option("--grid", "grid_spec", default=None, help="Grid spec.")
@click.option("--fd-step", type=float, default=None, help="Step for first derivatives.")
@click.option("--fd-step2", type=float, default=None, help="Step for second derivatives.")
@output_options
def check(fn_spec, grid_spec, fd_step, fd_step2, fmt, out_path, config_path) -> None:
    """Verify the analyticity and field equations on a grid.

    Emits a JSON report with both residual maxima; exits 0 when both are
    below the configured tolerances, 1 otherwise.
    """
    cfg = load_config(config_path)
    _, out_path = _resolve(cfg, fmt, out_path)
    func = parse_function(fn_spec)
    grid = parse_grid(grid_spec or cfg.grid)
    step1 = fd_step if fd_step is not None else cfg.fd_step_first
    step2 = fd_step2 if fd_step2 is not None else cfg.fd_step_second
    if step1 <= 0 or step2 <= 0:
        raise click.UsageError("fd steps must be > 0")
    cr = analysis.cr_residual(func, grid, step1, cfg.sector_epsilon, cfg.divisor_epsilon)
    wave = analysis.wave_residual(func, grid, step2, cfg.sector_epsilon, cfg.divisor_epsilon)
    passed = (
        cr.max_abs_cr_residual <= cfg.cr_tolerance
        and wave.max_abs_wave_residual <= cfg.wave_tolerance
    )
    doc = {
        "function": func.spec_string(),
        "grid": {"x_range": list(grid.x_range), "t_range": list(grid.t_range)},
        "cr": cr.as_dict(),
        "wave": wave.as_dict(),
        "tolerances": {"cr": cfg.cr_tolerance, "wave": cfg.wave_tolerance},
        "passed": passed,
    }
    _emit_document(doc, out_path)
    if not passed:
        sys.exit(EXIT_CHECK_FAILED)


@cli.command()
@click.option("--g", "radius", type=float, required=True,
              help="Hyperbola parameter; proper acceleration is 1/g.")
@click.option("--tau", "tau_spec", default="-2:2:101", show_default=True,
              help="Proper-time range min:max:count.")
@output_options
def trajectory(radius, tau_spec, fmt, out_path, config_path) -> None:
    """Sample the constant-acceleration worldline x^2 - t^2 = g^2."""
    cfg = load_config(config_path)
    fmt, out_path = _resolve(cfg, fmt, out_path)
    tau_range = parse_axis(tau_spec, "--tau")
    try:
        traj = fields.hyperbolic_motion(radius, tau_range)
        accel = fields.proper_acceleration(traj, "analytic")
    except (InvalidParameterError, DomainError) as exc:
        _domain_exit(exc)
    g2 = radius * radius
    rows = []
    for s, a in zip(traj.samples, accel):
        residual = abs(s.x * s.x - s.t * s.t - g2) / g2
        rows.append((s.tau, s.t, s.x, a, residual))
    columns = ["tau", "t", "x", "proper_acceleration", "hyperbola_residual"]
    _emit_table(columns, rows, fmt, out_path)


@cli.command()
@click.option("--mode", type=click.Choice(["hyperbolic", "euclidean"]), required=True)
@click.option("--slope", type=float, default=1.0, show_default=True,
              help="Coefficient of the log term.")
@click.option("--intercept", type=float, default=0.0, show_default=True,
              help="Constant offset.")
@click.option("--grid", "grid_spec", default=None, help="Grid spec.")
@output_options
def potential(mode, slope, intercept, grid_spec, fmt, out_path, config_path) -> None:
    """Evaluate the radial solution on a grid (wave or Laplace flavor)."""
    cfg = load_config(config_path)
    fmt, out_path = _resolve(cfg, fmt, out_path)
    grid = parse_grid(grid_spec or cfg.grid)
    rows = []
    if mode == "hyperbolic":
        for x, t in grid.points():
            if analysis.in_right_sector(x, t, cfg.sector_epsilon):
                value = fields.radial_wave_solution(
                    slope, intercept, kinematics.Event(x, t), cfg.sector_epsilon
                )
                rows.append((x, t, value, True))
            else:
                rows.append((x, t, math.nan, False))
        second = "t"
    else:
        for x, y in grid.points():
            if math.hypot(x, y) > 0.0:
                rows.append((x, y, fields.laplace_radial_solution(slope, intercept, x, y), True))
            else:
                rows.append((x, y, math.nan, False))
        second = "y"
    columns = ["x", second, "potential", "in_domain"]
    _emit_table(columns, rows, fmt, out_path)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
