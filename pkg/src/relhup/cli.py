"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain or validation
error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import configparser
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import __version__, bounds, kinematics, montecarlo, verify
from .core import NATURAL, SI, MeasuredVector3, PhysicalConstants
from .propagation import evaluate, modulus_sigma, norm3, propagate_sigma

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class ValidationError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    units: str = NATURAL
    hbar: Optional[float] = None
    c: Optional[float] = None
    format: str = "csv"
    output: Optional[str] = None
    seed: int = 42
    samples: int = 1_000_000

    def __post_init__(self):
        for name in ("hbar", "c"):
            val = getattr(self, name)
            if val is not None and not val > 0:
                raise ValidationError(f"--{name} must be positive, got {val}")
        if self.samples < 2:
            raise ValidationError(f"--samples must be >= 2, got {self.samples}")

    def constants(self) -> PhysicalConstants:
        if self.units == NATURAL:
            if self.hbar not in (None, 1.0) or self.c not in (None, 1.0):
                raise ValidationError("natural units fix hbar = c = 1; "
                                      "use --units si to override constants")
            return PhysicalConstants.natural()
        return PhysicalConstants.si(self.hbar, self.c)


def fmt(x) -> str:
    """Shortest round-trip decimal for floats."""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def render(rows: list, columns: list, config: RunConfig) -> str:
    if config.format == "json":
        meta = {"seed": config.seed, "units": config.units, "version": __version__}
        return json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(fmt(row.get(col, "")) for col in columns) + "\n")
    return buf.getvalue()


def emit(text: str, config: RunConfig):
    if config.output:
        with open(config.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands ---------------------------------------------------------------

SWEEP_COLUMNS = ["beta", "gamma", "zeta", "bound_xp", "bound_et"]


def zeta_sweep_rows(beta_min: float, beta_max: float, steps: int, hbar: float) -> list:
    if not (0 <= beta_min < beta_max < 1):
        raise UsageError(f"need 0 <= beta-min < beta-max < 1, got {beta_min}, {beta_max}")
    if steps < 2:
        raise UsageError(f"--steps must be >= 2, got {steps}")
    rows = []
    for i in range(steps):
        beta = beta_min + (beta_max - beta_min) * i / (steps - 1)
        g = kinematics.gamma_from_beta(beta)
        rows.append({
            "beta": beta,
            "gamma": g,
            "zeta": bounds.zeta(g),
            "bound_xp": bounds.bound_xp_rel(g, hbar),
            "bound_et": bounds.bound_et_rel(g, hbar),
        })
    return rows


def cmd_zeta_sweep(args, config: RunConfig) -> int:
    rows = zeta_sweep_rows(args.beta_min, args.beta_max, args.steps, config.constants().hbar)
    emit(render(rows, SWEEP_COLUMNS, config), config)
    return EXIT_OK


def cmd_bounds(args, config: RunConfig) -> int:
    if args.beta < 0:
        raise UsageError(f"--beta must be >= 0, got {args.beta}")
    report = bounds.bound_report(args.beta, config.constants(), args.dt)
    row = report.as_dict()
    emit(render([row], list(row), config), config)
    return EXIT_OK


PROPAGATE_FUNCTIONS = ("vector_norm", "gamma", "momentum", "position_x")


def _floats(section, key, count=None) -> list:
    if key not in section:
        raise UsageError(f"missing key {key!r}")
    try:
        vals = [float(x) for x in section[key].replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"key {key!r}: not a list of numbers: {section[key]!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"key {key!r} needs {count} value(s), got {len(vals)}")
    return vals


def _speed(section, c: float) -> float:
    if "v" in section:
        return _floats(section, "v", 1)[0]
    if "beta" in section:
        return _floats(section, "beta", 1)[0] * c
    raise UsageError("missing key 'v' (or 'beta')")


def read_propagate_config(path: str) -> configparser.SectionProxy:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string("[propagate]\n" + text, source=path)
    except configparser.Error as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from None
    return parser["propagate"]


def propagate_problem(section, c: float):
    """Translate a config section into (name, function, point, sigmas)."""
    name = section.get("function", "").strip()
    if name not in PROPAGATE_FUNCTIONS:
        raise UsageError(f"function must be one of {', '.join(PROPAGATE_FUNCTIONS)}; got {name!r}")
    if name == "vector_norm":
        x = _floats(section, "components", 3)
        s = _floats(section, "sigmas", 3)
        return name, norm3, x, s
    if name == "gamma":
        v = _speed(section, c)
        return name, (lambda v: kinematics.lorentz_gamma(v, c)), [v], _floats(section, "dv", 1)
    if name == "momentum":
        m0 = _floats(section, "m0", 1)[0]
        if not m0 > 0:
            raise ValidationError(f"m0 must be positive, got {m0}")
        v = _speed(section, c)
        return name, (lambda v: kinematics.momentum_p(m0, v, c)), [v], _floats(section, "dv", 1)
    t = _floats(section, "t", 1)[0]
    q = _floats(section, "q", 1)[0]
    s = _floats(section, "dt", 1) + _floats(section, "dq", 1)
    return name, (lambda t, q: kinematics.position_x(t, q, c)), [t, q], s


def _mc_sigma(name, x, sigmas, config: RunConfig, c: float, m0: float = 1.0) -> float:
    """Sample standard deviation of the chosen function under Gaussian inputs."""
    if name == "vector_norm":
        return montecarlo.sample_modulus(MeasuredVector3(x, sigmas), config.samples, config.seed).std
    mu = np.asarray(x, dtype=float)
    sd = np.asarray(sigmas, dtype=float)
    pts = montecarlo.draw(lambda rng, m: mu + sd * rng.standard_normal((m, mu.size)),
                          config.samples, config.seed)
    if name == "position_x":
        radicand = (c * pts[:, 0]) ** 2 - pts[:, 1] ** 2
        if np.any(radicand <= 0):
            raise ValidationError("sampled points left the timelike region; sigmas too large")
        vals = np.sqrt(radicand)
    else:
        v = pts[:, 0]
        if np.any(np.abs(v) >= c):
            raise ValidationError("sampled speeds reached c; dv too large")
        vals = 1.0 / np.sqrt(1.0 - (v / c) ** 2)
        if name == "momentum":
            vals = vals * m0 * v
    return montecarlo.summarize(vals, config.seed).std


def cmd_propagate(args, config: RunConfig) -> int:
    section = read_propagate_config(args.config)
    c = config.constants().c
    name, f, x, sigmas = propagate_problem(section, c)
    if any(s < 0 for s in sigmas):
        raise ValidationError(f"sigmas must be >= 0, got {sigmas}")
    row = {"function": name, "value": evaluate(f, x), "sigma": propagate_sigma(f, x, sigmas)}
    if name == "vector_norm" and any(x):
        # closed form is reported alongside the engine value
        row["sigma_closed_form"] = modulus_sigma(MeasuredVector3(x, sigmas))
    if args.mc:
        m0 = _floats(section, "m0", 1)[0] if name == "momentum" else 1.0
        mc = _mc_sigma(name, x, sigmas, config, c, m0)
        row["mc_sigma"] = mc
        row["mc_rel_dev"] = montecarlo.relative_deviation(mc, row["sigma"])
    emit(render([row], list(row), config), config)
    return EXIT_OK


def cmd_verify(args, config: RunConfig) -> int:
    const = config.constants()
    failed = 0
    lines = []
    for result in verify.run(args.suite, const, config.seed, config.samples):
        lines.append(result.line())
        failed += not result.passed
    lines.append(f"{len(lines) - failed} passed, {failed} failed")
    emit("\n".join(lines) + "\n", config)
    return EXIT_VERIFY if failed else EXIT_OK


# --- argument parsing -------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_options(parser, suppress: bool):
    # registered on the top-level parser and on every subcommand so the
    # flags may appear on either side of the subcommand name
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--units", choices=["si", "natural"], default=d("natural"),
                        help="unit system (default natural: hbar = c = 1)")
    parser.add_argument("--hbar", type=float, default=d(None), help="override hbar (SI mode)")
    parser.add_argument("--c", type=float, default=d(None), help="override c (SI mode)")
    parser.add_argument("--format", choices=["csv", "json"], default=d("csv"))
    parser.add_argument("--output", default=d(None), metavar="PATH")
    parser.add_argument("--seed", type=int, default=d(42))
    parser.add_argument("--samples", type=int, default=d(1_000_000))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="relhup", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("zeta-sweep", help="tabulate zeta and bounds over a beta grid")
    _global_options(p, suppress=True)
    p.add_argument("--beta-min", type=float, required=True)
    p.add_argument("--beta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_zeta_sweep)

    p = sub.add_parser("bounds", help="all bounds for one speed")
    _global_options(p, suppress=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--dt", type=float, default=None, help="measuring time for the energy floor")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("propagate", help="delta-method sigma of a built-in function")
    _global_options(p, suppress=True)
    p.add_argument("config", help="key = value file")
    p.add_argument("--mc", action="store_true", help="also estimate sigma by Monte Carlo")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("verify", help="run property suites")
    _global_options(p, suppress=True)
    p.add_argument("suite", choices=list(verify.SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            units=SI if args.units == "si" else NATURAL,
            hbar=args.hbar,
            c=args.c,
            format=args.format,
            output=args.output,
            seed=args.seed,
            samples=args.samples,
        )
        config.constants()
        return args.func(args, config)
    except UsageError as exc:
        print(f"relhup: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, ValueError) as exc:
        print(f"relhup: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
