"""Command line front end emitting deterministic CSV.

Subcommands
-----------
measure   read a 16-line state file, print one row of correlation measures
evolve    time series of measures along one-sided (or two-sided) emission
figure    write the data behind the six reference figures to fig<N>.csv
critical  print the two critical mixing parameters of the discordant family
sweep     tabulate regime booleans over a grid of (w, s) pairs

All numeric output uses 17 significant digits and line-feed endings, so
identical invocations produce byte-identical files.  Exit codes: 0 on
success, 2 on parse errors (state files, config files, usage), 3 on state
validation errors, 4 on domain or parameter errors.
"""

import argparse
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from . import dynamics, families, measures, states

MEASURE_HEADER = "d1,d2,sqrt_d2,negativity,d1_method"
EVOLVE_HEADER = "gt,d1,d2,sqrt_d2,negativity"
SWEEP_HEADER = "w,s,d2_inc_A,d1_inc_A,d2_inc_B,t_zero"
FIGURE_HEADERS = {
    1: "theta,negativity,sqrt_d2,d1",
    2: "gt,d1,sqrt_d2",
    3: "gt,d1,sqrt_d2",
    4: "gt,d1,sqrt_d2",
    5: "gt,d1,sqrt_d2",
    6: "gt,sqrt_d2_sideA,sqrt_d2_sideB",
}
# family and (w, s) behind each dynamical figure; figure 1 is the theta scan
FIGURE_STATES = {
    2: ("classical", 0.25, 0.25),
    3: ("discordant", 0.076, 0.179),
    4: ("discordant", 0.2, 0.2),
    5: ("discordant", 0.4, 0.2),
    6: ("discordant", 0.4, 0.2),
}


class ConfigError(ValueError):
    """A config file or invocation did not parse."""


class UnknownFigure(ValueError):
    """Figure number outside 1..6."""


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by all subcommands, overridable per invocation."""

    gamma0: float = 1.0
    t_max: float = 5.0
    n_points: int = 1001
    oracle_grid: int = 2000
    oracle_refine: int = 200
    seed: int = 0

    def check(self):
        if self.gamma0 <= 0.0:
            raise ValueError(f"gamma0 must be positive, got {self.gamma0!r}")
        if self.t_max <= 0.0:
            raise ValueError(f"tmax must be positive, got {self.t_max!r}")
        if self.n_points < 2:
            raise ValueError(f"points must be at least 2, got {self.n_points!r}")
        if self.oracle_grid < 1 or self.oracle_refine < 1:
            raise ValueError("oracle grid and refine counts must be positive")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed!r}")


_CONFIG_KEYS = {f.name: f.type for f in fields(RunConfig)}
_FLAG_TO_FIELD = {
    "gamma0": "gamma0",
    "tmax": "t_max",
    "points": "n_points",
    "grid": "oracle_grid",
    "refine": "oracle_refine",
    "seed": "seed",
}
# config files accept both field names and the matching flag spellings
_CONFIG_ALIASES = {flag: field for flag, field in _FLAG_TO_FIELD.items()}


def read_config_file(path) -> dict:
    """Parse a plain key=value config file into RunConfig field values."""
    out = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}")
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, text = line.partition("=")
        key, text = key.strip(), text.strip()
        key = _CONFIG_ALIASES.get(key, key)
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        caster = int if _CONFIG_KEYS[key] in ("int", int) else float
        try:
            out[key] = caster(text)
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: bad value {text!r} for {key!r}")
    return out


def build_config(ns) -> RunConfig:
    """Defaults, overridden by the config file, overridden by flags."""
    cfg = RunConfig()
    if getattr(ns, "config", None) is not None:
        cfg = replace(cfg, **read_config_file(ns.config))
    overrides = {}
    for flag, field in _FLAG_TO_FIELD.items():
        value = getattr(ns, flag, None)
        if value is not None:
            overrides[field] = value
    if overrides:
        cfg = replace(cfg, **overrides)
    cfg.check()
    return cfg


def fmt(value) -> str:
    return format(float(value), ".17g")


def fmt_bool(flag) -> str:
    return "true" if flag else "false"


def write_rows(out_path, header, rows):
    """Emit one header line plus formatted rows, LF endings only."""
    text = header + "\n" + "".join(",".join(row) + "\n" for row in rows)
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _measure_row(rho, cfg) -> list:
    d2 = measures.d2_closed(rho)
    try:
        xs = states.to_x_state(rho)
    except states.NotXShaped:
        d1, method = measures.d1_oracle(rho, cfg.oracle_grid, cfg.oracle_refine)[0], "oracle"
    else:
        d1, method = measures.d1_x_with_method(xs, cfg.oracle_grid, cfg.oracle_refine)
    neg = measures.negativity(rho)
    return [fmt(d1), fmt(d2), fmt(np.sqrt(d2)), fmt(neg), method]


def cmd_measure(ns) -> int:
    cfg = build_config(ns)
    rho = states.read_state_file(ns.state_file)
    rho = states.validate(rho)
    write_rows(ns.out, MEASURE_HEADER, [_measure_row(rho, cfg)])
    return 0


def _initial_state(ns):
    given_family = ns.family is not None
    given_file = getattr(ns, "state_file", None) is not None
    if given_family == given_file:
        raise ConfigError("provide exactly one of --family or a state file")
    if given_file:
        return states.validate(states.read_state_file(ns.state_file))
    p = families.FamilyParams(ns.family, theta=ns.theta, w=ns.w, s=ns.s)
    return families.make_state(p)


def cmd_evolve(ns) -> int:
    cfg = build_config(ns)
    rho0 = _initial_state(ns)
    rows = []
    for t in np.linspace(0.0, cfg.t_max, cfg.n_points):
        ev = dynamics.apply_channel(rho0, dynamics.EmissionChannel(ns.side, float(t), cfg.gamma0))
        row = _measure_row(ev, cfg)
        rows.append([fmt(cfg.gamma0 * t)] + row[:4])
    write_rows(ns.out, EVOLVE_HEADER, rows)
    return 0


def _figure_rows(n, cfg):
    if n == 1:
        rows = []
        for theta in np.linspace(0.0, np.pi / 2, cfg.n_points):
            rho = families.make_state(families.FamilyParams("theta", theta=float(theta)))
            d2 = measures.d2_closed(rho)
            d1 = measures.d1_x_with_method(states.to_x_state(rho), cfg.oracle_grid, cfg.oracle_refine)[0]
            rows.append([fmt(theta), fmt(measures.negativity(rho)), fmt(np.sqrt(d2)), fmt(d1)])
        return rows
    family, w, s = FIGURE_STATES[n]
    p = families.FamilyParams(family, w=w, s=s)
    t = np.linspace(0.0, cfg.t_max, cfg.n_points)
    if n == 5:
        # the D1 curve of this state touches zero at t0 = ln(4w)/gamma0, which a
        # uniform grid never samples closely enough to show; add the exact point
        t = np.sort(np.append(t, np.log(4.0 * w) / cfg.gamma0))
    if n == 6:
        a = families.d2_timeseries_A(p, t, cfg.gamma0)
        b = families.d2_timeseries_B(p, t, cfg.gamma0)
        return [[fmt(gt), fmt(np.sqrt(va)), fmt(np.sqrt(vb))]
                for gt, va, vb in zip(a.times, a.values, b.values)]
    d1 = families.d1_timeseries_A(p, t, cfg.gamma0)
    d2 = families.d2_timeseries_A(p, t, cfg.gamma0)
    return [[fmt(gt), fmt(v1), fmt(np.sqrt(v2))]
            for gt, v1, v2 in zip(d1.times, d1.values, d2.values)]


def cmd_figure(ns) -> int:
    if ns.n not in FIGURE_HEADERS:
        raise UnknownFigure(f"no figure {ns.n}; expected 1..6")
    cfg = build_config(ns)
    out = ns.out if ns.out is not None else f"fig{ns.n}.csv"
    write_rows(out, FIGURE_HEADERS[ns.n], _figure_rows(ns.n, cfg))
    return 0


def cmd_critical(ns) -> int:
    build_config(ns)
    w_c = families.find_critical_w("d2")
    w_bar = families.find_critical_w("d1")
    analytic = (2.0 - np.sqrt(2.0)) / 8.0
    sys.stdout.write(
        f"w_c (hilbert-schmidt growth threshold) = {fmt(w_c)}\n"
        f"analytic reference (2 - sqrt(2))/8     = {fmt(analytic)}\n"
        f"w_bar_c (trace-norm growth threshold)  = {fmt(w_bar)}\n"
        f"w_bar_c > w_c: {fmt_bool(w_bar > w_c)}\n"
    )
    return 0


def cmd_sweep(ns) -> int:
    cfg = build_config(ns)
    if ns.wcount < 1:
        raise ValueError(f"wcount must be positive, got {ns.wcount!r}")
    if ns.s_policy == "fixed" and ns.s is None:
        raise ValueError("s-policy fixed requires --s")
    rows = []
    for w in np.linspace(ns.wmin, ns.wmax, ns.wcount):
        s = families.s_max(float(w)) if ns.s_policy == "smax" else ns.s
        try:
            p = families.FamilyParams(ns.family, w=float(w), s=float(s))
        except families.ParamOutOfRange as exc:
            print(f"warning: skipping w={fmt(w)}, s={fmt(s)}: {exc}", file=sys.stderr)
            continue
        rep = families.regime(p, cfg.gamma0)
        t_zero = float("nan") if rep.t_zero is None else rep.t_zero
        rows.append([fmt(rep.w), fmt(rep.s), fmt_bool(rep.d2_increases_under_A),
                     fmt_bool(rep.d1_increases_under_A), fmt_bool(rep.d2_increases_under_B),
                     fmt(t_zero)])
    write_rows(ns.out, SWEEP_HEADER, rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--gamma0", type=float, default=None, help="emission rate (default 1)")
    shared.add_argument("--tmax", type=float, default=None, help="final time (default 5)")
    shared.add_argument("--points", type=int, default=None, help="samples per series (default 1001)")
    shared.add_argument("--grid", type=int, default=None, help="oracle sphere-lattice size (default 2000)")
    shared.add_argument("--refine", type=int, default=None, help="oracle refinement iterations (default 200)")
    shared.add_argument("--seed", type=int, default=None, help="seed for randomized helpers (default 0)")
    shared.add_argument("--config", default=None, help="key=value config file")
    shared.add_argument("--out", default=None, help="output file (default: stdout, or fig<N>.csv)")

    parser = argparse.ArgumentParser(prog="discordlab",
                                     description="two-qubit discord measures under local emission")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", parents=[shared], help="measures of one state file")
    p.add_argument("state_file", help="16-line re,im state file")
    p.set_defaults(run=cmd_measure)

    p = sub.add_parser("evolve", parents=[shared], help="measures along an emission channel")
    p.add_argument("state_file", nargs="?", default=None, help="16-line re,im state file")
    p.add_argument("--family", choices=("classical", "discordant", "theta"), default=None)
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--w", type=float, default=None)
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--side", choices=("A", "B", "both"), default="A")
    p.set_defaults(run=cmd_evolve)

    p = sub.add_parser("figure", parents=[shared], help="write fig<N>.csv data")
    p.add_argument("n", type=int, help="figure number, 1..6")
    p.set_defaults(run=cmd_figure)

    p = sub.add_parser("critical", parents=[shared], help="critical mixing parameters")
    p.set_defaults(run=cmd_critical)

    p = sub.add_parser("sweep", parents=[shared], help="regime booleans over a (w, s) grid")
    p.add_argument("--family", choices=("classical", "discordant"), default="discordant")
    p.add_argument("--wmin", type=float, default=0.01)
    p.add_argument("--wmax", type=float, default=0.49)
    p.add_argument("--wcount", type=int, default=25)
    p.add_argument("--s-policy", dest="s_policy", choices=("smax", "fixed"), default="smax")
    p.add_argument("--s", type=float, default=None)
    p.set_defaults(run=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return ns.run(ns)
    except (states.StateFileError, ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except states.StateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, dynamics.InvalidTime) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
