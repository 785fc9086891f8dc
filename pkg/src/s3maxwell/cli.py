"""
Command line entry point.

    s3maxwell spectrum --j-max 3 --n-max 2 --rho 1 --c-light 1
    s3maxwell mode --kind electric --j 1 --n 0 --format json --out mode.json
    s3maxwell verify --suite full

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from . import modes, verify

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str = "spectrum"
    j: int = 1
    n: int = 0
    m: int = 0
    kind: str = "magnetic"
    rho: float = 1.0
    c: float = 1.0
    j_max: int = 3
    n_max: int = 3
    grid_points: int = 128
    chi_margin: float = 0.02
    output_format: str = "csv"
    output_path: str = "-"
    suite: str = "algebra"
    theta: float = None
    phi: float = 0.0
    t: float = 0.0
    normalize: bool = False
    detune: float = 0.0
    tolerances: dict = field(default_factory=dict)

    def validate(self):
        if self.grid_points < 16:
            raise UsageError("--grid-points must be at least 16")
        if not 0 < self.chi_margin < 0.5:
            raise UsageError("--chi-margin must lie in (0, 0.5)")
        if self.rho <= 0 or self.c <= 0:
            raise UsageError("--rho and --c-light must be positive")
        if self.output_format not in ("csv", "json"):
            raise UsageError("--format must be csv or json")
        unknown = set(self.tolerances) - set(verify.DEFAULT_TOLERANCES)
        if unknown:
            raise UsageError(f"unknown tolerance keys: {', '.join(sorted(unknown))}")


def _fmt(x):
    return format(float(x), ".17g")


def _emit(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _render(cfg, columns, rows, key="rows"):
    if cfg.output_format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "config": asdict(cfg),
               "columns": columns, key: [dict(zip(columns, r)) for r in rows]}
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(f"# schema_version={SCHEMA_VERSION}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(v) if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def cmd_spectrum(cfg):
    if cfg.j_max < 0 or cfg.n_max < -1:
        raise UsageError("need --j-max >= 0 and --n-max >= -1 (0 or -1 give an empty table)")
    rows = []
    for j in range(1, cfg.j_max + 1):
        for n in range(cfg.n_max + 1):
            k = n + 1 + j
            rows.append((j, n, k, float(modes.spectrum(j, n, cfg.rho, cfg.c))))
    cols = ["j", "n", "omega_dimensionless", "omega_physical"]
    _emit(_render(cfg, cols, rows), cfg.output_path)
    return EXIT_OK


def _mode_spec(cfg):
    if cfg.j < 1:
        raise UsageError("j = 0 is excluded: magnetic and electric waves need helicity "
                         "+-1 harmonics, which vanish identically at j = 0")
    try:
        return modes.ModeSpec(cfg.kind, cfg.j, cfg.n, cfg.m, cfg.rho, cfg.c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_mode(cfg):
    spec = _mode_spec(cfg)
    chi = np.linspace(cfg.chi_margin, np.pi - cfg.chi_margin, cfg.grid_points)
    sol = modes.build_mode(spec)
    if cfg.normalize:
        sol = sol.normalized(chi)
    amps = sol(chi)
    cols = ["chi"]
    for k in range(1, 11):
        cols += [f"f{k}_re", f"f{k}_im"]
    data = [chi] + [part for a in amps for part in (a.real, a.imag)]
    if cfg.theta is not None:
        pot = modes.potential(sol, cfg.t, chi, cfg.theta, cfg.phi).cyclic
        for name, comp in zip(("A_t", "A_m1", "A_0", "A_p1"), pot):
            cols += [f"{name}_re", f"{name}_im"]
            data += [comp.real, comp.imag]
    rows = [tuple(float(v) for v in r) for r in zip(*data)]
    _emit(_render(cfg, cols, rows), cfg.output_path)
    return EXIT_OK


def cmd_verify(cfg, explicit_format):
    if cfg.suite not in verify.SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(verify.SUITES)}")
    opts = verify.VerifyOptions(grid_points=cfg.grid_points, chi_margin=cfg.chi_margin,
                                detune=cfg.detune, tolerances=cfg.tolerances)
    start = time.perf_counter()
    checks = verify.run_suite(cfg.suite, opts)
    elapsed = time.perf_counter() - start
    ok = all(c.passed for c in checks)
    log = sys.stderr if explicit_format and cfg.output_path in (None, "-") else sys.stdout
    for c in checks:
        rel = "<=" if c.direction == "upper" else ">="
        status = "PASS" if c.passed else "FAIL"
        print(f"[{status}] {c.suite}.{c.name}: {c.value:.3e} (need {rel} {c.tolerance:.1e})",
              file=log)
    print(f"suite {cfg.suite}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s)", file=log)
    if explicit_format:
        cols = ["suite", "check", "value", "tolerance", "direction", "passed"]
        rows = [(c.suite, c.name, c.value, c.tolerance, c.direction, c.passed) for c in checks]
        _emit(_render(cfg, cols, rows, key="report"), cfg.output_path)
    return EXIT_OK if ok else EXIT_FAIL


def _parse_tolerance(text):
    key, sep, val = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected KEY=VAL, got {text!r}")
    try:
        return key.strip(), float(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"tolerance value must be a number: {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with RunConfig defaults")
    common.add_argument("--j", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--kind", choices=[k.value for k in modes.ModeKind])
    common.add_argument("--rho", type=float, help="curvature radius")
    common.add_argument("--c-light", dest="c", type=float, help="speed of light")
    common.add_argument("--j-max", type=int)
    common.add_argument("--n-max", type=int)
    common.add_argument("--grid-points", type=int)
    common.add_argument("--chi-margin", type=float)
    common.add_argument("--format", dest="output_format", choices=["csv", "json"])
    common.add_argument("--out", dest="output_path", metavar="PATH")
    common.add_argument("--suite", choices=verify.SUITES)
    common.add_argument("--theta", type=float, help="add potential columns at this theta")
    common.add_argument("--phi", type=float)
    common.add_argument("--t", type=float)
    common.add_argument("--normalize", action="store_true", default=None,
                        help="rescale so max |f2| = 1 on the grid")
    common.add_argument("--detune", type=float,
                        help="shift omega in the radial/full suites (negative control)")
    common.add_argument("--tolerance", action="append", type=_parse_tolerance,
                        metavar="KEY=VAL", default=None)

    p = argparse.ArgumentParser(prog="s3maxwell",
                                description="Maxwell spherical waves on the 3-sphere")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="eigenfrequency table")
    sub.add_parser("mode", parents=[common], help="sample radial amplitudes of one mode")
    sub.add_parser("verify", parents=[common], help="run a verification suite")
    return p


def load_config(args):
    """Defaults, then the optional JSON file, then explicit flags."""
    cfg = asdict(RunConfig())
    if args.config:
        try:
            with open(args.config) as fh:
                from_file = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file: {exc}") from exc
        valid = {f.name for f in fields(RunConfig)}
        bad = set(from_file) - valid
        if bad:
            raise UsageError(f"unknown config keys: {', '.join(sorted(bad))}")
        cfg.update(from_file)
    for name, val in vars(args).items():
        if name in ("config", "tolerance") or val is None:
            continue
        cfg[name] = val
    if args.tolerance:
        cfg["tolerances"] = {**cfg.get("tolerances", {}), **dict(args.tolerance)}
    out = RunConfig(**cfg)
    out.validate()
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        if cfg.command == "spectrum":
            return cmd_spectrum(cfg)
        if cfg.command == "mode":
            return cmd_mode(cfg)
        return cmd_verify(cfg, explicit_format=args.output_format is not None)
    except UsageError as exc:
        print(f"s3maxwell {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
