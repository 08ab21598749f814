"""Command-line front end: ``verify``, ``sweep``, ``tables`` and ``render``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import verifier as V
from .errors import BranchMismatch, HCVError
from .harmonic import (
    F_a_closed_form,
    convolve,
    endpoint_a,
    make_F_a,
    make_f_beta,
)

EXIT_PASS = 0
EXIT_RENDER_ERROR = 1
EXIT_FAIL = 2
EXIT_UNDECIDED = 3
EXIT_USAGE = 64

SWEEP_COLUMNS = ("n", "a", "theta", "case_branch", "min_minor", "max_root_modulus",
                 "max_dilatation_sample", "chd_max_crossings", "verdict")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    a: float | None = None
    theta: float | None = None
    beta: float = math.pi / 2
    grid: dict = field(default_factory=lambda: {"radial": 64, "angular": 256})
    tolerances: dict = field(default_factory=dict)
    output_path: str = "-"
    format: str = "csv"
    extra: dict = field(default_factory=dict)

    def validate(self):
        for k, v in self.tolerances.items():
            if not v > 0:
                raise UsageError(f"tolerance {k} must be positive")
        if min(self.grid.values()) < 8:
            raise UsageError("grid dimensions must be at least 8")
        if self.a is not None and not -1 < self.a < 1:
            raise UsageError(f"a = {self.a} must lie in (-1, 1)")
        if self.n is not None and self.n < 1:
            raise UsageError("n must be a positive integer")
        if not 0 < self.beta < math.pi:
            raise UsageError("beta must lie in (0, pi)")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def fmt(x) -> str:
    """17 significant digits for floats; integers and text unchanged."""
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.17g}"
    if isinstance(x, (complex, np.complexfloating)):
        return f"{x.real:.17g}{x.imag:+.17g}j"
    return str(x)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _tolerance_args(p):
    p.add_argument("--minor-rel", type=float, default=None,
                   help=f"closed-form minor tolerance (default 1e-8, or ${V.ENV_MINOR_TOL})")
    p.add_argument("--root-tol", type=float, default=1e-9)
    p.add_argument("--sample-margin", type=float, default=1e-9,
                   help="window for snapping a and theta onto special branches")


def _sampling_args(p):
    p.add_argument("--radial", type=int, default=64)
    p.add_argument("--angular", type=int, default=256)
    p.add_argument("--no-chd", action="store_true", help="skip the crossing-count check")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hcv", description="Zero-location verification for harmonic convolutions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="verify one parameter point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=math.pi / 2)
    _tolerance_args(p)
    _sampling_args(p)

    p = sub.add_parser("sweep", help="verify a deterministic parameter grid")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--a-count", type=int, default=8,
                   help="points on [(n-2)/(n+2), a-max] per n")
    p.add_argument("--a-max", type=float, default=1 - 1e-3)
    p.add_argument("--theta-count", type=int, default=16, help="points on [0, 2 pi)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default="-")
    p.add_argument("--workers", type=int, default=1)
    _tolerance_args(p)
    _sampling_args(p)

    p = sub.add_parser("tables", help="certify one split-determinant table")
    p.add_argument("--table", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    _tolerance_args(p)

    p = sub.add_parser("render", help="write an SVG of an image grid")
    p.add_argument("--map", choices=("f_beta", "F_a", "conv"), required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=math.pi / 2)
    p.add_argument("--r", type=float, default=0.99, help="outermost circle radius")
    p.add_argument("--radial", type=int, default=8, help="number of circles")
    p.add_argument("--angular", type=int, default=16, help="number of radii")
    p.add_argument("--samples", type=int, default=720, help="points per traced curve")
    p.add_argument("--output", default="render.svg")
    p.add_argument("--csv", default=None, help="boundary CSV for --map conv (default: next to the SVG)")
    return parser


def _config(args) -> RunConfig:
    tol = {}
    if hasattr(args, "root_tol"):
        minor = args.minor_rel if args.minor_rel is not None else V.Tolerances.from_env().minor_rel
        tol = {"minor_rel": minor, "root_tol": args.root_tol, "sample_margin": args.sample_margin}
    grid = {"radial": getattr(args, "radial", 64), "angular": getattr(args, "angular", 256)}
    extra = {k: v for k, v in vars(args).items()
             if k not in ("command", "n", "a", "theta", "beta", "radial", "angular", "minor_rel",
                          "root_tol", "sample_margin", "output", "format")}
    cfg = RunConfig(args.command, getattr(args, "n", None), getattr(args, "a", None),
                    getattr(args, "theta", None), getattr(args, "beta", math.pi / 2), grid, tol,
                    getattr(args, "output", "-"), getattr(args, "format", "svg" if args.command == "render"
                                                          else "csv"), extra)
    cfg.validate()
    return cfg


def _tolerances(cfg: RunConfig) -> V.Tolerances:
    t = cfg.tolerances
    return V.Tolerances(minor_rel=t["minor_rel"], root_tol=t["root_tol"], branch_window=t["sample_margin"])


def _sampling(cfg: RunConfig) -> V.SamplingConfig:
    return V.SamplingConfig(radial=cfg.grid["radial"], angular=cfg.grid["angular"],
                            check_chd=not cfg.extra.get("no_chd", False))


def _exit_for(verdicts) -> int:
    if any(v == "fail" for v in verdicts):
        return EXIT_FAIL
    if any(v == "undecided" for v in verdicts):
        return EXIT_UNDECIDED
    return EXIT_PASS


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def format_verdict(v: V.CaseVerdict) -> str:
    lines = [
        f"n = {v.n}  a = {fmt(v.a)}  theta = {fmt(v.theta)}",
        f"branch: {v.branch.value}{'  (exploratory: a below the endpoint)' if v.exploratory else ''}",
        f"zero location: certificate {v.certificate.value}, root oracle {v.oracle.value}",
        f"max root modulus of p: {fmt(v.max_root_modulus)}",
    ]
    for k, m in enumerate(v.minors, 1):
        lines.append(f"  M_{k} = {fmt(m)}")
    if v.closed_form_rel_error is not None:
        lines.append(f"closed-form minors: worst relative error {fmt(v.closed_form_rel_error)} at k = {v.worst_k}")
    if v.identity_error is not None:
        lines.append(f"endpoint identity p + e^(-i theta) p*: max coefficient error {fmt(v.identity_error)}")
    lines.append(f"max sampled |dilatation|: {fmt(v.max_dilatation_sample)}")
    if v.chd_max_crossings is not None:
        lines.append(f"max horizontal crossings: {v.chd_max_crossings}")
    for note in v.notes:
        lines.append(f"note: {note}")
    lines.append(f"verdict: {v.verdict}")
    return "\n".join(lines)


def cmd_verify(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if abs(cfg.beta - math.pi / 2) > 1e-7:
        raise UsageError("verification is implemented for beta = pi/2 only")
    v = V.verify_point(cfg.n, cfg.a, cfg.theta, _tolerances(cfg), _sampling(cfg))
    print(format_verdict(v), file=out)
    return _exit_for([v.verdict])


def sweep_points(n_min: int, n_max: int, a_count: int, a_max: float, theta_count: int):
    pts = []
    if a_count < 0 or theta_count < 0:
        raise UsageError("grid counts must be non-negative")
    thetas = 2 * np.pi * np.arange(theta_count) / theta_count if theta_count else []
    for n in range(n_min, n_max + 1):
        lo = endpoint_a(n)
        if a_count >= 2:
            avals = np.linspace(lo, a_max, a_count)
        else:
            avals = np.array([lo] * a_count)
        for a in avals:
            for t in thetas:
                pts.append((n, float(a), float(t)))
    return pts


def cmd_sweep(cfg: RunConfig, out=None) -> int:
    e = cfg.extra
    pts = sweep_points(e["n_min"], e["n_max"], e["a_count"], e["a_max"], e["theta_count"])
    own = out is None and cfg.output_path != "-"
    stream = open(cfg.output_path, "w", newline="") if own else (out or sys.stdout)
    verdicts = []
    try:
        results = V.sweep(pts, _tolerances(cfg), _sampling(cfg), workers=e.get("workers", 1))
        if cfg.format == "csv":
            w = csv.writer(stream, lineterminator="\n")
            w.writerow(SWEEP_COLUMNS)
            stream.flush()
            for v in results:
                row = v.row()
                w.writerow([fmt(row[c]) for c in SWEEP_COLUMNS])
                stream.flush()
                verdicts.append(v.verdict)
        else:
            rows = []
            for v in results:
                rows.append(v.row())
                verdicts.append(v.verdict)
            json.dump(rows, stream, indent=1)
            stream.write("\n")
    except KeyboardInterrupt:
        stream.write("#ABORTED\n")
        stream.flush()
        return 130
    finally:
        if own:
            stream.close()
    return _exit_for(verdicts)


def cmd_tables(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    tol = V.Tolerances(table_rel=cfg.tolerances["minor_rel"])
    rep = V.table_verify(str(cfg.extra["table"]), cfg.n, cfg.a, cfg.theta, tol)
    print(f"table {rep.table}: n = {rep.n}  a = {fmt(rep.a)}  theta = {fmt(rep.theta)}", file=out)
    print("pattern                       formula                                  numeric"
          "                                  abs error", file=out)
    for e in rep.entries:
        err = abs(e.numeric_value - e.formula_value)
        line = (f"{e.label:<30}{fmt(e.formula_value):<41} {fmt(e.numeric_value):<41} {err:.3e}"
                f"  {'ok' if e.passed else 'MISMATCH'}")
        if e.alternatives:
            line += "  readings: " + ", ".join(f"{k} rel err {r:.2e}" for k, r in e.alternatives.items())
            line += f" -> {e.matched_reading}"
        print(line, file=out)
    print(f"nonzero split determinants: {rep.nonzero_count} (listed: {rep.expected_count})"
          f"  {'ok' if rep.count_matches else 'MISMATCH'}", file=out)
    if rep.unlisted_nonzero:
        print(f"  nonzero but not listed: {', '.join(rep.unlisted_nonzero)}", file=out)
    if rep.listed_zero:
        print(f"  listed but zero: {', '.join(rep.listed_zero)}", file=out)
    print(f"sum of splits {fmt(rep.split_sum)} vs minor {fmt(rep.minor)}"
          f"  relative error {rep.multilinear_rel_error:.3e}", file=out)
    # an entry only counts as failed when no reading matches it
    bad = [e for e in rep.entries
           if not e.passed and not any(r < tol.table_rel for r in e.alternatives.values())]
    ok = not bad and rep.count_matches and rep.multilinear_rel_error < 1e-8
    return EXIT_PASS if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _series_order(r: float) -> int:
    # tail below 1e-17 relative at radius r
    return int(min(1 << 17, max(256, math.ceil(40 / -math.log(r)))))


def map_evaluator(kind: str, n: int, a: float, theta: float, beta: float, r: float):
    """Callable ``z -> f(z)`` for the chosen harmonic map, valid for ``|z| <= r``."""
    if kind == "F_a":
        def f(z):
            H, G = F_a_closed_form(a, z)
            return H + np.conj(G)
        return f
    order = _series_order(r)
    fb = make_f_beta(beta, theta, n, order)
    if kind == "f_beta":
        return fb
    return convolve(make_F_a(a, order), fb)


def _grid_curves(f, r: float, radial: int, angular: int, samples: int):
    t = 2 * np.pi * np.arange(samples + 1) / samples
    curves = []
    for i in range(1, radial + 1):
        curves.append(f(r * i / radial * np.exp(1j * t)))
    s = r * np.linspace(0, 1, samples)
    for j in range(angular):
        curves.append(f(s * np.exp(2j * np.pi * j / angular)))
    return curves


def write_svg(path: str, curves, header: str, size: int = 800):
    pts = np.concatenate(curves)
    x0, x1 = float(pts.real.min()), float(pts.real.max())
    y0, y1 = float(pts.imag.min()), float(pts.imag.max())
    span = max(x1 - x0, y1 - y0, 1e-12)
    pad = 0.05 * span
    buf = io.StringIO()
    buf.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    buf.write(f"<!-- RunConfig {header.replace('--', '- -')} -->\n")
    buf.write(f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
              f'viewBox="{x0 - pad:.6f} {-(y1 + pad):.6f} {span + 2 * pad:.6f} {span + 2 * pad:.6f}">\n')
    sw = span / 800
    for c in curves:
        coords = " ".join(f"{z.real:.6f},{-z.imag:.6f}" for z in c)
        buf.write(f'<polyline fill="none" stroke="black" stroke-width="{sw:.6g}" points="{coords}"/>\n')
    buf.write("</svg>\n")
    with open(path, "w") as fh:
        fh.write(buf.getvalue())


def cmd_render(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    e = cfg.extra
    r = e["r"]
    if not 0 < r < 1:
        raise UsageError("--r must lie in (0, 1)")
    if e["samples"] < 8:
        raise UsageError("--samples must be at least 8")
    kind = e["map"]
    f = map_evaluator(kind, cfg.n, cfg.a, cfg.theta, cfg.beta, r)
    curves = _grid_curves(f, r, cfg.grid["radial"], cfg.grid["angular"], e["samples"])
    if not all(np.all(np.isfinite(c)) for c in curves):
        print("error: non-finite sample in the image grid", file=sys.stderr)
        return EXIT_RENDER_ERROR
    write_svg(cfg.output_path, curves, cfg.to_json())
    print(f"wrote {cfg.output_path} ({len(curves)} polylines)", file=out)
    if kind == "conv":
        csv_path = e["csv"] or (cfg.output_path.rsplit(".", 1)[0] + ".csv")
        samples = 4096
        t = 2 * np.pi * np.arange(samples) / samples
        z = r * np.exp(1j * t)
        fz = f(z)
        phi = f.analytic_difference()(z)
        if not (np.all(np.isfinite(fz)) and np.all(np.isfinite(phi))):
            print("error: non-finite boundary sample", file=sys.stderr)
            return EXIT_RENDER_ERROR
        with open(csv_path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["t", "f_re", "f_im", "phi_re", "phi_im"])
            for row in zip(t, fz.real, fz.imag, phi.real, phi.imag):
                w.writerow([fmt(float(x)) for x in row])
        crossings = V.max_horizontal_crossings(phi, 64)
        print(f"wrote {csv_path} (boundary of f and of h - g; max horizontal crossings {crossings})", file=out)
    return EXIT_PASS


COMMANDS = {"verify": cmd_verify, "sweep": cmd_sweep, "tables": cmd_tables, "render": cmd_render}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, BranchMismatch, ValueError) as exc:
        print(f"hcv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HCVError as exc:
        print(f"hcv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except BrokenPipeError:
        # reader went away (e.g. piped into head); nothing left to report
        sys.stderr.close()
        return EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
