"""``lfising`` command line: spectra, resource reports, sweeps and the verifier.

Every table is long format. CSV output has a header row, floats are printed
with 12 significant digits, and JSON output is a list of row objects holding
the same rounded values (empty CSV cells become ``null``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import bogoliubov as bg
from . import lightfront as lf
from . import resources as rs
from .errors import LFIsingError
from .lattice import ChainSpec, Sector, lattice_dispersion, make_if_grid, mass_from_coupling
from .verify import run_checks

SPECTRUM_HELP = """columns:
  IF: frame, k, omega, energy   (energy = 2 omega, one row per grid momentum)
  LF: frame, k_plus, energy     (energy = m^2 / 2k+)"""
RESOURCES_HELP = """columns: frame, kind, k, entanglement_entropy, m2
  kind is 'block' (one row per +-k pair or LF mode) or 'total' (k empty)"""
SWEEP_HELP = "columns: lambda, mass, total_m2, total_entropy"
MASSLESS_HELP = """columns: frame, kind, k, k_minus, energy, entanglement_entropy, m2
  IF rows are +-k pairs (energy 2|k|); LF rows are negative IF momenta k
  relabelled by k_minus = -2k (energy 2|k|)"""
VERIFY_HELP = "columns: module, check, status, detail; exit code 0 iff every check passes"


class UsageError(LFIsingError):
    pass


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: list[tuple]


def _cell(value):
    if value is None:
        return None
    if isinstance(value, (float, np.floating)):
        return float(format(float(value), ".12g")) + 0.0
    return value


def render(table: Table, fmt: str) -> str:
    rows = [tuple(_cell(v) for v in row) for row in table.rows]
    if fmt == "json":
        return json.dumps([dict(zip(table.columns, r)) for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for r in rows:
        writer.writerow(["" if v is None else format(v, ".12g") if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def _note(msg: str) -> None:
    print(f"note: {msg}", file=sys.stderr)


def _parse_range(text: str) -> np.ndarray:
    try:
        lo, hi, steps = text.split(":")
        lo, hi, steps = float(lo), float(hi), int(steps)
    except ValueError:
        raise UsageError(f"--lambda-range expects lo:hi:steps, got {text!r}") from None
    if steps < 1:
        raise UsageError("--lambda-range needs at least one step")
    return np.linspace(lo, hi, steps)


def _chain(args, coupling: float = 0.0) -> ChainSpec:
    return ChainSpec(args.n, args.a, coupling)


def _coupling_and_mass(args, *, required: bool = True) -> tuple[float, float] | None:
    """Resolve --lambda / --mass through m = (1 - lambda) / a."""
    if args.coupling is not None and args.mass is not None:
        raise UsageError("give either --lambda or --mass, not both")
    if args.coupling is not None:
        return args.coupling, mass_from_coupling(args.coupling, args.a, allow_negative=True)
    if args.mass is not None:
        return 1.0 - args.mass * args.a, args.mass
    if required:
        raise UsageError("one of --lambda or --mass is required")
    return None


def _if_grid(args):
    grid = make_if_grid(_chain(args), args.sector)
    if not grid.is_paired:
        _note(f"dropping unpaired momenta {[grid.momentum(n) for n in grid.self_conjugate]} from pair products")
    return grid


def cmd_spectrum(args) -> Table:
    coupling, mass = _coupling_and_mass(args)
    if args.frame == "lf":
        spec = lf.lf_spectrum(_chain(args), mass)
        return Table(("frame", "k_plus", "energy"), [("LF", k, e) for k, e in spec.rows])
    spec = _chain(args, coupling)
    grid = make_if_grid(spec, args.sector)
    rows = []
    for k in sorted(grid.momenta):
        w = lattice_dispersion(k, coupling, args.a)
        rows.append(("IF", float(k), w, 2.0 * w))
    return Table(("frame", "k", "omega", "energy"), rows)


def _report_rows(report: rs.ResourceReport) -> list[tuple]:
    rows = [(report.frame, "block", b.k, b.entanglement_entropy, b.m2) for b in report.per_block]
    rows.append((report.frame, "total", None, report.total_entropy, report.total_m2))
    return rows


def cmd_resources(args) -> Table:
    _, mass = _coupling_and_mass(args)
    grid = _if_grid(args)
    ifr = rs.if_resource_report(grid, mass, exclude_unpaired=True)
    lfr = rs.lf_resource_report(_chain(args), mass, sector=args.sector)
    return Table(("frame", "kind", "k", "entanglement_entropy", "m2"), _report_rows(ifr) + _report_rows(lfr))


def cmd_sweep(args) -> Table:
    if args.coupling is not None or args.mass is not None:
        raise UsageError("sweep takes --lambda-range, not --lambda or --mass")
    rows = rs.magic_sweep(_chain(args), [float(x) for x in _parse_range(args.lambda_range)])
    return Table(
        ("lambda", "mass", "total_m2", "total_entropy"),
        [(r.coupling, r.mass, r.total_m2, r.total_entropy) for r in rows],
    )


def cmd_massless(args) -> Table:
    resolved = _coupling_and_mass(args, required=False)
    if resolved is not None and resolved[1] != 0:
        raise UsageError("massless runs at m = 0 (lambda = 1); drop --lambda/--mass or set them to the critical point")
    grid = _if_grid(args)
    ifr = rs.if_resource_report(grid, 0.0, exclude_unpaired=True)
    rows = [("IF", "block", b.k, None, bg.if_excitation_energy(b.k, 0.0), b.entanglement_entropy, b.m2) for b in ifr.per_block]
    rows.append(("IF", "total", None, None, None, ifr.total_entropy, ifr.total_m2))
    lf_rows = lf.massless_lf_spectrum(grid)
    rows += [("LF", "block", r.k1, r.k_minus, r.energy, 0.0, 0.0) for r in lf_rows]
    lfr = rs.lf_resource_report(_chain(args), 0.0, sector=args.sector)
    rows.append(("LF", "total", None, None, None, lfr.total_entropy, lfr.total_m2))
    return Table(("frame", "kind", "k", "k_minus", "energy", "entanglement_entropy", "m2"), rows)


def cmd_verify(args) -> tuple[Table, bool]:
    if args.q < 2:
        raise UsageError("--q must be >= 2")
    results = run_checks(seed=args.seed, q=args.q, omega_perturbation=args.omega_perturbation)
    rows = [(r.module, r.name, "PASS" if r.passed else "FAIL", r.detail) for r in results]
    return Table(("module", "check", "status", "detail"), rows), all(r.passed for r in results)


def _finite(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=4, help="number of sites, even (default 4)")
    common.add_argument("--a", type=_finite, default=1.0, help="lattice spacing (default 1)")
    common.add_argument("--lambda", dest="coupling", type=_finite, help="transverse-field coupling")
    common.add_argument("--mass", type=_finite, help="continuum mass; lambda = 1 - m a")
    common.add_argument("--frame", choices=("if", "lf"), default="if")
    common.add_argument("--sector", choices=("periodic", "antiperiodic"), default="antiperiodic")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="write the table here instead of stdout")

    parser = argparse.ArgumentParser(prog="lfising", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.RawDescriptionHelpFormatter
    sub.add_parser("spectrum", parents=[common], epilog=SPECTRUM_HELP, formatter_class=fmt, help="single-particle spectrum table")
    sub.add_parser("resources", parents=[common], epilog=RESOURCES_HELP, formatter_class=fmt, help="IF and LF entanglement and magic")
    sw = sub.add_parser("sweep", parents=[common], epilog=SWEEP_HELP, formatter_class=fmt, help="IF magic over a lambda range")
    sw.add_argument("--lambda-range", default="0:1:11", help="lo:hi:steps inside [0, 1] (default 0:1:11)")
    sub.add_parser("massless", parents=[common], epilog=MASSLESS_HELP, formatter_class=fmt, help="m = 0 IF vs LF side by side")
    ve = sub.add_parser("verify", parents=[common], epilog=VERIFY_HELP, formatter_class=fmt, help="run the invariant suite")
    ve.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")
    ve.add_argument("--q", type=int, default=2, help="Renyi index for SRE checks (default 2)")
    ve.add_argument("--omega-perturbation", type=float, default=0.0, help=argparse.SUPPRESS)
    return parser


COMMANDS = {
    "spectrum": cmd_spectrum,
    "resources": cmd_resources,
    "sweep": cmd_sweep,
    "massless": cmd_massless,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    ok = True
    try:
        if args.command == "verify":
            table, ok = cmd_verify(args)
        else:
            table = COMMANDS[args.command](args)
        text = render(table, args.format)
    except (LFIsingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
