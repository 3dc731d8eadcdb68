"""Command line: compute a truncated angle spectrum and write reports.

Exit status is 0 on success, 1 on bad input or a failed computation, and
2 if a rational angle breaks the totient bound (which the theory forbids,
so it points at a numerical or configuration problem).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from . import arithmetic, report as rep
from .group import PRESETS, ping_pong_certificate, preset
from .spectrum import EPS_CLUSTER, build_spectrum, default_workers
from .svg import render_svg


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    preset: str | None
    group_file: str | None
    max_word_len: int
    max_trace: float
    conj_len: int
    qmax: int
    eps_rat: float
    eps_cluster: float
    degree_bound: int | None
    out: str | None = None
    csv: str | None = None
    svg: str | None = None
    threads: int = 1
    oriented: bool = False

    def validate(self):
        if (self.preset is None) == (self.group_file is None):
            raise UsageError("give exactly one of --preset or --group-file")
        if self.max_word_len < 1 or self.conj_len < 1:
            raise UsageError("word lengths must be positive")
        if not self.max_trace > 2:
            raise UsageError("--max-trace must exceed 2")
        if self.qmax < 1 or not self.eps_rat > 0 or not self.eps_cluster > 0:
            raise UsageError("--qmax, --eps-rat and --eps-cluster must be positive")
        if self.degree_bound is not None and self.degree_bound < 1:
            raise UsageError("--degree-bound must be positive")
        if self.threads < 1:
            raise UsageError("--threads must be positive")


def build_parser():
    p = _Parser(prog="anglespec", description=__doc__.splitlines()[0])
    src = p.add_argument_group("group source (exactly one)")
    src.add_argument("--preset", choices=sorted(PRESETS))
    src.add_argument("--group-file", help="generators as lines 'a b c d'")
    p.add_argument("--max-word-len", type=int, default=4)
    p.add_argument("--max-trace", type=float, default=50.0)
    p.add_argument("--conj-len", type=int, default=4)
    p.add_argument("--qmax", type=int, default=arithmetic.QMAX)
    p.add_argument("--eps-rat", type=float, default=arithmetic.EPS_RAT)
    p.add_argument("--eps-cluster", type=float, default=EPS_CLUSTER)
    p.add_argument("--degree-bound", type=int, default=None,
                   help="declared bound for the entry-field degree (preset default, else 1)")
    p.add_argument("--out", help="JSON report path")
    p.add_argument("--csv", help="CSV of intersection records")
    p.add_argument("--svg", help="SVG picture of the axes and crossings")
    p.add_argument("--threads", type=int, default=default_workers())
    p.add_argument("--oriented", action="store_true",
                   help="keep a class and its inverse apart")
    return p


def _config(args):
    return RunConfig(
        preset=args.preset, group_file=args.group_file,
        max_word_len=args.max_word_len, max_trace=args.max_trace,
        conj_len=args.conj_len, qmax=args.qmax, eps_rat=args.eps_rat,
        eps_cluster=args.eps_cluster, degree_bound=args.degree_bound,
        out=args.out, csv=args.csv, svg=args.svg, threads=args.threads,
        oriented=args.oriented,
    )


def load_group(config):
    if config.preset is not None:
        return preset(config.preset)
    return rep.parse_group_file(config.group_file, degree_bound=config.degree_bound or 1)


def _warn_discreteness(gens, err):
    if gens.name == "modular":
        return
    if gens.regions is None:
        print("warning: no ping-pong certificate for this group; duplicate "
              "records are possible if it is not discrete", file=err)
    elif not ping_pong_certificate(gens):
        print("warning: ping-pong regions do not certify this group", file=err)


def summary_table(report):
    lines = [f"{'theta':>20}  {'theta/pi':>10}  {'mult':>5}  {'p/q':>7}  {'phi(q)':>6}  verdict"]
    for theta, mult in report.angle_set:
        hit = report.hit_for(theta, 0.0)
        frac = f"{hit.p}/{hit.q}" if hit else ""
        phi = str(hit.phi_q) if hit else ""
        verdict = ("ok" if hit.ok else "VIOLATES") if hit else ""
        lines.append(f"{theta:20.15f}  {theta / math.pi:10.6f}  {mult:5d}  {frac:>7}  "
                     f"{phi:>6}  {verdict}")
    lines.append(f"{len(report.classes)} classes, {len(report.records)} records, "
                 f"{len(report.angle_set)} distinct angles, "
                 f"{len(report.rational_hits)} rational multiples of pi "
                 f"(degree bound {report.params['degree_bound']})")
    return "\n".join(lines)


def run_spectrum(config, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    config.validate()
    gens = load_group(config)
    _warn_discreteness(gens, err)
    report = build_spectrum(
        gens, config.max_word_len, config.max_trace, config.conj_len,
        qmax=config.qmax, eps_rat=config.eps_rat, eps_cluster=config.eps_cluster,
        degree_bound=config.degree_bound, oriented=config.oriented,
        workers=config.threads,
    )
    if config.out:
        rep.write_json(report, config.out)
    if config.csv:
        rep.write_csv(report, config.csv)
    if config.svg:
        render_svg(report, report.classes, config.svg)
    print(summary_table(report), file=out)
    if not report.totient_ok:
        print("error: a rational angle violates phi(q) <= 2 * degree bound", file=err)
        return 2
    return 0


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # usage errors exit 1 via _Parser; --help exits 0
        return e.code
    try:
        return run_spectrum(_config(args))
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"anglespec: error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError, ArithmeticError) as e:
        print(f"anglespec: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
