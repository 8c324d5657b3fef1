"""Command-line front end.

Exit codes: 0 success, 1 claim counterexamples under ``--strict``,
2 usage or cap errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import platform
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .bounds import CSV_HEADER, ORACLE_CAP, BoundReport, sandwich_report
from .claims import CLAIM_IDS, run_claims
from .graphs import ENUMERATION_CAP, ENUMERATION_N_CAP, enumerate_maximal, export_graph, maximal_graph
from .labels import MAX_N, CapError, build_collision_table, distinct_value_count
from .witness import WitnessConfig, witness_csv, witness_sets

ORACLE_CLAIMS = {"T31", "T43", "SANDWICH"}


@dataclass(frozen=True)
class RunConfig:
    s_min: int = 2
    strict_tops: bool = False
    oracle_cap: int = ORACLE_CAP
    enumeration_cap: int = ENUMERATION_CAP
    fmt: str = "csv"
    seed: int = 0

    @property
    def witness(self) -> WitnessConfig:
        return WitnessConfig(self.s_min, self.strict_tops)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        return cls(
            s_min=getattr(args, "s_min", 2),
            strict_tops=getattr(args, "strict_tops", False),
            oracle_cap=getattr(args, "oracle_cap", ORACLE_CAP),
            enumeration_cap=getattr(args, "enumeration_cap", ENUMERATION_CAP),
            fmt=getattr(args, "format", "csv"),
            seed=getattr(args, "seed", 0),
        )


class UsageError(Exception):
    pass


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _report_text(rep: BoundReport) -> str:
    d = rep.as_dict()
    cards = d.pop("set_cards")
    d.pop("config")
    lines = [f"{k}={'' if v is None else v}" for k, v in d.items()]
    lines += [f"card_{k}={v}" for k, v in cards.items()]
    return "\n".join(lines) + "\n"


def _check_n(n: int, low: int = 3) -> None:
    if n < low:
        raise UsageError(f"--n must be at least {low}")
    if n > MAX_N:
        raise CapError(f"n={n} exceeds the cap of {MAX_N}")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_bounds(args, cfg: RunConfig, out) -> int:
    _check_n(args.n)
    with_exact = args.with_exact
    if with_exact is None:
        with_exact = args.n <= cfg.oracle_cap
    rep = sandwich_report(args.n, cfg.witness, with_exact=with_exact, oracle_cap=cfg.oracle_cap)
    if cfg.fmt == "json":
        out.write(json.dumps(rep.as_dict(), indent=2) + "\n")
    elif cfg.fmt == "text":
        out.write(_report_text(rep))
    else:
        out.write(_csv([list(CSV_HEADER), rep.csv_row()]))
    return 0


def cmd_exact(args, cfg: RunConfig, out) -> int:
    _check_n(args.n, low=2)
    if args.n > cfg.oracle_cap:
        raise CapError(f"n={args.n} exceeds the oracle cap of {cfg.oracle_cap}")
    out.write(f"{distinct_value_count(args.n)}\n")
    return 0


def cmd_classes(args, cfg: RunConfig, out) -> int:
    _check_n(args.n, low=2)
    if args.n > cfg.oracle_cap:
        raise CapError(f"n={args.n} exceeds the oracle cap of {cfg.oracle_cap}")
    table = build_collision_table(args.n, mode=args.mode)
    out.write(table.to_csv(args.min_size))
    return 0


def cmd_sets(args, cfg: RunConfig, out) -> int:
    _check_n(args.n)
    out.write(witness_csv(witness_sets(args.n, cfg.witness)))
    return 0


def cmd_verify(args, cfg: RunConfig, out) -> int:
    ids = [c.strip().upper() for c in args.claims.split(",") if c.strip()]
    bad = [c for c in ids if c not in CLAIM_IDS]
    if bad or not ids:
        raise UsageError(f"unknown claim ids: {', '.join(bad) or '(none given)'}; "
                         f"expected a subset of {','.join(CLAIM_IDS)}")
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    if ORACLE_CLAIMS & set(ids) and args.n_max > cfg.oracle_cap:
        raise CapError(f"n_max={args.n_max} exceeds the oracle cap of {cfg.oracle_cap}")
    reports = run_claims(ids, args.n_max, cfg.witness)
    out.write(json.dumps([r.as_dict() for r in reports], indent=2) + "\n")
    if args.strict and not all(r.verified for r in reports):
        return 1
    return 0


def cmd_graph(args, cfg: RunConfig, out) -> int:
    _check_n(args.n, low=2)
    if args.n > cfg.oracle_cap:
        raise CapError(f"n={args.n} exceeds the oracle cap of {cfg.oracle_cap}")
    g = maximal_graph(args.n, args.policy, seed=cfg.seed)
    out.write(export_graph(g, args.graph_format))
    return 0


def cmd_enumerate(args, cfg: RunConfig, out) -> int:
    _check_n(args.n, low=2)
    graphs = list(enumerate_maximal(args.n, n_cap=args.n_cap, max_graphs=cfg.enumeration_cap))
    for idx, g in enumerate(graphs, 1):
        missing = ",".join(f"{u}-{v}" for u, v in g.non_edges())
        out.write(f"# graph {idx}/{len(graphs)} edges={len(g.edges)} missing={missing or '-'}\n")
        out.write(export_graph(g, args.graph_format))
    return 0


def _sweep_row(job: tuple[int, WitnessConfig, bool, int]) -> list:
    n, wcfg, with_exact, cap = job
    return sandwich_report(n, wcfg, with_exact=with_exact, oracle_cap=cap).csv_row()


def cmd_sweep(args, cfg: RunConfig, out) -> int:
    lo, hi = args.n_from, args.n_to
    if lo > hi:
        raise UsageError(f"--from {lo} is larger than --to {hi}")
    _check_n(lo)
    _check_n(hi)
    jobs = [(n, cfg.witness, n <= cfg.oracle_cap, cfg.oracle_cap) for n in range(lo, hi + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_row, jobs, chunksize=8))
    else:
        rows = [_sweep_row(j) for j in jobs]
    trailer = (f"# config_id={cfg.witness.config_id} s_min={cfg.s_min} "
               f"strict_tops={str(cfg.strict_tops).lower()} oracle_cap={cfg.oracle_cap} "
               f"permlab={__version__} python={platform.python_version()}\n")
    text = _csv([list(CSV_HEADER), *rows]) + trailer
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
    else:
        out.write(text)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _witness_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s-min", type=int, choices=(2, 3), default=2,
                   help="smallest s admitted in S2 (default 2)")
    p.add_argument("--strict-tops", action="store_true",
                   help="use top < n for S4/S5 instead of top <= n")


def _oracle_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--oracle-cap", type=int, default=ORACLE_CAP,
                   help=f"largest n for the exact oracle (default {ORACLE_CAP})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"permlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="lower/upper bounds and exact count for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--with-exact", dest="with_exact", action="store_true", default=None)
    p.add_argument("--no-exact", dest="with_exact", action="store_false")
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    _witness_flags(p)
    _oracle_flag(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exact", help="D(n), the number of distinct edge values")
    p.add_argument("--n", type=int, required=True)
    _oracle_flag(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("classes", help="collision classes as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-size", type=int, default=1)
    p.add_argument("--mode", choices=("exact", "fingerprint"), default="exact")
    _oracle_flag(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("sets", help="witness sets S1..S6 as CSV")
    p.add_argument("--n", type=int, required=True)
    _witness_flags(p)
    p.set_defaults(func=cmd_sets)

    p = sub.add_parser("verify", help="run claim checkers, JSON reports")
    p.add_argument("--claims", default=",".join(CLAIM_IDS[:5]))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="exit 1 when a counterexample is found")
    _witness_flags(p)
    _oracle_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="one maximal permutation graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--policy", choices=("lex-min", "lex-max", "random"), default="lex-min")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="graph_format", choices=("edge-list", "dot"), default="edge-list")
    _oracle_flag(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("enumerate", help="all maximal permutation graphs for small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-cap", type=int, default=ENUMERATION_N_CAP)
    p.add_argument("--enumeration-cap", type=int, default=ENUMERATION_CAP)
    p.add_argument("--format", dest="graph_format", choices=("edge-list", "dot"), default="edge-list")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="one bounds row per n, as CSV")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    _witness_flags(p)
    _oracle_flag(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        return args.func(args, cfg, out)
    except (UsageError, CapError, ValueError) as exc:
        print(f"permlab {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
