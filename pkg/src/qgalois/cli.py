"""Command-line interface: ``qgalois <command> ...``."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

from . import cache, galois, verify
from .parser import ParseError, parse_element
from .pbw import DegreeCapExceeded

log = logging.getLogger("qgalois")


def _cmd_nf(args) -> int:
    print(parse_element(args.expr, args.context).render())
    return 0


def _cmd_deltar(args) -> int:
    print(galois.delta_r(parse_element(args.expr, "P")).render())
    return 0


def _cmd_chi(args) -> int:
    parts = args.expr.split("|")
    if len(parts) != 2:
        print("error: chi expects 'LEFT | RIGHT'", file=sys.stderr)
        return 2
    x = galois.pp(parse_element(parts[0], "P"), parse_element(parts[1], "P"))
    print(galois.chi(x).render())
    return 0


def _cmd_tau(args) -> int:
    if args.m < 0 or args.n < 0:
        print("error: m and n must be non-negative", file=sys.stderr)
        return 2
    table = galois.TauTable(path=args.path, verify=args.verify)
    cache_file = args.cache or cache.default_path()
    if cache_file is not None:
        n = cache.load_into(table, cache_file)
        log.info("loaded %d entries from %s", n, cache_file)
    before = len(table)
    value = galois.tau(args.k, args.m, args.n, table=table)
    print(value.render())
    if cache_file is not None and len(table) != before:
        cache.store(table, cache_file)
    return 0


def _run_suites(names, max_degree, seed):
    return [verify.run_suite(s, max_degree, seed=seed) for s in names]


def _suite_names(name: str) -> list[str]:
    return list(verify.SUITES) if name.lower() == "all" else [name.upper()]


def _cmd_verify(args) -> int:
    try:
        reports = _run_suites(_suite_names(args.suite), args.max_degree, args.seed)
    except verify.UnknownSuite as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    text = "\n".join(r.serialize() for r in reports)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_cache(args) -> int:
    try:
        if args.action == "check":
            cf = cache.check(args.file)
            print(f"{len(cf.entries)} valid, {len(cf.rejected)} rejected")
            for key in cf.rejected:
                print(f"rejected {key[0]} {key[1]} {key[2]}")
            return 0 if not cf.rejected else 1
        removed = cache.gc(args.file)
        print(f"removed {len(removed)} entries")
        return 0
    except (OSError, cache.CacheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _cmd_report(args) -> int:
    from . import plotting

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    names = [s.strip().upper() for s in args.suites.split(",") if s.strip()]
    try:
        reports = _run_suites(names, args.max_degree, args.seed)
    except verify.UnknownSuite as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    with open(out / "summary.tsv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["suite", "status", "cases_run", "cases_passed", "max_degree", "seed", "duration_s"])
        for r in reports:
            w.writerow([r.suite, "PASS" if r.passed else "FAIL", r.cases_run, r.cases_passed,
                        args.max_degree, args.seed, f"{r.duration:.3f}"])
    for r in reports:
        (out / f"{r.suite}.txt").write_text(r.serialize(), encoding="utf-8")

    rows = []
    for d in range(args.tau_degree + 1):
        for k in range(-d, d + 1):
            rest = d - abs(k)
            for m in range(rest + 1):
                key = (k, m, rest - m)
                rows.append((d, key, len(galois.tau(*key).terms)))
    with open(out / "tau_terms.tsv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["k", "m", "n", "degree", "terms"])
        for d, key, count in rows:
            w.writerow([*key, d, count])
    plotting.tau_growth(rows, out / "tau_growth.png")
    plotting.suite_overview(reports, out / "suites.png")
    for r in reports:
        print(r.summary_line())
    print(f"wrote {out}")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qgalois", description=__doc__)
    p.add_argument("--log-level", default="WARNING", help="logging level (default WARNING)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nf", help="normal form of an expression")
    s.add_argument("-c", "--context", choices=["P", "SU2", "C"], default="P")
    s.add_argument("expr")
    s.set_defaults(func=_cmd_nf)

    s = sub.add_parser("deltar", help="right coaction of an element of P")
    s.add_argument("expr")
    s.set_defaults(func=_cmd_deltar)

    s = sub.add_parser("chi", help="canonical map on 'LEFT | RIGHT'")
    s.add_argument("expr")
    s.set_defaults(func=_cmd_chi)

    s = sub.add_parser("tau", help="translation map on 1 ⊗ r[k,m,n]")
    s.add_argument("k", type=int)
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--cache", type=Path, help=f"cache file (default ${cache.ENV_VAR})")
    s.add_argument("--path", choices=["canonical", "alternate"], default="canonical")
    s.add_argument("--verify", action="store_true", help="check χ on every computed entry")
    s.set_defaults(func=_cmd_tau)

    s = sub.add_parser("verify", help="run a verification suite (or 'all')")
    s.add_argument("suite")
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", type=Path, help="also write the report here")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("cache", help="inspect or clean a τ cache file")
    s.add_argument("action", choices=["check", "gc"])
    s.add_argument("file", type=Path)
    s.set_defaults(func=_cmd_cache)

    s = sub.add_parser("report", help="run suites and write TSV summaries and figures")
    s.add_argument("--out", required=True)
    s.add_argument("--suites", default=",".join(verify.SUITES))
    s.add_argument("--max-degree", type=int, default=2)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tau-degree", type=int, default=4)
    s.set_defaults(func=_cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error at {exc}", file=sys.stderr)
        return 2
    except DegreeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
