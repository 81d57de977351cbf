"""Command-line front end: ``gallai-ramsey <command> ...``.

Exit codes: 0 success or claim holds, 2 a negative result with a witness
(rainbow path found, target present, failed check, undetermined number),
1 an error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import cache
from .classify import PreconditionError, UnclassifiedColoring, classify_p4, classify_p5
from .coloring import ColoringFormatError, EdgeColoring, parse_coloring
from .construct import PRESETS, ConstructionError, PackingSpec
from .detect import PackingCapError, contains_connected_super, find_mono_embedding, find_rainbow_path
from .pattern import PatternSyntaxError, PatternTooLarge, parse_pattern
from .search import DEFAULT_NODE_BUDGET, RamseyQuery, SearchLimitError, compute_number
from .suites import ALL_ORDER, SuiteOptions, UnknownSuite, verify_paper_suite


class UsageError(ValueError):
    pass


# -- I/O helpers ------------------------------------------------------------------------------

def _read_input(args) -> EdgeColoring:
    path = args.input or args.in_path
    if path is None or path == "-":
        return parse_coloring(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh.read())


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def parse_rainbow(expr: str) -> int:
    m = re.fullmatch(r"\s*P\s*(\d+)\s*", expr)
    if not m:
        raise UsageError(f"rainbow target must look like P4 or P5, got {expr!r}")
    return int(m.group(1))


def parse_packing_spec(expr: str) -> PackingSpec:
    """``2K2``, ``C5`` or ``C(2C5)`` (connected supergraph of two disjoint C5)."""
    text = expr.strip()
    connected = False
    if text.startswith("C(") and text.endswith(")"):
        connected, text = True, text[2:-1].strip()
    m = re.fullmatch(r"(\d+)\s*\*?\s*([PCK].*)", text)
    if m and "+" not in text:
        mult, base = int(m.group(1)), parse_pattern(m.group(2))
        if mult == 0:
            raise PatternSyntaxError("zero multiplicity", 0)
    else:
        mult, base = 1, parse_pattern(text)
    return PackingSpec(base, mult, connected)


def _csuper_arg(expr: str) -> PackingSpec:
    base, sep, mult = expr.rpartition(":")
    if not sep:
        base, mult = expr, "1"
    if not mult.strip().isdigit():
        raise UsageError(f"--csuper expects <pattern>:<m>, got {expr!r}")
    return PackingSpec(parse_pattern(base), int(mult), True)


def _format_coloring(g: EdgeColoring, fmt: str) -> str:
    if fmt == "dot":
        return g.to_dot()
    if fmt == "json":
        return _dump({"n": g.n, "k": g.k, "colors": list(g.colors)})
    return g.to_text()


# -- commands ---------------------------------------------------------------------------------

def cmd_classify(args) -> int:
    g = _read_input(args)
    fn = classify_p4 if args.theorem == "p4" else classify_p5
    label = fn(g, all_cases=args.all_cases)
    _emit(args, _dump(label.to_json()))
    return 2 if label.case == "NONE" else 0


def cmd_detect(args) -> int:
    g = _read_input(args)
    chosen = [x for x in (args.rainbow, args.mono, args.csuper) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --rainbow, --mono, --csuper")
    colors = args.color or None
    if args.rainbow is not None:
        hit = find_rainbow_path(g, parse_rainbow(args.rainbow))
        found = hit.to_json() if hit else None
    elif args.mono is not None:
        hit = find_mono_embedding(g, parse_pattern(args.mono), colors=colors)
        found = hit.to_json() if hit else None
    else:
        spec = _csuper_arg(args.csuper)
        hit = contains_connected_super(g, spec, colors=colors)
        found = None if hit is None else {
            "color": hit.color,
            "component": list(hit.component),
            "copies": [e.to_json() for e in hit.packing],
        }
    if found is None:
        _emit(args, _dump({"result": "absent"}))
        return 0
    _emit(args, _dump({"result": "present", "embedding": found}))
    return 2


def cmd_construct(args) -> int:
    if args.preset not in PRESETS:
        raise UsageError(f"unknown preset {args.preset!r}; known: {', '.join(PRESETS)}")
    con = PRESETS[args.preset](args)
    claims = con.claims_json()
    fmt = args.format or "cg1"
    if fmt == "json":
        text = _dump({"coloring": con.coloring.to_text(), **claims})
    elif fmt == "dot":
        text = f"// claims {json.dumps(claims, sort_keys=True)}\n" + con.coloring.to_dot()
    else:
        text = con.coloring.to_text() + f"# claims {json.dumps(claims, sort_keys=True)}\n"
    _emit(args, text)
    if args.figure:
        from .report import draw_coloring
        draw_coloring(con.coloring, args.figure, " ".join([con.name] + [f"{k}={v}" for k, v in con.params.items()]))
    return 0


def _run_query(args, q: RamseyQuery) -> int:
    res = None if args.no_cache else cache.load(q)
    if res is None:
        res = compute_number(q, node_budget=args.node_budget, threads=args.threads)
        if not args.no_cache:
            try:
                cache.store(q, res)
            except OSError as exc:
                print(f"warning: could not write cache: {exc}", file=sys.stderr)
    undecided = [n for n, d in res.stats.get("decisions", {}).items() if d == "undecided"]
    if undecided:
        print(f"node budget {args.node_budget} exhausted at n={', '.join(undecided)}", file=sys.stderr)
    fmt = args.format or "json"
    if fmt == "json":
        out = res.to_json(q)
        if not args.timings:
            out["stats"] = {k: v for k, v in out["stats"].items() if k != "wall_time"}
        _emit(args, _dump(out))
    elif res.witness is not None:
        _emit(args, _format_coloring(res.witness, fmt))
    else:
        _emit(args, f"# no witness; value {res.value} bracket {res.bracket}")
    return 0 if res.value is not None else 2


def cmd_ramsey(args) -> int:
    q = RamseyQuery.classical(parse_pattern(args.H), args.k, args.min_n, args.max_n)
    return _run_query(args, q)


def cmd_gallai(args) -> int:
    q = RamseyQuery.gallai(parse_rainbow(args.rainbow), parse_pattern(args.H), args.k, args.min_n, args.max_n)
    return _run_query(args, q)


def cmd_set_ramsey(args) -> int:
    q = RamseyQuery.set_ramsey(parse_packing_spec(args.red), parse_packing_spec(args.blue), args.min_n, args.max_n)
    return _run_query(args, q)


def cmd_verify(args) -> int:
    opts = SuiteOptions(seed=args.seed, samples=args.samples, threads=args.threads,
                        node_budget=args.node_budget)
    reports = verify_paper_suite(args.suite, opts)
    lines = None
    for rep in reports:
        body = rep.tsv_lines(timings=args.timings)
        lines = body if lines is None else lines + body[1:]
    _emit(args, "\n".join(lines))
    if args.report_dir:
        from .report import write_report
        write_report(reports, args.report_dir, timings=args.timings)
    return 0 if all(r.passed for r in reports) else 2


# -- parser --------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="in_path", help="input coloring file (colored-graph v1); '-' for stdin")
    common.add_argument("--out", help="write the main output here instead of stdout")
    common.add_argument("--format", choices=("cg1", "dot", "json"), help="output format")
    common.add_argument("--threads", type=int, default=1, help="worker processes for the search")
    common.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="search nodes per decision before answering UNDECIDED")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--no-cache", action="store_true", help="ignore and do not write $GALLAI_CACHE_DIR")
    common.add_argument("--timings", action="store_true", help="include wall-clock times in the output")

    p = argparse.ArgumentParser(prog="gallai-ramsey", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="rainbow-P4 / rainbow-P5 structure of a coloring")
    c.add_argument("input", nargs="?")
    c.add_argument("--theorem", choices=("p4", "p5"), default="p5")
    c.add_argument("--all-cases", action="store_true", help="list every matching case")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("detect", parents=[common], help="look for a rainbow path or monochromatic target")
    d.add_argument("input", nargs="?")
    d.add_argument("--rainbow", metavar="Pl", help="rainbow path, e.g. P5")
    d.add_argument("--mono", metavar="EXPR", help="pattern expression, e.g. 2K3 or K_{1,2}+K2")
    d.add_argument("--csuper", metavar="EXPR:M", help="connected color class holding M disjoint copies")
    d.add_argument("--color", type=int, action="append", help="restrict to this color (repeatable)")
    d.set_defaults(func=cmd_detect)

    k = sub.add_parser("construct", parents=[common], help="build a preset coloring and its claims",
                       description="presets: " + ", ".join(PRESETS))
    k.add_argument("preset")
    for flag, default in (("--m", 2), ("--n", 2), ("--r", 3), ("--s", 2), ("--t", 1)):
        k.add_argument(flag, type=int, default=default)
    k.add_argument("--H", default="K3", help="pattern for double-plus-green")
    k.add_argument("--figure", metavar="PNG", help="also draw the coloring")
    k.set_defaults(func=cmd_construct, input=None)

    for name, helptext, fn in (
        ("ramsey", "R_k(H) by exhaustive search", cmd_ramsey),
        ("gallai", "gr_k(P_l : H) by exhaustive search", cmd_gallai),
        ("set-ramsey", "R(G1, G2) for two packing targets", cmd_set_ramsey),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        if name == "set-ramsey":
            s.add_argument("--red", required=True, help="e.g. 'C(2C5)' or 'C5'")
            s.add_argument("--blue", required=True, help="e.g. '2K2'")
        else:
            s.add_argument("--H", required=True, help="pattern expression")
            s.add_argument("--k", type=int, required=True, help="number of colors")
        if name == "gallai":
            s.add_argument("--rainbow", default="P5", help="P4 or P5")
        s.add_argument("--min-n", type=int, default=1)
        s.add_argument("--max-n", type=int, default=7)
        s.set_defaults(func=fn, input=None)

    v = sub.add_parser("verify", parents=[common], help="run a named check suite",
                       description="suites: all, " + ", ".join(ALL_ORDER))
    v.add_argument("suite")
    v.add_argument("--report-dir", help="write verify.tsv and PNG figures here")
    v.add_argument("--samples", type=int, default=10_000, help="sample count for sampled suites")
    v.set_defaults(func=cmd_verify, input=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ColoringFormatError, PatternSyntaxError, UsageError, UnknownSuite, PreconditionError, PatternTooLarge, PackingCapError,
            SearchLimitError, ConstructionError, UnclassifiedColoring, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
