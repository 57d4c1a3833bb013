"""Command-line interface: ``lcsenum {enumerate,count,bounds,gen,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource budget or capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import string
import sys

from . import bounds
from .bench import FAMILIES, bench_rows
from .core import MAX_SYMBOL, check_sequence
from .enumeration import (
    DEFAULT_NODE_BUDGET, STOP, enumerate_distinct, enumerate_embeddings, enumerate_naive,
    count_distinct, count_embeddings,
)
from .errors import BudgetExceeded, CapacityError, DomainError, OracleLimitError
from .generators import gen_max_distinct, gen_max_embeddings, gen_no_match, gen_single_match
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

GEN_ALPHABET = string.ascii_lowercase + string.ascii_uppercase + string.digits


class UsageError(Exception):
    pass


# ----------------------------------------------------------------- input parsing

def parse_tokens(text):
    """Parse a comma-separated list of nonnegative decimal integers."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise UsageError(f"bad token {tok!r}: expected a nonnegative decimal integer")
        v = int(tok)
        if v > MAX_SYMBOL:
            raise UsageError(f"token {v} exceeds 2^31 - 1")
        out.append(v)
    return tuple(out)


def _read_lines(path):
    if path == "-":
        data = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            data = fh.read()
    return data.splitlines()


def read_input(mode, payload):
    """Return ``(a, b)`` from the positional payload under the given input mode."""
    if mode == "text":
        if len(payload) != 2:
            raise UsageError("text input takes exactly two strings")
        return check_sequence(payload[0]), check_sequence(payload[1])
    if mode == "tokens":
        if len(payload) != 2:
            raise UsageError("token input takes exactly two comma-separated lists")
        return parse_tokens(payload[0]), parse_tokens(payload[1])
    if mode == "file":
        try:
            if len(payload) == 1:
                lines = _read_lines(payload[0])[:2]
                if len(lines) != 2:
                    raise UsageError("token file must hold two lines")
            elif len(payload) == 2:
                lines = [(_read_lines(p) or [""])[0] for p in payload]
            else:
                raise UsageError("file input takes one or two paths")
        except OSError as exc:
            raise UsageError(str(exc)) from None
        return parse_tokens(lines[0]), parse_tokens(lines[1])
    raise UsageError(f"unknown input mode {mode!r}")


def render_symbols(symbols, mode):
    if mode == "text":
        return "".join(chr(s) for s in symbols) if symbols else "ε"
    return ",".join(map(str, symbols))


def _positions(ps):
    return ",".join(map(str, ps))


def _emit_json(obj, out):
    out.write(json.dumps(obj) + "\n")


# ----------------------------------------------------------------------- commands

def cmd_enumerate(args, out):
    a, b = read_input(args.input, args.sequences)
    fmt = args.format
    emitted = [0]

    def render(item):
        if args.kind == "distinct":
            if fmt == "jsonl":
                return json.dumps({"lcs": list(item), "text": render_symbols(item, args.input)})
            return render_symbols(item, args.input)
        syms = item.symbols(a)
        if fmt == "jsonl":
            return json.dumps({"lcs": list(syms), "positions_a": list(item.positions_a),
                               "positions_b": list(item.positions_b)})
        return "\t".join([render_symbols(syms, args.input), _positions(item.positions_a),
                          _positions(item.positions_b)])

    def sink(item):
        out.write(render(item) + "\n")
        emitted[0] += 1
        if args.limit is not None and emitted[0] >= args.limit:
            return STOP
        return None

    status = EXIT_OK
    if args.limit is not None and args.limit <= 0:
        summary = {"kind": args.kind, "emitted": 0, "complete": False}
    elif args.kind == "naive":
        try:
            stats = enumerate_naive(a, b, sink=sink, node_budget=args.budget)
        except BudgetExceeded as exc:
            stats = exc.stats
            status = EXIT_BUDGET
        summary = {"kind": "naive", "outputs": str(stats.outputs_emitted),
                   "nodes_visited": str(stats.nodes_visited),
                   "output_chars": str(stats.output_chars), "l": stats.lcs_length,
                   "complete": stats.complete}
        if status == EXIT_BUDGET:
            summary["budget_exceeded"] = True
    else:
        fn = enumerate_distinct if args.kind == "distinct" else enumerate_embeddings
        res = fn(a, b, sink=sink)
        summary = {"kind": args.kind, "count": str(res.count), "l": res.lcs_length,
                   "complete": res.complete}
    if fmt == "jsonl":
        _emit_json({"summary": True, **summary}, out)
    else:
        out.write("# " + " ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    return status


def cmd_count(args, out):
    a, b = read_input(args.input, args.sequences)
    fn = count_distinct if args.kind == "distinct" else count_embeddings
    res = fn(a, b)
    rec = {"mode": args.kind, "count": str(res.count), "l": res.lcs_length}
    if args.format == "json":
        _emit_json(rec, out)
    else:
        out.write(f"{res.count}\n")
    return EXIT_OK


def _parse_range(text):
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"bad range {text!r}; use START:STOP or a comma list") from None


def _est(e):
    return {"value": e.value, "ln_value": e.ln_value}


def _ratio(exact, est):
    return math.exp(bounds.log_ratio(exact, est)) if exact > 0 else None


def _bounds_rows(args):
    kind = args.kind
    m, n, l, t = args.m, args.n, args.l, args.t
    if m is not None and n is not None and m > n:
        m, n = n, m
    if kind == "distinct":
        ts = _parse_range(args.sweep) if args.sweep else [t]
        if ts == [None]:
            raise UsageError("bounds distinct needs --t or --sweep")
        rows = []
        for tt in ts:
            up = bounds.d_upper(tt)
            row = {"t": tt, "upper": up.value, "upper_ln": up.ln_value}
            if tt >= 4:
                row["lower"] = str(bounds.d_lower(tt))
                row["upper_distinct_chars"] = str(bounds.d_upper_distinct_chars(tt))
            rows.append(row)
        return rows
    if kind == "embeddings":
        if m is not None and n is not None and l is not None:
            y = bounds.optimal_y(m, n, l)
            return [{"m": m, "n": n, "l": l, "y_star": y,
                     "max_embeddings": str(bounds.max_embeddings(m, n, l))}]
        if t is not None and l is not None:
            return [{"t": t, "l": l, "max_embeddings": str(bounds.max_embeddings_total(t, l))}]
        if n is not None and l is not None:
            return [{"n": n, "l": l, "max_embeddings": str(bounds.max_embeddings_equal(n, l))}]
        if args.sweep and (n is not None or args.over == "n"):
            ns, over = _parse_range(args.sweep), "n"
        elif args.sweep:
            ns, over = _parse_range(args.sweep), "t"
        elif n is not None:
            ns, over = [n], "n"
        elif t is not None:
            ns, over = [t], "t"
        else:
            raise UsageError("bounds embeddings needs --t, --n, --m/--n/--l, or --sweep")
        rows = []
        for v in ns:
            if over == "n":
                exact = bounds.max_embeddings_equal_opt(v)
                est = bounds.asymptotic_embeddings_equal(v)
                opt = bounds.optimal_l_equal(v)
                rows.append({"n": v, "l_star": opt.l_star,
                             "l_alternatives": list(opt.alternatives),
                             "sigma": opt.sigma, "tau": opt.tau, "exact": str(exact),
                             "asymptotic": _est(est), "ratio": _ratio(exact, est)})
            else:
                exact = bounds.max_embeddings_total_opt(v)
                row = {"t": v, "exact": str(exact)}
                if v >= 1:
                    est = bounds.asymptotic_embeddings_total(v)
                    row.update(asymptotic=_est(est), ratio=_ratio(exact, est))
                rows.append(row)
        return rows
    if kind == "naive":
        if m is not None and n is not None:
            return [{"m": m, "n": n, "exact": str(bounds.naive_overhead_bound(m, n))}]
        if args.sweep:
            vals, over = _parse_range(args.sweep), ("n" if args.over != "t" else "t")
        elif n is not None:
            vals, over = [n], "n"
        elif t is not None:
            vals, over = [t], "t"
        else:
            raise UsageError("bounds naive needs --n, --t, --m/--n, or --sweep")
        rows = []
        for v in vals:
            fn = bounds.naive_overhead_equal if over == "n" else bounds.naive_overhead_total
            exact, est = fn(v)
            rows.append({over: v, "exact": str(exact), "asymptotic": _est(est),
                         "ratio": _ratio(exact, est)})
        return rows
    raise UsageError(f"unknown bounds kind {kind!r}")


def _print_table(rows, out):
    if not rows:
        return
    cols = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)

    def cell(v):
        if isinstance(v, dict):
            v = v.get("value")
        if isinstance(v, float):
            return f"{v:.6g}"
        if isinstance(v, list):
            return ",".join(map(str, v))
        return "" if v is None else str(v)

    table = [[cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in table)) for i, c in enumerate(cols)]
    out.write("  ".join(c.rjust(w) for c, w in zip(cols, widths)) + "\n")
    for row in table:
        out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)) + "\n")


def cmd_bounds(args, out):
    rows = _bounds_rows(args)
    if args.format == "json":
        for r in rows:
            _emit_json(r, out)
    else:
        _print_table(rows, out)
    return EXIT_OK


def _gen_instance(args):
    kind = args.kind

    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            raise UsageError(f"gen {kind} needs " + ", ".join("--" + n for n in missing))

    if kind == "max-distinct":
        need("t")
        return gen_max_distinct(args.t)
    if kind == "max-embeddings":
        need("m", "n", "l")
        m, n = sorted((args.m, args.n))
        return gen_max_embeddings(m, n, args.l, args.y)
    need("m", "n")
    if kind == "no-match":
        return gen_no_match(args.m, args.n)
    return gen_single_match(args.m, args.n)


def cmd_gen(args, out):
    inst = _gen_instance(args)
    if args.emit == "tokens":
        out.write(",".join(map(str, inst.a)) + "\n" + ",".join(map(str, inst.b)) + "\n")
    elif args.emit == "text":
        syms = set(inst.a) | set(inst.b)
        if syms and max(syms) >= len(GEN_ALPHABET):
            raise UsageError(f"{max(syms) + 1} symbols do not fit the text alphabet; use --emit tokens")
        out.write("".join(GEN_ALPHABET[s] for s in inst.a) + "\n")
        out.write("".join(GEN_ALPHABET[s] for s in inst.b) + "\n")
    else:
        exp = inst.expected
        rec = {"a": list(inst.a), "b": list(inst.b), "metadata": inst.metadata}
        if exp is not None:
            rec["expected"] = {
                k: (str(v) if isinstance(v, int) and k.endswith(("count", "outputs")) else
                    list(v) if isinstance(v, tuple) else v)
                for k, v in vars(exp).items() if v is not None
            }
        _emit_json(rec, out)
    return EXIT_OK


def cmd_verify(args, out):
    suites = SUITES if args.suite == "all" else (args.suite,)
    n_random = args.random
    if n_random is None:
        n_random = 0 if args.exhaustive else 500
    reports = [run_suite(s, max_len=args.max_len, alphabet=args.alphabet, seed=args.seed,
                         n_random=n_random, exhaustive=args.exhaustive)
               for s in suites]
    passed = all(r.passed for r in reports)
    rec = {"passed": passed, "seed": args.seed, "max_len": args.max_len,
           "alphabet": args.alphabet, "exhaustive": args.exhaustive,
           "suites": [r.as_dict() for r in reports]}
    if args.format == "json":
        _emit_json(rec, out)
    else:
        for r in reports:
            verdict = "pass" if r.passed else "FAIL"
            out.write(f"{r.suite}: {verdict} ({r.instances} instances, {r.checks} checks)\n")
            for f in r.failures[:20]:
                out.write(f"  {f['check']}: instance={f['instance']} "
                          f"expected={f['expected']} got={f['got']}\n")
        out.write("pass\n" if passed else "FAIL\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_bench(args, out):
    rows = bench_rows(args.family, _parse_range(args.sizes), node_budget=args.budget)
    if args.format == "json":
        for r in rows:
            _emit_json(r, out)
    else:
        keep = ("size", "m", "n", "l", "naive_nodes", "naive_outputs", "embedding_count",
                "distinct_count", "ratio", "bound", "ratio_to_bound", "growth",
                "reference_growth", "budget_exceeded")
        _print_table([{k: r[k] for k in keep if k in r} for r in rows], out)
    return EXIT_OK


# ------------------------------------------------------------------------ parser

def _budget(text):
    if text.lower() in ("none", "inf", "0"):
        return None
    return int(float(text))


def build_parser():
    p = argparse.ArgumentParser(
        prog="lcsenum",
        description="Enumerate, count, and bound longest common subsequences.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("sequences", nargs="+",
                        help="two strings, two comma-separated token lists, or file path(s)")
        sp.add_argument("--input", choices=("text", "tokens", "file"), default="text",
                        help="how to read the sequences (default: text)")

    sp = sub.add_parser("enumerate", help="stream all distinct LCSs, embeddings, or naive outputs")
    sp.add_argument("kind", choices=("distinct", "embeddings", "naive"))
    add_input(sp)
    sp.add_argument("--limit", type=int, default=None, help="stop after N outputs")
    sp.add_argument("--format", choices=("text", "jsonl"), default="text")
    sp.add_argument("--budget", type=_budget, default=DEFAULT_NODE_BUDGET,
                    help="node budget for the naive backtrace (default 1e8; 'none' disables)")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("count", help="exact number of distinct LCSs or embeddings")
    sp.add_argument("kind", choices=("distinct", "embeddings"))
    add_input(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("bounds", help="closed-form bounds and asymptotic estimates")
    sp.add_argument("kind", choices=("distinct", "embeddings", "naive"))
    for name in ("t", "n", "m", "l"):
        sp.add_argument(f"--{name}", type=int, default=None)
    sp.add_argument("--sweep", default=None, help="START:STOP range (or comma list) to tabulate")
    sp.add_argument("--over", choices=("n", "t"), default=None,
                    help="what --sweep ranges over (default: t, or n if --n is given)")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("gen", help="generate an extremal instance pair")
    sp.add_argument("kind", choices=("max-distinct", "max-embeddings", "no-match", "single-match"))
    for name in ("t", "m", "n", "l", "y"):
        sp.add_argument(f"--{name}", type=int, default=None)
    sp.add_argument("--emit", choices=("text", "tokens", "json"), default="text")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check engines against oracles and closed forms")
    sp.add_argument("suite", choices=SUITES + ("all",))
    sp.add_argument("--max-len", type=int, default=5)
    sp.add_argument("--alphabet", type=int, default=2)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--random", type=int, default=None,
                    help="number of seeded random pairs (default 500, or 0 with --exhaustive)")
    sp.add_argument("--exhaustive", action="store_true",
                    help="also check every pair up to --max-len over --alphabet")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="measure naive-backtrace overhead over a size sweep")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("--sizes", default="1:8", help="START:STOP or comma list (default 1:8)")
    sp.add_argument("--budget", type=_budget, default=DEFAULT_NODE_BUDGET)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, DomainError, OracleLimitError, ValueError) as exc:
        print(f"lcsenum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapacityError, BudgetExceeded) as exc:
        print(f"lcsenum: error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
