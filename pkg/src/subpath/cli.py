"""``subpath`` command line: every command prints one JSON envelope
``{command, inputs, result, elapsed_ms}`` with big integers as decimal strings."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import chains as ch
from . import explore as ex
from . import formulas as fm
from .count import BudgetExceeded, count_subpaths, length_profile, profile_closed_small, set_threads
from .graph import Graph, GraphError, parse_edge_list, parse_graph6, to_edge_list
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = range(5)


class InputError(ValueError):
    pass


def _fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "edgelist":
        return parse_edge_list(text)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise InputError(f"{path}: expected exactly one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])


# -- commands -------------------------------------------------------------------
# Each returns (result payload, plain text, exit code).


def cmd_count(args):
    g = _load_graph(args.input, args.format)
    pn = count_subpaths(g, budget=args.budget, threads=args.threads)
    return {"n": g.n, "m": g.m, "pn": str(pn)}, str(pn), EXIT_OK


def cmd_profile(args):
    g = _load_graph(args.input, args.format)
    prof = length_profile(g, budget=args.budget, threads=args.threads)
    closed = profile_closed_small(g)
    match = all(prof[l] == closed[l] for l in range(4))
    result = {
        "n": g.n,
        "profile": [str(c) for c in prof.counts],
        "pn": str(prof.total),
        "closed_form": [str(c) for c in closed],
        "closed_form_match": match,
    }
    return result, " ".join(map(str, prof.counts)), EXIT_OK if match else EXIT_INTERNAL


def cmd_formula(args):
    fam = args.family
    if fam == "tree":
        value = fm.pn_tree(args.n)
    elif fam == "cycle":
        value = fm.pn_cycle(args.n)
    elif fam == "complete":
        value = fm.pn_complete(args.n)
    elif fam == "biclique":
        value = fm.pn_complete_bipartite(args.a, args.b)
    elif fam == "unicyclic":
        try:
            sizes = [int(x) for x in args.sizes.split(",")]
        except ValueError as exc:
            raise InputError(f"malformed --sizes {args.sizes!r}") from exc
        value = fm.pn_unicyclic(sizes)
    elif fam == "ladder":
        value = fm.pn_ladder(args.k)
    elif fam == "hexbounds":
        lo, hi = fm.hexagonal_bounds(args.k)
        return {"lower": str(lo), "upper": str(hi)}, f"{lo} {hi}", EXIT_OK
    else:
        e = fm.expected_pn(args.n, fm.parse_rational(args.p))
        text = _fraction(e)
        return {"expectation": text, "decimal": ex._sig_digits(e)}, text, EXIT_OK
    return str(value), str(value), EXIT_OK


def cmd_chain(args):
    s = ch.parse_chain_spec(args.spec)
    value = ch.pn_chain(s)
    result = {"spec": str(s), "n": s.n, "cycle_lengths": list(s.cycle_lengths), "pn": str(value)}
    if args.classify:
        c = ch.classify_chain(s)
        result["classification"] = {
            "tags": list(c.tags),
            "cycles": [{"index": x.index, "tags": list(x.tags)} for x in c.cycles],
        }
    if args.build:
        out = to_edge_list(ch.chain_graph(s))
        if args.build == "-":
            sys.stderr.write(out)
        else:
            Path(args.build).write_text(out)
        result["built"] = args.build
    return result, str(value), EXIT_OK


def _spec_json(s: ch.ChainSpec, value: int | None = None) -> dict:
    out = {"spec": str(s), "tags": list(ch.classify_chain(s).tags)}
    if value is not None:
        out["pn"] = str(value)
    return out


def cmd_chain_family(args):
    try:
        g = [int(x) for x in args.g.split(",")]
    except ValueError as exc:
        raise InputError(f"malformed --g {args.g!r}") from exc
    if args.extremal:
        r = ch.extremal_in_family(g, check=False)
        result = {
            "g": list(r.g),
            "size": r.size,
            "min_value": str(r.min_value),
            "max_value": str(r.max_value),
            "minimizers": [_spec_json(s) for s in r.min_specs],
            "maximizers": [_spec_json(s) for s in r.max_specs],
            "max_all_kink": r.max_all_kink,
            "min_all_linear": r.min_all_linear,
            "holds": r.holds,
        }
        return result, f"{r.min_value} {r.max_value}", EXIT_OK if r.holds else EXIT_VERIFY
    specs = list(ch.enumerate_family(g, dedupe=args.dedupe))
    result = {"g": g, "size": len(specs), "chains": [_spec_json(s, ch.pn_chain(s)) for s in specs]}
    return result, "\n".join(str(s) for s in specs), EXIT_OK


def cmd_scan(args):
    lines = _read_text(args.input).splitlines()
    r = ex.scan_stream(lines, args.objective, args.filter, top=args.top, threads=args.threads)
    return r.to_json(), str(r.extremal_value), EXIT_OK


def cmd_random(args):
    r = ex.monte_carlo_pn(args.n, fm.parse_rational(args.p), args.trials, args.seed)
    return r.to_json(), r.sample_mean, EXIT_OK


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    suites = []
    for name in names:
        cases = run_suite(name, args.max_size)
        suites.append({
            "suite": name,
            "passed": all(c.passed for c in cases),
            "cases": [c.to_json() for c in cases],
        })
    ok = all(s["passed"] for s in suites)
    return {"passed": ok, "suites": suites}, "pass" if ok else "fail", EXIT_OK if ok else EXIT_VERIFY


# -- parser -----------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker cap (default: SUBPATH_THREADS or every core)")
    common.add_argument("--plain", action="store_true", default=argparse.SUPPRESS,
                        help="print the bare value instead of JSON")

    p = argparse.ArgumentParser(prog="subpath", description="Exact subpath numbers of graphs.")
    p.add_argument("--threads", type=_positive, default=None)
    p.add_argument("--plain", action="store_true", default=False)
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("--input", required=True, help="graph file, '-' for stdin")
        sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        sp.add_argument("--budget", type=_positive, default=None, help="max extension steps")

    sp = sub.add_parser("count", parents=[common], help="subpath number of one graph")
    graph_input(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("profile", parents=[common], help="path counts by length")
    graph_input(sp)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("formula", parents=[common], help="closed forms for graph families")
    fam = sp.add_subparsers(dest="family", required=True)
    for name in ("tree", "cycle", "complete"):
        f = fam.add_parser(name, parents=[common])
        f.add_argument("--n", type=int, required=True)
    f = fam.add_parser("biclique", parents=[common])
    f.add_argument("--a", type=int, required=True)
    f.add_argument("--b", type=int, required=True)
    f = fam.add_parser("unicyclic", parents=[common])
    f.add_argument("--sizes", required=True, help="tree sizes around the cycle, e.g. 3,1,1")
    for name in ("ladder", "hexbounds"):
        f = fam.add_parser(name, parents=[common])
        f.add_argument("--k", type=int, required=True)
    f = fam.add_parser("random-exp", parents=[common])
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--p", required=True, help="edge probability as NUM/DEN")
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("chain", parents=[common], help="closed form for a cycle chain")
    sp.add_argument("--spec", required=True, help="'a1,..,ak;b1,..,bk'")
    sp.add_argument("--classify", action="store_true")
    sp.add_argument("--build", metavar="OUT", help="write the edge list of G(S) to OUT")
    sp.set_defaults(func=cmd_chain)

    sp = sub.add_parser("chain-family", parents=[common], help="all chains with given cycle lengths")
    sp.add_argument("--g", required=True, help="cycle lengths 'g1,..,gk'")
    sp.add_argument("--dedupe", action="store_true", help="one spec per symmetry orbit")
    sp.add_argument("--extremal", action="store_true", help="report minimisers and maximisers")
    sp.set_defaults(func=cmd_chain_family)

    sp = sub.add_parser("scan", parents=[common], help="extremal graphs in a graph6 stream")
    sp.add_argument("--input", required=True, help="graph6 file, '-' for stdin")
    sp.add_argument("--objective", choices=("min", "max"), default="max")
    sp.add_argument("--filter", choices=sorted(ex.PREDICATES), default=None)
    sp.add_argument("--top", type=_positive, default=None)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("random", parents=[common], help="Monte Carlo mean of pn(G(n, p))")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", required=True, help="edge probability as NUM/DEN")
    sp.add_argument("--trials", type=_positive, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("verify", parents=[common], help="check closed forms against enumeration")
    sp.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    sp.add_argument("--max-size", type=_positive, default=None)
    sp.set_defaults(func=cmd_verify)
    return p


def _inputs(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func", "plain", "command")}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.threads = set_threads(args.threads)
    start = time.perf_counter()
    error = None
    try:
        result, plain, code = args.func(args)
    except BudgetExceeded as exc:
        error, code = str(exc), EXIT_BUDGET
    except AssertionError as exc:
        error, code = f"internal assertion: {exc}", EXIT_INTERNAL
    except (InputError, GraphError, ch.ChainError, ex.ScanError, ValueError) as exc:
        error, code = str(exc), EXIT_INPUT
    elapsed = int((time.perf_counter() - start) * 1000)
    if error is not None:
        payload = {"command": args.command, "inputs": _inputs(args), "error": error, "elapsed_ms": elapsed}
        print(json.dumps(payload), file=sys.stderr)
        return code
    if args.plain:
        print(plain)
    else:
        payload = {"command": args.command, "inputs": _inputs(args), "result": result, "elapsed_ms": elapsed}
        print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
