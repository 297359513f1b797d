"""Command-line entry point.

Exit codes: 0 success, 2 input error, 3 cap or budget exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager

from . import arclist
from .certificate import Certificate
from .certify import certify, verify_certificate
from .errors import CapExceeded, GraphError
from .factors import (
    DEFAULT_CAP,
    FactorEngine,
    is_closed,
    is_hamiltonian_bruteforce,
    open_routes,
    parity_class,
)
from .generation import (
    DEFAULT_BUDGET,
    FamilySpec,
    census,
    construct_closed_splice,
    construct_unique_route_splice,
    enumerate_family,
)
from .graph_core import TwoDigraph, induced_subgraph, is_connected, is_strongly_connected
from .quotients import DEFAULT_SUBSET_CAP, classify_ac6, closed_subset_search, quotient
from .splitting import certify_by_splitting, even_pair_splice, minimal_split_sets, split_report

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class Timer:
    def __init__(self):
        self.ms: dict[str, float] = {}

    @contextmanager
    def stage(self, name):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.ms[name] = round((time.perf_counter() - t0) * 1000, 3)


def _read_graph(path: str) -> TwoDigraph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return arclist.parse(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}")


def graph_counts(g: TwoDigraph) -> dict:
    return {
        "vertices": len(g.vertices),
        "arcs": len(g.arcs),
        "acs": g.n_acs,
        "saturated": len(g.saturated),
        "entry": len(g.entry),
        "exit": len(g.exit),
        "loops": g.n_loops,
        "clean_acs": sum(ac.clean for ac in g.acs),
        "odd_acs": sum(ac.is_odd for ac in g.acs),
    }


def certificate_report(g: TwoDigraph, cert: Certificate, timer: Timer) -> dict:
    return {**cert.to_dict(), "counts": graph_counts(g), "timings": timer.ms}


# -- text rendering --------------------------------------------------------

def _render_text(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, val in obj.items():
            if isinstance(val, (dict, list)) and val and not _flat(val):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(val, indent + 1))
            elif isinstance(val, str) and "\n" in val:
                lines.append(f"{pad}{key}: |")
                lines.extend(f"{pad}  {ln}" for ln in val.rstrip("\n").splitlines())
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)) and not _flat(val):
                lines.append(f"{pad}-")
                lines.append(_render_text(val, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(val)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines)


def _flat(val) -> bool:
    items = val.values() if isinstance(val, dict) else val
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in items)


def _scalar(val) -> str:
    if isinstance(val, dict):
        return ", ".join(f"{k}={_scalar(v)}" for k, v in val.items())
    if isinstance(val, list):
        return "[" + ", ".join(_scalar(v) for v in val) + "]"
    if val == "":
        return '""'
    return str(val)


def _emit(args, report: dict) -> None:
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(_render_text(report))


# -- subcommands -------------------------------------------------------------

def cmd_analyze(args, timer):
    g = _read_graph(args.graph)
    with timer.stage("analyze"):
        info = {
            "connected": is_connected(g),
            "strongly_connected": is_strongly_connected(g),
            "clean": g.is_clean,
            "ac_lengths": list(g.ac_lengths()),
        }
        if g.is_saturated and g.n_acs <= args.cap:
            info["parity"] = parity_class(g, exhaustive=args.exhaustive, cap=args.cap)
    report = {"counts": graph_counts(g), "analysis": info}
    if g.is_saturated:
        with timer.stage("certify"):
            cert = certify(g, cap=args.cap, exhaustive=args.exhaustive)
        report = {**cert.to_dict(), **report}
    report["timings"] = timer.ms
    _emit(args, report)


def cmd_decompose(args, timer):
    g = _read_graph(args.graph)
    with timer.stage("decompose"):
        acs = []
        for ac in g.acs:
            acs.append({
                "index": ac.index,
                "arcs": list(ac.arcs),
                "length": len(ac.arcs),
                "parity": ac.parity,
                "clean": ac.clean,
                "closed": is_closed(induced_subgraph(g, [ac.index]), cap=None),
            })
    _emit(args, {"counts": graph_counts(g), "acs": acs, "timings": timer.ms})


def cmd_factors(args, timer):
    g = _read_graph(args.graph)
    if g.n_acs > args.cap:
        raise CapExceeded(f"{g.n_acs} ACs exceeds --cap {args.cap}")
    with timer.stage("factors"):
        eng = FactorEngine(g)
        rows = []
        for mask in eng.masks():
            f = eng.factor(mask)
            rows.append({"mask": mask, "bits": "".join(map(str, f.selection.bits)),
                         "index": f.index, "paths": len(f.paths), "open": f.is_open})
        indices = [r["index"] for r in rows]
    report = {"counts": {**graph_counts(g), "factors": len(rows), "min_index": min(indices),
                         "open_factors": sum(r["open"] for r in rows)},
              "factors": rows, "timings": timer.ms}
    _emit(args, report)


def cmd_routes(args, timer):
    g = _read_graph(args.graph)
    with timer.stage("routes"):
        routes = open_routes(g, cap=args.cap) if g.entry else {}
        rows = [{"mapping": [list(p) for p in r.mapping], "permutation": list(r.permutation),
                 "parity": r.parity, "mask": m} for r, m in sorted(routes.items(), key=lambda x: x[0].mapping)]
    _emit(args, {"counts": {**graph_counts(g), "open_routes": len(rows)},
                 "routes": rows, "timings": timer.ms})


def cmd_certify(args, timer):
    g = _read_graph(args.graph)
    with timer.stage("certify"):
        if args.method == "auto":
            cert = certify(g, cap=args.cap, closed_cap=args.closed_cap, exhaustive=args.exhaustive)
        elif args.method == "split":
            cert = certify_by_splitting(g)
        elif args.method == "closed":
            k = closed_subset_search(g, cap=args.closed_cap)
            if k is None:
                cert = Certificate("Undecided", "closed_subset", {})
            else:
                cert = Certificate("NonHamiltonian", "closed_subset",
                                   {"K": list(k), "ac_arcs": [min(g.acs[i].arcs) for i in k]})
        else:
            cert = certify(g, cap=args.cap, exhaustive=True)
    with timer.stage("verify"):
        ok = verify_certificate(g, cert, cap=args.cap)
    report = certificate_report(g, cert, timer)
    report["verified"] = ok
    _emit(args, report)


def cmd_quotient(args, timer):
    g = _read_graph(args.graph)
    k = _int_list(args.k)
    with timer.stage("quotient"):
        q = quotient(g, k)
    minors = [{"route": [list(p) for p in m.route.mapping],
               "selection": list(m.selection.bits),
               "counts": graph_counts(m.graph),
               "arclist": arclist.serialize(m.graph)} for m in q.minors]
    _emit(args, {"K": list(q.k), "counts": {"minors": len(minors)}, "minors": minors,
                 "timings": timer.ms})


def cmd_split(args, timer):
    g = _read_graph(args.graph)
    with timer.stage("split"):
        if args.vertices:
            rep = split_report(g, _int_list(args.vertices))
            out = {
                "split_set": list(rep.split_set.vertices),
                "minimal": rep.split_set.minimal,
                "components": [graph_counts(c) for c in rep.components],
                "spliced": [{"counts": graph_counts(s), "parity": p, "arclist": arclist.serialize(s)}
                            for s, p in zip(rep.spliced, rep.parities)],
            }
        else:
            sets = minimal_split_sets(g, args.max_size)
            out = {"minimal_split_sets": [list(s.vertices) for s in sets]}
    _emit(args, {**out, "timings": timer.ms})


def cmd_classify_ac(args, timer):
    g = _read_graph(args.graph)
    with timer.stage("classify"):
        if args.ac is None and g.n_acs > 1:
            rows = [classify_ac6(g, i) for i in range(g.n_acs)]
        else:
            rows = [classify_ac6(g, args.ac)]
    data = [{"name": c.name, "vertices": c.vertices, "loops": c.loops, "exit_entry": c.exit_entry,
             "open_factors": c.open_factors, "open_routes": c.open_routes,
             "closed": c.closed} for c in rows]
    _emit(args, {"classes": data, "timings": timer.ms})


def _family(args) -> FamilySpec:
    cons = set(args.constraint or ())
    if args.family:
        try:
            return FamilySpec.parse(args.family, cons)
        except ValueError as e:
            raise UsageError(str(e))
    if args.k is None or args.m is None:
        raise UsageError("give a family name like B6_2 or both --k and --m")
    try:
        return FamilySpec(args.k, args.m, frozenset(cons))
    except ValueError as e:
        raise UsageError(str(e))


def _budget(args):
    return None if args.full_census else args.budget


def cmd_enumerate(args, timer):
    spec = _family(args)
    n = 0
    with timer.stage("enumerate"):
        for g in enumerate_family(spec, _budget(args)):
            if args.format == "json":
                print(json.dumps({"arcs": [[a.id, a.tail, a.head] for a in g.arcs]}))
            else:
                if n:
                    print()
                print(arclist.serialize(g), end="")
            n += 1
    print(f"# {n} graphs in {spec.name}", file=sys.stderr)


def cmd_census(args, timer):
    spec = _family(args)
    with timer.stage("census"):
        row = census(spec, _budget(args), cap=args.cap)
    _emit(args, {"family": spec.name,
                 "counts": {"total": row.total, "connected": row.connected,
                            "clean_odd_nonham": row.clean_odd_nonham,
                            "split_decided": row.split_decided},
                 "timings": timer.ms})


def cmd_construct(args, timer):
    g1 = _read_graph(args.first)
    g2 = _read_graph(args.second)
    with timer.stage("construct"):
        if args.kind == "closed-splice":
            out = construct_closed_splice(g1, g2, args.seed)
        elif args.kind == "unique-route":
            out = construct_unique_route_splice(g1, g2, args.seed, cap=args.cap)
        else:
            if args.v1 is None or args.v2 is None:
                raise UsageError("even-pair needs --v1 and --v2")
            out = even_pair_splice(g1, g2, args.v1, args.v2)
    print(arclist.serialize(out, comment=f"{args.kind} construction"), end="")


def cmd_export_dot(args, timer):
    g = _read_graph(args.graph)
    highlight = None
    if args.highlight_ac is not None:
        highlight = args.highlight_ac
    elif args.highlight_factor is not None:
        highlight = FactorEngine(g).factor(args.highlight_factor)
    elif args.hamiltonian:
        highlight = is_hamiltonian_bruteforce(g, args.cap)[1]
    print(arclist.export_dot(g, highlight), end="")


COMMANDS = {
    "analyze": (cmd_analyze, "summary, parity and certificate"),
    "decompose": (cmd_decompose, "alternating-cycle decomposition"),
    "factors": (cmd_factors, "every factor with its index"),
    "routes": (cmd_routes, "open routes and their permutation parity"),
    "certify": (cmd_certify, "Hamiltonicity certificate"),
    "quotient": (cmd_quotient, "minors of a K-quotient"),
    "split": (cmd_split, "minimal split sets or the result of splitting"),
    "classify-ac": (cmd_classify_ac, "six-arc AC class and metrics"),
    "enumerate": (cmd_enumerate, "isomorph-free family members as arc lists"),
    "census": (cmd_census, "family census counts"),
    "construct": (cmd_construct, "non-Hamiltonian constructions"),
    "export-dot": (cmd_export_dot, "Graphviz DOT drawing"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max ACs for factor enumeration")
    common.add_argument("--exhaustive", action="store_true", help="skip shortcuts and enumerate")
    common.add_argument("--full-census", action="store_true", help="lift the enumeration budget")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="twodd", description="2-digraph analysis and Hamiltonicity certificates")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = {}
    for name, (_, help_) in COMMANDS.items():
        p[name] = sub.add_parser(name, help=help_, parents=[common])
    for name in ("analyze", "decompose", "factors", "routes", "certify", "quotient", "split",
                 "classify-ac", "export-dot"):
        p[name].add_argument("graph", help="arc-list file, or - for standard input")
    p["certify"].add_argument("--method", choices=("auto", "split", "closed", "brute"), default="auto")
    p["certify"].add_argument("--closed-cap", type=int, default=DEFAULT_SUBSET_CAP)
    p["quotient"].add_argument("--k", required=True, help="AC indices, e.g. 0,2")
    p["split"].add_argument("--vertices", help="vertices to split, e.g. 5,7")
    p["split"].add_argument("--max-size", type=int, default=2)
    p["classify-ac"].add_argument("--ac", type=int, default=None)
    for name in ("enumerate", "census"):
        p[name].add_argument("family", nargs="?", help="family name such as B6_2 (saturated)")
        p[name].add_argument("--k", type=int)
        p[name].add_argument("--m", type=int)
        p[name].add_argument("--constraint", action="append",
                             choices=sorted({"clean", "dirty", "odd", "even", "connected", "saturated"}))
        p[name].add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p["construct"].add_argument("kind", choices=("closed-splice", "unique-route", "even-pair"))
    p["construct"].add_argument("first")
    p["construct"].add_argument("second")
    p["construct"].add_argument("--v1", type=int)
    p["construct"].add_argument("--v2", type=int)
    p["export-dot"].add_argument("--highlight-ac", type=int)
    p["export-dot"].add_argument("--highlight-factor", type=int, metavar="MASK")
    p["export-dot"].add_argument("--hamiltonian", action="store_true",
                                 help="highlight a Hamiltonian cycle if one exists")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    handler = COMMANDS[args.command][0]
    try:
        handler(args, Timer())
    except UsageError as e:
        print(f"twodd: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"twodd: cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, OSError, UnicodeDecodeError) as e:
        print(f"twodd: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
