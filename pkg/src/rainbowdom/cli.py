"""Command-line interface: solve, classify, profile, gen, verify."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional

from .gadgets import GadgetKind, attach_gadget, build_spider
from .graph import Graph, Graph6Error, emit_graph6, parse_graph6
from .enumeration import enumerate_free_trees
from .perturbation import (
    edge_removal_profile,
    is_er_critical,
    is_stable,
    vertex_removal_profile,
)
from .recognizers import recognize_family_F, recognize_family_T
from .solver import (
    CapExceeded,
    DEFAULT_BRUTE_CAP,
    assignment_to_string,
    gamma,
    independent_domination,
    w_zero,
)
from .suites import SUITES

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_GADGET_ALIASES = {
    "o1": ("O1", False),
    "o2": ("O2", False),
    "o3": ("O3", True),
    "k12": ("K12Path", False),
    "k13": ("K13Path", False),
    "spider": ("SpiderAttach", True),
    "k14_1": ("K14_1", False),
    "k14_2": ("K14_2", False),
    "k14_3": ("K14_3", False),
    "k14_4": ("K14_4", False),
    "k14_5": ("K14_5", False),
    "k14_6": ("K14_6", True),
    "k14_7": ("K14_7", False),
}


def _add_input_opts(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--g6", help="single graph6 string argument")
    src.add_argument("--file", help="file of graph6 lines")
    p.add_argument("--json", action="store_true", help="emit JSON lines")
    p.add_argument("--brute-cap", type=int, default=DEFAULT_BRUTE_CAP)


def _input_lines(args) -> Iterator[tuple[int, str]]:
    if args.g6 is not None:
        yield 1, args.g6
        return
    stream = open(args.file) if args.file else sys.stdin
    try:
        for i, line in enumerate(stream, start=1):
            line = line.strip()
            if line:
                yield i, line
    finally:
        if args.file:
            stream.close()


def _each_graph(args) -> Iterator[tuple[int, Optional[Graph], Optional[str]]]:
    for lineno, line in _input_lines(args):
        try:
            yield lineno, parse_graph6(line), None
        except Graph6Error as exc:
            yield lineno, None, str(exc)


def cmd_solve(args) -> int:
    status = EXIT_OK
    for lineno, g, err in _each_graph(args):
        if g is None:
            print(f"line {lineno}: parse error: {err}", file=sys.stderr)
            status = EXIT_FAILURE
            continue
        try:
            out = gamma(g, brute_cap=args.brute_cap)
        except CapExceeded as exc:
            print(f"line {lineno}: skipped: {exc}", file=sys.stderr)
            status = EXIT_FAILURE
            continue
        rec = {"graph6": emit_graph6(g), "gamma": out.weight}
        if out.feasible:
            rec["witness"] = assignment_to_string(out.witness)
        if args.wzero and out.feasible:
            rec["w_zero"] = sorted(w_zero(g, args.brute_cap))
        if args.idom:
            rec["i"] = independent_domination(g, args.brute_cap)
        if args.json:
            print(json.dumps(rec, sort_keys=True))
        else:
            parts = [rec["graph6"], f"gamma={rec['gamma']}"]
            if "witness" in rec:
                parts.append(f"witness={rec['witness']}")
            if "w_zero" in rec:
                parts.append("w_zero={" + ",".join(map(str, rec["w_zero"])) + "}")
            if "i" in rec:
                parts.append(f"i={rec['i']}")
            print("\t".join(parts))
    return status


def cmd_classify(args) -> int:
    status = EXIT_OK
    for lineno, g, err in _each_graph(args):
        if g is None:
            print(f"line {lineno}: parse error: {err}", file=sys.stderr)
            status = EXIT_FAILURE
            continue
        try:
            rec = {"graph6": emit_graph6(g), "stable": is_stable(g, args.brute_cap)}
            if g.is_tree():
                rec["er_critical"] = (
                    is_er_critical(g, args.brute_cap) if g.edge_count() >= 1 else None
                )
                if g.n >= 3:
                    cert = recognize_family_T(g)
                    rec["in_T"] = cert.to_json() if cert else None
                    pre = recognize_family_F(g)
                    rec["in_F"] = pre.to_json() if pre else None
                else:
                    rec["in_T"] = rec["in_F"] = None
            else:
                rec["tree_checks"] = "skipped (not a tree)"
        except CapExceeded as exc:
            print(f"line {lineno}: skipped: {exc}", file=sys.stderr)
            status = EXIT_FAILURE
            continue
        if args.json:
            print(json.dumps(rec, sort_keys=True))
        else:
            parts = [rec["graph6"], f"stable={rec['stable']}"]
            if "er_critical" in rec:
                parts.append(f"er_critical={rec['er_critical']}")
                parts.append(f"in_T={'yes' if rec.get('in_T') else 'no'}")
                in_f = rec.get("in_F")
                parts.append(
                    f"in_F={in_f['preimage_graph6'] if in_f else 'no'}"
                )
            else:
                parts.append("tree_checks=skipped")
            print("\t".join(parts))
    return status


def cmd_profile(args) -> int:
    status = EXIT_OK
    for lineno, g, err in _each_graph(args):
        if g is None:
            print(f"line {lineno}: parse error: {err}", file=sys.stderr)
            status = EXIT_FAILURE
            continue
        try:
            if args.edges:
                prof = edge_removal_profile(g, args.brute_cap)
            else:
                prof = vertex_removal_profile(g, args.brute_cap)
        except CapExceeded as exc:
            print(f"line {lineno}: skipped: {exc}", file=sys.stderr)
            status = EXIT_FAILURE
            continue
        rec = {"graph6": emit_graph6(g)}
        rec.update(prof.to_json())
        print(json.dumps(rec, sort_keys=True))
    return status


def cmd_gen(args) -> int:
    if args.kind == "trees":
        if args.n is None:
            print("gen trees requires --n", file=sys.stderr)
            return EXIT_USAGE
        for t in enumerate_free_trees(args.n):
            print(emit_graph6(t))
        return EXIT_OK
    if args.kind == "spider":
        if args.k is None or args.k < 2:
            print("gen spider requires --k >= 2", file=sys.stderr)
            return EXIT_USAGE
        print(emit_graph6(build_spider(args.k)))
        return EXIT_OK
    # gadget
    if args.gadget_kind is None or args.base is None or args.at is None:
        print("gen gadget requires --kind, --base and --at", file=sys.stderr)
        return EXIT_USAGE
    alias = _GADGET_ALIASES.get(args.gadget_kind.lower())
    if alias is None:
        print(f"unknown gadget kind {args.gadget_kind!r}", file=sys.stderr)
        return EXIT_USAGE
    tag, needs_param = alias
    if needs_param and args.param is None:
        print(f"gadget {args.gadget_kind} requires --param", file=sys.stderr)
        return EXIT_USAGE
    try:
        base = parse_graph6(args.base)
        kind = GadgetKind(tag, args.param if needs_param else None)
        g, _ = attach_gadget(base, args.at, kind)
    except (Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(emit_graph6(g))
    return EXIT_OK


def _suite_kwargs(name: str, args) -> dict:
    kwargs = {}
    if name in ("path-cycle", "diameter-extremal", "stability", "er-critical",
                "minfunction-structure", "unicyclic"):
        if args.max_n is not None:
            kwargs["max_n"] = args.max_n
    if name == "gadget-props":
        if args.trials is not None:
            kwargs["trials"] = args.trials
        if args.seed is not None:
            kwargs["seed"] = args.seed
    if name == "removal-bounds":
        if args.trials is not None:
            kwargs["trials"] = args.trials
        if args.seed is not None:
            kwargs["seed"] = args.seed
        if args.max_n is not None:
            kwargs["max_tree_n"] = args.max_n
    return kwargs


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            print(f"unknown suite {name!r}; known: {', '.join(SUITES)}", file=sys.stderr)
            return EXIT_USAGE
    failed = False
    for name in names:
        report = SUITES[name](**_suite_kwargs(name, args))
        print(json.dumps(report.to_json(), sort_keys=True))
        # timing goes to stderr so stdout stays reproducible
        print(
            f"{report.suite}\tstatus={report.status}\tchecks={report.checks}"
            f"\tfailures={len(report.failures)}\tseconds={report.seconds:.2f}",
            file=sys.stderr,
        )
        if report.assertive and report.failures:
            failed = True
    return EXIT_FAILURE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rainbowdom",
        description="2-rainbow independent domination: exact solving, "
        "perturbation analysis, family recognition and claim verification.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="gamma_ri2 per graph6 line")
    _add_input_opts(ps)
    ps.add_argument("--wzero", action="store_true", help="also report the forced-zero set")
    ps.add_argument("--idom", action="store_true", help="also report i(G)")
    ps.set_defaults(func=cmd_solve)

    pc = sub.add_parser("classify", help="stability / criticality / family membership")
    _add_input_opts(pc)
    pc.set_defaults(func=cmd_classify)

    pp = sub.add_parser("profile", help="removal profiles as JSON lines")
    _add_input_opts(pp)
    mode = pp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--vertices", action="store_true")
    mode.add_argument("--edges", action="store_true")
    pp.set_defaults(func=cmd_profile)

    pg = sub.add_parser("gen", help="stream graph6 lines")
    pg.add_argument("kind", choices=["trees", "spider", "gadget"])
    pg.add_argument("--n", type=int, help="tree order")
    pg.add_argument("--k", type=int, help="spider leg count")
    pg.add_argument("--kind", dest="gadget_kind", help="gadget name (o1, o2, o3, k12, k13, spider, k14_1..k14_7)")
    pg.add_argument("--base", help="base graph6")
    pg.add_argument("--at", type=int, help="attach vertex")
    pg.add_argument("--param", type=int, help="gadget parameter k")
    pg.set_defaults(func=cmd_gen)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", help="suite name or 'all'")
    pv.add_argument("--max-n", type=int, default=None)
    pv.add_argument("--trials", type=int, default=None)
    pv.add_argument("--seed", type=int, default=None)
    pv.set_defaults(func=cmd_verify)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
