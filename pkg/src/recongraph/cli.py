"""Command-line entry point: ``recongraph <verb> ...``.

Exit codes: 0 success, 1 an expected property did not hold, 2 bad input,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from typing import Any, Sequence

from .catalog import catalog, load_catalog
from .chromatic import chromatic_number
from .colouring import DEFAULT_COLOURING_CAP, always_distinct_pairs, frozen_vertices
from .constructions import (
    FamilySpec,
    construction_one,
    construction_one_family,
    construction_two,
    frozen_twin,
    iterated_mycielskian,
    join_padding,
    verify_same_reconfig,
)
from .errors import ParseError, ReconError, ResourceCap
from .graph import Graph
from .graphio import emit_graph, from_edgelist, parse_graph, to_graph6
from .harness import METHODS, reconstruct, roundtrip, sweep
from .reconfig import Kind, ReconfigGraph, build_kempe, build_single, build_token, strip

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _dump(doc: Any, path: str | None) -> None:
    _write(json.dumps(doc, indent=2, sort_keys=True) + "\n", path)


def _graph_arg(args: argparse.Namespace) -> Graph:
    return parse_graph(_read(args.input), args.format)


def _properties(g: Graph, cap: int) -> dict[str, Any]:
    chi = chromatic_number(g)
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "chi": chi,
        "frozen": sorted(frozen_vertices(g, chi, cap)) if g.n else [],
        "always_distinct": [list(p) for p in sorted(always_distinct_pairs(g, chi, cap))] if g.n else [],
    }


def cmd_build(args: argparse.Namespace) -> int:
    g = _graph_arg(args)
    kind = Kind(args.kind)
    if kind is Kind.SINGLE:
        r = build_single(g, args.k, args.cap)
    elif kind is Kind.KEMPE:
        r = build_kempe(g, args.k, args.cap)
    else:
        r = build_token(g, args.k, kind, args.cap)
    if args.seed is not None:
        _write(emit_graph(strip(r, args.seed), "edgelist"), args.out)
    elif args.dot:
        from .graphio import to_dot

        labels = [",".join(map(str, x)) for x in r.labels] if r.labels is not None else None
        _write(to_dot(r.graph, labels=labels), args.out)
    else:
        _dump(r.to_json(), args.out)
    return EXIT_OK


def _load_reconfig_input(text: str, seed: int | None) -> tuple[Graph, str | None, int | None]:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        r = ReconfigGraph.from_json(json.loads(text))
        graph = strip(r, seed) if seed is not None else r.graph
        return graph, r.kind.value, r.k
    return from_edgelist(text), None, None


def cmd_reconstruct(args: argparse.Namespace) -> int:
    r, kind, k = _load_reconfig_input(_read(args.input), args.seed)
    method = args.method or kind
    if method is None:
        raise ValueError("pass --method for edge-list input")
    if args.fast and method in ("single", "kempe"):
        method += "-fast"
    expected = parse_graph(args.expect, "graph6") if args.expect else None
    report = reconstruct(r, method, args.k if args.k is not None else k, expected)
    _dump(report.to_json(), args.out)
    return EXIT_PROPERTY if report.isomorphic_to_expected is False else EXIT_OK


def cmd_roundtrip(args: argparse.Namespace) -> int:
    g = _graph_arg(args)
    rec = roundtrip(g, args.method, args.k, args.seed)
    _dump(rec.to_json(args.timings), args.out)
    return EXIT_PROPERTY if rec.unexpected_failure else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    graphs = load_catalog(args.catalog) if args.catalog else catalog(args.n_max)
    seeds = [int(s) for s in args.seeds.split(",")]
    report = sweep(args.method, args.k, graphs, seeds, jobs=args.jobs)
    _dump(report.to_json(args.timings), args.out)
    return EXIT_OK if report.ok else EXIT_PROPERTY


def _build_construction(args: argparse.Namespace) -> Graph:
    name = args.name
    if name == "mycielskian":
        return iterated_mycielskian(_graph_arg(args), args.times)
    if name == "twin":
        return frozen_twin(_graph_arg(args), args.k)
    if name == "one":
        extra = [tuple(int(x) for x in e.split("-")) for e in args.extra] if args.extra else []
        return construction_one(FamilySpec(args.chi, args.p, parse_graph(args.h0), parse_graph(args.h3), extra))
    if name == "two":
        return construction_two(args.chi, args.i)
    if name == "pad":
        return join_padding(_graph_arg(args), args.k, parse_graph(args.h))
    raise ValueError(f"unknown construction {name!r}")


def cmd_construct(args: argparse.Namespace) -> int:
    g = _build_construction(args)
    doc = _properties(g, args.cap)
    _dump(doc, args.out)
    return EXIT_OK


def cmd_verify_family(args: argparse.Namespace) -> int:
    if args.construction == "one":
        members = construction_one_family(args.chi, args.p, parse_graph(args.h0), parse_graph(args.h3))
    else:
        members = [construction_two(args.chi, i) for i in range(args.members)]
    kind = Kind(args.kind)
    props = [_properties(g, args.cap) for g in members]
    comparisons = []
    for (i, g), (j, h) in combinations(enumerate(members), 2):
        rep = verify_same_reconfig(g, h, kind, args.chi)
        doc = rep.to_json()
        doc.pop("witness")
        comparisons.append({"members": [i, j], **doc})
    ok = all(c["relation"] != "different" for c in comparisons)
    # every member of the first family is frozen-free; in the second only G_0 is
    frozen_free = props if args.construction == "one" else props[:1]
    ok = ok and all(p["chi"] == args.chi for p in props) and not any(p["frozen"] for p in frozen_free)
    _dump({"members": props, "comparisons": comparisons, "ok": ok}, args.out)
    return EXIT_OK if ok else EXIT_PROPERTY


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="recongraph", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def io(sp: argparse.ArgumentParser, graph_input: bool = True) -> None:
        if graph_input:
            sp.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
            sp.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
        sp.add_argument("--out", default=None)
        sp.add_argument("--cap", type=int, default=DEFAULT_COLOURING_CAP)

    b = sub.add_parser("build", help="build a labelled reconfiguration graph (JSON)")
    io(b)
    b.add_argument("--kind", choices=[k.value for k in Kind], required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--seed", type=int, default=None, help="emit the stripped graph as an edge list")
    b.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    b.set_defaults(func=cmd_build)

    r = sub.add_parser("reconstruct", help="recover G from a reconfiguration graph")
    r.add_argument("input", nargs="?", default="-", help="JSON from 'build' or an edge list")
    r.add_argument("--out", default=None)
    r.add_argument("--method", choices=METHODS, default=None)
    r.add_argument("--k", type=int, default=None, help="token count for token methods")
    r.add_argument("--seed", type=int, default=None, help="strip labelled JSON input with this seed")
    r.add_argument("--fast", action="store_true")
    r.add_argument("--expect", default=None, help="graph6 of the expected answer")
    r.set_defaults(func=cmd_reconstruct)

    t = sub.add_parser("roundtrip", help="build, strip, reconstruct and compare one graph")
    io(t)
    t.add_argument("--method", "--kind", dest="method", choices=METHODS, required=True)
    t.add_argument("--k", default="chi+1", help="integer or rule: chi+1, chi+2, min+1, min+2")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--timings", action="store_true")
    t.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("sweep", help="round-trip every graph of a catalog")
    io(s, graph_input=False)
    s.add_argument("--method", "--kind", dest="method", choices=METHODS, required=True)
    s.add_argument("--k", default="chi+1")
    s.add_argument("--n-max", type=int, default=5)
    s.add_argument("--catalog", default=None, help="graph6 file used instead of the generated catalog")
    s.add_argument("--seeds", default="1")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timings", action="store_true")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("construct", help="build a named construction and report its properties")
    io(c)
    c.add_argument("name", choices=["mycielskian", "twin", "one", "two", "pad"])
    c.add_argument("--times", type=int, default=1)
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--chi", type=int, default=6)
    c.add_argument("--p", type=int, default=3)
    c.add_argument("--i", type=int, default=0)
    c.add_argument("--h0", default="@")
    c.add_argument("--h3", default="@")
    c.add_argument("--h", default="@", help="padding graph (graph6)")
    c.add_argument("--extra", nargs="*", help="H0-H3 edges as a-b in local indices")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify-family", help="check a family shares its chi-reconfiguration graph")
    io(v, graph_input=False)
    v.add_argument("--construction", choices=["one", "two"], default="one")
    v.add_argument("--kind", choices=["single", "kempe"], default="single")
    v.add_argument("--chi", type=int, default=6)
    v.add_argument("--p", type=int, default=3)
    v.add_argument("--h0", default="A_")
    v.add_argument("--h3", default="@")
    v.add_argument("--members", type=int, default=2, help="construction two: G_0..G_{members-1}")
    v.set_defaults(func=cmd_verify_family)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    if getattr(args, "input", None) == "-" and args.verb == "construct" and args.name in ("one", "two"):
        args.input = None
    try:
        return args.func(args)
    except ResourceCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ReconError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
