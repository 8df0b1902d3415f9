"""Command-line front end.

Subcommands: analyze, build, word, homology, relhyp-check, table.
Results go to stdout (JSON is canonical: sorted keys, no floats, one
trailing newline, so identical inputs yield byte-identical output);
diagnostics go to stderr.  Exit codes: 1 parse error, 2 precondition
violation, 3 resource limit.

Graph files are UTF-8 text: optional ``v <id>`` lines, one
``e <id> <u> <v>`` line per edge, ``#`` comments.  Ids are alphanumeric
tokens.  Words use ``+eID``/``-eID`` tokens.  The cell cap can be
overridden with the BRAIDSCOPE_MAX_CELLS environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import JSON_SCHEMA_VERSION, families
from .classifier import (
    ClassificationReport, Subgraph, check_peripheral_collection, full_report,
)
from .complex import DEFAULT_CELL_CAP, build
from .diagrams import check_legal, cyclically_reduce, diagram, equal
from .errors import (
    BraidscopeError, ParseError, PreconditionError, ResourceLimitError,
)
from .graph import Graph, normalize, subdivide_for
from .homology import chain_complex, homology
from .hyperplanes import (
    coloring_graph, hyperplanes_by_components, verify_special_coloring,
)

EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_RESOURCE = 3


def parse_graph_text(text: str) -> Graph:
    vertices = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            vertices.append(parts[1])
        elif parts[0] == "e" and len(parts) == 4:
            edges.append((parts[1], parts[2], parts[3]))
            vertices += [parts[2], parts[3]]
        else:
            raise ParseError(f"line {lineno}: expected 'v <id>' or 'e <id> <u> <v>'")
        for tok in parts[1:]:
            if not tok.isalnum():
                raise ParseError(f"line {lineno}: id {tok!r} is not alphanumeric")
    if not vertices:
        raise ParseError("empty graph file")
    try:
        return Graph.make(vertices, edges)
    except PreconditionError as exc:
        raise ParseError(str(exc)) from exc


def load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph_text(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def parse_word_tokens(tokens) -> list:
    letters = []
    for tok in tokens:
        if len(tok) < 2 or tok[0] not in "+-":
            raise ParseError(f"bad word token {tok!r}; want +eID or -eID")
        letters.append((tok[1:], 1 if tok[0] == "+" else -1))
    return letters


def emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    sys.stdout.write("\n")


def cell_cap(args) -> int:
    env = os.environ.get("BRAIDSCOPE_MAX_CELLS")
    if args.max_cells is not None:
        return args.max_cells
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError("BRAIDSCOPE_MAX_CELLS must be an integer") from exc
    return DEFAULT_CELL_CAP


# -- report serialisation -------------------------------------------------

def report_payload(rep: ClassificationReport) -> dict:
    payload = {
        "schema": JSON_SCHEMA_VERSION,
        "fingerprint": rep.fingerprint,
        "particles": rep.n,
        "connected": rep.connected,
        "oracle": rep.oracle_note,
        "assignments": [],
    }
    if rep.oracle_agreement is not None:
        payload["oracle_agreement"] = {
            k: bool(v) for k, v in sorted(rep.oracle_agreement.items())}
    for a in rep.assignments:
        payload["assignments"].append({
            "split": list(a.assignment),
            "trivial": a.trivial,
            "infinite_cyclic": a.infinite_cyclic,
            "hyperbolic": a.hyperbolic,
            "toral_rel_hyp": a.toral_rel_hyp,
            "acyl_status": a.acyl_status,
            "free": a.free,
            "contains_f2": a.contains_f2,
            "contains_f2xz": a.contains_f2xz,
            "shapes": [c.shape_tag for c in a.per_component],
        })
    return payload


def report_table(rep: ClassificationReport) -> str:
    lines = [f"graph {rep.fingerprint[:60]}... n={rep.n}"
             if len(rep.fingerprint) > 60 else
             f"graph {rep.fingerprint} n={rep.n}"]
    for a in rep.assignments:
        lines.append(
            f"  split={list(a.assignment)} trivial={a.trivial}"
            f" Z={a.infinite_cyclic} hyp={a.hyperbolic}"
            f" toralRH={a.toral_rel_hyp} acyl={a.acyl_status}"
            f" free={a.free} F2={a.contains_f2} F2xZ={a.contains_f2xz}")
    lines.append(f"  oracle: {rep.oracle_note}")
    return "\n".join(lines)


# -- subcommands ----------------------------------------------------------

def cmd_analyze(args) -> int:
    g = normalize(load_graph(args.graph))
    rep = full_report(g, args.particles, run_oracles=args.oracle)
    if args.format == "json":
        emit_json(report_payload(rep))
    else:
        print(report_table(rep))
    return 0


def dot_skeleton(x) -> str:
    lines = ["graph skeleton {"]
    names = {conf: "C" + "_".join(conf) for (_, conf) in x.cubes[0]}
    for conf in sorted(names):
        lines.append(f'  "{names[conf]}";')
    for (mids, stat) in sorted(x.cubes[1]):
        e = x.graph.edge_by_id[mids[0]]
        a = tuple(sorted(set(stat) | {e.u}, key=lambda t: (len(t), t)))
        b = tuple(sorted(set(stat) | {e.v}, key=lambda t: (len(t), t)))
        lines.append(f'  "{names[a]}" -- "{names[b]}" [label="{e.id}"];')
    lines.append("}")
    return "\n".join(lines)


def dot_coloring(g: Graph) -> str:
    adj = coloring_graph(g)
    lines = ["graph coloring {"]
    for eid in sorted(adj):
        lines.append(f'  "{eid}";')
    done = set()
    for eid in sorted(adj):
        for other in sorted(adj[eid]):
            if (other, eid) not in done:
                done.add((eid, other))
                lines.append(f'  "{eid}" -- "{other}";')
    lines.append("}")
    return "\n".join(lines)


def cmd_build(args) -> int:
    g = normalize(load_graph(args.graph))
    if args.subdivide:
        g = subdivide_for(g, args.particles)
    x = build(g, args.particles, max_dim=args.max_dim, cell_cap=cell_cap(args))
    if args.format == "dot":
        print(dot_coloring(g) if args.dot_what == "coloring"
              else dot_skeleton(x))
        return 0
    hps = hyperplanes_by_components(g, args.particles)
    data = {
        "schema": JSON_SCHEMA_VERSION,
        "f_vector": list(x.f_vector()),
        "components": x.component_count(),
        "hyperplanes": len(hps),
        "hyperplanes_per_color": {},
    }
    for h in hps:
        per = data["hyperplanes_per_color"]
        per[h.color] = per.get(h.color, 0) + 1
    if x.max_dim >= x.n:
        data["euler_characteristic"] = x.euler_characteristic()
        data["npc"] = bool(verify_special_coloring(x).ok)
    if args.format == "json":
        emit_json(data)
    else:
        print(f"f-vector: {data['f_vector']}")
        print(f"components: {data['components']}")
        if "euler_characteristic" in data:
            print(f"euler characteristic: {data['euler_characteristic']}")
        print(f"hyperplanes: {data['hyperplanes']}")
    return 0


def cmd_word(args) -> int:
    g = normalize(load_graph(args.graph))
    base = tuple(args.base.split(","))
    letters = parse_word_tokens(args.letters)
    word = check_legal(g, base, letters)
    d = diagram(g, base, letters)
    data = {
        "schema": JSON_SCHEMA_VERSION,
        "legal": True,
        "terminus": list(word.terminus),
        "length": len(d),
        "normal_form": [("+" if s > 0 else "-") + e for (e, s) in d.letters],
        "spherical": d.is_spherical(),
    }
    if args.compare is not None:
        other = diagram(g, base, parse_word_tokens(args.compare.split()))
        data["equal"] = equal(d, other)
    if args.cyclic:
        if not d.is_spherical():
            raise PreconditionError("--cyclic needs a spherical word")
        sd = cyclically_reduce(d)
        data["cyclic_reduction"] = [
            ("+" if s > 0 else "-") + e for (e, s) in sd.cyclic_reduction.letters]
        data["support_vertices"] = sorted(sd.support.vertices)
        data["particles"] = sorted(sd.particles)
    if args.format == "json":
        emit_json(data)
    else:
        print(f"legal; terminus {','.join(word.terminus)}; "
              f"normal form {' '.join(data['normal_form']) or '(empty)'}")
        if "equal" in data:
            print(f"equal: {data['equal']}")
    return 0


def cmd_homology(args) -> int:
    g = normalize(load_graph(args.graph))
    if args.subdivide:
        g = subdivide_for(g, args.particles)
    x = build(g, args.particles, cell_cap=cell_cap(args))
    h = homology(chain_complex(x))
    data = {
        "schema": JSON_SCHEMA_VERSION,
        "free_ranks": list(h.free_ranks),
        "torsion": [list(t) for t in h.torsion],
        "groups": [h.group(d) for d in range(len(h.free_ranks))],
        "euler_characteristic": x.euler_characteristic(),
    }
    if args.format == "json":
        emit_json(data)
    else:
        for d, grp in enumerate(data["groups"]):
            print(f"H_{d} = {grp}")
    return 0


def parse_collection_text(g: Graph, text: str) -> list:
    """One subgraph per line: semicolon-separated vertex groups, each
    group comma-separated; the subgraph is the union of the induced
    subgraphs on the groups."""
    subs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        verts: set = set()
        eids: set = set()
        for group in line.split(";"):
            names = [t.strip() for t in group.split(",") if t.strip()]
            unknown = [t for t in names if t not in set(g.vertices)]
            if unknown:
                raise ParseError(f"line {lineno}: unknown vertex {unknown[0]!r}")
            sub = g.induced(names)
            verts |= sub.vertices
            eids |= sub.edge_ids
        subs.append(Subgraph(g, frozenset(verts), frozenset(eids)))
    if not subs:
        return []
    return subs


def cmd_relhyp(args) -> int:
    g = normalize(load_graph(args.graph))
    if args.collection == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.collection, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(str(exc)) from exc
    collection = parse_collection_text(g, text)
    rep = check_peripheral_collection(g, collection)
    data = {
        "schema": JSON_SCHEMA_VERSION,
        "members": len(collection),
        "cycle_pairs_covered": rep.cycle_pairs_covered,
        "intersections_ok": rep.intersections_ok,
        "paths_ok": rep.paths_ok,
        "all_proper": rep.all_proper,
        "valid": rep.valid,
        "criterion_applies": rep.applies,
        "note": ("relatively hyperbolic by the peripheral criterion"
                 if rep.applies else "criterion inconclusive"),
    }
    if args.format == "json":
        emit_json(data)
    else:
        for k in ("cycle_pairs_covered", "intersections_ok", "paths_ok",
                  "all_proper", "criterion_applies"):
            print(f"{k}: {data[k]}")
        print(data["note"])
    return 0


def _family_graphs(args):
    lo = args.min
    if args.family == "complete":
        for m in range(lo, args.max + 1):
            yield f"K_{m}", families.complete_graph(m)
    elif args.family == "bipartite":
        for p in range(lo, args.max + 1):
            for q in range(p, args.max + 1):
                yield f"K_{p},{q}", families.complete_bipartite(p, q)
    else:
        raise ParseError(f"unknown family {args.family!r}")


def parse_particle_range(text: str) -> tuple:
    if ".." in text:
        a, b = text.split("..", 1)
        return tuple(range(int(a), int(b) + 1))
    return (int(text),)


def cmd_table(args) -> int:
    ns = parse_particle_range(args.particles)
    rows = []
    for name, g in _family_graphs(args):
        for n in ns:
            rep = full_report(g, n, run_oracles="off")
            a = rep.main
            rows.append({
                "graph": name,
                "n": n,
                "trivial": a.trivial,
                "infinite_cyclic": a.infinite_cyclic,
                "hyperbolic": a.hyperbolic,
                "toral_rel_hyp": a.toral_rel_hyp,
                "acyl_status": a.acyl_status,
                "free": a.free,
            })
    if args.format == "json":
        emit_json({"schema": JSON_SCHEMA_VERSION, "rows": rows})
    else:
        head = f"{'graph':10s} {'n':>2s} {'trivial':7s} {'Z':5s} {'hyp':5s} {'toralRH':7s} {'free':7s} acyl"
        print(head)
        for r in rows:
            print(f"{r['graph']:10s} {r['n']:2d} {str(r['trivial']):7s}"
                  f" {str(r['infinite_cyclic']):5s} {str(r['hyperbolic']):5s}"
                  f" {str(r['toral_rel_hyp']):7s} {r['free']:7s} {r['acyl_status']}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="braidscope",
        description="configuration spaces of graphs and braid group classification")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, particles=True, formats=("json", "table")):
        p.add_argument("--graph", required=True, help="graph file")
        if particles:
            p.add_argument("-n", "--particles", type=int, required=True)
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--max-cells", type=int, default=None)

    p = sub.add_parser("analyze", help="classification report")
    common(p)
    p.add_argument("--oracle", choices=("auto", "on", "off"), default="auto")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("build", help="build the configuration complex")
    common(p, formats=("json", "table", "dot"))
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--subdivide", action="store_true",
                   help="subdivide for the particle count first")
    p.add_argument("--dot-what", choices=("skeleton", "coloring"),
                   default="skeleton")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("word", help="validate / reduce / compare words")
    p.add_argument("--graph", required=True)
    p.add_argument("--base", required=True, help="comma-separated vertices")
    p.add_argument("--compare", default=None,
                   help="second word as one whitespace-separated string")
    p.add_argument("--cyclic", action="store_true",
                   help="also cyclically reduce (spherical words)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("letters", nargs="*", help="word tokens +eID / -eID")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("homology", help="integer homology summary")
    common(p)
    p.add_argument("--subdivide", action="store_true")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("relhyp-check",
                       help="verify a peripheral collection (two particles)")
    p.add_argument("--graph", required=True)
    p.add_argument("--collection", required=True,
                   help="file with one subgraph per line ('-' for stdin)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_relhyp)

    p = sub.add_parser("table", help="classification grid over a family")
    p.add_argument("--family", choices=("complete", "bipartite"),
                   required=True)
    p.add_argument("--min", type=int, default=1)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--particles", required=True, help="e.g. 2..5 or 3")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_table)
    return top


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BraidscopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
