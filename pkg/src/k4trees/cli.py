"""Command-line front end.

Exit codes: 0 ok, 1 condition violated, 2 parse error, 3 precondition error,
4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter
from typing import TextIO

from . import generators as gen
from .decomposition import _decompose, block_graph, _outer_cycle, is_k4_minor_free
from .graph_core import Graph, InputError, InvariantViolation, edge_key
from .n2c_weights import ViolationCertificate, assign_weights, make_budget, n2c_table
from .oracles import check_condition_bruteforce, toughness
from .tree_builder import build_degree_bounded_tree, tree_to_walk, verify_tree

EXIT_OK, EXIT_VIOLATED, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 1, 2, 3, 4


class ParseError(Exception):
    pass


def parse_edge_list(text: str) -> tuple[Graph, dict[str, int]]:
    """Read ``n m``, then m lines ``u v`` with u < v, then optional
    ``# label NAME id`` lines."""
    labels: dict[str, int] = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "label":
                if len(parts) != 3:
                    raise ParseError(f"line {lineno}: expected '# label NAME id'")
                try:
                    labels[parts[1]] = int(parts[2])
                except ValueError:
                    raise ParseError(f"line {lineno}: bad label id") from None
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers") from None
    if not rows or len(rows[0][1]) != 2:
        raise ParseError("missing 'n m' header")
    n, m = rows[0][1]
    if n < 0 or m < 0:
        raise ParseError("negative counts in header")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header says {m} edges, found {len(body)}")
    edges = set()
    for lineno, row in body:
        if len(row) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        u, v = row
        if not 0 <= u < v < n:
            raise ParseError(f"line {lineno}: need 0 <= u < v < n")
        if (u, v) in edges:
            raise ParseError(f"line {lineno}: duplicate edge")
        edges.add((u, v))
    for name, v in labels.items():
        if not 0 <= v < n:
            raise ParseError(f"label {name} out of range")
    if len(set(labels.values())) != len(labels):
        raise ParseError("labels must be distinct vertices")
    return Graph.from_edges(n, sorted(edges)), labels


def format_edge_list(G: Graph, labels: dict[str, int] | None = None) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    for name, v in sorted((labels or {}).items(), key=lambda kv: (kv[1], kv[0])):
        lines.append(f"# label {name} {v}")
    return "\n".join(lines) + "\n"


def parse_budgets(text: str, n: int, default: int | None = None) -> tuple[int, ...]:
    """Lines ``v f(v)``; vertices not listed take ``default`` if given."""
    f: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v, k = (int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"budget line {lineno}: expected 'v f(v)'") from None
        if not 0 <= v < n:
            raise ParseError(f"budget line {lineno}: vertex out of range")
        if k < 2:
            raise ParseError(f"budget line {lineno}: f(v) must be at least 2")
        f[v] = k
    for v in range(n):
        if v not in f:
            if default is None:
                raise ParseError(f"no budget for vertex {v}")
            f[v] = default
    return tuple(f[v] for v in range(n))


def _emit(obj: dict, args, out: TextIO, plain: str | None = None) -> None:
    if args.plain and plain is not None:
        out.write(plain.rstrip("\n") + "\n")
    else:
        out.write(json.dumps(obj, sort_keys=True) + "\n")


def _load_graph(args) -> tuple[Graph, dict[str, int]]:
    with open(args.graph) as fh:
        return parse_edge_list(fh.read())


def _load_budget(args, G: Graph) -> tuple[int, ...]:
    if args.budgets:
        with open(args.budgets) as fh:
            return parse_budgets(fh.read(), G.n, args.k)
    if args.k is None:
        raise ParseError("give --k or --budgets")
    if args.k < 2:
        raise ParseError("--k must be at least 2")
    return (args.k,) * G.n


def _certificate_payload(cert: ViolationCertificate) -> dict:
    return {"status": "violated", "certificate": cert.as_dict()}


def cmd_check(args, out: TextIO) -> int:
    G, _ = _load_graph(args)
    f = _load_budget(args, G)
    if args.flow:
        result = assign_weights(G, f)
        payload: dict = {"certificate_sound": True, "ok_is_conclusive": False}
        if isinstance(result, ViolationCertificate):
            payload.update(_certificate_payload(result))
        else:
            payload["status"] = "ok"
    else:
        result = check_condition_bruteforce(G, f, limit=args.limit)
        payload = _certificate_payload(result) if result else {"status": "ok"}
    plain = payload["status"]
    if "certificate" in payload:
        c = payload["certificate"]
        plain += f" U={c['U']} observed={c['observed']} budget={c['budget']}"
    _emit(payload, args, out, plain)
    return EXIT_VIOLATED if payload["status"] == "violated" else EXIT_OK


def _tree_or_cert(args, G: Graph, f):
    result = build_degree_bounded_tree(G, f, args.at)
    if isinstance(result, ViolationCertificate):
        if not result.verify(G, f):
            raise InvariantViolation("emitted certificate does not recompute")
        return None, result
    x = 0 if args.at is None else args.at
    problems = verify_tree(G, f, result, result.marked | {x}, result.special)
    if problems:
        raise InvariantViolation("tree self-check failed: " + "; ".join(problems))
    return result, None


def cmd_tree(args, out: TextIO) -> int:
    G, _ = _load_graph(args)
    f = _load_budget(args, G)
    tree, cert = _tree_or_cert(args, G, f)
    if cert is not None:
        _emit(_certificate_payload(cert), args, out)
        return EXIT_VIOLATED
    payload = {"tree": [list(e) for e in tree.edges], "marked": sorted(tree.marked)}
    _emit(payload, args, out, "\n".join(f"{u} {v}" for u, v in tree.edges))
    return EXIT_OK


def cmd_walk(args, out: TextIO) -> int:
    G, _ = _load_graph(args)
    f = _load_budget(args, G)
    tree, cert = _tree_or_cert(args, G, f)
    if cert is not None:
        _emit(_certificate_payload(cert), args, out)
        return EXIT_VIOLATED
    walk = tree_to_walk(G, tree)
    reps = max(Counter(walk).values()) if walk else 0
    _emit({"walk": walk, "max_repeats": reps}, args, out, " ".join(map(str, walk)))
    return EXIT_OK


def _family(args) -> tuple[Graph, dict[str, int]]:
    p = args.params
    name = args.family

    def need(k):
        if len(p) != k:
            raise ParseError(f"family {name} takes {k} integer parameter(s)")

    if name == "theta":
        if len(p) not in (0, 2):
            raise ParseError("theta takes 0 or 2 parameters: paths length")
        return gen.theta(*p), {}
    if name in ("cycle", "path", "fan", "complete", "star"):
        need(1)
        return getattr(gen, name)(p[0]), {}
    if name == "outerplanar":
        need(1)
        return gen.maximal_outerplanar(p[0], args.seed), {}
    if name == "random-sp":
        need(1)
        return gen.random_series_parallel(p[0], args.seed), {}
    if name == "triangle-pendants":
        need(3)
        lg, _ = gen.triangle_pendants(*p)
        return lg.graph, dict(lg.labels)
    if name == "dillencourt":
        need(0)
        lg = gen.dillencourt_t()
        return lg.graph, dict(lg.labels)
    if name == "dillencourt-gn":
        need(1)
        lg = gen.dillencourt_gn(p[0])
        return lg.graph, dict(lg.labels)
    raise ParseError(f"unknown family {name}")


FAMILIES = (
    "theta", "cycle", "path", "fan", "complete", "star", "outerplanar",
    "random-sp", "triangle-pendants", "dillencourt", "dillencourt-gn",
)


def cmd_gen(args, out: TextIO) -> int:
    G, labels = _family(args)
    out.write(format_edge_list(G, labels))
    return EXIT_OK


def cmd_recognize(args, out: TextIO) -> int:
    G, _ = _load_graph(args)
    dec = _decompose(G)
    outer = []
    for b in dec.blocks:
        ok = len(b.vertices) < 3 or _outer_cycle(block_graph(G, b)[0]) is not None
        outer.append(ok)
    payload = {
        "k4_minor_free": is_k4_minor_free(G),
        "blocks": [sorted(b.vertices) for b in dec.blocks],
        "outerplanar_blocks": outer,
        "cutvertices": sorted(dec.cutvertices),
        "n2cs": [list(k) for k in n2c_table(G, dec)],
    }
    _emit(payload, args, out)
    return EXIT_OK


def format_toughness(t) -> str:
    if t == math.inf:
        return "inf"
    return f"{t.numerator}/{t.denominator}"


def cmd_toughness(args, out: TextIO) -> int:
    G, _ = _load_graph(args)
    t = toughness(G, limit=args.limit)
    text = format_toughness(t)
    _emit({"toughness": text}, args, out, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k4trees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, budget=True):
        p.add_argument("graph", help="edge-list file")
        if budget:
            p.add_argument("--k", type=int, help="uniform degree bound")
            p.add_argument("--budgets", help="file of 'v f(v)' lines (--k fills gaps)")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="plain", action="store_false", help="JSON output (default)")
        fmt.add_argument("--plain", dest="plain", action="store_true", help="plain text output")
        p.set_defaults(plain=False)

    p = sub.add_parser("check", help="test the component condition")
    common(p)
    p.add_argument("--flow", action="store_true", help="use the flow certificate path")
    p.add_argument("--limit", type=int, default=20, help="brute-force size cap")
    p.set_defaults(func=cmd_check)

    for name, func, helptext in (
        ("tree", cmd_tree, "build a degree-bounded spanning tree"),
        ("walk", cmd_walk, "closed walk around the spanning tree"),
    ):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--at", type=int, help="vertex x with d_T(x) <= f(x) - 1")
        p.set_defaults(func=func)

    p = sub.add_parser("gen", help="print a generated graph")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen, plain=False)

    p = sub.add_parser("recognize", help="blocks, N2Cs and K4-minor-freeness")
    common(p, budget=False)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("toughness", help="exact toughness by brute force")
    common(p, budget=False)
    p.add_argument("--limit", type=int, default=20)
    p.set_defaults(func=cmd_toughness)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
