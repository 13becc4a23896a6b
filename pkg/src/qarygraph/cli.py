"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 validation failure
(graph not closed, matrix audit failed), 4 check failure (identities,
axioms, comparisons, fixtures).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import fixtures
from .fields import ExtField, FieldError, FieldSpec
from .incidence import (
    EdgeRep,
    MatrixFormatError,
    RepresentationError,
    all_representations,
    audit,
    build_incidence,
    format_matrix,
    ingest_matrix,
    parse_column,
    representation_space,
)
from .extlinalg import format_vec_ext
from .qgraph import (
    GraphError,
    check_degree_sum,
    check_tree_count,
    close,
    family,
    find_path,
    format_graph,
    is_tree,
    parse_graph,
    stats_lines,
    validate,
)
from .qmatroid import (
    LatticeTooLarge,
    QMatroid,
    check_axioms,
    compare_incidence_matroids,
    format_signature,
    rank_signature,
)
from .spaces import DimensionError, parse_subspace, parse_vector, span

OK, PARSE, INVALID, CHECK = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _field_spec(text: str) -> FieldSpec:
    text = text.strip()
    if not text.startswith("field "):
        text = "field " + text
    return FieldSpec.parse(text)


def _field(args, q: int, m: int) -> ExtField:
    spec = _field_spec(args.field) if getattr(args, "field", None) else FieldSpec.default(q, m)
    if (spec.q, spec.m) != (q, m):
        raise UsageError(f"--field has q={spec.q} m={spec.m}; this input needs q={q} m={m}")
    return ExtField(spec)


# graph verbs

def cmd_graph_build(args) -> int:
    g = family(args.family, args.q, args.n)
    _out(format_graph(g))
    return OK


def cmd_graph_close(args) -> int:
    g = close(parse_graph(_read(args.input)).graph)
    _out(format_graph(g, closed=True))
    return OK


def cmd_graph_validate(args) -> int:
    gf = parse_graph(_read(args.input))
    rep = validate(gf.graph)
    lines = [str(rep)]
    if gf.claimed_closed is not None and gf.claimed_closed != rep.ok:
        lines.append(f"note: file claims closed={'true' if gf.claimed_closed else 'false'}")
    _out("\n".join(lines))
    return OK if rep.ok else INVALID


def cmd_graph_stats(args) -> int:
    g = parse_graph(_read(args.input)).graph
    _out("\n".join(stats_lines(g)))
    ok = check_degree_sum(g).ok and (not is_tree(g) or check_tree_count(g).ok)
    return OK if ok else CHECK


def cmd_graph_path(args) -> int:
    g = parse_graph(_read(args.input)).graph
    a = span([parse_vector(args.source, g.q)], g.q, g.v)
    b = span([parse_vector(args.target, g.q)], g.q, g.v)
    if a.dim != 1 or b.dim != 1:
        raise UsageError("--from and --to must be nonzero vectors")
    w = find_path(g, a, b)
    if w is None:
        _out("path: FAIL no path")
        return CHECK
    _out(f"length {len(w)}\n{w}\npath: PASS")
    return OK


# incidence verbs

def cmd_incidence_build(args) -> int:
    g = parse_graph(_read(args.graph)).graph
    if not g.edges:
        raise UsageError("graph has no edges")
    f = _field(args, g.q, g.v)
    initial = None
    if args.initial:
        initial = EdgeRep(g.edges[0], parse_column(f, args.initial))
    mat = build_incidence(g, f, initial)
    _out(format_matrix(mat, coords=args.coords))
    return OK


def cmd_incidence_audit(args) -> int:
    rep = audit(ingest_matrix(_read(args.matrix)))
    _out("\n".join(rep.lines()))
    return OK if rep.ok else INVALID


def cmd_incidence_reps(args) -> int:
    if not getattr(args, "field", None):
        raise UsageError("incidence reps needs --field")
    spec = _field_spec(args.field)
    f = ExtField(spec)
    edge = parse_subspace(args.edge, f.q, f.m)
    if edge.dim != 2:
        raise UsageError(f"--edge spans dimension {edge.dim}")
    lines = [format_vec_ext(f, r.vector, coords=args.coords) for r in all_representations(f, edge)]
    rep = representation_space(f, edge)
    lines.append(f"count {rep.count} expected {rep.expected}")
    lines.append("multiples " + ("PASS" if rep.all_multiples else "FAIL"))
    lines.append("reps: " + ("PASS" if rep.ok else "FAIL"))
    _out("\n".join(lines))
    return OK if rep.ok else CHECK


# matroid verbs

def _matroid(path):
    mat = ingest_matrix(_read(path))
    return mat, QMatroid.from_incidence(mat)


def cmd_matroid_rank(args) -> int:
    _, m = _matroid(args.matrix)
    a = parse_subspace(args.subspace, m.q, m.n)
    _out(f"rank {m.rank(a)}")
    return OK


def cmd_matroid_axioms(args) -> int:
    _, m = _matroid(args.matrix)
    rep = check_axioms(m, mode=args.mode or "auto", pairs=args.pairs, seed=args.seed)
    _out("\n".join(rep.lines()))
    return OK if rep.ok else CHECK


def cmd_matroid_compare(args) -> int:
    a, _ = _matroid(args.a)
    b, _ = _matroid(args.b)
    scope = args.pairs if args.mode == "sample" else "exhaustive"
    rep = compare_incidence_matroids(a, b, scope=scope, seed=args.seed)
    _out("\n".join(rep.lines(a.field)))
    return OK if rep.ok else CHECK


def cmd_matroid_signature(args) -> int:
    _, m = _matroid(args.matrix)
    _out(format_signature(rank_signature(m)))
    return OK


# fixtures

def cmd_fixture_list(args) -> int:
    _out("\n".join(fixtures.FIXTURES))
    return OK


def cmd_fixture_run(args) -> int:
    names = list(fixtures.FIXTURES) if args.name == "all" else [args.name]
    code = OK
    for name in names:
        res = fixtures.fixture_run(name)
        if len(names) == 1:
            sys.stdout.write(res.output)
        if res.ok:
            _out(f"fixture {name}: PASS")
        else:
            sys.stdout.write(res.diff)
            _out(f"fixture {name}: FAIL output differs from expected")
            code = CHECK
    return code


def cmd_fixture_update(args) -> int:
    names = list(fixtures.FIXTURES) if args.name == "all" else [args.name]
    for name in names:
        _out(f"wrote {fixtures.write_expected(name)}")
    return OK


# parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _global_flags(p: argparse.ArgumentParser, default) -> None:
    p.add_argument("--field", default=default(None), help="field spec, e.g. 'q=2 m=3 modulus=1,1,0,1'")
    p.add_argument("--seed", type=int, default=default(0), help="seed for sampled checks")
    p.add_argument("--mode", choices=("exhaustive", "sample"), default=default(None))
    p.add_argument("--coords", action="store_true", default=default(False), help="print entries as coordinates")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qarygraph", description="q-ary graphs, incidence matrices and q-matroids")
    _global_flags(parser, lambda d: d)
    leaf = _Parser(add_help=False)
    _global_flags(leaf, lambda d: argparse.SUPPRESS)

    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def verb(group, name, fn, help_):
        p = group.add_parser(name, parents=[leaf], help=help_)
        p.set_defaults(fn=fn)
        return p

    g = groups.add_parser("graph", help="build and inspect q-ary graphs")
    gs = g.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = verb(gs, "build", cmd_graph_build, "construct a named family")
    p.add_argument("--family", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    for name, fn, help_ in (
        ("close", cmd_graph_close, "close a seed edge set"),
        ("validate", cmd_graph_validate, "check the q-graph property"),
        ("stats", cmd_graph_stats, "degrees, counting identities, shape"),
    ):
        p = verb(gs, name, fn, help_)
        p.add_argument("--in", dest="input", help="graph file (default stdin)")
    p = verb(gs, "path", cmd_graph_path, "shortest path between two vertices")
    p.add_argument("--in", dest="input", help="graph file (default stdin)")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)

    i = groups.add_parser("incidence", help="incidence matrices over F_{q^m}")
    is_ = i.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = verb(is_, "build", cmd_incidence_build, "propagate representations over a graph")
    p.add_argument("--graph", help="graph file (default stdin)")
    p.add_argument("--initial", help="column for the first edge, e.g. 'a^1,1,0'")
    p = verb(is_, "audit", cmd_incidence_audit, "check orthogonality, supports and consistency")
    p.add_argument("--matrix", help="matrix file (default stdin)")
    p = verb(is_, "reps", cmd_incidence_reps, "enumerate all representations of an edge")
    p.add_argument("--edge", required=True)

    m = groups.add_parser("matroid", help="the q-matroid of a matrix")
    ms = m.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = verb(ms, "rank", cmd_matroid_rank, "rank of one subspace")
    p.add_argument("--matrix", required=True)
    p.add_argument("--subspace", required=True)
    p = verb(ms, "axioms", cmd_matroid_axioms, "check the rank axioms")
    p.add_argument("--matrix", required=True)
    p.add_argument("--pairs", type=int, default=100_000)
    p = verb(ms, "compare", cmd_matroid_compare, "witness an isomorphism between two matrices")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--pairs", type=int, default=10_000)
    p = verb(ms, "signature", cmd_matroid_signature, "rank counts by dimension")
    p.add_argument("--matrix", required=True)

    fx = groups.add_parser("fixture", help="reproduce the worked examples")
    fs = fx.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = verb(fs, "run", cmd_fixture_run, "regenerate and diff against the pinned output")
    p.add_argument("--name", required=True, help="fixture name or 'all'")
    verb(fs, "list", cmd_fixture_list, "list fixtures")
    p = verb(fs, "update", cmd_fixture_update, "rewrite pinned output (maintenance)")
    p.add_argument("--name", required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.group == "fixture" and args.verb != "list" and args.name != "all" \
                and args.name not in fixtures.FIXTURES:
            raise UsageError(f"unknown fixture {args.name!r}; try 'fixture list'")
        return args.fn(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, GraphError, FieldError, MatrixFormatError, RepresentationError,
            DimensionError, LatticeTooLarge, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return PARSE


if __name__ == "__main__":
    sys.exit(main())
