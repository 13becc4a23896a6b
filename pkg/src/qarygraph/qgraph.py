"""q-ary graphs: vertices are 1-spaces and edges 2-spaces of F_q^v.

An edge set is a q-ary graph when, at every vertex x, the edges through x are
exactly the 2-spaces through x inside the neighbourhood space N(x), the sum
of those edges.  :class:`QGraph` holds any set of 2-spaces; :func:`validate`
decides the property and :func:`closure` enforces it.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .spaces import (
    Subspace,
    complement_points,
    contains,
    enumerate_subspaces,
    format_subspace,
    full_space,
    gaussian_binomial,
    parse_subspace,
    span,
    sum_spaces,
    unit,
)


class GraphError(ValueError):
    """Malformed graph input or a vertex/edge that is not part of the graph."""


class NotATreeError(GraphError):
    pass


@dataclass(frozen=True)
class QGraph:
    q: int
    v: int
    edges: tuple[Subspace, ...]

    def __post_init__(self):
        edges = tuple(sorted(set(self.edges)))
        for e in edges:
            if e.dim != 2 or (e.q, e.n) != (self.q, self.v):
                raise GraphError(f"edge <{format_subspace(e)}> is not a 2-space of F_{self.q}^{self.v}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_vectors(cls, q: int, v: int, pairs: Iterable[Sequence[Sequence[int]]]) -> "QGraph":
        return cls(q, v, tuple(span(p, q, v) for p in pairs))

    def __len__(self):
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Subspace]:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> dict[Subspace, list[Subspace]]:
        """Vertex -> edges through it, both in canonical order."""
        inc: dict[Subspace, list[Subspace]] = {}
        for e in self.edges:
            for x in e.points():
                inc.setdefault(x, []).append(e)
        return {x: inc[x] for x in sorted(inc)}

    @cached_property
    def edge_points(self) -> dict[Subspace, list[Subspace]]:
        return {e: e.points() for e in self.edges}


def vertices(g: QGraph) -> list[Subspace]:
    """Non-isolated vertices in canonical order."""
    return list(g.incidence)


def edges_through(g: QGraph, x: Subspace) -> list[Subspace]:
    try:
        return g.incidence[x]
    except KeyError:
        raise GraphError(f"<{format_subspace(x)}> is not a vertex of the graph") from None


def neighbourhood_space(g: QGraph, x: Subspace) -> Subspace:
    acc = x
    for e in edges_through(g, x):
        acc = sum_spaces(acc, e)
    return acc


def degree(g: QGraph, x: Subspace) -> int:
    return neighbourhood_space(g, x).dim - 1


def edges_in_star(x: Subspace, big: Subspace) -> list[Subspace]:
    """All 2-spaces through the point x inside ``big``."""
    gen = x.generator
    return sorted(span([gen, w], x.q, x.n) for w in complement_points(big, x))


@dataclass
class ValidationReport:
    ok: bool
    checked_vertices: int = 0
    witness_vertex: Subspace | None = None
    missing_edge: Subspace | None = None
    message: str = ""

    def __str__(self):
        if self.ok:
            return f"validate: PASS ({self.checked_vertices} vertices)"
        return f"validate: FAIL vertex <{format_subspace(self.witness_vertex)}> {self.message}"


def validate(g: QGraph) -> ValidationReport:
    """Check the q-graph property vertex by vertex; report the first violation."""
    count = 0
    for x, through in g.incidence.items():
        nb = neighbourhood_space(g, x)
        d = nb.dim - 1
        count += 1
        for e in edges_in_star(x, nb):
            if e not in g.edge_set:
                return ValidationReport(
                    False, count, x, e,
                    f"missing edge <{format_subspace(e)}> inside N(x) of dimension {nb.dim}",
                )
        expected = gaussian_binomial(d, 1, g.q)
        if len(through) != expected:  # unreachable when every star edge is present
            return ValidationReport(
                False, count, x, None,
                f"has {len(through)} incident edges, expected {expected} for degree {d}",
            )
    return ValidationReport(True, count)


def is_valid(g: QGraph) -> bool:
    return validate(g).ok


def closure(q: int, v: int, seed_edges: Iterable[Subspace]) -> QGraph:
    """Smallest edge set containing the seed and having the q-graph property."""
    edges = set(seed_edges)
    while True:
        g = QGraph(q, v, tuple(edges))
        added = set()
        for x in g.incidence:
            nb = neighbourhood_space(g, x)
            for e in edges_in_star(x, nb):
                if e not in edges:
                    added.add(e)
        if not added:
            return g
        edges |= added


def close(g: QGraph) -> QGraph:
    return closure(g.q, g.v, g.edges)


def is_subgraph(g: QGraph, h: QGraph) -> bool:
    """True when h's edges are edges of g and h is itself a q-ary graph."""
    if (g.q, g.v) != (h.q, h.v):
        return False
    return h.edge_set <= g.edge_set and validate(h).ok


@dataclass(frozen=True)
class Walk:
    """Alternating vertices and edges ``[v0, e1, v1, ..., e_l, v_l]``."""

    items: tuple[Subspace, ...]

    @property
    def vertices(self) -> tuple[Subspace, ...]:
        return self.items[0::2]

    @property
    def edges(self) -> tuple[Subspace, ...]:
        return self.items[1::2]

    def __len__(self):
        return len(self.edges)

    def is_walk(self) -> bool:
        vs, es = self.vertices, self.edges
        for i, e in enumerate(es):
            a, b = vs[i], vs[i + 1]
            if a == b or a.dim != 1 or e.dim != 2:
                return False
            if not (_point_on(a, e) and _point_on(b, e)):
                return False
        return True

    def is_path(self) -> bool:
        return self.is_walk() and len(set(self.vertices)) == len(self.vertices)

    def is_cycle(self) -> bool:
        return (
            self.is_walk()
            and len(self) >= 1
            and self.vertices[0] == self.vertices[-1]
            and len(set(self.edges)) == len(self.edges)
        )

    def __str__(self):
        parts = []
        for i, s in enumerate(self.items):
            parts.append(("V" if i % 2 == 0 else "E") + "<" + format_subspace(s) + ">")
        return " ".join(parts)


def _point_on(x: Subspace, e: Subspace) -> bool:
    return contains(e, x.generator)


def find_path(g: QGraph, start: Subspace, end: Subspace) -> Walk | None:
    """Breadth-first search over the vertex-edge incidence structure."""
    edges_through(g, start)
    edges_through(g, end)
    if start == end:
        return Walk((start,))
    prev: dict[Subspace, tuple[Subspace, Subspace]] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for e in g.incidence[x]:
            for y in g.edge_points[e]:
                if y in seen:
                    continue
                seen.add(y)
                prev[y] = (x, e)
                if y == end:
                    items = [end]
                    cur = end
                    while cur != start:
                        p, via = prev[cur]
                        items += [via, p]
                        cur = p
                    return Walk(tuple(reversed(items)))
                queue.append(y)
    return None


def components(g: QGraph) -> list[list[Subspace]]:
    """Edge sets of the connected components, each in canonical order."""
    comp_of: dict[Subspace, int] = {}
    comps: list[list[Subspace]] = []
    for e0 in g.edges:
        if e0 in comp_of:
            continue
        idx = len(comps)
        comp = [e0]
        comp_of[e0] = idx
        queue = deque([e0])
        while queue:
            e = queue.popleft()
            for x in g.edge_points[e]:
                for f in g.incidence[x]:
                    if f not in comp_of:
                        comp_of[f] = idx
                        comp.append(f)
                        queue.append(f)
        comps.append(sorted(comp))
    return comps


def is_connected(g: QGraph) -> bool:
    return len(components(g)) <= 1


def find_cycle(g: QGraph) -> Walk | None:
    """A closed walk with distinct edges, if the graph has one.

    Such a walk exists exactly when the bipartite vertex/edge incidence graph
    has a cycle; this runs an iterative DFS on that graph.
    """
    # nodes: ("v", x) or ("e", e)
    parent: dict[tuple, tuple | None] = {}
    for root_v in g.incidence:
        root = ("v", root_v)
        if root in parent:
            continue
        parent[root] = None
        stack = [(root, iter(_nbrs(g, root)))]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt == parent[node]:
                    continue
                if nxt in parent:
                    if not _on_stack(stack, nxt):
                        continue
                    # back edge node -> nxt closes a cycle
                    path = [node]
                    cur = node
                    while cur != nxt:
                        cur = parent[cur]
                        path.append(cur)
                    return _cycle_walk(path)
                parent[nxt] = node
                stack.append((nxt, iter(_nbrs(g, nxt))))
                advanced = True
                break
            if not advanced:
                stack.pop()
    return None


def _on_stack(stack, node):
    return any(n == node for n, _ in stack)


def _nbrs(g, node):
    kind, s = node
    if kind == "v":
        return [("e", e) for e in g.incidence[s]]
    return [("v", x) for x in g.edge_points[s]]


def _cycle_walk(nodes):
    # nodes alternate kinds and form a cycle; rotate to start at a vertex
    while nodes[0][0] != "v":
        nodes = nodes[1:] + nodes[:1]
    items = [s for _, s in nodes] + [nodes[0][1]]
    return Walk(tuple(items))


def is_forest(g: QGraph) -> bool:
    return find_cycle(g) is None


def is_tree(g: QGraph) -> bool:
    # the null graph is a forest but not a tree
    return bool(g.edges) and is_connected(g) and is_forest(g)


def nondegenerate(g: QGraph) -> bool:
    """Whether the vertices of positive degree span F_q^v."""
    vs = vertices(g)
    if not vs:
        return g.v == 0
    return span([x.generator for x in vs], g.q, g.v).dim == g.v


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self):
        rel, status = ("=", "PASS") if self.ok else ("!=", "FAIL")
        return f"{self.name} {self.lhs} {rel} {self.rhs} : {status}"


def degree_sequence(g: QGraph) -> dict[Subspace, int]:
    return {x: degree(g, x) for x in g.incidence}


def check_degree_sum(g: QGraph) -> IdentityReport:
    """sum over vertices of [deg(x) choose 1]_q against (q+1) * #edges."""
    lhs = sum(gaussian_binomial(d, 1, g.q) for d in degree_sequence(g).values())
    return IdentityReport("degree-sum", lhs, (g.q + 1) * len(g.edges))


def check_tree_count(g: QGraph, require_tree: bool = True) -> IdentityReport:
    """#edges * q + 1 against #vertices."""
    if require_tree and not is_tree(g):
        raise NotATreeError("tree-count identity only applies to trees")
    return IdentityReport("tree-count", len(g.edges) * g.q + 1, len(g.incidence))


def stats_lines(g: QGraph) -> list[str]:
    """Line-oriented summary: counts, degree multiset, both identities, shape."""
    degs = degree_sequence(g)
    hist = Counter(degs.values())
    tree = is_tree(g)
    return [
        f"graph q={g.q} v={g.v}",
        f"edges {len(g.edges)}",
        f"vertices {len(degs)}",
        "degrees " + (" ".join(f"{d}:{c}" for d, c in sorted(hist.items(), reverse=True)) or "-"),
        str(check_degree_sum(g)),
        f"connected {str(is_connected(g)).lower()}",
        f"forest {str(is_forest(g)).lower()}",
        f"tree {str(tree).lower()}",
        str(check_tree_count(g)) if tree else "tree-count skipped (not a tree)",
        f"nondegenerate {str(nondegenerate(g)).lower()}",
        f"closed {str(validate(g).ok).lower()}",
    ]


# families

def _all_edges(q, v):
    return tuple(enumerate_subspaces(v, 2, q))


def q_path2(q: int) -> QGraph:
    """All edges through <e2> in F_q^3."""
    e2 = span([unit(3, 1)], q, 3)
    return QGraph(q, 3, tuple(edges_in_star(e2, full_space(q, 3))))


def q_triangle(q: int) -> QGraph:
    """All 2-spaces of F_q^3."""
    return QGraph(q, 3, _all_edges(q, 3))


def complete(q: int, v: int) -> QGraph:
    if v < 2:
        raise GraphError("complete q-ary graph needs v >= 2")
    return QGraph(q, v, _all_edges(q, v))


def path_seed(q: int, n: int) -> QGraph:
    """Seed edges <e_i, e_{i+1}>, i = 1..n, in F_q^{n+1} (not closed)."""
    if n < 1:
        raise GraphError("path_seed needs n >= 1")
    v = n + 1
    return QGraph.from_vectors(q, v, [(unit(v, i), unit(v, i + 1)) for i in range(n)])


def star_seed(q: int, n: int) -> QGraph:
    """Seed edges <e_1, e_{i+1}>, i = 1..n, in F_q^{n+1} (not closed)."""
    if n < 1:
        raise GraphError("star_seed needs n >= 1")
    v = n + 1
    return QGraph.from_vectors(q, v, [(unit(v, 0), unit(v, i)) for i in range(1, v)])


FAMILIES = ("q_path2", "q_triangle", "complete", "path_seed", "star_seed", "empty")


def family(name: str, q: int, n: int | None = None) -> QGraph:
    if name == "q_path2":
        return q_path2(q)
    if name == "q_triangle":
        return q_triangle(q)
    if name == "complete":
        return complete(q, 3 if n is None else n)
    if name in ("path_seed", "star_seed"):
        if n is None:
            raise GraphError(f"{name} needs --n")
        return (path_seed if name == "path_seed" else star_seed)(q, n)
    if name == "empty":
        return QGraph(q, 3 if n is None else n, ())
    raise GraphError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


# file format

_GRAPH_RE = re.compile(r"^graph q=(\d+) v=(\d+)(?: closed=(true|false))?$")


def format_graph(g: QGraph, closed: bool | None = None) -> str:
    if closed is None:
        closed = validate(g).ok
    lines = [f"graph q={g.q} v={g.v}", f"closed={'true' if closed else 'false'}"]
    lines += [f"edge {format_subspace(e)}" for e in g.edges]
    return "\n".join(lines) + "\n"


@dataclass
class GraphFile:
    graph: QGraph
    claimed_closed: bool | None = None


def parse_graph(text: str) -> GraphFile:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty graph file")
    lineno, head = lines[0]
    mo = _GRAPH_RE.match(head)
    if not mo:
        raise GraphError(f"line {lineno}: expected 'graph q=<q> v=<v>', got {head!r}")
    q, v = int(mo.group(1)), int(mo.group(2))
    closed = None if mo.group(3) is None else mo.group(3) == "true"
    edges = []
    for lineno, ln in lines[1:]:
        if ln.startswith("closed="):
            val = ln[len("closed="):]
            if val not in ("true", "false"):
                raise GraphError(f"line {lineno}: closed= must be true or false")
            closed = val == "true"
        elif ln.startswith("edge "):
            try:
                e = parse_subspace(ln[5:], q, v)
            except ValueError as exc:
                raise GraphError(f"line {lineno}: {exc}") from None
            if e.dim != 2:
                raise GraphError(f"line {lineno}: edge spans a {e.dim}-dimensional space")
            edges.append(e)
        else:
            raise GraphError(f"line {lineno}: unrecognised line {ln!r}")
    return GraphFile(QGraph(q, v, tuple(edges)), closed)


def empty_graph(q: int, v: int) -> QGraph:
    return QGraph(q, v, ())


__all__ = [
    "GraphError", "NotATreeError", "QGraph", "Walk", "ValidationReport", "IdentityReport",
    "vertices", "edges_through", "neighbourhood_space", "degree", "validate", "is_valid",
    "closure", "close", "is_subgraph", "find_path", "is_connected", "components",
    "find_cycle", "is_forest", "is_tree", "nondegenerate", "check_degree_sum",
    "check_tree_count", "stats_lines", "degree_sequence", "family", "q_path2", "q_triangle", "complete",
    "path_seed", "star_seed", "format_graph", "parse_graph", "GraphFile", "empty_graph",
]
