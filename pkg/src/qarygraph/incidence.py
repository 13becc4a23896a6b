"""Incidence matrices of q-ary graphs over F_{q^m}.

Every edge <x, y> is represented by a vector v = a*x + b*y over F_{q^m} that
is orthogonal to u = (1, a, ..., a^{m-1}); orthogonality forces
a = -b (u.y)/(u.x).  Representations of edges sharing a vertex x are matched
by carrying the coefficient b of the second basis vector across.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Callable, Iterator, Sequence

from .extlinalg import combine, decompose_rank2, dot_ext, format_vec_ext, rank_support, scale_ext
from .fields import ExtField, FieldError, FieldSpec, split_entries
from .qgraph import QGraph, components
from .spaces import Subspace, Vec, contains, format_subspace, parse_subspace, span, vec_key

BasisChooser = Callable[[Subspace, Subspace], tuple[Vec, Vec]]


class RepresentationError(ValueError):
    """An edge representation could not be formed or violates its invariants."""


class MatrixFormatError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeRep:
    edge: Subspace
    vector: Vec


def canonical_completion(edge: Subspace, x: Vec) -> Vec:
    """Smallest vector (canonical key) of ``edge`` outside the line through x."""
    line = span([x], edge.q, edge.n)
    best = None
    for w in edge.vectors():
        if any(w) and not contains(line, w):
            if best is None or vec_key(w, edge.q) < vec_key(best, edge.q):
                best = w
    if best is None:
        raise RepresentationError(f"<{format_subspace(edge)}> has no completion of {x}")
    return best


def canonical_basis(edge: Subspace, vertex: Subspace | None = None) -> tuple[Vec, Vec]:
    """Default basis (x, z): x generates ``vertex`` (or is the first RREF row)."""
    if vertex is None:
        return edge.basis[0], edge.basis[1]
    x = vertex.generator
    return x, canonical_completion(edge, x)


def is_representation(f: ExtField, edge: Subspace, vector: Sequence[int]) -> bool:
    return dot_ext(f, f.u, vector) == 0 and rank_support(f, vector) == edge


def represent_edge(f: ExtField, edge: Subspace, x: Vec, y: Vec, b: int) -> EdgeRep:
    """The representation a*x + b*y of ``edge`` with a fixed by orthogonality to u."""
    if not b:
        raise RepresentationError("represent_edge: b must be nonzero")
    if edge.dim != 2 or span([x, y], edge.q, edge.n) != edge:
        raise RepresentationError(f"represent_edge: {{x, y}} is not a basis of <{format_subspace(edge)}>")
    if f.m != edge.n:
        raise RepresentationError(f"represent_edge: field degree {f.m} differs from ambient dimension {edge.n}")
    ux = dot_ext(f, f.u, x)
    uy = dot_ext(f, f.u, y)
    a = f.neg(f.mul(b, f.div(uy, ux)))
    return EdgeRep(edge, combine(f, a, x, b, y))


def propagate(
    f: ExtField,
    rep: EdgeRep,
    shared_vertex: Subspace,
    target_edge: Subspace,
    bases: BasisChooser | None = None,
) -> EdgeRep:
    """Matched representation of ``target_edge`` from ``rep`` through their common vertex."""
    if shared_vertex.dim != 1:
        raise RepresentationError("propagate: shared vertex must be 1-dimensional")
    if target_edge == rep.edge:
        raise RepresentationError("propagate: target edge equals the source edge")
    x0 = shared_vertex.generator
    if not contains(rep.edge, x0) or not contains(target_edge, x0):
        raise RepresentationError(
            f"propagate: <{format_subspace(shared_vertex)}> is not on both"
            f" <{format_subspace(rep.edge)}> and <{format_subspace(target_edge)}>"
        )
    choose = bases or canonical_basis
    x, y = choose(rep.edge, shared_vertex)
    x2, z = choose(target_edge, shared_vertex)
    if x2 != x:
        raise RepresentationError("propagate: basis chooser must reuse the vertex generator")
    _, b = decompose_rank2(f, rep.vector, x, y)
    return represent_edge(f, target_edge, x, z, b)


def scalar_ratio(f: ExtField, v: Sequence[int], w: Sequence[int]) -> int | None:
    """lambda with w = lambda * v, or None if no such nonzero scalar exists."""
    lam = None
    for a, b in zip(v, w):
        if a:
            if not b:
                return None
            r = f.div(b, a)
            if lam is None:
                lam = r
            elif lam != r:
                return None
        elif b:
            return None
    return lam


@dataclass(frozen=True)
class IncidenceMatrix:
    field: ExtField
    edges: tuple[Subspace, ...]
    columns: tuple[Vec, ...]

    def __post_init__(self):
        if len(self.edges) != len(self.columns):
            raise MatrixFormatError("one column per edge required")
        for c in self.columns:
            if len(c) != self.field.m:
                raise MatrixFormatError(f"column of length {len(c)} in a matrix with m={self.field.m} rows")

    @cached_property
    def graph(self) -> QGraph:
        return QGraph(self.field.q, self.field.m, self.edges)

    @property
    def rows(self) -> list[list[int]]:
        return [[c[i] for c in self.columns] for i in range(self.field.m)]

    def column(self, edge: Subspace) -> Vec:
        return self.columns[self.edges.index(edge)]

    def reps(self) -> list[EdgeRep]:
        return [EdgeRep(e, c) for e, c in zip(self.edges, self.columns)]

    def with_columns(self, columns: Sequence[Vec]) -> "IncidenceMatrix":
        return IncidenceMatrix(self.field, self.edges, tuple(tuple(c) for c in columns))


def default_initial(f: ExtField, edge: Subspace) -> EdgeRep:
    x, y = canonical_basis(edge)
    return represent_edge(f, edge, x, y, 1)


def build_incidence(
    g: QGraph,
    f: ExtField,
    initial: EdgeRep | None = None,
    order: Sequence[Subspace] | None = None,
    bases: BasisChooser | None = None,
) -> IncidenceMatrix:
    """Propagate representations breadth-first over each connected component.

    The component containing ``initial.edge`` starts from ``initial``; every
    other component starts from b = 1 on the canonical basis of its first edge.
    """
    if f.m != g.v:
        raise RepresentationError(f"field degree m={f.m} must equal the graph dimension v={g.v}")
    if f.q != g.q:
        raise RepresentationError(f"field base q={f.q} differs from graph q={g.q}")
    if initial is not None:
        if initial.edge not in g.edge_set:
            raise RepresentationError(f"initial edge <{format_subspace(initial.edge)}> is not in the graph")
        if not is_representation(f, initial.edge, initial.vector):
            raise RepresentationError("initial vector is not a representation of its edge")
    reps: dict[Subspace, Vec] = {}
    for comp in components(g):
        if initial is not None and initial.edge in comp:
            start = initial
        else:
            start = default_initial(f, comp[0])
        reps[start.edge] = start.vector
        queue = deque([start.edge])
        while queue:
            e = queue.popleft()
            src = EdgeRep(e, reps[e])
            for x in g.edge_points[e]:
                for t in g.incidence[x]:
                    if t not in reps:
                        reps[t] = propagate(f, src, x, t, bases).vector
                        queue.append(t)
    cols_order = tuple(g.edges if order is None else order)
    if sorted(cols_order) != list(g.edges):
        raise RepresentationError("order must be a permutation of the graph's edges")
    return IncidenceMatrix(f, cols_order, tuple(reps[e] for e in cols_order))


@dataclass(frozen=True)
class Violation:
    kind: str  # "orthogonality", "support" or "consistency"
    column: int
    edge: Subspace
    other: Subspace | None = None
    vertex: Subspace | None = None
    detail: str = ""

    def __str__(self):
        s = f"FAIL {self.kind} column {self.column + 1} <{format_subspace(self.edge)}>"
        if self.other is not None:
            s += f" vs <{format_subspace(self.other)}> at <{format_subspace(self.vertex)}>"
        if self.detail:
            s += f": {self.detail}"
        return s


@dataclass
class AuditReport:
    columns: int
    pairs_checked: int = 0
    pairs_skipped: int = 0  # pairs touching a column that already failed
    violations: list[Violation] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        head = f"audit columns={self.columns} adjacent-pairs={self.pairs_checked}"
        if self.pairs_skipped:
            head += f" skipped={self.pairs_skipped}"
        out = [head]
        out += [str(v) for v in self.violations]
        out.append("audit: PASS" if self.ok else f"audit: FAIL ({len(self.violations)} violations)")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def audit(mat: IncidenceMatrix) -> AuditReport:
    """Column invariants plus F_q^*-consistency of every adjacent pair of edges."""
    f = mat.field
    report = AuditReport(len(mat.columns))
    good: dict[Subspace, int] = {}
    for i, (e, col) in enumerate(zip(mat.edges, mat.columns)):
        ok = True
        d = dot_ext(f, f.u, col)
        if d:
            report.violations.append(Violation("orthogonality", i, e, detail=f"u.v = {f.format(d)}"))
            ok = False
        supp = rank_support(f, col)
        if supp != e:
            report.violations.append(
                Violation("support", i, e, detail=f"rank support <{format_subspace(supp)}> weight {supp.dim}")
            )
            ok = False
        if ok:
            good[e] = i
    g = mat.graph
    for x, through in g.incidence.items():
        for e, t in itertools.combinations(through, 2):
            if e not in good or t not in good:
                report.pairs_skipped += 1
                continue
            report.pairs_checked += 1
            pred = propagate(f, EdgeRep(e, mat.columns[good[e]]), x, t).vector
            lam = scalar_ratio(f, pred, mat.columns[good[t]])
            if lam is None or not f.is_base(lam):
                detail = "not a scalar multiple" if lam is None else f"ratio {f.format(lam)} not in F_{f.q}^*"
                report.violations.append(Violation("consistency", good[t], t, e, x, detail))
    return report


def all_representations(f: ExtField, edge: Subspace) -> Iterator[EdgeRep]:
    """Every representation of ``edge``, found by exhausting a*x + b*y over F_{q^m}^2."""
    x, y = edge.basis
    for a in f.elements():
        for b in f.elements():
            if not a and not b:
                continue
            vec = combine(f, a, x, b, y)
            if is_representation(f, edge, vec):
                yield EdgeRep(edge, vec)


@dataclass
class RepSpaceReport:
    edge: Subspace
    count: int
    expected: int
    all_multiples: bool

    @property
    def ok(self) -> bool:
        return self.count == self.expected and self.all_multiples


def representation_space(f: ExtField, edge: Subspace) -> RepSpaceReport:
    reps = [r.vector for r in all_representations(f, edge)]
    multiples = bool(reps) and all(scalar_ratio(f, reps[0], r) for r in reps[1:])
    return RepSpaceReport(edge, len(reps), f.N, multiples)


# file format

def format_matrix(mat: IncidenceMatrix, coords: bool = False) -> str:
    f = mat.field
    lines = [str(f.spec), f"edges {len(mat.edges)}"]
    lines += [f"edge {format_subspace(e)}" for e in mat.edges]
    for row in mat.rows:
        lines.append(" ".join(f.format(a, coords=coords) for a in row))
    return "\n".join(lines) + "\n"


def parse_column(f: ExtField, text: str) -> Vec:
    toks = split_entries(text)
    if len(toks) != f.m:
        raise MatrixFormatError(f"column {text!r} has {len(toks)} entries, expected {f.m}")
    return tuple(f.parse(t) for t in toks)


def ingest_matrix(text: str) -> IncidenceMatrix:
    """Parse an incidence-matrix file; columns are not checked (see :func:`audit`)."""
    raw = text.splitlines()
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(raw)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    lineno, head = lines[0]
    try:
        spec = FieldSpec.parse(head)
        f = ExtField(spec)
    except FieldError as exc:
        raise MatrixFormatError(f"line {lineno}: {exc}") from None
    if len(lines) < 2 or not lines[1][1].startswith("edges "):
        raise MatrixFormatError(f"line {lines[1][0] if len(lines) > 1 else lineno + 1}: expected 'edges <k>'")
    lineno, ln = lines[1]
    try:
        k = int(ln.split()[1])
    except (IndexError, ValueError):
        raise MatrixFormatError(f"line {lineno}: malformed edge count {ln!r}") from None
    body = lines[2:]
    if len(body) != k + f.m:
        raise MatrixFormatError(
            f"expected {k} edge lines and {f.m} matrix rows after line {lineno}, found {len(body)} lines"
        )
    edges = []
    for lineno, ln in body[:k]:
        if not ln.startswith("edge "):
            raise MatrixFormatError(f"line {lineno}: expected 'edge <vec>;<vec>'")
        try:
            e = parse_subspace(ln[5:], f.q)
        except ValueError as exc:
            raise MatrixFormatError(f"line {lineno}: {exc}") from None
        if e.n != f.m:
            raise MatrixFormatError(f"line {lineno}: edge lives in F_{f.q}^{e.n} but m={f.m}")
        if e.dim != 2:
            raise MatrixFormatError(f"line {lineno}: edge spans dimension {e.dim}")
        edges.append(e)
    if len(set(edges)) != len(edges):
        raise MatrixFormatError("duplicate edge lines")
    rows = []
    for lineno, ln in body[k:]:
        toks = split_entries(ln)
        if len(toks) != k:
            raise MatrixFormatError(f"line {lineno}: row has {len(toks)} entries, expected {k}")
        row = []
        for col, t in enumerate(toks, 1):
            try:
                row.append(f.parse(t))
            except FieldError as exc:
                raise MatrixFormatError(f"line {lineno}, column {col}: {exc}") from None
        rows.append(row)
    columns = tuple(tuple(rows[i][j] for i in range(f.m)) for j in range(k))
    return IncidenceMatrix(f, tuple(edges), columns)


def describe_column(f: ExtField, vec: Sequence[int], coords: bool = False) -> str:
    return format_vec_ext(f, vec, coords=coords)


def scale_column(f: ExtField, mat: IncidenceMatrix, index: int, c: int) -> IncidenceMatrix:
    cols = list(mat.columns)
    cols[index] = scale_ext(f, c, cols[index])
    return mat.with_columns(cols)
