"""Named, byte-stable reproductions of the worked examples.

Each fixture regenerates its report from the library and is compared with
the pinned text under ``data/expected``.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .extlinalg import add_ext, format_vec_ext, neg_ext, rank_ext, scale_ext
from .fields import ExtField, FieldError, FieldSpec, check_spec
from .incidence import EdgeRep, audit, build_incidence, format_matrix, ingest_matrix, propagate
from .qgraph import (
    QGraph,
    closure,
    degree,
    path_seed,
    q_path2,
    q_triangle,
    star_seed,
    stats_lines,
    validate,
)
from .spaces import format_subspace, span, unit


class UnknownFixture(KeyError):
    pass


def data_text(name: str) -> str:
    return resources.files("qarygraph").joinpath("data", name).read_text()


def printed_matrix(name: str):
    """The printed reference matrices: ``"3x3"`` or ``"3x7"``."""
    return ingest_matrix(data_text(f"printed_gf8_{name}.txt"))


def _vec(f, v):
    return format_vec_ext(f, v)


def _status(ok):
    return "PASS" if ok else "FAIL"


def _gf8():
    return ExtField(FieldSpec(2, 3, (1, 1, 0, 1)))


def fx_empty():
    g = QGraph(2, 3, ())
    return ["fixture empty"] + stats_lines(g) + [str(validate(g))]


def fx_f2_p2():
    return ["fixture f2-p2"] + stats_lines(q_path2(2))


def fx_f2_c3():
    return ["fixture f2-c3"] + stats_lines(q_triangle(2))


def fx_f2_p4_closure():
    seed = path_seed(2, 4)
    g = closure(2, 5, seed.edges)
    out = ["fixture f2-p4-closure", "seed " + str(validate(seed))]
    out += [f"added <{format_subspace(e)}>" for e in g.edges if e not in seed.edge_set]
    return out + stats_lines(g)


def fx_f2_s4_closure():
    seed = star_seed(2, 4)
    g = closure(2, 5, seed.edges)
    center = span([unit(5, 0)], 2, 5)
    out = ["fixture f2-s4-closure", f"center <{format_subspace(center)}> degree {degree(g, center)}"]
    return out + stats_lines(g)


def fx_gf27_triangle():
    f = ExtField(FieldSpec(3, 3, (1, 2, 0, 1)))
    e = [span([unit(3, i)], 3, 3) for i in range(3)]
    e12, e13, e23 = (span([unit(3, i), unit(3, j)], 3, 3) for i, j in ((0, 1), (0, 2), (1, 2)))
    a = f.alpha_pow
    v1 = EdgeRep(e12, (a(1), f.neg(1), 0))
    v2 = propagate(f, v1, e[0], e13)
    v3 = propagate(f, v1, e[1], e23)
    v3p = propagate(f, v2, e[2], e23)
    return [
        "fixture gf27-triangle",
        str(f.spec),
        f"v1  <e1,e2> {_vec(f, v1.vector)}",
        f"v2  <e1,e3> {_vec(f, v2.vector)}  via <e1>",
        f"v3  <e2,e3> {_vec(f, v3.vector)}  via <e2>",
        f"v3' <e2,e3> {_vec(f, v3p.vector)}  via <e3>",
        f"v3 == -v3' : {_status(v3.vector == neg_ext(f, v3p.vector))}",
    ]


def fx_gf8_qp2_matrix():
    f = _gf8()
    g = q_path2(2)
    a = f.alpha_pow
    mat = build_incidence(g, f, EdgeRep(g.edges[0], (a(1), 1, 0)))
    v1, v2, v3 = mat.columns
    printed = printed_matrix("3x3")
    out = ["fixture gf8-qp2-matrix"] + format_matrix(mat).splitlines()
    out += [
        f"v1 + v2 == v3 : {_status(add_ext(f, v1, v2) == v3)}",
        f"matches printed matrix : {_status(printed.columns == mat.columns and printed.edges == mat.edges)}",
        f"rank {rank_ext(f, mat.rows)}",
    ]
    return out + audit(mat).lines()


def fx_gf8_qtriangle_matrix():
    f = _gf8()
    g = q_triangle(2)
    mat = build_incidence(g, f)
    printed = printed_matrix("3x7")
    out = ["fixture gf8-qtriangle-matrix"] + format_matrix(mat).splitlines()
    out += [f"rank {rank_ext(f, mat.rows)}"] + audit(mat).lines()
    out.append("compare with printed matrix (column order as printed)")
    for i, (e, pc) in enumerate(zip(printed.edges, printed.columns)):
        bc = mat.column(e)
        tag = "match" if bc == pc else "DIFFERS"
        out.append(f"  col {i + 1} <{format_subspace(e)}> printed {_vec(f, pc)} built {_vec(f, bc)} {tag}")
    out.append("printed matrix:")
    out += [f"  rank {rank_ext(f, printed.rows)}"] + ["  " + ln for ln in audit(printed).lines()]
    return out


def fx_negative_controls():
    f = _gf8()
    mat = build_incidence(q_triangle(2), f)
    cols = list(mat.columns)
    cols[0] = scale_ext(f, f.alpha_pow(1), cols[0])
    scaled = mat.with_columns(cols)
    rep = audit(scaled)
    seed_report = validate(path_seed(2, 4))
    spec = FieldSpec(2, 3, (1, 0, 0, 1))
    try:
        ExtField(spec)
        rejected = "accepted"
    except FieldError as exc:
        rejected = f"rejected: {exc}"
    return [
        "fixture negative-controls",
        f"alpha-scaled column 1: audit {_status(rep.ok)} ({len(rep.violations)} violations)",
        f"P4 seed: {seed_report}",
        f"{spec}: {rejected}",
        f"check_spec order {check_spec(spec).order}",
    ]


FIXTURES = {
    "empty": fx_empty,
    "f2-p2": fx_f2_p2,
    "f2-c3": fx_f2_c3,
    "f2-p4-closure": fx_f2_p4_closure,
    "f2-s4-closure": fx_f2_s4_closure,
    "gf27-triangle": fx_gf27_triangle,
    "gf8-qp2-matrix": fx_gf8_qp2_matrix,
    "gf8-qtriangle-matrix": fx_gf8_qtriangle_matrix,
    "negative-controls": fx_negative_controls,
}


def render(name: str) -> str:
    try:
        fn = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}") from None
    return "\n".join(fn()) + "\n"


def expected_text(name: str) -> str:
    return data_text(f"expected/{name}.txt")


@dataclass
class FixtureResult:
    name: str
    output: str
    ok: bool
    diff: str = ""


def fixture_run(name: str) -> FixtureResult:
    out = render(name)
    want = expected_text(name)
    if out == want:
        return FixtureResult(name, out, True)
    diff = "".join(difflib.unified_diff(
        want.splitlines(True), out.splitlines(True), f"expected/{name}", f"regenerated/{name}"
    ))
    return FixtureResult(name, out, False, diff)


def write_expected(name: str, directory: Path | None = None) -> Path:
    """Regenerate a pinned file (maintenance; review the diff before committing)."""
    directory = directory or Path(str(resources.files("qarygraph").joinpath("data", "expected")))
    path = directory / f"{name}.txt"
    path.write_text(render(name))
    return path
