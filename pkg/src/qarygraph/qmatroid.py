"""Representable q-matroids: r(A) = rank(G Y^T) for a matrix G over F_{q^m}."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Sequence

from .extlinalg import inverse_ext, inverse_fq, matmul_ext, rank_ext
from .fields import ExtField, FieldError
from .incidence import IncidenceMatrix, scalar_ratio
from .spaces import (
    DimensionError,
    Subspace,
    enumerate_all,
    format_subspace,
    gaussian_binomial,
    hyperplanes,
    intersect,
    rref,
    span,
    sum_spaces,
)

# exhaustive all-pairs semimodularity is allowed up to this many subspaces
EXHAUSTIVE_LATTICE_LIMIT = 400
# lattice enumeration (for r1/r2 and signatures) is allowed up to this many subspaces
LATTICE_LIMIT = 60_000


class LatticeTooLarge(ValueError):
    pass


class QMatroid:
    """The q-matroid on F_q^n represented by ``columns`` (n columns over F_{q^m})."""

    def __init__(self, field: ExtField, columns: Sequence[Sequence[int]]):
        if not columns:
            raise ValueError("a q-matroid needs at least one column")
        self.field = field
        self.columns = tuple(tuple(c) for c in columns)
        self.k = len(self.columns[0])
        if any(len(c) != self.k for c in self.columns):
            raise ValueError("ragged matrix")
        self.n = len(self.columns)
        self.q = field.q
        self._memo: dict[Subspace, int] = {}

    @classmethod
    def from_rows(cls, field: ExtField, rows: Sequence[Sequence[int]]) -> "QMatroid":
        return cls(field, list(zip(*rows)))

    @classmethod
    def from_incidence(cls, mat: IncidenceMatrix) -> "QMatroid":
        return cls(mat.field, mat.columns)

    @property
    def rows(self) -> list[list[int]]:
        return [[c[i] for c in self.columns] for i in range(self.k)]

    def rank(self, a: Subspace) -> int:
        if (a.q, a.n) != (self.q, self.n):
            raise DimensionError(f"subspace of F_{a.q}^{a.n} for a q-matroid on F_{self.q}^{self.n}")
        r = self._memo.get(a)
        if r is None:
            r = self.field.kernel.image_rank(self.columns, a.basis) if a.dim else 0
            self._memo[a] = r
        return r

    def rank_of_rows(self, rows: Sequence[Sequence[int]]) -> int:
        """rank(G Y^T) for an arbitrary (not necessarily reduced) Y."""
        rows = [list(r) for r in rows]
        if not rows:
            return 0
        return self.field.kernel.image_rank(self.columns, rows)

    def total_rank(self) -> int:
        return rank_ext(self.field, self.rows)

    def lattice(self) -> Iterable[Subspace]:
        size = lattice_size(self.n, self.q)
        if size > LATTICE_LIMIT:
            raise LatticeTooLarge(f"F_{self.q}^{self.n} has {size} subspaces (limit {LATTICE_LIMIT})")
        return enumerate_all(self.n, self.q)


def lattice_size(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


@dataclass
class AxiomResult:
    name: str
    checked: int = 0
    witness: tuple | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.witness is None

    def __str__(self):
        if self.ok:
            return f"{self.name} PASS checked={self.checked}"
        spaces = " ".join(f"<{format_subspace(s)}>" for s in self.witness)
        return f"{self.name} FAIL {spaces} {self.detail}".rstrip()


@dataclass
class RankReport:
    mode: str
    seed: int | None = None
    samples: int | None = None
    results: list[AxiomResult] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> list[str]:
        head = f"axioms mode={self.mode}"
        if self.mode == "sample":
            head += f" pairs={self.samples} seed={self.seed}"
        return [head] + [str(r) for r in self.results] + ["axioms: " + ("PASS" if self.ok else "FAIL")]

    def __str__(self):
        return "\n".join(self.lines())


def check_axioms(
    mat: QMatroid,
    mode: str = "auto",
    pairs: int = 100_000,
    seed: int = 0,
    rank: Callable[[Subspace], int] | None = None,
) -> RankReport:
    """Check (r1) boundedness, (r2) monotonicity on covering pairs, (r3) semimodularity.

    (r3) runs over all pairs in ``exhaustive`` mode and over ``pairs`` seeded
    random pairs in ``sample`` mode; ``auto`` picks exhaustive when the
    lattice has at most EXHAUSTIVE_LATTICE_LIMIT subspaces.  ``rank`` overrides
    the rank oracle (used for negative controls).
    """
    r = rank or mat.rank
    spaces = list(mat.lattice())
    if mode == "auto":
        mode = "exhaustive" if len(spaces) <= EXHAUSTIVE_LATTICE_LIMIT else "sample"
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    report = RankReport(mode, seed if mode == "sample" else None, pairs if mode == "sample" else None)

    r1 = AxiomResult("r1")
    for a in spaces:
        r1.checked += 1
        ra = r(a)
        if not 0 <= ra <= a.dim:
            r1.witness = (a,)
            r1.detail = f"r={ra} dim={a.dim}"
            break
    report.results.append(r1)

    r2 = AxiomResult("r2")
    for b in spaces:
        rb = r(b)
        for a in hyperplanes(b):
            r2.checked += 1
            if r(a) > rb:
                r2.witness = (a, b)
                r2.detail = f"r(A)={r(a)} > r(B)={rb}"
                break
        if r2.witness:
            break
    report.results.append(r2)

    r3 = AxiomResult("r3")

    def semimodular(a, b):
        r3.checked += 1
        s, i = sum_spaces(a, b), intersect(a, b)
        lhs, rhs = r(s) + r(i), r(a) + r(b)
        if lhs > rhs:
            r3.witness = (a, b)
            r3.detail = f"r(A+B)+r(A&B)={lhs} > r(A)+r(B)={rhs}"
            return False
        return True

    if mode == "exhaustive":
        for a in spaces:
            if not all(semimodular(a, b) for b in spaces):
                break
    else:
        rng = random.Random(seed)
        for _ in range(pairs):
            if not semimodular(rng.choice(spaces), rng.choice(spaces)):
                break
    report.results.append(r3)
    return report


# transforms

@dataclass(frozen=True)
class IsoMap:
    """An invertible row operation (over F_{q^m}) or column operation (over F_q)."""

    kind: str  # "row" or "col"
    matrix: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[int, ...], ...]
    q: int

    def apply(self, a: Subspace) -> Subspace:
        """phi(X) = B^{-1} X (as column vectors) for a column operation; identity for rows."""
        if self.kind == "row":
            return a
        binv = self.inverse
        n = len(binv)
        rows = [tuple(sum(binv[i][j] * y[j] for j in range(n)) % self.q for i in range(n)) for y in a.basis]
        return span(rows, self.q, n) if rows else a


def _tuples(m):
    return tuple(tuple(r) for r in m)


def row_transform(mat: QMatroid, a: Sequence[Sequence[int]]) -> QMatroid:
    """Matroid of A*G for an invertible k x k matrix A over F_{q^m}."""
    f = mat.field
    if len(a) != mat.k or any(len(r) != mat.k for r in a):
        raise ValueError(f"row operation must be {mat.k}x{mat.k}")
    if rank_ext(f, a) != mat.k:
        raise FieldError("row operation matrix is singular")
    return QMatroid.from_rows(f, matmul_ext(f, a, mat.rows))


def row_isomap(mat: QMatroid, a: Sequence[Sequence[int]]) -> IsoMap:
    return IsoMap("row", _tuples(a), _tuples(inverse_ext(mat.field, a)), mat.q)


def col_transform(mat: QMatroid, b: Sequence[Sequence[int]]) -> tuple[QMatroid, IsoMap]:
    """Matroid of G*B for invertible n x n B over F_q, with the ground-space map."""
    q, n = mat.q, mat.n
    if len(b) != n or any(len(r) != n for r in b):
        raise ValueError(f"column operation must be {n}x{n}")
    binv = inverse_fq(b, q)
    f = mat.field
    new_cols = []
    for j in range(n):
        acc = [0] * mat.k
        for i in range(n):
            c = b[i][j] % q
            if c:
                col = mat.columns[i]
                acc = [f.add(s, f.mul(c, g)) for s, g in zip(acc, col)]
        new_cols.append(acc)
    return QMatroid(f, new_cols), IsoMap("col", _tuples(b), _tuples(binv), q)


@dataclass
class EquivalenceReport:
    name: str
    checked: int = 0
    witness: Subspace | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.witness is None

    def __str__(self):
        if self.ok:
            return f"{self.name} PASS checked={self.checked}"
        return f"{self.name} FAIL <{format_subspace(self.witness)}> {self.detail}"


def _scope(mat: QMatroid, scope: str | int, seed: int) -> list[Subspace]:
    spaces = list(mat.lattice())
    if scope == "exhaustive":
        return spaces
    rng = random.Random(seed)
    return [rng.choice(spaces) for _ in range(int(scope))]


def verify_isomorphism(
    m1: QMatroid, m2: QMatroid, phi: Callable[[Subspace], Subspace],
    scope: str | int = "exhaustive", seed: int = 0, name: str = "isomorphism",
) -> EquivalenceReport:
    """Check r_{m1}(X) = r_{m2}(phi(X)) over the lattice (or a seeded sample)."""
    rep = EquivalenceReport(name)
    for x in _scope(m1, scope, seed):
        rep.checked += 1
        r1, r2 = m1.rank(x), m2.rank(phi(x))
        if r1 != r2:
            rep.witness = x
            rep.detail = f"r1={r1} r2={r2}"
            break
    return rep


def verify_row_invariance(mat: QMatroid, a, scope: str | int = "exhaustive", seed: int = 0) -> EquivalenceReport:
    return verify_isomorphism(mat, row_transform(mat, a), lambda x: x, scope, seed, "row-invariance")


def verify_col_isomorphism(mat: QMatroid, b, scope: str | int = "exhaustive", seed: int = 0) -> EquivalenceReport:
    m2, iso = col_transform(mat, b)
    return verify_isomorphism(mat, m2, iso.apply, scope, seed, "col-isomorphism")


def rank_signature(mat: QMatroid) -> dict[tuple[int, int], int]:
    """(dim, rank) -> number of subspaces; an isomorphism invariant."""
    return dict(sorted(Counter((a.dim, mat.rank(a)) for a in mat.lattice()).items()))


def format_signature(sig: dict[tuple[int, int], int]) -> str:
    lines = ["dim rank count"]
    lines += [f"{d} {r} {c}" for (d, r), c in sig.items()]
    return "\n".join(lines)


def fq_kernel(mat: QMatroid) -> Subspace:
    """F_q-linear relations among the columns: {lambda in F_q^n : G lambda = 0}."""
    f, q, n = mat.field, mat.q, mat.n
    # expand every column into its q-ary coordinates, then take the F_q null space
    rows = []
    for i in range(mat.k):
        coords = [f.coords(c[i]) for c in mat.columns]
        for t in range(f.m):
            rows.append([coords[j][t] for j in range(n)])
    return Subspace(q, n, rref(rows, q, n)).perp


def projection_rank_check(mat: QMatroid) -> EquivalenceReport:
    """Compare r(A) with dim A - dim(A & K), K the F_q-kernel of G."""
    ker = fq_kernel(mat)
    rep = EquivalenceReport("projection-rank")
    for a in mat.lattice():
        rep.checked += 1
        expect = a.dim - intersect(a, ker).dim
        if mat.rank(a) != expect:
            rep.witness = a
            rep.detail = f"r={mat.rank(a)} projected dim={expect}"
            break
    return rep


# incidence-matrix comparison

@dataclass
class CompareReport:
    permutation: list[int] | None = None  # column j of b is column permutation[j] of a
    global_scalar: int | None = None
    column_scalars: list[int] | None = None
    signature_equal: bool = False
    iso: EquivalenceReport | None = None
    notes: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.signature_equal and self.iso is not None and self.iso.ok

    def lines(self, field: ExtField | None = None) -> list[str]:
        out = []
        if self.permutation is not None:
            out.append("permutation " + " ".join(str(p + 1) for p in self.permutation))
        if self.global_scalar is not None and field is not None:
            out.append(f"row-operation {field.format(self.global_scalar)}*I")
        if self.column_scalars is not None:
            out.append("column-scalars " + " ".join(str(c) for c in self.column_scalars))
        out += self.notes
        out.append("signature " + ("PASS" if self.signature_equal else "FAIL"))
        if self.iso is not None:
            out.append(str(self.iso))
        out.append("compare: " + ("PASS" if self.ok else "FAIL"))
        return out


def compare_incidence_matroids(
    a: IncidenceMatrix, b: IncidenceMatrix, scope: str | int = "exhaustive", seed: int = 0
) -> CompareReport:
    """Witness that two incidence matrices of one graph give isomorphic q-matroids.

    The difference is factored as b = (mu*I) * a * (P * D): a column
    permutation P, F_q^* column scalings D and a global scalar mu (the scaling
    of the initial representation).
    """
    if a.field != b.field:
        raise ValueError("matrices are over different field specifications")
    if set(a.edges) != set(b.edges):
        raise ValueError("matrices belong to different graphs")
    f = a.field
    rep = CompareReport()
    perm = [a.edges.index(e) for e in b.edges]
    rep.permutation = perm
    ratios = []
    for j, i in enumerate(perm):
        lam = scalar_ratio(f, a.columns[i], b.columns[j])
        if lam is None:
            rep.notes.append(f"column {j + 1}: not a multiple of the matching column")
            break
        ratios.append(lam)
    m1 = QMatroid(f, a.columns)
    m2 = QMatroid(f, b.columns)
    rep.signature_equal = rank_signature(m1) == rank_signature(m2)
    if len(ratios) != len(perm):
        return rep
    mu = ratios[0]
    scalars = [f.div(r, mu) for r in ratios]
    if not all(f.is_base(s) for s in scalars):
        rep.notes.append("column ratios do not share one global scalar up to F_q^*")
        return rep
    rep.global_scalar = mu
    rep.column_scalars = scalars
    n = len(perm)
    # b = mu * a * B with B[i][j] = scalars[j] if i == perm[j]
    bmat = [[0] * n for _ in range(n)]
    for j, i in enumerate(perm):
        bmat[i][j] = scalars[j]
    scaled_a = row_transform(m1, [[mu if i == j else 0 for j in range(m1.k)] for i in range(m1.k)])
    composite, iso = col_transform(scaled_a, bmat)
    if composite.columns != m2.columns:
        rep.notes.append("witness maps do not reproduce the second matrix")
        return rep
    rep.iso = verify_isomorphism(m1, m2, iso.apply, scope, seed, "witness-isomorphism")
    return rep
