"""Vectors and matrices over F_{q^m}, and their rank supports over F_q."""

from __future__ import annotations

from typing import Sequence

from .fields import ExtField, FieldError
from .spaces import Subspace, Vec, rref, span, transpose


class SupportError(ValueError):
    """A vector's rank support is not what an operation requires."""


def dot_ext(field: ExtField, a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"dot product of vectors of lengths {len(a)} and {len(b)}")
    acc = 0
    for x, y in zip(a, b):
        acc = field.add(acc, field.mul(x, y))
    return acc


def embed(v: Sequence[int]) -> Vec:
    """An F_q-vector read as a vector over F_{q^m}; constants keep their encoding."""
    return tuple(v)


def scale_ext(field: ExtField, c: int, v: Sequence[int]) -> Vec:
    return tuple(field.mul(c, x) for x in v)


def add_ext(field: ExtField, a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(field.add(x, y) for x, y in zip(a, b))


def neg_ext(field: ExtField, a: Sequence[int]) -> Vec:
    return tuple(field.neg(x) for x in a)


def combine(field: ExtField, a: int, x: Sequence[int], b: int, y: Sequence[int]) -> Vec:
    """a*x + b*y for scalars a, b in F_{q^m} and F_q-vectors x, y."""
    return tuple(field.add(field.mul(a, xi), field.mul(b, yi)) for xi, yi in zip(x, y))


def expand(field: ExtField, v: Sequence[int]) -> list[list[int]]:
    """n x m matrix over F_q: row i holds the coordinates of entry i."""
    return [list(field.coords(x)) for x in v]


def rank_support(field: ExtField, v: Sequence[int]) -> Subspace:
    """Smallest F_q-subspace of F_q^n whose extension contains ``v``.

    It is spanned by the columns of :func:`expand`.
    """
    n = len(v)
    cols = transpose(expand(field, v)) if n else []
    return span(cols, field.q, n) if n else Subspace(field.q, 0, ())


def rank_weight(field: ExtField, v: Sequence[int]) -> int:
    return rank_support(field, v).dim


def decompose_rank2(field: ExtField, v: Sequence[int], x: Vec, y: Vec) -> tuple[int, int]:
    """The unique (a, b) in F_{q^m}^2 with v = a*x + b*y.

    ``x`` and ``y`` must be independent over F_q and span the rank support of v.
    """
    q = field.q
    n = len(v)
    if len(x) != n or len(y) != n:
        raise ValueError("decompose_rank2: length mismatch")
    basis = span([x, y], q, n)
    if basis.dim != 2:
        raise SupportError("decompose_rank2: x and y are not independent over F_q")
    supp = rank_support(field, v)
    if supp != basis:
        raise SupportError(
            f"decompose_rank2: rank support of v is <{supp}> (weight {supp.dim}),"
            f" not <x, y> = <{basis}>"
        )
    # pick two coordinates where the 2x2 minor of (x | y) is invertible over F_q
    for i in range(n):
        for j in range(i + 1, n):
            det = (x[i] * y[j] - x[j] * y[i]) % q
            if det:
                # Cramer's rule; the minor entries are in F_q
                idet = field.inv(det)
                a = field.mul(idet, field.sub(field.mul(y[j], v[i]), field.mul(y[i], v[j])))
                b = field.mul(idet, field.sub(field.mul(x[i], v[j]), field.mul(x[j], v[i])))
                if combine(field, a, x, b, y) != tuple(v):
                    raise SupportError("decompose_rank2: v is not in the F_{q^m}-span of x, y")
                return a, b
    raise SupportError("decompose_rank2: x and y are not independent over F_q")


def rank_ext(field: ExtField, rows: Sequence[Sequence[int]]) -> int:
    """Rank over F_{q^m} of a matrix given by rows."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return field.kernel.rank(rows)


def matmul_ext(field: ExtField, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    inner = len(b)
    if a and len(a[0]) != inner:
        raise ValueError("matmul_ext: shape mismatch")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = 0
            for t in range(inner):
                if row[t] and b[t][j]:
                    acc = field.add(acc, field.mul(row[t], b[t][j]))
            new.append(acc)
        out.append(new)
    return out


def inverse_ext(field: ExtField, a: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a square matrix over F_{q^m} by Gauss-Jordan; raises on singular input."""
    k = len(a)
    m = [list(r) + [1 if i == j else 0 for j in range(k)] for i, r in enumerate(a)]
    for c in range(k):
        piv = next((i for i in range(c, k) if m[i][c]), None)
        if piv is None:
            raise FieldError("matrix is singular over F_{q^m}")
        m[c], m[piv] = m[piv], m[c]
        inv = field.inv(m[c][c])
        m[c] = [field.mul(inv, x) for x in m[c]]
        for i in range(k):
            if i != c and m[i][c]:
                t = field.neg(m[i][c])
                m[i] = [field.add(x, field.mul(t, y)) for x, y in zip(m[i], m[c])]
    return [r[k:] for r in m]


def inverse_fq(a: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    """Inverse of a square matrix over F_q; raises on singular input."""
    k = len(a)
    aug = [list(r) + [1 if i == j else 0 for j in range(k)] for i, r in enumerate(a)]
    red = rref(aug, q, 2 * k)
    if len(red) < k or any(red[i][i] != 1 for i in range(k)) or any(
        red[i][j] for i in range(k) for j in range(k) if i != j
    ):
        raise FieldError("matrix is singular over F_q")
    return [list(r[k:]) for r in red]


def matmul_fq(a, b, q: int) -> list[list[int]]:
    return [[sum(x * y for x, y in zip(row, col)) % q for col in zip(*b)] for row in a]


def format_entry(field: ExtField, a: int, coords: bool = False) -> str:
    return field.format(a, coords=coords)


def format_vec_ext(field: ExtField, v: Sequence[int], coords: bool = False) -> str:
    return "(" + ", ".join(field.format(x, coords=coords) for x in v) + ")"
