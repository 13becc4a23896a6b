"""Linear algebra and the subspace lattice over a prime field F_q.

Vectors are tuples of ints in ``[0, q)``.  A :class:`Subspace` stores its
reduced row-echelon basis, so equal subspaces are equal records.

Canonical order: a vector is keyed by its base-q value with the *first*
coordinate least significant (``e1 < e2 < e1+e2 < e3 < ...``) and a subspace
by the tuple of its RREF row keys.  Enumeration, vertex and edge orders all
use this key.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .kernels import rref_mod

Vec = tuple[int, ...]


class DimensionError(ValueError):
    """Ambient dimensions or fields of two operands disagree."""


def vec_key(v: Sequence[int], q: int) -> int:
    key = 0
    for c in reversed(v):
        key = key * q + c
    return key


def rref(rows: Iterable[Sequence[int]], q: int, ncols: int | None = None) -> tuple[Vec, ...]:
    rows = [tuple(r) for r in rows]
    if ncols is None:
        if not rows:
            return ()
        ncols = len(rows[0])
    return rref_mod(rows, ncols, q)


def rank_fq(rows: Iterable[Sequence[int]], q: int, ncols: int | None = None) -> int:
    return len(rref(rows, q, ncols))


def unit(n: int, i: int) -> Vec:
    """The standard basis vector e_{i+1} of length n (0-based index ``i``)."""
    return tuple(1 if j == i else 0 for j in range(n))


def vec_add(a: Vec, b: Vec, q: int) -> Vec:
    return tuple((x + y) % q for x, y in zip(a, b))


def vec_scale(c: int, a: Vec, q: int) -> Vec:
    return tuple((c * x) % q for x in a)


def vec_lincomb(coeffs: Sequence[int], vectors: Sequence[Vec], q: int, n: int) -> Vec:
    out = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                out[i] = (out[i] + c * x) % q
    return tuple(out)


def normalize(v: Vec, q: int) -> Vec:
    """Scale a nonzero vector so that its first nonzero entry is 1."""
    for x in v:
        if x:
            inv = pow(x, q - 2, q)
            return tuple((inv * y) % q for y in v)
    return tuple(v)


def transpose(rows):
    return [list(c) for c in zip(*rows)]


@dataclass(frozen=True)
class Subspace:
    q: int
    n: int
    basis: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def key(self) -> tuple[int, ...]:
        return tuple(vec_key(r, self.q) for r in self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.basis)

    def __lt__(self, other: "Subspace") -> bool:
        return (self.dim, self.key) < (other.dim, other.key)

    def __str__(self):
        return format_subspace(self)

    def __repr__(self):
        return f"Subspace(q={self.q}, n={self.n}, <{format_subspace(self) or '0'}>)"

    def _check(self, other: "Subspace"):
        if (self.q, self.n) != (other.q, other.n):
            raise DimensionError(
                f"subspaces of F_{self.q}^{self.n} and F_{other.q}^{other.n} cannot be combined"
            )

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_spaces(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    @cached_property
    def perp(self) -> "Subspace":
        """Orthogonal complement under the standard dot product."""
        q, n = self.q, self.n
        piv = set(self.pivots)
        free = [j for j in range(n) if j not in piv]
        rows = []
        for f in free:
            v = [0] * n
            v[f] = 1
            for r, p in zip(self.basis, self.pivots):
                v[p] = (-r[f]) % q
            rows.append(v)
        return Subspace(q, n, rref(rows, q, n))

    def vectors(self) -> Iterator[Vec]:
        """Every vector of the subspace (q^dim of them)."""
        for coeffs in itertools.product(range(self.q), repeat=self.dim):
            yield vec_lincomb(coeffs, self.basis, self.q, self.n)

    def points(self) -> list["Subspace"]:
        """All 1-dimensional subspaces, in canonical order."""
        seen = {normalize(v, self.q) for v in self.vectors() if any(v)}
        return sorted(Subspace(self.q, self.n, (v,)) for v in seen)

    @property
    def generator(self) -> Vec:
        """Canonical generator of a 1-dimensional subspace."""
        if self.dim != 1:
            raise DimensionError("generator() needs a 1-dimensional subspace")
        return self.basis[0]


def span(vectors: Iterable[Sequence[int]], q: int, n: int | None = None) -> Subspace:
    vectors = [tuple(int(x) % q for x in v) for v in vectors]
    if n is None:
        if not vectors:
            raise DimensionError("span of no vectors needs an explicit ambient dimension")
        n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionError(f"all vectors must have length {n}")
    return Subspace(q, n, rref(vectors, q, n))


def zero_space(q: int, n: int) -> Subspace:
    return Subspace(q, n, ())


def full_space(q: int, n: int) -> Subspace:
    return Subspace(q, n, tuple(unit(n, i) for i in range(n)))


def sum_spaces(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    return Subspace(a.q, a.n, rref(a.basis + b.basis, a.q, a.n))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    a._check(b)
    if a.dim == 0 or b.dim == 0:
        return zero_space(a.q, a.n)
    if a.dim == a.n:
        return b
    if b.dim == b.n:
        return a
    both = Subspace(a.q, a.n, rref(a.perp.basis + b.perp.basis, a.q, a.n))
    return both.perp


def contains(a: Subspace, v: Sequence[int]) -> bool:
    if len(v) != a.n:
        raise DimensionError(f"vector of length {len(v)} in F_{a.q}^{a.n}")
    v = tuple(x % a.q for x in v)
    if not any(v):
        return True
    return len(rref(a.basis + (v,), a.q, a.n)) == a.dim


def contains_subspace(a: Subspace, b: Subspace) -> bool:
    """True when ``b`` is a subspace of ``a``."""
    a._check(b)
    if b.dim > a.dim:
        return False
    return len(rref(a.basis + b.basis, a.q, a.n)) == a.dim


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _rref_with_pivots(n, pivots, q):
    """All RREF k x n matrices with the given pivot columns."""
    k = len(pivots)
    free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, n) if j not in pivots]
    for vals in itertools.product(range(q), repeat=len(free)):
        rows = [[0] * n for _ in range(k)]
        for i, p in enumerate(pivots):
            rows[i][p] = 1
        for (i, j), x in zip(free, vals):
            rows[i][j] = x
        yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(n: int, k: int, q: int) -> Iterator[Subspace]:
    """Each k-dimensional subspace of F_q^n once, in canonical order."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    spaces = [
        Subspace(q, n, basis)
        for pivots in itertools.combinations(range(n), k)
        for basis in _rref_with_pivots(n, pivots, q)
    ]
    spaces.sort()
    yield from spaces


def enumerate_all(n: int, q: int) -> Iterator[Subspace]:
    """The whole subspace lattice of F_q^n, by dimension then canonical order."""
    for k in range(n + 1):
        yield from enumerate_subspaces(n, k, q)


def hyperplanes(a: Subspace) -> list[Subspace]:
    """Subspaces of ``a`` of codimension one in ``a`` (its lower covers)."""
    k = a.dim
    if k == 0:
        return []
    q, n = a.q, a.n
    out = []
    for kernel in _coordinate_hyperplanes(k, q):
        rows = [vec_lincomb(c, a.basis, q, n) for c in kernel]
        out.append(Subspace(q, n, rref(rows, q, n)))
    return out


@lru_cache(maxsize=None)
def _coordinate_hyperplanes(k: int, q: int) -> tuple[tuple[Vec, ...], ...]:
    # bases of the hyperplanes of F_q^k, one per point of the dual
    return tuple(lam.perp.basis for lam in enumerate_subspaces(k, 1, q))


def complement_points(big: Subspace, small: Subspace) -> list[Vec]:
    """Representatives w, one per subspace small + <w> of dimension dim(small)+1 inside big."""
    big._check(small)
    # extend the basis of `small` to one of `big`
    ext = list(small.basis)
    for r in big.basis:
        if len(rref(ext + [r], big.q, big.n)) > len(ext):
            ext.append(r)
    extra = ext[small.dim:]
    reps = []
    for c in enumerate_subspaces(len(extra), 1, big.q):
        reps.append(vec_lincomb(c.generator, extra, big.q, big.n))
    return reps


# text forms

def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def format_subspace(a: Subspace) -> str:
    return ";".join(format_vector(r) for r in a.basis)


def parse_vector(text: str, q: int | None = None) -> Vec:
    parts = text.strip().split(",")
    try:
        v = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed vector {text!r}") from None
    if q is not None and any(not 0 <= x < q for x in v):
        raise ValueError(f"vector {text!r} has entries outside [0, {q})")
    return v


def parse_subspace(text: str, q: int, n: int | None = None) -> Subspace:
    text = text.strip()
    if not text:
        if n is None:
            raise ValueError("empty subspace text needs an ambient dimension")
        return zero_space(q, n)
    vecs = [parse_vector(t, q) for t in text.split(";")]
    if n is not None and any(len(v) != n for v in vecs):
        raise ValueError(f"subspace {text!r} is not in F_{q}^{n}")
    return span(vecs, q, n)
