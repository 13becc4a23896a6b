"""Pure-Python hot kernels.

Mirrors ``_kernels.pyx`` function for function; ``qarygraph.kernels`` picks
one of the two at import time.
"""

_INV_CACHE = {}


def _inverses(q):
    inv = _INV_CACHE.get(q)
    if inv is None:
        inv = [0] + [pow(x, q - 2, q) for x in range(1, q)]
        _INV_CACHE[q] = inv
    return inv


def rref_mod(rows, ncols, q):
    """Reduced row-echelon form over F_q; returns the nonzero rows as tuples."""
    m = [[x % q for x in r] for r in rows]
    nrows = len(m)
    if nrows == 0:
        return ()
    inv = _inverses(q)
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        f = inv[row[c]]
        if f != 1:
            row = [(x * f) % q for x in row]
            m[r] = row
        for i in range(nrows):
            if i != r:
                t = m[i][c]
                if t:
                    m[i] = [(a - t * b) % q for a, b in zip(m[i], row)]
        r += 1
        if r == nrows:
            break
    return tuple(tuple(m[i]) for i in range(r))


class ExtKernel:
    """Elimination over F_{q^m} with elements encoded as base-q integers.

    ``exp[k]`` is the encoding of alpha^k and ``log`` its inverse table
    (``log[0]`` is unused).
    """

    def __init__(self, q, m, exp, log):
        self.q = q
        self.m = m
        self.N = q ** m - 1
        self.exp = list(exp)
        self.log = list(log)
        self.neg_log = 0 if q == 2 else self.N // 2
        zech = [-1] * self.N
        for k in range(self.N):
            s = _digit_add(1, self.exp[k], q, m)
            zech[k] = self.log[s] if s else -1
        self.zech = zech

    def add(self, a, b):
        if self.q == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        la = self.log[a]
        z = self.zech[(self.log[b] - la) % self.N]
        if z < 0:
            return 0
        return self.exp[(la + z) % self.N]

    def mul(self, a, b):
        if not a or not b:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % self.N]

    def rank(self, rows):
        """Rank over F_{q^m} of a matrix given as a sequence of rows."""
        m = [list(r) for r in rows]
        nrows = len(m)
        if nrows == 0:
            return 0
        ncols = len(m[0])
        exp, log, N = self.exp, self.log, self.N
        add = self.add
        neg_log = self.neg_log
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i][c]:
                    piv = i
                    break
            if piv < 0:
                continue
            m[r], m[piv] = m[piv], m[r]
            prow = m[r]
            linv = N - log[prow[c]]
            prow = [exp[(log[x] + linv) % N] if x else 0 for x in prow]
            m[r] = prow
            for i in range(r + 1, nrows):
                t = m[i][c]
                if t:
                    lt = log[t] + neg_log
                    row = m[i]
                    for j in range(c, ncols):
                        p = prow[j]
                        if p:
                            row[j] = add(row[j], exp[(lt + log[p]) % N])
            r += 1
            if r == nrows:
                break
        return r

    def image_rows(self, cols, yrows):
        """Rows of (G Y^T)^T: each F_q-row y of Y mapped to sum_j y_j G[:, j]."""
        k = len(cols[0]) if cols else 0
        out = []
        for y in yrows:
            acc = [0] * k
            for j, c in enumerate(y):
                if c:
                    col = cols[j]
                    for i in range(k):
                        g = col[i]
                        if g:
                            acc[i] = self.add(acc[i], self.mul(c, g))
            out.append(acc)
        return out

    def image_rank(self, cols, yrows):
        """rank(G Y^T) for G given by its columns and Y by its rows over F_q."""
        if not yrows or not cols:
            return 0
        return self.rank(self.image_rows(cols, yrows))


def _digit_add(a, b, q, m):
    out = 0
    p = 1
    for _ in range(m):
        out += ((a % q + b % q) % q) * p
        a //= q
        b //= q
        p *= q
    return out
