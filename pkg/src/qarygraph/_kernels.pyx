# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: F_q row reduction and F_{q^m} rank.

Same surface as ``_kernels_py``.
"""

from libc.stdlib cimport malloc, free


cdef long _pmod(long a, long q) nogil:
    cdef long r = a % q
    if r < 0:
        r += q
    return r


def rref_mod(rows, int ncols, int q):
    cdef int nrows = len(rows)
    if nrows == 0:
        return ()
    cdef long *m = <long *> malloc(nrows * ncols * sizeof(long))
    cdef long *inv = <long *> malloc(q * sizeof(long))
    if m == NULL or inv == NULL:
        free(m)
        free(inv)
        raise MemoryError()
    cdef int i, j, c, r, piv
    cdef long f, t, tmp
    try:
        inv[0] = 0
        for i in range(1, q):
            inv[i] = pow(i, q - 2, q)
        for i, row in enumerate(rows):
            for j in range(ncols):
                m[i * ncols + j] = _pmod(row[j], q)
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    tmp = m[r * ncols + j]
                    m[r * ncols + j] = m[piv * ncols + j]
                    m[piv * ncols + j] = tmp
            f = inv[m[r * ncols + c]]
            if f != 1:
                for j in range(ncols):
                    m[r * ncols + j] = (m[r * ncols + j] * f) % q
            for i in range(nrows):
                if i != r:
                    t = m[i * ncols + c]
                    if t != 0:
                        for j in range(ncols):
                            m[i * ncols + j] = _pmod(m[i * ncols + j] - t * m[r * ncols + j], q)
            r += 1
            if r == nrows:
                break
        return tuple(tuple(m[i * ncols + j] for j in range(ncols)) for i in range(r))
    finally:
        free(m)
        free(inv)


cdef long _ipow(long b, int e):
    cdef long r = 1
    cdef int i
    for i in range(e):
        r *= b
    return r


cdef class ExtKernel:
    cdef public int q, m
    cdef public long N, neg_log
    cdef long *_exp
    cdef long *_log
    cdef long *_zech

    def __cinit__(self, int q, int m, exp, log):
        cdef long size = _ipow(q, m)
        self._exp = <long *> malloc(size * sizeof(long))
        self._log = <long *> malloc(size * sizeof(long))
        self._zech = <long *> malloc(size * sizeof(long))
        if self._exp == NULL or self._log == NULL or self._zech == NULL:
            raise MemoryError()

    def __init__(self, int q, int m, exp, log):
        cdef long k, s, a, b, p, d
        self.q = q
        self.m = m
        self.N = _ipow(q, m) - 1
        self.neg_log = 0 if q == 2 else self.N // 2
        for k in range(self.N):
            self._exp[k] = exp[k]
        self._log[0] = 0
        for k in range(1, self.N + 1):
            self._log[k] = log[k]
        for k in range(self.N):
            # 1 + alpha^k, digit-wise in base q
            a = 1
            b = self._exp[k]
            s = 0
            p = 1
            for d in range(m):
                s += ((a % q + b % q) % q) * p
                a //= q
                b //= q
                p *= q
            self._zech[k] = self._log[s] if s != 0 else -1

    def __dealloc__(self):
        free(self._exp)
        free(self._log)
        free(self._zech)

    @property
    def exp(self):
        return [self._exp[k] for k in range(self.N)]

    @property
    def log(self):
        return [self._log[k] for k in range(self.N + 1)]

    @property
    def zech(self):
        return [self._zech[k] for k in range(self.N)]

    cdef inline long _add(self, long a, long b) nogil:
        cdef long la, z
        if self.q == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[_pmod(self._log[b] - la, self.N)]
        if z < 0:
            return 0
        return self._exp[(la + z) % self.N]

    cdef inline long _mul(self, long a, long b) nogil:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.N]

    def add(self, long a, long b):
        return self._add(a, b)

    def mul(self, long a, long b):
        return self._mul(a, b)

    cdef int _rank_buf(self, long *m, int nrows, int ncols) nogil:
        cdef int r = 0, c, i, j, piv
        cdef long linv, lt, p, tmp
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    tmp = m[r * ncols + j]
                    m[r * ncols + j] = m[piv * ncols + j]
                    m[piv * ncols + j] = tmp
            linv = self.N - self._log[m[r * ncols + c]]
            for j in range(c, ncols):
                p = m[r * ncols + j]
                if p != 0:
                    m[r * ncols + j] = self._exp[(self._log[p] + linv) % self.N]
            for i in range(r + 1, nrows):
                if m[i * ncols + c] != 0:
                    lt = self._log[m[i * ncols + c]] + self.neg_log
                    for j in range(c, ncols):
                        p = m[r * ncols + j]
                        if p != 0:
                            m[i * ncols + j] = self._add(
                                m[i * ncols + j],
                                self._exp[(lt + self._log[p]) % self.N])
            r += 1
            if r == nrows:
                break
        return r

    def rank(self, rows):
        cdef int nrows = len(rows)
        if nrows == 0:
            return 0
        cdef int ncols = len(rows[0])
        if ncols == 0:
            return 0
        cdef long *m = <long *> malloc(nrows * ncols * sizeof(long))
        if m == NULL:
            raise MemoryError()
        cdef int i, j
        try:
            for i, row in enumerate(rows):
                for j in range(ncols):
                    m[i * ncols + j] = row[j]
            return self._rank_buf(m, nrows, ncols)
        finally:
            free(m)

    def image_rows(self, cols, yrows):
        cdef int n = len(cols)
        cdef int k = len(cols[0]) if n else 0
        cdef int d = len(yrows)
        out = []
        cdef long *g = <long *> malloc((n * k + 1) * sizeof(long))
        cdef long *acc = <long *> malloc((k + 1) * sizeof(long))
        cdef int i, j
        cdef long c
        try:
            for j, col in enumerate(cols):
                for i in range(k):
                    g[j * k + i] = col[i]
            for y in yrows:
                for i in range(k):
                    acc[i] = 0
                for j in range(n):
                    c = y[j]
                    if c != 0:
                        for i in range(k):
                            acc[i] = self._add(acc[i], self._mul(c, g[j * k + i]))
                out.append([acc[i] for i in range(k)])
            return out
        finally:
            free(g)
            free(acc)

    def image_rank(self, cols, yrows):
        cdef int n = len(cols)
        cdef int d = len(yrows)
        if n == 0 or d == 0:
            return 0
        cdef int k = len(cols[0])
        if k == 0:
            return 0
        cdef long *g = <long *> malloc(n * k * sizeof(long))
        cdef long *m = <long *> malloc(d * k * sizeof(long))
        if g == NULL or m == NULL:
            free(g)
            free(m)
            raise MemoryError()
        cdef int i, j, r
        cdef long c
        try:
            for j, col in enumerate(cols):
                for i in range(k):
                    g[j * k + i] = col[i]
            for r, y in enumerate(yrows):
                for i in range(k):
                    m[r * k + i] = 0
                for j in range(n):
                    c = y[j]
                    if c != 0:
                        for i in range(k):
                            m[r * k + i] = self._add(m[r * k + i], self._mul(c, g[j * k + i]))
            return self._rank_buf(m, d, k)
        finally:
            free(g)
            free(m)
