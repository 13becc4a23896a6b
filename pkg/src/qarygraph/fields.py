"""Prime fields F_q and their extensions F_{q^m}.

Elements of F_{q^m} are plain integers: the coordinate tuple
``(c0, ..., c_{m-1})`` with respect to ``(1, a, ..., a^{m-1})`` is stored as
``c0 + c1*q + ... + c_{m-1}*q^{m-1}``.  In particular the constants of F_q
keep their usual values ``0..q-1``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

from .kernels import ExtKernel


class FieldError(ValueError):
    """Rejected field specification or degenerate field operation."""


# Constant-coefficient-first, monic.  Each is primitive (checked by the tests).
DEFAULT_MODULI = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 1, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, int(n ** 0.5) + 1))


_SPEC_RE = re.compile(r"^field q=(\d+) m=(\d+) modulus=(\d+(?:,\d+)*)$")


@dataclass(frozen=True)
class FieldSpec:
    """The tower F_q < F_{q^m} = F_q[x]/(modulus)."""

    q: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))

    def __str__(self):
        return f"field q={self.q} m={self.m} modulus={','.join(map(str, self.modulus))}"

    @classmethod
    def parse(cls, line: str) -> "FieldSpec":
        mo = _SPEC_RE.match(line.strip())
        if not mo:
            raise FieldError(f"malformed field line: {line.strip()!r}")
        q, m = int(mo.group(1)), int(mo.group(2))
        modulus = tuple(int(c) for c in mo.group(3).split(","))
        return cls(q, m, modulus)

    @classmethod
    def default(cls, q: int, m: int) -> "FieldSpec":
        try:
            return cls(q, m, DEFAULT_MODULI[(q, m)])
        except KeyError:
            raise FieldError(f"no built-in modulus for q={q}, m={m}; pass --field") from None


@dataclass(frozen=True)
class FieldReport:
    ok: bool
    irreducible: bool
    order: int  # multiplicative order of the class of x; 0 if x is a zero divisor
    expected_order: int
    factor: tuple[int, ...] | None  # a nontrivial monic factor when reducible
    message: str


# polynomial helpers over F_q, constant coefficient first

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod(num, den, q):
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise FieldError("polynomial division by zero")
    inv_lead = pow(den[-1], q - 2, q)
    quot = [0] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        f = (num[-1] * inv_lead) % q
        quot[shift] = f
        for i, d in enumerate(den):
            num[i + shift] = (num[i + shift] - f * d) % q
        num = _trim(num)
    return _trim(quot), num


def poly_mulmod(a, b, modulus, q):
    """Product of two polynomials reduced modulo ``modulus``."""
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % q
    rem = poly_divmod(prod, modulus, q)[1]
    return rem + [0] * (len(modulus) - 1 - len(rem))


def _find_factor(modulus, q):
    m = len(modulus) - 1
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(q), repeat=deg):
            cand = list(low) + [1]
            if not poly_divmod(modulus, cand, q)[1]:
                return tuple(cand)
    return None


def check_spec(spec: FieldSpec) -> FieldReport:
    """Verify that the modulus is irreducible and that x generates F_{q^m}^*."""
    q, m, mod = spec.q, spec.m, spec.modulus
    expected = q ** m - 1 if q >= 2 else 0

    def reject(msg, irreducible=False, order=0, factor=None):
        return FieldReport(False, irreducible, order, expected, factor, msg)

    if not is_prime(q):
        return reject(f"q={q} is not prime")
    if m < 1:
        return reject(f"m={m} must be at least 1")
    if len(mod) != m + 1:
        return reject(f"modulus has {len(mod)} coefficients, expected m+1={m + 1}")
    if any(not 0 <= c < q for c in mod):
        return reject(f"modulus coefficients must lie in [0, {q})")
    if mod[-1] != 1:
        return reject("modulus is not monic")
    if mod[0] == 0:
        factor = (0, 1)
        return reject("modulus is divisible by x (reducible)", factor=factor)
    factor = _find_factor(mod, q)
    irreducible = factor is None
    # multiplicative order of x modulo the modulus
    one = [1] + [0] * (m - 1)
    x = ([0, 1] + [0] * (m - 2)) if m > 1 else [(-mod[0]) % q]
    cur = list(x)
    order = 1
    while cur != one:
        cur = poly_mulmod(cur, x, mod, q)
        order += 1
        if order > expected:
            order = 0
            break
    if not irreducible:
        return reject(
            f"modulus is reducible: divisible by {_fmt_poly(factor)}",
            irreducible=False, order=order, factor=factor,
        )
    if order != expected:
        return reject(
            f"x is not primitive: multiplicative order {order}, expected {expected}",
            irreducible=True, order=order,
        )
    return FieldReport(True, True, order, expected, None, "accepted")


def _fmt_poly(p):
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        coef = "" if c == 1 and mono else str(c)
        terms.append(coef + ("*" if coef and mono else "") + mono)
    return " + ".join(terms) or "0"


class ExtField:
    """Arithmetic in F_{q^m} for a checked :class:`FieldSpec`."""

    def __init__(self, spec: FieldSpec):
        report = check_spec(spec)
        if not report.ok:
            raise FieldError(f"{spec}: {report.message}")
        self.spec = spec
        self.q = spec.q
        self.m = spec.m
        self.size = spec.q ** spec.m
        self.N = self.size - 1
        exp = []
        mod = list(spec.modulus)
        cur = [1] + [0] * (self.m - 1)
        x = ([0, 1] + [0] * (self.m - 2)) if self.m > 1 else [(-mod[0]) % self.q]
        for _ in range(self.N):
            exp.append(self.element(cur))
            cur = poly_mulmod(cur, x, mod, self.q)
        log = [0] * self.size
        for k, e in enumerate(exp):
            log[e] = k
        self._exp = exp
        self._log = log
        self.kernel = ExtKernel(self.q, self.m, exp, log)
        self.alpha = exp[1 % self.N] if self.N > 1 else exp[0]
        self._neg_log = 0 if self.q == 2 else self.N // 2

    def __repr__(self):
        return f"ExtField({self.spec})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    # coordinates

    def coords(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(a % self.q)
            a //= self.q
        return tuple(out)

    def element(self, coords) -> int:
        val = 0
        for c in reversed(list(coords)):
            val = val * self.q + (c % self.q)
        return val

    # arithmetic

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.kernel.add(a, b)

    def neg(self, a: int) -> int:
        if self.q == 2 or not a:
            return a
        return self._exp[(self._log[a] + self._neg_log) % self.N]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.N]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in F_{q^m}")
        return self._exp[(-self._log[a]) % self.N]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if not a:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % self.N]

    def alpha_pow(self, k: int) -> int:
        if k < 0:
            raise ValueError("alpha_pow needs k >= 0")
        return self._exp[k % self.N]

    def log(self, a: int) -> int:
        """Discrete logarithm to base alpha, in [0, q^m - 1)."""
        if not a:
            raise ZeroDivisionError("discrete log of zero")
        return self._log[a]

    def polymul(self, a: int, b: int) -> int:
        """Reference product: polynomial multiplication reduced by the modulus."""
        prod = poly_mulmod(list(self.coords(a)), list(self.coords(b)), list(self.spec.modulus), self.q)
        return self.element(prod)

    def is_base(self, a: int) -> bool:
        """True when ``a`` lies in the prime subfield F_q."""
        return 0 <= a < self.q

    def elements(self):
        return range(self.size)

    def nonzero(self):
        return range(1, self.size)

    # text forms

    def format(self, a: int, coords: bool = False) -> str:
        if coords:
            return "(" + ",".join(map(str, self.coords(a))) + ")"
        if not a:
            return "0"
        return f"a^{self.log(a)}"

    def parse(self, token: str) -> int:
        tok = token.strip()
        neg = False
        if tok.startswith("-") and len(tok) > 1:
            neg = True
            tok = tok[1:]
        if tok.startswith("(") and tok.endswith(")"):
            parts = [p for p in tok[1:-1].split(",") if p.strip()]
            if len(parts) != self.m:
                raise FieldError(f"coordinate entry {token!r} needs {self.m} coordinates")
            try:
                cs = [int(p) for p in parts]
            except ValueError:
                raise FieldError(f"bad coordinate entry {token!r}") from None
            if any(not 0 <= c < self.q for c in cs):
                raise FieldError(f"coordinates of {token!r} must lie in [0, {self.q})")
            val = self.element(cs)
        elif tok in ("a", "alpha"):
            val = self.alpha_pow(1)
        elif tok.startswith("a^") or tok.startswith("alpha^"):
            try:
                k = int(tok.split("^", 1)[1])
            except ValueError:
                raise FieldError(f"bad power entry {token!r}") from None
            val = self.alpha_pow(k % self.N)
        elif tok.isdigit() and int(tok) < self.q:
            val = int(tok)
        else:
            raise FieldError(f"unrecognised field entry {token!r}")
        return self.neg(val) if neg else val

    @cached_property
    def u(self) -> tuple[int, ...]:
        return u_vector(self)


def u_vector(field: ExtField) -> tuple[int, ...]:
    """The anchor vector (1, a, ..., a^{m-1})."""
    return tuple(field.alpha_pow(i) for i in range(field.m))


def split_entries(text: str) -> list[str]:
    """Split a column/row of entries on commas or whitespace outside parentheses."""
    out, buf, depth = [], [], 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and (ch == "," or ch.isspace()):
            if buf:
                out.append("".join(buf))
                buf = []
            continue
        buf.append(ch)
    if buf:
        out.append("".join(buf))
    return out
