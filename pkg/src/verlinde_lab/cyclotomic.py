"""Exact arithmetic in the ring O_p = Z[2cos(pi/p)].

Elements are integer combinations of the quantum integers

    [m]_q = sin(m*pi/p) / sin(pi/p),   q = exp(i*pi/p),

for 1 <= m <= (p-1)/2, which form a Z-basis of O_p.  For p = 2 and p = 3
the ring degenerates to Z and the basis is the single element [1]_q = 1.

Multiplication uses the product-to-sum rule

    [a]_q * [b]_q = [|a-b|+1]_q + [|a-b|+3]_q + ... + [a+b-1]_q

followed by index reduction with [0]_q = [p]_q = 0, [p+m]_q = -[m]_q,
[p-m]_q = [m]_q and 2p-periodicity.  Equality is coefficient-wise and
exact; the numeric evaluation at q = exp(i*pi/p) is interval arithmetic
used only for display and ordering, never for equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import ExactDivisionError, ValidationError
from .gfp import check_prime


def basis_length(p):
    """Number of Z-basis elements of O_p ([1]_q only for p = 2, 3)."""
    return 1 if p <= 3 else (p - 1) // 2


def _reduce_index(p, k):
    """Reduce [k]_q to (sign, m) with m a basis index; (0, 0) means zero."""
    r = k % (2 * p)
    if r == 0 or r == p:
        return 0, 0
    sign = 1
    if r > p:
        sign = -1
        r -= p
    if p == 2:
        return sign, 1
    half = (p - 1) // 2
    if r > half:
        r = p - r
    return sign, r


class CycNum:
    """An element of O_p in the quantum-integer basis."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        check_prime(p)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != basis_length(p):
            raise ValidationError(
                f"need {basis_length(p)} coefficients for p={p}, got {len(coeffs)}"
            )
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p):
        return cls(p, (0,) * basis_length(p))

    @classmethod
    def one(cls, p):
        return cls(p, (1,) + (0,) * (basis_length(p) - 1))

    @classmethod
    def from_integer(cls, p, n):
        return cls(p, (int(n),) + (0,) * (basis_length(p) - 1))

    def _require_same_p(self, other):
        if not isinstance(other, CycNum):
            raise TypeError(f"expected CycNum, got {type(other).__name__}")
        if self.p != other.p:
            raise ValidationError(f"mismatched p: {self.p} vs {other.p}")

    def __add__(self, other):
        self._require_same_p(other)
        return CycNum(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._require_same_p(other)
        return CycNum(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return CycNum(self.p, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycNum(self.p, tuple(other * a for a in self.coeffs))
        self._require_same_p(other)
        p = self.p
        out = [0] * basis_length(p)
        for m, cm in enumerate(self.coeffs, start=1):
            if cm == 0:
                continue
            for n, cn in enumerate(other.coeffs, start=1):
                if cn == 0:
                    continue
                for k in range(abs(m - n) + 1, m + n, 2):
                    sign, idx = _reduce_index(p, k)
                    if sign:
                        out[idx - 1] += sign * cm * cn
        return CycNum(p, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_integer(self):
        """True when the element lies in Z, i.e. only [1]_q contributes."""
        return all(c == 0 for c in self.coeffs[1:])

    def integer_value(self):
        if not self.is_integer():
            raise ValidationError(f"{self} is not an integer")
        return self.coeffs[0]

    def render(self):
        """Textual form "a1*[1] + a2*[2] + ..." (plain integer when in Z)."""
        if self.is_zero():
            return "0"
        if self.is_integer():
            return str(self.coeffs[0])
        parts = []
        for m, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            term = f"{abs(c)}*[{m}]"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"CycNum(p={self.p}, {self.render()})"

    def to_json(self):
        return {"p": self.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), data["coeffs"])


def qint(p, k):
    """The quantum integer [k]_q reduced to the basis of O_p."""
    check_prime(p)
    sign, idx = _reduce_index(p, k)
    coeffs = [0] * basis_length(p)
    if sign:
        coeffs[idx - 1] = sign
    return CycNum(p, coeffs)


def mul(a, b):
    return a * b


def _solve_rational(matrix, rhs):
    """Exact solve of a square rational system; returns None when singular."""
    n = len(rhs)
    A = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    row = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(row, n) if A[r][col] != 0), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        inv = 1 / A[row][col]
        A[row] = [x * inv for x in A[row]]
        for r in range(n):
            if r != row and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[row])]
        pivots.append(col)
        row += 1
    if row < n:
        # singular: consistent only if the remaining rows vanished
        for r in range(row, n):
            if A[r][n] != 0:
                return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = A[r][n]
    return x


def exact_div(a, b):
    """Exact quotient a / b in O_p; raises ExactDivisionError otherwise."""
    a._require_same_p(b)
    if b.is_zero():
        raise ExactDivisionError("division by zero in O_p")
    p = a.p
    d = basis_length(p)
    basis = [CycNum(p, tuple(1 if j == i else 0 for j in range(d))) for i in range(d)]
    cols = [(b * e).coeffs for e in basis]
    matrix = [[cols[j][i] for j in range(d)] for i in range(d)]
    x = _solve_rational(matrix, list(a.coeffs))
    if x is None or any(f.denominator != 1 for f in x):
        raise ExactDivisionError(f"{b.render()} does not divide {a.render()} in O_p")
    return CycNum(p, tuple(int(f) for f in x))


def qint_at_power(p, k, a):
    """[k]_{q^a} = [a*k]_q / [a]_q, defined whenever p does not divide a."""
    check_prime(p)
    if a % p == 0:
        raise ValidationError(f"[k]_(q^a) undefined for p | a (p={p}, a={a})")
    return exact_div(qint(p, a * k), qint(p, a))


@dataclass(frozen=True)
class Interval:
    """A closed real interval with arbitrary-precision endpoints."""

    lo: object
    hi: object

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def __contains__(self, x):
        return self.lo <= x <= self.hi

    def strictly_positive(self):
        return self.lo > 0

    def strictly_negative(self):
        return self.hi < 0

    def __repr__(self):
        return f"Interval({mpmath.nstr(self.lo, 17)}, {mpmath.nstr(self.hi, 17)})"


def numeric_eval(a, precision=128):
    """Interval enclosing the value of *a* at q = exp(i*pi/p).

    Display and ordering only; equality of CycNum is always exact.
    """
    if precision < 32:
        raise ValidationError(f"precision must be >= 32 bits, got {precision}")
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = precision
        pi = iv.pi
        total = iv.mpf(0)
        denom = iv.sin(pi / a.p)
        for m, c in enumerate(a.coeffs, start=1):
            if c:
                total += c * iv.sin(pi * m / a.p)
        value = total / denom
        lo_raw, hi_raw = value._mpi_  # exact endpoint data of the enclosure
        with mpmath.workprec(precision + 16):
            return Interval(mpmath.mpf(lo_raw), mpmath.mpf(hi_raw))
    finally:
        iv.prec = old


def compare(a, b, precision=128):
    """Sign of a - b (-1, 0, +1); exact zero test, intervals otherwise.

    The precision doubles automatically until the sign is determined,
    which always terminates because the basis is Z-linearly independent.
    """
    a._require_same_p(b)
    if a == b:
        return 0
    diff = a - b
    prec = precision
    while True:
        box = numeric_eval(diff, prec)
        if box.strictly_positive():
            return 1
        if box.strictly_negative():
            return -1
        prec *= 2


def geq(a, b, precision=128):
    return compare(a, b, precision) >= 0
