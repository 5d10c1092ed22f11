"""Dimension invariants of objects: growth, symmetric-group, alternating.

For X in Ver_p the invariants in play are

  * length(X), the number of simple summands;
  * gd(X), the growth rate of tensor-power lengths, equal to the
    Frobenius-Perron dimension (an element of O_p);
  * sd, the largest n for which the group algebra of S_n acts faithfully
    on the n-th tensor power (exposed only as the bounded predicate
    ``sd_at_least``, exact sd is exponential);
  * ad(X), the largest n with a nonzero alternating power.

For modules over the cyclic group the growth rate delta counts
non-projective indecomposable summands of tensor powers; it is the
Frobenius-Perron dimension of the semisimplified module and is therefore
a cyclotomic integer sum([k]_q m_k) over the stable block content m.
The alternating-power generating function factors over F_p as
prod_k (1 + z^(p^k))^(t_k), and the digits t_k assemble the p-adic
dimension, which for Ver_p equals ad.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from . import gfp
from .config import check_cap
from .cyclotomic import CycNum, _solve_rational, basis_length, qint, qint_at_power
from .errors import ValidationError, VerlindeLabError
from .fusion import VerObject, cat_dim_mod_p, fpdim, fuse, tensor_power_length
from .gfp import check_prime
from .modrep import (
    CyclicRep,
    JordanType,
    TensorPower,
    alt_power_ver,
    exterior_coinvariants,
    jordan_type_of,
    symmetric_power,
)


@dataclass(frozen=True)
class PadicDim:
    """A p-adic dimension given by its digit sequence (t_0, t_1, ...)."""

    p: int
    digits: tuple

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "digits", tuple(int(t) for t in self.digits))
        if any(not 0 <= t < self.p for t in self.digits):
            raise ValidationError(f"digits must lie in 0..{self.p - 1}")

    @property
    def value(self):
        return sum(t * self.p**k for k, t in enumerate(self.digits))

    def to_json(self):
        return {"p": self.p, "digits": list(self.digits), "value": self.value}


@dataclass(frozen=True)
class JordanContent:
    """Stable block multiplicities m_1..m_{p-1} of a module."""

    p: int
    m: tuple

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if len(self.m) != self.p - 1:
            raise ValidationError(f"need {self.p - 1} multiplicities")
        if any(x < 0 for x in self.m):
            raise ValidationError("multiplicities must be non-negative")

    def to_json(self):
        return {"p": self.p, "m": list(self.m)}


def gd(X):
    """Growth rate of tensor-power lengths = Frobenius-Perron dimension."""
    return fpdim(X)


def gd_sequence(X, n_max=25):
    """Empirical convergents length(X^(x)n)^(1/n) for n = 1..n_max."""
    out = []
    acc = VerObject.unit(X.p)
    for n in range(1, n_max + 1):
        acc = fuse(acc, X)
        out.append(acc.length() ** (1.0 / n))
    return out


def ad(X, cap=None, verify=True):
    """Largest n with a nonzero alternating power of X in Ver_p.

    Equals the dimension D of the projective-free lift.  With
    verify=True (the default) this is certified by brute force: the D-th
    alternating power is checked nonzero and the (D+1)-st zero, which
    pins the supremum since vanishing is inherited by higher powers.
    verify=False returns the closed form without touching tensor powers
    (useful when D+1 exceeds the cap).
    """
    if X.is_zero():
        raise ValidationError("ad of the zero object is undefined")
    D = X.lift_dimension()
    if verify:
        if alt_power_ver(X, D, cap).is_zero():
            raise VerlindeLabError(f"internal inconsistency: A^{D} of {X!r} vanished")
        if not alt_power_ver(X, D + 1, cap).is_zero():
            raise VerlindeLabError(f"internal inconsistency: A^{D + 1} of {X!r} is nonzero")
    return D


def sd_at_least(V, n, cap=None):
    """Does the group algebra of S_n act faithfully on V^(x)n?

    Stacks the n! permutation operators as vectors and tests for full
    rank over GF(p).
    """
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    if V.dim == 0:
        return False
    if n == 1:
        return True
    check_cap(V.dim ** (2 * n), cap)
    T = TensorPower(V, n, cap)
    size = factorial(n)
    M = np.zeros((size, T.dim * T.dim), dtype=np.int64)
    cols = np.arange(T.dim)
    for r, (perm, _sign) in enumerate(T.symmetric_group()):
        M[r, perm * T.dim + cols] = 1
    return gfp.rank(M, V.p) == size


def delta_content(V):
    """Stable block content m_1..m_{p-1} of a module or Jordan type."""
    jt = V if isinstance(V, JordanType) else jordan_type_of(V)
    return JordanContent(jt.p, jt.blocks[:-1])


def delta(V):
    """Growth rate of the count of non-projective summands of tensor powers.

    Exactly sum over k < p of m_k [k]_q for the stable block content m.
    """
    content = delta_content(V)
    total = CycNum.zero(content.p)
    for k, m in enumerate(content.m, start=1):
        if m:
            total = total + m * qint(content.p, k)
    return total


def delta_square_difference(V, cap=None):
    """Oracle for delta(S^2 V) - delta(wedge^2 V), p > 2 only."""
    if V.p == 2:
        raise ValidationError("the symmetric/exterior square identity needs p > 2")
    s2 = jordan_type_of(symmetric_power(V, 2, cap))
    w2 = jordan_type_of(exterior_coinvariants(V, 2, cap))
    return delta(s2) - delta(w2)


def second_identity_rhs(content):
    """sum over k of [k]_(q^2) m_k for a stable block content."""
    total = CycNum.zero(content.p)
    for k, m in enumerate(content.m, start=1):
        if m:
            total = total + m * qint_at_power(content.p, k, 2)
    return total


def recover_jordan_content(p, d1, d2):
    """Invert the pair (delta(V), delta(S^2 V) - delta(wedge^2 V)).

    d1 pins the symmetrized sums m_k + m_{p-k} and d2, expanded over the
    quantum integers at q^2, pins the antisymmetrized differences; the
    combined exact linear system has a unique solution, which must be a
    vector of non-negative integers for inputs coming from a module.
    """
    check_prime(p)
    if p == 2:
        raise ValidationError("content recovery needs p > 2")
    if d1.p != p or d2.p != p:
        raise ValidationError("mismatched p in recovery inputs")
    B = basis_length(p)
    columns = []
    for k in range(1, p):
        col = list(qint(p, k).coeffs) + list(qint_at_power(p, k, 2).coeffs)
        columns.append(col)
    matrix = [[columns[k][row] for k in range(p - 1)] for row in range(2 * B)]
    rhs = list(d1.coeffs) + list(d2.coeffs)
    solution = _solve_rational(matrix, rhs)
    if solution is None:
        raise ValidationError("inconsistent system: inputs do not come from a module")
    if any(f.denominator != 1 or f < 0 for f in solution):
        raise ValidationError("no non-negative integer content matches the inputs")
    return JordanContent(p, tuple(int(f) for f in solution))


def _poly_trim(a):
    a = [x for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _div_one_plus_z(a, p):
    """Divide by (1 + z) over F_p; returns (quotient, remainder_is_zero)."""
    n = len(a) - 1
    if n < 0:
        return [], True
    q = [0] * n
    carry = 0
    for k in range(n, 0, -1):
        q[k - 1] = (a[k] - carry) % p
        carry = q[k - 1]
    rem = (a[0] - carry) % p
    return q, rem == 0


def padic_dimension(series, p):
    """Digits t_k factoring a power series as prod (1 + z^(p^k))^(t_k).

    The input lists the coefficients of the series over F_p starting with
    the constant term, which must be 1.  At each level the digit is the
    unique residue t with series / (1+z)^t supported on powers of z^p;
    the series is then compressed by z -> z^(1/p) and the extraction
    recurses.  Raises when no residue works (the series is not of the
    required product form).
    """
    check_prime(p)
    cur = _poly_trim([int(c) % p for c in series])
    if not cur or cur[0] != 1:
        raise ValidationError("series must have constant term 1")
    digits = []
    while cur != [1]:
        found = None
        for t in range(p):
            poly = cur
            ok = True
            for _ in range(t):
                poly, exact = _div_one_plus_z(poly, p)
                if not exact or not poly:
                    ok = False
                    break
            if not ok:
                continue
            if all(c == 0 for k, c in enumerate(poly) if k % p):
                found = t
                cur = _poly_trim(poly[::p])
                break
        if found is None:
            raise ValidationError("series is not a product of (1 + z^(p^k))^(t_k)")
        if not cur or cur[0] != 1:
            raise ValidationError("series is not a product of (1 + z^(p^k))^(t_k)")
        digits.append(found)
    while digits and digits[-1] == 0:
        digits.pop()
    return PadicDim(p, tuple(digits))


def padic_series(digits, p):
    """Expand prod (1 + z^(p^k))^(t_k) over F_p (inverse of digit extraction)."""
    check_prime(p)
    poly = [1]
    for k, t in enumerate(digits):
        step = p**k
        for _ in range(int(t)):
            factor_len = len(poly) + step
            out = [0] * factor_len
            for i, c in enumerate(poly):
                out[i] = (out[i] + c) % p
                out[i + step] = (out[i + step] + c) % p
            poly = out
    return _poly_trim(poly)


def alt_power_series(X, cap=None):
    """Categorical dimensions mod p of the alternating powers of X.

    Coefficient j is dim(A^j X) in F_p; the polynomial ends at the lift
    dimension, beyond which alternating powers vanish.
    """
    D = X.lift_dimension()
    series = [1]
    for j in range(1, D + 1):
        series.append(cat_dim_mod_p(alt_power_ver(X, j, cap)))
    return _poly_trim(series)


def padic_dimension_of(X, cap=None):
    """p-adic dimension of a Ver_p object from its alternating powers."""
    if X.is_zero():
        return PadicDim(X.p, ())
    return padic_dimension(alt_power_series(X, cap), X.p)
