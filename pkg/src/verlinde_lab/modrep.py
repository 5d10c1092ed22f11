"""Exact GF(p) linear algebra for modules over the cyclic group of order p.

A module is a matrix realization: the generator acts as 1 + N for a
nilpotent N with N^p = 0.  Isomorphism classes are Jordan types (block
multiplicities for block sizes 1..p).  The module implements tensor
products, the symmetric-group machinery on tensor powers (skew-symmetrizer
images, divided/symmetric/exterior powers), the iterated Frobenius
construction on invariants-to-coinvariants images, semisimplification and
images under it via the trace pairing modulo negligibles.

Everything here is the brute-force side of the library: the closed fusion
formulas elsewhere are validated against these computations.

Tensor-power conventions: basis vectors of V^(x)n are indexed by digit
tuples; a permutation acts by permuting tensor positions, so every group
element is a permutation of basis indices and the skew-symmetrizer is an
integer combination of index permutations.  Divided powers (joint fixed
vectors) and symmetric powers (coinvariants) are computed on the orbit
decomposition of the index set, which realizes exactly the fixed subspace
and the quotient by the span of (s - 1)-images without large
eliminations.
"""

from __future__ import annotations

import itertools
from functools import reduce

import numpy as np

from . import gfp
from .config import check_cap
from .errors import ValidationError
from .fusion import VerObject, parse_terms
from .gfp import check_prime


class JordanType:
    """Multiset of Jordan block sizes (1..p) as a multiplicity vector."""

    __slots__ = ("p", "blocks")

    def __init__(self, p, blocks):
        check_prime(p)
        blocks = tuple(int(b) for b in blocks)
        if len(blocks) != p:
            raise ValidationError(f"need {p} block multiplicities for p={p}, got {len(blocks)}")
        if any(b < 0 for b in blocks):
            raise ValidationError("block multiplicities must be non-negative")
        self.p = p
        self.blocks = blocks

    @classmethod
    def zero(cls, p):
        return cls(p, (0,) * p)

    @classmethod
    def single(cls, p, size, count=1):
        if not 1 <= size <= p:
            raise ValidationError(f"block size must be in 1..{p}, got {size}")
        return cls(p, tuple(count if s == size else 0 for s in range(1, p + 1)))

    @classmethod
    def parse(cls, p, text):
        """Parse shorthand like "J2 + 2*J5"."""
        if text.strip() == "0":
            return cls.zero(p)
        terms = parse_terms(text, "J")
        blocks = [0] * p
        for size, count in terms.items():
            if not 1 <= size <= p:
                raise ValidationError(f"J{size} is not a block size for p={p}")
            blocks[size - 1] += count
        return cls(p, blocks)

    def __add__(self, other):
        if self.p != other.p:
            raise ValidationError(f"mismatched p: {self.p} vs {other.p}")
        return JordanType(self.p, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __eq__(self, other):
        if not isinstance(other, JordanType):
            return NotImplemented
        return self.p == other.p and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.p, self.blocks))

    @property
    def dim(self):
        return sum(s * b for s, b in enumerate(self.blocks, start=1))

    def stable(self):
        """Erase the projective blocks J_p."""
        return JordanType(self.p, self.blocks[:-1] + (0,))

    def non_projective_count(self):
        return sum(self.blocks[:-1])

    def render(self):
        if all(b == 0 for b in self.blocks):
            return "0"
        parts = []
        for s, b in enumerate(self.blocks, start=1):
            if b == 1:
                parts.append(f"J{s}")
            elif b > 1:
                parts.append(f"{b}*J{s}")
        return " + ".join(parts)

    def __repr__(self):
        return f"JordanType(p={self.p}, {self.render()})"

    def to_json(self):
        return {"p": self.p, "blocks": list(self.blocks)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), data["blocks"])


class CyclicRep:
    """A module over k[C_p]: the generator acts as 1 + N with N^p = 0."""

    __slots__ = ("p", "n")

    def __init__(self, p, nilpotent, *, check=True):
        check_prime(p)
        N = gfp.as_gfp(nilpotent, p) if np.size(nilpotent) else np.zeros((0, 0), dtype=np.int64)
        if N.shape[0] != N.shape[1]:
            raise ValidationError("nilpotent matrix must be square")
        if check and N.size and np.any(gfp.matpow(N, p, p)):
            raise ValidationError(f"matrix is not nilpotent of order <= {p}")
        self.p = p
        self.n = N

    @property
    def dim(self):
        return self.n.shape[0]

    @property
    def g(self):
        """Action of the group generator, 1 + N."""
        return np.mod(self.n + np.eye(self.dim, dtype=np.int64), self.p)

    @classmethod
    def trivial(cls, p, m):
        return cls(p, np.zeros((m, m), dtype=np.int64), check=False)

    @classmethod
    def jordan_block(cls, p, size):
        if not 1 <= size <= p:
            raise ValidationError(f"block size must be in 1..{p}, got {size}")
        N = np.zeros((size, size), dtype=np.int64)
        for k in range(size - 1):
            N[k, k + 1] = 1
        return cls(p, N, check=False)

    @classmethod
    def from_jordan_type(cls, jt):
        mats = []
        for size, count in enumerate(jt.blocks, start=1):
            mats.extend(cls.jordan_block(jt.p, size).n for _ in range(count))
        if not mats:
            return cls(jt.p, np.zeros((0, 0), dtype=np.int64), check=False)
        dim = sum(m.shape[0] for m in mats)
        N = np.zeros((dim, dim), dtype=np.int64)
        pos = 0
        for m in mats:
            s = m.shape[0]
            N[pos : pos + s, pos : pos + s] = m
            pos += s
        return cls(jt.p, N, check=False)

    def conjugate(self, S):
        """Isomorphic realization S (1+N) S^-1 - 1."""
        Sinv = gfp.inverse(S, self.p)
        return CyclicRep(self.p, gfp.matmul(gfp.matmul(S, self.n, self.p), Sinv, self.p), check=False)

    def __repr__(self):
        return f"CyclicRep(p={self.p}, dim={self.dim})"

    def to_json(self):
        return {"p": self.p, "nilpotent": self.n.tolist()}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), data["nilpotent"])


def direct_sum(V, W):
    if V.p != W.p:
        raise ValidationError(f"mismatched p: {V.p} vs {W.p}")
    d = V.dim + W.dim
    N = np.zeros((d, d), dtype=np.int64)
    N[: V.dim, : V.dim] = V.n
    N[V.dim :, V.dim :] = W.n
    return CyclicRep(V.p, N, check=False)


def tensor(V, W, cap=None):
    """Kronecker realization of the tensor product.

    The generator acts as g (x) g, so the nilpotent part is
    N (x) 1 + 1 (x) N + N (x) N.
    """
    if V.p != W.p:
        raise ValidationError(f"mismatched p: {V.p} vs {W.p}")
    check_cap(V.dim * W.dim, cap)
    g = gfp.kron(V.g, W.g, V.p)
    N = np.mod(g - np.eye(V.dim * W.dim, dtype=np.int64), V.p)
    return CyclicRep(V.p, N, check=False)


def rank_sequence(V):
    """Ranks of N^r for r = 0..p."""
    p = V.p
    ranks = [V.dim]
    power = np.eye(V.dim, dtype=np.int64)
    for _ in range(p):
        power = gfp.matmul(power, V.n, p)
        r = gfp.rank(power, p)
        ranks.append(r)
        if r == 0:
            break
    while len(ranks) < p + 2:
        ranks.append(0)
    return ranks


def jordan_type_of(V):
    """Jordan type from the rank sequence of the nilpotent.

    The multiplicity of J_s is rank(N^(s-1)) - 2 rank(N^s) + rank(N^(s+1)).
    """
    p = V.p
    ranks = rank_sequence(V)
    blocks = [ranks[s - 1] - 2 * ranks[s] + ranks[s + 1] for s in range(1, p + 1)]
    if any(b < 0 for b in blocks):
        raise ValidationError("rank sequence is not that of a nilpotent matrix")
    return JordanType(p, blocks)


def jordan_type_at(matrix, alpha, p):
    """Jordan type of a user-supplied nilpotent acting on a module.

    *matrix* is any square matrix realization the nilpotent is supposed to
    live on (e.g. the generator action); *alpha* must satisfy alpha^p = 0
    and commute with it.
    """
    check_prime(p)
    M = gfp.as_gfp(matrix, p)
    A = gfp.as_gfp(alpha, p)
    if M.shape != A.shape or M.shape[0] != M.shape[1]:
        raise ValidationError("matrix and alpha must be square of the same size")
    if np.any(gfp.matpow(A, p, p)):
        raise ValidationError("alpha^p != 0")
    if not np.array_equal(gfp.matmul(M, A, p), gfp.matmul(A, M, p)):
        raise ValidationError("alpha does not commute with the module structure")
    return jordan_type_of(CyclicRep(p, A, check=False))


def _perm_parity(perm):
    seen = [False] * len(perm)
    parity = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        parity ^= (length - 1) & 1
    return parity


class TensorPower:
    """The space V^(x)n with its symmetric-group and C_p actions.

    Permutations act by permuting tensor positions, hence by permuting the
    digit-tuple basis; ``perm_indices(s)`` returns the index map pi with
    (P_s v) = v[pi].
    """

    def __init__(self, base, n, cap=None):
        if n < 1:
            raise ValidationError(f"tensor power needs n >= 1, got {n}")
        self.base = base
        self.n = n
        self.p = base.p
        self.d = base.dim
        self.dim = base.dim**n
        check_cap(self.dim, cap)
        grids = np.indices((self.d,) * n)
        self.tuples = grids.reshape(n, -1).T.astype(np.int64)
        self._places = (self.d ** np.arange(n - 1, -1, -1)).astype(np.int64)
        self._orbit_cache = None
        self._nilpotent = None

    def perm_indices(self, s):
        """Index map of the operator permuting tensor positions by *s*."""
        s = tuple(s)
        if sorted(s) != list(range(self.n)):
            raise ValidationError(f"not a permutation of 0..{self.n - 1}: {s}")
        return self.tuples[:, list(s)] @ self._places

    def transposition(self, i):
        """Adjacent transposition of positions i and i+1 (0-based)."""
        if not 0 <= i < self.n - 1:
            raise ValidationError(f"transposition index out of range: {i}")
        s = list(range(self.n))
        s[i], s[i + 1] = s[i + 1], s[i]
        return self.perm_indices(s)

    def symmetric_group(self):
        """Yield (index map, sign) over all n! permutation operators."""
        for s in itertools.permutations(range(self.n)):
            yield self.perm_indices(s), -1 if _perm_parity(s) else 1

    def apply_g(self, M):
        """Apply the C_p generator g (x) ... (x) g to columns of M."""
        return self._apply_base_power(self.base.g, M)

    def _apply_base_power(self, h, M):
        d, n, p = self.d, self.n, self.p
        X = np.asarray(M, dtype=np.int64).reshape((d,) * n + (-1,))
        for k in range(n):
            X = np.moveaxis(np.tensordot(h, X, axes=([1], [k])), 0, k)
            X = np.mod(X, p)
        return X.reshape(self.dim, -1)

    def nilpotent(self):
        """The nilpotent of the tensor power, (1+N)^(x)n - 1, as a matrix."""
        if self._nilpotent is None:
            eye = np.eye(self.dim, dtype=np.int64)
            self._nilpotent = np.mod(self.apply_g(eye) - eye, self.p)
        return self._nilpotent

    def nilpotent_powers(self, imax):
        """Matrices of N^i for i = 0..imax via binomial sums of g-powers.

        N^i = sum_k C(i,k) (-1)^(i-k) g^(x n)k applied to the identity;
        much cheaper than repeated matrix products at this size.
        """
        from math import comb

        p = self.p
        eye = np.eye(self.dim, dtype=np.int64)
        gpowers = [eye]
        for k in range(1, imax + 1):
            h = gfp.matpow(self.base.g, k, p)
            gpowers.append(self._apply_base_power(h, eye))
        out = [eye]
        for i in range(1, imax + 1):
            acc = np.zeros_like(eye)
            for k in range(i + 1):
                coeff = (comb(i, k) * (-1) ** (i - k)) % p
                if coeff:
                    acc = acc + coeff * gpowers[k]
            out.append(np.mod(acc, p))
        return out

    def apply_skew(self, M):
        """Apply the skew-symmetrizer (signed sum over all n! operators)."""
        M = np.asarray(M, dtype=np.int64)
        acc = np.zeros_like(M)
        for perm, sign in self.symmetric_group():
            acc += sign * M[perm]
        return np.mod(acc, self.p)

    def skew_matrix(self):
        """The skew-symmetrizer as an explicit dim x dim matrix."""
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        cols = np.arange(self.dim)
        for perm, sign in self.symmetric_group():
            np.add.at(M, (perm, cols), sign)
        return np.mod(M, self.p)

    def as_cyclic_rep(self):
        return CyclicRep(self.p, self.nilpotent(), check=False)

    # -- orbit combinatorics of the index action ------------------------

    def _orbits(self):
        if self._orbit_cache is None:
            sorted_tuples = np.sort(self.tuples, axis=1)
            _, first, inverse = np.unique(
                sorted_tuples, axis=0, return_index=True, return_inverse=True
            )
            inverse = inverse.reshape(-1)
            distinct_mask = np.all(np.diff(np.sort(self.tuples, axis=1), axis=1) > 0, axis=1)
            if self.n == 1:
                distinct_mask = np.ones(self.dim, dtype=bool)
            # parity of the permutation sorting each tuple = inversion count
            a = self.tuples
            inversions = np.sum(
                np.triu(a[:, :, None] > a[:, None, :], k=1), axis=(1, 2)
            )
            signs = np.where(inversions % 2 == 0, 1, -1).astype(np.int64)
            self._orbit_cache = (first.astype(np.int64), inverse, distinct_mask, signs)
        return self._orbit_cache

    def orbit_count(self):
        return self._orbits()[0].size

    def invariant_basis(self):
        """Columns spanning the joint fixed space of all permutation
        operators: one orbit-sum per multiset of digits."""
        first, inverse, _, _ = self._orbits()
        B = np.zeros((self.dim, first.size), dtype=np.int64)
        B[np.arange(self.dim), inverse] = 1
        return B

    def coinvariant_projection(self, M):
        """Image of columns of M in the quotient by all (s - 1)-images."""
        first, inverse, _, _ = self._orbits()
        M = np.asarray(M, dtype=np.int64)
        out = np.zeros((first.size, M.shape[1]), dtype=np.int64)
        np.add.at(out, inverse, M)
        return np.mod(out, self.p)

    def coinvariant_reps(self):
        """Indices of one representative basis vector per orbit."""
        return self._orbits()[0]

    def sign_invariant_basis(self):
        """Columns spanning the joint sign eigenspace (= fixed space at p=2)."""
        if self.p == 2:
            return self.invariant_basis()
        first, inverse, distinct, signs = self._orbits()
        keep = np.nonzero(distinct[first])[0]  # orbits of distinct tuples
        col_of_orbit = -np.ones(first.size, dtype=np.int64)
        col_of_orbit[keep] = np.arange(keep.size)
        B = np.zeros((self.dim, keep.size), dtype=np.int64)
        rows = np.nonzero(distinct)[0]
        B[rows, col_of_orbit[inverse[rows]]] = signs[rows] % self.p
        return B

    def sign_coinvariant_projection(self, M):
        """Image in the quotient by all (s - sgn(s))-images."""
        if self.p == 2:
            return self.coinvariant_projection(M)
        first, inverse, distinct, signs = self._orbits()
        keep = np.nonzero(distinct[first])[0]
        col_of_orbit = -np.ones(first.size, dtype=np.int64)
        col_of_orbit[keep] = np.arange(keep.size)
        M = np.asarray(M, dtype=np.int64)
        out = np.zeros((keep.size, M.shape[1]), dtype=np.int64)
        rows = np.nonzero(distinct)[0]
        np.add.at(out, col_of_orbit[inverse[rows]], signs[rows, None] * M[rows])
        return np.mod(out, self.p)

    def sign_coinvariant_reps(self):
        first, _, distinct, _ = self._orbits()
        keep = first[distinct[first]]
        return keep


def power_space(V, n, cap=None):
    """Realize V^(x)n with its symmetric-group action available."""
    return TensorPower(V, n, cap)


def _restrict_to_columns(B, g, p):
    """C_p structure induced on the column span of a full-rank basis B."""
    if B.shape[1] == 0:
        return CyclicRep(p, np.zeros((0, 0), dtype=np.int64), check=False)
    X = gfp.solve(B, gfp.matmul(g, B, p), p)
    N = np.mod(X - np.eye(B.shape[1], dtype=np.int64), p)
    return CyclicRep(p, N, check=False)


def skew_image(V, n, cap=None):
    """The alternating power: image of the skew-symmetrizer on V^(x)n."""
    if n < 0:
        raise ValidationError(f"power must be non-negative, got {n}")
    if n == 0:
        return CyclicRep.trivial(V.p, 1)
    T = TensorPower(V, n, cap)
    A = T.skew_matrix()
    basis, _ = gfp.column_space(A, V.p)
    g = np.mod(T.nilpotent() + np.eye(T.dim, dtype=np.int64), V.p)
    return _restrict_to_columns(basis, g, V.p)


def divided_power(V, n, cap=None):
    """Joint fixed space of the permutation action on V^(x)n."""
    if n == 0:
        return CyclicRep.trivial(V.p, 1)
    T = TensorPower(V, n, cap)
    B = T.invariant_basis()
    gB = T.apply_g(B)
    X = gfp.solve(B, gB, V.p)
    return CyclicRep(V.p, np.mod(X - np.eye(B.shape[1], dtype=np.int64), V.p), check=False)


def symmetric_power(V, n, cap=None):
    """Coinvariants of the permutation action on V^(x)n (quotient)."""
    if n == 0:
        return CyclicRep.trivial(V.p, 1)
    T = TensorPower(V, n, cap)
    reps = T.coinvariant_reps()
    eye = np.eye(T.dim, dtype=np.int64)
    A = T.coinvariant_projection(T.apply_g(eye[:, reps]))
    return CyclicRep(V.p, np.mod(A - np.eye(A.shape[0], dtype=np.int64), V.p), check=False)


def exterior_invariants(V, n, cap=None):
    """Joint sign eigenspace of the permutation action on V^(x)n."""
    if n == 0:
        return CyclicRep.trivial(V.p, 1)
    T = TensorPower(V, n, cap)
    B = T.sign_invariant_basis()
    if B.shape[1] == 0:
        return CyclicRep(V.p, np.zeros((0, 0), dtype=np.int64), check=False)
    gB = T.apply_g(B)
    X = gfp.solve(B, gB, V.p)
    return CyclicRep(V.p, np.mod(X - np.eye(B.shape[1], dtype=np.int64), V.p), check=False)


def exterior_coinvariants(V, n, cap=None):
    """Quotient of V^(x)n by the span of all (s - sgn(s))-images."""
    if n == 0:
        return CyclicRep.trivial(V.p, 1)
    T = TensorPower(V, n, cap)
    reps = T.sign_coinvariant_reps()
    if reps.size == 0:
        return CyclicRep(V.p, np.zeros((0, 0), dtype=np.int64), check=False)
    eye = np.eye(T.dim, dtype=np.int64)
    A = T.sign_coinvariant_projection(T.apply_g(eye[:, reps]))
    return CyclicRep(V.p, np.mod(A - np.eye(A.shape[0], dtype=np.int64), V.p), check=False)


def fr_plus(V, j=1, cap=None):
    """Image of the invariants-to-coinvariants map on the p^j-th power.

    Realizes the composite (fixed vectors of the permutation action on
    V^(x)p^j) -> V^(x)p^j -> (coinvariants), with the induced C_p action;
    j = 1 is the basic lax-monoidal Frobenius endofunctor on modules.
    """
    if j < 1:
        raise ValidationError(f"iteration count must be >= 1, got {j}")
    p = V.p
    n = p**j
    T = TensorPower(V, n, cap)
    B = T.invariant_basis()
    PB = T.coinvariant_projection(B)
    image_basis, _ = gfp.column_space(PB, p)
    if image_basis.shape[1] == 0:
        return CyclicRep(p, np.zeros((0, 0), dtype=np.int64), check=False)
    reps = T.coinvariant_reps()
    eye = np.eye(T.dim, dtype=np.int64)
    A = T.coinvariant_projection(T.apply_g(eye[:, reps]))
    X = gfp.solve(image_basis, gfp.matmul(A, image_basis, p), p)
    return CyclicRep(p, np.mod(X - np.eye(X.shape[0], dtype=np.int64), p), check=False)


def fr_plus_iterated(V, j, cap=None):
    """Compose fr_plus with itself j times (contrast with fr_plus(V, j))."""
    out = V
    for _ in range(j):
        out = fr_plus(out, 1, cap)
    return out


class EndoClass:
    """An endomorphism of a module commuting with the group action.

    Either an explicit matrix or an operator callable; equivariance is
    checked exactly in small dimension and on random vectors otherwise.
    """

    def __init__(self, base, matrix=None, apply_fn=None, *, check=True, exact_check_limit=600):
        if matrix is None and apply_fn is None:
            raise ValidationError("EndoClass needs a matrix or an operator")
        self.base = base
        self.matrix = None if matrix is None else gfp.as_gfp(matrix, base.p)
        self._apply_fn = apply_fn
        if self.matrix is not None and self.matrix.shape != (base.dim, base.dim):
            raise ValidationError("endomorphism shape does not match the module")
        if check:
            self._check_equivariance(exact_check_limit)

    def apply(self, M):
        if self._apply_fn is not None:
            return self._apply_fn(M)
        return gfp.matmul(self.matrix, M, self.base.p)

    def _check_equivariance(self, exact_limit):
        p = self.base.p
        g = self.base.g
        if self.matrix is not None and self.base.dim <= exact_limit:
            left = gfp.matmul(g, self.matrix, p)
            right = gfp.matmul(self.matrix, g, p)
            if not np.array_equal(left, right):
                raise ValidationError("endomorphism does not commute with the group action")
            return
        rng = np.random.default_rng(0)
        probes = rng.integers(0, p, size=(self.base.dim, 8)).astype(np.int64)
        left = gfp.matmul(g, self.apply(probes), p)
        right = self.apply(gfp.matmul(g, probes, p))
        if not np.array_equal(np.mod(left, p), np.mod(right, p)):
            raise ValidationError("endomorphism does not commute with the group action")


def semisimplify(V):
    """Image in the semisimple quotient: drop J_p, send J_i to L_i."""
    jt = V if isinstance(V, JordanType) else jordan_type_of(V)
    return VerObject(jt.p, jt.blocks[:-1])


def lift(X):
    """The projective-free module realizing a Ver_p object: L_i -> J_i."""
    blocks = list(X.mult) + [0]
    return CyclicRep.from_jordan_type(JordanType(X.p, blocks))


def image_in_semisimplification(f, *, nilpotent_powers=None):
    """Image of an equivariant endomorphism in the semisimple quotient.

    For each non-projective block size i, the multiplicity of L_i in the
    image is the rank of the pairing matrix tr(pi . f . iota) over all
    module maps iota: J_i -> V and pi: V -> J_i.  Maps from J_i are cut
    out by ker(N^i) (image of the top basis vector), maps to J_i by the
    left kernel of N^i; the ordinary matrix trace represents the
    one-dimensional endomorphism space of J_i modulo negligibles.
    """
    V = f.base
    p = V.p
    N = V.n
    if nilpotent_powers is None:
        nilpotent_powers = [np.eye(V.dim, dtype=np.int64)]
        for _ in range(p - 1):
            nilpotent_powers.append(gfp.matmul(nilpotent_powers[-1], N, p))
    mult = [0] * (p - 1)
    for i in range(1, p):
        Ni = nilpotent_powers[i]
        W = gfp.nullspace(Ni, p)
        if W.shape[1] == 0:
            continue
        R = gfp.nullspace(Ni.T, p).T
        if R.shape[0] == 0:
            continue
        pairing = np.zeros((R.shape[0], W.shape[1]), dtype=np.int64)
        left = R
        for t in range(i):
            right = f.apply(gfp.matmul(nilpotent_powers[i - 1 - t], W, p))
            pairing = np.mod(pairing + gfp.matmul(left, right, p), p)
            if t + 1 < i:
                left = gfp.matmul(left, N, p)
        mult[i - 1] = gfp.rank(pairing, p)
    return VerObject(p, mult)


def alt_power_ver(X, n, cap=None):
    """Alternating power inside Ver_p via the projective-free lift.

    Realizes the skew-symmetrizer on lift(X)^(x)n and takes its image in
    the semisimplification.
    """
    if n < 0:
        raise ValidationError(f"power must be non-negative, got {n}")
    if n == 0:
        return VerObject.unit(X.p)
    V = lift(X)
    if V.dim == 0:
        return VerObject.zero(X.p)
    T = TensorPower(V, n, cap)
    W = T.as_cyclic_rep()
    endo = EndoClass(W, apply_fn=T.apply_skew, check=False)
    powers = T.nilpotent_powers(X.p - 1)
    return image_in_semisimplification(endo, nilpotent_powers=powers)


def tensor_power_rep(V, n, cap=None):
    """Iterated Kronecker power as a plain module."""
    if n == 0:
        return CyclicRep.trivial(V.p, 1)
    acc = V
    for _ in range(n - 1):
        acc = tensor(acc, V, cap)
    return acc


def delta_n(V, n, cap=None):
    """Number of non-projective indecomposable summands of V^(x)n."""
    if n == 0:
        return 1
    check_cap(V.dim**n, cap)
    return jordan_type_of(tensor_power_rep(V, n, cap)).non_projective_count()


def stable_jordan_type(V):
    """Jordan type with the projective multiplicity erased."""
    jt = V if isinstance(V, JordanType) else jordan_type_of(V)
    return jt.stable()


def random_jordan_type(rng, p, max_dim, allow_projective=True):
    """Seeded random Jordan type with dimension at most max_dim."""
    blocks = [0] * p
    budget = rng.randrange(1, max_dim + 1)
    top = p if allow_projective else p - 1
    while budget > 0:
        size = rng.randrange(1, min(top, budget) + 1)
        blocks[size - 1] += 1
        budget -= size
    return JordanType(p, blocks)


def random_ver_object(rng, p, max_lift_dim):
    """Seeded random nonzero Ver_p object with bounded lift dimension."""
    mult = [0] * (p - 1)
    budget = rng.randrange(1, max_lift_dim + 1)
    while budget > 0:
        i = rng.randrange(1, min(p - 1, budget) + 1)
        mult[i - 1] += 1
        budget -= i
    return VerObject(p, mult)


def random_realization(rng, jt):
    """A random matrix realization of a Jordan type (basis change)."""
    V = CyclicRep.from_jordan_type(jt)
    if V.dim == 0:
        return V
    S = gfp.random_invertible(rng, V.dim, jt.p)
    return V.conjugate(S)
