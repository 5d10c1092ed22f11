"""The fusion ring of the Verlinde category Ver_p.

Ver_p has simple objects L_1, ..., L_{p-1} with the truncated
Clebsch-Gordan tensor rule

    L_i (x) L_j = L_{|i-j|+1} + L_{|i-j|+3} + ... + L_{min(i+j-1, 2p-1-i-j)}.

Objects are multiplicity vectors over the simples.  On top of the ring
structure this module provides the Frobenius-Perron dimension (valued in
O_p via the quantum integers), the categorical dimension mod p, the
Frobenius functor and its enhanced variant on Grothendieck data, Frobenius
types, McKay graphs and tensor-power lengths.

Conventions for the enhanced target: the invertible objects of the
enhanced category form the character group Z/2(p-1); a character acts
through the parity of its index, so the restriction functor sends
(L_j, chi_a) to L_j for even a and to L_j (x) L_{p-1} for odd a.  The
image of the sign module is the character p-1 which (p being odd) is
even, hence restricts to the trivial line -- exactly what makes the
restriction of the enhanced Frobenius functor agree with the plain one.
"""

from __future__ import annotations

import re

from .cyclotomic import CycNum, qint
from .errors import ValidationError
from .gfp import check_prime

FROBENIUS_TYPES = ("Vec", "sVec", "VerPlus", "VerP")


class VerObject:
    """An object of Ver_p as a multiplicity vector over L_1..L_{p-1}."""

    __slots__ = ("p", "mult")

    def __init__(self, p, mult):
        check_prime(p)
        mult = tuple(int(m) for m in mult)
        if len(mult) != p - 1:
            raise ValidationError(f"need {p - 1} multiplicities for p={p}, got {len(mult)}")
        if any(m < 0 for m in mult):
            raise ValidationError("multiplicities must be non-negative")
        self.p = p
        self.mult = mult

    @classmethod
    def zero(cls, p):
        return cls(p, (0,) * (p - 1))

    @classmethod
    def simple(cls, p, i):
        if not 1 <= i <= p - 1:
            raise ValidationError(f"simple index must be in 1..{p - 1}, got {i}")
        return cls(p, tuple(1 if r == i else 0 for r in range(1, p)))

    @classmethod
    def unit(cls, p):
        return cls.simple(p, 1)

    def _require_same_p(self, other):
        if self.p != other.p:
            raise ValidationError(f"mismatched p: {self.p} vs {other.p}")

    def __add__(self, other):
        self._require_same_p(other)
        return VerObject(self.p, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __rmul__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValidationError("scalar multiple must be a non-negative integer")
        return VerObject(self.p, tuple(n * m for m in self.mult))

    def __eq__(self, other):
        if not isinstance(other, VerObject):
            return NotImplemented
        return self.p == other.p and self.mult == other.mult

    def __hash__(self):
        return hash((self.p, self.mult))

    def is_zero(self):
        return all(m == 0 for m in self.mult)

    def length(self):
        return sum(self.mult)

    def lift_dimension(self):
        """Dimension of the projective-free lift, sum of i * mult(L_i)."""
        return sum(i * m for i, m in enumerate(self.mult, start=1))

    def support(self):
        return tuple(i for i, m in enumerate(self.mult, start=1) if m > 0)

    def dual(self):
        # every simple L_i is self-dual
        return self

    def render(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, m in enumerate(self.mult, start=1):
            if m == 1:
                parts.append(f"L{i}")
            elif m > 1:
                parts.append(f"{m}*L{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"VerObject(p={self.p}, {self.render()})"

    def to_json(self):
        return {"p": self.p, "mult": list(self.mult)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), data["mult"])


_TERM_RE = re.compile(r"^(?:(\d+)\s*\*\s*)?([LJ])\s*(\d+)$")


def parse_terms(text, kind):
    """Parse shorthand like "L2 + 2*L3" (kind 'L') or "J2+J5" (kind 'J')."""
    terms = {}
    for raw in text.split("+"):
        raw = raw.strip()
        if not raw:
            raise ValidationError(f"empty term in {text!r}")
        m = _TERM_RE.match(raw)
        if m is None or m.group(2) != kind:
            raise ValidationError(f"cannot parse term {raw!r} (expected e.g. {kind}2 or 3*{kind}2)")
        count = int(m.group(1)) if m.group(1) else 1
        idx = int(m.group(3))
        terms[idx] = terms.get(idx, 0) + count
    return terms


def parse_ver_object(p, text):
    """VerObject from shorthand "a*Lk + ..." or a zero string "0"."""
    if text.strip() == "0":
        return VerObject.zero(p)
    terms = parse_terms(text, "L")
    mult = [0] * (p - 1)
    for idx, count in terms.items():
        if not 1 <= idx <= p - 1:
            raise ValidationError(f"L{idx} is not a simple of Ver_{p}")
        mult[idx - 1] += count
    return VerObject(p, mult)


def fuse_simples(p, i, j):
    """Tensor product of two simples by the truncated Clebsch-Gordan rule."""
    check_prime(p)
    if not (1 <= i <= p - 1 and 1 <= j <= p - 1):
        raise ValidationError(f"simple indices must be in 1..{p - 1}, got ({i}, {j})")
    mult = [0] * (p - 1)
    top = min(i + j - 1, 2 * p - 1 - i - j)
    for k in range(abs(i - j) + 1, top + 1, 2):
        mult[k - 1] = 1
    return VerObject(p, mult)


def fuse(X, Y):
    """Bilinear extension of fuse_simples."""
    X._require_same_p(Y)
    p = X.p
    mult = [0] * (p - 1)
    for i, mi in enumerate(X.mult, start=1):
        if mi == 0:
            continue
        for j, mj in enumerate(Y.mult, start=1):
            if mj == 0:
                continue
            for k, mk in enumerate(fuse_simples(p, i, j).mult, start=1):
                mult[k - 1] += mi * mj * mk
    return VerObject(p, mult)


def fpdim(X):
    """Frobenius-Perron dimension: the ring homomorphism L_r -> [r]_q."""
    total = CycNum.zero(X.p)
    for r, m in enumerate(X.mult, start=1):
        if m:
            total = total + m * qint(X.p, r)
    return total


def cat_dim_mod_p(X):
    """Categorical dimension in F_p: sum of i * mult(L_i) mod p."""
    return X.lift_dimension() % X.p


def is_integral(X):
    """True when FPdim(X) is an ordinary integer.

    Equivalent to the multiplicity vector being supported on L_1 and
    L_{p-1} (the invertible objects); always true for p = 2, 3.
    """
    return fpdim(X).is_integer()


def tensor_power_length(X, n):
    """Length of the n-fold fusion power (n = 0 gives the unit)."""
    if n < 0:
        raise ValidationError(f"power must be non-negative, got {n}")
    acc = VerObject.unit(X.p)
    for _ in range(n):
        acc = fuse(acc, X)
    return acc.length()


class VerPair:
    """An object of Ver_p (x) Ver_p as a (p-1) x (p-1) multiplicity matrix."""

    __slots__ = ("p", "mult")

    def __init__(self, p, mult):
        check_prime(p)
        rows = tuple(tuple(int(x) for x in row) for row in mult)
        if len(rows) != p - 1 or any(len(r) != p - 1 for r in rows):
            raise ValidationError(f"need a {p - 1}x{p - 1} multiplicity matrix")
        if any(x < 0 for row in rows for x in row):
            raise ValidationError("multiplicities must be non-negative")
        self.p = p
        self.mult = rows

    @classmethod
    def zero(cls, p):
        return cls(p, ((0,) * (p - 1),) * (p - 1))

    @classmethod
    def pure(cls, left, right):
        """L_i boxtimes L_j summed over the supports of two objects."""
        left._require_same_p(right)
        p = left.p
        mult = [[0] * (p - 1) for _ in range(p - 1)]
        for i, mi in enumerate(left.mult):
            for j, mj in enumerate(right.mult):
                mult[i][j] += mi * mj
        return cls(p, mult)

    def __add__(self, other):
        if self.p != other.p:
            raise ValidationError(f"mismatched p: {self.p} vs {other.p}")
        return VerPair(
            self.p,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.mult, other.mult)),
        )

    def __eq__(self, other):
        if not isinstance(other, VerPair):
            return NotImplemented
        return self.p == other.p and self.mult == other.mult

    def __hash__(self):
        return hash((self.p, self.mult))

    def fuse_pair(self, other):
        """Componentwise fusion: (A box B)(C box D) = (AC) box (BD), bilinearly."""
        if self.p != other.p:
            raise ValidationError(f"mismatched p: {self.p} vs {other.p}")
        p = self.p
        out = [[0] * (p - 1) for _ in range(p - 1)]
        for i1 in range(p - 1):
            for j1 in range(p - 1):
                m1 = self.mult[i1][j1]
                if m1 == 0:
                    continue
                for i2 in range(p - 1):
                    for j2 in range(p - 1):
                        m2 = other.mult[i2][j2]
                        if m2 == 0:
                            continue
                        left = fuse_simples(p, i1 + 1, i2 + 1)
                        right = fuse_simples(p, j1 + 1, j2 + 1)
                        for a, ma in enumerate(left.mult):
                            if ma == 0:
                                continue
                            for b, mb in enumerate(right.mult):
                                if mb:
                                    out[a][b] += m1 * m2 * ma * mb
        return VerPair(p, out)

    def collapse(self):
        """Fuse the two legs inside Ver_p."""
        p = self.p
        acc = VerObject.zero(p)
        for i in range(p - 1):
            for j in range(p - 1):
                m = self.mult[i][j]
                if m:
                    acc = acc + m * fuse_simples(p, i + 1, j + 1)
        return acc

    def second_leg_support(self):
        """Simple indices appearing in the right leg."""
        return tuple(
            j + 1
            for j in range(self.p - 1)
            if any(self.mult[i][j] for i in range(self.p - 1))
        )

    def __repr__(self):
        terms = []
        for i in range(self.p - 1):
            for j in range(self.p - 1):
                m = self.mult[i][j]
                if m == 1:
                    terms.append(f"L{i + 1}#L{j + 1}")
                elif m > 1:
                    terms.append(f"{m}*L{i + 1}#L{j + 1}")
        body = " + ".join(terms) if terms else "0"
        return f"VerPair(p={self.p}, {body})"

    def to_json(self):
        return {"p": self.p, "mult": [list(r) for r in self.mult]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), data["mult"])


def frobenius(X):
    """The Frobenius functor on Grothendieck data of Ver_p.

    On simples: L_i -> 1 box L_i for odd i, L_{p-1} box L_{p-i} for even
    i; extended additively.  Additive because the formula is; monoidality
    is a checked property, not an input.
    """
    p = X.p
    out = VerPair.zero(p)
    for i, m in enumerate(X.mult, start=1):
        if m == 0:
            continue
        if i % 2 == 1:
            term = VerPair.pure(m * VerObject.unit(p), VerObject.simple(p, i))
        else:
            term = VerPair.pure(m * VerObject.simple(p, p - 1), VerObject.simple(p, p - i))
        out = out + term
    return out


def frobenius_collapse(X):
    """Fuse the two legs of Fr(X) back inside Ver_p; isomorphic to X."""
    return frobenius(X).collapse()


def _sign_character(p):
    # the image of the sign module in the character group Z/2(p-1);
    # trivial at p = 2 where the sign representation already is
    return 0 if p == 2 else p - 1


class EnhancedObject:
    """An object of the enhanced target: Ver_p^+ (x) characters of Z/2(p-1).

    Simples are pairs (L_j, chi_a) with j odd and a taken mod 2(p-1).
    """

    __slots__ = ("p", "mult")

    def __init__(self, p, mult):
        check_prime(p)
        order = 2 * (p - 1)
        clean = {}
        for (j, a), m in dict(mult).items():
            m = int(m)
            if m < 0:
                raise ValidationError("multiplicities must be non-negative")
            if m == 0:
                continue
            if not (1 <= j <= p - 1 and j % 2 == 1):
                raise ValidationError(f"enhanced simple needs odd j in 1..{p - 1}, got {j}")
            clean[(j, a % order)] = clean.get((j, a % order), 0) + m
        self.p = p
        self.mult = clean

    def __eq__(self, other):
        if not isinstance(other, EnhancedObject):
            return NotImplemented
        return self.p == other.p and self.mult == other.mult

    def __repr__(self):
        terms = [
            (f"{m}*" if m > 1 else "") + f"(L{j}, chi{a})"
            for (j, a), m in sorted(self.mult.items())
        ]
        return f"EnhancedObject(p={self.p}, {' + '.join(terms) if terms else '0'})"

    def to_json(self):
        return {"p": self.p, "mult": [[j, a, m] for (j, a), m in sorted(self.mult.items())]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), {(j, a): m for j, a, m in data["mult"]})

    @classmethod
    def sign_module(cls, p):
        return cls(p, {(1, _sign_character(p)): 1})


def restrict_R(E):
    """Restriction from the enhanced target back to Ver_p.

    Identity on the odd part; a character contributes through its parity:
    (L_j, chi_a) -> L_j for even a, L_j (x) L_{p-1} for odd a.
    """
    p = E.p
    acc = VerObject.zero(p)
    for (j, a), m in E.mult.items():
        if a % 2 == 0:
            acc = acc + m * VerObject.simple(p, j)
        else:
            acc = acc + m * fuse_simples(p, j, p - 1)
    return acc


class EnhancedPair:
    """An object of Ver_p (x) (enhanced target), keyed by enhanced simples."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms):
        check_prime(p)
        order = 2 * (p - 1)
        clean = {}
        for (j, a), obj in dict(terms).items():
            if obj.p != p:
                raise ValidationError("mismatched p in enhanced pair")
            if obj.is_zero():
                continue
            if not (1 <= j <= p - 1 and j % 2 == 1):
                raise ValidationError(f"enhanced simple needs odd j, got {j}")
            key = (j, a % order)
            clean[key] = clean.get(key, VerObject.zero(p)) + obj
        self.p = p
        self.terms = clean

    def __eq__(self, other):
        if not isinstance(other, EnhancedPair):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def restrict(self):
        """Apply the restriction functor on the enhanced leg -> VerPair."""
        p = self.p
        out = VerPair.zero(p)
        for (j, a), obj in self.terms.items():
            right = restrict_R(EnhancedObject(p, {(j, a): 1}))
            out = out + VerPair.pure(obj, right)
        return out

    def __repr__(self):
        terms = [f"({obj.render()}) # (L{j}, chi{a})" for (j, a), obj in sorted(self.terms.items())]
        return f"EnhancedPair(p={self.p}, {' + '.join(terms) if terms else '0'})"

    def to_json(self):
        return {
            "p": self.p,
            "terms": [[j, a, list(obj.mult)] for (j, a), obj in sorted(self.terms.items())],
        }


def frobenius_enhanced(X):
    """The enhanced Frobenius functor on Grothendieck data.

    On simples: L_i -> 1 box (L_i, trivial) for odd i, and
    L_{p-1} box (L_{p-i}, sign) for even i.  Restricting the enhanced leg
    recovers the plain Frobenius functor.
    """
    p = X.p
    sign = _sign_character(p)
    terms = {}
    for i, m in enumerate(X.mult, start=1):
        if m == 0:
            continue
        if i % 2 == 1:
            key, obj = (i, 0), m * VerObject.unit(p)
        else:
            key, obj = (p - i, sign), m * VerObject.simple(p, p - 1)
        terms[key] = terms.get(key, VerObject.zero(p)) + obj
    return EnhancedPair(p, terms)


def fusion_closure(p, simples):
    """Smallest set of simple indices containing *simples*, closed under
    fusion, together with the unit."""
    closed = {1} | set(simples)
    frontier = list(closed)
    while frontier:
        new = set()
        for i in sorted(closed):
            for j in frontier:
                for k in fuse_simples(p, i, j).support():
                    if k not in closed:
                        new.add(k)
        closed |= new
        frontier = sorted(new)
    return tuple(sorted(closed))


def classify_subcategory(p, simples):
    """Name of the tensor subcategory generated by the given simples."""
    closed = set(fusion_closure(p, simples))
    if closed == {1}:
        return "Vec"
    if closed <= {1, p - 1}:
        return "sVec"
    if all(i % 2 == 1 for i in closed):
        return "VerPlus"
    return "VerP"


def frobenius_type(X):
    """Minimal tensor subcategory receiving the second leg of Fr(X).

    One of Vec, sVec, VerPlus, VerP.  For p = 2 this is always Vec; for
    objects of Ver_p the second legs have odd index, so only Vec and
    VerPlus actually occur.
    """
    if X.p == 2:
        return "Vec"
    support = frobenius(X).second_leg_support()
    return classify_subcategory(X.p, support)


def frobenius_type_join(t1, t2):
    """Join in the subcategory lattice Vec < {sVec, VerPlus} < VerP."""
    order = {"Vec": 0, "sVec": 1, "VerPlus": 1, "VerP": 2}
    if t1 == t2:
        return t1
    if order[t1] < order[t2] and (order[t1] == 0 or t2 == "VerP"):
        return t2
    if order[t2] < order[t1] and (order[t2] == 0 or t1 == "VerP"):
        return t1
    return "VerP"


class McKayGraph:
    """Weighted directed graph of multiplication by a fixed object."""

    __slots__ = ("p", "vertices", "weights")

    def __init__(self, p, vertices, weights):
        self.p = p
        self.vertices = tuple(sorted(vertices))
        self.weights = {k: int(v) for k, v in weights.items() if v}

    def weight(self, i, j):
        return self.weights.get((i, j), 0)

    def __eq__(self, other):
        if not isinstance(other, McKayGraph):
            return NotImplemented
        return (
            self.p == other.p
            and self.vertices == other.vertices
            and self.weights == other.weights
        )

    def is_path(self):
        """True when the graph is the double path 1 - 2 - ... - n (A_n)."""
        verts = self.vertices
        expected = {}
        for a, b in zip(verts, verts[1:]):
            expected[(a, b)] = 1
            expected[(b, a)] = 1
        return self.weights == expected

    def __repr__(self):
        return f"McKayGraph(p={self.p}, vertices={self.vertices}, edges={sorted(self.weights)})"

    def to_json(self):
        return {
            "p": self.p,
            "vertices": list(self.vertices),
            "edges": [[i, j, w] for (i, j), w in sorted(self.weights.items())],
        }

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), data["vertices"], {(i, j): w for i, j, w in data["edges"]})


def mckay_graph(X):
    """McKay graph of tensoring with X on the fusion closure of X.

    Vertices are the simples of the closure; the edge L_i -> L_j carries
    the multiplicity of L_j in L_i (x) X.
    """
    if X.is_zero():
        raise ValidationError("McKay graph of the zero object is undefined")
    p = X.p
    vertices = fusion_closure(p, X.support())
    weights = {}
    for i in vertices:
        row = fuse(VerObject.simple(p, i), X)
        for j, m in enumerate(row.mult, start=1):
            if m:
                weights[(i, j)] = m
    return McKayGraph(p, vertices, weights)
