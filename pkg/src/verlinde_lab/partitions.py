"""Partition combinatorics for modular symmetric-group branching.

Covers p-regularity, p-cores by rim-hook stripping (beta-number moves),
the staircase-with-repeats cores rho_k, conormal boxes via the signature
rule, the greedy box-adding chain that grows any p-regular partition to
rho of its largest part, the divisibility condition guaranteeing a
trivial Specht submodule together with its envelope construction, and
the stabilization bound n(p-1)(p^(l_p(n)) - 1).

Signature convention: for a fixed residue, the addable and removable
boxes are read in increasing column order, writing + for addable and -
for removable, and adjacent "-+" pairs cancel repeatedly; the conormal
boxes are the addable ones whose + survives.  The convention is pinned
behaviorally: every box added by the greedy chain must be conormal at
its residue, exhaustively over small partitions, and the chain carries a
non-termination guard that trips on a wrong convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConventionError, ValidationError
from .gfp import check_prime


@dataclass(frozen=True)
class BoxPos:
    """A box of the Young diagram: 1-based row and column plus residue."""

    row: int
    col: int
    residue: int

    @classmethod
    def at(cls, row, col, p):
        return cls(row, col, (col - row) % p)


class Partition:
    """Weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValidationError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValidationError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts

    @classmethod
    def empty(cls):
        return cls(())

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("", "-", "[]", "()"):
            return cls.empty()
        text = text.strip("[]()")
        if not text.strip():
            return cls.empty()
        return cls(int(t) for t in text.replace(" ", "").split(",") if t)

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def contains(self, other):
        """Componentwise containment of diagrams."""
        if len(other) > len(self):
            return False
        return all(self.parts[i] >= other.parts[i] for i in range(len(other)))

    def row_length(self, row):
        """Length of a (1-based) row, zero below the diagram."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def addable_boxes(self, p):
        """Corner positions where one box can be added, top row first."""
        out = []
        for row in range(1, len(self.parts) + 2):
            col = self.row_length(row) + 1
            if row == 1 or self.row_length(row - 1) >= col:
                out.append(BoxPos.at(row, col, p))
        return out

    def removable_boxes(self, p):
        out = []
        for row in range(1, len(self.parts) + 1):
            col = self.row_length(row)
            if col > self.row_length(row + 1):
                out.append(BoxPos.at(row, col, p))
        return out

    def with_box(self, row, col):
        if col != self.row_length(row) + 1:
            raise ValidationError(f"({row},{col}) is not addable to {self.parts}")
        if row > 1 and self.row_length(row - 1) < col:
            raise ValidationError(f"({row},{col}) is not addable to {self.parts}")
        parts = list(self.parts)
        if row == len(parts) + 1:
            parts.append(1)
        else:
            parts[row - 1] += 1
        return Partition(parts)

    def to_json(self):
        return list(self.parts)

    @classmethod
    def from_json(cls, data):
        return cls(data)


def is_p_regular(lam, p):
    """No part repeated p or more times."""
    check_prime(p)
    run = 0
    prev = None
    for x in lam.parts:
        run = run + 1 if x == prev else 1
        if run >= p:
            return False
        prev = x
    return True


def _beta_numbers(lam, length):
    """First-column hook lengths padded to the given number of beads."""
    if length < len(lam):
        raise ValidationError("beta length too small")
    parts = list(lam.parts) + [0] * (length - len(lam))
    return [parts[i] + (length - 1 - i) for i in range(length)]


def _partition_from_beta(beta):
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = [beta[i] - (length - 1 - i) for i in range(length)]
    return Partition([x for x in parts if x > 0])


def removable_hook_count(lam, p):
    """Number of removable rim hooks of length p."""
    beta = set(_beta_numbers(lam, max(len(lam), 1)))
    return sum(1 for b in beta if b >= p and b - p not in beta)


def p_core(lam, p, rng=None):
    """Strip rim hooks of length p until none remain.

    Each removable rim p-hook corresponds to a bead move b -> b - p on
    the beta-number abacus.  The result is independent of the removal
    order; passing an rng shuffles the order (used to test exactly that).
    """
    check_prime(p)
    if not lam.parts:
        return Partition.empty()
    beta = set(_beta_numbers(lam, len(lam)))
    while True:
        movable = sorted(b for b in beta if b >= p and b - p not in beta)
        if not movable:
            break
        choice = movable[0] if rng is None else rng.choice(movable)
        beta.remove(choice)
        beta.add(choice - p)
    return _partition_from_beta(sorted(beta, reverse=True))


def rho(p, k):
    """The p-core (k^(p-1), (k-1)^(p-1), ..., 1^(p-1))."""
    check_prime(p)
    if k < 0:
        raise ValidationError(f"k must be non-negative, got {k}")
    parts = []
    for value in range(k, 0, -1):
        parts.extend([value] * (p - 1))
    return Partition(parts)


def conormal_boxes(lam, p, residue):
    """Addable boxes of the given residue surviving the signature rule.

    Addable and removable boxes of residue r are listed by increasing
    column ("+" addable, "-" removable) and adjacent "-+" pairs cancel
    repeatedly; the surviving "+" entries are the conormal boxes.
    """
    check_prime(p)
    if not is_p_regular(lam, p):
        raise ValidationError(f"{lam.parts} is not {p}-regular")
    residue %= p
    word = [(b, True) for b in lam.addable_boxes(p) if b.residue == residue]
    word += [(b, False) for b in lam.removable_boxes(p) if b.residue == residue]
    word.sort(key=lambda item: item[0].col)
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if not word[i][1] and word[i + 1][1]:
                word = word[:i] + word[i + 2 :]
                changed = True
                break
    return [box for box, addable in word if addable]


def greedy_to_rho(lam, p):
    """Grow a p-regular partition to rho of its largest part.

    Repeatedly adds the left-most addable box that keeps the partition
    p-regular; returns the chain of partitions after each addition (empty
    when the input already equals the target).  Each added box is checked
    to be conormal at its residue, and a step-count guard trips if the
    chain overruns the target size; either failure signals a broken
    signature convention.
    """
    check_prime(p)
    if not lam.parts:
        raise ValidationError("the greedy chain needs a non-empty partition")
    if not is_p_regular(lam, p):
        raise ValidationError(f"{lam.parts} is not {p}-regular")
    target = rho(p, lam.parts[0])
    chain = []
    current = lam
    max_steps = target.size - lam.size + 1
    steps = 0
    while current != target:
        steps += 1
        if steps > max_steps:
            raise ConventionError(
                f"greedy chain from {lam.parts} overran rho_{lam.parts[0]}; "
                f"signature convention is broken"
            )
        candidates = sorted(current.addable_boxes(p), key=lambda b: b.col)
        step = None
        for box in candidates:
            grown = current.with_box(box.row, box.col)
            if is_p_regular(grown, p):
                step = (box, grown)
                break
        if step is None:
            raise ConventionError(
                f"no p-regular addition available from {current.parts}"
            )
        box, grown = step
        if box not in conormal_boxes(current, p, box.residue):
            raise ConventionError(
                f"greedy step {box} from {current.parts} is not conormal; "
                f"signature convention is broken"
            )
        chain.append(grown)
        current = grown
    return chain


def ell_p(p, a):
    """Minimal natural number l with a < p^l (zero for a = 0)."""
    check_prime(p)
    if a < 0:
        raise ValidationError(f"need a >= 0, got {a}")
    l = 0
    power = 1
    while a >= power:
        l += 1
        power *= p
    return l


def james_condition(mu, p):
    """Divisibility pattern: p^(l_p(mu_(i+1))) divides mu_i + 1 for all i.

    Guarantees a trivial submodule in the corresponding Specht module;
    vacuously true for partitions of length at most one.
    """
    check_prime(p)
    for i in range(len(mu) - 1):
        if (mu[i] + 1) % p ** ell_p(p, mu[i + 1]) != 0:
            return False
    return True


def james_envelope(lam, p):
    """Smallest-length partition containing lam satisfying the condition.

    Built bottom-up: the last part is the largest part of lam, and each
    part above is p^(l_p(next part)) - 1.
    """
    check_prime(p)
    if not lam.parts:
        raise ValidationError("the envelope needs a non-empty partition")
    length = len(lam)
    mu = [0] * length
    mu[length - 1] = lam.parts[0]
    for i in range(length - 2, -1, -1):
        mu[i] = p ** ell_p(p, mu[i + 1]) - 1
    return Partition(mu)


def faithfulness_bound(p, n):
    """Symmetric-group size for which the principal projective cover is
    faithful over S_n: n (p-1) (p^(l_p(n)) - 1)."""
    check_prime(p)
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    return n * (p - 1) * (p ** ell_p(p, n) - 1)


def partitions_of(n, max_part=None):
    """All partitions of n, largest part first."""
    if n < 0:
        raise ValidationError(f"need n >= 0, got {n}")
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition.empty()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def p_regular_partitions(n, p):
    """All p-regular partitions of n."""
    return [lam for lam in partitions_of(n) if is_p_regular(lam, p)]
