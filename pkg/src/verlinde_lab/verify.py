"""Seeded batch verification suites.

Each suite cross-checks a family of closed formulas against the
brute-force GF(p) oracles and returns a JSON-ready report

    {"suite": ..., "seed": ..., "instances": total,
     "checks": [{"property": ..., "instances": ..., "failures": [...]}, ...],
     "failures": total}

Randomness comes exclusively from ``random.Random`` (the stdlib Mersenne
Twister) seeded with a string derived from the suite name, the prime and
the user seed, so identical seeds reproduce identical instance streams on
any platform.
"""

from __future__ import annotations

import random

from . import cyclotomic, dimensions, fusion, modrep
from .cyclotomic import qint
from .errors import ValidationError
from .fusion import VerObject, fuse, fuse_simples, fpdim, frobenius, mckay_graph


class _Check:
    def __init__(self, name):
        self.name = name
        self.instances = 0
        self.failures = []

    def record(self, ok, message):
        self.instances += 1
        if not ok:
            self.failures.append(message)

    def report(self):
        return {
            "property": self.name,
            "instances": self.instances,
            "failures": list(self.failures),
        }


def _rng(seed, suite, p=0):
    return random.Random(f"{seed}:{suite}:{p}")


def _report(name, seed, checks):
    return {
        "suite": name,
        "seed": seed,
        "instances": sum(c.instances for c in checks),
        "checks": [c.report() for c in checks],
        "failures": sum(len(c.failures) for c in checks),
    }


def suite_fusion_oracle(seed=7, cap=None, instances=50):
    """Closed fusion rule against Jordan-block tensor decompositions.

    For all pairs of simples and seeded random object pairs at
    p in {2, 3, 5, 7}: semisimplify(lift X (x) lift Y) = X (x) Y.
    """
    simple_pairs = _Check("semisimplified tensor of simples matches fusion rule")
    random_pairs = _Check("semisimplified tensor of random objects matches fusion rule")
    for p in (2, 3, 5, 7):
        for i in range(1, p):
            for j in range(1, p):
                left = modrep.semisimplify(
                    modrep.tensor(modrep.lift(VerObject.simple(p, i)), modrep.lift(VerObject.simple(p, j)), cap)
                )
                right = fuse_simples(p, i, j)
                simple_pairs.record(left == right, f"p={p} L{i}*L{j}: oracle {left!r} != {right!r}")
        rng = _rng(seed, "fusion-oracle", p)
        for _ in range(instances):
            X = modrep.random_ver_object(rng, p, 6)
            Y = modrep.random_ver_object(rng, p, 6)
            left = modrep.semisimplify(modrep.tensor(modrep.lift(X), modrep.lift(Y), cap))
            right = fuse(X, Y)
            random_pairs.record(left == right, f"p={p} {X!r} * {Y!r}: oracle {left!r} != {right!r}")
    return _report("fusion-oracle", seed, [simple_pairs, random_pairs])


def suite_fpdim_ring(seed=7, cap=None, instances=200):
    """FPdim is a ring homomorphism: multiplicative under fusion and
    additive under direct sums, exactly in O_p, for p up to 13."""
    mult = _Check("fpdim(X*Y) = fpdim(X)*fpdim(Y)")
    add = _Check("fpdim(X+Y) = fpdim(X)+fpdim(Y)")
    primes = (2, 3, 5, 7, 11, 13)
    per_p = max(1, instances // len(primes))
    for p in primes:
        rng = _rng(seed, "fpdim-ring", p)
        for _ in range(per_p):
            X = modrep.random_ver_object(rng, p, 10)
            Y = modrep.random_ver_object(rng, p, 10)
            lhs = fpdim(fuse(X, Y))
            rhs = fpdim(X) * fpdim(Y)
            mult.record(lhs == rhs, f"p={p} {X!r}*{Y!r}: {lhs!r} != {rhs!r}")
            lhs = fpdim(X + Y)
            rhs = fpdim(X) + fpdim(Y)
            add.record(lhs == rhs, f"p={p} {X!r}+{Y!r}: {lhs!r} != {rhs!r}")
    return _report("fpdim-ring", seed, [mult, add])


def suite_delta(seed=7, cap=None, instances=12):
    """The growth-rate invariant delta of modular representations.

    Multiplicativity under oracle tensor products, the mod-p congruence,
    the quantum-integer lower bound via 128-bit intervals, the
    symmetric/exterior square identity with brute-forced left side, and
    content recovery from the pair of invariants.
    """
    mult = _Check("delta(V (x) W) = delta(V) delta(W), oracle left side")
    congruence = _Check("dim V - sum(k m_k) divisible by p")
    lower = _Check("delta(V) >= [dim V mod p]_q (interval comparison)")
    second = _Check("delta(S^2 V) - delta(wedge^2 V) = sum([k]_(q^2) m_k), oracle left side")
    recovery = _Check("content recovered from (delta, square difference)")
    for p in (3, 5, 7):
        rng = _rng(seed, "delta", p)
        for _ in range(instances):
            jtV = modrep.random_jordan_type(rng, p, 10)
            jtW = modrep.random_jordan_type(rng, p, 10)
            V = modrep.CyclicRep.from_jordan_type(jtV)
            W = modrep.CyclicRep.from_jordan_type(jtW)
            lhs = dimensions.delta(modrep.jordan_type_of(modrep.tensor(V, W, cap)))
            rhs = dimensions.delta(jtV) * dimensions.delta(jtW)
            mult.record(lhs == rhs, f"p={p} {jtV!r} x {jtW!r}: {lhs!r} != {rhs!r}")
            content = dimensions.delta_content(jtV)
            congruence.record(
                (jtV.dim - sum(k * m for k, m in enumerate(content.m, start=1))) % p == 0,
                f"p={p} {jtV!r}: congruence fails",
            )
            lower.record(
                cyclotomic.compare(dimensions.delta(jtV), qint(p, jtV.dim % p), 128) >= 0,
                f"p={p} {jtV!r}: delta below [dim]_q",
            )
    for p in (3, 5):
        rng = _rng(seed, "delta-second", p)
        for _ in range(instances):
            jt = modrep.random_jordan_type(rng, p, 8)
            V = modrep.CyclicRep.from_jordan_type(jt)
            lhs = dimensions.delta_square_difference(V, cap)
            content = dimensions.delta_content(jt)
            rhs = dimensions.second_identity_rhs(content)
            second.record(lhs == rhs, f"p={p} {jt!r}: {lhs!r} != {rhs!r}")
            recovered = dimensions.recover_jordan_content(p, dimensions.delta(jt), lhs)
            recovery.record(
                recovered.m == content.m, f"p={p} {jt!r}: recovered {recovered!r}"
            )
    return _report("delta", seed, [mult, congruence, lower, second, recovery])


def suite_alt_dimension(seed=7, cap=None, instances=6):
    """Alternating powers in Ver_p: top degree, direct sums, products.

    ad(L_i) = i certified by brute force; the direct-sum decomposition of
    alternating powers as an equality of Jordan types; submultiplicativity
    ad(X (x) Y) <= ad(X) ad(Y) and additivity ad(X + Y) = ad(X) + ad(Y)
    exhaustively over simples (closed form), with brute-force confirmation
    on the small cases.
    """
    top = _Check("ad(L_i) = i by brute force")
    eqalt = _Check("A^n(X + Y) decomposes as sum of A^i X (x) A^(n-i) Y")
    submult = _Check("ad(L_i (x) L_j) <= i j over all simple pairs")
    additive = _Check("ad additive on direct sums (brute force, small)")
    gdmult = _Check("gd multiplicative on all simple pairs")
    for p in (3, 5):
        for i in range(1, p):
            L = VerObject.simple(p, i)
            try:
                value = dimensions.ad(L, cap=cap, verify=True)
                top.record(value == i, f"p={p} L{i}: ad={value}")
            except Exception as exc:  # report, don't abort the suite
                top.record(False, f"p={p} L{i}: {exc}")
        for i in range(1, p):
            for j in range(1, p):
                product = fuse_simples(p, i, j)
                bound = dimensions.ad(product, verify=False) if not product.is_zero() else 0
                submult.record(bound <= i * j, f"p={p} L{i}xL{j}: ad={bound} > {i * j}")
                lhs = fpdim(product)
                gdmult.record(
                    lhs == qint(p, i) * qint(p, j),
                    f"p={p} L{i}xL{j}: fpdim mismatch",
                )
        for i in range(1, p):
            for j in range(1, p):
                if i + j > 4:
                    continue
                X = VerObject.simple(p, i) + VerObject.simple(p, j)
                value = dimensions.ad(X, cap=cap, verify=True)
                additive.record(value == i + j, f"p={p} L{i}+L{j}: ad={value}")
    for p in (2, 3):
        rng = _rng(seed, "alt-dimension", p)
        for _ in range(instances):
            jtX = modrep.random_jordan_type(rng, p, 2)
            jtY = modrep.random_jordan_type(rng, p, 2)
            X = modrep.CyclicRep.from_jordan_type(jtX)
            Y = modrep.CyclicRep.from_jordan_type(jtY)
            for n in range(1, 4):
                lhs = modrep.jordan_type_of(modrep.skew_image(modrep.direct_sum(X, Y), n, cap))
                rhs = modrep.JordanType.zero(p)
                for k in range(0, n + 1):
                    Ak = modrep.skew_image(X, k, cap)
                    Bk = modrep.skew_image(Y, n - k, cap)
                    if Ak.dim and Bk.dim:
                        rhs = rhs + modrep.jordan_type_of(modrep.tensor(Ak, Bk, cap))
                eqalt.record(
                    lhs == rhs, f"p={p} n={n} {jtX!r}+{jtY!r}: {lhs!r} != {rhs!r}"
                )
    return _report("alt-dimension", seed, [top, eqalt, submult, additive, gdmult])


def suite_padic(seed=7, cap=None, instances=25):
    """p-adic dimensions: digit extraction inverts the product expansion,
    and the p-adic dimension of a Ver_p object equals ad."""
    roundtrip = _Check("digit extraction inverts the series expansion")
    equals_ad = _Check("p-adic dimension equals ad")
    spot = _Check("p-adic dimension equals brute-force ad (spot checks)")
    for p in (3, 5):
        rng = _rng(seed, "padic-digits", p)
        for _ in range(50):
            digits = [rng.randrange(p) for _ in range(rng.randrange(1, 4))]
            while digits and digits[-1] == 0:
                digits.pop()
            series = dimensions.padic_series(digits, p)
            extracted = dimensions.padic_dimension(series, p)
            roundtrip.record(
                list(extracted.digits) == digits,
                f"p={p} digits {digits}: extracted {extracted.digits}",
            )
        rng = _rng(seed, "padic", p)
        for k in range(instances):
            X = modrep.random_ver_object(rng, p, 4)
            value = dimensions.padic_dimension_of(X, cap).value
            expected = dimensions.ad(X, verify=False)
            equals_ad.record(value == expected, f"p={p} {X!r}: Dim_a={value} != ad={expected}")
            if k < 3:
                brute = dimensions.ad(X, cap=cap, verify=True)
                spot.record(value == brute, f"p={p} {X!r}: Dim_a={value} != brute ad={brute}")
    return _report("padic", seed, [roundtrip, equals_ad, spot])


def suite_frobenius(seed=7, cap=None, instances=10):
    """The Frobenius functor on Ver_p: simple values, collapse to the
    identity, compatibility with the enhanced functor, monoidality."""
    values = _Check("Fr on simples matches the parity formula")
    collapse = _Check("collapsing Fr is the identity")
    enhanced = _Check("restricting the enhanced functor recovers Fr")
    monoidal = _Check("Fr is monoidal on pairs of simples")
    for p in (3, 5, 7):
        for i in range(1, p):
            L = VerObject.simple(p, i)
            fr = frobenius(L)
            if i % 2 == 1:
                expected = fusion.VerPair.pure(VerObject.unit(p), VerObject.simple(p, i))
            else:
                expected = fusion.VerPair.pure(
                    VerObject.simple(p, p - 1), VerObject.simple(p, p - i)
                )
            values.record(fr == expected, f"p={p} L{i}: {fr!r}")
            collapse.record(
                fusion.frobenius_collapse(L) == L, f"p={p} L{i}: collapse differs"
            )
            enhanced.record(
                fusion.frobenius_enhanced(L).restrict() == fr,
                f"p={p} L{i}: enhanced restriction differs",
            )
        for i in range(1, p):
            for j in range(1, p):
                lhs = frobenius(fuse_simples(p, i, j))
                rhs = frobenius(VerObject.simple(p, i)).fuse_pair(
                    frobenius(VerObject.simple(p, j))
                )
                monoidal.record(lhs == rhs, f"p={p} L{i},L{j}: monoidality fails")
        rng = _rng(seed, "frobenius", p)
        for _ in range(instances):
            X = modrep.random_ver_object(rng, p, 8)
            collapse.record(
                fusion.frobenius_collapse(X) == X, f"p={p} {X!r}: collapse differs"
            )
            enhanced.record(
                fusion.frobenius_enhanced(X).restrict() == frobenius(X),
                f"p={p} {X!r}: enhanced restriction differs",
            )
    return _report("frobenius", seed, [values, collapse, enhanced, monoidal])


def _jordan_types_up_to(p, max_dim, allow_projective=True):
    top = p if allow_projective else p - 1
    out = []

    def rec(blocks, size, dim):
        if dim > 0:
            out.append(modrep.JordanType(p, tuple(blocks)))
        if size > top:
            return
        for size2 in range(size, top + 1):
            if dim + size2 <= max_dim:
                blocks2 = list(blocks)
                blocks2[size2 - 1] += 1
                rec(blocks2, size2, dim + size2)

    rec([0] * p, 1, 0)
    # deduplicate (recursion can revisit)
    seen = []
    for jt in out:
        if jt not in seen:
            seen.append(jt)
    return seen


def suite_frobenius_iterate(seed=7, cap=None, instances=None):
    """One-step iteration law for the invariants-to-coinvariants functor:
    the p^2-power construction agrees with applying the p-power
    construction twice, as Jordan types, on all small modules."""
    agree = _Check("Fr_+ at level p^2 equals Fr_+ twice")
    cases = [(2, 3), (3, 2)]
    for p, max_dim in cases:
        for jt in _jordan_types_up_to(p, max_dim):
            V = modrep.CyclicRep.from_jordan_type(jt)
            direct = modrep.jordan_type_of(modrep.fr_plus(V, 2, cap))
            iterated = modrep.jordan_type_of(modrep.fr_plus_iterated(V, 2, cap))
            agree.record(
                direct == iterated, f"p={p} {jt!r}: {direct!r} != {iterated!r}"
            )
    return _report("frobenius-iterate", seed, [agree])


def suite_symmetric_action(seed=7, cap=None, instances=None):
    """Faithfulness of symmetric-group actions on tensor powers.

    sd(k^m) = m recovered for trivial modules, and faithfulness at level
    n forces a nonzero n-th alternating power.
    """
    trivial = _Check("faithful on (k^m)^(x)n exactly when n <= m")
    bound = _Check("faithfulness at n implies nonzero n-th alternating power")
    for p in (2, 3):
        for m in range(1, 4):
            V = modrep.CyclicRep.trivial(p, m)
            for n in range(1, 5):
                got = dimensions.sd_at_least(V, n, cap)
                trivial.record(
                    got == (n <= m), f"p={p} m={m} n={n}: sd_at_least={got}"
                )
        for jt in _jordan_types_up_to(p, 3):
            V = modrep.CyclicRep.from_jordan_type(jt)
            for n in range(1, 5):
                if dimensions.sd_at_least(V, n, cap):
                    nonzero = modrep.skew_image(V, n, cap).dim > 0
                    bound.record(nonzero, f"p={p} {jt!r} n={n}: A^n vanished")
    return _report("symmetric-action", seed, [trivial, bound])


def suite_partitions(seed=7, cap=None, instances=20):
    """Greedy growth to rho, envelope construction, stabilization bound."""
    from . import partitions as pt

    greedy = _Check("greedy chain reaches rho with conormal regular steps")
    envelope = _Check("envelope contains, has equal length, satisfies the condition")
    bound = _Check("stabilization bound formula")
    for p in (2, 3, 5):
        for n in range(1, 11):
            for lam in pt.p_regular_partitions(n, p):
                try:
                    chain = pt.greedy_to_rho(lam, p)
                    target = pt.rho(p, lam.parts[0])
                    final = chain[-1] if chain else lam
                    ok = final == target and all(pt.is_p_regular(mu, p) for mu in chain)
                    greedy.record(ok, f"p={p} {lam!r}: chain ends at {final!r}")
                except Exception as exc:
                    greedy.record(False, f"p={p} {lam!r}: {exc}")
        for n in range(1, 13):
            for lam in pt.partitions_of(n):
                mu = pt.james_envelope(lam, p)
                ok = (
                    mu.contains(lam)
                    and len(mu) == len(lam)
                    and pt.james_condition(mu, p)
                )
                envelope.record(ok, f"p={p} {lam!r}: envelope {mu!r}")
    rng = _rng(seed, "partitions")
    for _ in range(instances):
        p = rng.choice((2, 3, 5))
        n = rng.randrange(1, 40)
        value = pt.faithfulness_bound(p, n)
        expected = n * (p - 1) * (p ** pt.ell_p(p, n) - 1)
        bound.record(value == expected and value >= n, f"p={p} n={n}: {value}")
    return _report("partitions", seed, [greedy, envelope, bound])


def suite_mckay(seed=7, cap=None, instances=None):
    """McKay graphs of the two-dimensional simple are type-A paths."""
    paths = _Check("McKay graph of L_2 is the A_(p-1) path")
    for p in (5, 7):
        graph = mckay_graph(VerObject.simple(p, 2))
        ok = graph.vertices == tuple(range(1, p)) and graph.is_path()
        paths.record(ok, f"p={p}: {graph!r}")
    return _report("mckay", seed, [paths])


SUITES = {
    "fusion-oracle": suite_fusion_oracle,
    "fpdim-ring": suite_fpdim_ring,
    "delta": suite_delta,
    "alt-dimension": suite_alt_dimension,
    "padic": suite_padic,
    "frobenius": suite_frobenius,
    "frobenius-iterate": suite_frobenius_iterate,
    "symmetric-action": suite_symmetric_action,
    "partitions": suite_partitions,
    "mckay": suite_mckay,
}


def run_suite(name, seed=7, cap=None, instances=None):
    if name not in SUITES:
        raise ValidationError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    fn = SUITES[name]
    if instances is None:
        return fn(seed=seed, cap=cap)
    return fn(seed=seed, cap=cap, instances=instances)


def run_all(seed=7, cap=None, instances=None):
    return [run_suite(name, seed=seed, cap=cap, instances=instances) for name in SUITES]
