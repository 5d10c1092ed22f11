"""Command-line surface: every library operation plus the verify suites.

Objects are given either as JSON (the same schema the library emits) or
as shorthand: "L2 + 2*L3" for Ver_p objects, "J2 + J5" for Jordan types.
Output is canonical JSON by default (--format table for a human layout).

Exit codes: 0 success, 2 validation error, 3 cap exceeded, 64 unknown
command; `verify` exits 0 only when every property check passed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import dimensions, fusion, modrep, partitions, verify
from .cyclotomic import CycNum, numeric_eval, qint
from .errors import CapExceededError, ValidationError, VerlindeLabError
from .fusion import VerObject, parse_ver_object
from .modrep import CyclicRep, JordanType

COMMANDS = (
    "fuse",
    "fpdim",
    "dim-mod-p",
    "frobenius",
    "frobenius-en",
    "frobenius-type",
    "mckay",
    "tensor",
    "jordan",
    "ssimp",
    "alt-power",
    "fr-plus",
    "delta",
    "delta-n",
    "ad",
    "gd",
    "sd-at-least",
    "padic",
    "recover-content",
    "partition",
    "verify",
)

PARTITION_SUBCOMMANDS = (
    "is-regular",
    "core",
    "rho",
    "conormal",
    "greedy",
    "james-check",
    "james-envelope",
    "ell",
    "bound",
)


def _parse_object(p, text):
    text = text.strip()
    if text.startswith("{"):
        return VerObject.from_json(json.loads(text))
    return parse_ver_object(p, text)


def _parse_jordan(p, text):
    text = text.strip()
    if text.startswith("{"):
        return JordanType.from_json(json.loads(text))
    return JordanType.parse(p, text)


def _parse_cyc(p, text):
    text = text.strip()
    if text.startswith("{"):
        return CycNum.from_json(json.loads(text))
    raise ValidationError("cyclotomic inputs must be JSON {\"p\": ..., \"coeffs\": [...]}")


def _parse_matrix(text):
    data = json.loads(text)
    return np.asarray(data, dtype=np.int64)


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        _emit_table(payload)


def _emit_table(payload, indent=""):
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_table(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                _emit_table(value, indent + "  ")
                print()
            else:
                print(f"{indent}{value}")
    else:
        print(f"{indent}{payload}")


def _cyc_payload(x, precision):
    box = numeric_eval(x, precision)
    return {
        "p": x.p,
        "coeffs": list(x.coeffs),
        "text": x.render(),
        "approx": float(box.mid),
    }


def build_parser():
    parser = argparse.ArgumentParser(
        prog="verlinde-lab",
        description="Exact fusion-ring, Jordan-type and partition computations",
    )
    sub = parser.add_subparsers(dest="command")

    def common(sp, objects=0, jordans=0, needs_n=False):
        sp.add_argument("--p", type=int, required=True, help="the prime")
        for _ in range(objects):
            sp.add_argument(
                "--object",
                action="append",
                default=None,
                help='Ver_p object, JSON or shorthand like "L2 + 2*L3"',
            )
        for _ in range(jordans):
            sp.add_argument(
                "--jordan",
                action="append",
                default=None,
                help='Jordan type, JSON or shorthand like "J2 + J5"',
            )
        if needs_n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--cap", type=int, default=None, help="tensor-power column cap")
        sp.add_argument("--precision", type=int, default=128, help="interval precision bits")
        sp.add_argument("--format", choices=("json", "table"), default="json")
        return sp

    common(sub.add_parser("fuse", help="tensor product in the fusion ring"), objects=1)
    common(sub.add_parser("fpdim", help="Frobenius-Perron dimension"), objects=1)
    common(sub.add_parser("dim-mod-p", help="categorical dimension mod p"), objects=1)
    common(sub.add_parser("frobenius", help="Frobenius functor"), objects=1)
    common(sub.add_parser("frobenius-en", help="enhanced Frobenius functor"), objects=1)
    common(sub.add_parser("frobenius-type", help="minimal receiving subcategory"), objects=1)
    common(sub.add_parser("mckay", help="McKay graph of tensoring"), objects=1)
    common(sub.add_parser("tensor", help="tensor product of Jordan types"), jordans=1)
    jp = common(sub.add_parser("jordan", help="Jordan type of a nilpotent matrix"))
    jp.add_argument("--matrix", required=True, help="nilpotent matrix as JSON rows")
    jp.add_argument("--alpha", default=None, help="optional commuting nilpotent (pi-point)")
    common(sub.add_parser("ssimp", help="semisimplify a Jordan type"), jordans=1)
    common(sub.add_parser("alt-power", help="alternating power inside Ver_p"), objects=1, needs_n=True)
    common(sub.add_parser("fr-plus", help="invariants-to-coinvariants image"), jordans=1, needs_n=True)
    common(sub.add_parser("delta", help="growth rate of non-projective summands"), jordans=1)
    common(sub.add_parser("delta-n", help="non-projective summand count in a power"), jordans=1, needs_n=True)
    adp = common(sub.add_parser("ad", help="alternating dimension"), objects=1)
    adp.add_argument("--no-verify", action="store_true", help="skip the brute-force certificate")
    gdp = common(sub.add_parser("gd", help="growth dimension"), objects=1)
    gdp.add_argument("--empirical", type=int, default=0, metavar="NMAX", help="also report convergents")
    common(sub.add_parser("sd-at-least", help="symmetric-group faithfulness at level n"), jordans=1, needs_n=True)
    common(sub.add_parser("padic", help="p-adic dimension of an object"), objects=1)
    rc = common(sub.add_parser("recover-content", help="block content from delta invariants"))
    rc.add_argument("--d1", required=True, help="delta(V) as JSON")
    rc.add_argument("--d2", required=True, help="delta(S^2 V) - delta(wedge^2 V) as JSON")

    pp = sub.add_parser("partition", help="partition combinatorics")
    pp.add_argument("sub", choices=PARTITION_SUBCOMMANDS)
    pp.add_argument("--p", type=int, required=True)
    pp.add_argument("--parts", default="", help='partition like "3,2,1" or JSON')
    pp.add_argument("--k", type=int, default=None)
    pp.add_argument("--a", type=int, default=None)
    pp.add_argument("--n", type=int, default=None)
    pp.add_argument("--residue", type=int, default=None)
    pp.add_argument("--format", choices=("json", "table"), default="json")

    vp = sub.add_parser("verify", help="run property suites")
    vp.add_argument("suite", help="suite name or 'all'")
    vp.add_argument("--p", type=int, default=None, help="unused, for symmetry")
    vp.add_argument("--seed", type=int, default=7)
    vp.add_argument("--instances", type=int, default=None)
    vp.add_argument("--cap", type=int, default=None)
    vp.add_argument("--format", choices=("json", "table"), default="json")

    return parser


def _objects(args, count=None):
    texts = args.object or []
    if count is not None and len(texts) != count:
        raise ValidationError(f"expected {count} --object arguments, got {len(texts)}")
    return [_parse_object(args.p, t) for t in texts]


def _jordans(args, count=None):
    texts = args.jordan or []
    if count is not None and len(texts) != count:
        raise ValidationError(f"expected {count} --jordan arguments, got {len(texts)}")
    return [_parse_jordan(args.p, t) for t in texts]


def _run_command(args):
    cmd = args.command
    fmt = getattr(args, "format", "json")

    if cmd == "fuse":
        X, Y = _objects(args, 2)
        _emit(fusion.fuse(X, Y).to_json(), fmt)
    elif cmd == "fpdim":
        (X,) = _objects(args, 1)
        value = fusion.fpdim(X)
        if fmt == "json" and value.is_integer():
            print(json.dumps(value.render()))
        else:
            _emit(_cyc_payload(value, args.precision), fmt)
    elif cmd == "dim-mod-p":
        (X,) = _objects(args, 1)
        _emit(fusion.cat_dim_mod_p(X), fmt)
    elif cmd == "frobenius":
        (X,) = _objects(args, 1)
        _emit(fusion.frobenius(X).to_json(), fmt)
    elif cmd == "frobenius-en":
        (X,) = _objects(args, 1)
        _emit(fusion.frobenius_enhanced(X).to_json(), fmt)
    elif cmd == "frobenius-type":
        (X,) = _objects(args, 1)
        _emit(fusion.frobenius_type(X), fmt)
    elif cmd == "mckay":
        (X,) = _objects(args, 1)
        _emit(fusion.mckay_graph(X).to_json(), fmt)
    elif cmd == "tensor":
        A, B = _jordans(args, 2)
        V = CyclicRep.from_jordan_type(A)
        W = CyclicRep.from_jordan_type(B)
        _emit(modrep.jordan_type_of(modrep.tensor(V, W, args.cap)).to_json(), fmt)
    elif cmd == "jordan":
        M = _parse_matrix(args.matrix)
        if args.alpha is not None:
            alpha = _parse_matrix(args.alpha)
            _emit(modrep.jordan_type_at(M, alpha, args.p).to_json(), fmt)
        else:
            _emit(modrep.jordan_type_of(CyclicRep(args.p, M)).to_json(), fmt)
    elif cmd == "ssimp":
        (A,) = _jordans(args, 1)
        _emit(modrep.semisimplify(A).to_json(), fmt)
    elif cmd == "alt-power":
        (X,) = _objects(args, 1)
        _emit(modrep.alt_power_ver(X, args.n, args.cap).to_json(), fmt)
    elif cmd == "fr-plus":
        (A,) = _jordans(args, 1)
        V = CyclicRep.from_jordan_type(A)
        _emit(modrep.jordan_type_of(modrep.fr_plus(V, args.n, args.cap)).to_json(), fmt)
    elif cmd == "delta":
        (A,) = _jordans(args, 1)
        _emit(_cyc_payload(dimensions.delta(A), args.precision), fmt)
    elif cmd == "delta-n":
        (A,) = _jordans(args, 1)
        V = CyclicRep.from_jordan_type(A)
        _emit(dimensions.delta_n(V, args.n, args.cap), fmt)
    elif cmd == "ad":
        (X,) = _objects(args, 1)
        _emit(dimensions.ad(X, cap=args.cap, verify=not args.no_verify), fmt)
    elif cmd == "gd":
        (X,) = _objects(args, 1)
        payload = _cyc_payload(dimensions.gd(X), args.precision)
        if args.empirical:
            payload["convergents"] = dimensions.gd_sequence(X, args.empirical)
        _emit(payload, fmt)
    elif cmd == "sd-at-least":
        (A,) = _jordans(args, 1)
        V = CyclicRep.from_jordan_type(A)
        _emit(dimensions.sd_at_least(V, args.n, args.cap), fmt)
    elif cmd == "padic":
        (X,) = _objects(args, 1)
        _emit(dimensions.padic_dimension_of(X, args.cap).to_json(), fmt)
    elif cmd == "recover-content":
        d1 = _parse_cyc(args.p, args.d1)
        d2 = _parse_cyc(args.p, args.d2)
        _emit(dimensions.recover_jordan_content(args.p, d1, d2).to_json(), fmt)
    elif cmd == "partition":
        _run_partition(args, fmt)
    elif cmd == "verify":
        return _run_verify(args, fmt)
    else:  # pragma: no cover - guarded by main()
        raise ValidationError(f"unknown command {cmd!r}")
    return 0


def _run_partition(args, fmt):
    p = args.p
    sub = args.sub
    lam = partitions.Partition.parse(args.parts) if args.parts or sub not in ("rho", "ell", "bound") else None
    if sub == "is-regular":
        _emit(partitions.is_p_regular(lam, p), fmt)
    elif sub == "core":
        _emit(partitions.p_core(lam, p).to_json(), fmt)
    elif sub == "rho":
        if args.k is None:
            raise ValidationError("rho needs --k")
        _emit(partitions.rho(p, args.k).to_json(), fmt)
    elif sub == "conormal":
        if args.residue is None:
            raise ValidationError("conormal needs --residue")
        boxes = partitions.conormal_boxes(lam, p, args.residue)
        _emit([[b.row, b.col] for b in boxes], fmt)
    elif sub == "greedy":
        chain = partitions.greedy_to_rho(lam, p)
        _emit([mu.to_json() for mu in chain], fmt)
    elif sub == "james-check":
        _emit(partitions.james_condition(lam, p), fmt)
    elif sub == "james-envelope":
        _emit(partitions.james_envelope(lam, p).to_json(), fmt)
    elif sub == "ell":
        if args.a is None:
            raise ValidationError("ell needs --a")
        _emit(partitions.ell_p(p, args.a), fmt)
    elif sub == "bound":
        if args.n is None:
            raise ValidationError("bound needs --n")
        _emit(partitions.faithfulness_bound(p, args.n), fmt)


def _run_verify(args, fmt):
    if args.suite == "all":
        reports = verify.run_all(seed=args.seed, cap=args.cap, instances=args.instances)
    else:
        reports = [
            verify.run_suite(args.suite, seed=args.seed, cap=args.cap, instances=args.instances)
        ]
    failures = sum(r["failures"] for r in reports)
    if fmt == "json":
        print(json.dumps(reports, sort_keys=True))
    else:
        for r in reports:
            status = "ok" if r["failures"] == 0 else f"{r['failures']} FAILURES"
            print(f"suite {r['suite']}: {r['instances']} instances, {status}")
            for check in r["checks"]:
                print(f"  - {check['property']}: {check['instances']} instances, "
                      f"{len(check['failures'])} failures")
                for msg in check["failures"][:5]:
                    print(f"      {msg}")
    return 0 if failures == 0 else 1


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
        print(f"unknown command: {argv[0]}", file=sys.stderr)
        return 64
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 64
    try:
        return _run_command(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, VerlindeLabError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
