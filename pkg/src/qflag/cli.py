"""Command-line frontend: every computation, JSON (default) or table output.

Exit codes: 0 success, 1 domain error, 2 usage error.
Rationals are passed as "p/q" strings; floats need an explicit --float.
The environment variable QFLAG_TRUNC_N overrides the default truncation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import classify as _classify
from . import haar as _haar
from . import qcalc, repdata, rootsys, soibelman


def _default_trunc() -> int:
    return int(os.environ.get("QFLAG_TRUNC_N", soibelman.DEFAULT_TRUNC))


def _parse_q(args) -> Fraction | float:
    if getattr(args, "float", False):
        return float(args.q)
    try:
        return Fraction(args.q)
    except ValueError:
        raise ValueError(f"q={args.q!r} is not a rational; pass --float to allow floats")


def _rs(args) -> rootsys.RootSystem:
    return rootsys.build_root_system(rootsys.LieType(args.type, args.rank))


def _weight(args, rs) -> rootsys.Weight:
    coords = tuple(int(c) for c in args.lam.split(","))
    if len(coords) != rs.rank:
        raise ValueError(f"expected {rs.rank} weight coordinates, got {len(coords)}")
    return rootsys.Weight(coords)


def _emit(args, payload: dict):
    if getattr(args, "format", "json") == "table":
        for key, value in payload.items():
            print(f"{key:24} {value}")
    else:
        print(json.dumps(payload, indent=2, default=str))


def _add_type_rank(p):
    p.add_argument("--type", required=True, choices=list("ABCDEFG"))
    p.add_argument("--rank", required=True, type=int)


def _add_q(p, required=True):
    p.add_argument("--q", required=required, default="1/2")
    p.add_argument("--float", action="store_true", help="interpret --q as a float")


def _cmd_rootsys(args):
    rs = _rs(args)
    _emit(args, {
        "type": str(rs.lie_type),
        "cartan": [list(r) for r in rs.cartan],
        "symmetrizers": list(rs.d),
        "gram": [[str(x) for x in row] for row in rs.gram],
        "w0_word": list(rs.w0_word),
        "positive_roots": [list(b.coords) for b in rs.positive_roots],
        "num_positive_roots": len(rs.positive_roots),
    })


def _cmd_weights(args):
    rs = _rs(args)
    table = repdata.weight_table(rs, _weight(args, rs))
    _emit(args, {
        "highest": list(table.highest.coords),
        "dimension": table.dimension(),
        "multiplicities": {
            ",".join(map(str, mu.coords)): m
            for mu, m in sorted(table.entries.items(), key=lambda t: t[0].coords)
        },
    })


def _cmd_qdim(args):
    rs = _rs(args)
    poly = qcalc.quantum_dim_product(rs, _weight(args, rs))
    _emit(args, {"terms": poly.to_terms()})


def _cmd_fmatrix(args):
    rs = _rs(args)
    lam = _weight(args, rs)
    table = repdata.weight_table(rs, lam)
    exps = qcalc.f_matrix_exponents(rs, lam, table)
    _emit(args, {"exponent_multiset": [[e, exps[e]] for e in sorted(exps)]})


def _cmd_haar_p0(args):
    rs = _rs(args)
    poly = _haar.haar_p0(rs)
    out = {"terms": poly.to_terms()}
    if args.eval:
        q = _parse_q(args)
        value = poly.evaluate(q)
        if isinstance(value, Fraction):
            out["value_exact"] = str(value)
        else:
            out["value_float"] = value
    _emit(args, out)


def _cmd_haar_alambda(args):
    rs = _rs(args)
    res = _haar.haar_a_lambda_sq(rs, _weight(args, rs))
    _emit(args, {
        "via_product": res["via_product"].to_json(),
        "via_orthogonality": res["via_orthogonality"].to_json(),
        "equal": res["equal"],
    })


def _cmd_haar_diag(args):
    rs = _rs(args)
    m = tuple(int(c) for c in args.m.split(","))
    poly = _haar.haar_diag_mass(rs, m)
    out = {"terms": poly.to_terms()}
    if args.eval:
        q = _parse_q(args)
        value = poly.evaluate(q)
        if isinstance(value, Fraction):
            out["value_exact"] = str(value)
        else:
            out["value_float"] = value
    _emit(args, out)


def _cmd_su2_haar(args):
    q = float(Fraction(args.q)) if not args.float else float(args.q)
    report = _haar.su2_haar_report(args.word, q, args.trunc)
    _emit(args, report)


def _cmd_su2_ortho(args):
    q = float(Fraction(args.q)) if not args.float else float(args.q)
    report = _haar.su2_orthogonality_suite(q, args.trunc)
    _emit(args, {"max_deviation": report["max_deviation"], "q": q, "trunc": args.trunc})


def _cmd_spectrum(args):
    rs = _rs(args)
    q = float(Fraction(args.q)) if not args.float else float(args.q)
    model = soibelman.diagonal_model(rs, _weight(args, rs), q=q, n=args.trunc)
    spec = soibelman.spectrum(model, args.cutoff)
    _emit(args, {
        "exponents": list(model.exponents),
        "spectrum": [[v, m] for v, m in spec],
    })


def _cmd_gap(args):
    rs = _rs(args)
    q = float(Fraction(args.q)) if not args.float else float(args.q)
    model = soibelman.diagonal_model(rs, _weight(args, rs), q=q, n=args.trunc)
    gap = soibelman.power_norm_gap(model, args.m, args.n)
    _emit(args, {
        "exponents": list(model.exponents),
        "gap": gap,
        "bound": q ** args.m,
        "within_bound": gap <= q ** args.m + 1e-15,
    })


def _cmd_classify(args):
    if args.spec:
        with open(args.spec) as fh:
            data = json.load(fh)
    else:
        data = json.loads(args.json)
    spec = _classify.action_spec_from_json(data)
    result = _classify.classify_action(spec)
    _emit(args, _classify.classification_to_json(result))


def _cmd_selftest(args):
    from . import selftest

    failures = selftest.run(verbose=True)
    if failures:
        print(f"FAILED: {failures} check group(s)")
        sys.exit(1)
    print("all self-test groups passed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qflag", description=__doc__)
    parser.add_argument("--format", choices=["json", "table"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rootsys", help="Cartan datum, w0 word, positive roots")
    _add_type_rank(p)
    p.set_defaults(func=_cmd_rootsys)

    p = sub.add_parser("weights", help="weight multiplicity table")
    _add_type_rank(p)
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated coords")
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("qdim", help="quantum dimension as a Laurent polynomial")
    _add_type_rank(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=_cmd_qdim)

    p = sub.add_parser("fmatrix", help="diagonal character exponent multiset")
    _add_type_rank(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=_cmd_fmatrix)

    p = sub.add_parser("haar-p0", help="Haar mass of the minimal projection")
    _add_type_rank(p)
    _add_q(p, required=False)
    p.add_argument("--eval", action="store_true")
    p.set_defaults(func=_cmd_haar_p0)

    p = sub.add_parser("haar-alambda", help="h(|a_lambda|^2) by two routes")
    _add_type_rank(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=_cmd_haar_alambda)

    p = sub.add_parser("haar-diag", help="Haar mass of a diagonal grid projection")
    _add_type_rank(p)
    p.add_argument("--m", required=True, help="comma-separated grid indices")
    _add_q(p, required=False)
    p.add_argument("--eval", action="store_true")
    p.set_defaults(func=_cmd_haar_diag)

    p = sub.add_parser("su2-haar", help="Haar state of a generator word")
    p.add_argument("--word", required=True, help='e.g. "x x*"')
    _add_q(p)
    p.add_argument("--trunc", type=int, default=_default_trunc())
    p.set_defaults(func=_cmd_su2_haar)

    p = sub.add_parser("su2-ortho", help="orthogonality relation suite")
    _add_q(p)
    p.add_argument("--trunc", type=int, default=_default_trunc())
    p.set_defaults(func=_cmd_su2_ortho)

    p = sub.add_parser("soibelman-spectrum", help="spectrum of the diagonal model")
    _add_type_rank(p)
    p.add_argument("--lambda", dest="lam", required=True)
    _add_q(p)
    p.add_argument("--trunc", type=int, default=_default_trunc())
    p.add_argument("--cutoff", type=float, default=1e-6)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("soibelman-gap", help="norm gap of diagonal-model powers")
    _add_type_rank(p)
    p.add_argument("--lambda", dest="lam", required=True)
    _add_q(p)
    p.add_argument("--trunc", type=int, default=_default_trunc())
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=_cmd_gap)

    p = sub.add_parser("classify", help="classify a product-type action")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--spec", help="path to an action spec JSON file")
    g.add_argument("--json", help="inline action spec JSON")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("selftest", help="run the invariant suite")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, ArithmeticError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
