"""Command line front end.

Representations come either from JSON files or from catalog
expressions prefixed with ``catalog:``.  All snapped quantities are
printed as integers; weight-one rows whose value is only a lower bound
carry a trailing ``+``.

Exit codes: 0 on success, 1 on usage or file format problems, 2 when a
representation fails validation or a requested computation cannot be
completed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, repfile
from .dimensions import EXACT, dim_table
from .invariants import even_invariants, odd_invariants
from .linalg import SnapFailure, set_default_tolerance
from .modrep import (
    ClosureCapExceeded,
    ModularRepresentation,
    ParityError,
    ProjectorDefect,
    RelationViolation,
    TOrderNotFound,
    parity_split,
    set_default_closure_cap,
    set_default_order_cap,
    validate,
)
from .series import CUSP, HOLOMORPHIC, Weight1Indeterminate, duality_report, generator_profile, hilbert_series

_USAGE_ERRORS = (repfile.ParseError, catalog.CatalogError, OSError)
_VALIDATION_ERRORS = (RelationViolation, TOrderNotFound, ClosureCapExceeded,
                      ProjectorDefect, ParityError, SnapFailure,
                      Weight1Indeterminate, ValueError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_source(source: str) -> ModularRepresentation:
    if source.startswith("catalog:"):
        return catalog.resolve(source[len("catalog:"):])
    return repfile.parse_rep(source)


def _mark(result) -> str:
    return str(result.value) + ("" if result.status == EXACT else "+")


def _fractions(values) -> list[str]:
    return [str(x) for x in values]


def _even_info(part):
    inv = even_invariants(part)
    return {
        "degree": part.degree,
        "signature": {"d": inv.sig.d, "alpha": inv.sig.alpha,
                      "beta1": inv.sig.beta1, "beta2": inv.sig.beta2},
        "t_phases": _fractions(inv.exp.phases),
        "trace_lambda": str(inv.exp.trace_lambda),
        "lambda_plus": inv.lambda_plus,
        "lambda_minus": inv.lambda_minus,
        "h0": inv.h0,
        "gamma": {str(k): inv.gamma(k) for k in range(-6, 12)},
    }


def _odd_info(part):
    inv = odd_invariants(part)
    return {
        "degree": part.degree,
        "partner_signature": {"d": inv.dot_sig.d, "alpha": inv.dot_sig.alpha,
                              "beta1": inv.dot_sig.beta1, "beta2": inv.dot_sig.beta2},
        "t_phases": _fractions(inv.dot_exp.phases),
        "trace_lambda": str(inv.dot_exp.trace_lambda),
        "lambda_plus": inv.dot_lambda_plus,
        "lambda_minus": inv.dot_lambda_minus,
        "gamma": {str(k): inv.dot_gamma(k) for k in range(-6, 12)},
    }


def _print_invariant_block(label, data):
    print(f"{label}: degree {data['degree']}")
    sig = data.get("signature") or data.get("partner_signature")
    print(f"  signature: alpha={sig['alpha']} beta1={sig['beta1']} beta2={sig['beta2']}")
    print(f"  t phases: {' '.join(data['t_phases'])}")
    print(f"  trace of log t: {data['trace_lambda']}")
    print(f"  lambda+ {data['lambda_plus']}   lambda- {data['lambda_minus']}", end="")
    if "h0" in data:
        print(f"   h0 {data['h0']}")
    else:
        print()
    gammas = " ".join(str(data["gamma"][str(k)]) for k in range(-6, 12))
    print(f"  gamma(-6..11): {gammas}")


def _cmd_validate(args) -> int:
    rep = _load_source(args.source)
    report = validate(rep, closure_cap=args.closure_cap)
    if args.json:
        doc = {"rep": rep.name, "degree": rep.degree, "relations_ok": report.relations_ok,
               "t_order": report.t_order, "max_residual": report.max_residual,
               "group_size": report.group_size}
        print(json.dumps(doc, indent=2))
        return 0
    print(f"rep {rep.name}: relations ok, t order {report.t_order}, "
          f"max residual {report.max_residual:.2e}")
    if report.group_size is not None:
        print(f"group size: {report.group_size}")
    return 0


def _cmd_info(args) -> int:
    rep = _load_source(args.source)
    validate(rep)
    split = parity_split(rep)
    doc = {"rep": rep.name, "degree": rep.degree, "t_order": rep.t_order,
           "even": _even_info(split.even_part) if split.even_part.degree else None,
           "odd": _odd_info(split.odd_part) if split.odd_part.degree else None}
    if args.json:
        print(json.dumps(doc, indent=2))
        return 0
    print(f"rep {rep.name}: degree {rep.degree}, t order {rep.t_order}")
    for label, block in (("even part", doc["even"]), ("odd part", doc["odd"])):
        if block is None:
            print(f"{label}: none")
        else:
            _print_invariant_block(label, block)
    return 0


def _cmd_dims(args) -> int:
    if args.from_weight > args.to_weight:
        print(f"vvmf dims: empty weight range {args.from_weight}..{args.to_weight}",
              file=sys.stderr)
        return 1
    rep = _load_source(args.source)
    validate(rep)
    rows = dim_table(rep, args.from_weight, args.to_weight)
    if args.json:
        doc = {"rep": rep.name, "degree": rep.degree,
               "weights": [{"w": w, "dimM": m.value, "dimS": s.value,
                            "statusM": m.status, "statusS": s.status} for w, m, s in rows]}
        print(json.dumps(doc, indent=2))
        return 0
    print(f"rep {rep.name}: degree {rep.degree}")
    print(f"{'weight':>6}  {'dim M':>6}  {'dim S':>6}")
    for w, m, s in rows:
        print(f"{w:>6}  {_mark(m):>6}  {_mark(s):>6}")
    return 0


def _cmd_generators(args) -> int:
    rep = _load_source(args.source)
    validate(rep)
    kind = CUSP if args.cusp else HOLOMORPHIC
    profile = generator_profile(rep, kind)
    series = hilbert_series(rep, kind)
    if args.json:
        doc = {"rep": rep.name, "degree": rep.degree, "kind": kind,
               "counts": {str(w): c for w, c in sorted(profile.counts.items())},
               "numerator": list(series.numerator)}
        print(json.dumps(doc, indent=2))
        return 0
    print(f"rep {rep.name}: degree {rep.degree}, {kind} module")
    print(f"{'weight':>6}  {'generators':>10}")
    for w in sorted(profile.counts):
        print(f"{w:>6}  {profile.counts[w]:>10}")
    print(f"numerator coefficients (z^0..): {' '.join(str(c) for c in series.numerator)}")
    print(f"denominator: {series.denominator}")
    return 0


def _cmd_duality(args) -> int:
    rep = _load_source(args.source)
    validate(rep)
    report = duality_report(rep, args.nmax)
    if args.json:
        doc = {"rep": report.rep_name, "dual": report.dual_name, "n_max": report.n_max,
               "checks": [{"name": c.name, "status": c.status,
                           "counterexamples": [list(x) if isinstance(x, tuple) else x
                                               for x in c.counterexamples],
                           "note": c.note} for c in report.checks]}
        print(json.dumps(doc, indent=2))
    else:
        print(f"rep {report.rep_name} against {report.dual_name} (n up to {report.n_max})")
        for c in report.checks:
            detail = c.note
            if c.counterexamples:
                detail = f"counterexamples: {list(c.counterexamples)}"
            print(f"  {c.name:<22} {c.status:<8} {detail}".rstrip())
    return 0 if report.ok else 2


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.catalog_names():
            print(name)
        return 0
    raise AssertionError(args.action)


def _build_parser() -> _Parser:
    parser = _Parser(prog="vvmf",
                     description="Dimensions and generator weights of vector-valued "
                                 "modular form spaces from finite generator images.")
    parser.add_argument("--tolerance", type=float,
                        default=float(os.environ.get("VVMF_TOLERANCE", "0") or 0) or None,
                        help="absolute comparison tolerance (default 1e-9)")
    parser.add_argument("--order-cap", type=int,
                        default=int(os.environ.get("VVMF_ORDER_CAP", "0") or 0) or None,
                        help="largest t order searched for (default 4096)")
    parser.add_argument("--closure-cap", type=int, dest="global_closure_cap",
                        default=int(os.environ.get("VVMF_CLOSURE_CAP", "0") or 0) or None,
                        help="largest matrix group enumerated (default 20000)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the group relations and t order")
    p.add_argument("source", help="representation file or catalog:EXPR")
    p.add_argument("--closure-cap", type=int, default=None,
                   help="also enumerate the image group, up to this many elements")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("info", help="print parity parts and their invariants")
    p.add_argument("source")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("dims", help="dimension table over a weight range")
    p.add_argument("source")
    p.add_argument("--from", dest="from_weight", type=int, required=True, metavar="W1")
    p.add_argument("--to", dest="to_weight", type=int, required=True, metavar="W2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("generators", help="free generator weights and Hilbert numerator")
    p.add_argument("source")
    p.add_argument("--cusp", action="store_true", help="cusp module instead of holomorphic")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_generators)

    p = sub.add_parser("duality", help="verify identities against the dual representation")
    p.add_argument("source")
    p.add_argument("--nmax", type=int, default=3, help="sweep depth (default 3)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_duality)

    p = sub.add_parser("catalog", help="built-in representations")
    p.add_argument("action", choices=["list"])
    p.set_defaults(func=_cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.tolerance is not None:
            set_default_tolerance(args.tolerance)
        if args.order_cap is not None:
            set_default_order_cap(args.order_cap)
        if args.global_closure_cap is not None:
            set_default_closure_cap(args.global_closure_cap)
    except ValueError as err:
        print(f"vvmf: error: {err}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except _USAGE_ERRORS as err:
        print(f"vvmf: error: {err}", file=sys.stderr)
        return 1
    except _VALIDATION_ERRORS as err:
        print(f"vvmf: {type(err).__name__}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
