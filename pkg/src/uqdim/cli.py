"""Command-line surface: dimensions, quantum-dimension series, identity
verification runs, symmetric-cube decomposition tables and one-instanton sums.

Every command is deterministic given its full flag set (including --seed) and
--json emits one canonical machine-readable document per invocation.  Exact
values are printed as rational strings "p/q", never as floats.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
3 parameter-space pole, 4 evaluation pole in x.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import (
    InvalidRank,
    LengthMismatch,
    PoleAtParameters,
    PoleAtX,
    UnknownAlgebra,
    ZeroDenominatorForm,
)
from .identities import NUMERIC, SERIES, verify_identity
from .instanton import InstantonParams, one_instanton_sum
from .roots import build_root_system, weight_from_dynkin, weyl_dim, weyl_qdim
from .series import DEFAULT_ORDER
from .universal import (
    SLOTS,
    VogelParams,
    adjoint_product,
    cartan_power_product,
    casimir_adjoint,
    casimir_y2,
    dim_adjoint,
    line_params,
    parse_algebra,
    vogel_params,
    x2_product,
    y2_product,
    z_dim_along_family,
    z_product,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PARAM_POLE = 3
EXIT_X_POLE = 4


class _UsageError(Exception):
    pass


def default_order() -> int:
    """Series truncation order, overridable via QDIM_SERIES_ORDER."""
    return int(os.environ.get("QDIM_SERIES_ORDER", DEFAULT_ORDER))


def _frac(value: Fraction) -> str:
    return str(Fraction(value))


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

SPECIALIZATION_ALGEBRAS = ("sl6", "so7", "sp6", "so12", "g2", "f4", "e6", "e7", "e8")

#: Dynkin labels of the Cartan product of adjoint and Y2(beta) in the
#: symmetric-cube decomposition tables.
Z11_DYNKIN = {
    "sl6": (1, 1, 0, 1, 1),
    "f4": (1, 0, 0, 2),
    "so12": (0, 1, 0, 1, 0, 0),
}


def run_specialization(order: int = DEFAULT_ORDER) -> dict:
    """Universal-vs-Weyl cross-check: Cartan powers n = 1..3 for the nine
    reference algebras, plus the mixed Cartan product against its tabulated
    Dynkin weight for sl6, f4 and so12."""
    checks = []
    for name in SPECIALIZATION_ALGEBRAS:
        aid = parse_algebra(name)
        v = vogel_params(aid)
        rs = build_root_system(aid.family, aid.rank)
        for n in range(1, 4):
            lam = rs.weight(tuple(n * c for c in rs.theta))
            universal = cartan_power_product(v, n).series(order)
            oracle = weyl_qdim(rs, lam, order)
            checks.append({
                "check": f"{name}: cartan power n={n} vs Weyl oracle",
                "ok": universal == oracle,
            })
    for name, labels in Z11_DYNKIN.items():
        aid = parse_algebra(name)
        v = vogel_params(aid)
        rs = build_root_system(aid.family, aid.rank)
        constant = z_product(v, 1, 1).dim()
        oracle = weyl_dim(rs, weight_from_dynkin(rs, labels))
        checks.append({
            "check": f"{name}: adjoint*Y2(beta) dimension vs Dynkin "
                     + "".join(str(x) for x in labels),
            "ok": constant == oracle,
            "universal": _frac(constant),
            "weyl": _frac(oracle),
        })
    return {"checks": checks, "passed": all(c["ok"] for c in checks)}


def run_g2_vanishing(order: int = DEFAULT_ORDER) -> dict:
    """At the g2 point the mixed Cartan products vanish identically for two
    or more Y2(beta) factors, and match the rank-two Weyl oracle for one."""
    v = vogel_params("g2")
    rs = build_root_system("G", 2)
    sigma = rs.sigma
    checks = []
    for k in range(4):
        for p in (2, 3):
            series = z_product(v, k, p).series(order)
            checks.append({
                "check": f"z(k={k}, l={p}) at g2 is the zero series",
                "ok": series.is_zero,
            })
    for k in range(4):
        vec = tuple((k + 1) * t + s for t, s in zip(rs.theta, sigma))
        oracle = weyl_qdim(rs, rs.weight(vec), order)
        series = z_product(v, k, 1).series(order)
        checks.append({
            "check": f"z(k={k}, l=1) at g2 equals the Weyl-line closed form",
            "ok": series == oracle,
        })
    return {"checks": checks, "passed": all(c["ok"] for c in checks)}


# ---------------------------------------------------------------------------
# symmetric-cube decomposition tables
# ---------------------------------------------------------------------------

# One-parameter families through the table algebras, in the same slot
# ordering as their Vogel parameters (the exceptional line of line_params
# carries beta and gamma the other way around).
_TABLE_FAMILIES = {
    "s3-sl6": (lambda n: line_params("sl", n), Fraction(6)),
    "s3-f4": (lambda n: line_params("exc", n).permuted((0, 2, 1)), Fraction(1)),
    "s3-so12": (lambda n: line_params("so", n), Fraction(12)),
}

_TABLES = {
    "s3-sl6": {
        "algebra": "sl6",
        "rows": [
            ("adjoint", "adjoint", None, ((1, 0, 0, 0, 1),), 2),
            ("Y3(alpha)", "y3", (0, 1, 2), ((3, 0, 0, 0, 3),), 1),
            ("Y3(beta)", "y3", (1, 0, 2), ((0, 0, 2, 0, 0),), 1),
            ("Y3(gamma)", "y3", (2, 1, 0), None, 1),
            ("X2", "x2", None, ((2, 0, 0, 1, 0), (0, 1, 0, 0, 2)), 1),
            ("g.Y2(beta)(alpha,beta,gamma)", "z11", (0, 1, 2), ((1, 1, 0, 1, 1),), 1),
            ("g.Y2(beta)(alpha,gamma,beta)", "z11", (0, 2, 1), ((2, 0, 0, 0, 2),), 1),
            ("g.Y2(beta)(beta,gamma,alpha)", "z11", (1, 2, 0), ((0, 1, 0, 1, 0),), 1),
        ],
    },
    "s3-f4": {
        "algebra": "f4",
        "rows": [
            ("adjoint", "adjoint", None, ((1, 0, 0, 0),), 2),
            ("Y3(alpha)", "y3", (0, 1, 2), ((3, 0, 0, 0),), 1),
            ("Y3(beta)", "y3", (1, 0, 2), ((0, 0, 1, 0),), 1),
            ("Y3(gamma)", "y3", (2, 1, 0), None, 1),
            ("X2", "x2", None, ((0, 1, 0, 0),), 1),
            ("g.Y2(beta)(alpha,beta,gamma)", "z11", (0, 1, 2), ((1, 0, 0, 2),), 1),
            ("g.Y2(beta)(alpha,gamma,beta)", "z11", (0, 2, 1), None, 1),
            ("g.Y2(beta)(beta,gamma,alpha)", "z11", (1, 2, 0), None, 1),
        ],
    },
    "s3-so12": {
        "algebra": "so12",
        "rows": [
            ("adjoint", "adjoint", None, ((0, 1, 0, 0, 0, 0),), 2),
            ("Y3(alpha)", "y3", (0, 1, 2), ((0, 3, 0, 0, 0, 0),), 1),
            ("Y3(beta)", "y3", (1, 0, 2),
             ((0, 0, 0, 0, 2, 0), (0, 0, 0, 0, 0, 2)), 1),
            ("Y3(gamma)", "y3", (2, 1, 0), None, 1),
            ("X2", "x2", None, ((1, 0, 1, 0, 0, 0),), 1),
            ("g.Y2(beta)(alpha,beta,gamma)", "z11", (0, 1, 2), ((0, 1, 0, 1, 0, 0),), 1),
            ("g.Y2(beta)(alpha,gamma,beta)", "z11", (0, 2, 1), ((2, 1, 0, 0, 0, 0),), 1),
            ("g.Y2(beta)(beta,gamma,alpha)", "z11", (1, 2, 0), None, 1),
        ],
    },
}


def _row_universal(kind: str, v: VogelParams, perm, family,
                   family_value: Fraction) -> tuple[Fraction, str]:
    """Universal dimension of one table row.  Rows where the printed product
    is 0/0-indeterminate at the point are evaluated exactly along the
    family the table is built from (the family function yields points in
    the same slot ordering as the table's algebra)."""
    if kind == "adjoint":
        return dim_adjoint(v), "point"
    if kind == "x2":
        return x2_product(v).dim(), "point"
    k, l = (3, 0) if kind == "y3" else (1, 1)
    try:
        return z_product(v.permuted(perm), k, l).dim(), "point"
    except PoleAtParameters:
        value = z_dim_along_family(lambda n: family(n).permuted(perm),
                                   family_value, k, l)
        return value, "line-limit"


def build_table_report(which: str) -> dict:
    """Regenerate one symmetric-cube decomposition table from the universal
    formulas and, independently, from the Weyl oracle via Dynkin labels."""
    layout = _TABLES[which]
    aid = parse_algebra(layout["algebra"])
    v = vogel_params(aid)
    rs = build_root_system(aid.family, aid.rank)
    family, family_value = _TABLE_FAMILIES[which]
    rows = []
    total = Fraction(0)
    all_match = True
    for name, kind, perm, labels, mult in layout["rows"]:
        universal, via = _row_universal(kind, v, perm, family, family_value)
        row = {
            "irrep": name,
            "multiplicity": mult,
            "universal": _frac(universal),
            "via": via,
        }
        if labels is not None:
            dims = [weyl_dim(rs, weight_from_dynkin(rs, lab)) for lab in labels]
            weyl_total = mult * sum(dims)
            row["weyl_dims"] = [_frac(d) for d in dims]
            row["weyl_total"] = _frac(weyl_total)
            row["match"] = (mult * universal) == weyl_total
            all_match = all_match and row["match"]
        else:
            row["weyl_dims"] = None
            row["weyl_total"] = None
            row["match"] = None
        rows.append(row)
        total += mult * universal
    d = dim_adjoint(v)
    sym_cube = d * (d + 1) * (d + 2) / 6
    sum_match = total == sym_cube
    return {
        "algebra": layout["algebra"],
        "rows": rows,
        "universal_sum": _frac(total),
        "sym_cube_dim": _frac(sym_cube),
        "sum_match": sum_match,
        "passed": all_match and sum_match,
    }


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------


def _resolve_params(args) -> tuple[VogelParams, dict]:
    tokens = getattr(args, "algebra", [])
    explicit = (args.alpha, args.beta, args.gamma)
    if tokens and any(x is not None for x in explicit):
        raise _UsageError("give an algebra name or --alpha/--beta/--gamma, not both")
    if tokens:
        aid = parse_algebra(" ".join(tokens))
        v = vogel_params(aid)
        inputs = {"algebra": aid.label}
    elif all(x is not None for x in explicit):
        v = VogelParams(*explicit)
        inputs = {"algebra": None}
    else:
        raise _UsageError("an algebra name or all of --alpha/--beta/--gamma is required")
    inputs.update(alpha=_frac(v.alpha), beta=_frac(v.beta), gamma=_frac(v.gamma))
    return v, inputs


def _qdim_product(args, v: VogelParams):
    kind = args.kind
    if kind == "adjoint":
        return adjoint_product(v)
    if kind == "cartan":
        if args.n is None or args.n < 1:
            raise _UsageError("qdim cartan requires --n with a positive integer")
        return cartan_power_product(v, args.n)
    if kind == "y2":
        if args.slot not in SLOTS:
            raise _UsageError("qdim y2 requires --slot alpha|beta|gamma")
        return y2_product(v, args.slot)
    if kind == "x2":
        return x2_product(v)
    if kind == "z":
        if args.k is None or args.l is None or args.k < 0 or args.l < 0:
            raise _UsageError("qdim z requires non-negative --k and --l")
        return z_product(v, args.k, args.l)
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# command handlers (each returns an output document)
# ---------------------------------------------------------------------------


def cmd_dim(args) -> dict:
    v, inputs = _resolve_params(args)
    results = {
        "dim": _frac(dim_adjoint(v)),
        "t": _frac(v.t),
        "casimir_adjoint": _frac(casimir_adjoint(v)),
    }
    for slot in SLOTS:
        results[f"casimir_y2_{slot}"] = _frac(casimir_y2(v, slot))
    return {"command": "dim", "inputs": inputs, "results": results, "status": "pass"}


def cmd_qdim(args) -> dict:
    v, inputs = _resolve_params(args)
    inputs["kind"] = args.kind
    for key in ("n", "slot", "k", "l"):
        value = getattr(args, key)
        if value is not None:
            inputs[key] = value
    product = _qdim_product(args, v)
    if args.x is not None and args.series is not None:
        raise _UsageError("--x and --series are mutually exclusive")
    if args.x is not None:
        inputs["x"] = args.x
        results = {"value": product.value_at(args.x)}
    else:
        order = args.series if args.series is not None else default_order()
        inputs["series_order"] = order
        series = product.series(order)
        coeffs = [[m, _frac(series[m])] for m in range(0, order + 1, 2)]
        assert all(series[m] == 0 for m in range(1, order + 1, 2))
        results = {"coefficients": coeffs}
    return {"command": "qdim", "inputs": inputs, "results": results, "status": "pass"}


def cmd_verify(args) -> dict:
    order = args.order if args.order is not None else default_order()
    inputs = {"identity": args.identity, "order": order, "seed": args.seed,
              "mode": args.mode}
    if args.identity in ("s2", "a2", "s3"):
        trials = args.trials
        if trials is None:
            trials = 100 if args.mode == SERIES else 10000
        inputs["trials"] = trials
        report = verify_identity(args.identity, mode=args.mode, order=order,
                                 trials=trials, seed=args.seed)
        results = {
            "points_checked": report.points_checked,
            "order_checked": report.order_checked,
            "exact_zero": report.exact_zero,
            "max_abs_residual": report.max_abs_residual,
            "failures": [[list(map(str, point)), detail]
                         for point, detail in report.failures],
        }
        status = "pass" if report.passed else "fail"
    elif args.identity == "specialization":
        suite = run_specialization(order)
        results = {"checks": suite["checks"]}
        status = "pass" if suite["passed"] else "fail"
    elif args.identity == "g2zero":
        suite = run_g2_vanishing(order)
        results = {"checks": suite["checks"]}
        status = "pass" if suite["passed"] else "fail"
    else:
        raise _UsageError(f"unknown identity {args.identity!r}")
    return {"command": "verify", "inputs": inputs, "results": results, "status": status}


def cmd_table(args) -> dict:
    report = build_table_report(args.which)
    status = "pass" if report.pop("passed") else "fail"
    return {"command": "table", "inputs": {"which": args.which},
            "results": report, "status": status}


def cmd_instanton(args) -> dict:
    v, inputs = _resolve_params(args)
    ip = InstantonParams(eps1=args.eps1, eps2=args.eps2, sigma_n=args.sigma,
                         x=args.x, n_max=args.nmax)
    inputs.update(eps1=ip.eps1, eps2=ip.eps2, sigma=ip.sigma_n, x=ip.x,
                  nmax=ip.n_max)
    table = one_instanton_sum(v, ip)
    results = {
        "rows": [[n, term, partial] for n, term, partial in table.rows],
        "converged": table.converged,
        "converged_at": table.converged_at,
    }
    return {"command": "instanton", "inputs": inputs, "results": results,
            "status": "pass"}


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------


def _add_param_args(sp) -> None:
    sp.add_argument("algebra", nargs="*",
                    help='algebra name, e.g. "e8", "sl 6", "so 12"')
    sp.add_argument("--alpha", type=Fraction,
                    help="rational value; use --alpha=-10/3 for negative fractions")
    sp.add_argument("--beta", type=Fraction)
    sp.add_argument("--gamma", type=Fraction)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit one canonical JSON document")

    parser = argparse.ArgumentParser(
        prog="uqdim",
        description="Exact universal quantum dimensions on Vogel's plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", parents=[common],
                       help="adjoint dimension and Casimir values")
    _add_param_args(p)
    p.set_defaults(handler=cmd_dim)

    p = sub.add_parser("qdim", parents=[common],
                       help="quantum-dimension series or numeric value")
    p.add_argument("kind", choices=["adjoint", "cartan", "y2", "x2", "z"])
    _add_param_args(p)
    p.add_argument("--n", type=int, help="Cartan power (kind=cartan)")
    p.add_argument("--slot", choices=list(SLOTS), help="Y2 slot (kind=y2)")
    p.add_argument("--k", type=int, help="adjoint factors (kind=z)")
    p.add_argument("--l", type=int, help="Y2(beta) factors (kind=z)")
    p.add_argument("--x", type=float, help="evaluate numerically at x")
    p.add_argument("--series", type=int, metavar="ORDER",
                   help="emit exact series coefficients to this order")
    p.set_defaults(handler=cmd_qdim)

    p = sub.add_parser("verify", parents=[common],
                       help="run an identity or cross-check suite")
    p.add_argument("identity",
                   choices=["s2", "a2", "s3", "specialization", "g2zero"])
    p.add_argument("--order", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=[SERIES, NUMERIC], default=SERIES)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("table", parents=[common],
                       help="regenerate a symmetric-cube decomposition table")
    p.add_argument("which", choices=sorted(_TABLES))
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("instanton", parents=[common],
                       help="one-instanton term table")
    _add_param_args(p)
    p.add_argument("--eps1", type=float, default=0.0)
    p.add_argument("--eps2", type=float, default=0.0)
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--nmax", type=int, default=10)
    p.set_defaults(handler=cmd_instanton)

    return parser


def _emit(doc: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, sort_keys=True))
        return
    print(f"command: {doc['command']}")
    for key, value in doc["inputs"].items():
        print(f"  {key}: {value}")
    for key, value in doc["results"].items():
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            print(f"{key}:")
            for item in value:
                if isinstance(item, dict):
                    print("  " + "  ".join(f"{k}={v}" for k, v in item.items()))
                else:
                    print("  " + "  ".join(str(x) for x in item))
        else:
            print(f"{key}: {value}")
    print(f"status: {doc['status']}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        # parse_known_args plus a manual sweep lets algebra tokens appear
        # after options, e.g. "qdim z --k 1 --l 1 sl6 --series 0"
        # (parse_intermixed_args does not support subparsers).
        args, extra = parser.parse_known_args(argv)
        bad = [tok for tok in extra if tok.startswith("-")]
        if bad:
            parser.error(f"unrecognized arguments: {' '.join(bad)}")
        if extra:
            if not hasattr(args, "algebra"):
                parser.error(f"unrecognized arguments: {' '.join(extra)}")
            args.algebra = list(args.algebra) + extra
    except SystemExit as exc:
        return int(exc.code or 0)

    as_json = getattr(args, "json", False)

    def error_doc(message: str) -> dict:
        return {"command": args.command, "inputs": {},
                "results": {"error": message}, "status": "error"}

    try:
        doc = args.handler(args)
    except (_UsageError, UnknownAlgebra, InvalidRank, LengthMismatch, ValueError) as exc:
        _emit(error_doc(str(exc)), as_json)
        return EXIT_USAGE
    except (PoleAtParameters, ZeroDenominatorForm) as exc:
        _emit(error_doc(str(exc)), as_json)
        return EXIT_PARAM_POLE
    except PoleAtX as exc:
        _emit(error_doc(str(exc)), as_json)
        return EXIT_X_POLE

    _emit(doc, as_json)
    return EXIT_PASS if doc["status"] == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
