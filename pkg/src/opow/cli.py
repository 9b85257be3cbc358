"""Command line surface: table emission, expansion rendering, verification.

Subcommands of the ``opow`` executable:

* ``expand``    render the normal-ordered form of A^k (generic u or a
                concrete substitution) as text, LaTeX or JSON
* ``ctable``    dump the coefficient table as CSV or JSON
* ``atable``    dump the signed 1/z table as CSV or JSON
* ``stirling``  dump a Stirling triangle (kind 1 or 2) as CSV or JSON
* ``verify``    run one or all verification suites

Exit codes: 0 all checks pass / output produced, 1 a verification
failed, 2 usage error.  The environment variable OPOW_MAX_K (default
40) caps every k-like argument to guard against accidental huge jobs;
note that the number of table entries per power grows like the integer
partition function, so large k_max values get expensive quickly.

All numeric output is exact: integers or rationals rendered p/q.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import ctable as ctable_mod
from . import special_u
from .combinat import stirling1_row, stirling2_row
from .diffpoly import DiffPolynomial, jet_symbol
from .expansion import expand, verify_closed_forms
from .report import VerificationReport
from .series import oracle_suite
from .special_u import EXP_Z, IDENTITY_Z, INVERSE_Z, SpecialTerm, URule, polynomial_u

DEFAULT_MAX_K = 40

SUITE_ORDER = (
    "closed-form",
    "cross-check",
    "binomial",
    "stirling2",
    "stirling1-sum",
    "cycle-count",
    "doublefact",
    "inverse-z",
    "special-u",
    "oracle",
)


def _max_k() -> int:
    raw = os.environ.get("OPOW_MAX_K", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_K
    except ValueError:
        return DEFAULT_MAX_K


def _check_cap(parser: argparse.ArgumentParser, name: str, value: int, low: int) -> None:
    cap = _max_k()
    if value < low:
        parser.error(f"{name} must be >= {low}")
    if value > cap:
        parser.error(f"{name}={value} exceeds the cap OPOW_MAX_K={cap}")


def _dump_json(payload: object) -> None:
    print(json.dumps(payload, indent=2))


def _q_str(x: Fraction) -> str:
    return str(x)  # Fraction renders as "p/q", or just "p" when integral


def _q_json(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else str(x)


# expand rendering -----------------------------------------------------


def _poly_text(p: DiffPolynomial) -> str:
    return str(p)


def _latex_monomial(exps: tuple[int, ...]) -> str:
    if not exps:
        return "1"
    parts = []
    for j, e in enumerate(exps):
        if e == 0:
            continue
        sym = "u" if j == 0 else ("u" + "'" * j if j <= 3 else f"u^{{({j})}}")
        if e == 1:
            parts.append(sym)
        elif j == 0:
            parts.append(f"u^{{{e}}}")
        else:
            parts.append(f"({sym})^{{{e}}}")
    return " ".join(parts)


def _poly_latex(p: DiffPolynomial) -> str:
    pieces = []
    for coeff, exps in p.terms:
        mono = _latex_monomial(exps)
        mag = abs(coeff)
        body = mono if (mag == 1 and exps) else (f"{mag} {mono}" if exps else str(mag))
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces) if pieces else "0"


def _render_generic(k: int, fmt: str) -> None:
    exp = expand(k)
    if fmt == "text":
        terms = [f"({_poly_text(exp.coeffs[s])}) D^{s}" for s in range(1, k + 1)]
        print(f"A^{k} = " + " + ".join(terms))
    elif fmt == "latex":
        terms = [
            rf"\left({_poly_latex(exp.coeffs[s])}\right)\left(\frac{{d}}{{dz}}\right)^{{{s}}}"
            for s in range(1, k + 1)
        ]
        print(rf"A^{{{k}}} = " + " + ".join(terms))
    else:
        payload = {
            "k": k,
            "u": "generic",
            "terms": [
                {
                    "s": s,
                    "monomials": [
                        {"coeff": c, "exps": list(e)} for c, e in exp.coeffs[s].terms
                    ],
                }
                for s in range(1, k + 1)
            ],
        }
        _dump_json(payload)


def _special_term_text(t: SpecialTerm) -> str:
    factors = [_q_str(abs(t.coeff))]
    if t.z_exp != 0:
        factors.append(f"z^{t.z_exp}")
    if t.exp_mult != 0:
        factors.append(f"e^({t.exp_mult}z)")
    factors.append(f"D^{t.d_order}")
    return " ".join(factors)


def _special_term_latex(t: SpecialTerm) -> str:
    factors = [_q_str(abs(t.coeff))]
    if t.z_exp != 0:
        factors.append(f"z^{{{t.z_exp}}}")
    if t.exp_mult != 0:
        factors.append(f"e^{{{t.exp_mult} z}}")
    factors.append(rf"\left(\frac{{d}}{{dz}}\right)^{{{t.d_order}}}")
    return " ".join(factors)


def _render_special(k: int, u_label: str, rule: URule, fmt: str) -> None:
    terms = special_u.specialize(expand(k), rule)
    if fmt == "text":
        pieces = []
        for t in terms:
            body = _special_term_text(t)
            if not pieces:
                pieces.append(body if t.coeff > 0 else f"-{body}")
            else:
                pieces.append(("+ " if t.coeff > 0 else "- ") + body)
        print(f"A^{k} = " + " ".join(pieces) if pieces else f"A^{k} = 0")
    elif fmt == "latex":
        pieces = []
        for t in terms:
            body = _special_term_latex(t)
            if not pieces:
                pieces.append(body if t.coeff > 0 else f"-{body}")
            else:
                pieces.append(("+ " if t.coeff > 0 else "- ") + body)
        print(rf"A^{{{k}}} = " + " ".join(pieces) if pieces else rf"A^{{{k}}} = 0")
    else:
        emult = terms[0].exp_mult if terms else 0
        payload = {
            "k": k,
            "u": u_label,
            "exp_factor": emult,
            "terms": [[_q_json(t.coeff), t.z_exp, t.d_order] for t in terms],
        }
        _dump_json(payload)


def _parse_u(parser: argparse.ArgumentParser, choice: str) -> tuple[str, URule | None]:
    if choice == "generic":
        return choice, None
    if choice == "z":
        return choice, IDENTITY_Z
    if choice == "exp":
        return choice, EXP_Z
    if choice == "inv-z":
        return choice, INVERSE_Z
    if choice.startswith("poly:"):
        body = choice[len("poly:"):]
        try:
            coeffs = [Fraction(tok) for tok in body.split(",") if tok != ""]
            return choice, polynomial_u(coeffs)
        except (ValueError, ZeroDivisionError) as err:
            parser.error(f"bad polynomial coefficients {body!r}: {err}")
    parser.error(f"unknown u choice {choice!r} (use generic, z, exp, inv-z or poly:c0,c1,...)")
    raise AssertionError  # unreachable; parser.error raises SystemExit


def cmd_expand(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _check_cap(parser, "--k", args.k, 1)
    label, rule = _parse_u(parser, args.u)
    if rule is None:
        _render_generic(args.k, args.format)
    else:
        _render_special(args.k, label, rule, args.format)
    return 0


# table dumps ----------------------------------------------------------


def cmd_ctable(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _check_cap(parser, "--k-max", args.k_max, 2)
    table = ctable_mod.c_table_by_recurrence(args.k_max)
    if args.format == "csv":
        print("k,s,m,alpha,value")
        for (k, s, m, alpha), v in table.rows():
            print(f"{k},{s},{m},{';'.join(map(str, alpha))},{v}")
    else:
        payload = {
            "k_max": args.k_max,
            "entries": [
                {"k": k, "s": s, "m": m, "alpha": list(alpha), "value": v}
                for (k, s, m, alpha), v in table.rows()
            ],
        }
        _dump_json(payload)
    return 0


def cmd_atable(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _check_cap(parser, "--k-max", args.k_max, 1)
    table = special_u.a_table_by_recurrence(args.k_max)
    if args.format == "csv":
        print("k,s,value")
        for k in range(1, args.k_max + 1):
            for s in range(1, k + 1):
                print(f"{k},{s},{table.value(k, s)}")
    else:
        payload = {
            "k_max": args.k_max,
            "entries": [
                {"k": k, "s": s, "value": table.value(k, s)}
                for k in range(1, args.k_max + 1)
                for s in range(1, k + 1)
            ],
        }
        _dump_json(payload)
    return 0


def cmd_stirling(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _check_cap(parser, "--n-max", args.n_max, 1)
    row = stirling1_row if args.kind == 1 else stirling2_row
    if args.format == "csv":
        print("n,m,value")
        for n in range(1, args.n_max + 1):
            for m, v in enumerate(row(n), start=1):
                print(f"{n},{m},{v}")
    else:
        payload = {
            "kind": args.kind,
            "n_max": args.n_max,
            "rows": [list(row(n)) for n in range(1, args.n_max + 1)],
        }
        _dump_json(payload)
    return 0


# verification ---------------------------------------------------------


def _run_suites(names: list[str], k_max: int, seed: int) -> list[VerificationReport]:
    table = None

    def shared_table() -> ctable_mod.CTable:
        nonlocal table
        if table is None:
            table = ctable_mod.c_table_by_recurrence(k_max)
        return table

    reports = []
    for name in names:
        if name == "closed-form":
            reports.append(verify_closed_forms(k_max))
        elif name == "cross-check":
            reports.append(ctable_mod.verify_cross_check(k_max))
        elif name == "binomial":
            reports.append(ctable_mod.verify_binomial_column(shared_table()))
        elif name == "stirling2":
            reports.append(ctable_mod.verify_stirling2_corner(shared_table()))
        elif name == "stirling1-sum":
            reports.append(ctable_mod.verify_stirling1_total(shared_table()))
        elif name == "cycle-count":
            reports.append(ctable_mod.verify_cycle_count_total(shared_table()))
        elif name == "doublefact":
            reports.append(ctable_mod.verify_factorial_weighted_total(shared_table()))
        elif name == "inverse-z":
            reports.append(special_u.verify_inverse_z_table(k_max))
        elif name == "special-u":
            reports.append(special_u.verify_specializations(k_max))
        elif name == "oracle":
            reports.append(oracle_suite(k_max, seed=seed))
        else:  # pragma: no cover - argparse choices prevent this
            raise ValueError(f"unknown suite {name}")
    return reports


def cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _check_cap(parser, "--k-max", args.k_max, 2)
    names = list(SUITE_ORDER) if args.suite == "all" else [args.suite]
    reports = _run_suites(names, args.k_max, args.seed)
    for report in reports:
        for line in report.render_lines():
            print(line)
    checks = sum(r.checks for r in reports)
    failures = sum(len(r.failures) for r in reports)
    status = "PASS" if failures == 0 else "FAIL"
    print(f"overall: {status} suites={len(reports)} checks={checks} failures={failures}")
    return 0 if failures == 0 else 1


# entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opow",
        description="Exact normal ordering of powers of u(z) d/dz: "
        "expansions, coefficient tables, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="render the normal-ordered form of A^k")
    p.add_argument("--k", type=int, required=True, help="operator power (>= 1)")
    p.add_argument(
        "--u",
        default="generic",
        help="substitution: generic, z, exp, inv-z, or poly:c0,c1,...",
    )
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.set_defaults(handler=cmd_expand)

    p = sub.add_parser("ctable", help="dump the coefficient table")
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=cmd_ctable)

    p = sub.add_parser("atable", help="dump the signed 1/z coefficient table")
    p.add_argument("--k-max", type=int, default=15)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=cmd_atable)

    p = sub.add_parser("stirling", help="dump a Stirling triangle")
    p.add_argument("--kind", type=int, choices=(1, 2), required=True)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=cmd_stirling)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + SUITE_ORDER, default="all")
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--seed", type=int, default=0, help="seed for the oracle suite")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(parser, args)


def run() -> None:
    sys.exit(main())
