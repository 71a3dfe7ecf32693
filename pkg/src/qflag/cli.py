"""Command line front end: ``qflag product | quantize | table | verify``.

Exit codes: 0 success/pass, 1 verification failure, 2 internal cross-check
mismatch, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from . import perms
from .borel import schubert_polynomials, std_indices
from .perms import Perm
from .polyring import Polynomial
from .qhflag import omega_matrix, quantize_schubert, quantize_schubert_std, quantum_product_chevalley, quantum_product_fl
from .report import SCHEMA
from .roots import NotFiniteTypeError, PRESETS, root_system
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def max_n() -> int:
    raw = os.environ.get("QFLAG_MAX_N", "5")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QFLAG_MAX_N must be an integer, got {raw!r}") from None


def _check_n(n: int) -> int:
    cap = max_n()
    if not 2 <= n <= cap:
        raise UsageError(f"n must satisfy 2 <= n <= {cap} (QFLAG_MAX_N), got {n}")
    return n


def parse_element(text: str, n: int, word: bool) -> Perm:
    if not word:
        try:
            return perms.parse_perm(text, n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    t = text.strip()
    if t in ("", "e"):
        return perms.identity(n)
    parts = t.replace(",", " ").split() if ("," in t or " " in t) else list(t)
    try:
        idx = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"not a reduced word: {text!r}") from None
    if any(not 1 <= i <= n - 1 for i in idx):
        raise UsageError(f"word {text!r} uses letters outside 1..{n - 1}")
    p = perms.from_word(idx, n)
    if perms.length(p) != len(idx):
        raise UsageError(f"word {text!r} is not reduced")
    return p


# -- formatting ---------------------------------------------------------------------

def vector_json(vec: Dict[Perm, Polynomial]) -> Dict[str, str]:
    return {perms.perm_str(w): p.to_text() for w, p in vec.items()}


def vector_text(vec: Dict[Perm, Polynomial], n: int) -> str:
    if not vec:
        return "0"
    order = {w: r for r, w in enumerate(perms.all_perms(n))}
    keys = sorted(vec, key=lambda w: (-perms.length(w), order[w]))
    out = ""
    for pos, w in enumerate(keys):
        p = vec[w]
        basis = f"sigma[{perms.perm_str(w)}]"
        neg = len(p.terms) == 1 and next(iter(p.terms.values())) < 0
        body = -p if neg else p
        if body == 1:
            term = basis
        elif len(body.terms) == 1:
            term = f"{body.to_text()}·{basis}"
        else:
            term = f"({body.to_text()})·{basis}"
        if pos == 0:
            out = ("-" if neg else "") + term
        else:
            out += (" - " if neg else " + ") + term
    return out


def _emit(doc: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **doc}, indent=2))
    else:
        print(text)


# -- subcommands ---------------------------------------------------------------------

def cmd_product(args) -> int:
    n = _check_n(args.n)
    u, v = parse_element(args.u, n, args.word), parse_element(args.v, n, args.word)
    routes = {}
    if args.via in ("presentation", "both"):
        routes["presentation"] = quantum_product_fl(u, v, n)
    if args.via in ("chevalley", "both"):
        routes["chevalley"] = quantum_product_chevalley(u, v, n)
    results = list(routes.values())
    doc = {"command": "product", "n": n, "u": perms.perm_str(u), "v": perms.perm_str(v), "via": args.via}
    if len(results) == 2 and results[0] != results[1]:
        doc["routes"] = {k: vector_json(r) for k, r in routes.items()}
        doc["match"] = False
        _emit(doc, "json", "")
        print("presentation and chevalley routes disagree", file=sys.stderr)
        return EXIT_MISMATCH
    result = results[0]
    doc["result"] = vector_json(result)
    if len(results) == 2:
        doc["match"] = True
    _emit(doc, args.format, vector_text(result, n))
    return EXIT_OK


def cmd_quantize(args) -> int:
    n = _check_n(args.n)
    w = parse_element(args.w, n, args.word)
    poly = quantize_schubert(w, n)
    doc = {"command": "quantize", "n": n, "w": perms.perm_str(w), "polynomial": poly.to_text(),
           "standard_coefficients": {"".join(map(str, I)): str(c)
                                     for I, c in quantize_schubert_std(w, n).items()}}
    _emit(doc, args.format, poly.to_text())
    return EXIT_OK


def cmd_table(args) -> int:
    n = _check_n(args.n)
    doc = {"command": "table", "n": n, "what": args.what}
    lines: List[str] = []
    if args.what in ("schubert", "qgiambelli"):
        table = {}
        for w in perms.all_perms(n):
            p = schubert_polynomials(n)[w] if args.what == "schubert" else quantize_schubert(w, n)
            table[perms.perm_str(w)] = p.to_text()
            lines.append(f"{perms.perm_str(w)}: {p.to_text()}")
        doc["table"] = table
    else:
        basis = std_indices(n)
        doc["basis"] = ["".join(map(str, I)) for I in basis]
        doc["convention"] = "column I lists y_k e_I = sum_L M[L][I] e_L with y_k = -e_1^k"
        mats = {}
        for k in range(1, n):
            m = omega_matrix(k, n)
            mats[str(k)] = [[m.entry(L, I).to_text() for I in basis] for L in basis]
            lines.append(f"Omega_{k} (rows L, columns I, basis {' '.join(doc['basis'])}):")
            lines.extend("  " + "  ".join(row) for row in mats[str(k)])
        doc["omega"] = mats
    _emit(doc, args.format, "\n".join(lines))
    return EXIT_OK


def _resolve_target(args):
    """(root system or None, n or None, display name)."""
    if args.type is not None and args.n is not None:
        raise UsageError("give either --type or --n, not both")
    if args.n is not None:
        return None, _check_n(args.n), f"Fl_{args.n}"
    if args.type is None:
        raise UsageError("verify needs --type or --n")
    try:
        rs = root_system(args.type.strip().upper() if args.type.strip().upper() in PRESETS else
                         tuple(tuple(r) for r in json.loads(args.type)))
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"bad --type {args.type!r}: {exc}") from None
    name = args.type.strip().upper() if args.type.strip().upper() in PRESETS else args.type.strip()
    n = None
    if name in PRESETS and name.startswith("A"):
        n = int(name[1:]) + 1
    return rs, n, name


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    rs, n, name = _resolve_target(args)
    if args.suite in ("flatness", "degree2"):
        report = run_suite(args.suite, rs=rs, n=n if rs is None else None, name=name)
    else:
        if n is None:
            raise UsageError(f"suite {args.suite} runs on Fl_n; pass --n or a type A preset")
        _check_n(n)
        report = run_suite(args.suite, n=n)
    report.target = name
    doc = report.to_json()
    doc.pop("schema")
    lines = [f"{'PASS' if report.passed else 'FAIL'} {report.suite} {name} ({report.checks} checks)"]
    lines += [f"  convention: {c}" for c in report.conventions]
    lines += [f"  failure: {json.dumps(f)}" for f in report.failures[:20]]
    _emit({"command": "verify", **doc}, args.format, "\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qflag", description="Exact small quantum cohomology of flag manifolds.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def fmt(sp, default):
        sp.add_argument("--format", choices=["json", "text"], default=default)

    sp = sub.add_parser("product", help="quantum product sigma_u o sigma_v in Fl_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--via", choices=["chevalley", "presentation", "both"], default="both")
    sp.add_argument("--word", action="store_true", help="read --u/--v as reduced words, e.g. 21")
    fmt(sp, "text")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("quantize", help="quantum Giambelli polynomial of sigma_w")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--word", action="store_true")
    fmt(sp, "text")
    sp.set_defaults(func=cmd_quantize)

    sp = sub.add_parser("table", help="Schubert, quantum Giambelli or Omega tables")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--what", choices=["schubert", "qgiambelli", "omega"], required=True)
    fmt(sp, "json")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True, help=", ".join(SUITES))
    sp.add_argument("--type", help="preset (A1..A4, B2, G2) or JSON Cartan matrix")
    sp.add_argument("--n", type=int)
    fmt(sp, "text")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qflag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotFiniteTypeError as exc:
        print(f"qflag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
