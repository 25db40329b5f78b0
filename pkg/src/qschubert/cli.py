"""Command-line front end.

Every subcommand prints one JSON document (or an aligned table with
``--table``) on stdout.  Exit codes: 0 success, 2 bad input, 1 internal
assertion failure or a failing verification suite.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Sequence

from . import __version__
from .cache import ConstantCache, make_key
from .classes import CohClass, QCohClass
from .classical import basis_product, dual
from .flagcore import FlagError, FlagType, coset_elements, format_perm, in_S, length, parse_perm
from .polyring import to_text
from .quantum.ring import GWQuery, gw_invariant, quantum_basis_product, quantum_giambelli_poly
from .quantum.suites import SUITES, verify_suite
from .schubert import giambelli_poly, lambda_indices, lambda_size

log = logging.getLogger("qschubert")


class InputError(ValueError):
    pass


# -- serialization ----------------------------------------------------------------

def flag_json(flag: FlagType) -> dict:
    return {"ranks": list(flag.ranks), "n": flag.n}


def class_terms(c: QCohClass | CohClass) -> list[dict]:
    """Terms sorted by (weighted q-degree, q exponents, permutation)."""
    if isinstance(c, CohClass):
        c = QCohClass.from_classical(c)
    return [{"q": list(d), "perm": list(w), "coeff": v} for d, w, v in c.sorted_terms()]


def class_from_json(doc: dict) -> QCohClass:
    """Inverse of the ``terms`` serialization."""
    flag = FlagType(int(doc["flag"]["n"]), tuple(doc["flag"]["ranks"]))
    return QCohClass(flag, {(tuple(t["q"]), tuple(t["perm"])): int(t["coeff"]) for t in doc["terms"]})


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(", ", ": "))


# -- argument parsing -------------------------------------------------------------

def _flag(text: str) -> FlagType:
    try:
        return FlagType.parse(text)
    except (FlagError, ValueError) as exc:
        raise InputError(f"bad flag {text!r}: {exc}") from None


def _perm_in_S(text: str, flag: FlagType) -> tuple[int, ...]:
    try:
        w = flag.check_perm(parse_perm(text))
    except (FlagError, ValueError) as exc:
        raise InputError(f"bad permutation {text!r}: {exc}") from None
    if not in_S(w, flag):
        raise InputError(f"{format_perm(w)} is not in S for flag ({flag})")
    return w


def _degree(text: str, flag: FlagType) -> tuple[int, ...]:
    try:
        d = tuple(int(v) for v in text.split(",")) if text.strip() else ()
    except ValueError:
        raise InputError(f"bad q-degree {text!r}") from None
    if len(d) != flag.k or any(v < 0 for v in d):
        raise InputError(f"q-degree needs {flag.k} nonnegative entries, got {text!r}")
    return d


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qschubert",
                                description="Schubert calculus on partial flag varieties F(n_1,...,n_k; n).")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--flag", required=True, help='flag type, e.g. "1,2;3"')
        sp.add_argument("--table", action="store_true", help="aligned text instead of JSON")
        sp.add_argument("--no-cache", action="store_true", help="bypass the result cache")
        return sp

    sp = common(sub.add_parser("product", help="classical product of two Schubert classes"))
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--classical", action="store_true", help="accepted for clarity; product is always classical")
    sp = common(sub.add_parser("qproduct", help="quantum product of two Schubert classes"))
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp = common(sub.add_parser("gw", help="Gromov-Witten invariant"))
    sp.add_argument("--classes", required=True, help='permutations separated by "|"')
    sp.add_argument("--d", required=True, help="q-degree d_1,...,d_k")
    for name, what in (("giambelli", "Giambelli polynomial"), ("qgiambelli", "quantum Giambelli polynomial")):
        sp = common(sub.add_parser(name, help=what))
        sp.add_argument("--perm", required=True)
    common(sub.add_parser("basis", help="Schubert basis, duals and elementary monomial indices"))
    sp = common(sub.add_parser("verify", help="run a named verification suite"))
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    return p


# -- commands ---------------------------------------------------------------------

def _cached(args, flag: FlagType, op: str, inputs: Any, compute) -> dict:
    cache = ConstantCache(enabled=not args.no_cache)
    key = make_key(str(flag), op, inputs)
    hit = cache.get(key)
    if hit is not None:
        return hit
    doc = compute()
    cache.put(key, doc)
    return doc


def cmd_product(args) -> tuple[dict, int]:
    flag = _flag(args.flag)
    u, v = _perm_in_S(args.u, flag), _perm_in_S(args.v, flag)
    doc = _cached(args, flag, "product", [list(u), list(v)], lambda: {
        "flag": flag_json(flag), "terms": class_terms(basis_product(u, v, flag))})
    return doc, 0


def cmd_qproduct(args) -> tuple[dict, int]:
    flag = _flag(args.flag)
    u, v = _perm_in_S(args.u, flag), _perm_in_S(args.v, flag)
    doc = _cached(args, flag, "qproduct", [list(u), list(v)], lambda: {
        "flag": flag_json(flag), "terms": class_terms(quantum_basis_product(u, v, flag))})
    return doc, 0


def cmd_gw(args) -> tuple[dict, int]:
    flag = _flag(args.flag)
    classes = tuple(_perm_in_S(t, flag) for t in args.classes.split("|"))
    if len(classes) < 2:
        raise InputError("gw needs at least two classes")
    d = _degree(args.d, flag)
    doc = _cached(args, flag, "gw", [[list(w) for w in classes], list(d)], lambda: {
        "flag": flag_json(flag), "terms": [], "value": gw_invariant(GWQuery(flag, classes, d))})
    return doc, 0


def _giambelli(args, quantum: bool) -> tuple[dict, int]:
    flag = _flag(args.flag)
    w = _perm_in_S(args.perm, flag)
    poly = quantum_giambelli_poly(w, flag) if quantum else giambelli_poly(w, flag)
    return {"flag": flag_json(flag), "perm": list(w), "poly": to_text(poly)}, 0


def cmd_basis(args) -> tuple[dict, int]:
    flag = _flag(args.flag)
    perms = [{"perm": list(w), "length": length(w), "dual": list(dual(w, flag))}
             for w in coset_elements(flag)]
    lams = [{"lambda": [list(p) for p in lam], "size": lambda_size(lam)} for lam in lambda_indices(flag)]
    return {"flag": flag_json(flag), "perms": perms, "lambdas": lams,
            "counts": {"perms": len(perms), "lambdas": len(lams)}}, 0


def cmd_verify(args) -> tuple[dict, int]:
    flag = _flag(args.flag)
    rep = verify_suite(args.suite, flag)
    doc = {"flag": flag_json(flag), "suite": rep.name, "passed": rep.passed,
           "checked": rep.checked, "failure_count": rep.failure_count, "failures": rep.failures}
    return doc, 0 if rep.passed else 1


COMMANDS = {
    "product": cmd_product,
    "qproduct": cmd_qproduct,
    "gw": cmd_gw,
    "giambelli": lambda a: _giambelli(a, False),
    "qgiambelli": lambda a: _giambelli(a, True),
    "basis": cmd_basis,
    "verify": cmd_verify,
}


# -- table rendering --------------------------------------------------------------

def _rows_table(header: Sequence[str], rows: list[Sequence[str]]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    lines = [fmt.format(*header)] + [fmt.format(*map(str, r)) for r in rows]
    return "\n".join(lines)


def render_table(command: str, doc: dict) -> str:
    head = f"flag ({';'.join([','.join(map(str, doc['flag']['ranks'])), str(doc['flag']['n'])])})"
    if command == "basis":
        perm_rows = [(format_perm(p["perm"]), p["length"], format_perm(p["dual"])) for p in doc["perms"]]
        lam_rows = [(" | ".join(",".join(map(str, part)) or "-" for part in x["lambda"]), x["size"])
                    for x in doc["lambdas"]]
        return "\n".join([head, _rows_table(("perm", "length", "dual"), perm_rows), "",
                          _rows_table(("Lambda", "size"), lam_rows)])
    if command in ("giambelli", "qgiambelli"):
        return f"{head}\nP_{format_perm(doc['perm'])} = {doc['poly']}"
    if command == "verify":
        status = "PASS" if doc["passed"] else "FAIL"
        out = [f"{head}\n{status} {doc['suite']}: {doc['checked']} checks, {doc['failure_count']} failures"]
        out += [f"  {f}" for f in doc["failures"]]
        return "\n".join(out)
    if "value" in doc:
        return f"{head}\nvalue {doc['value']}"
    rows = [(t["coeff"], ",".join(map(str, t["q"])), format_perm(t["perm"])) for t in doc["terms"]]
    return "\n".join([head, _rows_table(("coeff", "q", "perm"), rows)])


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        doc, code = COMMANDS[args.command](args)
    except (InputError, FlagError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1
    print(render_table(args.command, doc) if args.table else dumps(doc))
    return code


def main() -> None:
    sys.exit(run())
