"""Command-line front end.

Every command reads one JSON document and writes one JSON document.

Exit status: 0 affirmative/valid, 2 negative/invalid, 3 inconclusive
(search budget), 1 usage, parse or size error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable

from .errors import PolyshellError, SizeError
from .hvector import ABSENT, FOUND, SearchBounds, f_to_h, find_pm_witness, find_pure_order_ideal_witness, find_shellable_witness, h_to_f
from .lpm import build_matroid, check_base_exchange, corollary3_check, matroid_f_vector, parse_path, LatticePath
from .monomials import CLOSURE_CAP, OrderIdeal, degree_sequence, is_pure
from .polymatroid import enumerate_discrete_polymatroids, is_discrete_polymatroid
from .shelling import ORACLE_CAP, MShelling, is_m_shellable_bruteforce, shell_polymatroid, verify_m_shelling

log = logging.getLogger("polyshell")

OK, NEGATIVE, ERROR, INCONCLUSIVE = 0, 2, 1, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which we reserve for negative results
    def error(self, message):
        raise UsageError(message)


def _ideal(doc, args) -> OrderIdeal:
    if isinstance(doc, dict) and "ideal" in doc:
        doc = doc["ideal"]
    return OrderIdeal.from_json(doc, cap=args.closure_cap)


def _vector(doc, key: str) -> list:
    if isinstance(doc, dict):
        doc = doc.get(key, doc.get("vector"))
    if not isinstance(doc, list):
        raise UsageError(f"expected an integer array or {{{key!r}: [...]}}")
    return doc


def _natural(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _paths(doc) -> tuple[LatticePath, LatticePath]:
    try:
        P, Q = LatticePath(doc["P"].upper()), LatticePath(doc["Q"].upper())
    except (KeyError, TypeError, AttributeError):
        raise UsageError('expected {"P": "...", "Q": "..."}') from None
    return parse_path(P.steps, P.m, P.r), parse_path(Q.steps, P.m, P.r)


def cmd_shell(doc, args):
    g = _ideal(doc, args)
    report = is_discrete_polymatroid(g)
    if not report.holds:
        return NEGATIVE, {"ideal": g.to_json(), "polymatroid": report.to_json(), "shelling": None}
    s = shell_polymatroid(g)
    return OK, {"ideal": g.to_json(), "shelling": s.to_json()}


def cmd_verify(doc, args):
    if not isinstance(doc, dict) or "shelling" not in doc:
        raise UsageError('expected {"ideal": {...}, "shelling": {"intervals": [...]}}')
    g = _ideal(doc, args)
    report = verify_m_shelling(g, MShelling.from_json(doc["shelling"]))
    return (OK if report.valid else NEGATIVE), report.to_json()


def cmd_check_pm(doc, args):
    g = _ideal(doc, args)
    report = is_discrete_polymatroid(g)
    return (OK if report.holds else NEGATIVE), {"ideal": g.to_json(), **report.to_json()}


def cmd_degseq(doc, args):
    g = _ideal(doc, args)
    return OK, {"ideal": g.to_json(), "degree_sequence": list(degree_sequence(g)), "pure": bool(g.members) and is_pure(g)}


def cmd_f2h(doc, args):
    f = _vector(doc, "f")
    return OK, {"f": f, "h": list(f_to_h(f))}


def cmd_h2f(doc, args):
    h = _vector(doc, "h")
    return OK, {"h": h, "f": list(h_to_f(h))}


def cmd_lpm_h(doc, args):
    P, Q = _paths(doc)
    M = build_matroid(P, Q)
    f = matroid_f_vector(M)
    axioms = check_base_exchange(M)
    out = {**M.to_json(), "base_exchange": axioms.to_json(), "f_vector": list(f), "h_vector": list(f_to_h(f))}
    return (OK if axioms.holds else NEGATIVE), out


def cmd_cor3(doc, args):
    P, Q = _paths(doc)
    report = corollary3_check(P, Q, _bounds(args))
    if report.anomaly:
        log.error("Corollary 3 anomaly for P=%s Q=%s", P, Q)
    code = {FOUND: OK, ABSENT: NEGATIVE}.get(report.status, INCONCLUSIVE)
    if report.anomaly:
        code = NEGATIVE
    return code, report.to_json()


_SEARCHES = {"pure": find_pure_order_ideal_witness, "pm": find_pm_witness, "shellable": find_shellable_witness}


def cmd_witness(doc, args):
    h = _vector(doc, "h")
    kind = args.kind or (doc.get("kind") if isinstance(doc, dict) else None) or "pm"
    if kind not in _SEARCHES:
        raise UsageError(f"unknown witness kind {kind!r}; choose from {sorted(_SEARCHES)}")
    if kind == "shellable":
        outcome = find_shellable_witness(h, _bounds(args), oracle_cap=args.oracle_cap)
    else:
        outcome = _SEARCHES[kind](h, _bounds(args))
    code = {FOUND: OK, ABSENT: NEGATIVE}.get(outcome.status, INCONCLUSIVE)
    return code, {"h": h, "kind": kind, **outcome.to_json()}


def cmd_oracle(doc, args):
    g = _ideal(doc, args)
    s = is_m_shellable_bruteforce(g, cap=args.oracle_cap)
    status = FOUND if s is not None else ABSENT
    return (OK if s is not None else NEGATIVE), {
        "ideal": g.to_json(),
        "status": status,
        "shelling": None if s is None else s.to_json(),
    }


def cmd_enumerate(doc, args):
    if not isinstance(doc, dict) or not all(_natural(doc.get(k)) for k in ("variables", "degree")):
        raise UsageError('expected {"variables": n, "degree": d, "max_count": k}')
    if doc.get("max_count") is not None and not _natural(doc["max_count"]):
        raise UsageError("max_count must be a non-negative integer")
    found = [g.to_json() for g in enumerate_discrete_polymatroids(doc["variables"], doc["degree"], doc.get("max_count"))]
    return OK, {"variables": doc["variables"], "degree": doc["degree"], "count": len(found), "ideals": found}


COMMANDS: dict[str, Callable] = {
    "shell": cmd_shell,
    "verify": cmd_verify,
    "check-pm": cmd_check_pm,
    "degseq": cmd_degseq,
    "f2h": cmd_f2h,
    "h2f": cmd_h2f,
    "lpm-h": cmd_lpm_h,
    "cor3": cmd_cor3,
    "witness": cmd_witness,
    "oracle": cmd_oracle,
    "enumerate": cmd_enumerate,
}


def _bounds(args) -> SearchBounds:
    return SearchBounds(max_variables=args.max_variables, max_nodes=args.max_nodes)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="polyshell", description="M-shellings of discrete polymatroids.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("-i", "--input", default="-", help="input JSON file (default: stdin)")
    p.add_argument("-o", "--output", default="-", help="output JSON file (default: stdout)")
    p.add_argument("--max-nodes", type=int, default=SearchBounds.max_nodes)
    p.add_argument("--max-variables", type=int, default=SearchBounds.max_variables)
    p.add_argument("--closure-cap", type=int, default=CLOSURE_CAP)
    p.add_argument("--oracle-cap", type=int, default=ORACLE_CAP)
    p.add_argument("--kind", choices=sorted(_SEARCHES), help="witness search kind (witness command)")
    p.add_argument("--pretty", action="store_true", help="indent the output")
    return p


def _write(doc, path: str, pretty: bool) -> None:
    text = json.dumps(doc, indent=2 if pretty else None, separators=None if pretty else (",", ":")) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _error_kind(exc: Exception) -> str:
    if isinstance(exc, UsageError):
        return "usage"
    if isinstance(exc, json.JSONDecodeError):
        return "parse"
    if isinstance(exc, SizeError):
        return "size"
    if isinstance(exc, OSError):
        return "io"
    return type(exc).__name__


def run(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    output, pretty = "-", False
    try:
        args = build_parser().parse_args(argv)
        output, pretty = args.output, args.pretty
        if min(args.max_nodes, args.max_variables, args.closure_cap, args.oracle_cap) < 1:
            raise UsageError("bounds and caps must be positive")
        if args.input == "-":
            raw = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                raw = fh.read()
        doc = json.loads(raw)
        code, result = COMMANDS[args.command](doc, args)
    except (UsageError, json.JSONDecodeError, OSError, PolyshellError) as exc:
        kind = _error_kind(exc)
        print(f"polyshell: {exc}", file=sys.stderr)
        _write({"error": {"type": kind, "message": str(exc)}}, output, pretty)
        return ERROR
    _write(result, output, pretty)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
