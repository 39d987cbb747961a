"""Command-line front end for the engine and the verification suite.

Exit codes: 0 success (for ``verify``: every check passed); 1 at least
one check failed; 2 usage, parse, or data errors; 3 a basis computation
exceeded its pair budget.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import numerics
from .derivations import graded_kernel, parse_derivation
from .errors import BudgetExceeded, EngineError
from .groebner import DEFAULT_BUDGET, buchberger
from .rings import DEGREVLEX, LEX, PolyRing, is_prime, parse_poly
from .suite import (BUDGET_EXCEEDED, CHECK_IDS, DEFAULT_SEED, PASS, report,
                    run_all)

USAGE_EXIT = 2
BUDGET_EXIT = 3

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _shared_flags() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--p", type=int, default=None,
                        help="prime characteristic (default 5)")
    shared.add_argument("--order", choices=("degrevlex", "lex"), default=None,
                        help="monomial order (default degrevlex)")
    shared.add_argument("--seed", type=int, default=None,
                        help="randomness seed for the suite (default 1)")
    shared.add_argument("--budget", type=int, default=None,
                        help=f"pair budget for basis computations "
                             f"(default {DEFAULT_BUDGET})")
    shared.add_argument("--format", dest="fmt", choices=("text", "json"),
                        default=None, help="output format (default text)")
    shared.add_argument("--only", default=None, metavar="CHECK-ID",
                        help="run a single verification check, e.g. C3")
    return shared


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_flags()
    parser = argparse.ArgumentParser(
        prog="godeaux",
        description="Exact characteristic-p verification engine",
        parents=[shared])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sub.add_parser("verify", parents=[shared],
                   help="run the 14-check verification suite")

    kernel = sub.add_parser("kernel", parents=[shared],
                            help="graded kernel of a derivation")
    kernel.add_argument("file", help="derivation file: `var -> poly` lines, "
                                     "optional `p = ...` / `vars = ...` header")
    kernel.add_argument("--degree", type=int, required=True)

    groebner = sub.add_parser("groebner", parents=[shared],
                              help="reduced basis of an ideal")
    groebner.add_argument("file", help="ideal file: one polynomial per line, "
                                       "optional `p = ...` / `vars = ...` "
                                       "header")

    inv = sub.add_parser("invariants", parents=[shared],
                         help="numerical invariant calculations")
    kinds = inv.add_subparsers(dest="invariant_kind", required=True)

    hyper = kinds.add_parser("hypersurface", parents=[shared])
    hyper.add_argument("--d", type=int, required=True,
                       help="hypersurface degree")

    feas = kinds.add_parser("feasible", parents=[shared])
    feas.add_argument("--kind", choices=("singular", "supersingular"),
                      required=True)
    feas.add_argument("--threshold", type=int, default=-4)
    feas.add_argument("--cover-bound", dest="cover_bound", type=int, default=6)

    torsor = kinds.add_parser("torsor", parents=[shared])
    torsor.add_argument("--chi", type=int, required=True)
    torsor.add_argument("--k2", type=int, required=True)

    betti = kinds.add_parser("betti", parents=[shared])
    betti.add_argument("--chi", type=int, required=True)
    betti.add_argument("--k2", type=int, required=True)
    betti.add_argument("--b1", type=int, default=0)

    return parser


class _Usage(Exception):
    pass


def _settings(args) -> dict:
    p = 5 if args.p is None else args.p
    if not is_prime(p):
        raise _Usage(f"--p must be prime, got {p}")
    budget = DEFAULT_BUDGET if args.budget is None else args.budget
    if budget < 1:
        raise _Usage(f"--budget must be at least 1, got {budget}")
    return {
        "p": p,
        "order": args.order or "degrevlex",
        "seed": DEFAULT_SEED if args.seed is None else args.seed,
        "budget": budget,
        "fmt": args.fmt or "text",
        "only": args.only,
    }


def _order_for(name: str):
    return DEGREVLEX if name == "degrevlex" else LEX


def _split_input(text: str) -> tuple[dict, list[str]]:
    """Separate `key = value` header lines from payload lines."""
    meta = {}
    body = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line and "->" not in line:
            key, value = line.split("=", 1)
            meta[key.strip()] = value.strip()
        else:
            body.append(line)
    return meta, body


def _natural_key(name: str):
    m = re.match(r"(.*?)(\d*)$", name)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


def _ring_from_input(meta: dict, body: list[str], settings: dict,
                     derivation: bool) -> PolyRing:
    p = int(meta["p"]) if "p" in meta else settings["p"]
    if not is_prime(p):
        raise _Usage(f"characteristic must be prime, got {p}")
    if "vars" in meta:
        variables = tuple(meta["vars"].split())
    elif derivation:
        variables = tuple(line.split("->", 1)[0].strip() for line in body)
    else:
        names = set()
        for line in body:
            for token in _IDENT.findall(line):
                names.add(token)
        variables = tuple(sorted(names, key=_natural_key))
    if not variables:
        variables = ("x",)
    return PolyRing(variables, p, _order_for(settings["order"]))


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_verify(args, settings) -> int:
    if settings["p"] != 5:
        raise _Usage("the verification fixtures are defined at "
                     "characteristic 5")
    only = settings["only"]
    if only is not None and only not in CHECK_IDS:
        raise _Usage(f"unknown check id {only!r} (expected one of "
                     f"{', '.join(CHECK_IDS)})")
    results = run_all(seed=settings["seed"], budget=settings["budget"],
                      only=[only] if only else None)
    sys.stdout.write(report(results, settings["fmt"]))
    if any(r.status == BUDGET_EXCEEDED for r in results):
        return BUDGET_EXIT
    if any(r.status != PASS for r in results):
        return 1
    return 0


def cmd_kernel(args, settings) -> int:
    text = Path(args.file).read_text()
    meta, body = _split_input(text)
    ring = _ring_from_input(meta, body, settings, derivation=True)
    delta = parse_derivation(ring, "\n".join(body))
    if args.degree < 0:
        raise _Usage("--degree must be non-negative")
    basis = graded_kernel(delta, args.degree)
    if settings["fmt"] == "json":
        _emit_json({"basis": [str(f) for f in basis],
                    "dimension": len(basis)})
    else:
        for f in basis:
            print(f)
        print(f"dimension = {len(basis)}")
    return 0


def cmd_groebner(args, settings) -> int:
    text = Path(args.file).read_text()
    meta, body = _split_input(text)
    ring = _ring_from_input(meta, body, settings, derivation=False)
    gens = [parse_poly(ring, line) for line in body]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        if settings["fmt"] == "json":
            _emit_json({"basis": [], "pairs_processed": 0})
        return 0
    try:
        gb = buchberger(gens, budget=settings["budget"])
    except BudgetExceeded as exc:
        print(f"budget exceeded after {exc.pairs_processed} pairs "
              f"(basis size {exc.basis_size})", file=sys.stderr)
        return BUDGET_EXIT
    if settings["fmt"] == "json":
        _emit_json({"basis": [str(g) for g in gb.polynomials],
                    "pairs_processed": gb.pairs_processed})
    else:
        for g in gb.polynomials:
            print(g)
    return 0


def cmd_invariants(args, settings) -> int:
    kind = args.invariant_kind
    if kind == "hypersurface":
        chi, k2 = numerics.hypersurface_invariants(args.d)
        payload = {"chi": chi, "k2": k2}
    elif kind == "feasible":
        primes = numerics.feasible_characteristics(
            args.kind, threshold=args.threshold, cover_bound=args.cover_bound)
        if settings["fmt"] == "json":
            _emit_json({"feasible": primes})
        else:
            print(" ".join(str(q) for q in primes))
        return 0
    elif kind == "torsor":
        record = numerics.InvariantRecord(p=settings["p"], chi=args.chi,
                                          k2=args.k2)
        out = numerics.torsor_invariants(record)
        payload = {"chi": out.chi, "k2": out.k2,
                   "h0_omega_lower": out.h0_omega_lower}
    else:  # betti
        c2, b2, b3 = numerics.betti_consistency(args.chi, args.k2, args.b1)
        payload = {"c2": c2, "b2": b2, "b3": b3}
    if settings["fmt"] == "json":
        _emit_json(payload)
    else:
        for key, value in payload.items():
            print(f"{key} = {value}")
    return 0


_COMMANDS = {
    "verify": cmd_verify,
    "kernel": cmd_kernel,
    "groebner": cmd_groebner,
    "invariants": cmd_invariants,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settings(args)
        return _COMMANDS[args.subcommand](args, settings)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except BudgetExceeded as exc:
        print(f"budget exceeded after {exc.pairs_processed} pairs "
              f"(basis size {exc.basis_size})", file=sys.stderr)
        return BUDGET_EXIT
    except (EngineError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
