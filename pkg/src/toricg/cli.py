"""Command-line interface.

Subcommands
-----------
table      print toric g-vector tables (csv or json) for a named family or
           a building-set JSON file, by any of the routes gamma / hetyei
           (h-vector) / direct (object enumeration) / all
verify     run a named verification suite and emit a JSON report
enumerate  stream combinatorial objects one per line

Exit codes: 0 success, 1 verification or route-agreement failure, 2 usage
or parse error, 3 capacity exceeded.  Output is deterministic: repeated
runs are byte-identical, and the TORICG_THREADS environment variable only
bounds the worker count (all work is assembled in a fixed order before
printing, so the value never changes the output).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import nestohedra, parking, perms, polyvec, verification, words
from .config import CAPS, check_capacity
from .errors import CapacityError, ToricgError

_SCHEMA = "toricg/1"
_TABLE_FAMILIES = ("associahedron", "cyclohedron", "permutahedron", "cube")
_BS_FAMILIES = ("permutahedron", "stanley_pitman", "associahedron_intervals", "interpolation")


def _thread_budget() -> int:
    raw = os.environ.get("TORICG_THREADS", "")
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ToricgError(f"TORICG_THREADS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ToricgError("TORICG_THREADS must be >= 1")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricg",
        description="Exact toric g-vectors of simple polytopes and the "
        "combinatorics behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print a toric g-vector table")
    p_table.add_argument("--family", choices=_TABLE_FAMILIES)
    p_table.add_argument("--building-set", metavar="PATH",
                         help="building-set JSON file (one row)")
    p_table.add_argument("--max", type=int, default=8, dest="max_n",
                         help="largest dimension (default 8)")
    p_table.add_argument("--route", choices=("gamma", "hetyei", "direct", "all"),
                         default="gamma")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--unsafe-max", action="store_true",
                         help="lift the capacity bounds")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(verification.SUITES))
    p_verify.add_argument("n_max", type=int)
    p_verify.add_argument("--unsafe-max", action="store_true")

    p_enum = sub.add_parser("enumerate", help="stream combinatorial objects")
    p_enum.add_argument(
        "object",
        choices=("dyck", "parking_functions_123", "parking_trees", "b_perms"),
    )
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--count-only", action="store_true")
    p_enum.add_argument("--bs-family", choices=_BS_FAMILIES,
                        help="building-set family for b_perms")
    p_enum.add_argument("--r", type=int, default=None,
                        help="parameter of the interpolation family")
    p_enum.add_argument("--building-set", metavar="PATH")
    p_enum.add_argument("--unsafe-max", action="store_true")
    return parser


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _load_building_set(path: str) -> nestohedra.BuildingSet:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ToricgError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ToricgError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return nestohedra.BuildingSet.from_json(data)


def _family_row(family: str, n: int, route: str, unsafe: bool) -> polyvec.IntPoly:
    if route == "gamma":
        return polyvec.toric_g_from_gamma(n, polyvec.gamma_family(family, n))
    if route == "hetyei":
        gamma = polyvec.gamma_family(family, n)
        return polyvec.toric_g_from_h(n, polyvec.gamma_to_h(gamma, n))
    check_capacity("direct_route", n, unsafe)
    if family == "associahedron":
        return nestohedra.ascent_polynomial(
            parking.iter_123_avoiding_functions(n, parking_only=True)
        )
    if family == "cyclohedron":
        return nestohedra.ascent_polynomial(parking.iter_123_avoiding_functions(n))
    if family == "permutahedron":
        return nestohedra.toric_g_direct(
            nestohedra.named_family("permutahedron", n), unsafe=unsafe
        )
    hist: dict[int, int] = {}
    for p in perms.enumerate_123_avoiding(n):
        k = perms.asc(p)
        hist[k] = hist.get(k, 0) + 1
    return polyvec.IntPoly([hist.get(k, 0) for k in range(max(hist, default=0) + 1)])


def _bs_row(bs: nestohedra.BuildingSet, route: str, unsafe: bool) -> polyvec.IntPoly:
    n = bs.ground_size - 1
    if route == "gamma":
        return nestohedra.toric_g_chordal(bs, unsafe)
    if route == "hetyei":
        return polyvec.toric_g_from_h(n, nestohedra.h_chordal(bs, unsafe))
    return nestohedra.toric_g_direct(bs, unsafe=unsafe)


def _table_rows(args) -> list[tuple[int, list[int]]]:
    routes = ("gamma", "hetyei", "direct") if args.route == "all" else (args.route,)
    rows = []
    if args.building_set:
        bs = _load_building_set(args.building_set)
        dims = [bs.ground_size - 1]
        compute = lambda n, route: _bs_row(bs, route, args.unsafe_max)
    else:
        if not args.family:
            raise ToricgError("table needs --family or --building-set")
        if args.max_n < 1:
            raise ToricgError("--max must be >= 1")
        check_capacity("table", args.max_n, args.unsafe_max)
        dims = list(range(1, args.max_n + 1))
        compute = lambda n, route: _family_row(args.family, n, route, args.unsafe_max)
    for n in dims:
        results = {}
        for route in routes:
            if args.route == "all" and route == "direct" and n > CAPS["direct_route"] and not args.unsafe_max:
                continue
            results[route] = compute(n, route)
        first_route = next(iter(results))
        baseline = results[first_route]
        for route, poly in results.items():
            if poly != baseline:
                raise RouteDisagreement(
                    f"routes {first_route} and {route} disagree at n={n}: "
                    f"{baseline.to_text()} vs {poly.to_text()}"
                )
        rows.append((n, [baseline.coeff(k) for k in range(n // 2 + 1)]))
    return rows


class RouteDisagreement(ToricgError):
    pass


def _cmd_table(args) -> int:
    rows = _table_rows(args)
    if args.format == "json":
        payload = {
            "schema": _SCHEMA,
            "kind": "table",
            "family": args.family,
            "building_set": args.building_set,
            "route": args.route,
            "rows": [{"n": n, "g": g} for n, g in rows],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    width = max(len(g) for _, g in rows)
    print(",".join(["n"] + [f"g{k}" for k in range(width)]))
    for n, g in rows:
        cells = [str(n)] + [str(v) for v in g] + [""] * (width - len(g))
        print(",".join(cells))
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _cmd_verify(args) -> int:
    _thread_budget()
    report = verification.SUITES[args.suite](args.n_max, unsafe=args.unsafe_max)
    report = {"schema": _SCHEMA, "kind": "verify", **report}
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------


def _enumerate_stream(args):
    n = args.n
    if n < 0:
        raise ToricgError("n must be >= 0")
    if args.object == "dyck":
        check_capacity("table", n, args.unsafe_max)
        return words.enumerate_words(n, "dyck")
    if args.object == "parking_functions_123":
        check_capacity("functions_route", n, args.unsafe_max)
        return (
            parking.fn_to_text(f)
            for f in parking.iter_123_avoiding_functions(n, parking_only=True)
        )
    if args.object == "parking_trees":
        return (
            parking.parking_tree_to_text(t)
            for t in parking.enumerate_parking_trees(n, unsafe=args.unsafe_max)
        )
    bs = _enumerate_building_set(args)
    return (perms.perm_to_text(p) for p in nestohedra.b_permutations(bs, args.unsafe_max))


def _enumerate_building_set(args) -> nestohedra.BuildingSet:
    if args.building_set:
        return _load_building_set(args.building_set)
    if args.bs_family:
        return nestohedra.named_family(args.bs_family, args.n, args.r)
    raise ToricgError("b_perms needs --bs-family or --building-set")


def _cmd_enumerate(args) -> int:
    stream = _enumerate_stream(args)
    if args.count_only:
        print(sum(1 for _ in stream))
    else:
        for item in stream:
            print(item)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _thread_budget()
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_enumerate(args)
    except CapacityError as exc:
        print(f"toricg: capacity: {exc}", file=sys.stderr)
        return 3
    except RouteDisagreement as exc:
        print(f"toricg: {exc}", file=sys.stderr)
        return 1
    except ToricgError as exc:
        print(f"toricg: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
