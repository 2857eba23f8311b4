"""Command-line front door.

Subcommands: compute, spectrum, formula, verify, catalog.  Output is a plain
table by default or JSON with --json; both carry the same numeric content.

Exit codes: 0 success, 1 verification/crosscheck failure, 2 usage or spec
parse error, 3 construction or resource error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Optional

from .formulas import FORMULAS, InexactDivisionError, run_formula
from .groups import GroupConstructionError, GroupSizeError
from .specs import (
    Catalog,
    CatalogError,
    PACKAGED_CATALOGS,
    ParseError,
    build_group,
    canonical,
    load_catalog,
    packaged_catalog_path,
)
from .stats import order_spectrum, rho_of_spectrum, OrderSpectrum
from . import verify as checks

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3

SUITES = {
    "order-12": "order12",
    "order-60": "order60",
    "order-660": "order660",
    "order-1092": "order1092",
}


def _print_table(rows: List[tuple[str, str]]) -> None:
    width = max(len(key) for key, _ in rows)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}")


def _spectrum_json(spectrum: OrderSpectrum) -> Dict[str, int]:
    return {str(d): c for d, c in spectrum.counts}


# -- spectrum cache: canonical spec -> {"order": n, "spectrum": {...}} --


def _cache_load(path: Path) -> Dict[str, Any]:
    if not path.is_file():
        return {}
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return {}  # a broken cache is ignored, never fatal


def _cache_store(path: Path, data: Dict[str, Any]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(data, handle, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _spectrum_for(spec_text: str, cache_path: Optional[str]) -> tuple[str, int, OrderSpectrum]:
    key = canonical(spec_text)
    if cache_path:
        cache = _cache_load(Path(cache_path))
        hit = cache.get(key)
        if hit is not None:
            spectrum = OrderSpectrum.from_counts({int(d): c for d, c in hit["spectrum"].items()})
            return key, hit["order"], spectrum
    G = build_group(key)
    spectrum = order_spectrum(G)
    if cache_path:
        cache = _cache_load(Path(cache_path))
        cache[key] = {"order": G.order, "spectrum": _spectrum_json(spectrum)}
        _cache_store(Path(cache_path), cache)
    return key, G.order, spectrum


def _cmd_compute(args: argparse.Namespace) -> int:
    key, order, spectrum = _spectrum_for(args.spec, args.cache)
    value = rho_of_spectrum(spectrum)
    if args.json:
        print(
            json.dumps(
                {
                    "spec": key,
                    "order": order,
                    "rho": str(value),
                    "omega_rho": value.omega(),
                    "spectrum": _spectrum_json(spectrum),
                },
                sort_keys=True,
            )
        )
    else:
        _print_table(
            [
                ("spec", key),
                ("order", str(order)),
                ("rho", str(value)),
                ("omega_rho", str(value.omega())),
                ("spectrum", str(spectrum)),
            ]
        )
    return EXIT_OK


def _cmd_spectrum(args: argparse.Namespace) -> int:
    key, order, spectrum = _spectrum_for(args.spec, args.cache)
    if args.json:
        print(
            json.dumps(
                {"spec": key, "order": order, "spectrum": _spectrum_json(spectrum)},
                sort_keys=True,
            )
        )
    else:
        _print_table([("spec", key), ("order", str(order))])
        for d, c in spectrum.counts:
            print(f"{d}: {c}")
    return EXIT_OK


def _cmd_formula(args: argparse.Namespace) -> int:
    params = {}
    for name in ("p", "alpha", "beta", "q"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    try:
        result = run_formula(args.name, **params)
    except (KeyError, ValueError, InexactDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    crosscheck_status = None
    if args.crosscheck:
        twin = FORMULAS[args.name].crosscheck
        try:
            brute = twin(**params)
            crosscheck_status = "pass" if brute == result.value else "mismatch"
        except (GroupConstructionError, GroupSizeError):
            crosscheck_status = "skipped"
    if args.json:
        payload: Dict[str, Any] = {
            "formula": result.name,
            "params": result.inputs,
            "value": result.value_str(),
        }
        if args.crosscheck:
            payload["crosscheck"] = crosscheck_status
        print(json.dumps(payload, sort_keys=True))
    else:
        rows = [("formula", result.name)] + [
            (k, str(v)) for k, v in sorted(result.inputs.items())
        ]
        rows.append(("value", result.value_str()))
        if args.crosscheck:
            rows.append(("crosscheck", crosscheck_status))
        _print_table(rows)
    return EXIT_VERIFICATION_FAILED if crosscheck_status == "mismatch" else EXIT_OK


def _resolve_catalog(arg: Optional[str], suite: Optional[str]) -> Catalog:
    if arg is None:
        if suite is None:
            raise CatalogError("no catalog given")
        return load_catalog(packaged_catalog_path(SUITES[suite]))
    name = arg.replace("-", "")
    if name in PACKAGED_CATALOGS and not Path(arg).exists():
        return load_catalog(packaged_catalog_path(name))
    return load_catalog(arg)


def _emit_reports(reports: List[checks.VerificationReport], as_json: bool) -> int:
    result = checks.SuiteResult(tuple(reports))
    if as_json:
        print(
            json.dumps(
                {
                    "reports": [r.to_json_dict() for r in result.reports],
                    "summary": {
                        "passed": result.passed,
                        "applicable": result.applicable,
                        "precondition_unmet": result.skipped,
                    },
                },
                sort_keys=True,
            )
        )
    else:
        for r in result.reports:
            tag = {"pass": "PASS", "fail": "FAIL", "precondition_unmet": "SKIP"}[r.verdict]
            line = f"{tag}  {r.check}  {r.subject}"
            if r.verdict != checks.PRECONDITION_UNMET:
                line += f"  lhs={checks._jsonable(r.lhs)}  rhs={checks._jsonable(r.rhs)}"
            elif r.witness and "reason" in r.witness:
                line += f"  ({r.witness['reason']})"
            print(line)
            for note in r.notes:
                print(f"      note: {note}")
        print(result.summary())
    return EXIT_OK if result.ok else EXIT_VERIFICATION_FAILED


def _single_check(args: argparse.Namespace) -> List[checks.VerificationReport]:
    name = args.check

    def need(flag: str) -> Any:
        value = getattr(args, flag.replace("-", "_"))
        if value is None:
            raise _UsageError(f"--check {name} requires --{flag}")
        return value

    if name == "product-rule":
        return [checks.check_product_rule(build_group(need("spec-a")), build_group(need("spec-b")))]
    if name == "quotient-rule":
        return [checks.check_quotient_rule(build_group(need("spec")), need("p"))]
    if name == "semidirect-rho":
        G = build_group(need("spec"))
        if "normal" in G.parts:
            return [checks.check_semidirect_rho(G, G.parts["normal"], G.parts["complement"])]
        if "left" in G.parts:
            return [checks.check_semidirect_rho(G, G.parts["left"], G.parts["right"])]
        raise _UsageError("spec does not expose a product decomposition")
    if name == "amiri-matching":
        return [checks.check_amiri_matching(build_group(need("spec")))]
    if name == "divisibility":
        return [checks.check_divisibility(build_group(need("spec")))]
    if name == "prime-order-bound":
        return [checks.check_prime_order_bound(build_group(need("spec")))]
    if name == "cyclic-max":
        return [checks.check_cyclic_max(_resolve_catalog(need("catalog"), None))]
    if name == "minimality":
        return [checks.check_minimality(_resolve_catalog(need("catalog"), None))]
    if name == "landmark":
        return [checks.check_landmark(_resolve_catalog(need("catalog"), None))]
    if name == "huppert-partition":
        return [checks.check_huppert_partition(need("q"))]
    raise _UsageError(f"unknown check {name!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.check == "hall-predicate":
        if args.n is None or args.p is None:
            raise _UsageError("--check hall-predicate requires --n and --p")
        value = checks.check_hall_predicate(args.n, args.p)
        if args.json:
            print(json.dumps({"check": "hall-predicate", "n": args.n, "p": args.p, "value": value}))
        else:
            _print_table([("check", "hall-predicate"), ("n", str(args.n)), ("p", str(args.p)), ("value", str(value).lower())])
        return EXIT_OK
    if args.check is not None:
        return _emit_reports(_single_check(args), args.json)
    if args.suite is None and args.catalog is None:
        raise _UsageError("verify needs --suite, --catalog, or --check")
    if args.suite is not None and args.suite not in SUITES:
        raise _UsageError(f"unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}")
    catalog = _resolve_catalog(args.catalog, args.suite)
    return _emit_reports(checks.suite_for_catalog(catalog), args.json)


def _cmd_catalog(args: argparse.Namespace) -> int:
    catalog = _resolve_catalog(args.path, None)
    if args.json:
        print(
            json.dumps(
                {
                    "order": catalog.order,
                    "complete": catalog.complete,
                    "entries": [
                        {
                            "name": e.name,
                            "spec": e.spec,
                            "abelian": e.fingerprint[1],
                            "center_size": e.fingerprint[2],
                            "spectrum": {str(d): c for d, c in e.fingerprint[0]},
                        }
                        for e in catalog.entries
                    ],
                    "warnings": list(catalog.warnings),
                },
                sort_keys=True,
            )
        )
    else:
        _print_table(
            [
                ("order", str(catalog.order)),
                ("complete", str(catalog.complete).lower()),
                ("entries", str(len(catalog.entries))),
            ]
        )
        for e in catalog.entries:
            spectrum = ", ".join(f"{d}:{c}" for d, c in e.fingerprint[0])
            print(f"{e.name}  {e.spec}  abelian={e.fingerprint[1]}  |Z|={e.fingerprint[2]}  [{spectrum}]")
        for warning in catalog.warnings:
            print(f"warning: {warning}")
    return EXIT_OK


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grpomega",
        description="Exact element-order statistics and rule checks for finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="order, rho, omega_rho and spectrum of a group spec")
    p_compute.add_argument("spec")
    p_compute.add_argument("--json", action="store_true")
    p_compute.add_argument("--cache", help="optional spectrum cache file")
    p_compute.set_defaults(func=_cmd_compute)

    p_spectrum = sub.add_parser("spectrum", help="order spectrum of a group spec")
    p_spectrum.add_argument("spec")
    p_spectrum.add_argument("--json", action="store_true")
    p_spectrum.add_argument("--cache", help="optional spectrum cache file")
    p_spectrum.set_defaults(func=_cmd_spectrum)

    p_formula = sub.add_parser("formula", help="evaluate a closed form")
    p_formula.add_argument("--name", required=True, choices=sorted(FORMULAS))
    p_formula.add_argument("--p", type=int)
    p_formula.add_argument("--alpha", type=int)
    p_formula.add_argument("--beta", type=int)
    p_formula.add_argument("--q", type=int)
    p_formula.add_argument("--crosscheck", action="store_true", help="compare against enumeration")
    p_formula.add_argument("--json", action="store_true")
    p_formula.set_defaults(func=_cmd_formula)

    p_verify = sub.add_parser("verify", help="run a verification suite or a single check")
    p_verify.add_argument("--suite", help=f"one of: {', '.join(sorted(SUITES))}")
    p_verify.add_argument("--catalog", help="catalog file (defaults to the packaged one per suite)")
    p_verify.add_argument("--check", help="single check name")
    p_verify.add_argument("--spec")
    p_verify.add_argument("--spec-a", dest="spec_a")
    p_verify.add_argument("--spec-b", dest="spec_b")
    p_verify.add_argument("--p", type=int)
    p_verify.add_argument("--q", type=int)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_catalog = sub.add_parser("catalog", help="load and validate a catalog file")
    p_catalog.add_argument("path")
    p_catalog.add_argument("--json", action="store_true")
    p_catalog.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupConstructionError, GroupSizeError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
