"""Command-line front end.

Exit codes: 0 success, 1 a requested property or verification failed,
2 usage or input error (including requests beyond a size cap).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import census as census_mod
from .constructions import free_211_semigroup, free_band
from .constructions.examples import NAMED, build_named_example
from .constructions.presentation import parse_presentation, presented_semigroup
from .constructions.tensor import BoundedTensor, ltd_tensor, rtd_tensor
from .constructions.words import BoundedFreeSemigroup
from .core import CayleyTable, structural_profile
from .errors import AlgebraSyntaxError, EntryRangeError, PentalgError, SizeCap, TooLarge, TooManyGenerators
from .freeobjects import build_ak, build_bx, build_cn
from .io import format_algebra, read_algebra
from .pentagon import classify, derived_relations, make_apa, star_varieties, theorem_crosscheck, translations
from .reproduce import DEFAULT_SEED, format_suite, run_suite, suite_failed, suite_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, path=None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {_fmt(v)}" for k, v in value.items())
        elif isinstance(value, list):
            lines.append(f"{key}: {len(value)}")
            lines.extend(f"  {v}" for v in value)
        else:
            lines.append(f"{key}: {_fmt(value)}")
    return "\n".join(lines) + "\n"


def _fmt(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _table_report(t: CayleyTable, role: str) -> dict:
    prof = structural_profile(t)
    report = {"n": t.n, "operation": role, "profile": prof.flags()}
    if prof.associative:
        report["varieties"] = star_varieties(t)
    return report


def _apa_report(dot: CayleyTable, star: CayleyTable, crosscheck: bool) -> dict:
    p = make_apa(dot, star)
    report = {"n": p.n, "validation": {name: bool(r) for name, r in p.status.items()}, "apa": p.valid}
    witnesses = {name: list(r.witness) for name, r in p.status.items() if not r}
    if witnesses:
        report["witnesses"] = {k: str(tuple(v)) for k, v in witnesses.items()}
    if not p.valid:
        return report
    c = classify(p)
    report["classification"] = {"ltd": c.is_ltd, "rtd": c.is_rtd, "cell": c.cell,
                                "determined_by": None if c.determined_by is None else list(c.determined_by)}
    tf = translations(p)
    report["translations"] = dict(size=len(tf), **tf.profile.__dict__)
    report["varieties"] = c.star_varieties
    report["derived"] = derived_relations(p).flags()
    if crosscheck:
        report["violations"] = theorem_crosscheck(p)
    return report


PROPERTY_KEYS = {
    "apa": lambda r: r.get("apa", False),
    "ltd": lambda r: r.get("classification", {}).get("ltd", False),
    "rtd": lambda r: r.get("classification", {}).get("rtd", False),
    "both": lambda r: r.get("classification", {}).get("cell") == "both",
    "neither": lambda r: r.get("classification", {}).get("cell") == "neither",
    "crosscheck": lambda r: r.get("violations") == [],
}


def _property(report: dict, name: str) -> bool:
    if name in PROPERTY_KEYS:
        return bool(PROPERTY_KEYS[name](report))
    for section in ("varieties", "profile", "derived", "translations"):
        if name in report.get(section, {}):
            return bool(report[section][name])
    raise UsageError(f"unknown property {name!r}")


def cmd_check(args) -> int:
    f = read_algebra(args.file)
    props = [p for p in (args.prop or "").split(",") if p]
    if f.dot is not None and f.star is not None:
        report = _apa_report(f.dot, f.star, args.crosscheck or args.all or "crosscheck" in props)
    else:
        report = _table_report(f.dot if f.dot is not None else f.star, "dot" if f.dot is not None else "star")
    results = {p: _property(report, p) for p in props}
    if args.all:
        if "apa" in report:
            results.setdefault("apa", report["apa"])
            if report["apa"]:
                results.setdefault("crosscheck", report["violations"] == [])
        else:
            results.setdefault("associative", report["profile"]["associative"])
    if results:
        report["requested"] = results
    _emit(_render(report, args.json))
    return EXIT_OK if all(results.values()) else EXIT_FAIL


# ---------------------------------------------------------------------------
# build / tensor / present
# ---------------------------------------------------------------------------

def cmd_build(args) -> int:
    kind = args.kind
    if kind == "ak":
        text = format_algebra(star=build_ak(args.k, args.n).table)
    elif kind == "cn":
        text = format_algebra(star=build_cn(args.n).table)
    elif kind == "bx":
        text = format_algebra(star=build_bx(args.n).table)
    elif kind == "freeband":
        text = format_algebra(dot=free_band(args.gens).table)
    elif kind == "free211":
        t = free_211_semigroup(args.gens)
        text = format_algebra(dot=t, star=t)
    else:
        if not args.name:
            raise UsageError(f"build example needs a name: {', '.join(NAMED)}")
        if args.name == "gamma":
            raise UsageError("the gamma example needs a dot and a map; use the library API")
        p = build_named_example(args.name, n=args.n)
        text = format_algebra(p.dot, p.star)
    _emit(text, args.output)
    return EXIT_OK


def cmd_tensor(args) -> int:
    f = read_algebra(args.star)
    star = f.star if f.star is not None else f.dot
    build = ltd_tensor if args.mode == "ltd" else rtd_tensor
    if args.carrier == "freeband":
        p = build(star)
        _emit(format_algebra(p.dot, p.star), args.output)
        return EXIT_OK
    if args.bound is None:
        raise UsageError("--carrier bounded needs --bound")
    bt = build(star, BoundedFreeSemigroup(star.n, args.bound, list(star.labels) if star.labels else None))
    assert isinstance(bt, BoundedTensor)
    report = {"carrier": f"words of length <= {args.bound}", "n": bt.carrier.n,
              "checks": {k: bool(v) for k, v in bt.checks.items()}, "valid": bt.valid}
    _emit(_render(report, args.json), args.output)
    return EXIT_OK if bt.valid else EXIT_FAIL


def cmd_present(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        pres = parse_presentation(fh.read())
    t = presented_semigroup(pres, args.bound)
    _emit(format_algebra(star=t), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# census / reproduction suite
# ---------------------------------------------------------------------------

def cmd_census(args) -> int:
    if args.dot:
        f = read_algebra(args.dot)
        dot = f.dot if f.dot is not None else f.star
        q = census_mod.CensusQuery(order=dot.n, dot=dot, up_to_iso=args.up_to_iso, crosscheck=args.crosscheck)
    elif args.all_dots:
        if args.order is None:
            raise UsageError("--all-dots needs --order")
        q = census_mod.CensusQuery(order=args.order, up_to_iso=args.up_to_iso, crosscheck=args.crosscheck)
    else:
        raise UsageError("census needs --dot FILE or --all-dots --order N")
    report = census_mod.run_census(q, jobs=args.jobs)
    if args.output:
        _emit("\n".join(report.lines) + ("\n" if report.lines else ""), args.output)
    _emit(json.dumps(report.as_dict(), indent=2) + "\n" if args.json else report.text())
    return EXIT_OK if not report.violations else EXIT_FAIL


def cmd_paper(args) -> int:
    checks = run_suite(jobs=args.jobs, seed=args.seed)
    _emit(suite_json(checks) if args.json else format_suite(checks))
    return EXIT_FAIL if suite_failed(checks) else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pentalg", description="Finite pentagon algebra toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate and classify an algebra file")
    p.add_argument("file")
    p.add_argument("--prop", help="comma-separated properties that must hold (e.g. apa,ltd,V_P2)")
    p.add_argument("--all", action="store_true", help="full report; require a valid APA with no crosscheck violations")
    p.add_argument("--crosscheck", action="store_true", help="run the theorem crosscheck")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", help="write a built algebra file")
    p.add_argument("kind", choices=["ak", "cn", "bx", "freeband", "free211", "example"])
    p.add_argument("name", nargs="?", help="example name for 'build example'")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int)
    p.add_argument("--gens", type=int, default=2)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("tensor", help="LTD/RTD tensor algebra over a word carrier")
    p.add_argument("--mode", choices=["ltd", "rtd"], required=True)
    p.add_argument("--star", required=True, help="algebra file holding the star semigroup")
    p.add_argument("--carrier", choices=["freeband", "bounded"], default="freeband")
    p.add_argument("--bound", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("present", help="semigroup from a rewriting presentation")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=6, help="longest word enumerated")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("census", help="enumerate and crosscheck APAs")
    p.add_argument("--order", type=int)
    p.add_argument("--all-dots", action="store_true")
    p.add_argument("--dot", help="algebra file fixing the dot")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--crosscheck", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", help="write one line per algebra")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("paper", help="run the reproduction suite")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paper)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "kind", None) in ("ak", "cn", "bx") and args.n is None:
            raise UsageError(f"build {args.kind} needs --n")
        return args.func(args)
    except (UsageError, AlgebraSyntaxError, EntryRangeError, SizeCap, TooLarge, TooManyGenerators, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PentalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
