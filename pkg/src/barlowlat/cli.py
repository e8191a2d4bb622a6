"""Batch command-line frontend.

Subcommands run the verification pipeline or individual computations and
emit machine-readable JSON (or a plain-text summary for `verify --format
text`).  Exit codes: 0 all good, 1 a check failed, 2 unusable input
(missing or malformed fixture, bad expression).
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from .errors import SchemaError, ToolkitError, UnknownName
from .exceptional import (
    DecompositionProblem,
    decompose_effective,
    is_num_exceptional,
    search_configs,
)
from .fixtures import CURVE_NAMES, FixtureSet, load_fixtures
from .heights import (
    ExtBoundMatrix,
    Fullness,
    INF,
    fullness_verdict,
    height,
    single_segment_bound,
)
from .homledger import StarChoice, formality_report
from .lattice import DivisorClass
from .roots import (
    enumerate_roots,
    extended_cartan_expected,
    partition_roots,
    vanishing_classification,
    VanishingTag,
)

SURFACE_DIMENSION = 2

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([A-Za-z][A-Za-z0-9]*)")


def parse_class_expr(fix: FixtureSet, expr: str) -> DivisorClass:
    """Integer combinations of registered class names, e.g. '5K - E3p - Bp000'."""
    text = expr.strip()
    if text == "0":
        return DivisorClass.zero(9)
    pos = 0
    out = DivisorClass.zero(9)
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or (m.start() != pos and text[pos:m.start()].strip()):
            raise SchemaError(f"cannot parse class expression at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        name = m.group(3)
        out = out + (sign * coeff) * fix.curve_class(name)
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


def _jsonable(value: Any) -> Any:
    if value is INF:
        return "inf"
    if isinstance(value, float):
        return "inf" if value == INF else value
    if isinstance(value, DivisorClass):
        return list(value.coords)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = list(value)
        if isinstance(value, (set, frozenset)):
            items = sorted(items)
        return [_jsonable(v) for v in items]
    if isinstance(value, StarChoice):
        return value.name.lower()
    return value


# ------------------------------------------------------------------ verify

def _star_choices(flag: str) -> list[StarChoice]:
    return {
        "zero": [StarChoice.ZERO],
        "nonzero": [StarChoice.NONZERO],
        "both": [StarChoice.ZERO, StarChoice.NONZERO],
    }[flag]


EXPECTED_MIN_DEGREES = {
    StarChoice.NONZERO: {2: 3, 3: 4, 4: 6, 5: 7},
    StarChoice.ZERO: {2: 3, 3: 4, 4: 6, 5: INF},
}


def verification_checks(
    fix: FixtureSet, stars_flag: str
) -> list[tuple[str, str, Callable[[], dict], bool]]:
    """Ordered (id, claim, runner, needs_lattice) tuples for the pipeline."""

    def fixture_tables() -> dict:
        return dict(fix.validate_curve_table())

    def simple_roots() -> dict:
        out = fix.validate_d8()
        return {"gram_verified": True, "degrees_zero": out["degrees_zero"]}

    def canonical_basis() -> dict:
        out = fix.build_canonical()
        lat = fix.lattice
        assert lat is not None
        basis = fix.canonical_basis()
        gram = [[lat.pair(a, b) for b in basis] for a in basis]
        expected = extended_cartan_expected()
        block_ok = all(
            gram[1 + i][1 + j] == expected[i][j]
            for i in range(8)
            for j in range(8)
        )
        corner_ok = gram[0][0] == 1 and all(
            gram[0][j] == 0 and gram[j][0] == 0 for j in range(1, 9)
        )
        if not (block_ok and corner_ok):
            raise ToolkitError("canonical gram does not match the extended Cartan form")
        if not lat.is_root(fix.curve_class("e")):
            raise ToolkitError("glue vector is not a root")
        return {**out, "signature": list(lat.signature())}

    def b_reconstruction() -> dict:
        return dict(fix.validate_b_classes())

    def b_relation() -> dict:
        return dict(fix.validate_relation())

    def root_count() -> dict:
        rs = enumerate_roots(fix.lattice)  # type: ignore[arg-type]
        if len(rs) != 240:
            raise ToolkitError(f"found {len(rs)} roots, expected 240")
        negs = all((-r) in rs for r in rs.roots)
        if not negs:
            raise ToolkitError("root set is not closed under negation")
        return {"count": len(rs)}

    def root_partition() -> dict:
        rs = enumerate_roots(fix.lattice)  # type: ignore[arg-type]
        part = partition_roots(
            rs,
            fix.degree1_elliptic_classes(),
            list(fix.b_classes().values()),
            fix.minus_two_classes(),
        )
        if part.sizes != (84, 28, 128):
            raise ToolkitError(f"partition sizes {part.sizes}, expected (84, 28, 128)")
        return {"sizes": list(part.sizes)}

    def vanishing() -> dict:
        rs = enumerate_roots(fix.lattice)  # type: ignore[arg-type]
        tags = vanishing_classification(
            rs, fix.minus_two_classes(), fix.irreducible_elliptic_classes()
        )
        counts = {
            tag.value: sum(1 for t in tags.values() if t is tag)
            for tag in VanishingTag
        }
        if counts["h0"] != 4 or counts["h2"] != 8:
            raise ToolkitError(f"vanishing counts {counts}, expected 4 and 8")
        return counts

    def sequence_chi() -> dict:
        return dict(fix.validate_sequence())

    def num_exceptional() -> dict:
        ok, matrix = is_num_exceptional(fix.lattice, fix.sequence_classes())  # type: ignore[arg-type]
        if not ok:
            raise ToolkitError("shipped sequence is not numerically exceptional")
        if [row[:] for row in matrix] != [list(r) for r in fix.chi_matrix]:
            raise ToolkitError("verdict matrix differs from the frozen table")
        return {"length": 11}

    def ledger_chi() -> dict:
        return dict(fix.validate_ledger_consistency())

    def make_formality(choice: StarChoice) -> Callable[[], dict]:
        def formality() -> dict:
            report = formality_report(fix.ledger, choice)
            for d, want in EXPECTED_MIN_DEGREES[choice].items():
                got = report[d].min_degree
                if got != want:
                    raise ToolkitError(
                        f"minimal chain degree at d={d} is {got}, expected {want}"
                    )
            for d in range(6, 12):
                if report[d].min_degree != INF:
                    raise ToolkitError(f"chains of length {d} should not exist")
            not_forced = [d for d in range(3, 12) if not report[d].forced_zero]
            if not_forced:
                raise ToolkitError(f"compositions not forced to vanish: {not_forced}")
            return {
                "stars": choice,
                "min_degrees": {d: v.min_degree for d, v in report.items()},
                "forced_zero_from": 3,
            }

        return formality

    def height_check() -> dict:
        h = height(fix.ext_bounds)
        single = single_segment_bound(fix.ext_bounds)
        if h != 2 or single != 2:
            raise ToolkitError(f"height {h}, single-segment bound {single}, expected 2, 2")
        return {"height": h, "single_segment_bound": single}

    def fullness() -> dict:
        verdict = fullness_verdict(height(fix.ext_bounds), SURFACE_DIMENSION)
        if verdict != Fullness.NOT_FULL:
            raise ToolkitError(f"verdict {verdict}, expected {Fullness.NOT_FULL}")
        return {"verdict": verdict, "dim": SURFACE_DIMENSION}

    def ext_bounds() -> dict:
        return dict(fix.validate_ext_bounds())

    checks: list[tuple[str, str, Callable[[], dict], bool]] = [
        ("fixture-tables", "curve table is symmetric with rational rank 9",
         fixture_tables, False),
        ("simple-roots-gram", "eight simple roots realize the fork Gram, degree 0",
         simple_roots, False),
        ("canonical-basis",
         "glue half-sum extends to a unimodular basis of signature (1,8)",
         canonical_basis, True),
        ("b-reconstruction",
         "all 32 genus-3 classes solve integrally and match the block formulas",
         b_reconstruction, True),
        ("b-relation", "doubled base genus-3 class equals its frozen combination",
         b_relation, True),
        ("root-count", "exactly 240 roots, closed under negation", root_count, True),
        ("root-partition", "roots split into disjoint families of 84 + 28 + 128",
         root_partition, True),
        ("vanishing-classification",
         "4 roots carry sections, 8 carry top cohomology, the rest neither",
         vanishing, True),
        ("sequence-chi", "the 11 bundles reproduce the frozen Euler matrix",
         sequence_chi, True),
        ("num-exceptional", "the 11 bundles form a numerically exceptional sequence",
         num_exceptional, True),
        ("ledger-chi", "Ext triples alternate to the Euler pairing in every cell",
         ledger_chi, False),
        ("ext-bounds", "height bound table matches the ledger and shift symmetry",
         ext_bounds, False),
    ]
    for choice in _star_choices(stars_flag):
        checks.append((
            f"formality-{choice.name.lower()}",
            "no composition of three or more maps survives the degree count",
            make_formality(choice), False,
        ))
    checks.extend([
        ("height", "anticanonical height of the extended collection equals 2",
         height_check, False),
        ("fullness", "height criterion shows the collection is not full",
         fullness, False),
    ])
    return checks


def run_verification(fix: FixtureSet, stars_flag: str) -> dict:
    results = []
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    build_error: str | None = None
    for check_id, claim, runner, needs_lattice in verification_checks(fix, stars_flag):
        if needs_lattice and build_error is None and not fix._built:
            try:
                fix.build_canonical()
            except (ToolkitError, AssertionError) as exc:
                build_error = str(exc)
        if needs_lattice and build_error is not None and check_id != "canonical-basis":
            counts["skipped"] += 1
            results.append({
                "id": check_id,
                "claim": claim,
                "status": "skipped",
                "witness": {"reason": f"canonical basis unavailable: {build_error}"},
            })
            continue
        try:
            witness = runner()
            status = "pass"
        except (ToolkitError, AssertionError) as exc:
            witness = {"error": str(exc)}
            status = "fail"
        counts[status] += 1
        results.append({
            "id": check_id,
            "claim": claim,
            "status": status,
            "witness": _jsonable(witness),
        })
    return {
        "tool": "barlowlat",
        "version": __version__,
        "fixture_hash": fix.fixture_hash(),
        "stars": stars_flag,
        "checks": results,
        "summary": counts,
    }


def _report_text(report: dict) -> str:
    lines = [f"barlowlat {report['version']}  fixture {report['fixture_hash'][:12]}"]
    for check in report["checks"]:
        lines.append(f"[{check['status']:>4}] {check['id']}: {check['claim']}")
        if check["status"] == "fail":
            lines.append(f"       {check['witness'].get('error', '')}")
    s = report["summary"]
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return "\n".join(lines)


# ------------------------------------------------------------------ commands

def _fixture_source(args: argparse.Namespace) -> str | None:
    explicit = getattr(args, "fixtures", None)
    if explicit:
        return explicit
    env_dir = os.environ.get("FIXTURES_DIR")
    if env_dir:
        return str(Path(env_dir) / "barlow.json")
    return None


def _load(args: argparse.Namespace, validate: bool) -> FixtureSet:
    return load_fixtures(_fixture_source(args), validate=validate)


def cmd_verify(args: argparse.Namespace) -> int:
    fix = _load(args, validate=False)
    report = run_verification(fix, args.stars)
    payload = (
        json.dumps(report, indent=2, sort_keys=True)
        if args.format == "json"
        else _report_text(report)
    )
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(payload + "\n")
    print(payload)
    return 0 if report["summary"]["fail"] == 0 else 1


def cmd_roots(args: argparse.Namespace) -> int:
    fix = _load(args, validate=False)
    fix.build_canonical()
    rs = enumerate_roots(fix.lattice)  # type: ignore[arg-type]
    if args.count:
        print(len(rs))
        return 0
    lat = rs.lattice
    out = {
        "lattice": {
            "rank": lat.rank,
            "gram": [list(r) for r in lat.gram],
            "k": list(lat.k.coords),
        },
        "count": len(rs),
        "roots": [list(r.coords) for r in rs.roots],
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_classes(args: argparse.Namespace) -> int:
    fix = _load(args, validate=False)
    fix.validate_sequence()
    basis = ["K", "e", "D8", "D7", "D6", "D5", "D4", "D3", "D2"]
    names = list(CURVE_NAMES) + [f"D{i}" for i in range(1, 9)] + ["e"]
    names += sorted(fix.b_classes()) + [f"L{i}" for i in range(1, 12)]
    out = {
        "basis": basis,
        "entries": {n: list(fix.curve_class(n).coords) for n in names},
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_chi(args: argparse.Namespace) -> int:
    fix = _load(args, validate=False)
    fix.build_canonical()
    lat = fix.lattice
    assert lat is not None
    if args.cls is not None:
        value = lat.chi(parse_class_expr(fix, args.cls))
    else:
        if args.src is None or args.dst is None:
            print("chi requires either --cls or both --from and --to", file=sys.stderr)
            return 2
        value = lat.chi_hom(
            parse_class_expr(fix, args.src), parse_class_expr(fix, args.dst)
        )
    print(value)
    return 0


def cmd_height(args: argparse.Namespace) -> int:
    if args.matrix:
        try:
            raw = json.loads(open(args.matrix).read())
            bounds = ExtBoundMatrix.from_rows(int(raw["n"]), raw["rows"])
        except (OSError, KeyError, ValueError) as exc:
            print(f"cannot read bound matrix: {exc}", file=sys.stderr)
            return 2
    else:
        fix = _load(args, validate=False)
        bounds = fix.ext_bounds
    h = height(bounds)
    out = {
        "height": _jsonable(h),
        "single_segment_bound": _jsonable(single_segment_bound(bounds)),
        "dim": args.dim,
        "verdict": fullness_verdict(h, args.dim),
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_formality(args: argparse.Namespace) -> int:
    fix = _load(args, validate=False)
    out = {}
    for choice in _star_choices(args.stars):
        report = formality_report(fix.ledger, choice)
        out[choice.name.lower()] = {
            str(d): {
                "min_degree": _jsonable(v.min_degree),
                "forced_zero": v.forced_zero,
            }
            for d, v in report.items()
        }
    if args.stars == "both":
        zero_v = {d: v["forced_zero"] for d, v in out["zero"].items()}
        nonzero_v = {d: v["forced_zero"] for d, v in out["nonzero"].items()}
        if zero_v != nonzero_v:
            print(json.dumps(out, indent=2, sort_keys=True))
            print("verdicts differ between star choices", file=sys.stderr)
            return 1
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    fix = _load(args, validate=False)
    fix.build_canonical()
    rs = enumerate_roots(fix.lattice)  # type: ignore[arg-type]
    configs = search_configs(rs, fix.lattice.k, args.limit)  # type: ignore[union-attr]
    out = {
        "count": len(configs),
        "configurations": [
            {
                "a": [list(r.coords) for r in cfg.a],
                "b": [list(r.coords) for r in cfg.b],
            }
            for cfg in configs
        ],
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    fix = _load(args, validate=False)
    fix.validate_b_classes()
    target = parse_class_expr(fix, args.target)
    if args.generators:
        names = [n.strip() for n in args.generators.split(",") if n.strip()]
    else:
        names = list(CURVE_NAMES) + sorted(fix.b_classes())
    gens = [(n, fix.curve_class(n)) for n in names]
    problem = DecompositionProblem.create(target, gens, caps=args.caps)
    solutions = decompose_effective(fix.lattice, problem)  # type: ignore[arg-type]
    out = {
        "target": args.target,
        "generators": names,
        "caps": args.caps,
        "count": len(solutions),
        "solutions": [
            {names[i]: c for i, c in enumerate(vec) if c} for vec in solutions
        ],
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


# ------------------------------------------------------------------ entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barlowlat",
        description="Exact lattice checks for the length-11 line-bundle sequence",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fixtures(p: argparse.ArgumentParser) -> None:
        p.add_argument("--fixtures", help="path to a fixture JSON (default: shipped)")

    p = sub.add_parser("verify", help="run the full verification pipeline")
    add_fixtures(p)
    p.add_argument("--stars", choices=["zero", "nonzero", "both"], default="both")
    p.add_argument("--report", help="also write the report to this path")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="enumerate the 240 roots")
    add_fixtures(p)
    p.add_argument("--count", action="store_true", help="print only the count")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("classes", help="dump every named class in basis coordinates")
    add_fixtures(p)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("chi", help="Euler characteristic / Euler pairing")
    add_fixtures(p)
    p.add_argument("--from", dest="src", help="source class name or expression")
    p.add_argument("--to", dest="dst", help="target class name or expression")
    p.add_argument("--cls", help="single class expression for a plain chi")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("height", help="height of the extended collection")
    add_fixtures(p)
    p.add_argument("--matrix", help="path to an external bound-matrix JSON")
    p.add_argument("--dim", type=int, default=SURFACE_DIMENSION)
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("formality", help="chain-degree report for the ledger")
    add_fixtures(p)
    p.add_argument("--stars", choices=["zero", "nonzero", "both"], default="both")
    p.set_defaults(func=cmd_formality)

    p = sub.add_parser("search", help="search root configurations")
    add_fixtures(p)
    p.add_argument("--limit", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("decompose", help="nonnegative decompositions of a class")
    add_fixtures(p)
    p.add_argument("--target", required=True, help="class expression, e.g. '5K-E3p-Bp000'")
    p.add_argument("--caps", type=int, default=8)
    p.add_argument("--generators", help="comma-separated generator names")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"fixture error: {exc}", file=sys.stderr)
        return 2
    except UnknownName as exc:
        print(f"unknown name: {exc}", file=sys.stderr)
        return 2
    except ToolkitError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
