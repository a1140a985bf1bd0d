"""
Command-line driver: python -m app <subcommand> ...
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple

from app.core.bouwkamp import (
    emit_bouwkampcode,
    format_record,
    parse_record,
    place_elements,
    tablecode_of,
)
from app.core.catalog import Catalog
from app.core.config import settings
from app.core.dissection import classify, gambini_violations, require_tiling, validate_tiling
from app.core.enumerator import Enumerator
from app.core.exceptions import (
    CatalogError,
    ClassMismatch,
    CodeError,
    GraphFormatError,
    InvalidTiling,
    NetworkError,
    ResourceLimit,
    SquaringError,
)
from app.core.isomers import canonicalize, enumerate_isomers
from app.core.network_solver import NetworkSolver
from app.core.planar_code import parse_rotation_text, read_planar_code
from app.models.catalog import CatalogEntry
from app.models.dissection import Dissection, Perfection
from app.models.graph import ClassFilter, Connectivity, PlanarEmbedding
from app.utils.file_utils import iter_records
from app.utils.svg import render_svg, write_svg

logger = logging.getLogger("app.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_CLASS = 3


def _load(text: str) -> Dissection:
    d = place_elements(parse_record(text))
    require_tiling(d)
    return d


def _code_text(d: Dissection, fmt: str) -> str:
    if fmt == "bouwkamp":
        return format_record(emit_bouwkampcode(d))
    return tablecode_of(d).text()


def _datum(args: argparse.Namespace, e: PlanarEmbedding) -> int:
    return 0 if args.datum == "first" else e.n - 1


def _embeddings(args: argparse.Namespace) -> Iterator[Tuple[str, PlanarEmbedding]]:
    if args.rotation:
        yield "rotation", parse_rotation_text(args.rotation)
    for path in args.inputs:
        for index, e in enumerate(read_planar_code(path)):
            yield f"{path}#{index + 1}", e


def cmd_solve(args: argparse.Namespace) -> int:
    graphs = 0
    try:
        for name, e in _embeddings(args):
            graphs += 1
            solver = NetworkSolver(e, datum=_datum(args, e))
            report = solver.extract()
            print(f"{name}: n={e.n} m={e.m} complexity={solver.det}")
            for row, d in report.dissections:
                canonical = canonicalize(d)
                c = classify(d)
                print(f"  branch {row + 1}: {canonical.tablecode.text()}  {c.flags}")
            if report.crossed_rows:
                print(f"  crossed: {' '.join(str(i + 1) for i in report.crossed_rows)}")
            if report.equal_potential_rows:
                print(f"  equal potentials: {' '.join(str(i + 1) for i in report.equal_potential_rows)}")
    except (GraphFormatError, NetworkError, OSError) as e:
        logger.error(f"solve: {e}")
        return EXIT_INPUT
    logger.info(f"Solved {graphs} graphs")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    output = Path(args.output) if args.output else (
        Path(settings.CATALOG_DIR) / (f"order-{args.order}.txt" if args.order else "catalog.txt")
    )
    class_filter = ClassFilter(
        min_degree=args.min_degree,
        connectivity=Connectivity(args.filter),
        edge_count=None,
        exclude_separated_multi_edges=not args.keep_separated,
    )
    enumerator = Enumerator(
        output,
        order=args.order,
        class_filter=class_filter,
        jobs=args.jobs or settings.JOBS,
        check_order=not args.no_check,
        datum=args.datum,
        resume=args.resume,
        progress=not args.quiet,
    )
    try:
        stats = enumerator.run([Path(p) for p in args.inputs])
    except ClassMismatch as e:
        logger.error(f"enumerate: {e}")
        return EXIT_CLASS
    except (GraphFormatError, CatalogError, OSError) as e:
        logger.error(f"enumerate: {e}")
        return EXIT_INPUT
    for key, value in stats.model_dump().items():
        print(f"{key}={value:.3f}" if isinstance(value, float) else f"{key}={value}")
    return EXIT_OK


def _check_record(text: str, strict: bool) -> Tuple[List[str], List[str], Optional[CatalogEntry]]:
    """Failures, warnings and the recomputed catalog entry of one record."""
    failures: List[str] = []
    warnings: List[str] = []
    try:
        code = parse_record(text)
        d = place_elements(code)
    except CodeError as e:
        return [e.message], warnings, None

    report = validate_tiling(d)
    if not report.ok:
        return [v.message for v in report.violations], warnings, None

    declared = code.extended
    for name in ("order", "width", "height"):
        value = getattr(declared, name)
        if value is not None and value != getattr(d, name):
            failures.append(f"{name} is {getattr(d, name)}, declared {value}")

    classification = classify(d)
    catalogued = declared.id is not None or declared.type_code is not None
    if catalogued and (classification.perfection != Perfection.PERFECT or not d.is_square):
        failures.append(f"declared a perfect squared square but is {classification.perfection.value} "
                        f"{d.width}x{d.height}")
    if classification.perfection == Perfection.PERFECT and d.is_square:
        failures.extend(gambini_violations(d))

    try:
        canonical = canonicalize(d)
    except ResourceLimit as e:
        return failures + [e.message], warnings, None
    if declared.isomer_count is not None and declared.isomer_count != canonical.isomer_count:
        failures.append(f"isomers is {canonical.isomer_count}, declared {declared.isomer_count}")
    if declared.type_code is not None and declared.type_code != classification.type_code:
        warnings.append(f"type is {classification.type_code}, declared {declared.type_code}")
    if tablecode_of(d) != canonical.tablecode:
        message = f"not canonical; canonical tablecode is {canonical.tablecode.text()}"
        (failures if strict else warnings).append(message)

    entry = CatalogEntry(
        tablecode=canonical.tablecode,
        id=declared.id,
        isomer_count=canonical.isomer_count,
        classification=classify(canonical.dissection),
    )
    return failures, warnings, entry


def cmd_validate(args: argparse.Namespace) -> int:
    failed = 0
    checked = 0
    catalog = Catalog()
    located = {}
    try:
        for path in args.inputs:
            for number, text in iter_records(path):
                checked += 1
                where = f"{path}:{number}"
                failures, warnings, entry = _check_record(text, args.strict)
                for message in warnings:
                    logger.warning(f"{where}: {message}")
                if failures:
                    failed += 1
                    print(f"{where}: FAIL {'; '.join(failures)}")
                else:
                    print(f"{where}: ok")
                if entry is not None and catalog.add(entry):
                    located[entry.key] = where
    except OSError as e:
        logger.error(f"validate: {e}")
        return EXIT_INPUT

    for entry, legacy in catalog.assign_ids():
        rule = catalog.get(entry.key).id
        logger.warning(f"{located[entry.key]}: id is {rule} by tablecode order, declared {legacy}")
    print(f"{checked} records, {checked - failed} passed, {failed} failed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_canon(args: argparse.Namespace) -> int:
    try:
        canonical = canonicalize(_load(" ".join(args.code)))
    except (CodeError, InvalidTiling, ResourceLimit) as e:
        logger.error(f"canon: {e}")
        return EXIT_INPUT
    print(_code_text(canonical.dissection, args.format))
    return EXIT_OK


def cmd_isomers(args: argparse.Namespace) -> int:
    try:
        isomers = enumerate_isomers(_load(" ".join(args.code)))
    except (CodeError, InvalidTiling, ResourceLimit) as e:
        logger.error(f"isomers: {e}")
        return EXIT_INPUT
    for d in isomers:
        print(_code_text(d, args.format))
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    try:
        d = _load(" ".join(args.code))
    except (CodeError, InvalidTiling) as e:
        logger.error(f"render: {e}")
        return EXIT_INPUT
    options = dict(scale=args.svg_scale, stroke=args.stroke, font_size=args.font_size)
    if args.output:
        write_svg(d, args.output, **options)
    else:
        sys.stdout.write(render_svg(d, **options))
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    catalog = Catalog()
    try:
        for path in args.inputs:
            catalog.merge(Catalog.read(path))
    except (CatalogError, OSError) as e:
        logger.error(f"stats: {e}")
        return EXIT_INPUT

    rows = catalog.stats()
    if args.machine:
        for row in rows:
            types = ",".join(f"{k}:{v}" for k, v in sorted(row.types.items()))
            print(
                f"order={row.order} entries={row.entries} isomers={row.isomers} "
                f"compound={row.compound} simple={row.simple} types={types}"
            )
        return EXIT_OK

    header = ("order", "entries", "isomers", "compound", "simple", "types")
    table = [header] + [
        (
            str(r.order), str(r.entries), str(r.isomers), str(r.compound), str(r.simple),
            " ".join(f"{k}:{v}" for k, v in sorted(r.types.items())),
        )
        for r in rows
    ]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    for row in table:
        print("  ".join(cell.rjust(w) if i < 5 else cell for i, (cell, w) in enumerate(zip(row, widths))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squarenet", description="Squared squares toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--quiet", action="store_true", help="no progress bar, warnings only")
    parser.add_argument("--datum", choices=["last", "first"], default="last",
                        help="node removed from the incidence matrix")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve c-nets and list their rectangles")
    solve.add_argument("inputs", nargs="*", help="planar_code files")
    solve.add_argument("--rotation", help='single embedding, e.g. "2,3,6;5,4,1;..."')
    solve.set_defaults(func=cmd_solve)

    enum = sub.add_parser("enumerate", help="catalog perfect squared squares from graph classes")
    enum.add_argument("inputs", nargs="+", help="planar_code files")
    enum.add_argument("--order", type=int, help="expected order; inputs must have order+1 edges")
    enum.add_argument("--filter", choices=[c.value for c in Connectivity],
                      default=Connectivity.EXACTLY_2.value)
    enum.add_argument("--min-degree", type=int, default=3)
    enum.add_argument("--jobs", type=int, default=None, help="worker processes")
    enum.add_argument("--resume", action="store_true", help="continue from <output>.progress")
    enum.add_argument("--no-check", action="store_true", help="skip the edge-count check")
    enum.add_argument("--keep-separated", action="store_true",
                      help="keep graphs with separated multi-edges")
    enum.add_argument("-o", "--output", help="catalog file")
    enum.set_defaults(func=cmd_enumerate)

    validate = sub.add_parser("validate", help="check catalog or Bouwkampcode files")
    validate.add_argument("inputs", nargs="+")
    validate.add_argument("--strict", action="store_true", help="non-canonical codes fail")
    validate.set_defaults(func=cmd_validate)

    for name, func, text in (
        ("canon", cmd_canon, "canonical code of an isomer class"),
        ("isomers", cmd_isomers, "every isomer, highest tablecode first"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("code", nargs="+")
        p.add_argument("--format", choices=["tablecode", "bouwkamp"], default="tablecode")
        p.set_defaults(func=func)

    render = sub.add_parser("render", help="draw a dissection as SVG")
    render.add_argument("code", nargs="+")
    render.add_argument("-o", "--output", help="SVG file (stdout if omitted)")
    render.add_argument("--svg-scale", type=float, default=None)
    render.add_argument("--stroke", type=float, default=None)
    render.add_argument("--font-size", type=float, default=None)
    render.set_defaults(func=cmd_render)

    stats = sub.add_parser("stats", help="per-order catalog statistics")
    stats.add_argument("inputs", nargs="+")
    stats.add_argument("--machine", action="store_true", help="key=value lines")
    stats.set_defaults(func=cmd_stats)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else (logging.WARNING if args.quiet else settings.LOG_LEVEL)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except SquaringError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_INPUT
