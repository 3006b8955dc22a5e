"""Command-line front end: ``tables``, ``analyze`` and ``bs-q3``.

Exit status: 0 when every check passes or only declared discrepancies occur,
1 on an undeclared mismatch or failed certificate, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from itertools import groupby

from . import bsq3, expr, oracle
from .curvecohom import spinor_excess
from .fibration import FibrationTower, same_bundle
from .parabolic import descriptor
from .report import COMPUTED, PAPER, TEXT, Cell, Note, ReportDocument, compared
from .rootsys import ClassificationError, RootSystemId
from .strata import (
    DomainError,
    OutOfScope,
    SearchExhausted,
    UncataloguedSpace,
    catalog_entry,
    search,
    stratum_dims,
    tower,
)

TABLE_COLUMNS = ["Type", "Variety", "Dimension", "Index", "d(X)"]
USAGE_ERRORS = (OutOfScope, UncataloguedSpace, ClassificationError, DomainError)

# Space-level remarks that hold regardless of the numbers compared.
_SPACE_NOTES = {
    ("E", 6, 1): ["strata.E6/P1.geometric"],
    ("E", 6, 6): ["strata.E6/P1.geometric"],
    ("F", 4, 1): ["strata.F4.prose"],
}


class UsageError(ValueError):
    pass


def _note(key: str, fallback: str) -> Note:
    known = oracle.declared().get(key)
    return Note(key, known["note"] if known else fallback, declared=known is not None)


def _computed_d_x(sid: RootSystemId, node: int, variant: str | None = None) -> int | None:
    try:
        return search(catalog_entry(sid, node, variant)).degree
    except OutOfScope:
        return None


# -- tables -----------------------------------------------------------------------

def cmd_tables(ranks=oracle.DEFAULT_RANKS, fmt: str = "markdown") -> ReportDocument:
    doc = ReportDocument("Homogeneous spaces: dimension, index and d(X)", fmt)
    titles = {1: "Minuscule spaces and odd quadrics", 2: "Adjoint varieties"}
    for table, title in titles.items():
        sec = doc.section(title, "table", TABLE_COLUMNS)
        for row in oracle.table_rows(ranks, table=table):
            space = descriptor(row.system, row.node)
            dx = _computed_d_x(row.system, row.node)
            sec.rows.append({
                "Type": [Cell(str(row.system), TEXT)],
                "Variety": [Cell(space.label, TEXT), Cell(row.variety, PAPER)],
                "Dimension": compared(space.dimension, row.dimension),
                "Index": compared(space.index, row.index),
                "d(X)": compared(dx, row.d_x),
            })
            if row.variety not in space.names():
                sec.notes.append(_note(f"table.{row.key}.label",
                                       f"{row.row_id}: computed {space.label}, printed {row.variety}"))
            for name, got, want in (("dim", space.dimension, row.dimension),
                                    ("index", space.index, row.index),
                                    ("dX", dx, row.d_x)):
                if got != want:
                    sec.notes.append(_note(f"{name}.{row.row_id}",
                                           f"{row.row_id}: computed {name} {got}, printed {want}"))
            for key in _SPACE_NOTES.get((row.system.letter, row.system.rank, row.node), []):
                sec.notes.append(_note(key, key))
    return doc


# -- analyze ------------------------------------------------------------------------

def resolve_type(text: str, rank: int | None) -> RootSystemId:
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d*)\s*", text)
    if not m:
        raise UsageError(f"cannot read type {text!r}")
    letter, digits = m.group(1).upper(), m.group(2)
    if digits:
        if rank is not None and rank != int(digits):
            raise UsageError(f"--type {text} conflicts with --rank {rank}")
        return RootSystemId(letter, int(digits))
    if rank is None:
        rank = {"F": 4, "G": 2}.get(letter)
    if rank is None:
        raise UsageError(f"type {letter} needs --rank")
    return RootSystemId(letter, rank)


def _tower_section(doc: ReportDocument, tw: FibrationTower | None) -> None:
    sec = doc.section("Fibration tower", "pairs")
    if tw is None:
        sec.pairs.append(("Tower", [Cell("none: the space is projective", TEXT)]))
        return
    req = tw.request
    case = next(
        (c for c in oracle.fibration_cases()
         if c.system == req.system and c.engine_sigma_p == (req.p,) and set(c.sigma_q) == set(req.sigma_q)),
        None,
    )
    sec.pairs.append(("Sigma(P), Sigma(Q)", [Cell(f"{{{req.p}}}, {sorted(req.sigma_q)}", TEXT)]))
    sec.pairs.append(("Tower", [Cell(tw.summary(), TEXT)]))
    base = [Cell(tw.base.label, TEXT)]
    if case is not None:
        base.append(Cell(case.base, PAPER))
        if case.base not in tw.base.names():
            sec.notes.append(_note(f"fibration.{case.case}.base",
                                   f"computed base {tw.base.label}, printed {case.base}"))
        if case.corrected:
            sec.notes.append(_note(f"fibration.{case.case}.sigma_p", "printed Sigma(P) corrected"))
    sec.pairs.append(("Base Y", base))
    sec.pairs.append(("dim X = dim Y + sum of ranks", [Cell(tw.dimension_identity(), COMPUTED)]))
    sec.pairs.append(("index X = index Y + sum of degrees", [Cell(tw.index_identity(), COMPUTED)]))
    unused = list(case.bundles) if case is not None else []
    for layer, name in zip(tw.layers, tw.catalog_ids):
        cells = [Cell(name, TEXT)]
        if case is not None:
            # printed layer order is not graded, so pair names rather than positions
            hit = next((b for b in unused if same_bundle(tw.base, name, b)), None)
            if hit is None:
                sec.notes.append(_note(f"fibration.{case.case}.layer{layer.level}",
                                       f"computed {name} has no printed counterpart in {list(case.bundles)}"))
            else:
                unused.remove(hit)
                cells.append(Cell(hit, PAPER))
        sec.pairs.append((f"Layer {layer.level}", cells))
        sec.pairs.append((f"Layer {layer.level} rank", [Cell(layer.rank)]))
        sec.pairs.append((f"Layer {layer.level} degree", [Cell(layer.line_degree)]))


def _trace_runs(trace) -> list[tuple[int, int, bool]]:
    runs = []
    for ok, grp in groupby(trace, key=lambda t: t[1]):
        ds = [d for d, _ in grp]
        runs.append((ds[0], ds[-1], ok))
    return runs


def _search_section(doc, title, entry, printed) -> int:
    res = search(entry)
    sec = doc.section(title, "pairs")
    sec.pairs.append(("d(X)", compared(res.degree, printed)))
    sec.pairs.append(("Search bound D_max", [Cell(res.d_max)]))
    sec.pairs.append(("Monotone certificate", [Cell(res.certified)]))
    sec.pairs.append(("Source", [Cell(res.source, TEXT)]))
    for lo, hi, ok in _trace_runs(res.trace):
        sec.pairs.append((f"Degrees {lo}..{hi}", [Cell("all strata harmless" if ok else "some stratum harmful", TEXT)]))
    return res.degree


def _strata_section(doc, entry, degree: int) -> None:
    if entry.delegate == "bsq3":
        sec = doc.section(f"Bott-Samelson certificate at degree {degree}", "pairs")
        if degree <= 3:
            sec.pairs.append(("Line family dimension 2d+3", [Cell(bsq3.line_family_dim(degree))]))
            sec.pairs.append(("Expected 3d", [Cell(3 * degree)]))
            sec.pairs.append(("Irreducible", [Cell(bsq3.low_degree_irreducible(degree))]))
            return
        cert = bsq3.certificate(degree)
        sec.pairs.append(("Classes", [Cell(cert.class_count)]))
        sec.pairs.append(("Max dim", [Cell(cert.max_dim)]))
        sec.pairs.append(("Maximizer", [Cell(", ".join(map(str, cert.maximizers)), TEXT)]))
        sec.pairs.append(("Certificate", [Cell(cert.passes)]))
        return
    rep = stratum_dims(entry, degree)
    cols = ["Stratum", "a", "Dimension", "Expected", "Slack", "Harmless"]
    sec = doc.section(f"Strata at degree {degree}", "table", cols)
    for r in rep.rows:
        sec.rows.append({
            "Stratum": [Cell(r.label, TEXT)],
            "a": [Cell(r.a)],
            "Dimension": [Cell(r.dim)],
            "Expected": [Cell(r.expected)],
            "Slack": [Cell(r.slack)],
            "Harmless": [Cell(True if r.a == 0 else r.slack > 0)],
        })


def _spinor_notes(doc, label: str) -> None:
    terms = [t for t in oracle.spinor_terms() if t["space"] == label]
    if not terms:
        return
    sec = doc.section("Spinor excess terms", "table", ["a", "Excess"])
    for t in terms:
        bad = False
        for a in range(t["a_min"], t["a_max"] + 1):
            got = spinor_excess(t["quadric"], a, t["bundle"])
            want = expr.evaluate(t["printed"], a=a)
            bad |= got != want
            sec.rows.append({"a": [Cell(a)], "Excess": compared(got, want)})
        if bad:
            sec.notes.append(_note(f"spinor.{label}", f"{label}: spinor excess differs from printed term"))


def cmd_analyze(system: RootSystemId, node: int, degree: int | None = None,
                fmt: str = "markdown") -> ReportDocument:
    entry = catalog_entry(system, node)
    space = entry.space
    row = oracle.printed_row(system, node)
    doc = ReportDocument(f"Analysis of {space.label}", fmt)

    sec = doc.section("Space", "pairs")
    sec.pairs.append(("System", [Cell(str(system), TEXT)]))
    sec.pairs.append(("Marked node", [Cell(node)]))
    sec.pairs.append(("Variety", [Cell(space.label, TEXT)] + ([Cell(row.variety, PAPER)] if row else [])))
    sec.pairs.append(("Dimension", compared(space.dimension, row.dimension if row else None)))
    sec.pairs.append(("Index", compared(space.index, row.index if row else None)))
    sec.pairs.append(("Catalogue family", [Cell(entry.family, TEXT)]))
    if row is not None:
        if row.variety not in space.names():
            sec.notes.append(_note(f"table.{row.key}.label", f"computed {space.label}, printed {row.variety}"))
        for name, got, want in (("dim", space.dimension, row.dimension), ("index", space.index, row.index)):
            if got != want:
                sec.notes.append(_note(f"{name}.{row.row_id}", f"computed {got}, printed {want}"))

    _tower_section(doc, tower(system, node))

    printed = row.d_x if row else None
    dx = _search_section(doc, "d(X) search", entry, printed)
    if row is not None and dx != printed:
        doc.sections[-1].notes.append(_note(f"dX.{row.row_id}", f"computed d(X) = {dx}, printed {printed}"))
    if entry.family == "f4_adjoint":
        _search_section(doc, "d(X) search, printed-count variant", catalog_entry(system, node, "printed"), printed)

    if degree is None:
        degree = dx
    if degree < 2:
        raise DomainError("degree must be at least 2")
    _strata_section(doc, entry, degree)
    _spinor_notes(doc, space.label)

    keys = _SPACE_NOTES.get((system.letter, system.rank, node), [])
    if keys:
        rem = doc.section("Remarks", "notes")
        rem.notes.extend(_note(k, k) for k in keys)
    return doc


# -- bs-q3 --------------------------------------------------------------------------

def cmd_bsq3(max_degree: int = 50, fmt: str = "markdown") -> ReportDocument:
    if max_degree < 2:
        raise DomainError("max degree must be at least 2")
    doc = ReportDocument("Bott-Samelson enumeration over Q_3", fmt)
    cols = ["d", "Classes", "Max dim", "Maximizer", "3d-1", "2d+3", "3d", "2d+3 < 3d", "Certificate"]
    sec = doc.section("Conditions (*)_d", "table", cols)
    for d in range(2, max_degree + 1):
        cert = bsq3.certificate(d)
        ok = cert.unique_max and cert.max_dim == 3 * d - 1 and (cert.line_dim < 3 * d) == (d >= 4)
        sec.rows.append({
            "d": [Cell(d)],
            "Classes": [Cell(cert.class_count)],
            "Max dim": [Cell(cert.max_dim)],
            "Maximizer": [Cell(", ".join(map(str, cert.maximizers)), TEXT)],
            "3d-1": [Cell(3 * d - 1)],
            "2d+3": [Cell(cert.line_dim)],
            "3d": [Cell(3 * d)],
            "2d+3 < 3d": [Cell(cert.line_dim < 3 * d)],
            "Certificate": [Cell(ok)],
        })
        if not ok:
            sec.notes.append(Note(f"bsq3.{d}", f"certificate fails at d = {d}", declared=False))
    return doc


# -- entry point --------------------------------------------------------------------

def parse_ranks(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ellmaps", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "markdown"), default="markdown")

    t = sub.add_parser("tables", parents=[fmt], help="reproduce both tables")
    t.add_argument("--ranks", type=parse_ranks, default=oracle.DEFAULT_RANKS,
                   help="rank range A..B for parameterised families (default 3..8)")

    a = sub.add_parser("analyze", parents=[fmt], help="tower, strata and d(X) for one space")
    a.add_argument("--type", required=True, help="root system, e.g. E6, or a letter with --rank")
    a.add_argument("--rank", type=int)
    a.add_argument("--node", type=int, required=True)
    a.add_argument("--degree", type=int, help="degree for the stratum table (default d(X))")

    b = sub.add_parser("bs-q3", parents=[fmt], help="Bott-Samelson certificates over Q_3")
    b.add_argument("--max-degree", type=int, default=50)
    return parser


def run(args: argparse.Namespace) -> ReportDocument:
    if args.command == "tables":
        return cmd_tables(args.ranks, args.format)
    if args.command == "analyze":
        sid = resolve_type(args.type, args.rank)
        return cmd_analyze(sid, args.node, args.degree, args.format)
    return cmd_bsq3(args.max_degree, args.format)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = run(args)
    except (UsageError, *USAGE_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(doc.render())
    if doc.format == "json":
        sys.stdout.write("\n")
    return doc.exit_code


if __name__ == "__main__":
    sys.exit(main())
