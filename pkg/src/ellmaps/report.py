"""Report documents shared by the command-line subcommands.

A document is an ordered list of sections.  Each section holds table rows,
key-value pairs or notes.  Every value is a :class:`Cell` tagged with where
it came from, so a reader can tell computed numbers from transcribed ones.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

COMPUTED = "computed"
PAPER = "paper"
TEXT = "text"
SOURCES = (COMPUTED, PAPER, TEXT)

PASS, DECLARED, FAIL = "pass", "declared", "fail"
_RANK = {PASS: 0, DECLARED: 1, FAIL: 2}


@dataclass(frozen=True)
class Cell:
    value: int | str | bool | None
    source: str = COMPUTED

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown provenance {self.source!r}")
        if isinstance(self.value, int) and not isinstance(self.value, bool) and self.source == TEXT:
            raise ValueError("numeric cells must be tagged computed or paper")


@dataclass(frozen=True)
class Note:
    id: str
    text: str
    declared: bool

    @property
    def status(self) -> str:
        return DECLARED if self.declared else FAIL


@dataclass
class Section:
    title: str
    kind: str  # "table" | "pairs" | "notes"
    columns: list[str] = field(default_factory=list)
    rows: list[dict[str, list[Cell]]] = field(default_factory=list)
    pairs: list[tuple[str, list[Cell]]] = field(default_factory=list)
    notes: list[Note] = field(default_factory=list)


@dataclass
class ReportDocument:
    title: str
    format: str = "markdown"
    sections: list[Section] = field(default_factory=list)

    def section(self, title: str, kind: str, columns=()) -> Section:
        s = Section(title, kind, list(columns))
        self.sections.append(s)
        return s

    def all_notes(self) -> list[Note]:
        return [n for s in self.sections for n in s.notes]

    @property
    def status(self) -> str:
        worst = PASS
        for n in self.all_notes():
            if _RANK[n.status] > _RANK[worst]:
                worst = n.status
        return worst

    @property
    def exit_code(self) -> int:
        return 1 if self.status == FAIL else 0

    # -- serialisation ------------------------------------------------------

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        for s in d["sections"]:
            s["pairs"] = [{"key": k, "cells": v} for k, v in s["pairs"]]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> ReportDocument:
        cells = lambda xs: [Cell(**c) for c in xs]
        sections = [
            Section(
                title=s["title"],
                kind=s["kind"],
                columns=list(s["columns"]),
                rows=[{k: cells(v) for k, v in r.items()} for r in s["rows"]],
                pairs=[(p["key"], cells(p["cells"])) for p in s["pairs"]],
                notes=[Note(**n) for n in s["notes"]],
            )
            for s in d["sections"]
        ]
        return cls(d["title"], d["format"], sections)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))

    def to_markdown(self) -> str:
        out = [f"# {self.title}", ""]
        for s in self.sections:
            out += [f"## {s.title}", ""]
            if s.kind == "table":
                out.append("| " + " | ".join(s.columns) + " |")
                out.append("|" + "---|" * len(s.columns))
                for r in s.rows:
                    out.append("| " + " | ".join(render(r.get(c, [])) for c in s.columns) + " |")
            elif s.kind == "pairs":
                out += [f"- **{k}**: {render(v)}" for k, v in s.pairs]
            for n in s.notes:
                tag = "declared discrepancy" if n.declared else "MISMATCH"
                out.append(f"- {tag} `{n.id}`: {n.text}")
            out.append("")
        out.append(f"Status: {self.status}")
        return "\n".join(out) + "\n"

    def render(self) -> str:
        return self.to_json() if self.format == "json" else self.to_markdown()


def _show(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render(cells: list[Cell]) -> str:
    """Markdown text for a cell list; a differing paper value is shown in brackets."""
    comp = [c for c in cells if c.source != PAPER]
    paper = [c for c in cells if c.source == PAPER]
    if not comp:
        return " ".join(_show(c.value) for c in paper)
    text = " ".join(_show(c.value) for c in comp)
    for p in paper:
        if p.value != comp[0].value:
            text += f" [paper: {_show(p.value)}]"
    return text


def compared(computed, printed) -> list[Cell]:
    cells = [Cell(computed, COMPUTED)]
    if printed is not None:
        cells.append(Cell(printed, PAPER))
    return cells
