"""Printed values from the tables and case lists, instantiated at concrete ranks.

The values live in ``data/paper_values.json`` so that engine code never
reads them as inputs; they are only compared against.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from . import expr
from .rootsys import ClassificationError, RootSystemId, root_system

DEFAULT_RANKS = (3, 8)


@lru_cache(maxsize=None)
def load() -> dict:
    text = resources.files("ellmaps").joinpath("data/paper_values.json").read_text()
    return json.loads(text)


def substitute(template: str, **env: int) -> str:
    """Replace every ``<expr>`` in a label template by its value."""
    return re.sub(r"<([^<>]+)>", lambda m: str(expr.evaluate(m.group(1), **env)), template)


def declared() -> dict[str, dict]:
    return {d["id"]: d for d in load()["discrepancies"]}


def is_declared(key: str) -> bool:
    return key in declared()


@dataclass(frozen=True)
class TableRow:
    table: int
    key: str
    type_label: str
    system: RootSystemId
    node: int
    variety: str
    dimension: int
    index: int
    d_x: int | None
    params: dict = field(default_factory=dict, compare=False)

    @property
    def row_id(self) -> str:
        return f"{self.key}.{self.system.rank}" + (f".k{self.params['k']}" if "k" in self.params else "")


def _rank_bounds(ranks) -> tuple[int, int]:
    lo, hi = ranks
    if lo > hi:
        raise ValueError(f"empty rank range {lo}..{hi}")
    return lo, hi


def table_rows(ranks=DEFAULT_RANKS, table: int | None = None) -> list[TableRow]:
    return list(_table_rows(tuple(ranks), table))


@lru_cache(maxsize=None)
def _table_rows(ranks: tuple[int, int], table: int | None) -> tuple[TableRow, ...]:
    lo, hi = _rank_bounds(ranks)
    rows = []
    for item in load()["tables"]:
        if table is not None and item["table"] != table:
            continue
        if "n_from_rank" not in item:
            rows.append(_row(item, int(item["rank"]), {}))
            continue
        for rank in range(max(lo, item.get("rank_min", 1)), hi + 1):
            try:
                RootSystemId(item["letter"], rank)
            except ClassificationError:
                continue
            n = expr.evaluate(item["n_from_rank"], rank=rank)
            sweeps = item.get("sweep", {})
            if not sweeps:
                rows.append(_row(item, rank, {"n": n}))
                continue
            ((var, (a, b)),) = sweeps.items()
            for v in range(expr.evaluate(a, n=n), expr.evaluate(b, n=n) + 1):
                rows.append(_row(item, rank, {"n": n, var: v}))
    return tuple(rows)


def _row(item: dict, rank: int, env: dict) -> TableRow:
    ev = lambda s: expr.evaluate(s, **env)
    return TableRow(
        table=item["table"],
        key=item["key"],
        type_label=item["type"],
        system=RootSystemId(item["letter"], rank),
        node=ev(item["node"]),
        variety=substitute(item["variety"], **env),
        dimension=ev(item["dimension"]),
        index=ev(item["index"]),
        d_x=None if item["d_X"] is None else ev(item["d_X"]),
        params=env,
    )


def printed_d_x(system: RootSystemId, node: int) -> int | None:
    """Printed d(X) for a marking, if some table row describes it."""
    for row in table_rows((1, 8)):
        if row.system == system and row.node == node:
            return row.d_x
    return None


def printed_row(system: RootSystemId, node: int) -> TableRow | None:
    for row in table_rows((1, 8)):
        if row.system == system and row.node == node:
            return row
    return None


# -- fibration cases -----------------------------------------------------------

@dataclass(frozen=True)
class FibrationCase:
    case: int
    system: RootSystemId
    sigma_p: tuple[int, ...]
    sigma_q: tuple[int, ...]
    engine_sigma_p: tuple[int, ...]
    base: str
    bundles: tuple[str, ...]
    params: dict = field(default_factory=dict, compare=False)

    @property
    def corrected(self) -> bool:
        return self.sigma_p != self.engine_sigma_p


def fibration_cases(max_rank: int = 8) -> list[FibrationCase]:
    out = []
    notes = declared()
    for item in load()["fibrations"]:
        if item["letter"] in "ABCD":
            ranks = range(item.get("rank_min", 1), max_rank + 1)
        else:
            ranks = [int(item["rank"])]
        for rank in ranks:
            try:
                sid = RootSystemId(item["letter"], rank)
            except ClassificationError:
                continue
            sweeps = item.get("sweep", {})
            envs = [{"n": rank}]
            if sweeps:
                ((var, (a, b)),) = sweeps.items()
                envs = [
                    {"n": rank, var: v}
                    for v in range(expr.evaluate(a, n=rank), expr.evaluate(b, n=rank) + 1)
                ]
            for env in envs:
                out.append(_case(item, sid, env, notes))
    return out


def _case(item, sid, env, notes) -> FibrationCase:
    rs = root_system(sid)
    p = tuple(expr.evaluate(s, **env) for s in item["sigma_p"])
    q = tuple(expr.evaluate(s, **env) for s in item["sigma_q"])
    if item.get("q_via_iota"):
        q = tuple(rs.iota(i) for i in q)
    fix = notes.get(f"fibration.{item['case']}.sigma_p")
    engine_p = tuple(fix["engine_sigma_p"]) if fix else p
    return FibrationCase(
        case=item["case"],
        system=sid,
        sigma_p=p,
        sigma_q=q,
        engine_sigma_p=engine_p,
        base=substitute(item["base"], **env),
        bundles=tuple(substitute(b, **env) for b in item["bundles"]),
        params=env,
    )


def spinor_terms() -> list[dict]:
    return list(load()["spinor_terms"])


def gq_low_degree_formula() -> str:
    return load()["gq_low_degree"]
