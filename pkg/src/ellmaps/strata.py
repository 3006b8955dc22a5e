"""Stratum dimension counts and the irreducibility degree d(X).

Each catalogued space has a family of strata H_a indexed by the codimension
a of the linear span of the curve's image in the base Y.  A stratum with
a > 0 is harmless at degree d when its preimage has dimension strictly below
the expected c1(X) * d.  d(X) is the least degree from which every such
stratum is harmless.

Two evaluation paths exist: the expression strings of ``data/strata.catalog``
and the term-by-term functions in this module, which rebuild each count from
the base stratum, the tower layer degrees and the h^1 rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from . import bsq3, expr
from .curvecohom import cone_bound, h0_genus1, h1_wedge_twist
from .fibration import FibrationTower, TowerRequest, tower_layers
from .oracle import printed_d_x
from .parabolic import SpaceDescriptor, descriptor, variety_family
from .rootsys import RootSystemId, root_system


class OutOfScope(ValueError):
    pass


class UncataloguedSpace(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


class DomainError(ValueError):
    pass


# -- catalog text ---------------------------------------------------------------

@dataclass(frozen=True)
class StratumFormula:
    label: str
    a_min: str
    a_max: str
    dim_expr: str

    def a_range(self, env: dict) -> range:
        return range(expr.evaluate(self.a_min, **env), expr.evaluate(self.a_max, **env) + 1)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[str, ...]
    strata: tuple[StratumFormula, ...]
    expected: str = "c1*d"


def parse_catalog(text: str) -> dict[str, FamilySpec]:
    fams: dict[str, FamilySpec] = {}
    cur = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            name, *params = line[1:].split()
            cur = {"name": name, "params": tuple(params), "strata": [], "expected": "c1*d"}
            fams[name] = cur
            continue
        if cur is None:
            raise ValueError(f"line {lineno}: record outside a family block")
        if line.startswith("expected") and "=" in line and "|" not in line:
            cur["expected"] = line.split("=", 1)[1].strip()
            expr.parse(cur["expected"])
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 4:
            raise ValueError(f"line {lineno}: expected 4 fields, got {len(parts)}")
        for e in parts[1:]:
            expr.parse(e)
        cur["strata"].append(StratumFormula(*parts))
    return {
        k: FamilySpec(v["name"], v["params"], tuple(v["strata"]), v["expected"])
        for k, v in fams.items()
    }


def dump_catalog(fams: dict[str, FamilySpec]) -> str:
    out = []
    for f in fams.values():
        out.append(" ".join(["@", f.name, *f.params]))
        if f.expected != "c1*d":
            out.append(f"expected = {f.expected}")
        for s in f.strata:
            out.append(f"{s.label} | {s.a_min} | {s.a_max} | {s.dim_expr}")
        out.append("")
    return "\n".join(out)


@lru_cache(maxsize=None)
def default_catalog() -> dict[str, FamilySpec]:
    text = resources.files("ellmaps").joinpath("data/strata.catalog").read_text()
    return parse_catalog(text)


# -- spaces ---------------------------------------------------------------------

@dataclass(frozen=True)
class SpaceCatalogEntry:
    space: SpaceDescriptor
    family: str
    params: dict = field(compare=False)
    strata: tuple[StratumFormula, ...] = ()
    expected: str = "c1*d"
    paper_bound: int | None = None
    delegate: str | None = None

    @property
    def env(self) -> dict:
        return {"c1": self.space.index, **self.params}

    def expected_dim(self, d: int) -> int:
        return expr.evaluate(self.expected, d=d, **self.env)


def classify(system: RootSystemId | str, node: int) -> tuple[str, dict]:
    """Family name and parameters of the catalogue entry for G/P."""
    sid = RootSystemId.parse(system) if isinstance(system, str) else system
    L, R = sid.letter, sid.rank
    if L == "G":
        raise OutOfScope("the theorem assumes G is not of type A or G2 for adjoint varieties")
    if not 1 <= node <= R:
        raise UncataloguedSpace(f"node {node} out of range for {sid}")
    fam = variety_family(sid, node)
    if L == "A":
        if node in (1, R):
            return "projective", {"n": R + 1}
        return "grassmannian", {"n": R + 1, "p": node}
    if L == "D" and node in (R - 1, R):
        return "spinor_grassmannian", {"n": R}
    if L in "BD" and node == 2 and R >= 3:
        return "bd_adjoint", {"N": 2 * R + 1 if L == "B" else 2 * R}
    if fam is not None:
        kind, m = fam
        if kind == "P":
            return "projective", {"n": m + 1}
        if m == 3:
            return "q3", {}
        return "quadric", {"m": m, "r": m // 2}
    table = {
        ("E", 6, 1): "cayley",
        ("E", 6, 6): "cayley",
        ("E", 6, 2): "e6_adjoint",
        ("E", 7, 7): "freudenthal",
        ("E", 7, 1): "e7_adjoint",
        ("E", 8, 8): "e8_adjoint",
        ("F", 4, 1): "f4_adjoint",
    }
    try:
        return table[(L, R, node)], {}
    except KeyError:
        raise UncataloguedSpace(f"{sid}/P{node} is neither minuscule nor adjoint") from None


def catalog_entry(
    system: RootSystemId | str, node: int, variant: str | None = None, catalog=None
) -> SpaceCatalogEntry:
    """Catalogue entry for G/P; ``variant="printed"`` selects the verbatim F4 count."""
    sid = RootSystemId.parse(system) if isinstance(system, str) else system
    family, params = classify(sid, node)
    if variant == "printed":
        if family != "f4_adjoint":
            raise UncataloguedSpace(f"no printed variant for {family}")
        family = "f4_adjoint_printed"
    space = descriptor(sid, node)
    bound = printed_d_x(sid, node)
    if family == "q3":
        return SpaceCatalogEntry(space, family, params, paper_bound=bound, delegate="bsq3")
    spec = (catalog or default_catalog())[family]
    missing = set(spec.params) - set(params)
    if missing:
        raise ValueError(f"family {family} needs parameters {sorted(missing)}")
    return SpaceCatalogEntry(
        space=space,
        family=family,
        params=params,
        strata=spec.strata,
        expected=spec.expected,
        paper_bound=bound,
    )


# -- evaluation -----------------------------------------------------------------

@dataclass(frozen=True)
class StratumRow:
    label: str
    a: int
    dim: int
    expected: int

    @property
    def slack(self) -> int:
        return self.expected - self.dim


@dataclass(frozen=True)
class StratumReport:
    space: SpaceDescriptor
    degree: int
    rows: tuple[StratumRow, ...]

    def harmful(self) -> list[StratumRow]:
        return [r for r in self.rows if r.a > 0 and r.slack <= 0]

    @property
    def passes(self) -> bool:
        return not self.harmful()


def stratum_dims(entry: SpaceCatalogEntry, d: int) -> StratumReport:
    if d < 2:
        raise DomainError("degree must be at least 2")
    if entry.delegate:
        raise DomainError(f"{entry.space.label} is handled by {entry.delegate}")
    env = entry.env
    expected = entry.expected_dim(d)
    rows = []
    for s in entry.strata:
        for a in s.a_range(env):
            rows.append(StratumRow(s.label, a, expr.evaluate(s.dim_expr, d=d, a=a, **env), expected))
    return StratumReport(entry.space, d, tuple(rows))


def d_max(entry: SpaceCatalogEntry) -> int:
    return 4 * entry.space.index + 20


@dataclass(frozen=True)
class SearchResult:
    degree: int
    d_max: int
    trace: tuple[tuple[int, bool], ...]
    certified: bool
    source: str = "strata"


def monotone_certificate(entry: SpaceCatalogEntry) -> bool:
    """Every a > 0 slack is affine in d with nonnegative slope and positive at D_max."""
    top = d_max(entry)
    if expr.degree_in(entry.expected) > 1:
        return False
    for s in entry.strata:
        if expr.degree_in(s.dim_expr) > 1:
            return False
    hi, hi1 = stratum_dims(entry, top), stratum_dims(entry, top + 1)
    for r0, r1 in zip(hi.rows, hi1.rows):
        if r0.a > 0 and (r1.slack < r0.slack or r0.slack <= 0):
            return False
    return True


def search(entry: SpaceCatalogEntry) -> SearchResult:
    if entry.delegate == "bsq3":
        limit = 50
        d = bsq3.q3_min_degree(limit)
        trace = tuple(
            (k, bsq3.low_degree_irreducible(k) if k <= 3 else bsq3.certificate(k).passes)
            for k in range(2, limit + 1)
        )
        return SearchResult(d, limit, trace, certified=True, source="bsq3")
    if not entry.strata:
        raise ValueError("empty strata catalogue")
    top = d_max(entry)
    trace = tuple((d, stratum_dims(entry, d).passes) for d in range(2, top + 1))
    if not trace[-1][1]:
        raise SearchExhausted(f"{entry.space.label}: strata still harmful at D_max = {top}")
    best = top
    for d, ok in reversed(trace):
        if not ok:
            break
        best = d
    return SearchResult(best, top, trace, certified=monotone_certificate(entry))


def min_irreducible_degree(entry: SpaceCatalogEntry) -> int:
    return search(entry).degree


def gq_low_degree_dim(n: int, d: int) -> int:
    if not 2 <= d <= n:
        raise DomainError(f"need 2 <= d <= n, got d={d}, n={n}")
    return 2 * (n - 1) * d + (n - d) * (n - d - 1) // 2


def kernel_dim_lower_bound(n: int, d: int) -> int:
    if d < 0:
        raise DomainError("d must be nonnegative")
    return max(0, n - d)


# -- term-by-term path ------------------------------------------------------------

def _grass(k: int, n: int) -> int:
    return k * (n - k)


def _ograss(k: int, n: int) -> int:
    """Isotropic k-planes for a nondegenerate form on C^n."""
    return k * (n - k) - k * (k + 1) // 2


def _maps_to_projective(k: int, d: int) -> int:
    return (k + 1) * d


def tower_request(system: RootSystemId, node: int) -> TowerRequest | None:
    """The tower used by the stratum count of G/P; ``None`` for projective spaces."""
    L, R = system.letter, system.rank
    family, _ = classify(system, node)
    if family == "projective":
        return None
    if L == "A":
        return TowerRequest.of(system, node, _iota(system, node - 1))
    if L in "BD" and node == 1:
        return TowerRequest.of(system, 1, R)
    if L == "D" and node in (R - 1, R):
        other = R - 1 if node == R else R
        return TowerRequest.of(system, node, _iota(system, other))
    if L in "BD" and node == 2:
        return TowerRequest.of(system, 2, 1)
    if (L, R, node) == ("E", 6, 2):
        return TowerRequest(system, {2}, {1, 6})
    q_node = {("E", 6, 1): 1, ("E", 6, 6): 6, ("E", 7, 7): 2, ("E", 7, 1): 6,
              ("E", 8, 8): 1, ("F", 4, 1): 4}
    return TowerRequest.of(system, node, q_node[(L, R, node)])


@lru_cache(maxsize=None)
def tower(system: RootSystemId, node: int) -> FibrationTower | None:
    req = tower_request(system, node)
    return None if req is None else tower_layers(req)


def tower_degrees(system: RootSystemId, node: int) -> tuple[int, ...]:
    """Layer degrees of the tower used by the stratum count of G/P."""
    t = tower(system, node)
    return () if t is None else tuple(l.line_degree for l in t.layers)


def _iota(system, i):
    return root_system(system).iota(i)


def _adjoint_template(m: int, e: int, s: int, iso: bool, d: int, a: int) -> int:
    """Adjoint tower over Q_m with layers (O(1))^perp (degree 1) and a spinor layer of degree e."""
    span = m + 1 - a  # projective dimension of the span in P^{m+1}
    fibre = h0_genus1((1 + e) * d, h1_wedge_twist(m + 1, m, a))
    if not iso:
        return _grass(m + 2 - a, m + 2) + m * d - a * d + fibre
    return _ograss(span + 1, m + 2) + _maps_to_projective(span, d) + fibre + 2 ** max(0, a - s)


def hand_dim(entry: SpaceCatalogEntry, label: str, d: int, a: int) -> int:
    fam, p = entry.family, entry.params
    sid, node = entry.space.marking.system, entry.space.marking.node
    if label == "generic":
        return entry.expected_dim(d)
    if fam == "grassmannian":
        n, k = p["n"], p["p"]
        r = n - k
        (e,) = tower_degrees(sid, node)
        base = _grass(r + 1 - a, r + 1) + _maps_to_projective(r - a, d)
        return base + h0_genus1(e * d, (k - 1) * h1_wedge_twist(r, r - 1, a))
    if fam == "quadric":
        m, r = p["m"], p["r"]
        base = _grass(2, r + 1) + _maps_to_projective(1, d)
        return base + h0_genus1(sum(tower_degrees(sid, node)) * d, h1_wedge_twist(r, 1, a))
    if fam == "spinor_grassmannian":
        n = p["n"]
        (e,) = tower_degrees(sid, node)
        base = _grass(n - a, n) + _maps_to_projective(n - 1 - a, d)
        return base + h0_genus1(e * d, h1_wedge_twist(n - 1, n - 3, a))
    if fam == "bd_adjoint":
        m = p["N"] - 4
        (e,) = tower_degrees(sid, node)
        span = m + 1 - a
        cone = cone_bound(0, span + 1, d)
        return _grass(span + 1, m + 2) + cone + h0_genus1(e * d, h1_wedge_twist(m + 1, m, a))
    if fam == "cayley":
        # as printed: c1*d - a*d for the maps and the spinor layer together
        return 12 * d - a * d + _ograss(10 - a, 10) + 2 ** max(0, a - 6)
    if fam == "freudenthal":
        e1, e2 = tower_degrees(sid, node)
        base = _grass(7 - a, 7) + _maps_to_projective(6 - a, d)
        h1 = h1_wedge_twist(6, 5, a) + h1_wedge_twist(6, 2, a)
        return base + h0_genus1((e1 + e2) * d, h1)
    templ = {
        "e6_adjoint": (6, None, 4),
        "e7_adjoint": (8, None, 6),
        "e8_adjoint": (12, None, 8),
        "f4_adjoint": (5, None, 5 + 1 - 5 // 2),
        "f4_adjoint_printed": (5, 5, 5),
    }
    if fam in templ:
        m, e, s = templ[fam]
        if e is None:
            degs = tower_degrees(sid, node)
            e = sum(degs) - 1  # the (O(1))^perp layer has degree 1
        return _adjoint_template(m, e, s, label.startswith("isotropic"), d, a)
    if fam == "projective":
        return p["n"] * d
    raise ValueError(f"no term-by-term path for {fam}")


def catalogued_markings() -> list[tuple[RootSystemId, int]]:
    out = []
    for letter, ranks in (("A", range(1, 9)), ("B", range(2, 9)), ("C", range(2, 9)),
                          ("D", range(4, 9)), ("E", range(6, 9)), ("F", [4])):
        for R in ranks:
            sid = RootSystemId(letter, R)
            for node in range(1, R + 1):
                try:
                    classify(sid, node)
                except UncataloguedSpace:
                    continue
                out.append((sid, node))
    return out
