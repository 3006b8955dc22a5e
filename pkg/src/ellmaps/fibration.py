"""Affine-bundle towers over the big cell of G/P.

For maximal parabolics P, Q with iota(alpha_P) != alpha_Q, the open orbit
of Q^{w0} on G/P fibres over Y = L/(L cap P), where L is the Levi of
Q^{w0}.  The Levi of Q^{w0} has simple roots Delta minus iota(alpha_Q), so Y
is read off the diagram with iota(Sigma(Q)) deleted, and the tower layers
grade the negative roots outside P by their coefficient on iota(alpha_Q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .parabolic import (
    ParabolicMarking,
    SpaceDescriptor,
    connected_component,
    identify_subdiagram,
    space_descriptor,
    unipotent_radical_roots,
)
from .rootsys import Root, RootSystemId, root_system

UNMATCHED = "unmatched"


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class TowerRequest:
    system: RootSystemId
    sigma_p: frozenset[int]
    sigma_q: frozenset[int]

    def __post_init__(self):
        if isinstance(self.system, str):
            object.__setattr__(self, "system", RootSystemId.parse(self.system))
        object.__setattr__(self, "sigma_p", frozenset(self.sigma_p))
        object.__setattr__(self, "sigma_q", frozenset(self.sigma_q))
        if len(self.sigma_p) != 1:
            raise PreconditionError("towers are computed for maximal parabolics P only")
        rs = root_system(self.system)
        for i in self.sigma_p | self.sigma_q:
            if not 1 <= i <= rs.rank:
                raise PreconditionError(f"node {i} out of range for {self.system}")
        if {rs.iota(i) for i in self.sigma_p} & self.sigma_q:
            raise PreconditionError("iota(Sigma(P)) meets Sigma(Q)")

    @classmethod
    def of(cls, system, p: int, *q: int) -> TowerRequest:
        return cls(system, frozenset({p}), frozenset(q))

    @property
    def p(self) -> int:
        (p,) = self.sigma_p
        return p

    @property
    def deleted(self) -> frozenset[int]:
        """iota(Sigma(Q)): the nodes removed to obtain the Levi of Q^{w0}."""
        rs = root_system(self.system)
        return frozenset(rs.iota(i) for i in self.sigma_q)


@dataclass(frozen=True)
class BundleLayer:
    level: int
    weights: tuple[Root, ...]
    rank: int
    line_degree: int


@dataclass(frozen=True)
class FibrationTower:
    request: TowerRequest
    space: SpaceDescriptor
    base: SpaceDescriptor
    base_nodes: tuple[int, ...]
    layers: tuple[BundleLayer, ...]
    catalog_ids: tuple[str, ...] = field(default=())

    def dimension_identity(self) -> bool:
        return self.space.dimension == self.base.dimension + sum(l.rank for l in self.layers)

    def index_identity(self) -> bool:
        return self.space.index == self.base.index + sum(l.line_degree for l in self.layers)

    def summary(self) -> str:
        parts = [self.base.label]
        for layer, name in zip(self.layers, self.catalog_ids or [UNMATCHED] * len(self.layers)):
            parts.append(f"{name} (rank {layer.rank}, degree {layer.line_degree})")
        return " + ".join(parts)


def base_space(req: TowerRequest) -> SpaceDescriptor:
    """The flag variety Y = L/(L cap P) as a standard marked diagram."""
    sid, node, _ = _base_identification(req)
    return space_descriptor(ParabolicMarking.of(sid, node))


def _base_identification(req: TowerRequest):
    rs = root_system(req.system)
    keep = set(range(1, rs.rank + 1)) - req.deleted
    comp = connected_component(req.system, keep, req.p)
    sid, node, node_map = identify_subdiagram(req.system, comp, req.p)
    return sid, node, node_map


def _grading(req: TowerRequest) -> dict[int, list[Root]]:
    """Positive roots of U_P keyed by their total coefficient on iota(Sigma(Q))."""
    q_idx = [i - 1 for i in req.deleted]
    levels: dict[int, list[Root]] = {}
    for beta in unipotent_radical_roots(ParabolicMarking.of(req.system, req.p)):
        levels.setdefault(sum(beta[i] for i in q_idx), []).append(beta)
    return levels


def tower_layers(req: TowerRequest) -> FibrationTower:
    rs = root_system(req.system)
    sid, node, node_map = _base_identification(req)
    base = space_descriptor(ParabolicMarking.of(sid, node))
    layers = []
    for level, betas in sorted(_grading(req).items()):
        if level == 0:
            continue
        total = tuple(map(sum, zip(*betas)))
        layers.append(
            BundleLayer(
                level=level,
                weights=tuple(tuple(-c for c in b) for b in betas),
                rank=len(betas),
                # c1 of the associated bundle on Y: the weight sum paired with
                # the marked coroot.  Calibrated against T(-1) on P^r (degree 1).
                line_degree=rs.pairing(total, req.p),
            )
        )
    tower = FibrationTower(
        request=req,
        space=space_descriptor(ParabolicMarking.of(req.system, req.p)),
        base=base,
        base_nodes=tuple(sorted(node_map)),
        layers=tuple(layers),
    )
    ids = tuple(match_catalog(layer, base, tower=tower) for layer in layers)
    return FibrationTower(**{**tower.__dict__, "catalog_ids": ids})


def base_tangent_roots(req: TowerRequest) -> tuple[Root, ...]:
    return tuple(_grading(req).get(0, ()))


# -- bundle catalog ----------------------------------------------------------

def spinor_rank(m: int) -> int:
    return 2 ** (-(-m // 2) - 1)


def bundle_catalog(base: SpaceDescriptor) -> dict[tuple[int, int], list[str]]:
    """Equivariant bundles on P^r and Q_m keyed by (rank, c1).

    The first name of each entry is canonical; the rest are aliases for the
    same bundle.  Spinor sums S+S' and S+S share a key and are separated by
    weights in :func:`match_catalog`.
    """
    fam = base.family
    cat: dict[tuple[int, int], list[str]] = {}

    def add(key, *names):
        cat.setdefault(key, []).extend(n for n in names if n not in cat.get(key, []))

    if fam is None:
        return cat
    kind, m = fam
    if kind == "P":
        r = m
        for k in range(r + 1):
            names = [f"Omega^{k}({k + 1})"]
            if k == 0:
                names.insert(0, "O(1)")
            if k == r:
                names.insert(0, "O")
            if k == r - 1:
                names.append("T(-1)")
            add((comb(r, k), comb(r - 1, k)), *names)
        for j in range(2, 9):
            add((j * r, j), f"T(-1)^{j}", f"Omega^{r - 1}({r})^{j}")
    else:
        rk = spinor_rank(m)
        add((1, 1), "O(1)")
        add((m + 1, 1), "O(1)^perp")
        add((rk, rk // 2), "S")
        if m % 2 == 0:
            add((2 * rk, rk), "S+S'", "S+S")
    return cat


def _levi_dominant_patterns(tower: FibrationTower, layer: BundleLayer) -> list[tuple[int, ...]]:
    """Dominant weights of the layer for the Levi of L cap P on Y's component."""
    rs = root_system(tower.request.system)
    levi = [j for j in tower.base_nodes if j != tower.request.p]
    pats = []
    for w in layer.weights:
        pat = tuple(rs.pairing(w, j) for j in levi)
        if all(x >= 0 for x in pat):
            pats.append(pat)
    return pats


def match_catalog(layer: BundleLayer, base: SpaceDescriptor, tower: FibrationTower | None = None) -> str:
    names = bundle_catalog(base).get((layer.rank, layer.line_degree))
    if not names:
        return UNMATCHED
    if names[0] == "S+S'":
        if tower is None:
            return UNMATCHED
        pats = _levi_dominant_patterns(tower, layer)
        if len(pats) != 2:
            return UNMATCHED
        return "S+S" if pats[0] == pats[1] else "S+S'"
    return names[0]


def catalog_aliases(base: SpaceDescriptor, name: str) -> set[str]:
    for names in bundle_catalog(base).values():
        if name in names and not name.startswith("S+"):
            return set(names)
    return {name}


_NAME_FIXES = {"S^2": "S+S", "S^{2}": "S+S", "T(-1)^1": "T(-1)"}


def normalize_bundle_name(name: str) -> str:
    name = name.replace(" ", "")
    name = _NAME_FIXES.get(name, name)
    if name.endswith("^1") and name.startswith(("T(-1)", "Omega")):
        name = name[:-2]
    return name


def same_bundle(base: SpaceDescriptor, engine_name: str, printed: str) -> bool:
    """Whether a printed bundle name denotes the engine's catalogue entry on ``base``."""
    return normalize_bundle_name(printed) in catalog_aliases(base, engine_name)
