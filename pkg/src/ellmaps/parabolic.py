"""Marked Dynkin diagrams and the invariants of G/P.

A maximal parabolic is given by one marked node.  The dimension of G/P is
the number of positive roots with a positive coefficient on the marked
simple root, and the index is the pairing of their sum with the marked
coroot (the coefficient of -K_X on the ample generator).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .rootsys import ClassificationError, Root, RootSystemId, root_system


class UnsupportedMarking(ValueError):
    """Raised for markings with more than one node where one is required."""


@dataclass(frozen=True)
class ParabolicMarking:
    system: RootSystemId
    sigma: frozenset[int]

    def __post_init__(self):
        if isinstance(self.system, str):
            object.__setattr__(self, "system", RootSystemId.parse(self.system))
        sigma = frozenset(self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if not sigma:
            raise ValueError("Sigma(P) must be nonempty")
        bad = [i for i in sigma if not 1 <= i <= self.system.rank]
        if bad:
            raise ValueError(f"nodes {bad} out of range for {self.system}")

    @classmethod
    def of(cls, system: RootSystemId | str, *nodes: int) -> ParabolicMarking:
        return cls(system, frozenset(nodes))

    @property
    def node(self) -> int:
        if len(self.sigma) != 1:
            raise UnsupportedMarking(f"marking {sorted(self.sigma)} is not a single node")
        (i,) = self.sigma
        return i


@dataclass(frozen=True)
class SpaceDescriptor:
    marking: ParabolicMarking
    dimension: int
    index: int
    label: str
    aliases: tuple[str, ...] = field(default=(), compare=False)

    @property
    def family(self) -> tuple | None:
        return variety_family(self.marking.system, self.marking.node)

    def names(self) -> set[str]:
        return {self.label, *self.aliases}


def unipotent_radical_roots(marking: ParabolicMarking) -> tuple[Root, ...]:
    rs = root_system(marking.system)
    idx = [i - 1 for i in marking.sigma]
    return tuple(r for r in rs.positive_roots if any(r[i] > 0 for i in idx))


def space_descriptor(marking: ParabolicMarking) -> SpaceDescriptor:
    node = marking.node
    rs = root_system(marking.system)
    roots = unipotent_radical_roots(marking)
    total = tuple(map(sum, zip(*roots)))
    label, aliases = variety_names(marking.system, node)
    return SpaceDescriptor(
        marking=marking,
        dimension=len(roots),
        index=rs.pairing(total, node),
        label=label,
        aliases=aliases,
    )


def descriptor(system: RootSystemId | str, node: int) -> SpaceDescriptor:
    return space_descriptor(ParabolicMarking.of(system, node))


def adjoint_nodes(system: RootSystemId | str) -> tuple[int, ...]:
    """Nodes on which the highest root has nonzero coroot pairing."""
    rs = root_system(system)
    theta = rs.highest_root
    return tuple(j for j in range(1, rs.rank + 1) if rs.pairing(theta, j) != 0)


# -- display names -----------------------------------------------------------

def variety_family(sid: RootSystemId, node: int) -> tuple | None:
    """Projective spaces and quadrics, up to isomorphism; None otherwise."""
    L, n = sid.letter, sid.rank
    if L == "A" and node in (1, n):
        return ("P", n)
    if L == "A" and n == 3 and node == 2:
        return ("Q", 4)
    if L == "B" and node == 1:
        return ("Q", 2 * n - 1)
    if L == "B" and n == 2 and node == 2:
        return ("P", 3)
    if L == "C" and node == 1:
        return ("P", 2 * n - 1)
    if L == "C" and n == 2 and node == 2:
        return ("Q", 3)
    if L == "D" and node == 1:
        return ("Q", 2 * n - 2)
    if L == "D" and n == 4 and node in (3, 4):
        return ("Q", 6)
    return None


def _family_name(fam: tuple) -> str:
    kind, m = fam
    return f"P^{m}" if kind == "P" else f"Q_{m}"


def variety_names(sid: RootSystemId, node: int) -> tuple[str, tuple[str, ...]]:
    """Display label and aliases for G/P; cosmetic only."""
    L, n, k = sid.letter, sid.rank, node
    if L == "A":
        label = f"G({k},{n + 1})"
    elif L == "B":
        label = f"G_Q({k},{2 * n + 1})"
    elif L == "C":
        label = f"G_w({k},{2 * n})"
    elif L == "D":
        label = f"G_Q({n},{2 * n})" if k >= n - 1 else f"G_Q({k},{2 * n})"
    elif (L, n, k) in ((("E", 6, 1)), ("E", 6, 6)):
        label = "OP^2"
    else:
        label = f"{sid}/P{k}"
    aliases = [f"{sid}/P{k}"]
    fam = variety_family(sid, node)
    if fam is not None:
        aliases.append(label)
        label = _family_name(fam)
    if (L, n, k) in (("E", 6, 1), ("E", 6, 6)):
        aliases.append("E6/P1")
    return label, tuple(a for a in dict.fromkeys(aliases) if a != label)


# -- identification of connected sub-diagrams --------------------------------

def _candidate_types(rank: int):
    for letter in "ABCDEFG":
        try:
            yield RootSystemId(letter, rank)
        except ClassificationError:
            continue


def _isomorphisms(sub: list[list[int]], std: tuple[tuple[int, ...], ...]):
    n = len(sub)
    # cheap invariant filter before permuting
    if sorted(map(tuple, map(sorted, sub))) != sorted(map(tuple, map(sorted, std))):
        return
    for perm in permutations(range(n)):
        if all(sub[u][v] == std[perm[u]][perm[v]] for u in range(n) for v in range(n)):
            yield perm


def connected_component(system: RootSystemId, nodes: set[int], start: int) -> list[int]:
    rs = root_system(system)
    comp, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for v in nodes:
            if v not in comp and rs.cartan[u - 1][v - 1] != 0:
                comp.add(v)
                stack.append(v)
    return sorted(comp)


def identify_subdiagram(system: RootSystemId, nodes: list[int], marked: int):
    """Identify the connected sub-diagram on ``nodes`` as a Bourbaki type.

    Returns ``(RootSystemId, bourbaki_node, node_map)`` where ``node_map`` sends
    each original node to its Bourbaki index.  Among diagram automorphisms the
    smallest Bourbaki index for the marked node is chosen.
    """
    rs = root_system(system)
    sub = [[rs.cartan[u - 1][v - 1] for v in nodes] for u in nodes]
    pos = nodes.index(marked)
    best = None
    for sid in _candidate_types(len(nodes)):
        std = root_system(sid).cartan
        for perm in _isomorphisms(sub, std):
            cand = (perm[pos] + 1, sid, {u: perm[i] + 1 for i, u in enumerate(nodes)})
            if best is None or cand[0] < best[0]:
                best = cand
        if best is not None:
            break
    if best is None:
        raise ClassificationError(f"sub-diagram {nodes} of {system} is not of finite type")
    node, sid, node_map = best
    return sid, node, node_map
