"""Finite root systems in Bourbaki numbering.

Roots are integer tuples of coefficients over the simple roots
``alpha_1 .. alpha_r``.  Node indices in the public API are 1-based, as in
Bourbaki's plates; tuple positions are 0-based.

The Cartan matrix follows the convention ``A[i][j] = <alpha_j, alpha_i^vee>``
so that the simple reflection is ``s_i(x) = x - (sum_j x_j A[i][j]) alpha_i``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache

Root = tuple[int, ...]
CartanMatrix = tuple[tuple[int, ...], ...]

#: dim g per type, used only as an independent check on |Phi+|.
LIE_ALGEBRA_DIM = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}


class ClassificationError(ValueError):
    """Raised for a (letter, rank) pair outside the finite classification."""


@dataclass(frozen=True, order=True)
class RootSystemId:
    letter: str
    rank: int

    def __post_init__(self):
        letter, rank = self.letter, self.rank
        if not isinstance(rank, int) or isinstance(rank, bool):
            raise ClassificationError(f"rank must be an integer, got {rank!r}")
        ok = {
            "A": 1 <= rank <= 8,
            "B": 2 <= rank <= 8,
            "C": 2 <= rank <= 8,
            "D": 4 <= rank <= 8,
            "E": 6 <= rank <= 8,
            "F": rank == 4,
            "G": rank == 2,
        }.get(letter)
        if not ok:
            raise ClassificationError(f"no finite root system {letter}{rank} (rank <= 8)")

    @classmethod
    def parse(cls, text: str) -> RootSystemId:
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise ClassificationError(f"cannot parse root system name {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.letter}{self.rank}"


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(sid: RootSystemId) -> CartanMatrix:
    """Bourbaki Cartan matrix, ``A[i][j] = <alpha_j, alpha_i^vee>``."""
    n = sid.rank
    letter = sid.letter
    if letter == "A":
        a = _chain(n)
    elif letter == "B":
        # alpha_n short
        a = _chain(n)
        a[n - 1][n - 2] = -2
    elif letter == "C":
        # alpha_n long
        a = _chain(n)
        a[n - 2][n - 1] = -2
    elif letter == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif letter == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(1, 3), (2, 4), (3, 4)] + [(k, k + 1) for k in range(4, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif letter == "F":
        # 1-2=>3-4, alpha_1, alpha_2 long
        a = _chain(4)
        a[2][1] = -2
    else:
        # G2, alpha_1 short
        a = [[2, -3], [-1, 2]]
    return tuple(tuple(row) for row in a)


def coroot_pairing(root: Root, j: int, cartan: CartanMatrix) -> int:
    """Return ``<root, alpha_j^vee>`` for a 1-based node ``j``."""
    if not 1 <= j <= len(cartan):
        raise IndexError(f"simple root index {j} out of range 1..{len(cartan)}")
    row = cartan[j - 1]
    return sum(c * row[i] for i, c in enumerate(root))


def reflect(root: Root, i: int, cartan: CartanMatrix) -> Root:
    """Simple reflection ``s_i`` (1-based ``i``) applied to ``root``."""
    k = coroot_pairing(root, i, cartan)
    out = list(root)
    out[i - 1] -= k
    return tuple(out)


def _reflection_closure(cartan: CartanMatrix) -> set[Root]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        r = queue.popleft()
        for i in range(1, n + 1):
            s = reflect(r, i, cartan)
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return seen


def is_positive(root: Root) -> bool:
    return all(c >= 0 for c in root) and any(root)


def height(root: Root) -> int:
    return sum(root)


class RootSystem:
    """Root data for one finite type; immutable after construction."""

    def __init__(self, sid: RootSystemId):
        self.id = sid
        self.cartan = cartan_matrix(sid)
        roots = _reflection_closure(self.cartan)
        for r in roots:
            if not (all(c >= 0 for c in r) or all(c <= 0 for c in r)):
                raise AssertionError(f"mixed-sign vector {r} in reflection closure")
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted((r for r in roots if is_positive(r)), key=lambda r: (height(r), r))
        )

    @property
    def rank(self) -> int:
        return self.id.rank

    def __repr__(self):
        return f"RootSystem({self.id})"

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive_roots, key=height)

    def simple_root(self, i: int) -> Root:
        return tuple(int(j == i - 1) for j in range(self.rank))

    def pairing(self, root: Root, j: int) -> int:
        return coroot_pairing(root, j, self.cartan)

    def reflect(self, root: Root, i: int) -> Root:
        return reflect(root, i, self.cartan)

    def weight_of(self, root: Root) -> tuple[int, ...]:
        """Coordinates of a root-lattice vector in the fundamental weight basis."""
        return tuple(self.pairing(root, j) for j in range(1, self.rank + 1))

    @cached_property
    def longest_word(self) -> tuple[int, ...]:
        """A reduced word for w0, found by descending rho to the antidominant chamber.

        The word ``(i1, ..., ik)`` satisfies ``w0 = s_ik ... s_i1``.
        """
        n = self.rank
        lam = [1] * n
        word = []
        while True:
            i = next((k for k in range(n) if lam[k] > 0), None)
            if i is None:
                break
            c = lam[i]
            for j in range(n):
                lam[j] -= c * self.cartan[j][i]
            word.append(i + 1)
        if any(x >= 0 for x in lam):
            raise AssertionError("descent did not reach the antidominant chamber")
        return tuple(word)

    def apply_w0(self, root: Root) -> Root:
        for i in self.longest_word:
            root = self.reflect(root, i)
        return root

    @cached_property
    def involution(self) -> tuple[int, ...]:
        """``perm[i-1] = j`` where ``-w0(alpha_i) = alpha_j`` (1-based)."""
        perm = []
        for i in range(1, self.rank + 1):
            img = tuple(-c for c in self.apply_w0(self.simple_root(i)))
            if img.count(1) != 1 or any(c not in (0, 1) for c in img):
                raise AssertionError(f"-w0(alpha_{i}) = {img} is not simple")
            perm.append(img.index(1) + 1)
        return tuple(perm)

    def iota(self, i: int) -> int:
        return self.involution[i - 1]


@lru_cache(maxsize=None)
def root_system(sid: RootSystemId | str) -> RootSystem:
    if isinstance(sid, str):
        sid = RootSystemId.parse(sid)
    return RootSystem(sid)


def build_root_system(sid: RootSystemId) -> tuple[CartanMatrix, tuple[Root, ...]]:
    rs = root_system(sid)
    return rs.cartan, rs.positive_roots


def weyl_involution(sid: RootSystemId) -> tuple[int, ...]:
    return root_system(sid).involution
