"""Curve classes on the Bott-Samelson resolution of the 3-dimensional quadric.

A class is recorded by its intersection numbers with the divisors
xi_1, xi_2, xi_3.  The relative tangent classes and the pullback of the
hyperplane are fixed linear combinations of the xi_i, so every quantity
below is a dot product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class EmptyCertificate(ValueError):
    pass


@dataclass(frozen=True)
class DivisorClass:
    coeffs: tuple[int, int, int]

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def pair(self, c: BSClass) -> int:
        return sum(x * y for x, y in zip(self.coeffs, c.triple))


@dataclass(frozen=True, order=True)
class BSClass:
    a1: int
    a2: int
    a3: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    def __str__(self):
        return f"({self.a1},{self.a2},{self.a3})"


T1 = DivisorClass((2, 0, 0))
T2 = DivisorClass((1, 2, 0))
T3 = DivisorClass((0, 2, 2))
HYPERPLANE = DivisorClass((1, 2, 1))

#: dim SO(5)/B, the flags through which a curve is lifted
FLAG_DIM = 4
#: dim of the fibre of the flag incidence over a point of Hom(C, Q3)
LIFT_FIBRE_DIM = 3


_TANGENT_SUM = T1 + T2 + T3


def relative_tangents() -> tuple[DivisorClass, DivisorClass, DivisorClass]:
    return T1, T2, T3


def pullback_degree(c: BSClass) -> int:
    return HYPERPLANE.pair(c)


def star_conditions(c: BSClass, d: int) -> bool:
    a1, a2, a3 = c.triple
    positive = (a1 > 0 and a2 > 0 and a3 >= 0) or (a1 > 0 and a2 >= 0 and a3 > 0)
    return positive and pullback_degree(c) == d


def hom_dim(c: BSClass) -> int:
    d = pullback_degree(c)
    if not star_conditions(c, d):
        raise ValueError(f"class {c} does not satisfy (*)_{d}")
    return _TANGENT_SUM.pair(c)


def enumerate_star(d: int) -> list[tuple[BSClass, int]]:
    """All (*)_d classes with their Hom dimensions, largest first."""
    if d < 2:
        raise EmptyCertificate(f"no class satisfies (*)_{d}")
    out = []
    for a2 in range(d // 2 + 1):
        for a3 in range(d - 2 * a2 + 1):
            c = BSClass(d - 2 * a2 - a3, a2, a3)
            if star_conditions(c, d):
                out.append((c, hom_dim(c)))
    out.sort(key=lambda t: (-t[1], t[0]))
    return out


def line_family_dim(d: int) -> int:
    """Maps of degree d onto an isotropic line: 3 for the line, 2d for Hom(C, P^1)."""
    if d < 1:
        raise ValueError("d must be positive")
    return 2 * d + 3


@dataclass(frozen=True)
class DegreeCertificate:
    degree: int
    class_count: int
    max_dim: int
    maximizers: tuple[BSClass, ...]
    incidence_dim: int
    line_dim: int

    @property
    def expected(self) -> int:
        return 3 * self.degree

    @property
    def unique_max(self) -> bool:
        return len(self.maximizers) == 1 and self.maximizers[0] == BSClass(self.degree - 1, 0, 1)

    @property
    def main_component_dim(self) -> int:
        return self.incidence_dim - LIFT_FIBRE_DIM

    @property
    def passes(self) -> bool:
        return (
            self.unique_max
            and self.max_dim == 3 * self.degree - 1
            and self.main_component_dim == self.expected
            and self.line_dim < self.expected
        )


@lru_cache(maxsize=None)
def certificate(d: int) -> DegreeCertificate:
    rows = enumerate_star(d)
    top = rows[0][1]
    return DegreeCertificate(
        degree=d,
        class_count=len(rows),
        max_dim=top,
        maximizers=tuple(c for c, dim in rows if dim == top),
        incidence_dim=FLAG_DIM + top,
        line_dim=line_family_dim(d),
    )


def low_degree_irreducible(d: int) -> bool:
    """Degrees 2 and 3 factor through a line; the family has the expected dimension only at d = 3."""
    return line_family_dim(d) == 3 * d


def q3_min_degree(max_degree: int = 50) -> int:
    """Least d such that every degree in [d, max_degree] is certified."""
    ok = {}
    for d in range(2, max_degree + 1):
        ok[d] = low_degree_irreducible(d) if d <= 3 else certificate(d).passes
    best = None
    for d in range(max_degree, 1, -1):
        if not ok[d]:
            break
        best = d
    if best is None:
        raise EmptyCertificate(f"degree {max_degree} is not certified")
    return best
