"""Cohomology of equivariant bundles pulled back to elliptic curves.

Everything here is closed-form integer arithmetic.  The curve is elliptic
unless a genus argument is taken explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


class InapplicableBound(ValueError):
    """The cone bound does not apply: every curve in the cone is degenerate."""


class UndeterminedCase(ValueError):
    """The spinor rule assigns no value in the requested mode."""


def h1_wedge_twist(r: int, k: int, a: int) -> int:
    """dim H^1 of f^* Omega^k_{P^r}(k+1) for f non-degenerate in codimension a."""
    if not 0 <= k <= r:
        raise ValueError(f"need 0 <= k <= r, got k={k}, r={r}")
    if not 0 <= a <= r:
        raise ValueError(f"need 0 <= a <= r, got a={a}, r={r}")
    return comb(a, r - k)


def h1_vanishes_genus_g(g: int, r: int, k: int) -> bool:
    if g < 0 or not 0 <= k <= r:
        raise ValueError("need g >= 0 and 0 <= k <= r")
    return g <= r - k


@dataclass(frozen=True)
class SpinorDatum:
    """A curve on Q_n spanning an isotropic space of linear dimension [n/2]+1-alpha."""

    quadric_dim: int
    iso_drop: int

    def __post_init__(self):
        if self.quadric_dim < 3:
            raise ValueError("spinor rule needs a quadric of dimension >= 3")
        if not 0 <= self.iso_drop <= self.quadric_dim // 2:
            raise ValueError(
                f"iso_drop must lie in [0, {self.quadric_dim // 2}], got {self.iso_drop}"
            )

    @property
    def even(self) -> bool:
        return self.quadric_dim % 2 == 0

    @classmethod
    def from_codim(cls, n: int, a: int) -> SpinorDatum:
        """Datum for a curve non-degenerate in an isotropic subspace of codimension a in P^{n+1}."""
        return cls(n, iso_drop_from_codim(n, a))


def iso_drop_from_codim(n: int, a: int) -> int:
    return a - (n + 1 - n // 2)


def h1_spinor(datum: SpinorDatum, mode: str = "stratum") -> int:
    """2^beta for one spinor bundle.

    ``mode="corollary"`` inverts the alpha/beta correspondence literally, so
    an even quadric with alpha = 1 has no value.  ``mode="stratum"`` is the
    convention used inside the stratum counts, 2^max(0, alpha-1) for n even.
    """
    alpha = datum.iso_drop
    if not datum.even:
        return 2**alpha
    if mode == "stratum":
        return 2 ** max(0, alpha - 1)
    if mode == "corollary":
        if alpha == 0:
            return 1
        if alpha == 1:
            raise UndeterminedCase("even quadric with alpha = 1 has no beta under the literal alpha/beta correspondence")
        return 2 ** (alpha - 1)
    raise ValueError(f"unknown mode {mode!r}")


def spinor_caveat(datum: SpinorDatum) -> str | None:
    if datum.even and datum.iso_drop == 0:
        return "maximal isotropic span must lie in the component fixed by the spinor bundle"
    return None


def spinor_excess(n: int, a: int, bundle: str) -> int:
    """h^1 of a spinor layer on Q_n for an isotropic codimension-a span.

    ``bundle`` is one of ``S``, ``S+S'`` or ``S+S``.  For S+S' on an even
    quadric a maximal isotropic span lies in the fixed component of exactly
    one of the two half-spin bundles.
    """
    datum = SpinorDatum.from_codim(n, a)
    one = h1_spinor(datum, "stratum")
    if bundle == "S":
        return one
    if bundle == "S+S":
        return 2 * one
    if bundle == "S+S'":
        if not datum.even:
            raise ValueError("S' exists only on even quadrics")
        return 1 if datum.iso_drop == 0 else 2 * one
    raise ValueError(f"unknown spinor bundle {bundle!r}")


def cone_bound(k: int, r: int, d: int) -> int:
    """Bound d(k+r-2) for non-degenerate elliptic maps to a rank-r cone in P^{k+r-1}."""
    if k < 0 or r < 1 or d < 1:
        raise ValueError("need k >= 0, r >= 1, d >= 1")
    if r <= 2:
        raise InapplicableBound("a cone of rank <= 2 is a union of hyperplanes")
    return d * (k + r - 2)


def h0_genus1(deg: int, h1: int) -> int:
    """Riemann-Roch on an elliptic curve: h^0 = deg + h^1."""
    return deg + h1
