"""Exact integer invariant arithmetic for quotient-surface verification.

Everything here is small, closed-form integer bookkeeping: Euler
characteristics under degree-p covers, Riemann-Roch style recovery of the
canonical self-intersection, a Noether-type inequality check, feasibility
scans over prime characteristics, torsion bounds, Betti-number
consistency, and spectral-sequence degeneration from dimension grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContextError
from .rings import is_prime


@dataclass(frozen=True)
class InvariantRecord:
    """Bundle of numerical invariants for one surface.

    ``chi`` is the structure-sheaf Euler characteristic, ``k2`` the
    canonical self-intersection.  Optional Hodge numbers, when all
    present, must satisfy chi = 1 - h01 + pg.  ``h0_omega_lower`` is a
    certified lower bound for the number of independent global canonical
    forms (it may be smaller than an exact pg).
    """

    p: int
    chi: int
    k2: int
    pg: int | None = None
    h01: int | None = None
    kind: str | None = None
    h0_omega_lower: int | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ContextError(f"characteristic {self.p} is not prime")
        if self.pg is not None and self.h01 is not None:
            if self.chi != 1 - self.h01 + self.pg:
                raise ContextError(
                    "inconsistent record: chi != 1 - h01 + pg "
                    f"({self.chi} != 1 - {self.h01} + {self.pg})")
        if self.kind is not None and self.kind not in ("singular", "supersingular"):
            raise ContextError(f"unknown kind {self.kind!r}")


def torsor_invariants(record: InvariantRecord) -> InvariantRecord:
    """Invariants of the total space of a degree-p torsor over the record.

    Both chi and K^2 multiply by the degree of the finite flat cover.  The
    cover's canonical forms pull back injectively from a chi-1 dimensional
    space, giving the h0 lower bound.
    """
    return InvariantRecord(
        p=record.p,
        chi=record.chi * record.p,
        k2=record.k2 * record.p,
        kind=record.kind,
        h0_omega_lower=record.chi * record.p - 1,
    )


def descend_invariants(record: InvariantRecord) -> InvariantRecord:
    """Invariants of the free quotient by a degree-p group scheme action."""
    if record.chi % record.p or record.k2 % record.p:
        raise ContextError(
            f"invariants (chi={record.chi}, K2={record.k2}) do not divide "
            f"by the cover degree {record.p}")
    return InvariantRecord(
        p=record.p,
        chi=record.chi // record.p,
        k2=record.k2 // record.p,
        kind=record.kind,
    )


def self_intersection_from_chis(chi0: int, chi1: int, chi2: int) -> int:
    """K^2 from chi(O), chi(omega^-1), chi(omega^-2).

    Riemann-Roch gives chi(omega^-n) = chi(O) + n(n+1)/2 * K^2, so the
    second difference chi0 - 2*chi1 + chi2 equals K^2.
    """
    return chi0 - 2 * chi1 + chi2


def chi_of_anticanonical_power(chi: int, k2: int, n: int) -> int:
    """chi(omega^-n) = chi + n(n+1)/2 * K^2 (exact integer form)."""
    return chi + n * (n + 1) // 2 * k2


def noether_check(k2: int, h0: int, image_is_curve: bool) -> bool:
    """Noether-type inequality K^2 >= 2*h0 - c.

    The constant is 2 when the canonical image is a curve and 4 when it is
    a surface; vacuously true when there are no canonical forms to map by.
    """
    if h0 <= 0:
        return True
    c = 2 if image_is_curve else 4
    return k2 >= 2 * h0 - c


def feasible_characteristics(kind: str, threshold: int = -4,
                             cover_bound: int = 6) -> list[int]:
    """Primes where a degree-p construction of the given kind can exist.

    singular kind: the cover degree must fit under the geometric bound,
    p <= cover_bound.  supersingular kind: a Noether-type obstruction
    eliminates large p; feasibility is p <= 2 - threshold.
    """
    if kind == "singular":
        upper = cover_bound
    elif kind == "supersingular":
        upper = 2 - threshold
    else:
        raise ContextError(f"unknown kind {kind!r}")
    return [p for p in range(2, upper + 1) if is_prime(p)]


def torsion_order_bound(p: int, cover_bound: int = 6) -> int:
    """Upper bound for the order of a torsion line bundle on the quotient.

    A nontrivial torsion class of order m would produce a degree m*p
    cover, so m <= cover_bound // p (0 means the characteristic itself is
    already infeasible).
    """
    if p < 2:
        raise ContextError("characteristic must be at least 2")
    if cover_bound < 1:
        raise ContextError("cover bound must be positive")
    return cover_bound // p


def betti_consistency(chi: int, k2: int, b1: int) -> tuple[int, int, int]:
    """(c2, b2, b3) from Noether's formula and Poincare duality.

    c2 = 12*chi - K^2, b2 = c2 - 2 + 2*b1, b3 = b1.
    """
    c2 = 12 * chi - k2
    b2 = c2 - 2 + 2 * b1
    if b2 < 0:
        raise ContextError(f"inconsistent data: negative b2 = {b2}")
    return c2, b2, b1


def e1_degeneration_check(grid: dict[tuple[int, int], int],
                          hdr: dict[int, int]) -> dict[int, bool]:
    """Compare first-page antidiagonal sums with limit dimensions.

    ``grid[(i, j)]`` holds the dimension in horizontal position i and
    vertical position j (both starting at 0 in the bottom-left corner);
    ``hdr[n]`` the dimension of the degree-n limit.  Degeneration at the
    first page means equality for every n; dimensions this grid does not
    list are zero.
    """
    out = {}
    max_n = max(hdr) if hdr else 0
    for n in range(max_n + 1):
        first_page = sum(grid.get((i, n - i), 0) for i in range(n + 1))
        out[n] = first_page == hdr.get(n, 0)
    return out


def hypersurface_invariants(d: int) -> tuple[int, int]:
    """(chi(O), K^2) for a smooth degree-d hypersurface in P^3.

    chi = 1 + C(d-1, 3) and K^2 = d*(d-4)^2.
    """
    if d < 1:
        raise ContextError("degree must be positive")
    chi = 1 + math.comb(d - 1, 3)
    k2 = d * (d - 4) ** 2
    return chi, k2
