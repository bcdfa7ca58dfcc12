"""Closed-form invariants of smooth surfaces of bidegree (a, b) in the flag.

Chern numbers, the Miyaoka-type ceiling on pairwise disjoint smooth conics
(hence on twistor fibers), the matching ceiling for bidegree (1,0) ruling
curves, triple products of the two hyperplane classes, and adjunction data.
All values are exact integers or rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError


def c1_squared(a: int, b: int) -> int:
    """c1(S)^2 = 3a^2 b + 3a b^2 - 4a^2 - 4b^2 - 16ab + 12a + 12b."""
    return 3 * a * a * b + 3 * a * b * b - 4 * a * a - 4 * b * b - 16 * a * b + 12 * a + 12 * b


def c2(a: int, b: int) -> int:
    """c2(S) = 6a + 6b + 3a^2 b - 2a^2 + 3a b^2 - 8ab - 2b^2."""
    return 6 * a + 6 * b + 3 * a * a * b - 2 * a * a + 3 * a * b * b - 8 * a * b - 2 * b * b


def _require_general_type(a: int, b: int):
    if a < 3 or b < 3:
        raise PreconditionError(
            "the bound requires a >= 3 and b >= 3 (minimal general type range)"
        )


def miyaoka_conic_bound(a: int, b: int) -> tuple[Fraction, int]:
    """Ceiling on the number of pairwise disjoint smooth conics on a smooth
    (a, b) surface, returned as (exact rational, integer floor).

    The rational value is
    2(a+b-2)(3a^2 b - a^2 + 3a b^2 - 4ab + 3a - b^2 + 3b) / (a+b-1)^2;
    since a count of curves is an integer, the floor is the operative bound.
    The same ceiling applies to twistor fibers, which are disjoint conics.
    """
    _require_general_type(a, b)
    num = 2 * (a + b - 2) * (
        3 * a * a * b - a * a + 3 * a * b * b - 4 * a * b + 3 * a - b * b + 3 * b
    )
    value = Fraction(num, (a + b - 1) ** 2)
    return value, value.numerator // value.denominator


def miyaoka_conic_bound_diagonal(a: int) -> Fraction:
    """The a = b specialization 24(a^2 - a + 1)(a - 1)a / (2a - 1)^2."""
    _require_general_type(a, a)
    return Fraction(24 * (a * a - a + 1) * (a - 1) * a, (2 * a - 1) ** 2)


def ruling_curve_bound(a: int, b: int) -> tuple[Fraction, int]:
    """Ceiling on the number of bidegree (1,0) curves on a smooth (a, b)
    surface: 2a(a^2(3b-1) + a(3b^2-4b+3) - (b-3)b) / (1+a)^2, with floor."""
    _require_general_type(a, b)
    num = 2 * a * (a * a * (3 * b - 1) + a * (3 * b * b - 4 * b + 3) - (b - 3) * b)
    value = Fraction(num, (1 + a) ** 2)
    return value, value.numerator // value.denominator


def chow_triple(c1: str, c2_: str, c3: str) -> int:
    """Triple product of hyperplane classes H1 = O(1,0), H2 = O(0,1).

    H1^3 = H2^3 = 0 and every mixed product equals 1.
    """
    for c in (c1, c2_, c3):
        if c not in ("H1", "H2"):
            raise PreconditionError("classes must be 'H1' or 'H2'")
    return 0 if c1 == c2_ == c3 else 1


def surface_pair_intersection_bidegree(b1, b2) -> tuple[int, int]:
    """Bidegree of the intersection curve of surfaces of classes b1, b2.

    Expands (a H1 + b H2)(a' H1 + b' H2) and pairs against H1 and H2 with
    chow_triple, giving d1 = ab' + a'b + bb' and d2 = aa' + ab' + a'b.
    """
    a, b = b1
    a2, b2_ = b2
    pair_coeffs = {
        ("H1", "H1"): a * a2,
        ("H1", "H2"): a * b2_ + b * a2,
        ("H2", "H2"): b * b2_,
    }
    d1 = sum(c * chow_triple(x, y, "H1") for (x, y), c in pair_coeffs.items())
    d2 = sum(c * chow_triple(x, y, "H2") for (x, y), c in pair_coeffs.items())
    return d1, d2


def uniqueness_threshold(a: int, b: int) -> int:
    """a^2 + ab + b^2: from this many pairwise disjoint smooth conics on, an
    integral (a, b) surface through them is unique.

    Note the Chow expansion of the self-intersection gives Segre degree
    a^2 + 4ab + b^2 for a != b; the two conventions agree at a = b (both
    give 3a^2) and the discrepancy is surfaced, not resolved, by
    surface_invariant_report.
    """
    return a * a + a * b + b * b


@dataclass
class SurfaceInvariants:
    bidegree: tuple[int, int]
    canonical_bidegree: tuple[int, int]
    conic_self_intersection: int
    ruling_10_self_intersection: int
    ruling_01_self_intersection: int
    c1_squared: int
    c2: int
    euler_characteristic: Fraction
    general_type: bool
    uniqueness_threshold: int
    self_pair_bidegree: tuple[int, int]

    def as_dict(self) -> dict:
        return {
            "bidegree": list(self.bidegree),
            "canonical_bidegree": list(self.canonical_bidegree),
            "conic_self_intersection": self.conic_self_intersection,
            "ruling_10_self_intersection": self.ruling_10_self_intersection,
            "ruling_01_self_intersection": self.ruling_01_self_intersection,
            "c1_squared": self.c1_squared,
            "c2": self.c2,
            "euler_characteristic": str(self.euler_characteristic),
            "general_type": self.general_type,
            "uniqueness_threshold": self.uniqueness_threshold,
            "self_pair_bidegree": list(self.self_pair_bidegree),
        }


def surface_invariant_report(a: int, b: int) -> SurfaceInvariants:
    """Adjunction and Chern data of a smooth (a, b) surface.

    The canonical class is O_S(a-2, b-2); a smooth conic on S has
    self-intersection 2-a-b, a (1,0) curve has -a and a (0,1) curve -b.
    chi(O_S) = (c1^2 + c2)/12 is an integer for every bidegree.
    """
    k1, k2 = c1_squared(a, b), c2(a, b)
    return SurfaceInvariants(
        bidegree=(a, b),
        canonical_bidegree=(a - 2, b - 2),
        conic_self_intersection=2 - a - b,
        ruling_10_self_intersection=-a,
        ruling_01_self_intersection=-b,
        c1_squared=k1,
        c2=k2,
        euler_characteristic=Fraction(k1 + k2, 12),
        general_type=(a >= 3 and b >= 3),
        uniqueness_threshold=uniqueness_threshold(a, b),
        self_pair_bidegree=surface_pair_intersection_bidegree((a, b), (a, b)),
    )
