"""Cohomology tables of O(p, q) and of the twisted pulled-back cotangent bundle.

The blow-up is the projective bundle P(O + O(1)) over the plane.  Its
relative hyperplane bundle is O(1, 0): H satisfies xi^2 = xi . (H - E),
the Grothendieck relation for c1(O + O(1)) pulled back as H - E, while E
does not.  Hence

    O(p, q) = O_rel(p + q) (x) pr^* O_P2(-q),

and for n = p + q >= 0 the direct image is sum_{j=0..n} O_P2(j - q) with no
higher direct images.  For n = -1 everything vanishes, and n <= -2 is sent
to the n >= 0 range by Serre duality with omega = O(-4, 2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .sheafdata import TwistDescriptor


class BundleKind(enum.Enum):
    LINE_BUNDLE = "O"
    OMEGA_TWIST = "Omega1"


@dataclass(frozen=True)
class BundleDescriptor:
    kind: BundleKind
    twist: TwistDescriptor

    @classmethod
    def line(cls, p: int, q: int) -> "BundleDescriptor":
        return cls(BundleKind.LINE_BUNDLE, TwistDescriptor(p, q))

    @classmethod
    def omega(cls, p: int, q: int) -> "BundleDescriptor":
        return cls(BundleKind.OMEGA_TWIST, TwistDescriptor(p, q))

    def __str__(self):
        return f"{self.kind.value}({self.twist.p},{self.twist.q})"


@dataclass(frozen=True)
class CohomTable:
    h0: int
    h1: int
    h2: int
    h3: int

    def __iter__(self):
        return iter((self.h0, self.h1, self.h2, self.h3))

    def __getitem__(self, i: int) -> int:
        return (self.h0, self.h1, self.h2, self.h3)[i]

    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2 - self.h3

    def reversed(self) -> "CohomTable":
        return CohomTable(self.h3, self.h2, self.h1, self.h0)

    def is_zero(self) -> bool:
        return not any(self)

    def as_dict(self) -> dict:
        return {"h0": self.h0, "h1": self.h1, "h2": self.h2, "h3": self.h3}


ZERO_TABLE = CohomTable(0, 0, 0, 0)


def plane_cohomology(d: int) -> tuple[int, int, int]:
    """(h0, h1, h2) of O(d) on the plane."""
    h0 = comb(d + 2, 2) if d >= 0 else 0
    h2 = comb(-d - 1, 2) if d <= -3 else 0
    return (h0, 0, h2)


def plane_cotangent_cohomology(d: int) -> tuple[int, int, int]:
    """(h0, h1, h2) of Omega^1(d) on the plane (Bott's formula)."""
    h0 = d * d - 1 if d >= 2 else 0
    h1 = 1 if d == 0 else 0
    h2 = d * d - 1 if d <= -2 else 0
    return (h0, h1, h2)


def _direct_image_sum(plane, n: int, q: int) -> CohomTable:
    h = [0, 0, 0]
    for j in range(n + 1):
        for i, v in enumerate(plane(j - q)):
            h[i] += v
    return CohomTable(h[0], h[1], h[2], 0)


@lru_cache(maxsize=8192)
def _table(kind: BundleKind, p: int, q: int) -> CohomTable:
    n = p + q
    if n == -1:
        return ZERO_TABLE
    if kind is BundleKind.LINE_BUNDLE:
        if n >= 0:
            return _direct_image_sum(plane_cohomology, n, q)
        return _table(kind, -4 - p, 2 - q).reversed()
    if n >= 0:
        return _direct_image_sum(plane_cotangent_cohomology, n, q)
    # dual of pr^*Omega is pr^*Omega(3) = Omega^1(3, -3); tensor with omega = O(-4, 2)
    return _table(kind, -1 - p, -1 - q).reversed()


def cohomology_table(b: BundleDescriptor) -> CohomTable:
    return _table(b.kind, b.twist.p, b.twist.q)


def line_bundle_table(p: int, q: int) -> CohomTable:
    return _table(BundleKind.LINE_BUNDLE, p, q)


def is_cohomologically_trivial(b: BundleDescriptor) -> bool:
    return cohomology_table(b).is_zero()


@dataclass(frozen=True)
class StructureSheaf:
    def __str__(self):
        return "O"


@dataclass(frozen=True)
class IdealPower:
    """Power of the ideal sheaf of the blown-up point."""

    n: int

    def __str__(self):
        return f"I^{self.n}"


def pushforward_line_bundle(q: int) -> StructureSheaf | IdealPower:
    """Direct image of O(qE) under the blow-down map."""
    if q < 0:
        return IdealPower(-q)
    return StructureSheaf()
