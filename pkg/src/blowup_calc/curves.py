"""Curves on the blow-up described by intersection profiles.

A component is given by (H.C, E.C, genus), never by a symbolic class label.
The catalog lines are

    P  pulled-back line missing the point   (1, 0)
    F  fibre of the projection to the plane  (1, 1)
    X  line in the exceptional plane         (0, -1)
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Sequence

from .chow import ChowClass, get_epsilon
from .cohomology import CohomTable
from .errors import ValidationError
from .sheafdata import TwistDescriptor

QUOTIENT_TWIST = TwistDescriptor(2, -1)


class LineType(enum.Enum):
    PULLBACK = "P"
    FIBER = "F"
    EXCEPTIONAL = "X"
    CUSTOM = "C"


@dataclass(frozen=True)
class Component:
    hdot: int
    edot: int
    genus: int = 0
    tag: LineType = LineType.CUSTOM

    def __post_init__(self):
        if self.genus < 0:
            raise ValidationError(f"genus must be non-negative, got {self.genus}")

    def __str__(self):
        if self.tag is LineType.CUSTOM:
            return f"({self.hdot}.{self.edot}.{self.genus})"
        return self.tag.value


PULLBACK_LINE = Component(1, 0, 0, LineType.PULLBACK)
FIBER_LINE = Component(1, 1, 0, LineType.FIBER)
EXCEPTIONAL_LINE = Component(0, -1, 0, LineType.EXCEPTIONAL)

CATALOG = {
    LineType.PULLBACK: PULLBACK_LINE,
    LineType.FIBER: FIBER_LINE,
    LineType.EXCEPTIONAL: EXCEPTIONAL_LINE,
}


def catalog_line(tag: LineType | str) -> Component:
    tag = LineType(tag)
    if tag not in CATALOG:
        raise ValidationError(f"{tag} is not a catalog line")
    return CATALOG[tag]


@dataclass(frozen=True)
class CurveProfile:
    components: tuple[Component, ...] = ()
    # pairwise disjointness is asserted by the caller, never verified
    disjoint: bool = True

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __add__(self, other: "CurveProfile") -> "CurveProfile":
        return CurveProfile(self.components + other.components, self.disjoint and other.disjoint)

    def __str__(self):
        return ",".join(str(c) for c in self.components) or "empty"

    @property
    def genus(self) -> int:
        """Arithmetic genus of the disjoint union."""
        return sum(c.genus for c in self.components) - len(self.components) + 1

    @property
    def type_counts(self) -> tuple[int, int]:
        """Numbers of pulled-back and fibre lines."""
        return (
            sum(c.tag is LineType.PULLBACK for c in self.components),
            sum(c.tag is LineType.FIBER for c in self.components),
        )


@dataclass(frozen=True)
class CurveSheafData:
    """A line bundle L on a curve, given by its degree on each component."""

    profile: CurveProfile
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if len(self.degrees) != len(self.profile):
            raise ValidationError(
                f"{len(self.degrees)} degrees given for {len(self.profile)} components"
            )

    @classmethod
    def theta(cls, profile: CurveProfile) -> "CurveSheafData":
        """L of degree g_c - 1 on every component (O(-1) on each line)."""
        return cls(profile, tuple(c.genus - 1 for c in profile))

    def __add__(self, other: "CurveSheafData") -> "CurveSheafData":
        return CurveSheafData(self.profile + other.profile, self.degrees + other.degrees)

    def pairs(self):
        return zip(self.profile.components, self.degrees)


def restriction_degree(c: Component, t: TwistDescriptor) -> int:
    """Degree of O(p, q) restricted to the component."""
    return t.p * c.hdot + t.q * c.edot


def curve_class(profile: CurveProfile) -> ChowClass:
    eps = get_epsilon()
    return ChowClass.codim2(
        sum(c.hdot for c in profile), sum(eps * c.edot for c in profile)
    )


def grr_pushforward(d: CurveSheafData, t: TwistDescriptor) -> ChowClass:
    """ch(i_* L (x) O(p, q)) by Grothendieck-Riemann-Roch.

    On each component i_* of (1 + deg[pt]) * Td(N)^{-1}, with
    Td(N)^{-1} = 1 - (deg O(2,-1)|_C + g - 1)[pt].
    """
    out = curve_class(d.profile)
    pt = sum(
        deg + restriction_degree(c, t) - restriction_degree(c, QUOTIENT_TWIST) - c.genus + 1
        for c, deg in d.pairs()
    )
    return out + ChowClass.point(pt)


def _require_rational(d: CurveSheafData) -> None:
    for c in d.profile:
        if c.genus != 0:
            raise ValidationError(f"component {c} has genus {c.genus}; only rational curves are supported")


def twisted_curve_cohomology(d: CurveSheafData, t: TwistDescriptor) -> CohomTable:
    """Cohomology of i_* L (x) O(p, q) for a union of rational curves."""
    _require_rational(d)
    h0 = h1 = 0
    for c, deg in d.pairs():
        n = deg + restriction_degree(c, t)
        h0 += max(0, n + 1)
        h1 += max(0, -n - 1)
    return CohomTable(h0, h1, 0, 0)


# -- curve literals ----------------------------------------------------------

_CUSTOM = re.compile(r"^\((-?\d+)\.(-?\d+)\.(\d+)\)$")
_REPEAT = re.compile(r"^([PFX])(?:\s*\*\s*(\d+))?$")


def parse_curve(text: str) -> CurveProfile:
    """Parse ``"P*a,F*b,X*c"`` with optional custom ``(h.e.g)`` components."""
    comps: list[Component] = []
    for token in filter(None, (s.strip() for s in text.split(","))):
        m = _REPEAT.match(token)
        if m:
            comps.extend([catalog_line(m.group(1))] * int(m.group(2) or 1))
            continue
        m = _CUSTOM.match(token)
        if m:
            comps.append(Component(int(m.group(1)), int(m.group(2)), int(m.group(3))))
            continue
        raise ValueError(f"malformed curve component {token!r}")
    return CurveProfile(tuple(comps))


def lines(tags: Sequence[LineType | str]) -> CurveProfile:
    return CurveProfile(tuple(catalog_line(t) for t in tags))

