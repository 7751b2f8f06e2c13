"""Instanton charges, the defining vanishing checklist, and monad term ranks."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .chow import ChowClass, exp
from .cohomology import CohomTable
from .curves import CurveProfile, restriction_degree
from .errors import ValidationError
from .sheafdata import ChernData, TwistDescriptor, chern_character, euler_characteristic

T = TwistDescriptor

OMEGA_CHARACTER = ChowClass(2, -3, 3, Fraction(3, 2), Fraction(3, 2), 0)
"""ch of the pulled-back plane cotangent bundle (pr^* of the line class is H - E)."""


class Stability(enum.Enum):
    MU_STABLE = "mu-stable"
    SEMISTABLE = "semistable"
    UNKNOWN = "unknown"


class Verdict(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, value: Optional[bool]) -> "Verdict":
        if value is None:
            return cls.UNKNOWN
        return cls.PASS if value else cls.FAIL


def is_admissible_charge(r: int, k: int, l: int) -> bool:
    if r < 0:
        raise ValidationError(f"rank must be non-negative, got {r}")
    return 2 * k - l >= r and k - l >= 0


@dataclass(frozen=True)
class InstantonData:
    chern: ChernData
    stability: Stability = Stability.UNKNOWN
    gamma: int = 0
    locally_free: bool = True

    def __post_init__(self):
        d = self.chern
        if d.a != 0 or d.b != 0:
            raise ValidationError(f"instanton data needs c1 = 0, got ({d.a},{d.b})")
        if self.gamma < 0:
            raise ValidationError(f"gamma must be non-negative, got {self.gamma}")
        if not is_admissible_charge(d.r, d.k, d.l):
            raise ValidationError(
                f"charge ({d.k},{d.l}) is not admissible in rank {d.r}: need 2k-l >= r and k-l >= 0"
            )

    @classmethod
    def of_charge(cls, k: int, l: int, r: int = 2, m: int = 0, **kw) -> "InstantonData":
        return cls(ChernData(r, 0, 0, k, l, m), **kw)

    @property
    def rank(self) -> int:
        return self.chern.r

    @property
    def charge(self) -> tuple[int, int]:
        return (self.chern.k, self.chern.l)

    def with_charge(self, k: int, l: int, **kw) -> "InstantonData":
        return replace(self, chern=replace(self.chern, k=k, l=l), **kw)


@dataclass(frozen=True)
class MonadShape:
    """Multiplicities of the six monad summands.

    degree -1:  O(-1,1)^n1 + Omega^1(0,-1)^n2
    degree  0:  O(-1,1)^n3 + Omega^1(1,-1)^n4 + O(-1,0)^n5
    degree  1:  O^n6
    """

    n1: int
    n2: int
    n3: int
    n4: int
    n5: int
    n6: int

    def __iter__(self):
        return iter((self.n1, self.n2, self.n3, self.n4, self.n5, self.n6))

    def rank(self) -> int:
        return (self.n3 + 2 * self.n4 + self.n5) - (self.n1 + 2 * self.n2) - self.n6

    def terms(self) -> dict[int, list[tuple[str, TwistDescriptor, int]]]:
        return {
            -1: [("O", T(-1, 1), self.n1), ("Omega1", T(0, -1), self.n2)],
            0: [("O", T(-1, 1), self.n3), ("Omega1", T(1, -1), self.n4), ("O", T(-1, 0), self.n5)],
            1: [("O", T(0, 0), self.n6)],
        }

    def as_dict(self) -> dict:
        return {
            "O(-1,1)[-1]": self.n1,
            "Omega1(0,-1)[-1]": self.n2,
            "O(-1,1)[0]": self.n3,
            "Omega1(1,-1)[0]": self.n4,
            "O(-1,0)[0]": self.n5,
            "O[1]": self.n6,
        }


def monad_shape(d: InstantonData) -> MonadShape:
    r, (k, l), g = d.rank, d.charge, d.gamma
    if not is_admissible_charge(r, k, l):
        raise ValidationError(f"charge ({k},{l}) is not admissible in rank {r}")
    return MonadShape(l + g, k - l, g, k, 2 * (k - l), 2 * k - l - r)


def _term_character(kind: str, t: TwistDescriptor) -> ChowClass:
    ch = exp(ChowClass.divisor(t.p, t.q))
    return OMEGA_CHARACTER * ch if kind == "Omega1" else ch


def monad_chern_character(s: MonadShape) -> ChowClass:
    """ch(M^0) - ch(M^-1) - ch(M^1), expanded in the Chow ring."""
    total = ChowClass()
    for deg, terms in s.terms().items():
        sign = 1 if deg == 0 else -1
        for kind, t, n in terms:
            total = total + _term_character(kind, t) * (sign * n)
    return total


def monad_chern_check(d: InstantonData, s: MonadShape) -> bool:
    """Whether the monad's alternating Chern character is that of d (with c3 = 0)."""
    return monad_chern_character(s) == chern_character(replace(d.chern, m=0))


# -- the defining vanishing list ---------------------------------------------

DEFINITION_ITEMS: tuple[tuple[str, str, TwistDescriptor, int], ...] = (
    ("i", "h0(F)", T(0, 0), 0),
    ("i", "h3(F(-4,1))", T(-4, 1), 3),
    ("ii", "h1(F(-2,1))", T(-2, 1), 1),
    ("ii", "h2(F(-2,1))", T(-2, 1), 2),
    ("iii", "h2(F(0,-1))", T(0, -1), 2),
    ("iii", "h2(F(-1,1))", T(-1, 1), 2),
)
DEFINITION_TWISTS = tuple(dict.fromkeys(t for _, _, t, _ in DEFINITION_ITEMS))

PartialTable = Mapping[str, int]


def table_entry(tables: Mapping, t: TwistDescriptor, i: int) -> Optional[int]:
    """h^i at twist t, or None when the caller did not supply it."""
    tab = tables.get(t)
    if tab is None:
        return None
    if isinstance(tab, CohomTable):
        return tab[i]
    return tab.get(f"h{i}")


@dataclass(frozen=True)
class ChecklistReport:
    items: tuple[tuple[str, str, Verdict], ...]
    chi_minus_2_1: int
    chi_check: Verdict

    def item_verdict(self, item: str) -> Verdict:
        vs = [v for it, _, v in self.items if it == item]
        if Verdict.FAIL in vs:
            return Verdict.FAIL
        if Verdict.UNKNOWN in vs:
            return Verdict.UNKNOWN
        return Verdict.PASS

    @property
    def verdict(self) -> Verdict:
        vs = [self.item_verdict(i) for i in ("i", "ii", "iii")] + [self.chi_check]
        if Verdict.FAIL in vs:
            return Verdict.FAIL
        if Verdict.UNKNOWN in vs:
            return Verdict.UNKNOWN
        return Verdict.PASS

    def as_dict(self) -> dict:
        return {
            "checks": [
                {"item": it, "vanishing": name, "verdict": v.value} for it, name, v in self.items
            ],
            "items": {i: self.item_verdict(i).value for i in ("i", "ii", "iii")},
            "chi(F(-2,1))": self.chi_minus_2_1,
            "chi_check": self.chi_check.value,
            "verdict": self.verdict.value,
        }


def definition_checklist(d: InstantonData, tables: Mapping) -> ChecklistReport:
    """Evaluate the defining vanishings on supplied cohomology tables.

    ``tables`` maps twists to a :class:`CohomTable` or a partial mapping such
    as ``{"h1": 0, "h2": 0}``.  Missing entries give ``Verdict.UNKNOWN``.
    """
    items = []
    for item, name, t, i in DEFINITION_ITEMS:
        h = table_entry(tables, t, i)
        items.append((item, name, Verdict.of(None if h is None else h == 0)))
    chi = euler_characteristic(d.chern, T(-2, 1))
    return ChecklistReport(tuple(items), chi, Verdict.of(chi == 0))


def instanton_vanishing_tables() -> dict[TwistDescriptor, dict]:
    """The entries every instanton has by definition; all other entries unknown."""
    out: dict[TwistDescriptor, dict] = {}
    for _, _, t, i in DEFINITION_ITEMS:
        out.setdefault(t, {})[f"h{i}"] = 0
    return out


# -- rank-zero instantons ----------------------------------------------------


def rank0_instanton_check(profile: CurveProfile, degrees: Sequence[int]) -> bool:
    """h0 = h1 = 0 for Q(-2,1), Q a line bundle of the given degrees on rational lines."""
    degrees = tuple(degrees)
    if len(degrees) != len(profile):
        raise ValidationError(f"{len(degrees)} degrees given for {len(profile)} components")
    for c, deg in zip(profile, degrees):
        if c.genus != 0:
            raise ValidationError(f"component {c} is not rational")
        if deg + restriction_degree(c, T(-2, 1)) != -1:
            return False
    return True
