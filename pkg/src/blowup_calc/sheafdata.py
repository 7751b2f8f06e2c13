"""Numerical Chern data of coherent sheaves on the blow-up.

A sheaf is recorded as ``(r, a, b, k, l, m)``: rank r, c1 = aH + bE,
c2 = kH^2 + lE^2 and c3 = m[pt].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chow import ChowClass, degree, exp, todd_class
from .errors import ParityError, ValidationError


@dataclass(frozen=True)
class TwistDescriptor:
    """The line bundle O(p, q) = O(pH + qE)."""

    p: int
    q: int

    def __add__(self, other: "TwistDescriptor") -> "TwistDescriptor":
        return TwistDescriptor(self.p + other.p, self.q + other.q)

    def __neg__(self) -> "TwistDescriptor":
        return TwistDescriptor(-self.p, -self.q)

    def __iter__(self):
        yield self.p
        yield self.q

    def __str__(self):
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class ChernData:
    r: int
    a: int = 0
    b: int = 0
    k: int = 0
    l: int = 0
    m: int = 0
    # exploratory inputs may skip the parity check
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        for name in ("r", "a", "b", "k", "l", "m"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise ValidationError(f"{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.r < 0:
            raise ValidationError(f"rank must be non-negative, got {self.r}")
        if self.check and not is_parity_consistent(self):
            raise ParityError(
                f"m = {self.m} violates m = k(a+4) - l(b-6) mod 2 for {self.as_dict()}"
            )

    @property
    def c1(self) -> ChowClass:
        return ChowClass.divisor(self.a, self.b)

    @property
    def c2(self) -> ChowClass:
        return ChowClass.codim2(self.k, self.l)

    def as_dict(self) -> dict:
        return {"r": self.r, "a": self.a, "b": self.b, "k": self.k, "l": self.l, "m": self.m}


def structure_sheaf() -> ChernData:
    return ChernData(1)


def line_bundle(t: TwistDescriptor) -> ChernData:
    return ChernData(1, t.p, t.q)


def chern_character(d: ChernData) -> ChowClass:
    """ch = r + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6."""
    c1, c2 = d.c1, d.c2
    ch3 = (degree(c1 * c1 * c1) - 3 * degree(c1 * c2) + 3 * d.m) / 6
    return ChowClass.scalar(d.r) + c1 + (c1 * c1 - 2 * c2) * Fraction(1, 2) + ChowClass.point(ch3)


def from_chern_character(ch: ChowClass, check: bool = True) -> ChernData:
    """Inverse of :func:`chern_character`; raises if the data is not integral."""
    r, a, b = ch.deg0, ch.degH, ch.degE
    k = a * a / 2 - ch.degH2
    l = b * b / 2 - ch.degE2
    c1 = ChowClass.divisor(a, b)
    c2 = ChowClass.codim2(k, l)
    m = 2 * ch.degPt - (degree(c1 * c1 * c1) - 3 * degree(c1 * c2)) / 3
    values = (r, a, b, k, l, m)
    if any(v.denominator != 1 for v in values):
        raise ValidationError(f"Chern character {ch} has non-integral Chern classes")
    return ChernData(*(int(v) for v in values), check=check)


def chi_line_bundle(t: TwistDescriptor) -> int:
    p, q = t.p, t.q
    num = (p + 1) * (p + 2) * (p + 3) + q * (q - 1) * (q - 2)
    assert num % 6 == 0
    return num // 6


def euler_fraction(d: ChernData, t: TwistDescriptor) -> Fraction:
    """chi(F(p, q)) as an exact rational, without the integrality check."""
    r, a, b, k, l, m = d.r, d.a, d.b, d.k, d.l, d.m
    p, q = t.p, t.q
    return (
        r * chi_line_bundle(t)
        + chi_line_bundle(TwistDescriptor(a, b))
        - 1
        + Fraction(3 * m - 3 * k * (a + 4) - 3 * l * (b - 2), 6)
        + Fraction(a * p * (p + a + 4) + b * q * (q + b - 2) - 2 * (k * p + l * q), 2)
    )


def euler_characteristic(d: ChernData, t: TwistDescriptor = TwistDescriptor(0, 0)) -> int:
    chi = euler_fraction(d, t)
    if chi.denominator != 1:
        raise ParityError(f"non-integral Euler characteristic {chi} for {d.as_dict()} twisted by {t}")
    return int(chi)


def hrr_euler(d: ChernData, t: TwistDescriptor = TwistDescriptor(0, 0)) -> Fraction:
    """chi(F(p, q)) via Hirzebruch-Riemann-Roch in the Chow ring."""
    return degree(chern_character(d) * exp(ChowClass.divisor(t.p, t.q)) * todd_class())


def twist(d: ChernData, t: TwistDescriptor) -> ChernData:
    """Chern data of F(p, q), computed as ch(F) * ch(O(p, q))."""
    if t.p == 0 and t.q == 0:
        return d
    ch = chern_character(d) * exp(ChowClass.divisor(t.p, t.q))
    return from_chern_character(ch, check=d.check)


def dual_rank2(d: ChernData) -> ChernData:
    if d.r != 2:
        raise ValidationError(f"dual_rank2 needs rank 2, got rank {d.r}")
    return ChernData(2, -d.a, -d.b, d.k, d.l, d.m, check=d.check)


def is_parity_consistent(d: ChernData) -> bool:
    return (d.m - d.k * (d.a + 4) + d.l * (d.b - 6)) % 2 == 0


def locally_free_verdict_reflexive_rank2(d: ChernData) -> bool:
    """For data of a rank-2 reflexive sheaf: locally free iff c3 vanishes."""
    if d.r != 2:
        raise ValidationError(f"the reflexive criterion is for rank 2, got rank {d.r}")
    return d.m == 0
