"""Exact arithmetic in the Chow ring of the blow-up of P^3 at a point.

The ring is Z[E, H] / (E.H, E^3 - H^3).  A class is stored by its six
coefficients in the basis

    1,  H, E,  H^2, E^2,  [pt] = H^3

with ``E . E^2 = eps [pt]``.  The sign ``eps`` is a process-wide setting
(default +1, the relation E^3 = H^3 read literally); see :func:`set_epsilon`.
"""

from __future__ import annotations

import re
import threading
from contextlib import contextmanager
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterator, Union

Number = Union[int, Fraction]

_eps_lock = threading.Lock()
_EPSILON = 1


def get_epsilon() -> int:
    return _EPSILON


def set_epsilon(value: int) -> None:
    """Set deg(E^3).  Only +1 and -1 are meaningful."""
    global _EPSILON
    value = int(value)
    if value not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {value}")
    with _eps_lock:
        _EPSILON = value


@contextmanager
def epsilon_override(value: int) -> Iterator[None]:
    old = get_epsilon()
    set_epsilon(value)
    try:
        yield
    finally:
        set_epsilon(old)


def _q(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


@dataclass(frozen=True)
class ChowClass:
    deg0: Fraction = Fraction(0)
    degH: Fraction = Fraction(0)
    degE: Fraction = Fraction(0)
    degH2: Fraction = Fraction(0)
    degE2: Fraction = Fraction(0)
    degPt: Fraction = Fraction(0)

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, _q(getattr(self, f.name)))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return (self.deg0, self.degH, self.degE, self.degH2, self.degE2, self.degPt)

    @classmethod
    def scalar(cls, c: Number) -> "ChowClass":
        return cls(deg0=c)

    @classmethod
    def divisor(cls, a: Number, b: Number) -> "ChowClass":
        return cls(degH=a, degE=b)

    @classmethod
    def codim2(cls, s: Number, t: Number) -> "ChowClass":
        return cls(degH2=s, degE2=t)

    @classmethod
    def point(cls, u: Number = 1) -> "ChowClass":
        return cls(degPt=u)

    def part(self, codim: int) -> "ChowClass":
        """Homogeneous component of the given codimension."""
        c = self.coefficients
        keep = {0: (0,), 1: (1, 2), 2: (3, 4), 3: (5,)}[codim]
        return ChowClass(*(c[i] if i in keep else 0 for i in range(6)))

    def _coerce(self, other) -> "ChowClass":
        if isinstance(other, ChowClass):
            return other
        if isinstance(other, (int, Fraction)):
            return ChowClass.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ChowClass(*(x + y for x, y in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return ChowClass(*(-x for x in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        x0, xh, xe, xh2, xe2, xp = self.coefficients
        y0, yh, ye, yh2, ye2, yp = other.coefficients
        eps = get_epsilon()
        # H.E = 0, H.E^2 = E.H^2 = 0, H.H^2 = [pt], E.E^2 = eps [pt]
        return ChowClass(
            x0 * y0,
            x0 * yh + xh * y0,
            x0 * ye + xe * y0,
            x0 * yh2 + xh2 * y0 + xh * yh,
            x0 * ye2 + xe2 * y0 + xe * ye,
            x0 * yp + xp * y0 + xh * yh2 + xh2 * yh + eps * (xe * ye2 + xe2 * ye),
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        return format_class(self)


ZERO = ChowClass()
ONE = ChowClass(deg0=1)
H = ChowClass(degH=1)
E = ChowClass(degE=1)
H2 = ChowClass(degH2=1)
E2 = ChowClass(degE2=1)
PT = ChowClass(degPt=1)


def add(x: ChowClass, y: ChowClass) -> ChowClass:
    return x + y


def mul(x: ChowClass, y: ChowClass) -> ChowClass:
    return x * y


def degree(x: ChowClass) -> Fraction:
    """Integral over the threefold: the coefficient of [pt]."""
    return x.degPt


def exp(x: ChowClass) -> ChowClass:
    """Exponential of a class with vanishing degree-0 part."""
    if x.deg0 != 0:
        raise ValueError("exp is only defined for nilpotent classes")
    x2 = x * x
    return ONE + x + x2 * Fraction(1, 2) + x2 * x * Fraction(1, 6)


def todd_class() -> ChowClass:
    """Todd class of the blow-up.

    The codimension-1 part is half the anticanonical class 4H - 2E; the
    higher terms are the unique values for which ``degree(exp(pH+qE) * Td)``
    equals chi(O(p, q)) for every p, q (with eps = +1).
    """
    return ChowClass(1, 2, -1, Fraction(11, 6), Fraction(1, 3), 1)


CANONICAL = ChowClass.divisor(-4, 2)


# -- textual notation ------------------------------------------------------

_BASIS = ("", "H", "E", "H2", "E2", "P")
_TERM = re.compile(
    r"""\s*([+-])?\s*                # sign
        (\d+(?:/\d+)?)?\s*\*?\s*     # optional rational coefficient
        (H2|E2|H|E|P)?\s*            # optional basis element
    """,
    re.VERBOSE,
)


def parse_class(text: str) -> ChowClass:
    """Parse ``"r + a H + b E + s H2 + t E2 + u P"``; omitted terms are zero."""
    coeffs = [Fraction(0)] * 6
    pos, s = 0, text.strip()
    if not s:
        raise ValueError("empty class literal")
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, basis = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (num is None and basis is None):
            raise ValueError(f"malformed class literal at {s[pos:]!r}")
        if sign is None and not first:
            raise ValueError(f"missing operator before {s[pos:]!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        coeffs[_BASIS.index(basis or "")] += c
        pos, first = m.end(), False
    return ChowClass(*coeffs)


def format_class(x: ChowClass) -> str:
    parts = []
    for c, b in zip(x.coefficients, _BASIS):
        if c == 0:
            continue
        mag = abs(c)
        if b and mag == 1:
            body = b
        else:
            body = f"{mag} {b}".strip()
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
