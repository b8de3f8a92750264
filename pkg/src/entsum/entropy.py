"""Renyi entropies, entropy power, majorization, convex functional sums.

Mass values stay exact rationals all the way to the final log/exp, which is
the only place floating point enters.  Order comparisons that back inequality
verdicts (majorization) are decided on exact rationals, never on floats.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import NonnegFn, common_domain

LN2 = math.log(2)


@dataclass(frozen=True)
class Alpha:
    """Entropy order: 0, 1, infinity, or a finite positive rational != 1."""

    kind: str  # "zero" | "one" | "infinity" | "finite"
    value: Fraction | None = None

    @classmethod
    def zero(cls) -> "Alpha":
        return cls("zero")

    @classmethod
    def one(cls) -> "Alpha":
        return cls("one")

    @classmethod
    def infinity(cls) -> "Alpha":
        return cls("infinity")

    @classmethod
    def finite(cls, value) -> "Alpha":
        v = Fraction(value)
        if v <= 0 or v == 1:
            raise ValueError(f"finite order must be positive and != 1, got {v}")
        return cls("finite", v)

    @classmethod
    def of(cls, x: Union["Alpha", int, float, Fraction, str]) -> "Alpha":
        """Coerce a number or string ("0", "1", "inf", "1/2", ...) to an Alpha."""
        if isinstance(x, Alpha):
            return x
        if isinstance(x, str):
            s = x.strip().lower()
            if s in ("inf", "infinity", "oo"):
                return cls.infinity()
            x = Fraction(s)
        if isinstance(x, float) and math.isinf(x):
            return cls.infinity()
        v = Fraction(x)
        if v == 0:
            return cls.zero()
        if v == 1:
            return cls.one()
        return cls.finite(v)

    def __str__(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "one":
            return "1"
        if self.kind == "infinity":
            return "inf"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _ln(q: Fraction) -> float:
    # math.log takes arbitrary-size ints exactly, so split the fraction.
    return math.log(q.numerator) - math.log(q.denominator)


def renyi(f: NonnegFn, order) -> float:
    """Renyi entropy of the given order, in nats.

    Order 0 is the log of the support size, order infinity the negative log
    of the exact maximum value, order 1 the Shannon entropy.  Finite integer
    orders sum powers exactly before taking the log; fractional orders go
    through float powers of the exact values.
    """
    a = Alpha.of(order)
    if a.kind == "zero":
        return math.log(len(f))
    if a.kind == "infinity":
        return -_ln(f.max_value())
    if a.kind == "one":
        return -math.fsum(float(v) * _ln(v) for v in f.values())
    alpha = a.value
    if alpha.denominator == 1:
        s = sum(v ** alpha.numerator for v in f.values())
        return _ln(s) / (1 - alpha.numerator)
    af = float(alpha)
    s = math.fsum(math.exp(af * _ln(v)) for v in f.values())
    return math.log(s) / (1 - af)


def entropy_power(f: NonnegFn) -> float:
    """exp(2 H(X)) for the Shannon entropy H."""
    return math.exp(2 * renyi(f, Alpha.one()))


class Maj(enum.Enum):
    MAJORIZED = "majorized"
    WEAKLY_MAJORIZED = "weakly_majorized"
    NOT_MAJORIZED = "not_majorized"


@dataclass(frozen=True)
class MajorizationVerdict:
    tag: Maj
    failing_prefix: int | None = None

    @property
    def is_majorized(self) -> bool:
        return self.tag is Maj.MAJORIZED

    @property
    def holds_weakly(self) -> bool:
        return self.tag is not Maj.NOT_MAJORIZED


def majorizes(f: NonnegFn, g: NonnegFn) -> MajorizationVerdict:
    """Exact prefix-sum comparison of the sorted-descending values.

    MAJORIZED needs every prefix of f dominated by g's plus exact equality of
    the totals; WEAKLY_MAJORIZED drops the total equality.  The first failing
    prefix (1-based) is reported otherwise.
    """
    common_domain([f, g])
    fv = sorted(f.values(), reverse=True)
    gv = sorted(g.values(), reverse=True)
    n = max(len(fv), len(gv))
    sf = Fraction(0)
    sg = Fraction(0)
    for r in range(n):
        sf += fv[r] if r < len(fv) else 0
        sg += gv[r] if r < len(gv) else 0
        if sf > sg:
            return MajorizationVerdict(Maj.NOT_MAJORIZED, failing_prefix=r + 1)
    return MajorizationVerdict(Maj.MAJORIZED if sf == sg else Maj.WEAKLY_MAJORIZED)


@dataclass(frozen=True)
class PowerConvex:
    """phi(x) = x**alpha with alpha > 1."""

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 1:
            raise ValueError("PowerConvex needs alpha > 1")


@dataclass(frozen=True)
class NegPower:
    """phi(x) = -x**alpha with 0 < alpha < 1."""

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if not 0 < self.alpha < 1:
            raise ValueError("NegPower needs 0 < alpha < 1")


@dataclass(frozen=True)
class XLogX:
    """phi(x) = x log x (and phi(0) = 0)."""


ConvexPhi = Union[PowerConvex, NegPower, XLogX]


def convex_sum(f: NonnegFn, phi: ConvexPhi) -> float:
    """Sum of phi over the support; zeros contribute nothing since phi(0)=0."""
    if isinstance(phi, XLogX):
        return math.fsum(float(v) * _ln(v) for v in f.values())
    af = float(phi.alpha)
    s = math.fsum(math.exp(af * _ln(v)) for v in f.values())
    return -s if isinstance(phi, NegPower) else s


def to_bits(nats: float) -> float:
    """Display conversion; the library computes in nats throughout."""
    return nats / LN2
