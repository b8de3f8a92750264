"""Extremal lower-bound distribution for entropies of convolutions.

Split every factor into its triangle and square parts, expand the
convolution of the sums into 2^n summands, rearrange each part center-out
(triangle parts symmetric, square parts alternating between the two walks so
the running balance stays in {0, +1}), and add everything back up.  The
result is majorized by the true convolution, hence has no larger Renyi
entropy at any order, and it does not depend on which valid sign alternation
was used.

Two routes compute it: the literal 2^n enumeration (reference) and a dynamic
program over the number of square parts (scalable), which must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .convolve import convolve, convolve_many
from .core import NonnegFn, Pmf, common_domain, delta, translate
from .decompose import decompose
from .entropy import Alpha, MajorizationVerdict, majorizes, renyi
from .errors import (
    InternalShapeViolation,
    IrregularFactor,
    MajorizationFailure,
    TooManyFactors,
)
from .rearrange import Regularity, Sign, descends_along, rearrange

MAX_REFERENCE_FACTORS = 16


@dataclass(frozen=True)
class SignAssignment:
    """Per-factor signs for one summand; balance is the running square-part
    tally and must land in {0, +1}."""

    signs: tuple[Sign, ...]
    balance: int


def assign_signs(parts: Sequence[Regularity]) -> SignAssignment:
    """STAR for triangle parts; square parts alternate PLUS, MINUS, PLUS, ...

    With m square parts the balance is m mod 2, always 0 or +1.
    """
    signs = []
    squares = 0
    for reg in parts:
        if reg is Regularity.TRIANGLE:
            signs.append(Sign.STAR)
        elif reg is Regularity.SQUARE:
            signs.append(Sign.PLUS if squares % 2 == 0 else Sign.MINUS)
            squares += 1
        else:
            raise IrregularFactor(f"cannot assign a sign to {reg}")
    return SignAssignment(tuple(signs), squares % 2)


def _split_factors(fs: Sequence[Pmf]):
    """Per factor: (triangle part rearranged, square part in both walks)."""
    out = []
    for f in fs:
        d = decompose(f)
        tri = None if d.triangle.is_zero else rearrange(d.triangle, Sign.PLUS)
        if d.square.is_zero:
            sq_plus = sq_minus = None
        else:
            sq_plus = rearrange(d.square, Sign.PLUS)
            sq_minus = rearrange(d.square, Sign.MINUS)
        out.append((tri, sq_plus, sq_minus))
    return out


def _accumulate(acc: dict[int, Fraction], g: NonnegFn) -> None:
    for i, v in g.mapping().items():
        acc[i] = acc.get(i, Fraction(0)) + v


def _reference(fs: Sequence[Pmf], plus_first: bool = True) -> Pmf:
    dom = common_domain(fs)
    if len(fs) > MAX_REFERENCE_FACTORS:
        raise TooManyFactors(
            f"reference enumeration capped at {MAX_REFERENCE_FACTORS} factors; "
            "use the dynamic-programming route"
        )
    parts = _split_factors(fs)
    lead_sign = Sign.PLUS if plus_first else Sign.MINUS
    acc: dict[int, Fraction] = {}
    for choice in product((0, 1), repeat=len(fs)):
        factors = []
        squares = 0
        for (tri, sq_plus, sq_minus), pick_square in zip(parts, choice):
            if pick_square:
                first, second = (sq_plus, sq_minus) if plus_first else (sq_minus, sq_plus)
                part = first if squares % 2 == 0 else second
                squares += 1
            else:
                part = tri
            if part is None:
                factors = None
                break
            factors.append(part)
        if factors is None:
            continue
        summand = convolve_many(factors)
        if not descends_along(summand, lead_sign):
            raise InternalShapeViolation(
                "summand is not monotone along the leading center-out walk"
            )
        _accumulate(acc, summand)
    return Pmf(dom, acc)


def extremal_distribution(fs: Sequence[Pmf]) -> Pmf:
    """Reference 2^n-summand construction of the lower-bound distribution."""
    return _reference(fs, plus_first=True)


def extremal_distribution_fast(fs: Sequence[Pmf]) -> Pmf:
    """Dynamic program equal to :func:`extremal_distribution` exactly.

    Group summands by their number m of square parts.  Within a group, every
    square part may be taken in the plus walk; the alternating-sign summand
    is then the all-plus convolution shifted toward the center by floor(m/2).
    States R[m] accumulate the all-plus convolutions factor by factor:

        R'[m] = R[m] * triangle_part  +  R[m-1] * square_part_plus

    and the answer is sum over m of R[m] translated by floor(m/2).
    """
    dom = common_domain(fs)
    parts = _split_factors(fs)
    states: dict[int, NonnegFn] = {0: delta(dom, 0)}
    for tri, sq_plus, _ in parts:
        nxt: dict[int, NonnegFn] = {}

        def _put(m: int, g: NonnegFn) -> None:
            nxt[m] = nxt[m] + g if m in nxt else g

        for m, r in states.items():
            if tri is not None:
                _put(m, convolve(r, tri))
            if sq_plus is not None:
                _put(m + 1, convolve(r, sq_plus))
        states = nxt
    acc: dict[int, Fraction] = {}
    for m, r in states.items():
        _accumulate(acc, translate(r, dom.reduce(m // 2)))
    return Pmf(dom, acc)


@dataclass(frozen=True)
class BoundReport:
    """Both sides of the lower bound with the exact majorization verdict."""

    lhs: Pmf
    extremal: Pmf
    majorization: MajorizationVerdict
    entropies: dict[Alpha, tuple[float, float]]


def verify_main_inequality(fs: Sequence[Pmf], alphas: Sequence) -> BoundReport:
    """Convolve the inputs, build the extremal distribution, and certify
    majorization exactly; per-order entropy pairs are reported on top.

    The majorization can only fail through an implementation bug, so a
    failure raises rather than returning a report.
    """
    lhs = convolve_many(fs)
    ext = extremal_distribution_fast(fs)
    verdict = majorizes(lhs, ext)
    if not verdict.is_majorized:
        raise MajorizationFailure(
            f"convolution not majorized by extremal (prefix {verdict.failing_prefix})"
        )
    pairs: dict[Alpha, tuple[float, float]] = {}
    for a in alphas:
        alpha = Alpha.of(a)
        pairs[alpha] = (renyi(lhs, alpha), renyi(ext, alpha))
    return BoundReport(lhs, ext, verdict, pairs)
