"""Center-out rearrangements, regularity classification, shape equivalence.

The two canonical index enumerations walk outward from 0, one visiting the
positive neighbor first (0, +1, -1, +2, -2, ...) and the other the negative
one (0, -1, +1, -2, +2, ...).  Rearranging a function drops its sorted values
along one of these walks, which makes it nearly symmetric and unimodal.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import Domain, NonnegFn, _same_kind
from .errors import DomainMismatch, IrregularInput, StarOnIrregular


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"
    STAR = "*"


class Regularity(enum.Enum):
    TRIANGLE = "triangle"
    SQUARE = "square"
    NEITHER = "neither"


def spiral_rank(i: int, sign: Sign = Sign.PLUS) -> int:
    """0-based position of index i in the center-out walk."""
    if sign is Sign.MINUS:
        i = -i
    if i == 0:
        return 0
    return 2 * i - 1 if i > 0 else -2 * i


def spiral_iter(domain: Domain, sign: Sign = Sign.PLUS) -> Iterator[int]:
    """Indices in center-out order; finite (length p) on a cyclic domain."""
    flip = -1 if sign is Sign.MINUS else 1
    yield 0
    top = domain.half if domain.is_cyclic else None
    for k in itertools.count(1):
        if top is not None and k > top:
            return
        yield flip * k
        yield -flip * k


def spiral_indices(domain: Domain, count: int, sign: Sign = Sign.PLUS) -> list[int]:
    """First ``count`` indices of the center-out walk."""
    return list(itertools.islice(spiral_iter(domain, sign), count))


@dataclass(frozen=True)
class OrderedIndexSet:
    """A value-descending index sequence; the full group on Z/pZ, the support
    on Z."""

    domain: Domain
    indices: tuple[int, ...]


def canonical_ordering(f: NonnegFn) -> OrderedIndexSet:
    """Value-descending ordering with ties broken by center-out position.

    The tie-break makes the plus-rearrangement a fixed point and every
    downstream construction reproducible.
    """
    dom = f.domain
    if dom.is_cyclic:
        candidates = range(-dom.half, dom.half + 1)
    else:
        candidates = f.indices()
    ordered = sorted(candidates, key=lambda i: (-f[i], spiral_rank(i)))
    return OrderedIndexSet(dom, tuple(ordered))


def _rearranged_values(f: NonnegFn, sign: Sign) -> dict[int, Fraction]:
    vals = sorted(f.values(), reverse=True)
    return dict(zip(spiral_indices(f.domain, len(vals), sign), vals))


def rearrange(f: NonnegFn, sign: Sign) -> NonnegFn:
    """Drop f's sorted values along the center-out walk given by ``sign``.

    The value multiset is preserved, so every Renyi entropy is too.  STAR is
    only defined when both walks would agree (triangle-regular input).
    """
    if sign is Sign.STAR:
        if classify_regularity(f) is not Regularity.TRIANGLE:
            raise StarOnIrregular(
                "symmetric rearrangement undefined: plus and minus forms differ"
            )
        sign = Sign.PLUS
    return _same_kind(f, f.domain, _rearranged_values(f, sign))


def classify_regularity(f: NonnegFn) -> Regularity:
    """TRIANGLE when both rearrangements coincide, SQUARE when they differ by
    a unit shift, NEITHER otherwise.

    Both conditions depend only on the multiset of values.  A constant
    function satisfies both; TRIANGLE takes precedence.
    """
    plus = _rearranged_values(f, Sign.PLUS)
    minus = _rearranged_values(f, Sign.MINUS)
    if plus == minus:
        return Regularity.TRIANGLE
    dom = f.domain
    shifted = {dom.reduce(j - 1): v for j, v in plus.items()}
    return Regularity.SQUARE if shifted == minus else Regularity.NEITHER


def shape_equivalent(f: NonnegFn, g: NonnegFn) -> bool:
    """True when some single value-descending ordering works for both.

    Equivalent pairwise criterion: no pair of indices on which f and g have
    strict preferences in opposite directions.
    """
    if f.domain != g.domain:
        raise DomainMismatch(f"{f.domain} vs {g.domain}")
    if f.domain.is_cyclic:
        idx = list(range(-f.domain.half, f.domain.half + 1))
    else:
        idx = sorted(set(f.indices()) | set(g.indices()))
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            df = (f[i] > f[j]) - (f[i] < f[j])
            dg = (g[i] > g[j]) - (g[i] < g[j])
            if df * dg == -1:
                return False
    return True


def bar_delta(f: NonnegFn, sign: Sign) -> int:
    """Balance contribution of one factor: 0 for triangle-regular, +1/-1 for a
    square-regular factor rearranged with PLUS/MINUS."""
    reg = classify_regularity(f)
    if reg is Regularity.TRIANGLE:
        return 0
    if reg is Regularity.SQUARE:
        if sign is Sign.STAR:
            raise StarOnIrregular("square-regular factor cannot carry STAR")
        return 1 if sign is Sign.PLUS else -1
    raise IrregularInput("factor is neither triangle- nor square-regular")


def descends_along(f: NonnegFn, sign: Sign) -> bool:
    """Check that values are nonincreasing along the center-out walk.

    Missing indices count as zero.  STAR requires both walks.  On the
    integers the walk is truncated just past the farthest support index,
    beyond which everything is zero.
    """
    if sign is Sign.STAR:
        return descends_along(f, Sign.PLUS) and descends_along(f, Sign.MINUS)
    if f.is_zero:
        return True
    dom = f.domain
    if dom.is_cyclic:
        count = dom.p
    else:
        count = max(spiral_rank(i, sign) for i in f.indices()) + 1
    prev = None
    for i in spiral_indices(dom, count, sign):
        v = f[i]
        if prev is not None and v > prev:
            return False
        prev = v
    return True
