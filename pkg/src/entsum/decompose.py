"""Layer-cake representation and the triangle/square split.

Every mass function is a nonnegative combination of indicators of nested
prefixes of its value-descending ordering.  Collecting the odd-size prefixes
yields a triangle-regular part, the even-size prefixes a square-regular part,
and the two sum back to the original exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import NonnegFn
from .rearrange import OrderedIndexSet, canonical_ordering


@dataclass(frozen=True)
class LayerCake:
    """Positive coefficients on nested ordering prefixes, reconstructing f."""

    ordering: OrderedIndexSet
    layers: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def reconstruct(self) -> NonnegFn:
        acc: dict[int, Fraction] = {}
        for coeff, prefix in self.layers:
            for i in prefix:
                acc[i] = acc.get(i, Fraction(0)) + coeff
        return NonnegFn(self.ordering.domain, acc)


@dataclass(frozen=True)
class Decomposition:
    triangle: NonnegFn
    square: NonnegFn
    ordering: OrderedIndexSet


def layer_cake(f: NonnegFn, ordering: OrderedIndexSet | None = None) -> LayerCake:
    """Write f as a sum of prefix-set indicators with positive coefficients.

    The r-th coefficient is the drop from the r-th to the (r+1)-th largest
    value; zero drops are omitted, so ties never create layers.
    """
    if ordering is None:
        ordering = canonical_ordering(f)
    support_prefix = [i for i in ordering.indices if f[i] > 0]
    vals = [f[i] for i in support_prefix]
    layers = []
    for r in range(1, len(vals) + 1):
        coeff = vals[r - 1] - (vals[r] if r < len(vals) else Fraction(0))
        if coeff:
            layers.append((coeff, tuple(support_prefix[:r])))
    return LayerCake(ordering, tuple(layers))


def decompose(f: NonnegFn, ordering: OrderedIndexSet | None = None) -> Decomposition:
    """Split f into triangle-regular + square-regular shape-equivalent parts.

    Odd-size layers feed the triangle part, even-size layers the square part.
    The split is independent of how ties were broken in the ordering, because
    tied values only ever contribute zero-coefficient layers.
    """
    cake = layer_cake(f, ordering)
    tri: dict[int, Fraction] = {}
    sq: dict[int, Fraction] = {}
    for coeff, prefix in cake.layers:
        target = tri if len(prefix) % 2 == 1 else sq
        for i in prefix:
            target[i] = target.get(i, Fraction(0)) + coeff
    return Decomposition(
        NonnegFn(f.domain, tri), NonnegFn(f.domain, sq), cake.ordering
    )
