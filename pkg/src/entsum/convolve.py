"""Exact convolution on Z/pZ and Z.

Schoolbook products over the supports, run on integer numerators over a
common denominator so the rational bookkeeping stays cheap; cyclic indices
wrap straight into the centered range.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .core import NonnegFn, Pmf, common_domain


def _int_form(f: NonnegFn) -> tuple[list[tuple[int, int]], int]:
    den = 1
    for v in f.values():
        den = lcm(den, v.denominator)
    return [(i, v.numerator * (den // v.denominator)) for i, v in f.items()], den


def convolve(f: NonnegFn, g: NonnegFn) -> NonnegFn:
    """f*g(k) = sum over i+j=k of f(i)g(j); total mass multiplies."""
    dom = common_domain([f, g])
    fi, df = _int_form(f)
    gi, dg = _int_form(g)
    acc: dict[int, int] = {}
    if dom.is_cyclic:
        p, h = dom.p, dom.half
        for i, a in fi:
            for j, b in gi:
                k = i + j
                if k > h:
                    k -= p
                elif k < -h:
                    k += p
                acc[k] = acc.get(k, 0) + a * b
    else:
        for i, a in fi:
            for j, b in gi:
                acc[i + j] = acc.get(i + j, 0) + a * b
    den = df * dg
    values = {k: Fraction(n, den) for k, n in acc.items() if n}
    kind = Pmf if isinstance(f, Pmf) and isinstance(g, Pmf) else NonnegFn
    return kind(dom, values)


def convolve_many(fs: Sequence[NonnegFn]) -> NonnegFn:
    """Left fold of convolve over a nonempty sequence."""
    common_domain(fs)
    out = fs[0]
    for g in fs[1:]:
        out = convolve(out, g)
    return out
