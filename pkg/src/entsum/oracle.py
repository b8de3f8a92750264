"""Brute-force certifiers, kept independent of the constructions they check.

The permutation search minimizes the entropy of a convolution over all
measure-preserving relabelings of both operands; the enumeration oracles
recompute small-ball probabilities and extremal equalities from scratch.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .applications import LinearForm
from .convolve import convolve_many
from .core import Domain, Pmf, common_domain
from .entropy import Alpha, majorizes
from .errors import DomainTooLarge, TooManyOutcomes
from .extremal import extremal_distribution, extremal_distribution_fast
from .rearrange import spiral_rank
from .sampling import random_pmf

MAX_PERMUTATION_P = 7
MAX_BRUTE_OUTCOMES = 10**6


@dataclass(frozen=True)
class PermutationPair:
    """Two measure-preserving relabelings, as index -> index bijections."""

    first: dict[int, int]
    second: dict[int, int]


def _entropy_of_values(values: Sequence[float], a: Alpha) -> float:
    if a.kind == "zero":
        return math.log(sum(1 for v in values if v > 0))
    if a.kind == "infinity":
        return -math.log(max(values))
    if a.kind == "one":
        return -math.fsum(v * math.log(v) for v in values if v > 0)
    af = float(a.value)
    return math.log(math.fsum(v**af for v in values if v > 0)) / (1 - af)


def _value_tuple(f: Pmf) -> tuple[float, ...]:
    h = f.domain.half
    return tuple(float(f[i]) for i in range(-h, h + 1))


def _rotation_rep(arr: tuple[float, ...]) -> tuple[float, ...]:
    p = len(arr)
    return min(tuple(arr[(j + c) % p] for j in range(p)) for c in range(p))


def _cyclic_convolve(u: Sequence[float], v: Sequence[float]) -> list[float]:
    p = len(u)
    out = [0.0] * p
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[(i + j) % p] += a * b
    return out


def _bijection_to(f: Pmf, arrangement: tuple[float, ...]) -> dict[int, int]:
    """Match f's indices to the arrangement's, pairing equal values by
    center-out position on both sides."""
    h = f.domain.half
    idx = range(-h, h + 1)
    src = sorted(idx, key=lambda i: (-f[i], spiral_rank(i)))
    dst = sorted(
        idx, key=lambda i: (-arrangement[i + h], spiral_rank(i))
    )
    return dict(zip(src, dst))


def min_entropy_over_permutations(
    f: Pmf, g: Pmf, order
) -> tuple[float, PermutationPair]:
    """Global minimum of the entropy of the convolution over all pairs of
    measure-preserving maps applied to the two operands.

    Only the value arrangements matter, so the search runs over distinct
    arrangements of each value multiset; the first operand is additionally
    reduced to one representative per translation orbit, which leaves the
    minimum unchanged because translating one operand translates the
    convolution.  Ties go to the first pair in sorted arrangement order.
    """
    dom = common_domain([f, g])
    if not dom.is_cyclic or dom.p > MAX_PERMUTATION_P:
        raise DomainTooLarge(
            f"exhaustive permutation search limited to cyclic p <= {MAX_PERMUTATION_P}"
        )
    a = Alpha.of(order)
    f_reps = sorted(
        {
            arr
            for arr in set(permutations(_value_tuple(f)))
            if arr == _rotation_rep(arr)
        }
    )
    g_all = sorted(set(permutations(_value_tuple(g))))
    best: tuple[float, tuple, tuple] | None = None
    for u in f_reps:
        for v in g_all:
            h = _entropy_of_values(_cyclic_convolve(u, v), a)
            if best is None or h < best[0]:
                best = (h, u, v)
    assert best is not None
    return best[0], PermutationPair(
        _bijection_to(f, best[1]), _bijection_to(g, best[2])
    )


@dataclass
class ExtremalCheck:
    trials: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_extremal_instance(fs: Sequence[Pmf]) -> str | None:
    """None when the two extremal routes agree exactly and the convolution is
    majorized; otherwise a short description of what broke."""
    reference = extremal_distribution(fs)
    fast = extremal_distribution_fast(fs)
    if reference != fast:
        return "reference and dynamic-programming routes disagree"
    verdict = majorizes(convolve_many(fs), reference)
    if not verdict.is_majorized:
        return f"majorization failed at prefix {verdict.failing_prefix}"
    return None


def brute_extremal_check(
    fs: Sequence[Pmf] | None = None,
    trials: int = 100,
    *,
    domain: Domain | None = None,
    n: int = 2,
    max_denominator: int = 16,
    seed: int = 0,
) -> ExtremalCheck:
    """Certify extremal equality and majorization on an explicit instance
    and/or a stream of seeded random instances."""
    report = ExtremalCheck()
    if fs is not None:
        domain = common_domain(fs)
        n = len(fs)
        report.trials += 1
        issue = check_extremal_instance(fs)
        if issue:
            report.failures.append(f"explicit instance: {issue}")
    if domain is None:
        raise ValueError("need an explicit instance or a domain")
    rng = random.Random(seed)
    while report.trials < trials:
        instance = [random_pmf(rng, domain, max_denominator) for _ in range(n)]
        report.trials += 1
        issue = check_extremal_instance(instance)
        if issue:
            report.failures.append(f"trial {report.trials}: {issue}")
    return report


def brute_small_ball(form: LinearForm) -> Fraction:
    """Largest point probability of the weighted sum by enumerating every
    outcome tuple (depth-first, with running numerator products over one
    common denominator)."""
    size = 1
    for f in form.factors:
        size *= len(f)
    if size > MAX_BRUTE_OUTCOMES:
        raise TooManyOutcomes(f"{size} outcomes exceeds {MAX_BRUTE_OUTCOMES}")
    dom = form.domain
    factors = []
    denom = 1
    for a, f in zip(form.coefficients, form.factors):
        d = math.lcm(*(v.denominator for v in f.values()))
        factors.append(
            [(a * i, v.numerator * (d // v.denominator)) for i, v in f.items()]
        )
        denom *= d
    totals: dict[int, int] = {}

    def walk(depth: int, value: int, numerator: int) -> None:
        if depth == len(factors):
            k = dom.reduce(value)
            totals[k] = totals.get(k, 0) + numerator
            return
        for shift, num in factors[depth]:
            walk(depth + 1, value + shift, numerator * num)

    walk(0, 0, 1)
    return Fraction(max(totals.values()), denom)
