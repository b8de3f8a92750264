"""Seeded random instances for property suites and the self-test."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Domain, NonnegFn, Pmf
from .rearrange import Regularity


def _random_indices(rng: random.Random, domain: Domain, k: int) -> list[int]:
    if domain.is_cyclic:
        return rng.sample(range(-domain.half, domain.half + 1), k)
    span = max(8, 2 * k)
    return rng.sample(range(-span, span + 1), k)


def _composition(rng: random.Random, total: int, parts: int) -> list[int]:
    """Positive integers summing to ``total``, uniformly via random cuts."""
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
    edges = [0] + cuts + [total]
    return [b - a for a, b in zip(edges, edges[1:])]


def random_pmf(
    rng: random.Random,
    domain: Domain,
    max_denominator: int = 64,
    max_support: int | None = None,
) -> Pmf:
    """Random PMF with exact denominator at most ``max_denominator``."""
    cap = domain.p if domain.is_cyclic else 8
    if max_support is not None:
        cap = min(cap, max_support)
    k = rng.randint(1, max(1, cap))
    total = rng.randint(k, max(k, max_denominator))
    weights = _composition(rng, total, k)
    idx = _random_indices(rng, domain, k)
    return Pmf(domain, {i: Fraction(w, total) for i, w in zip(idx, weights)})


def random_mass(
    rng: random.Random,
    domain: Domain,
    max_numerator: int = 12,
    max_support: int | None = None,
) -> NonnegFn:
    """Random unnormalized mass function with small rational values."""
    cap = domain.p if domain.is_cyclic else 8
    if max_support is not None:
        cap = min(cap, max_support)
    k = rng.randint(1, max(1, cap))
    idx = _random_indices(rng, domain, k)
    den = rng.choice([1, 2, 3, 4, 6, 8])
    return NonnegFn(
        domain, {i: Fraction(rng.randint(1, max_numerator), den) for i in idx}
    )


def random_regular_pmf(
    rng: random.Random,
    domain: Domain,
    kind: Regularity,
    max_support: int | None = None,
) -> Pmf:
    """Random triangle- or square-regular PMF.

    Regularity only constrains the multiset of values (a top value plus pairs
    for triangle, pairs all the way for square), so the support positions are
    free and drawn at random.
    """
    cap = domain.p if domain.is_cyclic else 9
    if max_support is not None:
        cap = min(cap, max_support)
    if kind is Regularity.TRIANGLE:
        t = rng.randint(0, (cap - 1) // 2)
        raw = sorted((rng.randint(1, 9) for _ in range(t + 1)), reverse=True)
        values = [raw[0]] + [c for c in raw[1:] for _ in (0, 1)]
    elif kind is Regularity.SQUARE:
        # even support keeps square regularity position-free on Z/pZ too
        t = rng.randint(1, max(1, (cap - 1) // 2))
        raw = sorted((rng.randint(1, 9) for _ in range(t)), reverse=True)
        values = [c for c in raw for _ in (0, 1)]
    else:
        raise ValueError("kind must be TRIANGLE or SQUARE")
    total = sum(values)
    idx = _random_indices(rng, domain, len(values))
    return Pmf(domain, {i: Fraction(v, total) for i, v in zip(idx, values)})


def random_subset(
    rng: random.Random, domain: Domain, max_size: int, span: int = 50
) -> tuple[int, ...]:
    """Nonempty random index set."""
    if domain.is_cyclic:
        pool = range(-domain.half, domain.half + 1)
        k = rng.randint(1, min(max_size, domain.p))
    else:
        pool = range(-span, span + 1)
        k = rng.randint(1, max_size)
    return tuple(sorted(rng.sample(pool, k)))
