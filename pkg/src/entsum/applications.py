"""Consequences of the convolution lower bound, as runnable procedures.

Covers anticoncentration of weighted sums (with Kanter's bound for the
three-point laws), counting solutions of collision equations, sumset
cardinality, an entropy power inequality for uniforms on integer sets, and
the entropy gap under doubling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .convolve import convolve_many
from .core import Domain, NonnegFn, Pmf, common_domain, scale_index, uniform_on
from .entropy import Alpha, entropy_power, renyi
from .errors import (
    EmptySet,
    HypothesisViolated,
    InvalidProbability,
    NegativeArgument,
    TooSmall,
    ZeroCoefficient,
)
from .rearrange import Regularity, Sign, classify_regularity, rearrange, spiral_indices


@dataclass(frozen=True)
class LinearForm:
    """Weighted sum a_1 X_1 + ... + a_n X_n of independent factors."""

    coefficients: tuple[int, ...]
    factors: tuple[Pmf, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.coefficients) != len(self.factors):
            raise ValueError("one coefficient per factor required")
        dom = common_domain(self.factors)
        for a in self.coefficients:
            if a == 0 or (dom.is_cyclic and a % dom.p == 0):
                raise ZeroCoefficient(f"coefficient {a} vanishes on {dom}")

    @property
    def domain(self) -> Domain:
        return self.factors[0].domain


def weighted_sum_distribution(form: LinearForm) -> Pmf:
    """Exact distribution of the weighted sum."""
    return convolve_many(
        [scale_index(f, a) for a, f in zip(form.coefficients, form.factors)]
    )


def small_ball(form: LinearForm) -> Fraction:
    """Largest point probability of the weighted sum, as an exact rational.

    Equals exp of the negated min-entropy by construction.
    """
    return weighted_sum_distribution(form).max_value()


def _in_rearranged_position(f: Pmf) -> bool:
    if classify_regularity(f) is Regularity.NEITHER:
        return False
    return f == rearrange(f, Sign.PLUS) or f == rearrange(f, Sign.MINUS)


@dataclass(frozen=True)
class LoBound:
    weighted_entropy: float
    unweighted_entropy: float
    holds: bool


def lo_entropy_bound(form: LinearForm, order) -> LoBound:
    """Entropy of the weighted sum against the unweighted sum of the factors.

    Requires every factor to be triangle- or square-regular and already in
    one of its rearranged positions; without that structure the comparison
    is simply false, so violations raise instead of silently rearranging.
    Orders 0 and infinity are decided exactly (support size / max mass);
    other orders compare floats with 1e-12 slack.
    """
    for f in form.factors:
        if not _in_rearranged_position(f):
            raise HypothesisViolated(
                "factor must be regular and equal to one of its rearrangements"
            )
    a = Alpha.of(order)
    weighted = weighted_sum_distribution(form)
    unweighted = convolve_many(form.factors)
    if a.kind == "infinity":
        holds = weighted.max_value() <= unweighted.max_value()
    elif a.kind == "zero":
        holds = len(weighted) >= len(unweighted)
    else:
        holds = renyi(weighted, a) >= renyi(unweighted, a) - 1e-12
    return LoBound(renyi(weighted, a), renyi(unweighted, a), holds)


def kanter_G(x: float) -> float:
    """G(x) = exp(-x) (I0(x) + I1(x)) with I the modified Bessel functions.

    Evaluated by the ascending power series with every term pre-scaled by
    exp(-x), which keeps intermediates bounded for x into the hundreds.  The
    loop stops once a geometric bound on the tail drops below 1e-16 of the
    partial sum.
    """
    x = float(x)
    if x < 0:
        raise NegativeArgument(f"G is defined for x >= 0, got {x}")
    if x == 0:
        return 1.0
    half = x / 2.0
    u = math.exp(-x)  # exp(-x) (x/2)^(2k) / k!^2
    w = u * half      # exp(-x) (x/2)^(2k+1) / (k! (k+1)!)
    total = u + w
    k = 0
    while True:
        k += 1
        u *= (half / k) ** 2
        w *= half * half / (k * (k + 1))
        term = u + w
        total += term
        ratio = (half / (k + 1)) ** 2
        if ratio < 1 and term * ratio / (1 - ratio) < 1e-16 * total:
            return total


@dataclass(frozen=True)
class KanterCheck:
    """Exact concentration of a sum of symmetric three-point laws vs G."""

    probability: Fraction  # P(sum in {0, 1}), exact
    argument: float        # sum of (1 - q_i)
    bound: float           # G(argument)
    holds: bool


def kanter_small_ball_check(qs: Sequence) -> KanterCheck:
    """For X_i = 0 w.p. q_i and +-1 w.p. (1-q_i)/2 each, compare the exact
    P(X_1 + ... + X_n in {0, 1}) with G(sum(1 - q_i))."""
    qs = [Fraction(q) for q in qs]
    for q in qs:
        if not 0 <= q <= 1:
            raise InvalidProbability(f"q must lie in [0, 1], got {q}")
    dom = Domain.integers()
    factors = []
    for q in qs:
        side = (1 - q) / 2
        factors.append(Pmf(dom, {-1: side, 0: q, 1: side}))
    total = convolve_many(factors)
    prob = total[0] + total[1]
    arg = float(sum(1 - q for q in qs))
    bound = kanter_G(arg)
    return KanterCheck(prob, arg, bound, float(prob) <= bound + 1e-12)


def rearranged_set(domain: Domain, size: int, sign: Sign) -> tuple[int, ...]:
    """The size-``size`` prefix of a center-out walk, ascending."""
    return tuple(sorted(spiral_indices(domain, size, sign)))


def count_solutions(
    sets: Sequence[Sequence[int]], coefficients: Sequence[int], domain: Domain
) -> tuple[int, int]:
    """Solutions of sum a_i x_i = sum a_i x_i' with x_i, x_i' in A_i, next to
    the count for the rearranged maximizer (unit coefficients, center-out
    prefix sets with alternating walks on the even-size sets).

    Both counts come from exact collision probabilities scaled back up by
    the squared product of the set sizes.
    """
    cleaned = [tuple(sorted(set(s))) for s in sets]
    if any(not s for s in cleaned):
        raise EmptySet("every set must be nonempty")
    form = LinearForm(
        tuple(coefficients), tuple(uniform_on(domain, s) for s in cleaned)
    )
    actual = _collision_count(weighted_sum_distribution(form), cleaned)

    rearranged = []
    even_seen = 0
    for s in cleaned:
        if len(s) % 2 == 1:
            sign = Sign.PLUS
        else:
            sign = Sign.PLUS if even_seen % 2 == 0 else Sign.MINUS
            even_seen += 1
        rearranged.append(uniform_on(domain, rearranged_set(domain, len(s), sign)))
    best = _collision_count(convolve_many(rearranged), cleaned)
    return actual, best


def _collision_count(dist: NonnegFn, sets: Sequence[Sequence[int]]) -> int:
    scale = 1
    for s in sets:
        scale *= len(s)
    total = sum((v * scale) ** 2 for v in dist.values())
    assert total.denominator == 1
    return int(total)


@dataclass(frozen=True)
class SumsetCheck:
    sumset_size: int
    bound: int
    holds: bool
    rearranged_size: int


def cauchy_davenport_check(
    a_set: Sequence[int], b_set: Sequence[int], domain: Domain
) -> SumsetCheck:
    """|A + B| against min(|A| + |B| - 1, p), plus the size of the sumset of
    the two center-out prefix sets, which attains the bound."""
    a = sorted(set(a_set))
    b = sorted(set(b_set))
    if not a or not b:
        raise EmptySet("both sets must be nonempty")
    for i in a + b:
        domain.check_index(i)
    sumset = {domain.reduce(x + y) for x in a for y in b}
    bound = len(a) + len(b) - 1
    if domain.is_cyclic:
        bound = min(bound, domain.p)
    a_plus = rearranged_set(domain, len(a), Sign.PLUS)
    b_minus = rearranged_set(domain, len(b), Sign.MINUS)
    rearranged = {domain.reduce(x + y) for x in a_plus for y in b_minus}
    return SumsetCheck(len(sumset), bound, len(sumset) >= bound, len(rearranged))


@dataclass(frozen=True)
class EpiReport:
    n_sum: float
    n_x: float
    n_y: float

    @property
    def slack(self) -> float:
        return self.n_sum + 1 - self.n_x - self.n_y


def discrete_epi_check(a_set: Sequence[int], b_set: Sequence[int]) -> EpiReport:
    """Entropy powers for independent uniforms on two finite integer sets:
    N(X + Y) + 1 >= N(X) + N(Y)."""
    a = sorted(set(a_set))
    b = sorted(set(b_set))
    if not a or not b:
        raise EmptySet("both sets must be nonempty")
    dom = Domain.integers()
    fx = uniform_on(dom, a)
    fy = uniform_on(dom, b)
    fsum = convolve_many([fx, fy])
    return EpiReport(entropy_power(fsum), entropy_power(fx), entropy_power(fy))


def doubling_gap(n: int) -> tuple[float, float]:
    """Entropy gained by adding an independent copy, for a uniform law on any
    n integers, next to its closed-form lower estimate.

    The gap depends on n alone: the two center-out rearrangements of a
    uniform n-set convolve to the triangular law with masses k/n^2, and

        gap = (1 - 1/n) log n - (2/n^2) sum_{i<n} i log i
        estimate = 1/2 - log(n)/n - 1/(2 n^2).
    """
    gap, est = _gap_pair(n, math.fsum(i * math.log(i) for i in range(2, n)))
    return gap, est


def doubling_gap_sweep(n_max: int) -> list[tuple[int, float, float]]:
    """(n, gap, estimate) for all n in [2, n_max], built incrementally."""
    if n_max < 2:
        raise TooSmall("need n >= 2")
    out = []
    s = 0.0  # sum_{i=2}^{n-1} i log i
    for n in range(2, n_max + 1):
        gap, est = _gap_pair(n, s)
        out.append((n, gap, est))
        s += n * math.log(n)
    return out


def _gap_pair(n: int, weighted_log_sum: float) -> tuple[float, float]:
    if n < 2:
        raise TooSmall("need n >= 2")
    ln_n = math.log(n)
    gap = (1 - 1 / n) * ln_n - 2 * weighted_log_sum / (n * n)
    estimate = 0.5 - ln_n / n - 1 / (2 * n * n)
    return gap, estimate
