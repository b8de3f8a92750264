"""The release gate: every headline guarantee as a runnable criterion.

Each criterion returns a :class:`CriterionResult`; the CLI ``selftest``
subcommand prints one line per criterion and the test suite asserts each one.
All randomness is drawn from per-criterion generators seeded off a single
seed, so a run is reproducible end to end.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .applications import (
    LinearForm,
    cauchy_davenport_check,
    discrete_epi_check,
    doubling_gap,
    doubling_gap_sweep,
    kanter_G,
    kanter_small_ball_check,
    small_ball,
)
from .convolve import convolve, convolve_many
from .core import Domain, Pmf, uniform_on
from .decompose import decompose
from .entropy import majorizes, renyi
from .errors import Error
from .extremal import extremal_distribution, extremal_distribution_fast
from .oracle import brute_small_ball, min_entropy_over_permutations
from .rearrange import Regularity, Sign, classify_regularity, rearrange, shape_equivalent
from .sampling import random_pmf, random_regular_pmf, random_subset

ALPHA_GRID = ("0", "1/4", "1/2", "1", "2", "4", "inf")


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _run(number: int, name: str, body: Callable[[], str]) -> CriterionResult:
    start = time.perf_counter()
    try:
        detail = body()
        passed = True
    except (AssertionError, Error) as exc:
        detail = str(exc) or exc.__class__.__name__
        passed = False
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


def _mixed_instance(rng: random.Random, domain: Domain, n: int) -> list[Pmf]:
    """Instance mix for the equality criterion: degenerate and regular cases
    appear alongside generic ones."""
    fs: list[Pmf] = []
    for _ in range(n):
        roll = rng.random()
        if roll < 0.4:
            fs.append(random_pmf(rng, domain, 32))
        elif roll < 0.55:
            fs.append(random_regular_pmf(rng, domain, Regularity.TRIANGLE))
        elif roll < 0.7:
            fs.append(random_regular_pmf(rng, domain, Regularity.SQUARE))
        elif roll < 0.8 and fs:
            fs.append(fs[-1])
        else:
            idx = random_subset(rng, domain, 3)
            fs.append(uniform_on(domain, idx))
    return fs


def criterion_main_majorization(seed: int = 0) -> CriterionResult:
    def body() -> str:
        rng = random.Random(f"{seed}:1")
        start = time.perf_counter()
        trials = 1000
        for _ in range(trials):
            p = rng.choice([3, 5, 7, 11, 13])
            dom = Domain.cyclic(p)
            n = rng.choice([2, 3, 4])
            fs = [random_pmf(rng, dom, 64) for _ in range(n)]
            verdict = majorizes(convolve_many(fs), extremal_distribution(fs))
            assert verdict.is_majorized, f"not majorized (prefix {verdict.failing_prefix})"
        elapsed = time.perf_counter() - start
        assert elapsed < 60, f"took {elapsed:.1f}s, budget 60s"
        return f"{trials} instances majorized exactly"

    return _run(1, "convolution majorized by extremal distribution", body)


def criterion_same_distribution(seed: int = 0) -> CriterionResult:
    def body() -> str:
        rng = random.Random(f"{seed}:2")
        trials = 200
        for _ in range(trials):
            dom = (
                Domain.cyclic(rng.choice([3, 5, 7, 11]))
                if rng.random() < 0.75
                else Domain.integers()
            )
            fs = _mixed_instance(rng, dom, rng.randint(1, 6))
            assert extremal_distribution(fs) == extremal_distribution_fast(fs)
        return f"{trials} instances, both routes identical"

    return _run(2, "reference and fast extremal routes agree", body)


def criterion_oracle_attainment(seed: int = 0) -> CriterionResult:
    def body() -> str:
        rng = random.Random(f"{seed}:3")
        dom = Domain.cyclic(5)
        start = time.perf_counter()
        trials = 50
        for k in range(trials):
            f = random_pmf(rng, dom, 24)
            kind = Regularity.TRIANGLE if k % 2 == 0 else Regularity.SQUARE
            g = random_regular_pmf(rng, dom, kind)
            bound = extremal_distribution([f, g])
            for a in ("1", "2", "inf"):
                minimum, _ = min_entropy_over_permutations(f, g, a)
                want = renyi(bound, a)
                assert abs(minimum - want) <= 1e-12, (
                    f"alpha={a}: search min {minimum} vs bound {want}"
                )
        elapsed = time.perf_counter() - start
        assert elapsed < 300, f"took {elapsed:.1f}s, budget 300s"
        return f"{trials} pairs attain the two-factor bound at alpha in {{1,2,inf}}"

    return _run(3, "exhaustive permutation minimum attains the bound", body)


def criterion_cauchy_davenport() -> CriterionResult:
    def body() -> str:
        dom = Domain.cyclic(7)
        members = list(range(-3, 4))
        subsets = []
        for mask in range(1, 1 << 7):
            subsets.append([members[b] for b in range(7) if mask >> b & 1])
        start = time.perf_counter()
        for a in subsets:
            for b in subsets:
                out = cauchy_davenport_check(a, b, dom)
                assert out.holds, f"A={a} B={b}"
                assert out.rearranged_size == out.bound, f"A={a} B={b}"
        elapsed = time.perf_counter() - start
        assert elapsed < 10, f"took {elapsed:.1f}s, budget 10s"
        return f"all {len(subsets)**2} nonempty pairs satisfy the sumset bound"

    return _run(4, "sumset bound exhaustive on Z/7Z", body)


def criterion_erdos_small_ball(seed: int = 0) -> CriterionResult:
    def body() -> str:
        rng = random.Random(f"{seed}:5")
        coin = uniform_on(Domain.integers(), [0, 1])
        trials = 500
        for _ in range(trials):
            n = rng.randint(2, 12)
            coeffs = tuple(rng.choice([c for c in range(-5, 6) if c]) for _ in range(n))
            form = LinearForm(coeffs, (coin,) * n)
            q = small_ball(form)
            assert q <= Fraction(math.comb(n, n // 2), 2**n), f"coeffs={coeffs}"
            assert q == brute_small_ball(form), f"coeffs={coeffs}"
        return f"{trials} coefficient vectors below the all-ones extremizer"

    return _run(5, "weighted-coin concentration never beats all-ones", body)


def _reference_G1() -> Fraction:
    """Independent high-precision value of exp(-1) (I0(1) + I1(1)) by exact
    rational series, truncation error well under 1e-30."""
    quarter = Fraction(1, 4)
    series = Fraction(0)
    power = Fraction(1)  # (1/4)^k
    kfact = 1
    for k in range(0, 30):
        if k:
            power *= quarter
            kfact *= k
        series += power / (kfact * kfact) + power / (2 * kfact * kfact * (k + 1))
    inv_e = sum(Fraction((-1) ** j, math.factorial(j)) for j in range(40))
    return series * inv_e


def criterion_kanter(seed: int = 0) -> CriterionResult:
    def body() -> str:
        assert kanter_G(0.0) == 1.0, "G(0) must be exactly 1"
        reference = float(_reference_G1())
        got = kanter_G(1.0)
        assert abs(got - reference) <= 1e-6, f"G(1)={got} vs series oracle {reference}"
        for k in range(1, 501):
            x = 0.1 * k
            assert kanter_G(x) < math.sqrt(2 / (math.pi * x)), f"x={x}"
        rng = random.Random(f"{seed}:6")
        trials = 500
        for _ in range(trials):
            n = rng.randint(1, 10)
            qs = [Fraction(rng.randint(0, 16), 16) for _ in range(n)]
            out = kanter_small_ball_check(qs)
            assert float(out.probability) <= out.bound + 1e-12, f"qs={qs}"
        return (
            f"G(1)={got:.9f} matches the series oracle; envelope and "
            f"{trials} three-point sums hold"
        )

    return _run(6, "Bessel-based concentration bound", body)


def criterion_discrete_epi(seed: int = 0) -> CriterionResult:
    def body() -> str:
        rng = random.Random(f"{seed}:7")
        dom = Domain.integers()
        trials = 500
        worst = math.inf
        for _ in range(trials):
            a = random_subset(rng, dom, 30)
            b = random_subset(rng, dom, 30)
            out = discrete_epi_check(a, b)
            worst = min(worst, out.slack)
            assert out.slack >= -1e-9, f"A={a} B={b} slack={out.slack}"
        return f"{trials} pairs, minimum slack {worst:.3e}"

    return _run(7, "entropy power superadditivity for uniforms", body)


def criterion_doubling_gap() -> CriterionResult:
    def body() -> str:
        gap2, _ = doubling_gap(2)
        assert abs(gap2 - 0.5 * math.log(2)) <= 1e-12
        for n, gap, estimate in doubling_gap_sweep(10**4):
            assert gap >= estimate - 1e-12, f"n={n}"
        return "gap(2) = log(2)/2 and estimate holds for all n <= 10^4"

    return _run(8, "doubling gap dominates its closed-form estimate", body)


def criterion_decomposition(seed: int = 0) -> CriterionResult:
    def body() -> str:
        rng = random.Random(f"{seed}:9")
        trials = 1000
        for _ in range(trials):
            dom = (
                Domain.cyclic(rng.choice([3, 5, 7, 11, 13]))
                if rng.random() < 0.7
                else Domain.integers()
            )
            f = random_pmf(rng, dom, 64)
            d = decompose(f)
            assert d.triangle + d.square == f
            assert d.triangle.is_zero or classify_regularity(d.triangle) is Regularity.TRIANGLE
            assert d.square.is_zero or classify_regularity(d.square) is Regularity.SQUARE
            assert shape_equivalent(f, d.triangle) and shape_equivalent(f, d.square)
            idx = d.ordering.indices
            for part in (f, d.triangle, d.square):
                assert all(
                    part[idx[k]] >= part[idx[k + 1]] for k in range(len(idx) - 1)
                )
            assert rearrange(f, Sign.PLUS) == rearrange(d.triangle, Sign.PLUS) + rearrange(
                d.square, Sign.PLUS
            )
        return f"{trials} decompositions exact, regular, and witnessed"

    return _run(9, "triangle/square decomposition", body)


def criterion_entropy_sanity(seed: int = 0) -> CriterionResult:
    def body() -> str:
        rng = random.Random(f"{seed}:10")
        for _ in range(500):
            p = rng.choice([3, 5, 7, 11, 13])
            dom = Domain.cyclic(p)
            f = random_pmf(rng, dom, 64)
            g = random_pmf(rng, dom, 64)
            h = renyi(convolve(f, g), "1")
            assert h <= renyi(f, "1") + renyi(g, "1") + 1e-12
            assert h <= math.log(p) + 1e-12
        for _ in range(200):
            dom = Domain.cyclic(rng.choice([5, 7, 11, 13]))
            f = random_pmf(rng, dom, 64)
            values = [renyi(f, a) for a in ALPHA_GRID]
            assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))
        return "500 convolution upper bounds and 200 monotone order sweeps"

    return _run(10, "entropy upper bound and order monotonicity", body)


ALL_CRITERIA: tuple[tuple[int, str, Callable[..., CriterionResult]], ...] = (
    (1, "majorization", criterion_main_majorization),
    (2, "same-distribution", criterion_same_distribution),
    (3, "oracle-attainment", criterion_oracle_attainment),
    (4, "cauchy-davenport", criterion_cauchy_davenport),
    (5, "erdos", criterion_erdos_small_ball),
    (6, "kanter", criterion_kanter),
    (7, "epi", criterion_discrete_epi),
    (8, "doubling-gap", criterion_doubling_gap),
    (9, "decomposition", criterion_decomposition),
    (10, "entropy-sanity", criterion_entropy_sanity),
)


def run_all(seed: int = 0, only: set[int] | None = None) -> list[CriterionResult]:
    results = []
    for number, _, func in ALL_CRITERIA:
        if only is not None and number not in only:
            continue
        if func in (criterion_cauchy_davenport, criterion_doubling_gap):
            results.append(func())
        else:
            results.append(func(seed))
    return results
