"""Release gate: one test per criterion, each printing its verdict line."""


from entsum.acceptance import (
    criterion_cauchy_davenport,
    criterion_decomposition,
    criterion_discrete_epi,
    criterion_doubling_gap,
    criterion_entropy_sanity,
    criterion_erdos_small_ball,
    criterion_kanter,
    criterion_main_majorization,
    criterion_oracle_attainment,
    criterion_same_distribution,
)

SEED = 20250810


def _check(result):
    print(result.line())
    assert result.passed, result.detail


def test_criterion_01_main_majorization():
    _check(criterion_main_majorization(SEED))


def test_criterion_02_same_distribution():
    _check(criterion_same_distribution(SEED))


def test_criterion_03_oracle_attainment():
    _check(criterion_oracle_attainment(SEED))


def test_criterion_04_cauchy_davenport():
    _check(criterion_cauchy_davenport())


def test_criterion_05_erdos_small_ball():
    _check(criterion_erdos_small_ball(SEED))


def test_criterion_06_kanter():
    _check(criterion_kanter(SEED))


def test_criterion_07_discrete_epi():
    _check(criterion_discrete_epi(SEED))


def test_criterion_08_doubling_gap():
    _check(criterion_doubling_gap())


def test_criterion_09_decomposition():
    _check(criterion_decomposition(SEED))


def test_criterion_10_entropy_sanity():
    _check(criterion_entropy_sanity(SEED))


def test_reruns_are_deterministic():
    a = criterion_same_distribution(7)
    b = criterion_same_distribution(7)
    assert (a.passed, a.detail) == (b.passed, b.detail)
