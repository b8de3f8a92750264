import random
from fractions import Fraction as F

import pytest

from entsum import (
    Domain,
    Regularity,
    Sign,
    bar_delta,
    canonical_ordering,
    classify_regularity,
    delta,
    descends_along,
    make_pmf,
    mirror,
    rearrange,
    renyi,
    shape_equivalent,
    uniform_on,
)
from entsum.core import NonnegFn
from entsum.errors import DomainMismatch, IrregularInput, StarOnIrregular
from entsum.rearrange import spiral_indices, spiral_rank
from entsum.sampling import random_mass, random_pmf, random_regular_pmf

ALPHA_GRID = ["0", "1/4", "1/2", "1", "2", "4", "inf"]


def test_spiral_orders():
    assert spiral_indices(Domain.cyclic(7), 7) == [0, 1, -1, 2, -2, 3, -3]
    assert spiral_indices(Domain.cyclic(7), 7, Sign.MINUS) == [0, -1, 1, -2, 2, -3, 3]
    assert spiral_indices(Domain.integers(), 4) == [0, 1, -1, 2]
    for i in (-3, -1, 0, 2, 5):
        assert spiral_indices(Domain.integers(), spiral_rank(i) + 1)[-1] == i


class TestCanonicalOrdering:
    def test_point_mass_then_spiral(self):
        ordering = canonical_ordering(delta(Domain.cyclic(7), 3))
        assert ordering.indices == (3, 0, 1, -1, 2, -2, -3)

    def test_uniform_is_spiral(self):
        ordering = canonical_ordering(uniform_on(Domain.cyclic(3), [-1, 0, 1]))
        assert ordering.indices == (0, 1, -1)

    def test_distinct_values_sorted(self):
        f = make_pmf(
            Domain.cyclic(17),
            [(-4, F(4, 10)), (-7, F(3, 10)), (3, F(2, 10)), (1, F(1, 10))],
        )
        assert canonical_ordering(f).indices[:4] == (-4, -7, 3, 1)

    def test_integers_ordering_covers_support_only(self):
        f = make_pmf(Domain.integers(), [(5, F(1, 3)), (-2, F(2, 3))])
        assert canonical_ordering(f).indices == (-2, 5)

    def test_descending_along_ordering(self):
        rng = random.Random(0)
        for dom in (Domain.cyclic(11), Domain.integers()):
            for _ in range(30):
                f = random_pmf(rng, dom)
                idx = canonical_ordering(f).indices
                assert all(f[idx[k]] >= f[idx[k + 1]] for k in range(len(idx) - 1))


class TestRearrange:
    def test_four_values_plus(self):
        f = make_pmf(
            Domain.cyclic(17),
            [(-4, F(4, 10)), (-7, F(3, 10)), (3, F(2, 10)), (1, F(1, 10))],
        )
        plus = rearrange(f, Sign.PLUS)
        assert plus.mapping() == {
            0: F(4, 10), 1: F(3, 10), -1: F(2, 10), 2: F(1, 10),
        }
        minus = rearrange(f, Sign.MINUS)
        assert minus.mapping() == {
            0: F(4, 10), -1: F(3, 10), 1: F(2, 10), -2: F(1, 10),
        }

    def test_point_mass_goes_to_origin(self):
        for sign in (Sign.PLUS, Sign.MINUS, Sign.STAR):
            assert rearrange(delta(Domain.cyclic(7), 3), sign) == delta(Domain.cyclic(7), 0)

    def test_idempotent(self):
        rng = random.Random(1)
        for _ in range(30):
            f = random_pmf(rng, Domain.cyclic(13))
            plus = rearrange(f, Sign.PLUS)
            assert rearrange(plus, Sign.PLUS) == plus

    def test_star_requires_triangle(self):
        with pytest.raises(StarOnIrregular):
            rearrange(uniform_on(Domain.cyclic(5), [0, 1]), Sign.STAR)

    def test_mirror_images(self):
        rng = random.Random(2)
        for dom in (Domain.cyclic(11), Domain.integers()):
            for _ in range(30):
                f = random_pmf(rng, dom)
                assert mirror(rearrange(f, Sign.PLUS)) == rearrange(f, Sign.MINUS)

    def test_entropies_preserved(self):
        rng = random.Random(3)
        for _ in range(20):
            f = random_pmf(rng, Domain.cyclic(11))
            g = rearrange(f, Sign.MINUS)
            assert sorted(f.values()) == sorted(g.values())
            for a in ALPHA_GRID:
                assert renyi(f, a) == pytest.approx(renyi(g, a), abs=1e-12)


class TestClassify:
    def test_paired_triple_is_triangle(self):
        f = make_pmf(Domain.cyclic(7), [(2, F(1, 2)), (-3, F(1, 4)), (0, F(1, 4))])
        assert classify_regularity(f) is Regularity.TRIANGLE

    def test_two_point_uniform_is_square(self):
        assert classify_regularity(uniform_on(Domain.cyclic(5), [2, -1])) is Regularity.SQUARE
        assert classify_regularity(uniform_on(Domain.integers(), [4, 9])) is Regularity.SQUARE

    def test_unpaired_values_are_neither(self):
        f = make_pmf(Domain.cyclic(5), [(0, F(1, 2)), (1, F(1, 3)), (2, F(1, 6))])
        assert classify_regularity(f) is Regularity.NEITHER

    def test_full_uniform_counts_as_triangle(self):
        assert classify_regularity(uniform_on(Domain.cyclic(5), range(-2, 3))) is Regularity.TRIANGLE

    def test_support_parity(self):
        rng = random.Random(4)
        for dom in (Domain.cyclic(11), Domain.integers()):
            for kind, parity in ((Regularity.TRIANGLE, 1), (Regularity.SQUARE, 0)):
                for _ in range(25):
                    f = random_regular_pmf(rng, dom, kind)
                    assert classify_regularity(f) is kind
                    assert len(f) % 2 == parity

    def test_classification_survives_rearrangement(self):
        rng = random.Random(5)
        for _ in range(40):
            f = random_pmf(rng, Domain.cyclic(11))
            reg = classify_regularity(f)
            for sign in (Sign.PLUS, Sign.MINUS):
                assert classify_regularity(rearrange(f, sign)) is reg


class TestShapeEquivalent:
    def test_reflexive_and_uniform(self):
        rng = random.Random(6)
        dom = Domain.cyclic(7)
        full = uniform_on(dom, range(-3, 4))
        for _ in range(20):
            f = random_pmf(rng, dom)
            assert shape_equivalent(f, f)
            assert shape_equivalent(f, full) and shape_equivalent(full, f)

    def test_conflicting_point_masses(self):
        dom = Domain.cyclic(5)
        assert not shape_equivalent(delta(dom, 0), delta(dom, 1))

    def test_symmetric(self):
        rng = random.Random(7)
        for dom in (Domain.cyclic(7), Domain.integers()):
            for _ in range(40):
                f = random_pmf(rng, dom, max_support=4)
                g = random_pmf(rng, dom, max_support=4)
                assert shape_equivalent(f, g) == shape_equivalent(g, f)

    def test_ordering_witnesses_tie_compatible_functions(self):
        # replace f's values by their (1-based) descending rank reversed:
        # same ties, same strict drops, so f's canonical ordering must work
        rng = random.Random(8)
        for _ in range(30):
            f = random_pmf(rng, Domain.cyclic(11))
            ranks = {v: r for r, v in enumerate(sorted(set(f.values())), start=1)}
            g = NonnegFn(f.domain, {i: F(ranks[v]) for i, v in f.items()})
            assert shape_equivalent(f, g)
            idx = canonical_ordering(f).indices
            assert all(g[idx[k]] >= g[idx[k + 1]] for k in range(len(idx) - 1))

    def test_domain_mismatch(self):
        with pytest.raises(DomainMismatch):
            shape_equivalent(delta(Domain.cyclic(5)), delta(Domain.integers()))


class TestBarDelta:
    def test_triangle_always_zero(self):
        rng = random.Random(9)
        for _ in range(10):
            f = random_regular_pmf(rng, Domain.cyclic(11), Regularity.TRIANGLE)
            for sign in (Sign.PLUS, Sign.MINUS, Sign.STAR):
                assert bar_delta(f, sign) == 0

    def test_square_signs(self):
        s = uniform_on(Domain.cyclic(5), [0, 2])
        assert bar_delta(s, Sign.PLUS) == 1
        assert bar_delta(s, Sign.MINUS) == -1
        with pytest.raises(StarOnIrregular):
            bar_delta(s, Sign.STAR)

    def test_irregular_rejected(self):
        f = make_pmf(Domain.cyclic(5), [(0, F(1, 2)), (1, F(1, 3)), (2, F(1, 6))])
        with pytest.raises(IrregularInput):
            bar_delta(f, Sign.PLUS)


def test_descends_along():
    dom = Domain.integers()
    plus = rearrange(make_pmf(dom, [(4, F(1, 2)), (9, F(1, 3)), (-5, F(1, 6))]), Sign.PLUS)
    assert descends_along(plus, Sign.PLUS)
    assert not descends_along(plus, Sign.MINUS)
    gap = NonnegFn(dom, {0: F(1, 2), 3: F(1, 2)})
    assert not descends_along(gap, Sign.PLUS)


def test_rearranged_masses_descend():
    rng = random.Random(10)
    for dom in (Domain.cyclic(13), Domain.integers()):
        for _ in range(30):
            f = random_mass(rng, dom)
            assert descends_along(rearrange(f, Sign.PLUS), Sign.PLUS)
            assert descends_along(rearrange(f, Sign.MINUS), Sign.MINUS)
