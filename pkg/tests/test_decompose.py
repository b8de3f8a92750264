import random
from fractions import Fraction as F

from entsum import (
    Domain,
    Regularity,
    Sign,
    classify_regularity,
    decompose,
    delta,
    layer_cake,
    make_pmf,
    rearrange,
    shape_equivalent,
    uniform_on,
)
from entsum.core import NonnegFn
from entsum.decompose import Decomposition
from entsum.rearrange import OrderedIndexSet, canonical_ordering
from entsum.sampling import random_mass, random_pmf


class TestLayerCake:
    def test_point_mass_single_layer(self):
        cake = layer_cake(delta(Domain.cyclic(5), 2))
        assert cake.layers == ((F(1), (2,)),)

    def test_uniform_single_layer(self):
        cake = layer_cake(uniform_on(Domain.integers(), [0, 3, 7]))
        assert len(cake.layers) == 1
        coeff, prefix = cake.layers[0]
        assert coeff == F(1, 3) and sorted(prefix) == [0, 3, 7]

    def test_three_values(self):
        f = NonnegFn(Domain.cyclic(7), {0: F(1, 2), 1: F(3, 10), 2: F(1, 5)})
        cake = layer_cake(f)
        assert [c for c, _ in cake.layers] == [F(1, 5), F(1, 10), F(1, 5)]
        assert [len(s) for _, s in cake.layers] == [1, 2, 3]

    def test_exact_reconstruction(self):
        rng = random.Random(0)
        for dom in (Domain.cyclic(11), Domain.integers()):
            for _ in range(50):
                f = random_mass(rng, dom)
                assert layer_cake(f).reconstruct() == f

    def test_ties_produce_no_layer(self):
        f = uniform_on(Domain.cyclic(5), [0, 1, 2])
        assert len(layer_cake(f).layers) == 1


class TestDecompose:
    def test_worked_example(self):
        f = NonnegFn(Domain.cyclic(7), {0: F(1, 2), 1: F(3, 10), 2: F(1, 5)})
        d = decompose(f)
        assert d.triangle.mapping() == {0: F(2, 5), 1: F(1, 5), 2: F(1, 5)}
        assert d.square.mapping() == {0: F(1, 10), 1: F(1, 10)}

    def test_triangle_regular_passes_through(self):
        f = make_pmf(Domain.cyclic(7), [(3, F(1, 2)), (0, F(1, 4)), (-2, F(1, 4))])
        d = decompose(f)
        assert d.triangle == f and d.square.is_zero

    def test_two_point_uniform_is_all_square(self):
        f = uniform_on(Domain.integers(), [4, 9])
        d = decompose(f)
        assert d.triangle.is_zero and d.square == f

    def test_parts_and_reconstruction(self):
        rng = random.Random(1)
        for dom in (Domain.cyclic(13), Domain.integers()):
            for _ in range(100):
                f = random_pmf(rng, dom)
                d = decompose(f)
                assert d.triangle + d.square == f
                assert d.triangle.is_zero or classify_regularity(d.triangle) is Regularity.TRIANGLE
                assert d.square.is_zero or classify_regularity(d.square) is Regularity.SQUARE
                assert shape_equivalent(f, d.triangle) and shape_equivalent(f, d.square)
                idx = d.ordering.indices
                for part in (d.triangle, d.square):
                    assert all(part[idx[k]] >= part[idx[k + 1]] for k in range(len(idx) - 1))

    def test_rearrangement_commutes(self):
        rng = random.Random(2)
        for _ in range(60):
            f = random_pmf(rng, Domain.cyclic(11))
            d = decompose(f)
            d_plus = decompose(rearrange(f, Sign.PLUS))
            assert d_plus.triangle == rearrange(d.triangle, Sign.PLUS)
            assert d_plus.square == rearrange(d.square, Sign.PLUS)
            assert rearrange(f, Sign.PLUS) == rearrange(d.triangle, Sign.PLUS) + rearrange(d.square, Sign.PLUS)

    def test_independent_of_tie_break(self):
        # swapping tied indices in the ordering cannot change the parts
        rng = random.Random(3)
        for _ in range(40):
            f = random_pmf(rng, Domain.cyclic(7), max_denominator=8)
            base = canonical_ordering(f)
            idx = list(base.indices)
            tied = [k for k in range(len(idx) - 1) if f[idx[k]] == f[idx[k + 1]]]
            if not tied:
                continue
            k = rng.choice(tied)
            idx[k], idx[k + 1] = idx[k + 1], idx[k]
            alt = decompose(f, OrderedIndexSet(f.domain, tuple(idx)))
            ref = decompose(f)
            assert alt.triangle == ref.triangle and alt.square == ref.square


class TestUniqueness:
    """Reassigning any layer to the other part must break regularity.

    Restricted to supports smaller than p on cyclic domains: a full-support
    layer wraps all the way around, and the wraparound makes the square
    condition blind to its unpaired smallest value.
    """

    @staticmethod
    def _perturbations(f):
        cake = layer_cake(f)
        for moved in range(len(cake.layers)):
            tri: dict[int, F] = {}
            sq: dict[int, F] = {}
            for j, (coeff, prefix) in enumerate(cake.layers):
                natural_tri = len(prefix) % 2 == 1
                target = tri if natural_tri != (j == moved) else sq
                for i in prefix:
                    target[i] = target.get(i, F(0)) + coeff
            yield NonnegFn(f.domain, tri), NonnegFn(f.domain, sq)

    def test_perturbed_pairs_lose_regularity(self):
        rng = random.Random(4)
        checked = 0
        while checked < 60:
            dom = rng.choice([Domain.cyclic(11), Domain.integers()])
            f = random_pmf(rng, dom, max_support=9)
            if dom.is_cyclic and len(f) == dom.p:
                continue
            canonical = decompose(f)
            for tri, sq in self._perturbations(f):
                assert tri + sq == f
                if tri == canonical.triangle and sq == canonical.square:
                    continue
                tri_ok = tri.is_zero or classify_regularity(tri) is Regularity.TRIANGLE
                sq_ok = sq.is_zero or classify_regularity(sq) is Regularity.SQUARE
                assert not (tri_ok and sq_ok)
            checked += 1

    def test_full_support_wraparound_exception(self):
        # values paired from the top but odd full support: the definition
        # accepts the whole function as square, so a second valid split exists
        f = make_pmf(Domain.cyclic(3), [(0, F(2, 5)), (1, F(2, 5)), (-1, F(1, 5))])
        assert classify_regularity(f) is Regularity.SQUARE
        d = decompose(f)
        assert not d.triangle.is_zero and not d.square.is_zero
        assert d.triangle + d.square == f


def test_decomposition_dataclass_shape():
    d = decompose(uniform_on(Domain.cyclic(5), [0, 1]))
    assert isinstance(d, Decomposition)
    assert d.ordering.indices[0] in (0, 1)
