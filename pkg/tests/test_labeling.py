import random

import pytest

from didom import (
    Digraph,
    InfeasibleStructureError,
    Variant,
    cartesian_product,
    dipath,
    level_set,
    out_star,
    product_index,
    random_digraph,
    restricted_weight,
    validate,
    weight,
)

LABEL_VARIANTS = (Variant.ROMAN, Variant.ITALIAN, Variant.TOTAL_ROMAN, Variant.TOTAL_ITALIAN)


def random_labels(rng, n):
    return tuple(rng.choice((0, 1, 2)) for _ in range(n))


class TestWeights:
    def test_all_ones(self):
        assert weight((1, 1, 1)) == 3

    def test_all_zeros(self):
        assert weight((0, 0, 0, 0)) == 0

    def test_mixed(self):
        assert weight((1, 2, 0)) == 3

    def test_restricted(self):
        assert restricted_weight((1, 2, 0), {0, 2}) == 1
        assert restricted_weight((1, 2, 0), set()) == 0
        assert restricted_weight((1, 2, 0), {0, 1, 2}) == weight((1, 2, 0))


class TestLevelSets:
    def test_preimage(self):
        assert level_set((1, 0, 2), 0) == {1}
        assert level_set((1, 1, 1), 2) == frozenset()

    def test_partition(self):
        rng = random.Random(1)
        for _ in range(20):
            labels = random_labels(rng, rng.randint(1, 8))
            parts = [level_set(labels, j) for j in (0, 1, 2)]
            assert sum(len(p) for p in parts) == len(labels)
            assert frozenset.union(*parts) == frozenset(range(len(labels)))

    def test_bad_level(self):
        with pytest.raises(ValueError):
            level_set((0, 1), 3)


class TestValidateExamples:
    def test_grid_corner_zero_is_total_italian(self):
        d = cartesian_product(dipath(2), dipath(2))
        labels = [1] * 4
        labels[product_index(1, 1, 2)] = 0
        assert validate(d, tuple(labels), Variant.TOTAL_ITALIAN)

    def test_p2_bad_labeling(self):
        assert not validate(dipath(2), (1, 0), Variant.TOTAL_ITALIAN)

    def test_star_two_one_zero(self):
        assert validate(out_star(3), (2, 1, 0), Variant.TOTAL_ITALIAN)

    def test_p4_total_dominating(self):
        assert validate(dipath(4), frozenset({0, 1, 2}), Variant.TOTAL_DOMINATING_SET)

    def test_dominating_needs_out_closure(self):
        assert validate(dipath(4), frozenset({0, 2}), Variant.DOMINATING_SET)
        assert not validate(dipath(4), frozenset({1, 2}), Variant.DOMINATING_SET)

    def test_total_two_dominating(self):
        # On a dipath nobody outside can have two in-neighbors inside.
        d = dipath(4)
        assert validate(d, frozenset(range(4)), Variant.TOTAL_TWO_DOMINATING_SET)
        assert not validate(d, frozenset({0, 1, 2}), Variant.TOTAL_TWO_DOMINATING_SET)

    def test_roman_vs_italian(self):
        d = cartesian_product(dipath(2), dipath(2))
        labels = [1] * 4
        labels[product_index(1, 1, 2)] = 0
        # (1,1)'s two in-neighbors carry 1s: Italian yes, Roman no.
        assert validate(d, tuple(labels), Variant.ITALIAN)
        assert not validate(d, tuple(labels), Variant.ROMAN)


class TestValidateErrors:
    def test_kind_mismatch(self):
        with pytest.raises(ValueError, match="labeling"):
            validate(dipath(2), frozenset({0}), Variant.ROMAN)
        with pytest.raises(ValueError, match="vertex set"):
            validate(dipath(2), (1, 1), Variant.DOMINATING_SET)

    def test_bad_label_values(self):
        with pytest.raises(ValueError):
            validate(dipath(2), (1, 3), Variant.ITALIAN)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            validate(dipath(3), (1, 1), Variant.ITALIAN)

    def test_total_variants_need_no_isolated(self):
        lonely = Digraph(3, [(0, 1)])  # vertex 2 is isolated
        for variant in (Variant.TOTAL_ROMAN, Variant.TOTAL_ITALIAN):
            with pytest.raises(InfeasibleStructureError):
                validate(lonely, (1, 1, 1), variant)
        for variant in (Variant.TOTAL_DOMINATING_SET, Variant.TOTAL_TWO_DOMINATING_SET):
            with pytest.raises(InfeasibleStructureError):
                validate(lonely, frozenset({0, 1, 2}), variant)

    def test_plain_variants_allow_isolated(self):
        lonely = Digraph(2)
        assert validate(lonely, (1, 1), Variant.ITALIAN)
        assert not validate(lonely, (0, 1), Variant.ROMAN)


class TestImplications:
    def test_lattice_on_random_labelings(self):
        rng = random.Random(42)
        tried = 0
        while tried < 300:
            d = random_digraph(rng.randint(2, 7), rng.random(), rng.randrange(2**32))
            if d.has_isolated_vertex():
                continue
            tried += 1
            f = random_labels(rng, d.order)
            results = {v: validate(d, f, v) for v in LABEL_VARIANTS}
            if results[Variant.ROMAN]:
                assert results[Variant.ITALIAN]
            if results[Variant.TOTAL_ITALIAN]:
                assert results[Variant.ITALIAN]
            if results[Variant.TOTAL_ROMAN]:
                assert results[Variant.ROMAN]
                assert results[Variant.TOTAL_ITALIAN]

    def test_all_ones_is_total_italian(self):
        rng = random.Random(9)
        tried = 0
        while tried < 50:
            d = random_digraph(rng.randint(2, 8), rng.random(), rng.randrange(2**32))
            if d.has_isolated_vertex():
                continue
            tried += 1
            assert validate(d, (1,) * d.order, Variant.TOTAL_ITALIAN)

    def test_total_two_matches_indicator_labeling(self):
        rng = random.Random(17)
        tried = 0
        while tried < 300:
            d = random_digraph(rng.randint(2, 7), rng.random(), rng.randrange(2**32))
            if d.has_isolated_vertex():
                continue
            tried += 1
            members = frozenset(v for v in range(d.order) if rng.random() < 0.5)
            indicator = tuple(1 if v in members else 0 for v in range(d.order))
            assert validate(d, members, Variant.TOTAL_TWO_DOMINATING_SET) == validate(
                d, indicator, Variant.TOTAL_ITALIAN
            )

    def test_validate_is_pure(self):
        d = out_star(3)
        for _ in range(3):
            assert validate(d, (2, 1, 0), Variant.TOTAL_ITALIAN)
