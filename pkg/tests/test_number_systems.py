import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import digit_mask, lexmax_masks, lexmax_masks_zeck, min_covering_planes
from planestego.number_systems import (
    DigitVector,
    SchemeKind,
    WeightScheme,
    WeightTable,
    build_weight_table,
    compose,
    decompose,
    generate_weights,
    zeckendorf_valid,
)

BINARY = WeightScheme(SchemeKind.BINARY)
FIBONACCI = WeightScheme(SchemeKind.FIBONACCI)
PRIME = WeightScheme(SchemeKind.PRIME)
NATURAL = WeightScheme(SchemeKind.NATURAL)
ALL_SCHEMES = [BINARY, FIBONACCI, PRIME, NATURAL]


def weights_of(dv: DigitVector, table: WeightTable) -> set[int]:
    return {w for d, w in zip(dv.digits, table.weights) if d}


class TestWeightTables:
    def test_binary_k8(self):
        t = build_weight_table(BINARY, 8)
        assert t.n == 8
        assert t.weights == (1, 2, 4, 8, 16, 32, 64, 128)

    def test_fibonacci_k8(self):
        t = build_weight_table(FIBONACCI, 8)
        assert t.n == 12
        assert t.weights == (1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233)

    def test_prime_k8(self):
        t = build_weight_table(PRIME, 8)
        assert t.n == 15
        assert t.weights == (1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)

    def test_natural_k8(self):
        t = build_weight_table(NATURAL, 8)
        assert t.n == 23
        assert t.weights == tuple(range(1, 24))

    @pytest.mark.parametrize("k", range(1, 17))
    def test_binary_n_equals_k(self, k):
        t = build_weight_table(BINARY, k)
        assert t.n == k
        assert t.weights == tuple(1 << i for i in range(k))

    @pytest.mark.parametrize("scheme", ALL_SCHEMES, ids=lambda s: s.kind.value)
    @pytest.mark.parametrize("k", [1, 4, 8, 12])
    def test_weights_strictly_ascending(self, scheme, k):
        t = build_weight_table(scheme, k)
        assert all(a < b for a, b in zip(t.weights, t.weights[1:]))

    @pytest.mark.parametrize("k", [0, -3, 17, 100])
    def test_k_out_of_range(self, k):
        with pytest.raises(ValueError):
            build_weight_table(NATURAL, k)

    @pytest.mark.parametrize("scheme", ALL_SCHEMES, ids=lambda s: s.kind.value)
    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
    def test_minimal_n_matches_bruteforce(self, scheme, k):
        # representability-based oracle, no greedy involved
        assert build_weight_table(scheme, k).n == min_covering_planes(scheme, k)

    def test_natural_k16_smoke(self):
        assert build_weight_table(NATURAL, 16).n == 362


class TestWeightScheme:
    def test_p_normalized_for_non_fibonacci(self):
        assert WeightScheme(SchemeKind.PRIME, p=7).p == 1
        assert WeightScheme(SchemeKind.FIBONACCI, p=2).p == 2

    def test_bad_p(self):
        with pytest.raises(ValueError):
            WeightScheme(SchemeKind.FIBONACCI, p=0)

    def test_fibonacci_higher_order_sequences(self):
        assert generate_weights(WeightScheme(SchemeKind.FIBONACCI, p=2), 8) == (
            1, 2, 3, 4, 6, 9, 13, 19,
        )

    @pytest.mark.parametrize("p", [2, 3])
    def test_fibonacci_higher_order_roundtrip(self, p):
        scheme = WeightScheme(SchemeKind.FIBONACCI, p=p)
        t = build_weight_table(scheme, 8)
        for v in range(256):
            dv = decompose(v, t)
            assert zeckendorf_valid(dv, p)
            assert compose(dv, t) == v


class TestDecompose:
    @pytest.mark.parametrize("scheme", ALL_SCHEMES, ids=lambda s: s.kind.value)
    def test_zero_is_all_zero(self, scheme):
        t = build_weight_table(scheme, 8)
        assert decompose(0, t).digits == (0,) * t.n

    def test_natural_255(self):
        t = build_weight_table(NATURAL, 8)
        assert weights_of(decompose(255, t), t) == set(range(7, 24))

    def test_fibonacci_100(self):
        t = build_weight_table(FIBONACCI, 8)
        assert weights_of(decompose(100, t), t) == {89, 8, 3}

    def test_prime_255(self):
        t = build_weight_table(PRIME, 8)
        assert weights_of(decompose(255, t), t) == {43, 41, 37, 31, 29, 23, 19, 17, 13, 2}

    @pytest.mark.parametrize("v", [-1, 256, 1000])
    def test_out_of_range(self, v):
        t = build_weight_table(BINARY, 8)
        with pytest.raises(ValueError):
            decompose(v, t)

    @pytest.mark.parametrize("scheme", ALL_SCHEMES, ids=lambda s: s.kind.value)
    def test_roundtrip_exhaustive_k8(self, scheme):
        t = build_weight_table(scheme, 8)
        assert all(compose(decompose(v, t), t) == v for v in range(256))

    @pytest.mark.parametrize("scheme", ALL_SCHEMES, ids=lambda s: s.kind.value)
    def test_matches_lexicographic_oracle_k6(self, scheme):
        t = build_weight_table(scheme, 6)
        if scheme.kind is SchemeKind.FIBONACCI:
            best = lexmax_masks_zeck(t.weights, 63, scheme.p)
        else:
            best = lexmax_masks(t.weights, 63)
        for v in range(64):
            assert digit_mask(decompose(v, t)) == best[v]

    def test_fibonacci_decompositions_are_gap_valid(self):
        t = build_weight_table(FIBONACCI, 8)
        assert all(zeckendorf_valid(decompose(v, t), 1) for v in range(256))


class TestCompose:
    def test_all_zero(self):
        t = build_weight_table(PRIME, 8)
        assert compose(DigitVector((0,) * t.n), t) == 0

    def test_single_unit_weight(self):
        t = build_weight_table(NATURAL, 8)
        assert compose(DigitVector((1,) + (0,) * (t.n - 1)), t) == 1

    def test_fibonacci_100_inverse(self):
        t = build_weight_table(FIBONACCI, 8)
        digits = tuple(int(w in {3, 8, 89}) for w in t.weights)
        assert compose(DigitVector(digits), t) == 100

    def test_length_mismatch(self):
        t = build_weight_table(BINARY, 8)
        with pytest.raises(ValueError):
            compose(DigitVector((0, 1)), t)

    @given(k=st.integers(1, 8), data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_random(self, k, data):
        kind = data.draw(st.sampled_from(list(SchemeKind)))
        p = data.draw(st.integers(1, 3)) if kind is SchemeKind.FIBONACCI else 1
        t = build_weight_table(WeightScheme(kind, p=p), k)
        v = data.draw(st.integers(0, t.max_value))
        assert compose(decompose(v, t), t) == v


class TestZeckendorfValid:
    def test_all_zero(self):
        assert zeckendorf_valid(DigitVector((0,) * 12), 1)

    def test_spread_indices(self):
        digits = [0] * 12
        for i in (2, 4, 9):  # the weights 3, 8, 89
            digits[i] = 1
        assert zeckendorf_valid(DigitVector(tuple(digits)), 1)

    def test_adjacent_indices_rejected(self):
        digits = [0] * 12
        digits[1] = digits[2] = 1  # the weights 2 and 3
        assert not zeckendorf_valid(DigitVector(tuple(digits)), 1)

    def test_distance_respects_order(self):
        digits = (1, 0, 1, 0, 0, 0)
        assert zeckendorf_valid(DigitVector(digits), 1)
        assert not zeckendorf_valid(DigitVector(digits), 2)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            zeckendorf_valid(DigitVector((0, 1)), 0)


class TestZeckendorfUniqueness:
    def test_exactly_one_valid_subset_per_value(self):
        from oracles import count_zeck_subsets

        t = build_weight_table(FIBONACCI, 8)
        counts = count_zeck_subsets(t.weights, 255, 1)
        assert all(c == 1 for c in counts)
