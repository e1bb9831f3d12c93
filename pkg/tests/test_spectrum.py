import random

import pytest
from hypothesis import given, strategies as st

from invsub.combinatorics import partition_count
from invsub.spectrum import (
    BlockConfig,
    SpectrumSet,
    attainable_counts,
    attainable_counts_bruteforce,
    count_for_config,
    dimension_profile,
    enumerate_configs,
)

from _oracles import brute_force_profile


@st.composite
def block_configs(draw, max_n: int = 10) -> BlockConfig:
    n = draw(st.integers(1, max_n))
    r = draw(st.integers(0, n // 2))
    s = n - 2 * r
    return BlockConfig(_draw_partition(draw, r), _draw_partition(draw, s))


def _draw_partition(draw, n: int) -> tuple[int, ...]:
    parts = []
    remaining = n
    cap = n
    while remaining > 0:
        part = draw(st.integers(1, min(cap, remaining)))
        parts.append(part)
        cap = part
        remaining -= part
    return tuple(parts)


class TestBlockConfig:
    def test_canonicalizes_part_order(self):
        a = BlockConfig((1, 2), (3, 1, 2))
        b = BlockConfig((2, 1), (1, 2, 3))
        assert a == b
        assert a.complex_blocks == (2, 1)
        assert a.real_blocks == (3, 2, 1)

    def test_dimension(self):
        assert BlockConfig((2,), (1, 1)).n == 6

    def test_rejects_nonpositive_parts(self):
        with pytest.raises(ValueError):
            BlockConfig((0,), (1,))
        with pytest.raises(ValueError):
            BlockConfig((), (-2,))

    def test_rejects_empty_config(self):
        with pytest.raises(ValueError):
            BlockConfig((), ())

    @given(block_configs(), st.randoms(use_true_random=False))
    def test_count_invariant_under_shuffle(self, config, rng):
        complex_parts = list(config.complex_blocks)
        real_parts = list(config.real_blocks)
        rng.shuffle(complex_parts)
        rng.shuffle(real_parts)
        shuffled = BlockConfig(tuple(complex_parts), tuple(real_parts))
        assert shuffled == config
        assert count_for_config(shuffled) == count_for_config(config)


class TestCountForConfig:
    @pytest.mark.parametrize(
        "complex_blocks, real_blocks, expected",
        [
            ((), (1, 1, 1, 1), 16),
            ((1,), (2,), 6),
            ((2,), (), 3),
            ((), (4,), 5),
            ((1,), (1, 1), 8),
        ],
    )
    def test_reference_values(self, complex_blocks, real_blocks, expected):
        assert count_for_config(BlockConfig(complex_blocks, real_blocks)) == expected

    @given(block_configs())
    def test_is_product_of_part_plus_one(self, config):
        expected = 1
        for part in config.complex_blocks + config.real_blocks:
            expected *= part + 1
        assert count_for_config(config) == expected


class TestDimensionProfile:
    @pytest.mark.parametrize(
        "complex_blocks, real_blocks, expected",
        [
            ((2,), (), (1, 0, 1, 0, 1)),
            ((), (1, 1), (1, 2, 1)),
            ((), (2, 1), (1, 2, 2, 1)),
            ((1,), (), (1, 0, 1)),
        ],
    )
    def test_goldens(self, complex_blocks, real_blocks, expected):
        assert dimension_profile(BlockConfig(complex_blocks, real_blocks)) == expected

    @given(block_configs())
    def test_sums_to_count_and_has_unit_ends(self, config):
        profile = dimension_profile(config)
        assert len(profile) == config.n + 1
        assert sum(profile) == count_for_config(config)
        assert profile[0] == 1
        assert profile[config.n] == 1

    @given(block_configs())
    def test_palindromic(self, config):
        profile = dimension_profile(config)
        assert profile == profile[::-1]

    def test_matches_brute_force_for_all_configs_up_to_7(self):
        for n in range(1, 8):
            for config in enumerate_configs(n):
                assert dimension_profile(config) == brute_force_profile(config)


class TestEnumerateConfigs:
    def test_n4_has_nine(self):
        configs = list(enumerate_configs(4))
        assert len(configs) == 9

    def test_n1(self):
        assert list(enumerate_configs(1)) == [BlockConfig((), (1,))]

    def test_n2_has_three(self):
        assert len(list(enumerate_configs(2))) == 3

    @given(st.integers(1, 10))
    def test_unique_and_consistent(self, n):
        configs = list(enumerate_configs(n))
        assert len(configs) == len(set(configs))
        assert all(config.n == n for config in configs)
        expected = sum(
            partition_count(r) * partition_count(n - 2 * r)
            for r in range(n // 2 + 1)
        )
        assert len(configs) == expected

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            list(enumerate_configs(0))


class TestSpectrumSet:
    def test_rejects_unsorted_values(self):
        with pytest.raises(ValueError):
            SpectrumSet(2, (4, 2))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            SpectrumSet(2, (2, 2, 4))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            SpectrumSet(2, ())

    def test_membership_and_iteration(self):
        s = attainable_counts(4)
        assert 9 in s
        assert 7 not in s
        assert list(s) == [3, 4, 5, 6, 8, 9, 12, 16]
        assert len(s) == 8


class TestAttainableCounts:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, (2,)),
            (2, (2, 3, 4)),
            (3, (4, 6, 8)),
            (4, (3, 4, 5, 6, 8, 9, 12, 16)),
        ],
    )
    def test_small_spectra(self, n, expected):
        assert tuple(attainable_counts(n)) == expected
        assert tuple(attainable_counts_bruteforce(n)) == expected

    def test_agrees_with_brute_force_up_to_10(self):
        for n in range(1, 11):
            assert tuple(attainable_counts(n)) == tuple(
                attainable_counts_bruteforce(n)
            )

    @given(st.integers(1, 16))
    def test_structural_properties(self, n):
        values = tuple(attainable_counts(n))
        assert values[0] >= 2
        assert values[-1] == 2**n
        assert n + 1 in values

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            attainable_counts(0)
        with pytest.raises(ValueError):
            attainable_counts_bruteforce(0)
