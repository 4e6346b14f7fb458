from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibpcubes.errors import SizeLimitError
from fibpcubes.sequences import binomial, pfib
from fibpcubes.strings import (
    PString,
    count_by_weight,
    enumerate_pstrings,
    enumerate_reduced,
    greedy_factor,
    is_pvalid,
    max_weight,
    star_collapse,
)


def naive_valid(text, p):
    ones = [i for i, ch in enumerate(text) if ch == "1"]
    return all(j - i >= p + 1 for i, j in zip(ones, ones[1:]))


def brute_enumeration(p, n):
    return [
        "".join(bits)
        for bits in product("01", repeat=n)
        if naive_valid("".join(bits), p)
    ]


class TestPString:
    def test_round_trip(self):
        for text in ("", "0", "1", "1001", "0110"):
            assert PString.from01(text).to01() == text

    def test_weight_and_ones(self):
        u = PString.from01("10010")
        assert u.weight == 2
        assert u.ones() == (1, 4)
        assert PString.from01("").ones() == ()

    def test_bit_is_one_indexed_from_left(self):
        u = PString.from01("100")
        assert [u.bit(i) for i in (1, 2, 3)] == [1, 0, 0]

    def test_flip(self):
        assert PString.from01("100").flip(3).to01() == "101"
        assert PString.from01("101").flip(1).to01() == "001"

    def test_concat(self):
        assert PString.from01("10").concat(PString.from01("01")).to01() == "1001"

    def test_ordering_is_lexicographic(self):
        texts = ["0011", "1100", "0000", "0101"]
        strings = sorted(PString.from01(t) for t in texts)
        assert [s.to01() for s in strings] == sorted(texts)

    def test_validation(self):
        with pytest.raises(ValueError):
            PString(-1, 0)
        with pytest.raises(ValueError):
            PString(2, 4)
        with pytest.raises(ValueError):
            PString.from01("10").bit(3)
        with pytest.raises(ValueError):
            PString.from01("10").flip(0)


class TestValidity:
    def test_examples(self):
        assert is_pvalid(PString.from01("1001"), 2)
        assert not is_pvalid(PString.from01("1010"), 2)
        assert is_pvalid(PString.from01("0000"), 5)

    def test_p_zero_accepts_everything(self):
        for bits in range(16):
            assert is_pvalid(PString(4, bits), 0)

    @given(st.integers(0, 3), st.binary(min_size=0, max_size=2))
    def test_matches_naive_gap_check(self, p, raw):
        text = "".join(format(b, "08b") for b in raw)
        assert is_pvalid(PString.from01(text), p) == naive_valid(text, p)


class TestEnumeration:
    def test_exact_small_case(self):
        got = [u.to01() for u in enumerate_pstrings(2, 4)]
        assert got == ["0000", "0001", "0010", "0100", "1000", "1001"]

    def test_unit_cases(self):
        assert len(enumerate_pstrings(1, 3)) == 5
        empty = enumerate_pstrings(3, 0)
        assert empty == [PString(0, 0)]

    def test_p_zero_gives_all_strings(self):
        for n in range(6):
            got = enumerate_pstrings(0, n)
            assert [u.bits for u in got] == list(range(2**n))

    def test_counts_match_sequence(self):
        for p in range(5):
            for n in range(13):
                assert len(enumerate_pstrings(p, n)) == pfib(p, n + p + 1)

    def test_matches_brute_force_filter(self):
        for p in range(4):
            for n in range(9):
                assert [u.to01() for u in enumerate_pstrings(p, n)] == (
                    brute_enumeration(p, n)
                )

    def test_sorted_and_valid(self):
        for p in (1, 3):
            strings = enumerate_pstrings(p, 10)
            assert strings == sorted(strings)
            assert all(is_pvalid(u, p) for u in strings)

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            enumerate_pstrings(1, 31)
        with pytest.raises(SizeLimitError):
            enumerate_pstrings(1, 5, cap=4)


class TestWeights:
    def test_examples(self):
        assert count_by_weight(1, 4, 2) == 3
        assert count_by_weight(2, 4, 2) == 1
        for p, n in ((1, 5), (3, 2), (0, 4)):
            assert count_by_weight(p, n, 0) == 1

    def test_census_matches_enumeration(self):
        for p in range(1, 4):
            for n in range(15):
                strings = enumerate_pstrings(p, n)
                top = max_weight(p, n)
                for w in range(top + 2):
                    expected = sum(1 for u in strings if u.weight == w)
                    assert count_by_weight(p, n, w) == expected

    def test_census_partitions_vertex_set(self):
        for p in range(5):
            for n in range(14):
                total = sum(
                    count_by_weight(p, n, w) for w in range(max_weight(p, n) + 1)
                )
                assert total == pfib(p, n + p + 1)

    def test_max_weight(self):
        assert max_weight(2, 4) == 2
        assert max_weight(1, 5) == 3
        for p in range(1, 5):
            assert max_weight(p, 0) == 0

    def test_max_weight_is_attained(self):
        for p in range(1, 4):
            for n in range(12):
                best = max(u.weight for u in enumerate_pstrings(p, n))
                assert best == max_weight(p, n)


class TestStarCollapse:
    def test_examples(self):
        assert star_collapse(PString.from01("101"), 1).to01() == "11"
        assert star_collapse(PString.from01("1001"), 2).to01() == "11"
        # weight 0: the appended zeros survive uncollapsed
        assert star_collapse(PString.from01("0000"), 2).to01() == "000000"

    def test_requires_positive_p_and_validity(self):
        with pytest.raises(ValueError):
            star_collapse(PString.from01("101"), 0)
        with pytest.raises(ValueError):
            star_collapse(PString.from01("11"), 1)

    def test_length_weight_and_injectivity(self):
        for p in range(1, 4):
            for n in range(13):
                strings = enumerate_pstrings(p, n)
                images = [star_collapse(u, p) for u in strings]
                for u, img in zip(strings, images):
                    w = u.weight
                    assert img.n == n + p - w * p
                    assert img.weight == w
                assert len(set(images)) == len(strings)

    def test_image_fills_each_weight_class(self):
        for p in (1, 2):
            for n in range(11):
                strings = enumerate_pstrings(p, n)
                for w in range(max_weight(p, n) + 1):
                    image = {
                        star_collapse(u, p) for u in strings if u.weight == w
                    }
                    assert len(image) == binomial(n - w * p + p, w)
                    length = n + p - w * p
                    full = {
                        PString(length, bits)
                        for bits in range(1 << length)
                        if PString(length, bits).weight == w
                    }
                    assert image == full


class TestGreedyFactor:
    def test_tokens(self):
        tokens = greedy_factor(PString.from01("0100100"), 2)
        assert [t.to01() for t in tokens] == ["0", "100", "100"]
        assert greedy_factor(PString(0, 0), 3) == []

    def test_round_trip_on_extended_strings(self):
        for p in range(1, 4):
            zeros = PString(p, 0)
            for n in range(13):
                for u in enumerate_pstrings(p, n):
                    extended = u.concat(zeros)
                    tokens = greedy_factor(extended, p)
                    rebuilt = PString(0, 0)
                    for token in tokens:
                        assert token.to01() in ("0", "1" + "0" * p)
                        rebuilt = rebuilt.concat(token)
                    assert rebuilt == extended
                    blocks = sum(1 for t in tokens if t.weight == 1)
                    assert blocks == u.weight

    def test_rejects_strings_outside_the_monoid(self):
        with pytest.raises(ValueError):
            greedy_factor(PString.from01("1"), 1)
        with pytest.raises(ValueError):
            greedy_factor(PString.from01("10"), 2)
        with pytest.raises(ValueError):
            greedy_factor(PString.from01("0110"), 1)


class TestReduced:
    def test_examples(self):
        assert [u.to01() for u in enumerate_reduced(2, 3)] == ["000", "100"]
        assert [u.to01() for u in enumerate_reduced(1, 2)] == ["00", "10"]
        for p in range(2, 5):
            for m in range(p):
                assert enumerate_reduced(p, m) == [PString(m, 0)]

    def test_counts(self):
        for p in range(1, 4):
            for n in range(14):
                assert len(enumerate_reduced(p, n)) == pfib(p, n + 1)

    def test_matches_suffix_filter(self):
        # independent definition: p-valid strings not ending in 1 0^r, r < p
        def ends_short(u, p):
            text = u.to01()
            for r in range(p):
                if text.endswith("1" + "0" * r):
                    return True
            return False

        for p in range(1, 4):
            for n in range(11):
                expected = [
                    u for u in enumerate_pstrings(p, n) if not ends_short(u, p)
                ]
                assert enumerate_reduced(p, n) == expected

    def test_requires_positive_p(self):
        with pytest.raises(ValueError):
            enumerate_reduced(0, 3)

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            enumerate_reduced(2, 31)
