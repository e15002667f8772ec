import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gammes.pitch import (
    ONE,
    TWO,
    Pitch,
    PitchRatio,
    cents,
    compare,
    decimal,
    ell,
    format_ratio,
    multiply,
    octave_reduce,
    xi,
)

from helpers import last_digit_distance, printed_ratio
from reference_data import CENTS_MISPRINTS, NOTE_TABLE

exps = st.integers(min_value=-300, max_value=300)
ratios = st.builds(PitchRatio, exps, exps)


@pytest.mark.parametrize("k, expected", [(0, 0), (12, 19), (-5, -8), (53, 84), (1, 1), (-1, -2)])
def test_ell_examples(k, expected):
    assert ell(k) == expected


@pytest.mark.parametrize("k", range(-200, 201))
def test_ell_brackets_power_of_three(k):
    # 2**ell <= 3**k < 2**(ell+1), cleared of negative exponents
    e = ell(k)
    lhs, mid, rhs = Fraction(2) ** e, Fraction(3) ** k, Fraction(2) ** (e + 1)
    assert lhs <= mid < rhs


def test_ell_negative_identity():
    for k in range(1, 100):
        assert ell(-k) == -ell(k) - 1


@pytest.mark.parametrize(
    "k, value", [(1, Fraction(3, 2)), (2, Fraction(9, 8)), (-3, Fraction(32, 27)), (19, Fraction(3**19, 2**30))]
)
def test_xi_examples(k, value):
    assert xi(k).as_fraction() == value


@given(st.integers(min_value=-500, max_value=500))
def test_xi_is_reduced(k):
    assert xi(k).is_reduced
    assert ONE <= xi(k) < TWO


def test_multiply():
    assert multiply(xi(1), xi(1)).as_fraction() == Fraction(9, 4)
    assert multiply(xi(5), ONE) == xi(5)
    # 9/8 * 27/16 = 243/128 stays below the octave
    assert multiply(xi(2), xi(3)) == xi(5)
    assert multiply(xi(1), xi(1)) == xi(2).shift_octaves(1)


def test_octave_reduce_examples():
    assert octave_reduce(PitchRatio(2, 2)) == (xi(2), 1)
    assert octave_reduce(ONE) == (ONE, 0)
    assert octave_reduce(PitchRatio(-3, -6)) == (PitchRatio(-3, -5), 1)


@given(ratios)
def test_octave_reduce_matches_repeated_halving(a):
    value = a.as_fraction()
    e = 0
    while value >= 2:
        value /= 2
        e += 1
    while value < 1:
        value *= 2
        e -= 1
    r, got_e = octave_reduce(a)
    assert (r.as_fraction(), got_e) == (value, e)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_product_of_two_notes_reduces_with_small_octave(k, j):
    r, e = octave_reduce(xi(k) * xi(j))
    assert r == xi(k + j)
    assert e in (0, 1)


def test_compare_examples():
    assert compare(xi(11), xi(-1)) > 0
    assert compare(xi(7), xi(7)) == 0
    assert compare(xi(12), xi(0)) > 0


@given(ratios, ratios)
def test_compare_agrees_with_fractions(a, b):
    fa, fb = a.as_fraction(), b.as_fraction()
    assert compare(a, b) == (fa > fb) - (fa < fb)
    assert (a < b) == (fa < fb)


@pytest.mark.parametrize("k, expected", [(1, 702), (0, 0), (12, 23), (-4, 792)])
def test_cents_examples(k, expected):
    assert cents(xi(k)) == expected


@pytest.mark.parametrize("k", range(-30, 31))
def test_cents_matches_float_formula(k):
    # small exponents keep the float estimate far from a rounding boundary
    assert cents(xi(k)) == round(1200 * math.log2(3) * k - 1200 * ell(k))


def test_cents_of_octaves():
    assert cents(TWO) == 1200
    assert cents(PitchRatio(0, 3)) == -3600


def test_decimal_examples():
    assert decimal(xi(3), 6) == "1.687500"
    assert decimal(xi(0), 6) == "1.000000"
    assert decimal(xi(-13), 6) == "1.315387"
    assert decimal(PitchRatio(2, 0), 2) == "9.00"
    with pytest.raises(ValueError):
        decimal(xi(1), 0)


def test_decimal_rounds_half_up():
    # 3**5/2**7 = 1.8984375 exactly
    assert decimal(xi(5), 6) == "1.898438"


def test_compare_consistent_with_table_decimals():
    rows = sorted(NOTE_TABLE, key=lambda r: printed_ratio(r[2]))
    for (k1, *_), (k2, *_) in zip(rows, rows[1:]):
        assert compare(xi(k1), xi(k2)) <= 0
    for k, _, ratio, dec, _ in NOTE_TABLE:
        assert xi(k).as_fraction() == printed_ratio(ratio)
        assert last_digit_distance(decimal(xi(k)), dec) <= 1


def test_format_ratio():
    assert format_ratio(xi(7)) == "3⁷/2¹¹"
    assert format_ratio(xi(-3)) == "2⁵/3³"
    assert format_ratio(xi(-3), unicode=False) == "2^5/3^3"
    assert format_ratio(xi(1), unicode=False) == "3/2"
    assert format_ratio(ONE) == "1"
    assert format_ratio(PitchRatio(0, 5), unicode=False) == "1/2^5"
    assert format_ratio(PitchRatio(-2, 1), unicode=False) == "1/(3^2*2)"


def test_pitch_absolute_ratio():
    assert Pitch(2, 1).ratio.as_fraction() == Fraction(9, 4)
    assert Pitch(-2, -1).ratio == xi(-2).shift_octaves(-1)
    assert Pitch.from_ratio(PitchRatio(2, 2)) == Pitch(2, 1)
    assert Pitch(3).shift_octaves(2) == Pitch(3, 2)


@given(ratios)
def test_pitch_from_ratio_round_trip(a):
    assert Pitch.from_ratio(a).ratio == a


def test_cents_agree_with_printed_decimals():
    for k, _, _, dec, printed in NOTE_TABLE:
        assert cents(xi(k)) == round(1200 * math.log2(float(dec)))
        if k not in CENTS_MISPRINTS:
            assert cents(xi(k)) == printed


def test_cents_misprints_are_real():
    assert cents(xi(13)) == 725 and CENTS_MISPRINTS[13] == 735
    assert cents(xi(15)) == 929 and CENTS_MISPRINTS[15] == 923
