from fractions import Fraction

import pytest

from polybell.error import Error, ParseError
from polybell.utils import (
    binomial, format_rational, format_rational_full, parse_int,
    parse_rational)


def test_parse_rational_reduces():
    assert parse_rational('3/6') == Fraction(1, 2)
    assert parse_rational('-2') == -2
    assert parse_rational(' 4 ') == 4
    assert parse_rational(Fraction(2, 3)) == Fraction(2, 3)


@pytest.mark.parametrize('text', ['1/0', '1.5', '2/-3', '', 'abc', '1/2/3'])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_rational('x')
    with pytest.raises(Error):
        parse_int('1/2')


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == '2'
    assert format_rational(Fraction(-1, 3)) == '-1/3'
    assert format_rational_full(0) == '0/1'
    assert format_rational_full(Fraction(-6, 4)) == '-3/2'


def test_binomial_outside_range_is_zero():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
