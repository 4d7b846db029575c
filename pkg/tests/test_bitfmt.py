import pytest

from pnca.errors import PolynomialError, RuleError
from pnca.utils.bitfmt import (
    bits_to_int, format_bits, format_poly_mask, int_to_bits, parse_bits, parse_hex_list, parse_poly_mask,
)


def test_parse_bits_accepts_separators():
    assert parse_bits("1 0,0") == (1, 0, 0)
    assert format_bits((1, 0, 0, 1)) == "1001"


@pytest.mark.parametrize("text", ["", "102", "abc", " , "])
def test_parse_bits_rejects_garbage(text):
    with pytest.raises(RuleError):
        parse_bits(text)


def test_poly_sparse_and_hex_agree():
    assert parse_poly_mask("x^5+x^4+x^2+x+1") == 0x37
    assert parse_poly_mask("0x37") == 0x37
    assert parse_poly_mask("x^3 + x^2 + 1") == 0b1101
    assert parse_poly_mask("0") == 0


def test_poly_repeated_terms_cancel():
    assert parse_poly_mask("x^2+x^2+1") == 1


@pytest.mark.parametrize("text", ["", "x^", "2x", "x^3++1", "y+1"])
def test_poly_rejects_garbage(text):
    with pytest.raises(PolynomialError):
        parse_poly_mask(text)


def test_format_poly_descending():
    assert format_poly_mask(0x37) == "x^5+x^4+x^2+x+1"
    assert format_poly_mask(0b11) == "x+1"
    assert format_poly_mask(1) == "1"
    assert format_poly_mask(0) == "0"


def test_hex_list():
    assert parse_hex_list("0x1,0,1f") == [1, 0, 31]
    assert parse_hex_list("3 5") == [3, 5]
    with pytest.raises(PolynomialError):
        parse_hex_list("")
    with pytest.raises(PolynomialError):
        parse_hex_list("1,zz")


def test_int_conversion_msb_first():
    assert bits_to_int((1, 0, 0)) == 4
    assert int_to_bits(4, 3) == (1, 0, 0)
    assert int_to_bits(1, 5) == (0, 0, 0, 0, 1)
