import pytest

from pnca.core.gf2 import (
    BinaryPolynomial, FieldContext, elem_add, elem_mul, elem_pow, element_from_int, field_alpha,
    field_one, field_zero, format_poly, parse_poly,
    is_irreducible, is_primitive, poly_derivative, poly_divmod, poly_gcd, poly_mul, poly_pow,
    poly_powmod, poly_sqrt, prime_factors, primitive_polynomials, trace, trace_by_frobenius,
)
from pnca.errors import BoundExceededError, FieldMismatchError, PolynomialError

P = BinaryPolynomial.parse


def test_polynomial_text_roundtrip():
    p = P("x^5+x^4+x^2+x+1")
    assert p.mask == 0x37
    assert str(p) == "x^5+x^4+x^2+x+1"
    assert p.degree == 5
    assert BinaryPolynomial(0).degree == -1
    assert P("0x37") == p


def test_arithmetic():
    assert poly_mul(P("x+1"), P("x+1")) == P("x^2+1")
    assert P("x+1") ** 16 == BinaryPolynomial((1 << 16) | 1)
    assert poly_pow(P("x^2+x+1"), 0) == BinaryPolynomial.one()
    assert P("x^2+1") + P("x^2+x") == P("x+1")
    q, r = poly_divmod(P("x^5+1"), P("x+1"))
    assert q == P("x^4+x^3+x^2+x+1") and not r
    assert poly_gcd(P("x^2+1"), P("x^2+x")) == P("x+1")
    assert poly_powmod(BinaryPolynomial.x(), 7, P("x^3+x^2+1")) == BinaryPolynomial.one()


def test_divide_by_zero():
    with pytest.raises(PolynomialError):
        poly_divmod(P("x+1"), BinaryPolynomial(0))


def test_negative_exponent():
    with pytest.raises(PolynomialError):
        poly_pow(P("x+1"), -1)


def test_sqrt_and_derivative():
    assert poly_sqrt(P("x^4+1")) == P("x^2+1")
    assert poly_sqrt(P("x^3+1")) is None
    assert poly_derivative(P("x^3+x^2+1")) == P("x^2")
    assert not poly_derivative(P("x^4+x^2+1"))


def test_irreducible_but_not_primitive():
    f = P("x^4+x^3+x^2+x+1")
    assert is_irreducible(f)
    assert not is_primitive(f)


@pytest.mark.parametrize("text,expected", [
    ("x+1", True),
    ("x", False),
    ("x^2+x+1", True),
    ("x^2+1", False),
    ("x^3+x^2+1", True),
    ("x^5+x^4+x^2+x+1", True),
    ("x^6+x^3+1", False),
])
def test_is_primitive(text, expected):
    assert is_primitive(P(text)) is expected


def test_primitive_degree_bound():
    with pytest.raises(BoundExceededError):
        is_primitive(BinaryPolynomial((1 << 33) | 1))
    # degree 32 在上限內
    assert isinstance(is_primitive(BinaryPolynomial((1 << 32) | 0b10001101 | 1)), bool)


def test_primitive_polynomials_listing():
    assert primitive_polynomials(3) == [P("x^3+x+1"), P("x^3+x^2+1")]
    assert [len(primitive_polynomials(r)) for r in range(2, 9)] == [1, 2, 2, 6, 6, 18, 16]


def test_prime_factors():
    assert prime_factors(31) == (31,)
    assert prime_factors(255) == (3, 5, 17)
    assert prime_factors((1 << 32) - 1) == (3, 5, 17, 257, 65537)


def test_field_basics():
    ctx = FieldContext.parse("x^3+x+1")
    a = field_alpha(ctx)
    assert ctx.r == 3 and ctx.size == 8
    assert elem_pow(a, 7) == field_one(ctx)
    assert elem_pow(a, 3).bits == 0b011
    assert elem_mul(a, a).bits == 0b100
    assert str(elem_pow(a, 3)) == "α+1"
    assert (a * a + a).bits == 0b110


def test_field_rejects_non_primitive_modulus():
    with pytest.raises(PolynomialError):
        FieldContext.parse("x^4+x^3+x^2+x+1")


def test_element_range():
    ctx = FieldContext.parse("x^3+x+1")
    with pytest.raises(PolynomialError):
        ctx.element(8)


def test_mismatched_fields():
    a = FieldContext.parse("x^3+x+1").alpha()
    b = FieldContext.parse("x^3+x^2+1").alpha()
    with pytest.raises(FieldMismatchError):
        elem_add(a, b)
    with pytest.raises(FieldMismatchError):
        elem_mul(a, b)


@pytest.mark.parametrize("modulus", ["x^3+x^2+1", "x^5+x^4+x^2+x+1", "x^8+x^4+x^3+x^2+1"])
def test_trace_matches_frobenius_definition(modulus):
    ctx = FieldContext.parse(modulus)
    traces = [trace(ctx.element(v)) for v in range(ctx.size)]
    assert traces == [trace_by_frobenius(ctx.element(v)) for v in range(ctx.size)]
    # Tr 是 onto GF(2)，一半元素的 trace 為 1
    assert sum(traces) == ctx.size // 2
    assert trace(ctx.one()) == ctx.r % 2


def test_parse_and_format_poly():
    p = parse_poly("x^3 + x^2 + 1")
    assert p == P("0xd")
    assert format_poly(p) == "x^3+x^2+1"
    assert format_poly(parse_poly("0")) == "0"


def test_field_constructors():
    ctx = FieldContext.parse("x^3+x^2+1")
    assert field_zero(ctx).bits == 0 and not field_zero(ctx)
    assert element_from_int(ctx, 5) == ctx.element(5)
    assert elem_add(element_from_int(ctx, 5), field_zero(ctx)).bits == 5
    with pytest.raises(PolynomialError):
        element_from_int(ctx, 8)


@pytest.mark.parametrize("r", range(2, 9))
def test_squaring_is_additive_on_every_pair(r):
    ctx = FieldContext(primitive_polynomials(r)[0])
    elems = [ctx.element(v) for v in range(ctx.size)]
    squares = [elem_mul(a, a).bits for a in elems]
    for a in elems:
        for b in elems:
            s = elem_add(a, b)
            assert elem_mul(s, s).bits == squares[a.bits] ^ squares[b.bits]


@pytest.mark.parametrize("r", range(2, 11))
def test_alpha_has_full_order_for_every_primitive(r):
    order = (1 << r) - 1
    for modulus in primitive_polynomials(r):
        ctx = FieldContext(modulus)
        a = field_alpha(ctx)
        assert elem_pow(a, order) == field_one(ctx)
        for q in prime_factors(order):
            assert elem_pow(a, order // q) != field_one(ctx)
