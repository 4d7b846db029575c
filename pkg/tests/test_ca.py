import itertools

import pytest

from pnca.core.gf2 import BinaryPolynomial, poly_pow, primitive_polynomials
from pnca.errors import BoundExceededError, PolynomialError, RuleError
from pnca.schemas import constants as C
from pnca.services.analysis import berlekamp_massey, minimal_period
from pnca.services.ca import (
    CAState, RuleVector, char_poly, classify_state, column_shifts, concat_double,
    concat_to_multiplicity, doublings_for, evolve, reverse, run_column, run_columns, step,
    step_reference, synthesize,
)

R = RuleVector.parse
S = CAState.parse


def test_rule_vector_validation():
    with pytest.raises(RuleError):
        RuleVector(())
    with pytest.raises(RuleError):
        RuleVector((0, 2))
    assert R("100").names() == [150, 90, 90]
    assert str(R("1 0 0")) == "100"


def test_three_cell_rows_and_reversal():
    rows = [str(s) for s in evolve(R(C.EXAMPLE_RULE_R3), S(C.EXAMPLE_SEED_R3), 7)]
    assert tuple(rows) == C.EXAMPLE_ROWS_R3
    rows = [str(s) for s in evolve(R(C.EXAMPLE_RULE_R3_REVERSED), S(C.EXAMPLE_SEED_R3_REVERSED), 7)]
    assert tuple(rows) == C.EXAMPLE_ROWS_R3_REVERSED


def test_cell_one_gives_same_pn_sequence_for_both_automata():
    a = run_column(R(C.EXAMPLE_RULE_R3), S(C.EXAMPLE_SEED_R3), 1, 7)
    b = run_column(R(C.EXAMPLE_RULE_R3_REVERSED), S(C.EXAMPLE_SEED_R3_REVERSED), 1, 7)
    assert str(a) == str(b) == C.EXAMPLE_PN_R3


def test_step_matches_reference_on_every_state():
    rule = R("10110")
    for cells in itertools.product((0, 1), repeat=5):
        s = CAState(cells)
        assert step(rule, s) == step_reference(rule, s)


def test_zero_state_is_fixed():
    assert step(R("1011"), CAState.zeros(4)) == CAState.zeros(4)


def test_length_and_index_errors():
    with pytest.raises(RuleError):
        step(R("100"), S("10"))
    with pytest.raises(RuleError):
        run_column(R("100"), S("101"), 4, 7)
    with pytest.raises(RuleError):
        run_column(R("100"), S("101"), 0, 7)


def test_run_columns_agree_with_run_column():
    rule, s0 = R("10000"), S("10110")
    cols = run_columns(rule, s0, 40)
    for k in range(1, 6):
        assert cols[k - 1] == run_column(rule, s0, k, 40)


def test_char_poly_examples():
    assert char_poly(R(C.EXAMPLE_RULE_R3)) == BinaryPolynomial.parse(C.EXAMPLE_POLY_R3)
    assert char_poly(R(C.EXAMPLE_RULE_R5)) == BinaryPolynomial.parse(C.EXAMPLE_POLY_R5)
    assert char_poly(R("1")) == BinaryPolynomial.parse("x+1")
    assert char_poly(R("0")) == BinaryPolynomial.x()


def test_reversal_shares_char_poly():
    rule = R("1101001")
    assert char_poly(reverse(rule)) == char_poly(rule)


def test_concat_doubling():
    assert str(concat_double(R("10000"))) == "1000110001"
    assert str(concat_double(R("1"))) == "00"
    rule = concat_to_multiplicity(R(C.EXAMPLE_RULE_R5), C.EXAMPLE_MULTIPLICITY)
    assert str(rule) == C.EXAMPLE_RULE_20
    assert char_poly(rule) == poly_pow(BinaryPolynomial.parse(C.EXAMPLE_POLY_R5), 4)


@pytest.mark.parametrize("p,q", [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4)])
def test_doublings_for(p, q):
    assert doublings_for(p) == q


def test_doublings_for_rejects_zero():
    with pytest.raises(RuleError):
        doublings_for(0)


def test_multiplicity_three_uses_four_copies():
    rule = concat_to_multiplicity(R("100"), 3)
    assert len(rule) == 12
    assert char_poly(rule) == poly_pow(BinaryPolynomial.parse("x^3+x^2+1"), 4)


def test_synthesize_three_cells():
    first, second = synthesize(BinaryPolynomial.parse(C.EXAMPLE_POLY_R3))
    assert (str(first), str(second)) == (C.EXAMPLE_RULE_R3_REVERSED, C.EXAMPLE_RULE_R3)


@pytest.mark.parametrize("text", ["x^5+x^4+x^2+x+1", "x^8+x^4+x^3+x^2+1", "x^11+x^2+1"])
def test_synthesize_returns_reversal_pair(text):
    p = BinaryPolynomial.parse(text)
    first, second = synthesize(p)
    assert char_poly(first) == p
    assert second == reverse(first)


def test_synthesize_is_lexicographically_smallest():
    first, _ = synthesize(BinaryPolynomial.parse(C.EXAMPLE_POLY_R5))
    assert str(first) <= C.EXAMPLE_RULE_R5_REVERSED


def test_synthesize_errors():
    with pytest.raises(PolynomialError):
        synthesize(BinaryPolynomial.parse("x^4+x^3+x^2+x+1"))
    with pytest.raises(PolynomialError):
        synthesize(BinaryPolynomial.one())
    with pytest.raises(BoundExceededError):
        synthesize(BinaryPolynomial((1 << 25) | 0b1001))


@pytest.mark.parametrize("state,expected", [
    ("1111", C.SYM_DOUBLY),
    ("0110", C.SYM_SYMMETRIC),
    ("1010", C.SYM_REPETITIVE),
    ("1000", C.SYM_OTHER),
])
def test_classify_state(state, expected):
    assert classify_state(S(state)) == expected


def test_classify_state_needs_even_length():
    with pytest.raises(RuleError):
        classify_state(S("101"))


def test_other_cells_are_shifts_of_cell_one():
    shifts = column_shifts(R(C.EXAMPLE_RULE_R5), S("10110"))
    assert shifts[0] == 0
    assert all(k is not None for k in shifts)
    assert len(set(shifts)) == 5


def test_synthesize_degree_one():
    assert synthesize(BinaryPolynomial.parse("x+1")) == (R("1"), R("1"))


@pytest.mark.parametrize("r", range(2, 11))
def test_every_column_is_pn_from_every_nonzero_state(r):
    p = primitive_polynomials(r)[0]
    rule, _ = synthesize(p)
    period = (1 << r) - 1
    s0 = CAState.from_int(1, r)
    rows = evolve(rule, s0, period)
    # 單一 cycle 走過全部非零狀態，其他起點的 column 只是平移
    assert len({row.as_int() for row in rows}) == period
    assert 0 not in {row.as_int() for row in rows}
    for col in run_columns(rule, s0, 2 * period):
        assert minimal_period(col.bits) == period
        assert berlekamp_massey(col.bits[:4 * r]).minimal_poly == p
