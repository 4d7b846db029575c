import pytest

from pnca.core.bitseq import BitSequence
from pnca.core.gf2 import BinaryPolynomial, poly_pow
from pnca.errors import OutsideModelClassError, PolynomialError, SequenceError, SingularSystemError
from pnca.schemas import constants as C
from pnca.services.acceptance import example_shrinking_config
from pnca.services.analysis import berlekamp_massey, minimal_period
from pnca.services.ca import RuleVector, char_poly, concat_to_multiplicity
from pnca.services.diffeq import DifferenceEquation, random_coeffs, recurrence_sequence, solution_sequence
from pnca.services.generators import (
    LFSR, LFSRConfig, ShrinkingConfig, decimate, expected_period, linearize, lfsr_sequence,
    recurrence_check, shrink_keystream, shrinking_bounds, solve_initial_state,
)

P3 = BinaryPolynomial.parse(C.EXAMPLE_POLY_R3)
P5 = BinaryPolynomial.parse(C.EXAMPLE_POLY_R5)


def cfg(poly, seed):
    return LFSRConfig(poly, tuple(int(ch) for ch in seed))


def test_lfsr_pn_sequence():
    assert str(lfsr_sequence(cfg(P3, "111"), 7)) == C.EXAMPLE_PN_R3
    assert lfsr_sequence(cfg(P3, "000"), 10).is_zero()


def test_lfsr_matches_recurrence():
    c = cfg(P5, "10110")
    assert lfsr_sequence(c, 100) == recurrence_sequence(P5, c.state, 100)
    assert minimal_period(lfsr_sequence(c, 93).bits) == 31


def test_lfsr_iterator_and_clock_agree():
    reg = iter(LFSR(cfg(P3, "111")))
    assert [next(reg) for _ in range(7)] == [1, 1, 1, 0, 1, 0, 0]


def test_lfsr_config_validation():
    with pytest.raises(PolynomialError):
        cfg(BinaryPolynomial.parse("x^4+x^3+x^2+x+1"), "1000")
    with pytest.raises(SequenceError):
        cfg(P3, "11")


def test_decimate():
    assert decimate([1, 0, 1, 1], [0, 1, 1, 0]).bits == (0, 1, 0)
    assert decimate([1, 1, 1], [1, 0, 1]).bits == (1, 0, 1)


def test_shrinking_matches_decimation():
    shrink = example_shrinking_config()
    out = shrink_keystream(shrink, 200)
    control = lfsr_sequence(shrink.control, 800)
    data = lfsr_sequence(shrink.data, 800)
    assert out == decimate(control.bits, data.bits)[:200]


def test_shrinking_period_and_complexity():
    shrink = example_shrinking_config()
    out = shrink_keystream(shrink, 2 * C.SHRINK_PERIOD)
    period, lc_low, lc_high = shrinking_bounds(shrink)
    assert (period, lc_low, lc_high) == (C.SHRINK_PERIOD, 10, 20)
    assert minimal_period(out.bits) == C.SHRINK_PERIOD
    assert lc_low < berlekamp_massey(out.bits).lc <= lc_high


def test_shrinking_needs_live_control_register():
    bad = ShrinkingConfig(control=cfg(P3, "000"), data=cfg(P5, "00001"))
    with pytest.raises(SequenceError):
        shrink_keystream(bad, 5)


def test_solve_initial_state():
    s = solve_initial_state(RuleVector.parse(C.EXAMPLE_RULE_R3), 1, [1, 1, 1, 0, 1, 0, 0])
    assert str(s) == C.EXAMPLE_SEED_R3
    s = solve_initial_state(RuleVector.parse(C.EXAMPLE_RULE_R3_REVERSED), 1, [1, 1, 1])
    assert str(s) == C.EXAMPLE_SEED_R3_REVERSED


def test_solve_initial_state_errors():
    with pytest.raises(SequenceError):
        solve_initial_state(RuleVector.parse("100"), 1, [1, 1])
    # 中間格看不出左右對稱的差異
    with pytest.raises(SingularSystemError):
        solve_initial_state(RuleVector.parse("010"), 2, [1, 0, 1])


def test_expected_period():
    assert expected_period(P5, 1) == 31
    assert expected_period(P5, 2) == 62
    assert expected_period(P5, 3) == expected_period(P5, 4) == 124


def test_linearize_pn_sequence():
    keystream = BitSequence.parse(C.EXAMPLE_PN_R3 * 2)
    model = linearize(keystream)
    assert str(model.rule) in (C.EXAMPLE_RULE_R3, C.EXAMPLE_RULE_R3_REVERSED)
    assert model.output(14) == keystream
    assert model.verified_period == 7
    assert recurrence_check(model, 50)


def test_linearize_highest_class_solution(rng):
    eq = DifferenceEquation(P5, C.EXAMPLE_MULTIPLICITY)
    keystream = solution_sequence(eq, random_coeffs(eq, rng, class_index=3), 248)
    model = linearize(keystream)
    assert len(model.rule) == 20
    candidates = {str(concat_to_multiplicity(RuleVector.parse(base), 4))
                  for base in (C.EXAMPLE_RULE_R5, C.EXAMPLE_RULE_R5_REVERSED)}
    assert str(model.rule) in candidates
    assert char_poly(model.rule) == poly_pow(P5, 4)
    assert model.output(248) == keystream
    assert model.verified_period == 124


def test_linearize_shrinking_generator():
    keystream = shrink_keystream(example_shrinking_config(), 2 * C.SHRINK_PERIOD)
    model = linearize(keystream)
    assert len(model.rule) == 20
    assert model.base_poly.degree == 5
    assert 2 < model.multiplicity <= 4
    assert model.output(C.SHRINK_PERIOD) == keystream[:C.SHRINK_PERIOD]
    assert model.verified_period == C.SHRINK_PERIOD
    assert model.to_payload()["read_cell"] == model.read_cell


def test_linearize_rejects_sum_of_unrelated_registers():
    a = lfsr_sequence(cfg(P3, "111"), 80)
    b = lfsr_sequence(cfg(P5, "00001"), 80)
    with pytest.raises(OutsideModelClassError):
        linearize(a ^ b)


def test_linearize_rejects_high_complexity_sums():
    a = lfsr_sequence(LFSRConfig(BinaryPolynomial.parse("x^17+x^3+1"), (1,) + (0,) * 16), 200)
    b = lfsr_sequence(LFSRConfig(BinaryPolynomial.parse("x^19+x^5+x^2+x+1"), (1,) + (0,) * 18), 200)
    assert berlekamp_massey((a ^ b).bits).lc == 36
    with pytest.raises(OutsideModelClassError):
        linearize(a ^ b)
    # 單一脈衝：minimal polynomial 是 x^40
    with pytest.raises(OutsideModelClassError):
        linearize([0] * 39 + [1] + [0] * 40)


def test_linearize_input_errors():
    with pytest.raises(OutsideModelClassError):
        linearize([0] * 20)
    with pytest.raises(SequenceError):
        linearize([])
    with pytest.raises(SequenceError):
        linearize(BitSequence.parse(C.EXAMPLE_PN_R3[:5]))
