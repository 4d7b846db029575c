"""
verify-paper：把三格 / 五格範例、Δ_20 的 cycle census、LC 階梯、封閉式 vs 遞迴對照、shrinking generator 線性化
逐項跑一次，每項回報 PASS / FAIL。
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..config import settings
from ..core.gf2 import BinaryPolynomial, poly_mul, poly_pow
from ..errors import PncaError
from ..schemas import constants as C
from .analysis import berlekamp_massey
from .ca import CAState, RuleVector, char_poly, concat_to_multiplicity, evolve, run_column
from .census import cycle_census
from .diffeq import (
    DifferenceEquation, binomial_bit, binomial_period, profile, random_coeffs,
    recurrence_sequence, solution_sequence,
)
from .generators import LFSRConfig, ShrinkingConfig, linearize, shrink_keystream

logger = logging.getLogger(__name__)

ORACLE_TRIALS = 100


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return f"{head}  {self.detail}" if self.detail else head

    def to_payload(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


# -------------------- 各項檢查：回傳 (通過與否, 說明) --------------------

def check_pn_rows() -> Tuple[bool, str]:
    rule = RuleVector.parse(C.EXAMPLE_RULE_R3)
    rev = RuleVector.parse(C.EXAMPLE_RULE_R3_REVERSED)
    rows = tuple(str(s) for s in evolve(rule, CAState.parse(C.EXAMPLE_SEED_R3), 7))
    rows_rev = tuple(str(s) for s in evolve(rev, CAState.parse(C.EXAMPLE_SEED_R3_REVERSED), 7))
    col = str(run_column(rule, CAState.parse(C.EXAMPLE_SEED_R3), 1, 7))
    col_rev = str(run_column(rev, CAState.parse(C.EXAMPLE_SEED_R3_REVERSED), 1, 7))
    ok = (rows == C.EXAMPLE_ROWS_R3 and rows_rev == C.EXAMPLE_ROWS_R3_REVERSED
          and col == C.EXAMPLE_PN_R3 and col_rev == C.EXAMPLE_PN_R3)
    return ok, f"cell 1 = {col} / {col_rev}"


def check_charpoly() -> Tuple[bool, str]:
    p3 = char_poly(RuleVector.parse(C.EXAMPLE_RULE_R3))
    p5 = char_poly(RuleVector.parse(C.EXAMPLE_RULE_R5))
    ok = (p3 == BinaryPolynomial.parse(C.EXAMPLE_POLY_R3)
          and p5 == BinaryPolynomial.parse(C.EXAMPLE_POLY_R5))
    return ok, f"{p3}; {p5}"


def check_concatenation() -> Tuple[bool, str]:
    base = RuleVector.parse(C.EXAMPLE_RULE_R5)
    rule = concat_to_multiplicity(base, C.EXAMPLE_MULTIPLICITY)
    p = BinaryPolynomial.parse(C.EXAMPLE_POLY_R5)
    expected = poly_mul(poly_mul(p, p), poly_mul(p, p))
    ok = str(rule) == C.EXAMPLE_RULE_20 and char_poly(rule) == expected
    return ok, str(rule)


def check_binomial_table() -> Tuple[bool, str]:
    rows = tuple("".join(str(binomial_bit(n, i)) for n in range(8)) for i in range(8))
    periods = tuple(binomial_period(i) for i in range(8))
    return rows == C.BINOMIAL_ROWS and periods == C.BINOMIAL_PERIODS, f"T = {list(periods)}"


def check_census(threads: int = 1) -> Tuple[bool, str]:
    census = cycle_census(RuleVector.parse(C.EXAMPLE_RULE_20), workers=threads)
    e31, e62 = census.entry(31), census.entry(62)
    ok = (
        census.counts() == C.EXAMPLE_CENSUS_20
        and census.covered_states() == census.total_states
        and e31 is not None and e31.symmetry == {C.SYM_DOUBLY: 31}
        and e62 is not None and e62.symmetry == {C.SYM_SYMMETRIC: 992}
    )
    return ok, f"{census.counts()}"


def check_lc_ladder(rng: np.random.Generator) -> Tuple[bool, str]:
    eq = DifferenceEquation(BinaryPolynomial.parse(C.EXAMPLE_POLY_R5), C.EXAMPLE_MULTIPLICITY)
    lcs = []
    ok = True
    for i in range(eq.p):
        prof = profile(eq, random_coeffs(eq, rng, class_index=i))
        lcs.append(prof.linear_complexity)
        ok &= (prof.linear_complexity == C.EXAMPLE_CLASS_LC[i]
               and prof.minimal_poly == poly_pow(eq.base, i + 1)
               and prof.period == C.EXAMPLE_CLASS_PERIOD[i])
    return ok, f"LC = {lcs}"


def check_oracle(rng: np.random.Generator, trials: int = ORACLE_TRIALS) -> Tuple[bool, str]:
    bases = [BinaryPolynomial.parse(C.EXAMPLE_POLY_R3), BinaryPolynomial.parse(C.EXAMPLE_POLY_R5)]
    mismatches = 0
    for _ in range(trials):
        eq = DifferenceEquation(bases[int(rng.integers(0, len(bases)))], int(rng.integers(2, 5)))
        A = random_coeffs(eq, rng)
        rp = eq.r * eq.p
        closed = solution_sequence(eq, A, 5 * rp)
        if recurrence_sequence(eq.charpoly, closed.bits[:rp], 5 * rp) != closed:
            mismatches += 1
            logger.warning("封閉式與遞迴不一致：P = %s, p = %d, A = %s", eq.base, eq.p, A.as_ints())
    return mismatches == 0, f"{trials - mismatches}/{trials} 組一致"


def example_shrinking_config() -> ShrinkingConfig:
    return ShrinkingConfig(
        control=LFSRConfig(BinaryPolynomial.parse(C.SHRINK_CONTROL_POLY), CAState.parse(C.SHRINK_CONTROL_SEED).cells),
        data=LFSRConfig(BinaryPolynomial.parse(C.SHRINK_DATA_POLY), CAState.parse(C.SHRINK_DATA_SEED).cells),
    )


def check_shrinking() -> Tuple[bool, str]:
    period = C.SHRINK_PERIOD
    keystream = shrink_keystream(example_shrinking_config(), 2 * period)
    model = linearize(keystream)
    lp = berlekamp_massey(keystream.bits)
    ok = (
        len(model.rule) == 20
        and model.base_poly is not None and model.base_poly.degree == 5
        and model.multiplicity is not None and 2 < model.multiplicity <= 4
        and model.output(period) == keystream[:period]
        and model.verified_period == period
    )
    return ok, f"LC = {lp.lc}, rule = {model.rule}, cell {model.read_cell}"


# -------------------- 彙整 --------------------

def run_all(seed: Optional[int] = None, skip_census: bool = False, threads: int = 1) -> List[CheckResult]:
    rng = np.random.default_rng(settings.SEED if seed is None else seed)
    items: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
        ("pn-rows", check_pn_rows),
        ("charpoly", check_charpoly),
        ("concatenation", check_concatenation),
        ("binomial-table", check_binomial_table),
    ]
    if not skip_census:
        items.append(("census", lambda: check_census(threads)))
    items += [
        ("lc-ladder", lambda: check_lc_ladder(rng)),
        ("closed-form-oracle", lambda: check_oracle(rng)),
        ("shrinking", check_shrinking),
    ]

    results = []
    for name, fn in items:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except PncaError as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        elapsed = time.perf_counter() - t0
        logger.info("%s：%s（%.2fs）", name, "PASS" if ok else "FAIL", elapsed)
        results.append(CheckResult(name, ok, detail, elapsed))
    return results
