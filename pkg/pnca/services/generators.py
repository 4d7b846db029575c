"""
LFSR keystream generator（PN 與 shrinking）以及 linearize：
把一段 keystream 還原成「串接後的 90/150 CA + 初始狀態 + 讀取的 cell」。

linearize 流程：
  berlekamp_massey → detect_primitive_power → synthesize → concat_to_multiplicity → 解初始狀態
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from ..core.bitseq import BitSequence
from ..core.gf2 import BinaryPolynomial, is_primitive, poly_pow
from ..errors import OutsideModelClassError, PolynomialError, SequenceError, SingularSystemError
from .analysis import berlekamp_massey, detect_primitive_power, minimal_period
from .ca import CAState, RuleVector, concat_to_multiplicity, run_column, synthesize
from .diffeq import binomial_period, recurrence_sequence

logger = logging.getLogger(__name__)


# -------------------- 型別 --------------------

@dataclass(frozen=True)
class LFSRConfig:
    poly: BinaryPolynomial
    state: Tuple[int, ...]

    def __post_init__(self):
        if not is_primitive(self.poly):
            raise PolynomialError(f"LFSR 多項式 {self.poly} 不是 primitive")
        if len(self.state) != self.poly.degree:
            raise SequenceError(f"LFSR 初始狀態長度 {len(self.state)} 必須等於 degree {self.poly.degree}")

    @property
    def length(self) -> int:
        return self.poly.degree

    def is_degenerate(self) -> bool:
        return not any(self.state)


@dataclass(frozen=True)
class ShrinkingConfig:
    control: LFSRConfig
    data: LFSRConfig


@dataclass(frozen=True)
class CAModel:
    rule: RuleVector
    initial_state: CAState
    read_cell: int
    base_poly: Optional[BinaryPolynomial] = None
    multiplicity: Optional[int] = None
    verified_period: Optional[int] = None

    def output(self, length: int) -> BitSequence:
        return run_column(self.rule, self.initial_state, self.read_cell, length)

    def to_payload(self) -> dict:
        return {
            "rule": str(self.rule),
            "initial_state": str(self.initial_state),
            "read_cell": self.read_cell,
            "verified_period": self.verified_period,
        }


# -------------------- LFSR --------------------

class LFSR:
    """
    Fibonacci 模式：輸出最舊的一格（seed 依序先出），回授照 a_n = Σ c_j a_(n-j)。
    """

    def __init__(self, cfg: LFSRConfig):
        self.cfg = cfg
        d = cfg.length
        self.taps = [j for j in range(1, d + 1) if cfg.poly.coefficient(d - j)]
        self.register: List[int] = list(cfg.state)

    def clock(self) -> int:
        out = self.register[0]
        fb = 0
        n = len(self.register)
        for j in self.taps:
            fb ^= self.register[n - j]
        self.register = self.register[1:] + [fb]
        return out

    def __iter__(self) -> Iterator[int]:
        while True:
            yield self.clock()


def lfsr_sequence(cfg: LFSRConfig, length: int) -> BitSequence:
    reg = LFSR(cfg)
    return BitSequence(tuple(reg.clock() for _ in range(length)))


# -------------------- shrinking generator --------------------

def decimate(control: Sequence[int], data: Sequence[int]) -> BitSequence:
    """control 為 1 的位置才輸出 data 的 bit。"""
    return BitSequence(tuple(d for c, d in zip(control, data) if c))


def shrink_keystream(cfg: ShrinkingConfig, length: int) -> BitSequence:
    if cfg.control.is_degenerate():
        raise SequenceError("control register 全為 0，shrinking generator 永遠不會輸出")
    ctrl = LFSR(cfg.control)
    data = LFSR(cfg.data)
    out: List[int] = []
    while len(out) < length:
        c, d = ctrl.clock(), data.clock()
        if c:
            out.append(d)
    return BitSequence(tuple(out))


def shrinking_bounds(cfg: ShrinkingConfig) -> Tuple[int, int, int]:
    """(period, LC 下界（不含）, LC 上界)；register 長度互質時成立。"""
    la, ls = cfg.control.length, cfg.data.length
    period = ((1 << ls) - 1) * (1 << (la - 1))
    return period, ls * (1 << max(la - 2, 0)), ls * (1 << (la - 1))


# -------------------- 初始狀態求解 --------------------

def _solve_gf2(columns: List[int], target: int, n: int) -> Optional[int]:
    """
    解 M x = target（GF(2)），M 的第 j 個 column 是 columns[j]（n bit 整數，bit t = 第 t 個輸出）。
    唯一解才回傳，否則 None。
    """
    # 轉成 row 形式：row t = (係數 bitmask, 右手邊 bit)
    rows = []
    for t in range(n):
        coeffs = 0
        for j, col in enumerate(columns):
            if (col >> t) & 1:
                coeffs |= 1 << j
        rows.append([coeffs, (target >> t) & 1])

    pivot_row = 0
    pivots = []
    for j in range(len(columns)):
        sel = next((i for i in range(pivot_row, n) if (rows[i][0] >> j) & 1), None)
        if sel is None:
            return None
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        for i in range(n):
            if i != pivot_row and (rows[i][0] >> j) & 1:
                rows[i][0] ^= rows[pivot_row][0]
                rows[i][1] ^= rows[pivot_row][1]
        pivots.append(j)
        pivot_row += 1

    if any(r[0] == 0 and r[1] for r in rows[pivot_row:]):
        return None
    x = 0
    for i, j in enumerate(pivots):
        if rows[i][1]:
            x |= 1 << j
    return x


def _bits_as_int(bits: Sequence[int]) -> int:
    v = 0
    for t, b in enumerate(bits):
        if b:
            v |= 1 << t
    return v


def solve_initial_state(rule: RuleVector, read_cell: int, target: Sequence[int]) -> CAState:
    """
    找初始狀態 s 使 read_cell 的 column 前 L 個 bit 等於 target[:L]。
    rule 是線性的，所以「初始狀態 → 前 L 個輸出」是 GF(2) 線性映射，用單位狀態跑出 column 當矩陣。
    """
    L = len(rule)
    if len(target) < L:
        raise SequenceError(f"target 只有 {len(target)} bit，至少要 {L} bit")
    columns = []
    for j in range(L):
        unit = CAState(tuple(1 if k == j else 0 for k in range(L)))
        columns.append(_bits_as_int(run_column(rule, unit, read_cell, L).bits))
    x = _solve_gf2(columns, _bits_as_int(target[:L]), L)
    if x is None:
        raise SingularSystemError(f"rule {rule} 的 cell {read_cell} 無法唯一決定初始狀態")
    return CAState(tuple((x >> j) & 1 for j in range(L)))


# -------------------- linearize --------------------

def expected_period(q: BinaryPolynomial, p: int) -> int:
    return binomial_period(p - 1) * ((1 << q.degree) - 1)


def linearize(keystream: Sequence[int]) -> CAModel:
    bits = BitSequence.of(keystream)
    if not len(bits):
        raise SequenceError("keystream 是空的")

    lp = berlekamp_massey(bits.bits)
    if lp.lc == 0:
        raise OutsideModelClassError("keystream 全為 0，沒有可用的 CA 模型")
    if len(bits) < 2 * lp.lc:
        raise SequenceError(f"keystream 只有 {len(bits)} bit，量到的 LC = {lp.lc}，至少需要 {2 * lp.lc} bit")

    found = detect_primitive_power(lp.minimal_poly)
    if found is None:
        raise OutsideModelClassError(f"minimal polynomial {lp.minimal_poly} 不是 primitive 多項式的次方")
    q, p = found
    logger.info("linearize：LC = %d，minimal polynomial = (%s)^%d", lp.lc, q, p)

    period = expected_period(q, p)
    for base in synthesize(q):
        rule = concat_to_multiplicity(base, p)
        for cell in range(1, len(rule) + 1):
            try:
                s0 = solve_initial_state(rule, cell, bits.bits)
            except SingularSystemError:
                logger.warning("rule %s 的 cell %d 解不出初始狀態，換下一格", rule, cell)
                continue
            out = run_column(rule, s0, cell, max(len(bits), 2 * period))
            if out.bits[:len(bits)] != bits.bits:
                logger.warning("rule %s 的 cell %d 解出的狀態無法重現 keystream", rule, cell)
                continue
            measured = minimal_period(out.bits)
            return CAModel(rule, s0, cell, base_poly=q, multiplicity=p, verified_period=measured)
        logger.warning("rule %s 沒有任何 cell 能重現 keystream，改用反轉自動機", rule)

    raise SingularSystemError(f"(({q})^{p}) 的兩個自動機都無法重現這段 keystream")


def recurrence_check(model: CAModel, length: int) -> bool:
    """模型輸出是否滿足 (Q^p) 的遞迴；linearize 的額外自我檢查。"""
    if model.base_poly is None or model.multiplicity is None:
        return False
    charpoly = poly_pow(model.base_poly, model.multiplicity)
    out = model.output(length)
    seed = out.bits[:charpoly.degree]
    return recurrence_sequence(charpoly, seed, length) == out
