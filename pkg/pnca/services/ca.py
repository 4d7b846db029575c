"""
一維 binary linear hybrid null 90/150 cellular automata

- RuleVector：d_k = 0 → rule 90（左右鄰 XOR），d_k = 1 → rule 150（左、自己、右 XOR）
- null boundary：兩端外面的鄰居一律讀成 0，同步更新
- 內部快速路徑用整數表示狀態：cell 1 放在最高位，和 bit 字串由左到右一致
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from ..core.bitseq import BitSequence
from ..core.gf2 import BinaryPolynomial, is_primitive
from ..errors import BoundExceededError, PolynomialError, RuleError, SynthesisError
from ..schemas.constants import (
    MAX_SYNTH_DEGREE, SYM_DOUBLY, SYM_OTHER, SYM_REPETITIVE, SYM_SYMMETRIC,
)
from ..utils.bitfmt import bits_to_int, format_bits, int_to_bits, parse_bits
from .analysis import shift_offset

logger = logging.getLogger(__name__)


# -------------------- 型別 --------------------

@dataclass(frozen=True)
class RuleVector:
    rules: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rules) < 1:
            raise RuleError("rule vector 至少要有一個 cell")
        if any(d not in (0, 1) for d in self.rules):
            raise RuleError(f"rule vector 只能是 0/1：{self.rules}")

    @classmethod
    def parse(cls, text: str) -> "RuleVector":
        return cls(parse_bits(text))

    @classmethod
    def of(cls, rules: Iterable[int]) -> "RuleVector":
        return cls(tuple(rules))

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return format_bits(self.rules)

    @property
    def mask150(self) -> int:
        return bits_to_int(self.rules)

    def names(self) -> List[int]:
        return [150 if d else 90 for d in self.rules]


@dataclass(frozen=True)
class CAState:
    cells: Tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "CAState":
        return cls(parse_bits(text))

    @classmethod
    def of(cls, cells: Iterable[int]) -> "CAState":
        return cls(tuple(1 if c else 0 for c in cells))

    @classmethod
    def from_int(cls, value: int, length: int) -> "CAState":
        return cls(int_to_bits(value, length))

    @classmethod
    def zeros(cls, length: int) -> "CAState":
        return cls((0,) * length)

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return format_bits(self.cells)

    def as_int(self) -> int:
        return bits_to_int(self.cells)


# -------------------- 演化 --------------------

def step_int(state: int, mask150: int, full: int) -> int:
    return ((state >> 1) ^ (state << 1) ^ (state & mask150)) & full


def _check_lengths(rule: RuleVector, s: CAState) -> None:
    if len(rule) != len(s):
        raise RuleError(f"狀態長度 {len(s)} 與 rule vector 長度 {len(rule)} 不一致")


def step(rule: RuleVector, s: CAState) -> CAState:
    _check_lengths(rule, s)
    n = len(rule)
    return CAState.from_int(step_int(s.as_int(), rule.mask150, (1 << n) - 1), n)


def step_reference(rule: RuleVector, s: CAState) -> CAState:
    """逐格照 rule 90 / 150 的定義算，給測試跟整數快速路徑對照。"""
    _check_lengths(rule, s)
    c = s.cells
    n = len(c)
    out = []
    for k in range(n):
        left = c[k - 1] if k > 0 else 0
        right = c[k + 1] if k < n - 1 else 0
        out.append(left ^ right ^ (c[k] if rule.rules[k] else 0))
    return CAState(tuple(out))


def evolve(rule: RuleVector, s0: CAState, steps: int) -> List[CAState]:
    """回傳 s0, s1, ..., s_{steps-1}。"""
    _check_lengths(rule, s0)
    n = len(rule)
    full = (1 << n) - 1
    cur = s0.as_int()
    rows: List[CAState] = []
    for _ in range(steps):
        rows.append(CAState.from_int(cur, n))
        cur = step_int(cur, rule.mask150, full)
    return rows


def run_column(rule: RuleVector, s0: CAState, cell_index: int, length: int) -> BitSequence:
    _check_lengths(rule, s0)
    n = len(rule)
    if not 1 <= cell_index <= n:
        raise RuleError(f"cell index {cell_index} 超出範圍 1..{n}")
    shift = n - cell_index
    full = (1 << n) - 1
    cur = s0.as_int()
    out = []
    for _ in range(length):
        out.append((cur >> shift) & 1)
        cur = step_int(cur, rule.mask150, full)
    return BitSequence(tuple(out))


def run_columns(rule: RuleVector, s0: CAState, length: int) -> List[BitSequence]:
    """一次跑完所有 cell 的 column，index 0 = cell 1。"""
    rows = evolve(rule, s0, length)
    return [BitSequence(tuple(r.cells[k] for r in rows)) for k in range(len(rule))]


# -------------------- 特徵多項式 / 反轉 / 串接 --------------------

def _char_poly_mask(rules: Iterable[int]) -> int:
    # P_k = (x + d_k) P_{k-1} + P_{k-2}，P_0 = 1，P_{-1} = 0
    prev, cur = 0, 1
    for d in rules:
        nxt = (cur << 1) ^ (cur if d else 0) ^ prev
        prev, cur = cur, nxt
    return cur


def char_poly(rule: RuleVector) -> BinaryPolynomial:
    return BinaryPolynomial(_char_poly_mask(rule.rules))


def reverse(rule: RuleVector) -> RuleVector:
    return RuleVector(tuple(reversed(rule.rules)))


def concat_double(rule: RuleVector) -> RuleVector:
    # 最後一個 rule 取補數，再接上自己的反轉
    head = rule.rules[:-1] + (1 - rule.rules[-1],)
    return RuleVector(head + tuple(reversed(head)))


def doublings_for(p: int) -> int:
    """2^(q-1) < p ≤ 2^q 的 q；p = 1 時 q = 0。"""
    if p < 1:
        raise RuleError(f"multiplicity 必須 ≥ 1，收到 {p}")
    return (p - 1).bit_length()


def concat_to_multiplicity(rule: RuleVector, p: int) -> RuleVector:
    out = rule
    for _ in range(doublings_for(p)):
        out = concat_double(out)
    return out


# -------------------- 合成 --------------------

def synthesize(p: BinaryPolynomial) -> Tuple[RuleVector, RuleVector]:
    """
    窮舉找出特徵多項式為 p 的 90/150 CA，回傳 (Δ, reverse(Δ))。
    - 依 d_1, d_2, ... 的字典序做 DFS，子自動機多項式 P_k 一格一格往上疊，前綴共用
    - 到第 L-1 層時 d_L 已被 P_L = (x + d_L) P_{L-1} + P_{L-2} 唯一決定，不用再分岔
    - 第一個找到的就是字典序最小的 Δ
    """
    L = p.degree
    if L < 1:
        raise PolynomialError(f"無法合成 degree {L} 的多項式")
    if L > MAX_SYNTH_DEGREE:
        raise BoundExceededError(f"合成只支援 degree ≤ {MAX_SYNTH_DEGREE}，收到 {L}")
    if not is_primitive(p):
        raise PolynomialError(f"{p} 不是 primitive 多項式")

    target = p.mask
    visited = 0
    # stack 元素：(已選的 rules, P_{k-1}, P_k)
    stack: List[Tuple[Tuple[int, ...], int, int]] = [((), 0, 1)]
    while stack:
        prefix, prev, cur = stack.pop()
        visited += 1
        k = len(prefix)
        if k == L - 1:
            rest = target ^ (cur << 1) ^ prev
            if rest == 0:
                found = prefix + (0,)
            elif rest == cur:
                found = prefix + (1,)
            else:
                continue
            rule = RuleVector(found)
            logger.debug("synthesize %s → %s（走訪 %d 個節點）", p, rule, visited)
            return rule, reverse(rule)
        # 先推 1 再推 0，pop 時 0 先出來，維持字典序
        for d in (1, 0):
            nxt = (cur << 1) ^ (cur if d else 0) ^ prev
            stack.append((prefix + (d,), cur, nxt))

    raise SynthesisError(f"找不到特徵多項式為 {p} 的 90/150 CA")


# -------------------- 狀態對稱分類 --------------------

def _is_palindrome(cells: Tuple[int, ...]) -> bool:
    return cells == cells[::-1]


def _is_repetition(cells: Tuple[int, ...]) -> bool:
    h = len(cells) // 2
    return cells[:h] == cells[h:]


def classify_state(s: CAState) -> str:
    n = len(s)
    if n < 2 or n % 2:
        raise RuleError(f"對稱分類只定義在偶數長度的狀態，收到長度 {n}")
    pal = _is_palindrome(s.cells)
    rep = _is_repetition(s.cells)
    if pal and rep:
        return SYM_DOUBLY
    if pal:
        return SYM_SYMMETRIC
    if rep:
        return SYM_REPETITIVE
    return SYM_OTHER


# -------------------- 其他 cell 的相位 --------------------

def column_shifts(rule: RuleVector, s0: CAState) -> List[Optional[int]]:
    """
    primitive 特徵多項式下，每個 cell 的 column 都是 cell 1 column 的平移。
    回傳 k_c：column c 等於 column 1 往左平移 k_c；不是平移（例如全零）則為 None。
    """
    period = (1 << len(rule)) - 1
    cols = run_columns(rule, s0, period)
    base = cols[0]
    return [shift_offset(base, c) for c in cols]

