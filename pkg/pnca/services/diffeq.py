"""
線性 binary 差分方程 (E^r + Σ c_j E^(r-j))^p a_n = 0 的解

- 封閉式：a_n = Σ_i C(n,i) Tr(A_i α^n)，C(n,i) 取 mod 2（Lucas）
- 對照用：直接跑 P(x)^p 的線性遞迴
- A_i 的「起點」語意固定成 Tr(A_i α^n)：把 A 乘上 α^k 等於把序列往左平移 k
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

import numpy as np

from ..core.bitseq import BitSequence
from ..core.gf2 import (
    BinaryPolynomial, FieldContext, elem_add, elem_mul, elem_pow, element_from_int, field_alpha,
    field_one, field_zero, is_primitive, poly_pow, trace,
)
from ..errors import FieldMismatchError, PolynomialError, RuleError, SequenceError, ZeroSolutionError
from .analysis import berlekamp_massey, minimal_period

logger = logging.getLogger(__name__)


# -------------------- 型別 --------------------

@dataclass(frozen=True)
class DifferenceEquation:
    base: BinaryPolynomial
    multiplicity: int = 1
    context: FieldContext = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.multiplicity < 1:
            raise RuleError(f"multiplicity 必須 ≥ 1，收到 {self.multiplicity}")
        if not is_primitive(self.base):
            raise PolynomialError(f"{self.base} 不是 primitive 多項式")
        object.__setattr__(self, "context", FieldContext(self.base))

    @property
    def r(self) -> int:
        return self.base.degree

    @property
    def p(self) -> int:
        return self.multiplicity

    @property
    def charpoly(self) -> BinaryPolynomial:
        return poly_pow(self.base, self.multiplicity)

    @property
    def pn_period(self) -> int:
        return (1 << self.r) - 1


@dataclass(frozen=True)
class SolutionCoeffs:
    coeffs: tuple

    @classmethod
    def from_ints(cls, eq: DifferenceEquation, values: Iterable[int]) -> "SolutionCoeffs":
        return cls(tuple(element_from_int(eq.context, v) for v in values))

    def __len__(self) -> int:
        return len(self.coeffs)

    def class_index(self) -> int:
        return max((i for i, a in enumerate(self.coeffs) if a), default=-1)

    def as_ints(self) -> List[int]:
        return [a.bits for a in self.coeffs]


@dataclass(frozen=True)
class SolutionProfile:
    period: int
    linear_complexity: int
    class_index: int
    minimal_poly: BinaryPolynomial
    expected_period: int
    expected_lc: int

    @property
    def matches_closed_form(self) -> bool:
        return self.period == self.expected_period and self.linear_complexity == self.expected_lc


# -------------------- 二項式係數 mod 2 --------------------

def binomial_bit(n: int, i: int) -> int:
    # Lucas：i 的每個二進位 digit 都不超過 n 的對應 digit
    return 1 if (n & i) == i else 0


def binomial_period(i: int) -> int:
    """大於 i 的最小 2 的次方。"""
    if i < 0:
        raise RuleError(f"i 必須 ≥ 0，收到 {i}")
    return 1 << i.bit_length()


# -------------------- 封閉式解 --------------------

def _check_coeffs(eq: DifferenceEquation, A: SolutionCoeffs) -> None:
    if len(A) != eq.p:
        raise RuleError(f"係數個數 {len(A)} 與 multiplicity p = {eq.p} 不一致")
    for a in A.coeffs:
        if a.context != eq.context:
            raise FieldMismatchError(f"係數不在 GF(2)[x]/({eq.base}) 內")


def solution_term(eq: DifferenceEquation, A: SolutionCoeffs, n: int) -> int:
    _check_coeffs(eq, A)
    an = elem_pow(field_alpha(eq.context), n)
    bit = 0
    for i, a in enumerate(A.coeffs):
        if a and binomial_bit(n, i):
            bit ^= trace(elem_mul(a, an))
    return bit


def solution_sequence(eq: DifferenceEquation, A: SolutionCoeffs, length: int) -> BitSequence:
    _check_coeffs(eq, A)
    alpha = field_alpha(eq.context)
    an = field_one(eq.context)
    active = [(i, a) for i, a in enumerate(A.coeffs) if a]
    out = []
    for n in range(length):
        bit = 0
        for i, a in active:
            if binomial_bit(n, i):
                bit ^= trace(elem_mul(a, an))
        out.append(bit)
        an = elem_mul(an, alpha)
    return BitSequence(tuple(out))


def recurrence_sequence(charpoly: BinaryPolynomial, seed: Sequence[int], length: int) -> BitSequence:
    """a_n = Σ c_j a_(n-j)，c_j 是 x^(d-j) 的係數；先輸出 seed 再輸出遞迴結果。"""
    d = charpoly.degree
    if d < 0:
        raise PolynomialError("零多項式沒有遞迴")
    seed = [1 if b else 0 for b in seed]
    if len(seed) != d:
        raise SequenceError(f"seed 長度 {len(seed)} 必須等於 degree {d}")
    taps = [j for j in range(1, d + 1) if charpoly.coefficient(d - j)]
    out = list(seed)
    while len(out) < length:
        n = len(out)
        bit = 0
        for j in taps:
            bit ^= out[n - j]
        out.append(bit)
    return BitSequence(tuple(out[:length]))


def shift_coeffs(eq: DifferenceEquation, A: SolutionCoeffs, k: int) -> SolutionCoeffs:
    """
    回傳 B 使 solution(B)[n] = solution(A)[n + k]。
    由 C(n+k, i) = Σ_j C(k, i-j) C(n, j)（mod 2 也成立）得 B_j = α^k Σ_{i≥j} C(k, i-j) A_i。
    p = 1 時就是 A_0 α^k。
    """
    _check_coeffs(eq, A)
    ak = elem_pow(field_alpha(eq.context), k)
    out = []
    for j in range(eq.p):
        acc = field_zero(eq.context)
        for i in range(j, eq.p):
            if binomial_bit(k, i - j):
                acc = elem_add(acc, A.coeffs[i])
        out.append(elem_mul(acc, ak))
    return SolutionCoeffs(tuple(out))


# -------------------- 週期 / LC / 計數 --------------------

def class_period(eq: DifferenceEquation, i: int) -> int:
    return binomial_period(i) * eq.pn_period


def profile(eq: DifferenceEquation, A: SolutionCoeffs) -> SolutionProfile:
    _check_coeffs(eq, A)
    i_star = A.class_index()
    if i_star < 0:
        raise ZeroSolutionError("全零解沒有 profile")
    bound = class_period(eq, i_star)
    window = solution_sequence(eq, A, 4 * bound)
    lp = berlekamp_massey(window.bits)
    prof = SolutionProfile(
        period=minimal_period(window.bits),
        linear_complexity=lp.lc,
        class_index=i_star,
        minimal_poly=lp.minimal_poly,
        expected_period=bound,
        expected_lc=eq.r * (i_star + 1),
    )
    if not prof.matches_closed_form:
        logger.info("profile 與封閉式不同：%s（A = %s）", prof, A.as_ints())
    return prof


def count_solution_classes(eq: DifferenceEquation, i: int) -> int:
    if not 0 <= i < eq.p:
        raise RuleError(f"class index {i} 超出範圍 0..{eq.p - 1}")
    # 每個 class-i 序列有 T_i·(2^r-1) 個平移，class 內共 2^(ri)·(2^r-1) 個 A
    return (1 << (eq.r * i)) // binomial_period(i)


def _canonical_rotation(bits: Sequence[int]) -> str:
    s = "".join("1" if b else "0" for b in bits)
    return min(s[k:] + s[:k] for k in range(len(s)))


def enumerate_shift_classes(eq: DifferenceEquation, i: int) -> int:
    """窮舉 class i 的所有 A，數出平移不等價的序列個數（只適合小的 r、p）。"""
    if not 0 <= i < eq.p:
        raise RuleError(f"class index {i} 超出範圍 0..{eq.p - 1}")
    size = 1 << eq.r
    period = class_period(eq, i)
    seen = set()
    for free in range(size ** i):
        lower = [(free // size ** j) % size for j in range(i)]
        for top in range(1, size):
            values = lower + [top] + [0] * (eq.p - i - 1)
            seq = solution_sequence(eq, SolutionCoeffs.from_ints(eq, values), period)
            seen.add(_canonical_rotation(seq.bits))
    return len(seen)


def random_coeffs(eq: DifferenceEquation, rng: np.random.Generator,
                  class_index: Optional[int] = None) -> SolutionCoeffs:
    size = 1 << eq.r
    if class_index is None:
        values = [int(v) for v in rng.integers(0, size, size=eq.p)]
    else:
        if not 0 <= class_index < eq.p:
            raise RuleError(f"class index {class_index} 超出範圍 0..{eq.p - 1}")
        values = [int(v) for v in rng.integers(0, size, size=class_index)]
        values.append(int(rng.integers(1, size)))
        values += [0] * (eq.p - class_index - 1)
    return SolutionCoeffs.from_ints(eq, values)
