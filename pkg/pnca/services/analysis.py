"""序列量測：linear complexity、最小週期、minimal polynomial 是否為 Q(x)^p。"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..core.bitseq import BitSequence
from ..core.gf2 import (
    BinaryPolynomial, is_primitive, poly_derivative, poly_divmod, poly_gcd, poly_pow, poly_sqrt,
)
from ..errors import PolynomialError
from ..schemas.constants import MAX_PRIMITIVE_DEGREE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearProfile:
    lc: int
    minimal_poly: BinaryPolynomial

    def to_payload(self) -> dict:
        return {"lc": self.lc, "poly": str(self.minimal_poly)}


def berlekamp_massey(bits: Sequence[int]) -> LinearProfile:
    """
    標準 LFSR synthesis。內部維護 connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L，
    最後轉成特徵多項式 x^L C(1/x) = x^L + c_1 x^(L-1) + ... + c_L，degree 恰為 L。
    """
    seq = [1 if b else 0 for b in bits]
    N = len(seq)
    curr = [1] + [0] * N
    prev = [1] + [0] * N
    L = 0
    m = -1
    for n in range(N):
        # discrepancy
        d = seq[n]
        for i in range(1, L + 1):
            d ^= curr[i] & seq[n - i]
        if not d:
            continue
        temp = curr[:]
        shift = n - m
        for i in range(shift, N + 1):
            curr[i] ^= prev[i - shift]
        if 2 * L <= n:
            L = n + 1 - L
            prev = temp
            m = n

    mask = 0
    for i in range(L + 1):
        if curr[i]:
            mask |= 1 << (L - i)
    return LinearProfile(L, BinaryPolynomial(mask))


def minimal_period(bits: Sequence[int]) -> int:
    """最小的 d ≥ 1 使 bits[n] = bits[n+d] 對所有合法 n 成立（border / failure function，O(n)）。"""
    seq = list(bits)
    n = len(seq)
    if n == 0:
        return 0
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and seq[i] != seq[k]:
            k = fail[k - 1]
        if seq[i] == seq[k]:
            k += 1
        fail[i] = k
    return n - fail[-1]


def shift_offset(a: Sequence[int], b: Sequence[int]) -> Optional[int]:
    """最小的 k ≥ 0 使 a 往左旋轉 k 位等於 b；長度不同或不是旋轉就回傳 None。"""
    sa = "".join("1" if x else "0" for x in a)
    sb = "".join("1" if x else "0" for x in b)
    if len(sa) != len(sb):
        return None
    if not sa:
        return 0
    k = (sa + sa).find(sb)
    return k if 0 <= k < len(sa) else None


def _divisors_desc(n: int) -> List[int]:
    return [d for d in range(n, 0, -1) if n % d == 0]


def _root(m: BinaryPolynomial, p: int) -> Optional[BinaryPolynomial]:
    # p = 2^s * k（k 奇數）：先開 s 次平方根，再用 f / gcd(f, f') 取出 k 次方根的底
    f = m
    while p % 2 == 0:
        f = poly_sqrt(f)
        if f is None:
            return None
        p //= 2
    if p == 1:
        return f
    fp = poly_derivative(f)
    if not fp:
        return None
    q, r = poly_divmod(f, poly_gcd(f, fp))
    return q if not r else None


def detect_primitive_power(m: BinaryPolynomial) -> Optional[Tuple[BinaryPolynomial, int]]:
    if not m:
        raise PolynomialError("零多項式沒有 Q^p 分解")
    for p in _divisors_desc(m.degree):
        q = _root(m, p)
        if q is None or q.degree < 1 or poly_pow(q, p) != m:
            continue
        # 超過 primitive 判定上限的底不在模型範圍內
        if q.degree > MAX_PRIMITIVE_DEGREE:
            logger.debug("detect_primitive_power：%s 的底 degree %d 超過上限", m, q.degree)
            continue
        if is_primitive(q):
            logger.debug("detect_primitive_power：%s = (%s)^%d", m, q, p)
            return q, p
    return None


def measure(bits: Sequence[int]) -> BitSequence:
    """把 period 與 LC 一起量好掛在 BitSequence 上。"""
    seq = BitSequence.of(bits)
    return seq.with_metadata(period=minimal_period(seq.bits), lc=berlekamp_massey(seq.bits).lc)
