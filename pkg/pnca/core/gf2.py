"""
GF(2) 多項式與 GF(2^r) 有限體運算

多項式一律用非負整數 mask 表示：bit i = x^i 的係數（0x37 = x^5+x^4+x^2+x+1）。
GF(2^r) 採 polynomial basis：元素是 r 個 bit，模數為給定的 primitive P(x)，α 是 x 的剩餘類。
所有值建好後不可變，可以放心在 thread / process 之間共用。
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple

from ..errors import BoundExceededError, FieldMismatchError, PolynomialError
from ..schemas.constants import MAX_PRIMITIVE_DEGREE
from ..utils.bitfmt import format_poly_mask, parse_poly_mask

logger = logging.getLogger(__name__)


# -------------------- 整數 mask 上的底層運算 --------------------

def _degree(a: int) -> int:
    return a.bit_length() - 1


def _clmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> Tuple[int, int]:
    if b == 0:
        raise PolynomialError("除以零多項式")
    db = _degree(b)
    q = 0
    while a and _degree(a) >= db:
        shift = _degree(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _mulmod(a: int, b: int, m: int) -> int:
    return _mod(_clmul(a, b), m)


def _powmod(a: int, e: int, m: int) -> int:
    result = _mod(1, m)
    a = _mod(a, m)
    while e:
        if e & 1:
            result = _mulmod(result, a, m)
        a = _mulmod(a, a, m)
        e >>= 1
    return result


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _pow(a: int, e: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = _clmul(result, a)
        a = _clmul(a, a)
        e >>= 1
    return result


def _derivative(a: int) -> int:
    # GF(2) 上 d/dx x^k = k x^(k-1)，只留奇數次項
    out = 0
    k = 1
    while (a >> k):
        if k & 1 and (a >> k) & 1:
            out |= 1 << (k - 1)
        k += 1
    return out


# -------------------- BinaryPolynomial --------------------

@dataclass(frozen=True, order=True)
class BinaryPolynomial:
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0:
            raise PolynomialError(f"係數 mask 不能是負數：{self.mask}")

    @classmethod
    def parse(cls, text: str) -> "BinaryPolynomial":
        return cls(parse_poly_mask(text))

    @classmethod
    def x(cls) -> "BinaryPolynomial":
        return cls(0b10)

    @classmethod
    def one(cls) -> "BinaryPolynomial":
        return cls(1)

    @property
    def degree(self) -> int:
        """零多項式的 degree 定為 -1。"""
        return _degree(self.mask)

    def coefficient(self, i: int) -> int:
        return (self.mask >> i) & 1 if i >= 0 else 0

    def __bool__(self) -> bool:
        return self.mask != 0

    def __str__(self) -> str:
        return format_poly_mask(self.mask)

    def __add__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return poly_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return poly_mul(self, other)

    def __mod__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return poly_mod(self, other)

    def __floordiv__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return poly_divmod(self, other)[0]

    def __pow__(self, e: int) -> "BinaryPolynomial":
        return poly_pow(self, e)


def parse_poly(text: str) -> BinaryPolynomial:
    return BinaryPolynomial.parse(text)


def format_poly(p: BinaryPolynomial) -> str:
    return str(p)


def poly_add(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(a.mask ^ b.mask)


def poly_mul(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(_clmul(a.mask, b.mask))


def poly_divmod(a: BinaryPolynomial, m: BinaryPolynomial) -> Tuple[BinaryPolynomial, BinaryPolynomial]:
    q, r = _divmod(a.mask, m.mask)
    return BinaryPolynomial(q), BinaryPolynomial(r)


def poly_mod(a: BinaryPolynomial, m: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(_mod(a.mask, m.mask))


def poly_gcd(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(_gcd(a.mask, b.mask))


def poly_pow(a: BinaryPolynomial, e: int) -> BinaryPolynomial:
    if e < 0:
        raise PolynomialError(f"指數不能是負數：{e}")
    return BinaryPolynomial(_pow(a.mask, e))


def poly_powmod(a: BinaryPolynomial, e: int, m: BinaryPolynomial) -> BinaryPolynomial:
    if e < 0:
        raise PolynomialError(f"指數不能是負數：{e}")
    return BinaryPolynomial(_powmod(a.mask, e, m.mask))


def poly_derivative(a: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(_derivative(a.mask))


def poly_sqrt(a: BinaryPolynomial) -> Optional[BinaryPolynomial]:
    """GF(2) 上 f(x)^2 = f(x^2)，所以只有奇數次係數全為 0 才是平方。"""
    out = 0
    for i in range(a.degree + 1):
        if (a.mask >> i) & 1:
            if i & 1:
                return None
            out |= 1 << (i // 2)
    return BinaryPolynomial(out)


# -------------------- 不可約 / primitive 判定 --------------------

@lru_cache(maxsize=None)
def prime_factors(n: int) -> Tuple[int, ...]:
    """trial division；2^32-1 的最大質因數是 65537，桌面規模夠用。"""
    out: List[int] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


@lru_cache(maxsize=4096)
def _is_irreducible_mask(p: int) -> bool:
    n = _degree(p)
    if n < 1:
        return False
    # Ben-Or：gcd(p, x^(2^k) - x) 必須是 1，k = 1..n/2
    h = 0b10
    for _ in range(n // 2):
        h = _mulmod(h, h, p)
        if _gcd(p, h ^ 0b10) != 1:
            return False
    return True


def is_irreducible(p: BinaryPolynomial) -> bool:
    return _is_irreducible_mask(p.mask)


@lru_cache(maxsize=4096)
def _is_primitive_mask(p: int) -> bool:
    r = _degree(p)
    if r < 1:
        return False
    if r > MAX_PRIMITIVE_DEGREE:
        raise BoundExceededError(f"primitive 判定只支援 degree ≤ {MAX_PRIMITIVE_DEGREE}，收到 {r}")
    if not _is_irreducible_mask(p):
        return False
    order = (1 << r) - 1
    # x 本身也是不可約的，但不是單位元，要擋掉
    if _powmod(0b10, order, p) != 1:
        return False
    return all(_powmod(0b10, order // q, p) != 1 for q in prime_factors(order))


def is_primitive(p: BinaryPolynomial) -> bool:
    """x+1 視為 degree 1 的 primitive 多項式（GF(2)* 是平凡群）。"""
    return _is_primitive_mask(p.mask)


def primitive_polynomials(r: int) -> List[BinaryPolynomial]:
    if r < 1:
        return []
    if r > MAX_PRIMITIVE_DEGREE:
        raise BoundExceededError(f"primitive 判定只支援 degree ≤ {MAX_PRIMITIVE_DEGREE}，收到 {r}")
    lo = 1 << r
    return [BinaryPolynomial(m) for m in range(lo | 1, lo << 1, 2) if _is_primitive_mask(m)]


# -------------------- GF(2^r) --------------------

@dataclass(frozen=True)
class FieldContext:
    modulus: BinaryPolynomial
    r: int = field(init=False)
    trace_mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_primitive(self.modulus):
            raise PolynomialError(f"{self.modulus} 不是 primitive 多項式，不能當 GF(2^r) 的模數")
        object.__setattr__(self, "r", self.modulus.degree)
        object.__setattr__(self, "trace_mask", _trace_mask(self.modulus.mask))

    @classmethod
    def parse(cls, text: str) -> "FieldContext":
        return cls(BinaryPolynomial.parse(text))

    @property
    def size(self) -> int:
        return 1 << self.r

    def element(self, bits: int) -> "FieldElement":
        return FieldElement(self, bits)

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def alpha(self) -> "FieldElement":
        return FieldElement(self, _mod(0b10, self.modulus.mask))


def _trace_mask(modulus: int) -> int:
    # Tr 是 GF(2)-linear：先用 Frobenius 定義算出每個 basis x^i 的 trace，
    # 之後 Tr(a) = parity(a & mask)
    r = _degree(modulus)
    mask = 0
    for i in range(r):
        t = acc = 1 << i
        for _ in range(r - 1):
            t = _mulmod(t, t, modulus)
            acc ^= t
        if acc not in (0, 1):
            raise PolynomialError(f"trace 不在 GF(2) 內，{format_poly_mask(modulus)} 可能不是不可約")
        mask |= acc << i
    return mask


@dataclass(frozen=True)
class FieldElement:
    context: FieldContext
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.context.size:
            raise PolynomialError(f"元素 {self.bits:#x} 超出 GF(2^{self.context.r}) 的範圍")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return elem_add(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return elem_mul(self, other)

    def __pow__(self, n: int) -> "FieldElement":
        return elem_pow(self, n)

    def __str__(self) -> str:
        return format_poly_mask(self.bits).replace("x", "α")


def field_zero(ctx: FieldContext) -> FieldElement:
    return ctx.zero()


def field_one(ctx: FieldContext) -> FieldElement:
    return ctx.one()


def field_alpha(ctx: FieldContext) -> FieldElement:
    return ctx.alpha()


def element_from_int(ctx: FieldContext, value: int) -> FieldElement:
    return FieldElement(ctx, value)


def _same_context(a: FieldElement, b: FieldElement) -> None:
    if a.context != b.context:
        raise FieldMismatchError(
            f"元素屬於不同的體：GF(2)[x]/({a.context.modulus}) vs GF(2)[x]/({b.context.modulus})"
        )


def elem_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_context(a, b)
    return FieldElement(a.context, a.bits ^ b.bits)


def elem_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_context(a, b)
    return FieldElement(a.context, _mulmod(a.bits, b.bits, a.context.modulus.mask))


def elem_pow(a: FieldElement, n: int) -> FieldElement:
    if n < 0:
        raise PolynomialError(f"指數不能是負數：{n}")
    return FieldElement(a.context, _powmod(a.bits, n, a.context.modulus.mask))


def trace(a: FieldElement) -> int:
    return bin(a.bits & a.context.trace_mask).count("1") & 1


def trace_by_frobenius(a: FieldElement) -> int:
    """直接照定義 Σ a^(2^j)，給測試對照 trace() 用。"""
    acc = t = a
    for _ in range(a.context.r - 1):
        t = elem_mul(t, t)
        acc = elem_add(acc, t)
    if acc.bits not in (0, 1):
        raise PolynomialError("trace 結果不在 GF(2) 內")
    return acc.bits
