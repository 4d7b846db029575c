# pnca/utils/bitfmt.py
from __future__ import annotations

import re
from typing import Iterable, List, Sequence, Tuple

from ..errors import PolynomialError, RuleError

_HEX_RE = re.compile(r"^0[xX]([0-9a-fA-F]+)$")
_TERM_RE = re.compile(r"^(?:1|x(?:\^(\d+))?)$")  # 1 / x / x^k
_BITS_RE = re.compile(r"^[01]+$")


def _collapse_ws(s: str) -> str:
    return "".join((s or "").split())


def parse_bits(text: str) -> Tuple[int, ...]:
    """'0'/'1' 字串 → bit tuple，最左邊是 index 0（cell 1 / n = 0）。允許空白與逗號分隔。"""
    t = _collapse_ws(text).replace(",", "")
    if not t or not _BITS_RE.match(t):
        raise RuleError(f"不是合法的 bit 字串：{text!r}")
    return tuple(1 if ch == "1" else 0 for ch in t)


def format_bits(bits: Iterable[int]) -> str:
    return "".join("1" if b else "0" for b in bits)


def parse_poly_mask(text: str) -> int:
    """
    解析多項式文字，回傳係數 mask（bit i = x^i 的係數）
    - hex：0x37
    - sparse：x^5+x^4+x^2+x+1（同次項重複出現會互相抵銷，GF(2) 加法）
    """
    s = _collapse_ws(text)
    if not s:
        raise PolynomialError("多項式文字是空的")

    m = _HEX_RE.match(s)
    if m:
        return int(m.group(1), 16)

    if s == "0":
        return 0

    mask = 0
    for term in s.split("+"):
        t = _TERM_RE.match(term)
        if not t:
            raise PolynomialError(f"看不懂的多項式項：{term!r}（完整輸入 {text!r}）")
        if term == "1":
            exp = 0
        else:
            exp = int(t.group(1)) if t.group(1) is not None else 1
        mask ^= 1 << exp
    return mask


def format_poly_mask(mask: int) -> str:
    if mask == 0:
        return "0"
    terms: List[str] = []
    for exp in range(mask.bit_length() - 1, -1, -1):
        if not (mask >> exp) & 1:
            continue
        if exp == 0:
            terms.append("1")
        elif exp == 1:
            terms.append("x")
        else:
            terms.append(f"x^{exp}")
    return "+".join(terms)


def parse_hex_list(text: str) -> List[int]:
    """'0x1,0,0x1f' 或 '1 0 1f' → [1, 0, 31]；給 solve 的 A_i 係數用。"""
    parts = [p for p in re.split(r"[,\s]+", (text or "").strip()) if p]
    if not parts:
        raise PolynomialError("係數清單是空的")
    out: List[int] = []
    for p in parts:
        try:
            out.append(int(p, 16))
        except ValueError:
            raise PolynomialError(f"看不懂的 hex 係數：{p!r}") from None
    return out


def bits_to_int(bits: Sequence[int]) -> int:
    """bit tuple → 整數，index 0 放在最高位（與字串由左到右一致）。"""
    v = 0
    for b in bits:
        v = (v << 1) | (1 if b else 0)
    return v


def int_to_bits(value: int, length: int) -> Tuple[int, ...]:
    return tuple((value >> (length - 1 - i)) & 1 for i in range(length))
