from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional, Tuple, Union

from ..utils.bitfmt import format_bits, parse_bits


@dataclass(frozen=True)
class BitSequence:
    """有限長度的 binary 序列 {a_n}；period / lc 是量測後附上的 metadata，不參與比較。"""
    bits: Tuple[int, ...] = ()
    period: Optional[int] = field(default=None, compare=False)
    lc: Optional[int] = field(default=None, compare=False)

    @classmethod
    def parse(cls, text: str) -> "BitSequence":
        return cls(parse_bits(text))

    @classmethod
    def of(cls, bits: Iterable[int]) -> "BitSequence":
        return cls(tuple(1 if b else 0 for b in bits))

    @classmethod
    def zeros(cls, n: int) -> "BitSequence":
        return cls((0,) * n)

    def with_metadata(self, period: Optional[int] = None, lc: Optional[int] = None) -> "BitSequence":
        return replace(self, period=period, lc=lc)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, idx: Union[int, slice]):
        if isinstance(idx, slice):
            return BitSequence(self.bits[idx])
        return self.bits[idx]

    def __xor__(self, other: "BitSequence") -> "BitSequence":
        n = min(len(self), len(other))
        return BitSequence(tuple(a ^ b for a, b in zip(self.bits[:n], other.bits[:n])))

    def __str__(self) -> str:
        return format_bits(self.bits)

    def is_zero(self) -> bool:
        return not any(self.bits)
