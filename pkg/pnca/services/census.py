"""
Cycle census：把 2^L 個狀態依 step map 分成 cycle，並統計每種長度的 cycle 數與對稱類別。

- 單行程：numpy packed bitmap 記錄走過的狀態（每狀態 1 bit），沿路走到封閉並順手累計對稱類別；走回的不是起點就代表 step 不是 bijection
- 多 worker：把起點切成不相交區段，每個 cycle 只由其最小狀態所在的 worker 回報，合併後結果與單行程一致
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

import numpy as np

from ..errors import BoundExceededError, NotBijectiveError
from ..schemas.constants import MAX_CENSUS_CELLS, SYMMETRY_CLASSES
from .ca import RuleVector, char_poly, step_int

logger = logging.getLogger(__name__)

_PROGRESS_EVERY = 1 << 18


@dataclass
class CycleEntry:
    length: int
    count: int
    symmetry: Dict[str, int] = field(default_factory=dict)

    def to_payload(self) -> Dict:
        return {"length": self.length, "count": self.count, "symmetry": dict(self.symmetry)}


@dataclass
class CycleCensus:
    L: int
    entries: List[CycleEntry]
    total_states: int

    def counts(self) -> Dict[int, int]:
        return {e.length: e.count for e in self.entries}

    def entry(self, length: int) -> CycleEntry | None:
        return next((e for e in self.entries if e.length == length), None)

    def covered_states(self) -> int:
        return sum(e.length * e.count for e in self.entries)

    def to_payload(self) -> Dict:
        return {"L": self.L, "cycles": [e.to_payload() for e in self.entries]}


# -------------------- 對稱分類 --------------------

def _half_reversal(half: int) -> List[int]:
    """半長度（half bit）整數的位元反轉表，2^half 個 uint32。"""
    idx = np.arange(1 << half, dtype=np.uint32)
    rev = np.zeros_like(idx)
    for i in range(half):
        rev |= ((idx >> np.uint32(i)) & np.uint32(1)) << np.uint32(half - 1 - i)
    return rev.tolist()


def _make_classifier(L: int) -> Callable[[int], int]:
    """回傳 state → SYMMETRY_CLASSES 的 index；奇數長度一律是 other。"""
    if L % 2:
        return lambda s: 3
    half = L // 2
    low = (1 << half) - 1
    rev = _half_reversal(half)

    def classify(s: int) -> int:
        hi, lo = s >> half, s & low
        # 整條反轉 = rev[lo] 接 rev[hi]；等於自己 ⇔ rev[lo] == hi
        pal = rev[lo] == hi
        rep = hi == lo
        if pal and rep:
            return 0
        if pal:
            return 1
        if rep:
            return 2
        return 3

    return classify


def _histogram(row) -> Dict[str, int]:
    # key 順序固定，只留非零的類別
    return {SYMMETRY_CLASSES[i]: int(row[i]) for i in range(len(SYMMETRY_CLASSES)) if row[i]}


def _tally(grouped: Dict[int, List], length: int, counts) -> None:
    slot = grouped.setdefault(length, [0, np.zeros(len(SYMMETRY_CLASSES), dtype=np.int64)])
    slot[0] += 1
    slot[1] += np.asarray(counts, dtype=np.int64)


def _entries(grouped: Dict[int, List]) -> List[CycleEntry]:
    return [CycleEntry(length, c, _histogram(h)) for length, (c, h) in sorted(grouped.items())]


def _check_bounds(rule: RuleVector) -> None:
    if len(rule) > MAX_CENSUS_CELLS:
        raise BoundExceededError(f"census 只支援 L ≤ {MAX_CENSUS_CELLS}，收到 L = {len(rule)}")


# -------------------- 單行程 --------------------

def cycle_census(rule: RuleVector, workers: int = 1) -> CycleCensus:
    _check_bounds(rule)
    if workers > 1:
        return _cycle_census_parallel(rule, workers)

    L = len(rule)
    n = 1 << L
    full = n - 1
    m150 = rule.mask150
    classify = _make_classifier(L)

    # visited bitmap：每個狀態 1 bit
    visited = np.zeros((n + 7) >> 3, dtype=np.uint8)
    grouped: Dict[int, List] = {}
    cycles = 0
    for start in range(n):
        if visited[start >> 3] & (1 << (start & 7)):
            continue
        s = start
        length = 0
        counts = [0, 0, 0, 0]
        while not visited[s >> 3] & (1 << (s & 7)):
            visited[s >> 3] |= 1 << (s & 7)
            counts[classify(s)] += 1
            length += 1
            s = step_int(s, m150, full)
        if s != start:
            raise NotBijectiveError(
                f"rule {rule} 的 step 不是 bijection：從 {start:0{L}b} 出發走到已走過的 {s:0{L}b}"
            )
        _tally(grouped, length, counts)
        cycles += 1
        if start and start % _PROGRESS_EVERY == 0:
            logger.info("census L=%d：已掃到 %d / %d，cycle 數 %d", L, start, n, cycles)

    census = CycleCensus(L, _entries(grouped), n)
    logger.info("census L=%d 完成：%s", L, census.counts())
    return census


# -------------------- 多 worker --------------------

def _census_range(args: Tuple[int, int, int, int]) -> List[Tuple[int, int, Tuple[int, ...]]]:
    """回報 [lo, hi) 內身為所屬 cycle 最小狀態的起點：(起點, 長度, 類別計數)。"""
    L, m150, lo, hi = args
    full = (1 << L) - 1
    limit = 1 << L
    classify = _make_classifier(L)
    out = []
    for start in range(lo, hi):
        s = step_int(start, m150, full)
        length = 1
        counts = [0, 0, 0, 0]
        counts[classify(start)] += 1
        owner = True
        while s != start:
            if s < start or length > limit:
                owner = False
                break
            counts[classify(s)] += 1
            length += 1
            s = step_int(s, m150, full)
        if owner:
            out.append((start, length, tuple(counts)))
    return out


def _cycle_census_parallel(rule: RuleVector, workers: int) -> CycleCensus:
    L = len(rule)
    n = 1 << L
    # det(T) = P(0)；常數項為 0 就不是 bijection
    if not char_poly(rule).coefficient(0):
        raise NotBijectiveError(f"rule {rule} 的特徵多項式常數項為 0，step 不是 bijection")

    chunk = max(1, -(-n // (workers * 8)))
    tasks = [(L, rule.mask150, lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]
    grouped: Dict[int, List] = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_census_range, tasks):
            for _, length, counts in part:
                _tally(grouped, length, counts)

    census = CycleCensus(L, _entries(grouped), n)
    if census.covered_states() != n:
        raise NotBijectiveError(f"rule {rule} 的 cycle 只涵蓋 {census.covered_states()} / {n} 個狀態")
    logger.info("census L=%d（%d workers）完成：%s", L, workers, census.counts())
    return census
