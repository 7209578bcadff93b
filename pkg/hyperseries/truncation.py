#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
级数截断策略与求和结果
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

from numerics.special import CompensatedSum
from utils.config import get_settings
from utils.exceptions import TruncationError, check_finite
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TruncationPolicy:
    """截断策略：容差、最大项数、连续小项个数"""

    tol: float = 1e-16
    max_terms: int = 5000
    small_terms: int = 3

    @classmethod
    def default(cls, tol: Optional[float] = None) -> "TruncationPolicy":
        settings = get_settings()
        return cls(tol=tol if tol is not None else settings.series_tol,
                   max_terms=settings.max_terms,
                   small_terms=settings.small_terms)


@dataclass
class SeriesResult:
    """级数求和结果及截断元数据"""

    value: complex
    terms: int
    tail_bound: float = 0.0
    condition: float = 0.0
    terminating: bool = False
    extra: Dict = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            'terms': self.terms,
            'tail_bound': self.tail_bound,
            'condition': self.condition,
            'terminating': self.terminating,
        }


class SeriesAccumulator:
    """
    逐项累加并按策略判断截断

    add() 返回 True 表示已满足“连续 small_terms 项都小于 tol·|部分和|”
    """

    def __init__(self, policy: TruncationPolicy, what: str):
        self.policy = policy
        self.what = what
        self.acc = CompensatedSum()
        self._small = 0
        self._last = 0.0
        self._prev = 0.0

    def add(self, term: complex) -> bool:
        check_finite(complex(term), f"{self.what} 的第 {self.acc.count} 项")
        self.acc.add(term)
        self._prev, self._last = self._last, abs(term)
        if abs(term) <= self.policy.tol * abs(self.acc.value):
            self._small += 1
        else:
            self._small = 0
        return self._small >= self.policy.small_terms

    def exhausted(self) -> bool:
        return self.acc.count >= self.policy.max_terms

    def fail(self) -> None:
        raise TruncationError(
            f"{self.what} 在 {self.policy.max_terms} 项内未收敛 (末项 {self._last:.3e})",
            terms=self.acc.count, last_term=self._last)

    def tail_bound(self, ratio: Optional[float] = None) -> float:
        """几何强函数尾项界：|末项|·r/(1-r)"""
        if ratio is None:
            ratio = self._last / self._prev if self._prev > 0 else 0.0
        if ratio >= 1.0:
            return self._last
        return self._last * ratio / (1.0 - ratio)

    def result(self, terminating: bool = False, ratio: Optional[float] = None) -> SeriesResult:
        tail = 0.0 if terminating else self.tail_bound(ratio)
        return SeriesResult(value=self.acc.value,
                            terms=self.acc.count,
                            tail_bound=tail,
                            condition=self.acc.abs_sum,
                            terminating=terminating)
