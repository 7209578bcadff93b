#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
恒等式检查报告
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

PASS = "pass"
FAIL = "fail"
DOMAIN_ERROR = "domain_error"
TRUNCATION_ERROR = "truncation_error"

RESIDUAL_FLOOR = 1e-6


def _pair(value: Optional[complex]) -> Optional[List[float]]:
    if value is None:
        return None
    value = complex(value)
    return [value.real, value.imag]


def _plain(value: Any) -> Any:
    """参数值转成 JSON 可写形式，复数写成 [re, im]"""
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


@dataclass
class CheckReport:
    """单点检查结果"""
    identity: str
    params: Dict[str, Any]
    lhs: Optional[complex] = None
    rhs: Optional[complex] = None
    abs_residual: Optional[float] = None
    rel_residual: Optional[float] = None
    terms: int = 0
    tail_bound: float = 0.0
    tol: float = 0.0
    status: str = PASS
    error: Optional[str] = None
    quad_points: Optional[int] = None

    @classmethod
    def from_sides(cls, identity: str, params: Dict[str, Any], lhs: complex, rhs: complex,
                   tol: float, terms: int = 0, tail_bound: float = 0.0,
                   quad_points: Optional[int] = None) -> "CheckReport":
        """相对残差 |lhs - rhs| / max(|lhs|, |rhs|)；两侧都小于 1e-6 时改用绝对残差"""
        lhs, rhs = complex(lhs), complex(rhs)
        abs_res = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs))
        rel_res = abs_res / scale if scale >= RESIDUAL_FLOOR else abs_res
        return cls(identity=identity, params=params, lhs=lhs, rhs=rhs,
                   abs_residual=abs_res, rel_residual=rel_res,
                   terms=terms, tail_bound=tail_bound, tol=tol,
                   status=PASS if rel_res <= tol else FAIL,
                   quad_points=quad_points)

    @classmethod
    def from_residual(cls, identity: str, params: Dict[str, Any], residual: float,
                      tol: float, terms: int = 0) -> "CheckReport":
        """残差已由委托检查给出：lhs 记残差，rhs 记 0"""
        residual = float(residual)
        return cls(identity=identity, params=params, lhs=complex(residual), rhs=0j,
                   abs_residual=residual, rel_residual=residual, terms=terms, tol=tol,
                   status=PASS if residual <= tol else FAIL)

    @classmethod
    def from_error(cls, identity: str, params: Dict[str, Any], status: str, message: str,
                   tol: float) -> "CheckReport":
        return cls(identity=identity, params=params, tol=tol, status=status, error=message)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict:
        """字段顺序固定"""
        data = {
            'identity': self.identity,
            'params': {k: _plain(v) for k, v in self.params.items()},
            'lhs': _pair(self.lhs),
            'rhs': _pair(self.rhs),
            'abs_residual': self.abs_residual,
            'rel_residual': self.rel_residual,
            'terms': self.terms,
            'tail_bound': self.tail_bound,
            'tol': self.tol,
            'pass': self.passed,
        }
        if self.error is not None:
            data['status'] = self.status
            data['error'] = self.error
        return data

    def format_output(self) -> str:
        emoji = {PASS: "✅", FAIL: "❌", DOMAIN_ERROR: "⚠️", TRUNCATION_ERROR: "⚠️"}.get(self.status, "❌")
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        if self.error is not None:
            return f"{emoji} {self.identity} [{params}] {self.status}: {self.error}"
        return (f"{emoji} {self.identity} [{params}] "
                f"lhs={self.lhs:.12g} rhs={self.rhs:.12g} "
                f"rel={self.rel_residual:.3e} tol={self.tol:g} terms={self.terms}")


@dataclass
class GridSummary:
    """网格汇总"""
    identity: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    domain_errors: int = 0
    reports: List[CheckReport] = field(default_factory=list)

    @classmethod
    def of(cls, identity: str, reports: List[CheckReport]) -> "GridSummary":
        return cls(identity=identity,
                   total=len(reports),
                   passed=sum(r.status == PASS for r in reports),
                   failed=sum(r.status in (FAIL, TRUNCATION_ERROR) for r in reports),
                   domain_errors=sum(r.status == DOMAIN_ERROR for r in reports),
                   reports=list(reports))

    @property
    def pass_rate(self) -> float:
        """空网格视为全部通过"""
        return 1.0 if self.total == 0 else self.passed / self.total

    @property
    def all_passed(self) -> bool:
        return self.failed == 0 and self.domain_errors == 0

    def to_dict(self) -> Dict:
        return {
            'identity': self.identity,
            'total': self.total,
            'passed': self.passed,
            'failed': self.failed,
            'domain_errors': self.domain_errors,
            'pass_rate': self.pass_rate,
        }

    def format_output(self) -> str:
        emoji = "✅" if self.all_passed else "❌"
        return (f"{emoji} {self.identity:<10} {self.passed:>4}/{self.total:<4} "
                f"失败 {self.failed:<3} 定义域错误 {self.domain_errors:<3} "
                f"通过率 {self.pass_rate * 100:.1f}%")
