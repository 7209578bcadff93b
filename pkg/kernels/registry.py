#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
恒等式注册表
每个条目带参数模式、默认容差和两侧的求值入口；左右两侧走互不相交的代码路径
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from hyperseries.truncation import SeriesResult, TruncationPolicy
from orthopoly.families import MuPoint
from qsu11.coupling import q_expansion_sides
from su11.coupling import convolution_sides, expansion_sides
from su11.representation import HamiltonianKind
from su11.transform import exp_column_deviation, xc_conjugation_residual
from utils.exceptions import DomainError, Su11PolyError, TruncationError
from utils.logger import get_logger

from . import closed_forms as cf
from . import series_sides as ss
from .report import DOMAIN_ERROR, FAIL, TRUNCATION_ERROR, CheckReport, GridSummary

logger = get_logger(__name__)

REAL = "real"
INT = "int"
COMPLEX = "complex"

MAX_QUAD_DEGREE = 30


@dataclass(frozen=True)
class ParamSpec:
    """单个参数的类型与取值范围"""
    name: str
    kind: str = REAL
    check: Optional[Callable[[Any], bool]] = None
    rule: str = ""

    def coerce(self, value: Any) -> Any:
        """按类型转换，越界抛 DomainError"""
        if self.kind == INT:
            if isinstance(value, bool):
                raise DomainError(f"参数 {self.name} 须为整数, 实际 {value!r}")
            if isinstance(value, complex):
                if value.imag != 0:
                    raise DomainError(f"参数 {self.name} 须为整数, 实际 {value}")
                value = value.real
            if isinstance(value, float):
                if not value.is_integer():
                    raise DomainError(f"参数 {self.name} 须为整数, 实际 {value}")
            value = int(value)
        elif self.kind == REAL:
            if isinstance(value, complex):
                if value.imag != 0:
                    raise DomainError(f"参数 {self.name} 须为实数, 实际 {value}")
                value = value.real
            value = float(value)
        else:
            value = complex(value)
        if self.check is not None and not self.check(value):
            raise DomainError(f"参数 {self.name} 要求 {self.rule}, 实际 {self.name}={value}")
        return value


@dataclass(frozen=True)
class Constraint:
    """跨参数约束"""
    rule: str
    check: Callable[[Dict[str, Any]], bool]


@dataclass
class Sides:
    """一次求值的两侧及截断元数据；residual 非空表示委托检查直接给出相对残差"""
    lhs: complex = 0j
    rhs: complex = 0j
    terms: int = 0
    tail_bound: float = 0.0
    quad_points: Optional[int] = None
    residual: Optional[float] = None


ClosedFn = Callable[[Dict[str, Any]], complex]
SeriesFn = Callable[[Dict[str, Any], TruncationPolicy], SeriesResult]
CheckFn = Callable[[Dict[str, Any], TruncationPolicy], Sides]


@dataclass(frozen=True)
class Identity:
    """注册表条目"""
    id: str
    anchor: str
    params: Tuple[ParamSpec, ...]
    default_tol: float
    constraints: Tuple[Constraint, ...] = ()
    closed: Optional[ClosedFn] = None
    series: Optional[SeriesFn] = None
    check: Optional[CheckFn] = None

    @property
    def param_names(self) -> List[str]:
        return [p.name for p in self.params]

    def validate(self, params: Mapping[str, Any]) -> Dict[str, Any]:
        """按模式转换参数；缺失或多余的键都算定义域错误"""
        unknown = sorted(set(params) - set(self.param_names))
        if unknown:
            raise DomainError(f"{self.id} 不接受参数: {', '.join(unknown)}")
        missing = [name for name in self.param_names if name not in params]
        if missing:
            raise DomainError(f"{self.id} 缺少参数: {', '.join(missing)}")
        values = {spec.name: spec.coerce(params[spec.name]) for spec in self.params}
        for constraint in self.constraints:
            if not constraint.check(values):
                raise DomainError(f"{self.id} 要求 {constraint.rule}")
        return values

    def evaluate(self, params: Mapping[str, Any], trunc: Optional[TruncationPolicy] = None) -> Sides:
        values = self.validate(params)
        trunc = trunc or TruncationPolicy.default()
        if self.check is not None:
            return self.check(values, trunc)
        series = self.series(values, trunc)
        return Sides(lhs=series.value, rhs=self.closed(values), terms=series.terms,
                     tail_bound=series.tail_bound, quad_points=series.extra.get('quad_points'))


# ---------------------------------------------------------------------------
# 参数模式

def _positive(name: str, kind: str = REAL) -> ParamSpec:
    return ParamSpec(name, kind, lambda v: v > 0, "> 0")


def _above_minus_one(name: str) -> ParamSpec:
    return ParamSpec(name, REAL, lambda v: v > -1, "> -1")


def _open_unit(name: str) -> ParamSpec:
    return ParamSpec(name, REAL, lambda v: 0 < v < 1, "0 < 值 < 1")


def _disk(name: str) -> ParamSpec:
    return ParamSpec(name, COMPLEX, lambda v: abs(v) < 1, "|值| < 1")


def _nonneg_int(name: str, upper: Optional[int] = None) -> ParamSpec:
    if upper is None:
        return ParamSpec(name, INT, lambda v: v >= 0, ">= 0")
    return ParamSpec(name, INT, lambda v: 0 <= v <= upper, f"0 <= 值 <= {upper}")


def _real(name: str) -> ParamSpec:
    return ParamSpec(name, REAL)


def _nonzero_real(name: str) -> ParamSpec:
    return ParamSpec(name, REAL, lambda v: v != 0, "≠ 0")


def _q(name: str = "q") -> ParamSpec:
    return ParamSpec(name, REAL, lambda v: 0 < v < 1, "0 < q < 1")


def _angle(name: str) -> ParamSpec:
    return ParamSpec(name, REAL, lambda v: 0 < v < math.pi, "0 < φ < π")


def _nonzero(*names: str) -> Constraint:
    return Constraint(f"{', '.join(names)} 非零", lambda p: all(p[n] != 0 for n in names))


# ---------------------------------------------------------------------------
# 委托检查

def _kind(variant: str, p: Dict[str, Any]) -> HamiltonianKind:
    if variant == "x2":
        return HamiltonianKind.x2()
    if variant == "xphi":
        return HamiltonianKind.xphi(p['phi'])
    return HamiltonianKind.xc(p['c'])


def _conv_check(variant: str) -> CheckFn:
    def run(p: Dict[str, Any], trunc: TruncationPolicy) -> Sides:
        lhs, rhs = convolution_sides(_kind(variant, p), p['k1'], p['k2'], p['j'], p['n'], p['x1'], p['x2'])
        return Sides(lhs=lhs, rhs=rhs, terms=p['n'] + p['j'] + 1)
    return run


def _vv_check(variant: str) -> CheckFn:
    def run(p: Dict[str, Any], trunc: TruncationPolicy) -> Sides:
        lhs, rhs = expansion_sides(_kind(variant, p), p['k1'], p['k2'], p['x1'], p['x2'],
                                   p['z1'], p['z2'], p['degree'])
        return Sides(lhs=lhs, rhs=rhs, terms=p['degree'] + 1)
    return run


def _qexp_check(p: Dict[str, Any], trunc: TruncationPolicy) -> Sides:
    result = q_expansion_sides(p['k1'], p['k2'], p['q'], p['s'],
                               MuPoint.from_theta(p['theta1']), MuPoint.from_theta(p['theta2']),
                               p['z1'], p['z2'], p['jmax'], p['nmax'])
    return Sides(lhs=result.lhs, rhs=result.rhs, terms=(p['jmax'] + 1) * (p['nmax'] + 1))


def _expj2_check(p: Dict[str, Any], trunc: TruncationPolicy) -> Sides:
    residual = exp_column_deviation(p['k'], p['c'], p['m'], p['dim'])
    return Sides(lhs=residual, terms=p['dim'], residual=residual)


def _expxc_check(p: Dict[str, Any], trunc: TruncationPolicy) -> Sides:
    residual = xc_conjugation_residual(p['k'], p['c'], p['dim'], p['block'])
    return Sides(lhs=residual, terms=p['dim'], residual=residual)


# ---------------------------------------------------------------------------
# 条目

_CONV_COMMON = (_positive("k1"), _positive("k2"), _nonneg_int("j"), _nonneg_int("n"))
_VV_COMMON = (_positive("k1"), _positive("k2"), _disk("z1"), _disk("z2"), _nonneg_int("degree"))


def _build() -> Dict[str, Identity]:
    entries = [
        Identity(
            "GF-LAG", "X₂ 实现向量：Laguerre 生成函数 Σ L_n^{(2k-1)}(x) z^n = (1-z)^{-2k} e^{xz/(z-1)}",
            (_positive("k"), _real("x"), _disk("z")), 1e-8,
            closed=lambda p: cf.gf_laguerre(p['k'], p['x'], p['z']),
            series=lambda p, t: ss.gf_laguerre_series(p['k'], p['x'], p['z'], t)),
        Identity(
            "GF-MP", "X_φ 实现向量：Meixner-Pollaczek 生成函数（含 Γ(2k)^{-1}）",
            (_positive("k"), _angle("phi"), _real("x"), _disk("z")), 1e-8,
            closed=lambda p: cf.gf_meixner_pollaczek(p['k'], p['phi'], p['x'], p['z']),
            series=lambda p, t: ss.gf_meixner_pollaczek_series(p['k'], p['phi'], p['x'], p['z'], t)),
        Identity(
            "GF-MEI", "X_c 实现向量：Meixner 生成函数 (1-z/c)^x (1-cz)^{-x-2k}",
            (_positive("k"), _open_unit("c"), _nonneg_int("x"), _disk("z")), 1e-8,
            closed=lambda p: cf.gf_meixner(p['k'], p['c'], p['x'], p['z']),
            series=lambda p, t: ss.gf_meixner_series(p['k'], p['c'], p['x'], p['z'], t)),
        Identity(
            "SER1", "Laguerre 型 Poisson 核：Σ 1F1[-n;b;x] 2F1[-n,a;b;y] (b)_n/n! z^n",
            (_real("a"), _positive("b"), ParamSpec("x", COMPLEX), ParamSpec("y", COMPLEX), _disk("z")), 1e-8,
            constraints=(Constraint("|z|·max(1, |1-y|) < 1",
                                    lambda p: abs(p['z']) * max(1.0, abs(1 - p['y'])) < 1),),
            closed=lambda p: cf.ser1(p['a'], p['b'], p['x'], p['y'], p['z']),
            series=lambda p, t: ss.ser1_series(p['a'], p['b'], p['x'], p['y'], p['z'], t)),
        Identity(
            "SER2", "Meixner 型 Poisson 核：Σ 2F1[-n,a;c;x] 2F1[-n,b;c;y] (c)_n z^n/n!",
            (_real("a"), _real("b"), _positive("c"), ParamSpec("x", COMPLEX), ParamSpec("y", COMPLEX),
             _disk("z")), 1e-8,
            constraints=(Constraint("|z|·max(1, |1-x|)·max(1, |1-y|) < 1",
                                    lambda p: abs(p['z']) * max(1.0, abs(1 - p['x']))
                                    * max(1.0, abs(1 - p['y'])) < 1),),
            closed=lambda p: cf.ser2(p['a'], p['b'], p['c'], p['x'], p['y'], p['z']),
            series=lambda p, t: ss.ser2_series(p['a'], p['b'], p['c'], p['x'], p['y'], p['z'], t)),
        Identity(
            "SERLAG", "两变量 Laguerre 生成函数：Σ L_n^{(b-1)}(s) z1^n 2F1[-n,a;b;1-z2/z1]",
            (_real("a"), _positive("b"), ParamSpec("s", REAL, lambda v: v >= 0, ">= 0"),
             _disk("z1"), _disk("z2")), 1e-8,
            constraints=(Constraint("|z1| + |z1-z2| < 1",
                                    lambda p: abs(p['z1']) + abs(p['z1'] - p['z2']) < 1),),
            closed=lambda p: cf.serlag(p['a'], p['b'], p['s'], p['z1'], p['z2']),
            series=lambda p, t: ss.serlag_series(p['a'], p['b'], p['s'], p['z1'], p['z2'], t)),
        Identity(
            "QSER2", "Al-Salam-Chihara 对称 Poisson 核：两个 3φ2 之积的级数 = 8W7 闭式",
            (_disk("a"), _disk("b"), _disk("c"), _disk("d"), _disk("f"), _q(), _disk("z")), 1e-6,
            constraints=(_nonzero("f"),),
            closed=lambda p: cf.qser2(p['a'], p['b'], p['c'], p['d'], p['f'], p['q'], p['z']),
            series=lambda p, t: ss.qser2_series(p['a'], p['b'], p['c'], p['d'], p['f'], p['q'], p['z'], t)),
        Identity(
            "GF-ASC", "q 实现向量：Σ s_n(μ(x); q^k s, q^k/s|q) z^n/(q;q)_n 的无穷乘积闭式",
            (_positive("k"), _q(), _nonzero_real("s"), _real("theta"), _disk("z")), 1e-8,
            closed=lambda p: cf.gf_al_salam_chihara(p['k'], p['q'], p['s'], p['theta'], p['z']),
            series=lambda p, t: ss.gf_al_salam_chihara_series(p['k'], p['q'], p['s'], p['theta'], p['z'], t)),
        Identity(
            "LEM41", "Jacobi 多项式乘 e^{cr} 的积分 = Gamma 因子 · 1F1",
            (_above_minus_one("a"), _above_minus_one("b"), _nonneg_int("j", MAX_QUAD_DEGREE), _real("c")), 1e-7,
            closed=lambda p: cf.lemma_integral(p['a'], p['b'], p['j'], p['c']),
            series=lambda p, t: ss.lemma_quadrature(p['a'], p['b'], p['j'], p['c'])),
        Identity(
            "AWJ", "Askey-Wilson 权下 h(t;g)/h(t;f) 的积分 = 8W7 闭式",
            (_disk("a"), _disk("b"), _disk("c"), _disk("d"), _disk("f"), _disk("g"), _q()), 1e-6,
            constraints=(_nonzero("d", "f", "g"),),
            closed=lambda p: cf.aw_j_integral(p['a'], p['b'], p['c'], p['d'], p['f'], p['g'], p['q']),
            series=lambda p, t: ss.aw_j_quadrature(p['a'], p['b'], p['c'], p['d'], p['f'], p['g'], p['q'])),
        Identity(
            "JG5C", "两个 Laguerre 多项式的交叉积分 = Meixner 多项式",
            (_above_minus_one("a"), ParamSpec("rho", REAL, lambda v: v > 1, "ρ > 1"),
             _nonneg_int("m", MAX_QUAD_DEGREE), _nonneg_int("n", MAX_QUAD_DEGREE)), 1e-7,
            closed=lambda p: cf.laguerre_kernel_integral(p['a'], p['rho'], p['m'], p['n']),
            series=lambda p, t: ss.laguerre_kernel_quadrature(p['a'], p['rho'], p['m'], p['n'])),
        Identity(
            "JG5D", "两个偶次 Hermite 多项式的交叉积分 = Meixner 多项式",
            (_real("lam"), _nonneg_int("m", MAX_QUAD_DEGREE), _nonneg_int("n", MAX_QUAD_DEGREE)), 1e-7,
            closed=lambda p: cf.hermite_kernel_integral(p['lam'], p['m'], p['n']),
            series=lambda p, t: ss.hermite_kernel_quadrature(p['lam'], p['m'], p['n'])),
        Identity(
            "CONV-X2", "X₂ 卷积恒等式（CGC 对 Laguerre 本征系数）",
            _CONV_COMMON + (ParamSpec("x1", REAL, lambda v: v >= 0, ">= 0"),
                            ParamSpec("x2", REAL, lambda v: v >= 0, ">= 0")), 1e-8,
            check=_conv_check("x2")),
        Identity(
            "CONV-XPHI", "X_φ 卷积恒等式（CGC 对 Meixner-Pollaczek 本征系数）",
            _CONV_COMMON + (_angle("phi"), _real("x1"), _real("x2")), 1e-8,
            check=_conv_check("xphi")),
        Identity(
            "CONV-XC", "X_c 卷积恒等式（CGC 对 Meixner 本征系数）",
            _CONV_COMMON + (_open_unit("c"), _nonneg_int("x1"), _nonneg_int("x2")), 1e-8,
            check=_conv_check("xc")),
        Identity(
            "QEXP", "q 未耦合本征向量按 Askey-Wilson 多项式展开为耦合本征向量",
            (_positive("k1"), _positive("k2"), _q(), _nonzero_real("s"), _real("theta1"), _real("theta2"),
             _disk("z1"), _disk("z2"), _nonneg_int("jmax"), _nonneg_int("nmax")), 1e-6,
            check=_qexp_check),
        Identity(
            "EXPJ2", "exp(iαJ₂) 的矩阵元 = Meixner 多项式（相位 (-1)^m）",
            (_positive("k"), _open_unit("c"), _nonneg_int("m"),
             ParamSpec("dim", INT, lambda v: v >= 2, ">= 2")), 1e-6,
            constraints=(Constraint("m < dim", lambda p: p['m'] < p['dim']),),
            check=_expj2_check),
        Identity(
            "EXPXC", "X_c = (c - 1/c) E J0 E†，E = exp(iαJ₂)",
            (_positive("k"), _open_unit("c"), ParamSpec("dim", INT, lambda v: v >= 2, ">= 2"),
             ParamSpec("block", INT, lambda v: v >= 1, ">= 1")), 1e-6,
            constraints=(Constraint("block < dim", lambda p: p['block'] < p['dim']),),
            check=_expxc_check),
        Identity(
            "VV-X2", "X₂ 未耦合实现向量 = Σ_j S_j · 耦合实现向量",
            _VV_COMMON + (ParamSpec("x1", REAL, lambda v: v >= 0, ">= 0"),
                          ParamSpec("x2", REAL, lambda v: v >= 0, ">= 0")), 1e-8,
            check=_vv_check("x2")),
        Identity(
            "VV-XPHI", "X_φ 未耦合实现向量 = Σ_j S_j · 耦合实现向量",
            _VV_COMMON + (_angle("phi"), _real("x1"), _real("x2")), 1e-8,
            check=_vv_check("xphi")),
        Identity(
            "VV-XC", "X_c 未耦合实现向量 = Σ_j S_j · 耦合实现向量",
            _VV_COMMON + (_open_unit("c"), _nonneg_int("x1"), _nonneg_int("x2")), 1e-8,
            check=_vv_check("xc")),
    ]
    return {entry.id: entry for entry in entries}


_REGISTRY: Mapping[str, Identity] = MappingProxyType(_build())


def get_identity(identity_id: str) -> Identity:
    """按 id 取条目，大小写不敏感"""
    key = identity_id.strip().upper()
    if key not in _REGISTRY:
        raise DomainError(f"未知恒等式 id: {identity_id}")
    return _REGISTRY[key]


def list_identities() -> List[Tuple[str, str, float]]:
    """(id, anchor, default_tol)，按注册顺序"""
    return [(entry.id, entry.anchor, entry.default_tol) for entry in _REGISTRY.values()]


def closed_form(identity_id: str, params: Mapping[str, Any]) -> complex:
    """闭式一侧"""
    entry = get_identity(identity_id)
    if entry.closed is None:
        raise DomainError(f"{entry.id} 是委托检查，没有单独的闭式一侧")
    return complex(entry.closed(entry.validate(params)))


def series_side(identity_id: str, params: Mapping[str, Any],
                trunc: Optional[TruncationPolicy] = None) -> SeriesResult:
    """级数 / 求积一侧，带截断元数据"""
    entry = get_identity(identity_id)
    if entry.series is None:
        raise DomainError(f"{entry.id} 是委托检查，没有单独的级数一侧")
    return entry.series(entry.validate(params), trunc or TruncationPolicy.default())


def check_identity(identity_id: str, params: Mapping[str, Any], tol: Optional[float] = None,
                   trunc: Optional[TruncationPolicy] = None) -> CheckReport:
    """
    检查单个参数点

    Args:
        identity_id: 注册表 id
        params: 参数字典
        tol: 相对残差容差，缺省用条目默认值
        trunc: 截断策略

    Returns:
        CheckReport

    Raises:
        DomainError: 参数不在模式内
        TruncationError: 级数未收敛
    """
    entry = get_identity(identity_id)
    tol = entry.default_tol if tol is None else tol
    if not tol > 0:
        raise DomainError(f"容差须 > 0, 实际 tol={tol}")
    sides = entry.evaluate(params, trunc)
    params = dict(params)
    if sides.residual is not None:
        return CheckReport.from_residual(entry.id, params, sides.residual, tol, terms=sides.terms)
    return CheckReport.from_sides(entry.id, params, sides.lhs, sides.rhs, tol,
                                  terms=sides.terms, tail_bound=sides.tail_bound,
                                  quad_points=sides.quad_points)


def _check_point(identity_id: str, params: Mapping[str, Any], tol: float,
                 trunc: Optional[TruncationPolicy]) -> CheckReport:
    """单点检查，错误按分类记入报告而不抛出"""
    try:
        return check_identity(identity_id, params, tol, trunc)
    except DomainError as e:
        return CheckReport.from_error(identity_id, dict(params), DOMAIN_ERROR, str(e), tol)
    except TruncationError as e:
        logger.warning(f"⚠️ {identity_id} 截断失败: {e}")
        return CheckReport.from_error(identity_id, dict(params), TRUNCATION_ERROR, str(e), tol)
    except Su11PolyError as e:
        return CheckReport.from_error(identity_id, dict(params), FAIL, str(e), tol)


def grid_check(identity_id: str, grid: Sequence[Mapping[str, Any]], tol: Optional[float] = None,
               workers: int = 1, trunc: Optional[TruncationPolicy] = None
               ) -> Tuple[List[CheckReport], GridSummary]:
    """
    在参数网格上逐点检查

    报告顺序与输入顺序一致；定义域外的点记为 domain_error，不算残差失败

    Args:
        identity_id: 注册表 id
        grid: 参数字典序列
        tol: 容差，缺省用条目默认值
        workers: 并发线程数
        trunc: 截断策略

    Returns:
        (报告列表, GridSummary)
    """
    entry = get_identity(identity_id)
    tol = entry.default_tol if tol is None else tol
    points = list(grid)
    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda p: _check_point(entry.id, p, tol, trunc), points))
    else:
        reports = [_check_point(entry.id, p, tol, trunc) for p in points]
    summary = GridSummary.of(entry.id, reports)
    logger.debug(f"📊 {entry.id}: {summary.passed}/{summary.total} 通过")
    return reports, summary
