#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
命令行入口
eval / spectrum / verify / quad / suite；退出码 0 通过，1 残差失败，2 用法或定义域错误
"""

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dataflows.grid_source import DEFAULT, parse_value
from dataflows.report_writer import render_table, write_reports, write_text
from graph.verification_graph import EXIT_DOMAIN, EXIT_PASS, EXIT_RESIDUAL, VerificationGraph
from kernels.registry import check_identity, get_identity, list_identities
from kernels.report import GridSummary
from numerics.tridiag import tridiag_eigvals
from orthopoly.families import HYPERGEOMETRIC, RECURRENCE, MuPoint, PolyFamily, eval_result
from qsu11.representation import QRepLabel, ysa_matrix
from su11.representation import HamiltonianKind, predicted_discrete_spectrum, truncated_spectrum
from utils.exceptions import ConfigError, DomainError, Su11PolyError
from utils.logger import get_logger, set_debug

from .config import RunConfig

logger = get_logger(__name__)

MAX_DIM = 5000

# 命令行名 → (构造函数, 参数名)
FAMILIES: Dict[str, Tuple[Callable[..., PolyFamily], Tuple[str, ...]]] = {
    'laguerre': (PolyFamily.laguerre, ('alpha',)),
    'meixner': (PolyFamily.meixner, ('beta', 'c')),
    'mp': (PolyFamily.meixner_pollaczek, ('lam', 'phi')),
    'jacobi': (PolyFamily.jacobi, ('a', 'b')),
    'hahn': (PolyFamily.hahn, ('a', 'b', 'N')),
    'chahn': (PolyFamily.continuous_hahn, ('a', 'b', 'c', 'd')),
    'hermite': (PolyFamily.hermite, ()),
    'asc': (PolyFamily.al_salam_chihara, ('a', 'b', 'q')),
    'aw': (PolyFamily.askey_wilson, ('a', 'b', 'c', 'd', 'q')),
    'cqh': (PolyFamily.continuous_q_hermite, ('q',)),
}
FAMILY_ALIASES = {
    'meixner-pollaczek': 'mp',
    'continuous-hahn': 'chahn',
    'al-salam-chihara': 'asc',
    'askey-wilson': 'aw',
    'continuous-q-hermite': 'cqh',
}
Q_FAMILIES = ('asc', 'aw', 'cqh')

QUAD_IDS = ('LEM41', 'JG5C', 'JG5D', 'AWJ')
QUAD_DEFAULTS: Dict[str, Dict[str, Any]] = {
    'LEM41': {'a': 0.5, 'b': 1.5, 'j': 3, 'c': 0.7},
    'JG5C': {'a': 0.5, 'rho': 1.5, 'm': 0, 'n': 0},
    'JG5D': {'lam': 1.3, 'm': 0, 'n': 0},
    'AWJ': {'a': 0.3, 'b': 0.2, 'c': -0.4, 'd': 0.1, 'f': 0.25, 'g': -0.35, 'q': 0.3},
}


def parse_extras(tokens: Sequence[str]) -> Dict[str, Any]:
    """把剩余的 --name value 对解析成参数字典"""
    extras: Dict[str, Any] = {}
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if not token.startswith('--') or len(token) == 2:
            raise ConfigError(f"无法识别的参数: {token}")
        name, _, inline = token[2:].partition('=')
        if inline:
            value = inline
            i += 1
        else:
            if i + 1 >= len(tokens):
                raise ConfigError(f"参数 --{name} 缺少取值")
            value = tokens[i + 1]
            i += 2
        if name in extras:
            raise ConfigError(f"参数 --{name} 重复")
        extras[name] = parse_value(value)
    return extras


def _number_list(text: Optional[str]) -> List[Any]:
    if text is None:
        return []
    return [parse_value(item) for item in text.split(',') if item.strip()]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument('--output', default=None, help='输出文件，缺省写到标准输出')
    common.add_argument('--format', default='json', help='json | csv | text')
    common.add_argument('--tol', type=float, default=None, help='相对残差容差')
    common.add_argument('--seed', type=int, default=0, help='抽样网格的随机种子')
    common.add_argument('--workers', type=int, default=1, help='网格检查的并发线程数')
    common.add_argument('--debug', action='store_true', help='输出调试日志')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog='su11poly', allow_abbrev=False,
                                     description='su(1,1) / U_q(su(1,1)) 正交多项式恒等式的数值验证')
    sub = parser.add_subparsers(dest='command', required=True)

    p_eval = sub.add_parser('eval', parents=[common], allow_abbrev=False,
                            help='多项式求值，族参数以 --名字 值 给出')
    p_eval.add_argument('--family', required=True, help=', '.join(FAMILIES))
    p_eval.add_argument('--n', required=True, help='次数，逗号分隔')
    p_eval.add_argument('--x', default=None, help='自变量，逗号分隔；q 族表示 μ')
    p_eval.add_argument('--theta', default=None, help='q 族的角度 θ，x = e^{iθ}')
    p_eval.add_argument('--method', default=RECURRENCE, choices=[RECURRENCE, HYPERGEOMETRIC, 'both'])

    p_spec = sub.add_parser('spectrum', parents=[common], allow_abbrev=False, help='截断算子的特征值')
    p_spec.add_argument('--op', required=True, choices=['x2', 'xphi', 'xc', 'ysa'])
    p_spec.add_argument('--k', type=float, required=True)
    p_spec.add_argument('--phi', type=float, default=None)
    p_spec.add_argument('--c', type=float, default=None)
    p_spec.add_argument('--q', type=float, default=None)
    p_spec.add_argument('--s', type=float, default=1.0)
    p_spec.add_argument('--dim', type=int, required=True)
    p_spec.add_argument('--count', type=int, default=5, help='X_c 对比的离散谱个数')

    p_verify = sub.add_parser('verify', parents=[common], allow_abbrev=False, help='在网格上检查恒等式')
    p_verify.add_argument('--id', default=None)
    p_verify.add_argument('--grid', default=DEFAULT, help='default | sample:N | 文件路径')
    p_verify.add_argument('--list', action='store_true', help='列出注册表')

    p_quad = sub.add_parser('quad', parents=[common], allow_abbrev=False,
                            help='积分恒等式的求积检查，参数以 --名字 值 给出')
    p_quad.add_argument('--id', required=True, help=', '.join(i.lower() for i in QUAD_IDS))

    sub.add_parser('suite', parents=[common], allow_abbrev=False, help='全部恒等式的默认网格')
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """命令行 → RunConfig；eval 与 quad 接受额外的 --名字 值"""
    parser = build_parser()
    args, rest = parser.parse_known_args(argv)
    if rest and args.command not in ('eval', 'quad'):
        raise ConfigError(f"无法识别的参数: {' '.join(rest)}")
    values = vars(args)
    common = {key: values.pop(key) for key in ('output', 'format', 'tol', 'seed', 'workers', 'debug')}
    command = values.pop('command')
    values['extra'] = parse_extras(rest)
    return RunConfig.build(command=command, parameters=values, **common)


# ---------------------------------------------------------------------------
# 命令

def _pair(value: complex) -> Tuple[float, float]:
    value = complex(value)
    return value.real, value.imag


def cmd_eval(config: RunConfig) -> int:
    """多项式求值"""
    name = str(config.param('family')).lower()
    name = FAMILY_ALIASES.get(name, name)
    if name not in FAMILIES:
        raise ConfigError(f"未知多项式族: {name}, 可选 {', '.join(FAMILIES)}")
    builder, names = FAMILIES[name]
    extra = dict(config.param('extra', {}))
    unknown = sorted(set(extra) - set(names))
    if unknown:
        raise ConfigError(f"{name} 不接受参数: {', '.join(unknown)}")
    missing = [n for n in names if n not in extra]
    if missing:
        raise ConfigError(f"{name} 缺少参数: {', '.join('--' + n for n in missing)}")
    family = builder(*(extra[n] for n in names))

    degrees = _number_list(config.param('n'))
    if not degrees or any(not isinstance(n, int) for n in degrees):
        raise ConfigError("--n 须为逗号分隔的非负整数")
    points: List[Tuple[str, Any]] = [(f"{x}", x) for x in _number_list(config.param('x'))]
    if config.param('theta') is not None:
        if name not in Q_FAMILIES:
            raise ConfigError("--theta 只用于 q 族 (asc, aw, cqh)")
        points += [(f"θ={t}", MuPoint.from_theta(float(t))) for t in _number_list(config.param('theta'))]
    if not points:
        raise ConfigError("需要 --x 或 --theta")
    method = config.param('method', RECURRENCE)
    methods = [RECURRENCE, HYPERGEOMETRIC] if method == 'both' else [method]

    rows = []
    for n in degrees:
        for label, x in points:
            for m in methods:
                result = eval_result(family, n, x, m)
                re, im = _pair(result.value)
                rows.append({'family': family.tag, 'n': n, 'x': label, 'method': m,
                             'value_re': re, 'value_im': im, 'condition': result.condition})
    _emit(render_table(rows, config.format), config)
    return EXIT_PASS


def _spectrum_rows(config: RunConfig) -> Tuple[List[Dict], float]:
    op = config.param('op')
    k = config.param('k')
    dim = config.param('dim')
    if not 1 <= dim <= MAX_DIM:
        raise DomainError(f"截断维数须满足 1 <= dim <= {MAX_DIM}, 实际 {dim}")
    if op == 'ysa':
        q = config.param('q')
        if q is None:
            raise ConfigError("ysa 需要 --q")
        values = tridiag_eigvals(ysa_matrix(QRepLabel(k, q, config.param('s', 1.0)), dim))
        return [{'index': i, 'eigenvalue': float(v)} for i, v in enumerate(values)], 0.0

    if op == 'x2':
        kind = HamiltonianKind.x2()
    elif op == 'xphi':
        if config.param('phi') is None:
            raise ConfigError("xphi 需要 --phi")
        kind = HamiltonianKind.xphi(config.param('phi'))
    else:
        if config.param('c') is None:
            raise ConfigError("xc 需要 --c")
        kind = HamiltonianKind.xc(config.param('c'))
    values = truncated_spectrum(kind, k, dim)
    rows = [{'index': i, 'eigenvalue': float(v)} for i, v in enumerate(values)]
    if not kind.discrete:
        return rows, 0.0

    # 离零最近的特征值对应 m = 0, 1, ...，在升序数组的末尾
    count = min(config.param('count', 5), dim)
    predicted = predicted_discrete_spectrum(kind, k, count)
    worst = 0.0
    for m in range(count):
        row = rows[dim - 1 - m]
        deviation = abs(row['eigenvalue'] - float(predicted[m]))
        row['m'] = m
        row['predicted'] = float(predicted[m])
        row['deviation'] = deviation
        worst = max(worst, deviation)
    for row in rows:
        row.setdefault('m', None)
        row.setdefault('predicted', None)
        row.setdefault('deviation', None)
    return rows, worst


def cmd_spectrum(config: RunConfig) -> int:
    """截断算子的特征值；X_c 额外对比离散谱，给了 --tol 时偏差超限返回 1"""
    rows, worst = _spectrum_rows(config)
    _emit(render_table(rows, config.format), config)
    if config.tol is not None and worst > config.tol:
        logger.warning(f"❌ 离散谱最大偏差 {worst:.3e} 超过容差 {config.tol:g}")
        return EXIT_RESIDUAL
    return EXIT_PASS


def _graph(config: RunConfig) -> VerificationGraph:
    return VerificationGraph(debug=config.debug,
                             config={'workers': config.workers, 'tol': config.tol, 'seed': config.seed})


def cmd_verify(config: RunConfig) -> int:
    """网格检查"""
    if config.param('list'):
        rows = [{'id': i, 'anchor': anchor, 'default_tol': tol} for i, anchor, tol in list_identities()]
        _emit(render_table(rows, config.format), config)
        return EXIT_PASS
    identity_id = config.param('id')
    if not identity_id:
        raise ConfigError("verify 需要 --id 或 --list")
    get_identity(identity_id)
    result = _graph(config).run_identity(identity_id, config.param('grid', DEFAULT))
    _emit(write_reports(result.reports, config.format, None, result.summaries), config)
    return result.exit_code


def cmd_quad(config: RunConfig) -> int:
    """单点求积检查"""
    identity = get_identity(config.param('id'))
    if identity.id not in QUAD_IDS:
        raise ConfigError(f"quad 只支持 {', '.join(i.lower() for i in QUAD_IDS)}, 实际 {identity.id}")
    params = dict(QUAD_DEFAULTS[identity.id])
    params.update(config.param('extra', {}))
    report = check_identity(identity.id, params, config.tol)
    summary = GridSummary.of(identity.id, [report])
    _emit(write_reports([report], config.format, None, [summary]), config)
    return EXIT_PASS if report.passed else EXIT_RESIDUAL


def cmd_suite(config: RunConfig) -> int:
    """全部默认网格"""
    result = _graph(config).run_suite()
    _emit(write_reports(result.reports, config.format, None, result.summaries), config)
    sys.stderr.write(result.format_output())
    return result.exit_code


COMMAND_HANDLERS: Dict[str, Callable[[RunConfig], int]] = {
    'eval': cmd_eval,
    'spectrum': cmd_spectrum,
    'verify': cmd_verify,
    'quad': cmd_quad,
    'suite': cmd_suite,
}


def _emit(content: str, config: RunConfig) -> None:
    if config.output:
        write_text(content, config.output)
        logger.info(f"📄 已写入 {config.output}")
    else:
        sys.stdout.write(content)
        if not content.endswith("\n"):
            sys.stdout.write("\n")


def run(config: RunConfig) -> int:
    """执行配置，异常映射为退出码"""
    if config.debug:
        set_debug(True)
    try:
        return COMMAND_HANDLERS[config.command](config)
    except (DomainError, ConfigError) as e:
        logger.error(f"❌ {e}")
        return EXIT_DOMAIN
    except Su11PolyError as e:
        logger.error(f"❌ {e}")
        return EXIT_RESIDUAL


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except ConfigError as e:
        logger.error(f"❌ {e}")
        return EXIT_DOMAIN
    except SystemExit as e:
        # argparse 的用法错误
        return EXIT_DOMAIN if e.code else EXIT_PASS
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
