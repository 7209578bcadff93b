#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
验证流程编排
按 id 读取网格、逐点检查、汇总，suite 依次跑完注册表中的全部恒等式
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from dataflows.grid_source import DEFAULT, load_grid
from kernels.registry import grid_check, list_identities
from kernels.report import CheckReport, GridSummary
from utils.config import get_settings
from utils.logger import get_logger, set_debug

logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_RESIDUAL = 1
EXIT_DOMAIN = 2


@dataclass
class SuiteResult:
    """一次或多次网格检查的结果"""
    reports: List[CheckReport] = field(default_factory=list)
    summaries: List[GridSummary] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        """定义域错误优先于残差失败"""
        if any(s.domain_errors for s in self.summaries):
            return EXIT_DOMAIN
        if any(s.failed for s in self.summaries):
            return EXIT_RESIDUAL
        return EXIT_PASS

    def to_dict(self) -> Dict:
        return {
            'summary': [s.to_dict() for s in self.summaries],
            'exit_code': self.exit_code,
        }

    def format_output(self) -> str:
        total = sum(s.total for s in self.summaries)
        passed = sum(s.passed for s in self.summaries)
        output = f"\n{'=' * 60}\n📊 恒等式验证汇总\n{'=' * 60}\n"
        for summary in self.summaries:
            output += summary.format_output() + "\n"
        output += f"{'─' * 60}\n合计 {passed}/{total} 通过\n{'=' * 60}\n"
        return output


class VerificationGraph:
    """网格检查编排"""

    def __init__(self, debug: bool = False, config: Optional[Dict] = None):
        """
        Args:
            debug: 是否输出调试日志
            config: 覆盖项，支持 workers / tol / seed / grid_dir
        """
        self.debug = debug
        self.config = config or {}
        self.workers = int(self.config.get('workers', get_settings().workers))
        self.tol = self.config.get('tol')
        self.seed = int(self.config.get('seed', 0))
        self.grid_dir = self.config.get('grid_dir')
        if debug:
            set_debug(True)
            logger.debug(f"✅ 验证流程初始化完成 (workers={self.workers})")

    def run_identity(self, identity_id: str, grid: str = DEFAULT) -> SuiteResult:
        """
        单个恒等式的网格检查

        Args:
            identity_id: 注册表 id
            grid: 网格说明，见 load_grid

        Returns:
            SuiteResult
        """
        points = load_grid(identity_id, grid, seed=self.seed, grid_dir=self.grid_dir)
        if self.debug:
            logger.debug(f"📊 {identity_id.upper()}: {len(points)} 个参数点")
        reports, summary = grid_check(identity_id, points, tol=self.tol, workers=self.workers)
        if summary.all_passed:
            logger.debug(f"✅ {summary.identity} 全部通过")
        else:
            logger.warning(f"❌ {summary.identity}: 失败 {summary.failed}, 定义域错误 {summary.domain_errors}")
        return SuiteResult(reports, [summary])

    def run_suite(self, ids: Optional[List[str]] = None) -> SuiteResult:
        """依次检查所有（或指定）恒等式的默认网格"""
        ids = ids or [entry[0] for entry in list_identities()]
        result = SuiteResult()
        for identity_id in ids:
            part = self.run_identity(identity_id)
            result.reports.extend(part.reports)
            result.summaries.extend(part.summaries)
        return result
