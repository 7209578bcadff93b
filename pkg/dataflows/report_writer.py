#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
检查报告输出：json / csv / text
报告里不写时间戳，同样的配置得到逐字节相同的输出
"""

import json
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import pandas as pd

from kernels.report import CheckReport, GridSummary
from utils.exceptions import ConfigError

JSON = "json"
CSV = "csv"
TEXT = "text"
FORMATS = (JSON, CSV, TEXT)


def reports_to_frame(reports: Sequence[CheckReport]) -> pd.DataFrame:
    """每个报告一行；params 展开为 param_<name> 列，复数拆成实部 / 虚部"""
    rows = []
    for report in reports:
        data = report.to_dict()
        row: Dict = {'identity': data['identity']}
        for name, value in data['params'].items():
            if isinstance(value, list):
                row[f'param_{name}'] = value[0]
                row[f'param_{name}_im'] = value[1]
            else:
                row[f'param_{name}'] = value
        for side in ('lhs', 'rhs'):
            pair = data[side] or [None, None]
            row[f'{side}_re'], row[f'{side}_im'] = pair
        for key in ('abs_residual', 'rel_residual', 'terms', 'tail_bound', 'tol', 'pass'):
            row[key] = data[key]
        row['status'] = report.status
        row['error'] = report.error or ""
        rows.append(row)
    return pd.DataFrame(rows)


def render(reports: Sequence[CheckReport], fmt: str = JSON,
           summaries: Optional[List[GridSummary]] = None) -> str:
    """
    把报告渲染成字符串

    Args:
        reports: 检查报告
        fmt: json | csv | text
        summaries: 网格汇总（json 与 text 会附带）

    Returns:
        渲染结果
    """
    if fmt == JSON:
        payload: Dict = {'reports': [r.to_dict() for r in reports]}
        if summaries is not None:
            payload['summary'] = [s.to_dict() for s in summaries]
        return json.dumps(payload, ensure_ascii=False, indent=2)
    if fmt == CSV:
        return reports_to_frame(reports).to_csv(index=False)
    if fmt == TEXT:
        lines = [r.format_output() for r in reports]
        if summaries:
            lines.append('=' * 60)
            lines.extend(s.format_output() for s in summaries)
        return "\n".join(lines) + "\n"
    raise ConfigError(f"未知输出格式: {fmt}, 可选 {', '.join(FORMATS)}")


def write_reports(reports: Sequence[CheckReport], fmt: str = JSON, output: Optional[str] = None,
                  summaries: Optional[List[GridSummary]] = None) -> str:
    """渲染并写到文件；output 为空时只返回字符串"""
    return write_text(render(reports, fmt, summaries), output)


def render_table(rows: Sequence[Dict], fmt: str = JSON) -> str:
    """eval / spectrum 的表格输出"""
    if fmt == JSON:
        return json.dumps(list(rows), ensure_ascii=False, indent=2)
    frame = pd.DataFrame(list(rows))
    if fmt == CSV:
        return frame.to_csv(index=False)
    if fmt == TEXT:
        return frame.to_string(index=False) + "\n"
    raise ConfigError(f"未知输出格式: {fmt}, 可选 {', '.join(FORMATS)}")


def write_text(content: str, output: Optional[str] = None) -> str:
    if output:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding='utf-8')
    return content
