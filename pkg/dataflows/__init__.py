# 网格数据源与报告输出

from .grid_source import load_grid, parse_grid, parse_line, parse_value
from .report_writer import render, render_table, reports_to_frame, write_reports, write_text

__all__ = [
    'load_grid',
    'parse_grid',
    'parse_line',
    'parse_value',
    'render',
    'render_table',
    'reports_to_frame',
    'write_reports',
    'write_text',
]
