#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
参数网格数据源
读取 data/grids/<ID>.txt：# 注释与空行忽略，每行一组空格分隔的 key=value
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np

from utils.config import get_settings
from utils.exceptions import ConfigError
from utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT = "default"
SAMPLE_PREFIX = "sample:"

ROOT = Path(__file__).resolve().parent.parent


def parse_value(text: str) -> Union[int, float, complex]:
    """按 int → float → complex 的顺序解析"""
    for convert in (int, float, complex):
        try:
            return convert(text)
        except ValueError:
            continue
    raise ConfigError(f"无法解析数值: {text!r}")


def parse_line(line: str) -> Optional[Dict[str, Any]]:
    """解析一行；注释或空行返回 None"""
    content = line.split('#', 1)[0].strip()
    if not content:
        return None
    point = {}
    for token in content.split():
        if '=' not in token:
            raise ConfigError(f"网格项须为 key=value, 实际 {token!r}")
        key, value = token.split('=', 1)
        if not key or key in point:
            raise ConfigError(f"网格项键名为空或重复: {token!r}")
        point[key] = parse_value(value)
    return point


def parse_grid(text: str, source: str = "<text>") -> List[Dict[str, Any]]:
    """解析网格文本，错误消息带行号"""
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        try:
            point = parse_line(line)
        except ConfigError as e:
            raise ConfigError(f"{source}:{lineno}: {e}") from e
        if point is not None:
            points.append(point)
    return points


def grid_path(identity_id: str, grid_dir: Optional[str] = None) -> Path:
    base = Path(grid_dir or get_settings().grid_dir)
    if not base.is_absolute():
        base = ROOT / base
    return base / f"{identity_id.upper()}.txt"


def load_grid(identity_id: str, spec: str = DEFAULT, seed: int = 0,
              grid_dir: Optional[str] = None) -> List[Dict[str, Any]]:
    """
    按网格说明加载参数点

    Args:
        identity_id: 恒等式 id
        spec: "default" | "sample:N"（从默认网格中按种子无放回抽 N 点）| 文件路径
        seed: 抽样种子
        grid_dir: 默认网格目录，缺省取配置

    Returns:
        参数字典列表，顺序确定
    """
    if spec == DEFAULT or spec.startswith(SAMPLE_PREFIX):
        path = grid_path(identity_id, grid_dir)
    else:
        path = Path(spec)
    if not path.exists():
        raise ConfigError(f"网格文件不存在: {path}")
    points = parse_grid(path.read_text(encoding='utf-8'), str(path))
    logger.debug(f"📊 读取网格 {path}: {len(points)} 点")

    if spec.startswith(SAMPLE_PREFIX):
        try:
            count = int(spec[len(SAMPLE_PREFIX):])
        except ValueError as e:
            raise ConfigError(f"抽样网格须为 sample:N, 实际 {spec!r}") from e
        if count < 0:
            raise ConfigError(f"抽样点数须 >= 0, 实际 {count}")
        rng = np.random.default_rng(seed)
        chosen = sorted(rng.choice(len(points), size=min(count, len(points)), replace=False))
        points = [points[i] for i in chosen]
    return points
