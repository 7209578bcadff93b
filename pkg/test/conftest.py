#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""测试公共设置"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from utils.config import reset_settings  # noqa: E402


@pytest.fixture
def rng():
    """固定种子的随机数发生器"""
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """每个测试使用干净的配置"""
    for key in ("SU11POLY_SERIES_TOL", "SU11POLY_MAX_TERMS", "SU11POLY_SMALL_TERMS", "SU11POLY_WORKERS",
                "SU11POLY_GRID_DIR", "SU11POLY_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()
