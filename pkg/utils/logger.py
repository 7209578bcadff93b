#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
日志工具
统一的 su11poly 日志命名空间，状态行沿用 ✅ ❌ ⚠️ 📊 前缀
"""

import logging
import sys
from typing import Optional

ROOT_LOGGER_NAME = "su11poly"
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"

_configured = False


def _configure_root(level: Optional[str] = None) -> logging.Logger:
    global _configured
    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.propagate = False
        if level is None:
            from utils.config import get_settings
            level = get_settings().log_level
        root.setLevel(level.upper())
        _configured = True
    elif level is not None:
        root.setLevel(level.upper())
    return root


def get_logger(name: str) -> logging.Logger:
    """
    获取模块日志器

    Args:
        name: 模块名，通常传 __name__

    Returns:
        su11poly 命名空间下的 Logger
    """
    _configure_root()
    short = name.split('.')[-1] if name else ROOT_LOGGER_NAME
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{short}")


def set_debug(enabled: bool = True) -> None:
    """打开/关闭调试输出"""
    _configure_root("DEBUG" if enabled else "WARNING")


def set_level(level: str) -> None:
    """设置日志级别"""
    _configure_root(level)
