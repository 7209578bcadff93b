#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
全局配置
默认值即可复现所有验收运行；可选的 .env 文件和 SU11POLY_* 环境变量用于覆盖
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

PROJECT_ROOT = Path(__file__).resolve().parent.parent
ENV_PREFIX = "SU11POLY_"


class Settings(BaseModel):
    """运行时设置"""

    series_tol: float = Field(1e-16, gt=0)
    max_terms: int = Field(5000, ge=1)
    small_terms: int = Field(3, ge=1)
    workers: int = Field(1, ge=1)
    grid_dir: Path = PROJECT_ROOT / "data" / "grids"
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"未知日志级别: {value}")
        return value


_settings: Optional[Settings] = None


def load_settings(env_file: Optional[str] = None) -> Settings:
    """
    读取 .env 与环境变量构造设置

    Args:
        env_file: .env 路径，缺省为项目根目录下的 .env（不存在则忽略）

    Returns:
        Settings
    """
    path = Path(env_file) if env_file else PROJECT_ROOT / ".env"
    if path.exists():
        load_dotenv(path, override=False)

    values = {}
    for name in Settings.model_fields:
        raw = os.environ.get(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = raw
    return Settings(**values)


def get_settings() -> Settings:
    """获取设置单例"""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def reset_settings() -> None:
    """清除缓存的设置（测试用）"""
    global _settings
    _settings = None
