#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
命令行运行配置
严格解析：未知键直接拒绝
"""

from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from utils.exceptions import ConfigError

COMMANDS = ("eval", "spectrum", "verify", "quad", "suite")


class RunConfig(BaseModel):
    """一次命令行运行的完整配置"""

    model_config = ConfigDict(extra="forbid")

    command: Literal["eval", "spectrum", "verify", "quad", "suite"]
    parameters: Dict[str, Any] = Field(default_factory=dict)
    output: Optional[str] = None
    format: Literal["json", "csv", "text"] = "json"
    tol: Optional[float] = Field(None, gt=0)
    seed: int = Field(0, ge=0)
    workers: int = Field(1, ge=1)
    debug: bool = False

    @classmethod
    def build(cls, **values: Any) -> "RunConfig":
        """构造配置，校验失败统一转成 ConfigError"""
        try:
            return cls(**values)
        except ValidationError as e:
            problems = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}"
                                 for err in e.errors())
            raise ConfigError(f"运行配置非法: {problems}") from e

    def param(self, name: str, default: Any = None) -> Any:
        return self.parameters.get(name, default)
