# 命令行接口

from .commands import build_parser, main, parse_config, run
from .config import RunConfig

__all__ = ['RunConfig', 'build_parser', 'main', 'parse_config', 'run']
