#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
su(1,1) / U_q(su(1,1)) 正交多项式恒等式验证 - 主入口
"""

import sys
import os

# 添加项目根目录到路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.commands import main


if __name__ == "__main__":
    sys.exit(main())
