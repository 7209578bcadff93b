# 验证流程编排模块

from .verification_graph import SuiteResult, VerificationGraph

__all__ = ['SuiteResult', 'VerificationGraph']
