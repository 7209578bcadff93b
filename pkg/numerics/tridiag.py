#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
实对称三对角矩阵
截断哈密顿量、Y_sA 矩阵和 Gauss 求积规则共用的载体
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from utils.exceptions import DomainError

MAX_TRIDIAG_SIZE = 5000


@dataclass(frozen=True)
class TridiagSym:
    """实对称三对角矩阵：主对角线 diag (N)，次对角线 offdiag (N-1)"""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        offdiag = np.asarray(self.offdiag, dtype=float)
        if diag.ndim != 1 or diag.size < 1:
            raise DomainError("三对角矩阵至少需要 1 个对角元")
        if offdiag.shape != (diag.size - 1,):
            raise DomainError(
                f"次对角线长度应为 {diag.size - 1}, 实际 {offdiag.size}"
            )
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def size(self) -> int:
        return int(self.diag.size)

    def to_dense(self) -> np.ndarray:
        """转为稠密矩阵"""
        return (np.diag(self.diag)
                + np.diag(self.offdiag, 1)
                + np.diag(self.offdiag, -1))

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """矩阵-向量乘"""
        v = np.asarray(v)
        out = self.diag * v
        out[:-1] += self.offdiag * v[1:]
        out[1:] += self.offdiag * v[:-1]
        return out

    def norm(self) -> float:
        """无穷范数（行和上界）"""
        row = np.abs(self.diag).copy()
        row[:-1] += np.abs(self.offdiag)
        row[1:] += np.abs(self.offdiag)
        return float(row.max())


def _check_size(m: TridiagSym) -> None:
    if m.size > MAX_TRIDIAG_SIZE:
        raise DomainError(f"三对角矩阵维数 {m.size} 超过上限 {MAX_TRIDIAG_SIZE}")


def tridiag_eigen(m: TridiagSym) -> Tuple[np.ndarray, np.ndarray]:
    """
    对称三对角特征分解

    Args:
        m: 三对角矩阵

    Returns:
        (升序特征值, 列正交的特征向量矩阵)
    """
    _check_size(m)
    if m.size == 1:
        return m.diag.copy(), np.ones((1, 1))
    values, vectors = eigh_tridiagonal(m.diag, m.offdiag)
    return values, vectors


def tridiag_eigvals(m: TridiagSym) -> np.ndarray:
    """只求特征值（升序）"""
    _check_size(m)
    if m.size == 1:
        return m.diag.copy()
    return eigh_tridiagonal(m.diag, m.offdiag, eigvals_only=True)
