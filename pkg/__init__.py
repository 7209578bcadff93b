# su(1,1) / U_q(su(1,1)) 正交多项式恒等式的数值验证

__version__ = "1.0.0"
__description__ = "su(1,1) 与 U_q(su(1,1)) 表示中正交多项式恒等式的数值验证库"
