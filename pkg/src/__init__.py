"""propagation-lab - 大尺度无线传播路径损耗计算"""
__version__ = "1.0.0"
