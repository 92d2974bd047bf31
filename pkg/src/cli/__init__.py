"""命令行模块

退出码:
    0  成功
    2  用法或参数错误（含曲线文件错误）
    3  严格模式下超出模型有效范围
    4  链路预算在最小距离处已无覆盖
"""
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RANGE = 3
EXIT_NO_COVERAGE = 4
