"""为 k 连通子图工具集定义类型化异常。"""

from __future__ import annotations

from typing import Optional, Tuple


class KconError(RuntimeError):
    """表示本工具集抛出的基础异常类型。"""


class ConfigurationError(KconError):
    """表示环境变量或 .env 配置缺失或不合法。"""


class InvalidGraphError(KconError):
    """表示图的构造参数不合法（越界顶点、自环、超出顶点上限）。"""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.pair = pair


class GraphFormatError(KconError):
    """表示 graph6 或边列表文本无法解析。"""


class ParameterError(KconError):
    """表示操作的前置条件不满足（例如 n、k 的取值范围）。"""


class BoundDomainError(ParameterError):
    """表示请求的阈值超出 k >= 2、n >= k+1 或 gamma > 1 的定义域。"""


class NotForcingBoundError(ParameterError):
    """表示对非强制型界调用了只对强制型界有意义的操作。"""


class BudgetExceededError(KconError):
    """表示估算的工作量超过了预算，拒绝执行。"""

    def __init__(self, estimate: int, budget: int):
        super().__init__(f"Work estimate {estimate} exceeds budget {budget}")
        self.estimate = estimate
        self.budget = budget


class DomainRefusedError(KconError):
    """表示验证请求落在界的有效域之外且未显式允许。"""
