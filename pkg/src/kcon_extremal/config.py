"""为穷举搜索与命令行提供配置加载能力。"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from .exceptions import ConfigurationError

_logger = logging.getLogger(__name__)

LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


def _parse_int(value: Optional[str], name: str, default: int, minimum: int) -> int:
    """把环境变量解析为不小于 minimum 的整数；空值回退到默认值。

    Args:
        value: 环境变量原始值。
        name: 变量名，用于错误消息。
        default: 未设置或为空白时使用的默认值。
        minimum: 允许的最小值。

    Returns:
        解析后的整数。

    Raises:
        ConfigurationError: 当值不是整数或小于 minimum 时抛出。
    """

    if value is None or not str(value).strip():
        return default
    try:
        parsed = int(str(value).strip().replace("_", ""))
    except ValueError as e:
        raise ConfigurationError(f"{name} must be an integer") from e
    if parsed < minimum:
        raise ConfigurationError(f"{name} must be >= {minimum}")
    return parsed


def _parse_log_level(value: Optional[str], default: str) -> str:
    if value is None or not str(value).strip():
        return default
    level = str(value).strip().upper()
    if level not in LOG_LEVELS:
        raise ConfigurationError(f"KCON_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}")
    return level


def _resolve_dotenv_path(dotenv_path: str) -> str:
    """在不同工作目录运行时，尽可能稳健地解析 .env 的实际路径。

    Args:
        dotenv_path: 调用方传入的路径，可为绝对路径或相对路径。

    Returns:
        若在候选位置（当前目录、src 目录、项目根目录）找到文件则返回其绝对路径；
        否则返回原始输入，以便 load_dotenv 在文件不存在时自然成为 no-op。
    """

    if not isinstance(dotenv_path, str) or not dotenv_path.strip():
        return dotenv_path

    if os.path.isabs(dotenv_path):
        return dotenv_path
    if os.path.exists(dotenv_path):
        return os.path.abspath(dotenv_path)

    package_root = os.path.dirname(os.path.abspath(__file__))
    src_root = os.path.dirname(package_root)
    for root in (src_root, os.path.dirname(src_root)):
        candidate = os.path.abspath(os.path.join(root, dotenv_path))
        if os.path.exists(candidate):
            return candidate
    return dotenv_path


@dataclass(frozen=True)
class SearchSettings:
    """保存穷举验证与极值搜索使用的配置项。

    Args:
        budget: 穷举运行允许的判定过程调用次数上限。
        jobs: 枚举时使用的并行进程数。
        seed: 贪心搜索的随机种子。
        greedy_iterations: 贪心搜索的迭代次数。
        log_level: 命令行使用的日志级别名。
    """

    budget: int = 10 ** 8
    jobs: int = 1
    seed: int = 0
    greedy_iterations: int = 2000
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, dotenv_path: str = ".env") -> "SearchSettings":
        """从环境变量与 .env 文件加载配置并构造 SearchSettings。

        Args:
            dotenv_path: `.env` 文件路径；文件不存在时仅读取 `os.environ`。

        Returns:
            SearchSettings 实例。

        Raises:
            ConfigurationError: 当配置项格式不合法时抛出。
        """

        load_dotenv(_resolve_dotenv_path(dotenv_path))

        settings = cls(
            budget=_parse_int(os.getenv("KCON_BUDGET"), "KCON_BUDGET", cls.budget, 1),
            jobs=_parse_int(os.getenv("KCON_JOBS"), "KCON_JOBS", cls.jobs, 1),
            seed=_parse_int(os.getenv("KCON_SEED"), "KCON_SEED", cls.seed, 0),
            greedy_iterations=_parse_int(
                os.getenv("KCON_GREEDY_ITERATIONS"), "KCON_GREEDY_ITERATIONS", cls.greedy_iterations, 1
            ),
            log_level=_parse_log_level(os.getenv("KCON_LOG_LEVEL"), cls.log_level),
        )
        _logger.debug("读取到的配置: %s", settings)
        return settings
