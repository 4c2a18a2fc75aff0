#!/usr/bin/env python3
"""统一测试入口脚本 - 支持 unittest 和 pytest 两种运行方式，pytest 下可附带覆盖率"""

import argparse
import sys
import unittest
from pathlib import Path
from typing import List

PROJECT_ROOT = Path(__file__).parent
TEST_DIR = PROJECT_ROOT / "tests"
SRC_ROOT = PROJECT_ROOT / "src"


def _ensure_src_on_path() -> None:
    if str(SRC_ROOT) not in sys.path:
        sys.path.insert(0, str(SRC_ROOT))


def _pattern_exists(test_pattern: str) -> bool:
    if any(ch in test_pattern for ch in "*?["):
        return True
    if (TEST_DIR / test_pattern).exists():
        return True
    print(f"测试文件不存在: {TEST_DIR / test_pattern}")
    return False


def run_unittest_tests(test_pattern: str = "test_*.py", verbose: bool = True) -> int:
    """使用 unittest 发现并运行测试，返回退出码"""
    _ensure_src_on_path()
    if not _pattern_exists(test_pattern):
        return 2
    suite = unittest.TestLoader().discover(str(TEST_DIR), pattern=test_pattern)
    result = unittest.TextTestRunner(verbosity=2 if verbose else 1).run(suite)
    return 0 if result.wasSuccessful() else 1


def run_pytest_tests(test_pattern: str = "test_*.py", verbose: bool = True, coverage: bool = False) -> int:
    """使用 pytest 运行测试（未安装时回退到 unittest）"""
    try:
        import pytest
    except ImportError:
        print("pytest 未安装，将使用 unittest 运行测试")
        return run_unittest_tests(test_pattern, verbose)

    if not _pattern_exists(test_pattern):
        return 2
    args: List[str] = ["-v"] if verbose else ["-q"]
    if coverage:
        args += ["--cov=kcon_extremal", "--cov-report=term-missing"]
    if test_pattern == "test_*.py":
        args.append(str(TEST_DIR))
    else:
        args += [str(TEST_DIR), "-o", f"python_files={test_pattern}"]
    _ensure_src_on_path()
    return int(pytest.main(args))


def main() -> int:
    parser = argparse.ArgumentParser(description="kcon_extremal 测试运行器")
    parser.add_argument(
        "--runner",
        choices=["unittest", "pytest"],
        default="unittest",
        help="选择测试运行器 (默认: unittest)",
    )
    parser.add_argument(
        "--pattern",
        default="test_*.py",
        help="测试文件匹配模式，例如 test_ledger.py (默认: test_*.py)",
    )
    parser.add_argument("--quiet", action="store_true", help="安静模式，减少输出")
    parser.add_argument("--cov", action="store_true", help="统计 kcon_extremal 的覆盖率（仅 pytest）")

    args = parser.parse_args()
    print(f"使用 {args.runner} 运行测试: {args.pattern}")

    if args.runner == "pytest":
        return run_pytest_tests(args.pattern, not args.quiet, args.cov)
    return run_unittest_tests(args.pattern, not args.quiet)


if __name__ == "__main__":
    sys.exit(main())
