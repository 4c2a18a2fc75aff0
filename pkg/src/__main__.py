"""为 kcon_extremal 提供一个无需安装即可运行的命令行入口。"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from kcon_extremal.cli import main  # noqa: E402

if __name__ == "__main__":
    raise SystemExit(main())
