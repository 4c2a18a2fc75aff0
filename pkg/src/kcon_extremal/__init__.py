"""(k+1)-连通子图极值结果的可执行版本：构造、判定、精确阈值、小规模验证与证明账本。"""

from __future__ import annotations

__version__ = "0.1.0"
