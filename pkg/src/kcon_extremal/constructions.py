"""生成 Mader 的极值构造 G_{n,k} 并给出其精确边数。"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exceptions import ParameterError
from .graphcore import MAX_VERTICES, Graph, VertexSet

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaderParams:
    """n = k*q + r 的分解，且 1 <= r <= k（k 整除 n 时 r = k）。"""

    n: int
    k: int
    q: int
    r: int

    @classmethod
    def from_nk(cls, n: int, k: int) -> "MaderParams":
        """规范化 (n, k) 为 (q, r)。

        Raises:
            ParameterError: 当 k < 2 或 n < k + 1 时抛出。
        """

        if k < 2:
            raise ParameterError(f"The construction needs k >= 2, got k={k}")
        if n < k + 1:
            raise ParameterError(f"The construction needs n >= k+1, got n={n}, k={k}")
        r = n % k or k
        return cls(n=n, k=k, q=(n - r) // k, r=r)


@dataclass(frozen=True)
class MaderGraph:
    """生成的图及其分块 V0..Vq（V0 在前，顶点连续编号）。"""

    graph: Graph
    params: MaderParams
    parts: Tuple[VertexSet, ...]

    @property
    def v0(self) -> VertexSet:
        return self.parts[0]


def mader_graph(n: int, k: int) -> MaderGraph:
    """构造 G_{n,k}：独立集 V0 与团 V1..Vq 完全连接，除此之外无边。

    Raises:
        ParameterError: 当 k < 2、n < k + 1 或 n 超过顶点上限时抛出。
    """

    params = MaderParams.from_nk(n, k)
    if n > MAX_VERTICES:
        raise ParameterError(f"The construction is limited to n <= {MAX_VERTICES}, got n={n}")
    sizes = [k] * params.q + [params.r]
    parts = []
    start = 0
    for size in sizes:
        parts.append(((1 << size) - 1) << start)
        start += size

    v0 = parts[0]
    rest = ((1 << n) - 1) & ~v0
    rows = [rest] * k
    for v in range(k, n):
        # every part after V0 starts at a multiple of k
        clique = parts[1 + (v - k) // k]
        rows.append(v0 | (clique & ~(1 << v)))
    graph = Graph(n, tuple(rows))
    _logger.debug("已生成 G_{%d,%d}: q=%d r=%d m=%d", n, k, params.q, params.r, graph.m)
    return MaderGraph(graph=graph, params=params, parts=tuple(VertexSet(n, p) for p in parts))


def mader_edge_count(n: int, k: int) -> int:
    """返回 k(n-k) + (q-1)k(k-1)/2 + r(r-1)/2。"""

    p = MaderParams.from_nk(n, k)
    return k * (n - k) + (p.q - 1) * k * (k - 1) // 2 + p.r * (p.r - 1) // 2


def construction_bound(n: int, k: int) -> Fraction:
    """返回 (3/2)(k - 1/3)(n - k)；k 整除 n 时与构造的边数相等。"""

    MaderParams.from_nk(n, k)
    return Fraction(3, 2) * (k - Fraction(1, 3)) * (n - k)


def construction_slack(n: int, k: int) -> Fraction:
    """返回界与构造边数之差 r(k - r)/2。"""

    p = MaderParams.from_nk(n, k)
    return Fraction(p.r * (k - p.r), 2)
