"""实现点连通度、最小点割与“是否含 (k+1)-连通子图”的判定过程。

所有内核都直接在宿主图的邻接位集上、以 alive 位集限定的诱导子图中工作，
递归分解时无需复制或重新标号子图。
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .exceptions import ParameterError
from .graphcore import (
    Graph,
    VertexSet,
    component_masks,
    induced,
    iter_bits,
    lowest_bit,
    popcount,
)

_logger = logging.getLogger(__name__)

# (separator, side_a, side_b)，均为位集
_Cut = Tuple[int, int, int]


@dataclass(frozen=True)
class CutCertificate:
    """表示“存在大小为 |separator| 的分离集”的可检验证据。

    Args:
        separator: 分离集 S。
        side_a: G - S 的最小连通分量 A。
        side_b: 其余顶点 B = V - S - A。
    """

    separator: VertexSet
    side_a: VertexSet
    side_b: VertexSet

    @property
    def size(self) -> int:
        return len(self.separator)


@dataclass(frozen=True)
class KSubgraphWitness:
    """表示一个诱导 (k+1)-连通子图的顶点集合。"""

    vertices: VertexSet
    k: int


@dataclass(frozen=True)
class SeparationProfile:
    """记录一次分离 (S, A, B) 的归一化规模，以及 S 中邻居较少的子集 S1。

    Args:
        separator: 分离集 S。
        side_a: G - S 的最小连通分量 A。
        side_b: B = V - S - A。
        alpha: |A| / k。
        beta: |B| / k。
        gamma: n / k。
        s1: S 中满足 |N(v) ∩ A| / k <= (alpha + 1) / 2 的顶点。
        sigma: |S1| / k。
    """

    separator: VertexSet
    side_a: VertexSet
    side_b: VertexSet
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    s1: VertexSet
    sigma: Fraction


def _local_flow(adj: Sequence[int], alive: int, s: int, t: int, limit: int) -> Tuple[int, Optional[int]]:
    """在拆点有向图上求 s-t 内部点不交路径数，达到 limit 时提前停止。

    每个内部顶点 v 拆成 v_in -> v_out（容量 1），每条边 uv 拆成 u_out -> v_in 与
    v_out -> u_in（容量无穷）。流以净流表示：inflow[w] 的第 u 位表示 u -> w 有一单位流，
    through 的第 v 位表示 v_in -> v_out 已饱和。

    Returns:
        (流值, 最小割位集)；若流值达到 limit 则割为 None。
    """

    inflow = [0] * len(adj)
    through = 0
    flow = 0
    s_bit = 1 << s
    internal = alive & ~s_bit & ~(1 << t)
    while flow < limit:
        start = (s << 1) | 1
        parent: Dict[int, Optional[int]] = {start: None}
        seen_in = 0
        seen_out = s_bit
        queue = deque([start])
        target = None
        while queue and target is None:
            state = queue.popleft()
            v = state >> 1
            if state & 1:
                for w in iter_bits(adj[v] & alive & ~seen_in & ~s_bit):
                    seen_in |= 1 << w
                    parent[w << 1] = state
                    if w == t:
                        target = w << 1
                        break
                    queue.append(w << 1)
                if target is None and v != s and (through >> v) & 1 and not (seen_in >> v) & 1:
                    seen_in |= 1 << v
                    parent[v << 1] = state
                    queue.append(v << 1)
            elif not (through >> v) & 1:
                if not (seen_out >> v) & 1:
                    seen_out |= 1 << v
                    parent[state | 1] = state
                    queue.append(state | 1)
            else:
                for u in iter_bits(inflow[v] & ~seen_out):
                    seen_out |= 1 << u
                    parent[(u << 1) | 1] = state
                    queue.append((u << 1) | 1)

        if target is None:
            return flow, seen_in & ~seen_out & internal

        cur = target
        prev = parent[cur]
        while prev is not None:
            pv, cv = prev >> 1, cur >> 1
            if prev & 1 and not cur & 1:
                if pv == cv:
                    through &= ~(1 << cv)
                elif (inflow[pv] >> cv) & 1:
                    inflow[pv] &= ~(1 << cv)
                else:
                    inflow[cv] |= 1 << pv
            elif pv == cv:
                through |= 1 << cv
            else:
                inflow[pv] &= ~(1 << cv)
            cur = prev
            prev = parent[cur]
        flow += 1
    return flow, None


def _min_degree_vertex(adj: Sequence[int], alive: int) -> Tuple[int, int]:
    best_v, best_d = -1, -1
    for v in iter_bits(alive):
        d = popcount(adj[v] & alive)
        if best_d < 0 or d < best_d:
            best_v, best_d = v, d
    return best_v, best_d


def _scan_pairs(adj: Sequence[int], alive: int, v: int) -> Iterator[Tuple[int, int]]:
    """按固定顺序产出需要计算局部连通度的顶点对。

    先是 v 与每个非邻居，再是 v 的每对不相邻邻居；这些对的局部连通度最小值即 κ。
    """

    nbrs = adj[v] & alive
    for w in iter_bits(alive & ~nbrs & ~(1 << v)):
        yield v, w
    for x in iter_bits(nbrs):
        for y in iter_bits(nbrs & ~adj[x] & ~((1 << (x + 1)) - 1)):
            yield x, y


def _split_sides(adj: Sequence[int], alive: int, separator: int) -> _Cut:
    parts = component_masks(adj, alive & ~separator)
    side_a = parts[0]
    return separator, side_a, alive & ~separator & ~side_a


def _find_cut_at_most(adj: Sequence[int], alive: int, k: int) -> Optional[_Cut]:
    """在 alive 诱导子图中寻找任意一个大小 <= k 的分离集（提前退出版本）。

    调用方需保证 |alive| >= k + 2。
    """

    parts = component_masks(adj, alive)
    if len(parts) > 1:
        return 0, parts[0], alive & ~parts[0]
    v, d = _min_degree_vertex(adj, alive)
    if d <= k:
        separator = adj[v] & alive
        return separator, 1 << v, alive & ~separator & ~(1 << v)
    for s, t in _scan_pairs(adj, alive, v):
        value, cut = _local_flow(adj, alive, s, t, k + 1)
        if cut is not None:
            return _split_sides(adj, alive, cut)
    return None


def _min_cut(adj: Sequence[int], alive: int) -> Tuple[int, Optional[_Cut]]:
    """计算 alive 诱导子图（连通、非完全）的 κ 与确定性的最小割。

    在所有达到最小值的割中取升序顶点元组字典序最小者。
    """

    v, d = _min_degree_vertex(adj, alive)
    best = d
    best_cuts: List[int] = []
    for s, t in _scan_pairs(adj, alive, v):
        value, cut = _local_flow(adj, alive, s, t, best + 1)
        if cut is None:
            continue
        if value < best:
            best, best_cuts = value, [cut]
        elif value == best:
            best_cuts.append(cut)
    if not best_cuts:
        return best, None
    chosen = min(best_cuts, key=lambda c: tuple(iter_bits(c)))
    return best, _split_sides(adj, alive, chosen)


def _certificate(n: int, cut: _Cut) -> CutCertificate:
    separator, side_a, side_b = cut
    return CutCertificate(VertexSet(n, separator), VertexSet(n, side_a), VertexSet(n, side_b))


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """返回 s、t 之间内部点不交路径的最大数目（即最小 s-t 点割大小）。

    Raises:
        ParameterError: 当 s == t、编号越界或 s、t 相邻时抛出。
    """

    return len(local_vertex_cut(g, s, t))


def local_vertex_cut(g: Graph, s: int, t: int) -> VertexSet:
    """返回一个最小 s-t 点割（靠近 s 一侧的那个）。"""

    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ParameterError(f"Vertices ({s}, {t}) out of range for n={g.n}")
    if s == t:
        raise ParameterError("Local connectivity needs two distinct vertices")
    if g.has_edge(s, t):
        raise ParameterError(f"Vertices {s} and {t} are adjacent; no vertex cut separates them")
    _, cut = _local_flow(g.adj, (1 << g.n) - 1, s, t, g.n)
    assert cut is not None
    return VertexSet(g.n, cut)


def vertex_connectivity(g: Graph) -> Tuple[int, Optional[CutCertificate]]:
    """计算 κ(G)，并在 G 非完全图时给出一个最小分离集证书。

    约定：不连通图 κ = 0（证书的分离集为空）；κ(K_n) = n - 1 且无证书；κ(K_1) = 0。

    Raises:
        ParameterError: 当 n == 0 时抛出。
    """

    if g.n == 0:
        raise ParameterError("Vertex connectivity is undefined for the empty graph")
    if _is_complete(g):
        return g.n - 1, None
    full = (1 << g.n) - 1
    parts = component_masks(g.adj, full)
    if len(parts) > 1:
        return 0, _certificate(g.n, (0, parts[0], full & ~parts[0]))
    kappa, cut = _min_cut(g.adj, full)
    assert cut is not None
    return kappa, _certificate(g.n, cut)


def find_separator_at_most(g: Graph, k: int) -> Optional[CutCertificate]:
    """若存在大小 <= k 的分离集，返回一个最小的；否则返回 None。"""

    if k < 0 or g.n <= 1 or _is_complete(g):
        return None
    kappa, cert = vertex_connectivity(g)
    if cert is None or kappa > k:
        return None
    return cert


def is_k_plus_1_connected(g: Graph, k: int) -> bool:
    """判断 G 是否 (k+1)-连通：n >= k+2 且不存在大小 <= k 的分离集。

    Raises:
        ParameterError: 当 k < 0 时抛出。
    """

    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if g.n < k + 2:
        return False
    return _find_cut_at_most(g.adj, (1 << g.n) - 1, k) is None


def _decompose(adj: Sequence[int], alive: int, k: int, first_only: bool) -> List[int]:
    """递归分解：沿大小 <= k 的分离集把顶点集拆成 A∪S 与 B∪S，返回不可再分的叶子。

    任何 (k+1)-连通子图 H 不可能同时与 A、B 相交，否则 S ∩ V(H) 会成为 H 的
    大小 <= k 的分离集，所以 H 总落在某个叶子之内。
    """

    leaves: List[int] = []
    visited = set()
    stack = [alive]
    while stack:
        part = stack.pop()
        if popcount(part) <= k + 1 or part in visited:
            continue
        visited.add(part)
        cut = _find_cut_at_most(adj, part, k)
        if cut is None:
            leaves.append(part)
            if first_only:
                break
            continue
        separator, side_a, side_b = cut
        smaller, larger = sorted((side_a, side_b), key=lambda x: (popcount(x), lowest_bit(x)))
        stack.append(larger | separator)
        stack.append(smaller | separator)
    _logger.debug("分解完成：访问 %d 个顶点集，得到 %d 个叶子", len(visited), len(leaves))
    return leaves


def has_k_plus_1_connected_subgraph(g: Graph, k: int) -> Tuple[bool, Optional[KSubgraphWitness]]:
    """判定 G 是否含有 (k+1)-连通的诱导子图，若有则给出顶点集见证。

    Raises:
        ParameterError: 当 k < 1 时抛出。
    """

    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if g.n <= k + 1:
        return False, None
    leaves = _decompose(g.adj, (1 << g.n) - 1, k, first_only=True)
    if not leaves:
        return False, None
    return True, KSubgraphWitness(VertexSet(g.n, leaves[0]), k)


def max_k_connected_pieces(g: Graph, k: int) -> List[KSubgraphWitness]:
    """返回全部包含关系下极大的 (k+1)-连通顶点集，按（大小降序，字典序）排列。"""

    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if g.n <= k + 1:
        return []
    leaves = set(_decompose(g.adj, (1 << g.n) - 1, k, first_only=False))
    maximal = [leaf for leaf in leaves if not any(other != leaf and leaf & ~other == 0 for other in leaves)]
    maximal.sort(key=lambda c: (-popcount(c), tuple(iter_bits(c))))
    return [KSubgraphWitness(VertexSet(g.n, c), k) for c in maximal]


def separation_profile(g: Graph, k: int) -> Optional[SeparationProfile]:
    """对最小分离集 S 计算 (S, A, B) 的归一化规模 alpha、beta、gamma 与 S1、sigma。

    A 取 G - S 的最小连通分量；不存在大小 <= k 的分离集时返回 None。
    """

    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    cert = find_separator_at_most(g, k)
    if cert is None:
        return None
    a_bits = cert.side_a.bits
    a_size = len(cert.side_a)
    s1 = 0
    for v in cert.separator:
        if 2 * popcount(g.adj[v] & a_bits) <= a_size + k:
            s1 |= 1 << v
    return SeparationProfile(
        separator=cert.separator,
        side_a=cert.side_a,
        side_b=cert.side_b,
        alpha=Fraction(a_size, k),
        beta=Fraction(len(cert.side_b), k),
        gamma=Fraction(g.n, k),
        s1=VertexSet(g.n, s1),
        sigma=Fraction(popcount(s1), k),
    )


def check_certificate(g: Graph, cert: CutCertificate) -> bool:
    """复核证书：三部分划分 V(G)、两侧非空、A 与 B 之间无边。"""

    sets = (cert.separator, cert.side_a, cert.side_b)
    if any(x.size != g.n for x in sets):
        return False
    s, a, b = (x.bits for x in sets)
    if s & a or s & b or a & b or (s | a | b) != (1 << g.n) - 1:
        return False
    if not a or not b:
        return False
    return all(g.adj[v] & b == 0 for v in iter_bits(a))


def check_witness(g: Graph, witness: KSubgraphWitness) -> bool:
    if witness.vertices.size != g.n or len(witness.vertices) < witness.k + 2:
        return False
    sub, _ = induced(g, witness.vertices)
    return is_k_plus_1_connected(sub, witness.k)
