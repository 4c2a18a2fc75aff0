"""小规模经验验证：穷举确认强制型定理，并搜索不含 (k+1)-连通子图的最大边数。"""

from __future__ import annotations

import concurrent.futures
import logging
import math
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .bounds import BoundKind, in_domain, min_forcing_edge_count, threshold
from .connectivity import has_k_plus_1_connected_subgraph
from .constructions import mader_edge_count, mader_graph
from .exceptions import BudgetExceededError, DomainRefusedError, KconError, ParameterError
from .graphcore import MAX_VERTICES, Graph, empty_graph, from_graph6, to_graph6

_logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
DEFAULT_GREEDY_ITERATIONS = 2000
MAX_EXHAUSTIVE_VERTICES = 12


class SearchMode(str, Enum):
    FORCING = "forcing"
    EXHAUSTIVE = "exhaustive"
    GREEDY = "greedy"


@dataclass(frozen=True)
class SearchReport:
    """一次搜索或验证的结果。

    Args:
        n: 顶点数。
        k: 连通度参数。
        mode: 搜索模式。
        kind: 强制验证所用的界；最大化模式为 None。
        threshold: 强制验证所用的精确阈值。
        edge_count: 强制验证中被枚举图的边数 m。
        graphs_examined: 实际执行判定过程的次数。
        expected_work: estimate_work 给出的工作量。
        counterexamples: 不含 (k+1)-连通子图的 m 边图，按 graph6 排序。
        best_graph: 最大化模式找到的最佳见证图。
        exhaustive: 搜索空间是否被完整覆盖。
        exploratory: 是否在界的有效域之外运行。
        vacuous: m 超过 C(n, 2)，没有需要检查的图。
        observations: 与猜想界的对照等说明性记录，不作为断言。
        wall_time: 运行耗时（秒）。
    """

    n: int
    k: int
    mode: SearchMode
    kind: Optional[BoundKind] = None
    threshold: Optional[Fraction] = None
    edge_count: Optional[int] = None
    graphs_examined: int = 0
    expected_work: int = 0
    counterexamples: Tuple[Graph, ...] = ()
    best_graph: Optional[Graph] = None
    exhaustive: bool = True
    exploratory: bool = False
    vacuous: bool = False
    observations: Tuple[str, ...] = ()
    wall_time: float = field(default=0.0, compare=False)

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    @property
    def best_edge_count(self) -> Optional[int]:
        return None if self.best_graph is None else self.best_graph.m


def _edge_pairs(n: int) -> List[Tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _contains(g: Graph, k: int) -> bool:
    found, _ = has_k_plus_1_connected_subgraph(g, k)
    return found


def estimate_work(
    n: int, k: int, kind_or_mode: Union[BoundKind, SearchMode, str], iterations: int = DEFAULT_GREEDY_ITERATIONS
) -> int:
    """返回需要检查的图数目（强制模式）或判定调用次数的上界（最大化模式）。

    强制模式为 C(C(n, 2), m)，m 超过 C(n, 2) 时为 0；穷举模式为 2^C(n, 2)；
    贪心模式为 2 * iterations。
    """

    pairs = n * (n - 1) // 2
    if isinstance(kind_or_mode, BoundKind):
        m = min_forcing_edge_count(kind_or_mode, n, k)
        return math.comb(pairs, m) if m <= pairs else 0
    mode = SearchMode(kind_or_mode)
    if mode == SearchMode.EXHAUSTIVE:
        return 2**pairs
    if mode == SearchMode.GREEDY:
        return 2 * iterations
    raise ParameterError("Forcing mode needs a bound kind")


def _unrank_combination(rank: int, total: int, m: int) -> List[int]:
    """返回 range(total) 的 m 元组合在字典序下第 rank 个（0 起始）。"""

    combo: List[int] = []
    x = 0
    for i in range(m):
        while True:
            count = math.comb(total - x - 1, m - i - 1)
            if rank < count:
                break
            rank -= count
            x += 1
        combo.append(x)
        x += 1
    return combo


def _advance(combo: List[int], total: int) -> bool:
    m = len(combo)
    i = m - 1
    while i >= 0 and combo[i] == total - m + i:
        i -= 1
    if i < 0:
        return False
    combo[i] += 1
    for j in range(i + 1, m):
        combo[j] = combo[j - 1] + 1
    return True


def _scan_rank_range(n: int, k: int, m: int, start: int, stop: int) -> Tuple[int, List[str]]:
    """检查字典序名次 [start, stop) 内的全部 m 边标号图，返回（检查数，反例 graph6 列表）。"""

    pairs = _edge_pairs(n)
    combo = _unrank_combination(start, len(pairs), m)
    examined = 0
    found: List[str] = []
    for _ in range(stop - start):
        rows = [0] * n
        for index in combo:
            u, v = pairs[index]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        g = Graph(n, tuple(rows))
        examined += 1
        if not _contains(g, k):
            found.append(to_graph6(g).strip())
        _advance(combo, len(pairs))
    return examined, found


def _rank_chunks(total: int, parts: int) -> List[Tuple[int, int]]:
    parts = max(1, min(total, parts))
    step, extra = divmod(total, parts)
    chunks = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        chunks.append((start, stop))
        start = stop
    return chunks


def verify_forcing(
    kind: BoundKind,
    n: int,
    k: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    override_domain: bool = False,
) -> SearchReport:
    """枚举全部恰有 m = min_forcing_edge_count 条边的标号图，确认每个都含 (k+1)-连通子图。

    由于该性质对加边单调，只需检查边数恰为 m 的图。

    Args:
        kind: 强制型界。
        n: 顶点数。
        k: 连通度参数。
        budget: 允许的判定调用次数上限。
        jobs: 并行进程数；1 表示在当前进程内顺序执行。
        override_domain: 允许在界的有效域之外运行（报告标记为 exploratory）。

    Returns:
        SearchReport；反例按 graph6 排序，结果与调度无关。

    Raises:
        NotForcingBoundError: kind 不是强制型界。
        BoundDomainError: k < 2 或 n < k + 1。
        DomainRefusedError: (n, k) 不在有效域内且未指定 override_domain。
        BudgetExceededError: 需要检查的图数超过 budget。
    """

    if jobs < 1:
        raise ParameterError(f"jobs must be >= 1, got {jobs}")
    m = min_forcing_edge_count(kind, n, k)
    value = threshold(kind, n, k)
    exploratory = not in_domain(kind, n, k)
    if exploratory:
        if not override_domain:
            raise DomainRefusedError(f"(n={n}, k={k}) is outside the validity domain of {kind.value}")
        _logger.warning("在 %s 的有效域之外运行 (n=%d, k=%d)，结果仅供探索", kind.value, n, k)

    total = estimate_work(n, k, kind)
    if total > budget:
        raise BudgetExceededError(total, budget)

    pairs = n * (n - 1) // 2
    started = time.perf_counter()
    if m > pairs:
        _logger.info("%s (n=%d, k=%d): m=%d 超过 C(n,2)=%d，验证平凡成立", kind.value, n, k, m, pairs)
        return SearchReport(
            n=n, k=k, mode=SearchMode.FORCING, kind=kind, threshold=value, edge_count=m,
            expected_work=0, exploratory=exploratory, vacuous=True,
        )

    _logger.info("开始枚举 %s (n=%d, k=%d): m=%d，共 %d 个图，jobs=%d", kind.value, n, k, m, total, jobs)
    examined = 0
    found: List[str] = []
    if jobs == 1:
        examined, found = _scan_rank_range(n, k, m, 0, total)
    else:
        chunks = _rank_chunks(total, jobs * 4)
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(_scan_rank_range, n, k, m, start, stop) for start, stop in chunks]
            for future in futures:
                count, chunk_found = future.result()
                examined += count
                found.extend(chunk_found)
        _logger.info("已合并 %d 个分块", len(chunks))

    if examined != total:
        raise KconError(f"Enumeration covered {examined} graphs, expected {total}")
    counterexamples = tuple(from_graph6(s) for s in sorted(set(found)))
    elapsed = time.perf_counter() - started
    _logger.info("枚举完成：检查 %d 个图，反例 %d 个，用时 %.2fs", examined, len(counterexamples), elapsed)
    return SearchReport(
        n=n, k=k, mode=SearchMode.FORCING, kind=kind, threshold=value, edge_count=m,
        graphs_examined=examined, expected_work=total, counterexamples=counterexamples,
        exploratory=exploratory, wall_time=elapsed,
    )


def _initial_witness(n: int, k: int) -> Graph:
    """构造总是可行的起点；k = 1 时没有对应的构造，从空图开始。"""

    if k >= 2 and n >= k + 1:
        return mader_graph(n, k).graph
    return empty_graph(n)


class _Exhaustive:
    """按字典序加边的 DFS；含 (k+1)-连通子图的分支整枝剪除，边数上界不超过当前最优时也剪除。"""

    def __init__(self, n: int, k: int, budget: int) -> None:
        self.k = k
        self.budget = budget
        self.pairs = _edge_pairs(n)
        self.best = _initial_witness(n, k)
        self.calls = 0
        self.truncated = False

    def run(self, g: Graph, start: int) -> None:
        total = len(self.pairs)
        for j in range(start, total):
            if g.m + (total - j) <= self.best.m:
                return
            if self.calls >= self.budget:
                self.truncated = True
                return
            candidate = g.with_edge(*self.pairs[j])
            self.calls += 1
            if _contains(candidate, self.k):
                continue
            if candidate.m > self.best.m:
                self.best = candidate
            self.run(candidate, j + 1)
            if self.truncated:
                return


def _greedy(n: int, k: int, budget: int, seed: int, iterations: int) -> Tuple[Graph, int, bool]:
    rng = random.Random(seed)
    pairs = _edge_pairs(n)
    current = _initial_witness(n, k)
    best = current
    calls = 0
    truncated = False
    for _ in range(iterations):
        if calls >= budget:
            truncated = True
            break
        absent = [p for p in pairs if not current.has_edge(*p)]
        if not absent:
            break
        present = current.edges()
        candidate = current.with_edge(*rng.choice(absent))
        calls += 1
        if not _contains(candidate, k):
            current = candidate
        elif present:
            # swap: drop an old edge, keep the new one
            candidate = candidate.without_edge(*rng.choice(present))
            calls += 1
            if not _contains(candidate, k):
                current = candidate
        if current.m > best.m:
            best = current
    return best, calls, truncated


def _conjecture_observation(n: int, k: int, best: int) -> Tuple[str, ...]:
    if k < 2 or n < k + 1:
        return ()
    bound = threshold(BoundKind.MADER_CONJECTURE, n, k)
    relation = "within" if best <= bound else "above"
    return (f"best {best} is {relation} the conjectured maximum {bound} (observation only)",)


def max_edges_without(
    n: int,
    k: int,
    mode: Union[SearchMode, str] = SearchMode.EXHAUSTIVE,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    iterations: int = DEFAULT_GREEDY_ITERATIONS,
) -> SearchReport:
    """搜索 n 顶点、不含 (k+1)-连通子图的图的最大边数。

    exhaustive 模式返回精确最大值与一个见证（超出 budget 时报告被标记为非穷举）；
    greedy 模式从构造 G_{n,k} 出发做加边/换边的随机局部搜索，返回一个下界见证。

    Raises:
        ParameterError: 参数越界，或穷举模式的 n 过大。
    """

    mode = SearchMode(mode)
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not 1 <= n <= MAX_VERTICES:
        raise ParameterError(f"n must be in [1, {MAX_VERTICES}], got {n}")
    if budget < 1:
        raise ParameterError(f"budget must be >= 1, got {budget}")

    started = time.perf_counter()
    if mode == SearchMode.EXHAUSTIVE:
        if n > MAX_EXHAUSTIVE_VERTICES:
            raise ParameterError(f"Exhaustive search supports n <= {MAX_EXHAUSTIVE_VERTICES}, got {n}")
        search = _Exhaustive(n, k, budget)
        search.run(empty_graph(n), 0)
        best, calls, truncated = search.best, search.calls, search.truncated
    elif mode == SearchMode.GREEDY:
        best, calls, truncated = _greedy(n, k, budget, seed, iterations)
    else:
        raise ParameterError("max_edges_without runs in exhaustive or greedy mode")

    if truncated:
        _logger.warning("搜索 (n=%d, k=%d) 在 %d 次判定后达到预算上限，结果不完整", n, k, calls)
    elapsed = time.perf_counter() - started
    _logger.info("%s 搜索完成 (n=%d, k=%d)：最佳 %d 条边，判定 %d 次", mode.value, n, k, best.m, calls)
    return SearchReport(
        n=n,
        k=k,
        mode=mode,
        graphs_examined=calls,
        expected_work=estimate_work(n, k, mode, iterations),
        best_graph=best,
        exhaustive=mode == SearchMode.EXHAUSTIVE and not truncated,
        observations=_conjecture_observation(n, k, best.m),
        wall_time=elapsed,
    )


def consistency_issues(max_report: SearchReport, forcing_report: SearchReport) -> List[str]:
    """交叉核对穷举最大值 M 与强制验证：验证成立要求 M < m，找到反例要求 M >= m。"""

    issues: List[str] = []
    if (max_report.n, max_report.k) != (forcing_report.n, forcing_report.k):
        return [
            f"reports concern different parameters: (n={max_report.n}, k={max_report.k}) "
            f"vs (n={forcing_report.n}, k={forcing_report.k})"
        ]
    best = max_report.best_edge_count
    if best is None:
        return ["maximize report has no witness"]
    n, k = max_report.n, max_report.k
    if k >= 2 and n >= k + 1 and best < mader_edge_count(n, k):
        issues.append(f"maximum {best} is below the construction's {mader_edge_count(n, k)} edges")
    if max_report.mode != SearchMode.EXHAUSTIVE or not max_report.exhaustive:
        return issues
    m = forcing_report.edge_count
    if m is None or forcing_report.vacuous:
        return issues
    if forcing_report.verified and best >= m:
        issues.append(f"exhaustive maximum {best} reaches forcing count {m} but verification found no counterexample")
    if not forcing_report.verified and best < m:
        issues.append(f"verification found counterexamples with {m} edges but exhaustive maximum is {best}")
    return issues
