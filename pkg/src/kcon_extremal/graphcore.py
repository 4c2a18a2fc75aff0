"""提供不可变的位集图表示，以及诱导子图、连通分量与序列化支持。

所有顶点集合都以 Python 整数作为多字位集：第 v 位为 1 表示顶点 v 属于集合。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .exceptions import GraphFormatError, InvalidGraphError, ParameterError

_logger = logging.getLogger(__name__)

MAX_VERTICES = 1024

GRAPH6 = "graph6"
EDGES = "edges"
FORMATS = (GRAPH6, EDGES)


def iter_bits(mask: int) -> Iterator[int]:
    """按升序产出位集中为 1 的顶点编号。"""

    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def reach_mask(adj: Sequence[int], alive: int, start: int) -> int:
    """返回在 alive 诱导的子图中从 start 位集出发可达的全部顶点。

    Args:
        adj: 每个顶点的邻接位集行。
        alive: 参与计算的顶点位集。
        start: 出发顶点位集（须为 alive 的子集）。

    Returns:
        可达顶点的位集（包含 start 自身）。
    """

    seen = start & alive
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def component_masks(adj: Sequence[int], alive: int) -> List[int]:
    """把 alive 诱导子图划分为连通分量，按（大小，最小顶点）升序返回。"""

    parts: List[int] = []
    rest = alive
    while rest:
        comp = reach_mask(adj, alive, rest & -rest)
        parts.append(comp)
        rest &= ~comp
    parts.sort(key=lambda c: (popcount(c), lowest_bit(c)))
    return parts


@dataclass(frozen=True)
class VertexSet:
    """表示固定宿主图规模下的顶点子集（位集）。

    Args:
        size: 宿主图的顶点数。
        bits: 成员位集，第 v 位为 1 表示 v 属于集合。
    """

    size: int
    bits: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.size <= MAX_VERTICES:
            raise InvalidGraphError(f"Host size {self.size} outside 0..{MAX_VERTICES}")
        if self.bits < 0 or self.bits >> self.size:
            raise InvalidGraphError(f"VertexSet members outside 0..{self.size - 1}")

    @classmethod
    def from_iterable(cls, size: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < size:
                raise InvalidGraphError(f"Vertex {v} out of range for n={size}")
            bits |= 1 << v
        return cls(size, bits)

    @classmethod
    def empty(cls, size: int) -> "VertexSet":
        return cls(size, 0)

    @classmethod
    def full(cls, size: int) -> "VertexSet":
        return cls(size, (1 << size) - 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.size and bool((self.bits >> v) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self) + "}"

    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def _same_host(self, other: "VertexSet") -> None:
        if other.size != self.size:
            raise ParameterError(f"VertexSet host sizes differ: {self.size} != {other.size}")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.size, self.bits | other.bits)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.size, self.bits & other.bits)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._same_host(other)
        return VertexSet(self.size, self.bits & ~other.bits)

    def issubset(self, other: "VertexSet") -> bool:
        self._same_host(other)
        return self.bits & ~other.bits == 0


@dataclass(frozen=True)
class Graph:
    """不可变的简单无向图，顶点为 0..n-1，邻接以位集行保存。

    Args:
        n: 顶点数（0 <= n <= 1024）。
        adj: 每个顶点的邻接位集行，必须对称且不含自环。

    Raises:
        InvalidGraphError: 当行数、范围、对称性或自环约束被破坏时抛出。
    """

    n: int
    adj: Tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise InvalidGraphError(f"Vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise InvalidGraphError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")
        total = 0
        for u, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise InvalidGraphError(f"Row {u} references vertices outside 0..{self.n - 1}")
            if (row >> u) & 1:
                raise InvalidGraphError(f"Self-loop at vertex {u}", (u, u))
            for v in iter_bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise InvalidGraphError(f"Adjacency not symmetric for ({u}, {v})", (u, v))
            total += popcount(row)
        object.__setattr__(self, "m", total // 2)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.adj[u] >> v) & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """按 (u, v)、u < v 的字典序返回全部边。"""

        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertex_set(self) -> VertexSet:
        return VertexSet.full(self.n)

    def with_edge(self, u: int, v: int) -> "Graph":
        """返回添加边 uv 后的新图。"""

        _check_pair(self.n, u, v)
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        """返回删除边 uv 后的新图。"""

        _check_pair(self.n, u, v)
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))


def _check_pair(n: int, u: int, v: int) -> None:
    if not (isinstance(u, int) and isinstance(v, int)) or not (0 <= u < n and 0 <= v < n):
        raise InvalidGraphError(f"Edge ({u}, {v}) out of range for n={n}", (u, v))
    if u == v:
        raise InvalidGraphError(f"Self-loop ({u}, {v}) is not allowed", (u, v))


def from_edge_list(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """由边列表构造图；重复边会被去重。

    Args:
        n: 顶点数。
        edges: 顶点编号对的可迭代对象。

    Returns:
        恰好包含给定无向边的 Graph。

    Raises:
        InvalidGraphError: 当出现越界编号或自环时抛出，并附带出错的顶点对。
    """

    if not 0 <= n <= MAX_VERTICES:
        raise InvalidGraphError(f"Vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise InvalidGraphError(f"Vertex count {n} outside 0..{MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"A cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def petersen_graph() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def induced(g: Graph, s: VertexSet) -> Tuple[Graph, Tuple[int, ...]]:
    """返回 G[s]，顶点按原编号升序重新标号，并附带新编号到原编号的映射。

    Args:
        g: 宿主图。
        s: 宿主图上的顶点子集。

    Returns:
        (诱导子图, 映射元组)，映射元组第 i 项为新顶点 i 的原编号。
    """

    if s.size != g.n:
        raise ParameterError(f"VertexSet host size {s.size} does not match graph n={g.n}")
    mapping = s.members()
    index = {v: i for i, v in enumerate(mapping)}
    rows = []
    for v in mapping:
        row = 0
        for u in iter_bits(g.adj[v] & s.bits):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(mapping), tuple(rows)), mapping


def components(g: Graph) -> List[VertexSet]:
    """把顶点划分为极大连通集合，按（大小，最小顶点）升序排列。"""

    return [VertexSet(g.n, c) for c in component_masks(g.adj, (1 << g.n) - 1)]


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """把 networkx 简单无向图转换为 Graph，顶点按排序后的节点顺序编号。"""

    if nx_graph.is_directed() or nx_graph.is_multigraph():
        raise InvalidGraphError("Only simple undirected graphs are supported")
    nodes = sorted(nx_graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return from_edge_list(len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges()])


def to_graph6(g: Graph) -> str:
    """编码为 graph6 文本（不含 >>graph6<< 头，末尾带换行）。"""

    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii")


def from_graph6(text: str) -> Graph:
    """解析单个 graph6 编码的图，允许可选的 >>graph6<< 头与末尾换行。

    Raises:
        GraphFormatError: 当文本为空、包含多个图或编码不合法时抛出。
    """

    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 1:
        raise GraphFormatError(f"Expected exactly one graph6 line, got {len(lines)}")
    try:
        nx_graph = nx.from_graph6_bytes(lines[0].encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as e:
        raise GraphFormatError(f"Malformed graph6 data: {lines[0]!r}") from e
    return from_networkx(nx_graph)


def to_edge_list_text(g: Graph) -> str:
    """编码为 `p edge <n> <m>` 头加 `e <u> <v>`（1 起始编号）的边列表文本。"""

    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    """解析边列表文本；以 `c` 开头的行视为注释。

    Raises:
        GraphFormatError: 当缺少头部、行格式错误、编号越界或边数与头部不符时抛出。
    """

    n = None
    declared = 0
    pairs: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p" and len(parts) == 4 and parts[1] == "edge" and n is None:
                n, declared = int(parts[2]), int(parts[3])
            elif parts[0] == "e" and len(parts) == 3 and n is not None:
                pairs.append((int(parts[1]) - 1, int(parts[2]) - 1))
            else:
                raise GraphFormatError(f"Unexpected line {lineno}: {raw.strip()!r}")
        except ValueError as e:
            raise GraphFormatError(f"Non-integer field on line {lineno}: {raw.strip()!r}") from e
    if n is None:
        raise GraphFormatError("Missing 'p edge <n> <m>' header")
    if len(pairs) != declared:
        raise GraphFormatError(f"Header declares {declared} edges, found {len(pairs)}")
    try:
        return from_edge_list(n, pairs)
    except InvalidGraphError as e:
        raise GraphFormatError(str(e)) from e


def sniff_format(path: str) -> str:
    """根据扩展名判断格式：`.edges` 为边列表，其余按 graph6 处理。"""

    return EDGES if path.lower().endswith(".edges") else GRAPH6


def parse_graph(text: str, fmt: str = GRAPH6) -> Graph:
    if fmt == GRAPH6:
        return from_graph6(text)
    if fmt == EDGES:
        return from_edge_list_text(text)
    raise ParameterError(f"Unknown graph format {fmt!r}; expected one of {', '.join(FORMATS)}")


def format_graph(g: Graph, fmt: str = GRAPH6) -> str:
    if fmt == GRAPH6:
        return to_graph6(g)
    if fmt == EDGES:
        return to_edge_list_text(g)
    raise ParameterError(f"Unknown graph format {fmt!r}; expected one of {', '.join(FORMATS)}")


def decode_graph_bytes(data: bytes, source: str = "input") -> str:
    """把原始字节按 UTF-8 解码为图文本。

    Raises:
        GraphFormatError: 当字节不是合法的 UTF-8 时抛出。
    """

    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"{source} is not valid UTF-8 text (byte {e.start})") from e


def read_graph(path: str, fmt: Optional[str] = None) -> Graph:
    """从文件读取一个图；未指定 fmt 时按扩展名判断。"""

    with open(path, "rb") as f:
        data = f.read()
    return parse_graph(decode_graph_bytes(data, path), fmt or sniff_format(path))
