"""以精确有理数计算各条边数界，提供原始形式与归一化（gamma = n/k）形式。"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .constructions import mader_edge_count
from .exceptions import BoundDomainError, NotForcingBoundError

_logger = logging.getLogger(__name__)

MADER_WEAK_COEFFICIENT_NOTE = (
    "Mader's general bound uses the coefficient 1 + 1/sqrt(2), which is irrational; "
    "it is documentation only and every exact threshold here is strictly sharper (> 19/12)."
)

YUSTER_COEFFICIENT = Fraction(193, 120)
NEW_COEFFICIENT = Fraction(19, 12)
CONJECTURE_COEFFICIENT = Fraction(3, 2)


class BoundKind(str, Enum):
    """各条界的种类；取值即命令行 `--kind` 接受的名字。"""

    MADER_CONJECTURE = "MaderConjecture"
    MADER_CONSTRUCTION = "MaderConstruction"
    YUSTER_THM = "YusterThm"
    NEW_THM = "NewThm"
    MATULA_LEMMA = "MatulaLemma"
    MATULA_NORMALIZED = "MatulaNormalized"
    CONJECTURE_NORMALIZED = "ConjectureNormalized"
    NEW_NORMALIZED = "NewNormalized"
    YUSTER_NORMALIZED = "YusterNormalized"


FORCING_KINDS = frozenset(
    {
        BoundKind.YUSTER_THM,
        BoundKind.NEW_THM,
        BoundKind.MATULA_LEMMA,
        BoundKind.MATULA_NORMALIZED,
        BoundKind.CONJECTURE_NORMALIZED,
        BoundKind.NEW_NORMALIZED,
        BoundKind.YUSTER_NORMALIZED,
    }
)
NORMALIZED_KINDS = frozenset(
    {
        BoundKind.MATULA_NORMALIZED,
        BoundKind.CONJECTURE_NORMALIZED,
        BoundKind.NEW_NORMALIZED,
        BoundKind.YUSTER_NORMALIZED,
    }
)
CONJECTURAL_KINDS = frozenset({BoundKind.MADER_CONJECTURE, BoundKind.CONJECTURE_NORMALIZED})

_DOMAINS = {
    BoundKind.MADER_CONJECTURE: "n sufficiently large (no explicit bound)",
    BoundKind.MADER_CONSTRUCTION: "n >= k+1",
    BoundKind.YUSTER_THM: "n >= 9k/4",
    BoundKind.NEW_THM: "n >= 5k/2",
    BoundKind.MATULA_LEMMA: "n >= k+1",
    BoundKind.MATULA_NORMALIZED: "gamma > 1",
    BoundKind.CONJECTURE_NORMALIZED: "gamma sufficiently large (no explicit bound)",
    BoundKind.NEW_NORMALIZED: "gamma >= 5/2",
    BoundKind.YUSTER_NORMALIZED: "gamma >= 9/4",
}


@dataclass(frozen=True)
class ThresholdRecord:
    """一次阈值计算的完整记录。

    Args:
        kind: 界的种类。
        n: 顶点数。
        k: 连通度参数。
        value: 精确阈值 B。
        reading: "forcing" 表示 |E| > B 必含 (k+1)-连通子图；"attainable" 表示可达到的最大值。
        conjectural: 该界是否只是猜想。
        in_domain: (n, k) 是否落在该界已证明的有效域内。
        domain: 有效域的文字描述。
        min_forcing: 强制型界的最小强制边数，否则为 None。
    """

    kind: BoundKind
    n: int
    k: int
    value: Fraction
    reading: str
    conjectural: bool
    in_domain: bool
    domain: str
    min_forcing: Optional[int]


def _check_nk(n: int, k: int) -> None:
    if k < 2:
        raise BoundDomainError(f"Bounds need k >= 2, got k={k}")
    if n < k + 1:
        raise BoundDomainError(f"Bounds need n >= k+1, got n={n}, k={k}")


def is_forcing(kind: BoundKind) -> bool:
    return kind in FORCING_KINDS


def normalized(gamma: Fraction, kind: BoundKind) -> Fraction:
    """返回归一化阈值（以 k^2 为单位的边数）在 gamma 处的值。

    Raises:
        BoundDomainError: 当 gamma <= 1 时抛出。
        NotForcingBoundError: 当 kind 不是归一化形式时抛出。
    """

    gamma = Fraction(gamma)
    if gamma <= 1:
        raise BoundDomainError(f"Normalized bounds need gamma > 1, got {gamma}")
    if kind == BoundKind.MATULA_NORMALIZED:
        return (gamma * gamma + 4 * gamma - 2) / 6
    if kind == BoundKind.CONJECTURE_NORMALIZED:
        return CONJECTURE_COEFFICIENT * (gamma - 1)
    if kind == BoundKind.NEW_NORMALIZED:
        return NEW_COEFFICIENT * (gamma - 1)
    if kind == BoundKind.YUSTER_NORMALIZED:
        return YUSTER_COEFFICIENT * (gamma - 1)
    raise NotForcingBoundError(f"{kind.value} has no normalized form")


def threshold(kind: BoundKind, n: int, k: int) -> Fraction:
    """返回该界对 (n, k) 的精确阈值。

    Raises:
        BoundDomainError: 当 k < 2 或 n < k + 1 时抛出。
    """

    _check_nk(n, k)
    if kind == BoundKind.MADER_CONJECTURE:
        return CONJECTURE_COEFFICIENT * (k - Fraction(1, 3)) * (n - k)
    if kind == BoundKind.MADER_CONSTRUCTION:
        return Fraction(mader_edge_count(n, k))
    if kind == BoundKind.YUSTER_THM:
        return YUSTER_COEFFICIENT * k * (n - k)
    if kind == BoundKind.NEW_THM:
        return NEW_COEFFICIENT * k * (n - k)
    if kind == BoundKind.MATULA_LEMMA:
        return Fraction(n * (n - 1), 2) - Fraction((n - k) ** 2 - 1, 3)
    return k * k * normalized(Fraction(n, k), kind)


def min_forcing_edge_count(kind: BoundKind, n: int, k: int) -> int:
    """返回严格超过阈值的最小整数边数。

    Raises:
        NotForcingBoundError: 当 kind 不是强制型界时抛出。
    """

    if not is_forcing(kind):
        raise NotForcingBoundError(f"{kind.value} is not a forcing bound")
    return math.floor(threshold(kind, n, k)) + 1


def in_domain(kind: BoundKind, n: int, k: int) -> bool:
    """判断 (n, k) 是否落在该界已证明的有效域内；猜想型界没有明确的有效域。"""

    if kind in CONJECTURAL_KINDS:
        return False
    if kind in (BoundKind.YUSTER_THM, BoundKind.YUSTER_NORMALIZED):
        return 4 * n >= 9 * k
    if kind in (BoundKind.NEW_THM, BoundKind.NEW_NORMALIZED):
        return 2 * n >= 5 * k
    return n >= k + 1


def describe_threshold(kind: BoundKind, n: int, k: int) -> ThresholdRecord:
    value = threshold(kind, n, k)
    forcing = is_forcing(kind)
    return ThresholdRecord(
        kind=kind,
        n=n,
        k=k,
        value=value,
        reading="forcing" if forcing else "attainable",
        conjectural=kind in CONJECTURAL_KINDS,
        in_domain=in_domain(kind, n, k),
        domain=_DOMAINS[kind],
        min_forcing=math.floor(value) + 1 if forcing else None,
    )
