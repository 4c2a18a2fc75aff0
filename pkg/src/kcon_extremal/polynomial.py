"""在固定变量集 {alpha, beta, gamma, sigma, mu, k, n} 上的有理系数多项式工具。

多项式就是 sympy 的稀疏多项式环元素（单项式指数向量到 QQ 系数的映射，零系数不存储）；
本模块在其上提供精确求值、恒等判定、凸性、盒顶点最大值、单调性与判别式符号。
"""

from __future__ import annotations

import itertools
import logging
import random
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from .exceptions import ParameterError

_logger = logging.getLogger(__name__)

VARIABLES: Tuple[str, ...] = ("alpha", "beta", "gamma", "sigma", "mu", "k", "n")

POLY_RING, ALPHA, BETA, GAMMA, SIGMA, MU, K, N = ring(",".join(VARIABLES), QQ)

Polynomial = PolyElement
RationalLike = Union[int, Fraction]
Point = Mapping[str, RationalLike]
Box = Mapping[str, Tuple[RationalLike, RationalLike]]

_GENERATORS = dict(zip(VARIABLES, (ALPHA, BETA, GAMMA, SIGMA, MU, K, N)))


def q(numerator: int, denominator: int = 1):
    """返回系数域 QQ 中的有理数 numerator/denominator。"""

    return QQ(numerator, denominator)


def as_qq(value: RationalLike):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def as_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def const(value: RationalLike) -> Polynomial:
    return POLY_RING(as_qq(value))


def generator(name: str) -> Polynomial:
    try:
        return _GENERATORS[name]
    except KeyError:
        raise ParameterError(f"Unknown variable {name!r}; expected one of {', '.join(VARIABLES)}") from None


def variables_of(p: Polynomial) -> Tuple[str, ...]:
    used = set()
    for monom in p.monoms():
        used.update(i for i, e in enumerate(monom) if e)
    return tuple(VARIABLES[i] for i in sorted(used))


def total_degree(p: Polynomial) -> int:
    if not p:
        return 0
    return max(sum(monom) for monom in p.monoms())


def poly_eval(p: Polynomial, point: Point) -> Fraction:
    """在给定点精确求值。

    Args:
        p: 多项式。
        point: 变量名到有理数的映射，必须覆盖 p 中出现的全部变量。

    Returns:
        精确的 Fraction 值。

    Raises:
        ParameterError: 当 point 缺少 p 中出现的变量时抛出。
    """

    missing = [name for name in variables_of(p) if name not in point]
    if missing:
        raise ParameterError(f"Point does not assign {', '.join(missing)}")
    # unused generators get 0 so evaluate() drops every variable and returns a QQ element
    assignment = [(_GENERATORS[name], as_qq(point[name]) if name in point else q(0)) for name in VARIABLES]
    return as_fraction(POLY_RING(p).evaluate(assignment))


def poly_equal(p: Polynomial, other: Polynomial) -> bool:
    """展开后逐项比较，两式之差为零多项式时返回 True。"""

    if p.ring != other.ring:
        raise ParameterError("Polynomials belong to different variable universes")
    return not (p - other)


def square_coefficient(p: Polynomial, name: str) -> Fraction:
    gen = generator(name)
    return as_fraction(p.coeff(gen ** 2))


def separately_convex(p: Polynomial, names: Sequence[str]) -> bool:
    """判断二次多项式是否对列出的每个变量分别凸（v^2 系数非负）。

    Raises:
        ParameterError: 当总次数超过 2 时抛出。
    """

    if total_degree(p) > 2:
        raise ParameterError(f"Separate convexity is only decided for quadratics, degree is {total_degree(p)}")
    return all(square_coefficient(p, name) >= 0 for name in names)


def box_vertex_max(p: Polynomial, box: Box) -> Tuple[Fraction, Dict[str, Fraction]]:
    """返回 p 在盒子顶点上的最大值及取到最大值的顶点。

    p 在盒子的每个变量上分别凸时，顶点最大值即盒内最大值。顶点按 VARIABLES
    顺序的字典序枚举，并列时取最先出现者。

    Raises:
        ParameterError: 当 p 不是二次、不分别凸、或有变量不在盒子中时抛出。
    """

    names = [name for name in VARIABLES if name in box]
    unknown = [name for name in box if name not in VARIABLES]
    if unknown:
        raise ParameterError(f"Unknown box variables: {', '.join(unknown)}")
    loose = [name for name in variables_of(p) if name not in box]
    if loose:
        raise ParameterError(f"Box does not bound {', '.join(loose)}")
    if not separately_convex(p, names):
        raise ParameterError("Polynomial is not separately convex on the box variables")

    corners = []
    for name in names:
        lo, hi = (Fraction(x) for x in box[name])
        if lo > hi:
            raise ParameterError(f"Empty interval for {name}: [{lo}, {hi}]")
        corners.append((lo,) if lo == hi else (lo, hi))

    best_value = None
    best_vertex: Dict[str, Fraction] = {}
    for combo in itertools.product(*corners):
        vertex = dict(zip(names, combo))
        value = poly_eval(p, vertex)
        if best_value is None or value > best_value:
            best_value, best_vertex = value, vertex
    assert best_value is not None
    return best_value, best_vertex


def monotone_decreasing_on(p: Polynomial, name: str, interval: Tuple[RationalLike, RationalLike]) -> bool:
    """判断 p 在区间上关于 name 单调不增（偏导在两个端点处都 <= 0）。

    Raises:
        ParameterError: 当 p 对该变量的次数超过 2，或偏导还依赖其他变量时抛出。
    """

    gen = generator(name)
    if p.degree(gen) > 2:
        raise ParameterError(f"{name} appears with degree {p.degree(gen)} > 2")
    derivative = p.diff(gen)
    others = [v for v in variables_of(derivative) if v != name]
    if others:
        raise ParameterError(f"Derivative in {name} still depends on {', '.join(others)}")
    lo, hi = (Fraction(x) for x in interval)
    return all(poly_eval(derivative, {name: x}) <= 0 for x in (lo, hi))


def linear_ray_max(p: Polynomial, name: str, lower: RationalLike) -> Tuple[Fraction, Fraction]:
    """返回 p = slope*name + c 的 (slope, p(lower))。

    slope <= 0 时 p(lower) 就是 p 在整条射线 [lower, +inf) 上的最大值。

    Raises:
        ParameterError: 当 p 不是只含 name 的至多一次多项式时抛出。
    """

    others = [v for v in variables_of(p) if v != name]
    if others:
        raise ParameterError(f"Expected a polynomial in {name} only, got {', '.join(others)}")
    if total_degree(p) > 1:
        raise ParameterError(f"Expected degree <= 1 in {name}, got {total_degree(p)}")
    slope = as_fraction(p.coeff(generator(name)))
    return slope, poly_eval(p, {name: lower})


def discriminant(p: Polynomial) -> Tuple[str, Fraction]:
    """返回一元二次多项式的变量名与判别式 b^2 - 4ac。

    Raises:
        ParameterError: 当 p 不是恰好二次的一元多项式时抛出。
    """

    names = variables_of(p)
    if len(names) != 1:
        raise ParameterError(f"Expected a univariate polynomial, got variables {names}")
    name = names[0]
    gen = generator(name)
    if total_degree(p) != 2:
        raise ParameterError(f"Expected degree exactly 2, got {total_degree(p)}")
    a = as_fraction(p.coeff(gen ** 2))
    b = as_fraction(p.coeff(gen))
    c = as_fraction(p.coeff(1))
    return name, b * b - 4 * a * c


def discriminant_sign(p: Polynomial) -> int:
    _, disc = discriminant(p)
    return (disc > 0) - (disc < 0)


def random_point(rng: random.Random) -> Dict[str, Fraction]:
    return {name: Fraction(rng.randint(-60, 60), rng.randint(1, 24)) for name in VARIABLES}


def identity_agrees_at_random_points(lhs: Polynomial, rhs: Polynomial, count: int = 100, seed: int = 0) -> bool:
    """在 count 个随机有理点上比较两式的值，用来交叉检查展开引擎。"""

    rng = random.Random(seed)
    for _ in range(count):
        point = random_point(rng)
        if poly_eval(lhs, point) != poly_eval(rhs, point):
            _logger.warning("恒等式在随机点 %s 处不一致", point)
            return False
    return True
