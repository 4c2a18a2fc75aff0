"""证明账本：用精确有理多项式运算逐条核对证明中的代数叶子断言。

每条检查（LedgerCheck）由若干断言（claim）组成，断言种类包括恒等式、定点求值、
分别凸性、盒顶点最大值、单调性、判别式与“因子化蕴含”。全部判定都是精确的，没有容差。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .constructions import construction_bound, mader_edge_count, mader_graph
from .exceptions import ParameterError
from .polynomial import (
    ALPHA,
    BETA,
    GAMMA,
    K,
    MU,
    SIGMA,
    Polynomial,
    as_qq,
    box_vertex_max,
    const,
    discriminant,
    generator,
    linear_ray_max,
    monotone_decreasing_on,
    poly_equal,
    poly_eval,
    separately_convex,
    square_coefficient,
)

_logger = logging.getLogger(__name__)


class CheckKind(str, Enum):
    IDENTITY = "identity"
    EVALUATION = "evaluation"
    SIGN = "sign"
    SEPARATE_CONVEXITY = "separate-convexity"
    BOX_VERTEX_MAX = "box-vertex-max"
    MONOTONICITY = "monotonicity"
    DISCRIMINANT = "discriminant"
    IMPLICATION = "implication"


@dataclass(frozen=True)
class ClaimOutcome:
    """单条断言的判定结果；失败时 actual 与 expected 给出对照。"""

    label: str
    kind: CheckKind
    passed: bool
    actual: str
    expected: str


def _fmt_point(point: Mapping[str, Fraction]) -> str:
    return ", ".join(f"{name}={value}" for name, value in point.items())


@dataclass(frozen=True)
class IdentityClaim:
    label: str
    lhs: Polynomial
    rhs: Polynomial
    kind = CheckKind.IDENTITY

    def decide(self) -> ClaimOutcome:
        diff = self.lhs - self.rhs
        return ClaimOutcome(self.label, self.kind, poly_equal(self.lhs, self.rhs), f"lhs - rhs = {diff}", "lhs - rhs = 0")


@dataclass(frozen=True)
class EvaluationClaim:
    label: str
    poly: Polynomial
    point: Dict[str, Fraction]
    expected: Fraction
    kind = CheckKind.EVALUATION

    def decide(self) -> ClaimOutcome:
        value = poly_eval(self.poly, self.point)
        where = _fmt_point(self.point)
        return ClaimOutcome(self.label, self.kind, value == self.expected, f"{value} at {where}", f"{self.expected} at {where}")


@dataclass(frozen=True)
class ConvexityClaim:
    label: str
    poly: Polynomial
    names: Tuple[str, ...]
    kind = CheckKind.SEPARATE_CONVEXITY

    def decide(self) -> ClaimOutcome:
        coeffs = ", ".join(f"{name}^2: {square_coefficient(self.poly, name)}" for name in self.names)
        return ClaimOutcome(self.label, self.kind, separately_convex(self.poly, self.names), coeffs, "all >= 0")


@dataclass(frozen=True)
class BoxMaxClaim:
    """p 在盒子上的（顶点）最大值满足上界，必要时还须等于给定值。"""

    label: str
    poly: Polynomial
    box: Dict[str, Tuple[Fraction, Fraction]]
    upper: Fraction = Fraction(0)
    strict: bool = False
    expected: Optional[Fraction] = None
    kind = CheckKind.BOX_VERTEX_MAX

    def decide(self) -> ClaimOutcome:
        try:
            value, vertex = box_vertex_max(self.poly, self.box)
        except ParameterError as e:
            return ClaimOutcome(self.label, self.kind, False, str(e), "separately convex quadratic")
        ok = value < self.upper if self.strict else value <= self.upper
        if self.expected is not None:
            ok = ok and value == self.expected
        relation = "<" if self.strict else "<="
        expected = f"max {relation} {self.upper}"
        if self.expected is not None:
            expected = f"max = {self.expected}, {expected}"
        return ClaimOutcome(self.label, self.kind, ok, f"max = {value} at {_fmt_point(vertex)}", expected)


@dataclass(frozen=True)
class MonotonicityClaim:
    label: str
    poly: Polynomial
    name: str
    interval: Tuple[Fraction, Fraction]
    kind = CheckKind.MONOTONICITY

    def decide(self) -> ClaimOutcome:
        try:
            ok = monotone_decreasing_on(self.poly, self.name, self.interval)
        except ParameterError as e:
            return ClaimOutcome(self.label, self.kind, False, str(e), "decreasing")
        derivative = self.poly.diff(generator(self.name))
        lo, hi = self.interval
        return ClaimOutcome(
            self.label, self.kind, ok, f"d/d{self.name} = {derivative}", f"<= 0 on [{lo}, {hi}]"
        )


@dataclass(frozen=True)
class DiscriminantClaim:
    label: str
    poly: Polynomial
    expected_sign: int
    expected_value: Optional[Fraction] = None
    kind = CheckKind.DISCRIMINANT

    def decide(self) -> ClaimOutcome:
        try:
            _, disc = discriminant(self.poly)
        except ParameterError as e:
            return ClaimOutcome(self.label, self.kind, False, str(e), "univariate quadratic")
        sign = (disc > 0) - (disc < 0)
        ok = sign == self.expected_sign and (self.expected_value is None or disc == self.expected_value)
        expected = {-1: "negative", 0: "zero", 1: "positive"}[self.expected_sign]
        if self.expected_value is not None:
            expected = f"{self.expected_value} ({expected})"
        return ClaimOutcome(self.label, self.kind, ok, f"discriminant = {disc}", expected)


@dataclass(frozen=True)
class GlobalSignClaim:
    """一元二次式首项系数为负且判别式不为正，因此处处 <= 0（判别式为负时处处 < 0）。"""

    label: str
    poly: Polynomial
    strict: bool = False
    kind = CheckKind.SIGN

    def decide(self) -> ClaimOutcome:
        try:
            name, disc = discriminant(self.poly)
        except ParameterError as e:
            return ClaimOutcome(self.label, self.kind, False, str(e), "univariate quadratic")
        lead = square_coefficient(self.poly, name)
        ok = lead < 0 and (disc < 0 if self.strict else disc <= 0)
        wanted = "< 0" if self.strict else "<= 0"
        return ClaimOutcome(
            self.label, self.kind, ok, f"leading {lead}, discriminant {disc}", f"{wanted} for every {name}"
        )


@dataclass(frozen=True)
class RaySignClaim:
    """一次式在射线 [lower, +inf) 上处处 <= 0（strict 时 < 0）：斜率不为正且左端点处满足。"""

    label: str
    poly: Polynomial
    name: str
    lower: Fraction
    strict: bool = False
    kind = CheckKind.SIGN

    def decide(self) -> ClaimOutcome:
        try:
            slope, start = linear_ray_max(self.poly, self.name, self.lower)
        except ParameterError as e:
            return ClaimOutcome(self.label, self.kind, False, str(e), f"linear in {self.name}")
        ok = slope <= 0 and (start < 0 if self.strict else start <= 0)
        wanted = "< 0" if self.strict else "<= 0"
        return ClaimOutcome(
            self.label,
            self.kind,
            ok,
            f"slope {slope}, value {start} at {self.name}={self.lower}",
            f"slope <= 0, value {wanted} for every {self.name} >= {self.lower}",
        )


@dataclass(frozen=True)
class FactorClaim:
    """lhs 恒等于 factor * residual，且 factor 是正系数单项式。

    factor 中的变量取正值时 factor > 0，于是 lhs 与 residual 同号，
    “lhs > 0 蕴含 residual > 0”即由此得出。
    """

    label: str
    lhs: Polynomial
    factor: Polynomial
    residual: Polynomial
    kind = CheckKind.IMPLICATION

    def decide(self) -> ClaimOutcome:
        terms = self.factor.terms()
        positive_monomial = len(terms) == 1 and terms[0][1] > 0
        ok = positive_monomial and poly_equal(self.lhs, self.factor * self.residual)
        return ClaimOutcome(
            self.label,
            self.kind,
            ok,
            f"lhs - factor*residual = {self.lhs - self.factor * self.residual}; factor = {self.factor}",
            "0; factor a positive monomial",
        )


@dataclass(frozen=True)
class ConstructionBoundClaim:
    """在 (n, k) 网格上核对构造的边数公式与 (3/2)(k - 1/3)(n - k) 的关系（k | n 时取等）。"""

    label: str
    k_range: Tuple[int, int] = (2, 6)
    n_max: int = 40
    kind = CheckKind.IMPLICATION

    def decide(self) -> ClaimOutcome:
        checked = 0
        for k in range(self.k_range[0], self.k_range[1] + 1):
            for n in range(k + 1, self.n_max + 1):
                count = mader_edge_count(n, k)
                bound = construction_bound(n, k)
                generated = mader_graph(n, k).graph.m
                if generated != count or count > bound or (count == bound) != (n % k == 0):
                    return ClaimOutcome(
                        self.label,
                        self.kind,
                        False,
                        f"n={n}, k={k}: formula {count}, generated {generated}, bound {bound}",
                        "formula = generated <= bound, equality iff k | n",
                    )
                checked += 1
        return ClaimOutcome(self.label, self.kind, True, f"{checked} (n, k) pairs consistent", "all pairs consistent")


@dataclass(frozen=True)
class LedgerCheck:
    """一条命名的可验证断言组。

    Args:
        id: 检查编号，例如 L-GAMMA3。
        kind: 主要断言种类。
        anchor: 该检查所对应命题的简述。
        claims: 组成该检查的全部断言；全部通过才算通过。
    """

    id: str
    kind: CheckKind
    anchor: str
    claims: Tuple[object, ...]

    def run(self) -> "CheckResult":
        outcomes = tuple(claim.decide() for claim in self.claims)
        return CheckResult(self.id, self.kind, self.anchor, all(o.passed for o in outcomes), outcomes)


@dataclass(frozen=True)
class CheckResult:
    id: str
    kind: CheckKind
    anchor: str
    passed: bool
    outcomes: Tuple[ClaimOutcome, ...]

    @property
    def failures(self) -> Tuple[ClaimOutcome, ...]:
        return tuple(o for o in self.outcomes if not o.passed)


@dataclass(frozen=True)
class LedgerReport:
    results: Tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def passed_count(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failed_count(self) -> int:
        return self.total - self.passed_count

    @property
    def all_passed(self) -> bool:
        return self.failed_count == 0

    def result(self, check_id: str) -> CheckResult:
        for r in self.results:
            if r.id == check_id:
                return r
        raise KeyError(check_id)


def _c(numerator: int, denominator: int = 1) -> Polynomial:
    return const(Fraction(numerator, denominator))


def _f(numerator: int, denominator: int = 1) -> Fraction:
    return Fraction(numerator, denominator)


def matula_normalized(x: Polynomial) -> Polynomial:
    """(1/6)(x^2 + 4x - 2)：归一化后的 Matula 阈值。"""

    return (x * x + 4 * x - 2) * as_qq(_f(1, 6))


def _incident_to_a(a: Polynomial, s: Polynomial) -> Polynomial:
    """(1/2)(a+1)s + a(1-s) + a^2/2 - (7/6 - 2s)(a + s - 7/6)。"""

    return (
        (a + 1) * s * as_qq(_f(1, 2))
        + a * (1 - s)
        + a * a * as_qq(_f(1, 2))
        - (_c(7, 6) - 2 * s) * (a + s - _c(7, 6))
    )


def _case21_expanded(a: Polynomial, b: Polynomial, s: Polynomial) -> Polynomial:
    return (18 * a**2 + 54 * a * s - 63 * a + 6 * b**2 - 21 * b + 72 * s**2 - 108 * s + 67) * as_qq(_f(1, 36))


def _smaller_expanded(a: Polynomial, s: Polynomial) -> Polynomial:
    return (a**2 + a * s + 6 * a + s**2 - 3 * s + 3) * as_qq(_f(1, 6))


def _smaller_case1_expanded(a: Polynomial, b: Polynomial, s: Polynomial) -> Polynomial:
    return (2 * a**2 + 2 * a * s - 7 * a + 2 * b**2 - 7 * b + 2 * s**2 - 6 * s + 12) * as_qq(_f(1, 12))


def _greater_expanded(a: Polynomial) -> Polynomial:
    return (-3 * a**2 + 17 * a - 5) * as_qq(_f(1, 6))


def _greater_case1_expanded(a: Polynomial, b: Polynomial) -> Polynomial:
    return (-6 * a**2 + 15 * a + 2 * b**2 - 7 * b - 4) * as_qq(_f(1, 12))


def standard_polynomials() -> Dict[str, Polynomial]:
    """返回账本用到的全部具名多项式；故障注入时可替换其中任意一项。"""

    coeff = as_qq(_f(19, 12))
    a, b, s = ALPHA, BETA, SIGMA
    return {
        "g": 2 * GAMMA**2 - 11 * GAMMA + 15,
        "gamma_margin": matula_normalized(GAMMA) - coeff * (GAMMA - 1),
        "matula_scaled": K**2 * matula_normalized(GAMMA),
        "g1": 6 * a**2 - 7 * a + 1,
        "a1_reduction": a**2 * as_qq(_f(1, 2)) + a + matula_normalized(b + 1) - coeff * (a + b),
        "a1_small": 6 * a**2 + 2 * b**2 - 7 * a - 7 * b + 6,
        "mu_margin": MU**2 * as_qq(_f(1, 2)) + MU * (1 + s) - coeff * MU,
        "case21_sum": _incident_to_a(a, s) + matula_normalized(b + 1) - coeff * (a + b),
        "case21_expanded": _case21_expanded(a, b, s),
        "phi1": (24 * a**2 + 54 * a * s - 84 * a + 72 * s**2 - 108 * s + 67) * as_qq(_f(1, 36)),
        "phi2": _incident_to_a(a, s) - coeff * a,
        "smaller_sum": matula_normalized(a + 1 - s) + (a + 1) * s * as_qq(_f(1, 2)),
        "smaller_expanded": _smaller_expanded(a, s),
        "smaller_case1": _smaller_expanded(a, s) + matula_normalized(b + 1) - coeff * (a + b),
        "smaller_case1_expanded": _smaller_case1_expanded(a, b, s),
        "phi3": (2 * a**2 + a * s - 7 * a + s**2 - 3 * s + 6) * as_qq(_f(1, 6)),
        "phi4": (2 * a**2 + 2 * a * s - 7 * a + 2 * s**2 - 6 * s + 6) * as_qq(_f(1, 12)),
        "greater_sum": matula_normalized(3 * a - 2) + a * (3 - 2 * a) - (a - 1) * as_qq(_f(1, 6)),
        "greater_expanded": _greater_expanded(a),
        "greater_case1": _greater_expanded(a) + matula_normalized(b + 1) - coeff * (a + b),
        "greater_case1_expanded": _greater_case1_expanded(a, b),
        "a131_quadratic": 6 * a**2 - 15 * a + 10,
    }


def _corners(
    label: str, poly: Polynomial, alphas: Sequence[Fraction], sigmas: Sequence[Fraction], values: Sequence[Fraction]
) -> List[EvaluationClaim]:
    points = [(x, y) for x in alphas for y in sigmas]
    return [
        EvaluationClaim(f"{label}({x}, {y})", poly, {"alpha": x, "sigma": y}, v)
        for (x, y), v in zip(points, values)
    ]


def build_check_table(polynomials: Optional[Mapping[str, Polynomial]] = None) -> List[LedgerCheck]:
    """由具名多项式构造完整的检查表。

    Args:
        polynomials: 具名多项式字典；缺省时使用 standard_polynomials()。

    Returns:
        LedgerCheck 列表。
    """

    p = dict(standard_polynomials())
    if polynomials is not None:
        p.update(polynomials)
    coeff = as_qq(_f(19, 12))
    a, b, s = ALPHA, BETA, SIGMA
    one_to_three_halves = (_f(1), _f(3, 2))

    return [
        LedgerCheck(
            "L-GAMMA3",
            CheckKind.BOX_VERTEX_MAX,
            "g(5/2) = g(3) = 0 and g is convex, so g <= 0 on [5/2, 3]",
            (
                IdentityClaim("margin = g/12", p["gamma_margin"], p["g"] * as_qq(_f(1, 12))),
                EvaluationClaim("g(5/2)", p["g"], {"gamma": _f(5, 2)}, _f(0)),
                EvaluationClaim("g(3)", p["g"], {"gamma": _f(3)}, _f(0)),
                ConvexityClaim("g convex", p["g"], ("gamma",)),
                BoxMaxClaim("max g on [5/2, 3]", p["g"], {"gamma": (_f(5, 2), _f(3))}, expected=_f(0)),
            ),
        ),
        LedgerCheck(
            "L-MATULA-IDENT",
            CheckKind.IDENTITY,
            "k^2/6 (gamma^2 + 4 gamma - 2) = C(gamma k, 2) - ((gamma k - k)^2 - 1)/3 + gamma k/2 - 1/3",
            (
                IdentityClaim(
                    "scaled normalized Matula",
                    p["matula_scaled"],
                    (GAMMA * K) * (GAMMA * K - 1) * as_qq(_f(1, 2))
                    - ((GAMMA * K - K) ** 2 - 1) * as_qq(_f(1, 3))
                    + GAMMA * K * as_qq(_f(1, 2))
                    - _c(1, 3),
                ),
            ),
        ),
        LedgerCheck(
            "L-ALPHA-SPLIT",
            CheckKind.IDENTITY,
            "19/12 alpha + 19/12 beta = 19/12 (alpha + beta)",
            (IdentityClaim("split", coeff * a + coeff * b, coeff * (a + b)),),
        ),
        LedgerCheck(
            "L-A1-SMALLCASE",
            CheckKind.SIGN,
            "alpha^2/2 + alpha <= 3 alpha/2 on [0, 1], and 3/2 alpha + 19/12 beta < 19/12 (alpha + beta)",
            (
                BoxMaxClaim(
                    "alpha^2/2 + alpha - 3 alpha/2 on [0, 1]",
                    a**2 * as_qq(_f(1, 2)) + a - a * as_qq(_f(3, 2)),
                    {"alpha": (_f(0), _f(1))},
                ),
                FactorClaim(
                    "19/12 (alpha + beta) - (3/2 alpha + 19/12 beta) = alpha/12",
                    coeff * (a + b) - (a * as_qq(_f(3, 2)) + coeff * b),
                    a * as_qq(_f(1, 12)),
                    _c(1),
                ),
            ),
        ),
        LedgerCheck(
            "L-A1-EQUIV",
            CheckKind.IDENTITY,
            "12 x (reduced inequality) is 6 alpha^2 + 2 beta^2 - 7 alpha - 7 beta + 6",
            (IdentityClaim("12 x reduction", 12 * p["a1_reduction"], p["a1_small"]),),
        ),
        LedgerCheck(
            "L-A1-MONO",
            CheckKind.MONOTONICITY,
            "6 alpha^2 + 2 beta^2 - 7 alpha - 7 beta + 6 is decreasing in beta for beta <= 7/4",
            (MonotonicityClaim("decreasing in beta", p["a1_small"], "beta", (_f(1), _f(7, 4))),),
        ),
        LedgerCheck(
            "L-G1",
            CheckKind.EVALUATION,
            "g1 = 6 alpha^2 - 7 alpha + 1 is convex with g1(1/2) = -1 and g1(1) = 0",
            (
                IdentityClaim("g1 = reduction at beta = 1", p["a1_small"].subs(BETA, 1), p["g1"]),
                EvaluationClaim("g1(1/2)", p["g1"], {"alpha": _f(1, 2)}, _f(-1)),
                EvaluationClaim("g1(1)", p["g1"], {"alpha": _f(1)}, _f(0)),
                ConvexityClaim("g1 convex", p["g1"], ("alpha",)),
                BoxMaxClaim("max g1 on [1/2, 1]", p["g1"], {"alpha": (_f(1, 2), _f(1))}, expected=_f(0)),
            ),
        ),
        LedgerCheck(
            "L-MU-LB",
            CheckKind.IMPLICATION,
            "mu^2/2 + mu(1 + sigma) > 19/12 mu with mu > 0 gives mu > 7/6 - 2 sigma",
            (FactorClaim("(mu/2)(mu - (7/6 - 2 sigma))", p["mu_margin"], MU * as_qq(_f(1, 2)), MU - _c(7, 6) + 2 * s),),
        ),
        LedgerCheck(
            "L-CASE1",
            CheckKind.IMPLICATION,
            "(alpha - 1)/2 > 7/6 - 2 sigma gives alpha > 10/3 - 4 sigma >= 2 for sigma <= 1/3",
            (
                FactorClaim(
                    "(alpha - 1)/2 - (7/6 - 2 sigma) = (alpha - (10/3 - 4 sigma))/2",
                    (a - 1) * as_qq(_f(1, 2)) - (_c(7, 6) - 2 * s),
                    _c(1, 2),
                    a - _c(10, 3) + 4 * s,
                ),
                MonotonicityClaim("10/3 - 4 sigma decreasing", _c(10, 3) - 4 * s, "sigma", (_f(0), _f(1, 3))),
                EvaluationClaim("10/3 - 4/3", _c(10, 3) - 4 * s, {"sigma": _f(1, 3)}, _f(2)),
            ),
        ),
        LedgerCheck(
            "L-SIGMA-LB",
            CheckKind.EVALUATION,
            "7/6 - 2 sigma < (alpha - sigma)/2 gives sigma > 7/9 - alpha/3 > 5/18",
            (
                FactorClaim(
                    "(alpha - sigma)/2 - (7/6 - 2 sigma) = 3/2 (sigma - (7/9 - alpha/3))",
                    (a - s) * as_qq(_f(1, 2)) - (_c(7, 6) - 2 * s),
                    _c(3, 2),
                    s - _c(7, 9) + a * as_qq(_f(1, 3)),
                ),
                MonotonicityClaim("7/9 - alpha/3 decreasing", _c(7, 9) - a * as_qq(_f(1, 3)), "alpha", one_to_three_halves),
                EvaluationClaim("7/9 - (1/3)(3/2)", _c(7, 9) - a * as_qq(_f(1, 3)), {"alpha": _f(3, 2)}, _f(5, 18)),
            ),
        ),
        LedgerCheck(
            "L-CASE21-IDENT",
            CheckKind.IDENTITY,
            "the beta <= 3/2 sum expands to (1/36)(18 alpha^2 + 54 alpha sigma - 63 alpha + ... + 67)",
            (IdentityClaim("expansion", p["case21_sum"], p["case21_expanded"]),),
        ),
        LedgerCheck(
            "L-CASE21-MONO",
            CheckKind.MONOTONICITY,
            "the beta <= 3/2 expansion is decreasing in beta (minimum at beta = 7/4)",
            (MonotonicityClaim("decreasing in beta", p["case21_expanded"], "beta", one_to_three_halves),),
        ),
        LedgerCheck(
            "L-PHI1",
            CheckKind.BOX_VERTEX_MAX,
            "phi1 is separately convex and negative at the four corners of [1, 3/2] x [5/18, 1/3]",
            (
                IdentityClaim("phi1 = expansion at beta = alpha", _case21_expanded(a, a, s), p["phi1"]),
                ConvexityClaim("phi1 convex", p["phi1"], ("alpha", "sigma")),
                *_corners("phi1", p["phi1"], (_f(1), _f(3, 2)), (_f(5, 18), _f(1, 3)),
                          (_f(-11, 162), _f(-1, 12), _f(-125, 648), _f(-1, 6))),
                BoxMaxClaim(
                    "max phi1",
                    p["phi1"],
                    {"alpha": (_f(1), _f(3, 2)), "sigma": (_f(5, 18), _f(1, 3))},
                    strict=True,
                    expected=_f(-11, 162),
                ),
            ),
        ),
        LedgerCheck(
            "L-PHI2",
            CheckKind.BOX_VERTEX_MAX,
            "phi2 is separately convex and negative at the four corners of [1, 3/2] x [5/18, 1/3]",
            (
                ConvexityClaim("phi2 convex", p["phi2"], ("alpha", "sigma")),
                *_corners("phi2", p["phi2"], (_f(1), _f(3, 2)), (_f(5, 18), _f(1, 3)),
                          (_f(-49, 324), _f(-1, 6), _f(-125, 648), _f(-1, 6))),
                BoxMaxClaim(
                    "max phi2",
                    p["phi2"],
                    {"alpha": (_f(1), _f(3, 2)), "sigma": (_f(5, 18), _f(1, 3))},
                    strict=True,
                    expected=_f(-49, 324),
                ),
            ),
        ),
        LedgerCheck(
            "L-SMALLER-IDENT",
            CheckKind.IDENTITY,
            "Matula'(alpha + 1 - sigma) + (alpha + 1) sigma/2 = (1/6)(alpha^2 + alpha sigma + 6 alpha + sigma^2 - 3 sigma + 3)",
            (IdentityClaim("expansion", p["smaller_sum"], p["smaller_expanded"]),),
        ),
        LedgerCheck(
            "L-SMALLER-C1-IDENT",
            CheckKind.IDENTITY,
            "adding Matula for the B side gives (1/12)(2 alpha^2 + 2 alpha sigma - 7 alpha + 2 beta^2 - 7 beta + 2 sigma^2 - 6 sigma + 12)",
            (
                IdentityClaim("expansion", p["smaller_case1"], p["smaller_case1_expanded"]),
                MonotonicityClaim("decreasing in beta", p["smaller_case1_expanded"], "beta", one_to_three_halves),
            ),
        ),
        LedgerCheck(
            "L-PHI3",
            CheckKind.BOX_VERTEX_MAX,
            "phi3 is separately convex and negative at the four corners of [4/3, 3/2] x [1/3, 1]",
            (
                IdentityClaim("phi3 = expansion at beta = alpha", _smaller_case1_expanded(a, a, s), p["phi3"]),
                ConvexityClaim("phi3 convex", p["phi3"], ("alpha", "sigma")),
                *_corners("phi3", p["phi3"], (_f(4, 3), _f(3, 2)), (_f(1, 3), _f(1)),
                          (_f(-1, 27), _f(-2, 27), _f(-7, 108), _f(-1, 12))),
                BoxMaxClaim(
                    "max phi3",
                    p["phi3"],
                    {"alpha": (_f(4, 3), _f(3, 2)), "sigma": (_f(1, 3), _f(1))},
                    strict=True,
                    expected=_f(-1, 27),
                ),
            ),
        ),
        LedgerCheck(
            "L-PHI4",
            CheckKind.BOX_VERTEX_MAX,
            "phi4 = (1/12)(2 alpha^2 + 2 alpha sigma - 7 alpha + 2 sigma^2 - 6 sigma + 6) is negative at its four corners",
            (
                IdentityClaim("phi4 = expansion - 19/12 alpha", p["smaller_expanded"] - coeff * a, p["phi4"]),
                ConvexityClaim("phi4 convex", p["phi4"], ("alpha", "sigma")),
                *_corners("phi4", p["phi4"], (_f(4, 3), _f(3, 2)), (_f(1, 3), _f(1)),
                          (_f(-1, 18), _f(-5, 54), _f(-7, 108), _f(-1, 12))),
                BoxMaxClaim(
                    "max phi4",
                    p["phi4"],
                    {"alpha": (_f(4, 3), _f(3, 2)), "sigma": (_f(1, 3), _f(1))},
                    strict=True,
                    expected=_f(-1, 18),
                ),
            ),
        ),
        LedgerCheck(
            "L-GREATER-SETUP",
            CheckKind.SIGN,
            "1 - 2(alpha - 1) >= 1/3 for alpha <= 4/3",
            (
                BoxMaxClaim(
                    "1/3 - (1 - 2(alpha - 1)) on [1, 4/3]",
                    _c(1, 3) - (1 - 2 * (a - 1)),
                    {"alpha": (_f(1), _f(4, 3))},
                ),
            ),
        ),
        LedgerCheck(
            "L-GREATER-IDENT",
            CheckKind.IDENTITY,
            "Matula'(3 alpha - 2) + alpha(3 - 2 alpha) - (alpha - 1)/6 = (1/6)(-3 alpha^2 + 17 alpha - 5)",
            (IdentityClaim("expansion", p["greater_sum"], p["greater_expanded"]),),
        ),
        LedgerCheck(
            "L-GREATER-C1",
            CheckKind.IDENTITY,
            "the beta <= 3/2 case is (1/12)(-6 alpha^2 + 15 alpha + 2 beta^2 - 7 beta - 4), which is -(alpha - 1)^2/3 at beta = alpha",
            (
                IdentityClaim("expansion", p["greater_case1"], p["greater_case1_expanded"]),
                IdentityClaim(
                    "at beta = alpha",
                    _greater_case1_expanded(a, a),
                    -((a - 1) ** 2) * as_qq(_f(1, 3)),
                ),
                GlobalSignClaim("-(alpha - 1)^2/3 <= 0", _greater_case1_expanded(a, a)),
            ),
        ),
        LedgerCheck(
            "L-GREATER-MONO",
            CheckKind.MONOTONICITY,
            "the beta <= 3/2 case is decreasing in beta, so its maximum is at beta = alpha",
            (MonotonicityClaim("decreasing in beta", p["greater_case1_expanded"], "beta", one_to_three_halves),),
        ),
        LedgerCheck(
            "L-GREATER-DISC",
            CheckKind.DISCRIMINANT,
            "6 alpha^2 - 15 alpha + 10 has negative discriminant, so -(1/12)(6 alpha^2 - 15 alpha + 10) < 0 for all alpha",
            (
                IdentityClaim(
                    "(1/6)(-3 alpha^2 + 17 alpha - 5) - 19/12 alpha",
                    p["greater_expanded"] - coeff * a,
                    -p["a131_quadratic"] * as_qq(_f(1, 12)),
                ),
                DiscriminantClaim("discriminant", p["a131_quadratic"], -1, _f(-15)),
                GlobalSignClaim("negative everywhere", -p["a131_quadratic"] * as_qq(_f(1, 12)), strict=True),
            ),
        ),
        LedgerCheck(
            "L-CONSTR-BOUND",
            CheckKind.IMPLICATION,
            "the construction has at most (3/2)(k - 1/3)(n - k) edges, with equality iff k | n",
            (ConstructionBoundClaim("grid 2 <= k <= 6, k+1 <= n <= 40"),),
        ),
        LedgerCheck(
            "L-COEFF-ORDER",
            CheckKind.SIGN,
            "(3/2)(k - 1/3) <= 19/12 k <= 193/120 k for k >= 2",
            (
                RaySignClaim(
                    "(3/2)(k - 1/3) - 19/12 k for k >= 2",
                    (K - _c(1, 3)) * as_qq(_f(3, 2)) - coeff * K,
                    "k",
                    _f(2),
                    strict=True,
                ),
                RaySignClaim(
                    "19/12 k - 193/120 k for k >= 2",
                    coeff * K - K * as_qq(_f(193, 120)),
                    "k",
                    _f(2),
                    strict=True,
                ),
            ),
        ),
    ]


def run_all_checks(table: Optional[Iterable[LedgerCheck]] = None, only: Optional[Iterable[str]] = None) -> LedgerReport:
    """执行检查表并汇总结果；失败只会被报告，不会抛出异常。

    Args:
        table: 检查表；缺省时使用 build_check_table()。
        only: 若给出，只执行这些编号的检查。

    Returns:
        按编号排序的 LedgerReport。

    Raises:
        ParameterError: 当 only 中含有表中不存在的编号时抛出。
    """

    checks = list(build_check_table() if table is None else table)
    if only is not None:
        wanted = set(only)
        unknown = wanted - {c.id for c in checks}
        if unknown:
            raise ParameterError(f"Unknown ledger check ids: {', '.join(sorted(unknown))}")
        checks = [c for c in checks if c.id in wanted]
    results = tuple(sorted((c.run() for c in checks), key=lambda r: r.id))
    report = LedgerReport(results)
    _logger.info("账本检查完成：%d 项，通过 %d 项", report.total, report.passed_count)
    for r in results:
        for o in r.failures:
            _logger.warning("检查 %s 未通过：%s，实际 %s，期望 %s", r.id, o.label, o.actual, o.expected)
    return report
