"""把各模块的结果渲染为文本或结构稳定的 JSON 文档。

JSON 文档的键一律排序，有理数写成 "p/q" 字符串，图写成不带换行的 graph6；
耗时只有在 include_timing=True 时才写入，因此相同输入得到逐字节相同的报告。
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .bounds import ThresholdRecord
from .connectivity import CutCertificate, KSubgraphWitness, SeparationProfile
from .graphcore import Graph, VertexSet, to_graph6
from .ledger import LedgerReport
from .search import SearchMode, SearchReport


def decimal_text(x: Fraction, places: int = 6) -> str:
    """精确舍入到 places 位小数的十进制文本，仅供显示。"""

    scaled = round(Fraction(x) * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x} (≈ {decimal_text(x)})"


def rational_text(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else str(Fraction(x))


def graph_text(g: Graph) -> str:
    return to_graph6(g).strip()


def vertex_list(s: VertexSet) -> List[int]:
    return list(s.members())


def threshold_record_to_dict(record: ThresholdRecord) -> Dict[str, Any]:
    return {
        "kind": record.kind.value,
        "n": record.n,
        "k": record.k,
        "value": rational_text(record.value),
        "approx": decimal_text(record.value),
        "reading": record.reading,
        "conjectural": record.conjectural,
        "in_domain": record.in_domain,
        "domain": record.domain,
        "min_forcing": record.min_forcing,
    }


def witness_to_dict(witness: KSubgraphWitness) -> Dict[str, Any]:
    return {"k": witness.k, "vertices": vertex_list(witness.vertices)}


def certificate_to_dict(cert: CutCertificate) -> Dict[str, Any]:
    return {
        "separator": vertex_list(cert.separator),
        "side_a": vertex_list(cert.side_a),
        "side_b": vertex_list(cert.side_b),
    }


def profile_to_dict(profile: SeparationProfile) -> Dict[str, Any]:
    doc = certificate_to_dict(CutCertificate(profile.separator, profile.side_a, profile.side_b))
    doc.update(
        alpha=rational_text(profile.alpha),
        beta=rational_text(profile.beta),
        gamma=rational_text(profile.gamma),
        s1=vertex_list(profile.s1),
        sigma=rational_text(profile.sigma),
    )
    return doc


def search_report_to_dict(report: SearchReport, include_timing: bool = False) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "n": report.n,
        "k": report.k,
        "mode": report.mode.value,
        "kind": None if report.kind is None else report.kind.value,
        "threshold": rational_text(report.threshold),
        "edge_count": report.edge_count,
        "graphs_examined": report.graphs_examined,
        "expected_work": report.expected_work,
        "counterexamples": [graph_text(g) for g in report.counterexamples],
        "best_graph": None if report.best_graph is None else graph_text(report.best_graph),
        "best_edge_count": report.best_edge_count,
        "exhaustive": report.exhaustive,
        "exploratory": report.exploratory,
        "vacuous": report.vacuous,
        "verified": report.verified,
        "observations": list(report.observations),
    }
    if include_timing:
        doc["wall_time"] = round(report.wall_time, 6)
    return doc


def ledger_report_to_dict(report: LedgerReport) -> Dict[str, Any]:
    return {
        "total": report.total,
        "passed": report.passed_count,
        "failed": report.failed_count,
        "all_passed": report.all_passed,
        "checks": [
            {
                "id": r.id,
                "kind": r.kind.value,
                "anchor": r.anchor,
                "passed": r.passed,
                "claims": [
                    {
                        "label": o.label,
                        "kind": o.kind.value,
                        "passed": o.passed,
                        "actual": o.actual,
                        "expected": o.expected,
                    }
                    for o in r.outcomes
                ],
            }
            for r in report.results
        ],
    }


def dumps_json(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def dump_json(doc: Dict[str, Any], path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_json(doc))


def format_ledger_report(report: LedgerReport) -> str:
    lines = []
    for r in report.results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.id} ({r.kind.value}): {r.anchor}")
        for o in r.failures:
            lines.append(f"    {o.label}: actual {o.actual}; expected {o.expected}")
    if report.all_passed:
        lines.append("checks: all passed")
    else:
        lines.append(f"checks: {report.failed_count} of {report.total} failed")
    return "\n".join(lines) + "\n"


def format_threshold(record: ThresholdRecord) -> str:
    lines = [
        f"kind: {record.kind.value}",
        f"threshold: {format_rational(record.value)}",
        f"reading: {record.reading}",
        f"domain: {record.domain} ({'in domain' if record.in_domain else 'outside domain'})",
        f"conjectural: {'yes' if record.conjectural else 'no'}",
    ]
    if record.min_forcing is not None:
        lines.append(f"min_forcing_edge_count: {record.min_forcing}")
    return "\n".join(lines) + "\n"


def format_search_report(report: SearchReport) -> str:
    lines = [f"n: {report.n}", f"k: {report.k}", f"mode: {report.mode.value}"]
    if report.mode == SearchMode.FORCING:
        lines.append(f"kind: {report.kind.value}")
        lines.append(f"threshold: {format_rational(report.threshold)}")
        lines.append(f"edge_count: {report.edge_count}")
    lines.append(f"graphs_examined: {report.graphs_examined}")
    if report.best_graph is not None:
        lines.append(f"best_edge_count: {report.best_edge_count}")
        lines.append(f"best_graph: {graph_text(report.best_graph)}")
        lines.append(f"exhaustive: {'yes' if report.exhaustive else 'no'}")
    if report.exploratory:
        lines.append("exploratory: yes")
    if report.vacuous:
        lines.append("vacuous: yes")
    for g in report.counterexamples:
        lines.append(f"counterexample: {graph_text(g)}")
    for note in report.observations:
        lines.append(f"observation: {note}")
    if report.mode == SearchMode.FORCING:
        lines.append(f"verified: {'true' if report.verified else 'false'}")
    return "\n".join(lines) + "\n"
