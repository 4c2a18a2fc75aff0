"""kcon 命令行入口：每个子命令只负责解析参数、调用对应的模块操作并格式化输出。

退出码：0 表示成功（验证类命令还表示性质成立）；1 表示发现反例或检查未通过；
2 表示用法错误、输入错误或预算拒绝。
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence

from .bounds import BoundKind, describe_threshold, normalized
from .config import LOG_LEVELS, SearchSettings
from .connectivity import (
    has_k_plus_1_connected_subgraph,
    max_k_connected_pieces,
    separation_profile,
    vertex_connectivity,
)
from .constructions import mader_graph
from .exceptions import KconError
from .graphcore import FORMATS, GRAPH6, Graph, VertexSet, decode_graph_bytes, format_graph, parse_graph, read_graph
from .ledger import run_all_checks
from .reporting import (
    certificate_to_dict,
    dump_json,
    format_ledger_report,
    format_rational,
    format_search_report,
    format_threshold,
    ledger_report_to_dict,
    profile_to_dict,
    rational_text,
    search_report_to_dict,
    threshold_record_to_dict,
    witness_to_dict,
)
from .search import SearchMode, max_edges_without, verify_forcing

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from e


def _kind(text: str) -> BoundKind:
    try:
        return BoundKind(text)
    except ValueError as e:
        choices = ", ".join(k.value for k in BoundKind)
        raise argparse.ArgumentTypeError(f"unknown kind {text!r}; expected one of {choices}") from e


def _vertices(s: VertexSet) -> str:
    return "[" + ", ".join(str(v) for v in s) + "]"


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.input:
        return read_graph(args.input, args.format)
    buffer = getattr(sys.stdin, "buffer", None)
    if buffer is not None:
        text = decode_graph_bytes(buffer.read(), "standard input")
    else:
        text = sys.stdin.read()
    return parse_graph(text, args.format or GRAPH6)


def _write_json(doc: Dict[str, object], args: argparse.Namespace) -> None:
    if getattr(args, "json", None):
        dump_json(doc, args.json)


def _cmd_gen(args: argparse.Namespace, settings: SearchSettings) -> int:
    g = mader_graph(args.n, args.k).graph
    sys.stdout.write(format_graph(g, args.format or GRAPH6))
    return EXIT_OK


def _cmd_kappa(args: argparse.Namespace, settings: SearchSettings) -> int:
    g = _load_graph(args)
    kappa, cert = vertex_connectivity(g)
    print(f"kappa: {kappa}")
    if cert is not None:
        print(f"separator: {_vertices(cert.separator)}")
        print(f"side_a: {_vertices(cert.side_a)}")
        print(f"side_b: {_vertices(cert.side_b)}")
    doc: Dict[str, object] = {
        "kappa": kappa,
        "certificate": None if cert is None else certificate_to_dict(cert),
    }
    if args.profile is not None:
        profile = separation_profile(g, args.profile)
        doc["profile"] = None if profile is None else profile_to_dict(profile)
        if profile is None:
            print(f"profile: none (no separator of size <= {args.profile})")
        else:
            print(f"alpha: {profile.alpha}")
            print(f"beta: {profile.beta}")
            print(f"gamma: {profile.gamma}")
            print(f"s1: {_vertices(profile.s1)}")
            print(f"sigma: {profile.sigma}")
    _write_json(doc, args)
    return EXIT_OK


def _cmd_has_ksub(args: argparse.Namespace, settings: SearchSettings) -> int:
    found, witness = has_k_plus_1_connected_subgraph(_load_graph(args), args.k)
    print("true" if found else "false")
    if args.witness and witness is not None:
        print(f"witness: {_vertices(witness.vertices)}")
    _write_json(
        {"k": args.k, "found": found, "witness": None if witness is None else witness_to_dict(witness)}, args
    )
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace, settings: SearchSettings) -> int:
    pieces = max_k_connected_pieces(_load_graph(args), args.k)
    print(f"pieces: {len(pieces)}")
    for piece in pieces:
        print(_vertices(piece.vertices))
    _write_json({"k": args.k, "pieces": [witness_to_dict(p) for p in pieces]}, args)
    return EXIT_OK


def _cmd_bound(args: argparse.Namespace, settings: SearchSettings) -> int:
    if args.normalized:
        if args.gamma is None:
            raise KconError("--normalized needs --gamma P/Q")
        value = normalized(args.gamma, args.kind)
        print(f"kind: {args.kind.value}")
        print(f"gamma: {args.gamma}")
        print(f"normalized: {format_rational(value)}")
        _write_json(
            {"kind": args.kind.value, "gamma": rational_text(args.gamma), "normalized": rational_text(value)}, args
        )
        return EXIT_OK
    if args.n is None or args.k is None:
        raise KconError("bound needs --n and --k unless --normalized is given")
    record = describe_threshold(args.kind, args.n, args.k)
    sys.stdout.write(format_threshold(record))
    _write_json(threshold_record_to_dict(record), args)
    return EXIT_OK


def _finish_search(report, args: argparse.Namespace) -> None:
    sys.stdout.write(format_search_report(report))
    if args.json:
        dump_json(search_report_to_dict(report), args.json)


def _cmd_verify(args: argparse.Namespace, settings: SearchSettings) -> int:
    kind = getattr(args, "kind", None) or BoundKind.MATULA_LEMMA
    report = verify_forcing(
        kind, args.n, args.k, budget=settings.budget, jobs=settings.jobs, override_domain=args.override_domain
    )
    _finish_search(report, args)
    return EXIT_OK if report.verified else EXIT_FAILED


def _cmd_search_max(args: argparse.Namespace, settings: SearchSettings) -> int:
    report = max_edges_without(
        args.n,
        args.k,
        mode=args.mode,
        budget=settings.budget,
        seed=settings.seed,
        iterations=settings.greedy_iterations,
    )
    _finish_search(report, args)
    return EXIT_OK


def _cmd_ledger(args: argparse.Namespace, settings: SearchSettings) -> int:
    only = [x.strip() for x in args.only.split(",") if x.strip()] if args.only else None
    report = run_all_checks(only=only)
    sys.stdout.write(format_ledger_report(report))
    if args.json:
        dump_json(ledger_report_to_dict(report), args.json)
    return EXIT_OK if report.all_passed else EXIT_FAILED


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", default=None, help="图文件路径（默认从标准输入读取 graph6）")
    p.add_argument("--format", choices=FORMATS, default=None, help="输入格式；默认按扩展名判断")
    p.add_argument("--json", default=None, help="把结果写入该 JSON 文件")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcon", description="(k+1)-连通子图的极值结果：构造、判定、阈值、验证与证明账本")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="日志级别（默认读取 KCON_LOG_LEVEL）",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="生成极值构造")
    gen.add_argument("family", choices=["mader"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--format", choices=FORMATS, default=GRAPH6)
    gen.set_defaults(handler=_cmd_gen)

    kappa = sub.add_parser("kappa", help="计算点连通度与一个最小分离集")
    kappa.add_argument("--profile", type=int, default=None, metavar="K", help="同时给出大小 <= K 的分离集的归一化规模")
    _add_graph_input(kappa)
    kappa.set_defaults(handler=_cmd_kappa)

    has_ksub = sub.add_parser("has-ksub", help="判定是否含有 (k+1)-连通子图")
    has_ksub.add_argument("--k", type=int, required=True)
    has_ksub.add_argument("--witness", action="store_true", help="同时打印见证顶点集")
    _add_graph_input(has_ksub)
    has_ksub.set_defaults(handler=_cmd_has_ksub)

    decompose = sub.add_parser("decompose", help="列出全部极大 (k+1)-连通顶点集")
    decompose.add_argument("--k", type=int, required=True)
    _add_graph_input(decompose)
    decompose.set_defaults(handler=_cmd_decompose)

    bound = sub.add_parser("bound", help="计算精确阈值与最小强制边数")
    bound.add_argument("--kind", type=_kind, required=True)
    bound.add_argument("--n", type=int, default=None)
    bound.add_argument("--k", type=int, default=None)
    bound.add_argument("--normalized", action="store_true")
    bound.add_argument("--gamma", type=_rational, default=None)
    bound.add_argument("--json", default=None, help="把结果写入该 JSON 文件")
    bound.set_defaults(handler=_cmd_bound)

    def add_search_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--budget", type=int, default=None, help="判定调用次数上限（默认读取 KCON_BUDGET）")
        p.add_argument("--json", default=None, help="把报告写入该 JSON 文件")

    verify = sub.add_parser("verify-theorem", help="穷举验证强制型界")
    verify.add_argument("--kind", type=_kind, required=True)
    add_search_flags(verify)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--override-domain", action="store_true")
    verify.set_defaults(handler=_cmd_verify)

    matula = sub.add_parser("verify-matula", help="verify-theorem --kind MatulaLemma 的别名")
    add_search_flags(matula)
    matula.add_argument("--jobs", type=int, default=None)
    matula.add_argument("--override-domain", action="store_true")
    matula.set_defaults(handler=_cmd_verify)

    search = sub.add_parser("search-max", help="搜索不含 (k+1)-连通子图的最大边数")
    add_search_flags(search)
    search.add_argument("--mode", choices=[SearchMode.EXHAUSTIVE.value, SearchMode.GREEDY.value], required=True)
    search.add_argument("--seed", type=int, default=None)
    search.add_argument("--iterations", type=int, default=None)
    search.set_defaults(handler=_cmd_search_max)

    ledger = sub.add_parser("ledger", help="执行证明账本")
    ledger.add_argument("--only", default=None, help="逗号分隔的检查编号")
    ledger.add_argument("--json", default=None, help="把报告写入该 JSON 文件")
    ledger.set_defaults(handler=_cmd_ledger)
    return parser


def _apply_overrides(settings: SearchSettings, args: argparse.Namespace) -> SearchSettings:
    overrides: Dict[str, object] = {}
    for flag, name in (("budget", "budget"), ("jobs", "jobs"), ("seed", "seed"), ("iterations", "greedy_iterations")):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[name] = value
    if args.log_level:
        overrides["log_level"] = args.log_level
    return dataclasses.replace(settings, **overrides)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        settings = _apply_overrides(SearchSettings.from_env(), args)
    except KconError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, settings.log_level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    handler: Callable[[argparse.Namespace, SearchSettings], int] = args.handler
    try:
        return handler(args, settings)
    except KconError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
