"""
pnca 的命令列入口。每個子指令只負責：解析參數 → 呼叫 services → 輸出。

- --json：輸出 ReportDocument（command / inputs / outputs / artifact_version）
- 沒有 --json：bm / profile / linearize 印單行 JSON，其餘印純文字
- PncaError → stderr 一行 "error: ..."，exit 1；參數錯誤由 argparse 處理，exit 2
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from .. import __version__
from ..config import settings
from ..core.bitseq import BitSequence
from ..core.gf2 import format_poly, parse_poly
from ..errors import PncaError
from ..logging_setup import get_logger
from ..schemas import constants as C
from ..schemas.report import ReportDocument, dump_json
from ..services import acceptance
from ..services.analysis import berlekamp_massey, minimal_period
from ..services.ca import (
    CAState, RuleVector, char_poly, concat_double, evolve, run_column, synthesize,
)
from ..services.census import cycle_census
from ..services.diffeq import (
    DifferenceEquation, SolutionCoeffs, count_solution_classes, profile, solution_sequence,
)
from ..services.generators import (
    LFSRConfig, ShrinkingConfig, linearize, shrink_keystream, shrinking_bounds,
)
from ..utils.bitfmt import parse_hex_list

logger = logging.getLogger(__name__)

# handler 回傳 (outputs payload, 純文字輸出)；純文字為 None 時印單行 JSON
Result = Tuple[Any, Optional[str]]


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"不是整數：{text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"必須 ≥ 0：{v}")
    return v


def _positive(text: str) -> int:
    v = _non_negative(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"必須 ≥ 1：{v}")
    return v


# -------------------- 子指令 --------------------

def cmd_charpoly(args) -> Result:
    poly = format_poly(char_poly(RuleVector.parse(args.rule)))
    return {"poly": poly}, poly


def cmd_synth(args) -> Result:
    rule, rev = synthesize(parse_poly(args.poly))
    return {"rule": str(rule), "reversed": str(rev)}, f"{rule}\n{rev}"


def cmd_concat(args) -> Result:
    rule = RuleVector.parse(args.rule)
    for _ in range(args.times):
        rule = concat_double(rule)
    return {"rule": str(rule), "poly": format_poly(char_poly(rule))}, str(rule)


def cmd_run(args) -> Result:
    rule = RuleVector.parse(args.rule)
    s0 = CAState.parse(args.state)
    if args.rows:
        rows = [str(s) for s in evolve(rule, s0, args.len)]
        return {"rows": rows}, "\n".join(rows)
    col = run_column(rule, s0, args.cell, args.len)
    return {"cell": args.cell, "bits": str(col)}, str(col)


def cmd_cycles(args) -> Result:
    threads = args.threads if args.threads is not None else settings.THREADS
    census = cycle_census(RuleVector.parse(args.rule), workers=threads)
    lines = []
    for e in census.entries:
        sym = " ".join(f"{k}={v}" for k, v in e.symmetry.items())
        lines.append(f"length {e.length}: {e.count} cycles  {sym}".rstrip())
    return census.to_payload(), "\n".join(lines)


def _equation_and_coeffs(args) -> Tuple[DifferenceEquation, SolutionCoeffs]:
    eq = DifferenceEquation(parse_poly(args.poly), args.mult)
    return eq, SolutionCoeffs.from_ints(eq, parse_hex_list(args.coeffs))


def cmd_solve(args) -> Result:
    eq, A = _equation_and_coeffs(args)
    bits = solution_sequence(eq, A, args.len)
    return {"bits": str(bits)}, str(bits)


def cmd_profile(args) -> Result:
    eq, A = _equation_and_coeffs(args)
    prof = profile(eq, A)
    return {
        "period": prof.period,
        "lc": prof.linear_complexity,
        "class_index": prof.class_index,
        "count_in_class": count_solution_classes(eq, prof.class_index),
    }, None


def cmd_bm(args) -> Result:
    return berlekamp_massey(BitSequence.parse(args.bits).bits).to_payload(), None


def cmd_period(args) -> Result:
    d = minimal_period(BitSequence.parse(args.bits).bits)
    return {"period": d}, str(d)


def cmd_shrink(args) -> Result:
    cfg = ShrinkingConfig(
        control=LFSRConfig(parse_poly(args.control_poly), CAState.parse(args.control_seed).cells),
        data=LFSRConfig(parse_poly(args.data_poly), CAState.parse(args.data_seed).cells),
    )
    bits = shrink_keystream(cfg, args.len)
    period, lc_low, lc_high = shrinking_bounds(cfg)
    payload = {"bits": str(bits), "bounds": {"period": period, "lc_low": lc_low, "lc_high": lc_high}}
    return payload, str(bits)


def cmd_linearize(args) -> Result:
    return linearize(BitSequence.parse(args.bits)).to_payload(), None


def cmd_verify_paper(args) -> Result:
    threads = args.threads if args.threads is not None else settings.THREADS
    results = acceptance.run_all(seed=args.seed, skip_census=args.skip_census, threads=threads)
    payload = {"passed": all(r.passed for r in results), "items": [r.to_payload() for r in results]}
    return payload, "\n".join(r.line() for r in results)


# -------------------- parser --------------------

def _json_flag() -> argparse.ArgumentParser:
    # 全域與子指令都能放 --json；SUPPRESS 讓沒寫的那一層不覆蓋另一層
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="輸出 JSON report")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _json_flag()
    parser = argparse.ArgumentParser(
        prog="pnca",
        description="linear 90/150 cellular automata、binary 差分方程與 shrinking generator 線性化",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"pnca {__version__}")
    parser.add_argument("--log-level", type=str.upper, default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="預設讀 PNCA_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(handler=handler)
        return p

    p = add("charpoly", cmd_charpoly, "rule vector 的特徵多項式")
    p.add_argument("rule")

    p = add("synth", cmd_synth, "合成特徵多項式為 POLY 的 CA 與其反轉")
    p.add_argument("poly")

    p = add("concat", cmd_concat, "把 rule vector 串接（倍增）TIMES 次")
    p.add_argument("rule")
    p.add_argument("--times", type=_non_negative, default=1)

    p = add("run", cmd_run, "從初始狀態跑 CA，輸出某個 cell 的序列")
    p.add_argument("rule")
    p.add_argument("state")
    p.add_argument("--cell", type=_positive, default=1)
    p.add_argument("--len", type=_non_negative, required=True)
    p.add_argument("--rows", action="store_true", help="改印每一步的整列狀態")

    p = add("cycles", cmd_cycles, "列舉所有狀態的 cycle 結構")
    p.add_argument("rule")
    p.add_argument("--threads", type=_positive, default=None)

    for name, handler, help_text in (
        ("solve", cmd_solve, "用封閉式產生差分方程的解"),
        ("profile", cmd_profile, "量測解的 period / LC / class"),
    ):
        p = add(name, handler, help_text)
        p.add_argument("--poly", required=True)
        p.add_argument("--mult", type=_positive, default=1)
        p.add_argument("--coeffs", required=True, help="A_0..A_(p-1)，hex，逗號分隔")
        if name == "solve":
            p.add_argument("--len", type=_non_negative, required=True)

    p = add("bm", cmd_bm, "Berlekamp–Massey：LC 與 minimal polynomial")
    p.add_argument("--bits", required=True)

    p = add("period", cmd_period, "序列的最小週期")
    p.add_argument("--bits", required=True)

    p = add("shrink", cmd_shrink, "shrinking generator keystream")
    p.add_argument("--control-poly", default=C.SHRINK_CONTROL_POLY)
    p.add_argument("--control-seed", default=C.SHRINK_CONTROL_SEED)
    p.add_argument("--data-poly", default=C.SHRINK_DATA_POLY)
    p.add_argument("--data-seed", default=C.SHRINK_DATA_SEED)
    p.add_argument("--len", type=_non_negative, default=C.SHRINK_PERIOD)

    p = add("linearize", cmd_linearize, "把 keystream 還原成串接 CA 模型")
    p.add_argument("--bits", required=True)

    p = add("verify-paper", cmd_verify_paper, "逐項跑驗收檢查，印 PASS / FAIL")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--skip-census", action="store_true")
    p.add_argument("--threads", type=_positive, default=None)

    return parser


def _inputs(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"handler", "command", "json", "log_level"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        # argparse：usage 錯誤 2，--help / --version 0
        return e.code if isinstance(e.code, int) else 2

    get_logger(args.log_level)
    as_json = getattr(args, "json", False)
    try:
        payload, text = args.handler(args)
    except PncaError as e:
        logger.debug("%s 失敗", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 1

    if as_json:
        print(ReportDocument(args.command, _inputs(args), payload).to_json())
    elif text is None:
        print(dump_json(payload))
    else:
        print(text)

    if args.command == "verify-paper" and not payload["passed"]:
        return 1
    return 0
