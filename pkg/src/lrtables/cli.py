"""Command-line front end.

Exit codes: 0 success, 1 parse/validation error, 2 outside the stable range.
Big integers are always serialized as decimal strings.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import contingency, oracle, orthosymplectic, tables
from .errors import LrTablesError, OutsideStableRange, ParseError
from .partition import GlWeight, parse_partition, parse_weight

COMMANDS = ("lrc", "osp", "tables", "oracle", "crosscheck", "enumerate")


@dataclass
class Request:
    command: str
    payload: dict[str, Any] = field(default_factory=dict)
    output_mode: str = "json"
    emit_tables: bool = False
    jobs: int = 1


def _int_csv(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None
    if any(v < 0 for v in values):
        raise ParseError(f"margins must be nonnegative: {text!r}")
    return values


def _gl_margins(weights: Sequence[str], n: int | None) -> contingency.MarginSpec:
    parsed = [parse_weight(w) for w in weights]
    if not parsed:
        raise ParseError("at least one weight is required")
    if n is None:
        lengths = {w.n for w in parsed}
        if len(lengths) != 1:
            raise ParseError(f"weights have different lengths {sorted(lengths)}; pass --n")
        n = lengths.pop()
    return contingency.MarginSpec(tuple(w.with_rank(n) for w in parsed))


def _sym_margins(margins: Sequence[str], n: int | None) -> orthosymplectic.SymMarginSpec:
    parts = [parse_partition(m) for m in margins]
    if not parts:
        raise ParseError("at least one margin is required")
    if n is None:
        n = max(1, 2 * sum(len(p) for p in parts))
    return orthosymplectic.SymMarginSpec(tuple(parts), n)


def validate(request: Request) -> Request:
    """Parse the raw payload into domain objects; raise on any problem."""
    p = request.payload
    cmd = request.command
    if cmd not in COMMANDS:
        raise ParseError(f"unknown command {cmd!r}")
    if request.output_mode not in ("json", "text"):
        raise ParseError(f"unknown output format {request.output_mode!r}")
    if request.jobs < 1:
        raise ParseError("--jobs must be at least 1")
    n = p.get("n")
    if n is not None and (not isinstance(n, int) or n < 1):
        raise ParseError(f"n must be a positive integer, got {n!r}")
    if cmd == "tables":
        rows = p["rows"] if isinstance(p.get("rows"), tuple) else _int_csv(str(p.get("rows", "")))
        cols = p["cols"] if isinstance(p.get("cols"), tuple) else _int_csv(str(p.get("cols", "")))
        try:
            p["spec"] = tables.TableSpec(
                rows, cols,
                hollow=bool(p.get("hollow")),
                symmetric=bool(p.get("symmetric")),
                entry_cap=p.get("cap"),
            )
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        return request
    if cmd == "osp":
        p["margins"] = _sym_margins(p.get("margins") or [], n)
        group = p.get("group", "o")
        if group not in orthosymplectic.GROUPS:
            raise ParseError(f"--group must be o or sp, got {group!r}")
        p["group"] = group
        return request
    if cmd in ("oracle", "crosscheck"):
        has_w, has_m = bool(p.get("weights")), bool(p.get("margins"))
        if has_w == has_m:
            raise ParseError(f"{cmd} needs exactly one of --weights or --margins")
        if has_m:
            p["margins"] = _sym_margins(p["margins"], n)
            return request
    p["weights"] = _gl_margins(p.get("weights") or [], n)
    target = p.get("target")
    if target is not None:
        t = parse_weight(target) if isinstance(target, str) else target
        rank = p["weights"].n
        if n is None and t.n != rank:
            raise ParseError(f"target has length {t.n} but weights have length {rank}")
        p["target"] = t.with_rank(rank)
    return request


def _weights_doc(margins: contingency.MarginSpec) -> list[str]:
    return [str(w) for w in margins.weights]


def _lr_table_doc(table, norm: int) -> dict[str, Any]:
    return {"cells": table.to_lists(), "norm": str(norm)}


def _gl_target_margins(p: dict[str, Any]) -> contingency.MarginSpec:
    margins = p["weights"]
    target: GlWeight | None = p.get("target")
    if target is not None:
        margins = contingency.extended_margins(target, margins)
    return margins


def _run_gl(request: Request) -> dict[str, Any]:
    p = request.payload
    margins = _gl_target_margins(p)
    doc: dict[str, Any] = {"command": request.command, "weights": _weights_doc(p["weights"])}
    if p.get("target") is not None:
        doc["target"] = str(p["target"])
    if request.command == "enumerate" or request.emit_tables:
        contingency.check_stable(margins)
        found = list(contingency.enumerate_lrct(margins, hollow=True))
        value, count = sum(w for _, w in found), len(found)
        doc["tables"] = [_lr_table_doc(t, w) for t, w in found]
    else:
        value, count = contingency.lrc_zero_with_count(margins, request.jobs)
    doc.update(value=str(value), n=margins.n, stable_threshold=margins.stable_threshold(),
               table_count=count)
    return doc


def _run_osp(request: Request) -> dict[str, Any]:
    p = request.payload
    margins = p["margins"]
    doc: dict[str, Any] = {
        "command": "osp",
        "group": p["group"],
        "margins": [str(m) for m in margins.partitions],
    }
    orthosymplectic.check_stable(margins, p["group"])
    if request.emit_tables:
        found = list(orthosymplectic.enumerate_sym_lrct(margins))
        value, count = sum(w for _, w in found), len(found)
        doc["tables"] = [_lr_table_doc(t, w) for t, w in found]
    else:
        value, count = orthosymplectic.osp_invariant_dim_with_count(margins, p["group"])
    doc.update(value=str(value), n=margins.n, stable_threshold=margins.stable_threshold(),
               table_count=count)
    return doc


def _run_tables(request: Request) -> dict[str, Any]:
    spec: tables.TableSpec = request.payload["spec"]
    doc: dict[str, Any] = {
        "command": "tables",
        "rows": list(spec.row_margins),
        "cols": list(spec.col_margins),
        "hollow": spec.hollow,
        "symmetric": spec.symmetric,
        "cap": spec.entry_cap,
    }
    value = tables.count_tables(spec)
    if request.emit_tables:
        doc["tables"] = [[list(row) for row in t] for t in tables.enumerate_tables(spec)]
    doc.update(value=str(value), n=None, stable_threshold=None, table_count=value)
    return doc


def _run_oracle(request: Request) -> dict[str, Any]:
    p = request.payload
    if "weights" in p and isinstance(p["weights"], contingency.MarginSpec):
        margins = _gl_target_margins(p)
        oracle_value = oracle.oracle_gl_invariants(margins)
        doc: dict[str, Any] = {"command": request.command, "weights": _weights_doc(p["weights"])}
        if p.get("target") is not None:
            doc["target"] = str(p["target"])
        if request.command == "crosscheck":
            value, count = contingency.lrc_zero_with_count(margins, request.jobs)
    else:
        margins = p["margins"]
        oracle_value = oracle.oracle_osp_invariants(margins)
        doc = {"command": request.command, "margins": [str(m) for m in margins.partitions]}
        if request.command == "crosscheck":
            value, count = orthosymplectic.osp_invariant_dim_with_count(margins)
    if request.command == "oracle":
        doc.update(value=str(oracle_value), n=margins.n,
                   stable_threshold=margins.stable_threshold(), table_count=None)
    else:
        doc.update(value=str(value), oracle_value=str(oracle_value), n=margins.n,
                   stable_threshold=margins.stable_threshold(), table_count=count,
                   agreement=value == oracle_value)
    return doc


_DISPATCH = {
    "lrc": _run_gl,
    "enumerate": _run_gl,
    "osp": _run_osp,
    "tables": _run_tables,
    "oracle": _run_oracle,
    "crosscheck": _run_oracle,
}


def run(request: Request) -> tuple[int, dict[str, Any]]:
    """Validate and execute one request, returning ``(exit code, document)``."""
    try:
        validate(request)
        return 0, _DISPATCH[request.command](request)
    except OutsideStableRange as exc:
        return 2, {"command": request.command, "error": str(exc),
                   "stable_threshold": exc.threshold, "n": exc.n}
    except (LrTablesError, ValueError, KeyError, TypeError) as exc:
        return 1, {"command": request.command, "error": str(exc)}


def render(doc: dict[str, Any], mode: str) -> str:
    if mode == "json":
        return json.dumps(doc)
    lines = []
    for key, value in doc.items():
        if key == "tables":
            lines.append(f"tables: {len(value)}")
            lines.extend(f"  {json.dumps(t)}" for t in value)
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrtables",
        description="Tensor product multiplicities via LR-contingency tables.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for table sums")
    common.add_argument("--emit-tables", action="store_true")
    common.add_argument("--n", type=int, default=None, help="ambient rank")

    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("lrc", "GL_n multiplicity (invariants, or [target : product] with --target)"),
        ("enumerate", "list the hollow LR-contingency tables for GL_n margins"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--weights", nargs="+", required=True, metavar="W",
                       help='weights as full n-tuples, e.g. "[1,0,0,-1]"')
        p.add_argument("--target", default=None, metavar="W")

    p = sub.add_parser("osp", parents=[common], help="O_n / Sp_2n invariant dimension")
    p.add_argument("--margins", nargs="+", required=True, metavar="P",
                   help='partitions, e.g. "[2,1]"')
    p.add_argument("--group", choices=sorted(orthosymplectic.GROUPS), default="o")

    p = sub.add_parser("tables", parents=[common], help="count integer contingency tables")
    p.add_argument("--rows", required=True)
    p.add_argument("--cols", required=True)
    p.add_argument("--hollow", action="store_true")
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--cap", type=int, default=None)

    for name in ("oracle", "crosscheck"):
        p = sub.add_parser(name, parents=[common],
                           help="classical oracle" if name == "oracle" else "table method vs oracle")
        p.add_argument("--weights", nargs="+", metavar="W")
        p.add_argument("--margins", nargs="+", metavar="P")
        p.add_argument("--target", default=None, metavar="W")

    p = sub.add_parser("batch", help="one JSON request per stdin line, one JSON response per line")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _request_from_args(args: argparse.Namespace) -> Request:
    payload = {
        k: v for k, v in vars(args).items()
        if k not in ("command", "format", "jobs", "emit_tables") and v is not None
    }
    for key in ("hollow", "symmetric"):
        if key in payload and not payload[key]:
            del payload[key]
    return Request(args.command, payload, args.format, args.emit_tables, args.jobs)


def request_from_json(obj: dict[str, Any], jobs: int = 1) -> Request:
    if not isinstance(obj, dict):
        raise ParseError("each batch line must be a JSON object")
    obj = dict(obj)
    command = obj.pop("command", None)
    emit = bool(obj.pop("emit_tables", False))
    obj.pop("format", None)
    jobs = int(obj.pop("jobs", jobs))
    payload = {}
    for key, value in obj.items():
        if key in ("rows", "cols") and isinstance(value, list):
            value = ",".join(str(v) for v in value)
        elif key in ("weights", "margins") and isinstance(value, list):
            value = [_bracketed(v) for v in value]
        elif key == "target":
            value = _bracketed(value)
        payload[key] = value
    return Request(str(command), payload, "json", emit, jobs)


def _bracketed(value):
    # batch lines may carry tuples as JSON arrays or as the CLI's "[a,b]" strings
    if isinstance(value, list):
        return "[" + ",".join(str(v) for v in value) + "]"
    return value


def run_batch(lines, out, jobs: int = 1) -> int:
    worst = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            request = request_from_json(json.loads(line), jobs)
        except (json.JSONDecodeError, ParseError, ValueError) as exc:
            code, doc = 1, {"command": None, "error": str(exc)}
        else:
            code, doc = run(request)
        doc["exit_code"] = code
        out.write(json.dumps(doc) + "\n")
        worst = max(worst, code)
    return worst


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "batch":
        return run_batch(sys.stdin, sys.stdout, args.jobs)
    request = _request_from_args(args)
    code, doc = run(request)
    stream = sys.stdout if code == 0 else sys.stderr
    print(render(doc, request.output_mode), file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
