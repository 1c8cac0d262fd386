"""Matrix files and canonical JSON reports."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

import jsonschema

from .analysis import AnalysisReport, Block, DecompositionReport, UniversalCoverDatum
from .errors import ParseError
from .exact_linalg import AbelianGroup, IntMatrix

SCHEMA_VERSION = 1
SAFE_INT = 2**53 - 1


# ---------------------------------------------------------------------------
# matrix files


def _parse_int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col) from None


def _parse_json_matrix(text: str) -> tuple[IntMatrix, str]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ParseError("JSON matrix must be an object with a 'rows' field", 1, 1)
    kind = obj.get("kind", "A")
    if kind not in ("A", "B"):
        raise ParseError(f"kind must be 'A' or 'B', got {kind!r}", 1, 1)
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("'rows' must be a list of lists", 1, 1)
    out = []
    for i, r in enumerate(rows):
        row = []
        for j, x in enumerate(r):
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise ParseError(f"entry ({i}, {j}) is not an integer", 1, 1)
            row.append(_parse_int(x, 1, 1) if isinstance(x, str) else x)
        out.append(row)
    ncols = obj.get("cols")
    if ncols is None:
        if not out:
            raise ParseError("empty JSON matrix needs an explicit 'cols'", 1, 1)
        ncols = len(out[0])
    for i, r in enumerate(out):
        if len(r) != ncols:
            raise ParseError(f"row {i} has {len(r)} entries, expected {ncols}", 1, 1)
    return IntMatrix(out, ncols=ncols), kind


def parse_matrix(text: str) -> tuple[IntMatrix, str]:
    """Parse either the plain "rows cols" format or the JSON form.

    The plain format may start with a ``# kind: B`` comment to declare kind B.
    """
    if text.lstrip().startswith("{"):
        return _parse_json_matrix(text)
    kind = "A"
    header = None
    rows: list[list[int]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped[1:].strip().lower()
            if body.startswith("kind:"):
                k = body[5:].strip().upper()
                if k not in ("A", "B"):
                    raise ParseError(f"kind must be A or B, got {k!r}", lineno, raw.index("#") + 1)
                kind = k
            continue
        toks = []
        pos = 0
        for tok in raw.split():
            pos = raw.index(tok, pos)
            toks.append(_parse_int(tok, lineno, pos + 1))
            pos += len(tok)
        if header is None:
            if len(toks) != 2 or min(toks) < 0:
                raise ParseError("header must be two non-negative integers: rows cols", lineno, 1)
            header = tuple(toks)
            continue
        if len(rows) == header[0]:
            raise ParseError(f"more than {header[0]} rows", lineno, 1)
        if len(toks) != header[1]:
            raise ParseError(f"row has {len(toks)} entries, expected {header[1]}", lineno, 1)
        rows.append(toks)
    if header is None:
        raise ParseError("missing header", max(last_line, 1), 1)
    if len(rows) != header[0]:
        raise ParseError(f"expected {header[0]} rows, found {len(rows)}", max(last_line, 1), 1)
    return IntMatrix(rows, ncols=header[1]), kind


def read_matrix(path: Union[str, Path]) -> tuple[IntMatrix, str]:
    return parse_matrix(Path(path).read_text())


def format_matrix(M: IntMatrix, kind: str = "A") -> str:
    lines = []
    if kind != "A":
        lines.append(f"# kind: {kind}")
    lines.append(f"{M.nrows} {M.ncols}")
    lines.extend(" ".join(str(x) for x in r) for r in M.rows)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON reports


def _enc(x: int) -> Union[int, str]:
    return x if abs(x) <= SAFE_INT else str(x)


def _dec(x: Union[int, str]) -> int:
    return int(x)


def _rows(M: IntMatrix) -> list[list]:
    return [[_enc(x) for x in r] for r in M.rows]


def group_to_dict(G: AbelianGroup) -> dict:
    order = G.order()
    return {
        "free_rank": G.free_rank,
        "invariant_factors": [_enc(t) for t in G.torsion],
        "order": None if order is None else _enc(order),
    }


def group_from_dict(obj: dict) -> AbelianGroup:
    return AbelianGroup(obj["free_rank"], tuple(_dec(t) for t in obj["invariant_factors"]))


def report_to_dict(r: AnalysisReport) -> dict[str, Any]:
    dec = r.decomposition
    cov = r.cover
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {"kind": r.kind, "rows": _rows(r.matrix), "cols": r.matrix.ncols},
        "n": r.n,
        "d": r.d,
        "dim": r.dim,
        "smooth": r.smooth,
        "simple": r.simple,
        "sing_codim": r.sing_codim,
        "isolated": r.isolated,
        "pi1": group_to_dict(r.pi1),
        "decomposition": {
            "p": dec.p,
            "loops": list(dec.loops),
            "blocks": [{"columns": list(b.columns), "n": b.n, "d": b.d} for b in dec.blocks],
        },
        "irreducible": r.irreducible,
        "two_form_dim": r.two_form_dim,
        "cover": {
            "A_under": _rows(cov.A_under),
            "A_under_cols": cov.A_under.ncols,
            "B_bar": _rows(cov.B_bar),
            "B_bar_cols": cov.B_bar.ncols,
            "multiplicities": [_enc(l) for l in cov.multiplicities],
            "deck": group_to_dict(cov.deck),
            "gamma_order": _enc(cov.gamma_order),
        },
        "strata_summary": {str(k): v for k, v in sorted(r.strata_summary.items())},
    }


def _matrix(rows: list, ncols: int) -> IntMatrix:
    return IntMatrix([[_dec(x) for x in r] for r in rows], ncols=ncols)


def report_from_dict(obj: dict[str, Any]) -> AnalysisReport:
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {obj.get('schema_version')!r}", 1, 1)
    inp = obj["input"]
    dec = obj["decomposition"]
    cov = obj["cover"]
    return AnalysisReport(
        matrix=_matrix(inp["rows"], inp["cols"]),
        kind=inp["kind"],
        n=obj["n"],
        d=obj["d"],
        dim=obj["dim"],
        smooth=obj["smooth"],
        simple=obj["simple"],
        sing_codim=obj["sing_codim"],
        isolated=obj["isolated"],
        pi1=group_from_dict(obj["pi1"]),
        decomposition=DecompositionReport(
            dec["p"],
            tuple(dec["loops"]),
            tuple(Block(tuple(b["columns"]), b["n"], b["d"]) for b in dec["blocks"]),
        ),
        irreducible=obj["irreducible"],
        two_form_dim=obj["two_form_dim"],
        cover=UniversalCoverDatum(
            A_under=_matrix(cov["A_under"], cov["A_under_cols"]),
            B_bar=_matrix(cov["B_bar"], cov["B_bar_cols"]),
            multiplicities=tuple(_dec(l) for l in cov["multiplicities"]),
            deck=group_from_dict(cov["deck"]),
            gamma_order=_dec(cov["gamma_order"]),
        ),
        strata_summary={int(k): v for k, v in obj["strata_summary"].items()},
    )


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def emit_report(r: AnalysisReport) -> str:
    return canonical_json(report_to_dict(r))


def parse_report(text: str) -> AnalysisReport:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return report_from_dict(obj)


_BIGINT = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?[0-9]+$"}]}
_ROWS = {"type": "array", "items": {"type": "array", "items": _BIGINT}}
_GROUP = {
    "type": "object",
    "required": ["free_rank", "invariant_factors", "order"],
    "additionalProperties": False,
    "properties": {
        "free_rank": {"type": "integer", "minimum": 0},
        "invariant_factors": {"type": "array", "items": _BIGINT},
        "order": {"anyOf": [_BIGINT, {"type": "null"}]},
    },
}
_NAT = {"type": "integer", "minimum": 0}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": [
        "schema_version", "input", "n", "d", "dim", "smooth", "simple", "sing_codim",
        "isolated", "pi1", "decomposition", "irreducible", "two_form_dim", "cover",
        "strata_summary",
    ],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "input": {
            "type": "object",
            "required": ["kind", "rows", "cols"],
            "additionalProperties": False,
            "properties": {"kind": {"enum": ["A", "B"]}, "rows": _ROWS, "cols": _NAT},
        },
        "n": _NAT,
        "d": _NAT,
        "dim": _NAT,
        "smooth": {"type": "boolean"},
        "simple": {"type": "boolean"},
        "sing_codim": {"anyOf": [_NAT, {"type": "null"}]},
        "isolated": {"type": "boolean"},
        "pi1": _GROUP,
        "decomposition": {
            "type": "object",
            "required": ["p", "loops", "blocks"],
            "additionalProperties": False,
            "properties": {
                "p": _NAT,
                "loops": {"type": "array", "items": _NAT},
                "blocks": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["columns", "n", "d"],
                        "additionalProperties": False,
                        "properties": {
                            "columns": {"type": "array", "items": _NAT},
                            "n": _NAT,
                            "d": _NAT,
                        },
                    },
                },
            },
        },
        "irreducible": {"type": "boolean"},
        "two_form_dim": _NAT,
        "cover": {
            "type": "object",
            "required": [
                "A_under", "A_under_cols", "B_bar", "B_bar_cols",
                "multiplicities", "deck", "gamma_order",
            ],
            "additionalProperties": False,
            "properties": {
                "A_under": _ROWS,
                "A_under_cols": _NAT,
                "B_bar": _ROWS,
                "B_bar_cols": _NAT,
                "multiplicities": {"type": "array", "items": _BIGINT},
                "deck": _GROUP,
                "gamma_order": _BIGINT,
            },
        },
        "strata_summary": {
            "type": "object",
            "patternProperties": {"^[0-9]+$": _NAT},
            "additionalProperties": False,
        },
    },
}


def validate_report_json(text_or_obj: Union[str, dict]) -> None:
    """Raise jsonschema.ValidationError when the report does not match the schema."""
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    jsonschema.validate(obj, REPORT_SCHEMA)
