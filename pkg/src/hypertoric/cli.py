"""Command-line front end.

Exit codes: 0 success, 1 domain or validation error, 2 usage error.
stdout carries data, stderr carries diagnostics.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import analysis as hyp
from .arrangement import affine_offsets, is_generic, simplify, strata
from .errors import HypertoricError, NotUnimodular, ParseError, ZeroBRow
from .exact_linalg import IntMatrix
from .fungroup import ORACLE_BOUND, pi1, pi1_oracle
from .gale import DIAGNOSTIC_TEXT, GalePair, gale_dual_of_A, gale_dual_of_B, verify_gale_pair
from .matroid import FLAT_LIMIT, ISO_LIMIT
from .report_io import (
    canonical_json,
    emit_report,
    format_matrix,
    group_to_dict,
    read_matrix,
)


class UsageError(Exception):
    pass


def _pair(M: IntMatrix, kind: str) -> GalePair:
    return gale_dual_of_A(M) if kind == "A" else gale_dual_of_B(M)


def _load(path: str, kind_flag: Optional[str]) -> tuple[IntMatrix, str]:
    try:
        M, kind = read_matrix(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    return M, kind_flag or kind


def _load_pair(args) -> tuple[IntMatrix, str, GalePair]:
    M, kind = _load(args.file, args.kind)
    return M, kind, _pair(M, kind)


def _rows_text(M: IntMatrix) -> str:
    if M.nrows == 0:
        return f"(empty {M.nrows} x {M.ncols})"
    return "\n".join(" ".join(str(x) for x in r) for r in M.rows)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a list of integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# subcommands; each returns an exit code


def cmd_validate(args, out: TextIO) -> int:
    M, kind = _load(args.file, args.kind)
    if args.dual:
        D, _ = _load(args.dual, None)
        A, B = (M, D) if kind == "A" else (D, M)
        codes = verify_gale_pair(A, B)
        if args.json:
            out.write(canonical_json({"valid": not codes, "violations": codes}))
        elif codes:
            out.write("INVALID\n")
            for c in codes:
                out.write(f"{c}: {DIAGNOSTIC_TEXT[c]}\n")
        else:
            out.write("VALID\n")
        return 1 if codes else 0
    pair = _pair(M, kind)
    if args.json:
        out.write(canonical_json({"valid": True, "n": pair.n, "d": pair.d}))
    else:
        out.write(f"VALID (n={pair.n}, d={pair.d})\n")
    return 0


def cmd_gale(args, out: TextIO) -> int:
    M, kind, pair = _load_pair(args)
    dual, dkind = (pair.B, "B") if kind == "A" else (pair.A, "A")
    out.write(format_matrix(dual, dkind))
    return 0


def cmd_simplify(args, out: TextIO) -> int:
    _, _, pair = _load_pair(args)
    B_bar, data = simplify(pair.B)
    if args.json:
        out.write(canonical_json({
            "B_bar": [list(r) for r in B_bar.rows],
            "classes": [list(c) for c in data.classes],
            "multiplicities": list(data.multiplicities),
            "signs": list(data.signs),
        }))
        return 0
    out.write(format_matrix(B_bar, "B"))
    out.write("multiplicities: " + " ".join(map(str, data.multiplicities)) + "\n")
    out.write("classes: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in data.classes) + "\n")
    return 0


def cmd_pi1(args, out: TextIO, err: TextIO) -> int:
    _, _, pair = _load_pair(args)
    G = pi1(pair)
    payload = {"pi1": group_to_dict(G)}
    if args.oracle:
        H = pi1_oracle(pair, args.oracle_bound)
        payload["oracle"] = group_to_dict(H)
        payload["agree"] = H == G
        if H != G:
            err.write(f"error: oracle disagreement: pi1={G} oracle={H}\n")
    if args.json:
        out.write(canonical_json(payload))
    else:
        out.write(f"{G}\n")
        if args.oracle and payload["agree"]:
            out.write("oracle: agrees\n")
    return 0 if payload.get("agree", True) else 1


def cmd_strata(args, out: TextIO) -> int:
    _, _, pair = _load_pair(args)
    rows = strata(pair, args.flat_limit)
    if args.json:
        out.write(canonical_json([
            {
                "flat": list(s.flat.elements),
                "rank": s.flat.rank,
                "stratum_dim": s.stratum_dim,
                "multiplicated": s.multiplicated,
                "slice": s.slice_note,
            }
            for s in rows
        ]))
        return 0
    out.write("rank\tdim\tmult\tflat\tslice\n")
    for s in rows:
        flat = "{" + ",".join(map(str, s.flat.elements)) + "}"
        mult = "yes" if s.multiplicated else "no"
        out.write(f"{s.flat.rank}\t{s.stratum_dim}\t{mult}\t{flat}\t{s.slice_note or '-'}\n")
    return 0


def cmd_analyze(args, out: TextIO) -> int:
    M, kind = _load(args.file, args.kind)
    r = hyp.analyze(M, kind, args.flat_limit)
    if args.json:
        out.write(emit_report(r))
        return 0
    dec = r.decomposition
    lines = [
        f"n = {r.n}, d = {r.d}, dim = {r.dim}",
        f"smooth: {r.smooth}",
        f"simple: {r.simple}",
        f"singular codimension: {r.sing_codim if r.sing_codim is not None else 'none (smooth)'}",
        f"isolated singularities: {r.isolated}",
        f"pi1: {r.pi1}",
        f"decomposition: p = {dec.p}, r = {dec.r}",
        f"irreducible: {r.irreducible}",
        f"two_form_dim: {r.two_form_dim}",
        "multiplicities: " + " ".join(map(str, r.cover.multiplicities)),
        "strata per dimension: " + ", ".join(f"{k}:{v}" for k, v in r.strata_summary.items()),
    ]
    out.write("\n".join(lines) + "\n")
    return 0


def cmd_decompose(args, out: TextIO) -> int:
    _, _, pair = _load_pair(args)
    dec = hyp.decompose(pair.A)
    if args.json:
        out.write(canonical_json({
            "p": dec.p,
            "loops": list(dec.loops),
            "blocks": [{"columns": list(b.columns), "n": b.n, "d": b.d} for b in dec.blocks],
        }))
        return 0
    out.write(f"p = {dec.p} loops: {list(dec.loops)}\n")
    out.write(f"r = {dec.r}\n")
    for i, b in enumerate(dec.blocks, 1):
        out.write(f"block {i}: columns {list(b.columns)} n={b.n} d={b.d}\n")
    return 0


def cmd_cover(args, out: TextIO) -> int:
    _, _, pair = _load_pair(args)
    cov = hyp._cover(pair)
    B_bar, data = simplify(pair.B)
    issues = hyp.simplification_diagram_diagnostics(pair.A, pair.B, B_bar, data, cov.A_under)
    if args.json:
        out.write(canonical_json({
            "A_under": [list(r) for r in cov.A_under.rows],
            "A_under_cols": cov.A_under.ncols,
            "B_bar": [list(r) for r in cov.B_bar.rows],
            "multiplicities": list(cov.multiplicities),
            "deck": group_to_dict(cov.deck),
            "gamma_order": cov.gamma_order,
            "diagram_ok": not issues,
            "diagram_issues": issues,
        }))
    else:
        out.write(f"A_under ({cov.A_under.nrows} x {cov.A_under.ncols}):\n{_rows_text(cov.A_under)}\n")
        out.write(f"B_bar ({cov.B_bar.nrows} x {cov.B_bar.ncols}):\n{_rows_text(cov.B_bar)}\n")
        out.write("multiplicities: " + " ".join(map(str, cov.multiplicities)) + "\n")
        out.write(f"deck group: {cov.deck}\n")
        out.write(f"|Gamma| = {cov.gamma_order}\n")
        out.write("diagram: " + ("OK" if not issues else "FAILED") + "\n")
        for msg in issues:
            out.write(f"  {msg}\n")
    return 0 if not issues else 1


def cmd_classify(args, out: TextIO) -> int:
    M1, k1 = _load(args.file, args.kind)
    M2, k2 = _load(args.other, args.kind)
    A1, A2 = _pair(M1, k1).A, _pair(M2, k2).A
    perm = hyp.classify_equal(A1, A2, args.iso_limit)
    if args.json:
        out.write(canonical_json({"equal": perm is not None, "permutation": None if perm is None else list(perm)}))
    elif perm is None:
        out.write("DIFFERENT\n")
    else:
        out.write("EQUAL\n")
        out.write("permutation: " + " ".join(map(str, perm)) + "\n")
    return 0


def cmd_generic(args, out: TextIO) -> int:
    _, _, pair = _load_pair(args)
    alpha = _ints(args.alpha)
    if len(alpha) != pair.d:
        raise UsageError(f"--alpha needs {pair.d} integers, got {len(alpha)}")
    generic = is_generic(pair, alpha, args.flat_limit)
    arr = affine_offsets(pair, alpha)
    if args.json:
        out.write(canonical_json({"generic": generic, "offsets": list(arr.offsets)}))
        return 0
    out.write("GENERIC\n" if generic else "NOT GENERIC\n")
    out.write("offsets: " + " ".join(map(str, arr.offsets)) + "\n")
    return 0


def cmd_moment(args, out: TextIO) -> int:
    _, _, pair = _load_pair(args)
    ideal = hyp.moment_ideal(pair.A)
    if args.json:
        out.write(canonical_json([[[c, j] for c, j in p] for p in ideal.polynomials]))
    elif ideal.polynomials:
        out.write(ideal.text() + "\n")
    return 0


def _example_params(kind: str, params: Sequence[str]) -> list:
    if kind == "graph":
        edges = []
        for tok in params:
            parts = tok.replace(",", "-").split("-")
            if len(parts) != 2:
                raise UsageError(f"graph edges look like u-v, got {tok!r}")
            edges.append(tuple(_ints(" ".join(parts))))
        return edges
    return _ints(" ".join(params))


def cmd_example(args, out: TextIO) -> int:
    datum = hyp.generate_example(args.example_kind, _example_params(args.example_kind, args.params))
    text = format_matrix(datum.A, "A")
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror or exc}") from None
    else:
        out.write(text)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", choices=("A", "B"), default=None, help="override the file's declared kind")
    common.add_argument("--flat-limit", type=int, default=FLAT_LIMIT)
    common.add_argument("--iso-limit", type=int, default=ISO_LIMIT)
    common.add_argument("--json", action="store_true", help="canonical JSON output")

    p = argparse.ArgumentParser(prog="hypertoric", description="Combinatorial invariants of affine hypertoric varieties.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help: str):
        return sub.add_parser(name, parents=[common], help=help)

    s = add("validate", "check a matrix (or an A, B pair) against the Gale-pair invariants")
    s.add_argument("file")
    s.add_argument("dual", nargs="?", help="optional Gale-dual matrix to check the pair")
    add("gale", "print the Gale dual").add_argument("file")
    add("simplify", "parallel classes and the simplified B").add_argument("file")
    s = add("pi1", "fundamental group of the regular locus")
    s.add_argument("file")
    s.add_argument("--oracle", action="store_true", help="cross-check by enumerating Gamma")
    s.add_argument("--oracle-bound", type=int, default=ORACLE_BOUND)
    add("strata", "stratification by flats").add_argument("file")
    add("analyze", "full invariant report").add_argument("file")
    add("decompose", "loops and indecomposable blocks").add_argument("file")
    add("cover", "universal-cover datum and diagram check").add_argument("file")
    s = add("classify", "decide equivariant isomorphism of two data")
    s.add_argument("file")
    s.add_argument("other")
    s = add("generic", "genericity of a character alpha")
    s.add_argument("file")
    s.add_argument("--alpha", required=True, help="comma or space separated integers")
    add("moment", "moment-map ideal generators").add_argument("file")
    s = add("example", "generate a named example (atype L | minnilp S | omin L1 L2 .. | graph u-v ..)")
    s.add_argument("example_kind", choices=("atype", "minnilp", "omin", "graph"))
    s.add_argument("params", nargs="*")
    s.add_argument("-o", "--output")
    return p


def _diagnostic(exc: HypertoricError, as_json: bool) -> str:
    if not as_json:
        return f"error: {type(exc).__name__}: {exc}\n"
    obj = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NotUnimodular):
        obj["indices"] = list(exc.indices)
    if isinstance(exc, ZeroBRow):
        obj["rows"] = list(exc.rows)
    if isinstance(exc, ParseError):
        obj["line"], obj["column"] = exc.line, exc.column
    return canonical_json(obj)


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "validate": cmd_validate,
        "gale": cmd_gale,
        "simplify": cmd_simplify,
        "strata": cmd_strata,
        "analyze": cmd_analyze,
        "decompose": cmd_decompose,
        "cover": cmd_cover,
        "classify": cmd_classify,
        "generic": cmd_generic,
        "moment": cmd_moment,
        "example": cmd_example,
    }
    try:
        if args.command == "pi1":
            return cmd_pi1(args, out, err)
        return handlers[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except HypertoricError as exc:
        err.write(_diagnostic(exc, args.json))
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
