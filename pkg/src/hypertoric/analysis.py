"""High-level invariants of the affine hypertoric variety Y_A(0)."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .arrangement import (
    ParallelData,
    isolated_from_strata,
    parallel_classes,
    simplify,
    strata,
)
from .errors import BadParams
from .exact_linalg import AbelianGroup, IntMatrix, cokernel, rank, solve_integral
from .fungroup import pi1
from .gale import GalePair, gale_dual_of_A, gale_dual_of_B
from .matroid import FLAT_LIMIT, ISO_LIMIT, VectorMatroid, is_isomorphic


@dataclass(frozen=True)
class HypertoricDatum:
    pair: GalePair
    parallel: ParallelData

    @classmethod
    def from_A(cls, A: IntMatrix) -> "HypertoricDatum":
        pair = gale_dual_of_A(A)
        return cls(pair, parallel_classes(pair.B))

    @classmethod
    def from_B(cls, B: IntMatrix) -> "HypertoricDatum":
        pair = gale_dual_of_B(B)
        return cls(pair, parallel_classes(pair.B))

    @property
    def A(self) -> IntMatrix:
        return self.pair.A

    @property
    def B(self) -> IntMatrix:
        return self.pair.B


@dataclass(frozen=True)
class Block:
    columns: tuple[int, ...]
    n: int
    d: int


@dataclass(frozen=True)
class DecompositionReport:
    p: int
    loops: tuple[int, ...]
    blocks: tuple[Block, ...]

    @property
    def r(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class UniversalCoverDatum:
    A_under: IntMatrix
    B_bar: IntMatrix
    multiplicities: tuple[int, ...]
    deck: AbelianGroup
    gamma_order: int


@dataclass(frozen=True)
class MomentIdeal:
    """Row i is the polynomial sum_j a_ij z_j w_j, stored as (a_ij, j) terms."""

    polynomials: tuple[tuple[tuple[int, int], ...], ...]

    def text(self) -> str:
        return "\n".join(_render_poly(p) for p in self.polynomials)


def _render_poly(terms: Sequence[tuple[int, int]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (c, j) in enumerate(terms):
        mono = f"z{j + 1}*w{j + 1}"
        sign = "-" if c < 0 else "+"
        body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


@dataclass(frozen=True)
class AnalysisReport:
    matrix: IntMatrix
    kind: str
    n: int
    d: int
    dim: int
    smooth: bool
    simple: bool
    sing_codim: Optional[int]
    isolated: bool
    pi1: AbelianGroup
    decomposition: DecompositionReport
    irreducible: bool
    two_form_dim: int
    cover: UniversalCoverDatum
    strata_summary: dict[int, int] = field(default_factory=dict)


# ---------------------------------------------------------------------------


def decompose(A: IntMatrix) -> DecompositionReport:
    """Loops plus connected components of M(A), blocks ordered by least column."""
    M = VectorMatroid(A)
    loops = M.loops()
    blocks = []
    for comp in M.components():
        if len(comp) == 1 and comp[0] in loops:
            continue
        blocks.append(Block(comp, len(comp), rank(A.select_columns(comp))))
    return DecompositionReport(len(loops), loops, tuple(blocks))


def _irreducible(dec: DecompositionReport) -> bool:
    # a single C^2 factor (the 0 x 1 datum) counts as irreducible
    return (dec.p, dec.r) in ((0, 1), (1, 0))


def is_irreducible(A: IntMatrix) -> bool:
    return _irreducible(decompose(A))


def _two_form_dim(dec: DecompositionReport) -> int:
    # constant 2-forms on C^2p all have weight 2, one form per block
    return dec.p * (2 * dec.p - 1) + dec.r


def two_form_dim(A: IntMatrix) -> int:
    return _two_form_dim(decompose(A))


def universal_cover(A: IntMatrix) -> UniversalCoverDatum:
    pair = gale_dual_of_A(A)
    return _cover(pair)


def _cover(pair: GalePair) -> UniversalCoverDatum:
    B_bar, data = simplify(pair.B)
    A_under = gale_dual_of_B(B_bar).A
    return UniversalCoverDatum(
        A_under=A_under,
        B_bar=B_bar,
        multiplicities=data.multiplicities,
        deck=pi1(pair),
        gamma_order=math.prod(data.multiplicities),
    )


def signed_block_matrix(data: ParallelData) -> IntMatrix:
    """B_0 : Z^s -> Z^n, e_k -> sum over F_k of signs[j] e_j."""
    cls = data.class_of()
    return IntMatrix(
        ([data.signs[j] if cls[j] == k else 0 for k in range(data.s)] for j in range(data.n)),
        ncols=data.s,
    )


def simplification_diagram_diagnostics(
    A: IntMatrix,
    B: IntMatrix,
    B_bar: IntMatrix,
    data: ParallelData,
    A_under: IntMatrix,
) -> list[str]:
    """Problems found while building the map of exact sequences

        0 -> Z^(n-d) --B_bar--> Z^s --A_under--> Z^(d-(n-s)) -> 0
                |                |B_0              |i
        0 -> Z^(n-d) ----B----> Z^n -----A-----> Z^d -> 0

    Empty means every square commutes and both vertical maps are saturated
    injections with free cokernel of rank n - s.
    """
    issues = []
    n, s = A.ncols, data.s
    if data.n != n or B.nrows != n or B_bar.nrows != s or A_under.ncols != s:
        return ["shape mismatch between A, B, B_bar, A_under and the parallel data"]
    B0 = signed_block_matrix(data)
    if B0 @ B_bar != B:
        issues.append("B_0 @ B_bar != B")
    if not (A_under @ B_bar).is_zero():
        issues.append("A_under @ B_bar != 0")
    if rank(B0) != s or any(sum(abs(x) for x in B0.row(j)) != 1 for j in range(n)):
        issues.append("B_0 is not a saturated injection")
    k = A_under.nrows
    preimages = []
    for r in range(k):
        x = solve_integral(A_under, [int(i == r) for i in range(k)])
        if x is None:
            issues.append(f"A_under is not surjective (no preimage of e_{r})")
            return issues
        preimages.append(x)
    AB0 = A @ B0
    i_map = IntMatrix.from_columns([AB0.apply(x) for x in preimages], A.nrows)
    if i_map @ A_under != AB0:
        issues.append("i @ A_under != A @ B_0")
    if rank(i_map) != k:
        issues.append("i is not injective")
    coker = cokernel(i_map)
    if coker.torsion or coker.free_rank != n - s:
        issues.append(f"coker(i) = {coker}, expected free of rank {n - s}")
    return issues


def verify_simplification_diagram(A: IntMatrix) -> bool:
    pair = gale_dual_of_A(A)
    B_bar, data = simplify(pair.B)
    A_under = gale_dual_of_B(B_bar).A
    return not simplification_diagram_diagnostics(A, pair.B, B_bar, data, A_under)


def moment_ideal(A: IntMatrix) -> MomentIdeal:
    return MomentIdeal(
        tuple(tuple((c, j) for j, c in enumerate(row) if c) for row in A.rows)
    )


def classify_equal(A: IntMatrix, A2: IntMatrix, iso_limit: int = ISO_LIMIT) -> Optional[tuple[int, ...]]:
    """Matroid-isomorphism witness between M(A) and M(A2), or None."""
    if A.ncols != A2.ncols:
        return None
    gale_dual_of_A(A)
    gale_dual_of_A(A2)
    return is_isomorphic(VectorMatroid(A), VectorMatroid(A2), limit=iso_limit)


# ---------------------------------------------------------------------------


def analyze(matrix: IntMatrix, kind: str = "A", flat_limit: int = FLAT_LIMIT) -> AnalysisReport:
    if kind == "A":
        pair = gale_dual_of_A(matrix)
    elif kind == "B":
        pair = gale_dual_of_B(matrix)
    else:
        raise ValueError(f"kind must be 'A' or 'B', got {kind!r}")
    A = pair.A
    st = strata(pair, flat_limit)
    mult_ranks = [x.flat.rank for x in st if x.multiplicated]
    cover = _cover(pair)
    dec = decompose(A)
    return AnalysisReport(
        matrix=matrix,
        kind=kind,
        n=pair.n,
        d=pair.d,
        dim=2 * (pair.n - pair.d),
        smooth=pair.d == 0,
        simple=all(l == 1 for l in cover.multiplicities),
        sing_codim=2 * min(mult_ranks) if mult_ranks else None,
        isolated=isolated_from_strata(st, pair.n),
        pi1=cover.deck,
        decomposition=dec,
        irreducible=_irreducible(dec),
        two_form_dim=_two_form_dim(dec),
        cover=cover,
        strata_summary=dict(sorted(Counter(x.stratum_dim for x in st).items())),
    )


# ---------------------------------------------------------------------------
# generators


def atype_A(ell: int) -> IntMatrix:
    """[I_(l-1) | -1]."""
    return IntMatrix(
        ([int(i == j) for j in range(ell - 1)] + [-1] for i in range(ell - 1)), ncols=ell
    )


def minnilp_A(s: int) -> IntMatrix:
    return IntMatrix([[1] * s])


def omin_B(ells: Sequence[int]) -> IntMatrix:
    """Rows e_k repeated l_k times for k < s, then (-1, ..., -1) repeated l_s times."""
    s = len(ells)
    rows = []
    for k, l in enumerate(ells):
        row = [-1] * (s - 1) if k == s - 1 else [int(i == k) for i in range(s - 1)]
        rows.extend([row] * l)
    return IntMatrix(rows, ncols=s - 1)


def graph_A(edges: Sequence[tuple[int, int]], nvertices: Optional[int] = None) -> IntMatrix:
    """Signed incidence matrix with the last vertex row removed."""
    if nvertices is None:
        nvertices = 1 + max((max(e) for e in edges), default=-1)
    adj: dict[int, set[int]] = {v: set() for v in range(nvertices)}
    for u, v in edges:
        if not (0 <= u < nvertices and 0 <= v < nvertices):
            raise BadParams(f"edge ({u}, {v}) references a missing vertex")
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != nvertices:
        raise BadParams("graph must be connected")
    cols = []
    for u, v in edges:
        col = [0] * nvertices
        if u != v:
            col[u] += 1
            col[v] -= 1
        cols.append(col[:-1])
    return IntMatrix.from_columns(cols, nvertices - 1)


def generate_example(kind: str, params: Sequence) -> HypertoricDatum:
    """kind in {atype, minnilp, omin, graph}; params as documented per kind.

    atype: [l]; minnilp: [s]; omin: [l_1, ..., l_s]; graph: list of (u, v) edges.
    """
    try:
        if kind == "atype":
            (ell,) = params
            if int(ell) < 1:
                raise BadParams("atype needs l >= 1")
            return HypertoricDatum.from_A(atype_A(int(ell)))
        if kind == "minnilp":
            (s,) = params
            if int(s) < 2:
                raise BadParams("minnilp needs s >= 2")
            return HypertoricDatum.from_A(minnilp_A(int(s)))
        if kind == "omin":
            ells = [int(x) for x in params]
            if len(ells) < 2 or min(ells) < 1:
                raise BadParams("omin needs at least two multiplicities, all >= 1")
            return HypertoricDatum.from_B(omin_B(ells))
        if kind == "graph":
            edges = [(int(u), int(v)) for u, v in params]
            if not edges:
                raise BadParams("graph needs at least one edge")
            return HypertoricDatum.from_A(graph_A(edges))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, BadParams):
            raise
        raise BadParams(f"bad parameters for {kind}: {exc}") from exc
    raise BadParams(f"unknown example kind {kind!r}")
