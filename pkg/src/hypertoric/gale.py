"""Gale-dual pairs (A, B) with 0 -> Z^(n-d) --B--> Z^n --A--> Z^d -> 0 exact."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSurjective, NotUnimodular, RankDeficient, ZeroBRow
from .exact_linalg import (
    IntMatrix,
    cokernel,
    kernel_basis,
    nonunimodular_witness,
    rank,
    row_hnf,
    smith_diagonal,
)


@dataclass(frozen=True)
class GalePair:
    """A (d x n) and B (n x (n-d)) forming a short exact sequence.

    Only the constructors below produce validated pairs; building one by hand
    and passing it to ``verify_gale_pair`` is how corrupted data gets
    diagnosed.
    """

    A: IntMatrix
    B: IntMatrix

    @property
    def n(self) -> int:
        return self.A.ncols

    @property
    def d(self) -> int:
        return self.A.nrows

    @property
    def smooth(self) -> bool:
        """d = 0, i.e. B is unimodularly the identity and Y is C^2n."""
        return self.d == 0


def canonical_A(A: IntMatrix) -> IntMatrix:
    """Row-lattice HNF of a full-row-rank A; fixed representative of GL_d(Z) A."""
    return row_hnf(A)


def zero_rows(B: IntMatrix) -> tuple[int, ...]:
    return tuple(i for i, r in enumerate(B.rows) if not any(r))


def _describe_witness(label: str, witness) -> str:
    kind, idx = witness
    if kind == "rank":
        return f"{label} does not have full rank"
    return f"{label} has maximal minor with |det| > 1 on indices {list(idx)}"


def _check_no_zero_rows(B: IntMatrix) -> None:
    zr = zero_rows(B)
    if zr:
        raise ZeroBRow(f"b_j = 0 for rows {list(zr)} (every b_j must be nonzero)", zr)


def gale_dual_of_A(A: IntMatrix) -> GalePair:
    """Validate A and attach its canonical saturated kernel basis B."""
    if rank(A) != A.nrows:
        raise RankDeficient(f"A has rank {rank(A)} but {A.nrows} rows")
    if not cokernel(A).is_trivial():
        raise NotSurjective(f"A is not surjective onto Z^{A.nrows}: cokernel {cokernel(A)}")
    w = nonunimodular_witness(A)
    if w is not None:
        raise NotUnimodular(_describe_witness("A", w), w[1])
    B = kernel_basis(A)
    _check_no_zero_rows(B)
    return GalePair(A, B)


def gale_dual_of_B(B: IntMatrix) -> GalePair:
    """Validate B and attach its canonical Gale dual A (loops allowed in A)."""
    if rank(B) != B.ncols:
        raise RankDeficient(f"B has rank {rank(B)} but {B.ncols} columns")
    _check_no_zero_rows(B)
    w = nonunimodular_witness(B.T)
    if w is not None:
        raise NotUnimodular(_describe_witness("B^T", w), w[1])
    K = kernel_basis(B.T)
    A = K.T if K.ncols else IntMatrix.zeros(0, B.nrows)
    return GalePair(canonical_A(A) if A.nrows else A, B)


def verify_gale_pair(A: IntMatrix, B: IntMatrix) -> list[str]:
    """Codes of every violated GalePair invariant; empty for a valid pair."""
    n = A.ncols
    if B.nrows != n or B.ncols != n - A.nrows:
        return ["ShapeMismatch"]
    out = []
    if not (A @ B).is_zero():
        out.append("NotComplex")
    if rank(A) != A.nrows:
        out.append("RankDeficientA")
    if rank(B) != B.ncols:
        out.append("RankDeficientB")
    if not cokernel(A).is_trivial():
        out.append("NotSurjective")
    if any(x != 1 for x in smith_diagonal(B)):
        out.append("NotSaturated")
    if nonunimodular_witness(A) is not None:
        out.append("NotUnimodular")
    if zero_rows(B):
        out.append("ZeroBRow")
    return out


DIAGNOSTIC_TEXT = {
    "ShapeMismatch": "A is d x n but B is not n x (n-d)",
    "NotComplex": "A @ B is not zero",
    "RankDeficientA": "A does not have full row rank",
    "RankDeficientB": "B does not have full column rank",
    "NotSurjective": "A is not surjective onto Z^d",
    "NotSaturated": "columns of B do not span a saturated lattice",
    "NotUnimodular": "A has a maximal minor outside {-1, 0, 1}",
    "ZeroBRow": "some row b_j of B is zero",
}


def essentialize(B: IntMatrix) -> tuple[IntMatrix, tuple[int, ...]]:
    """Drop zero rows of B; returns (B', removed row indices)."""
    removed = zero_rows(B)
    keep = [i for i in range(B.nrows) if i not in removed]
    return B.select_rows(keep), removed
