"""Exact integer matrix algebra.

Everything here works on Python ints, so entries never overflow. The normal
forms follow fixed conventions so that repeated runs produce identical
matrices:

* ``hnf_column`` returns the column-style Hermite form ``H = M @ U``: pivot
  rows strictly increase, pivots are positive, everything right of a pivot in
  its row is zero and everything left of it lies in ``[0, pivot)``. Zero
  columns come last.
* ``snf`` returns ``S = P @ M @ Q`` with a nonnegative diagonal that forms a
  divisibility chain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Optional, Sequence


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Iterable[Iterable[int]] = (), ncols: Optional[int] = None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise ValueError(f"row {i} has length {len(row)}, expected {ncols}")
        if ncols < 0:
            raise ValueError("negative column count")
        self.nrows = len(data)
        self.ncols = ncols
        self._rows = data

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(([0] * ncols for _ in range(nrows)), ncols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> "IntMatrix":
        return cls((tuple(c[i] for c in columns) for i in range(nrows)), ncols=len(columns))

    @classmethod
    def diag(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls(([entries[i] if i == j else 0 for j in range(n)] for i in range(n)), ncols=n)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    # -- algebra ----------------------------------------------------------

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(([r[j] for r in self._rows] for j in range(self.ncols)), ncols=self.nrows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix(
            ([sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows),
            ncols=other.ncols,
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._rows)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(([-x for x in r] for r in self._rows), ncols=self.ncols)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(([k * x for x in r] for r in self._rows), ncols=self.ncols)

    def select_columns(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(([r[j] for j in idx] for r in self._rows), ncols=len(idx))

    def select_rows(self, idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix((self._rows[i] for i in idx), ncols=self.ncols)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("hstack needs equal row counts")
        return IntMatrix((a + b for a, b in zip(self._rows, other._rows)),
                         ncols=self.ncols + other.ncols)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, ncols={self.ncols})"

    def __str__(self) -> str:
        if not self.nrows:
            return f"<empty 0x{self.ncols}>"
        width = max(len(str(x)) for r in self._rows for x in r) if self.ncols else 0
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self._rows)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum of Z/t_i.

    ``torsion`` holds the invariant factors, each at least 2, in a
    divisibility chain. Factors equal to 1 are never stored.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        t = tuple(int(x) for x in self.torsion)
        if any(x < 2 for x in t):
            raise ValueError(f"invariant factors must be >= 2, got {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain, got {t}")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_diagonal(cls, diagonal: Iterable[int], ngens: int) -> "AbelianGroup":
        """Group Z^ngens / diag(diagonal) for a Smith-form diagonal."""
        diagonal = [abs(x) for x in diagonal]
        nonzero = [x for x in diagonal if x]
        return cls(free_rank=ngens - len(nonzero), torsion=tuple(x for x in nonzero if x > 1))

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> Optional[int]:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        return math.prod(self.torsion)

    def exponent(self) -> Optional[int]:
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank:
            parts.insert(0, "Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# elimination helpers


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _reduce_against(v: list[int], basis: list[tuple[int, list[int]]]) -> list[int]:
    # Fraction-free elimination; basis vectors were themselves reduced in
    # insertion order, so earlier pivots stay zero.
    for p, b in basis:
        vp = v[p]
        if vp:
            bp = b[p]
            v = [bp * x - vp * y for x, y in zip(v, b)]
            g = math.gcd(*v)
            if g > 1:
                v = [x // g for x in v]
    return v


class EchelonBasis:
    """Incrementally grown basis of a Q-subspace, kept in integer echelon form."""

    __slots__ = ("_basis",)

    def __init__(self):
        self._basis: list[tuple[int, list[int]]] = []

    def __len__(self) -> int:
        return len(self._basis)

    def copy(self) -> "EchelonBasis":
        e = EchelonBasis()
        e._basis = list(self._basis)
        return e

    def contains(self, v: Sequence[int]) -> bool:
        return not any(_reduce_against(list(v), self._basis))

    def add(self, v: Sequence[int]) -> bool:
        """Add v; return True when it was independent of the current span."""
        r = _reduce_against(list(v), self._basis)
        for p, x in enumerate(r):
            if x:
                self._basis.append((p, r))
                return True
        return False


def rank(M: IntMatrix) -> int:
    """Rank over Q."""
    if M.nrows > M.ncols:
        vecs = M.rows
    else:
        vecs = M.columns()
    e = EchelonBasis()
    for v in vecs:
        e.add(v)
    return len(e)


def determinant(M: IntMatrix) -> int:
    """Bareiss fraction-free determinant."""
    n = M.nrows
    if n != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = M.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# normal forms


def _col_op(mats: list[list[list[int]]], k: int, j: int, x: int, y: int, u: int, v: int) -> None:
    # (col_k, col_j) <- (x*col_k + y*col_j, u*col_k + v*col_j)
    for m in mats:
        for row in m:
            ck, cj = row[k], row[j]
            row[k] = x * ck + y * cj
            row[j] = u * ck + v * cj


def hnf_column(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite normal form: returns (H, U) with M @ U == H."""
    rows, cols = M.shape
    h = M.tolist()
    u = IntMatrix.identity(cols).tolist()
    k = 0
    for i in range(rows):
        if k == cols:
            break
        for j in range(k + 1, cols):
            b = h[i][j]
            if not b:
                continue
            a = h[i][k]
            g, x, y = xgcd(a, b)
            _col_op([h, u], k, j, x, y, -b // g, a // g)
        p = h[i][k]
        if not p:
            continue
        if p < 0:
            for m in (h, u):
                for row in m:
                    row[k] = -row[k]
            p = -p
        for j in range(k):
            q = h[i][j] // p
            if q:
                for m in (h, u):
                    for row in m:
                        row[j] -= q * row[k]
        k += 1
    return IntMatrix(h, ncols=cols), IntMatrix(u, ncols=cols)


def hnf_lattice_basis(M: IntMatrix) -> IntMatrix:
    """Canonical basis (nonzero HNF columns) of the lattice spanned by M's columns."""
    H, _ = hnf_column(M)
    nz = [j for j in range(H.ncols) if any(H.col(j))]
    return H.select_columns(nz)


def row_hnf(A: IntMatrix) -> IntMatrix:
    """Canonical generators of A's row lattice, as rows."""
    return hnf_lattice_basis(A.T).T if A.ncols else A


def snf(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns (S, P, Q) with P @ M @ Q == S."""
    r, c = M.shape
    s = M.tolist()
    p = IntMatrix.identity(r).tolist()
    q = IntMatrix.identity(c).tolist()

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            for m in (s, p):
                m[i], m[j] = m[j], m[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for m in (s, q):
                for row in m:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, k: int) -> None:
        for m in (s, p):
            rs, rd = m[src], m[dst]
            for j in range(len(rd)):
                rd[j] += k * rs[j]

    def add_col(dst: int, src: int, k: int) -> None:
        for m in (s, q):
            for row in m:
                row[dst] += k * row[src]

    for t in range(min(r, c)):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = s[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            clean = True
            piv = s[t][t]
            for i in range(t + 1, r):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // piv))
                    if s[i][t]:
                        clean = False
            for j in range(t + 1, c):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // piv))
                    if s[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row/column t onto the pivot
                cands = [(abs(s[i][t]), i, t) for i in range(t, r) if s[i][t]]
                cands += [(abs(s[t][j]), t, j) for j in range(t + 1, c) if s[t][j]]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if s[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if s[t][t] < 0:
            for m in (s, p):
                m[t] = [-x for x in m[t]]
    return IntMatrix(s, ncols=c), IntMatrix(p, ncols=r), IntMatrix(q, ncols=c)


def smith_diagonal(M: IntMatrix) -> list[int]:
    S, _, _ = snf(M)
    return [S[i, i] for i in range(min(S.shape))]


# ---------------------------------------------------------------------------
# derived operations


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Saturated basis of {x in Z^cols : M x = 0}, in canonical HNF."""
    H, U = hnf_column(M)
    r = sum(1 for j in range(H.ncols) if any(H.col(j)))
    K = U.select_columns(range(r, M.ncols))
    if K.ncols == 0:
        return K
    H2, _ = hnf_column(K)
    return H2


def is_unimodular(M: IntMatrix) -> bool:
    """Full rank and every maximal minor in {-1, 0, 1}."""
    return nonunimodular_witness(M) is None


def nonunimodular_witness(M: IntMatrix) -> Optional[tuple[str, tuple[int, ...]]]:
    """None if M is unimodular, else ("rank", ()) or ("minor", index set)."""
    k = min(M.shape)
    if rank(M) != k:
        return ("rank", ())
    if M.nrows <= M.ncols:
        for J in combinations(range(M.ncols), k):
            if abs(determinant(M.select_columns(J))) > 1:
                return ("minor", J)
    else:
        for I in combinations(range(M.nrows), k):
            if abs(determinant(M.select_rows(I))) > 1:
                return ("minor", I)
    return None


def solve_integral(M: IntMatrix, v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Some integer x with M x = v, or None when no integral solution exists."""
    if len(v) != M.nrows:
        raise ValueError(f"right-hand side has length {len(v)}, expected {M.nrows}")
    S, P, Q = snf(M)
    pv = P.apply(v)
    y = [0] * M.ncols
    for i in range(M.nrows):
        d = S[i, i] if i < M.ncols else 0
        if d:
            qt, rem = divmod(pv[i], d)
            if rem:
                return None
            y[i] = qt
        elif pv[i]:
            return None
    return Q.apply(y)


def cokernel(M: IntMatrix) -> AbelianGroup:
    """Z^rows / (column span of M) in invariant factors."""
    return AbelianGroup.from_diagonal(smith_diagonal(M), M.nrows)


def gcd_all(xs: Iterable[int]) -> int:
    return reduce(math.gcd, xs, 0)
