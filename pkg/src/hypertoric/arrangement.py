"""Combinatorics of the central multi-arrangement given by the rows b_j of B."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NoIntegralSolution, NonUnitRatio, ZeroBRow
from .exact_linalg import EchelonBasis, IntMatrix, gcd_all, solve_integral
from .gale import GalePair
from .matroid import FLAT_LIMIT, Flat, VectorMatroid


@dataclass(frozen=True)
class ParallelData:
    """Partition of the rows of B into parallel classes F_1, ..., F_s.

    ``signs[j]`` is the sign with ``b_j = signs[j] * representatives[k]`` for
    ``j`` in class ``k``. Representatives have a positive first nonzero entry.
    """

    classes: tuple[tuple[int, ...], ...]
    multiplicities: tuple[int, ...]
    representatives: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return len(self.signs)

    def class_of(self) -> list[int]:
        """Class index of every row."""
        out = [0] * self.n
        for k, F in enumerate(self.classes):
            for j in F:
                out[j] = k
        return out


def _sign_normalize(v: Sequence[int]) -> tuple[tuple[int, ...], int]:
    for x in v:
        if x:
            sgn = 1 if x > 0 else -1
            return tuple(sgn * y for y in v), sgn
    raise ValueError("zero vector has no sign")


def parallel_classes(B: IntMatrix) -> ParallelData:
    groups: dict[tuple[int, ...], list[int]] = {}
    order: list[tuple[int, ...]] = []
    for j, row in enumerate(B.rows):
        if not any(row):
            raise ZeroBRow(f"row {j} of B is zero", (j,))
        g = gcd_all(row)
        direction, _ = _sign_normalize([x // g for x in row])
        if direction not in groups:
            groups[direction] = []
            order.append(direction)
        groups[direction].append(j)

    classes, reps = [], []
    signs = [0] * B.nrows
    for direction in order:
        members = groups[direction]
        rep, _ = _sign_normalize(B.row(members[0]))
        for j in members:
            row = B.row(j)
            if row == rep:
                signs[j] = 1
            elif all(a == -b for a, b in zip(row, rep)):
                signs[j] = -1
            else:
                raise NonUnitRatio(
                    f"rows {members[0]} and {j} of B are proportional with ratio other than +-1"
                )
        classes.append(tuple(members))
        reps.append(rep)
    return ParallelData(
        classes=tuple(classes),
        multiplicities=tuple(len(c) for c in classes),
        representatives=tuple(reps),
        signs=tuple(signs),
    )


def simplify(B: IntMatrix) -> tuple[IntMatrix, ParallelData]:
    """One sign-normalized representative row per parallel class."""
    data = parallel_classes(B)
    return IntMatrix(data.representatives, ncols=B.ncols), data


def is_simple(B: IntMatrix) -> bool:
    return all(l == 1 for l in parallel_classes(B).multiplicities)


@dataclass(frozen=True)
class StratumInfo:
    flat: Flat
    stratum_dim: int
    multiplicated: bool
    slice_note: Optional[str] = None


def arrangement_matroid(pair: GalePair) -> VectorMatroid:
    """M(B^T): ground set = hyperplanes = rows of B."""
    return VectorMatroid(pair.B.T)


def strata(pair: GalePair, flat_limit: int = FLAT_LIMIT) -> list[StratumInfo]:
    k = pair.B.ncols
    out = []
    for F in arrangement_matroid(pair).all_flats(limit=flat_limit):
        mult = len(F) >= F.rank + 1
        note = None
        if F.rank == 1:
            note = f"A_{len(F) - 1} surface slice" if mult else "smooth slice"
        out.append(StratumInfo(F, 2 * (k - F.rank), mult, note))
    return out


def sing_codim(pair: GalePair, flat_limit: int = FLAT_LIMIT) -> Optional[int]:
    """Codimension of the singular locus, or None when smooth."""
    ranks = [s.flat.rank for s in strata(pair, flat_limit) if s.multiplicated]
    return 2 * min(ranks) if ranks else None


def isolated_from_strata(rows: list[StratumInfo], n: int) -> bool:
    """Only the flat [n] may be multiplicated."""
    return all(len(s.flat) == s.flat.rank for s in rows if len(s.flat) != n)


def has_isolated_singularities(pair: GalePair, flat_limit: int = FLAT_LIMIT) -> bool:
    return isolated_from_strata(strata(pair, flat_limit), pair.n)


@dataclass(frozen=True)
class AffineArrangement:
    """Hyperplanes H_i : <b_i, x> = -offsets[i]."""

    B: IntMatrix
    offsets: tuple[int, ...]

    def hyperplanes(self) -> list[tuple[tuple[int, ...], int]]:
        return [(self.B.row(i), -self.offsets[i]) for i in range(self.B.nrows)]


def affine_offsets(pair: GalePair, alpha: Sequence[int]) -> AffineArrangement:
    """Arrangement for the character alpha, using a lift with A lift = alpha.

    The lift is a witness: another lift translates the arrangement.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != pair.d:
        raise ValueError(f"alpha has length {len(alpha)}, expected d = {pair.d}")
    if not any(alpha):
        return AffineArrangement(pair.B, (0,) * pair.n)
    lift = solve_integral(pair.A, alpha)
    if lift is None:
        raise NoIntegralSolution(f"no integral lift of alpha={list(alpha)}; A is not surjective")
    return AffineArrangement(pair.B, lift)


def is_generic(pair: GalePair, alpha: Sequence[int], flat_limit: int = FLAT_LIMIT) -> bool:
    """alpha avoids the span of every proper flat of M(A)."""
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != pair.d:
        raise ValueError(f"alpha has length {len(alpha)}, expected d = {pair.d}")
    d = pair.d
    M = VectorMatroid(pair.A)
    cols = pair.A.columns()
    for F in M.all_flats(limit=flat_limit):
        if F.rank != d - 1:
            continue
        span = EchelonBasis()
        for j in F.elements:
            span.add(cols[j])
        if span.contains(alpha):
            return False
    return True
