"""Vector matroids of integer matrices.

Ground elements are column indices ``0 .. n-1``. Ranks are exact (integer
echelon elimination); subsets are handled internally as bitmasks and exposed
as sorted tuples.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import GroundTooLarge
from .exact_linalg import EchelonBasis, IntMatrix

FLAT_LIMIT = 16
ISO_LIMIT = 12


@dataclass(frozen=True, order=True)
class Flat:
    rank: int
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)


def _mask(S: Iterable[int]) -> int:
    m = 0
    for i in S:
        m |= 1 << i
    return m


def _members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class VectorMatroid:
    """Matroid on the columns of an integer matrix."""

    def __init__(self, columns: IntMatrix):
        self.matrix = columns
        self.ground_size = columns.ncols
        self._cols = columns.columns()
        self._rank_cache: dict[int, int] = {0: 0}
        self._circuits: Optional[list[int]] = None
        self._flats: Optional[list[Flat]] = None

    def __repr__(self) -> str:
        return f"VectorMatroid(n={self.ground_size}, rank={self.rank})"

    def _check(self, S: Iterable[int]) -> int:
        m = 0
        for i in S:
            if not 0 <= i < self.ground_size:
                raise IndexError(f"element {i} outside ground set of size {self.ground_size}")
            m |= 1 << i
        return m

    def _limit(self, limit: int, what: str) -> None:
        if self.ground_size > limit:
            raise GroundTooLarge(
                f"{what} needs ground size <= {limit}, got {self.ground_size}"
            )

    def _span(self, mask: int) -> EchelonBasis:
        e = EchelonBasis()
        for i in _members(mask):
            e.add(self._cols[i])
        return e

    def _rank_mask(self, mask: int) -> int:
        r = self._rank_cache.get(mask)
        if r is None:
            r = len(self._span(mask))
            self._rank_cache[mask] = r
        return r

    def _closure_from_span(self, span: EchelonBasis, mask: int) -> int:
        out = mask
        for i in range(self.ground_size):
            if not (mask >> i) & 1 and span.contains(self._cols[i]):
                out |= 1 << i
        return out

    def _closure_mask(self, mask: int) -> int:
        return self._closure_from_span(self._span(mask), mask)

    # -- rank oracle -------------------------------------------------------

    @property
    def rank(self) -> int:
        return self._rank_mask((1 << self.ground_size) - 1)

    def rank_of(self, S: Iterable[int]) -> int:
        return self._rank_mask(self._check(S))

    def is_independent(self, S: Iterable[int]) -> bool:
        S = tuple(S)
        return self.rank_of(S) == len(set(S))

    def closure(self, S: Iterable[int]) -> tuple[int, ...]:
        return _members(self._closure_mask(self._check(S)))

    def loops(self) -> tuple[int, ...]:
        return tuple(j for j, c in enumerate(self._cols) if not any(c))

    def basis(self) -> tuple[int, ...]:
        """Greedy lexicographically first basis."""
        e = EchelonBasis()
        return tuple(j for j, c in enumerate(self._cols) if e.add(c))

    # -- enumeration ------------------------------------------------------

    def all_flats(self, limit: int = FLAT_LIMIT) -> list[Flat]:
        """Every flat with its rank, sorted by (rank, elements)."""
        self._limit(limit, "flat enumeration")
        if self._flats is None:
            n = self.ground_size
            full = (1 << n) - 1
            bottom = self._closure_mask(0)
            seen = {bottom: 0}
            level = [(bottom, EchelonBasis())]
            r = 0
            while level:
                nxt = []
                for F, span in level:
                    covered = F
                    while covered != full:
                        rest = full & ~covered
                        e = (rest & -rest).bit_length() - 1
                        span2 = span.copy()
                        span2.add(self._cols[e])
                        G = self._closure_from_span(span2, F | (1 << e))
                        covered |= G
                        if G not in seen:
                            seen[G] = r + 1
                            nxt.append((G, span2))
                level = nxt
                r += 1
            self._flats = sorted(Flat(rk, _members(m)) for m, rk in seen.items())
        return list(self._flats)

    def _circuit_masks(self) -> list[int]:
        if self._circuits is None:
            n = self.ground_size
            circuits = [1 << j for j, c in enumerate(self._cols) if not any(c)]
            # grow independent sets by increasing max element; a dependent
            # extension all of whose one-smaller subsets are independent is a circuit
            indep = {0: EchelonBasis()}
            level = {0: EchelonBasis()}
            while level:
                nxt = {}
                for m, span in level.items():
                    start = m.bit_length()
                    for e in range(start, n):
                        if not any(self._cols[e]):
                            continue
                        s2 = span.copy()
                        m2 = m | (1 << e)
                        if s2.add(self._cols[e]):
                            nxt[m2] = s2
                        elif all((m2 & ~(1 << i)) in indep for i in _members(m2)):
                            circuits.append(m2)
                indep.update(nxt)
                level = nxt
            self._circuits = sorted(circuits, key=lambda c: (bin(c).count("1"), _members(c)))
        return self._circuits

    def circuits(self, limit: int = FLAT_LIMIT) -> list[tuple[int, ...]]:
        """All minimal dependent sets, ordered by size then lexicographically."""
        self._limit(limit, "circuit enumeration")
        return [_members(c) for c in self._circuit_masks()]

    # -- structure --------------------------------------------------------

    def components(self) -> list[tuple[int, ...]]:
        """Connected components; loops are singleton classes.

        Union-find over the fundamental circuits of the greedy basis.
        """
        n = self.ground_size
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        B = self.basis()
        bmask = _mask(B)
        r = len(B)
        loops = set(self.loops())
        for e in range(n):
            if (bmask >> e) & 1 or e in loops:
                continue
            for b in B:
                if self._rank_mask((bmask & ~(1 << b)) | (1 << e)) == r:
                    parent[find(b)] = find(e)
        classes: dict[int, list[int]] = {}
        for e in range(n):
            classes.setdefault(find(e), []).append(e)
        return sorted(tuple(c) for c in classes.values())

    def is_uniform(self, limit: int = FLAT_LIMIT) -> bool:
        """True iff every subset of size <= rank is independent."""
        self._limit(limit, "uniformity test")
        r = self.rank
        return all(self._rank_mask(_mask(S)) == r for S in combinations(range(self.ground_size), r))

    # -- invariants used to prune isomorphism search -----------------------

    def _global_invariant(self) -> tuple:
        flats = self.all_flats(limit=self.ground_size)
        return (
            self.ground_size,
            self.rank,
            len(self.loops()),
            tuple(sorted(Counter(bin(c).count("1") for c in self._circuit_masks()).items())),
            tuple(sorted(Counter(f.rank for f in flats).items())),
        )

    def _element_signatures(self) -> list[tuple]:
        flats = self.all_flats(limit=self.ground_size)
        circ = self._circuit_masks()
        sigs = []
        for e in range(self.ground_size):
            sizes = sorted(bin(c).count("1") for c in circ if (c >> e) & 1)
            fl = Counter((f.rank, len(f)) for f in flats if e in f.elements)
            sigs.append((tuple(sizes), tuple(sorted(fl.items()))))
        return sigs


def is_isomorphic(M1: VectorMatroid, M2: VectorMatroid, limit: int = ISO_LIMIT) -> Optional[tuple[int, ...]]:
    """Lexicographically least ground-set bijection preserving all ranks.

    Returns ``perm`` with ``perm[i]`` the element of M2 matched to element i
    of M1, or None when the matroids are not isomorphic.
    """
    n = M1.ground_size
    if n != M2.ground_size:
        return None
    for M in (M1, M2):
        M._limit(limit, "isomorphism search")
    if M1.rank != M2.rank:
        return None
    if M1._global_invariant() != M2._global_invariant():
        return None
    sig1, sig2 = M1._element_signatures(), M2._element_signatures()
    if sorted(sig1) != sorted(sig2):
        return None
    cands = [[y for y in range(n) if sig2[y] == sig1[x]] for x in range(n)]

    c1 = set(M1._circuit_masks())
    c2 = set(M2._circuit_masks())
    by_max1: dict[int, list[int]] = {}
    for c in c1:
        by_max1.setdefault(c.bit_length() - 1, []).append(c)
    containing2: dict[int, list[int]] = {y: [c for c in c2 if (c >> y) & 1] for y in range(n)}

    perm = [-1] * n
    inv = [-1] * n

    def image(mask: int) -> int:
        return _mask(perm[i] for i in _members(mask))

    def preimage(mask: int) -> int:
        return _mask(inv[i] for i in _members(mask))

    def extend(x: int, used_mask: int) -> bool:
        if x == n:
            return True
        for y in cands[x]:
            if (used_mask >> y) & 1:
                continue
            perm[x], inv[y] = y, x
            new_used = used_mask | (1 << y)
            ok = all(image(c) in c2 for c in by_max1.get(x, ()))
            if ok:
                ok = all(
                    preimage(c) in c1
                    for c in containing2[y]
                    if c & ~new_used == 0
                )
            if ok and extend(x + 1, new_used):
                return True
            perm[x], inv[y] = -1, -1
        return False

    if extend(0, 0):
        return tuple(perm)
    return None
