"""Deterministic test corpus of valid Gale pairs.

Graphic data come from random bridgeless multigraphs (a Hamiltonian cycle
plus extra edges, sometimes parallel, sometimes a self-loop), so every B row
is nonzero. Multiplicity inflation duplicates rows of B, up to sign.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .analysis import atype_A, graph_A, minnilp_A, omin_B
from .exact_linalg import IntMatrix
from .gale import GalePair, gale_dual_of_A, gale_dual_of_B

MAX_N = 10


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    pair: GalePair

    @property
    def A(self) -> IntMatrix:
        return self.pair.A

    @property
    def B(self) -> IntMatrix:
        return self.pair.B


def random_bridgeless_graph(rng: random.Random, max_edges: int = MAX_N) -> list[tuple[int, int]]:
    nv = rng.randint(2, max(2, min(6, max_edges // 2 + 1)))
    perm = list(range(nv))
    rng.shuffle(perm)
    edges = [(perm[i], perm[(i + 1) % nv]) for i in range(nv)]
    if nv == 2:
        edges = [(perm[0], perm[1]), (perm[1], perm[0])]
    extra = rng.randint(0, max_edges - len(edges))
    for _ in range(extra):
        if rng.random() < 0.1:
            v = rng.randrange(nv)
            edges.append((v, v))
        else:
            u, v = rng.sample(range(nv), 2)
            edges.append((u, v))
    rng.shuffle(edges)
    return edges


def inflate(B: IntMatrix, rng: random.Random, max_rows: int = MAX_N) -> Optional[IntMatrix]:
    """Append copies (with random signs) of random rows of B."""
    room = max_rows - B.nrows
    if room <= 0:
        return None
    rows = [list(r) for r in B.rows]
    for _ in range(rng.randint(1, min(room, 3))):
        j = rng.randrange(B.nrows)
        sgn = rng.choice((1, -1))
        rows.insert(rng.randrange(len(rows) + 1), [sgn * x for x in B.row(j)])
    return IntMatrix(rows, ncols=B.ncols)


def block_sum(A1: IntMatrix, A2: IntMatrix) -> IntMatrix:
    rows = [list(r) + [0] * A2.ncols for r in A1.rows]
    rows += [[0] * A1.ncols + list(r) for r in A2.rows]
    return IntMatrix(rows, ncols=A1.ncols + A2.ncols)


def named_entries() -> list[CorpusEntry]:
    out = []
    for ell in range(2, 7):
        out.append(CorpusEntry(f"atype{ell}", gale_dual_of_A(atype_A(ell))))
    for s in range(2, 6):
        out.append(CorpusEntry(f"minnilp{s}", gale_dual_of_A(minnilp_A(s))))
    for ells in ((1, 1, 1), (2, 2, 2), (2, 2, 3), (1, 2, 3), (2, 3, 4), (1, 1, 2, 2), (3, 3, 3)):
        name = "omin" + "".join(map(str, ells))
        out.append(CorpusEntry(name, gale_dual_of_B(omin_B(ells))))
    out.append(CorpusEntry("two_a1", gale_dual_of_A(IntMatrix([[1, -1, 0, 0], [0, 0, 1, -1]]))))
    out.append(CorpusEntry("loop_plus_minnilp3", gale_dual_of_A(IntMatrix([[0, 1, 1, 1]]))))
    return out


def build_corpus(seed: int = 20240611, size: int = 120) -> list[CorpusEntry]:
    rng = random.Random(seed)
    entries = named_entries()
    k = 0
    while len(entries) < size:
        k += 1
        roll = rng.random()
        edges = random_bridgeless_graph(rng)
        A = graph_A(edges)
        pair = gale_dual_of_A(A)
        if roll < 0.55:
            entries.append(CorpusEntry(f"graph{k}", pair))
        elif roll < 0.85:
            B2 = inflate(pair.B, rng)
            if B2 is None:
                entries.append(CorpusEntry(f"graph{k}", pair))
            else:
                entries.append(CorpusEntry(f"inflated{k}", gale_dual_of_B(B2)))
        else:
            edges2 = random_bridgeless_graph(rng, max_edges=max(2, MAX_N - A.ncols))
            A2 = graph_A(edges2)
            if A.ncols + A2.ncols > MAX_N:
                entries.append(CorpusEntry(f"graph{k}", pair))
            else:
                entries.append(CorpusEntry(f"sum{k}", gale_dual_of_A(block_sum(A, A2))))
    return entries


_CACHE: dict[tuple[int, int], list[CorpusEntry]] = {}


def corpus(seed: int = 20240611, size: int = 120) -> list[CorpusEntry]:
    key = (seed, size)
    if key not in _CACHE:
        _CACHE[key] = build_corpus(seed, size)
    return list(_CACHE[key])
