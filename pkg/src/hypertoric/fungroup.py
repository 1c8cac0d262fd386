"""Fundamental group of the regular locus of Y_A(0).

With parallel classes of sizes l_1, ..., l_s and Gamma = prod Z/l_k, the
group is Gamma modulo the image of ker(B~^T), where column k of B~^T is
m_k * b^(k) and m_k = prod_{i != k} l_i. ``pi1`` presents it as the cokernel
of ``[diag(l) | ker B~^T]``; ``pi1_oracle`` enumerates Gamma instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .arrangement import ParallelData, simplify
from .errors import OracleBoundExceeded
from .exact_linalg import AbelianGroup, IntMatrix, cokernel, hnf_lattice_basis, kernel_basis
from .gale import GalePair

ORACLE_BOUND = 10**5


@dataclass(frozen=True)
class BTilde:
    matrix: IntMatrix  # (n-d) x s
    m: tuple[int, ...]
    L: int


def b_tilde(data: ParallelData) -> BTilde:
    ells = data.multiplicities
    L = math.prod(ells)
    m = tuple(L // l for l in ells)
    cols = [tuple(mk * x for x in rep) for mk, rep in zip(m, data.representatives)]
    k = len(data.representatives[0]) if data.representatives else 0
    return BTilde(IntMatrix.from_columns(cols, k), m, L)


def _relations(data: ParallelData, subgroup: IntMatrix) -> IntMatrix:
    return IntMatrix.diag(data.multiplicities).hstack(subgroup)


def pi1(pair: GalePair) -> AbelianGroup:
    _, data = simplify(pair.B)
    bt = b_tilde(data)
    return cokernel(_relations(data, kernel_basis(bt.matrix)))


def pi1_order(pair: GalePair) -> int:
    return pi1(pair).order()


def gamma_subgroup_members(data: ParallelData, bound: int = ORACLE_BOUND) -> list[tuple[int, ...]]:
    """Elements (k_1..k_s) of Gamma with sum_k (k_k / l_k) b^(k) integral."""
    ells = data.multiplicities
    L = math.prod(ells)
    if L > bound:
        raise OracleBoundExceeded(f"|Gamma| = {L} exceeds oracle bound {bound}")
    reps = data.representatives
    dim = len(reps[0]) if reps else 0
    members = []
    for ks in product(*(range(l) for l in ells)):
        ok = True
        for i in range(dim):
            total = sum(Fraction(k * rep[i], l) for k, l, rep in zip(ks, ells, reps))
            if total.denominator != 1:
                ok = False
                break
        if ok:
            members.append(ks)
    return members


def pi1_oracle(pair: GalePair, bound: int = ORACLE_BOUND) -> AbelianGroup:
    _, data = simplify(pair.B)
    members = gamma_subgroup_members(data, bound)
    gens = IntMatrix.from_columns(members, data.s)
    return cokernel(_relations(data, gens))


def pi1_image_quotient(pair: GalePair) -> AbelianGroup:
    """The same group presented as Image(B~^T) / L Z^(n-d)."""
    _, data = simplify(pair.B)
    bt = b_tilde(data)
    k = bt.matrix.nrows
    L = bt.L
    lattice = hnf_lattice_basis(bt.matrix.hstack(IntMatrix.identity(k).scale(L)))
    # coordinates of L*e_i in the lattice basis; the lattice basis is square
    # lower triangular because it contains L Z^k
    coords = []
    for i in range(k):
        target = [L if r == i else 0 for r in range(k)]
        x = [0] * k
        for r in range(k):
            acc = target[r] - sum(lattice[r, c] * x[c] for c in range(r))
            q, rem = divmod(acc, lattice[r, r])
            if rem:
                raise ArithmeticError("L Z^k not contained in image lattice")
            x[r] = q
        coords.append(x)
    return cokernel(IntMatrix.from_columns(coords, k))
