from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertoric.analysis import atype_A, minnilp_A, omin_B
from hypertoric.corpus import corpus
from hypertoric.errors import NotSurjective, NotUnimodular, RankDeficient, ZeroBRow
from hypertoric.exact_linalg import IntMatrix, cokernel, is_unimodular, kernel_basis, rank, row_hnf
from hypertoric.gale import (
    essentialize,
    gale_dual_of_A,
    gale_dual_of_B,
    verify_gale_pair,
)
from hypertoric.matroid import VectorMatroid


def test_atype_dual_is_all_ones_column():
    for ell in (2, 3, 5):
        pair = gale_dual_of_A(atype_A(ell))
        assert pair.B.columns() in ([(1,) * ell], [(-1,) * ell])
        assert (pair.n, pair.d) == (ell, ell - 1)


def test_minnilp_dual_rows_span_hyperplane():
    pair = gale_dual_of_A(minnilp_A(4))
    assert pair.B.shape == (4, 3)
    assert (minnilp_A(4) @ pair.B).is_zero()
    # Gale dual of e_1, e_2, e_3, -(e_1+e_2+e_3) up to GL_3(Z)
    expected = IntMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]])
    assert row_hnf(gale_dual_of_B(expected).A) == row_hnf(pair.A)


def test_identity_A_has_zero_kernel_and_is_rejected():
    with pytest.raises(ZeroBRow):
        gale_dual_of_A(IntMatrix.identity(2))


def test_dual_of_B_examples():
    pair = gale_dual_of_B(IntMatrix([[1], [1], [1]]))
    assert row_hnf(pair.A) == row_hnf(atype_A(3))
    pair = gale_dual_of_B(omin_B([2, 2, 2]))
    assert pair.A.shape == (4, 6)
    assert 2 * (pair.n - pair.d) == 4
    smooth = gale_dual_of_B(IntMatrix.identity(3))
    assert smooth.d == 0 and smooth.smooth and smooth.A.shape == (0, 3)


def test_validation_errors():
    with pytest.raises(RankDeficient):
        gale_dual_of_A(IntMatrix([[1, 1], [1, 1]]))
    with pytest.raises(NotSurjective):
        gale_dual_of_A(IntMatrix([[2, 2, 2]]))
    with pytest.raises(NotUnimodular) as exc:
        gale_dual_of_A(IntMatrix([[1, 0, 1], [0, 1, 2]]))
    assert exc.value.indices
    with pytest.raises(ZeroBRow) as exc:
        gale_dual_of_A(IntMatrix([[1, 0, 0], [0, 1, 1]]))
    assert exc.value.rows == (0,)
    with pytest.raises(ZeroBRow):
        gale_dual_of_B(IntMatrix([[1], [0], [-1]]))
    with pytest.raises(RankDeficient):
        gale_dual_of_B(IntMatrix([[1, 1], [1, 1], [2, 2]]))


def test_loops_in_A_are_allowed():
    pair = gale_dual_of_A(IntMatrix([[0, 1, 1, 1]]))
    assert pair.n == 4 and pair.d == 1


def test_verify_gale_pair_codes():
    pair = gale_dual_of_A(minnilp_A(3))
    assert verify_gale_pair(pair.A, pair.B) == []
    bad = IntMatrix([[1, 0], [0, 1], [0, 0]])
    assert "NotComplex" in verify_gale_pair(pair.A, bad)
    assert verify_gale_pair(IntMatrix([[1, -1]]), IntMatrix([[2], [2]])) == ["NotSaturated"]
    assert verify_gale_pair(pair.A, IntMatrix([[1], [1], [1]])) == ["ShapeMismatch"]


def test_essentialize():
    B = IntMatrix([[1], [1]])
    assert essentialize(B) == (B, ())
    assert essentialize(IntMatrix([[1], [0], [-1]])) == (IntMatrix([[1], [-1]]), (1,))
    Bp, removed = essentialize(IntMatrix.zeros(2, 1))
    assert Bp.shape == (0, 1) and removed == (0, 1)


def test_round_trip_and_unimodularity_duality_on_corpus():
    for entry in corpus():
        A, B = entry.A, entry.B
        assert verify_gale_pair(A, B) == []
        back = gale_dual_of_B(B).A
        assert row_hnf(back) == row_hnf(A), entry.name
        assert is_unimodular(A) == is_unimodular(B.T)


def test_rank_duality_exhaustive_small_n():
    checked = 0
    for entry in corpus():
        if entry.pair.n > 8:
            continue
        A, B, n, d = entry.A, entry.B, entry.pair.n, entry.pair.d
        MA, MB = VectorMatroid(A), VectorMatroid(B.T)
        for k in range(n + 1):
            for I in combinations(range(n), k):
                J = [j for j in range(n) if j not in I]
                r = len(I) - MB.rank_of(I)
                assert MA.rank_of(J) == d - r
        checked += 1
    assert checked >= 20


def test_canonical_dual_is_deterministic():
    B = omin_B([2, 3])
    assert gale_dual_of_B(B).A == gale_dual_of_B(B).A
    assert rank(gale_dual_of_B(B).A) == 4


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.integers(d + 1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=d, max_size=d))))
def test_unimodularity_duality_beyond_valid_pairs(rows):
    A = IntMatrix(rows)
    if rank(A) != A.nrows or not cokernel(A).is_trivial():
        return
    B = kernel_basis(A)
    assert is_unimodular(A) == is_unimodular(B.T)
