from __future__ import annotations

import random

import pytest

from hypertoric.analysis import (
    analyze,
    atype_A,
    classify_equal,
    decompose,
    generate_example,
    is_irreducible,
    minnilp_A,
    moment_ideal,
    omin_B,
    signed_block_matrix,
    simplification_diagram_diagnostics,
    two_form_dim,
    universal_cover,
    verify_simplification_diagram,
)
from hypertoric.arrangement import simplify
from hypertoric.corpus import corpus
from hypertoric.errors import BadParams
from hypertoric.exact_linalg import AbelianGroup, IntMatrix, row_hnf
from hypertoric.gale import gale_dual_of_A, gale_dual_of_B
from hypertoric.matroid import VectorMatroid

import oracles

TWO_A1 = IntMatrix([[1, -1, 0, 0], [0, 0, 1, -1]])


def test_analyze_minimal_nilpotent():
    r = analyze(IntMatrix([[1, 1, 1]]))
    assert r.dim == 4 and r.simple and r.sing_codim == 4
    assert r.pi1.is_trivial() and r.irreducible and r.two_form_dim == 1


def test_analyze_a2_surface():
    r = analyze(atype_A(3))
    assert r.dim == 2 and not r.simple and r.sing_codim == 2
    assert r.pi1 == AbelianGroup(0, (3,)) and r.irreducible


def test_analyze_product_of_two_a1_surfaces():
    r = analyze(TWO_A1)
    assert r.decomposition.r == 2
    assert r.pi1 == AbelianGroup(0, (2, 2))
    assert r.two_form_dim == 2 and not r.irreducible


def test_analyze_smooth_datum_given_by_B():
    r = analyze(IntMatrix.identity(2), kind="B")
    assert r.smooth and r.d == 0 and r.dim == 4
    assert r.sing_codim is None and r.simple and r.pi1.is_trivial()
    assert (r.decomposition.p, r.decomposition.r) == (2, 0)
    assert r.two_form_dim == 6
    assert not r.irreducible


def test_single_c2_factor_counts_as_irreducible():
    r = analyze(IntMatrix([[1]]), kind="B")
    assert (r.decomposition.p, r.decomposition.r) == (1, 0)
    assert r.two_form_dim == 1 and r.irreducible


def test_analyze_rejects_unknown_kind():
    with pytest.raises(ValueError):
        analyze(IntMatrix([[1, 1]]), kind="C")


def test_decompose_examples():
    dec = decompose(IntMatrix([[0, 1, 1, 1]]))
    assert dec.p == 1 and dec.loops == (0,)
    assert [(b.columns, b.n, b.d) for b in dec.blocks] == [((1, 2, 3), 3, 1)]
    dec = decompose(IntMatrix([[1, 1, 1]]))
    assert (dec.p, dec.r) == (0, 1)
    dec = decompose(TWO_A1)
    assert (dec.p, dec.r) == (0, 2)
    assert [b.columns for b in dec.blocks] == [(0, 1), (2, 3)]


def test_irreducible_examples():
    assert is_irreducible(IntMatrix([[1, 1, 1]]))
    assert not is_irreducible(IntMatrix([[0, 1, 1]]))
    assert not is_irreducible(TWO_A1)


def test_two_form_dim_examples():
    assert two_form_dim(IntMatrix([[1, 1, 1]])) == 1
    assert two_form_dim(IntMatrix([[0, 1, 1, 1]])) == 2
    three_lines = IntMatrix([[1, -1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0], [0, 0, 0, 0, 1, -1]])
    assert two_form_dim(three_lines) == 3


def test_decomposition_invariants_on_corpus():
    for entry in corpus():
        A = entry.A
        dec = decompose(A)
        assert dec.p + sum(b.n for b in dec.blocks) == entry.pair.n
        assert sum(b.d for b in dec.blocks) == entry.pair.d
        dim = 2 * (entry.pair.n - entry.pair.d)
        assert dim == 2 * dec.p + sum(2 * (b.n - b.d) for b in dec.blocks)
        for b in dec.blocks:
            sub = A.select_columns(b.columns)
            assert VectorMatroid(sub).components() == [tuple(range(b.n))]
        # independent recount of loops and blocks
        comps = oracles.brute_components(A.tolist(), A.ncols) if A.ncols <= 7 else None
        if comps is not None:
            loops = [c for c in comps if len(c) == 1 and not any(A.col(c[0]))]
            assert dec.p == len(loops)
            assert dec.r == len(comps) - len(loops)
        r = analyze(A)
        assert r.irreducible == (r.two_form_dim == 1)
        assert r.smooth == (entry.pair.d == 0) == (dec.p == entry.pair.n and dec.r == 0)


def test_universal_cover_examples():
    cov = universal_cover(gale_dual_of_B(omin_B([2, 2, 2])).A)
    assert classify_equal(cov.A_under, IntMatrix([[1, 1, 1]])) is not None
    assert cov.deck == AbelianGroup(0, (2, 2)) and cov.gamma_order == 8

    A = minnilp_A(4)
    cov = universal_cover(A)
    assert classify_equal(cov.A_under, A) is not None and cov.deck.is_trivial()

    cov = universal_cover(atype_A(5))
    assert cov.A_under.shape == (0, 1)
    assert cov.B_bar == IntMatrix([[1]])
    assert cov.deck == AbelianGroup(0, (5,))


def test_universal_cover_is_idempotent_on_corpus():
    for entry in corpus():
        cov = universal_cover(entry.A)
        if cov.A_under.nrows == 0:
            continue
        again = universal_cover(cov.A_under)
        assert again.deck.is_trivial()
        assert classify_equal(again.A_under, cov.A_under) is not None
        assert cov.gamma_order % cov.deck.order() == 0


def test_simplification_diagram_examples():
    A = gale_dual_of_B(omin_B([2, 2, 2])).A
    assert verify_simplification_diagram(A)
    A = minnilp_A(3)
    assert verify_simplification_diagram(A)
    pair = gale_dual_of_A(A)
    _, data = simplify(pair.B)
    B0 = signed_block_matrix(data)
    assert sorted(abs(x) for r in B0.rows for x in r) == [0] * 6 + [1] * 3


def test_simplification_diagram_detects_corruption():
    pair = gale_dual_of_B(omin_B([2, 2, 2]))
    B_bar, data = simplify(pair.B)
    A_under = gale_dual_of_B(B_bar).A
    assert simplification_diagram_diagnostics(pair.A, pair.B, B_bar, data, A_under) == []
    corrupted = IntMatrix([[1, 0], [0, 1], [1, 2]])
    issues = simplification_diagram_diagnostics(pair.A, pair.B, corrupted, data, A_under)
    assert issues


def test_moment_ideal_examples():
    ideal = moment_ideal(IntMatrix([[1, 1, 1]]))
    assert ideal.text() == "z1*w1 + z2*w2 + z3*w3"
    ideal = moment_ideal(IntMatrix([[0, 1, -2]]))
    assert all(j != 0 for p in ideal.polynomials for _, j in p)
    assert ideal.text() == "z2*w2 - 2*z3*w3"
    ideal = moment_ideal(IntMatrix([[1, 0, 1], [0, 1, 1]]))
    assert ideal.polynomials == (((1, 0), (1, 2)), ((1, 1), (1, 2)))


def test_classify_examples():
    A = gale_dual_of_B(omin_B([2, 2, 3])).A
    perm = [3, 0, 6, 1, 5, 2, 4]
    assert classify_equal(A, A.select_columns(perm)) is not None
    A222 = gale_dual_of_B(omin_B([2, 2, 2])).A
    assert classify_equal(A222, A) is None
    assert classify_equal(IntMatrix([[1, 1, 1]]), IntMatrix([[1, 1, 1, 1]])) is None


def test_classify_under_unimodular_change_and_signed_permutation():
    rng = random.Random(7)
    for entry in corpus()[:30]:
        A = entry.A
        P = oracles.random_unimodular(A.nrows, rng)
        D, _ = oracles.random_signed_permutation(A.ncols, rng)
        A2 = IntMatrix(oracles.matmul(oracles.matmul(P, A.tolist()), D), ncols=A.ncols) if A.nrows else A
        assert classify_equal(A, A2) is not None


def test_generators():
    datum = generate_example("atype", [3])
    assert datum.A == atype_A(3)
    a = generate_example("omin", [1, 1, 1])
    b = generate_example("minnilp", [3])
    assert row_hnf(a.A) == row_hnf(b.A)
    tri = generate_example("graph", [(0, 1), (1, 2), (2, 0)])
    U23 = VectorMatroid(IntMatrix([[1, 0, 1], [0, 1, 1]]))
    assert classify_equal(tri.A, U23.matrix) is not None
    for kind, params in [
        ("atype", [0]),
        ("minnilp", [1]),
        ("omin", [2]),
        ("graph", [(0, 1), (2, 3)]),
        ("graph", []),
        ("nope", [1]),
        ("atype", ["x"]),
    ]:
        with pytest.raises(BadParams):
            generate_example(kind, params)
