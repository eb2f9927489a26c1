from __future__ import annotations

import math

import numpy as np
import pytest

from obp import (
    Normalization,
    ObpInstance,
    build_blocks,
    build_matrix,
    build_tau,
    check_lambda_bounds,
    conjugate_matrix,
    decompose_orbits,
    invert_obp,
    perron,
)
from obp.errors import NotIrreducible
from obp.spectral import TransitionMatrix

from oracles import char_poly, perron_root_exact

EX31_A = ((1, 0, 1, 2), (1, 2, 2, 2), (1, 1, 2, 2), (1, 0, 1, 3))
FIG2_A = ((1, 1, 1, 0), (2, 2, 1, 1), (1, 1, 2, 0), (2, 1, 0, 2))


def _matrix(inst):
    blocks = build_blocks(inst)
    dec = decompose_orbits(build_tau(inst, blocks), inst)
    return build_matrix(dec, blocks), dec


def test_build_matrix_reference(ex31, fig2):
    a, dec = _matrix(ex31)
    assert a.a == EX31_A
    assert a.row_sums() == dec.m == (4, 7, 6, 5)
    assert a.col_sums() == ex31.k

    a, dec = _matrix(fig2)
    assert a.a == FIG2_A
    assert a.col_sums() == fig2.k
    assert a.row_sums() == dec.m


def test_build_matrix_trivial():
    inst = ObpInstance(1, (1,), (1,))
    a, _dec = _matrix(inst)
    assert a.a == ((1,),)


def test_perron_golden_ratio():
    a = TransitionMatrix(2, ((1, 1), (1, 0)))
    pd = perron(a)
    assert abs(pd.lam - (1 + math.sqrt(5)) / 2) < 1e-12
    assert pd.residual_l <= 1e-9 * max(pd.l)
    assert pd.residual_h <= 1e-9 * max(pd.h)
    assert all(v > 0 for v in pd.l + pd.h)


def test_perron_reference_instances(ex31, fig2):
    for inst, pinned in ((ex31, EX31_A), (fig2, FIG2_A)):
        matrix, _ = _matrix(inst)
        pd = perron(matrix)
        exact = perron_root_exact(pinned)
        assert abs(pd.lam - exact) <= 1e-10 * exact
        assert pd.residual_l <= 1e-9 * max(pd.l)
        assert pd.residual_h <= 1e-9 * max(pd.h)


def test_perron_normalizations(ex31):
    matrix, _ = _matrix(ex31)
    sum_h = perron(matrix, Normalization.SUM_H)
    max_l = perron(matrix, Normalization.MAX_L)
    assert abs(sum(sum_h.h) - 1.0) < 1e-12
    assert abs(sum(sum_h.l) - 1.0) < 1e-12
    assert abs(max(max_l.l) - 1.0) < 1e-12
    assert abs(max(max_l.h) - 1.0) < 1e-12
    for i in range(4):
        for j in range(4):
            assert math.isclose(
                sum_h.l[i] / sum_h.l[j], max_l.l[i] / max_l.l[j], rel_tol=1e-9
            )
            assert math.isclose(
                sum_h.h[i] / sum_h.h[j], max_l.h[i] / max_l.h[j], rel_tol=1e-9
            )


def test_perron_not_irreducible():
    with pytest.raises(NotIrreducible):
        perron(TransitionMatrix(2, ((1, 0), (0, 1))))


def test_lambda_bounds(ex31, fig2):
    for inst, lo, hi in ((ex31, 4, 7), (fig2, 3, 6)):
        matrix, dec = _matrix(inst)
        pd = perron(matrix)
        assert lo < pd.lam < hi
        assert check_lambda_bounds(pd, inst.k, dec.m).passed


def test_lambda_bounds_degenerate():
    # constant column sums force lam to hit the bound exactly
    inst = ObpInstance(2, (2, 1), (2, 2))
    matrix, dec = _matrix(inst)
    pd = perron(matrix)
    verdict = check_lambda_bounds(pd, inst.k, dec.m)
    assert verdict.status == "degenerate"
    assert not verdict.passed


def test_lambda_bounds_fail():
    pd_like = perron(TransitionMatrix(2, ((1, 1), (1, 0))))
    verdict = check_lambda_bounds(pd_like, (9, 9), (9, 9))
    assert verdict.status == "fail"


def test_conjugate_matrix(ex31, fig2):
    for inst in (ex31, fig2):
        matrix, _ = _matrix(inst)
        inv = invert_obp(inst)
        matrix_inv, _ = _matrix(inv)
        assert conjugate_matrix(matrix, inst.sigma).a == matrix_inv.a

    ident = TransitionMatrix(3, ((1, 2, 3), (4, 5, 6), (7, 8, 9)))
    assert conjugate_matrix(ident, (1, 2, 3)).a == ident.a


def test_conjugate_preserves_perron(ex31):
    matrix, _ = _matrix(ex31)
    pd = perron(matrix)
    pd_conj = perron(conjugate_matrix(matrix, ex31.sigma))
    assert abs(pd.lam - pd_conj.lam) <= 1e-9 * pd.lam


def test_aperiodicity_soft(ex31, fig2):
    # admissible instances come out mixing: A^n strictly positive
    for inst in (ex31, fig2):
        matrix, _ = _matrix(inst)
        power = np.linalg.matrix_power(np.array(matrix.a, dtype=np.int64), matrix.n)
        assert (power > 0).all()


def test_char_poly_oracle_selftest():
    assert char_poly(((1, 1), (1, 0))) == [-1, -1, 1]
    root = perron_root_exact(((1, 1), (1, 0)))
    assert abs(root - (1 + math.sqrt(5)) / 2) < 1e-15
    coeffs = char_poly(EX31_A)
    assert coeffs[-1] == 1
    # determinant and trace read off the ends of the polynomial
    a = np.array(EX31_A)
    assert coeffs[0] == pytest.approx(((-1) ** 4) * round(np.linalg.det(a)))
    assert coeffs[3] == -int(np.trace(a))
    # numpy cross-check of the isolated root
    eig = max(abs(np.linalg.eigvals(np.array(EX31_A, dtype=float))))
    assert abs(perron_root_exact(EX31_A) - eig) < 1e-8
