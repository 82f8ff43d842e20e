from fractions import Fraction

import pytest
from hypothesis import given, settings

from pfaffkit.blockdiag import TridiagSpec, det_blockdiag, det_closed, tridiag_det, w_seq
from pfaffkit.errors import DomainError, SingularExtensionError
from pfaffkit.oracle import det_oracle
from pfaffkit.recurrence import pf_fast
from pfaffkit.scalar import Params
from pfaffkit.structmat import DenseMatrix, gen_F, gen_split_blocks

from conftest import params_strategy

FIB = Params(-1, 1)


def w_by_oracle(i, p):
    """w_i as the determinant of the i x i tridiagonal Toeplitz matrix."""
    c = p.b * p.b - 2 * p.alpha
    M = DenseMatrix.from_function(
        i, lambda r, s: c if r == s else (p.alpha if abs(r - s) == 1 else 0), p.alpha
    )
    return det_oracle(M)


def test_tridiag_det_empty():
    assert tridiag_det(TridiagSpec([])) == 1


def test_tridiag_det_2x2():
    assert tridiag_det(TridiagSpec([2, 2], [-1], [-1])) == 3


def test_tridiag_det_K2():
    _, K = gen_split_blocks(3, FIB)
    assert tridiag_det(TridiagSpec.from_matrix(K)) == 3 == det_oracle(K)


def test_tridiag_spec_validation():
    with pytest.raises(DomainError):
        TridiagSpec([1, 2], [1], [])
    with pytest.raises(DomainError):
        TridiagSpec.from_matrix(DenseMatrix([[1, 0, 1], [0, 1, 0], [0, 0, 1]]))


def test_tridiag_det_asymmetric_bands():
    M = DenseMatrix([[2, 3, 0, 0], [5, 7, 11, 0], [0, 13, 17, 19], [0, 0, 23, 29]])
    assert tridiag_det(TridiagSpec.from_matrix(M)) == det_oracle(M)


def test_w_seq_fibonacci():
    w = w_seq(4, FIB)
    assert [w[i] for i in range(5)] == [1, 3, 8, 21, 55]
    assert [w_by_oracle(i, FIB) for i in range(5)] == [1, 3, 8, 21, 55]
    assert w[-1] == 0


def test_w_seq_backward_extension():
    w = w_seq(2, FIB, lo=-2)
    assert w[-2] == -1
    p = Params(Fraction(-2, 3), 5)
    w = w_seq(3, p, lo=-2)
    assert w[-2] == -1 / p.alpha**2
    c = p.b**2 - 2 * p.alpha
    assert w[0] == c * w[-1] - p.alpha**2 * w[-2]


def test_w_seq_singular_extension():
    with pytest.raises(SingularExtensionError):
        w_seq(3, Params(0, 2), lo=-2)
    assert list(w_seq(3, Params(0, 2))) == [0, 1, 4, 16, 64]


def test_w_seq_short_ranges():
    assert list(w_seq(-1, FIB)) == [0]
    assert list(w_seq(-2, FIB, lo=-2)) == [-1]
    with pytest.raises(DomainError):
        w_seq(-2, FIB)


@pytest.mark.parametrize("p", [FIB, Params(Fraction(3, 5), -2), Params(7, 0)])
def test_w_seq_matches_oracle(p):
    w = w_seq(7, p)
    assert [w[i] for i in range(8)] == [w_by_oracle(i, p) for i in range(8)]


def test_det_closed_examples():
    assert det_closed(2, FIB) == 4
    assert det_closed(5, FIB) == 64
    assert det_closed(7, Params(-2, 1)) == 7225


def test_det_blockdiag_examples():
    assert det_blockdiag(1, FIB) == 1
    assert det_blockdiag(4, FIB) == 25
    assert det_blockdiag(6, Params(-1, 2)) == 28561


def test_k1_and_k3_closed_forms_against_oracle():
    p = Params(Fraction(4, 3), Fraction(-1, 2))
    for k in (1, 3):
        assert det_closed(k, p) == det_oracle(gen_F(k, p))


@pytest.mark.parametrize("p", [Params(0, 3), Params(0, 0), Params(2, 0), Params(0, Fraction(-2, 7))])
def test_degenerate_parameters(p):
    for k in range(1, 21):
        closed = det_closed(k, p)
        assert closed == det_blockdiag(k, p) == pf_fast(k, p) ** 2
        if k <= 4:
            assert closed == det_oracle(gen_F(k, p))


def test_alpha_zero_b_three():
    assert det_blockdiag(2, Params(0, 3)) == 81
    assert det_closed(2, Params(0, 3)) == 81


@settings(max_examples=20, deadline=None)
@given(params_strategy)
def test_four_way_agreement(p):
    for k in range(1, 6):
        d = det_oracle(gen_F(k, p))
        assert d == pf_fast(k, p) ** 2 == det_blockdiag(k, p) == det_closed(k, p)


@settings(max_examples=20, deadline=None)
@given(params_strategy)
def test_fast_paths_agree(p):
    for k in range(1, 61):
        assert det_blockdiag(k, p) == det_closed(k, p) == pf_fast(k, p) ** 2


@settings(max_examples=10, deadline=None)
@given(params_strategy)
def test_split_block_dets(p):
    for k in range(2, 61, 2):
        N, Q = gen_split_blocks(k, p)
        assert tridiag_det(TridiagSpec.from_matrix(N)) == tridiag_det(TridiagSpec.from_matrix(Q))
    for k in range(1, 17):
        for blk in gen_split_blocks(k, p):
            if blk.order:
                assert tridiag_det(TridiagSpec.from_matrix(blk)) == det_oracle(blk)
