import pytest

from pfaffkit.errors import DomainError
from pfaffkit.scalar import Params
from pfaffkit.sequences import SequenceKind, expected_det, expected_pf, params_for, seq_value

FIB, PELL, JAC = SequenceKind.FIBONACCI, SequenceKind.PELL, SequenceKind.JACOBSTHAL

# Table 1 of Pf(F_2k), k = 1..8.
TABLE_PF = {
    FIB: [1, -2, -3, 5, 8, -13, -21, 34],
    PELL: [2, -5, -12, 29, 70, -169, -408, 985],
    JAC: [1, -3, -5, 11, 21, -43, -85, 171],
}


def test_seq_values():
    assert seq_value(FIB, 9) == 34
    assert seq_value(PELL, 8) == 408
    assert seq_value(JAC, 5) == 11
    assert [seq_value(FIB, n) for n in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]
    assert [seq_value(PELL, n) for n in range(1, 6)] == [1, 2, 5, 12, 29]
    assert [seq_value(JAC, n) for n in range(1, 6)] == [1, 1, 3, 5, 11]


def test_seq_value_domain():
    with pytest.raises(DomainError):
        seq_value(FIB, 0)


def test_params_for():
    assert params_for(FIB) == Params(-1, 1)
    assert params_for(PELL) == Params(-1, 2)
    assert params_for(JAC) == Params(-2, 1)


def test_expected_pf():
    assert expected_pf(FIB, 6) == -13
    assert expected_pf(PELL, 8) == 985
    assert expected_pf(JAC, 3) == -5


@pytest.mark.parametrize("kind", list(SequenceKind))
def test_expected_pf_reproduces_table(kind):
    assert [expected_pf(kind, k) for k in range(1, 9)] == TABLE_PF[kind]


def test_expected_det():
    assert expected_det(FIB, 8) == 1156
    assert expected_det(PELL, 2) == 25
    assert expected_det(JAC, 1) == 1


@pytest.mark.parametrize("kind", list(SequenceKind))
def test_det_is_pf_squared(kind):
    for k in range(1, 60):
        assert expected_det(kind, k) == expected_pf(kind, k) ** 2


def test_parse_kind():
    assert SequenceKind.parse("Pell") is PELL
    with pytest.raises(DomainError):
        SequenceKind.parse("lucas")
