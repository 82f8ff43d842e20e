"""Exact Pfaffians and determinants of a family of skew-centrosymmetric matrices."""
from .blockdiag import TridiagSpec, det_blockdiag, det_closed, tridiag_det, w_seq
from .errors import (
    DomainError,
    PfaffkitError,
    ResourceError,
    RingMismatchError,
    SingularExtensionError,
    StructuralError,
)
from .oracle import cayley_check, det_oracle, pfaffian_oracle
from .recurrence import IndexedSeq, SeqTriple, coupled_fg, pf_fast, single_f
from .scalar import Params, QuadScalar, parse_rational
from .sequences import SequenceKind, expected_det, expected_pf, params_for, seq_value
from .structmat import (
    DenseMatrix,
    Permutation,
    gen_A,
    gen_B,
    gen_F,
    gen_G,
    gen_J,
    gen_permutation,
    gen_split_blocks,
    gen_T,
    is_skew_centrosymmetric,
    is_skew_symmetric,
    permute_conjugate,
    schur_reduce,
)

__version__ = "0.1.0"
