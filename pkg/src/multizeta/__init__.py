"""Symbolic and numeric verification that interleaved 2-block zeta values
are rational multiples of powers of pi.

The symbolic half expands symmetrized insertion sums into binary words,
applies the weight-graded derivations, and certifies that all terms cancel
pairwise under an offset-swapping involution on odd window encodings.  The
numeric half evaluates the same sums to high precision and reads the
rational coefficient of pi^weight back off the digits.
"""

from .words import (
    BinaryWord,
    BlockVector,
    Composition,
    blockvector_to_composition,
    blockvector_to_word,
    composition_to_word,
    sign_of,
    weight_of,
)
from .coaction import (
    TensorTerm,
    TermMultiset,
    Window,
    accumulate,
    dr_candidate_windows,
    dr_terms,
    reversal_canonical,
)
from .encodings import (
    OddEncoding,
    Orbit,
    enumerate_odd_encodings,
    pair_orbits,
    phi,
    quotient_of,
    subsequence_of,
    window_of,
)
from .verifier import (
    CancellationCertificate,
    CheckRecord,
    InsertionInstance,
    build_instance,
    expansion_residual,
    verify_cancellation,
    verify_instance,
)
from .numerics import (
    PrecisionReal,
    bernoulli_numbers,
    check_bbbl_family,
    check_bowman_bradley,
    check_cyclic_insertion,
    check_symmetric_sum,
    euler_zeta_even,
    eval_mzv_fast,
    eval_mzv_series,
    reconstruct_rational,
    zeta_even_rational,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryWord",
    "BlockVector",
    "CancellationCertificate",
    "CheckRecord",
    "Composition",
    "InsertionInstance",
    "OddEncoding",
    "Orbit",
    "PrecisionReal",
    "TensorTerm",
    "TermMultiset",
    "Window",
    "accumulate",
    "bernoulli_numbers",
    "blockvector_to_composition",
    "blockvector_to_word",
    "build_instance",
    "check_bbbl_family",
    "check_bowman_bradley",
    "check_cyclic_insertion",
    "check_symmetric_sum",
    "composition_to_word",
    "dr_candidate_windows",
    "dr_terms",
    "enumerate_odd_encodings",
    "euler_zeta_even",
    "eval_mzv_fast",
    "eval_mzv_series",
    "expansion_residual",
    "pair_orbits",
    "phi",
    "quotient_of",
    "reconstruct_rational",
    "reversal_canonical",
    "sign_of",
    "subsequence_of",
    "verify_cancellation",
    "verify_instance",
    "weight_of",
    "window_of",
    "zeta_even_rational",
]
