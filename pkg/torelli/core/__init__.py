from torelli.core.burau import (
    BraidWord,
    Permutation,
    burau_at,
    burau_generator,
    center_word,
    in_Kn,
    is_pure,
    kernel_center_word,
    parse_braid,
    permutation,
    pure_generator,
)
from torelli.core.epsilon import (
    BalancedVector,
    Factorization,
    FactorEntry,
    NormalGenerator,
    balanced_decompose,
    factor_kernel_word,
    in_ker_epsilon,
    schreier_generators,
    section,
    split,
    verify_factorization,
)
from torelli.core.homology import action_matrix, in_torelli_kernel, letter_action
from torelli.core.laurent import IntMatrix, LaurentMatrix, LaurentPoly, evaluate_at, mat_identity, mat_mul
from torelli.core.words import Word, parse_word, format_word

__all__ = [
    'BraidWord',
    'Permutation',
    'burau_at',
    'burau_generator',
    'center_word',
    'in_Kn',
    'is_pure',
    'kernel_center_word',
    'parse_braid',
    'permutation',
    'pure_generator',
    'BalancedVector',
    'Factorization',
    'FactorEntry',
    'NormalGenerator',
    'balanced_decompose',
    'factor_kernel_word',
    'in_ker_epsilon',
    'schreier_generators',
    'section',
    'split',
    'verify_factorization',
    'action_matrix',
    'in_torelli_kernel',
    'letter_action',
    'IntMatrix',
    'LaurentMatrix',
    'LaurentPoly',
    'evaluate_at',
    'mat_identity',
    'mat_mul',
    'Word',
    'parse_word',
    'format_word',
]
