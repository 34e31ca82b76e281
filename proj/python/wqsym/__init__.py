"""Exact computations with packed words and their Hopf algebra.

Thin convenience layer over the compiled extension: words can be given as
strings ("3142132" or "1,2,10,...") or as lists of integers; linear
combinations are plain dicts mapping word strings to integer coefficients.
"""

from ._wqsym import (
    basis_matrix,
    blue_factorize,
    copr_prec,
    copr_succ,
    enumerate_packed_words,
    forest_json,
    gd_decompose,
    global_descents,
    half_prec,
    half_succ,
    ins,
    insl,
    involution,
    is_blue_irreducible,
    is_irreducible,
    is_packed,
    is_red_irreducible,
    o_element,
    p_element,
    pack,
    parse_word,
    product,
    red_factorize,
    shifted_concat_left,
    shifted_concat_right,
    sigma,
    sigma_inverse,
    standardize,
    verify_suite,
    word_of_forest_json,
    word_str,
)

__all__ = [
    "basis_matrix",
    "blue_factorize",
    "copr_prec",
    "copr_succ",
    "enumerate_packed_words",
    "forest_json",
    "gd_decompose",
    "global_descents",
    "half_prec",
    "half_succ",
    "ins",
    "insl",
    "involution",
    "is_blue_irreducible",
    "is_irreducible",
    "is_packed",
    "is_red_irreducible",
    "o_element",
    "p_element",
    "pack",
    "parse_word",
    "product",
    "red_factorize",
    "shifted_concat_left",
    "shifted_concat_right",
    "sigma",
    "sigma_inverse",
    "standardize",
    "verify_suite",
    "word",
    "word_of_forest_json",
    "word_str",
]


def word(w):
    """Normalize a word given as string or iterable of letters to a list."""
    if isinstance(w, str):
        return parse_word(w)
    return list(w)
