"""Words, bases and homomorphisms of the free algebra V_{n,r}."""

from .bases import (
    ABasis,
    contractible_parents,
    expand_leftmost,
    expansion_of_size,
    flatten_basis,
    is_a_basis,
    is_basis,
    is_expansion,
    minimal_common_expansion,
    simple_contraction,
    simple_expansion,
    standard_basis,
)
from .homomorphism import evaluate
from .paths import Path, format_path, path_power, paths_of_length, primitive_root, strip_prefix_powers
from .words import (
    LAMBDA,
    Contraction,
    OmegaRow,
    Signature,
    SimpleWord,
    Token,
    TokenKind,
    Word,
    contract,
    descend,
    equal_words,
    format_row,
    format_word,
    generator,
    is_initial_segment,
    is_simple,
    is_standard_row,
    lambda_length,
    make_signature,
    one_step_rewrites,
    parse_row,
    parse_word,
    reduce,
    to_row,
    validate_row,
)

__all__ = [
    "LAMBDA",
    "ABasis",
    "Contraction",
    "OmegaRow",
    "Path",
    "Signature",
    "SimpleWord",
    "Token",
    "TokenKind",
    "Word",
    "contract",
    "contractible_parents",
    "descend",
    "equal_words",
    "evaluate",
    "expand_leftmost",
    "expansion_of_size",
    "flatten_basis",
    "format_path",
    "format_row",
    "format_word",
    "generator",
    "is_a_basis",
    "is_basis",
    "is_expansion",
    "is_initial_segment",
    "is_simple",
    "is_standard_row",
    "lambda_length",
    "make_signature",
    "minimal_common_expansion",
    "one_step_rewrites",
    "parse_row",
    "parse_word",
    "path_power",
    "paths_of_length",
    "primitive_root",
    "reduce",
    "simple_contraction",
    "simple_expansion",
    "standard_basis",
    "strip_prefix_powers",
    "to_row",
    "validate_row",
]
