"""Toolkit for regular-intersection emptiness.

Given a regular language R and a fixed problem language P, the question
is whether R contains any member of P.  The package bundles membership
checkers for several such P, two genuine decision procedures, language
generators that tie automata and machines to concrete instances, and a
bounded shortlex witness search for everything undecidable.
"""

from .automata import (
    Dfa,
    Nfa,
    RegexAst,
    accepts,
    automaton_from_json,
    automaton_to_json,
    determinize,
    equivalent,
    erase_letters,
    intersect_dfa,
    is_empty,
    parse_regex,
    regex_to_nfa,
)
from .deciders import (
    decide_intreg_sequential_string_eq,
    decide_intreg_unary_shuffled,
)
from .errors import (
    AlphabetError,
    CheckerError,
    MalformedInputError,
    MalformedWordError,
    RegexSyntaxError,
    ReginError,
    ResourceLimitError,
)
from .pda import Cfg, Pda, cfg_is_empty, pda_intersect_dfa, pda_is_empty, pda_to_cfg
from .problems import *  # noqa: F401,F403 - curated by problems.__all__
from .problems import __all__ as _problems_all
from .reductions import (
    GeneratedLanguage,
    normalize_tm,
    reduce_ntm_to_tiles,
    reduce_ntm_to_tiling_lang,
    reduce_pcp_to_bpcp_lang,
    reduce_pcp_to_shuffled_regex,
    reduce_tm_to_machine_lang,
)
from .search import SearchBudget, WitnessReport, enumerate_words, find_witness

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "CheckerError",
    "Cfg",
    "Dfa",
    "GeneratedLanguage",
    "MalformedInputError",
    "MalformedWordError",
    "Nfa",
    "Pda",
    "RegexAst",
    "RegexSyntaxError",
    "ReginError",
    "ResourceLimitError",
    "SearchBudget",
    "WitnessReport",
    "accepts",
    "automaton_from_json",
    "automaton_to_json",
    "cfg_is_empty",
    "decide_intreg_sequential_string_eq",
    "decide_intreg_unary_shuffled",
    "determinize",
    "enumerate_words",
    "equivalent",
    "erase_letters",
    "find_witness",
    "intersect_dfa",
    "is_empty",
    "normalize_tm",
    "parse_regex",
    "pda_intersect_dfa",
    "pda_is_empty",
    "pda_to_cfg",
    "reduce_ntm_to_tiles",
    "reduce_ntm_to_tiling_lang",
    "reduce_pcp_to_bpcp_lang",
    "reduce_pcp_to_shuffled_regex",
    "reduce_tm_to_machine_lang",
    "regex_to_nfa",
    "__version__",
] + list(_problems_all)
