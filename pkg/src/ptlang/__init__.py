"""Piecewise testability toolkit.

Decides whether a regular language (given as a DFA or NFA) is piecewise
testable, finds the minimal k for which it is k-piecewise testable, produces
and verifies non-k-PT certificates, decomposes k-PT languages into boolean
combinations of pieces, and generates the extremal automata and words that
witness the known depth bounds.
"""

from ptlang.automata import (
    Automaton,
    BudgetExceededError,
    ContractError,
    CyclicAutomatonError,
    InputError,
    TransitionMonoid,
    check_identity,
    complete_with_sink,
    depth,
    determinize,
    is_partially_ordered,
    make_automaton,
    minimize,
    self_loop_alphabet,
    transition_monoid,
)
from ptlang.subwords import (
    SubwordSet,
    canonical_automaton,
    class_successor,
    embeds,
    k_equivalent,
    reduce_word,
    subwords_up_to_k,
)
from ptlang.pt import (
    certify_pt_nfa,
    is_locally_confluent,
    is_pt,
    is_pt_min_dfa,
    satisfies_ums,
)
from ptlang.kpt import (
    Certificate,
    Clause,
    PieceExpression,
    decompose,
    eval_piece_expression,
    is_0pt,
    is_1pt,
    is_2pt,
    is_3pt,
    is_kpt,
    is_kpt_oracle,
    make_certificate,
    min_k,
    verify_certificate,
    verify_pair,
)
from ptlang.extremal import (
    gen_ak,
    gen_intersection_nfa,
    gen_tight_depth_dfa,
    gen_wk,
    gen_wkn,
    pkn,
    pkn_stirling,
)

__all__ = [name for name in dir() if not name.startswith("_")]
