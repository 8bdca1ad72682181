"""Extremal automata and words witnessing the depth bounds.

The families generated here realize the exponential gap between the minimal
k and the depth of the minimal DFA, and the tight binomial bound on the
depth of minimal DFAs of k-PT languages over n letters.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import chain, combinations

from ptlang.automata import Automaton, InputError, Word, make_automaton
from ptlang.subwords import (
    DEFAULT_CLASS_BUDGET,
    canonical_automaton_classes,
    subwords_up_to_k,
)


def gen_ak(k: int) -> Automaton:
    """The depth-k NFA whose language is (k+1)-PT but not k-PT, while its
    minimal DFA has depth 2^(k+1) - 1.

    States 0..k are all initial, 0 accepts; state i self-loops under a_j for
    j < i and falls to every smaller state under a_i.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    states = [str(i) for i in range(k + 1)]
    alphabet = [f"a{i}" for i in range(k + 1)]
    triples = []
    for i in range(k + 1):
        for j in range(i):
            triples.append((str(i), f"a{j}", str(i)))
        for j in range(i):
            triples.append((str(i), f"a{i}", str(j)))
    return make_automaton(states, alphabet, triples, states, ["0"])


def gen_wk(k: int) -> Word:
    """The word w_k with w_0 = a0 and w_l = w_{l-1} a_l w_{l-1}; its even
    prefixes are accepted by gen_ak(k) and its odd prefixes are not."""
    if k < 0:
        raise InputError("k must be non-negative")
    word: Word = ("a0",)
    for level in range(1, k + 1):
        word = word + (f"a{level}",) + word
    return word


def pkn(k: int, n: int) -> int:
    """P(k, n) = C(k+n, k) - 1: the tight depth bound for k-PT languages
    over n letters."""
    if k < 1 or n < 1:
        raise InputError("k and n must be positive")
    return math.comb(k + n, k) - 1


@lru_cache(maxsize=None)
def _stirling_cycle(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return _stirling_cycle(n - 1, k - 1) + (n - 1) * _stirling_cycle(n - 1, k)


def pkn_stirling(k: int, n: int) -> int:
    """P(k, n) evaluated through Stirling cycle numbers:
    (1/k!) * sum_i [k+1, i+1] * n^i for i = 1..k."""
    if k < 1 or n < 1:
        raise InputError("k and n must be positive")
    total = sum(_stirling_cycle(k + 1, i + 1) * n**i for i in range(1, k + 1))
    quotient, remainder = divmod(total, math.factorial(k))
    if remainder:
        raise ArithmeticError("Stirling sum is not divisible by k!")
    return quotient


def gen_wkn(k: int, n: int) -> Word:
    """The length-P(k,n) word over a1..an whose sub_k set is full and whose
    prefixes have pairwise distinct sub_k sets.

    W(k,1) = a1^k, W(1,n) = a1 a2 ... an, and
    W(k,n) = W(k,n-1) a_n W(k-1,n).
    """
    if k < 1 or n < 1:
        raise InputError("k and n must be positive")
    if n == 1:
        return ("a1",) * k
    if k == 1:
        return tuple(f"a{i}" for i in range(1, n + 1))
    return gen_wkn(k, n - 1) + (f"a{n}",) + gen_wkn(k - 1, n)


def gen_tight_depth_dfa(
    k: int, n: int, budget: int = DEFAULT_CLASS_BUDGET
) -> Automaton:
    """The ~_k-canonical DFA over a1..an accepting the classes of the
    even-length prefixes of gen_wkn(k, n); its minimization has depth
    exactly pkn(k, n)."""
    word = gen_wkn(k, n)
    alphabet = tuple(f"a{i}" for i in range(1, n + 1))
    automaton, classes = canonical_automaton_classes(alphabet, k, budget)
    by_members = {s.members: name for name, s in classes.items()}
    accepting = {
        by_members[subwords_up_to_k(word[:length], k, alphabet).members]
        for length in range(0, len(word) + 1, 2)
    }
    return Automaton(
        automaton.states,
        automaton.alphabet,
        automaton.transitions,
        automaton.initials,
        frozenset(accepting),
    )


def gen_intersection_nfa(alphabet: tuple[str, ...]) -> Automaton:
    """The 2^n-state automaton for "contains every letter": states are the
    letter sets seen so far.  Its language is 1-PT, yet no NFA for it is
    smaller."""
    letters = tuple(alphabet)
    if not letters:
        raise InputError("alphabet must be nonempty")
    if len(letters) > 20:
        raise InputError("alphabet too large for the powerset construction")

    def name(subset: tuple[str, ...]) -> str:
        return "{" + ",".join(sorted(subset)) + "}"

    subsets = list(
        chain.from_iterable(
            combinations(sorted(letters), r) for r in range(len(letters) + 1)
        )
    )
    triples = []
    for subset in subsets:
        for a in letters:
            triples.append((name(subset), a, name(tuple(sorted(set(subset) | {a})))))
    return make_automaton(
        [name(s) for s in subsets],
        letters,
        triples,
        [name(())],
        [name(tuple(sorted(letters)))],
    )
