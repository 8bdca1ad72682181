"""Subsequence embedding, sub_k sets and Simon's k-equivalence of words.

Words are tuples of letter names.  A ~_k class is represented extensionally
by the subword-closed set of its scattered subwords of length at most k; two
words are k-equivalent exactly when these sets coincide.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ptlang.automata import (
    Automaton,
    BudgetExceededError,
    InputError,
    Word,
    make_automaton,
)

DEFAULT_CLASS_BUDGET = 2 * 10**6


def embeds(v: Word, w: Word) -> bool:
    """True iff v is a scattered subword (subsequence) of w."""
    it = iter(w)
    return all(letter in it for letter in v)


@dataclass(frozen=True)
class SubwordSet:
    """A subword-closed set of words of length <= k: the signature of a ~_k class.

    The alphabet is carried along for constructions that need it (canonical
    automaton, complements) but does not take part in equality: two classes
    are equal when their member sets are.
    """

    k: int
    alphabet: tuple[str, ...] = field(compare=False)
    members: frozenset[Word]

    def __post_init__(self):
        if () not in self.members:
            raise InputError("a subword set always contains the empty word")

    def sorted_members(self) -> list[Word]:
        """Members in shortlex order (the canonical serialization order)."""
        return sorted(self.members, key=lambda w: (len(w), w))


def _grow(members: frozenset[Word], a: str, k: int) -> frozenset[Word]:
    return members | {u + (a,) for u in members if len(u) < k}


def subwords_up_to_k(w: Word, k: int, alphabet: Optional[Iterable[str]] = None) -> SubwordSet:
    """sub_k(w): all subsequences of w of length at most k."""
    if k < 0:
        raise InputError("k must be non-negative")
    letters = tuple(alphabet) if alphabet is not None else tuple(sorted(set(w)))
    members: frozenset[Word] = frozenset({()})
    for a in w:
        members = _grow(members, a, k)
    return SubwordSet(k, letters, members)


def k_equivalent(w1: Word, w2: Word, k: int) -> bool:
    """Simon's congruence: equality of the sub_k sets."""
    return subwords_up_to_k(w1, k).members == subwords_up_to_k(w2, k).members


def class_successor(s: SubwordSet, a: str) -> SubwordSet:
    """The class of wa given the class of w: append `a` to every short member."""
    if a not in s.alphabet:
        raise InputError(f"letter {a!r} not in the alphabet of the class")
    return SubwordSet(s.k, s.alphabet, _grow(s.members, a, s.k))


def canonical_automaton_classes(
    alphabet: Iterable[str], k: int, budget: int = DEFAULT_CLASS_BUDGET
) -> tuple[Automaton, dict[str, SubwordSet]]:
    """The ~_k-canonical DFA plus the class each of its states stands for.

    States are the classes reachable from [epsilon] by appending letters,
    built lazily by BFS and named c0, c1, ... in discovery order.  The
    accepting set is left empty; callers attach their own.
    """
    letters = tuple(alphabet)
    if k < 0:
        raise InputError("k must be non-negative")
    if not letters:
        raise InputError("alphabet must be nonempty")
    start: frozenset[Word] = frozenset({()})
    names: dict[frozenset[Word], str] = {start: "c0"}
    queue = deque([start])
    triples: list[tuple[str, str, str]] = []
    while queue:
        members = queue.popleft()
        for a in letters:
            nxt = _grow(members, a, k)
            if nxt not in names:
                if len(names) >= budget:
                    raise BudgetExceededError(budget, len(names) + 1, "classes")
                names[nxt] = f"c{len(names)}"
                queue.append(nxt)
            triples.append((names[members], a, names[nxt]))
    automaton = make_automaton(names.values(), letters, triples, [names[start]], [])
    classes = {name: SubwordSet(k, letters, members) for members, name in names.items()}
    return automaton, classes


def canonical_automaton(
    alphabet: Iterable[str], k: int, budget: int = DEFAULT_CLASS_BUDGET
) -> Automaton:
    return canonical_automaton_classes(alphabet, k, budget)[0]


def reduce_word(w: Word, k: int) -> Word:
    """Drop every letter that does not grow the sub_k set of the prefix.

    The result is k-equivalent to w and its prefixes are pairwise
    non-k-equivalent, so its length is at most k*|alphabet|^k.
    """
    if k < 0:
        raise InputError("k must be non-negative")
    members: frozenset[Word] = frozenset({()})
    kept: list[str] = []
    for a in w:
        grown = _grow(members, a, k)
        if grown != members:
            kept.append(a)
            members = grown
    return tuple(kept)


def serialize_subword_set(s: SubwordSet) -> str:
    """One member per line in shortlex order, the empty word rendered as '-'."""
    return "\n".join(" ".join(m) if m else "-" for m in s.sorted_members())
