"""k-piecewise testability: deciders, certificates and piece decompositions.

The specialized deciders for k = 0..3 run directly on the minimal DFA; the
generic oracle pairs ~_k classes with the states they reach and answers
"no" with a two-word certificate as soon as one class reaches two distinct
states.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

from ptlang.automata import (
    Automaton,
    BudgetExceededError,
    ContractError,
    InputError,
    Word,
    check_identity,
    depth,
    determinize,
    minimize,
    transition_monoid,
)
from ptlang.pt import is_pt_min_dfa
from ptlang.subwords import DEFAULT_CLASS_BUDGET, _grow, embeds, k_equivalent

ONE_PT_IDENTITIES = (("x", "xx"), ("xy", "yx"))
TWO_PT_IDENTITIES = (("xyxy", "yxyx"), ("xyzx", "xyxzx"))
THREE_PT_IDENTITIES = (
    ("xyxyxy", "yxyxyx"),
    ("xzyxvxwy", "xzxyxvxwy"),
    ("ywxvxyzx", "ywxvxyxzx"),
)


@dataclass(frozen=True)
class Certificate:
    """Witness of non-k-piecewise-testability: two k-equivalent words that
    drive the minimal DFA to two different states."""

    k: int
    w1: Word
    w2: Word
    state1: str
    state2: str


@dataclass(frozen=True)
class Clause:
    """Words that must embed into a member, and words that must not."""

    required: frozenset[Word]
    forbidden: frozenset[Word]


@dataclass(frozen=True)
class PieceExpression:
    """Union of clauses; denotes a boolean combination of pieces L_v."""

    clauses: tuple[Clause, ...]


@dataclass(frozen=True)
class OracleAnswer:
    verdict: str  # "yes" | "no" | "unknown"
    certificate: Optional[Certificate] = None


def _require_min_dfa(a: Automaton, op: str) -> None:
    if not a.deterministic or not a.complete:
        raise ContractError(f"{op} expects a minimal complete DFA")


def is_0pt(a: Automaton) -> bool:
    """A minimal DFA recognizes a 0-PT language iff it has a single state."""
    _require_min_dfa(a, "is_0pt")
    return len(a.states) == 1


def is_1pt(a: Automaton) -> bool:
    """Letter-level characterization of 1-PT on the minimal DFA:
    every transition target is stable under its letter, and letters commute."""
    _require_min_dfa(a, "is_1pt")
    for p in a.states:
        for x in a.alphabet:
            q = a.dstep(p, x)
            if a.dstep(q, x) != q:
                return False
        for x in a.alphabet:
            for y in a.alphabet:
                if a.dstate_from(p, (x, y)) != a.dstate_from(p, (y, x)):
                    return False
    return True


def reachable_containing(a: Automaton, letter: str) -> frozenset[str]:
    """States reachable from the initial state by a word containing `letter`."""
    if not a.deterministic:
        raise ContractError("reachable_containing expects a DFA")
    if letter not in a.alphabet:
        raise InputError(f"unknown letter {letter!r}")
    start = (next(iter(a.initials)), False)
    seen = {start}
    queue = deque([start])
    found = set()
    while queue:
        q, flag = queue.popleft()
        if flag:
            found.add(q)
        for c in a.alphabet:
            nxt_state = a.dstep(q, c)
            if nxt_state is None:
                continue
            nxt = (nxt_state, flag or c == letter)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(found)


def is_2pt(a: Automaton) -> bool:
    """2-PT on the minimal DFA: PT plus s.ba = s.aba for every letter a, every
    state s reachable by a word containing a, and every b in the alphabet or
    empty."""
    _require_min_dfa(a, "is_2pt")
    if not is_pt_min_dfa(a):
        return False
    for x in a.alphabet:
        for s in reachable_containing(a, x):
            for b in (*a.alphabet, None):
                prefix = (b,) if b is not None else ()
                if a.dstate_from(s, prefix + (x,)) != a.dstate_from(s, (x,) + prefix + (x,)):
                    return False
    return True


def is_3pt(
    a: Automaton,
    monoid_budget: int = 10**6,
    assignment_budget: int = 10**6,
) -> Optional[bool]:
    """3-PT via the three defining identities of the transition monoid.

    Returns None when the monoid or the assignment space outgrows its
    budget; callers fall back to the generic oracle.
    """
    _require_min_dfa(a, "is_3pt")
    try:
        monoid = transition_monoid(a, budget=monoid_budget)
    except BudgetExceededError:
        return None
    undecided = False
    for lhs, rhs in THREE_PT_IDENTITIES:
        try:
            if check_identity(monoid, lhs, rhs, budget=assignment_budget) is not None:
                return False
        except BudgetExceededError:
            undecided = True
    return None if undecided else True


def _class_state_map(
    a: Automaton, k: int, budget: int
) -> Union[Certificate, dict[frozenset[Word], tuple[str, Word]]]:
    """BFS over (~_k class, DFA state) pairs from ([epsilon], initial).

    Returns the functional class-to-(state, access word) map when every class
    meets a single state, or a Certificate for the first class caught meeting
    two.
    """
    start_class: frozenset[Word] = frozenset({()})
    start_state = next(iter(a.initials))
    seen: dict[frozenset[Word], tuple[str, Word]] = {start_class: (start_state, ())}
    queue = deque([(start_class, start_state, ())])
    while queue:
        members, q, w = queue.popleft()
        for letter in a.alphabet:
            nxt_members = _grow(members, letter, k)
            nxt_state = a.dstep(q, letter)
            nxt_word = w + (letter,)
            if nxt_members not in seen:
                if len(seen) >= budget:
                    raise BudgetExceededError(budget, len(seen) + 1, "classes")
                seen[nxt_members] = (nxt_state, nxt_word)
                queue.append((nxt_members, nxt_state, nxt_word))
            else:
                prev_state, prev_word = seen[nxt_members]
                if prev_state != nxt_state:
                    return Certificate(k, prev_word, nxt_word, prev_state, nxt_state)
    return seen


def is_kpt_oracle(
    a: Automaton, k: int, budget: int = DEFAULT_CLASS_BUDGET
) -> OracleAnswer:
    """Exact k-PT test on a minimal complete DFA by class/state reachability."""
    _require_min_dfa(a, "is_kpt_oracle")
    if k < 0:
        raise InputError("k must be non-negative")
    try:
        outcome = _class_state_map(a, k, budget)
    except BudgetExceededError:
        return OracleAnswer("unknown")
    if isinstance(outcome, Certificate):
        return OracleAnswer("no", outcome)
    return OracleAnswer("yes")


def is_kpt(a: Automaton, k: int, budget: int = DEFAULT_CLASS_BUDGET) -> OracleAnswer:
    """Decide k-PT on a minimal complete DFA, cheapest check first.

    k = 0..2 use the specialized deciders; k = 3 tries the monoid identities
    and falls back to the oracle when they exceed their budget; larger k go
    straight to the oracle.
    """
    _require_min_dfa(a, "is_kpt")
    if k == 0:
        return OracleAnswer("yes" if is_0pt(a) else "no")
    if k == 1:
        return OracleAnswer("yes" if is_1pt(a) else "no")
    if k == 2:
        return OracleAnswer("yes" if is_2pt(a) else "no")
    if k == 3:
        verdict = is_3pt(a)
        if verdict is not None:
            return OracleAnswer("yes" if verdict else "no")
    return is_kpt_oracle(a, k, budget)


def verify_pair(a: Automaton, k: int, w1: Word, w2: Word) -> bool:
    """True iff (w1, w2) witnesses non-k-PT: k-equivalent words reaching two
    distinct states of the DFA."""
    for w in (w1, w2):
        for letter in w:
            if letter not in a.alphabet:
                raise InputError(f"unknown letter {letter!r} in witness word")
    if not k_equivalent(w1, w2, k):
        return False
    s1, s2 = a.dstate(w1), a.dstate(w2)
    return s1 is not None and s2 is not None and s1 != s2


def make_certificate(a: Automaton, k: int, w1: Word, w2: Word) -> Certificate:
    """Package a witness pair with the states the words actually reach."""
    s1, s2 = a.dstate(w1), a.dstate(w2)
    if s1 is None or s2 is None:
        raise ContractError("witness words must reach a state of the DFA")
    return Certificate(k, w1, w2, s1, s2)


def verify_certificate(a: Automaton, c: Certificate) -> bool:
    """Recompute everything a certificate claims and check it against `a`."""
    if not verify_pair(a, c.k, c.w1, c.w2):
        return False
    return a.dstate(c.w1) == c.state1 and a.dstate(c.w2) == c.state2


def min_k(
    a: Automaton, budget: int = DEFAULT_CLASS_BUDGET
) -> Union[int, tuple[int, int], None]:
    """The minimal k for which the language is k-PT.

    Returns the exact k, or the interval (lo, hi) when a budget ran out at
    lo (hi is the depth of the minimal DFA, a guaranteed upper bound), or
    None when the language is not piecewise testable at all.
    """
    m = minimize(determinize(a))
    if not is_pt_min_dfa(m):
        return None
    hi = depth(m)
    for k in range(hi + 1):
        answer = is_kpt(m, k, budget)
        if answer.verdict == "yes":
            return k
        if answer.verdict == "unknown":
            return (k, hi)
    return hi


def _maximal_members(members: frozenset[Word]) -> frozenset[Word]:
    return frozenset(
        w
        for w in members
        if w and not any(u != w and embeds(w, u) for u in members)
    )


def _minimal_complement(
    members: frozenset[Word], alphabet: tuple[str, ...], k: int
) -> frozenset[Word]:
    """Minimal missing words: every single-letter deletion is a member."""
    full: set[Word] = {()}
    frontier: list[Word] = [()]
    for _ in range(k):
        frontier = [w + (a,) for w in frontier for a in alphabet]
        full.update(frontier)
    out = set()
    for v in full - members:
        deletions = {v[:i] + v[i + 1 :] for i in range(len(v))}
        if deletions <= members:
            out.add(v)
    return frozenset(out)


def decompose(
    a: Automaton, k: int, budget: int = DEFAULT_CLASS_BUDGET
) -> PieceExpression:
    """Write the language of a k-PT minimal DFA as a union of clauses, one per
    accepted ~_k class: the maximal members are required, the minimal missing
    words are forbidden."""
    _require_min_dfa(a, "decompose")
    outcome = _class_state_map(a, k, budget)
    if isinstance(outcome, Certificate):
        raise ContractError("decompose requires a k-PT language at this k")
    clauses = []
    for members, (state, _word) in sorted(
        outcome.items(), key=lambda item: (len(item[1][1]), item[1][1])
    ):
        if state in a.accepting:
            clauses.append(
                Clause(
                    _maximal_members(members),
                    _minimal_complement(members, a.alphabet, k),
                )
            )
    return PieceExpression(tuple(clauses))


def eval_piece_expression(e: PieceExpression, w: Word) -> bool:
    """Union-of-clauses semantics via embedding."""
    return any(
        all(embeds(v, w) for v in clause.required)
        and not any(embeds(v, w) for v in clause.forbidden)
        for clause in e.clauses
    )
