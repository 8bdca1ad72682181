"""Core automaton model and the classical constructions on it.

A single :class:`Automaton` type covers both NFAs and DFAs; determinism is a
derived property, never a separate type.  All operations are pure: they never
mutate their input and return fresh automata.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

Word = tuple[str, ...]

DEFAULT_MONOID_BUDGET = 10**6
DEFAULT_ASSIGNMENT_BUDGET = 10**6


class InputError(ValueError):
    """Malformed input: unknown letters or states, unparsable files."""


class ContractError(ValueError):
    """An operation's precondition was violated by the caller."""


class CyclicAutomatonError(Exception):
    """The transition graph has a cycle through distinct states, so the
    acyclic-only notion of depth does not apply."""


class BudgetExceededError(RuntimeError):
    """An explicit size budget was exhausted before the computation finished."""

    def __init__(self, budget: int, reached: int, what: str = "items"):
        super().__init__(f"budget of {budget} {what} exceeded (reached {reached})")
        self.budget = budget
        self.reached = reached


@dataclass(frozen=True)
class Automaton:
    """Nondeterministic finite automaton (a DFA is a validated restriction).

    `transitions` maps (state, letter) to the frozenset of target states;
    pairs with no transition are simply absent.
    """

    states: frozenset[str]
    alphabet: tuple[str, ...]
    transitions: Mapping[tuple[str, str], frozenset[str]]
    initials: frozenset[str]
    accepting: frozenset[str]

    @property
    def deterministic(self) -> bool:
        return len(self.initials) == 1 and all(
            len(dsts) <= 1 for dsts in self.transitions.values()
        )

    @property
    def complete(self) -> bool:
        return all(
            self.transitions.get((q, a)) for q in self.states for a in self.alphabet
        )

    def targets(self, q: str, a: str) -> frozenset[str]:
        return self.transitions.get((q, a), frozenset())

    def step(self, current: Iterable[str], a: str) -> frozenset[str]:
        if a not in self.alphabet:
            raise InputError(f"unknown letter {a!r}")
        out: set[str] = set()
        for q in current:
            out |= self.targets(q, a)
        return frozenset(out)

    def run(self, w: Word) -> frozenset[str]:
        """The set of states reached from the initial states under `w`."""
        current = self.initials
        for a in w:
            current = self.step(current, a)
        return current

    def accepts(self, w: Word) -> bool:
        return bool(self.run(w) & self.accepting)

    def dstate(self, w: Word) -> Optional[str]:
        """The single state a DFA reaches under `w`, or None if undefined."""
        if not self.deterministic:
            raise ContractError("dstate requires a deterministic automaton")
        reached = self.run(w)
        return next(iter(reached)) if reached else None

    def dstep(self, q: str, a: str) -> Optional[str]:
        dsts = self.targets(q, a)
        return next(iter(dsts)) if dsts else None

    def dstate_from(self, q: str, w: Word) -> Optional[str]:
        """Deterministic run starting at `q` instead of the initial state."""
        for a in w:
            if q is None:
                return None
            q = self.dstep(q, a)
        return q


def make_automaton(
    states: Iterable[str],
    alphabet: Iterable[str],
    transitions: Iterable[tuple[str, str, str]],
    initials: Iterable[str],
    accepting: Iterable[str],
) -> Automaton:
    """Build and validate an automaton from transition triples (src, letter, dst)."""
    state_set = frozenset(states)
    letters = tuple(alphabet)
    letter_set = set(letters)
    if len(letter_set) != len(letters):
        raise InputError("duplicate letters in alphabet")
    table: dict[tuple[str, str], set[str]] = {}
    for src, letter, dst in transitions:
        if src not in state_set:
            raise InputError(f"transition source {src!r} not a declared state")
        if dst not in state_set:
            raise InputError(f"transition target {dst!r} not a declared state")
        if letter not in letter_set:
            raise InputError(f"transition letter {letter!r} not in alphabet")
        table.setdefault((src, letter), set()).add(dst)
    init = frozenset(initials)
    acc = frozenset(accepting)
    for name, group in (("initial", init), ("accepting", acc)):
        bad = group - state_set
        if bad:
            raise InputError(f"{name} state {sorted(bad)[0]!r} not a declared state")
    frozen = {key: frozenset(dsts) for key, dsts in table.items()}
    return Automaton(state_set, letters, frozen, init, acc)


def _subset_name(members: Iterable[str]) -> str:
    return "{" + ",".join(sorted(members)) + "}"


def determinize(a: Automaton) -> Automaton:
    """Subset construction: a deterministic complete language-equivalent DFA.

    States are the reachable subsets, canonically named by their sorted member
    lists; the empty subset acts as the sink when it is reachable.
    """
    start = a.initials
    seen: dict[frozenset[str], str] = {start: _subset_name(start)}
    queue = deque([start])
    triples: list[tuple[str, str, str]] = []
    while queue:
        current = queue.popleft()
        for letter in a.alphabet:
            nxt = frozenset(
                itertools.chain.from_iterable(a.targets(q, letter) for q in current)
            )
            if nxt not in seen:
                seen[nxt] = _subset_name(nxt)
                queue.append(nxt)
            triples.append((seen[current], letter, seen[nxt]))
    accepting = {name for subset, name in seen.items() if subset & a.accepting}
    return make_automaton(seen.values(), a.alphabet, triples, [seen[start]], accepting)


def minimize(a: Automaton) -> Automaton:
    """Minimal complete DFA by Moore partition refinement.

    Requires a deterministic complete input; unreachable states are dropped
    first.  Each block of merged states is named after its lexicographically
    smallest member, which keeps names short and the result reproducible.
    """
    if not a.deterministic:
        raise ContractError("minimize requires a deterministic automaton")
    if not a.complete:
        raise ContractError("minimize requires a complete automaton")

    start = next(iter(a.initials))
    reachable = [start]
    seen = {start}
    for q in reachable:
        for letter in a.alphabet:
            nxt = a.dstep(q, letter)
            if nxt not in seen:
                seen.add(nxt)
                reachable.append(nxt)

    index = {q: i for i, q in enumerate(reachable)}
    letter_count = len(a.alphabet)
    succ = [
        [index[a.dstep(q, letter)] for letter in a.alphabet] for q in reachable
    ]

    block = [1 if q in a.accepting else 0 for q in reachable]
    while True:
        signatures: dict[tuple[int, ...], int] = {}
        new_block = []
        for i in range(len(reachable)):
            sig = (block[i], *(block[succ[i][j]] for j in range(letter_count)))
            new_block.append(signatures.setdefault(sig, len(signatures)))
        if new_block == block:
            break
        block = new_block

    members: dict[int, list[str]] = {}
    for i, q in enumerate(reachable):
        members.setdefault(block[i], []).append(q)
    name = {b: min(qs) for b, qs in members.items()}
    triples = []
    emitted = set()
    for i in range(len(reachable)):
        b = block[i]
        if b in emitted:
            continue
        emitted.add(b)
        for j, letter in enumerate(a.alphabet):
            triples.append((name[b], letter, name[block[succ[i][j]]]))
    accepting = {name[block[i]] for i, q in enumerate(reachable) if q in a.accepting}
    return make_automaton(name.values(), a.alphabet, triples, [name[block[index[start]]]], accepting)


def complete_with_sink(a: Automaton, sink_name: str = "sink") -> Automaton:
    """Route every missing transition to a fresh non-accepting sink state.

    Already-complete automata are returned unchanged.
    """
    if a.complete and a.states:
        return a
    sink = sink_name
    while sink in a.states:
        sink = sink + "'"
    triples = [
        (src, letter, dst)
        for (src, letter), dsts in a.transitions.items()
        for dst in dsts
    ]
    for q in a.states | {sink}:
        for letter in a.alphabet:
            if not a.targets(q, letter):
                triples.append((q, letter, sink))
    return make_automaton(
        a.states | {sink}, a.alphabet, triples, a.initials, a.accepting
    )


def _successors_without_self_loops(a: Automaton) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {q: set() for q in a.states}
    for (src, _letter), dsts in a.transitions.items():
        for dst in dsts:
            if dst != src:
                adj[src].add(dst)
    return adj


def _topological_order(a: Automaton) -> Optional[list[str]]:
    """States in topological order of the self-loop-free graph, or None if cyclic."""
    adj = _successors_without_self_loops(a)
    indegree = {q: 0 for q in a.states}
    for src, dsts in adj.items():
        for dst in dsts:
            indegree[dst] += 1
    queue = deque(sorted(q for q, d in indegree.items() if d == 0))
    order = []
    while queue:
        q = queue.popleft()
        order.append(q)
        for dst in adj[q]:
            indegree[dst] -= 1
            if indegree[dst] == 0:
                queue.append(dst)
    if len(order) != len(a.states):
        return None
    return order


def is_partially_ordered(a: Automaton) -> bool:
    """True iff reachability is a partial order: no cycles but self-loops."""
    return _topological_order(a) is not None


def depth(a: Automaton) -> int:
    """Number of transitions on the longest path, self-loops ignored.

    Only defined for partially ordered automata, where the longest simple
    path is the longest path of the self-loop-free DAG.
    """
    order = _topological_order(a)
    if order is None:
        raise CyclicAutomatonError("depth is undefined on cyclic automata")
    adj = _successors_without_self_loops(a)
    longest = {q: 0 for q in a.states}
    for q in order:
        for dst in adj[q]:
            if longest[q] + 1 > longest[dst]:
                longest[dst] = longest[q] + 1
    return max(longest.values(), default=0)


def self_loop_alphabet(a: Automaton, p: str) -> frozenset[str]:
    """The letters under which `p` has a self-loop."""
    if p not in a.states:
        raise InputError(f"unknown state {p!r}")
    return frozenset(letter for letter in a.alphabet if p in a.targets(p, letter))


StateMap = tuple[int, ...]


@dataclass(frozen=True)
class TransitionMonoid:
    """Closure of the letter-induced state maps under composition.

    Elements are total maps on the states of a deterministic complete
    automaton, encoded as tuples of state indices over `state_order`.
    """

    state_order: tuple[str, ...]
    elements: frozenset[StateMap]
    generators: Mapping[str, StateMap]
    identity: StateMap = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "identity", tuple(range(len(self.state_order))))

    @staticmethod
    def compose(first: StateMap, second: StateMap) -> StateMap:
        """The map 'apply first, then second'."""
        return tuple(second[x] for x in first)

    def evaluate(self, assignment: Mapping[str, StateMap], word: str) -> StateMap:
        out = self.identity
        for symbol in word:
            out = self.compose(out, assignment[symbol])
        return out


def transition_monoid(
    a: Automaton, budget: int = DEFAULT_MONOID_BUDGET
) -> TransitionMonoid:
    """Generate the transition monoid of a deterministic complete automaton."""
    if not a.deterministic or not a.complete:
        raise ContractError("transition_monoid requires a deterministic complete automaton")
    order = tuple(sorted(a.states))
    index = {q: i for i, q in enumerate(order)}
    generators = {
        letter: tuple(index[a.dstep(q, letter)] for q in order)
        for letter in a.alphabet
    }
    identity = tuple(range(len(order)))
    elements = {identity}
    queue = deque([identity])
    while queue:
        m = queue.popleft()
        for g in generators.values():
            composed = TransitionMonoid.compose(m, g)
            if composed not in elements:
                if len(elements) >= budget:
                    raise BudgetExceededError(budget, len(elements) + 1, "monoid elements")
                elements.add(composed)
                queue.append(composed)
    return TransitionMonoid(order, frozenset(elements), generators)


def check_identity(
    m: TransitionMonoid,
    lhs: str,
    rhs: str,
    budget: int = DEFAULT_ASSIGNMENT_BUDGET,
) -> Optional[dict[str, StateMap]]:
    """Check an identity such as ``xy = yx`` over all assignments of elements.

    `lhs` and `rhs` are words over single-character variable names.  Returns
    None when the identity holds, otherwise one violating assignment.
    """
    variables = sorted(set(lhs) | set(rhs))
    size = len(m.elements)
    if size ** len(variables) > budget:
        raise BudgetExceededError(budget, size ** len(variables), "assignments")
    pool = sorted(m.elements)
    if size * size <= 4 * 10**6:
        # Precomputed composition table: word evaluation becomes index lookups.
        index = {e: i for i, e in enumerate(pool)}
        table = [
            [index[TransitionMonoid.compose(e, f)] for f in pool] for e in pool
        ]
        identity = index[m.identity]
        lhs_vars = [variables.index(c) for c in lhs]
        rhs_vars = [variables.index(c) for c in rhs]
        for choice in itertools.product(range(size), repeat=len(variables)):
            left = identity
            for v in lhs_vars:
                left = table[left][choice[v]]
            right = identity
            for v in rhs_vars:
                right = table[right][choice[v]]
            if left != right:
                return {variables[i]: pool[choice[i]] for i in range(len(variables))}
        return None
    for choice in itertools.product(pool, repeat=len(variables)):
        assignment = dict(zip(variables, choice))
        if m.evaluate(assignment, lhs) != m.evaluate(assignment, rhs):
            return assignment
    return None
