"""Shared helpers: brute-force oracles and random automaton corpora."""

from __future__ import annotations

import itertools
import random

from ptlang import Automaton, determinize, make_automaton, minimize


def brute_subwords(w, k):
    """All subsequences of length <= k by enumerating index subsets."""
    out = {()}
    for r in range(1, min(k, len(w)) + 1):
        for idx in itertools.combinations(range(len(w)), r):
            out.add(tuple(w[i] for i in idx))
    return frozenset(out)


def all_words(alphabet, max_len):
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def random_word(rng, alphabet, max_len):
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def languages_agree(a: Automaton, b: Automaton, words) -> bool:
    return all(a.accepts(w) == b.accepts(w) for w in words)


def has_cycle_dfs(a: Automaton) -> bool:
    """Brute-force cycle detection (self-loops ignored), independent of the
    library's Kahn-style check."""
    adj = {q: set() for q in a.states}
    for (src, _), dsts in a.transitions.items():
        adj[src] |= dsts - {src}
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {q: WHITE for q in a.states}

    def visit(q):
        color[q] = GRAY
        for r in adj[q]:
            if color[r] == GRAY:
                return True
            if color[r] == WHITE and visit(r):
                return True
        color[q] = BLACK
        return False

    return any(color[q] == WHITE and visit(q) for q in sorted(a.states))


def random_nfa(rng: random.Random, max_states=5, letters=("a", "b")) -> Automaton:
    n = rng.randint(1, max_states)
    states = [f"q{i}" for i in range(n)]
    triples = []
    for q in states:
        for a in letters:
            for dst in rng.sample(states, rng.randint(0, n)):
                triples.append((q, a, dst))
    initials = rng.sample(states, rng.randint(1, n))
    accepting = rng.sample(states, rng.randint(0, n))
    return make_automaton(states, letters, triples, initials, accepting)


def random_complete_dfa(rng: random.Random, max_states=6, letters=("a", "b")) -> Automaton:
    n = rng.randint(1, max_states)
    states = [f"q{i}" for i in range(n)]
    triples = [(q, a, rng.choice(states)) for q in states for a in letters]
    accepting = rng.sample(states, rng.randint(0, n))
    return make_automaton(states, letters, triples, [states[0]], accepting)


def random_acyclic_complete_dfa(rng: random.Random, max_states=6, letters=("a", "b")) -> Automaton:
    """Transitions never go backwards in the state order, so the result is
    partially ordered; these are the interesting candidates for PT tests."""
    n = rng.randint(1, max_states)
    states = [f"q{i}" for i in range(n)]
    triples = [
        (states[i], a, states[rng.randint(i, n - 1)])
        for i in range(n)
        for a in letters
    ]
    accepting = rng.sample(states, rng.randint(0, n))
    return make_automaton(states, letters, triples, [states[0]], accepting)


def random_min_dfa(rng: random.Random, max_states=6, letters=("a", "b"), acyclic_bias=0.5) -> Automaton:
    if rng.random() < acyclic_bias:
        a = random_acyclic_complete_dfa(rng, max_states, letters)
    else:
        a = random_complete_dfa(rng, max_states, letters)
    return minimize(determinize(a))


def random_po_complete_nfa(rng: random.Random, max_states=5, letters=("a", "b")) -> Automaton:
    """Complete partially ordered NFA: every transition stays at or above the
    current state in a fixed order."""
    n = rng.randint(1, max_states)
    states = [f"q{i}" for i in range(n)]
    triples = []
    for i in range(n):
        for a in letters:
            choices = states[i:]
            picked = rng.sample(choices, rng.randint(1, len(choices)))
            triples.extend((states[i], a, dst) for dst in picked)
    initials = rng.sample(states, rng.randint(1, n))
    accepting = rng.sample(states, rng.randint(0, n))
    return make_automaton(states, letters, triples, initials, accepting)


# Small hand-built DFAs used across modules.

def dfa_only_epsilon(letters=("a",)) -> Automaton:
    """Minimal complete DFA of the language {empty word}."""
    triples = [("i", a, "d") for a in letters] + [("d", a, "d") for a in letters]
    return make_automaton(["i", "d"], letters, triples, ["i"], ["i"])


def dfa_piece(word, letters) -> Automaton:
    """Minimal complete DFA of the piece language of `word` (all words with
    `word` as a subsequence)."""
    n = len(word)
    states = [f"s{i}" for i in range(n + 1)]
    triples = []
    for i in range(n):
        for a in letters:
            triples.append((states[i], a, states[i + 1] if a == word[i] else states[i]))
    triples += [(states[n], a, states[n]) for a in letters]
    return make_automaton(states, letters, triples, [states[0]], [states[n]])


def dfa_parity() -> Automaton:
    """Minimal DFA of (aa)*: the canonical non-partially-ordered example."""
    return make_automaton(
        ["even", "odd"], ["a"],
        [("even", "a", "odd"), ("odd", "a", "even")],
        ["even"], ["even"],
    )


def dfa_ab_star() -> Automaton:
    """Minimal complete DFA of (ab)*."""
    return make_automaton(
        ["e", "o", "d"], ["a", "b"],
        [("e", "a", "o"), ("e", "b", "d"), ("o", "b", "e"), ("o", "a", "d"),
         ("d", "a", "d"), ("d", "b", "d")],
        ["e"], ["e"],
    )
