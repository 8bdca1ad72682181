"""Command-line front end and the automaton text format.

An automaton file has four header lines (`alphabet:`, `states:`, `initial:`,
`accepting:`) with whitespace-separated tokens, followed by one transition
per line as `src letter dst`.  `#` starts a comment, blank lines are
ignored.  Canonical serialization sorts states and transitions, so a parsed
file re-serializes bit-identically.

Exit codes: 0 = yes/success, 1 = no, 2 = input or contract error,
3 = unknown (a budget ran out).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from ptlang.automata import (
    Automaton,
    BudgetExceededError,
    ContractError,
    CyclicAutomatonError,
    InputError,
    Word,
    check_identity,
    depth,
    determinize,
    make_automaton,
    minimize,
    transition_monoid,
)
from ptlang.subwords import DEFAULT_CLASS_BUDGET, canonical_automaton
from ptlang.pt import is_pt
from ptlang.kpt import (
    ONE_PT_IDENTITIES,
    THREE_PT_IDENTITIES,
    TWO_PT_IDENTITIES,
    PieceExpression,
    decompose,
    is_kpt,
    is_kpt_oracle,
    min_k,
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

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_UNKNOWN = 3

_HEADERS = ("alphabet", "states", "initial", "accepting")


def parse_automaton(text: str) -> Automaton:
    headers: dict[str, list[str]] = {}
    triples: list[tuple[str, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        if _ and head.strip() in _HEADERS:
            key = head.strip()
            if key in headers:
                raise InputError(f"line {lineno}: duplicate header {key!r}")
            headers[key] = rest.split()
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise InputError(
                f"line {lineno}: expected 'src letter dst', got {line!r}"
            )
        triples.append((tokens[0], tokens[1], tokens[2]))
    for key in _HEADERS:
        if key not in headers:
            raise InputError(f"missing header {key!r}")
    try:
        return make_automaton(
            headers["states"],
            headers["alphabet"],
            triples,
            headers["initial"],
            headers["accepting"],
        )
    except InputError as exc:
        raise InputError(f"invalid automaton: {exc}") from exc


def serialize_automaton(a: Automaton) -> str:
    lines = [
        "alphabet: " + " ".join(a.alphabet),
        "states: " + " ".join(sorted(a.states)),
        "initial: " + " ".join(sorted(a.initials)),
        "accepting: " + " ".join(sorted(a.accepting)),
    ]
    triples = sorted(
        (src, letter, dst)
        for (src, letter), dsts in a.transitions.items()
        for dst in dsts
    )
    lines.extend(f"{src} {letter} {dst}" for src, letter, dst in triples)
    return "\n".join(lines) + "\n"


def load_automaton(path: str) -> Automaton:
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_automaton(handle.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def parse_word(text: str) -> Word:
    # The empty word is spelled '-' on the command line.
    if text.strip() == "-":
        return ()
    return tuple(text.split())


def word_to_str(w: Word) -> str:
    return " ".join(w) if w else "-"


def render_piece_expression(e: PieceExpression) -> str:
    if not e.clauses:
        return "FALSE"
    shortlex = lambda w: (len(w), w)
    parts = []
    for clause in e.clauses:
        terms = [".".join(v) for v in sorted(clause.required, key=shortlex)]
        terms += ["!" + ".".join(v) for v in sorted(clause.forbidden, key=shortlex)]
        parts.append("(" + " & ".join(terms) + ")" if terms else "TRUE")
    return " | ".join(parts)


def _emit(args, report: dict, bare: Optional[str] = None) -> None:
    if args.json:
        print(json.dumps(report))
    elif bare is not None:
        print(report[bare])
    else:
        for key, value in report.items():
            print(f"{key}: {value}")


def _min_dfa(a: Automaton) -> Automaton:
    return minimize(determinize(a))


def cmd_info(args) -> int:
    a = load_automaton(args.file)
    try:
        d: object = depth(a)
    except CyclicAutomatonError:
        d = "cyclic"
    _emit(
        args,
        {
            "states": len(a.states),
            "letters": len(a.alphabet),
            "deterministic": "yes" if a.deterministic else "no",
            "complete": "yes" if a.complete else "no",
            "depth": d,
        },
    )
    return EXIT_YES


def cmd_determinize(args) -> int:
    _emit(args, {"automaton": serialize_automaton(determinize(load_automaton(args.file)))}, "automaton")
    return EXIT_YES


def cmd_minimize(args) -> int:
    _emit(args, {"automaton": serialize_automaton(_min_dfa(load_automaton(args.file)))}, "automaton")
    return EXIT_YES


def cmd_is_pt(args) -> int:
    verdict = is_pt(load_automaton(args.file))
    _emit(args, {"piecewise-testable": "yes" if verdict else "no"}, "piecewise-testable")
    return EXIT_YES if verdict else EXIT_NO


def cmd_is_kpt(args) -> int:
    answer = is_kpt(_min_dfa(load_automaton(args.file)), args.k, args.budget)
    _emit(args, {"k-pt": answer.verdict}, "k-pt")
    return {"yes": EXIT_YES, "no": EXIT_NO}.get(answer.verdict, EXIT_UNKNOWN)


def cmd_min_k(args) -> int:
    result = min_k(load_automaton(args.file), args.budget)
    if result is None:
        _emit(args, {"min-k": "not-pt"}, "min-k")
        return EXIT_NO
    if isinstance(result, tuple):
        _emit(args, {"min-k": f"interval {result[0]} {result[1]}"}, "min-k")
        return EXIT_UNKNOWN
    _emit(args, {"min-k": result}, "min-k")
    return EXIT_YES


def cmd_witness(args) -> int:
    answer = is_kpt_oracle(_min_dfa(load_automaton(args.file)), args.k, args.budget)
    if answer.verdict == "no":
        c = answer.certificate
        _emit(
            args,
            {"k": c.k, "w1": word_to_str(c.w1), "w2": word_to_str(c.w2)},
        )
        return EXIT_YES
    if answer.verdict == "yes":
        _emit(args, {"witness": "none (language is k-pt)"}, "witness")
        return EXIT_NO
    _emit(args, {"witness": "unknown"}, "witness")
    return EXIT_UNKNOWN


def cmd_verify(args) -> int:
    a = _min_dfa(load_automaton(args.file))
    ok = verify_pair(a, args.k, parse_word(args.w1), parse_word(args.w2))
    _emit(args, {"certificate": "valid" if ok else "invalid"}, "certificate")
    return EXIT_YES if ok else EXIT_NO


def cmd_decompose(args) -> int:
    expression = decompose(_min_dfa(load_automaton(args.file)), args.k, args.budget)
    _emit(args, {"expression": render_piece_expression(expression)}, "expression")
    return EXIT_YES


def cmd_canonical(args) -> int:
    letters = [f"a{i}" for i in range(1, args.letters + 1)]
    a = canonical_automaton(letters, args.k, args.budget)
    _emit(args, {"automaton": serialize_automaton(a)}, "automaton")
    return EXIT_YES


def cmd_depth(args) -> int:
    _emit(args, {"depth": depth(load_automaton(args.file))}, "depth")
    return EXIT_YES


_IDENTITY_LEVELS = {1: ONE_PT_IDENTITIES, 2: TWO_PT_IDENTITIES, 3: THREE_PT_IDENTITIES}


def cmd_monoid(args) -> int:
    monoid = transition_monoid(_min_dfa(load_automaton(args.file)), args.budget)
    report: dict = {"size": len(monoid.elements)}
    violated = False
    if args.check_identities is not None:
        for lhs, rhs in _IDENTITY_LEVELS[args.check_identities]:
            counterexample = check_identity(monoid, lhs, rhs, args.budget)
            report[f"{lhs}={rhs}"] = "holds" if counterexample is None else "violated"
            violated = violated or counterexample is not None
    _emit(args, report)
    return EXIT_NO if violated else EXIT_YES


def cmd_gen(args) -> int:
    if args.family == "ak":
        report = {"automaton": serialize_automaton(gen_ak(args.k))}
        bare = "automaton"
    elif args.family == "wk":
        report = {"word": word_to_str(gen_wk(args.k))}
        bare = "word"
    elif args.family == "wkn":
        report = {"word": word_to_str(gen_wkn(args.k, args.n))}
        bare = "word"
    elif args.family == "cap":
        letters = tuple(f"a{i}" for i in range(1, args.n + 1))
        report = {"automaton": serialize_automaton(gen_intersection_nfa(letters))}
        bare = "automaton"
    else:  # tight
        report = {
            "automaton": serialize_automaton(
                gen_tight_depth_dfa(args.k, args.n, args.budget)
            )
        }
        bare = "automaton"
    _emit(args, report, bare)
    return EXIT_YES


def cmd_pkn(args) -> int:
    value = pkn_stirling(args.k, args.n) if args.stirling else pkn(args.k, args.n)
    _emit(args, {"pkn": value}, "pkn")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptlang",
        description="Piecewise testability of regular languages.",
    )
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    def add_budget(p, default=DEFAULT_CLASS_BUDGET):
        p.add_argument("--budget", type=int, default=default)

    p = add("info", cmd_info, help="state/letter counts, determinism, depth")
    p.add_argument("file")

    p = add("determinize", cmd_determinize, help="subset construction")
    p.add_argument("file")

    p = add("minimize", cmd_minimize, help="minimal complete DFA (determinizes first)")
    p.add_argument("file")

    p = add("is-pt", cmd_is_pt, help="is the language piecewise testable?")
    p.add_argument("file")

    p = add("is-kpt", cmd_is_kpt, help="is the language k-piecewise testable?")
    p.add_argument("--k", type=int, required=True)
    add_budget(p)
    p.add_argument("file")

    p = add("min-k", cmd_min_k, help="minimal k for which the language is k-PT")
    add_budget(p)
    p.add_argument("file")

    p = add("witness", cmd_witness, help="non-k-PT certificate, if one exists")
    p.add_argument("--k", type=int, required=True)
    add_budget(p)
    p.add_argument("file")

    p = add("verify", cmd_verify, help="verify a non-k-PT certificate")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    p.add_argument("file")

    p = add("decompose", cmd_decompose, help="boolean combination of pieces")
    p.add_argument("--k", type=int, required=True)
    add_budget(p)
    p.add_argument("file")

    p = add("canonical", cmd_canonical, help="the canonical DFA of k-equivalence")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--letters", type=int, required=True)
    add_budget(p)

    p = add("depth", cmd_depth, help="longest path of an acyclic automaton")
    p.add_argument("file")

    p = add("monoid", cmd_monoid, help="transition monoid of the minimal DFA")
    p.add_argument("--check-identities", type=int, choices=(1, 2, 3))
    add_budget(p, default=10**6)
    p.add_argument("file")

    p = add("gen", cmd_gen, help="generate extremal automata and words")
    gen_sub = p.add_subparsers(dest="family", required=True)
    g = gen_sub.add_parser("ak")
    g.add_argument("k", type=int)
    g = gen_sub.add_parser("wk")
    g.add_argument("k", type=int)
    g = gen_sub.add_parser("wkn")
    g.add_argument("k", type=int)
    g.add_argument("n", type=int)
    g = gen_sub.add_parser("cap")
    g.add_argument("n", type=int)
    g = gen_sub.add_parser("tight")
    g.add_argument("k", type=int)
    g.add_argument("n", type=int)
    add_budget(g)
    for g in gen_sub.choices.values():
        g.set_defaults(func=cmd_gen)

    p = add("pkn", cmd_pkn, help="the tight depth bound C(k+n,k)-1")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--stirling", action="store_true")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (InputError, ContractError, CyclicAutomatonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
