"""Regular expressions and finite automata.

Regexes use `~` for the empty set, `_` for the empty word, `|` for
alternation, juxtaposition for concatenation and `*` for iteration,
with star binding tighter than concatenation and concatenation tighter
than alternation.  Both metacharacters exist so that `~` and `_` stay
available as ordinary letters of *encoded* languages elsewhere in the
package; inside a regex they are never literals.

Automata are immutable and safe to share between threads.  NFAs may
carry silent transitions (label ``None``); DFAs are total over their
alphabet, with any required dead state materialized on construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

from .errors import AlphabetError, MalformedInputError, RegexSyntaxError

METACHARS = frozenset("~_()|*")


# --------------------------------------------------------------------------
# Regex ASTs


@dataclass(frozen=True)
class EmptySet:
    pass


@dataclass(frozen=True)
class EmptyWord:
    pass


@dataclass(frozen=True)
class Lit:
    symbol: str


@dataclass(frozen=True)
class Concat:
    left: "RegexNode"
    right: "RegexNode"


@dataclass(frozen=True)
class Alt:
    left: "RegexNode"
    right: "RegexNode"


@dataclass(frozen=True)
class Star:
    child: "RegexNode"


RegexNode = Union[EmptySet, EmptyWord, Lit, Concat, Alt, Star]


@dataclass(frozen=True)
class RegexAst:
    """A parsed regex together with the alphabet it was parsed against."""

    root: RegexNode
    alphabet: frozenset[str]


def parse_regex(text: str, alphabet: Iterable[str]) -> RegexAst:
    """Parse `text` over `alphabet` into an ast.

    Raises RegexSyntaxError (with position) on bad syntax or on a
    literal outside the alphabet, and AlphabetError if the alphabet
    itself contains a metacharacter.
    """
    alpha = frozenset(alphabet)
    bad = alpha & METACHARS
    if bad:
        raise AlphabetError(f"alphabet may not contain metacharacters: {sorted(bad)}")
    for sym in alpha:
        if len(sym) != 1:
            raise AlphabetError(f"alphabet symbols must be single characters: {sym!r}")

    pos = 0

    def peek() -> Optional[str]:
        return text[pos] if pos < len(text) else None

    def parse_alt() -> RegexNode:
        nonlocal pos
        node = parse_cat()
        while peek() == "|":
            pos += 1
            node = Alt(node, parse_cat())
        return node

    def parse_cat() -> RegexNode:
        nonlocal pos
        node = None
        while True:
            c = peek()
            if c is None or c in "|)":
                break
            nxt = parse_rep()
            node = nxt if node is None else Concat(node, nxt)
        if node is None:
            raise RegexSyntaxError("empty expression", pos)
        return node

    def parse_rep() -> RegexNode:
        nonlocal pos
        node = parse_atom()
        while peek() == "*":
            pos += 1
            node = Star(node)
        return node

    def parse_atom() -> RegexNode:
        nonlocal pos
        c = peek()
        if c == "(":
            opening = pos
            pos += 1
            node = parse_alt()
            if peek() != ")":
                raise RegexSyntaxError("unclosed group", opening)
            pos += 1
            return node
        if c == "~":
            pos += 1
            return EmptySet()
        if c == "_":
            pos += 1
            return EmptyWord()
        if c == "*":
            raise RegexSyntaxError("star needs an operand", pos)
        if c is None or c in "|)":
            raise RegexSyntaxError("expected an atom", pos)
        if c not in alpha:
            raise RegexSyntaxError(f"literal {c!r} not in alphabet", pos)
        pos += 1
        return Lit(c)

    root = parse_alt()
    if pos != len(text):
        raise RegexSyntaxError("unexpected trailing input", pos)
    return RegexAst(root, alpha)


# --------------------------------------------------------------------------
# Automata


Transition = tuple[int, Optional[str], int]


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic finite automaton; label None means a silent move."""

    states: int
    alphabet: frozenset[str]
    transitions: frozenset[Transition]
    start: int
    finals: frozenset[int]

    def __post_init__(self):
        if self.states < 1:
            raise MalformedInputError("states: need at least one state")
        if not 0 <= self.start < self.states:
            raise MalformedInputError(f"start: state {self.start} out of range")
        for f in self.finals:
            if not 0 <= f < self.states:
                raise MalformedInputError(f"finals: state {f} out of range")
        for src, label, dst in self.transitions:
            if not (0 <= src < self.states and 0 <= dst < self.states):
                raise MalformedInputError(f"transitions: state out of range in ({src}, {label!r}, {dst})")
            if label is not None and label not in self.alphabet:
                raise MalformedInputError(f"transitions: label {label!r} not in alphabet")

    def moves(self) -> dict[tuple[int, Optional[str]], set[int]]:
        out: dict[tuple[int, Optional[str]], set[int]] = {}
        for src, label, dst in self.transitions:
            out.setdefault((src, label), set()).add(dst)
        return out


@dataclass(frozen=True, eq=True)
class Dfa:
    """Deterministic finite automaton, total over its alphabet."""

    states: int
    alphabet: frozenset[str]
    delta: Mapping[tuple[int, str], int] = field(hash=False)
    start: int
    finals: frozenset[int]

    def __post_init__(self):
        if self.states < 1:
            raise MalformedInputError("states: need at least one state")
        if not 0 <= self.start < self.states:
            raise MalformedInputError(f"start: state {self.start} out of range")
        for f in self.finals:
            if not 0 <= f < self.states:
                raise MalformedInputError(f"finals: state {f} out of range")
        for (src, sym), dst in self.delta.items():
            if not (0 <= src < self.states and 0 <= dst < self.states):
                raise MalformedInputError(f"transitions: state out of range in ({src}, {sym!r}, {dst})")
            if sym not in self.alphabet:
                raise MalformedInputError(f"transitions: label {sym!r} not in alphabet")
        for q in range(self.states):
            for sym in self.alphabet:
                if (q, sym) not in self.delta:
                    raise MalformedInputError(f"transitions: missing move for state {q} on {sym!r}")


Automaton = Union[Nfa, Dfa]


def _silent_map(nfa: Nfa) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for src, label, dst in nfa.transitions:
        if label is None:
            out.setdefault(src, []).append(dst)
    return out


def closure(nfa: Nfa, states: Iterable[int]) -> frozenset[int]:
    """States reachable from `states` by silent moves alone."""
    silent = _silent_map(nfa)
    seen = set(states)
    todo = list(seen)
    while todo:
        q = todo.pop()
        for r in silent.get(q, ()):
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return frozenset(seen)


def regex_to_nfa(ast: RegexAst) -> Nfa:
    """Compile an ast to an NFA with silent moves (Thompson-style)."""
    transitions: list[Transition] = []
    counter = 0

    def fresh() -> int:
        nonlocal counter
        counter += 1
        return counter - 1

    def build(node: RegexNode) -> tuple[int, int]:
        if isinstance(node, EmptySet):
            return fresh(), fresh()
        if isinstance(node, EmptyWord):
            s, t = fresh(), fresh()
            transitions.append((s, None, t))
            return s, t
        if isinstance(node, Lit):
            s, t = fresh(), fresh()
            transitions.append((s, node.symbol, t))
            return s, t
        if isinstance(node, Concat):
            l_in, l_out = build(node.left)
            r_in, r_out = build(node.right)
            transitions.append((l_out, None, r_in))
            return l_in, r_out
        if isinstance(node, Alt):
            s, t = fresh(), fresh()
            for part in (node.left, node.right):
                p_in, p_out = build(part)
                transitions.append((s, None, p_in))
                transitions.append((p_out, None, t))
            return s, t
        if isinstance(node, Star):
            s, t = fresh(), fresh()
            c_in, c_out = build(node.child)
            transitions.append((s, None, c_in))
            transitions.append((c_out, None, t))
            transitions.append((s, None, t))
            transitions.append((c_out, None, c_in))
            return s, t
        raise TypeError(f"not a regex node: {node!r}")

    start, final = build(ast.root)
    return Nfa(
        states=counter,
        alphabet=ast.alphabet,
        transitions=frozenset(transitions),
        start=start,
        finals=frozenset({final}),
    )


def determinize(nfa: Nfa) -> Dfa:
    """Subset-construct an equivalent total DFA (reachable part only)."""
    symbols = sorted(nfa.alphabet)
    moves = nfa.moves()
    start_set = closure(nfa, {nfa.start})
    index: dict[frozenset[int], int] = {start_set: 0}
    order: list[frozenset[int]] = [start_set]
    delta: dict[tuple[int, str], int] = {}
    queue = deque([start_set])
    while queue:
        subset = queue.popleft()
        src = index[subset]
        for sym in symbols:
            targets: set[int] = set()
            for q in subset:
                targets.update(moves.get((q, sym), ()))
            target_set = closure(nfa, targets) if targets else frozenset()
            if target_set not in index:
                index[target_set] = len(order)
                order.append(target_set)
                queue.append(target_set)
            delta[(src, sym)] = index[target_set]
    finals = frozenset(i for i, subset in enumerate(order) if subset & nfa.finals)
    return Dfa(
        states=len(order),
        alphabet=nfa.alphabet,
        delta=delta,
        start=0,
        finals=finals,
    )


def dfa_to_nfa(dfa: Dfa) -> Nfa:
    transitions = frozenset((src, sym, dst) for (src, sym), dst in dfa.delta.items())
    return Nfa(dfa.states, dfa.alphabet, transitions, dfa.start, dfa.finals)


def accepts(automaton: Automaton, word: str) -> bool:
    """Membership test.  Symbols outside the alphabet raise AlphabetError."""
    for c in word:
        if c not in automaton.alphabet:
            raise AlphabetError(f"symbol {c!r} not in automaton alphabet")
    if isinstance(automaton, Dfa):
        q = automaton.start
        for c in word:
            q = automaton.delta[(q, c)]
        return q in automaton.finals
    moves = automaton.moves()
    current = closure(automaton, {automaton.start})
    for c in word:
        targets: set[int] = set()
        for q in current:
            targets.update(moves.get((q, c), ()))
        if not targets:
            return False
        current = closure(automaton, targets)
    return bool(current & automaton.finals)


def intersect_dfa(a: Dfa, b: Dfa) -> Dfa:
    """Product DFA for L(a) ∩ L(b); reachable product states only."""
    if a.alphabet != b.alphabet:
        raise AlphabetError("intersect_dfa requires identical alphabets")
    symbols = sorted(a.alphabet)
    start = (a.start, b.start)
    index: dict[tuple[int, int], int] = {start: 0}
    order = [start]
    delta: dict[tuple[int, str], int] = {}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        src = index[pair]
        for sym in symbols:
            target = (a.delta[(pair[0], sym)], b.delta[(pair[1], sym)])
            if target not in index:
                index[target] = len(order)
                order.append(target)
                queue.append(target)
            delta[(src, sym)] = index[target]
    finals = frozenset(
        i for i, (qa, qb) in enumerate(order) if qa in a.finals and qb in b.finals
    )
    return Dfa(len(order), a.alphabet, delta, 0, finals)


def is_empty(automaton: Automaton) -> bool:
    """True iff no final state is reachable (silent moves included)."""
    if isinstance(automaton, Dfa):
        succ: dict[int, set[int]] = {}
        for (src, _sym), dst in automaton.delta.items():
            succ.setdefault(src, set()).add(dst)
    else:
        succ = {}
        for src, _label, dst in automaton.transitions:
            succ.setdefault(src, set()).add(dst)
    seen = {automaton.start}
    todo = [automaton.start]
    while todo:
        q = todo.pop()
        if q in automaton.finals:
            return False
        for r in succ.get(q, ()):
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return not (seen & automaton.finals)


def erase_letters(automaton: Automaton, erase: Iterable[str]) -> Nfa:
    """Image under the homomorphism sending each symbol in `erase` to the
    empty word and fixing the rest: erased labels become silent moves."""
    erase_set = frozenset(erase)
    extra = erase_set - automaton.alphabet
    if extra:
        raise AlphabetError(f"cannot erase symbols outside the alphabet: {sorted(extra)}")
    nfa = automaton if isinstance(automaton, Nfa) else dfa_to_nfa(automaton)
    transitions = frozenset(
        (src, None if label in erase_set else label, dst)
        for src, label, dst in nfa.transitions
    )
    return Nfa(nfa.states, nfa.alphabet - erase_set, transitions, nfa.start, nfa.finals)


def equivalent(a: Automaton, b: Automaton) -> bool:
    """Language equality via breadth-first search for a distinguishing pair."""
    if a.alphabet != b.alphabet:
        raise AlphabetError("equivalent requires identical alphabets")
    da = a if isinstance(a, Dfa) else determinize(a)
    db = b if isinstance(b, Dfa) else determinize(b)
    symbols = sorted(da.alphabet)
    start = (da.start, db.start)
    seen = {start}
    queue = deque([start])
    while queue:
        qa, qb = queue.popleft()
        if (qa in da.finals) != (qb in db.finals):
            return False
        for sym in symbols:
            nxt = (da.delta[(qa, sym)], db.delta[(qb, sym)])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


# --------------------------------------------------------------------------
# JSON wire format


def automaton_to_json(automaton: Automaton) -> dict:
    """Serialize to the interchange dict; key order and sorting are stable."""
    if isinstance(automaton, Dfa):
        kind = "dfa"
        triples = sorted((src, sym, dst) for (src, sym), dst in automaton.delta.items())
    else:
        kind = "nfa"
        triples = sorted(
            automaton.transitions,
            key=lambda t: (t[0], (t[1] is not None, t[1] or ""), t[2]),
        )
    return {
        "kind": kind,
        "alphabet": sorted(automaton.alphabet),
        "states": automaton.states,
        "start": automaton.start,
        "finals": sorted(automaton.finals),
        "transitions": [{"from": src, "on": label, "to": dst} for src, label, dst in triples],
    }


def automaton_from_json(obj: object) -> Automaton:
    """Parse and validate the interchange dict.

    Raises MalformedInputError naming the offending field; for the dfa
    kind the transition table must be total and single-valued.
    """
    if not isinstance(obj, dict):
        raise MalformedInputError("document: expected a JSON object")
    kind = obj.get("kind")
    if kind not in ("nfa", "dfa"):
        raise MalformedInputError(f"kind: expected 'nfa' or 'dfa', got {kind!r}")
    alphabet = obj.get("alphabet")
    if not isinstance(alphabet, list) or not all(isinstance(s, str) and len(s) == 1 for s in alphabet):
        raise MalformedInputError("alphabet: expected a list of single-character strings")
    if len(set(alphabet)) != len(alphabet):
        raise MalformedInputError("alphabet: duplicate symbols")
    states = obj.get("states")
    if not isinstance(states, int) or isinstance(states, bool) or states < 1:
        raise MalformedInputError("states: expected a positive integer")
    start = obj.get("start")
    if not isinstance(start, int) or isinstance(start, bool):
        raise MalformedInputError("start: expected an integer")
    finals = obj.get("finals")
    if not isinstance(finals, list) or not all(isinstance(f, int) and not isinstance(f, bool) for f in finals):
        raise MalformedInputError("finals: expected a list of integers")
    raw = obj.get("transitions")
    if not isinstance(raw, list):
        raise MalformedInputError("transitions: expected a list")
    triples: list[Transition] = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise MalformedInputError(f"transitions[{i}]: expected an object")
        for key in ("from", "on", "to"):
            if key not in entry:
                raise MalformedInputError(f"transitions[{i}].{key}: missing")
        src, label, dst = entry["from"], entry["on"], entry["to"]
        if not isinstance(src, int) or not isinstance(dst, int):
            raise MalformedInputError(f"transitions[{i}]: 'from' and 'to' must be integers")
        if label is not None and not (isinstance(label, str) and len(label) == 1):
            raise MalformedInputError(f"transitions[{i}].on: expected a single character or null")
        triples.append((src, label, dst))
    try:
        if kind == "nfa":
            return Nfa(states, frozenset(alphabet), frozenset(triples), start, frozenset(finals))
        delta: dict[tuple[int, str], int] = {}
        for i, (src, label, dst) in enumerate(triples):
            if label is None:
                raise MalformedInputError(f"transitions[{i}].on: silent moves are not allowed in a dfa")
            if (src, label) in delta:
                raise MalformedInputError(f"transitions[{i}]: duplicate move for state {src} on {label!r}")
            delta[(src, label)] = dst
        return Dfa(states, frozenset(alphabet), delta, start, frozenset(finals))
    except MalformedInputError:
        raise
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc
