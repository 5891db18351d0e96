"""Decision procedures for regular-intersection emptiness.

Two problem families admit a genuine decision procedure instead of a
bounded witness search.  For words u$u' whose sides agree after erasing
the pad letter, the automaton is split at the separator and the erased
side languages are compared for every usable state pair.  For the unary
interleaving language, a two-state counter pushdown automaton is
intersected with the automaton and tested for context-free emptiness.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .automata import Dfa, Nfa, erase_letters, intersect_dfa
from .errors import AlphabetError
from .pda import Pda, pda_intersect_dfa, pda_is_empty

SEPARATOR = "$"


def _counter_pda(unary_symbol: str, pad_symbol: str) -> Pda:
    """Accepts the even-length words whose unary letters are split evenly
    between odd and even positions.

    The state is the parity of the consumed prefix; the imbalance lives
    on the stack as a run of P (odd-position surplus) or N (even) above
    the bottom marker, so acceptance is even parity with a bare bottom.
    """
    a, p = unary_symbol, pad_symbol
    moves: set = set()
    for parity in (0, 1):
        for top in ("Z", "P", "N"):
            moves.add((parity, p, top, 1 - parity, (top,)))
    moves |= {
        (0, a, "Z", 1, ("P", "Z")),
        (0, a, "P", 1, ("P", "P")),
        (0, a, "N", 1, ()),
        (1, a, "Z", 0, ("N", "Z")),
        (1, a, "N", 0, ("N", "N")),
        (1, a, "P", 0, ()),
    }
    return Pda(
        states=2,
        input_alphabet=frozenset({a, p}),
        stack_alphabet=frozenset({"Z", "P", "N"}),
        bottom="Z",
        transitions=frozenset(moves),
        start=0,
        finals=frozenset({0}),
    )


def decide_intreg_unary_shuffled(a: Dfa, unary_symbol: str, pad_symbol: str) -> bool:
    """Does L(a) contain an interleaving of two pad-equal unary words?"""
    for name, sym in (("unary", unary_symbol), ("pad", pad_symbol)):
        if len(sym) != 1:
            raise AlphabetError(f"{name} symbol must be a single character, got {sym!r}")
    if unary_symbol == pad_symbol:
        raise AlphabetError("unary and pad symbols must differ")
    expected = frozenset({unary_symbol, pad_symbol})
    if a.alphabet != expected:
        raise AlphabetError(
            f"automaton alphabet {sorted(a.alphabet)} is not {sorted(expected)}"
        )
    pda = _counter_pda(unary_symbol, pad_symbol)
    return not pda_is_empty(pda_intersect_dfa(pda, a))


def _shape_dfa(full_alphabet: frozenset[str], side_letters: frozenset[str]) -> Dfa:
    """Three-state automaton for side* $ side* over the full alphabet."""
    delta: dict[tuple[int, str], int] = {}
    for sym in full_alphabet:
        if sym == SEPARATOR:
            delta[(0, sym)] = 1
            delta[(1, sym)] = 2
        elif sym in side_letters:
            delta[(0, sym)] = 0
            delta[(1, sym)] = 1
        else:
            delta[(0, sym)] = 2
            delta[(1, sym)] = 2
        delta[(2, sym)] = 2
    return Dfa(3, full_alphabet, delta, 0, frozenset({1}))


def decide_intreg_sequential_string_eq(
    a: Dfa, alphabet: Iterable[str], pad_symbol: str
) -> tuple[bool, Optional[str]]:
    """Does L(a) contain a word u$u' whose sides have equal pad-erased
    images?  On success the second component is such a witness.

    The product with the separator-shape automaton is split per state:
    for every prefix state q, its separator successor q', and every
    final, the languages before/after the split are erased and tested
    for a common word by joint reachability.  Triples are tried in
    sorted order and all tie-breaking is by smallest letter, so the
    witness is deterministic.
    """
    sigma = frozenset(alphabet)
    for sym in sigma | {pad_symbol}:
        if len(sym) != 1:
            raise AlphabetError(f"symbols must be single characters, got {sym!r}")
    if pad_symbol in sigma or SEPARATOR in sigma or pad_symbol == SEPARATOR:
        raise AlphabetError("pad symbol and separator must lie outside the base alphabet")
    needed = sigma | {pad_symbol, SEPARATOR}
    if not needed <= a.alphabet:
        raise AlphabetError(
            f"automaton alphabet {sorted(a.alphabet)} must cover {sorted(needed)}"
        )

    product = intersect_dfa(a, _shape_dfa(a.alphabet, sigma | {pad_symbol}))
    base = Nfa(
        states=product.states,
        alphabet=product.alphabet,
        transitions=frozenset(
            (src, sym, dst)
            for (src, sym), dst in product.delta.items()
            if sym != SEPARATOR
        ),
        start=product.start,
        finals=frozenset(),
    )
    erased = erase_letters(base, {pad_symbol})
    silent_next: dict[int, int] = {}
    letter_step: dict[tuple[int, str], int] = {}
    for src, label, dst in erased.transitions:
        if label is None:
            silent_next[src] = dst
        else:
            letter_step[(src, label)] = dst
    letters = sorted(erased.alphabet - {SEPARATOR})

    # silent closure of each state: the pad chain until it cycles
    chain_set: list[tuple[int, ...]] = []
    for s in range(product.states):
        out = [s]
        seen = {s}
        while (nxt := silent_next[s]) not in seen:
            out.append(nxt)
            seen.add(nxt)
            s = nxt
        chain_set.append(tuple(sorted(seen)))

    # states usable as the before-separator split point
    s_reach = {product.start}
    todo = [product.start]
    while todo:
        s = todo.pop()
        for sym in letters:
            t = letter_step[(s, sym)]
            if t not in s_reach:
                s_reach.add(t)
                todo.append(t)
        t = silent_next[s]
        if t not in s_reach:
            s_reach.add(t)
            todo.append(t)

    # states from which some final is reachable without crossing the separator
    backward: dict[int, set[int]] = {}
    for (src, _sym), dst in letter_step.items():
        backward.setdefault(dst, set()).add(src)
    for src, dst in silent_next.items():
        backward.setdefault(dst, set()).add(src)
    co_reach = set(product.finals)
    todo = list(co_reach)
    while todo:
        s = todo.pop()
        for r in backward.get(s, ()):
            if r not in co_reach:
                co_reach.add(r)
                todo.append(r)

    # joint reachability of (before-split, after-split) state pairs on a
    # common erased word, cached per separator successor
    reach_cache: dict[int, dict[tuple[int, int], int]] = {}

    def reached_from(qp: int) -> dict[tuple[int, int], int]:
        if qp in reach_cache:
            return reach_cache[qp]
        dist = {
            (x, y): 0
            for x in chain_set[product.start]
            for y in chain_set[qp]
        }
        frontier = sorted(dist)
        level = 0
        while frontier:
            level += 1
            nxt = []
            for x, y in frontier:
                for sym in letters:
                    xs = letter_step[(x, sym)]
                    ys = letter_step[(y, sym)]
                    for x2 in chain_set[xs]:
                        for y2 in chain_set[ys]:
                            if (x2, y2) not in dist:
                                dist[(x2, y2)] = level
                                nxt.append((x2, y2))
            frontier = nxt
        reach_cache[qp] = dist
        return dist

    # per-letter predecessors, with the silent closure folded in
    pre_state: dict[tuple[str, int], list[int]] = {}
    for s in range(product.states):
        for sym in letters:
            for t in chain_set[letter_step[(s, sym)]]:
                pre_state.setdefault((sym, t), []).append(s)

    def least_common_word(qp: int, goal: tuple[int, int], length: int) -> str:
        rem = {goal: 0}
        frontier = [goal]
        level = 0
        while frontier and level < length:
            level += 1
            nxt = []
            for x2, y2 in frontier:
                for sym in letters:
                    for x in pre_state.get((sym, x2), ()):
                        for y in pre_state.get((sym, y2), ()):
                            if (x, y) not in rem:
                                rem[(x, y)] = level
                                nxt.append((x, y))
            frontier = nxt
        current = {
            p
            for p in (
                (x, y)
                for x in chain_set[product.start]
                for y in chain_set[qp]
            )
            if rem.get(p) == length
        }
        word = []
        for k in range(length, 0, -1):
            for sym in letters:
                following = set()
                for x, y in current:
                    xs = letter_step[(x, sym)]
                    ys = letter_step[(y, sym)]
                    for x2 in chain_set[xs]:
                        for y2 in chain_set[ys]:
                            if rem.get((x2, y2)) == k - 1:
                                following.add((x2, y2))
                if following:
                    word.append(sym)
                    current = following
                    break
        return "".join(word)

    inv_silent: dict[int, list[int]] = {}
    for s, dst in silent_next.items():
        inv_silent.setdefault(dst, []).append(s)
    inv_letter: dict[tuple[str, int], list[int]] = {}
    for (s, sym), dst in letter_step.items():
        inv_letter.setdefault((sym, dst), []).append(s)

    def lift(word: str, start_state: int, goal_state: int) -> str:
        """Shortest preimage of `word` between the given states, pads
        reinserted, smallest letter first on ties."""
        rem = {(goal_state, len(word)): 0}
        frontier = [(goal_state, len(word))]
        while frontier:
            nxt = []
            for s2, pos in frontier:
                level = rem[(s2, pos)] + 1
                preds = [(s, pos) for s in inv_silent.get(s2, ())]
                if pos > 0:
                    preds += [(s, pos - 1) for s in inv_letter.get((word[pos - 1], s2), ())]
                for p in preds:
                    if p not in rem:
                        rem[p] = level
                        nxt.append(p)
            frontier = nxt
        node = (start_state, 0)
        out = []
        for k in range(rem[node], 0, -1):
            s, pos = node
            options = [(pad_symbol, (silent_next[s], pos))]
            if pos < len(word):
                options.append((word[pos], (letter_step[(s, word[pos])], pos + 1)))
            options.sort()
            for letter, nxt_node in options:
                if rem.get(nxt_node) == k - 1:
                    out.append(letter)
                    node = nxt_node
                    break
        return "".join(out)

    for q in sorted(s_reach):
        qp = product.delta[(q, SEPARATOR)]
        if qp not in co_reach:
            continue
        for qf in sorted(product.finals):
            dist = reached_from(qp)
            if (q, qf) not in dist:
                continue
            v = least_common_word(qp, (q, qf), dist[(q, qf)])
            u = lift(v, product.start, q)
            u2 = lift(v, qp, qf)
            return True, u + SEPARATOR + u2
    return False, None
