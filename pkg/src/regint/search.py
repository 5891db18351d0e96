"""Budgeted witness search: enumerate L(A) in shortlex order and test
each word with a problem checker.

This is the semi-decision side of the intersection-emptiness question:
a hit proves L(A) ∩ P nonempty; running out of budget proves nothing.
Reports are deterministic for a fixed worker count, and the returned
witness is always the shortlex-least passing word regardless of
speculative parallel checking.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import islice
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .automata import Automaton, Dfa, Nfa, closure
from .errors import CheckerError, MalformedInputError

WORKER_ENV = "REGINT_WORKER_COUNT"


@dataclass(frozen=True)
class SearchBudget:
    max_word_length: int
    max_words_tested: int
    wall_clock_limit: float  # seconds

    def __post_init__(self):
        if self.max_word_length < 1 or self.max_words_tested < 1 or self.wall_clock_limit <= 0:
            raise MalformedInputError("budget: all limits must be positive")


@dataclass(frozen=True)
class WitnessReport:
    outcome: str  # "witness" | "exhausted" | "budget-exceeded"
    witness: Optional[str]
    words_tested: int
    elapsed: float  # seconds
    bound: Optional[int]  # length bound that was exhausted, if any

    def to_json(self, deterministic: bool = False) -> dict:
        return {
            "outcome": self.outcome,
            "witness": self.witness,
            "wordsTested": self.words_tested,
            "elapsedMs": 0 if deterministic else round(self.elapsed * 1000, 3),
            "bound": self.bound,
        }


def _co_reachable(automaton: Automaton) -> frozenset[int]:
    """States from which some final state is reachable."""
    reverse: dict[int, set[int]] = {}
    if isinstance(automaton, Dfa):
        edges = ((src, dst) for (src, _sym), dst in automaton.delta.items())
    else:
        edges = ((src, dst) for src, _label, dst in automaton.transitions)
    for src, dst in edges:
        reverse.setdefault(dst, set()).add(src)
    seen = set(automaton.finals)
    todo = list(seen)
    while todo:
        q = todo.pop()
        for p in reverse.get(q, ()):
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return frozenset(seen)


def enumerate_words(automaton: Automaton, max_len: int) -> Iterator[str]:
    """All accepted words of length ≤ max_len, strictly shortlex.

    Layered breadth-first over word prefixes; prefixes whose state set
    cannot reach a final state are pruned immediately, so dead regions
    of the automaton cost nothing.
    """
    symbols = sorted(automaton.alphabet)
    live = _co_reachable(automaton)

    if isinstance(automaton, Dfa):
        def step(state: int, sym: str) -> Optional[int]:
            nxt = automaton.delta[(state, sym)]
            return nxt if nxt in live else None

        def accepting(state: int) -> bool:
            return state in automaton.finals

        start = automaton.start if automaton.start in live else None
    else:
        moves = automaton.moves()

        def step(states: frozenset[int], sym: str) -> Optional[frozenset[int]]:
            targets: set[int] = set()
            for q in states:
                targets.update(moves.get((q, sym), ()))
            if not targets:
                return None
            closed = closure(automaton, targets) & live
            return closed or None

        def accepting(states: frozenset[int]) -> bool:
            return bool(states & automaton.finals)

        closed_start = closure(automaton, {automaton.start}) & live
        start = closed_start or None

    if start is None:
        return
    layer: list[tuple[str, object]] = [("", start)]
    for length in range(max_len + 1):
        for word, state in layer:
            if accepting(state):
                yield word
        if length == max_len:
            return
        nxt = []
        for word, state in layer:
            for sym in symbols:
                target = step(state, sym)
                if target is not None:
                    nxt.append((word + sym, target))
        if not nxt:
            return
        layer = nxt


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    raw = os.environ.get(WORKER_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def find_witness(
    automaton: Automaton,
    checker: Callable[[str], bool],
    budget: SearchBudget,
    workers: Optional[int] = None,
) -> WitnessReport:
    """Shortlex-least word of L(automaton) passing the checker, within budget.

    Outcomes: "witness" with the word; "exhausted" when every word up
    to the length bound was tested; "budget-exceeded" when the word or
    wall-clock budget ran out first.  With several workers the checker
    runs speculatively on chunks, but the reported witness and
    wordsTested match the sequential run exactly.

    Checker exceptions are re-raised as CheckerError naming the word.
    """
    count = _worker_count(workers)
    start_time = time.perf_counter()

    def report(outcome: str, witness: Optional[str], tested: int, bound: Optional[int]) -> WitnessReport:
        return WitnessReport(outcome, witness, tested, time.perf_counter() - start_time, bound)

    def run_checker(word: str) -> bool:
        try:
            return checker(word)
        except Exception as exc:  # noqa: BLE001 - wrapped with the offending word
            raise CheckerError(word, exc) from exc

    stream = enumerate_words(automaton, budget.max_word_length)
    tested = 0
    if count == 1:
        for word in stream:
            if tested >= budget.max_words_tested:
                return report("budget-exceeded", None, tested, None)
            if time.perf_counter() - start_time > budget.wall_clock_limit:
                return report("budget-exceeded", None, tested, None)
            tested += 1
            if run_checker(word):
                return report("witness", word, tested, None)
        return report("exhausted", None, tested, budget.max_word_length)

    chunk_size = 4 * count
    with ThreadPoolExecutor(max_workers=count) as pool:
        while True:
            if time.perf_counter() - start_time > budget.wall_clock_limit:
                return report("budget-exceeded", None, tested, None)
            remaining = budget.max_words_tested - tested
            if remaining <= 0:
                if next(stream, None) is None:
                    return report("exhausted", None, tested, budget.max_word_length)
                return report("budget-exceeded", None, tested, None)
            chunk = list(islice(stream, min(chunk_size, remaining)))
            if not chunk:
                return report("exhausted", None, tested, budget.max_word_length)
            # Speculative: evaluate the whole chunk, then take the first hit
            # in shortlex order so parallelism never changes the answer.
            results = list(pool.map(run_checker, chunk))
            for i, hit in enumerate(results):
                if hit:
                    return report("witness", chunk[i], tested + i + 1, None)
            tested += len(chunk)
