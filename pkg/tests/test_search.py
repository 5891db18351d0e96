"""Shortlex enumeration and the budgeted witness search."""

import itertools
import time

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from regint.automata import Nfa, determinize, parse_regex, regex_to_nfa
from regint.errors import CheckerError, MalformedInputError
from regint.problems import member_shuffled_string_eq
from regint.search import SearchBudget, WitnessReport, enumerate_words, find_witness


def nfa_for(text, letters):
    return regex_to_nfa(parse_regex(text, frozenset(letters)))


@st.composite
def nfas(draw, letters="ab", max_states=5, max_edges=12):
    n = draw(st.integers(1, max_states))
    labels = [None] + list(letters)
    edges = draw(
        st.lists(
            st.tuples(
                st.integers(0, n - 1), st.sampled_from(labels), st.integers(0, n - 1)
            ),
            max_size=max_edges,
        )
    )
    finals = draw(st.sets(st.integers(0, n - 1)))
    return Nfa(n, frozenset(letters), frozenset(edges), 0, frozenset(finals))


BUDGET = SearchBudget(max_word_length=10, max_words_tested=100, wall_clock_limit=5.0)


# ---------------------------------------------------------------------------
# enumerate_words


def test_enumerate_pins():
    assert list(enumerate_words(determinize(nfa_for("a|b", "ab")), 3)) == ["a", "b"]
    assert list(enumerate_words(nfa_for("(ab)*", "ab"), 5)) == ["", "ab", "abab"]


def test_enumerate_agrees_between_nfa_and_dfa():
    nfa = nfa_for("(ab)*", "ab")
    assert list(enumerate_words(nfa, 5)) == list(enumerate_words(determinize(nfa), 5))


def test_enumerate_is_shortlex_with_sorted_symbols():
    got = list(enumerate_words(determinize(nfa_for("(a|b|c)*", "abc")), 2))
    want = [""] + sorted("abc") + ["".join(p) for p in itertools.product(sorted("abc"), repeat=2)]
    assert got == want


def test_enumerate_empty_language_yields_nothing():
    dead = Nfa(2, frozenset("ab"), frozenset({(0, "a", 1)}), 0, frozenset())
    assert list(enumerate_words(dead, 5)) == []


@settings(max_examples=200, deadline=None)
@given(nfas())
def test_enumerate_stream_is_strictly_shortlex_and_duplicate_free(nfa):
    words = list(enumerate_words(nfa, 5))
    assert len(set(words)) == len(words)
    assert words == sorted(words, key=lambda w: (len(w), w))


# ---------------------------------------------------------------------------
# find_witness, sequential


def test_witness_found_for_the_interleaving_checker():
    nfa = nfa_for("(aa)(aa)*", "a")
    rep = find_witness(nfa, lambda w: member_shuffled_string_eq(w, frozenset("a"), "_"), BUDGET)
    assert rep.outcome == "witness" and rep.witness == "aa"
    assert rep.words_tested == 1 and rep.bound is None


def test_exhausted_reports_the_length_bound():
    nfa = nfa_for("(aa)(aa)*", "a")
    rep = find_witness(nfa, lambda w: False, BUDGET)
    assert rep.outcome == "exhausted" and rep.witness is None
    assert rep.words_tested == 5  # aa, aaaa, ..., a^10
    assert rep.bound == 10


def test_empty_automaton_exhausts_immediately():
    dead = Nfa(1, frozenset("a"), frozenset(), 0, frozenset())
    rep = find_witness(dead, lambda w: True, BUDGET)
    assert rep.outcome == "exhausted" and rep.words_tested == 0


def test_word_budget_exceeded():
    nfa = nfa_for("(aa)(aa)*", "a")
    rep = find_witness(
        nfa, lambda w: False, SearchBudget(max_word_length=10, max_words_tested=3, wall_clock_limit=5.0)
    )
    assert rep.outcome == "budget-exceeded" and rep.words_tested == 3


def test_word_budget_boundary_still_exhausts():
    # exactly as many words as the budget allows: that is exhaustion,
    # not a budget violation
    nfa = nfa_for("(aa)(aa)*", "a")
    tight = SearchBudget(max_word_length=10, max_words_tested=5, wall_clock_limit=5.0)
    assert find_witness(nfa, lambda w: False, tight).outcome == "exhausted"
    assert find_witness(nfa, lambda w: False, tight, workers=4).outcome == "exhausted"


def test_wall_clock_budget_exceeded():
    nfa = nfa_for("a*", "a")
    slow = SearchBudget(max_word_length=200, max_words_tested=10**6, wall_clock_limit=0.2)

    def checker(word):
        time.sleep(0.05)
        return False

    rep = find_witness(nfa, checker, slow)
    assert rep.outcome == "budget-exceeded"


def test_replayable_reports():
    nfa = nfa_for("(aa)(aa)*", "a")
    first = find_witness(nfa, lambda w: len(w) >= 6, BUDGET)
    second = find_witness(nfa, lambda w: len(w) >= 6, BUDGET)
    assert (first.outcome, first.witness, first.words_tested) == (
        second.outcome,
        second.witness,
        second.words_tested,
    )


@settings(max_examples=150, deadline=None)
@given(nfas())
def test_accept_checker_returns_the_shortlex_least_word(nfa):
    from regint.automata import accepts

    least = next(enumerate_words(nfa, 6), None)
    rep = find_witness(
        nfa,
        lambda w: accepts(nfa, w),
        SearchBudget(max_word_length=6, max_words_tested=10_000, wall_clock_limit=10.0),
    )
    if least is None:
        assert rep.outcome == "exhausted"
    else:
        assert rep.outcome == "witness"
        assert rep.witness == least
        assert rep.words_tested == 1


# ---------------------------------------------------------------------------
# Parallel checking must not change any answer


def test_parallel_witness_matches_sequential():
    nfa = nfa_for("(aa)(aa)*", "a")
    seq = find_witness(nfa, lambda w: len(w) >= 6, BUDGET)
    par = find_witness(nfa, lambda w: len(w) >= 6, BUDGET, workers=4)
    assert seq.outcome == par.outcome == "witness"
    assert seq.witness == par.witness == "aaaaaa"
    assert seq.words_tested == par.words_tested == 3


def test_parallel_exhausted_and_budget_paths():
    nfa = nfa_for("(aa)(aa)*", "a")
    rep = find_witness(nfa, lambda w: False, BUDGET, workers=4)
    assert rep.outcome == "exhausted" and rep.words_tested == 5
    rep = find_witness(
        nfa,
        lambda w: False,
        SearchBudget(max_word_length=10, max_words_tested=3, wall_clock_limit=5.0),
        workers=4,
    )
    assert rep.outcome == "budget-exceeded"


def test_worker_count_env_override(monkeypatch):
    nfa = nfa_for("(aa)(aa)*", "a")
    monkeypatch.setenv("REGINT_WORKER_COUNT", "4")
    rep = find_witness(nfa, lambda w: len(w) >= 6, BUDGET)
    assert rep.outcome == "witness" and rep.witness == "aaaaaa" and rep.words_tested == 3
    monkeypatch.setenv("REGINT_WORKER_COUNT", "not-a-number")
    rep = find_witness(nfa, lambda w: len(w) >= 6, BUDGET)
    assert rep.outcome == "witness" and rep.witness == "aaaaaa"


# ---------------------------------------------------------------------------
# Errors and serialization


def test_checker_exceptions_carry_the_word():
    nfa = nfa_for("(aa)(aa)*", "a")

    def bad(word):
        raise ValueError("boom")

    with pytest.raises(CheckerError) as info:
        find_witness(nfa, bad, BUDGET)
    assert info.value.word == "aa"
    assert "boom" in str(info.value)


def test_budget_limits_must_be_positive():
    for kwargs in (
        dict(max_word_length=0, max_words_tested=1, wall_clock_limit=1.0),
        dict(max_word_length=1, max_words_tested=0, wall_clock_limit=1.0),
        dict(max_word_length=1, max_words_tested=1, wall_clock_limit=0.0),
    ):
        with pytest.raises(MalformedInputError):
            SearchBudget(**kwargs)


def test_report_json_shape_and_deterministic_timing():
    report = WitnessReport("witness", "aa", 3, 0.5, None)
    doc = report.to_json()
    assert doc == {
        "outcome": "witness",
        "witness": "aa",
        "wordsTested": 3,
        "elapsedMs": 500.0,
        "bound": None,
    }
    assert report.to_json(deterministic=True)["elapsedMs"] == 0
