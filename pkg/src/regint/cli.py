"""Command-line interface.

Five subcommands: `check` tests a single word for membership, `decide`
runs one of the two decision procedures on an automaton file, `search`
hunts for a witness inside a regular language, `reduce` generates
instance languages, and `solve` runs the concrete solvers.  Verdicts
travel through the exit code (0 yes, 1 no, 2 malformed input, 3 budget
exceeded for searches); everything printed to stdout is JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .automata import METACHARS, Dfa, automaton_from_json
from .deciders import decide_intreg_sequential_string_eq, decide_intreg_unary_shuffled
from .errors import MalformedInputError, ReginError, ResourceLimitError
from .problems import (
    check_bpcp,
    member_bounded_tiling,
    member_bpcp,
    member_corridor_tiling,
    member_machine_language,
    member_sequential_string_eq,
    member_shuffled_regex_eq,
    member_shuffled_string_eq,
    pcp_from_json,
    solve_bounded_tiling,
    solve_corridor_tiling,
    tile_set_to_json,
    tiling_instance_from_json,
    tm_from_json,
)
from .reductions import (
    reduce_ntm_to_tiles,
    reduce_ntm_to_tiling_lang,
    reduce_pcp_to_bpcp_lang,
    reduce_pcp_to_shuffled_regex,
    reduce_tm_to_machine_lang,
)
from .search import SearchBudget, find_witness

PAD = "_"
SEPARATOR = "$"

PROBLEMS = (
    "shuffled-string-eq",
    "sequential-string-eq",
    "unary-shuffled-string-eq",
    "shuffled-regex-eq",
    "bpcp",
    "bounded-tiling",
    "corridor-tiling",
    "machine-nl",
    "machine-np",
    "machine-pspace",
)

MACHINE_MODES = {"machine-nl": "NL", "machine-np": "NP", "machine-pspace": "PSPACE"}

REDUCTIONS = (
    "pcp-to-shuffled-regex",
    "pcp-to-bpcp",
    "tm-to-machine-lang",
    "ntm-to-tiles",
    "ntm-to-tiling-lang",
)


class _Parser(argparse.ArgumentParser):
    """Argument errors also land on stdout as JSON, keeping the output
    contract on the malformed-invocation path."""

    def error(self, message):
        _emit({"error": message})
        raise SystemExit(2)


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise MalformedInputError(f"in: cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"in: {path} is not JSON: {exc}") from exc


def _alphabet_for(problem: str, word: str, override: Optional[str]) -> frozenset[str]:
    if override is not None:
        letters = frozenset(override)
        if not letters:
            raise MalformedInputError("alphabet: may not be empty")
        return letters
    if problem == "shuffled-string-eq":
        return frozenset(word) - {PAD}
    if problem == "sequential-string-eq":
        return frozenset(word) - {PAD, SEPARATOR}
    if problem == "shuffled-regex-eq":
        return frozenset(word) - METACHARS
    if problem == "unary-shuffled-string-eq":
        return frozenset("a")
    raise MalformedInputError(f"alphabet: not applicable to {problem}")


def _run_check(args) -> int:
    problem, word = args.problem, args.word
    if problem in MACHINE_MODES:
        member = member_machine_language(word, MACHINE_MODES[problem])
    elif problem == "bpcp":
        member = member_bpcp(word)
    elif problem == "bounded-tiling":
        member = member_bounded_tiling(word)
    elif problem == "corridor-tiling":
        member = member_corridor_tiling(word)
    else:
        alphabet = _alphabet_for(problem, word, args.alphabet)
        if problem == "shuffled-string-eq":
            member = member_shuffled_string_eq(word, alphabet, PAD)
        elif problem == "sequential-string-eq":
            member = member_sequential_string_eq(word, alphabet, PAD)
        elif problem == "unary-shuffled-string-eq":
            if len(alphabet) != 1:
                raise MalformedInputError("alphabet: need exactly one unary symbol")
            member = member_shuffled_string_eq(word, alphabet, PAD)
        else:
            member = member_shuffled_regex_eq(word, alphabet)
    _emit({"problem": problem, "word": word, "member": member})
    return 0 if member else 1


def _run_decide(args) -> int:
    automaton = automaton_from_json(_load_json(args.dfa))
    if not isinstance(automaton, Dfa):
        raise MalformedInputError("kind: decide expects a dfa")
    if args.problem == "sequential-string-eq":
        alphabet = (
            frozenset(args.alphabet)
            if args.alphabet is not None
            else automaton.alphabet - {PAD, SEPARATOR}
        )
        verdict, witness = decide_intreg_sequential_string_eq(automaton, alphabet, PAD)
    else:
        unary = (
            frozenset(args.alphabet)
            if args.alphabet is not None
            else automaton.alphabet - {PAD}
        )
        if len(unary) != 1:
            raise MalformedInputError("alphabet: need exactly one unary symbol")
        verdict = decide_intreg_unary_shuffled(automaton, next(iter(unary)), PAD)
        witness = None
    _emit({"problem": args.problem, "verdict": verdict, "witness": witness})
    return 0 if verdict else 1


def _checker_for(problem: str, alphabet_override: Optional[str], automaton):
    if problem in MACHINE_MODES:
        mode = MACHINE_MODES[problem]
        return lambda word: member_machine_language(word, mode)
    if problem == "bpcp":
        return member_bpcp
    if problem == "bounded-tiling":
        return member_bounded_tiling
    if problem == "corridor-tiling":
        return member_corridor_tiling
    if alphabet_override is not None:
        alphabet = frozenset(alphabet_override)
    elif problem == "sequential-string-eq":
        alphabet = automaton.alphabet - {PAD, SEPARATOR}
    elif problem == "shuffled-regex-eq":
        alphabet = automaton.alphabet - METACHARS - {PAD}
    else:
        alphabet = automaton.alphabet - {PAD}
    if problem == "shuffled-string-eq":
        return lambda word: member_shuffled_string_eq(word, alphabet, PAD)
    if problem == "sequential-string-eq":
        return lambda word: member_sequential_string_eq(word, alphabet, PAD)
    if problem == "unary-shuffled-string-eq":
        if len(alphabet) != 1:
            raise MalformedInputError("alphabet: need exactly one unary symbol")
        return lambda word: member_shuffled_string_eq(word, alphabet, PAD)
    return lambda word: member_shuffled_regex_eq(word, alphabet)


def _run_search(args) -> int:
    automaton = automaton_from_json(_load_json(args.automaton))
    checker = _checker_for(args.problem, args.alphabet, automaton)
    budget = SearchBudget(
        max_word_length=args.max_len,
        max_words_tested=args.max_words,
        wall_clock_limit=args.timeout,
    )
    report = find_witness(automaton, checker, budget)
    _emit(report.to_json(deterministic=args.deterministic))
    return {"witness": 0, "exhausted": 1, "budget-exceeded": 3}[report.outcome]


def _run_reduce(args) -> int:
    data = _load_json(args.infile)
    if args.kind == "pcp-to-shuffled-regex":
        payload = reduce_pcp_to_shuffled_regex(pcp_from_json(data), PAD).to_json()
    elif args.kind == "pcp-to-bpcp":
        payload = reduce_pcp_to_bpcp_lang(pcp_from_json(data)).to_json()
    elif args.kind == "tm-to-machine-lang":
        payload = reduce_tm_to_machine_lang(tm_from_json(data)).to_json()
    elif args.kind == "ntm-to-tiles":
        payload = tile_set_to_json(reduce_ntm_to_tiles(tm_from_json(data)))
    else:
        payload = reduce_ntm_to_tiling_lang(tm_from_json(data), args.variant).to_json()
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, sort_keys=True, indent=2)
            handle.write("\n")
    _emit(payload)
    return 0


def _run_solve(args) -> int:
    data = _load_json(args.infile)
    if args.target == "bpcp":
        if not isinstance(data, dict) or "k" not in data:
            raise MalformedInputError("k: missing bound for bpcp")
        bound = data["k"]
        if not isinstance(bound, int) or bound < 1:
            raise MalformedInputError("k: expected a positive integer")
        instance = pcp_from_json({key: data[key] for key in ("alphabet", "a", "b") if key in data})
        solution = check_bpcp(instance, bound)
        if solution is None:
            _emit("none")
            return 1
        _emit({"indices": list(solution.indices), "bound": solution.bound})
        return 0
    instance = tiling_instance_from_json(data)
    if args.target == "bounded-tiling":
        if instance.variant != "bounded":
            raise MalformedInputError("variant: expected bounded")
        tiling = solve_bounded_tiling(instance)
        if tiling is None:
            _emit("none")
            return 1
        _emit({
            "width": tiling.width,
            "height": tiling.height,
            "grid": [list(row) for row in tiling.grid],
        })
        return 0
    if instance.variant != "corridor":
        raise MalformedInputError("variant: expected corridor")
    result = solve_corridor_tiling(instance)
    if result is None:
        _emit("none")
        return 1
    height, tiling = result
    _emit({
        "height": height,
        "width": tiling.width,
        "grid": [list(row) for row in tiling.grid],
    })
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="regint", description=__doc__.splitlines()[0])
    parser.add_argument("--deterministic", action="store_true",
                        help="suppress timing fields so output is reproducible")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="test one word for membership")
    check.add_argument("--problem", required=True, choices=PROBLEMS)
    check.add_argument("--word", required=True)
    check.add_argument("--alphabet", help="base letters, e.g. 'ab' (default: inferred)")
    check.set_defaults(run=_run_check)

    decide = sub.add_parser("decide", help="run a decision procedure on a DFA file")
    decide.add_argument("--problem", required=True,
                        choices=("sequential-string-eq", "unary-shuffled-string-eq"))
    decide.add_argument("--dfa", required=True, help="automaton JSON of kind dfa")
    decide.add_argument("--alphabet", help="base letters (default: from the DFA)")
    decide.set_defaults(run=_run_decide)

    search = sub.add_parser("search", help="bounded witness search in a regular language")
    search.add_argument("--problem", required=True, choices=PROBLEMS)
    search.add_argument("--automaton", required=True, help="automaton JSON (dfa or nfa)")
    search.add_argument("--max-len", type=int, required=True)
    search.add_argument("--max-words", type=int, default=1_000_000)
    search.add_argument("--timeout", type=float, default=60.0,
                        help="wall clock limit in seconds")
    search.add_argument("--alphabet", help="base letters (default: from the automaton)")
    search.set_defaults(run=_run_search)

    reduce_cmd = sub.add_parser("reduce", help="generate an instance language or tile set")
    reduce_cmd.add_argument("kind", choices=REDUCTIONS)
    reduce_cmd.add_argument("--in", dest="infile", required=True)
    reduce_cmd.add_argument("--variant", choices=("bounded", "corridor"), default="bounded")
    reduce_cmd.add_argument("--out")
    reduce_cmd.set_defaults(run=_run_reduce)

    solve = sub.add_parser("solve", help="solve a concrete instance file")
    solve.add_argument("target", choices=("bounded-tiling", "corridor-tiling", "bpcp"))
    solve.add_argument("--in", dest="infile", required=True)
    solve.set_defaults(run=_run_solve)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except ResourceLimitError as exc:
        _emit({"error": f"resource limit: {exc}"})
        return 2
    except ReginError as exc:
        _emit({"error": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
