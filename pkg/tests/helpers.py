"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the library's own decision paths:
shortest members come from Dijkstra/BFS over product configurations,
tilings are re-checked grid by grid, and PCP solutions are verified by
direct concatenation.  Where an oracle is itself nontrivial it is
grounded against literal enumeration at small scale in the unit tests.
"""

import heapq
import itertools
from collections import deque

from regint.automata import Dfa
from regint.problems import PcpInstance, TmSpec, interleave, pad_to_common
from regint.problems.tiling import Tiling, TilingInstance, validate_tiling
from regint.reductions import WHITE, normalize_tm, reduce_ntm_to_tiles

# ---------------------------------------------------------------------------
# DFA builders


def chain_dfa(word, alphabet):
    """Total DFA accepting exactly {word}."""
    n = len(word)
    dead = n + 1
    delta = {}
    for s in range(n + 2):
        for sym in alphabet:
            delta[(s, sym)] = dead
    for i, ch in enumerate(word):
        delta[(i, ch)] = i + 1
    return Dfa(n + 2, frozenset(alphabet), delta, 0, frozenset({n}))


def random_dfa(rng, alphabet, max_states=6):
    n = rng.randint(1, max_states)
    delta = {}
    for s in range(n):
        for sym in alphabet:
            delta[(s, sym)] = rng.randrange(n)
    finals = frozenset(s for s in range(n) if rng.random() < 0.5)
    return Dfa(n, frozenset(alphabet), delta, 0, finals)


# ---------------------------------------------------------------------------
# Shortest-member oracles for the two decidable problem languages


def seq_shortest_member(dfa, sigma, pad):
    """Length of the shortest u$v in L(dfa) whose erased sides agree,
    or None when no such word exists.

    One Dijkstra run per $-transition of the DFA: node (x, y) means x
    has walked u so far and y has walked v; a pad on either side costs
    1, a shared sigma letter costs 2, and the goal is x back at the
    $-source with y final (total length = cost + 1 for the $).
    """
    best = None
    for x0 in range(dfa.states):
        y0 = dfa.delta[(x0, "$")]
        dist = {(dfa.start, y0): 0}
        heap = [(0, dfa.start, y0)]
        while heap:
            c, x, y = heapq.heappop(heap)
            if c > dist.get((x, y), 1 << 60):
                continue
            if x == x0 and y in dfa.finals:
                total = c + 1
                if best is None or total < best:
                    best = total
                break
            moves = [(1, dfa.delta[(x, pad)], y), (1, x, dfa.delta[(y, pad)])]
            for s in sigma:
                moves.append((2, dfa.delta[(x, s)], dfa.delta[(y, s)]))
            for w, x2, y2 in moves:
                if c + w < dist.get((x2, y2), 1 << 60):
                    dist[(x2, y2)] = c + w
                    heapq.heappush(heap, (c + w, x2, y2))
    return best


def unary_shortest_member(dfa, unary, pad, diff_cap):
    """Shortest member of L(dfa) whose odd and even positions carry the
    same number of unary letters, or None.

    BFS over (state, position parity, count difference); the difference
    is capped, so callers must pass a cap past the relevant bound.
    """
    start = (dfa.start, 0, 0)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        q, parity, diff = queue.popleft()
        c = dist[(q, parity, diff)]
        if q in dfa.finals and parity == 0 and diff == 0:
            return c
        for sym in (unary, pad):
            d2 = diff + (1 if parity == 0 else -1) if sym == unary else diff
            if abs(d2) > diff_cap:
                continue
            node = (dfa.delta[(q, sym)], 1 - parity, d2)
            if node not in dist:
                dist[node] = c + 1
                queue.append(node)
    return None


# ---------------------------------------------------------------------------
# PCP instance catalog and verification


CLASSIC = PcpInstance(frozenset("01"), ("1", "10111", "10"), ("111", "10", "0"))
# solution (1, 2): "10"+"0" = "1"+"00"
PAIR = PcpInstance(frozenset("01"), ("10", "0"), ("1", "00"))
TRIV = PcpInstance(frozenset("a"), ("a",), ("a",))
SOLVABLE = [(TRIV, (1,)), (PAIR, (1, 2)), (CLASSIC, (2, 1, 1, 3))]

# first symbols differ on every pair, so no sequence can start
MISMATCH = PcpInstance(frozenset("01"), ("01", "0"), ("10", "11"))
# every a_i has two letters and every b_i one: lengths never match
PARITY = PcpInstance(frozenset("01"), ("00", "01"), ("0", "1"))
SHORTLONG = PcpInstance(frozenset("1"), ("1",), ("11",))
UNSOLVABLE = [MISMATCH, PARITY, SHORTLONG]


def verify_pcp_solution(pcp, indices):
    if not indices:
        return False
    sa = "".join(pcp.list_a[i - 1] for i in indices)
    sb = "".join(pcp.list_b[i - 1] for i in indices)
    return sa == sb


def brute_pcp(pcp, max_len):
    """First solution among all index sequences of length 1..max_len,
    scanned in length-then-lex order; None when there is none."""
    k = len(pcp.list_a)
    for n in range(1, max_len + 1):
        for seq in itertools.product(range(1, k + 1), repeat=n):
            if verify_pcp_solution(pcp, seq):
                return seq
    return None


def pcp_blocks(pcp, pad="_"):
    """The interleaved pad-to-common-length block of each list pair."""
    return [interleave(*pad_to_common(a, b, pad)) for a, b in zip(pcp.list_a, pcp.list_b)]


def decode_blocks(word, pcp, pad="_"):
    """Split a block concatenation back into 1-based indices.

    Greedy first match; the catalog instances have prefix-free blocks,
    so no backtracking is needed.  None when the word does not split.
    """
    blocks = pcp_blocks(pcp, pad)
    indices = []
    pos = 0
    while pos < len(word):
        for i, blk in enumerate(blocks):
            if word.startswith(blk, pos):
                indices.append(i + 1)
                pos += len(blk)
                break
        else:
            return None
    return tuple(indices)


# ---------------------------------------------------------------------------
# Tiny Turing machines with hand-checkable behaviour


# one step: accepts exactly the inputs starting with '1' (so "1", "11", ...)
M1 = TmSpec(states=2, input_alphabet=("1",), tape_alphabet=("_", "1"), blank="_",
            start=0, accept=1, transitions=frozenset({(0, "1", 1, "1", "S")}))

# walks right over '0's and accepts on the first '1'
M2 = TmSpec(states=2, input_alphabet=("0", "1"), tape_alphabet=("_", "0", "1"),
            blank="_", start=0, accept=1,
            transitions=frozenset({(0, "0", 0, "0", "R"), (0, "1", 1, "1", "S")}))

# start state is accepting: accepts everything in zero steps
ACCEPT_NOW = TmSpec(states=1, input_alphabet=("0",), tape_alphabet=("_", "0"),
                    blank="_", start=0, accept=0, transitions=frozenset())

# accept state unreachable: walks right forever, accepts nothing
NEVER = TmSpec(states=2, input_alphabet=("0", "1"), tape_alphabet=("_", "0", "1"),
               blank="_", start=0, accept=1,
               transitions=frozenset({(0, "0", 0, "0", "R"), (0, "1", 0, "1", "R")}))


def head_color(state, symbol):
    # the tile generator's color for "head on this cell, reading symbol"
    return f"q{state}:{symbol}"


def instance_for(tm, x, n, variant):
    """Width-n tiling instance asking whether tm accepts x.

    Bottom row: head over the first input cell (or over blank for empty
    x), the rest of x, then blanks.  Top row: the accept color over an
    otherwise blank tape.  Bounded instances get all-white sides.
    """
    ts = reduce_ntm_to_tiles(tm)
    nm = normalize_tm(tm)
    assert len(x) <= n
    bottom = [head_color(nm.start, x[0] if x else nm.blank)]
    bottom += list(x[1:])
    bottom += [nm.blank] * (n - len(bottom))
    top = (ts.accept,) + (nm.blank,) * (n - 1)
    if variant == "bounded":
        side = (WHITE,) * n
        return TilingInstance("bounded", ts, n, side, top, side, tuple(bottom))
    return TilingInstance("corridor", ts, n, None, top, None, tuple(bottom))


# ---------------------------------------------------------------------------
# Automata-core oracles, coded against the raw transition relations


def h_image_member(nfa, erase, v):
    """Is v in the erased-letter image of L(nfa)?

    Product reachability over (state, position in v) where erased and
    silent labels keep the position; independent of erase_letters.
    """
    frontier = {(nfa.start, 0)}
    seen = set(frontier)
    while frontier:
        new = set()
        for s, pos in frontier:
            for src, label, dst in nfa.transitions:
                if src != s:
                    continue
                if label is None or label in erase:
                    node = (dst, pos)
                elif pos < len(v) and label == v[pos]:
                    node = (dst, pos + 1)
                else:
                    continue
                if node not in seen:
                    seen.add(node)
                    new.add(node)
        frontier = new
    return any(s in nfa.finals and pos == len(v) for s, pos in seen)


def xor_product(a, b):
    """Symmetric-difference DFA of two total DFAs on one alphabet."""
    assert a.alphabet == b.alphabet
    n = b.states
    delta = {}
    for sa in range(a.states):
        for sb in range(b.states):
            for sym in a.alphabet:
                delta[(sa * n + sb, sym)] = a.delta[(sa, sym)] * n + b.delta[(sb, sym)]
    finals = frozenset(
        sa * n + sb
        for sa in range(a.states)
        for sb in range(b.states)
        if (sa in a.finals) != (sb in b.finals)
    )
    return Dfa(a.states * n, a.alphabet, delta, a.start * n + b.start, finals)


def pda_nonempty_bfs(pda, height_cap):
    """Does some word reach a final state with a bare bottom marker?

    Breadth-first over (state, stack) configurations, stacks stored
    bottom first, growth capped at height_cap.
    """
    start = (pda.start, (pda.bottom,))
    seen = {start}
    queue = deque([start])
    while queue:
        state, stack = queue.popleft()
        if state in pda.finals and stack == (pda.bottom,):
            return True
        if not stack:
            continue
        top = stack[-1]
        for src, _label, popped, dst, push in pda.transitions:
            if src != state or popped != top:
                continue
            new_stack = stack[:-1] + tuple(reversed(push))
            if len(new_stack) > height_cap:
                continue
            node = (dst, new_stack)
            if node not in seen:
                seen.add(node)
                queue.append(node)
    return False


def all_words(alphabet, max_len):
    """Every word over the alphabet up to max_len, shortlex order."""
    letters = sorted(alphabet)
    layer = [""]
    for w in layer:
        yield w
    for _ in range(max_len):
        layer = [w + c for w in layer for c in letters]
        for w in layer:
            yield w


# ---------------------------------------------------------------------------
# Brute-force tiling oracles (tiny instances only)


def brute_bounded(instance):
    """Try every |T|^(n*n) grid in order; first valid tiling or None."""
    n = instance.width
    count = len(instance.tile_set.tiles)
    for flat in itertools.product(range(count), repeat=n * n):
        rows = tuple(tuple(flat[j * n:(j + 1) * n]) for j in range(n))
        tiling = Tiling(n, n, rows)
        if not validate_tiling(instance, tiling):
            return tiling
    return None


def brute_corridor(instance, max_height):
    """Exhaustive scan by height, then grid; (height, tiling) or None."""
    n = instance.width
    count = len(instance.tile_set.tiles)
    for h in range(1, max_height + 1):
        for flat in itertools.product(range(count), repeat=n * h):
            rows = tuple(tuple(flat[j * n:(j + 1) * n]) for j in range(h))
            tiling = Tiling(n, h, rows)
            if not validate_tiling(instance, tiling):
                return h, tiling
    return None
