"""Verifiers, lower bounds, and constructions for k-radius/k-cover sequences.

A k-radius sequence lists vertices (repetitions allowed) so that the two
endpoints of every edge appear within distance k; a k-cover sequence lists
(k+1)-element cache contents, consecutive sets differing by one swap, that
co-host every edge at some point.  Constructions here always re-verify their
own output before returning it.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from . import binseq, debruijn
from .errors import (BudgetError, InputError, InvalidParameterError,
                     ParseError, StructureError)
from .graphs import Graph, complete, complete_bipartite

LINEAR = "linear"
CYCLIC = "cyclic"


@dataclass(frozen=True)
class VertexSequence:
    """An ordered vertex list over a graph, read linearly or cyclically."""

    graph: Graph
    items: tuple
    mode: str = LINEAR

    def __post_init__(self):
        if self.mode not in (LINEAR, CYCLIC):
            raise InvalidParameterError(f"unknown mode {self.mode!r}")
        object.__setattr__(self, "items", tuple(str(x) for x in self.items))
        for x in self.items:
            if not self.graph.has_vertex(x):
                raise InputError(f"sequence refers to unknown vertex {x!r}")

    def __len__(self):
        return len(self.items)


@dataclass(frozen=True)
class CoverSequence:
    """An ordered list of (k+1)-sets; structure is checked by verify_cover."""

    graph: Graph
    k: int
    sets: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "sets", tuple(frozenset(str(x) for x in s) for s in self.sets))
        for s in self.sets:
            for x in s:
                if not self.graph.has_vertex(x):
                    raise InputError(f"cover set refers to unknown vertex {x!r}")

    def __len__(self):
        return len(self.sets)


class RadiusCheck(NamedTuple):
    valid: bool
    uncovered: tuple


class CoverCheck(NamedTuple):
    valid: bool
    uncovered: tuple
    reads: int


def _sorted_edge_list(edges):
    return tuple(sorted(tuple(sorted(e)) for e in edges))


def verify_radius(seq, k):
    """Check that every edge's endpoints appear within distance k."""
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    items = seq.items
    s = len(items)
    covered = set()
    span = min(k, s - 1) if s else 0
    for i in range(s):
        for d in range(1, span + 1):
            j = i + d
            if j >= s:
                if seq.mode == LINEAR:
                    break
                j %= s
            if items[i] != items[j]:
                covered.add(frozenset((items[i], items[j])))
    uncovered = [e for e in seq.graph.edge_set() if e not in covered]
    return RadiusCheck(not uncovered, _sorted_edge_list(uncovered))


def check_cover_structure(cov):
    """Raise StructureError naming the 1-based index of any violation."""
    for i, s in enumerate(cov.sets, start=1):
        if len(s) != cov.k + 1:
            raise StructureError(
                f"has {len(s)} elements, expected {cov.k + 1}", index=i)
    for i in range(1, len(cov.sets)):
        a, b = cov.sets[i - 1], cov.sets[i]
        if len(a - b) != 1 or len(b - a) != 1:
            raise StructureError(
                f"differs from its predecessor by {len(b - a)} elements, "
                f"expected exactly 1", index=i + 1)


def verify_cover(cov):
    """Check structure, then that every edge lies inside some set.

    reads = length + k: the first set costs k+1 reads, each later set one.
    """
    check_cover_structure(cov)
    uncovered = []
    for e in cov.graph.edge_set():
        if not any(e <= s for s in cov.sets):
            uncovered.append(e)
    reads = len(cov.sets) + cov.k
    return CoverCheck(not uncovered, _sorted_edge_list(uncovered), reads)


@dataclass(frozen=True)
class BoundsReport:
    """Lower bounds on the shortest k-radius sequence length.

    edge_bound = e/k + (k+1)/2 (cache-fill counting; needs more than k+1
    non-isolated vertices), bipartite_bound = e/(k - a_k) for bipartite graphs,
    degree_bound = sum of ceil(deg/2k).  fk_lower is the ceiling of the best
    applicable bound.
    """

    edge_bound: Optional[Fraction]
    bipartite_bound: Optional[Fraction]
    degree_bound: int
    fk_lower: int


def bounds(g, k, bipartition=None, detect_bipartition=True,
           max_vertices=debruijn.DEFAULT_MAX_VERTICES):
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    e = g.num_edges
    edge_bound = None
    if g.non_isolated_count() > k + 1:
        edge_bound = Fraction(e, k) + Fraction(k + 1, 2)
    sides = bipartition
    if sides is None and detect_bipartition:
        sides = g.bipartition()
    bipartite_bound = None
    if sides is not None and e > 0:
        for u, v in g.edges:
            if sides.get(u) is None or sides.get(u) == sides.get(v):
                raise InputError(f"bipartition does not split edge {u!r} {v!r}")
        try:
            a = debruijn.ak(k, max_vertices=max_vertices)
            bipartite_bound = Fraction(e) / (k - a)
        except BudgetError:
            bipartite_bound = None
    degree_bound = sum(math.ceil(g.degree(v) / (2 * k)) for v in g.vertices)
    candidates = [b for b in (edge_bound, bipartite_bound,
                              Fraction(degree_bound)) if b is not None]
    best = max(candidates, default=Fraction(0))
    return BoundsReport(edge_bound=edge_bound,
                        bipartite_bound=bipartite_bound,
                        degree_bound=degree_bound,
                        fk_lower=math.ceil(best))


def euler_radius1(g):
    """A shortest-style 1-radius sequence from an Euler circuit.

    Odd-degree vertices are paired up with auxiliary edges; the resulting
    multigraph has an Euler circuit, which is cut at an auxiliary edge when
    one exists.  The emitted walk has length m + n_o/2 for n_o > 0 odd
    vertices, and m + 1 for Eulerian inputs (a closed circuit needs its
    start repeated to cover the wrap edge linearly).
    """
    if g.num_edges < 1:
        raise InvalidParameterError("need at least one edge")
    if not g.is_connected():
        raise InputError("graph must be connected")

    adj = {v: [] for v in g.vertices}
    kinds = []
    for eid, (u, v) in enumerate(g.edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
        kinds.append(True)  # real edge
    odd = sorted(v for v in g.vertices if g.degree(v) % 2 == 1)
    for a, b in zip(odd[0::2], odd[1::2]):
        eid = len(kinds)
        adj[a].append((b, eid))
        adj[b].append((a, eid))
        kinds.append(False)  # auxiliary pairing edge
    for v in adj:
        adj[v].sort()

    # Hierholzer, iterative; records the edge ids along the circuit.
    start = g.vertices[0]
    used = [False] * len(kinds)
    ptr = {v: 0 for v in adj}
    stack = [(start, None)]
    circuit = []  # (vertex, edge id leading into it)
    while stack:
        v, via = stack[-1]
        advanced = False
        while ptr[v] < len(adj[v]):
            w, eid = adj[v][ptr[v]]
            ptr[v] += 1
            if not used[eid]:
                used[eid] = True
                stack.append((w, eid))
                advanced = True
                break
        if not advanced:
            circuit.append(stack.pop())
    circuit.reverse()  # (vertex, incoming edge id), circuit[0][1] is None

    verts = [v for v, _ in circuit]
    in_edge = [e for _, e in circuit]
    assert verts[0] == verts[-1] and len(verts) == len(kinds) + 1

    cut = None
    for i in range(1, len(verts)):
        if not kinds[in_edge[i]]:
            cut = i
            break
    if cut is None:
        items = verts  # Eulerian: closed walk, start repeated; length m+1
    else:
        # drop the auxiliary edge at position `cut` and restart the walk there
        items = verts[cut:-1] + verts[:cut]
    seq = VertexSequence(g, tuple(items), mode=LINEAR)
    check = verify_radius(seq, 1)
    assert check.valid, f"euler construction missed {check.uncovered}"
    return seq


def linearize_cyclic(seq, k):
    """Valid cyclic sequence of length s -> valid linear one of length s+k."""
    if seq.mode != CYCLIC:
        raise InvalidParameterError("expected a cyclic sequence")
    return VertexSequence(seq.graph, seq.items + seq.items[:k], mode=LINEAR)


@dataclass(frozen=True)
class PatternBlock:
    """One period of the block pattern used by the bipartite construction."""

    pattern: str
    c0: int
    c1: int
    r: int  # linear within-distance good pairs of the pattern


def _make_pattern_block(k, q, cycle_word, phase):
    word = cycle_word[phase:] + cycle_word[:phase]
    symbols = word * q
    text = "".join(str(s) for s in symbols)
    report = binseq.count_bad_pairs(
        binseq.CyclicBitString(symbols, mode=binseq.LINEAR), k)
    return PatternBlock(pattern=text, c0=symbols.count(0),
                        c1=symbols.count(1), r=report.good_count)


class BipartiteConstruction(NamedTuple):
    sequence: VertexSequence
    length: int
    lower_bound: Fraction  # m*n/(k - a_k)
    ratio: float
    block: Optional[PatternBlock]
    blocks_used: int


def construct_bipartite(m, n, k, epsilon_hint=0.5, seed=0,
                        max_vertices=debruijn.DEFAULT_MAX_VERTICES):
    """A verified k-radius sequence for the complete bipartite graph.

    Concatenates instantiations of an optimal-cycle block pattern, choosing
    vertices greedily (position by position, maximizing newly covered pairs,
    ties to the lowest vertex index), then finishes with a pair sweep that
    appends both endpoints of each still-uncovered pair.  The achieved
    length over the bipartite lower bound m*n/(k-a_k) is reported, never
    asserted.  The seed only rotates the phase at which the cyclic pattern
    is cut; the greedy itself is deterministic.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be >= 1, got {k}")
    if m < 0 or n < 0:
        raise InvalidParameterError("m and n must be nonnegative")
    if m == 0 or n == 0:
        vs = [f"x{i}" for i in range(1, m + 1)] + \
             [f"y{j}" for j in range(1, n + 1)]
        g = Graph(vs, ())
        seq = VertexSequence(g, (), mode=LINEAR)
        return BipartiteConstruction(seq, 0, Fraction(0), 0.0, None, 0)

    g = complete_bipartite(m, n)
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]
    a = debruijn.ak(k, max_vertices=max_vertices)
    lower = Fraction(m * n) / (k - a)

    opt = debruijn.min_normalized_cycle(debruijn.build_debruijn(k),
                                        max_vertices)
    eps = float(epsilon_hint) if epsilon_hint and epsilon_hint > 0 else 0.5
    q = math.ceil((1 + eps) / eps * (k * (k + 1)) /
                  (opt.length * float(k - a)))
    q = min(q, (2 * min(m, n)) // opt.length)
    block = None
    if q >= 1:
        zeros = opt.symbols.count(0)
        ones = opt.length - zeros
        while q >= 1 and (q * zeros > m or q * ones > n):
            q -= 1
        if q >= 1 and q * opt.length > 2 * k:
            rng = random.Random(seed)
            block = _make_pattern_block(k, q, opt.symbols,
                                        rng.randrange(opt.length))

    covered = [[False] * n for _ in range(m)]
    remaining = m * n
    items = []

    def append(v):
        """Append a vertex, marking pairs formed within the last k slots."""
        nonlocal remaining
        items.append(v)
        pos = len(items) - 1
        for back in range(1, min(k, pos) + 1):
            w = items[pos - back]
            if v[0] == w[0]:
                continue
            x, y = (v, w) if v[0] == "x" else (w, v)
            i, j = int(x[1:]) - 1, int(y[1:]) - 1
            if not covered[i][j]:
                covered[i][j] = True
                remaining -= 1

    blocks_used = 0
    if block is not None:
        pattern = [int(ch) for ch in block.pattern]
        while remaining > 0:
            before = remaining
            used_x, used_y = set(), set()
            for sym in pattern:
                pool, used = (xs, used_x) if sym == 0 else (ys, used_y)
                window = items[-k:] if k else []
                best_v, best_gain = None, -1
                for v in pool:
                    if v in used:
                        continue
                    gain = 0
                    seen = set()
                    for w in window:
                        if w[0] == v[0] or w in seen:
                            continue
                        seen.add(w)
                        x, y = (v, w) if v[0] == "x" else (w, v)
                        if not covered[int(x[1:]) - 1][int(y[1:]) - 1]:
                            gain += 1
                    if gain > best_gain:
                        best_v, best_gain = v, gain
                if best_v is None:
                    break
                used.add(best_v)
                append(best_v)
            gain = before - remaining
            blocks_used += 1
            # stop once a block stops beating the sweep's 1 pair per 2 slots
            if gain * 2 < len(pattern):
                break

    for i in range(m):
        for j in range(n):
            if covered[i][j]:
                continue
            x, y = xs[i], ys[j]
            window = items[-k:]
            if x in window:
                append(y)
            elif y in window:
                append(x)
            else:
                append(x)
                append(y)

    seq = VertexSequence(g, tuple(items), mode=LINEAR)
    check = verify_radius(seq, k)
    assert check.valid, f"bipartite construction missed {check.uncovered}"
    ratio = len(items) / float(lower) if lower else 0.0
    return BipartiteConstruction(seq, len(items), lower, ratio, block,
                                 blocks_used)


def cover_strategy_bipartite(m, n, k):
    """The cache strategy: hold k X-vertices, cycle through all of Y.

    Rounds pick k fresh X-vertices (the last round padded with already-used
    ones so sets keep k+1 elements); between rounds the X-vertices are
    swapped in one at a time.  When fewer than k X-vertices exist at all,
    one round slides a window of Y-vertices past the whole of X instead.
    """
    if m < 1 or n < 1 or k < 1:
        raise InvalidParameterError("need m, n, k >= 1")
    if m + n <= k + 1:
        raise InvalidParameterError(
            f"need m + n > k + 1 (got {m}+{n} vs k={k})")
    if k >= m + n:
        raise InvalidParameterError("cache cannot exceed the vertex count")
    g = complete_bipartite(m, n)
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]

    sets = []
    if m < k:
        # Window of k+1-m Y-vertices slides while all of X stays resident.
        w = k + 1 - m
        sets.append(frozenset(xs) | frozenset(ys[:w]))
        for j in range(w, n):
            sets.append(frozenset(xs) | frozenset(ys[j - w + 1:j + 1]))
    else:
        rounds = math.ceil(m / k)
        held = None
        for r in range(rounds):
            fresh = xs[r * k:(r + 1) * k]
            pad = [x for x in xs[:r * k] if x not in fresh]
            group = fresh + pad[:k - len(fresh)]
            if held is None:
                sets.append(frozenset(group) | {ys[0]})
                start_y = 1
            else:
                current = set(held)
                for x in group:
                    if x in current:
                        continue
                    out = next(v for v in sorted(current)
                               if v in held and v not in group)
                    current.remove(out)
                    current.add(x)
                    sets.append(frozenset(current) | {last_y})
                start_y = 0
            for j in range(start_y, n):
                if sets and ys[j] in sets[-1]:
                    continue
                sets.append(frozenset(group) | {ys[j]})
            held = set(group)
            last_y = ys[n - 1]
    cov = CoverSequence(g, k, tuple(sets))
    check = verify_cover(cov)
    assert check.valid, f"cover strategy missed {check.uncovered}"
    return cov


def maxcut_circulant(n, k):
    """Max cut of the distance-<=k circulant: k*n - w_k(n) for k < n/2."""
    if n < 3 or k < 1:
        raise InvalidParameterError(f"need n >= 3 and k >= 1, got {n}, {k}")
    if 2 * k >= n:
        from .exact import exact_maxcut
        return exact_maxcut(complete(n))
    return k * n - binseq.wk_exact(k, n)


def parse_vertex_sequence(text, graph, mode=LINEAR):
    """Whitespace-separated vertex labels."""
    tokens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        tokens.extend(line.split())
    return VertexSequence(graph, tuple(tokens), mode=mode)


def serialize_vertex_sequence(seq):
    return " ".join(seq.items) + "\n"


def parse_cover_sequence(text, graph, k):
    """One set per line, labels space-separated."""
    sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != len(set(tokens)):
            raise ParseError("repeated label inside a set", line=lineno)
        sets.append(frozenset(tokens))
    return CoverSequence(graph, k, tuple(sets))


def serialize_cover_sequence(cov):
    return "".join(" ".join(sorted(s)) + "\n" for s in cov.sets)
