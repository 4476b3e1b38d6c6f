"""Simple undirected graphs with string labels, generators, and file I/O.

Labels are arbitrary non-whitespace tokens so gadget provenance survives
into witnesses and error messages.  Graphs are immutable after construction
and preserve vertex/edge insertion order, which keeps serialization and all
downstream tie-breaks deterministic.
"""

import math
from typing import NamedTuple

from .errors import InputError, InvalidParameterError, ParseError


class Graph:
    """An undirected graph without self-loops or multi-edges."""

    __slots__ = ("_vertices", "_vset", "_edges", "_eset", "_adj")

    def __init__(self, vertices=(), edges=()):
        order = dict.fromkeys(str(v) for v in vertices)
        edge_list = []
        eset = set()
        adj = {v: [] for v in order}
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise InputError(f"self-loop at {u!r}")
            key = frozenset((u, v))
            if key in eset:
                raise InputError(f"duplicate edge {u!r} {v!r}")
            for w in (u, v):
                if w not in order:
                    order[w] = None
                    adj[w] = []
            eset.add(key)
            edge_list.append((u, v))
            adj[u].append(v)
            adj[v].append(u)
        for v in order:
            if not v or any(ch.isspace() for ch in v):
                raise InputError(f"label {v!r} must be a non-whitespace token")
        self._vertices = tuple(order)
        self._vset = frozenset(order)
        self._edges = tuple(edge_list)
        self._eset = frozenset(eset)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def num_vertices(self):
        return len(self._vertices)

    @property
    def num_edges(self):
        return len(self._edges)

    def has_vertex(self, v):
        return v in self._vset

    def has_edge(self, u, v):
        return frozenset((u, v)) in self._eset

    def edge_set(self):
        return self._eset

    def neighbors(self, v):
        if v not in self._vset:
            raise InputError(f"unknown vertex {v!r}")
        return self._adj[v]

    def degree(self, v):
        return len(self.neighbors(v))

    def non_isolated_count(self):
        return sum(1 for v in self._vertices if self._adj[v])

    def bipartition(self):
        """BFS 2-coloring as a dict label -> 0/1, or None if an odd cycle."""
        color = {}
        for root in self._vertices:
            if root in color:
                continue
            color[root] = 0
            queue = [root]
            while queue:
                u = queue.pop()
                for w in self._adj[u]:
                    if w not in color:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        return color

    def is_connected(self):
        if not self._vertices:
            return True
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vset == other._vset and self._eset == other._eset

    def __hash__(self):
        return hash((self._vset, self._eset))

    def __repr__(self):
        return (f"Graph({self.num_vertices} vertices, "
                f"{self.num_edges} edges)")


def complete(n):
    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m, n):
    if m < 1 or n < 1:
        raise InvalidParameterError(f"need m, n >= 1, got {m}, {n}")
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]
    return Graph(xs + ys, [(x, y) for x in xs for y in ys])


def path(n):
    if n < 1:
        raise InvalidParameterError(f"need n >= 1, got {n}")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, list(zip(vs, vs[1:])))


def cycle(n):
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


class CirculantGraph(NamedTuple):
    graph: Graph
    complete: bool  # true when k >= n/2 collapsed the graph to K_n


def circulant(n, k):
    """Cycle on 0..n-1 plus chords between vertices at cyclic distance <= k.

    For k >= n/2 every pair is within distance, so the complete graph is
    returned with the `complete` flag set.
    """
    if n < 3 or k < 1:
        raise InvalidParameterError(f"need n >= 3 and k >= 1, got {n}, {k}")
    vs = [str(i) for i in range(n)]
    edges = []
    span = min(k, (n - 1) // 2)
    for d in range(1, span + 1):
        edges.extend((vs[i], vs[(i + d) % n]) for i in range(n))
    if n % 2 == 0 and k >= n // 2:
        half = n // 2
        edges.extend((vs[i], vs[i + half]) for i in range(half))
    return CirculantGraph(Graph(vs, edges), 2 * k >= n)


def line_graph(g):
    """Graph on g's edges, adjacent when the edges share an endpoint.

    Vertex labels are the sorted endpoint pair joined by '|'.
    """
    if g.num_edges < 1:
        raise InvalidParameterError("line graph needs at least one edge")
    label = {}
    for u, v in g.edges:
        a, b = sorted((u, v))
        label[frozenset((u, v))] = f"{a}|{b}"
    vs = [label[frozenset(e)] for e in g.edges]
    edges = []
    seen = set()
    for i, (u1, v1) in enumerate(g.edges):
        e1 = frozenset((u1, v1))
        for j in range(i + 1, g.num_edges):
            e2 = frozenset(g.edges[j])
            if e1 & e2:
                key = frozenset((label[e1], label[e2]))
                if key not in seen:
                    seen.add(key)
                    edges.append((label[e1], label[e2]))
    return Graph(vs, edges)


def pendant_label(v, j):
    """Label of the j-th pendant neighbor hung off vertex v."""
    return f"e_{v}^{j}"


def attach_pendants(g, count):
    """Hang `count` new degree-1 neighbors off every original vertex."""
    if count < 0:
        raise InvalidParameterError(f"pendant count must be >= 0, got {count}")
    vertices = list(g.vertices)
    edges = list(g.edges)
    for v in g.vertices:
        for j in range(1, count + 1):
            leaf = pendant_label(v, j)
            if g.has_vertex(leaf):
                raise InputError(f"pendant label {leaf!r} collides with a vertex")
            vertices.append(leaf)
            edges.append((v, leaf))
    return Graph(vertices, edges)


def parse_graph(text):
    """Parse the edge-list format: one 'u v' per line, # comments."""
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"expected two labels, got {len(tokens)}", line=lineno)
        u, v = tokens
        if u == v:
            raise ParseError(f"self-loop at {u!r}", line=lineno)
        key = frozenset((u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u!r} {v!r}", line=lineno)
        seen.add(key)
        edges.append((u, v))
    return Graph((), edges)


def serialize_graph(g):
    """Edge list in insertion order; parse(serialize(g)) reproduces g.

    Isolated vertices are not expressible in this format and are rejected.
    """
    for v in g.vertices:
        if g.degree(v) == 0:
            raise InputError(
                f"vertex {v!r} is isolated; the edge-list format cannot "
                f"express it")
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def hamiltonian_path(g):
    """Some Hamiltonian path as a vertex list, or None.

    Plain backtracking in label order; meant for the tiny instances the
    exact solvers and reduction tests deal with.
    """
    n = g.num_vertices
    if n == 0:
        return None
    if n == 1:
        return [g.vertices[0]]
    order = sorted(g.vertices)

    def extend(pathlist, used):
        if len(pathlist) == n:
            return pathlist
        for w in g.neighbors(pathlist[-1]):
            if w not in used:
                used.add(w)
                pathlist.append(w)
                found = extend(pathlist, used)
                if found:
                    return found
                pathlist.pop()
                used.remove(w)
        return None

    for start in order:
        found = extend([start], {start})
        if found:
            return found
    return None


def line_graph_edge_count(g):
    """Independent count: sum over vertices of C(deg, 2)."""
    return sum(math.comb(g.degree(v), 2) for v in g.vertices)
