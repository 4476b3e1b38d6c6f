"""Shared test utilities."""

from radiuskit.graphs import Graph
from radiuskit.radius import CoverSequence


def random_graph(rng, n, edge_prob=0.5):
    labels = [f"w{i}" for i in range(n)]
    edges = [(labels[i], labels[j]) for i in range(n)
             for j in range(i + 1, n) if rng.random() < edge_prob]
    return Graph(labels, edges) if edges else None


def random_valid_cover(g, k, rng):
    """Random structurally valid swap walk, steered to cover every edge."""
    vertices = list(g.vertices)
    current = set(rng.sample(vertices, k + 1))
    sets = [frozenset(current)]
    covered = {e for e in g.edge_set() if e <= current}

    def swap_in(v):
        out = rng.choice(sorted(current - {v}))
        current.remove(out)
        current.add(v)
        sets.append(frozenset(current))
        covered.update(e for e in g.edge_set() if e <= current)

    for _ in range(rng.randrange(0, 8)):  # wander a bit first
        outside = [v for v in vertices if v not in current]
        if not outside:
            break
        swap_in(rng.choice(outside))
    while covered != g.edge_set():
        u, v = tuple(sorted(next(iter(g.edge_set() - covered))))
        if u not in current:
            keep = current - {v} if v in current else current
            out = rng.choice(sorted(keep))
            current.remove(out)
            current.add(u)
            sets.append(frozenset(current))
        if v not in current:
            out = rng.choice(sorted(current - {u}))
            current.remove(out)
            current.add(v)
            sets.append(frozenset(current))
        covered.update(e for e in g.edge_set() if e <= current)
    return CoverSequence(g, k, tuple(sets))
