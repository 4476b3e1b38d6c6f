"""Hardness-reduction instance builders, witness transformers, loss counting.

Two reductions are constructed here: Hamiltonian path in a cubic
triangle-free graph to a threshold k-radius instance on a line graph with
pendant gadgets, and 1-cover to k-cover via edge gadgets with large
y-vertex fans.  The forward witness transformers emit sequences of exactly
the advertised lengths and are always re-verified.
"""

import json
import math
from dataclasses import dataclass

from .errors import InputError, InvalidParameterError, WitnessError
from .graphs import (Graph, attach_pendants, hamiltonian_path, line_graph,
                     pendant_label)
from .radius import (CoverSequence, VertexSequence, check_cover_structure,
                     verify_cover, verify_radius)


def _edge_label(u, v):
    a, b = sorted((u, v))
    return f"{a}|{b}"


@dataclass(frozen=True)
class RadiusReductionInstance:
    """Threshold k-radius instance built from a cubic triangle-free graph."""

    source: Graph
    k: int
    target: Graph
    threshold: int  # sequence length to decide: k*n + 1


@dataclass(frozen=True)
class CoverReductionInstance:
    """k-cover instance with per-edge gadgets built from a 1-cover instance."""

    source: Graph
    k: int
    fan_size: int  # N: gadget stay length
    target: Graph
    target_length: int  # m*N + (m-1)(k-1)


def check_cubic_triangle_free(g):
    """Raise InputError naming a witness vertex or triangle on violation."""
    for v in g.vertices:
        if g.degree(v) != 3:
            raise InputError(
                f"vertex {v!r} has degree {g.degree(v)}, graph must be cubic")
    for u, v in g.edges:
        common = set(g.neighbors(u)) & set(g.neighbors(v))
        if common:
            w = sorted(common)[0]
            raise InputError(f"triangle {u!r} {v!r} {w!r} found, "
                             f"graph must be triangle-free")


def reduce_hampath_to_radius(f, k):
    """Build the line graph of f with k-2 pendants per vertex, plus threshold.

    The target has (k+1)k n/2 edges and the decision threshold is
    2 e(target)/(k+1) + 1 = k n + 1.
    """
    if k < 2:
        raise InvalidParameterError(f"reduction needs k >= 2, got {k}")
    check_cubic_triangle_free(f)
    target = line_graph(attach_pendants(f, k - 2))
    n = f.num_vertices
    expected_edges = (k + 1) * k * n // 2
    assert target.num_edges == expected_edges, \
        f"gadget edge count {target.num_edges} != {expected_edges}"
    threshold = 2 * target.num_edges // (k + 1) + 1
    assert threshold == k * n + 1
    return RadiusReductionInstance(source=f, k=k, target=target,
                                   threshold=threshold)


def hampath_witness_to_sequence(inst, path_vertices):
    """Turn a Hamiltonian path of the source into a threshold-length witness.

    Emits the spare edge at the first endpoint, then for each path vertex
    its non-path edge, its pendant edges, and the next path edge, ending
    with the spare edge at the last endpoint.  Non-path edges at the two
    endpoints are assigned in lexicographic label order.
    """
    f, k = inst.source, inst.k
    path_vertices = [str(v) for v in path_vertices]
    if sorted(path_vertices) != sorted(f.vertices):
        raise WitnessError("path must visit every vertex exactly once")
    for a, b in zip(path_vertices, path_vertices[1:]):
        if not f.has_edge(a, b):
            raise WitnessError(f"{a!r} and {b!r} are not adjacent")
    n = len(path_vertices)
    path_edges = [frozenset((path_vertices[i], path_vertices[i + 1]))
                  for i in range(n - 1)]
    on_path = set(path_edges)

    def spare_edges(v):
        out = [frozenset((v, w)) for w in f.neighbors(v)]
        return sorted((e for e in out if e not in on_path),
                      key=lambda e: _edge_label(*e))

    first_spares = spare_edges(path_vertices[0])
    last_spares = spare_edges(path_vertices[-1])
    e0, f1 = first_spares[0], first_spares[1]
    fn, en = last_spares[0], last_spares[1]

    items = [_edge_label(*e0)]
    for i, v in enumerate(path_vertices):
        if i == 0:
            non_path = f1
        elif i == n - 1:
            non_path = fn
        else:
            non_path = spare_edges(v)[0]
        items.append(_edge_label(*non_path))
        items.extend(_edge_label(v, pendant_label(v, j))
                     for j in range(1, k - 1))
        if i < n - 1:
            items.append(_edge_label(*path_edges[i]))
        else:
            items.append(_edge_label(*en))
    assert len(items) == inst.threshold
    seq = VertexSequence(inst.target, tuple(items))
    check = verify_radius(seq, k)
    assert check.valid, f"transformed witness missed {check.uncovered}"
    return seq


def _gadget_clique(u, v, k):
    a, b = sorted((u, v))
    return [f"x[{a},{b}]^{i}" for i in range(1, k + 1)]


def _gadget_fans(u, v, fan_size):
    a, b = sorted((u, v))
    return [f"y[{a},{b}]^{i}" for i in range(1, fan_size - 1)]


def reduce_cover1_to_coverk(h, k):
    """Replace every source edge uv by a gadget: a k-clique joined to u, v
    and N-2 private fan vertices, with N = C(k,2)(m-1) + C(k+1,2) + 3."""
    if k < 2:
        raise InvalidParameterError(f"reduction needs k >= 2, got {k}")
    if h.num_edges < 1:
        raise InvalidParameterError("source graph needs at least one edge")
    if not h.is_connected():
        raise InputError("source graph must be connected")
    m = h.num_edges
    fan = math.comb(k, 2) * (m - 1) + math.comb(k + 1, 2) + 3
    vertices = list(h.vertices)
    edges = []
    for u, v in h.edges:
        clique = _gadget_clique(u, v, k)
        fans = _gadget_fans(u, v, fan)
        vertices.extend(clique)
        vertices.extend(fans)
        edges.extend((clique[i], clique[j])
                     for i in range(k) for j in range(i + 1, k))
        for x in clique:
            edges.append((x, u))
            edges.append((x, v))
            edges.extend((x, y) for y in fans)
    target = Graph(vertices, edges)
    expected = m * (math.comb(k, 2) + fan * k)
    assert target.num_edges == expected, \
        f"gadget edge count {target.num_edges} != {expected}"
    return CoverReductionInstance(source=h, k=k, fan_size=fan, target=target,
                                  target_length=m * fan + (m - 1) * (k - 1))


def _check_one_cover(h, edge_list):
    """A 1-cover of length m: every edge exactly once, neighbors adjacent."""
    edges = [frozenset((str(u), str(v))) for u, v in edge_list]
    for e in edges:
        u, v = tuple(e)
        if not h.has_edge(u, v):
            raise WitnessError(f"{u!r} {v!r} is not an edge of the source")
    if len(set(edges)) != len(edges) or len(edges) != h.num_edges:
        raise WitnessError("1-cover must list every source edge exactly once")
    for i in range(len(edges) - 1):
        if not edges[i] & edges[i + 1]:
            raise WitnessError(
                f"steps {i + 1} and {i + 2} share no endpoint")
    return edges


def cover1_witness_to_coverk(inst, one_cover):
    """Concatenate gadget stay blocks with k-1 step connector swaps.

    Each edge's block enters at one endpoint, parks the clique through all
    fan vertices, and leaves at the endpoint shared with the next edge;
    connectors swap the old clique out for the new one while the shared
    vertex stays resident.
    """
    h, k, fan = inst.source, inst.k, inst.fan_size
    edges = _check_one_cover(h, one_cover)
    m = len(edges)

    # Orient each edge so the walk enters at the vertex shared with the
    # previous edge and exits at the one shared with the next.  A pivot
    # (both neighbors sharing the same endpoint) breaks the template: the
    # far endpoint would never co-reside with its gadget clique, so such
    # witnesses are rejected rather than silently mangled.
    oriented = []
    for i, e in enumerate(edges):
        if m == 1:
            enter_v, exit_v = sorted(e)
        elif i == 0:
            exit_v = min(e & edges[1])
            enter_v = next(iter(e - {exit_v}))
        elif i < m - 1:
            enter_v = min(edges[i - 1] & e)
            exit_v = min(e & edges[i + 1])
            if enter_v == exit_v:
                raise WitnessError(
                    f"1-cover pivots on {enter_v!r} at step {i + 1}; the "
                    f"edge walk must pass through each edge")
        else:
            enter_v = min(edges[i - 1] & e)
            exit_v = next(iter(e - {enter_v}))
        oriented.append((enter_v, exit_v))

    sets = []
    for i, (e, (enter_v, exit_v)) in enumerate(zip(edges, oriented)):
        u, v = tuple(e)
        clique = _gadget_clique(u, v, k)
        fans = _gadget_fans(u, v, fan)
        block = [frozenset(clique) | {enter_v}]
        block.extend(frozenset(clique) | {y} for y in fans)
        block.append(frozenset(clique) | {exit_v})
        sets.extend(block)
        if i < m - 1:
            nu, nv = tuple(edges[i + 1])
            new_clique = _gadget_clique(nu, nv, k)
            current = set(clique) | {exit_v}
            for j in range(k - 1):
                current.remove(clique[j])
                current.add(new_clique[j])
                sets.append(frozenset(current))
    assert len(sets) == inst.target_length
    cov = CoverSequence(inst.target, k, tuple(sets))
    check = verify_cover(cov)
    assert check.valid, f"transformed witness missed {check.uncovered}"
    return cov


def loss_count(cov):
    """Count co-residency events that cover no new edge.

    A newly co-resident pair is a loss when it is not an edge, or when it
    was already co-resident strictly before the preceding set.  For every
    valid cover sequence e(G) + losses = k(s-1) + C(k+1,2).
    """
    check_cover_structure(cov)
    edges = cov.graph.edge_set()
    losses = 0
    seen_before = set()  # pairs co-resident in sets up to index i-2
    previous = None
    for current in cov.sets:
        members = sorted(current)
        for a_i in range(len(members)):
            for b_i in range(a_i + 1, len(members)):
                pair = frozenset((members[a_i], members[b_i]))
                if previous is not None and pair <= previous:
                    continue
                if pair not in edges or pair in seen_before:
                    losses += 1
        if previous is not None:
            for a_i, a in enumerate(sorted(previous)):
                for b in sorted(previous)[a_i + 1:]:
                    seen_before.add(frozenset((a, b)))
        previous = current
    return losses


def find_one_cover(h):
    """A shortest 1-cover as an ordered edge list, or None.

    Uses the correspondence with Hamiltonian paths in the line graph: a
    path visiting every line-graph vertex once is an edge ordering where
    consecutive edges are adjacent.
    """
    lg = line_graph(h)
    path_labels = hamiltonian_path(lg)
    if path_labels is None:
        return None
    return [tuple(label.split("|")) for label in path_labels]


def instance_metadata(inst):
    """Sidecar metadata for a serialized instance (JSON-ready dict)."""
    if isinstance(inst, RadiusReductionInstance):
        return {
            "reduction": "ham-radius",
            "k": inst.k,
            "threshold": inst.threshold,
            "source_vertices": inst.source.num_vertices,
            "source_edges": inst.source.num_edges,
            "target_vertices": inst.target.num_vertices,
            "target_edges": inst.target.num_edges,
        }
    if isinstance(inst, CoverReductionInstance):
        return {
            "reduction": "cover1-coverk",
            "k": inst.k,
            "fan_size": inst.fan_size,
            "target_length": inst.target_length,
            "source_vertices": inst.source.num_vertices,
            "source_edges": inst.source.num_edges,
            "target_vertices": inst.target.num_vertices,
            "target_edges": inst.target.num_edges,
        }
    raise InvalidParameterError(f"unknown instance type {type(inst).__name__}")


def serialize_metadata(inst):
    return json.dumps(instance_metadata(inst), sort_keys=True) + "\n"
