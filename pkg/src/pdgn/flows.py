"""Perfect orientations, J-flows and plabic degrees."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .errors import InvalidInput, NoFlowError, ResourceError, StructuralError
from .plabic import BLACK, BOUNDARY, WHITE, PlabicGraph
from .weights import WeightVector, lex_subsets


@dataclass(frozen=True)
class PerfectOrientation:
    """Directed edges of ``graph``; ``direction`` maps sorted edge -> (tail, head)."""

    graph: PlabicGraph = field(repr=False, compare=False)
    direction: tuple  # sorted tuple of (edge, (tail, head))
    source_set: frozenset

    @property
    def arcs(self) -> dict:
        return dict(self.direction)

    def out_neighbours(self, v) -> list:
        return [head for tail, head in self.arcs.values() if tail == v]

    def check(self):
        g = self.graph
        indeg = {v: 0 for v in g.rotation}
        outdeg = {v: 0 for v in g.rotation}
        for tail, head in self.arcs.values():
            outdeg[tail] += 1
            indeg[head] += 1
        for v in g.internal_vertices:
            if g.color[v] == WHITE and indeg[v] != 1:
                return False
            if g.color[v] == BLACK and outdeg[v] != 1:
                return False
        return True


def _require_bipartite(g):
    for u, v in g.edges:
        if g.color[u] != BOUNDARY and g.color[u] == g.color[v]:
            raise InvalidInput("perfect orientations need a bipartite graph; normalize first")


def _from_matching(g, matched) -> PerfectOrientation:
    """Matched edges point black -> white; all others white -> black."""
    arcs = {}
    sources = set()
    for u, v in g.edges:
        e = (u, v)
        cu, cv = g.color[u], g.color[v]
        if cu == BOUNDARY or cv == BOUNDARY:
            b, x = (u, v) if cu == BOUNDARY else (v, u)
            into_x = (e in matched) == (g.color[x] == WHITE)
            arcs[e] = (b, x) if into_x else (x, b)
            if into_x:
                sources.add(g.label_of[b])
            continue
        black, white = (u, v) if cu == BLACK else (v, u)
        arcs[e] = (black, white) if e in matched else (white, black)
    return PerfectOrientation(g, tuple(sorted(arcs.items())), frozenset(sources))


def _matching_with_sources(g, sources):
    """Matching covering internal vertices that realizes the given source labels."""
    forced = set()
    covered = set()
    for i, b in enumerate(g.boundary, start=1):
        x = g.rotation[b][0]
        in_m = (i in sources) == (g.color[x] == WHITE)
        if in_m:
            if x in covered:
                return None
            covered.add(x)
            forced.add(tuple(sorted((b, x))))
    rest = [v for v in g.internal_vertices if v not in covered]
    h = nx.Graph()
    h.add_nodes_from(rest)
    h.add_edges_from((u, v) for u, v in g.edges if u in h and v in h)
    top = [v for v in rest if g.color[v] == BLACK]
    m = nx.bipartite.hopcroft_karp_matching(h, top_nodes=top)
    if len(m) != len(rest):
        return None
    matched = set(forced)
    matched.update(tuple(sorted((u, v))) for u, v in m.items())
    return matched


def _any_matching(g):
    """Matching covering every internal vertex, boundary vertices optional."""
    h = nx.Graph()
    h.add_nodes_from(g.internal_vertices)
    for u, v in g.edges:
        inner = (g.color[u] != BOUNDARY) + (g.color[v] != BOUNDARY)
        h.add_edge(u, v, weight=inner)
    m = nx.max_weight_matching(h)
    covered = {x for e in m for x in e}
    if any(v not in covered for v in g.internal_vertices):
        return None
    return {tuple(sorted(e)) for e in m}


def find_perfect_orientation(g: PlabicGraph, preferred_sources=None) -> PerfectOrientation:
    """A perfect orientation, with the preferred source set when one exists.

    Without a preference the source set {1, ..., s} is tried first, s being
    the source count forced by the graph.
    """
    _require_bipartite(g)
    fallback = _any_matching(g)
    if fallback is None:
        raise StructuralError("graph admits no perfect orientation")
    if preferred_sources is None:
        size = len(_from_matching(g, fallback).source_set)
        preferred_sources = range(1, size + 1)
    matched = _matching_with_sources(g, set(preferred_sources))
    return _from_matching(g, matched if matched is not None else fallback)


def all_perfect_orientations(g: PlabicGraph, max_edges: int = 64) -> list:
    """Every perfect orientation, by backtracking over internal-vertex matchings."""
    _require_bipartite(g)
    if len(g.edges) > max_edges:
        raise ResourceError(f"{len(g.edges)} edges exceed the bound {max_edges}")
    inner = g.internal_vertices
    found = []

    def extend(used, matched):
        free = [v for v in inner if v not in used]
        if not free:
            found.append(_from_matching(g, set(matched)))
            return
        v = min(free, key=lambda x: (sum(u not in used for u in g.rotation[x]), x))
        for u in g.rotation[v]:
            if u in used:
                continue
            e = tuple(sorted((u, v)))
            extend(used | {u, v}, matched + [e])

    extend(frozenset(), [])
    unique = {o.direction: o for o in found}
    return [unique[k] for k in sorted(unique)]


# -- flows ---------------------------------------------------------------------


SIDES = ("left", "right")


def path_degree(g: PlabicGraph, path, side: str = "left") -> int:
    """Number of internal faces on one side of a directed boundary-to-boundary path.

    ``side="left"`` is the flow degree of the definition; ``side="right"``
    counts the complementary internal faces, which is the convention the
    Gr(3,6) dictionary weights follow.
    """
    if side not in SIDES:
        raise InvalidInput(f"side must be one of {SIDES}")
    cache = g.__dict__.setdefault("_path_degree_cache", {})
    key = (tuple(path), side)
    if key not in cache:
        darts = list(zip(path, path[1:]))
        if side == "right":
            darts = [(b, a) for a, b in reversed(darts)]
        cache[key] = len(g.left_region(darts) & set(g.internal_face_ids))
    return cache[key]


def _successors(o):
    out = {}
    for tail, head in o.arcs.values():
        out.setdefault(tail, []).append(head)
    return {v: sorted(hs) for v, hs in out.items()}


def _paths_from(g, out, start, blocked, sinks):
    """All self-avoiding directed paths from ``start`` to a free sink."""
    stack = [(start, [start])]
    while stack:
        v, path = stack.pop()
        for w in out.get(v, ()):
            if w in blocked or w in path:
                continue
            if g.color[w] == BOUNDARY:
                if w in sinks:
                    yield path + [w]
                continue
            stack.append((w, path + [w]))


@dataclass(frozen=True)
class FlowResult:
    degree: int
    flow: tuple  # paths as vertex tuples
    minimizers: int  # number of flows attaining the minimum
    total: int  # number of J-flows enumerated


def j_flows(o: PerfectOrientation, J):
    """Yield every J-flow as a tuple of vertex paths (sources in label order)."""
    g = o.graph
    J = set(J)
    if len(J) != len(o.source_set):
        raise InvalidInput("|J| must equal the size of the source set")
    starts = [g.boundary[i - 1] for i in sorted(o.source_set - J)]
    sinks = {g.boundary[i - 1] for i in J - o.source_set}
    out = _successors(o)

    def extend(r, blocked, chosen):
        if r == len(starts):
            yield tuple(chosen)
            return
        for p in _paths_from(g, out, starts[r], blocked, sinks - blocked):
            yield from extend(r + 1, blocked | set(p), chosen + [tuple(p)])

    yield from extend(0, frozenset(), [])


def plabic_degree_flow(g: PlabicGraph, o: PerfectOrientation, J,
                       side: str = "left") -> FlowResult:
    """Exhaustive J-flow scan: minimum degree, a minimizer, and how many attain it."""
    best, arg, ties, total = None, None, 0, 0
    for flow in j_flows(o, J):
        total += 1
        d = sum(path_degree(g, p, side) for p in flow)
        if best is None or d < best:
            best, arg, ties = d, flow, 1
        elif d == best:
            ties += 1
    if best is None:
        raise NoFlowError(f"no J-flow for J={sorted(J)}")
    return FlowResult(best, arg, ties, total)


def plabic_degree(g: PlabicGraph, o: PerfectOrientation, J, side: str = "left"):
    """Minimum flow degree for P_J and the flow attaining it."""
    res = plabic_degree_flow(g, o, J, side)
    return res.degree, res.flow


def plabic_weight_vector(g: PlabicGraph, index_order=None, orientation=None,
                         order_name=None, side: str = "left") -> WeightVector:
    """Plabic degrees of all P_J, J running over ``index_order`` (lex by default)."""
    o = orientation or find_perfect_orientation(g)
    k = len(o.source_set)
    if index_order is None:
        index_order = lex_subsets(k, g.n)
        order_name = order_name or "lex"
    degrees = {tuple(sorted(J)): plabic_degree(g, o, J, side)[0] for J in index_order}
    return WeightVector.from_mapping(k, g.n, degrees, list(index_order), order_name or "custom")


def matroid_subsets(g: PlabicGraph, o: PerfectOrientation = None) -> list:
    """k-subsets admitting a J-flow."""
    o = o or find_perfect_orientation(g)
    k = len(o.source_set)
    out = []
    for J in combinations(range(1, g.n + 1), k):
        if next(j_flows(o, J), None) is not None:
            out.append(J)
    return out
