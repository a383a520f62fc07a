"""Labelled trivalent trees dual to triangulations, tree degrees and mutation.

Leaves are the integers 1..n; internal vertices are n+1, n+2, ...  For a
tree built from a triangulation the internal id of a triangle is n+1 plus
its position among the sorted vertex triples.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
import json

from .errors import InvalidInput
from .polygon import Triangulation, wrap, quadrilateral
from .weights import WeightVector


@dataclass(frozen=True)
class LabelledTree:
    n: int
    edges: frozenset  # of frozenset({x, y})

    @cached_property
    def adjacency(self) -> dict:
        adj = {}
        for e in self.edges:
            x, y = tuple(e)
            adj.setdefault(x, set()).add(y)
            adj.setdefault(y, set()).add(x)
        return adj

    @property
    def internal(self) -> list:
        return sorted(v for v in self.adjacency if v > self.n)

    @cached_property
    def parent(self) -> dict:
        """Parent pointers for the orientation away from the root leaf 1."""
        parent = {1: None}
        queue = deque([1])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        return parent

    def leaves_below(self, v) -> frozenset:
        return self._below[v]

    @cached_property
    def _below(self) -> dict:
        below = {}
        order = sorted(self.parent, key=self._depth.__getitem__, reverse=True)
        for v in order:
            if 1 < v <= self.n:
                below[v] = frozenset([v])
            else:
                kids = [y for y in self.adjacency[v] if self.parent.get(y) == v]
                below[v] = frozenset().union(*(below[c] for c in kids))
        return below

    @cached_property
    def _depth(self) -> dict:
        depth = {1: 0}
        for v in self._bfs_order:
            p = self.parent[v]
            if p is not None:
                depth[v] = depth[p] + 1
        return depth

    @cached_property
    def _bfs_order(self) -> list:
        order, queue, seen = [], deque([1]), {1}
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(self.adjacency[x]):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return order

    def children(self, v) -> list:
        """Children of ``v`` ordered (right, left): smaller leaf labels first."""
        kids = [y for y in self.adjacency[v] if self.parent.get(y) == v]
        return sorted(kids, key=lambda c: min(self._below[c]))

    @cached_property
    def internal_edges(self) -> list:
        return sorted(tuple(sorted(e)) for e in self.edges if min(e) > self.n)

    @cached_property
    def splits(self) -> frozenset:
        """Leaf sets below each internal edge; determines the tree."""
        out = set()
        for x, y in self.internal_edges:
            child = y if self.parent[y] == x else x
            out.add(self._below[child])
        return frozenset(out)

    def same_tree(self, other: "LabelledTree") -> bool:
        return self.n == other.n and self.splits == other.splits

    def path(self, i, j) -> list:
        prev = {i: None}
        queue = deque([i])
        while queue:
            x = queue.popleft()
            if x == j:
                break
            for y in self.adjacency[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        out = [j]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]

    def validate(self):
        n = self.n
        leaves = [v for v, nb in self.adjacency.items() if len(nb) == 1]
        if sorted(leaves) != list(range(1, n + 1)):
            raise InvalidInput("leaves must be exactly 1..n")
        inner = self.internal
        if any(len(self.adjacency[v]) != 3 for v in inner):
            raise InvalidInput("internal vertices must be trivalent")
        if len(inner) != n - 2 or len(self.internal_edges) != n - 3:
            raise InvalidInput("wrong number of internal vertices or edges")
        if len(self.parent) != len(self.adjacency):
            raise InvalidInput("tree is not connected")

    def to_dict(self) -> dict:
        attach = {}
        for e in self.edges:
            x, y = sorted(e)
            if x <= self.n:
                attach[str(x)] = y
        return {
            "n": self.n,
            "internal": self.internal,
            "edges": [list(e) for e in self.internal_edges],
            "leaf_attach": {k: attach[k] for k in sorted(attach, key=int)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "LabelledTree":
        edges = {frozenset(e) for e in data["edges"]}
        edges.update(frozenset((int(k), v)) for k, v in data["leaf_attach"].items())
        tree = cls(int(data["n"]), frozenset(edges))
        tree.validate()
        return tree


def tree_from_triangulation(t: Triangulation) -> LabelledTree:
    n = t.n
    ids = {tri: n + 1 + r for r, tri in enumerate(t.triangles)}
    edges = set()
    for tri1, tri2 in combinations(t.triangles, 2):
        if len(set(tri1) & set(tri2)) == 2:
            edges.add(frozenset((ids[tri1], ids[tri2])))
    for i in range(1, n + 1):
        side = {i, wrap(i + 1, n)}
        owner = next(tri for tri in t.triangles if side <= set(tri))
        edges.add(frozenset((wrap(i + 1, n), ids[owner])))
    return LabelledTree(n, frozenset(edges))


def tree_degree(tr: LabelledTree, i: int, j: int) -> int:
    """Number of internal edges on the path between leaves i and j."""
    if i == j or not (1 <= i <= tr.n and 1 <= j <= tr.n):
        raise InvalidInput("need two distinct leaf labels")
    return len(tr.path(i, j)) - 3


def tree_weight_vector(tr: LabelledTree) -> WeightVector:
    n = tr.n
    return WeightVector.from_mapping(
        2, n, {(i, j): tree_degree(tr, i, j) for i, j in combinations(range(1, n + 1), 2)})


def four_point_check(w, sign: int = -1):
    """Four-point condition for the weight ``sign * w`` under the MIN convention.

    The smallest of the three pairing sums of ``sign * w`` over each
    quadruple must be attained at least twice.  ``sign=-1`` is the tree-metric
    side (largest pair-sum of w attained twice); ``sign=+1`` is the side of
    plabic weights.  Returns ``(ok, first_violating_quadruple_or_None)``.
    """
    if sign not in (1, -1):
        raise InvalidInput("sign must be +1 or -1")
    wd = w.as_dict() if isinstance(w, WeightVector) else dict(w)
    n = w.n if isinstance(w, WeightVector) else max(max(p) for p in wd)
    for i, j, k, l in combinations(range(1, n + 1), 4):
        sums = [sign * (wd[(i, j)] + wd[(k, l)]), sign * (wd[(i, k)] + wd[(j, l)]),
                sign * (wd[(i, l)] + wd[(j, k)])]
        if sums.count(min(sums)) < 2:
            return False, (i, j, k, l)
    return True, None


PAIRINGS = ("ij|kl", "ik|jl", "il|jk")


def pair_sums(tr: LabelledTree, quad) -> dict:
    """Tree-degree sums of the three pairings of an increasing quadruple."""
    i, j, k, l = quad
    d = lambda x, y: tree_degree(tr, x, y)
    return {"ij|kl": d(i, j) + d(k, l), "ik|jl": d(i, k) + d(j, l),
            "il|jk": d(i, l) + d(j, k)}


def dropped_pairing(tr: LabelledTree, quad):
    """Pairing whose monomial leaves the degenerate relation, or None if none does.

    For the weight -w_T the surviving terms are the two of largest tree
    degree, so the dropped one is the strictly smallest pair-sum.
    """
    sums = pair_sums(tr, quad)
    low = min(sums.values())
    hits = [p for p in PAIRINGS if sums[p] == low]
    return hits[0] if len(hits) == 1 else None


def role_pairing(regions: "Regions", quad, pairing) -> str:
    """Rewrite a pairing of quadruple positions as a pairing of region letters."""
    if pairing is None:
        return None
    pos = dict(zip("ijkl", quad))
    halves = ["".join(sorted((regions.role(pos[c]) for c in half), key="ADEC".index))
              for half in pairing.split("|")]
    return "|".join(sorted(halves, key=lambda h: "ADEC".index(h[0])))


@dataclass(frozen=True)
class ExchangeRecord:
    quad: tuple
    roles: str  # region letter of each entry of quad
    before: str  # dropped pairing in T, or None
    after: str  # dropped pairing in the mutated tree

    @property
    def changed(self) -> bool:
        return self.before != self.after

    @property
    def meets_all_regions(self) -> bool:
        return len(set(self.roles)) == 4


def mutation_exchange(tr: LabelledTree, e) -> list:
    """Dropped pairings of every quadruple relation before and after mutating ``e``."""
    regions = inner_edge_regions(tr, e)
    moved = tree_mutation(tr, e)
    out = []
    for quad in combinations(range(1, tr.n + 1), 4):
        roles = "".join(regions.role(x) for x in quad)
        out.append(ExchangeRecord(quad, roles, dropped_pairing(tr, quad),
                                  dropped_pairing(moved, quad)))
    return out


# role pairings of the exchange: with i in A, j in D, k in E, l in C the
# dropped pairing il|jk becomes ij|kl
EXCHANGE_BEFORE = "AC|DE"
EXCHANGE_AFTER = "AD|EC"


def exchange_violations(tr: LabelledTree, e) -> list:
    """Quadruples contradicting the mutation exchange pattern (empty when it holds)."""
    regions = inner_edge_regions(tr, e)
    bad = []
    for rec in mutation_exchange(tr, e):
        if rec.changed != rec.meets_all_regions:
            bad.append(rec)
        elif rec.changed and (role_pairing(regions, rec.quad, rec.before) != EXCHANGE_BEFORE
                              or role_pairing(regions, rec.quad, rec.after) != EXCHANGE_AFTER):
            bad.append(rec)
    return bad


@dataclass(frozen=True)
class Regions:
    """Leaf regions around an oriented inner edge a -> b."""

    a: int
    b: int
    A: frozenset
    D: frozenset
    E: frozenset
    C: frozenset
    case: str  # "right" if b is the right child of a, else "left"

    def role(self, leaf) -> str:
        for name in "ADEC":
            if leaf in getattr(self, name):
                return name
        raise KeyError(leaf)


def _orient(tr: LabelledTree, e):
    x, y = e
    if frozenset((x, y)) not in tr.edges or min(x, y) <= tr.n:
        raise InvalidInput(f"{e} is not an internal edge")
    if tr.parent[y] == x:
        return x, y
    return y, x


def inner_edge_regions(tr: LabelledTree, e) -> Regions:
    a, b = _orient(tr, e)
    right, left = tr.children(a)
    if b == right:
        case, c = "right", left
        d, e_ = tr.children(b)
    else:
        case, c = "left", right
        e_, d = tr.children(b)
    # d is the child of b away from c, e_ the one next to c
    below_a = tr.leaves_below(a)
    A = frozenset(range(1, tr.n + 1)) - below_a
    return Regions(a, b, A, tr.leaves_below(d), tr.leaves_below(e_), tr.leaves_below(c), case)


def tree_mutation(tr: LabelledTree, e) -> LabelledTree:
    """Rotate the inner edge a -> b: b's far child d moves up to a, c moves down to b."""
    a, b = _orient(tr, e)
    right, left = tr.children(a)
    if b == right:
        c = left
        d, e_ = tr.children(b)
    else:
        c = right
        e_, d = tr.children(b)
    edges = set(tr.edges)
    edges -= {frozenset((a, c)), frozenset((b, d))}
    edges |= {frozenset((a, d)), frozenset((b, c))}
    return LabelledTree(tr.n, frozenset(edges))


def edge_for_diagonal(t: Triangulation, d) -> tuple:
    """Internal tree edge of tree_from_triangulation(t) crossing diagonal ``d``."""
    a, b = sorted(d)
    p, q = quadrilateral(t, (a, b))
    ids = {tri: t.n + 1 + r for r, tri in enumerate(t.triangles)}
    return (ids[tuple(sorted((a, b, p)))], ids[tuple(sorted((a, b, q)))])
