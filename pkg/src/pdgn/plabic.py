"""Plabic graphs as bicolored combinatorial maps in a disk.

A graph is stored as a rotation system: ``rotation[v]`` lists the neighbours
of ``v`` in counterclockwise order.  Boundary vertices are uncolored leaves,
listed in label order in ``boundary`` (label i is ``boundary[i-1]``), placed
counterclockwise on the disk.  Multiple edges are not supported.

Faces are traced on the graph augmented by the boundary circle: consecutive
boundary vertices are joined by an arc, so every face inside the disk is a
closed walk and the region outside the disk is one extra "outer" face.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from itertools import combinations
import json
import math

from .errors import InvalidInput, NotApplicable, ResourceError, StructuralError
from .polygon import Triangulation

BLACK, WHITE, BOUNDARY = "black", "white", "boundary"


class PlabicGraph:
    """Immutable plabic graph; operations return new graphs."""

    def __init__(self, n, color, rotation, boundary, check=True):
        self.n = int(n)
        self.color = dict(color)
        self.rotation = {v: tuple(nb) for v, nb in rotation.items()}
        self.boundary = tuple(boundary)
        if check:
            self.validate()

    # -- structure ---------------------------------------------------------

    def validate(self):
        n, rot = self.n, self.rotation
        if len(self.boundary) != n or len(set(self.boundary)) != n:
            raise StructuralError("boundary must list n distinct vertices")
        if set(rot) != set(self.color):
            raise StructuralError("rotation and color cover different vertices")
        for v, nbs in rot.items():
            c = self.color[v]
            if c not in (BLACK, WHITE, BOUNDARY):
                raise StructuralError(f"bad color {c!r}")
            if len(set(nbs)) != len(nbs):
                raise StructuralError(f"multiple edges at {v}")
            for u in nbs:
                if v not in rot.get(u, ()):
                    raise StructuralError(f"edge {v}-{u} is not symmetric")
            if c == BOUNDARY:
                if v not in self.boundary or len(nbs) != 1:
                    raise StructuralError("boundary vertices must be leaves")
                if self.color[nbs[0]] == BOUNDARY:
                    raise StructuralError("boundary vertex joined to boundary vertex")
            elif len(nbs) < 1:
                raise StructuralError(f"isolated internal vertex {v}")
        if any(self.color[b] != BOUNDARY for b in self.boundary):
            raise StructuralError("boundary list contains internal vertices")
        seen, queue = {self.boundary[0]}, deque([self.boundary[0]])
        while queue:
            for u in rot[queue.popleft()]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        if len(seen) != len(rot):
            raise StructuralError("graph is not connected")
        if self.euler_characteristic != 2:
            raise StructuralError("rotation data is not a planar disk embedding")

    @property
    def vertices(self):
        return sorted(self.rotation)

    @property
    def internal_vertices(self):
        return [v for v in self.vertices if self.color[v] != BOUNDARY]

    @cached_property
    def edges(self) -> list:
        return sorted({tuple(sorted((u, v))) for u in self.rotation for v in self.rotation[u]})

    @cached_property
    def label_of(self) -> dict:
        return {b: i + 1 for i, b in enumerate(self.boundary)}

    def degree(self, v) -> int:
        return len(self.rotation[v])

    def is_bipartite_normal(self) -> bool:
        for u, v in self.edges:
            cu, cv = self.color[u], self.color[v]
            if cu != BOUNDARY and cu == cv:
                return False
        return all(self.degree(v) != 2 for v in self.internal_vertices)

    # -- faces -------------------------------------------------------------

    @cached_property
    def _aug_rotation(self) -> dict:
        rot = dict(self.rotation)
        n = self.n
        for i, b in enumerate(self.boundary):
            nxt, prv = self.boundary[(i + 1) % n], self.boundary[(i - 1) % n]
            rot[b] = (nxt, self.rotation[b][0], prv)
        return rot

    @cached_property
    def _face_data(self):
        rot = self._aug_rotation
        pos = {v: {u: r for r, u in enumerate(nb)} for v, nb in rot.items()}
        dart_face, faces = {}, []
        for v in sorted(rot):
            for u in rot[v]:
                if (v, u) in dart_face:
                    continue
                walk, dart = [], (v, u)
                while dart not in dart_face:
                    dart_face[dart] = len(faces)
                    walk.append(dart)
                    a, b = dart
                    # keep the face on the left: clockwise successor of a at b
                    nb = rot[b]
                    dart = (b, nb[(pos[b][a] - 1) % len(nb)])
                if dart != walk[0]:
                    raise StructuralError("face walk did not close")
                faces.append(tuple(walk))
        return dart_face, faces

    @property
    def dart_face(self) -> dict:
        return self._face_data[0]

    @property
    def all_faces(self) -> list:
        return self._face_data[1]

    @cached_property
    def outer_face(self) -> int:
        b1, b2 = self.boundary[0], self.boundary[1 % self.n]
        return self.dart_face[(b2, b1)]

    @cached_property
    def euler_characteristic(self) -> int:
        v = len(self.rotation)
        e = len(self.edges) + self.n
        return v - e + len(self.all_faces)

    def face_vertices(self, f) -> tuple:
        return tuple(d[0] for d in self.all_faces[f])

    @cached_property
    def disk_faces(self) -> list:
        return [f for f in range(len(self.all_faces)) if f != self.outer_face]

    @cached_property
    def internal_face_ids(self) -> list:
        bd = set(self.boundary)
        return [f for f in self.disk_faces if not bd & set(self.face_vertices(f))]

    def faces(self) -> list:
        """Disk faces as vertex cycles (face on the left of the walk)."""
        return [self.face_vertices(f) for f in self.disk_faces]

    def internal_faces(self) -> list:
        return [self.face_vertices(f) for f in self.internal_face_ids]

    def face_index(self, face) -> int:
        """Index of a face given as a vertex cycle (any rotation of it)."""
        face = tuple(face)
        for f in self.disk_faces:
            cyc = self.face_vertices(f)
            if len(cyc) == len(face) and any(
                    cyc[r:] + cyc[:r] == face for r in range(len(cyc))):
                return f
        raise InvalidInput(f"{face} is not a face")

    def left_region(self, darts) -> frozenset:
        """Disk faces on the left of a boundary-to-boundary walk.

        The walk's edges act as barriers; the disk is flooded from the faces
        immediately left of its darts.  Raises if the walk does not separate.
        """
        dart_face = self.dart_face
        barrier = {frozenset(d) for d in darts}
        left = {dart_face[d] for d in darts}
        right = {dart_face[(d[1], d[0])] for d in darts}
        left_all, right_all = self._flood(left, barrier), self._flood(right, barrier)
        if left_all & right_all:
            raise StructuralError("walk does not split the disk")
        return frozenset(left_all)

    def _flood(self, seeds, barrier):
        faces, dart_face, bd = self.all_faces, self.dart_face, set(self.boundary)
        seen, queue = set(seeds), deque(seeds)
        while queue:
            for a, b in faces[queue.popleft()]:
                if a in bd and b in bd:
                    continue  # boundary arc
                if frozenset((a, b)) in barrier:
                    continue
                g = dart_face[(b, a)]
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
        seen.discard(self.outer_face)
        return seen

    # -- trips -------------------------------------------------------------

    def trip(self, i) -> list:
        """Darts of the walk from boundary label i (right at black, left at white)."""
        rot, color = self.rotation, self.color
        start = self.boundary[i - 1]
        dart = (start, rot[start][0])
        walk = [dart]
        limit = 2 * len(self.edges) + 2
        while color[dart[1]] != BOUNDARY:
            u, v = dart
            nb = rot[v]
            r = nb.index(u)
            step = 1 if color[v] == BLACK else -1
            dart = (v, nb[(r + step) % len(nb)])
            walk.append(dart)
            if len(walk) > limit:
                raise StructuralError(f"trip from {i} does not terminate")
        return walk

    def trip_ends(self) -> tuple:
        """trip_ends()[i-1] is the label where the walk from i stops."""
        return tuple(self.label_of[self.trip(i)[-1][1]] for i in range(1, self.n + 1))

    def copy_with(self, color=None, rotation=None, boundary=None, check=True):
        return PlabicGraph(self.n, self.color if color is None else color,
                           self.rotation if rotation is None else rotation,
                           self.boundary if boundary is None else boundary, check)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        eid = {e: r for r, e in enumerate(self.edges)}
        return {
            "n": self.n,
            "vertices": [{"id": v, "color": self.color[v]} for v in self.vertices],
            "rotation": {str(v): [[u, eid[tuple(sorted((u, v)))]] for u in self.rotation[v]]
                         for v in self.vertices},
            "boundary": list(self.boundary),
            "canonical_key": canonical_key(self).hex(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "PlabicGraph":
        color = {int(x["id"]): x["color"] for x in data["vertices"]}
        rotation = {int(v): [u[0] if isinstance(u, list) else u for u in nb]
                    for v, nb in data["rotation"].items()}
        return cls(data["n"], color, rotation, [int(b) for b in data["boundary"]])

    @classmethod
    def from_json(cls, text) -> "PlabicGraph":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return (f"PlabicGraph(n={self.n}, vertices={len(self.rotation)}, "
                f"edges={len(self.edges)})")


def from_embedding(n, coords, colors, edges, boundary) -> PlabicGraph:
    """Build a graph from straight-line coordinates (rotation sorted by angle)."""
    nbrs = {v: [] for v in coords}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rotation = {}
    for v, nb in nbrs.items():
        x0, y0 = coords[v]
        rotation[v] = sorted(nb, key=lambda u: math.atan2(coords[u][1] - y0, coords[u][0] - x0))
    color = dict(colors)
    for b in boundary:
        color[b] = BOUNDARY
    return PlabicGraph(n, color, rotation, boundary)


def faces(g: PlabicGraph) -> list:
    return g.faces()


def trip_permutation(g: PlabicGraph) -> tuple:
    """Trip permutation, with pi(i) the label whose trip ends at i.

    The walk rules (maximal right turn at black, maximal left at white)
    send label i to ``g.trip_ends()[i-1]``; the permutation reported here is
    its inverse, which is the convention under which the Gr(2,n) graphs of
    triangulations have pi = pi_{n-2,n}.
    """
    ends = g.trip_ends()
    if sorted(ends) != list(range(1, g.n + 1)):
        raise StructuralError("trip endpoints do not form a permutation")
    pi = [0] * g.n
    for i, e in enumerate(ends, start=1):
        pi[e - 1] = i
    return tuple(pi)


def pi_kn(k: int, n: int) -> tuple:
    return tuple(list(range(n - k + 1, n + 1)) + list(range(1, n - k + 1)))


class FaceLabeling(dict):
    """Maps disk-face index to its label; ``internal`` holds the internal ones."""

    def __init__(self, labels, internal):
        super().__init__(labels)
        self.internal = frozenset(internal)

    @property
    def internal_labels(self) -> frozenset:
        return frozenset(self[f] for f in self.internal)

    @property
    def boundary_labels(self) -> frozenset:
        return frozenset(v for f, v in self.items() if f not in self.internal)


def face_labels(g: PlabicGraph) -> FaceLabeling:
    """Label each disk face by the set of i whose trip passes it on the left."""
    cached = getattr(g, "_labels", None)
    if cached is not None:
        return cached
    labels = {f: set() for f in g.disk_faces}
    for i in range(1, g.n + 1):
        for f in g.left_region(g.trip(i)):
            labels[f].add(i)
    out = {f: tuple(sorted(s)) for f, s in labels.items()}
    sizes = {len(s) for s in out.values()}
    if len(sizes) != 1:
        raise StructuralError(f"face labels have mixed sizes {sorted(sizes)}")
    result = FaceLabeling(out, g.internal_face_ids)
    g._labels = result
    return result


# -- moves ---------------------------------------------------------------------


def _new_id(rot):
    return max(rot) + 1


def _contract(color, rot, u, v):
    """Merge v into u (same color); rotation is spliced at the edge."""
    if set(rot[u]) & set(rot[v]):
        raise StructuralError(f"contracting {u}-{v} would create parallel edges")
    ru, rv = list(rot[u]), list(rot[v])
    iu, iv = ru.index(v), rv.index(u)
    merged = ru[iu + 1:] + ru[:iu] + rv[iv + 1:] + rv[:iv]
    rot[u] = tuple(merged)
    for w in rv:
        if w != u:
            rot[w] = tuple(u if x == v else x for x in rot[w])
    del rot[v]
    del color[v]


def _smooth(color, rot, v):
    """Remove a degree-two internal vertex, joining its neighbours."""
    a, b = rot[v]
    if b in rot[a]:
        raise StructuralError(f"removing {v} would create a parallel edge")
    rot[a] = tuple(b if x == v else x for x in rot[a])
    rot[b] = tuple(a if x == v else x for x in rot[b])
    del rot[v]
    del color[v]


def _contract_all(color, rot) -> bool:
    """Contract one unicolored internal edge in place; False when none is left."""
    for u in sorted(rot):
        if color[u] == BOUNDARY:
            continue
        for v in rot[u]:
            if color[v] == color[u]:
                _contract(color, rot, u, v)
                return True
    return False


def normalize(g: PlabicGraph) -> PlabicGraph:
    """Contract unicolored internal edges and drop internal degree-2 vertices."""
    color, rot = dict(g.color), dict(g.rotation)
    while True:
        if _contract_all(color, rot):
            continue
        low = [u for u in sorted(rot) if color[u] != BOUNDARY and len(rot[u]) == 2]
        if not low:
            break
        _smooth(color, rot, low[0])
    return g.copy_with(color, rot)


def has_parallel_pair(g: PlabicGraph) -> bool:
    """True if two opposite-colored vertices share a 2-gon face (an (R) configuration)."""
    return any(len(g.face_vertices(f)) == 2 for f in g.disk_faces)


def square_move(g: PlabicGraph, face) -> PlabicGraph:
    """Square move (M1) at an internal quadrilateral face of a normal-form graph.

    Face vertices of degree above three are first split (M2) so the four
    become trivalent; colors are swapped and the result re-normalized.
    ``face`` is a vertex cycle as returned by ``internal_faces`` or a face index.
    """
    if not g.is_bipartite_normal():
        raise NotApplicable("graph is not in bipartite normal form")
    f = face if isinstance(face, int) else g.face_index(face)
    if f not in g.internal_face_ids:
        raise NotApplicable("not an internal face")
    cyc = g.face_vertices(f)
    if len(cyc) != 4:
        raise NotApplicable("face is not a quadrilateral")
    color, rot = dict(g.color), dict(g.rotation)
    for r, v in enumerate(cyc):
        prev, nxt = cyc[r - 1], cyc[(r + 1) % 4]
        nb = list(rot[v])
        s = nb.index(nxt)
        nb = nb[s:] + nb[:s]
        if nb[1] != prev:
            raise StructuralError("face corners are inconsistent with the rotation")
        others = nb[2:]
        if len(others) >= 2:
            w = _new_id(rot)
            color[w] = color[v]
            rot[v] = (nxt, prev, w)
            rot[w] = (v, *others)
            for o in others:
                rot[o] = tuple(w if x == v else x for x in rot[o])
    for v in cyc:
        color[v] = WHITE if color[v] == BLACK else BLACK
    return normalize(g.copy_with(color, rot, check=False))


def square_faces(g: PlabicGraph) -> list:
    return [f for f in g.internal_face_ids if len(g.all_faces[f]) == 4]


def canonical_key(g: PlabicGraph) -> bytes:
    """Encoding invariant under renaming vertices, anchored at boundary label 1."""
    rot, color = g.rotation, g.color
    start = g.boundary[0]
    new = {start: 0}
    order = [(start, None)]
    queue = deque([(start, None)])
    rows = []
    while queue:
        v, parent = queue.popleft()
        nb = list(rot[v])
        if parent is not None:
            s = nb.index(parent)
            nb = nb[s:] + nb[:s]
        for u in nb:
            if u not in new:
                new[u] = len(new)
                order.append((u, v))
                queue.append((u, v))
        tag = g.label_of.get(v, 0)
        rows.append((color[v][0], tag, tuple(new[u] for u in nb)))
    return json.dumps(rows, separators=(",", ":")).encode()


def enumerate_move_class(g: PlabicGraph, bound: int = 10000) -> list:
    """Breadth-first closure under square moves, deduplicated by canonical key."""
    seed = normalize(g)
    pi = trip_permutation(seed)
    found = {canonical_key(seed): seed}
    queue = deque([seed])
    while queue:
        cur = queue.popleft()
        for f in square_faces(cur):
            nxt = square_move(cur, f)
            key = canonical_key(nxt)
            if key in found:
                continue
            if has_parallel_pair(nxt):
                raise StructuralError("move produced a reducible (R) configuration")
            if trip_permutation(nxt) != pi:
                raise StructuralError("move changed the trip permutation")
            found[key] = nxt
            if len(found) > bound:
                raise ResourceError(f"move class exceeds {bound} graphs")
            queue.append(nxt)
    return [found[k] for k in sorted(found)]


# -- Kodama-Williams graphs -------------------------------------------------


def kw_graph(t: Triangulation) -> PlabicGraph:
    """Kodama-Williams plabic graph of a triangulation.

    Triangle centers (black) are joined to their corners; a polygon vertex is
    white if some diagonal meets it and black otherwise; each polygon vertex
    gets a ray to its boundary label; then same-colored neighbours are
    contracted.  Boundary label i has id i, polygon vertex i has id n+i and
    the center of the r-th sorted triangle has id 2n+1+r (a center merged
    into a black polygon vertex keeps the polygon vertex id).
    """
    n = t.n
    tris = t.triangles
    center = {tri: 2 * n + 1 + r for r, tri in enumerate(tris)}
    color, rot = {}, {}
    for i in range(1, n + 1):
        color[i] = BOUNDARY
        rot[i] = (n + i,)
        color[n + i] = WHITE if t.incident(i) else BLACK
        mine = sorted((tri for tri in tris if i in tri),
                      key=lambda tri, i=i: min((v - i) % n for v in tri if v != i))
        rot[n + i] = tuple(center[tri] for tri in mine) + (i,)
    for tri in tris:
        color[center[tri]] = BLACK
        rot[center[tri]] = tuple(n + v for v in tri)
    while _contract_all(color, rot):
        pass
    return PlabicGraph(n, color, rot, range(1, n + 1))


def star_graph(n: int, center_color: str = BLACK) -> PlabicGraph:
    """One internal vertex joined to all n boundary vertices."""
    c = n + 1
    rot = {i: (c,) for i in range(1, n + 1)}
    rot[c] = tuple(range(1, n + 1))
    color = {i: BOUNDARY for i in range(1, n + 1)}
    color[c] = center_color
    return PlabicGraph(n, color, rot, range(1, n + 1))
