"""Triangulations of the labelled n-gon and their connection numbers.

Vertices are labelled 1..n counterclockwise.  Diagonals are stored as
normalized pairs ``(a, b)`` with ``a < b``; the boundary edges
``(1,2), ..., (n,1)`` are implicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
import json

from .errors import InvalidInput


def wrap(label: int, n: int) -> int:
    """Reduce an integer label into 1..n."""
    return (label - 1) % n + 1


@dataclass(frozen=True)
class CyclicInterval:
    """The cyclic interval [[start, end]] of {1..n}, read counterclockwise."""

    start: int
    end: int
    n: int

    def __post_init__(self):
        if not (1 <= self.start <= self.n and 1 <= self.end <= self.n):
            raise InvalidInput(f"interval endpoints out of range: {self}")

    def __len__(self):
        return (self.end - self.start) % self.n + 1

    def __contains__(self, x):
        return (x - self.start) % self.n <= (self.end - self.start) % self.n

    def __iter__(self):
        return (wrap(self.start + r, self.n) for r in range(len(self)))

    @cached_property
    def members(self) -> frozenset:
        return frozenset(self)


def interval(p: int, q: int, n: int) -> CyclicInterval:
    return CyclicInterval(wrap(p, n), wrap(q, n), n)


def _normalize(d, n):
    a, b = int(d[0]), int(d[1])
    if not (1 <= a <= n and 1 <= b <= n) or a == b:
        raise InvalidInput(f"bad diagonal {d!r} for n={n}")
    a, b = min(a, b), max(a, b)
    if b - a == 1 or (a == 1 and b == n):
        raise InvalidInput(f"({a},{b}) is a boundary edge, not a diagonal")
    return (a, b)


def crosses(d1, d2) -> bool:
    """Two normalized diagonals cross iff their endpoints strictly interleave."""
    a, b = d1
    c, d = d2
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Triangulation:
    n: int
    diagonals: tuple

    def __init__(self, n, diagonals):
        n = int(n)
        if n < 4:
            raise InvalidInput("a triangulated polygon needs n >= 4")
        diags = tuple(sorted({_normalize(d, n) for d in diagonals}))
        if len(diags) != n - 3:
            raise InvalidInput(f"expected {n - 3} diagonals, got {len(diags)}")
        for d1, d2 in combinations(diags, 2):
            if crosses(d1, d2):
                raise InvalidInput(f"diagonals {d1} and {d2} cross")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "diagonals", diags)

    @cached_property
    def diagonal_set(self) -> frozenset:
        return frozenset(self.diagonals)

    @cached_property
    def triangles(self) -> tuple:
        """All triangles as sorted vertex triples, in lexicographic order."""
        n = self.n
        sides = set(self.diagonals)
        sides.update((i, i + 1) for i in range(1, n))
        sides.add((1, n))
        return tuple(
            (x, y, z)
            for x, y, z in combinations(range(1, n + 1), 3)
            if (x, y) in sides and (y, z) in sides and (x, z) in sides
        )

    def incident(self, v: int) -> bool:
        return any(v in d for d in self.diagonals)

    def to_dict(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.diagonals]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data) -> "Triangulation":
        try:
            return cls(data["n"], [tuple(d) for d in data["diagonals"]])
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed triangulation data: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "Triangulation":
        return cls.from_dict(json.loads(text))


def _triangulate(verts):
    # verts: consecutive polygon vertices; the side (verts[0], verts[-1]) is
    # closed by a triangle with apex verts[m].
    if len(verts) < 3:
        yield ()
        return
    first, last = verts[0], verts[-1]
    for m in range(1, len(verts) - 1):
        apex = verts[m]
        own = []
        if m > 1:
            own.append((first, apex))
        if m < len(verts) - 2:
            own.append((apex, last))
        for left in _triangulate(verts[: m + 1]):
            for right in _triangulate(verts[m:]):
                yield tuple(own) + left + right


def enumerate_triangulations(n: int) -> list:
    """All triangulations of the n-gon, sorted by their diagonal lists."""
    if n < 4:
        raise InvalidInput("n must be at least 4")
    found = {tuple(sorted(_normalize(d, n) for d in diags))
             for diags in _triangulate(list(range(1, n + 1)))}
    return [Triangulation(n, diags) for diags in sorted(found)]


def palm_triangulation(n: int, v: int = 2) -> Triangulation:
    """The fan of all diagonals through the apex ``v``."""
    if n < 4 or not 1 <= v <= n:
        raise InvalidInput("need n >= 4 and 1 <= v <= n")
    return Triangulation(n, [(v, wrap(v + r, n)) for r in range(2, n - 1)])


def _diagonals_of(t, n):
    if isinstance(t, Triangulation):
        return t.diagonals, t.n
    if n is None:
        raise InvalidInput("n is required with a raw diagonal set")
    return tuple(_normalize(d, n) for d in t), n


def connection_number(t, p, q, s, t2, n=None) -> int:
    """Number of diagonals joining [[p,q]] and [[s,t2]], each counted once.

    ``t`` is a Triangulation or a raw iterable of diagonals (then ``n`` is
    required).
    """
    diagonals, n = _diagonals_of(t, n)
    for lab in (p, q, s, t2):
        if not 1 <= lab <= n:
            raise InvalidInput(f"label {lab} out of range 1..{n}")
    first = CyclicInterval(p, q, n)
    second = CyclicInterval(s, t2, n)
    return sum(
        1 for a, b in diagonals
        if (a in first and b in second) or (b in first and a in second)
    )


def C(t, p, q, s, t2) -> int:
    """connection_number with labels reduced mod n (so 0 means n)."""
    n = t.n
    return connection_number(t, wrap(p, n), wrap(q, n), wrap(s, n), wrap(t2, n))


def _check_pair(t, i, j):
    if not (1 <= i < j <= t.n):
        raise InvalidInput(f"need 1 <= i < j <= n, got ({i}, {j})")


def a_degree(t: Triangulation, i: int, j: int) -> int:
    """Number of diagonals with exactly one endpoint in [[i, j-1]]."""
    _check_pair(t, i, j)
    block = range(i, j)
    return sum(1 for a, b in t.diagonals if (a in block) != (b in block))


def x_degree(t: Triangulation, i: int, j: int) -> int:
    _check_pair(t, i, j)
    if (i, j) == (1, 2):
        return 0
    if i == 1:
        return C(t, j, 1, j, 1) + C(t, 1, 1, 2, j - 1)
    if i == 2:
        return C(t, j, 1, j, 1)
    return C(t, i, 1, i, 1) + C(t, j, i - 1, j, 1)


def pairs(n: int) -> list:
    """2-subsets of 1..n in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))


def a_degree_vector(t: Triangulation) -> list:
    return [a_degree(t, i, j) for i, j in pairs(t.n)]


def x_degree_vector(t: Triangulation) -> list:
    return [x_degree(t, i, j) for i, j in pairs(t.n)]


def quadrilateral(t: Triangulation, d) -> tuple:
    """The two apexes of the triangles on either side of diagonal ``d``."""
    d = _normalize(d, t.n)
    if d not in t.diagonal_set:
        raise InvalidInput(f"{d} is not a diagonal of the triangulation")
    apexes = [next(v for v in tri if v not in d) for tri in t.triangles
              if d[0] in tri and d[1] in tri]
    assert len(apexes) == 2
    return tuple(sorted(apexes))


def flip_diagonal(t: Triangulation, d) -> Triangulation:
    """Replace ``d`` by the other diagonal of its quadrilateral."""
    d = _normalize(d, t.n)
    new = quadrilateral(t, d)
    return Triangulation(t.n, [e for e in t.diagonals if e != d] + [new])


def black_vertices(t: Triangulation) -> list:
    """Polygon vertices touching no diagonal (ear tips)."""
    return [v for v in range(1, t.n + 1) if not t.incident(v)]


def sector_apex(t: Triangulation):
    """The largest black polygon vertex other than 1 and 2, if any."""
    blacks = [v for v in black_vertices(t) if v > 2]
    return max(blacks) if blacks else None
