"""Triangulations of the convex n-gon and diagonal flips.

Vertices are labelled ``0..n-1`` in cyclic order.  Triangles are stored
as sorted triples, edges as sorted pairs.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import NotInternal, Unsupported

MAX_ENUMERATION = 8

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def crosses(d1: Edge, d2: Edge) -> bool:
    a, b = d1
    c, d = d2
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Triangulation:
    n: int
    triangles: frozenset[Triangle]

    def __post_init__(self):
        tris = frozenset(tuple(sorted(t)) for t in self.triangles)
        object.__setattr__(self, "triangles", tris)
        self._validate()

    def _validate(self):
        n = self.n
        if n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        if len(self.triangles) != n - 2:
            raise ValueError(f"expected {n - 2} triangles, got {len(self.triangles)}")
        counts: Counter[Edge] = Counter()
        for tri in self.triangles:
            if len(set(tri)) != 3 or not all(0 <= v < n for v in tri):
                raise ValueError(f"bad triangle {tri}")
            for e in combinations(tri, 2):
                counts[_edge(*e)] += 1
        for e, c in counts.items():
            expected = 1 if self.is_boundary(e) else 2
            if c != expected:
                raise ValueError(f"edge {e} used {c} times")
        diags = [e for e in counts if not self.is_boundary(e)]
        if len(diags) != n - 3:
            raise ValueError("wrong number of diagonals")
        for d1, d2 in combinations(diags, 2):
            if crosses(d1, d2):
                raise ValueError(f"diagonals {d1} and {d2} cross")

    def is_boundary(self, e: Edge) -> bool:
        a, b = _edge(*e)
        return b - a == 1 or (a == 0 and b == self.n - 1)

    @property
    def diagonals(self) -> frozenset[Edge]:
        return frozenset(_edge(*e) for t in self.triangles for e in combinations(t, 2)
                         if not self.is_boundary(e))

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(_edge(*e) for t in self.triangles for e in combinations(t, 2))

    def sorted_triangles(self) -> list[Triangle]:
        return sorted(self.triangles)

    def triangles_on(self, e: Edge) -> list[Triangle]:
        e = _edge(*e)
        return sorted(t for t in self.triangles if e[0] in t and e[1] in t)

    def quadrilateral(self, diagonal: Edge) -> tuple[int, int, int, int]:
        """Vertices ``(a, b, c, d)`` in cyclic order around the diagonal ``(a, c)``."""
        a, c = _edge(*diagonal)
        if self.is_boundary((a, c)) or (a, c) not in self.diagonals:
            raise NotInternal(f"{(a, c)} is not an internal diagonal")
        (t1, t2) = self.triangles_on((a, c))
        apexes = [next(v for v in t if v not in (a, c)) for t in (t1, t2)]
        b = next(v for v in apexes if a < v < c)
        d = next(v for v in apexes if not a < v < c)
        return a, b, c, d

    def to_json(self) -> dict:
        return {"n": self.n, "triangles": [list(t) for t in self.sorted_triangles()]}

    def __repr__(self) -> str:
        return f"Triangulation(n={self.n}, triangles={self.sorted_triangles()})"


@dataclass(frozen=True)
class FlipMove:
    diagonal: Edge
    quadrilateral: tuple[Triangle, Triangle]

    @classmethod
    def on(cls, tri: Triangulation, diagonal: Edge) -> "FlipMove":
        a, b, c, d = tri.quadrilateral(diagonal)
        return cls(_edge(a, c), (tuple(sorted((a, b, c))), tuple(sorted((a, c, d)))))

    def to_json(self) -> dict:
        return {"diagonal": list(self.diagonal), "quadrilateral": [list(t) for t in self.quadrilateral]}


def fan_triangulation(n: int, apex: int = 0) -> Triangulation:
    others = [(apex + k) % n for k in range(1, n)]
    return Triangulation(n, frozenset(tuple(sorted((apex, u, v))) for u, v in zip(others, others[1:])))


@lru_cache(maxsize=None)
def _triangulate(vertices: tuple[int, ...]) -> tuple[frozenset, ...]:
    if len(vertices) < 3:
        return (frozenset(),)
    a, b = vertices[0], vertices[-1]
    out = []
    for k in range(1, len(vertices) - 1):
        apex = vertices[k]
        for left in _triangulate(vertices[: k + 1]):
            for right in _triangulate(vertices[k:]):
                out.append(left | right | {tuple(sorted((a, apex, b)))})
    return tuple(out)


def all_triangulations(n: int) -> list[Triangulation]:
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    if n > MAX_ENUMERATION:
        raise Unsupported(f"exhaustive enumeration is capped at n={MAX_ENUMERATION}")
    tris = [Triangulation(n, t) for t in _triangulate(tuple(range(n)))]
    return sorted(tris, key=lambda t: t.sorted_triangles())


def flip(tri: Triangulation, move: FlipMove | Edge) -> Triangulation:
    diagonal = move.diagonal if isinstance(move, FlipMove) else _edge(*move)
    a, b, c, d = tri.quadrilateral(diagonal)
    old = {tuple(sorted((a, b, c))), tuple(sorted((a, c, d)))}
    new = {tuple(sorted((a, b, d))), tuple(sorted((b, c, d)))}
    return Triangulation(tri.n, frozenset((tri.triangles - old) | new))


def _path_to_fan(tri: Triangulation) -> list[Edge]:
    """Diagonals to flip (in order) to reach the fan at vertex 0."""
    moves = []
    while True:
        cand = None
        for t in tri.sorted_triangles():
            if t[0] == 0 and not tri.is_boundary((t[1], t[2])):
                cand = (t[1], t[2])
                break
        if cand is None:
            return moves
        moves.append(cand)
        tri = flip(tri, cand)


def flip_path(tri1: Triangulation, tri2: Triangulation) -> list[Edge]:
    """A sequence of diagonals whose successive flips turn ``tri1`` into ``tri2``."""
    if tri1.n != tri2.n:
        raise ValueError("triangulations of different polygons")
    if tri1 == tri2:
        return []
    if tri1.n <= MAX_ENUMERATION:
        return _shortest_flip_path(tri1, tri2)
    forward = _path_to_fan(tri1)
    backward = []
    cur = tri2
    for d in _path_to_fan(tri2):
        a, b, c, e = cur.quadrilateral(d)
        cur = flip(cur, d)
        backward.append(_edge(b, e))
    return forward + backward[::-1]


def _shortest_flip_path(tri1: Triangulation, tri2: Triangulation) -> list[Edge]:
    """Breadth-first search in the flip graph."""
    parent: dict[Triangulation, tuple[Triangulation, Edge] | None] = {tri1: None}
    queue = deque([tri1])
    while queue:
        cur = queue.popleft()
        if cur == tri2:
            break
        for d in sorted(cur.diagonals):
            nxt = flip(cur, d)
            if nxt not in parent:
                parent[nxt] = (cur, d)
                queue.append(nxt)
    path = []
    cur = tri2
    while parent[cur] is not None:
        cur, d = parent[cur]
        path.append(d)
    return path[::-1]


def flip_graph(n: int) -> dict[Triangulation, list[Triangulation]]:
    tris = all_triangulations(n)
    return {t: [flip(t, d) for d in sorted(t.diagonals)] for t in tris}
