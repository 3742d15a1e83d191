"""Coordinate charts indexed by the edges and faces of a triangulation.

Keys are ``((a, b), (i, j))`` for edge functions and
``((a, b, c), (i, j, k))`` for face functions; vertices inside a key are
always in increasing order.  Values are series (classical charts) or
integers (tropical charts).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from .laurent import LaurentSeries, neg_val

EdgeKey = tuple[tuple[int, int], tuple[int, int]]
FaceKey = tuple[tuple[int, int, int], tuple[int, int, int]]


def edge_label(key: EdgeKey) -> str:
    (a, b), (i, j) = key
    return f"edge:{a}-{b}:{i}-{j}"


def face_label(key: FaceKey) -> str:
    (a, b, c), (i, j, k) = key
    return f"face:{a}-{b}-{c}:{i}-{j}-{k}"


def parse_label(label: str):
    kind, verts, idx = label.split(":")
    v = tuple(int(x) for x in verts.split("-"))
    ix = tuple(int(x) for x in idx.split("-"))
    if kind not in ("edge", "face") or len(v) != len(ix) or len(v) not in (2, 3):
        raise ValueError(f"bad chart label {label!r}")
    return kind, (v, ix)


@dataclass
class Chart:
    """Edge and face coordinates of one triangulation (``kind`` is ``"A"`` or ``"X"``)."""

    m: int
    edges: dict = field(default_factory=dict)
    faces: dict = field(default_factory=dict)
    kind: str = "A"

    def items(self) -> Iterator[tuple[tuple, Any]]:
        """Edges first, then faces, each in sorted key order."""
        for k in sorted(self.edges):
            yield k, self.edges[k]
        for k in sorted(self.faces):
            yield k, self.faces[k]

    def keys(self) -> list[tuple]:
        return [k for k, _ in self.items()]

    def values(self) -> list:
        return [v for _, v in self.items()]

    def __len__(self) -> int:
        return len(self.edges) + len(self.faces)

    def __getitem__(self, key):
        verts = key[0]
        return self.edges[key] if len(verts) == 2 else self.faces[key]

    def __contains__(self, key) -> bool:
        verts = key[0]
        return key in (self.edges if len(verts) == 2 else self.faces)

    def value(self, tri, ijk: tuple[int, int, int]):
        """``f_ijk`` on the (sorted) triangle ``tri``; zero indices resolve to edge entries."""
        a, b, c = tri
        i, j, k = ijk
        if k == 0:
            return self.edges[((a, b), (i, j))]
        if j == 0:
            return self.edges[((a, c), (i, k))]
        if i == 0:
            return self.edges[((b, c), (j, k))]
        return self.faces[((a, b, c), (i, j, k))]

    def map(self, fn: Callable[[Any], Any]) -> "Chart":
        return Chart(self.m, {k: fn(v) for k, v in self.edges.items()},
                     {k: fn(v) for k, v in self.faces.items()}, self.kind)

    def tropicalize(self) -> "Chart":
        """Entrywise ``-val``."""
        return self.map(neg_val)

    def first_difference(self, other: "Chart"):
        """First key (edges before faces) where the charts differ, or ``None``."""
        if set(self.edges) != set(other.edges) or set(self.faces) != set(other.faces):
            raise ValueError("charts are indexed by different sets")
        for k, v in self.items():
            w = other[k]
            same = v.agrees(w) if isinstance(v, LaurentSeries) else v == w
            if not same:
                return k
        return None

    def restrict(self, vertices) -> "Chart":
        vs = set(vertices)
        return Chart(self.m, {k: v for k, v in self.edges.items() if set(k[0]) <= vs},
                     {k: v for k, v in self.faces.items() if set(k[0]) <= vs}, self.kind)

    def relabel(self, mapping: dict[int, int]) -> "Chart":
        """Rename vertices; keys are re-sorted and index tuples permuted accordingly."""
        def move(key):
            verts, idx = key
            pairs = sorted(zip((mapping[v] for v in verts), idx))
            return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)
        return Chart(self.m, {move(k): v for k, v in self.edges.items()},
                     {move(k): v for k, v in self.faces.items()}, self.kind)

    def labelled(self) -> dict[str, Any]:
        out = {edge_label(k): v for k, v in sorted(self.edges.items())}
        out.update({face_label(k): v for k, v in sorted(self.faces.items())})
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chart):
            return NotImplemented
        return (self.m, self.kind, self.edges, self.faces) == (other.m, other.kind, other.edges, other.faces)


def a_index_set(m: int) -> list[tuple[int, int, int]]:
    """All ``(i, j, k)`` with ``i + j + k = m`` and ``0 <= i, j, k <= m - 1``."""
    return [(i, j, m - i - j) for i in range(m) for j in range(m)
            if 0 <= m - i - j <= m - 1]


def face_index_set(m: int) -> list[tuple[int, int, int]]:
    return [(i, j, m - i - j) for i in range(1, m) for j in range(1, m) if m - i - j >= 1]


def edge_index_set(m: int) -> list[tuple[int, int]]:
    return [(i, m - i) for i in range(1, m)]
