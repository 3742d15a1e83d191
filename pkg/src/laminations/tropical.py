"""Max-plus arithmetic and coweight bookkeeping for GL_m, SL_m and PGL_m."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, KindMismatch

KINDS = ("GL", "SL", "PGL")


def trop_add(a: int, b: int) -> int:
    return max(a, b)


def trop_mul(a: int, b: int) -> int:
    return a + b


def trop_sum(values: Iterable[int]) -> int:
    return max(values)


@dataclass(frozen=True)
class Coweight:
    """An integer m-tuple; SL entries sum to zero, PGL is stored in canonical form."""

    entries: tuple[int, ...]
    kind: str = "SL"

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if self.kind not in KINDS:
            raise ValueError(f"unknown coweight kind {self.kind!r}")
        if not entries:
            raise ValueError("empty coweight")
        if self.kind == "SL" and sum(entries) != 0:
            raise ValueError(f"SL coweight {entries} does not sum to 0")
        if self.kind == "PGL":
            last = entries[-1]
            entries = tuple(x - last for x in entries)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zero(cls, m: int, kind: str = "SL") -> "Coweight":
        return cls((0,) * m, kind)

    @property
    def m(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k: int) -> int:
        return self.entries[k]

    def _check(self, other: "Coweight"):
        if not isinstance(other, Coweight):
            raise TypeError("expected a Coweight")
        if other.kind != self.kind or other.m != self.m:
            raise KindMismatch(f"{self.kind}{self.m} vs {other.kind}{other.m}")

    def __add__(self, other: "Coweight") -> "Coweight":
        self._check(other)
        return Coweight(tuple(a + b for a, b in zip(self, other)), self.kind)

    def __sub__(self, other: "Coweight") -> "Coweight":
        self._check(other)
        return Coweight(tuple(a - b for a, b in zip(self, other)), self.kind)

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-a for a in self), self.kind)

    def __mul__(self, k: int) -> "Coweight":
        return Coweight(tuple(k * a for a in self), self.kind)

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.entries, self.entries[1:]))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def pair(self, i: int) -> int:
        return pair_fundamental(self, i)

    def with_kind(self, kind: str) -> "Coweight":
        return Coweight(self.entries, kind)

    def to_json(self) -> dict:
        return {"kind": self.kind, "entries": list(self.entries)}


class DominantCoweight(Coweight):
    """A coweight with weakly decreasing entries."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_dominant():
            raise ValueError(f"{self.entries} is not dominant")


def dominant(entries: Sequence[int], kind: str = "SL") -> DominantCoweight:
    """Sort entries decreasingly and wrap them as a dominant coweight."""
    return DominantCoweight(tuple(sorted(entries, reverse=True)), kind)


def pair_fundamental(lam: Coweight, i: int) -> int:
    """``lam . omega_i``: the partial sum of the first ``i`` entries, 1 <= i <= m-1."""
    m = len(lam)
    if not 1 <= i <= m - 1:
        raise IndexOutOfRange(f"fundamental weight index {i} outside 1..{m - 1}")
    return sum(lam.entries[:i])


def prefix(lam: Coweight, i: int) -> int:
    """Partial sum for 0 <= i <= m (the boundary cases pair with the trivial weight)."""
    if not 0 <= i <= len(lam):
        raise IndexOutOfRange(f"prefix length {i} outside 0..{len(lam)}")
    return sum(lam.entries[:i])


def neg_w0(lam: Coweight) -> Coweight:
    """``-w0 lam = (-lam_m, ..., -lam_1)``."""
    return type(lam)(tuple(-x for x in reversed(lam.entries)), lam.kind)


class Order(enum.Enum):
    GREATER = "Greater"
    LESS = "Less"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def _is_decreasing(v: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


def dominance_compare(lam: Coweight, mu: Coweight) -> Order:
    """Literal order: ``lam > mu`` iff ``lam - mu`` is dominant.

    For GL a nonzero constant difference is dominant in both directions;
    it is broken by the sign of the constant so the relation stays
    antisymmetric.
    """
    lam._check(mu)
    if lam.entries == mu.entries:
        return Order.EQUAL
    d = [a - b for a, b in zip(lam, mu)]
    up = _is_decreasing(d)
    down = _is_decreasing([-x for x in d])
    if up and down:
        return Order.GREATER if d[0] > 0 else Order.LESS
    if up:
        return Order.GREATER
    if down:
        return Order.LESS
    return Order.INCOMPARABLE


def standard_compare(lam: Coweight, mu: Coweight) -> Order:
    """Root-lattice order: ``lam >= mu`` iff all partial sums of ``lam - mu`` are >= 0
    and the totals agree."""
    lam._check(mu)
    if lam.entries == mu.entries:
        return Order.EQUAL
    d = [a - b for a, b in zip(lam, mu)]
    if sum(d) != 0:
        return Order.INCOMPARABLE
    sums = [sum(d[:i]) for i in range(1, len(d))]
    if all(s >= 0 for s in sums):
        return Order.GREATER
    if all(s <= 0 for s in sums):
        return Order.LESS
    return Order.INCOMPARABLE
