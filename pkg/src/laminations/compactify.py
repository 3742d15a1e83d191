"""Radial log-compactification: positive coordinates at ``t = exp(-s)`` as ``s`` grows.

This is the only numerical (non-exact) part of the package; it uses
mpmath at a fixed high working precision.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .errors import NonConvergent
from .laurent import LaurentSeries

WORKING_BITS = 256
LS = LaurentSeries


@dataclass(frozen=True)
class PathPoint:
    coordinates: tuple[LaurentSeries, ...]
    chart_labels: tuple[str, ...] = ()

    def __post_init__(self):
        coords = tuple(LS.coerce(c) for c in self.coordinates)
        object.__setattr__(self, "coordinates", coords)
        if not self.chart_labels:
            object.__setattr__(self, "chart_labels", tuple(f"x{i}" for i in range(len(coords))))
        if len(self.chart_labels) != len(coords):
            raise ValueError("one label per coordinate")
        for c in coords:
            if not c.is_positive():
                raise ValueError(f"coordinate {c} is not positive")

    def tropical(self) -> list[int]:
        return [-c.valuation() for c in self.coordinates]


@dataclass
class DirectionReport:
    s_values: list[float]
    normalized_log_coords: list[list[float]]
    tropical_direction: list[float] | None
    max_deviation: float | None
    euclidean_deviations: list[float] = field(default_factory=list)
    labels: tuple[str, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.tropical_direction is None

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "s_values": self.s_values,
            "normalized_log_coords": self.normalized_log_coords,
            "tropical_direction": self.tropical_direction,
            "max_deviation": self.max_deviation,
            "euclidean_deviations": self.euclidean_deviations,
        }


def _normalize(v):
    norm = mpmath.sqrt(mpmath.fsum(x * x for x in v))
    if norm == 0:
        return None
    return [x / norm for x in v]


def log_direction(path: PathPoint, s) -> list:
    """Unit vector of ``log x_i(exp(-s))`` computed at the working precision."""
    with mpmath.workprec(WORKING_BITS):
        t = mpmath.exp(-mpmath.mpf(s))
        logs = []
        for c in path.coordinates:
            v = c.evaluate(t)
            if not mpmath.isfinite(v) or v <= 0:
                raise NonConvergent(f"coordinate {c} evaluates to {v} at s={s}")
            logs.append(mpmath.log(v))
        out = _normalize(logs)
        if out is None:
            raise NonConvergent(f"log vector vanishes at s={s}")
        return out


def run_compactify(path: PathPoint, s_max: float = 60.0, samples: int = 12) -> DirectionReport:
    """Sample ``s`` on ``(0, s_max]`` and compare the log direction with the tropical one.

    ``max_deviation`` is the angle (radians) between the last sample and
    the tropical direction; ``euclidean_deviations`` gives the chordal
    distance at every sample.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    s_values = [s_max * (k + 1) / samples for k in range(samples)]
    trop = _normalize([mpmath.mpf(x) for x in path.tropical()])
    rows, eucl = [], []
    with mpmath.workprec(WORKING_BITS):
        for s in s_values:
            d = log_direction(path, s)
            rows.append([float(x) for x in d])
            if trop is not None:
                eucl.append(float(mpmath.sqrt(mpmath.fsum((a - b) ** 2 for a, b in zip(d, trop)))))
        if trop is None:
            return DirectionReport(s_values, rows, None, None, [], path.chart_labels)
        last = log_direction(path, s_values[-1])
        cos = mpmath.fsum(a * b for a, b in zip(last, trop))
        angle = float(mpmath.acos(max(-1, min(1, cos))))
    return DirectionReport(s_values, rows, [float(x) for x in trop], angle, eucl, path.chart_labels)


def deviation_at(path: PathPoint, s) -> float:
    """Euclidean distance between the normalized log vector at ``s`` and the tropical direction."""
    trop = _normalize([mpmath.mpf(x) for x in path.tropical()])
    if trop is None:
        raise ValueError("zero lamination has no direction")
    with mpmath.workprec(WORKING_BITS):
        d = log_direction(path, s)
        return float(mpmath.sqrt(mpmath.fsum((a - b) ** 2 for a, b in zip(d, trop))))


def random_path(rng: random.Random, dim: int | None = None, bound: int = 5) -> PathPoint:
    """``c_i t^(-a_i) (1 + c'_i t)`` with ``c_i`` in [2/3, 3/2] and a nonzero integer vector ``a``."""
    dim = dim or rng.randint(2, 4)
    while True:
        a = [rng.randint(-bound, bound) for _ in range(dim)]
        if any(a):
            break
    coords = []
    for ai in a:
        c = Fraction(rng.randint(20, 45), 30)
        c2 = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        coords.append(LS.monomial(c, -ai) * LS([1, c2]))
    return PathPoint(tuple(coords))


def path_from_tropical(values: Sequence[int], coeffs: Sequence | None = None) -> PathPoint:
    coeffs = coeffs or [1] * len(values)
    return PathPoint(tuple(LS.monomial(c, -a) for c, a in zip(coeffs, values)))
