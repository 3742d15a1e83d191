"""JSON encoding and decoding for every data type the CLI reads or writes."""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .charts import Chart, edge_label, face_label, parse_label
from .errors import ParseError
from .flags import AffineFlag, FlagConfig
from .lattice import Lattice
from .laurent import LaurentSeries
from .matrix import Matrix
from .monodromy import AnnulusSpec
from .triangulation import Triangulation
from .tropical import Coweight
from .virtual import VirtualConfig, VirtualPoint


def encode_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def decode_rational(s) -> Fraction:
    try:
        if isinstance(s, int):
            return Fraction(s)
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


def encode_series(x: LaurentSeries) -> dict:
    return {"lo": x.lo, "coeffs": [encode_rational(c) for c in x.coeffs], "trunc": x.trunc}


def decode_series(obj) -> LaurentSeries:
    if isinstance(obj, (int, str)):
        return LaurentSeries.constant(decode_rational(obj))
    try:
        return LaurentSeries([decode_rational(c) for c in obj["coeffs"]], int(obj["lo"]), obj.get("trunc"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad series {obj!r}") from exc


def encode_matrix(mat: Matrix) -> list:
    """Column-major list of encoded series."""
    return [[encode_series(x) for x in col] for col in mat.columns()]


def decode_matrix(obj) -> Matrix:
    try:
        return Matrix.from_columns([[decode_series(x) for x in col] for col in obj])
    except TypeError as exc:
        raise ParseError("bad matrix") from exc


def encode_coweight(c: Coweight) -> dict:
    return c.to_json()


def decode_coweight(obj) -> Coweight:
    try:
        if isinstance(obj, list):
            return Coweight(tuple(obj))
        return Coweight(tuple(obj["entries"]), obj.get("kind", "SL"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad coweight {obj!r}") from exc


def encode_config(config: FlagConfig) -> dict:
    return {"m": config.m, "n": config.n, "flags": [encode_matrix(f.matrix) for f in config.flags]}


def decode_config(obj) -> FlagConfig:
    try:
        flags = tuple(AffineFlag(decode_matrix(f), obj.get("unimodular", True)) for f in obj["flags"])
        config = FlagConfig(flags)
    except (KeyError, TypeError) as exc:
        raise ParseError("bad flag configuration") from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if ("m" in obj and obj["m"] != config.m) or ("n" in obj and obj["n"] != config.n):
        raise ParseError("declared m/n disagree with the flag data")
    return config


def decode_triangulation(obj) -> Triangulation:
    try:
        return Triangulation(int(obj["n"]), frozenset(tuple(t) for t in obj["triangles"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad triangulation: {exc}") from exc


def decode_lattice(obj) -> Lattice:
    try:
        return Lattice(decode_matrix(obj["generators"]), obj.get("kind", "SL"))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad lattice: {exc}") from exc


def decode_virtual(obj) -> VirtualConfig:
    try:
        pts = tuple(VirtualPoint(decode_lattice(p["lattice"]), decode_coweight(p["shift"])) for p in obj["points"])
    except (KeyError, TypeError) as exc:
        raise ParseError("bad virtual configuration") from exc
    return VirtualConfig(pts)


def encode_value(v):
    if isinstance(v, LaurentSeries):
        return encode_series(v)
    return v


def encode_chart(chart: Chart) -> dict:
    return {
        "m": chart.m,
        "kind": chart.kind,
        "edges": {edge_label(k): encode_value(v) for k, v in sorted(chart.edges.items())},
        "faces": {face_label(k): encode_value(v) for k, v in sorted(chart.faces.items())},
    }


def decode_chart(obj, tropical: bool = True) -> Chart:
    chart = Chart(int(obj["m"]), kind=obj.get("kind", "A"))
    for section in ("edges", "faces"):
        for label, val in obj.get(section, {}).items():
            try:
                _, key = parse_label(label)
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
            v = int(val) if tropical else decode_series(val)
            (chart.edges if len(key[0]) == 2 else chart.faces)[key] = v
    return chart


def decode_annulus(obj) -> AnnulusSpec:
    try:
        poly = decode_config(obj["polygon"])
        e1, e2 = obj["identify"]
        return AnnulusSpec(poly, (tuple(e1), tuple(e2)), decode_matrix(obj["gluing"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad annulus datum: {exc}") from exc


def encode_annulus(spec: AnnulusSpec) -> dict:
    return {"polygon": encode_config(spec.polygon),
            "identify": [list(e) for e in spec.identified_edges],
            "gluing": encode_matrix(spec.gluing)}


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise ParseError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc


def example_names() -> list[str]:
    data = resources.files("laminations") / "data"
    return sorted(p.name[:-5] for p in data.iterdir() if p.name.endswith(".json"))


def load_example(name: str) -> Any:
    data = resources.files("laminations") / "data" / f"{name}.json"
    if not data.is_file():
        raise ParseError(f"unknown example {name!r}; available: {', '.join(example_names())}")
    return json.loads(data.read_text())
