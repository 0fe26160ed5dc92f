"""Grid sampling of a surface and file export (OBJ, CSV, JSON).

The grid is the closed parameter box sampled uniformly, stored row-major
with x slowest.  Every vertex carries the curvature pipeline's scalar
fields; a vertex where the pipeline degenerates (no unit normal, singular
metric, expression domain fault) keeps its slot with NaN fields and a flag
naming the failure, so one bad point never aborts a grid.

Exports are deterministic byte for byte: fixed field order, fixed float
formatting (repr for CSV, %.17g for OBJ), newline "\\n", no timestamps.
NaN serializes as the literal "nan" in CSV and null in JSON.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateNormal, DomainError, SingularMetric
from .hypersurface import RuledHypersurface, curvature_report, eval_point
from .scene import SceneConfig

__all__ = ["VertexData", "Mesh", "sample_grid", "thread_count",
           "export_obj", "export_csv", "export_json", "mesh_document"]

_NAN = float("nan")
_NAN4 = (_NAN, _NAN, _NAN, _NAN)


@dataclass(frozen=True)
class VertexData:
    params: tuple[float, float, float]
    position: tuple[float, float, float, float]
    n_raw: tuple[float, float, float, float]
    n_unit: tuple[float, float, float, float]
    n_magnitude: float
    n_character: Optional[str]
    metric_a: float
    metric_b: float
    metric_c: float
    metric_e: float
    detg: float
    gauss_k: float
    mean_h: float
    minimality: float
    lb: tuple[float, float, float, float]
    lb_norm: float
    flags: tuple[str, ...]


@dataclass(frozen=True)
class Mesh:
    scene_name: str
    mode: str
    resolution: tuple[int, int, int]
    axes: tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...]]
    vertices: tuple[VertexData, ...]
    warnings: tuple[str, ...]


def thread_count() -> int:
    """Worker cap from RULED4_THREADS (>=1); defaults to 1."""
    raw = os.environ.get("RULED4_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def _axis(lo: float, hi: float, n: int) -> tuple[float, ...]:
    if n < 2:
        raise ValueError(f"resolution must be >= 2 per axis, got {n}")
    step = (hi - lo) / (n - 1)
    values = [lo + k * step for k in range(n - 1)]
    values.append(hi)
    return tuple(values)


def _vertex(h: RuledHypersurface, x: float, y: float, z: float) -> VertexData:
    flags: list[str] = []
    try:
        pos = eval_point(h, x, y, z).components()
    except DomainError:
        return VertexData((x, y, z), _NAN4, _NAN4, _NAN4, _NAN, None,
                          _NAN, _NAN, _NAN, _NAN, _NAN, _NAN, _NAN, _NAN,
                          _NAN4, _NAN, ("DomainError",))
    try:
        rep = curvature_report(h, x, y, z)
    except (DegenerateNormal, SingularMetric, DomainError) as exc:
        flags.append(type(exc).__name__)
        return VertexData((x, y, z), pos, _NAN4, _NAN4, _NAN, None,
                          _NAN, _NAN, _NAN, _NAN, _NAN, _NAN, _NAN, _NAN,
                          _NAN4, _NAN, tuple(flags))
    lb = rep.laplacian.components()
    return VertexData(
        params=(x, y, z),
        position=pos,
        n_raw=rep.normal.n_raw.components(),
        n_unit=rep.normal.unit.components(),
        n_magnitude=rep.normal.magnitude,
        n_character=rep.normal.character.name.lower(),
        metric_a=rep.metric.a,
        metric_b=rep.metric.b,
        metric_c=rep.metric.c,
        metric_e=rep.metric.e,
        detg=rep.metric.detg,
        gauss_k=rep.gauss_curvature,
        mean_h=rep.mean_curvature,
        minimality=rep.minimality,
        lb=lb,
        lb_norm=math.sqrt(sum(v * v for v in lb)),
        flags=tuple(flags),
    )


def sample_grid(h: RuledHypersurface, cfg: SceneConfig) -> Mesh:
    """Evaluate the pipeline over the scene's grid, row-major, x slowest.

    Parallel over vertices up to thread_count() workers; output order and
    content are independent of the worker count.
    """
    nx, ny, nz = cfg.resolution
    xs = _axis(cfg.x_interval[0], cfg.x_interval[1], nx)
    ys = _axis(cfg.y_interval[0], cfg.y_interval[1], ny)
    zs = _axis(cfg.z_interval[0], cfg.z_interval[1], nz)
    points = [(x, y, z) for x in xs for y in ys for z in zs]

    workers = thread_count()
    if workers == 1:
        vertices = [_vertex(h, *p) for p in points]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            vertices = list(pool.map(lambda p: _vertex(h, *p), points))
    return Mesh(cfg.name, cfg.mode, (nx, ny, nz), (xs, ys, zs),
                tuple(vertices), h.warnings)


# ---------------------------------------------------------------------------
# Export

def _require_nonempty(mesh: Mesh) -> None:
    if not mesh.vertices:
        raise ValueError("mesh has no vertices; nothing to export")


def export_obj(mesh: Mesh, projection: int, path: str) -> None:
    """Wavefront OBJ of the grid projected by dropping one coordinate.

    Vertex lines keep the three retained position coordinates at 17
    significant digits.  Faces are the grid quads of each fixed-z slice
    (third parameter constant), 1-based indices, row-major order.
    """
    _require_nonempty(mesh)
    if projection not in (0, 1, 2, 3):
        raise ValueError(f"projection must be 0..3, got {projection}")
    keep = [i for i in range(4) if i != projection]
    nx, ny, nz = mesh.resolution
    lines: list[str] = []
    for v in mesh.vertices:
        a, b, c = (v.position[i] for i in keep)
        lines.append(f"v {a:.17g} {b:.17g} {c:.17g}")
    for iz in range(nz):
        for ix in range(nx - 1):
            for iy in range(ny - 1):
                i00 = (ix * ny + iy) * nz + iz + 1
                i10 = ((ix + 1) * ny + iy) * nz + iz + 1
                i11 = ((ix + 1) * ny + iy + 1) * nz + iz + 1
                i01 = (ix * ny + iy + 1) * nz + iz + 1
                lines.append(f"f {i00} {i10} {i11} {i01}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


def export_csv(mesh: Mesh, path: str) -> None:
    """One row per vertex in grid order; NaN fields print as nan."""
    _require_nonempty(mesh)
    lines = ["x,y,z,c0,c1,c2,c3,K,H,lb_norm,flags"]
    for v in mesh.vertices:
        fields = [repr(f) for f in (*v.params, *v.position, v.gauss_k,
                                    v.mean_h, v.lb_norm)]
        fields.append(";".join(v.flags))
        lines.append(",".join(fields))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


def _json_float(value: float) -> Optional[float]:
    return None if math.isnan(value) else value


def _json_vec(values: tuple[float, ...]) -> list[Optional[float]]:
    return [_json_float(v) for v in values]


def _vertex_dict(v: VertexData) -> dict:
    return {
        "params": list(v.params),
        "position": _json_vec(v.position),
        "normal": {
            "raw": _json_vec(v.n_raw),
            "unit": _json_vec(v.n_unit),
            "magnitude": _json_float(v.n_magnitude),
            "character": v.n_character,
        },
        "metric": {
            "a": _json_float(v.metric_a),
            "b": _json_float(v.metric_b),
            "c": _json_float(v.metric_c),
            "e": _json_float(v.metric_e),
            "detg": _json_float(v.detg),
        },
        "K": _json_float(v.gauss_k),
        "H": _json_float(v.mean_h),
        "minimality": _json_float(v.minimality),
        "lb": _json_vec(v.lb),
        "lb_norm": _json_float(v.lb_norm),
        "flags": list(v.flags),
    }


def mesh_document(mesh: Mesh) -> dict:
    return {
        "scene": mesh.scene_name,
        "mode": mesh.mode,
        "resolution": list(mesh.resolution),
        "warnings": list(mesh.warnings),
        "vertices": [_vertex_dict(v) for v in mesh.vertices],
    }


def export_json(mesh: Mesh, path: str) -> None:
    _require_nonempty(mesh)
    doc = mesh_document(mesh)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2, allow_nan=False)
        fh.write("\n")
