"""Scene files: JSON descriptions of a surface to build, sample, and check.

A scene names its construction mode, the defining curve expressions, the
parameter box, and options.  Modes:

    type1 / type2    direct curves alpha, beta, gamma
    octonion         curves u, v, w fed to the ternary-product construction
    dual-octonion    dual curve pairs a, a_star, b, b_star

Intervals accept either x/y/z or the curve-flavored aliases t/s/r.  An
optional "claims" block states which global properties the scene is
expected to satisfy (flat / minimal / laplace_beltrami_zero); check.py
grades those claims.  An optional "reference" block carries published
closed-form component expressions to compare the construction against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Mapping, Optional

import jsonschema

from .errors import ExprSyntaxError, SceneSchemaError
from .expr import CurveSpec
from .hypersurface import RuledHypersurface, SurfaceKind, make_ruled
from .lorentz import Vec4
from .octo import construct_from_dual_curves, construct_from_octonions

__all__ = ["SceneConfig", "load_scene", "scene_from_dict",
           "build_hypersurface", "SCENE_SCHEMA"]

_CURVE_KEYS = {
    "type1": ("alpha", "beta", "gamma"),
    "type2": ("alpha", "beta", "gamma"),
    "octonion": ("u", "v", "w"),
    "dual-octonion": ("a", "a_star", "b", "b_star"),
}

_AXIS_ALIASES = (("x", "t"), ("y", "s"), ("z", "r"))

_EXPR_QUAD = {
    "type": "array",
    "items": {"type": "string"},
    "minItems": 4,
    "maxItems": 4,
}

_INTERVAL = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}

SCENE_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "mode": {"enum": sorted(_CURVE_KEYS)},
        "curves": {
            "type": "object",
            "additionalProperties": _EXPR_QUAD,
        },
        "intervals": {
            "type": "object",
            "properties": {axis: _INTERVAL for pair in _AXIS_ALIASES
                           for axis in pair},
            "additionalProperties": False,
        },
        "resolution": {
            "type": "array",
            "items": {"type": "integer", "minimum": 2},
            "minItems": 3,
            "maxItems": 3,
        },
        "strict": {"type": "boolean"},
        "dual_norm": {"enum": ["lorentz", "euclid"]},
        "i_vector": {
            "type": "array",
            "items": {"type": "number"},
            "minItems": 4,
            "maxItems": 4,
        },
        "projection_axis": {"type": "integer", "minimum": 0, "maximum": 3},
        "claims": {
            "type": "object",
            "properties": {
                "flat": {"type": "boolean"},
                "minimal": {"type": "boolean"},
                "laplace_beltrami_zero": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "reference": {
            "type": "object",
            "additionalProperties": _EXPR_QUAD,
        },
    },
    "required": ["name", "mode", "curves"],
    "additionalProperties": False,
}


@dataclass(frozen=True)
class SceneConfig:
    name: str
    mode: str
    curves: Mapping[str, CurveSpec]
    x_interval: tuple[float, float] = (-1.0, 1.0)
    y_interval: tuple[float, float] = (-1.0, 1.0)
    z_interval: tuple[float, float] = (-1.0, 1.0)
    resolution: tuple[int, int, int] = (9, 5, 5)
    strict: bool = False
    dual_norm: str = "lorentz"
    i_vec: Vec4 = Vec4(0.0, 0.0, 0.0, 1.0)
    projection_axis: int = 0
    claims: Mapping[str, bool] = field(default_factory=dict)
    reference: Mapping[str, CurveSpec] = field(default_factory=dict)
    source_path: Optional[str] = None

    def with_overrides(self, *, strict: Optional[bool] = None,
                       dual_norm: Optional[str] = None,
                       i_vec: Optional[Vec4] = None,
                       projection_axis: Optional[int] = None) -> "SceneConfig":
        cfg = self
        if strict is not None:
            cfg = replace(cfg, strict=strict)
        if dual_norm is not None:
            cfg = replace(cfg, dual_norm=dual_norm)
        if i_vec is not None:
            cfg = replace(cfg, i_vec=i_vec)
        if projection_axis is not None:
            cfg = replace(cfg, projection_axis=projection_axis)
        return cfg


def _schema_error(err: jsonschema.ValidationError) -> SceneSchemaError:
    pointer = "/" + "/".join(str(part) for part in err.absolute_path)
    return SceneSchemaError(err.message, pointer)


def _parse_curve(key: str, exprs: list[str]) -> CurveSpec:
    try:
        return CurveSpec.from_strings(exprs)
    except ExprSyntaxError as exc:
        raise ExprSyntaxError(f"curve {key}: {exc.bare_message}",
                              exc.offset) from exc


def _interval(raw: Mapping, canonical: str, alias: str,
              default: tuple[float, float]) -> tuple[float, float]:
    present = [axis for axis in (canonical, alias) if axis in raw]
    if len(present) == 2:
        raise SceneSchemaError(
            f"intervals give both {canonical} and its alias {alias}",
            "/intervals")
    if not present:
        return default
    lo, hi = raw[present[0]]
    if not hi > lo:
        raise SceneSchemaError(f"interval {present[0]} must have lo < hi",
                               f"/intervals/{present[0]}")
    return (float(lo), float(hi))


def scene_from_dict(raw: dict, source_path: Optional[str] = None) -> SceneConfig:
    try:
        jsonschema.validate(raw, SCENE_SCHEMA)
    except jsonschema.ValidationError as err:
        raise _schema_error(err) from err

    mode = raw["mode"]
    needed = _CURVE_KEYS[mode]
    given = set(raw["curves"])
    missing = [k for k in needed if k not in given]
    extra = sorted(given - set(needed))
    if missing or extra:
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unexpected {extra}")
        raise SceneSchemaError(
            f"mode {mode} requires curves {list(needed)}: {', '.join(detail)}",
            "/curves")

    curves = {key: _parse_curve(key, raw["curves"][key]) for key in needed}
    reference = {key: _parse_curve(f"reference.{key}", exprs)
                 for key, exprs in sorted(raw.get("reference", {}).items())}

    intervals = raw.get("intervals", {})
    x_iv = _interval(intervals, "x", "t", (-1.0, 1.0))
    y_iv = _interval(intervals, "y", "s", (-1.0, 1.0))
    z_iv = _interval(intervals, "z", "r", (-1.0, 1.0))

    resolution = tuple(int(n) for n in raw.get("resolution", (9, 5, 5)))
    i_raw = raw.get("i_vector", (0.0, 0.0, 0.0, 1.0))

    return SceneConfig(
        name=raw["name"],
        mode=mode,
        curves=curves,
        x_interval=x_iv,
        y_interval=y_iv,
        z_interval=z_iv,
        resolution=resolution,  # type: ignore[arg-type]
        strict=bool(raw.get("strict", False)),
        dual_norm=raw.get("dual_norm", "lorentz"),
        i_vec=Vec4(*i_raw),
        projection_axis=int(raw.get("projection_axis", 0)),
        claims=dict(raw.get("claims", {})),
        reference=reference,
        source_path=source_path,
    )


def load_scene(path: str) -> SceneConfig:
    """Read, validate, and parse a scene file.

    Raises OSError if the file cannot be read, SceneSchemaError (with a
    JSON pointer) on shape violations, and ExprSyntaxError (with character
    offset) if a curve expression does not parse.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SceneSchemaError(f"not valid JSON: {exc}", "/") from exc
    if not isinstance(raw, dict):
        raise SceneSchemaError("scene document must be a JSON object", "/")
    return scene_from_dict(raw, source_path=path)


def build_hypersurface(cfg: SceneConfig) -> RuledHypersurface:
    """Construct the surface a scene describes."""
    box = dict(x_interval=cfg.x_interval, y_interval=cfg.y_interval,
               z_interval=cfg.z_interval)
    if cfg.mode in ("type1", "type2"):
        kind = SurfaceKind.TYPE1 if cfg.mode == "type1" else SurfaceKind.TYPE2
        return make_ruled(cfg.curves["alpha"], cfg.curves["beta"],
                          cfg.curves["gamma"], kind, strict=cfg.strict, **box)
    if cfg.mode == "octonion":
        return construct_from_octonions(
            cfg.curves["u"], cfg.curves["v"], cfg.curves["w"],
            i_vec=cfg.i_vec, dual_norm=cfg.dual_norm, **box)
    return construct_from_dual_curves(
        cfg.curves["a"], cfg.curves["a_star"],
        cfg.curves["b"], cfg.curves["b_star"],
        i_vec=cfg.i_vec, dual_norm=cfg.dual_norm, **box)
