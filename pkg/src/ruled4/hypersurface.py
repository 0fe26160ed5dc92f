"""Hypersurfaces of Lorentzian 4-space ruled by a moving 2-plane.

A surface here is phi(x, y, z) = alpha(x) + y*beta(x) + z*gamma(x): a base
curve alpha swept by the plane spanned by two director curves.  Kinds:

    TYPE1          directors constrained to the unit de Sitter sphere
    TYPE2          directors constrained to the upper hyperbolic sheet
    UNCONSTRAINED  directors free (constructions from ternary products)

For the constrained kinds the metric's ruling diagonal is pinned to the
constraint value (+1 or -1); in lax mode that choice is kept even when the
directors violate their constraint, so the closed-form machinery always
computes the same quantities, and violations are surfaced as warnings
instead of being silently absorbed.

All curvature data flows from the frame (first and second parameter
derivatives of phi, exact via jets), the ruling normal cross4(phi_x, phi_y,
phi_z), the 3x3 first fundamental form, and the second fundamental form
whose lower 2x2 block vanishes identically because phi is affine in (y, z).
That structural zero block forces det(second form) = 0, hence zero
Gauss-Kronecker curvature everywhere: every such surface is flat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Protocol, Sequence

import numpy as np

from .errors import (DegenerateNormal, DirectorConstraintViolated,
                     SingularMetric)
from .expr import CurveSpec, DirectorReport, validate_director
from .lorentz import (CausalCharacter, ModelSpace, Vec4, characterize,
                      cross4, lorentz_dot)

__all__ = [
    "SurfaceKind", "Curve", "RuledHypersurface", "make_ruled",
    "Frame", "frame", "eval_point",
    "GaussMapData", "gauss_map",
    "MetricData", "first_form", "inverse_metric",
    "second_form", "second_form_raw",
    "minimality_residual", "laplace_beltrami", "lb_closed_orthogonal",
    "CurvatureReport", "curvature_report",
    "DEGENERATE_NORMAL_TOL", "SINGULAR_METRIC_TOL", "ORTHOGONAL_TOL",
]

DEGENERATE_NORMAL_TOL = 1e-12
SINGULAR_METRIC_TOL = 1e-12
ORTHOGONAL_TOL = 1e-9


class SurfaceKind(Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    UNCONSTRAINED = "unconstrained"


_DIRECTOR_SPACE = {
    SurfaceKind.TYPE1: ModelSpace.DE_SITTER,
    SurfaceKind.TYPE2: ModelSpace.HYPERBOLIC,
}

_RULING_DIAGONAL = {
    SurfaceKind.TYPE1: 1.0,
    SurfaceKind.TYPE2: -1.0,
}


class Curve(Protocol):
    """Anything that yields (position, velocity, acceleration) at t."""

    def evaluate(self, t: float) -> tuple[Vec4, Vec4, Vec4]: ...


@dataclass(frozen=True)
class RuledHypersurface:
    alpha: Curve
    beta: Curve
    gamma: Curve
    kind: SurfaceKind
    x_interval: tuple[float, float]
    y_interval: tuple[float, float]
    z_interval: tuple[float, float]
    warnings: tuple[str, ...] = ()
    director_reports: tuple[DirectorReport, ...] = ()


def _director_grid(interval: tuple[float, float], n: int = 33) -> list[float]:
    lo, hi = float(interval[0]), float(interval[1])
    if n < 2 or hi == lo:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + k * step for k in range(n)]


def make_ruled(alpha: Curve, beta: Curve, gamma: Curve, kind: SurfaceKind,
               *,
               strict: bool = False,
               x_interval: tuple[float, float] = (-1.0, 1.0),
               y_interval: tuple[float, float] = (-1.0, 1.0),
               z_interval: tuple[float, float] = (-1.0, 1.0),
               validation_samples: int = 33) -> RuledHypersurface:
    """Assemble a ruled hypersurface, checking director constraints.

    For the constrained kinds, both directors are sampled on the x interval
    and tested for membership in their model space (tolerance 1e-9 on the
    quadratic form, exact sign conditions).  Violations raise
    DirectorConstraintViolated in strict mode and are recorded as warnings
    otherwise.  UNCONSTRAINED surfaces skip the check.
    """
    warnings: list[str] = []
    reports: list[DirectorReport] = []
    space = _DIRECTOR_SPACE.get(kind)
    if space is not None:
        grid = _director_grid(x_interval, validation_samples)
        for name, director in (("beta", beta), ("gamma", gamma)):
            if not isinstance(director, CurveSpec):
                warnings.append(f"director {name} is not expression-backed; "
                                "membership not checked")
                continue
            report = validate_director(director, space, grid)
            reports.append(report)
            if not report.passed:
                detail = (f"director {name} fails {space.value} membership: "
                          f"max quadratic-form violation {report.max_violation:.6g} "
                          f"at t={report.worst_t:.6g}, sign_ok={report.sign_ok}")
                if strict:
                    raise DirectorConstraintViolated(detail)
                warnings.append(detail)
    return RuledHypersurface(alpha, beta, gamma, kind,
                             (float(x_interval[0]), float(x_interval[1])),
                             (float(y_interval[0]), float(y_interval[1])),
                             (float(z_interval[0]), float(z_interval[1])),
                             tuple(warnings), tuple(reports))


# ---------------------------------------------------------------------------
# Frame

@dataclass(frozen=True)
class Frame:
    """phi and its parameter derivatives at one point.

    phi is affine in y and z, so phi_yy = phi_yz = phi_zz = 0 identically;
    they are omitted.  phi_xy and phi_xz are the director velocities.
    """

    position: Vec4
    phi_x: Vec4
    phi_y: Vec4
    phi_z: Vec4
    phi_xx: Vec4
    phi_xy: Vec4
    phi_xz: Vec4


def frame(h: RuledHypersurface, x: float, y: float, z: float) -> Frame:
    a0, a1, a2 = h.alpha.evaluate(x)
    b0, b1, b2 = h.beta.evaluate(x)
    g0, g1, g2 = h.gamma.evaluate(x)
    y = float(y)
    z = float(z)
    return Frame(
        position=a0 + y * b0 + z * g0,
        phi_x=a1 + y * b1 + z * g1,
        phi_y=b0,
        phi_z=g0,
        phi_xx=a2 + y * b2 + z * g2,
        phi_xy=b1,
        phi_xz=g1,
    )


def eval_point(h: RuledHypersurface, x: float, y: float, z: float) -> Vec4:
    a0, _, _ = h.alpha.evaluate(x)
    b0, _, _ = h.beta.evaluate(x)
    g0, _, _ = h.gamma.evaluate(x)
    return a0 + float(y) * b0 + float(z) * g0


# ---------------------------------------------------------------------------
# Gauss map

@dataclass(frozen=True)
class GaussMapData:
    n_raw: Vec4
    unit: Vec4
    magnitude: float
    character: CausalCharacter


def gauss_map(h: RuledHypersurface, x: float, y: float, z: float,
              fr: Optional[Frame] = None) -> GaussMapData:
    """Unit normal from the ternary cross of the tangent frame.

    The magnitude is sqrt(|<n, n>|), so a lightlike (or vanishing) raw
    normal has no unit direction and raises DegenerateNormal.
    """
    if fr is None:
        fr = frame(h, x, y, z)
    n = cross4(fr.phi_x, fr.phi_y, fr.phi_z)
    q = lorentz_dot(n, n)
    d = math.sqrt(abs(q))
    if d <= DEGENERATE_NORMAL_TOL:
        raise DegenerateNormal(
            f"ruling normal magnitude {d!r} at (x,y,z)=({x},{y},{z})")
    unit = n * (1.0 / d)
    return GaussMapData(n, unit, d, characterize(n).character)


# ---------------------------------------------------------------------------
# First fundamental form

@dataclass(frozen=True)
class MetricData:
    """First fundamental form and its scalar ingredients.

    a = <phi_x, phi_x>, b = <phi_y, phi_x>, c = <phi_z, phi_x>,
    e = <phi_y, phi_z>.  For constrained kinds the ruling diagonal (m22,
    m33) is the constraint value; otherwise the actual director norms.
    detg is the cofactor-expansion determinant; detg_closed is the
    polynomial closed form available for the constrained kinds.
    """

    kind: SurfaceKind
    a: float
    b: float
    c: float
    e: float
    m22: float
    m33: float
    detg: float
    detg_closed: Optional[float]

    @property
    def g(self) -> np.ndarray:
        return np.array([
            [self.a, self.b, self.c],
            [self.b, self.m22, self.e],
            [self.c, self.e, self.m33],
        ])


def first_form(h: RuledHypersurface, x: float, y: float, z: float,
               fr: Optional[Frame] = None) -> MetricData:
    if fr is None:
        fr = frame(h, x, y, z)
    a = lorentz_dot(fr.phi_x, fr.phi_x)
    b = lorentz_dot(fr.phi_y, fr.phi_x)
    c = lorentz_dot(fr.phi_z, fr.phi_x)
    e = lorentz_dot(fr.phi_y, fr.phi_z)
    sigma = _RULING_DIAGONAL.get(h.kind)
    if sigma is None:
        m22 = lorentz_dot(fr.phi_y, fr.phi_y)
        m33 = lorentz_dot(fr.phi_z, fr.phi_z)
        closed = None
    else:
        m22 = m33 = sigma
        if h.kind is SurfaceKind.TYPE1:
            closed = -b * b + 2.0 * c * b * e - c * c - a * e * e + a
        else:
            closed = b * b + 2.0 * c * b * e + c * c - a * e * e + a
    detg = a * (m22 * m33 - e * e) + b * (c * e - b * m33) \
        + c * (b * e - c * m22)
    return MetricData(h.kind, a, b, c, e, m22, m33, detg, closed)


def _adjugate(md: MetricData) -> np.ndarray:
    a, b, c, e = md.a, md.b, md.c, md.e
    m22, m33 = md.m22, md.m33
    a11 = m22 * m33 - e * e
    a12 = c * e - b * m33
    a13 = b * e - c * m22
    a22 = a * m33 - c * c
    a23 = b * c - a * e
    a33 = a * m22 - b * b
    return np.array([
        [a11, a12, a13],
        [a12, a22, a23],
        [a13, a23, a33],
    ])


def inverse_metric(md: MetricData) -> np.ndarray:
    """Closed-form inverse: adjugate over determinant.

    For TYPE1 the adjugate is
        [[1-e^2, ce-b, be-c], [ce-b, a-c^2, bc-ae], [be-c, bc-ae, a-b^2]]
    and for TYPE2
        [[1-e^2, ce+b, be+c], [ce+b, -a-c^2, bc-ae], [be+c, bc-ae, -a-b^2]];
    the unconstrained case uses the general symmetric adjugate.
    """
    if abs(md.detg) <= SINGULAR_METRIC_TOL:
        raise SingularMetric(f"metric determinant {md.detg!r}")
    return _adjugate(md) / md.detg


# ---------------------------------------------------------------------------
# Second fundamental form

def second_form_raw(fr: Frame, n_raw: Vec4) -> tuple[float, float, float]:
    """Unnormalized second-form row: products with the raw normal."""
    return (lorentz_dot(fr.phi_xx, n_raw),
            lorentz_dot(fr.phi_xy, n_raw),
            lorentz_dot(fr.phi_xz, n_raw))


def second_form(h: RuledHypersurface, x: float, y: float, z: float,
                fr: Optional[Frame] = None,
                gm: Optional[GaussMapData] = None) -> np.ndarray:
    """Second fundamental form; only the first row/column can be nonzero."""
    if fr is None:
        fr = frame(h, x, y, z)
    if gm is None:
        gm = gauss_map(h, x, y, z, fr)
    h11 = lorentz_dot(fr.phi_xx, gm.unit)
    h12 = lorentz_dot(fr.phi_xy, gm.unit)
    h13 = lorentz_dot(fr.phi_xz, gm.unit)
    return np.array([
        [h11, h12, h13],
        [h12, 0.0, 0.0],
        [h13, 0.0, 0.0],
    ])


def _minimality(md: MetricData, fr: Frame, n_raw: Vec4) -> tuple[float, Optional[float]]:
    adj = _adjugate(md)
    rn11, rn12, rn13 = second_form_raw(fr, n_raw)
    residual = adj[0, 0] * rn11 + 2.0 * adj[0, 1] * rn12 + 2.0 * adj[0, 2] * rn13
    corollary = None
    if abs(md.e) <= ORTHOGONAL_TOL and md.kind in _RULING_DIAGONAL:
        tau = -_RULING_DIAGONAL[md.kind]
        corollary = rn11 + 2.0 * tau * md.b * rn12 + 2.0 * tau * md.c * rn13
    return residual, corollary


def minimality_residual(h: RuledHypersurface, x: float, y: float, z: float) -> float:
    """Zero-set of this residual is exactly the zero-set of mean curvature.

    The value is trace(adjugate(g) . second_form) scaled by the raw-normal
    magnitude: residual = 3 * H * detg * |n|.  It avoids both the metric
    inverse and the normalization, so it is finite even close to degeneracy.
    """
    fr = frame(h, x, y, z)
    n = cross4(fr.phi_x, fr.phi_y, fr.phi_z)
    md = first_form(h, x, y, z, fr)
    residual, _ = _minimality(md, fr, n)
    return residual


# ---------------------------------------------------------------------------
# Laplace-Beltrami

def _metric_scalars(h: RuledHypersurface, fr: Frame):
    """Metric coefficients and their exact (x, y, z) gradients at a point."""
    d = lorentz_dot
    a = d(fr.phi_x, fr.phi_x)
    b = d(fr.phi_y, fr.phi_x)
    c = d(fr.phi_z, fr.phi_x)
    e = d(fr.phi_y, fr.phi_z)
    da = (2.0 * d(fr.phi_x, fr.phi_xx), 2.0 * d(fr.phi_x, fr.phi_xy),
          2.0 * d(fr.phi_x, fr.phi_xz))
    db = (d(fr.phi_xy, fr.phi_x) + d(fr.phi_y, fr.phi_xx),
          d(fr.phi_y, fr.phi_xy), d(fr.phi_y, fr.phi_xz))
    dc = (d(fr.phi_xz, fr.phi_x) + d(fr.phi_z, fr.phi_xx),
          d(fr.phi_z, fr.phi_xy), d(fr.phi_z, fr.phi_xz))
    de = (d(fr.phi_xy, fr.phi_z) + d(fr.phi_y, fr.phi_xz), 0.0, 0.0)
    sigma = _RULING_DIAGONAL.get(h.kind)
    if sigma is None:
        m22 = d(fr.phi_y, fr.phi_y)
        m33 = d(fr.phi_z, fr.phi_z)
        dm22 = (2.0 * d(fr.phi_y, fr.phi_xy), 0.0, 0.0)
        dm33 = (2.0 * d(fr.phi_z, fr.phi_xz), 0.0, 0.0)
    else:
        m22 = m33 = sigma
        dm22 = dm33 = (0.0, 0.0, 0.0)
    return (a, b, c, e, m22, m33), (da, db, dc, de, dm22, dm33)


def laplace_beltrami(h: RuledHypersurface, x: float, y: float, z: float) -> Vec4:
    """Divergence-form Laplacian of the position map, component-wise.

    Evaluates (1/w) * sum_i d_i ( w * ginv_ij * T_j ) with w the square
    root of |detg| and T the tangent triple (phi_x, phi_y, phi_z).  Since
    ginv = adj/detg and detg = sign * w^2, the flux is sign * adj_ij T_j / w;
    the sign rides along as a constant because detg cannot cross zero on a
    report (SingularMetric guards it).  All inner derivatives are exact
    (jet-derived), so the only approximation is floating-point rounding.
    """
    fr = frame(h, x, y, z)
    (a, b, c, e, m22, m33), (da, db, dc, de, dm22, dm33) = _metric_scalars(h, fr)

    a11 = m22 * m33 - e * e
    a12 = c * e - b * m33
    a13 = b * e - c * m22
    a22 = a * m33 - c * c
    a23 = b * c - a * e
    a33 = a * m22 - b * b
    adj = ((a11, a12, a13), (a12, a22, a23), (a13, a23, a33))

    detg = a * a11 + b * a12 + c * a13
    if abs(detg) <= SINGULAR_METRIC_TOL:
        raise SingularMetric(f"metric determinant {detg!r}")
    sign = 1.0 if detg > 0.0 else -1.0
    w = math.sqrt(sign * detg)

    d_adj = []
    d_detg = []
    for k in range(3):
        dk_a11 = dm22[k] * m33 + m22 * dm33[k] - 2.0 * e * de[k]
        dk_a12 = dc[k] * e + c * de[k] - db[k] * m33 - b * dm33[k]
        dk_a13 = db[k] * e + b * de[k] - dc[k] * m22 - c * dm22[k]
        dk_a22 = da[k] * m33 + a * dm33[k] - 2.0 * c * dc[k]
        dk_a23 = db[k] * c + b * dc[k] - da[k] * e - a * de[k]
        dk_a33 = da[k] * m22 + a * dm22[k] - 2.0 * b * db[k]
        d_adj.append(((dk_a11, dk_a12, dk_a13),
                      (dk_a12, dk_a22, dk_a23),
                      (dk_a13, dk_a23, dk_a33)))
        d_detg.append(da[k] * a11 + a * dk_a11 + db[k] * a12 + b * dk_a12
                      + dc[k] * a13 + c * dk_a13)

    tangents = (fr.phi_x, fr.phi_y, fr.phi_z)
    zero = Vec4.zero()
    d_tangents = (
        (fr.phi_xx, fr.phi_xy, fr.phi_xz),  # d/dx
        (fr.phi_xy, zero, zero),            # d/dy
        (fr.phi_xz, zero, zero),            # d/dz
    )

    acc = Vec4.zero()
    for i in range(3):
        num = Vec4.zero()
        d_num = Vec4.zero()
        for j in range(3):
            num = num + adj[i][j] * tangents[j]
            d_num = d_num + d_adj[i][i][j] * tangents[j] \
                + adj[i][j] * d_tangents[i][j]
        dw = sign * d_detg[i] / (2.0 * w)
        acc = acc + d_num * (1.0 / w) - num * (dw / (w * w))
    return acc * (sign / w)


def lb_closed_orthogonal(h: RuledHypersurface, x: float, y: float, z: float) -> Vec4:
    """Orthogonal-director closed form of the Laplacian (constrained kinds).

    Valid when <beta, gamma> vanishes identically.  With Q = a -+ (b^2+c^2)
    (minus for TYPE1, plus for TYPE2) and P_k the partials of Q, the result
    is (1/Q^2) * sum_k [ (d_k N_k) Q - (1/2) P_k N_k ]; the signature signs
    cancel out of the prefactor.  The one-half weight on the P terms is
    forced by the quotient rule; a variant with full weight disagrees with
    the general divergence path (see crosscheck.lb_closed_full_p).
    """
    if h.kind not in _RULING_DIAGONAL:
        raise ValueError("closed form requires a constrained kind")
    fr = frame(h, x, y, z)
    (a, b, c, _e, _m, _n), (da, db, dc, _de, _dm, _dn) = _metric_scalars(h, fr)
    sigma = _RULING_DIAGONAL[h.kind]
    tau = -sigma

    q_val = a - sigma * (b * b + c * c)
    if abs(q_val) <= SINGULAR_METRIC_TOL:
        raise SingularMetric(f"orthogonal-form determinant {q_val!r}")
    p = [da[k] - sigma * (2.0 * b * db[k] + 2.0 * c * dc[k]) for k in range(3)]

    beta, gamma = fr.phi_y, fr.phi_z
    n1 = fr.phi_x + tau * (b * beta + c * gamma)
    n2 = tau * b * fr.phi_x + (sigma * a - c * c) * beta + (b * c) * gamma
    n3 = tau * c * fr.phi_x + (b * c) * beta + (sigma * a - b * b) * gamma

    d1n1 = fr.phi_xx + tau * (db[0] * beta + b * fr.phi_xy
                              + dc[0] * gamma + c * fr.phi_xz)
    d2n2 = tau * (db[1] * fr.phi_x + b * fr.phi_xy) \
        + (sigma * da[1] - 2.0 * c * dc[1]) * beta \
        + (db[1] * c + b * dc[1]) * gamma
    d3n3 = tau * (dc[2] * fr.phi_x + c * fr.phi_xz) \
        + (db[2] * c + b * dc[2]) * beta \
        + (sigma * da[2] - 2.0 * b * db[2]) * gamma

    total = (d1n1 * q_val - 0.5 * p[0] * n1) \
        + (d2n2 * q_val - 0.5 * p[1] * n2) \
        + (d3n3 * q_val - 0.5 * p[2] * n3)
    return total * (1.0 / (q_val * q_val))


# ---------------------------------------------------------------------------
# Curvature report

@dataclass(frozen=True)
class CurvatureReport:
    point: tuple[float, float, float]
    position: Vec4
    metric: MetricData
    normal: GaussMapData
    shape_operator: np.ndarray
    second: np.ndarray
    gauss_curvature: float
    mean_curvature: float
    minimality: float
    minimality_orthogonal: Optional[float]
    laplacian: Vec4
    laplacian_closed: Optional[Vec4]
    flags: tuple[str, ...]


def curvature_report(h: RuledHypersurface, x: float, y: float, z: float) -> CurvatureReport:
    """Full pointwise pipeline: frame, normal, forms, curvatures, Laplacian.

    Raises DegenerateNormal or SingularMetric where no report exists; grid
    samplers catch those and mark the vertex instead.
    """
    fr = frame(h, x, y, z)
    gm = gauss_map(h, x, y, z, fr)
    md = first_form(h, x, y, z, fr)
    ginv = inverse_metric(md)
    hmat = second_form(h, x, y, z, fr, gm)
    shape = ginv @ hmat
    # det(hmat) vanishes because rows 2 and 3 are proportional; the numeric
    # determinant is recorded rather than asserted.
    det_h = float(np.linalg.det(hmat))
    gauss = det_h / md.detg
    mean = float(np.trace(shape)) / 3.0
    residual, corollary = _minimality(md, fr, gm.n_raw)
    lb = laplace_beltrami(h, x, y, z)
    lb_closed = None
    if h.kind in _RULING_DIAGONAL and abs(md.e) <= ORTHOGONAL_TOL:
        lb_closed = lb_closed_orthogonal(h, x, y, z)
    return CurvatureReport(
        point=(float(x), float(y), float(z)),
        position=fr.position,
        metric=md,
        normal=gm,
        shape_operator=shape,
        second=hmat,
        gauss_curvature=gauss,
        mean_curvature=mean,
        minimality=residual,
        minimality_orthogonal=corollary,
        laplacian=lb,
        laplacian_closed=lb_closed,
        flags=h.warnings,
    )
