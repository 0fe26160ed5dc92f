"""Building ruled hypersurfaces from ternary products of vector curves.

Given three curves u, v, w of 4-vectors and a fixed unit vector i_vec, the
base curve is alpha = u x v + u x w (each term the ternary product with
i_vec in the last slot) and the ruling directions are w and v.  The same
point arises as the vector part of the star product

    u * (v + w) + s*w + r*v

in the scalar-plus-vector algebra (octonion.particular_product), whose
scalar part -<u, v> - <u, w> measures how far u is from being orthogonal
to the ruling plane.  The vector parts agree identically; the scalar
defect is what orthogonality buys.  A second constructor consumes two
dual-number curves (a + eps a*, b + eps b*), crossing each curve with its
own dual part instead.

Constructed surfaces are UNCONSTRAINED: their directors live on no fixed
model space, so the metric uses the actual director products.  Unit and
orthogonality expectations are advisory; violations become warnings on the
returned surface, never errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NonUnitI
from .hypersurface import Curve, RuledHypersurface, SurfaceKind, make_ruled
from .lorentz import Vec4, cross4, euclid_dot, lorentz_dot
from .octonion import DEFAULT_I, UNIT_I_TOL, ParticularOctonion, particular_product

__all__ = [
    "PairCrossCurve", "construct_from_octonions", "construct_from_dual_curves",
    "star_point", "star_point_dual", "ADVISORY_TOL",
]

ADVISORY_TOL = 1e-9


@dataclass(frozen=True)
class PairCrossCurve:
    """Curve t -> sum over pairs of cross4(left(t), right(t), i_vec).

    Derivatives come from the product rule applied to each bilinear term,
    so they are exact whenever the factor curves provide exact jets.
    """

    pairs: tuple[tuple[Curve, Curve], ...]
    i_vec: Vec4 = DEFAULT_I

    def evaluate(self, t: float) -> tuple[Vec4, Vec4, Vec4]:
        pos = Vec4.zero()
        vel = Vec4.zero()
        acc = Vec4.zero()
        for left, right in self.pairs:
            l0, l1, l2 = left.evaluate(t)
            r0, r1, r2 = right.evaluate(t)
            pos = pos + cross4(l0, r0, self.i_vec)
            vel = vel + cross4(l1, r0, self.i_vec) + cross4(l0, r1, self.i_vec)
            acc = acc + cross4(l2, r0, self.i_vec) \
                + 2.0 * cross4(l1, r1, self.i_vec) \
                + cross4(l0, r2, self.i_vec)
        return pos, vel, acc


def _require_unit_i(i_vec: Vec4) -> None:
    if abs(abs(lorentz_dot(i_vec, i_vec)) - 1.0) > UNIT_I_TOL:
        raise NonUnitI(f"reference vector {i_vec} is not unit")


def _grid(interval: tuple[float, float], n: int = 33) -> list[float]:
    lo, hi = float(interval[0]), float(interval[1])
    if hi == lo:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + k * step for k in range(n)]


def _advisory_checks(named_curves: list[tuple[str, Curve]],
                     ortho_pairs: list[tuple[str, Curve, str, Curve]],
                     grid: list[float],
                     dual_norm: str) -> list[str]:
    dot = lorentz_dot if dual_norm == "lorentz" else euclid_dot
    warnings: list[str] = []
    for name, curve in named_curves:
        worst = 0.0
        for t in grid:
            pos, _, _ = curve.evaluate(t)
            worst = max(worst, abs(abs(dot(pos, pos)) - 1.0))
        if worst > ADVISORY_TOL:
            warnings.append(f"curve {name} is not unit under the {dual_norm} "
                            f"product: max deviation {worst:.6g}")
    for name_a, ca, name_b, cb in ortho_pairs:
        worst = 0.0
        for t in grid:
            pa, _, _ = ca.evaluate(t)
            pb, _, _ = cb.evaluate(t)
            worst = max(worst, abs(dot(pa, pb)))
        if worst > ADVISORY_TOL:
            warnings.append(f"curves {name_a} and {name_b} are not orthogonal "
                            f"under the {dual_norm} product: max product "
                            f"{worst:.6g}")
    return warnings


def _degenerate_ruling(v: Curve, w: Curve, grid: list[float]) -> Optional[str]:
    worst_minus = 0.0
    worst_plus = 0.0
    for t in grid:
        pv, _, _ = v.evaluate(t)
        pw, _, _ = w.evaluate(t)
        worst_minus = max(worst_minus,
                          max(abs(c) for c in (pv - pw).components()))
        worst_plus = max(worst_plus,
                         max(abs(c) for c in (pv + pw).components()))
    aligned = min(worst_minus, worst_plus)
    if aligned <= ADVISORY_TOL:
        return (f"ruling directions coincide up to sign "
                f"(max component gap {aligned:.6g}); the ruled plane "
                "degenerates to a line")
    return None


def construct_from_octonions(u: Curve, v: Curve, w: Curve,
                             *,
                             i_vec: Vec4 = DEFAULT_I,
                             dual_norm: str = "lorentz",
                             x_interval: tuple[float, float] = (-1.0, 1.0),
                             y_interval: tuple[float, float] = (-1.0, 1.0),
                             z_interval: tuple[float, float] = (-1.0, 1.0),
                             ) -> RuledHypersurface:
    """Surface alpha(t) + y*w(t) + z*v(t) with alpha = u x v + u x w."""
    _require_unit_i(i_vec)
    grid = _grid(x_interval)
    alpha = PairCrossCurve(((u, v), (u, w)), i_vec)
    base = make_ruled(alpha, w, v, SurfaceKind.UNCONSTRAINED,
                      x_interval=x_interval, y_interval=y_interval,
                      z_interval=z_interval)
    warnings = list(base.warnings)
    warnings += _advisory_checks(
        [("u", u), ("v", v), ("w", w)],
        [("u", u, "v", v), ("u", u, "w", w)],
        grid, dual_norm)
    degenerate = _degenerate_ruling(v, w, grid)
    if degenerate:
        warnings.append(degenerate)
    return RuledHypersurface(base.alpha, base.beta, base.gamma, base.kind,
                             base.x_interval, base.y_interval, base.z_interval,
                             tuple(warnings), base.director_reports)


def construct_from_dual_curves(a: Curve, a_star: Curve,
                               b: Curve, b_star: Curve,
                               *,
                               i_vec: Vec4 = DEFAULT_I,
                               dual_norm: str = "lorentz",
                               x_interval: tuple[float, float] = (-1.0, 1.0),
                               y_interval: tuple[float, float] = (-1.0, 1.0),
                               z_interval: tuple[float, float] = (-1.0, 1.0),
                               ) -> RuledHypersurface:
    """Surface from two dual-number curves a + eps a*, b + eps b*.

    The base curve is a x a* + b x b* and the ruling directions are the
    real parts a and b.  Advisory checks ask each dual curve to be a dual
    unit vector under the chosen product: real norm 1 and real-dual
    product 0.
    """
    _require_unit_i(i_vec)
    grid = _grid(x_interval)
    alpha = PairCrossCurve(((a, a_star), (b, b_star)), i_vec)
    base = make_ruled(alpha, a, b, SurfaceKind.UNCONSTRAINED,
                      x_interval=x_interval, y_interval=y_interval,
                      z_interval=z_interval)
    dot = lorentz_dot if dual_norm == "lorentz" else euclid_dot
    warnings = list(base.warnings)
    warnings += _advisory_checks(
        [("a", a), ("b", b)], [], grid, dual_norm)
    for name, re_curve, eps_curve in (("a", a, a_star), ("b", b, b_star)):
        worst = 0.0
        for t in grid:
            pr, _, _ = re_curve.evaluate(t)
            pe, _, _ = eps_curve.evaluate(t)
            worst = max(worst, abs(2.0 * dot(pr, pe)))
        if worst > ADVISORY_TOL:
            warnings.append(f"dual curve {name} leaves the dual unit sphere: "
                            f"max dual-part norm deviation {worst:.6g}")
    degenerate = _degenerate_ruling(a, b, grid)
    if degenerate:
        warnings.append(degenerate)
    return RuledHypersurface(base.alpha, base.beta, base.gamma, base.kind,
                             base.x_interval, base.y_interval, base.z_interval,
                             tuple(warnings), base.director_reports)


def star_point(u: Curve, v: Curve, w: Curve, t: float, y: float, z: float,
               *, i_vec: Vec4 = DEFAULT_I) -> ParticularOctonion:
    """The same surface point as a sum of two star products.

    Computes (y + u(t)) * (0 + w(t)) + (z + u(t)) * (0 + v(t)) in the
    scalar-plus-vector algebra.  Its vector part equals eval_point on the
    constructed surface identically; its scalar part is
    -(<u, w> + <u, v>), zero precisely when u is Lorentz-orthogonal to
    both ruling directions.
    """
    pu, _, _ = u.evaluate(t)
    pv, _, _ = v.evaluate(t)
    pw, _, _ = w.evaluate(t)
    left = particular_product(ParticularOctonion(float(y), pu),
                              ParticularOctonion.pure(pw), i_vec=i_vec)
    right = particular_product(ParticularOctonion(float(z), pu),
                               ParticularOctonion.pure(pv), i_vec=i_vec)
    return left + right


def star_point_dual(a: Curve, a_star: Curve, b: Curve, b_star: Curve,
                    t: float, y: float, z: float,
                    *, i_vec: Vec4 = DEFAULT_I) -> ParticularOctonion:
    """Dual-curve surface point as a sum of two star products.

    Computes a(t) * (y + a*(t)) + b(t) * (z + b*(t)).  The vector part
    equals eval_point on the dual construction identically; the scalar
    part -(<a, a*> + <b, b*>) vanishes exactly on the dual unit sphere.
    """
    pa, _, _ = a.evaluate(t)
    pas, _, _ = a_star.evaluate(t)
    pb, _, _ = b.evaluate(t)
    pbs, _, _ = b_star.evaluate(t)
    left = particular_product(ParticularOctonion.pure(pa),
                              ParticularOctonion(float(y), pas), i_vec=i_vec)
    right = particular_product(ParticularOctonion.pure(pb),
                               ParticularOctonion(float(z), pbs), i_vec=i_vec)
    return left + right
