"""Claim checking: grade a scene's stated properties against computation.

Every check produces a ClaimResult with a verdict:

    pass         computation agrees with the claim (or records a plain fact)
    discrepancy  the published claim contradicts the computation; both
                 internal computation paths agree, so this is a finding
                 about the claim, not an implementation fault
    fail         two internal computation paths disagree with each other;
                 the implementation, not the claim, is suspect

The process exit code reflects only `fail`: discrepancies are reported,
never fatal.  The JSON wire format is
{"claims": [{name, paper_claim, computed, verdict, details}]}.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import crosscheck
from .errors import DegenerateNormal, DomainError, SingularMetric
from .hypersurface import (ORTHOGONAL_TOL, RuledHypersurface, SurfaceKind,
                           curvature_report, eval_point, frame, first_form,
                           inverse_metric, laplace_beltrami,
                           lb_closed_orthogonal, second_form_raw)
from .lorentz import Vec4, lorentz_dot
from .mesh import Mesh, mesh_document, sample_grid
from .octo import PairCrossCurve, star_point, star_point_dual
from .scene import SceneConfig, build_hypersurface

__all__ = ["ClaimResult", "CheckReport", "check_scene", "report_document",
           "FLAT_TOL", "ZERO_TOL", "INTERNAL_REL_TOL", "LINKAGE_REL_TOL",
           "LB_CLOSED_TOL", "EXPANDED_NORMAL_TOL", "REFERENCE_TOL"]

FLAT_TOL = 1e-9
ZERO_TOL = 1e-9
EXPANDED_NORMAL_TOL = 1e-12
INTERNAL_REL_TOL = 1e-10
LINKAGE_REL_TOL = 1e-8
LB_CLOSED_TOL = 1e-8
REFERENCE_TOL = 1e-9


@dataclass(frozen=True)
class ClaimResult:
    name: str
    paper_claim: str
    computed: str
    verdict: str
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "paper_claim": self.paper_claim,
            "computed": self.computed,
            "verdict": self.verdict,
            "details": self.details,
        }


@dataclass(frozen=True)
class CheckReport:
    scene: str
    mode: str
    claims: tuple[ClaimResult, ...]
    warnings: tuple[str, ...]

    @property
    def exit_code(self) -> int:
        return 1 if any(c.verdict == "fail" for c in self.claims) else 0

    def to_dict(self) -> dict:
        return {
            "scene": self.scene,
            "mode": self.mode,
            "warnings": list(self.warnings),
            "claims": [c.to_dict() for c in self.claims],
            "exit_code": self.exit_code,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)


def _grid_points(cfg: SceneConfig) -> list[tuple[float, float, float]]:
    def axis(lo: float, hi: float, n: int) -> list[float]:
        step = (hi - lo) / (n - 1)
        return [lo + k * step for k in range(n - 1)] + [hi]
    xs = axis(*cfg.x_interval, cfg.resolution[0])
    ys = axis(*cfg.y_interval, cfg.resolution[1])
    zs = axis(*cfg.z_interval, cfg.resolution[2])
    return [(x, y, z) for x in xs for y in ys for z in zs]


def _fmt(value: float) -> str:
    return f"{value:.6e}"


_TYPED = (SurfaceKind.TYPE1, SurfaceKind.TYPE2)


class _Session:
    """One scene's worth of shared evaluation state."""

    def __init__(self, cfg: SceneConfig):
        self.cfg = cfg
        self.surface = build_hypersurface(cfg)
        self.points = _grid_points(cfg)
        self.reports = []
        self.degenerate: list[tuple[tuple[float, float, float], str]] = []
        for p in self.points:
            try:
                self.reports.append((p, curvature_report(self.surface, *p)))
            except (DegenerateNormal, SingularMetric, DomainError) as exc:
                self.degenerate.append((p, type(exc).__name__))

    @property
    def kind(self) -> SurfaceKind:
        return self.surface.kind


def _claim_flatness(s: _Session) -> ClaimResult:
    worst = 0.0
    for _, rep in s.reports:
        worst = max(worst, abs(rep.gauss_curvature))
    detail = {
        "max_abs_K": worst,
        "points_checked": len(s.reports),
        "points_degenerate": len(s.degenerate),
        "structural": "second form rows 2 and 3 vanish, so det h = 0 identically",
    }
    verdict = "pass" if worst <= FLAT_TOL else "fail"
    return ClaimResult(
        "flatness",
        "every 2-ruled hypersurface has Gauss curvature K = 0",
        f"max |K| = {_fmt(worst)} over {len(s.reports)} points",
        verdict, detail)


def _claim_minimality(s: _Session) -> ClaimResult:
    claimed = s.cfg.claims.get("minimal")
    worst_h = 0.0
    samples = []
    for (p, rep) in s.reports:
        fr = frame(s.surface, *p)
        h11_raw, _, _ = second_form_raw(fr, rep.normal.n_raw)
        worst_h = max(worst_h, abs(rep.mean_curvature))
        samples.append({
            "point": list(p),
            "H": rep.mean_curvature,
            "h11_raw": h11_raw,
            "minimality_residual": rep.minimality,
        })
    detail = {"max_abs_H": worst_h, "samples": samples}
    is_minimal = worst_h <= ZERO_TOL
    if claimed is True:
        verdict = "pass" if is_minimal else "discrepancy"
        claim_text = "the surface is minimal (H = 0 everywhere)"
    elif claimed is False:
        verdict = "pass" if not is_minimal else "discrepancy"
        claim_text = "the surface is not minimal"
    else:
        verdict = "pass"
        claim_text = "none (no minimality claim made)"
    computed = (f"max |H| = {_fmt(worst_h)} over {len(s.reports)} points; "
                + ("minimal" if is_minimal else "not minimal"))
    return ClaimResult("minimality", claim_text, computed, verdict, detail)


def _claim_lb_zero(s: _Session) -> ClaimResult:
    claimed = s.cfg.claims.get("laplace_beltrami_zero")
    worst = 0.0
    for _, rep in s.reports:
        worst = max(worst, max(abs(v) for v in rep.laplacian.components()))
    is_zero = worst <= ZERO_TOL
    if claimed is True:
        verdict = "pass" if is_zero else "discrepancy"
        claim_text = "the position map is harmonic (Laplacian = 0)"
    elif claimed is False:
        verdict = "pass" if not is_zero else "discrepancy"
        claim_text = "the position map is not harmonic"
    else:
        verdict = "pass"
        claim_text = "none (no harmonicity claim made)"
    computed = (f"max |Laplacian component| = {_fmt(worst)}; "
                + ("zero" if is_zero else "nonzero"))
    return ClaimResult("laplace_beltrami_zero", claim_text, computed, verdict,
                       {"max_abs_component": worst})


def _claim_gauss_consistency(s: _Session) -> ClaimResult:
    worst_exp = worst_orth = worst_lag = 0.0
    for (p, rep) in s.reports:
        fr = frame(s.surface, *p)
        expanded = crosscheck.normal_components_expanded(
            fr.phi_x, fr.phi_y, fr.phi_z)
        scale = max(1.0, max(abs(v) for v in rep.normal.n_raw.components()))
        worst_exp = max(worst_exp,
                        max(abs(a - b) for a, b in
                            zip(expanded.components(),
                                rep.normal.n_raw.components())) / scale)
        for tangent in (fr.phi_x, fr.phi_y, fr.phi_z):
            worst_orth = max(worst_orth,
                             abs(lorentz_dot(rep.normal.unit, tangent))
                             / max(1.0, abs(lorentz_dot(tangent, tangent))))
        gram = crosscheck.lorentz_gram((fr.phi_x, fr.phi_y, fr.phi_z))
        det_gram = float(np.linalg.det(gram))
        nn = lorentz_dot(rep.normal.n_raw, rep.normal.n_raw)
        worst_lag = max(worst_lag, abs(nn + det_gram) / max(1.0, abs(nn)))
    bad = (worst_exp > EXPANDED_NORMAL_TOL or worst_orth > INTERNAL_REL_TOL
           or worst_lag > INTERNAL_REL_TOL)
    return ClaimResult(
        "gauss_map_consistency",
        "expanded cofactor components equal the ternary-product normal, "
        "which is orthogonal to all tangents with squared magnitude "
        "-det(Gram)",
        f"max deviations: expanded {_fmt(worst_exp)}, orthogonality "
        f"{_fmt(worst_orth)}, Gram linkage {_fmt(worst_lag)}",
        "fail" if bad else "pass",
        {"expanded_vs_direct": worst_exp, "orthogonality": worst_orth,
         "gram_linkage": worst_lag})


def _claim_metric_consistency(s: _Session) -> ClaimResult:
    worst_det = worst_inv = 0.0
    for (p, rep) in s.reports:
        md = rep.metric
        if md.detg_closed is not None:
            worst_det = max(worst_det, abs(md.detg - md.detg_closed)
                            / max(1.0, abs(md.detg)))
        ginv = inverse_metric(md)
        ident = ginv @ md.g
        worst_inv = max(worst_inv, float(np.abs(ident - np.eye(3)).max()))
    bad = worst_det > INTERNAL_REL_TOL or worst_inv > INTERNAL_REL_TOL
    return ClaimResult(
        "metric_consistency",
        "closed-form determinant and adjugate inverse match the direct "
        "3x3 computations",
        f"max deviations: determinant {_fmt(worst_det)}, "
        f"inverse product {_fmt(worst_inv)}",
        "fail" if bad else "pass",
        {"det_closed_vs_direct": worst_det, "inverse_identity": worst_inv})


def _claim_minimality_linkage(s: _Session) -> ClaimResult:
    worst = 0.0
    for (p, rep) in s.reports:
        md = rep.metric
        denominator = 3.0 * md.detg * rep.normal.magnitude
        h_from_residual = rep.minimality / denominator
        scale = max(1.0, abs(rep.mean_curvature))
        worst = max(worst, abs(h_from_residual - rep.mean_curvature) / scale)
    return ClaimResult(
        "minimality_linkage",
        "the adjugate-weighted residual equals 3 H detg |n| (two "
        "independent mean-curvature paths)",
        f"max relative gap = {_fmt(worst)}",
        "fail" if worst > LINKAGE_REL_TOL else "pass",
        {"max_relative_gap": worst})


def _orthogonal_everywhere(s: _Session) -> bool:
    return all(abs(rep.metric.e) <= ORTHOGONAL_TOL for _, rep in s.reports)


def _lb_closed_gaps(s: _Session) -> Optional[tuple[float, float]]:
    """(half-weight gap, full-weight gap) vs the general path, or None."""
    if s.kind not in _TYPED or not s.reports:
        return None
    if not _orthogonal_everywhere(s):
        return None
    worst_half = worst_full = 0.0
    for (p, rep) in s.reports:
        closed = lb_closed_orthogonal(s.surface, *p)
        full = crosscheck.lb_closed_full_p(s.surface, *p)
        general = rep.laplacian
        worst_half = max(worst_half,
                         max(abs(a - b) for a, b in
                             zip(closed.components(), general.components())))
        worst_full = max(worst_full,
                         max(abs(a - b) for a, b in
                             zip(full.components(), general.components())))
    return worst_half, worst_full


def _claim_lb_closed(gaps: Optional[tuple[float, float]]) -> Optional[ClaimResult]:
    if gaps is None:
        return None
    worst_half, worst_full = gaps
    return ClaimResult(
        "lb_closed_form",
        "for orthogonal directors the Laplacian reduces to the "
        "half-weighted closed form",
        f"max gap: half-weighted {_fmt(worst_half)}, full-weighted "
        f"{_fmt(worst_full)}",
        "fail" if worst_half > LB_CLOSED_TOL else "pass",
        {"half_weight_gap": worst_half, "full_weight_gap": worst_full})


def _claim_lb_weights(gaps: Optional[tuple[float, float]]) -> Optional[ClaimResult]:
    if gaps is None:
        return None
    worst_half, worst_full = gaps
    printed_matches = worst_full <= LB_CLOSED_TOL
    verdict = "pass" if printed_matches else "discrepancy"
    return ClaimResult(
        "lb_closed_form_weights",
        "the closed form carries full (unhalved) first-derivative weights",
        f"full-weight gap {_fmt(worst_full)} vs half-weight gap "
        f"{_fmt(worst_half)}: the half-weighted form "
        + ("is indistinguishable here" if printed_matches
           else "matches the divergence path, the full-weighted form does not"),
        verdict,
        {"full_weight_gap": worst_full, "half_weight_gap": worst_half})


def _claim_director_membership(s: _Session) -> Optional[ClaimResult]:
    if s.kind not in _TYPED:
        return None
    space = "de Sitter sphere" if s.kind is SurfaceKind.TYPE1 \
        else "upper hyperbolic sheet"
    reports = s.surface.director_reports
    detail = {
        "directors": [
            {
                "target": r.target,
                "max_violation": r.max_violation,
                "worst_t": r.worst_t,
                "sign_ok": r.sign_ok,
                "passed": r.passed,
            } for r in reports
        ]
    }
    all_ok = bool(reports) and all(r.passed for r in reports)
    worst = max((r.max_violation for r in reports), default=float("nan"))
    signs = all(r.sign_ok for r in reports) if reports else False
    return ClaimResult(
        "director_membership",
        f"both director curves lie on the {space}",
        f"max quadratic-form violation {_fmt(worst)}; sign conditions "
        + ("hold" if signs else "violated"),
        "pass" if all_ok else "discrepancy",
        detail)


def _claim_construction_hypotheses(s: _Session) -> Optional[ClaimResult]:
    if s.cfg.mode not in ("octonion", "dual-octonion"):
        return None
    advisories = [w for w in s.surface.warnings]
    return ClaimResult(
        "construction_hypotheses",
        "the generating curves are unit and mutually orthogonal "
        f"(checked under the {s.cfg.dual_norm} product)",
        "hypotheses hold" if not advisories
        else f"{len(advisories)} hypothesis violations",
        "pass" if not advisories else "discrepancy",
        {"advisories": advisories})


def _claim_construction_equivalence(s: _Session) -> Optional[ClaimResult]:
    if s.cfg.mode not in ("octonion", "dual-octonion"):
        return None
    worst_vec = 0.0
    worst_scalar = 0.0
    for p in s.points:
        if s.cfg.mode == "octonion":
            sp = star_point(s.cfg.curves["u"], s.cfg.curves["v"],
                            s.cfg.curves["w"], *p, i_vec=s.cfg.i_vec)
        else:
            sp = star_point_dual(s.cfg.curves["a"], s.cfg.curves["a_star"],
                                 s.cfg.curves["b"], s.cfg.curves["b_star"],
                                 *p, i_vec=s.cfg.i_vec)
        direct = eval_point(s.surface, *p)
        worst_vec = max(worst_vec,
                        max(abs(a - b) for a, b in
                            zip(sp.vector.components(), direct.components())))
        worst_scalar = max(worst_scalar, abs(sp.scalar))
    return ClaimResult(
        "construction_equivalence",
        "the star-product path and the direct base-plus-ruling path give "
        "the same points",
        f"max vector gap {_fmt(worst_vec)}; max scalar defect "
        f"{_fmt(worst_scalar)} (zero only under orthogonality)",
        "fail" if worst_vec > INTERNAL_REL_TOL else "pass",
        {"vector_gap": worst_vec, "scalar_defect": worst_scalar})


_REFERENCE_ROLES = {
    "alpha": "alpha", "beta": "beta", "gamma": "gamma",
    "s_director": "beta", "r_director": "gamma",
}


def _claim_reference_curves(s: _Session) -> Optional[ClaimResult]:
    if not s.cfg.reference:
        return None
    xs = sorted({p[0] for p in s.points})
    curves = {"alpha": s.surface.alpha, "beta": s.surface.beta,
              "gamma": s.surface.gamma}
    per_curve = {}
    worst = 0.0
    for key, ref in s.cfg.reference.items():
        role = _REFERENCE_ROLES.get(key)
        if role is None:
            continue
        target = curves[role]
        dev = [0.0, 0.0, 0.0, 0.0]
        for t in xs:
            got, _, _ = target.evaluate(t)
            want, _, _ = ref.evaluate(t)
            for i, (a, b) in enumerate(zip(got.components(),
                                           want.components())):
                dev[i] = max(dev[i], abs(a - b))
        per_curve[key] = dev
        worst = max(worst, max(dev))
    matches = worst <= REFERENCE_TOL
    return ClaimResult(
        "reference_curves",
        "the published closed-form components equal the constructed curves",
        f"max component deviation {_fmt(worst)} "
        + ("(all components match)" if matches
           else "(at least one published component deviates)"),
        "pass" if matches else "discrepancy",
        {"per_curve_component_deviation": per_curve,
         "samples": len(xs)})


def _claim_alpha_probe(s: _Session) -> Optional[ClaimResult]:
    if s.cfg.mode != "octonion" or "alpha" not in s.cfg.reference:
        return None
    xs = sorted({p[0] for p in s.points})
    ref = s.cfg.reference["alpha"]
    candidates = {}
    matched = []
    for slot in range(4):
        for sign, label in ((1.0, f"+e{slot + 1}"), (-1.0, f"-e{slot + 1}")):
            cand = PairCrossCurve(
                ((s.cfg.curves["u"], s.cfg.curves["v"]),
                 (s.cfg.curves["u"], s.cfg.curves["w"])),
                Vec4.basis(slot) * sign)
            worst = 0.0
            for t in xs:
                got, _, _ = cand.evaluate(t)
                want, _, _ = ref.evaluate(t)
                worst = max(worst, max(abs(a - b) for a, b in
                                       zip(got.components(),
                                           want.components())))
            candidates[label] = worst
            if worst <= REFERENCE_TOL:
                matched.append(label)
    return ClaimResult(
        "alpha_probe",
        "the published base curve arises from the ternary-product "
        "construction for some reference axis",
        f"matched candidates: {matched if matched else 'none'}",
        "pass" if matched else "discrepancy",
        {"max_deviation_per_candidate": candidates, "matched": matched})


def check_scene(cfg: SceneConfig) -> CheckReport:
    """Run every applicable claim check for a scene."""
    session = _Session(cfg)
    claims: list[ClaimResult] = [
        _claim_flatness(session),
        _claim_minimality(session),
        _claim_lb_zero(session),
        _claim_gauss_consistency(session),
        _claim_metric_consistency(session),
        _claim_minimality_linkage(session),
    ]
    gaps = _lb_closed_gaps(session)
    for maybe in (_claim_lb_closed(gaps),
                  _claim_lb_weights(gaps),
                  _claim_director_membership(session),
                  _claim_construction_hypotheses(session),
                  _claim_construction_equivalence(session),
                  _claim_reference_curves(session),
                  _claim_alpha_probe(session)):
        if maybe is not None:
            claims.append(maybe)
    return CheckReport(cfg.name, cfg.mode, tuple(claims),
                       session.surface.warnings)


def report_document(cfg: SceneConfig) -> dict:
    """Full JSON report: claims plus the per-vertex curvature table."""
    report = check_scene(cfg)
    surface = build_hypersurface(cfg)
    mesh = sample_grid(surface, cfg)
    doc = report.to_dict()
    doc["mesh"] = mesh_document(mesh)
    return doc
