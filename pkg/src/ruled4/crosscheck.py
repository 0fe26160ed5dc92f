"""Independent re-derivations used to cross-examine the main pipeline.

Everything here recomputes a quantity the core modules already produce, by
a deliberately different route: expanded per-component cofactor formulas
for the ruling normal, Gram-matrix identities for the ternary product, and
an intentionally wrong variant of the orthogonal Laplacian closed form
kept around as a probe.  check.py turns disagreements into report claims.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .hypersurface import (RuledHypersurface, SurfaceKind, _metric_scalars,
                           _RULING_DIAGONAL, frame)
from .lorentz import Vec4, cross4, lorentz_dot

__all__ = [
    "normal_components_expanded", "NormalComparison", "compare_normal_formulas",
    "lorentz_gram", "lagrange_defect", "contraction_defect",
    "lb_closed_full_p",
]


def normal_components_expanded(x_vec: Vec4, beta: Vec4, gamma: Vec4) -> Vec4:
    """Ruling normal via expanded 2x2-cofactor sums, component by component.

    Independent of the minor-expansion route in lorentz.cross4; uses the
    antisymmetrized products E_ij - E_ji with E_ij = gamma_i * x_j, weighted
    by the components of beta.  Must agree with cross4(x_vec, beta, gamma)
    to rounding.
    """
    b = (None,) + beta.components()
    g = (None,) + gamma.components()
    xs = (None,) + x_vec.components()

    def d(i: int, j: int) -> float:
        return g[i] * xs[j] - g[j] * xs[i]

    n1 = b[2] * d(4, 3) + b[3] * d(2, 4) + b[4] * d(3, 2)
    n2 = b[1] * d(4, 3) + b[3] * d(1, 4) + b[4] * d(3, 1)
    n3 = b[1] * d(2, 4) + b[2] * d(4, 1) + b[4] * d(1, 2)
    n4 = b[1] * d(3, 2) + b[2] * d(1, 3) + b[3] * d(2, 1)
    return Vec4(n1, n2, n3, n4)


@dataclass(frozen=True)
class NormalComparison:
    point: tuple[float, float, float]
    expanded: tuple[float, float, float, float]
    direct: tuple[float, float, float, float]
    component_deviation: tuple[float, float, float, float]
    max_deviation: float
    scale: float


def compare_normal_formulas(h: RuledHypersurface,
                            points: Iterable[tuple[float, float, float]]
                            ) -> list[NormalComparison]:
    """Expanded-vs-minor-expansion normal at each sample point."""
    out: list[NormalComparison] = []
    for (x, y, z) in points:
        fr = frame(h, x, y, z)
        direct = cross4(fr.phi_x, fr.phi_y, fr.phi_z)
        expanded = normal_components_expanded(fr.phi_x, fr.phi_y, fr.phi_z)
        dev = tuple(abs(p - q) for p, q in
                    zip(expanded.components(), direct.components()))
        scale = max(1.0, max(abs(v) for v in direct.components()))
        out.append(NormalComparison((float(x), float(y), float(z)),
                                    expanded.components(), direct.components(),
                                    dev, max(dev), scale))
    return out


def lorentz_gram(vectors: Sequence[Vec4]) -> np.ndarray:
    n = len(vectors)
    g = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            g[i, j] = lorentz_dot(vectors[i], vectors[j])
    return g


def lagrange_defect(x: Vec4, y: Vec4, z: Vec4) -> float:
    """<c, c> + det(Gram(x, y, z)) for c = cross4(x, y, z); zero in theory."""
    c = cross4(x, y, z)
    return lorentz_dot(c, c) + float(np.linalg.det(lorentz_gram((x, y, z))))


def contraction_defect(x: Vec4, y: Vec4, z: Vec4, w: Vec4) -> float:
    """<cross4(x,y,z), w> - det[w; x; y; z]; zero in theory."""
    c = cross4(x, y, z)
    m = np.array([w.components(), x.components(),
                  y.components(), z.components()])
    return lorentz_dot(c, w) - float(np.linalg.det(m))


def lb_closed_full_p(h: RuledHypersurface, x: float, y: float, z: float) -> Vec4:
    """Orthogonal Laplacian variant with FULL P-weights: a probe, not a tool.

    Identical to hypersurface.lb_closed_orthogonal except the P_k terms are
    not halved.  The quotient rule demands the half, so this variant
    deviates from the general divergence path whenever the metric varies;
    check.py reports the deviation as evidence for the one-half weight.
    """
    if h.kind not in _RULING_DIAGONAL:
        raise ValueError("closed form requires a constrained kind")
    fr = frame(h, x, y, z)
    (a, b, c, _e, _m, _n), (da, db, dc, _de, _dm, _dn) = _metric_scalars(h, fr)
    sigma = _RULING_DIAGONAL[h.kind]
    tau = -sigma

    q_val = a - sigma * (b * b + c * c)
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

    total = (d1n1 * q_val - p[0] * n1) \
        + (d2n2 * q_val - p[1] * n2) \
        + (d3n3 * q_val - p[2] * n3)
    return total * (1.0 / (q_val * q_val))
