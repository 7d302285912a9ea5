"""Independent numerical check of closed-form solution sets.

The equation is treated as four real quadratic equations in the four
components of ``X`` and solved by damped Gauss-Newton from many random
starts.  Nothing here uses the reductions in :mod:`quatsolve.solver`.

The default search box comes from the growth bound
``|P| |X|^2 <= |S| + (|Q| + |R|) |X|``, which every solution satisfies and
which gives ``|X| <= sqrt(|S|/|P|) + (|Q| + |R|)/|P|``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from .quaternion import Quaternion, extract_components
from .sets import SolutionSet, emit_samples, is_finite
from .solver import EquationCoefficients, lhs, residual, residual_scale

MEMBER_RESIDUAL_TOL = 1e-8
SET_SAMPLES = 64


class Verdict(enum.Enum):
    MATCH = "match"
    EXTRA_ROOT = "extra_root"
    MISSING_ROOT = "missing_root"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class OracleConfig:
    n_starts: int = 400
    box_scale: Optional[float] = None
    newton_tol: float = 1e-12
    max_iters: int = 80
    cluster_radius: float = 1e-6
    seed: int = 0
    max_halvings: int = 30

    def __post_init__(self):
        if self.n_starts <= 0 or self.max_iters <= 0:
            raise ValueError("n_starts and max_iters must be positive")
        if self.newton_tol <= 0 or self.cluster_radius <= 0:
            raise ValueError("tolerances must be positive")
        if self.box_scale is not None and self.box_scale <= 0:
            raise ValueError("box_scale must be positive")


@dataclass
class OracleReport:
    roots: list[Quaternion]
    max_residual: float
    verdict: Optional[Verdict] = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "roots": [r.to_list() for r in self.roots],
            "max_residual": self.max_residual,
            "verdict": self.verdict.value if self.verdict else None,
        }


def default_box_scale(c: EquationCoefficients) -> float:
    p = c.P.modulus()
    return 4.0 * (1.0 + math.sqrt(c.S.modulus() / p) + (c.Q.modulus() + c.R.modulus()) / p)


def _qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack([
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ], axis=-1)


_CONJ = np.array([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class _Polynomial:
    """``f(v)_k = T[k,a,b] v_a v_b + M[k,a] v_a - s_k``."""

    T: np.ndarray
    M: np.ndarray
    s: np.ndarray

    @classmethod
    def of(cls, c: EquationCoefficients) -> _Polynomial:
        basis = np.eye(4)
        P, Q, R = (np.array(q) for q in (c.P, c.Q, c.R))
        # e_a P e_b*, indexed [a, b, k]
        left = _qmul(basis, P)[:, None, :]
        T = _qmul(np.broadcast_to(left, (4, 4, 4)), np.broadcast_to(basis * _CONJ, (4, 4, 4)))
        T = np.transpose(T, (2, 0, 1))
        # columns: e_a Q + R e_a*
        M = (_qmul(basis, Q) + _qmul(np.broadcast_to(R, (4, 4)), basis * _CONJ)).T
        return cls(np.ascontiguousarray(T), M, np.array(c.S))

    def value(self, v: np.ndarray) -> np.ndarray:
        quad = np.einsum("kab,...a,...b->...k", self.T, v, v)
        return quad + v @ self.M.T - self.s

    def jacobian(self, v: np.ndarray) -> np.ndarray:
        sym = self.T + np.transpose(self.T, (0, 2, 1))
        return np.einsum("kab,...b->...ka", sym, v) + self.M


def real_system(c: EquationCoefficients, v, via_extraction: bool = False) -> np.ndarray:
    """The four real components of ``X P X* + X Q + R X* - S`` at ``X = v``.

    ``v`` may be a single 4-vector or a stack of shape ``(..., 4)``.  With
    ``via_extraction`` the components of a single point are read off the
    quaternion value by :func:`extract_components` instead.
    """
    v = np.asarray(v, dtype=float)
    if via_extraction:
        if v.shape != (4,):
            raise ValueError("via_extraction evaluates a single point")
        value = lhs(c, Quaternion(*v)) - c.S
        return np.array(extract_components(value))
    return _Polynomial.of(c).value(v)


def jacobian(c: EquationCoefficients, v) -> np.ndarray:
    """Analytic Jacobian of :func:`real_system`; row ``k`` is the gradient of component ``k``."""
    return _Polynomial.of(c).jacobian(np.asarray(v, dtype=float))


def _row_scale(c: EquationCoefficients, x: np.ndarray) -> np.ndarray:
    return c.scale * np.maximum(1.0, np.einsum("...i,...i->...", x, x))


def _newton(poly: _Polynomial, c: EquationCoefficients, x: np.ndarray,
            cfg: OracleConfig) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Damped Gauss-Newton on a stack of starting points.

    Returns the final points, their residual norms, and a convergence mask.
    """
    x = x.copy()
    f = np.linalg.norm(poly.value(x), axis=-1)
    active = np.ones(len(x), dtype=bool)
    for _ in range(cfg.max_iters):
        active &= f > cfg.newton_tol * _row_scale(c, x)
        if not active.any():
            break
        idx = np.flatnonzero(active)
        xa = x[idx]
        F = poly.value(xa)
        step = -np.einsum("nij,nj->ni", np.linalg.pinv(poly.jacobian(xa)), F)
        lam = np.ones(len(idx))
        pending = np.ones(len(idx), dtype=bool)
        for _ in range(cfg.max_halvings + 1):
            trial = xa[pending] + lam[pending, None] * step[pending]
            ft = np.linalg.norm(poly.value(trial), axis=-1)
            ok = ft < f[idx[pending]]
            where = np.flatnonzero(pending)
            accepted = where[ok]
            x[idx[accepted]] = trial[ok]
            f[idx[accepted]] = ft[ok]
            pending[accepted] = False
            if not pending.any():
                break
            lam[pending] *= 0.5
        # no descent within the halving budget: stalled
        active[idx[pending]] = False
    converged = f <= cfg.newton_tol * _row_scale(c, x)
    return x, f, converged


def _cluster(points: np.ndarray, res: np.ndarray, radius: float) -> list[int]:
    order = np.lexsort(tuple(points[:, k] for k in range(3, -1, -1)) + (res,))
    reps: list[int] = []
    for i in order:
        if all(np.linalg.norm(points[i] - points[j]) > radius for j in reps):
            reps.append(int(i))
    return reps


def newton_multistart(c: EquationCoefficients, cfg: OracleConfig = OracleConfig()) -> OracleReport:
    """Find roots from ``cfg.n_starts`` seeded starts in a box about the origin.

    Converged points are clustered within ``cfg.cluster_radius``; each cluster
    is represented by its smallest-residual member.  Roots are returned in
    lexicographic order, so the report depends only on ``c`` and ``cfg``.
    """
    box = cfg.box_scale if cfg.box_scale is not None else default_box_scale(c)
    rng = np.random.default_rng(cfg.seed)
    starts = rng.uniform(-box, box, size=(cfg.n_starts, 4))
    poly = _Polynomial.of(c)
    x, _, ok = _newton(poly, c, starts, cfg)
    pts = x[ok]
    if len(pts) == 0:
        return OracleReport([], 0.0)
    # residuals recomputed with quaternion arithmetic for an exact tie-break
    res = np.array([residual(c, Quaternion(*p)) for p in pts])
    reps = _cluster(pts, res, cfg.cluster_radius)
    roots = sorted((Quaternion(*pts[i]) for i in reps), key=tuple)
    return OracleReport(roots, float(max(res[i] for i in reps)))


def refine(c: EquationCoefficients, start: Quaternion,
           cfg: OracleConfig = OracleConfig()) -> tuple[Quaternion, bool]:
    """Run Newton from a single start; return the end point and whether it converged."""
    x, _, ok = _newton(_Polynomial.of(c), c, np.array([start], dtype=float), cfg)
    return Quaternion(*x[0]), bool(ok[0])


def verify_solution_set(c: EquationCoefficients, sol: SolutionSet,
                        cfg: OracleConfig = OracleConfig()) -> OracleReport:
    """Cross-check a closed-form solution set against multistart Newton.

    * every member (or 64 samples of an infinite set) must have scaled
      residual at most ``1e-8``, else ``MISSING_ROOT``;
    * each finite member must be re-found by Newton seeded at it, else
      ``MISSING_ROOT``;
    * every oracle root must lie within ``10 * cluster_radius`` of the set,
      else ``EXTRA_ROOT``;
    * an infinite set with no oracle roots at all is ``INCONCLUSIVE``.
    """
    report = newton_multistart(c, cfg)
    probes = emit_samples(sol, SET_SAMPLES, cfg.seed)

    missing = False
    for m in probes:
        r = residual(c, m)
        if r > MEMBER_RESIDUAL_TOL * residual_scale(c, m):
            report.notes.append(f"member {m.to_list()} has residual {r:.3e}")
            missing = True
    if is_finite(sol):
        for m in sol.members():
            end, ok = refine(c, m, cfg)
            if not ok or (end - m).modulus() > cfg.cluster_radius:
                report.notes.append(f"member {m.to_list()} not re-found by Newton")
                missing = True

    reach = 10.0 * cfg.cluster_radius
    extra = [r for r in report.roots if sol.distance(r) > reach]
    for r in extra:
        report.notes.append(f"oracle root {r.to_list()} lies off the solution set")

    if extra:
        report.verdict = Verdict.EXTRA_ROOT
    elif missing:
        report.verdict = Verdict.MISSING_ROOT
    elif not is_finite(sol) and not report.roots:
        report.verdict = Verdict.INCONCLUSIVE
    else:
        report.verdict = Verdict.MATCH
    return report


def with_seed(cfg: OracleConfig, seed: int) -> OracleConfig:
    return replace(cfg, seed=seed)
