"""Equality-constrained basis pursuit via a primal-dual interior-point method.

Solves  min ||s||_1  subject to  Theta s = y  through the standard LP
reformulation  min sum(u) s.t. s - u <= 0, -s - u <= 0, Theta s = y.
Each iteration takes a Newton step on the perturbed KKT system, reduced by
block elimination to one M x M symmetric positive-definite solve, then
backtracks to keep the inequality slacks strictly feasible; the barrier
parameter is driven by the surrogate duality gap, which shrinks by roughly
the factor ``mu`` per centering step.  Iterations start from the
minimum-l2-norm feasible point.

`solve_bp` is the functional core; :class:`BasisPursuit` wraps it in a
scikit-learn estimator so recovery composes with sklearn pipelines and
model-selection tooling.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .errors import SingularGramError
from .sensing import MeasurementMatrix
from .validation import as_float_matrix, as_float_vector

CONVERGED = "converged"
MAX_ITERS = "max_iters"
NUMERICAL_FAILURE = "numerical_failure"

_COND_LIMIT = 1e12
_MIN_STEP = 1e-12
_MAX_BACKTRACKS = 32


@dataclass(frozen=True)
class SolverConfig:
    """Interior-point controls; defaults follow the common reference settings."""

    gap_tol: float = 1e-3
    max_iters: int = 50
    mu: float = 10.0
    alpha: float = 0.01
    beta: float = 0.5
    newton_tol: float = 1e-8

    def __post_init__(self):
        if not self.gap_tol > 0:
            raise ValueError("gap_tol must be positive")
        if not 0 < self.alpha < 0.5:
            raise ValueError("alpha must be in (0, 0.5)")
        if not 0 < self.beta < 1:
            raise ValueError("beta must be in (0, 1)")
        if not self.mu > 1:
            raise ValueError("mu must exceed 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")


@dataclass(frozen=True)
class BpProblem:
    """Basis pursuit instance Theta s = y (Theta wide, full row rank)."""

    theta: np.ndarray
    y: np.ndarray


@dataclass
class BpSolution:
    s: np.ndarray
    iterations: int
    final_gap: float
    residual_norm: float
    status: str
    gap_history: np.ndarray | None = None

    @property
    def converged(self):
        return self.status == CONVERGED


def l1_norm(s):
    return float(np.abs(np.asarray(s, dtype=float)).sum())


def _theta_array(theta):
    if isinstance(theta, MeasurementMatrix):
        return theta.entries
    return as_float_matrix(theta, "theta")


def least_norm_init(theta, y):
    """Minimum-l2-norm feasible point Theta^T (Theta Theta^T)^{-1} y.

    Raises :class:`SingularGramError` when Theta Theta^T is numerically
    singular (condition estimate above 1e12), which is how a rank-deficient
    operator is rejected instead of silently pseudo-inverted.
    """
    A = _theta_array(theta)
    b = as_float_vector(y, "y")
    if A.shape[0] != b.shape[0]:
        raise SingularGramError(
            f"theta has {A.shape[0]} rows but y has length {b.shape[0]}")
    gram = A @ A.T
    cond = np.linalg.cond(gram)
    if not np.isfinite(cond) or cond > _COND_LIMIT:
        raise SingularGramError(
            f"Theta Theta^T condition estimate {cond:.3e} exceeds {_COND_LIMIT:.0e}")
    try:
        factor = cho_factor(gram)
    except LinAlgError as exc:
        raise SingularGramError(f"Cholesky of Theta Theta^T failed: {exc}") from exc
    return A.T @ cho_solve(factor, b)


def solve_bp(theta, y, config=None):
    """Run the primal-dual iteration on min ||s||_1 s.t. Theta s = y.

    ``y = 0`` short-circuits to the exact optimum s = 0.  Non-convergence
    is reported through ``status`` (with the last iterate) rather than an
    exception; only a rank-deficient Theta raises.
    """
    cfg = config if config is not None else SolverConfig()
    A = _theta_array(theta)
    b = as_float_vector(y, "y")
    M, N = A.shape
    norm_b = np.linalg.norm(b)
    if norm_b == 0.0:
        return BpSolution(s=np.zeros(N), iterations=0, final_gap=0.0,
                          residual_norm=0.0, status=CONVERGED,
                          gap_history=np.zeros(1))

    x = least_norm_init(A, b)
    u = 0.95 * np.abs(x) + 0.10 * np.abs(x).max()

    fu1 = x - u
    fu2 = -x - u
    lamu1 = -1.0 / fu1
    lamu2 = -1.0 / fu2
    v = -A @ (lamu1 - lamu2)
    Atv = A.T @ v
    rpri = A @ x - b

    sdg = -(fu1 @ lamu1 + fu2 @ lamu2)
    tau = cfg.mu * 2 * N / sdg
    rcent = np.concatenate([-lamu1 * fu1, -lamu2 * fu2]) - 1.0 / tau
    rdual = np.concatenate([lamu1 - lamu2 + Atv, 1.0 - lamu1 - lamu2])
    resnorm = np.sqrt(rdual @ rdual + rcent @ rcent + rpri @ rpri)

    gaps = [sdg]
    iterations = 0
    status = MAX_ITERS
    while sdg >= cfg.gap_tol and iterations < cfg.max_iters:
        iterations += 1

        w1 = (1.0 / tau) * (1.0 / fu1 - 1.0 / fu2) - Atv
        w2 = -1.0 - (1.0 / tau) * (1.0 / fu1 + 1.0 / fu2)
        w3 = -rpri
        sig1 = -lamu1 / fu1 - lamu2 / fu2
        sig2 = lamu1 / fu1 - lamu2 / fu2
        sigx = sig1 - sig2 * sig2 / sig1
        if not (np.isfinite(sigx).all() and (sigx != 0.0).all()):
            status = NUMERICAL_FAILURE
            break
        w1p = A @ ((w1 - w2 * sig2 / sig1) / sigx) - w3
        H11p = (A * (1.0 / sigx)) @ A.T
        try:
            factor = cho_factor(H11p)
        except (LinAlgError, ValueError):
            status = NUMERICAL_FAILURE
            break
        dv = cho_solve(factor, w1p)
        if np.linalg.norm(H11p @ dv - w1p) > cfg.newton_tol * max(1.0, np.linalg.norm(w1p)):
            status = NUMERICAL_FAILURE
            break
        dx = (w1 - w2 * sig2 / sig1 - A.T @ dv) / sigx
        Adx = A @ dx
        Atdv = A.T @ dv
        du = (w2 - sig2 * dx) / sig1
        dlamu1 = (lamu1 / fu1) * (-dx + du) - lamu1 - (1.0 / tau) / fu1
        dlamu2 = (lamu2 / fu2) * (dx + du) - lamu2 - (1.0 / tau) / fu2

        # largest step keeping lambda > 0 and the slacks strictly negative
        s = 1.0
        neg = dlamu1 < 0
        if neg.any():
            s = min(s, (-lamu1[neg] / dlamu1[neg]).min())
        neg = dlamu2 < 0
        if neg.any():
            s = min(s, (-lamu2[neg] / dlamu2[neg]).min())
        pos = (dx - du) > 0
        if pos.any():
            s = min(s, (-fu1[pos] / (dx[pos] - du[pos])).min())
        pos = (-dx - du) > 0
        if pos.any():
            s = min(s, (-fu2[pos] / (-dx[pos] - du[pos])).min())
        s *= 0.99

        accepted = False
        for _ in range(_MAX_BACKTRACKS):
            xp = x + s * dx
            up = u + s * du
            vp = v + s * dv
            Atvp = Atv + s * Atdv
            lamu1p = lamu1 + s * dlamu1
            lamu2p = lamu2 + s * dlamu2
            fu1p = xp - up
            fu2p = -xp - up
            rdp = np.concatenate([lamu1p - lamu2p + Atvp, 1.0 - lamu1p - lamu2p])
            rcp = np.concatenate([-lamu1p * fu1p, -lamu2p * fu2p]) - 1.0 / tau
            rpp = rpri + s * Adx
            resnorm_p = np.sqrt(rdp @ rdp + rcp @ rcp + rpp @ rpp)
            if resnorm_p <= (1.0 - cfg.alpha * s) * resnorm:
                accepted = True
                break
            s *= cfg.beta
            if s < _MIN_STEP:
                break
        if not accepted:
            status = NUMERICAL_FAILURE
            break

        x, u, v, Atv = xp, up, vp, Atvp
        lamu1, lamu2, fu1, fu2 = lamu1p, lamu2p, fu1p, fu2p
        rpri = rpp
        sdg = -(fu1 @ lamu1 + fu2 @ lamu2)
        gaps.append(sdg)
        tau = cfg.mu * 2 * N / sdg
        rcent = np.concatenate([-lamu1 * fu1, -lamu2 * fu2]) - 1.0 / tau
        rdual = np.concatenate([lamu1 - lamu2 + Atv, 1.0 - lamu1 - lamu2])
        resnorm = np.sqrt(rdual @ rdual + rcent @ rcent + rpri @ rpri)
    else:
        if sdg < cfg.gap_tol:
            status = CONVERGED

    residual = float(np.linalg.norm(A @ x - b))
    return BpSolution(s=x, iterations=iterations, final_gap=float(sdg),
                      residual_norm=residual, status=status,
                      gap_history=np.asarray(gaps))


class BasisPursuit(BaseEstimator, RegressorMixin):
    """Sparse recovery by basis pursuit with a scikit-learn interface.

    ``fit(X, y)`` treats X as the sensing operator and y as the measurement
    vector and stores the recovered coefficients in ``coef_``; ``predict``
    applies the operator to the recovered vector, so a perfect fit
    reproduces the measurements.

    Parameters mirror :class:`SolverConfig`.
    """

    def __init__(self, gap_tol=1e-3, max_iters=50, mu=10.0, alpha=0.01,
                 beta=0.5, newton_tol=1e-8):
        self.gap_tol = gap_tol
        self.max_iters = max_iters
        self.mu = mu
        self.alpha = alpha
        self.beta = beta
        self.newton_tol = newton_tol

    def _config(self):
        return SolverConfig(gap_tol=self.gap_tol, max_iters=self.max_iters,
                            mu=self.mu, alpha=self.alpha, beta=self.beta,
                            newton_tol=self.newton_tol)

    def fit(self, X, y):
        X = check_array(X, dtype=float)
        y = check_array(y, dtype=float, ensure_2d=False)
        if y.ndim != 1:
            raise ValueError("y must be one-dimensional")
        solution = solve_bp(X, y, self._config())
        self.coef_ = solution.s
        self.n_iter_ = solution.iterations
        self.gap_ = solution.final_gap
        self.residual_norm_ = solution.residual_norm
        self.status_ = solution.status
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = check_array(X, dtype=float)
        return X @ self.coef_
