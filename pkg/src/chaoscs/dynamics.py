"""Chaotic dynamical systems and their fixed-step RK4 integration.

Three autonomous 3-D flows are implemented in dimensionless form:

* Chua's circuit with the piecewise-linear diode characteristic
  (the double-scroll regime at the default parameters),
* the Lorenz system at sigma=16, r=45.6, b=4,
* the Roessler system at a=b=0.2, c=5.7.

Trajectories are integrated with the classical 4th-order Runge-Kutta
scheme at a fixed step ``h`` and sampled every ``tau`` time units, where
``tau`` must be an integer multiple of ``h`` so that sampling means taking
every n-th integration state, never interpolating.  The integration loops
are numba-compiled; a one-step pure-numpy path (`rk4_step`) is kept for
small-scale work and cross-checking.
"""

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .errors import DivergenceError
from .validation import check_count

SYSTEMS = ("chua", "lorenz", "rossler")

_DEFAULT_TAU = {"chua": 1.0, "lorenz": 0.5, "rossler": 1.0}
_DEFAULT_INITIAL = {
    "chua": (0.1, 0.0, 0.0),
    "lorenz": (1.0, 1.0, 1.0),
    "rossler": (1.0, 1.0, 0.0),
}


@dataclass(frozen=True)
class ChuaParams:
    """Dimensionless Chua parameters; ``a``/``b`` are the inner/outer diode slopes."""

    a: float = -1.27
    b: float = -0.68
    alpha: float = 10.0
    beta: float = 14.87


@dataclass(frozen=True)
class LorenzParams:
    sigma: float = 16.0
    r: float = 45.6
    b: float = 4.0


@dataclass(frozen=True)
class RosslerParams:
    a: float = 0.2
    b: float = 0.2
    c: float = 5.7


_DEFAULT_PARAMS = {
    "chua": ChuaParams(),
    "lorenz": LorenzParams(),
    "rossler": RosslerParams(),
}


def default_params(system):
    """Default parameter set for a system tag."""
    _check_system(system)
    return _DEFAULT_PARAMS[system]


def default_initial_state(system):
    _check_system(system)
    return np.array(_DEFAULT_INITIAL[system])


def _check_system(system):
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}, expected one of {SYSTEMS}")


def _exact_multiple(value, h, name):
    """Number of h-steps in ``value``, requiring an (almost) exact integer ratio."""
    steps = int(round(value / h))
    if steps < 0 or abs(steps * h - value) > 1e-9 * max(abs(value), h):
        raise ValueError(f"{name}={value} must be a non-negative integer multiple of h={h}")
    return steps


@dataclass(frozen=True)
class IntegratorConfig:
    """Fixed-step integration plan.

    ``tau`` (sampling distance) and ``burn_in`` must both be integer
    multiples of the step ``h``.  ``initial_state``/``tau`` left as None
    resolve to per-system defaults when the config is bound to a system.
    """

    h: float = 0.001
    burn_in: float = 100.0
    tau: float | None = None
    initial_state: tuple[float, float, float] | None = None

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"h must be positive, got {self.h}")
        if self.burn_in < 0:
            raise ValueError(f"burn_in must be non-negative, got {self.burn_in}")
        _exact_multiple(self.burn_in, self.h, "burn_in")
        if self.tau is not None:
            steps = _exact_multiple(self.tau, self.h, "tau")
            if steps < 1:
                raise ValueError(f"tau={self.tau} must be at least one step h={self.h}")

    def resolve(self, system):
        """Fill in system defaults, returning (tau, initial_state, burn_steps, steps_per_sample)."""
        _check_system(system)
        tau = self.tau if self.tau is not None else _DEFAULT_TAU[system]
        steps_per_sample = _exact_multiple(tau, self.h, "tau")
        if steps_per_sample < 1:
            raise ValueError(f"tau={tau} must be at least one step h={self.h}")
        if self.initial_state is None:
            state = default_initial_state(system)
        else:
            state = np.asarray(self.initial_state, dtype=float)
            if state.shape != (3,) or not np.isfinite(state).all():
                raise ValueError("initial_state must be three finite numbers")
        burn_steps = _exact_multiple(self.burn_in, self.h, "burn_in")
        return tau, state, burn_steps, steps_per_sample


@dataclass(frozen=True)
class Trajectory:
    """Sampled states of one integration run.

    ``times`` are ``burn_in + i*tau``; ``states`` has one row per sample.
    """

    system: str
    times: np.ndarray
    states: np.ndarray
    config: IntegratorConfig
    params: object = None
    tau: float = field(default=0.0)

    def __len__(self):
        return self.states.shape[0]


def chua_nonlinearity(x1, params=None):
    """Piecewise-linear diode term b*x1 + (a-b)/2 * (|x1+1| - |x1-1|)."""
    p = params if params is not None else ChuaParams()
    return p.b * x1 + 0.5 * (p.a - p.b) * (abs(x1 + 1.0) - abs(x1 - 1.0))


def vector_field(system, state, params=None):
    """Right-hand side of the selected system at ``state``."""
    _check_system(system)
    p = params if params is not None else _DEFAULT_PARAMS[system]
    x1, x2, x3 = np.asarray(state, dtype=float)
    if system == "chua":
        g = chua_nonlinearity(x1, p)
        return np.array([p.alpha * (x2 - x1 - g), x1 - x2 + x3, -p.beta * x2])
    if system == "lorenz":
        return np.array([p.sigma * (x2 - x1), p.r * x1 - x1 * x3 - x2, x1 * x2 - p.b * x3])
    return np.array([-x2 - x3, x1 + p.a * x2, p.b + x3 * (x1 - p.c)])


def rk4_step(system, state, params=None, h=0.001):
    """One classical Runge-Kutta step of size ``h``."""
    if not h > 0:
        raise ValueError(f"h must be positive, got {h}")
    s = np.asarray(state, dtype=float)
    k1 = vector_field(system, s, params)
    k2 = vector_field(system, s + 0.5 * h * k1, params)
    k3 = vector_field(system, s + 0.5 * h * k2, params)
    k4 = vector_field(system, s + h * k3, params)
    out = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not np.isfinite(out).all():
        raise DivergenceError(f"{system} state diverged in one RK4 step from {s}")
    return out


# Compiled integration loops.  One kernel per system keeps them monomorphic;
# all record the full state every `steps_per_sample` steps after `burn_steps`
# and return the index of the first non-finite sample (-1 if none).

@njit(cache=True)
def _integrate_chua(x1, x2, x3, h, burn_steps, n_samples, steps_per_sample, a, b, alpha, beta):
    out = np.empty((n_samples, 3))
    rec = 0
    step = 0
    fail = -1
    total = burn_steps + (n_samples - 1) * steps_per_sample
    while step <= total:
        if step >= burn_steps and (step - burn_steps) % steps_per_sample == 0:
            out[rec, 0] = x1
            out[rec, 1] = x2
            out[rec, 2] = x3
            if fail < 0 and not (np.isfinite(x1) and np.isfinite(x2) and np.isfinite(x3)):
                fail = rec
                break
            rec += 1
        g = b * x1 + 0.5 * (a - b) * (abs(x1 + 1.0) - abs(x1 - 1.0))
        k1a = alpha * (x2 - x1 - g); k1b = x1 - x2 + x3; k1c = -beta * x2
        y1 = x1 + 0.5 * h * k1a; y2 = x2 + 0.5 * h * k1b; y3 = x3 + 0.5 * h * k1c
        g = b * y1 + 0.5 * (a - b) * (abs(y1 + 1.0) - abs(y1 - 1.0))
        k2a = alpha * (y2 - y1 - g); k2b = y1 - y2 + y3; k2c = -beta * y2
        y1 = x1 + 0.5 * h * k2a; y2 = x2 + 0.5 * h * k2b; y3 = x3 + 0.5 * h * k2c
        g = b * y1 + 0.5 * (a - b) * (abs(y1 + 1.0) - abs(y1 - 1.0))
        k3a = alpha * (y2 - y1 - g); k3b = y1 - y2 + y3; k3c = -beta * y2
        y1 = x1 + h * k3a; y2 = x2 + h * k3b; y3 = x3 + h * k3c
        g = b * y1 + 0.5 * (a - b) * (abs(y1 + 1.0) - abs(y1 - 1.0))
        k4a = alpha * (y2 - y1 - g); k4b = y1 - y2 + y3; k4c = -beta * y2
        x1 += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
        x2 += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
        x3 += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        step += 1
    return out, fail


@njit(cache=True)
def _integrate_lorenz(x1, x2, x3, h, burn_steps, n_samples, steps_per_sample, sigma, r, b):
    out = np.empty((n_samples, 3))
    rec = 0
    step = 0
    fail = -1
    total = burn_steps + (n_samples - 1) * steps_per_sample
    while step <= total:
        if step >= burn_steps and (step - burn_steps) % steps_per_sample == 0:
            out[rec, 0] = x1
            out[rec, 1] = x2
            out[rec, 2] = x3
            if fail < 0 and not (np.isfinite(x1) and np.isfinite(x2) and np.isfinite(x3)):
                fail = rec
                break
            rec += 1
        k1a = sigma * (x2 - x1); k1b = r * x1 - x1 * x3 - x2; k1c = x1 * x2 - b * x3
        y1 = x1 + 0.5 * h * k1a; y2 = x2 + 0.5 * h * k1b; y3 = x3 + 0.5 * h * k1c
        k2a = sigma * (y2 - y1); k2b = r * y1 - y1 * y3 - y2; k2c = y1 * y2 - b * y3
        y1 = x1 + 0.5 * h * k2a; y2 = x2 + 0.5 * h * k2b; y3 = x3 + 0.5 * h * k2c
        k3a = sigma * (y2 - y1); k3b = r * y1 - y1 * y3 - y2; k3c = y1 * y2 - b * y3
        y1 = x1 + h * k3a; y2 = x2 + h * k3b; y3 = x3 + h * k3c
        k4a = sigma * (y2 - y1); k4b = r * y1 - y1 * y3 - y2; k4c = y1 * y2 - b * y3
        x1 += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
        x2 += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
        x3 += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        step += 1
    return out, fail


@njit(cache=True)
def _integrate_rossler(x1, x2, x3, h, burn_steps, n_samples, steps_per_sample, a, b, c):
    out = np.empty((n_samples, 3))
    rec = 0
    step = 0
    fail = -1
    total = burn_steps + (n_samples - 1) * steps_per_sample
    while step <= total:
        if step >= burn_steps and (step - burn_steps) % steps_per_sample == 0:
            out[rec, 0] = x1
            out[rec, 1] = x2
            out[rec, 2] = x3
            if fail < 0 and not (np.isfinite(x1) and np.isfinite(x2) and np.isfinite(x3)):
                fail = rec
                break
            rec += 1
        k1a = -x2 - x3; k1b = x1 + a * x2; k1c = b + x3 * (x1 - c)
        y1 = x1 + 0.5 * h * k1a; y2 = x2 + 0.5 * h * k1b; y3 = x3 + 0.5 * h * k1c
        k2a = -y2 - y3; k2b = y1 + a * y2; k2c = b + y3 * (y1 - c)
        y1 = x1 + 0.5 * h * k2a; y2 = x2 + 0.5 * h * k2b; y3 = x3 + 0.5 * h * k2c
        k3a = -y2 - y3; k3b = y1 + a * y2; k3c = b + y3 * (y1 - c)
        y1 = x1 + h * k3a; y2 = x2 + h * k3b; y3 = x3 + h * k3c
        k4a = -y2 - y3; k4b = y1 + a * y2; k4c = b + y3 * (y1 - c)
        x1 += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)
        x2 += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
        x3 += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c)
        step += 1
    return out, fail


def integrate(system, params=None, config=None, n_samples=1):
    """Integrate a system and record ``n_samples`` states, one every tau.

    The burn-in interval is discarded; the first recorded sample is the
    state at t = burn_in (the initial state itself when burn_in is 0).
    Raises :class:`DivergenceError` if the trajectory leaves the finite
    domain, reporting the time of the first bad sample.
    """
    _check_system(system)
    n_samples = check_count(n_samples, "n_samples", minimum=1)
    p = params if params is not None else _DEFAULT_PARAMS[system]
    cfg = config if config is not None else IntegratorConfig()
    tau, state, burn_steps, steps_per_sample = cfg.resolve(system)
    x1, x2, x3 = state
    if system == "chua":
        states, fail = _integrate_chua(
            x1, x2, x3, cfg.h, burn_steps, n_samples, steps_per_sample,
            p.a, p.b, p.alpha, p.beta)
    elif system == "lorenz":
        states, fail = _integrate_lorenz(
            x1, x2, x3, cfg.h, burn_steps, n_samples, steps_per_sample,
            p.sigma, p.r, p.b)
    else:
        states, fail = _integrate_rossler(
            x1, x2, x3, cfg.h, burn_steps, n_samples, steps_per_sample,
            p.a, p.b, p.c)
    if fail >= 0:
        t_fail = cfg.burn_in + fail * tau
        raise DivergenceError(
            f"{system} trajectory diverged near t={t_fail:g}", time=t_fail)
    times = cfg.burn_in + np.arange(n_samples) * tau
    return Trajectory(system=system, times=times, states=states,
                      config=cfg, params=p, tau=tau)
