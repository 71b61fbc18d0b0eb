"""Scalar sample streams used to fill measurement matrices.

Eight sequence kinds are supported: the x1 coordinate of the three chaotic
systems sampled at distance tau, and five random ensembles (iid standard
Gaussian, stationary AR(1) Gaussian with autocorrelation rho^|lag|,
symmetric Bernoulli +/-1, uniform on [0,1] and uniform on [-0.5,0.5]).

Random kinds are drawn from a PCG64 generator seeded by ``spec.seed``, so
equal specs reproduce bit-identical sequences.  Chaotic kinds are fully
deterministic in the integrator configuration; the seed is ignored and
``generate(spec, n)`` is always a prefix of ``generate(spec, n + m)``.
"""

from dataclasses import dataclass, replace

import numpy as np
from scipy.signal import lfilter

from . import dynamics
from .errors import DegenerateSequenceError
from .seeding import rng_from
from .validation import check_count

RANDOM_KINDS = ("iid_gaussian", "ar1_gaussian", "bernoulli_pm1", "uniform_01", "uniform_pm_half")
CHAOTIC_KINDS = ("chua_x1", "lorenz_x1", "rossler_x1")
KINDS = CHAOTIC_KINDS + RANDOM_KINDS


@dataclass(frozen=True)
class SequenceSpec:
    """Recipe for one sequence: kind plus the parameters that kind needs.

    ``rho`` applies to ``ar1_gaussian`` only; ``tau``/``h``/``burn_in``/
    ``initial_state`` apply to the chaotic kinds only (None means the
    per-system default).
    """

    kind: str
    seed: int = 0
    rho: float = 0.99
    tau: float | None = None
    h: float = 0.001
    burn_in: float = 100.0
    initial_state: tuple[float, float, float] | None = None

    def __post_init__(self):
        if not -1.0 < self.rho < 1.0:
            raise ValueError(f"rho must be in (-1, 1), got {self.rho}")

    @property
    def is_chaotic(self):
        return self.kind in CHAOTIC_KINDS

    def system(self):
        """System tag for chaotic kinds ('chua_x1' -> 'chua')."""
        return self.kind.rsplit("_", 1)[0]

    def integrator_config(self):
        return dynamics.IntegratorConfig(
            h=self.h, burn_in=self.burn_in, tau=self.tau,
            initial_state=self.initial_state)

    def with_seed(self, seed):
        return replace(self, seed=int(seed))


@dataclass(frozen=True)
class Sequence:
    """Sample stream with the spec that produced it."""

    values: np.ndarray
    spec: SequenceSpec

    def __post_init__(self):
        if not np.isfinite(self.values).all():
            raise ValueError("sequence values must be finite")

    def __len__(self):
        return self.values.shape[0]

    @property
    def length(self):
        return self.values.shape[0]


def _ar1(rng, rho, length):
    # stationary start: c_0 ~ N(0,1), then c_i = rho c_{i-1} + sqrt(1-rho^2) w_i
    w = rng.standard_normal(length)
    drive = np.sqrt(1.0 - rho * rho) * w
    drive[0] = w[0]
    return lfilter([1.0], [1.0, -rho], drive)


def generate(spec, length):
    """Produce ``length`` samples according to ``spec``."""
    length = check_count(length, "length", minimum=1)
    if spec.kind not in KINDS:
        raise ValueError(f"unknown sequence kind {spec.kind!r}, expected one of {KINDS}")
    if spec.is_chaotic:
        traj = dynamics.integrate(spec.system(), config=spec.integrator_config(),
                                  n_samples=length)
        return Sequence(values=traj.states[:, 0].copy(), spec=spec)
    rng = rng_from(spec.seed)
    if spec.kind == "iid_gaussian":
        values = rng.standard_normal(length)
    elif spec.kind == "ar1_gaussian":
        values = _ar1(rng, spec.rho, length)
    elif spec.kind == "bernoulli_pm1":
        values = rng.integers(0, 2, size=length) * 2.0 - 1.0
    elif spec.kind == "uniform_01":
        values = rng.random(length)
    else:  # uniform_pm_half
        values = rng.random(length) - 0.5
    return Sequence(values=values, spec=spec)


def sample_stats(seq):
    """Sample mean and biased (divide-by-n) variance of a sequence."""
    values = seq.values if isinstance(seq, Sequence) else np.asarray(seq, dtype=float)
    if values.shape[0] < 2:
        raise ValueError(f"need at least 2 samples, got {values.shape[0]}")
    mean = values.mean()
    var = values.var()
    if var == 0.0:
        raise DegenerateSequenceError("sequence is constant (zero variance)")
    return mean, var


def extract_scalar(trajectory, coordinate):
    """Pull one coordinate (1, 2 or 3) out of a trajectory as a Sequence."""
    if coordinate not in (1, 2, 3):
        raise ValueError(f"coordinate must be 1, 2 or 3, got {coordinate}")
    cfg = trajectory.config
    spec = SequenceSpec(
        kind=f"{trajectory.system}_x{coordinate}",
        tau=trajectory.tau, h=cfg.h, burn_in=cfg.burn_in,
        initial_state=cfg.initial_state)
    return Sequence(values=trajectory.states[:, coordinate - 1].copy(), spec=spec)
