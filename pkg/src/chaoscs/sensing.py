"""Measurement matrices, sparse test signals and the measurement map.

A length M*N sequence c is written into an M x N matrix column by column
(M contiguous samples per column) and every entry is scaled by
1/(sigma*sqrt(M)), sigma^2 being the biased sample variance of the very
sequence used.  Test signals are k-sparse vectors with +/-1 spikes at
uniformly random positions, and measurements are y = Phi x.
"""

import io
import json
from dataclasses import dataclass, asdict

import numpy as np

from .ensembles import Sequence, SequenceSpec
from .errors import DegenerateSequenceError, DimensionMismatchError, LengthMismatchError
from .seeding import rng_from
from .validation import as_float_vector, check_count


@dataclass(frozen=True)
class MeasurementMatrix:
    """Scaled M x N sensing operator with its provenance."""

    entries: np.ndarray
    sigma_used: float
    spec: SequenceSpec | None = None
    centered: bool = False

    def __post_init__(self):
        if self.entries.ndim != 2:
            raise ValueError("entries must be a 2-D array")
        if self.M > self.N:
            raise ValueError(f"matrix must be wide (M <= N), got {self.M}x{self.N}")
        if not np.isfinite(self.entries).all():
            raise ValueError("matrix entries must be finite")
        if not self.sigma_used > 0:
            raise ValueError("sigma_used must be positive")

    @property
    def M(self):
        return self.entries.shape[0]

    @property
    def N(self):
        return self.entries.shape[1]

    def to_csv(self, path):
        """Write header `M,N,sigma,spec` and then the entries row-major."""
        buf = io.StringIO()
        spec_json = json.dumps(asdict(self.spec)) if self.spec is not None else ""
        buf.write("M,N,sigma,spec\n")
        buf.write(f"{self.M},{self.N},{self.sigma_used!r},{json.dumps(spec_json)}\n")
        for row in self.entries:
            buf.write(",".join(repr(v) for v in row) + "\n")
        with open(path, "w") as fh:
            fh.write(buf.getvalue())


@dataclass(frozen=True)
class SparseSignal:
    """k-sparse vector of +/-1 spikes."""

    values: np.ndarray
    k: int

    def __post_init__(self):
        nz = self.values[self.values != 0]
        if nz.shape[0] != self.k:
            raise ValueError(f"signal has {nz.shape[0]} nonzeros, expected k={self.k}")
        if nz.shape[0] and not np.all(np.abs(nz) == 1.0):
            raise ValueError("nonzero entries must be +1 or -1")

    @property
    def length(self):
        return self.values.shape[0]


def build_matrix(seq, M, N, center=False, sigma=None):
    """Fill an M x N matrix columnwise from a length-M*N sequence.

    ``sigma`` overrides the scale normally computed from the sequence
    (biased-sample standard deviation); ``center`` additionally subtracts
    the sample mean from every entry before scaling (off by default, which
    matches scaling-only normalization).
    """
    M = check_count(M, "M")
    N = check_count(N, "N")
    values = seq.values if isinstance(seq, Sequence) else as_float_vector(seq, "seq")
    spec = seq.spec if isinstance(seq, Sequence) else None
    if values.shape[0] != M * N:
        raise LengthMismatchError(
            f"sequence has {values.shape[0]} samples but M*N = {M * N}")
    if sigma is None:
        var = values.var()
        if var == 0.0:
            raise DegenerateSequenceError("cannot scale a zero-variance sequence")
        sigma = float(np.sqrt(var))
    elif not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    shifted = values - values.mean() if center else values
    entries = shifted.reshape(N, M).T / (sigma * np.sqrt(M))
    return MeasurementMatrix(entries=entries, sigma_used=float(sigma),
                             spec=spec, centered=center)


def gen_sparse_signal(N, k, seed):
    """k spikes of +/-1 (equiprobable) at uniformly random positions.

    Mirrors the construction protocol: draw the k signs, append N-k zeros,
    then apply a uniformly random permutation.  Deterministic in ``seed``.
    """
    N = check_count(N, "N")
    k = check_count(k, "k", minimum=0)
    if k > N:
        raise ValueError(f"k={k} exceeds N={N}")
    rng = rng_from(seed)
    signs = rng.integers(0, 2, size=k) * 2.0 - 1.0
    stacked = np.concatenate([signs, np.zeros(N - k)])
    values = rng.permutation(stacked)
    return SparseSignal(values=values, k=k)


def measure(phi, x):
    """Exact measurement y = Phi x."""
    entries = phi.entries if isinstance(phi, MeasurementMatrix) else np.asarray(phi, dtype=float)
    vec = x.values if isinstance(x, SparseSignal) else as_float_vector(x, "x")
    if entries.shape[1] != vec.shape[0]:
        raise DimensionMismatchError(
            f"matrix has {entries.shape[1]} columns but signal has length {vec.shape[0]}")
    return entries @ vec
