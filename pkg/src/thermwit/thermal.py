"""Gibbs-state quantities over discrete spectra.

Everything is computed in the log domain after shifting by the ground
energy, so populations and log partition functions stay finite at any
temperature the package accepts (T = 0 itself is excluded; probe the limit
with kT around 1e-6 times the gap).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AlphaZero, DegenerateGround, IndexOutOfRange, ThermwitError
from .numerics import hermitian_eigendecompose, log_gamma
from .systems import Spectrum, ToySpectrumParams

LN2 = math.log(2.0)


@dataclass(frozen=True)
class ThermalPoint:
    """A temperature together with the Boltzmann-constant convention.

    Internal math always uses the product kT; the default k_b = 1 gives
    reduced units, and a physical k_b only rescales reported temperatures.
    """

    temperature: float
    k_b: float = 1.0

    def __post_init__(self) -> None:
        if not self.temperature > 0:
            raise ThermwitError(f"temperature must be positive, got {self.temperature}")
        if not self.k_b > 0:
            raise ThermwitError(f"k_b must be positive, got {self.k_b}")

    @property
    def kt(self) -> float:
        return self.temperature * self.k_b


@dataclass(frozen=True)
class PopulationProfile:
    """Per-level Boltzmann weights of a spectrum at one temperature.

    ``per_state[j]`` is the population of a single state in level j;
    ``aggregated[j]`` multiplies in the degeneracy and sums to one.
    """

    log_z: float
    per_state: np.ndarray
    aggregated: np.ndarray

    @property
    def ground_population(self) -> float:
        return float(self.per_state[0])


def _logsumexp(a: np.ndarray) -> float:
    m = float(np.max(a))
    return m + math.log(float(np.sum(np.exp(a - m))))


def _shifted_log_terms(s: Spectrum, kt: float) -> np.ndarray:
    e = s.energy_array()
    return s.log_degeneracy_array() - (e - e[0]) / kt


def log_partition_function(s: Spectrum, t: ThermalPoint) -> float:
    """log Z = -E0/kT + log sum_j g_j exp(-(E_j - E0)/kT)."""
    return -s.ground_energy / t.kt + _logsumexp(_shifted_log_terms(s, t.kt))


def partition_function(s: Spectrum, t: ThermalPoint) -> float:
    """Z itself; overflows to inf only when log Z exceeds float range."""
    log_z = log_partition_function(s, t)
    try:
        return math.exp(log_z)
    except OverflowError:
        return math.inf


def population_profile(s: Spectrum, t: ThermalPoint) -> PopulationProfile:
    terms = _shifted_log_terms(s, t.kt)
    log_z0 = _logsumexp(terms)
    e = s.energy_array()
    per_state = np.exp(-(e - e[0]) / t.kt - log_z0)
    aggregated = np.exp(terms - log_z0)
    return PopulationProfile(
        log_z=log_z0 - s.ground_energy / t.kt,
        per_state=per_state,
        aggregated=aggregated,
    )


def population(s: Spectrum, t: ThermalPoint, level_index: int = 0) -> float:
    """Population e^{-E_j/kT} / Z of a single state in level ``level_index``."""
    if not 0 <= level_index < s.n_levels:
        raise IndexOutOfRange(f"level {level_index} outside 0..{s.n_levels - 1}")
    return float(population_profile(s, t).per_state[level_index])


def thermal_density_matrix(h: np.ndarray, t: ThermalPoint) -> np.ndarray:
    """exp(-H/kT) / Z as a dense matrix, via the eigensystem of H."""
    eig = hermitian_eigendecompose(h)
    w = eig.eigenvalues
    p = np.exp(-(w - w[0]) / t.kt)
    p /= p.sum()
    return (eig.eigenvectors * p) @ eig.eigenvectors.conj().T


def relative_entropy_ground_to_thermal(s: Spectrum, t: ThermalPoint) -> float:
    """Relative entropy (bits) between the pure ground state and the Gibbs state.

    For a nondegenerate ground level this is exactly -log2 p0, with p0 the
    ground-state population; it needs a unique ground state to be meaningful.
    """
    if s.degeneracies[0] != 1:
        raise DegenerateGround(
            f"ground level carries degeneracy {s.degeneracies[0]}; need 1"
        )
    log_z0 = _logsumexp(_shifted_log_terms(s, t.kt))
    return log_z0 / LN2


def log_partition_function_alpha_closed(p: ToySpectrumParams, t: ThermalPoint) -> float:
    """Exact finite sum log Z = -e0/kT + log(1 + sum_m e^{-m^alpha delta/kT})."""
    m = np.arange(1, p.n_levels, dtype=float)
    terms = -np.power(m, p.alpha) * p.delta / t.kt
    # log1p of the summed tail keeps accuracy when every term underflows the
    # ground contribution.
    mx = float(np.max(terms))
    tail = math.exp(mx) * float(np.sum(np.exp(terms - mx)))
    return -p.e0 / t.kt + math.log1p(tail)


def partition_function_alpha_closed(p: ToySpectrumParams, t: ThermalPoint) -> float:
    try:
        return math.exp(log_partition_function_alpha_closed(p, t))
    except OverflowError:
        return math.inf


def log_partition_function_alpha_gamma(p: ToySpectrumParams, t: ThermalPoint) -> float:
    """Continuum approximation of the ladder sum by a Gamma-function integral.

    Replacing sum_m e^{-m^alpha delta/kT} with the integral over m gives
    (Gamma(1/alpha) / alpha) * (kT/delta)^{1/alpha}; good once kT is several
    deltas, and asymptotically exact as kT/delta grows.
    """
    if p.alpha == 0.0:
        raise AlphaZero("Gamma-integral form undefined at alpha = 0")
    inv = 1.0 / p.alpha
    return (
        -p.e0 / t.kt
        + log_gamma(inv)
        - math.log(p.alpha)
        + inv * math.log(t.kt / p.delta)
    )


def partition_function_alpha_gamma(p: ToySpectrumParams, t: ThermalPoint) -> float:
    try:
        return math.exp(log_partition_function_alpha_gamma(p, t))
    except OverflowError:
        return math.inf


def log_stabilizer_partition_function(n: int, B: float, t: ThermalPoint) -> float:
    """Closed form log Z = n * (log(1 + e^{2B/kT}) - B/kT) for n generators."""
    if n < 1:
        raise ThermwitError(f"need n >= 1 generators, got {n}")
    if not B > 0:
        raise ThermwitError(f"field B must be positive, got {B}")
    x = 2.0 * B / t.kt
    return n * (float(np.logaddexp(0.0, x)) - 0.5 * x)


def stabilizer_partition_function(n: int, B: float, t: ThermalPoint) -> float:
    try:
        return math.exp(log_stabilizer_partition_function(n, B, t))
    except OverflowError:
        return math.inf
