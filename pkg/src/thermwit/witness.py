"""The ground-population witness and its closed-form transition temperatures.

A thermal state is certifiably entangled once the population of an entangled
eigenstate exceeds 1/(1+R) for that state's robustness R (or any certified
lower bound on it). The condition is one-sided: failing it proves nothing.

Everything here works on per-level populations of a Spectrum; the closed
forms at the bottom specialize the crossing temperature to the example
systems and are cross-checked against the generic bisection path in tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .entanglement import BoundKind, RobustnessBound, concurrence_signed
from .errors import (
    AlphaOutOfRange,
    DegenerateGround,
    EmptyGrid,
    IndexOutOfRange,
    NonpositiveEntanglement,
    NoSignChange,
    OddN,
    RatioOutOfRange,
    ThermwitError,
    ThresholdUnreachable,
)
from .numerics import bisect, log_gamma
from .systems import DimerParams, Spectrum, build_dimer_hamiltonian
from .thermal import LN2, ThermalPoint, population, thermal_density_matrix

TRANSITION_REL_TOL = 1e-10
BRACKET_GAP_FACTOR = 1e-6
BRACKET_SPREAD_FACTOR = 1e4
DEFAULT_GRID_POINTS = 512


@dataclass(frozen=True)
class WitnessVerdict:
    """Outcome of the population-threshold comparison at one temperature."""

    temperature: float
    population: float
    threshold: float
    satisfied: bool
    bound_kind: BoundKind
    level_index: int = 0


@dataclass(frozen=True)
class TransitionResult:
    """Crossing temperature of the ground-level condition, if any.

    ``t_trans`` is None when the condition fails at every temperature in the
    bracket (reported as not-detected: the witness is silent, not a proof of
    separability). When detected, the condition holds strictly below
    ``t_trans`` and fails strictly above it.
    """

    t_trans: float | None
    bracket: tuple[float, float]
    bound_kind: BoundKind

    @property
    def detected(self) -> bool:
        return self.t_trans is not None


def evaluate_condition(
    s: Spectrum,
    t: ThermalPoint,
    bound: RobustnessBound,
    level_index: int = 0,
) -> WitnessVerdict:
    """Compare the per-state population of one level against 1/(1+R)."""
    p = population(s, t, level_index)
    return WitnessVerdict(
        temperature=t.temperature,
        population=p,
        threshold=bound.threshold,
        satisfied=p > bound.threshold,
        bound_kind=bound.kind,
        level_index=level_index,
    )


def _transition_bracket(s: Spectrum) -> tuple[float, float]:
    return BRACKET_GAP_FACTOR * s.gap, BRACKET_SPREAD_FACTOR * s.spread


def transition_temperature(
    s: Spectrum, bound: RobustnessBound, k_b: float = 1.0
) -> TransitionResult:
    """Temperature where the ground-level population crosses 1/(1+R).

    The ground population decreases monotonically with temperature, so one
    bisection on [1e-6 * gap, 1e4 * spread] (in kT) settles it. Requires a
    nondegenerate ground level. A trivial bound (R = 0) or one the spectrum
    never reaches returns not-detected; a threshold below the infinite-
    temperature population 1/dim would hold everywhere and raises instead.
    """
    if s.n_levels < 2:
        raise ThermwitError("transition needs at least two levels")
    if s.degeneracies[0] != 1:
        raise DegenerateGround(
            f"ground level carries degeneracy {s.degeneracies[0]}; need 1"
        )
    lo, hi = _transition_bracket(s)
    threshold = bound.threshold

    def f(kt: float) -> float:
        return population(s, ThermalPoint(kt), 0) - threshold

    bracket = (lo / k_b, hi / k_b)
    if f(lo) <= 0.0:
        return TransitionResult(t_trans=None, bracket=bracket, bound_kind=bound.kind)
    if f(hi) >= 0.0:
        raise NoSignChange(
            "condition holds across the whole bracket; 1/(1+R) is at or below "
            "the infinite-temperature population"
        )
    kt_star = bisect(f, lo, hi, tol=TRANSITION_REL_TOL)
    return TransitionResult(
        t_trans=kt_star / k_b, bracket=bracket, bound_kind=bound.kind
    )


def default_temperature_grid(
    s: Spectrum, count: int = DEFAULT_GRID_POINTS, k_b: float = 1.0
) -> np.ndarray:
    """Log-spaced temperatures spanning [1e-6, 1e4] spectral spreads."""
    return np.geomspace(
        BRACKET_GAP_FACTOR * s.spread / k_b, BRACKET_SPREAD_FACTOR * s.spread / k_b, count
    )


def satisfying_intervals(
    s: Spectrum,
    bound: RobustnessBound,
    grid: Sequence[float],
    level_index: int = 0,
    k_b: float = 1.0,
) -> list[tuple[float, float]]:
    """Temperature intervals (within the grid span) where the condition holds.

    The grid provides the scan resolution; each sign change between adjacent
    grid points is refined by bisection. Excited-level populations rise and
    fall, so several disjoint intervals can come back (the ground level gives
    at most one, anchored at the low end).
    """
    temps = np.asarray(list(grid), dtype=float)
    if temps.size < 2:
        raise EmptyGrid(f"grid needs at least 2 points, got {temps.size}")
    if not np.all(np.diff(temps) > 0):
        raise ThermwitError("grid temperatures must be strictly ascending")
    if not 0 <= level_index < s.n_levels:
        raise IndexOutOfRange(f"level {level_index} outside 0..{s.n_levels - 1}")
    threshold = bound.threshold

    def h(temp: float) -> float:
        return population(s, ThermalPoint(temp, k_b), level_index) - threshold

    vals = np.array([h(temp) for temp in temps])
    sat = vals > 0.0
    intervals: list[tuple[float, float]] = []
    open_start = float(temps[0]) if sat[0] else None
    for i in range(temps.size - 1):
        if sat[i] == sat[i + 1]:
            continue
        crossing = bisect(h, float(temps[i]), float(temps[i + 1]), tol=TRANSITION_REL_TOL)
        if sat[i]:
            intervals.append((open_start, crossing))  # type: ignore[arg-type]
            open_start = None
        else:
            open_start = crossing
    if open_start is not None:
        intervals.append((open_start, float(temps[-1])))
    return intervals


# --- spin-dimer closed forms -------------------------------------------------


def dimer_condition_margin(B: float, J: float, t: ThermalPoint) -> float:
    """Log-domain margin of the dimer condition; positive means satisfied.

    The singlet-ground condition e^{-4J/kT} (e^{B/kT} + e^{-B/kT} + 1) < 1
    becomes 4J/kT - log(e^{B/kT} + e^{-B/kT} + 1) > 0, which is safe to
    evaluate at any temperature.
    """
    if B < 0 or J < 0:
        raise ThermwitError("dimer condition needs B >= 0 and J >= 0")
    kt = t.kt
    x = B / kt
    log_field_sum = float(np.logaddexp(np.logaddexp(x, -x), 0.0))
    return 4.0 * J / kt - log_field_sum


def dimer_condition(B: float, J: float, t: ThermalPoint) -> bool:
    """Singlet-population witness condition for the exchange dimer in a field."""
    return dimer_condition_margin(B, J, t) > 0.0


def concurrence_vanishing_temperature(
    p: DimerParams,
    t_lo: float | None = None,
    t_hi: float | None = None,
    k_b: float = 1.0,
) -> float:
    """Temperature where the dimer thermal state's concurrence hits zero.

    Independent diagnostic: runs on the explicit 4x4 Gibbs state via the
    spin-flip spectrum, with no input from the witness path. The default
    bracket is a window around 4J / ln 3, where the zero sits for any field.
    """
    if not p.J > 0:
        raise ThermwitError("concurrence vanishes identically at J = 0")
    scale = 4.0 * p.J / (math.log(3.0) * k_b)
    lo = 0.2 * scale if t_lo is None else t_lo
    hi = 3.0 * scale if t_hi is None else t_hi
    h = build_dimer_hamiltonian(p)

    def f(temp: float) -> float:
        return concurrence_signed(thermal_density_matrix(h, ThermalPoint(temp, k_b)))

    return bisect(f, lo, hi, tol=TRANSITION_REL_TOL)


# --- power-law ladder closed forms -------------------------------------------


def toy_t0(n_levels: int, e_r: float, delta: float = 1.0) -> float:
    """Crossing temperature for the fully degenerate (alpha = 0) ladder.

    kT = delta / log((D-1) / (2^e_r - 1)). Once 2^e_r - 1 reaches D - 1 the
    threshold 2^{-e_r} is at or below the infinite-temperature population,
    the condition holds at every temperature, and there is no crossing.
    """
    if n_levels < 2:
        raise ThermwitError(f"need at least 2 levels, got {n_levels}")
    if not delta > 0:
        raise ThermwitError(f"delta must be positive, got {delta}")
    if not e_r > 0:
        raise NonpositiveEntanglement(f"need e_r > 0, got {e_r}")
    if e_r >= math.log2(n_levels):
        raise ThresholdUnreachable(
            f"2^{e_r} - 1 >= D - 1 = {n_levels - 1}: condition holds at all T"
        )
    return delta / (math.log(n_levels - 1) - math.log(math.expm1(e_r * LN2)))


class ToyT1(NamedTuple):
    exact: float
    low_t: float


def toy_t1(e_r: float, delta: float = 1.0) -> ToyT1:
    """Equally spaced ladder, infinite depth: exact crossing and low-T form.

    exact: kT = delta / log(2^e_r / (2^e_r - 1)); low_t: kT ~= delta * 2^e_r,
    the expansion of the same expression for large 2^e_r. The exact value
    always sits below the expansion.
    """
    if not delta > 0:
        raise ThermwitError(f"delta must be positive, got {delta}")
    if not e_r > 0:
        raise NonpositiveEntanglement(f"need e_r > 0, got {e_r}")
    if e_r > 900:
        raise ThermwitError(f"2^{e_r} not representable; rescale the input")
    x = 2.0**e_r
    exact = delta / (-math.log1p(-1.0 / x))
    return ToyT1(exact=exact, low_t=delta * x)


def toy_t_alpha(alpha: float, n: int, delta: float = 1.0) -> float:
    """Power-law ladder crossing for a half-filled symmetric ground state.

    Uses the sqrt(n) robustness growth and the Gamma-integral partition
    form: kT = delta * (alpha * sqrt(n) / Gamma(1/alpha))^alpha.
    """
    if not 0.0 < alpha <= 1.0:
        raise AlphaOutOfRange(f"alpha must lie in (0, 1], got {alpha}")
    if n < 2:
        raise ThermwitError(f"need n >= 2, got {n}")
    if n % 2 != 0:
        raise OddN(f"half filling needs even n, got {n}")
    if not delta > 0:
        raise ThermwitError(f"delta must be positive, got {delta}")
    log_val = alpha * (math.log(alpha) + 0.5 * math.log(n) - log_gamma(1.0 / alpha))
    return delta * math.exp(log_val)


def gapping_rule_min_gap(e_r: float) -> float:
    """Smallest gap (in kT = 1 units) keeping the witness open: 2^{-e_r}."""
    if e_r < 0:
        raise NonpositiveEntanglement(f"need e_r >= 0, got {e_r}")
    return 2.0**-e_r


# --- stabilizer closed forms --------------------------------------------------


def stabilizer_t_trans(n: int, B: float, e_r: float) -> float:
    """Crossing temperature kT = -2B / log(2^{e_r/n} - 1) for n generators.

    Depends on the entanglement only through the per-site ratio e_r / n,
    which must stay strictly inside (0, 1) for a finite crossing.
    """
    if n < 1:
        raise ThermwitError(f"need n >= 1, got {n}")
    if not B > 0:
        raise ThermwitError(f"field B must be positive, got {B}")
    ratio = e_r / n
    if not 0.0 < ratio < 1.0:
        raise RatioOutOfRange(f"e_r / n = {ratio} outside (0, 1)")
    return -2.0 * B / math.log(math.expm1(ratio * LN2))


def flip_probability_from_temperature(B: float, t: ThermalPoint) -> float:
    """Independent per-site flip probability matching the Gibbs weights.

    P = 1 / (1 + e^{2B/kT}): vanishes at zero temperature and saturates at
    1/2, mapping the thermal ensemble onto a local spin-flip noise channel.
    """
    if not B > 0:
        raise ThermwitError(f"field B must be positive, got {B}")
    return math.exp(-float(np.logaddexp(0.0, 2.0 * B / t.kt)))


def noise_threshold(e_r: float, n: int) -> float:
    """Largest flip probability the witness tolerates: P = 1 - 2^{-e_r/n}.

    Defined for 0 < e_r/n <= 1; at the top of that range it reaches 1/2,
    the infinite-temperature flip rate.
    """
    if n < 1:
        raise ThermwitError(f"need n >= 1, got {n}")
    ratio = e_r / n
    if not 0.0 < ratio <= 1.0:
        raise RatioOutOfRange(f"e_r / n = {ratio} outside (0, 1]")
    return -math.expm1(-ratio * LN2)
