"""Robustness bounds and reference entanglement quantities.

The witness consumes a single number per candidate state: 1 + R, either
exact (closed forms, bipartite Schmidt data) or a certified lower bound
derived from relative-entropy input. The diagnostics at the bottom
(concurrence, partial-transpose spectra, alternating-search overlap) are
cross-checks only; the alternating search in particular returns a plain
tuple because its output bounds the geometric measure from the wrong side
and must never be promoted into a RobustnessBound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    BadDimension,
    BadPartition,
    NegativeEntanglement,
    OddN,
    SeparableCase,
    ThermwitError,
)
from .numerics import hermitian_eigendecompose, kron, log_gamma, partial_transpose
from .systems import SIGMA_Y, PureState

_EXACT_DICKE_CUTOFF = 2000


class BoundKind(Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"


class BoundSource(Enum):
    CLOSED_FORM_DICKE = "closed_form_dicke"
    SINGLET_KNOWN = "singlet_known"
    BIPARTITE_PURE_SCHMIDT = "bipartite_pure_schmidt"
    RELATIVE_ENTROPY_INPUT = "relative_entropy_input"
    GEOMETRIC_INPUT = "geometric_input"


_EXACT_SOURCES = frozenset(
    {
        BoundSource.CLOSED_FORM_DICKE,
        BoundSource.SINGLET_KNOWN,
        BoundSource.BIPARTITE_PURE_SCHMIDT,
    }
)


@dataclass(frozen=True)
class RobustnessBound:
    """1 + R for a candidate ground state, with provenance.

    ``kind`` records whether the number is the exact robustness or a
    certified lower bound; substituting a smaller lower bound can only make
    the witness more conservative, never unsound.
    """

    one_plus_r: float
    kind: BoundKind
    source: BoundSource

    def __post_init__(self) -> None:
        if not self.one_plus_r >= 1.0:
            raise ThermwitError(f"1 + R must be >= 1, got {self.one_plus_r}")
        if self.kind is BoundKind.EXACT and self.source not in _EXACT_SOURCES:
            raise ThermwitError(f"source {self.source} cannot claim an exact bound")

    @property
    def threshold(self) -> float:
        """Population the ground state must exceed: 1 / (1 + R)."""
        return 1.0 / self.one_plus_r

    @property
    def relative_entropy_bits(self) -> float:
        return math.log2(self.one_plus_r)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering sites 0..n_sites-1.

    Blocks are stored as sorted tuples regardless of the input ordering.
    """

    blocks: tuple[tuple[int, ...], ...]
    n_sites: int

    def __post_init__(self) -> None:
        norm = tuple(tuple(sorted(int(i) for i in block)) for block in self.blocks)
        object.__setattr__(self, "blocks", norm)
        if len(norm) < 2:
            raise BadPartition("need at least two blocks")
        seen: set[int] = set()
        for block in norm:
            if not block:
                raise BadPartition("empty block")
            if len(set(block)) != len(block) or seen & set(block):
                raise BadPartition("blocks overlap")
            seen |= set(block)
        if seen != set(range(self.n_sites)):
            raise BadPartition(f"blocks must cover exactly sites 0..{self.n_sites - 1}")

    @classmethod
    def bipartition(cls, block: Sequence[int], n_sites: int) -> "Partition":
        a = tuple(sorted(int(i) for i in block))
        b = tuple(i for i in range(n_sites) if i not in set(a))
        return cls(blocks=(a, b), n_sites=n_sites)


def _bipartite_singular_values(psi: PureState, cut: Partition) -> np.ndarray:
    if len(cut.blocks) != 2 or cut.n_sites != psi.n_sites:
        raise BadPartition("need a two-block partition of the state's sites")
    a = list(cut.blocks[0])
    b = list(cut.blocks[1])
    tensor = psi.as_tensor().transpose(a + b)
    matrix = tensor.reshape(2 ** len(a), 2 ** len(b))
    return np.linalg.svd(matrix, compute_uv=False)


def schmidt_coefficients(psi: PureState, cut: Partition) -> np.ndarray:
    """Squared Schmidt coefficients across a bipartition, descending.

    These are the eigenvalues of the reduced state on the smaller block;
    they sum to one, and the state is a product across the cut iff the
    first one equals 1.
    """
    s = _bipartite_singular_values(psi, cut)
    lam = np.maximum(s, 0.0) ** 2
    total = lam.sum()
    if total > 0:
        lam = lam / total
    return np.sort(lam)[::-1]


def bipartite_pure_robustness(psi: PureState, cut: Partition) -> RobustnessBound:
    """Exact bipartite robustness of a pure state: (sum_i sqrt(lambda_i))^2."""
    s = _bipartite_singular_values(psi, cut)
    value = float(np.sum(np.maximum(s, 0.0)) ** 2)
    return RobustnessBound(
        one_plus_r=max(1.0, value),
        kind=BoundKind.EXACT,
        source=BoundSource.BIPARTITE_PURE_SCHMIDT,
    )


def singlet_robustness() -> RobustnessBound:
    """The two-qubit singlet has robustness R = 1 exactly."""
    return RobustnessBound(
        one_plus_r=2.0, kind=BoundKind.EXACT, source=BoundSource.SINGLET_KNOWN
    )


def dicke_robustness(n: int, k: int) -> RobustnessBound:
    """Closed-form 1 + R for the symmetric state with k excitations on n sites.

    1 + R = (1/C(n,k)) (n/k)^k (n/(n-k))^{n-k}. Small n goes through exact
    integer arithmetic; large n switches to log-Gamma evaluation.
    """
    if n < 2:
        raise ThermwitError(f"need n >= 2 sites, got {n}")
    if k < 0 or k > n:
        raise ThermwitError(f"excitation count {k} outside 0..{n}")
    if k == 0 or k == n:
        raise SeparableCase("product state: robustness 0 is not a witness input")
    if n <= _EXACT_DICKE_CUTOFF:
        value = float(Fraction(n**n, math.comb(n, k) * k**k * (n - k) ** (n - k)))
    else:
        log_c = log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0)
        value = math.exp(
            k * math.log(n / k) + (n - k) * math.log(n / (n - k)) - log_c
        )
    return RobustnessBound(
        one_plus_r=value, kind=BoundKind.EXACT, source=BoundSource.CLOSED_FORM_DICKE
    )


def dicke_overlap_closed(n: int, k: int) -> float:
    """Largest product-state overlap of the (n, k) symmetric state.

    The square of this overlap is exactly 1 / (1 + R), so the geometric and
    robustness routes agree for these states.
    """
    if n < 2 or k <= 0 or k >= n:
        raise ThermwitError(f"need n >= 2 and 0 < k < n, got n={n}, k={k}")
    return math.sqrt(math.comb(n, k) * (k / n) ** k * ((n - k) / n) ** (n - k))


def dicke_half_asymptotic(n: int) -> float:
    """Large-n growth sqrt(n) of 1 + R at half filling (n even)."""
    if n < 2:
        raise ThermwitError(f"need n >= 2, got {n}")
    if n % 2 != 0:
        raise OddN(f"half filling needs even n, got {n}")
    return math.sqrt(n)


def bound_from_relative_entropy(
    e_r: float, source: BoundSource = BoundSource.RELATIVE_ENTROPY_INPUT
) -> RobustnessBound:
    """Certified lower bound 1 + R >= 2^{e_r} from relative-entropy input.

    Also accepts geometric-measure input, which lower-bounds the relative
    entropy and therefore stays on the safe side of the chain.
    """
    if e_r < 0:
        raise NegativeEntanglement(f"entanglement input must be >= 0, got {e_r}")
    if source not in (BoundSource.RELATIVE_ENTROPY_INPUT, BoundSource.GEOMETRIC_INPUT):
        raise ThermwitError(f"source {source} is not an entanglement-input route")
    if e_r > 1000:
        raise ThermwitError(f"2^{e_r} not representable; rescale the input")
    return RobustnessBound(
        one_plus_r=2.0**e_r, kind=BoundKind.LOWER_BOUND, source=source
    )


def _validate_density_matrix(rho: np.ndarray, dim: int | None = None) -> np.ndarray:
    a = np.asarray(rho, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadDimension(f"expected a square matrix, got shape {a.shape}")
    if dim is not None and a.shape[0] != dim:
        raise BadDimension(f"expected dimension {dim}, got {a.shape[0]}")
    if float(np.max(np.abs(a - a.conj().T))) > 1e-9:
        raise BadDimension("density matrix is not Hermitian")
    if abs(float(np.trace(a).real) - 1.0) > 1e-9:
        raise BadDimension(f"trace {np.trace(a).real} deviates from 1")
    return a


_YY = kron(SIGMA_Y, SIGMA_Y)


def concurrence_signed(rho: np.ndarray) -> float:
    """mu1 - mu2 - mu3 - mu4 from the spin-flip spectrum of a two-qubit state.

    The concurrence is the positive part of this; the signed value is handy
    for root finding because it crosses zero where entanglement vanishes.
    """
    a = _validate_density_matrix(rho, dim=4)
    flipped = a @ _YY @ a.conj() @ _YY
    ev = np.linalg.eigvals(flipped)
    mu = np.sqrt(np.clip(ev.real, 0.0, None))
    mu = np.sort(mu)[::-1]
    return float(mu[0] - mu[1] - mu[2] - mu[3])


def concurrence_two_qubit(rho: np.ndarray) -> float:
    return max(0.0, concurrence_signed(rho))


def ppt_min_eigenvalue(
    rho: np.ndarray, local_dims: Sequence[int], subset: Sequence[int]
) -> float:
    """Smallest eigenvalue of the partial transpose; negative certifies
    entanglement across the cut."""
    a = _validate_density_matrix(rho)
    pt = partial_transpose(a, local_dims, subset)
    eig = hermitian_eigendecompose(pt)
    return float(eig.eigenvalues[0])


def random_density_matrix(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Hilbert-Schmidt-distributed random state: normalized G G^dagger."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def _random_unit_qubit(rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return v / np.linalg.norm(v)


def _als_single_run(
    tensor: np.ndarray,
    n: int,
    rng: np.random.Generator,
    tol: float,
    max_sweeps: int,
) -> tuple[float, list[float]]:
    vecs = [_random_unit_qubit(rng) for _ in range(n)]
    history: list[float] = []
    overlap = 0.0
    prev = -1.0
    for _ in range(max_sweeps):
        for site in range(n):
            args: list = [tensor, list(range(n))]
            for j in range(n):
                if j != site:
                    args.extend([vecs[j].conj(), [j]])
            c = np.einsum(*args, [site])
            nc = float(np.linalg.norm(c))
            if nc > 0.0:
                vecs[site] = c / nc
            overlap = nc
            history.append(overlap)
        if overlap - prev < tol:
            break
        prev = overlap
    return overlap, history


def geometric_measure_als(
    psi: PureState,
    restarts: int = 32,
    tol: float = 1e-12,
    max_sweeps: int = 500,
    seed: int = 0,
) -> tuple[float, float]:
    """Best product-state overlap found by alternating single-site updates.

    Returns (overlap_estimate, eg_upper) with eg_upper = -log2(overlap^2).
    Each restart only ever increases the overlap it reports, so the estimate
    is a lower bound on the true maximal overlap and eg_upper is an UPPER
    bound on the geometric measure. Upper bounds must not enter the witness,
    which is why this returns a bare tuple rather than a RobustnessBound.
    """
    if restarts < 1:
        raise ThermwitError(f"need at least one restart, got {restarts}")
    rng = np.random.default_rng(seed)
    tensor = psi.as_tensor()
    best = 0.0
    for _ in range(restarts):
        overlap, _ = _als_single_run(tensor, psi.n_sites, rng, tol, max_sweeps)
        best = max(best, overlap)
    best = min(best, 1.0)
    eg_upper = -2.0 * math.log2(best) if best > 0 else math.inf
    return best, max(0.0, eg_upper)


def als_sweep_overlaps(
    psi: PureState, seed: int = 0, tol: float = 0.0, max_sweeps: int = 100
) -> np.ndarray:
    """Overlap after every site update of a single alternating-search run."""
    rng = np.random.default_rng(seed)
    _, history = _als_single_run(psi.as_tensor(), psi.n_sites, rng, tol, max_sweeps)
    return np.array(history)
