"""
Cascade-algorithm convergence and scaling-function synthesis.

The convergence test looks at the transition operator ``T = (down 2) 2 H H^T``
of a lowpass filter of degree m. Row 2i of ``2 H H^T`` is the filter
autocorrelation ``a[d] = 2 sum_n h[n] h[n-d]`` shifted by 2i, so

    T[i, j] = a[2i - j],    i, j = -(m-1), ..., m-1,

and the centered block is (2m-1) x (2m-1). The cascade converges in L2 when
that block has a simple eigenvalue 1 and every other eigenvalue lies strictly
inside the unit circle ("condition E").
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
import math

import numpy as np

from . import _kernels
from .filterbank import build_bank
from .filters import FilterTaps, custom_taps, make_filter

DEFAULT_TOL = 1e-9
DEFAULT_SWEEP_BOUND = 255
DEFAULT_MAX_ITERATIONS = 20
MAX_CASCADE_SAMPLES = 1 << 24


class EigenSolverError(RuntimeError):
    """The dense eigenvalue iteration failed to converge."""


def _lcm(a, b):
    return a * b // math.gcd(a, b)


@dataclass(frozen=True)
class TransitionMatrix:
    """Exact rational matrix stored as integer numerators over one denominator."""

    numerators: np.ndarray
    denominator: int
    degree: int

    @property
    def size(self):
        return self.numerators.shape[0]

    def entries(self):
        """Object array of reduced :class:`Fraction` entries."""
        out = np.empty(self.numerators.shape, dtype=object)
        for idx, v in np.ndenumerate(self.numerators):
            out[idx] = Fraction(int(v), self.denominator)
        return out

    def to_float(self):
        return self.numerators.astype(np.float64) / float(self.denominator)

    def integer_form(self):
        """Smallest positive ``scale`` and integer matrix M with ``T = M / scale``."""
        g = reduce(math.gcd, (int(v) for v in self.numerators.flat), self.denominator)
        return self.numerators // g, self.denominator // g

    def __eq__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return (
            self.numerators.shape == other.numerators.shape
            and np.array_equal(
                self.numerators * other.denominator, other.numerators * self.denominator
            )
        )

    __hash__ = None


def _as_taps(prototype):
    return prototype if isinstance(prototype, FilterTaps) else custom_taps(prototype)


def autocorrelation_numerators(prototype):
    """Integer numerators and denominator of ``a[d] = 2 sum_n p[n] p[n-d]``, d = -m..m."""
    p = _as_taps(prototype).coefficients
    q = reduce(_lcm, (c.denominator for c in p), 1)
    P = [int(c * q) for c in p]
    m = len(P) - 1
    a = [2 * sum(P[n] * P[n - d] for n in range(max(d, 0), min(m, m + d) + 1))
         for d in range(-m, m + 1)]
    return a, q * q


def transition_matrix(prototype):
    """Centered (2m-1) x (2m-1) block of ``(down 2) 2 H H^T``, exact."""
    taps = _as_taps(prototype)
    m = taps.degree
    if 2 * m - 1 < 1:
        raise ValueError("transition matrix needs a filter of degree >= 1")
    a, denom = autocorrelation_numerators(taps)
    n = 2 * m - 1
    big = max(abs(v) for v in a) > 2**62 // max(n, 1)
    nums = np.zeros((n, n), dtype=object if big else np.int64)
    for i in range(-(m - 1), m):
        for j in range(-(m - 1), m):
            d = 2 * i - j
            if -m <= d <= m:
                nums[i + m - 1, j + m - 1] = a[d + m]
    return TransitionMatrix(nums, denom, m)


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: np.ndarray
    unit_eigenvalue_multiplicity: int
    satisfies_condition_e: bool
    tolerance: float
    spectral_radius: float

    def subdominant_modulus(self):
        """Largest modulus among eigenvalues other than one copy of the unit eigenvalue."""
        ev = list(self.eigenvalues)
        if ev:
            k = int(np.argmin(np.abs(np.asarray(ev) - 1.0)))
            ev.pop(k)
        return max((abs(v) for v in ev), default=0.0)


def _sorted_eigenvalues(ev):
    ev = np.asarray(ev, dtype=np.complex128)
    order = np.lexsort((-np.round(ev.imag, 12), -np.round(ev.real, 12), -np.round(np.abs(ev), 12)))
    return ev[order]


def spectrum(T, tol=DEFAULT_TOL):
    """Eigenvalues of ``T`` and the condition-E verdict.

    Eigenvalues come from LAPACK's nonsymmetric driver (balancing, Hessenberg
    reduction, shifted QR). An eigenvalue counts as the unit eigenvalue when
    ``|lam - 1| <= tol``; condition E holds iff there is exactly one such
    eigenvalue and every other one has ``|lam| < 1 - tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = T.to_float() if isinstance(T, TransitionMatrix) else np.asarray(T, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise EigenSolverError("matrix has non-finite entries")
    try:
        ev = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigenvalue iteration did not converge: {exc}") from exc
    ev = _sorted_eigenvalues(ev)
    mod = np.abs(ev)
    unit = np.abs(ev - 1.0) <= tol
    n_unit = int(unit.sum())
    others_inside = bool(np.all(mod[~unit] < 1.0 - tol))
    return SpectrumReport(
        eigenvalues=ev,
        unit_eigenvalue_multiplicity=n_unit,
        satisfies_condition_e=(n_unit == 1 and others_inside),
        tolerance=tol,
        spectral_radius=float(mod.max()) if len(mod) else 0.0,
    )


@dataclass(frozen=True)
class MarkovReport:
    is_stochastic: bool
    column_sums: tuple
    is_irreducible: bool
    is_aperiodic: bool
    period: int
    integer_scale: int
    scaled_column_sums: tuple
    has_self_loops: bool


def _bfs_levels(adj, start=0):
    n = len(adj)
    level = [-1] * n
    level[start] = 0
    queue = [start]
    for u in queue:
        for v in adj[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def markov_analysis(T):
    """Column-stochasticity, irreducibility and aperiodicity of ``T``.

    Column sums are exact. The transition graph has an edge between states
    j and i whenever ``T[i, j] != 0``; the matrix is irreducible iff that
    graph is strongly connected, and the period is the gcd of
    ``level[u] + 1 - level[v]`` over all edges of a BFS from state 0.
    """
    nums = T.numerators
    n = T.size
    col_num = [int(sum(int(v) for v in nums[:, j])) for j in range(n)]
    column_sums = tuple(Fraction(s, T.denominator) for s in col_num)
    nonneg = all(int(v) >= 0 for v in nums.flat)
    stochastic = nonneg and all(s == 1 for s in column_sums)

    nz = nums != 0
    out_edges = [list(np.flatnonzero(nz[:, j])) for j in range(n)]  # j -> i
    in_edges = [list(np.flatnonzero(nz[i, :])) for i in range(n)]
    fwd = _bfs_levels(out_edges)
    bwd = _bfs_levels(in_edges)
    irreducible = all(v >= 0 for v in fwd) and all(v >= 0 for v in bwd)

    period = 0
    for u in range(n):
        if fwd[u] < 0:
            continue
        for v in out_edges[u]:
            if fwd[v] >= 0:
                period = math.gcd(period, abs(fwd[u] + 1 - fwd[v]))
    integer, scale = T.integer_form()
    return MarkovReport(
        is_stochastic=stochastic,
        column_sums=column_sums,
        is_irreducible=irreducible,
        is_aperiodic=irreducible and period == 1,
        period=period,
        integer_scale=int(scale),
        scaled_column_sums=tuple(int(sum(int(v) for v in integer[:, j])) for j in range(n)),
        has_self_loops=bool(np.all(np.diag(nz))),
    )


def _condition_e_for(kind, m, tol):
    try:
        return spectrum(transition_matrix(make_filter(kind, m)), tol).satisfies_condition_e
    except EigenSolverError as exc:
        raise EigenSolverError(f"m={m}: {exc}") from exc


def condition_e_sweep(kind, max_m, bound=DEFAULT_SWEEP_BOUND, tol=DEFAULT_TOL, jobs=1):
    """Condition-E verdict for every odd ``m <= max_m``, in increasing m.

    Parameters
    ----------
    kind : {1, 2}
        First- or second-kind prototype.
    max_m : int
        Largest order swept; must not exceed ``bound``.
    jobs : int
        Worker threads. The result order never depends on it.
    """
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    if max_m > bound:
        raise ValueError(f"max_m={max_m} exceeds the configured bound {bound}")
    orders = list(range(1, max_m + 1, 2))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(lambda m: _condition_e_for(kind, m, tol), orders))
    else:
        verdicts = [_condition_e_for(kind, m, tol) for m in orders]
    return list(zip(orders, verdicts))


@dataclass
class CascadeResult:
    """Samples of phi and psi on ``t = n 2^-i``, ``0 <= n <= m 2^i``.

    ``successive_l2_distances[j]`` compares iterate j + 1 with iterate j as
    piecewise-constant functions; ``riemann_sums[j]`` is the integral of
    iterate j (entry 0 is the starting box).
    """

    t: np.ndarray
    phi_samples: np.ndarray
    psi_samples: np.ndarray
    iterations: int
    successive_l2_distances: list = field(default_factory=list)
    riemann_sums: list = field(default_factory=list)


def _pad(c, length):
    out = np.zeros(length)
    out[: len(c)] = c
    return out


def cascade_iterate(prototype, iterations, max_iterations=DEFAULT_MAX_ITERATIONS):
    """Iterate ``phi <- sum_n 2 h[n] phi(2t - n)`` from the unit box.

    The box on ``[0, 1)`` is the unit sample on the integer grid; each pass
    upsamples by 2 and convolves with ``2 h``. The wavelet uses the same
    two-scale step with the synthesis highpass ``g_r`` (times sqrt(2)) applied
    to the next-to-last iterate, so phi and psi share one grid.
    """
    taps = _as_taps(prototype)
    m = taps.degree
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    if iterations > max_iterations or m * 2**iterations + 1 > MAX_CASCADE_SAMPLES:
        raise ValueError(
            f"{iterations} iterations at degree {m} exceed the memory bound "
            f"(max_iterations={max_iterations}, max samples={MAX_CASCADE_SAMPLES})"
        )
    two_h = 2.0 * taps.as_float()
    bank = build_bank(taps)
    two_g = 2.0 * np.array([float(c) for c in bank.g_r_unit])

    c = np.array([1.0])
    prev_full = _pad(c, m + 1)
    sums = [float(c.sum())]
    dists = []
    prev_c = c
    for i in range(1, iterations + 1):
        prev_c = c
        c = _kernels.upsample_convolve(c, two_h)
        full = _pad(c, m * 2**i + 1)
        step = 2.0**-i
        sums.append(float(full.sum() * step))
        coarse = np.repeat(prev_full[:-1], 2)
        dists.append(float(np.sqrt(np.sum((full[:-1] - coarse) ** 2) * step)))
        prev_full = full
    psi = _pad(_kernels.upsample_convolve(prev_c, two_g), m * 2**iterations + 1)
    t = np.arange(m * 2**iterations + 1) * 2.0**-iterations
    return CascadeResult(t, prev_full, psi, iterations, dists, sums)

