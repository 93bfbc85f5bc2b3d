"""Monte-Carlo exploration of a unitary orbit.

Each trial conjugates diag(lambda) by a Haar unitary and takes the grid minimum of W.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy.linalg import expm

from spinwig.core.spin import HalfInteger, PhasePoint
from spinwig.core.states import Spectrum
from spinwig.kernel.spectrum import kernel_matrix, kernel_spectrum
from spinwig.orbits.haar import haar_unitary, make_generator
from spinwig.polytope.membership import orbit_min
from spinwig.wigner.grid import SphereGrid

logger = logging.getLogger(__name__)

POLISH_MAX_ITERATIONS = 2000


@dataclass
class OrbitSampleReport:
    trials: int
    seed: int
    empirical_min: float
    analytic_min: float
    worst_gap: float
    best_trial: int
    best_node: PhasePoint
    sampled_min: float
    polished_min: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "empirical_min": self.empirical_min,
            "analytic_min": self.analytic_min,
            "worst_gap": self.worst_gap,
            "best_trial": self.best_trial,
            "best_node": {"theta": self.best_node.theta, "phi": self.best_node.phi},
            "sampled_min": self.sampled_min,
            "polished_min": self.polished_min,
        }


def grid_kernels(j: HalfInteger, grid: SphereGrid) -> np.ndarray:
    """Kernel matrices at every grid node, shape (nodes, 2j+1, 2j+1)."""
    return np.stack([kernel_matrix(j, node, 0.0) for node in grid.nodes])


def _grid_values(rho: np.ndarray, kernels: np.ndarray) -> np.ndarray:
    # Tr[rho K_i] = sum_ab rho_ab (K_i)_ba
    return np.real(np.einsum("ab,iba->i", rho, kernels))


def _conjugate(spectrum: np.ndarray, unitary: np.ndarray) -> np.ndarray:
    return (unitary * spectrum[None, :]) @ unitary.conj().T


def _run_chunk(
    indices: range,
    children: list[np.random.SeedSequence],
    spectrum: np.ndarray,
    kernels: np.ndarray,
) -> tuple[float, int, int]:
    best = (math.inf, -1, -1)
    dim = len(spectrum)
    for trial in indices:
        unitary = haar_unitary(dim, rng=make_generator(children[trial]))
        values = _grid_values(_conjugate(spectrum, unitary), kernels)
        node = int(np.argmin(values))
        candidate = (float(values[node]), trial, node)
        if candidate < best:
            best = candidate
    return best


def _best_unitary(children: list[np.random.SeedSequence], trial: int, dim: int) -> np.ndarray:
    return haar_unitary(dim, rng=make_generator(children[trial]))


def polish_orbit_state(rho: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """Lower Tr[rho K] along the unitary orbit by double-bracket descent.

    Each step conjugates by V = exp(eps [rho, K]) with Armijo backtracking; the
    fixed points of the flow are the states commuting with K.
    """
    step = 1.0
    value = float(np.real(np.vdot(kernel, rho)))
    for iteration in range(POLISH_MAX_ITERATIONS):
        generator = rho @ kernel - kernel @ rho
        gradient_sq = float(np.real(np.vdot(generator, generator)))
        if gradient_sq < 1e-28:
            break
        for _ in range(40):
            v = expm(step * generator)
            trial = v @ rho @ v.conj().T
            trial_value = float(np.real(np.vdot(kernel, trial)))
            if trial_value <= value - 1e-4 * step * gradient_sq:
                break
            step /= 2
        else:
            logger.debug("Polishing stalled after %d iterations at %.3e", iteration, value)
            break
        improvement = value - trial_value
        rho, value = (trial + trial.conj().T) / 2, trial_value
        step = min(step * 2, 1e3)
        if improvement < 1e-16:
            break
    else:
        logger.debug("Polishing stopped at the iteration cap with W=%.12g", value)
    return rho


def orbit_sample_min(
    spectrum: Spectrum,
    trials: int,
    seed: int,
    grid: SphereGrid | None = None,
    threads: int = 1,
    polish: bool = True,
) -> OrbitSampleReport:
    """Minimum of W over grid nodes and Haar-random orbit states U diag(lambda) U^dagger.

    Trial t draws its unitary from child t of SeedSequence(seed), so the result
    does not depend on ``threads``. With ``polish`` the best sample is refined
    along the orbit at its minimizing node and ``empirical_min`` is the lower of
    the two values; ``sampled_min`` always holds the plain sampling result.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    j = spectrum.j
    if grid is None:
        grid = SphereGrid.for_spin(j)
    delta = kernel_spectrum(j, 0.0)
    analytic = orbit_min(spectrum, delta)
    kernels = grid_kernels(j, grid)
    lam = spectrum.as_array()
    children = np.random.SeedSequence(seed).spawn(trials)

    workers = max(1, min(threads, trials))
    size = math.ceil(trials / workers)
    chunks = [range(start, min(start + size, trials)) for start in range(0, trials, size)]
    if workers == 1:
        results = [_run_chunk(chunk, children, lam, kernels) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda chunk: _run_chunk(chunk, children, lam, kernels), chunks)
            )
    sampled, best_trial, best_node = min(results)
    logger.debug(
        "Sampled %d trials over %d nodes: min %.6g (trial %d), analytic %.6g",
        trials,
        grid.size,
        sampled,
        best_trial,
        analytic,
    )

    polished = None
    empirical = sampled
    if polish:
        unitary = _best_unitary(children, best_trial, len(lam))
        rho = polish_orbit_state(_conjugate(lam, unitary), kernels[best_node])
        polished = float(np.min(_grid_values(rho, kernels)))
        empirical = min(sampled, polished)
    if empirical < analytic - 1e-9:
        logger.warning("Sampled minimum %.12g undercuts the orbit bound %.12g", empirical, analytic)

    return OrbitSampleReport(
        trials=trials,
        seed=seed,
        empirical_min=empirical,
        analytic_min=analytic,
        worst_gap=empirical - analytic,
        best_trial=best_trial,
        best_node=grid.nodes[best_node],
        sampled_min=sampled,
        polished_min=polished,
    )
