"""Haar-random unitaries from a seedable counter-based generator (Philox)."""

import numpy as np
from scipy.linalg import qr


def make_generator(seed: int | np.random.SeedSequence) -> np.random.Generator:
    """numpy Generator over the Philox bit generator; the same seed gives the same stream."""
    return np.random.Generator(np.random.Philox(seed))


def haar_unitary(
    dim: int, seed: int | None = None, rng: np.random.Generator | None = None
) -> np.ndarray:
    """Haar-distributed U(dim) matrix.

    QR of a complex Ginibre matrix with the diagonal phases of R removed.

    Pass either a seed or an existing generator.
    """
    if dim < 1:
        raise ValueError(f"Dimension must be >= 1, got {dim}")
    if rng is None:
        if seed is None:
            raise ValueError("Either seed or rng is required")
        rng = make_generator(seed)
    ginibre = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = qr(ginibre)
    diagonal = np.diag(r)
    phases = diagonal / np.abs(diagonal)
    return q * phases[None, :]
