"""Fourier block-diagonalization of the cycle walk and its closed-form spectrum.

The one-step operator of a k-cycle walk is block circulant with 2x2 blocks,
so conjugating with kron(F_k, F_2) collapses it into k independent 2x2
unitaries.  Revival detection and special-state construction both read the
spectrum off those blocks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .walk import CoinParams, WalkOperator

__all__ = [
    "BLOCK_RESIDUAL_TOL",
    "BlockCirculantVector",
    "BlockDiagonalForm",
    "BlockStructureError",
    "block_diagonalize",
    "block_formula",
    "circulant_vector",
    "eigenphase_power",
    "eigenvalues_closed_form",
    "fourier_matrix",
    "full_spectrum",
    "phase_multiset_distance",
    "principal_phase",
    "walk_fourier",
]

TWO_PI = 2.0 * math.pi

BLOCK_RESIDUAL_TOL = 1e-10


class BlockStructureError(RuntimeError):
    """The operator did not reduce to the expected block structure.

    This signals a construction bug somewhere upstream, not bad user input.
    """


def fourier_matrix(m: int) -> np.ndarray:
    """Unitary Fourier matrix with entries exp(2*pi*i*j*l/m)/sqrt(m)."""
    if m < 1:
        raise ValueError(f"size must be positive, got {m}")
    idx = np.arange(m)
    return np.exp(2j * math.pi / m * np.outer(idx, idx)) / math.sqrt(m)


def walk_fourier(k: int) -> np.ndarray:
    """kron(position Fourier, coin Fourier): block-diagonalizes a k-cycle step."""
    return np.kron(fourier_matrix(k), fourier_matrix(2))


def principal_phase(values) -> np.ndarray:
    """Phases folded into [0, 2*pi)."""
    return np.mod(np.angle(values), TWO_PI)


@dataclass(frozen=True)
class BlockCirculantVector:
    """First block row of a block-circulant matrix; entry j is the block at offset j."""

    k: int
    blocks: tuple


def circulant_vector(op: WalkOperator) -> BlockCirculantVector:
    """Extract the defining block row of a step operator, checking circulant structure."""
    u = op.matrix
    k = op.k
    blocks = []
    for j in range(k):
        block = np.array(u[0:2, 2 * j : 2 * j + 2])
        block.setflags(write=False)
        blocks.append(block)
    for m in range(k):
        for n in range(k):
            expected = blocks[(n - m) % k]
            got = u[2 * m : 2 * m + 2, 2 * n : 2 * n + 2]
            if np.max(np.abs(got - expected)) > 1e-12:
                raise BlockStructureError(
                    f"operator is not block circulant at block ({m}, {n})"
                )
    return BlockCirculantVector(k=k, blocks=tuple(blocks))


@dataclass(frozen=True)
class BlockDiagonalForm:
    """The k 2x2 diagonal blocks of F U F^dagger plus each block's eigenpairs.

    Eigenvalues are sorted by principal phase within each block;
    eigenvectors[l][:, j] belongs to eigenvalues[l, j].
    """

    k: int
    blocks: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _sorted_block_eig(block: np.ndarray):
    values, vectors = np.linalg.eig(block)
    order = np.argsort(principal_phase(values))
    return values[order], vectors[:, order]


def block_diagonalize(op: WalkOperator) -> BlockDiagonalForm:
    """Conjugate the step operator with kron(F_k, F_2) and collect the 2x2 blocks.

    Raises BlockStructureError when the off-block residual exceeds
    BLOCK_RESIDUAL_TOL, which can only happen if the operator was built
    inconsistently with the circulant layout.
    """
    k = op.k
    f = walk_fourier(k)
    d = f @ op.matrix @ f.conj().T
    mask = np.ones(d.shape, dtype=bool)
    for l in range(k):
        mask[2 * l : 2 * l + 2, 2 * l : 2 * l + 2] = False
    residual = float(np.max(np.abs(d[mask]))) if k > 1 else 0.0
    if residual > BLOCK_RESIDUAL_TOL:
        raise BlockStructureError(
            f"off-block residual {residual:.3e} exceeds {BLOCK_RESIDUAL_TOL:.1e}"
        )
    blocks = np.stack([d[2 * l : 2 * l + 2, 2 * l : 2 * l + 2] for l in range(k)])
    eigenvalues = np.empty((k, 2), dtype=np.complex128)
    eigenvectors = np.empty((k, 2, 2), dtype=np.complex128)
    for l in range(k):
        eigenvalues[l], eigenvectors[l] = _sorted_block_eig(blocks[l])
    for arr in (blocks, eigenvalues, eigenvectors):
        arr.setflags(write=False)
    return BlockDiagonalForm(
        k=k, blocks=blocks, eigenvalues=eigenvalues, eigenvectors=eigenvectors
    )


def block_formula(k: int, l: int, params: CoinParams) -> np.ndarray:
    """Closed form of the l-th 2x2 diagonal block of F U F^dagger."""
    if not 0 <= l < k:
        raise ValueError(f"block index {l} out of range for k={k}")
    w = cmath.exp(-2j * math.pi * l / k)
    wc = cmath.exp(2j * math.pi * l / k)
    ea = cmath.exp(1j * params.alpha)
    eb = cmath.exp(1j * params.beta)
    ed = cmath.exp(1j * (params.alpha + params.beta))
    q = math.sqrt(1.0 - params.rho)
    r = math.sqrt(params.rho)
    return 0.5 * np.array(
        [
            [
                (w * ea + wc * eb) * q + (w - wc * ed) * r,
                (-w * ea + wc * eb) * q + (w + wc * ed) * r,
            ],
            [
                (w * ea - wc * eb) * q + (w + wc * ed) * r,
                (-w * ea - wc * eb) * q + (w - wc * ed) * r,
            ],
        ],
        dtype=np.complex128,
    )


def eigenvalues_closed_form(
    k: int, l: int, params: CoinParams
) -> tuple[complex, complex]:
    """Eigenvalue pair of block l, sorted by principal phase.

    The unordered pair is insensitive to the branch of the square root
    (flipping the root's sign swaps the two values), so the principal
    branch is used throughout; the det/trace identities pin the pair.
    """
    if not 0 <= l < k:
        raise ValueError(f"block index {l} out of range for k={k}")
    delta = params.delta
    w = cmath.exp(-2j * math.pi * l / k)
    wide = cmath.exp(1j * (4.0 * math.pi * l / k + delta))
    half_angle = 2.0 * math.pi * l / k + 0.5 * delta
    root = cmath.sqrt(wide * (1.0 - params.rho * math.sin(half_angle) ** 2))
    trace_part = (1.0 - wide) * math.sqrt(params.rho)
    pair = (0.5 * w * (trace_part + 2.0 * root), 0.5 * w * (trace_part - 2.0 * root))
    return tuple(sorted(pair, key=lambda z: cmath.phase(z) % TWO_PI))


def full_spectrum(k: int, params: CoinParams) -> np.ndarray:
    """All 2k eigenvalues of the step operator, block-major.

    Entries [2l, 2l+1] are block l's phase-sorted pair from the closed form.
    """
    if k < 2:
        raise ValueError(f"cycle length must be at least 2, got {k}")
    out = np.empty(2 * k, dtype=np.complex128)
    for l in range(k):
        out[2 * l], out[2 * l + 1] = eigenvalues_closed_form(k, l, params)
    return out


def eigenphase_power(op: WalkOperator, n: int) -> np.ndarray:
    """U^n assembled from block eigenphases; cost is independent of n.

    Eigenvalues are powered as exp(i*n*phase), so the result stays exactly
    on the unit circle no matter how large n gets.
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"power must be nonnegative, got {n}")
    k = op.k
    f = walk_fourier(k)
    bd = block_diagonalize(op)
    powered = np.zeros((2 * k, 2 * k), dtype=np.complex128)
    for l in range(k):
        values = bd.eigenvalues[l]
        vectors = bd.eigenvectors[l]
        powered_values = np.exp(1j * n * np.angle(values))
        powered[2 * l : 2 * l + 2, 2 * l : 2 * l + 2] = (
            vectors @ np.diag(powered_values) @ np.linalg.inv(vectors)
        )
    return f.conj().T @ powered @ f


def phase_multiset_distance(a, b) -> float:
    """Largest gap in a greedy circular matching of two unit-modulus multisets.

    Both inputs must have equal length; each element of `a` is matched to
    (and consumes) its nearest remaining element of `b`, with distance
    measured along the unit circle.
    """
    a = list(np.asarray(a, dtype=np.complex128))
    b = list(np.asarray(b, dtype=np.complex128))
    if len(a) != len(b):
        raise ValueError("multisets must have equal size")
    worst = 0.0
    for z in a:
        gaps = [abs(cmath.phase(z * w.conjugate())) for w in b]
        best = int(np.argmin(gaps))
        worst = max(worst, gaps[best])
        b.pop(best)
    return worst
