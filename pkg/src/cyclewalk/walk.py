"""Coin, shift, and single-step operators for discrete-time quantum walks.

A walker on a k-cycle lives in the 2k-dimensional position (tensor) coin
space.  Vectors are flattened position-major with the coin index fastest:
basis state |i, s> sits at flat index 2*i + s.  Coin value s=0 ("up")
steps from i to i-1 (mod k); s=1 ("down") steps to i+1 (mod k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

__all__ = [
    "CoinParams",
    "HADAMARD",
    "LineWalkResult",
    "WalkOperator",
    "WalkerState",
    "build_coin",
    "build_shift_cycle",
    "build_walk_operator",
    "evolve",
    "line_walk",
]

TWO_PI = 2.0 * math.pi

NORM_TOL = 1e-12
UNITARY_TOL = 1e-12

#: step count above which evolve() switches to eigenphase powering
EIGENPOWER_THRESHOLD = 64


@dataclass(frozen=True)
class CoinParams:
    """Coin parameters: amplitude weight rho in [0, 1] and phases alpha, beta.

    The walk spectrum depends on the phases only through delta = alpha + beta,
    so `from_delta` builds the canonical representative (alpha=delta, beta=0)
    for a given delta.  Two-angle construction keeps each phase in [0, pi];
    the beta=0 form doubles as the delta form and admits alpha in [0, 2*pi).
    """

    rho: float
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        for name in ("rho", "alpha", "beta"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError(f"rho must lie in [0, 1], got {self.rho}")
        if self.beta == 0.0:
            if not 0.0 <= self.alpha < TWO_PI:
                raise ValueError(f"alpha must lie in [0, 2*pi), got {self.alpha}")
        elif not (0.0 <= self.alpha <= math.pi and 0.0 <= self.beta <= math.pi):
            raise ValueError(
                f"alpha and beta must lie in [0, pi], got ({self.alpha}, {self.beta})"
            )

    @classmethod
    def from_delta(cls, rho: float, delta: float) -> "CoinParams":
        """Coin with total phase delta = alpha + beta, stored as (alpha=delta, beta=0)."""
        delta = float(delta)
        if not 0.0 <= delta < TWO_PI:
            raise ValueError(f"delta must lie in [0, 2*pi), got {delta}")
        return cls(rho, delta, 0.0)

    @property
    def delta(self) -> float:
        return self.alpha + self.beta


#: the standard balanced coin: rho=1/2, no phases
HADAMARD = CoinParams(0.5)


def build_coin(params: CoinParams) -> np.ndarray:
    """Dense 2x2 coin matrix for the given parameters."""
    r = math.sqrt(params.rho)
    q = math.sqrt(1.0 - params.rho)
    a, b = params.alpha, params.beta
    return np.array(
        [
            [r, q * np.exp(1j * a)],
            [q * np.exp(1j * b), -r * np.exp(1j * (a + b))],
        ],
        dtype=np.complex128,
    )


def build_shift_cycle(k: int) -> np.ndarray:
    """Coin-conditioned cyclic shift: |i,0> -> |i-1 mod k, 0>, |i,1> -> |i+1 mod k, 1>."""
    if k < 2:
        raise ValueError(f"cycle length must be at least 2, got {k}")
    shift = np.zeros((2 * k, 2 * k), dtype=np.complex128)
    for i in range(k):
        shift[2 * ((i - 1) % k), 2 * i] = 1.0
        shift[2 * ((i + 1) % k) + 1, 2 * i + 1] = 1.0
    return shift


@dataclass(frozen=True)
class WalkOperator:
    """One step of the cycle walk: the shift composed with a uniform coin."""

    k: int
    params: CoinParams
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.shape != (2 * self.k, 2 * self.k):
            raise ValueError(
                f"expected a {2 * self.k}x{2 * self.k} matrix, got {matrix.shape}"
            )
        deviation = np.max(np.abs(matrix @ matrix.conj().T - np.eye(2 * self.k)))
        if deviation > UNITARY_TOL:
            raise ValueError(f"matrix is not unitary (max deviation {deviation:.3e})")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)


def build_walk_operator(k: int, params: CoinParams) -> WalkOperator:
    """Single-step operator: shift_cycle(k) . (I_k kron coin)."""
    step = build_shift_cycle(k) @ np.kron(
        np.eye(k, dtype=np.complex128), build_coin(params)
    )
    return WalkOperator(k=k, params=params, matrix=step)


@dataclass(frozen=True)
class WalkerState:
    """Normalized amplitude vector over the position (tensor) coin space of a k-cycle."""

    k: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"cycle length must be at least 2, got {self.k}")
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape != (2 * self.k,):
            raise ValueError(
                f"expected {2 * self.k} amplitudes for k={self.k}, got {amps.shape[0]}"
            )
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: sum |a|^2 = {norm_sq!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis_state(cls, k: int, position: int, coin: int) -> "WalkerState":
        """The computational basis state |position, coin>."""
        if not 0 <= position < k:
            raise ValueError(f"position {position} out of range for k={k}")
        if coin not in (0, 1):
            raise ValueError(f"coin index must be 0 or 1, got {coin}")
        amps = np.zeros(2 * k, dtype=np.complex128)
        amps[2 * position + coin] = 1.0
        return cls(k, amps)

    def position_probabilities(self) -> np.ndarray:
        """Length-k marginal probabilities over positions."""
        p = np.abs(self.amplitudes) ** 2
        return p[0::2] + p[1::2]


def evolve(state: WalkerState, op: WalkOperator, steps: int) -> WalkerState:
    """Apply `steps` walk steps.

    Up to EIGENPOWER_THRESHOLD steps this is repeated multiplication; beyond
    that the operator is powered through its block eigenphases, whose cost
    does not grow with the step count.
    """
    if state.k != op.k:
        raise ValueError(
            f"state lives on a {state.k}-cycle but the operator acts on {op.k}"
        )
    steps = int(steps)
    if steps < 0:
        raise ValueError(f"step count must be nonnegative, got {steps}")
    if steps <= EIGENPOWER_THRESHOLD:
        amps = np.array(state.amplitudes)
        for _ in range(steps):
            amps = op.matrix @ amps
    else:
        from . import spectral  # deferred; spectral imports this module

        amps = spectral.eigenphase_power(op, steps) @ state.amplitudes
    return WalkerState(state.k, amps)


@dataclass(frozen=True)
class LineWalkResult:
    """Amplitude history of a line walk over a fixed window of positions.

    `history[t]` is the (window, 2) amplitude table after t steps; column 0
    is the "up" (left-moving) coin component, column 1 the "down" one.
    """

    positions: np.ndarray
    history: np.ndarray

    @property
    def steps(self) -> int:
        return self.history.shape[0] - 1

    @property
    def amplitudes(self) -> np.ndarray:
        """Final (window, 2) amplitude table."""
        return self.history[-1]

    def probabilities(self, step: int = -1) -> np.ndarray:
        """Per-position probabilities after `step` steps (default: final)."""
        return np.sum(np.abs(self.history[step]) ** 2, axis=1)


def line_walk(
    initial: Mapping[int, Sequence[complex]],
    params: CoinParams,
    steps: int,
) -> LineWalkResult:
    """Run `steps` coin-then-shift applications on the infinite line.

    `initial` maps positions to (up, down) amplitude pairs and must be
    normalized.  The window [min-steps, max+steps] is preallocated; it
    provably contains all support since one step moves amplitude by one
    site.  Total probability is conserved to machine precision.
    """
    steps = int(steps)
    if steps < 0:
        raise ValueError(f"step count must be nonnegative, got {steps}")
    if not initial:
        raise ValueError("initial state has no support")
    lo = min(initial) - steps
    hi = max(initial) + steps
    width = hi - lo + 1
    amps = np.zeros((width, 2), dtype=np.complex128)
    for pos, pair in initial.items():
        pair = np.asarray(pair, dtype=np.complex128).reshape(-1)
        if pair.shape != (2,):
            raise ValueError(f"position {pos}: expected an (up, down) pair")
        amps[pos - lo] = pair
    norm_sq = float(np.sum(np.abs(amps) ** 2))
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise ValueError(f"initial state is not normalized: sum |a|^2 = {norm_sq!r}")

    coin_t = build_coin(params).T.copy()
    history = np.zeros((steps + 1, width, 2), dtype=np.complex128)
    history[0] = amps
    for t in range(1, steps + 1):
        amps = amps @ coin_t
        shifted = np.zeros_like(amps)
        shifted[:-1, 0] = amps[1:, 0]  # up moves left
        shifted[1:, 1] = amps[:-1, 1]  # down moves right
        amps = shifted
        history[t] = amps
    history.setflags(write=False)
    positions = np.arange(lo, hi + 1)
    positions.setflags(write=False)
    return LineWalkResult(positions=positions, history=history)
