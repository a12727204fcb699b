"""Binary symmetric and binary erasure channel capacities.

Capacities under the generalized entropies are normalized by the binary
maximum of the measure (``ln 2``, ``2 - sqrt 2``, ``2 sqrt 2 - 2``) so all
kinds are comparable on ``[0, 1]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .entropy import (
    Distribution,
    EntropyKind,
    JointDistribution,
    entropy,
    joint_entropy,
)
from .errors import DomainError, InvalidDistributionError
from .genfun import Convention

SQRT2 = math.sqrt(2.0)
ROW_TOL = 1e-12


def binary_max(kind) -> float:
    """Entropy of the fair binary distribution in natural units."""
    return {
        EntropyKind.SHANNON: math.log(2.0),
        EntropyKind.PLUS: 2.0 - SQRT2,
        EntropyKind.MINUS: 2.0 * SQRT2 - 2.0,
        EntropyKind.ZERO: SQRT2 / 2.0,
    }[EntropyKind(kind)]


@dataclass(frozen=True)
class ChannelSpec:
    """Discrete memoryless channel; ``transition[x, y] = P(y | x)``.

    BEC output columns are ordered ``(0, erasure, 1)``.
    """

    kind: str
    param: float
    transition: np.ndarray

    def __post_init__(self):
        t = np.array(self.transition, dtype=float)
        if t.ndim != 2 or t.size == 0:
            raise InvalidDistributionError("transition must be a non-empty matrix")
        if np.any(t < 0) or not np.all(np.isfinite(t)):
            raise InvalidDistributionError("transition has a negative or non-finite entry")
        if np.any(np.abs(t.sum(axis=1) - 1.0) > ROW_TOL):
            raise InvalidDistributionError("transition rows must sum to 1")
        t.flags.writeable = False
        object.__setattr__(self, "transition", t)

    @classmethod
    def bsc(cls, p: float) -> "ChannelSpec":
        _check_unit("crossover probability", p)
        return cls("bsc", p, [[1 - p, p], [p, 1 - p]])

    @classmethod
    def bec(cls, alpha: float) -> "ChannelSpec":
        _check_unit("erasure probability", alpha)
        return cls("bec", alpha, [[1 - alpha, alpha, 0.0], [0.0, alpha, 1 - alpha]])

    @classmethod
    def custom(cls, transition) -> "ChannelSpec":
        return cls("custom", float("nan"), transition)

    @property
    def n_inputs(self) -> int:
        return self.transition.shape[0]

    def product(self, other: "ChannelSpec") -> "ChannelSpec":
        """Two independent uses side by side; input index ``x1 * n2 + x2``."""
        return ChannelSpec.custom(np.kron(self.transition, other.transition))


@dataclass(frozen=True)
class CapacityResult:
    value: float
    maximizer: float
    method: str


def _check_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")


def _xlogx_pow(x: float, sign: int) -> float:
    # x**(sign*x) with 0**0 = 1
    return 1.0 if x == 0.0 else x ** (sign * x)


def bsc_capacity_closed(kind, p: float, uncorrected: bool = False) -> float:
    """Closed-form normalized BSC capacity.

    The minus-kind formula is ``(2 sqrt2 - p**-p - (1-p)**-(1-p)) / (2 sqrt2 - 2)``.
    ``uncorrected=True`` evaluates the uncorrected variant
    ``(2 sqrt2 * p**-p - (1-p)**-(1-p)) / (2 sqrt2 - 2)`` instead; it reaches
    about 3.12 at ``p = 1/2`` and is kept only for comparison.
    """
    kind = EntropyKind(kind)
    _check_unit("crossover probability", p)
    q = 1.0 - p
    if kind is EntropyKind.SHANNON:
        h = sum(-v * math.log2(v) for v in (p, q) if v > 0)
        return 1.0 - h
    if kind is EntropyKind.PLUS:
        return (SQRT2 - _xlogx_pow(p, 1) - _xlogx_pow(q, 1)) / (SQRT2 - 2.0)
    if kind is EntropyKind.MINUS:
        if uncorrected:
            return (2 * SQRT2 * _xlogx_pow(p, -1) - _xlogx_pow(q, -1)) / (2 * SQRT2 - 2.0)
        return (2 * SQRT2 - _xlogx_pow(p, -1) - _xlogx_pow(q, -1)) / (2 * SQRT2 - 2.0)
    # zero kind: 1 - H0(p) / H0(1/2), H0 the mean of the natural binary H+ and H-
    h_plus = 2.0 - _xlogx_pow(p, 1) - _xlogx_pow(q, 1)
    h_minus = _xlogx_pow(p, -1) + _xlogx_pow(q, -1) - 2.0
    return 1.0 - 0.5 * (h_plus + h_minus) / binary_max(kind)


def bec_capacity_closed(kind, alpha: float) -> float:
    """Closed-form normalized BEC capacity at the uniform input.

    Shannon: ``1 - alpha``. Plus: ``(1 - a**a - sqrt2 + 2 (a/2)**(a/2)) / (2 - sqrt2)``.
    Minus: ``(a**-a - 1 + 2 sqrt2 - 2 (a/2)**(-a/2)) / (2 sqrt2 - 2)``.
    """
    kind = EntropyKind(kind)
    _check_unit("erasure probability", alpha)
    if kind is EntropyKind.SHANNON:
        return 1.0 - alpha
    half = alpha / 2.0
    num_plus = 1.0 - _xlogx_pow(alpha, 1) - SQRT2 + 2.0 * _xlogx_pow(half, 1)
    num_minus = _xlogx_pow(alpha, -1) - 1.0 + 2 * SQRT2 - 2.0 * _xlogx_pow(half, -1)
    if kind is EntropyKind.PLUS:
        return num_plus / (2.0 - SQRT2)
    if kind is EntropyKind.MINUS:
        return num_minus / (2 * SQRT2 - 2.0)
    return 0.5 * (num_plus + num_minus) / binary_max(kind)


def _input_vector(input_p, channel: ChannelSpec) -> np.ndarray:
    if np.ndim(input_p) == 0:
        if channel.n_inputs != 2:
            raise DomainError("a scalar input probability needs a binary-input channel")
        _check_unit("input probability", float(input_p))
        return np.array([input_p, 1.0 - input_p], dtype=float)
    px = Distribution(input_p).probs
    if px.size != channel.n_inputs:
        raise DomainError(
            f"input has {px.size} symbols, channel has {channel.n_inputs} inputs"
        )
    return px


def joint_matrix(input_p, channel: ChannelSpec) -> np.ndarray:
    """``P(x, y) = P(x) P(y | x)``; ``input_p`` is ``P(x=0)`` or a full vector."""
    px = _input_vector(input_p, channel)
    return px[:, None] * channel.transition


def mutual_information(
    kind, input_p, channel: ChannelSpec, base=2, convention=Convention.NATURAL, route="joint"
) -> float:
    """Mutual information under the selected measure (unnormalized).

    ``route="joint"`` computes ``H(X) + H(Y) - H(X, Y)``. ``route="conditional"``
    computes ``H(Y) - sum_x P(x) H(Y | X=x)``. The two agree for Shannon
    entropy only; the generalized entropies are not additive.
    """
    kind = EntropyKind(kind)
    joint = JointDistribution(joint_matrix(input_p, channel))
    hy = entropy(kind, Distribution(joint.output_marginal), base, convention)
    if route == "joint":
        hx = entropy(kind, Distribution(joint.input_marginal), base, convention)
        return hx + hy - joint_entropy(kind, joint, base, convention)
    if route == "conditional":
        px = joint.input_marginal
        rows = sum(
            w * entropy(kind, Distribution(row), base, convention)
            for w, row in zip(px, channel.transition)
            if w > 0
        )
        return hy - rows
    raise DomainError(f"unknown route {route!r}")


def capacity_numeric(
    kind, channel: ChannelSpec, grid_step: float = 1e-3, refine_tol: float = 1e-10, route="auto"
) -> CapacityResult:
    """Maximize the normalized mutual information over ``P(x=0)``.

    Grid scan at ``grid_step`` followed by golden-section refinement inside
    the bracket around the best grid point. Binary-input channels only.
    ``route="auto"`` uses the conditional route for BSCs and the joint route
    otherwise, matching how the respective closed forms are built.
    """
    kind = EntropyKind(kind)
    if not 0.0 < grid_step < 0.5:
        raise DomainError("grid_step must lie in (0, 0.5)")
    if not refine_tol > 0:
        raise DomainError("refine_tol must be positive")
    if channel.n_inputs != 2:
        raise DomainError("numeric capacity is implemented for binary-input channels only")
    if route == "auto":
        route = "conditional" if channel.kind == "bsc" else "joint"
    norm = binary_max(kind)

    def rate(p):
        return mutual_information(kind, float(p), channel, route=route) / norm

    n = int(math.ceil(1.0 / grid_step))
    grid = np.linspace(0.0, 1.0, n + 1)
    values = np.array([rate(p) for p in grid])
    i = int(np.argmax(values))
    best_p, best_v = float(grid[i]), float(values[i])
    if 0 < i < n and values[i] > values[i - 1] and values[i] > values[i + 1]:
        res = minimize_scalar(
            lambda p: -rate(p),
            bracket=(grid[i - 1], grid[i], grid[i + 1]),
            method="golden",
            tol=refine_tol,
        )
        if -res.fun >= best_v:
            best_p, best_v = float(res.x), float(-res.fun)
    return CapacityResult(value=best_v, maximizer=best_p, method="numeric")
