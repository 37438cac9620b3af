"""Quantum-correlation measures for two-qubit states.

Both geometric discords minimize over projective measurements on
subsystem A only.  The Hilbert-Schmidt version

    D2 = (1/2) (|x|^2 + ||T||_2^2 - k_max)

uses the largest eigenvalue k_max of K = x x^T + T T^T.  The trace-norm
version has a closed form on the non-negative X class in terms of

    a1 = 2 (r23 + r14),  a2 = 2 (r23 - r14),  a3 = 1 - 2 (r22 + r33),
    x  = 2 (r11 + r22) - 1,
    a  = max(a3^2, a2^2 + x^2),  b = min(a3^2, a1^2),

    D1 = sqrt((a a1^2 - b a2^2) / (a - b + a1^2 - a2^2)),

which degenerates when x = 0 and |a1| = |a2| = |a3| (and numerically
when the denominator vanishes); those cases fall back to the
brute-force oracle.  Both oracles scan a Fibonacci lattice of
measurement axes and refine the best grid point with a Nelder-Mead
simplex, which keeps them independent of every closed form here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from . import linalg, states
from .linalg import I2, PAULIS

__all__ = [
    "XCoefficients",
    "measurement_axis",
    "measure_map",
    "d2_closed",
    "is_degenerate_x",
    "d1_closed_x",
    "d1_x_with_method",
    "negativity",
    "d2_oracle",
    "d1_oracle",
]

_PAULI_STACK = np.stack(PAULIS)  # (3, 2, 2)


@dataclass(frozen=True)
class XCoefficients:
    """Correlation coefficients of an X state, plus the a/b envelope values."""

    a1: float
    a2: float
    a3: float
    x: float
    a: float
    b: float

    @classmethod
    def from_x_state(cls, xs: states.XState) -> "XCoefficients":
        a1 = 2.0 * (xs.r23 + xs.r14)
        a2 = 2.0 * (xs.r23 - xs.r14)
        a3 = 1.0 - 2.0 * (xs.r22 + xs.r33)
        x = 2.0 * (xs.r11 + xs.r22) - 1.0
        return cls(
            a1=a1,
            a2=a2,
            a3=a3,
            x=x,
            a=max(a3 * a3, a2 * a2 + x * x),
            b=min(a3 * a3, a1 * a1),
        )


def measurement_axis(n) -> np.ndarray:
    """Validate a Bloch axis: real 3-vector of unit length within 1e-12."""
    v = np.asarray(n, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"axis must be a 3-vector, got shape {v.shape}")
    norm = float(np.sqrt(v @ v))
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"axis norm {norm!r} is not 1 within 1e-12")
    return v


def measure_map(rho, axis) -> np.ndarray:
    """Project subsystem A onto the +/- eigenstates of axis . sigma.

    Returns sum_pm (P_pm x I) rho (P_pm x I); idempotent and
    trace-preserving.
    """
    n = measurement_axis(axis)
    a = np.asarray(rho, dtype=complex)
    nsig = np.einsum("a,aij->ij", n, _PAULI_STACK)
    pp = np.kron(0.5 * (I2 + nsig), I2)
    pm = np.kron(0.5 * (I2 - nsig), I2)
    return pp @ a @ pp + pm @ a @ pm


def d2_closed(rho) -> float:
    """Hilbert-Schmidt discord from the Bloch decomposition."""
    bd = states.bloch(rho)
    x = bd.x_vec
    t = bd.corr
    k = np.outer(x, x) + t @ t.T
    kmax = float(linalg.hermitian_eigenvalues(k)[-1])
    return max(0.0, 0.5 * (float(x @ x) + float(np.sum(t * t)) - kmax))


def is_degenerate_x(xs: states.XState, tol: float = 1e-10) -> bool:
    """True on the branch where the X closed form for D1 is invalid.

    The branch needs x = 0 and three coefficients of equal, nonzero
    magnitude; when everything vanishes the state carries no discord and
    the closed form applies with value 0.
    """
    c = XCoefficients.from_x_state(xs)
    mags = (abs(c.a1), abs(c.a2), abs(c.a3))
    return (
        abs(c.x) <= tol
        and mags[0] > tol
        and abs(mags[0] - mags[1]) <= tol
        and abs(mags[1] - mags[2]) <= tol
    )


def _d1_formula(c: XCoefficients):
    """Closed-form D1 from coefficients, or None when the denominator vanishes."""
    den = c.a - c.b + c.a1 * c.a1 - c.a2 * c.a2
    if abs(den) < 1e-12:
        return None
    num = c.a * c.a1 * c.a1 - c.b * c.a2 * c.a2
    return float(np.sqrt(max(num, 0.0) / den))


def d1_x_with_method(
    xs: states.XState, grid: int = 2000, refine_iters: int = 200
) -> tuple[float, str]:
    """Trace-norm discord of an X state with the evaluation route used.

    Returns (value, "closed-x") off the degenerate branch and
    (value, "oracle") when the closed form is invalid there.
    """
    c = XCoefficients.from_x_state(xs)
    if max(abs(c.x), abs(c.a1), abs(c.a2), abs(c.a3)) <= 1e-10:
        return 0.0, "closed-x"
    if not is_degenerate_x(xs):
        val = _d1_formula(c)
        if val is not None:
            return val, "closed-x"
    val, _axis = d1_oracle(states.from_x_state(xs), grid=grid, refine_iters=refine_iters)
    return val, "oracle"


def d1_closed_x(xs: states.XState, grid: int = 2000, refine_iters: int = 200) -> float:
    """Trace-norm discord of an X state (oracle fallback on the degenerate branch)."""
    return d1_x_with_method(xs, grid=grid, refine_iters=refine_iters)[0]


def negativity(rho) -> float:
    """Entanglement negativity ||rho^{T_A}||_1 - 1, clamped at 0."""
    pt = linalg.partial_transpose(np.asarray(rho, dtype=complex), "A")
    return max(0.0, linalg.trace_norm(pt) - 1.0)


# ---------------------------------------------------------------------------
# brute-force oracles over the measurement manifold


def _fibonacci_axes(n: int) -> np.ndarray:
    """n near-uniform unit vectors on the sphere (deterministic lattice)."""
    i = np.arange(n)
    z = 1.0 - (2.0 * i + 1.0) / n
    r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
    phi = i * (np.pi * (3.0 - np.sqrt(5.0)))
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


def _measured_batch(rho: np.ndarray, axes: np.ndarray) -> np.ndarray:
    """Apply measure_map for every axis in one shot; axes (k,3) -> (k,4,4)."""
    nsig = np.einsum("ka,aij->kij", axes, _PAULI_STACK)
    pp = 0.5 * (I2[None, :, :] + nsig)
    pm = 0.5 * (I2[None, :, :] - nsig)
    eye = np.eye(2)
    pp4 = np.einsum("kij,ab->kiajb", pp, eye).reshape(-1, 4, 4)
    pm4 = np.einsum("kij,ab->kiajb", pm, eye).reshape(-1, 4, 4)
    return pp4 @ rho @ pp4 + pm4 @ rho @ pm4


def _d2_objective(rho: np.ndarray, axes: np.ndarray) -> np.ndarray:
    delta = rho[None, :, :] - _measured_batch(rho, axes)
    return 2.0 * np.sum(delta.real**2 + delta.imag**2, axis=(1, 2))


def _d1_objective(rho: np.ndarray, axes: np.ndarray) -> np.ndarray:
    delta = rho[None, :, :] - _measured_batch(rho, axes)
    # numpy's batched eigensolver keeps this path independent of the
    # package's own Jacobi kernel and fast enough for dense grids
    return np.sum(np.abs(np.linalg.eigvalsh(delta)), axis=1)


def _axis_from_angles(tp: np.ndarray) -> np.ndarray:
    th, ph = tp
    st = np.sin(th)
    return np.array([st * np.cos(ph), st * np.sin(ph), np.cos(th)])


def _sphere_minimize(objective, rho, grid: int, refine_iters: int):
    if grid < 1:
        raise ValueError("grid must be a positive integer")
    if refine_iters < 0:
        raise ValueError("refine_iters must be non-negative")
    rho = np.asarray(rho, dtype=complex)
    axes = _fibonacci_axes(grid)
    vals = objective(rho, axes)
    vmin = float(vals.min())
    cand = axes[vals <= vmin + 1e-14]
    # deterministic tie-break: lexicographically smallest candidate axis
    order = np.lexsort((cand[:, 2], cand[:, 1], cand[:, 0]))
    best_axis = cand[order[0]]
    t0 = np.array(
        [np.arccos(np.clip(best_axis[2], -1.0, 1.0)), np.arctan2(best_axis[1], best_axis[0])]
    )

    def fun(tp):
        return float(objective(rho, _axis_from_angles(tp)[None, :])[0])

    if refine_iters > 0:
        res = minimize(
            fun,
            t0,
            method="Nelder-Mead",
            options={"maxiter": refine_iters, "xatol": 1e-10, "fatol": 1e-14},
        )
        if res.fun < vmin:
            vmin = float(res.fun)
            best_axis = _axis_from_angles(res.x)
    best_axis = best_axis / np.sqrt(best_axis @ best_axis)
    return max(vmin, 0.0), best_axis


def d2_oracle(rho, grid: int = 2000, refine_iters: int = 200):
    """Brute-force Hilbert-Schmidt discord: (value, minimizing axis)."""
    return _sphere_minimize(_d2_objective, rho, grid, refine_iters)


def d1_oracle(rho, grid: int = 2000, refine_iters: int = 200):
    """Brute-force trace-norm discord: (value, minimizing axis)."""
    return _sphere_minimize(_d1_objective, rho, grid, refine_iters)
