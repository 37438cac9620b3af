"""One-sided spontaneous emission on a two-qubit state.

Each atom decays independently, |e> -> |g> at rate gamma0, with no
Hamiltonian part.  The generator for one side is

    L rho = (gamma0/2) (2 s- rho s+ - s+ s- rho - rho s+ s-)

and the exact solution is the amplitude-damping channel with Kraus pair

    K0 = [[sqrt(1-p), 0], [0, 1]],  K1 = [[0, 0], [sqrt(p), 0]],
    p = 1 - exp(-gamma0 t),

tensored with the identity on the untouched side.  `apply_channel` uses
the Kraus form (exact for any t); `integrate` steps the master equation
with fixed-step RK4 and exists as an independent cross-check of the
channel, not as the production path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import states
from .linalg import I2, SIGMA_MINUS, SIGMA_PLUS, kron, partial_trace

__all__ = [
    "InvalidTime",
    "StepTooLarge",
    "EmissionChannel",
    "apply_channel",
    "lindblad_rhs",
    "integrate",
    "asymptotic_state",
]


class InvalidTime(ValueError):
    """Negative evolution time."""


class StepTooLarge(ValueError):
    """Integrator step exceeds the stability guard 0.1/gamma0."""


_SIDES = ("A", "B", "both")

_P_GROUND = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)


@dataclass(frozen=True)
class EmissionChannel:
    """Spontaneous emission on side 'A', 'B' or 'both' for a time t >= 0."""

    side: str
    t: float
    gamma0: float = 1.0

    def __post_init__(self):
        if self.side not in _SIDES:
            raise ValueError(f"side must be one of {_SIDES}, got {self.side!r}")
        if self.gamma0 <= 0.0:
            raise ValueError(f"gamma0 must be positive, got {self.gamma0!r}")
        if self.t < 0.0:
            raise InvalidTime(f"evolution time must be >= 0, got {self.t!r}")

    def kraus(self) -> list[np.ndarray]:
        """Two-qubit Kraus operators of the channel."""
        p = 1.0 - np.exp(-self.gamma0 * self.t)
        k0 = np.array([[np.sqrt(1.0 - p), 0.0], [0.0, 1.0]], dtype=complex)
        k1 = np.array([[0.0, 0.0], [np.sqrt(p), 0.0]], dtype=complex)
        if self.side == "A":
            return [kron(k0, I2), kron(k1, I2)]
        if self.side == "B":
            return [kron(I2, k0), kron(I2, k1)]
        return [kron(ka, kb) for ka in (k0, k1) for kb in (k0, k1)]


def apply_channel(rho, ch: EmissionChannel) -> np.ndarray:
    """Exact evolved state sum_k K rho K^dagger."""
    a = np.asarray(rho, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    for k in ch.kraus():
        out += k @ a @ k.conj().T
    return out


def lindblad_rhs(rho, side: str, gamma0: float = 1.0) -> np.ndarray:
    """Right-hand side of the emission master equation (traceless)."""
    if side not in _SIDES:
        raise ValueError(f"side must be one of {_SIDES}, got {side!r}")
    a = np.asarray(rho, dtype=complex)
    out = np.zeros((4, 4), dtype=complex)
    ops = []
    if side in ("A", "both"):
        ops.append(kron(SIGMA_MINUS, I2))
    if side in ("B", "both"):
        ops.append(kron(I2, SIGMA_MINUS))
    for sm in ops:
        sp = sm.conj().T
        n_op = sp @ sm
        out += 0.5 * gamma0 * (2.0 * sm @ a @ sp - n_op @ a - a @ n_op)
    return out


def integrate(rho0, side: str, gamma0: float, t_final: float, dt: float = 1e-3):
    """Fixed-step RK4 integration of the master equation up to t_final.

    The state is re-symmetrized after every step and validated at the
    end (positivity drift beyond 1e-8 raises NotPositive).  dt above
    0.1/gamma0 is rejected.
    """
    if t_final < 0.0:
        raise InvalidTime(f"t_final must be >= 0, got {t_final!r}")
    if gamma0 <= 0.0:
        raise ValueError(f"gamma0 must be positive, got {gamma0!r}")
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if dt > 0.1 / gamma0:
        raise StepTooLarge(f"dt {dt!r} exceeds 0.1/gamma0 = {0.1 / gamma0!r}")
    rho = np.asarray(rho0, dtype=complex).copy()
    n_full = int(np.floor(t_final / dt + 1e-12))
    rem = t_final - n_full * dt
    steps = [dt] * n_full
    if rem > 1e-15:
        steps.append(rem)
    for h in steps:
        k1 = lindblad_rhs(rho, side, gamma0)
        k2 = lindblad_rhs(rho + 0.5 * h * k1, side, gamma0)
        k3 = lindblad_rhs(rho + 0.5 * h * k2, side, gamma0)
        k4 = lindblad_rhs(rho + h * k3, side, gamma0)
        rho = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        rho = 0.5 * (rho + rho.conj().T)
    return states.validate(rho, tol=1e-8)


def asymptotic_state(rho, side: str) -> np.ndarray:
    """t -> infinity limit: measured side in the ground state, marginal intact."""
    a = np.asarray(rho, dtype=complex)
    if side == "A":
        return kron(_P_GROUND, partial_trace(a, "A"))
    if side == "B":
        return kron(partial_trace(a, "B"), _P_GROUND)
    if side == "both":
        return kron(_P_GROUND, _P_GROUND)
    raise ValueError(f"side must be one of {_SIDES}, got {side!r}")
