"""Two-qubit density matrices: validation, X form, Bloch form, sampling, file I/O.

A density matrix here is a validated 4x4 complex array in the
excited-first product basis (see `linalg`).  The X class collects
states whose only nonzero entries sit on the diagonal and the
anti-diagonal, with real non-negative coherences; it is closed under
the emission channels in `dynamics` and admits the closed-form
measures in `measures`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import I2, I4, PAULIS, hermitian_eigenvalues, kron

__all__ = [
    "StateError",
    "NotHermitian",
    "TraceNotOne",
    "NotPositive",
    "NotXShaped",
    "StateFileError",
    "XState",
    "BlochDecomposition",
    "validate",
    "from_x_state",
    "to_x_state",
    "bloch",
    "from_bloch",
    "sample_random_state",
    "read_state_file",
    "write_state_file",
]


class StateError(ValueError):
    """A matrix failed a density-matrix requirement."""


class NotHermitian(StateError):
    pass


class TraceNotOne(StateError):
    pass


class NotPositive(StateError):
    pass


class NotXShaped(StateError):
    """Entries outside the diagonal/anti-diagonal, or complex/negative coherences."""


class StateFileError(ValueError):
    """State file could not be parsed (format error, not a physics error)."""


# 4x4 operator basis used by bloch()/from_bloch(), built once
_SIG_A = tuple(kron(s, I2) for s in PAULIS)
_SIG_B = tuple(kron(I2, s) for s in PAULIS)
_SIG_AB = tuple(tuple(kron(sj, sk) for sk in PAULIS) for sj in PAULIS)


def validate(m, tol: float = 1e-10) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return the symmetrized matrix.

    Raises NotHermitian / TraceNotOne / NotPositive with the offending
    magnitude in the message.  Positivity allows eigenvalues down to
    -tol.
    """
    a = np.asarray(m, dtype=complex)
    if a.shape != (4, 4):
        raise StateError(f"expected a 4x4 matrix, got shape {a.shape}")
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > tol:
        raise NotHermitian(f"hermiticity defect {defect:g} exceeds tol {tol:g}")
    a = 0.5 * (a + a.conj().T)
    tr = float(a.trace().real)
    if abs(tr - 1.0) > tol:
        raise TraceNotOne(f"trace {tr!r} differs from 1 by {abs(tr - 1.0):g}")
    lo = float(hermitian_eigenvalues(a, tol=max(tol, 1e-10))[0])
    if lo < -tol:
        raise NotPositive(f"smallest eigenvalue {lo:g} below -tol {-tol:g}")
    return a


@dataclass(frozen=True)
class XState:
    """Diagonal populations and real non-negative anti-diagonal coherences.

    Fields are the matrix entries r11..r44 (populations, summing to 1)
    and r14, r23 (coherences).  Positivity of the underlying matrix is
    equivalent to r14^2 <= r11*r44 and r23^2 <= r22*r33, enforced here
    with 1e-12 slack.
    """

    r11: float
    r22: float
    r33: float
    r44: float
    r14: float
    r23: float

    def __post_init__(self):
        slack = 1e-12
        vals = (self.r11, self.r22, self.r33, self.r44, self.r14, self.r23)
        if any(v < -slack for v in vals):
            raise StateError(f"negative X-state field in {vals}")
        total = self.r11 + self.r22 + self.r33 + self.r44
        if abs(total - 1.0) > slack:
            raise StateError(f"populations sum to {total!r}, not 1")
        if self.r14**2 > self.r11 * self.r44 + slack:
            raise StateError("coherence r14 violates positivity")
        if self.r23**2 > self.r22 * self.r33 + slack:
            raise StateError("coherence r23 violates positivity")


def from_x_state(x: XState) -> np.ndarray:
    """Materialize an XState as a 4x4 density matrix."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0], m[1, 1], m[2, 2], m[3, 3] = x.r11, x.r22, x.r33, x.r44
    m[0, 3] = m[3, 0] = x.r14
    m[1, 2] = m[2, 1] = x.r23
    return m


def to_x_state(m, tol: float = 1e-10) -> XState:
    """Extract XState fields, rejecting anything outside the X class.

    Off-pattern entries above tol, coherence imaginary parts above tol,
    or real coherences below -tol raise NotXShaped; phases are never
    silently absorbed.
    """
    a = np.asarray(m, dtype=complex)
    if a.shape != (4, 4):
        raise StateError(f"expected a 4x4 matrix, got shape {a.shape}")
    pattern = np.zeros((4, 4), dtype=bool)
    pattern[np.arange(4), np.arange(4)] = True
    pattern[np.arange(4), 3 - np.arange(4)] = True
    stray = np.abs(a) > tol
    stray[pattern] = False
    if np.any(stray):
        where = [(int(j), int(k)) for j, k in np.argwhere(stray)]
        worst = float(np.max(np.abs(a[stray])))
        raise NotXShaped(
            f"off-pattern entries at {where} (largest modulus {worst:g}) exceed tol {tol:g}"
        )
    for entry, name in ((a[0, 3], "r14"), (a[1, 2], "r23")):
        if abs(entry.imag) > tol:
            raise NotXShaped(f"{name} has imaginary part {entry.imag:g}")
        if entry.real < -tol:
            raise NotXShaped(f"{name} is negative ({entry.real:g})")
    return XState(
        r11=float(a[0, 0].real),
        r22=float(a[1, 1].real),
        r33=float(a[2, 2].real),
        r44=float(a[3, 3].real),
        r14=max(float(a[0, 3].real), 0.0),
        r23=max(float(a[1, 2].real), 0.0),
    )


@dataclass(frozen=True)
class BlochDecomposition:
    """Local vectors and 3x3 correlation matrix of rho.

    rho = (I + sum_k x_k sigma_k x I + sum_k y_k I x sigma_k
           + sum_jk T_jk sigma_j x sigma_k) / 4
    """

    x_vec: np.ndarray
    y_vec: np.ndarray
    corr: np.ndarray


def bloch(rho) -> BlochDecomposition:
    """Pauli expectation values of a 4x4 state."""
    a = np.asarray(rho, dtype=complex)
    x = np.array([np.einsum("ij,ji->", a, s).real for s in _SIG_A])
    y = np.array([np.einsum("ij,ji->", a, s).real for s in _SIG_B])
    t = np.array(
        [[np.einsum("ij,ji->", a, _SIG_AB[j][k]).real for k in range(3)] for j in range(3)]
    )
    return BlochDecomposition(x_vec=x, y_vec=y, corr=t)


def from_bloch(x_vec, y_vec, corr) -> np.ndarray:
    """Rebuild the 4x4 matrix from Pauli components (inverse of bloch)."""
    x = np.asarray(x_vec, dtype=float)
    y = np.asarray(y_vec, dtype=float)
    t = np.asarray(corr, dtype=float)
    m = I4.copy()
    for k in range(3):
        m += x[k] * _SIG_A[k] + y[k] * _SIG_B[k]
    for j in range(3):
        for k in range(3):
            m += t[j, k] * _SIG_AB[j][k]
    return m / 4.0


def sample_random_state(seed: int, family: str = "full-rank") -> np.ndarray:
    """Deterministic random state from one of three families.

    full-rank:     G G^dagger / tr for a complex Gaussian G
    bell-diagonal: x_vec = y_vec = 0, diagonal correlation matrix,
                   rejection-sampled for positivity
    x-shaped:      Dirichlet populations with admissible real
                   non-negative coherences
    """
    rng = np.random.default_rng(seed)
    if family == "full-rank":
        g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        rho = g @ g.conj().T
        return validate(rho / rho.trace().real)
    if family == "bell-diagonal":
        while True:
            c1, c2, c3 = rng.uniform(-1.0, 1.0, size=3)
            lams = (
                1.0 - c1 - c2 - c3,
                1.0 - c1 + c2 + c3,
                1.0 + c1 - c2 + c3,
                1.0 + c1 + c2 - c3,
            )
            if min(lams) >= 0.0:
                break
        return validate(from_bloch(np.zeros(3), np.zeros(3), np.diag([c1, c2, c3])))
    if family == "x-shaped":
        pops = rng.dirichlet((1.0, 1.0, 1.0, 1.0))
        r14 = rng.uniform() * np.sqrt(pops[0] * pops[3])
        r23 = rng.uniform() * np.sqrt(pops[1] * pops[2])
        x = XState(pops[0], pops[1], pops[2], pops[3], r14, r23)
        return validate(from_x_state(x))
    raise ValueError(f"unknown family {family!r}")


def read_state_file(path) -> np.ndarray:
    """Read a 4x4 complex matrix from 16 lines of 're,im' in row-major order.

    Blank lines and lines starting with '#' are ignored.  Any other
    deviation raises StateFileError.  The matrix is returned unvalidated;
    run validate() to enforce the density-matrix requirements.
    """
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise StateFileError(f"{path}:{lineno}: expected 're,im', got {line!r}")
            try:
                re, im = float(parts[0]), float(parts[1])
            except ValueError as exc:
                raise StateFileError(f"{path}:{lineno}: non-numeric entry {line!r}") from exc
            entries.append(complex(re, im))
    if len(entries) != 16:
        raise StateFileError(f"{path}: expected 16 entries, found {len(entries)}")
    return np.array(entries, dtype=complex).reshape(4, 4)


def write_state_file(path, m) -> None:
    """Write a 4x4 matrix in the 16-line 're,im' format with 17 significant digits."""
    a = np.asarray(m, dtype=complex)
    if a.shape != (4, 4):
        raise StateError(f"expected a 4x4 matrix, got shape {a.shape}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# 4x4 density matrix, row-major, one 're,im' pair per line\n")
        for row in a:
            for v in row:
                fh.write(f"{v.real:.17g},{v.imag:.17g}\n")
