"""Two spins with anisotropic XY exchange in a transverse field.

Basis convention: the product basis is ordered |00>, |01>, |10>, |11> and
|0> is the sigma_z eigenvector with eigenvalue -1, so |00> is the free-part
ground state with energy -2B.  All closed forms below assume that choice.

Energies are measured in units of the exchange constant J, with
hbar = k_B = 1 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrum, NonpositiveTemperature, ParameterError

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, 1.0j], [-1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

# Two-spin operators in the product basis.
SX1 = np.kron(SIGMA_X, IDENTITY_2)
SY1 = np.kron(SIGMA_Y, IDENTITY_2)
SZ_TOTAL = np.kron(SIGMA_Z, IDENTITY_2) + np.kron(IDENTITY_2, SIGMA_Z)
_XX = np.kron(SIGMA_X, SIGMA_X)
_YY = np.kron(SIGMA_Y, SIGMA_Y)

# Relative weight below which the field-dependent eigenvectors are replaced
# by the exact product-state branch; see eigensystem().
_PRODUCT_BRANCH_CUT = 1e-24


def k_factor(b: float, j: float, gamma: float) -> float:
    """Half-gap sqrt(B^2 + gamma^2 J^2) of the field-dependent doublet."""
    return math.hypot(b, gamma * j)


def hamiltonian(b: float, j: float, gamma: float) -> np.ndarray:
    """4x4 Hamiltonian B(sz1+sz2) + J[(1+gamma) sx.sx + (1-gamma) sy.sy]."""
    return b * SZ_TOTAL + j * ((1.0 + gamma) * _XX + (1.0 - gamma) * _YY)


def expval(rho: np.ndarray, op: np.ndarray) -> float:
    """Real part of Tr(rho op)."""
    return float(np.trace(rho @ op).real)


@dataclass(frozen=True)
class EngineParams:
    """All cycle parameters. Field strengths and temperature are in units
    of the coupling J, durations in units of 1/J."""

    b1: float = 1.0
    b2: float = 2.0
    coupling: float = 1.0
    gamma: float = 1.0
    temperature: float = 1.0
    tau: float = 1.0

    def __post_init__(self):
        if not all(map(math.isfinite, (self.b1, self.b2, self.coupling,
                                       self.gamma, self.temperature, self.tau))):
            raise ParameterError("engine parameters must be finite")
        if self.b1 < 0 or self.b2 < 0:
            raise ParameterError("field strengths must be non-negative")
        if not -1.0 <= self.gamma <= 1.0:
            raise ParameterError(f"anisotropy must lie in [-1, 1], got {self.gamma}")
        if self.coupling <= 0:
            raise ParameterError("coupling must be positive")
        if self.temperature <= 0:
            raise ParameterError("temperature must be positive (T = 0 is not supported)")
        if self.tau <= 0:
            raise ParameterError("stroke duration must be positive")

    @property
    def beta(self) -> float:
        return 1.0 / self.temperature

    @property
    def k1(self) -> float:
        return k_factor(self.b1, self.coupling, self.gamma)

    @property
    def k2(self) -> float:
        return k_factor(self.b2, self.coupling, self.gamma)


@dataclass(frozen=True)
class EigenSystem:
    """Eigendecomposition of the two-spin Hamiltonian.

    ``energies`` and ``vectors`` follow the analytic labeling: index 0 and 3
    are the field-dependent states with energies -2K and +2K, indices 1 and 2
    the field-independent Bell states with energies -2J and +2J.  When
    K < J that labeling is not energy sorted; use ``sort_order`` for an
    ascending view.
    """

    energies: np.ndarray   # shape (4,), label order
    vectors: np.ndarray    # shape (4, 4), column i is eigenvector i
    k: float

    @property
    def sort_order(self) -> np.ndarray:
        return np.argsort(self.energies, kind="stable")

    @property
    def sorted_energies(self) -> np.ndarray:
        return self.energies[self.sort_order]

    @property
    def sorted_vectors(self) -> np.ndarray:
        return self.vectors[:, self.sort_order]


def eigensystem(b: float, j: float, gamma: float) -> EigenSystem:
    """Analytic eigensystem of hamiltonian(b, j, gamma).

    The field-dependent pair is built from the cancellation-free amplitudes
    c = sqrt((K+B)/2K) and s = |gamma J| / sqrt(2K(K+B)); for
    (gamma J / K)^2 below a tiny cut the exact product-state branch
    (|00>, |11>) is used instead.  Eigenvector phases are fixed by making
    every vector real with a non-negative |00> coefficient.
    """
    k = k_factor(b, j, gamma)
    if k == 0.0 and j == 0.0:
        raise DegenerateSpectrum("b = 0, gamma*j = 0 and j = 0: H vanishes identically")
    gj = gamma * j

    vectors = np.zeros((4, 4), dtype=complex)
    if k == 0.0 or (gj / k) ** 2 < _PRODUCT_BRANCH_CUT:
        # Isotropic (or zero-field) branch: the doublet disentangles.
        vectors[0, 0] = 1.0
        vectors[3, 3] = 1.0
    else:
        c = math.sqrt((k + b) / (2.0 * k))
        s = abs(gj) / math.sqrt(2.0 * k * (k + b))
        sign = 1.0 if gj > 0 else -1.0
        vectors[0, 0] = c
        vectors[3, 0] = -sign * s
        vectors[0, 3] = s
        vectors[3, 3] = sign * c
        if sign < 0:  # keep the |00> coefficient of vector 3 non-negative
            vectors[:, 3] *= -1.0
            vectors[:, 0] *= 1.0
    r = 1.0 / math.sqrt(2.0)
    vectors[1, 1] = r
    vectors[2, 1] = -r
    vectors[1, 2] = r
    vectors[2, 2] = r

    energies = np.array([-2.0 * k, -2.0 * j, 2.0 * j, 2.0 * k])
    return EigenSystem(energies=energies, vectors=vectors, k=k)


def thermal_state(b: float, j: float, gamma: float, beta: float) -> tuple[np.ndarray, float]:
    """Gibbs state exp(-beta H)/Z and the partition function Z.

    Z equals 2 cosh(2K beta) + 2 cosh(2J beta) for this spectrum; it is
    computed here as the explicit four-term Boltzmann sum.
    """
    if not (isinstance(beta, (int, float)) and math.isfinite(beta) and beta > 0):
        raise NonpositiveTemperature(f"beta must be positive and finite, got {beta}")
    es = eigensystem(b, j, gamma)
    # Shifted weights keep the state construction overflow-free at large beta.
    shifted = np.exp(-beta * (es.energies - es.energies.min()))
    pops = shifted / shifted.sum()
    rho = (es.vectors * pops) @ es.vectors.conj().T
    z = float(np.exp(-beta * es.energies).sum())
    return rho, z


@dataclass(frozen=True)
class MeasurementBasis:
    """The four Bell kets, columns ordered (psi+, psi-, phi+, phi-)."""

    kets: np.ndarray

    @property
    def psi_plus(self) -> np.ndarray:
        return self.kets[:, 0]

    @property
    def psi_minus(self) -> np.ndarray:
        return self.kets[:, 1]

    @property
    def phi_plus(self) -> np.ndarray:
        return self.kets[:, 2]

    @property
    def phi_minus(self) -> np.ndarray:
        return self.kets[:, 3]

    def projectors(self) -> np.ndarray:
        """Stack of the four rank-1 projectors, shape (4, 4, 4)."""
        return np.einsum("ia,ja->aij", self.kets, self.kets.conj())


def measurement_basis() -> MeasurementBasis:
    """Bell basis used for the non-selective measurement stroke."""
    r = 1.0 / math.sqrt(2.0)
    kets = np.array(
        [
            [r, r, 0.0, 0.0],
            [0.0, 0.0, r, r],
            [0.0, 0.0, r, -r],
            [r, -r, 0.0, 0.0],
        ],
        dtype=complex,
    )
    return MeasurementBasis(kets=kets)
