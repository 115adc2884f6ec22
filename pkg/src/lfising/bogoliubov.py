"""Instant-form momentum-space engine: +-k pair blocks, Bogoliubov angles,
spectra and the BCS-type ground state.

Energies here use the momentum-space normalization in which a pair block is

    H_k = 2 d (n_k + n_{-k} - 1) - 2i s (c+_k c+_{-k} + c_k c_{-k})

with (d, s) = (lambda - cos ka, sin ka) on the lattice and (m, k) in the
continuum, so quasiparticles cost 2 omega_k. That operator is exactly
``MOMENTUM_FORM_SCALE`` times the site Hamiltonian built by
:func:`lfising.exactdiag.build_fermion_hamiltonian`.

Block 4-vectors are written in the paired qubit order (-k, k): index
``2 n_{-k} + n_k``, with |11> = c+_{-k} c+_k |vac> (the momentum-qubit
Jordan-Wigner map with string exp(i pi n)). In that basis the ground state
is (cos t, 0, 0, -i sin t).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateBlockError, FrameError
from .lattice import (
    MomentumGrid,
    continuum_dispersion,
    lattice_dispersion,
)

MOMENTUM_FORM_SCALE = 2.0

_A = np.array([[0, 1], [0, 0]], dtype=complex)
_I = np.eye(2, dtype=complex)
_P = np.diag([1.0, -1.0]).astype(complex)

# two-mode ladder operators, qubit 0 = -k, qubit 1 = +k
C_MINUS = np.kron(_A, _I)
C_PLUS = np.kron(_P, _A)
N_MINUS = C_MINUS.conj().T @ C_MINUS
N_PLUS = C_PLUS.conj().T @ C_PLUS
PAIR_CREATE = C_PLUS.conj().T @ C_MINUS.conj().T  # c+_k c+_{-k}
PAIR_ANNIHILATE = C_PLUS @ C_MINUS  # c_k c_{-k}
ID4 = np.eye(4, dtype=complex)


class Flavor(str, enum.Enum):
    LATTICE = "lattice"
    CONTINUUM = "continuum"


@dataclass(frozen=True)
class BogoliubovBlock:
    k: float
    angle: float
    omega: float
    flavor: Flavor


def bogoliubov_angle_lattice(k: float, coupling: float, spacing: float = 1.0) -> float:
    """theta_k with 2 theta = atan2(sin ka, lambda - cos ka).

    This branch makes the diagonal coefficient +omega_k, so the ground state
    is always the quasiparticle vacuum.
    """
    if not spacing > 0:
        raise ValueError("spacing must be positive")
    ka = k * spacing
    s, d = math.sin(ka), coupling - math.cos(ka)
    if abs(s) < 1e-15 and abs(d) < 1e-15:
        raise DegenerateBlockError(f"gapless mode k={k} at lambda={coupling}: angle undefined")
    return 0.5 * math.atan2(s, d)


def bogoliubov_angle_continuum(k: float, mass: float) -> float:
    """phi_k = atan2(k, m) / 2, which is pi/4 exactly when m = 0."""
    if not k > 0:
        raise ValueError(f"continuum angle needs k > 0, got {k}")
    if mass == 0:
        return math.pi / 4
    return 0.5 * math.atan2(k, mass)


def pair_block(diagonal: float, pairing: float) -> np.ndarray:
    return (
        2.0 * diagonal * (N_PLUS + N_MINUS - ID4)
        - 2j * pairing * (PAIR_CREATE + PAIR_ANNIHILATE)
    )


def _require_block_momentum(k: float, spacing: float) -> None:
    ka = k * spacing
    if not 1e-12 < ka < math.pi - 1e-12:
        raise ValueError(f"k a = {ka} is not strictly inside (0, pi): self-conjugate modes are not pair blocks")


def block_hamiltonian(k: float, coupling: float, spacing: float = 1.0) -> np.ndarray:
    """4x4 lattice pair block for momentum 0 < k < pi/a."""
    _require_block_momentum(k, spacing)
    ka = k * spacing
    return pair_block(coupling - math.cos(ka), math.sin(ka))


def continuum_block_hamiltonian(k: float, mass: float) -> np.ndarray:
    if not k > 0:
        raise ValueError("continuum block needs k > 0")
    return pair_block(mass, k)


def quasiparticle_operators(angle: float) -> tuple[np.ndarray, np.ndarray]:
    """(eta_k, eta_{-k}) as 4x4 matrices.

    eta_k = cos t c_k - i sin t c+_{-k} and eta_{-k} = cos t c_{-k} + i sin t c+_k
    (theta_{-k} = -theta_k). These annihilate :func:`block_ground_state`.
    """
    c, s = math.cos(angle), math.sin(angle)
    eta_plus = c * C_PLUS - 1j * s * C_MINUS.conj().T
    eta_minus = c * C_MINUS + 1j * s * C_PLUS.conj().T
    return eta_plus, eta_minus


def block_ground_state(angle: float) -> np.ndarray:
    if not 0 <= angle < math.pi / 2:
        raise ValueError(f"angle must lie in [0, pi/2), got {angle}")
    return np.array([math.cos(angle), 0, 0, -1j * math.sin(angle)], dtype=complex)


def bogoliubov_rotation(angle: float) -> np.ndarray:
    """Unitary whose columns are the quasiparticle Fock states of the block.

    Column order follows the occupation index 2 n_{-k} + n_k of the eta modes,
    so W^dagger H_k W = diag(-2w, 0, 0, +2w).
    """
    g = np.array([math.cos(angle), 0, 0, -1j * math.sin(angle)], dtype=complex)
    ep, em = quasiparticle_operators(angle)
    epd, emd = ep.conj().T, em.conj().T
    return np.column_stack([g, epd @ g, emd @ g, emd @ epd @ g])


def lattice_blocks(grid: MomentumGrid, coupling: float) -> list[BogoliubovBlock]:
    _require_if(grid)
    a = grid.spacing
    out = []
    for num in grid.pair_numerators:
        k = grid.momentum(num)
        out.append(
            BogoliubovBlock(k, bogoliubov_angle_lattice(k, coupling, a), lattice_dispersion(k, coupling, a), Flavor.LATTICE)
        )
    return out


def continuum_blocks(grid: MomentumGrid, mass: float) -> list[BogoliubovBlock]:
    _require_if(grid)
    out = []
    for num in grid.pair_numerators:
        k = grid.momentum(num)
        out.append(BogoliubovBlock(k, bogoliubov_angle_continuum(k, mass), continuum_dispersion(k, mass), Flavor.CONTINUUM))
    return out


def _require_if(grid: MomentumGrid) -> None:
    if not grid.frame.is_instant_form:
        raise FrameError(f"expected an instant-form grid, got {grid.frame.value}")


def if_ground_energy(grid: MomentumGrid, coupling: float) -> float:
    """Ground energy in the momentum-space normalization.

    Each +-k pair contributes -2 omega_k. Unpaired self-conjugate modes of a
    periodic grid are single number operators: k = 0 gives -|lambda - 1| and
    k a = pi gives -(lambda + 1).
    """
    _require_if(grid)
    a = grid.spacing
    energy = 0.0
    for num in grid.pair_numerators:
        energy -= 2.0 * lattice_dispersion(grid.momentum(num), coupling, a)
    for num in grid.self_conjugate:
        energy -= abs(coupling - 1.0) if num == 0 else coupling + 1.0
    return energy


def if_excitation_energy(k: float, mass: float) -> float:
    return 2.0 * continuum_dispersion(k, mass)


def bogoliubov_levels(grid: MomentumGrid, coupling: float) -> np.ndarray:
    """Every many-body level of the quadratic Hamiltonian on ``grid``, ascending.

    Combinatorial: ground energy plus any subset of quasiparticle energies.
    Paired modes +-k each cost 2 omega_k; an unpaired mode costs its
    single-particle gap (2|lambda - 1| or 2(lambda + 1)).
    """
    _require_if(grid)
    a = grid.spacing
    quanta = []
    for num in grid.pair_numerators:
        w = lattice_dispersion(grid.momentum(num), coupling, a)
        quanta += [2.0 * w, 2.0 * w]
    for num in grid.self_conjugate:
        quanta.append(2.0 * abs(coupling - 1.0) if num == 0 else 2.0 * (coupling + 1.0))
    levels = np.array([if_ground_energy(grid, coupling)])
    for q in quanta:
        levels = np.concatenate([levels, levels + q])
    return np.sort(levels)


@dataclass(frozen=True)
class IFGroundState:
    """Product over +-k pairs of (cos t |00> - i sin t |11>), k ascending.

    ``unpaired`` lists self-conjugate momenta left out of the pair product.
    """

    momenta: tuple[float, ...]
    angles: tuple[float, ...]
    unpaired: tuple[float, ...] = field(default=())

    @property
    def blocks(self) -> list[tuple[float, np.ndarray]]:
        return [(k, block_ground_state(t)) for k, t in zip(self.momenta, self.angles)]

    @property
    def n_qubits(self) -> int:
        return 2 * len(self.momenta)

    def statevector(self) -> np.ndarray:
        """Full state in the qubit order (-k1, k1, -k2, k2, ...)."""
        v = np.ones(1, dtype=complex)
        for _, b in self.blocks:
            v = np.kron(v, b)
        return v


def build_if_ground_state(grid: MomentumGrid, mass: float) -> IFGroundState:
    """BCS-type ground state with continuum angles phi_k (tan 2 phi = k/m)."""
    blocks = continuum_blocks(grid, mass)
    return IFGroundState(
        tuple(b.k for b in blocks),
        tuple(b.angle for b in blocks),
        tuple(grid.momentum(n) for n in grid.self_conjugate),
    )


def build_lattice_ground_state(grid: MomentumGrid, coupling: float) -> IFGroundState:
    """Same product form with lattice angles theta_k; the exact paired-sector ground state."""
    blocks = lattice_blocks(grid, coupling)
    return IFGroundState(
        tuple(b.k for b in blocks),
        tuple(b.angle for b in blocks),
        tuple(grid.momentum(n) for n in grid.self_conjugate),
    )


def embed_blocks(blocks: list[np.ndarray]) -> np.ndarray:
    """Sum of 4x4 pair operators, each acting on its own (-k, k) qubit pair."""
    nb = len(blocks)
    dim = 4**nb
    out = np.zeros((dim, dim), dtype=complex)
    for i, b in enumerate(blocks):
        out += np.kron(np.kron(np.eye(4**i), b), np.eye(4 ** (nb - i - 1)))
    return out
