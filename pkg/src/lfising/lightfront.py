"""Light-front quantization: DLCQ spectra, occupation-basis eigenstates,
mass-shell bookkeeping, and the massless k^- quantization.

The LF energy operator is already diagonal in LF momentum, so it is kept as
a table of (k+, m^2 / 2k+) rows and never assembled as a matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import FrameError, OutOfDomainError, ZeroModeError
from .lattice import ChainSpec, MomentumGrid, make_lf_grid


@dataclass(frozen=True)
class LFSpectrum:
    rows: tuple[tuple[float, float], ...]  # (k_plus, energy), k_plus ascending
    mass: float

    @property
    def k_plus(self) -> np.ndarray:
        return np.array([r[0] for r in self.rows])

    @property
    def energies(self) -> np.ndarray:
        return np.array([r[1] for r in self.rows])


@dataclass(frozen=True)
class MasslessRow:
    k1: float
    k_minus: float
    energy: float


@dataclass(frozen=True)
class LFEigenstate:
    """Occupation-number product state over an ordered list of LF modes."""

    modes: tuple[float, ...]
    occupied: frozenset[int]

    def __post_init__(self) -> None:
        if any(not 0 <= i < len(self.modes) for i in self.occupied):
            raise IndexError("occupied mode index out of range")

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(int(i in self.occupied) for i in range(len(self.modes)))

    def statevector(self) -> np.ndarray:
        v = np.zeros(1 << len(self.modes), dtype=complex)
        idx = 0
        for b in self.bits:
            idx = (idx << 1) | b
        v[idx] = 1.0
        return v


def lf_energy(k_plus: float, mass: float) -> float:
    if not k_plus > 0:
        raise ValueError(f"k+ must be positive, got {k_plus}")
    if mass == 0:
        raise OutOfDomainError("m = 0 makes k- vanish for every k+; use massless_lf_spectrum")
    if mass < 0:
        raise OutOfDomainError(f"LF spectrum needs m > 0, got {mass}")
    return mass * mass / (2.0 * k_plus)


def lf_spectrum(spec: ChainSpec, mass: float) -> LFSpectrum:
    grid = make_lf_grid(spec)
    rows = tuple((float(k), lf_energy(float(k), mass)) for k in grid.momenta)
    return LFSpectrum(rows, float(mass))


def mass_shell_check(k_plus: float, mass: float) -> tuple[float, float]:
    """(k0, k1) of the on-shell point with LF momentum k+ (k- = m^2 / k+)."""
    if not k_plus > 0:
        raise ValueError(f"k+ must be positive, got {k_plus}")
    if mass < 0:
        raise OutOfDomainError(f"mass must be non-negative, got {mass}")
    k_minus = mass * mass / k_plus
    return 0.5 * (k_plus + k_minus), 0.5 * (k_plus - k_minus)


def massless_case_split(k1: float) -> tuple[float, float]:
    """On the m = 0 shell: k1 > 0 -> (k+, k-) = (2 k1, 0); k1 < 0 -> (0, -2 k1)."""
    if k1 > 0:
        return 2.0 * k1, 0.0
    if k1 < 0:
        return 0.0, -2.0 * k1
    raise ZeroModeError("k1 = 0 is the zero mode; it belongs to neither branch")


def massless_lf_rows(momenta: Iterable[float]) -> list[MasslessRow]:
    """One row per negative IF momentum: label k- = -2 k1, energy 2|k1|."""
    rows = []
    for k1 in momenta:
        if k1 < 0:
            _, k_minus = massless_case_split(k1)
            rows.append(MasslessRow(float(k1), float(k_minus), 2.0 * abs(float(k1))))
    return rows


def massless_lf_spectrum(grid: MomentumGrid) -> list[MasslessRow]:
    if not grid.frame.is_instant_form:
        raise FrameError("the massless path quantizes in k- from an instant-form grid")
    return massless_lf_rows(grid.momenta)


def lf_vacuum(modes: Iterable[float]) -> LFEigenstate:
    return LFEigenstate(tuple(modes), frozenset())


def lf_single_particle_states(modes: Iterable[float]) -> list[LFEigenstate]:
    modes = tuple(modes)
    return [LFEigenstate(modes, frozenset({i})) for i in range(len(modes))]


def occupation_energy(state: LFEigenstate, energies: Iterable[float]) -> float:
    energies = list(energies)
    return math.fsum(energies[i] for i in state.occupied)
