"""Chain parameters, discrete momentum grids and dispersion relations.

Momenta are stored as integer numerators of the unit ``pi / (N a)`` so that
grid membership and pairing tests never compare floats.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomainError


class Frame(str, enum.Enum):
    IF_PERIODIC = "if_periodic"
    IF_ANTIPERIODIC = "if_antiperiodic"
    LF_DLCQ = "lf_dlcq"

    @property
    def is_instant_form(self) -> bool:
        return self is not Frame.LF_DLCQ


class Sector(str, enum.Enum):
    """Fermionic boundary condition c_{N+1} = +c_1 (periodic) or -c_1 (antiperiodic)."""

    PERIODIC = "periodic"
    ANTIPERIODIC = "antiperiodic"

    @property
    def sign(self) -> int:
        return 1 if self is Sector.PERIODIC else -1


@dataclass(frozen=True)
class ChainSpec:
    """A closed chain of ``n_sites`` spins with lattice constant ``spacing``
    in a transverse field of relative strength ``coupling`` (lambda)."""

    n_sites: int
    spacing: float = 1.0
    coupling: float = 0.0

    def __post_init__(self) -> None:
        if isinstance(self.n_sites, bool) or int(self.n_sites) != self.n_sites:
            raise ValueError(f"n_sites must be an integer, got {self.n_sites!r}")
        object.__setattr__(self, "n_sites", int(self.n_sites))
        if self.n_sites < 2 or self.n_sites % 2:
            raise ValueError(f"n_sites must be even and >= 2, got {self.n_sites}")
        if not self.spacing > 0:
            raise ValueError(f"spacing must be positive, got {self.spacing}")
        if not self.coupling >= 0:
            raise ValueError(f"coupling must be non-negative, got {self.coupling}")

    @property
    def length(self) -> float:
        return self.n_sites * self.spacing

    @property
    def mass(self) -> float:
        """Continuum mass (1 - lambda)/a; negative above the critical coupling."""
        return mass_from_coupling(self.coupling, self.spacing, allow_negative=True)


@dataclass(frozen=True)
class MomentumGrid:
    frame: Frame
    n_sites: int
    spacing: float
    numerators: tuple[int, ...]

    @property
    def unit(self) -> float:
        return math.pi / (self.n_sites * self.spacing)

    @property
    def momenta(self) -> np.ndarray:
        return np.asarray(self.numerators, dtype=float) * self.unit

    def __len__(self) -> int:
        return len(self.numerators)

    def momentum(self, numerator: int) -> float:
        return numerator * self.unit

    def is_self_conjugate(self, numerator: int) -> bool:
        # k == -k  (mod 2 pi / a)  <=>  2 * num == 0  (mod 2N)
        return numerator % self.n_sites == 0

    @property
    def self_conjugate(self) -> tuple[int, ...]:
        return tuple(n for n in self.numerators if self.is_self_conjugate(n))

    @property
    def pair_numerators(self) -> tuple[int, ...]:
        """Positive numerators whose negatives are also on the grid (one per +-k block)."""
        present = set(self.numerators)
        return tuple(
            n for n in self.numerators
            if n > 0 and -n in present and not self.is_self_conjugate(n)
        )

    @property
    def is_paired(self) -> bool:
        return 2 * len(self.pair_numerators) == len(self.numerators)


def make_if_grid(spec: ChainSpec, sector: Sector | str = Sector.PERIODIC) -> MomentumGrid:
    sector = Sector(sector)
    half = spec.n_sites // 2
    if sector is Sector.PERIODIC:
        nums = tuple(2 * n for n in range(-half, half))
        frame = Frame.IF_PERIODIC
    else:
        nums = tuple(2 * n + 1 for n in range(-half, half))
        frame = Frame.IF_ANTIPERIODIC
    return MomentumGrid(frame, spec.n_sites, spec.spacing, nums)


def make_lf_grid(spec: ChainSpec) -> MomentumGrid:
    """DLCQ grid k+_n = 2 pi n / (N a), n = 1..N."""
    nums = tuple(2 * n for n in range(1, spec.n_sites + 1))
    return MomentumGrid(Frame.LF_DLCQ, spec.n_sites, spec.spacing, nums)


def lattice_dispersion(k, coupling: float, spacing: float = 1.0):
    """omega_k = sqrt(lambda^2 - 2 lambda cos(k a) + 1). Accepts scalars or arrays."""
    if not spacing > 0:
        raise ValueError("spacing must be positive")
    ka = np.asarray(k, dtype=float) * spacing
    # clip tiny negative round-off at lambda = 1, k = 0
    w = np.sqrt(np.maximum(coupling * coupling - 2.0 * coupling * np.cos(ka) + 1.0, 0.0))
    return float(w) if np.ndim(w) == 0 else w


def continuum_dispersion(k, mass: float):
    w = np.hypot(mass, np.asarray(k, dtype=float))
    return float(w) if np.ndim(w) == 0 else w


def mass_from_coupling(coupling: float, spacing: float, *, allow_negative: bool = False) -> float:
    """m = (1 - lambda) / a.

    Above the critical coupling the result is negative; that is only accepted
    with ``allow_negative=True`` (lattice-level callers). Continuum resource
    formulas need m >= 0 and use the default.
    """
    if not spacing > 0:
        raise ValueError("spacing must be positive")
    if coupling > 1.0 and not allow_negative:
        raise OutOfDomainError(
            f"coupling {coupling} > 1 gives negative continuum mass; "
            "continuum formulas require 0 <= lambda <= 1"
        )
    return (1.0 - coupling) / spacing


def require_nonnegative_mass(mass: float) -> float:
    if not mass >= 0:
        raise OutOfDomainError(f"mass must be non-negative, got {mass}")
    return float(mass)
