"""Momentum-space quantum resources: qubit ordering, per-pair Pauli tables,
pair entanglement and the q=2 stabilizer Renyi entropy ("magic").

All entropies are in nats. Magic is additive over +-k pairs because the IF
ground state is a product of even-parity pair states, so Jordan-Wigner
strings reaching across pairs act trivially.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import exactdiag
from .bogoliubov import build_if_ground_state
from .errors import FrameError, OutOfDomainError, UnpairedModeError
from .lattice import (
    ChainSpec,
    MomentumGrid,
    Sector,
    make_if_grid,
    make_lf_grid,
    mass_from_coupling,
    require_nonnegative_mass,
)
from .lightfront import lf_single_particle_states, lf_vacuum, massless_lf_spectrum

BLOCK_WORDS = tuple("".join(p) for p in itertools.product("IXYZ", repeat=2))


@dataclass(frozen=True)
class QubitOrdering:
    """Momentum labels in paired order (-k1, k1, -k2, k2, ...), k_i ascending."""

    labels: tuple[float, ...]
    numerators: tuple[int, ...]
    excluded: tuple[float, ...] = ()

    def __len__(self) -> int:
        return len(self.labels)


def qubitize_ordering(grid: MomentumGrid, *, exclude_unpaired: bool = False) -> QubitOrdering:
    if not grid.frame.is_instant_form:
        raise FrameError("momentum qubitization needs an instant-form grid")
    if not grid.is_paired and not exclude_unpaired:
        raise UnpairedModeError(
            f"grid has unpaired momenta {[grid.momentum(n) for n in grid.self_conjugate]}; "
            "pass exclude_unpaired=True to drop them"
        )
    nums = []
    for n in sorted(grid.pair_numerators):
        nums += [-n, n]
    return QubitOrdering(
        tuple(grid.momentum(n) for n in nums),
        tuple(nums),
        tuple(grid.momentum(n) for n in grid.self_conjugate),
    )


def block_pauli_table(phi: float) -> dict[str, float]:
    """Ground-state expectations of the 16 two-qubit words on a (-k, k) pair.

    The first letter acts on -k, the second on k. In this package's
    conventions the XY and YX entries come out as +sin 2phi.
    """
    c2, s2 = math.cos(2 * phi), math.sin(2 * phi)
    table = dict.fromkeys(BLOCK_WORDS, 0.0)
    table.update(II=1.0, ZZ=1.0, IZ=-c2, ZI=-c2, XY=s2, YX=s2)
    return table


def pair_entanglement_entropy(phi: float) -> float:
    """Entropy of either mode of cos(phi)|00> - i sin(phi)|11>."""
    out = 0.0
    for p in (math.cos(phi) ** 2, math.sin(phi) ** 2):
        if p > 0:
            out -= p * math.log(p)
    return out


def block_m2(phi: float) -> float:
    """Per-pair M2 from the angle: -ln((1 + cos^4 2phi + sin^4 2phi) / 2)."""
    c2, s2 = math.cos(2 * phi), math.sin(2 * phi)
    return -math.log((1.0 + c2**4 + s2**4) / 2.0) + 0.0


def block_mq(phi: float, q: int = 2) -> float:
    """Per-pair M_q: ln((1 + cos^{2q} 2phi + sin^{2q} 2phi) / 2) / (1 - q)."""
    if q < 2:
        raise ValueError("q must be >= 2")
    c2, s2 = math.cos(2 * phi), math.sin(2 * phi)
    return math.log((1.0 + c2 ** (2 * q) + s2 ** (2 * q)) / 2.0) / (1 - q) + 0.0


def analytic_m2_contribution(k: float, mass: float) -> float:
    """-ln(1 - (k m / (k^2 + m^2))^2); zero iff k m = 0, ln(4/3) at k = m."""
    if not k > 0:
        raise ValueError(f"k must be positive, got {k}")
    mass = require_nonnegative_mass(mass)
    r = k * mass / (k * k + mass * mass)
    return -math.log1p(-r * r)


@dataclass(frozen=True)
class BlockResource:
    k: float
    entanglement_entropy: float
    m2: float


@dataclass(frozen=True)
class ResourceReport:
    frame: str  # "IF" or "LF"
    per_block: tuple[BlockResource, ...]

    @property
    def total_entropy(self) -> float:
        return math.fsum(b.entanglement_entropy for b in self.per_block)

    @property
    def total_m2(self) -> float:
        return math.fsum(b.m2 for b in self.per_block)


def if_resource_report(grid: MomentumGrid, mass: float, *, exclude_unpaired: bool = False) -> ResourceReport:
    """Per-pair entropy and M2 of the IF ground state (continuum angles) on ``grid``."""
    mass = require_nonnegative_mass(mass)
    ordering = qubitize_ordering(grid, exclude_unpaired=exclude_unpaired)
    state = build_if_ground_state(grid, mass)
    assert len(state.momenta) * 2 == len(ordering)
    rows = tuple(
        BlockResource(float(k), pair_entanglement_entropy(phi), analytic_m2_contribution(k, mass))
        for k, phi in zip(state.momenta, state.angles)
    )
    return ResourceReport("IF", rows)


def _spot_check_product_states(states, max_qubits: int = 8) -> None:
    for st in states:
        v = st.statevector()
        n = exactdiag.n_qubits_of(v)
        if n <= max_qubits:
            m2 = exactdiag.brute_force_sre(v, 2, max_qubits=max_qubits)
            if abs(m2) > 1e-10:
                raise RuntimeError(f"LF occupation state {st.bits} has M2 = {m2}")
        for q in range(n):
            s = exactdiag.entanglement_entropy(v, [q])
            if abs(s) > 1e-10:
                raise RuntimeError(f"LF occupation state {st.bits} has mode entropy {s}")


def lf_modes(spec: ChainSpec, mass: float, sector: Sector | str = Sector.PERIODIC) -> tuple[float, ...]:
    """LF mode labels: k+ on the DLCQ grid when m > 0, k- from negative IF momenta when m = 0."""
    mass = require_nonnegative_mass(mass)
    if mass > 0:
        return tuple(float(k) for k in make_lf_grid(spec).momenta)
    return tuple(r.k_minus for r in massless_lf_spectrum(make_if_grid(spec, sector)))


def lf_resource_report(
    spec: ChainSpec,
    mass: float,
    *,
    sector: Sector | str = Sector.PERIODIC,
    spot_check: bool = True,
) -> ResourceReport:
    """LF eigenstates are occupation-basis products, so every entry is 0.

    With ``spot_check`` the vacuum and all single-particle states are
    assembled and checked by brute force (entropy per mode, exhaustive M2).
    """
    modes = lf_modes(spec, mass, sector)
    if spot_check:
        _spot_check_product_states([lf_vacuum(modes), *lf_single_particle_states(modes)])
    return ResourceReport("LF", tuple(BlockResource(k, 0.0, 0.0) for k in modes))


@dataclass(frozen=True)
class SweepRow:
    coupling: float
    mass: float
    total_m2: float
    total_entropy: float


def magic_sweep(spec: ChainSpec, couplings: Iterable[float]) -> list[SweepRow]:
    """IF magic and pair entanglement on the antiperiodic grid for each lambda in [0, 1]."""
    grid = make_if_grid(spec, Sector.ANTIPERIODIC)
    rows = []
    for lam in couplings:
        if not 0.0 <= lam <= 1.0:
            raise OutOfDomainError(f"sweep coupling {lam} outside [0, 1]")
        m = mass_from_coupling(lam, spec.spacing)
        rep = if_resource_report(grid, m)
        rows.append(SweepRow(float(lam), m, rep.total_m2, rep.total_entropy))
    return rows


def block_expectations(state: np.ndarray, words: Sequence[str] = BLOCK_WORDS) -> dict[str, float]:
    """Brute-force counterpart of :func:`block_pauli_table` for any 2-qubit state."""
    return {w: exactdiag.pauli_expectation(state, w) for w in words}
