"""Instant-form and light-front quantizations of the transverse-field Ising chain.

Spectra, ground states, momentum-space entanglement and stabilizer Renyi
entropy, with dense exact diagonalization as a cross-check.
"""

from __future__ import annotations

from .bogoliubov import (
    MOMENTUM_FORM_SCALE,
    BogoliubovBlock,
    IFGroundState,
    block_ground_state,
    block_hamiltonian,
    bogoliubov_angle_continuum,
    bogoliubov_angle_lattice,
    bogoliubov_levels,
    build_if_ground_state,
    build_lattice_ground_state,
    if_excitation_energy,
    if_ground_energy,
)
from .errors import (
    DegenerateBlockError,
    FrameError,
    LFIsingError,
    OutOfDomainError,
    SizeCapError,
    UnpairedModeError,
    ZeroModeError,
)
from .exactdiag import (
    PauliString,
    brute_force_sre,
    build_fermion_hamiltonian,
    build_spin_hamiltonian,
    ground_state,
    pauli_expectation,
)
from .lattice import (
    ChainSpec,
    Frame,
    MomentumGrid,
    Sector,
    continuum_dispersion,
    lattice_dispersion,
    make_if_grid,
    make_lf_grid,
    mass_from_coupling,
)
from .lightfront import LFEigenstate, LFSpectrum, lf_spectrum, massless_lf_spectrum, mass_shell_check
from .resources import (
    ResourceReport,
    analytic_m2_contribution,
    block_m2,
    block_pauli_table,
    if_resource_report,
    lf_resource_report,
    magic_sweep,
    pair_entanglement_entropy,
    qubitize_ordering,
)

__version__ = "0.1.0"
