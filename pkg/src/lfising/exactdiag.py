"""Dense exact-diagonalization oracle.

Everything here is brute force on purpose: dense matrices, full ``eigh``,
exhaustive Pauli enumeration. It exists to check the analytic momentum-space
results at small N, not to scale.

Conventions
-----------
Basis states are occupation/computational strings with qubit 0 the most
significant bit (``np.kron`` order). ``|0>`` is the -1 eigenstate of Z, so
``Z = 2n - 1`` and the single-qubit matrices are X = [[0,1],[1,0]],
Y = [[0,i],[-i,0]], Z = diag(-1, 1). They satisfy XY = iZ, and
(X - iY)/2 = |0><1| annihilates an occupied mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Sequence

import numpy as np

from .errors import SizeCapError
from .lattice import ChainSpec, MomentumGrid, Sector, make_if_grid

DEFAULT_MAX_SITES = 14
DEFAULT_MAX_SRE_QUBITS = 7
HERMITIAN_TOL = 1e-12
IMAG_TOL = 1e-10

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, 1j], [-1j, 0]], dtype=complex)
Z = np.diag([-1.0, 1.0]).astype(complex)
PAULI = {"I": I2, "X": X, "Y": Y, "Z": Z}

LOWER = (X - 1j * Y) / 2  # |0><1|
PARITY = np.diag([1.0, -1.0]).astype(complex)  # exp(i pi n) = -Z

_LETTER_FROM_BITS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}


def kron_all(ops: Sequence[np.ndarray]) -> np.ndarray:
    return reduce(np.kron, ops)


def site_operator(op: np.ndarray, site: int, n_qubits: int) -> np.ndarray:
    """Embed a single-qubit operator at 0-based ``site``."""
    ops = [I2] * n_qubits
    ops[site] = op
    return kron_all(ops)


def jw_operator(j: int, n_sites: int, *, string: str = "site") -> np.ndarray:
    """Dense annihilator c_j, 1-based ``j``.

    ``string="site"`` uses prod_{j'<j} Z_{j'} (the real-space chain map);
    ``string="parity"`` uses exp(i pi sum_{j'<j} n_{j'}) = prod(-Z), the
    momentum-qubit map. Both obey the canonical anticommutation relations.
    """
    if not 1 <= j <= n_sites:
        raise IndexError(f"site {j} outside 1..{n_sites}")
    if string == "site":
        s = Z
    elif string == "parity":
        s = PARITY
    else:
        raise ValueError(f"unknown string convention {string!r}")
    ops = [s] * (j - 1) + [LOWER] + [I2] * (n_sites - j)
    return kron_all(ops)


def momentum_mode_operators(spec: ChainSpec, sector: Sector | str) -> dict[int, np.ndarray]:
    """Site-space matrices of c_k = N^{-1/2} sum_j e^{-i k j a} c_j, keyed by grid numerator."""
    grid = make_if_grid(spec, sector)
    n = spec.n_sites
    cs = [jw_operator(j, n) for j in range(1, n + 1)]
    out = {}
    for num, k in zip(grid.numerators, grid.momenta):
        out[num] = sum(np.exp(-1j * k * j * spec.spacing) * cs[j - 1] for j in range(1, n + 1)) / math.sqrt(n)
    return out


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise SizeCapError(f"N={n} exceeds the dense-matrix cap of {cap} sites")


def _occ(b: int, j: int, n: int) -> int:
    return (b >> (n - 1 - j)) & 1


def _ladder(b: int, j: int, dagger: bool, n: int) -> tuple[int, int] | None:
    """Apply c_j or c_j^dagger (0-based j, site string) to basis state b."""
    occ = _occ(b, j, n)
    if occ == int(dagger):
        return None
    lower = b >> (n - j)  # bits of sites 0..j-1
    empties = j - bin(lower).count("1")
    sign = -1 if empties % 2 else 1
    return sign, b ^ (1 << (n - 1 - j))


def build_spin_hamiltonian(spec: ChainSpec, closed: bool = True, *, max_sites: int = DEFAULT_MAX_SITES) -> np.ndarray:
    """H = -(1/2) sum_j X_j X_{j+1} - (lambda/2) sum_j Z_j; ``closed`` adds X_N X_1."""
    n = spec.n_sites
    _check_cap(n, max_sites)
    dim = 1 << n
    H = np.zeros((dim, dim), dtype=complex)
    lam = spec.coupling
    bonds = [(j, j + 1) for j in range(n - 1)]
    if closed:
        # for N = 2 this doubles the single bond, as the literal ring sum does
        bonds.append((n - 1, 0))
    for b in range(dim):
        zsum = sum(2 * _occ(b, j, n) - 1 for j in range(n))
        H[b, b] += -0.5 * lam * zsum
        for i, j in bonds:
            H[b ^ (1 << (n - 1 - i)) ^ (1 << (n - 1 - j)), b] += -0.5
    return H


def _fermion_terms(spec: ChainSpec, bc: Sector | None):
    """Quadratic terms of -(1/2)(c+_j - c_j)(c+_l + c_l) as (coef, (j, dag), (l, dag))."""
    n = spec.n_sites
    terms = []
    pairs = [(j, j + 1, 1.0) for j in range(n - 1)]
    if bc is not None:
        pairs.append((n - 1, 0, float(Sector(bc).sign)))
    for j, l, s in pairs:
        c = -0.5 * s
        terms += [
            (c, (j, True), (l, True)),
            (c, (j, True), (l, False)),
            (-c, (j, False), (l, True)),
            (-c, (j, False), (l, False)),
        ]
    return terms


def build_fermion_hamiltonian(
    spec: ChainSpec,
    bc: Sector | str | None = Sector.ANTIPERIODIC,
    *,
    max_sites: int = DEFAULT_MAX_SITES,
) -> np.ndarray:
    """Dense matrix of sum_j [ (lambda/2)(2 n_j - 1) - (1/2)(c+_j - c_j)(c+_{j+1} + c_{j+1}) ].

    ``bc`` sets c_{N+1} = +c_1 (periodic) or -c_1 (antiperiodic); ``None``
    drops the boundary bond (open chain).
    """
    n = spec.n_sites
    _check_cap(n, max_sites)
    dim = 1 << n
    lam = spec.coupling
    H = np.zeros((dim, dim), dtype=complex)
    terms = _fermion_terms(spec, None if bc is None else Sector(bc))
    for b in range(dim):
        nf = bin(b).count("1")
        H[b, b] += 0.5 * lam * (2 * nf - n)
        for coef, (j, dj), (l, dl) in terms:
            r = _ladder(b, l, dl, n)
            if r is None:
                continue
            s1, b1 = r
            r = _ladder(b1, j, dj, n)
            if r is None:
                continue
            s2, b2 = r
            H[b2, b] += coef * s1 * s2
    return H


def fermion_parity(n_sites: int) -> np.ndarray:
    """Diagonal of (-1)^{N_f} in the computational basis."""
    counts = np.array([bin(b).count("1") for b in range(1 << n_sites)])
    return np.where(counts % 2 == 0, 1.0, -1.0)


def restrict(H: np.ndarray, mask: np.ndarray) -> np.ndarray:
    idx = np.flatnonzero(mask)
    return H[np.ix_(idx, idx)]


class GroundState(NamedTuple):
    energy: float
    state: np.ndarray
    degenerate: bool


def check_hermitian(H: np.ndarray, tol: float = HERMITIAN_TOL) -> None:
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    err = np.max(np.abs(H - H.conj().T)) if H.size else 0.0
    if err >= tol:
        raise ValueError(f"operator is not Hermitian (max |H - H^dagger| = {err:.3e})")


def ground_state(H: np.ndarray, *, degeneracy_tol: float = 1e-10) -> GroundState:
    check_hermitian(H)
    evals, evecs = np.linalg.eigh(H)
    scale = max(1.0, float(np.max(np.abs(evals))))
    degenerate = len(evals) > 1 and evals[1] - evals[0] < degeneracy_tol * scale
    v = evecs[:, 0]
    return GroundState(float(evals[0]), v / np.linalg.norm(v), bool(degenerate))


def computational_state(bits: Sequence[int]) -> np.ndarray:
    idx = 0
    for bit in bits:
        idx = (idx << 1) | int(bit)
    v = np.zeros(1 << len(bits), dtype=complex)
    v[idx] = 1.0
    return v


def n_qubits_of(state: np.ndarray) -> int:
    dim = state.shape[0]
    n = dim.bit_length() - 1
    if dim != 1 << n:
        raise ValueError(f"state dimension {dim} is not a power of two")
    return n


@dataclass(frozen=True)
class PauliString:
    """A word over {I, X, Y, Z}; ``ordering`` names the qubit convention it refers to
    (``"site"`` for real-space chains, ``"paired"`` for the (-k1, k1, -k2, k2, ...) momentum order)."""

    word: str
    ordering: str = "site"

    def __post_init__(self) -> None:
        bad = set(self.word) - set(PAULI)
        if bad:
            raise ValueError(f"invalid Pauli letters {sorted(bad)} in {self.word!r}")

    def __len__(self) -> int:
        return len(self.word)

    def matrix(self) -> np.ndarray:
        return kron_all([PAULI[c] for c in self.word])


def pauli_expectation(state: np.ndarray, pauli: PauliString | str) -> float:
    if isinstance(pauli, str):
        pauli = PauliString(pauli)
    n = n_qubits_of(state)
    if len(pauli) != n:
        raise ValueError(f"Pauli string of length {len(pauli)} applied to {n}-qubit state")
    val = np.vdot(state, pauli.matrix() @ state)
    if abs(val.imag) > IMAG_TOL:
        raise ValueError(f"<P> has imaginary part {val.imag:.3e}; state/operator convention bug")
    return float(val.real)


def _hadamard(n: int) -> np.ndarray:
    h = np.array([[1.0, 1.0], [1.0, -1.0]])
    return reduce(np.kron, [h] * n) if n else np.ones((1, 1))


def pauli_spectrum(state: np.ndarray) -> np.ndarray:
    """All 4^n expectations <P>, as an array indexed [x_mask, z_mask].

    Qubit q carries letter I/X/Y/Z for (x, z) bits (0,0)/(1,0)/(1,1)/(0,1),
    with qubit 0 the most significant bit of each mask. Uses
    <X^x Z_std^z> = sum_b (-1)^{z.b} psi*(b^x) psi(b), one Walsh-Hadamard
    transform per x mask.
    """
    n = n_qubits_of(state)
    dim = 1 << n
    b = np.arange(dim)
    xs = b[:, None] ^ b[None, :]  # [x, b] -> b ^ x
    F = np.conj(state[xs]) * state[None, :]
    E = F @ _hadamard(n)
    pop = np.array([bin(v).count("1") for v in range(dim)])
    zw = pop
    yw = pop[b[:, None] & b[None, :]]
    # Y = -sigma_y = -i X Z_std and Z = -Z_std in this codebase's convention
    phase = ((-1.0) ** zw)[None, :] * (1j ** yw)
    vals = phase * E
    if np.max(np.abs(vals.imag)) > IMAG_TOL:
        raise ValueError("Pauli spectrum has non-negligible imaginary parts")
    return vals.real


def mask_word(x: int, z: int, n: int) -> str:
    return "".join(
        _LETTER_FROM_BITS[((x >> (n - 1 - q)) & 1, (z >> (n - 1 - q)) & 1)] for q in range(n)
    )


def brute_force_sre(state: np.ndarray, q: int = 2, *, max_qubits: int = DEFAULT_MAX_SRE_QUBITS) -> float:
    """Stabilizer Renyi entropy M_q = ln( sum_P <P>^{2q} / 2^n ) / (1 - q), over all 4^n strings."""
    n = n_qubits_of(state)
    if n > max_qubits:
        raise SizeCapError(f"{n} qubits exceeds the 4^n enumeration guard of {max_qubits}")
    if q < 2:
        raise ValueError("q must be >= 2")
    norm = np.linalg.norm(state)
    if abs(norm - 1.0) > 1e-10:
        raise ValueError(f"state is not normalized (|psi| = {norm})")
    spec = pauli_spectrum(state)
    total = float(np.sum(np.abs(spec) ** (2 * q)))
    return math.log(total / (1 << n)) / (1 - q) + 0.0  # no -0.0


def reduced_density_matrix(state: np.ndarray, keep: Sequence[int]) -> np.ndarray:
    n = n_qubits_of(state)
    keep = list(keep)
    rest = [q for q in range(n) if q not in keep]
    psi = state.reshape([2] * n).transpose(keep + rest).reshape(1 << len(keep), -1)
    return psi @ psi.conj().T


def entanglement_entropy(state: np.ndarray, subsystem: Sequence[int]) -> float:
    """Von Neumann entropy (nats) of the qubits in ``subsystem``."""
    n = n_qubits_of(state)
    sub = list(subsystem)
    rest = [q for q in range(n) if q not in sub]
    if not sub or not rest:
        return 0.0
    psi = state.reshape([2] * n).transpose(sub + rest).reshape(1 << len(sub), -1)
    s = np.linalg.svd(psi, compute_uv=False)
    p = s**2
    p = p[p > 1e-15]
    return float(-np.sum(p * np.log(p)))
