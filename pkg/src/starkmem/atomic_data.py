"""Physical constants and the rubidium-85 D1 level structure.

Internal unit system (used everywhere downstream):
    angular frequency  rad/us
    magnetic field     mG
    length             cm
    intensity          mW/mm^2
Optical-domain inputs (detunings in GHz, polarizabilities in h*kHz/(V/cm)^2)
are converted at the data boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .angular_momentum import reduced_dipole

__all__ = [
    "PhysicalConstants",
    "HyperfineManifold",
    "TransitionLine",
    "TransitionCatalog",
    "AtomSystem",
    "load_rb85",
]

TWO_PI = 2.0 * math.pi

# CODATA 2018
_H_SI = 6.62607015e-34          # J s
_HBAR_SI = 1.054571817e-34      # J s
_C_SI = 2.99792458e8            # m/s
_EPS0_SI = 8.8541878128e-12     # F/m
_MU_B_OVER_H_MHZ_PER_G = 1.39962449361  # Bohr magneton / h

# Rubidium-85 D1 line (5S1/2 -> 5P1/2), standard reference data
_RB85_D1_FREQ_HZ = 377.107385690e12
_RB85_A_GROUND_HZ = 1.0119108130e9      # 5S1/2 magnetic-dipole constant
_RB85_A_EXCITED_HZ = 120.527e6          # 5P1/2 magnetic-dipole constant
_RB85_D1_GAMMA_HZ = 5.7500e6            # natural linewidth (/2pi)
_RB85_D1_DIPOLE_CM = 2.5377e-29         # |<J=1/2||er||J'=1/2>| in C m
_RB85_I_NUC = 2.5
_RB85_FS_SPLITTING_HZ = 7.123e12        # 5P fine-structure interval (D2 - D1)


@dataclass(frozen=True)
class PhysicalConstants:
    """Unit anchors and conversion factors."""

    bohr_magneton_over_h_mhz_per_g: float = _MU_B_OVER_H_MHZ_PER_G
    hbar_si: float = _HBAR_SI
    h_si: float = _H_SI
    speed_of_light_si: float = _C_SI
    epsilon0_si: float = _EPS0_SI

    @property
    def mu_b_radus_per_mg(self) -> float:
        """Zeeman rate: rad/us of phase per mG of field (per unit g_F m_F)."""
        return TWO_PI * self.bohr_magneton_over_h_mhz_per_g * 1e-3

    @property
    def intensity_to_field_sq(self) -> float:
        """(V/cm)^2 of squared half-amplitude (eps/2)^2 per mW/mm^2.

        I = (1/2) c eps0 eps^2 with eps the peak field amplitude, so
        (eps/2)^2 = I / (2 c eps0); the factor below folds in the
        mW/mm^2 -> W/m^2 and (V/m)^2 -> (V/cm)^2 conversions.
        """
        return 1000.0 / (2.0 * self.speed_of_light_si * self.epsilon0_si) / 1e4

    def field_sq_from_intensity(self, intensity_mw_mm2):
        return intensity_mw_mm2 * self.intensity_to_field_sq

    def intensity_from_field_sq(self, eps_half_sq_vcm2):
        return eps_half_sq_vcm2 / self.intensity_to_field_sq

    @property
    def hkhz_to_radus(self) -> float:
        """rad/us per h*kHz of energy."""
        return TWO_PI * 1e-3


@dataclass(frozen=True)
class HyperfineManifold:
    """One ground hyperfine manifold."""

    f: int
    g_factor: float

    @property
    def sublevels(self) -> tuple[int, ...]:
        return tuple(range(-self.f, self.f + 1))


@dataclass(frozen=True)
class TransitionLine:
    """One hyperfine component F -> F' of the D1 line."""

    f: int
    f_prime: int
    omega_radus: float          # transition angular frequency, rad/us
    gamma_radus: float          # natural linewidth, rad/us
    reduced_dipole_d: float     # <F||d||F'> in units of the J-basis element


@dataclass(frozen=True)
class TransitionCatalog:
    lines: dict[tuple[int, int], TransitionLine]
    hyperfine_splitting_radus: float
    fine_structure_splitting_radus: float

    def line(self, f: int, f_prime: int) -> TransitionLine:
        return self.lines[(f, f_prime)]

    def line_strength(self, f: int, f_prime: int) -> float:
        """S_FF' = |<F||d||F'>|^2 / d^2; sums to 1 over F' for each F."""
        return self.lines[(f, f_prime)].reduced_dipole_d ** 2

    def scalar_coefficient(self, f: int, f_prime: int) -> float:
        """Weight of the F->F' line in the scalar polarizability sum."""
        return (2.0 / 3.0) * self.line_strength(f, f_prime)


@dataclass(frozen=True)
class AtomSystem:
    species: str
    i_nuc: float
    constants: PhysicalConstants
    manifolds: dict[int, HyperfineManifold]
    catalog: TransitionCatalog
    dipole_si: float            # |<J||er||J'>| in C m

    def ground(self, f: int) -> HyperfineManifold:
        return self.manifolds[f]

    @property
    def hyperfine_splitting_ghz(self) -> float:
        return self.catalog.hyperfine_splitting_radus / TWO_PI * 1e-3

    def g_pair(self, m_f: int, m_f_prime: int) -> float:
        """Differential g-factor m'g' - m g for a two-photon pair (F=2 -> F=3)."""
        return m_f_prime * self.manifolds[3].g_factor - m_f * self.manifolds[2].g_factor


def load_rb85() -> AtomSystem:
    """Rubidium-85 with its D1-line hyperfine structure fully populated."""
    const = PhysicalConstants()

    # Landé g_F = g_J [F(F+1) - I(I+1) + J(J+1)] / [2F(F+1)] with g_J ~ 2:
    # F=2 -> -1/3, F=3 -> +1/3 for I = 5/2.
    manifolds = {
        2: HyperfineManifold(f=2, g_factor=-1.0 / 3.0),
        3: HyperfineManifold(f=3, g_factor=+1.0 / 3.0),
    }

    # hyperfine energy offsets E_F = (A/2)[F(F+1) - I(I+1) - J(J+1)], in Hz
    ground_offset = {2: -1.75 * _RB85_A_GROUND_HZ, 3: 1.25 * _RB85_A_GROUND_HZ}
    excited_offset = {2: -1.75 * _RB85_A_EXCITED_HZ, 3: 1.25 * _RB85_A_EXCITED_HZ}

    gamma_radus = TWO_PI * _RB85_D1_GAMMA_HZ * 1e-6
    lines = {}
    for f in (2, 3):
        for f_prime in (2, 3):
            freq_hz = _RB85_D1_FREQ_HZ + excited_offset[f_prime] - ground_offset[f]
            lines[(f, f_prime)] = TransitionLine(
                f=f,
                f_prime=f_prime,
                omega_radus=TWO_PI * freq_hz * 1e-6,
                gamma_radus=gamma_radus,
                reduced_dipole_d=reduced_dipole(f, f_prime, 0.5, 0.5, _RB85_I_NUC),
            )

    catalog = TransitionCatalog(
        lines=lines,
        hyperfine_splitting_radus=TWO_PI * (ground_offset[3] - ground_offset[2]) * 1e-6,
        fine_structure_splitting_radus=TWO_PI * _RB85_FS_SPLITTING_HZ * 1e-6,
    )
    return AtomSystem(
        species="rb85",
        i_nuc=_RB85_I_NUC,
        constants=const,
        manifolds=manifolds,
        catalog=catalog,
        dipole_si=_RB85_D1_DIPOLE_CM,
    )
