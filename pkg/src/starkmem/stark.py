"""Dynamic polarizabilities, AC Stark shifts, and beam-to-field conversion.

The level shift of |F, m_F> in a far-detuned beam decomposes as

    dE = -(eps/2)^2 [ a_S
                      + (k.B) q (m_F / 2F) a_V
                      + (3|zeta.B|^2 - 1) (3 m_F^2 - F(F+1)) / (2F(2F-1)) a_T ]

with (eps/2)^2 the squared half-amplitude of the optical field, q the degree
of circular polarization, k.B the projection of the propagation axis on the
quantization axis, and zeta.B the polarization-vector projection.  The three
polarizabilities are hyperfine-resolved sums over the two D1 excited levels,
with counter-rotating terms kept (denominators w_line^2 - w^2).

Normalization note: the vector sum below follows the hyperfine-decomposition
convention used for this package's reference values.  A direct second-order
sum over Zeeman sublevels (see the test oracles) yields exactly twice this
m_F-linear slope for pure circular light; the `calibration` field of
BeamConfig lets callers rescale predicted fields if they want to match that
convention or an experimental calibration.  It defaults to 1.0 and is never
applied implicitly to anything but field predictions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .angular_momentum import wigner6j
from .atomic_data import TWO_PI, AtomSystem
from .errors import DivisionNearZero, NearResonance

__all__ = [
    "BeamConfig",
    "PolynomialIntensity",
    "SampledIntensity",
    "Polarizabilities",
    "StarkShift",
    "detuning_radus_from_ghz",
    "wave_plate_q",
    "laser_omega",
    "polarizabilities",
    "stark_shift",
    "simplified_vector_shift",
    "fictitious_field_slope",
    "fictitious_field",
    "fictitious_field_per_pair",
]

# energy unit of the public polarizabilities: h*kHz/(V/cm)^2, expressed in SI
_HKHZ_PER_VCM2_SI = 6.62607015e-34 * 1e3 / 1e4

# operating detuning at which the simplified I*Gamma/delta law is calibrated
_SIMPLIFIED_REFERENCE_RADUS = TWO_PI * 25.6e3

_RESONANCE_GUARD_LINEWIDTHS = 100.0


def detuning_radus_from_ghz(detuning_ghz: float) -> float:
    """GHz of optical detuning -> internal rad/us."""
    return TWO_PI * detuning_ghz * 1e3


def wave_plate_q(theta_rad: float) -> float:
    """Degree of circular polarization after a quarter-wave plate at angle theta."""
    return math.sin(2.0 * theta_rad)


@dataclass(frozen=True)
class PolynomialIntensity:
    """I(z) = c0 + c1 z + c2 z^2, mW/mm^2 with z in cm."""

    c0: float
    c1: float = 0.0
    c2: float = 0.0

    def __call__(self, z_cm):
        z = np.asarray(z_cm, dtype=float)
        return self.c0 + self.c1 * z + self.c2 * z * z


@dataclass(frozen=True)
class SampledIntensity:
    """Tabulated I(z); linear interpolation, edge-clamped outside the table."""

    z_cm: np.ndarray
    values_mw_mm2: np.ndarray

    def __post_init__(self):
        z = np.asarray(self.z_cm, dtype=float)
        v = np.asarray(self.values_mw_mm2, dtype=float)
        if z.ndim != 1 or z.shape != v.shape:
            raise ValueError("z grid and intensity samples must be 1-D and equal length")
        if np.any(np.diff(z) <= 0):
            raise ValueError("intensity sample grid must be strictly increasing")
        if np.any(v < 0):
            raise ValueError("intensity must be non-negative")
        object.__setattr__(self, "z_cm", z)
        object.__setattr__(self, "values_mw_mm2", v)

    def __call__(self, z_cm):
        return np.interp(np.asarray(z_cm, dtype=float), self.z_cm, self.values_mw_mm2)


@dataclass(frozen=True)
class BeamConfig:
    """A single far-detuned beam.

    detuning_radus is signed, relative to the F=2 -> F'=3 line; positive
    means the laser sits above that resonance.
    """

    detuning_radus: float
    intensity: float | PolynomialIntensity | SampledIntensity = 0.0
    q: float = 1.0
    k_dot_b: float = 1.0
    zeta_dot_b_sq: float = 2.0 / 3.0   # makes the tensor angular factor unity
    calibration: float = 1.0

    def __post_init__(self):
        if abs(self.q) > 1.0 + 1e-12:
            raise ValueError("polarization q must lie in [-1, 1]")
        if abs(self.k_dot_b) > 1.0 + 1e-12:
            raise ValueError("k_dot_b must lie in [-1, 1]")
        if not 0.0 <= self.zeta_dot_b_sq <= 1.0 + 1e-12:
            raise ValueError("zeta_dot_b_sq must lie in [0, 1]")
        if isinstance(self.intensity, (int, float)) and self.intensity < 0:
            raise ValueError("intensity must be non-negative")

    @property
    def scalar_intensity(self) -> float:
        if not isinstance(self.intensity, (int, float)):
            raise TypeError("beam carries a spatial intensity profile, not a scalar")
        return float(self.intensity)

    def intensity_at(self, z_cm):
        if isinstance(self.intensity, (int, float)):
            return np.full_like(np.asarray(z_cm, dtype=float), float(self.intensity))
        return self.intensity(z_cm)

    def with_intensity(self, intensity) -> "BeamConfig":
        return replace(self, intensity=intensity)


@dataclass(frozen=True)
class Polarizabilities:
    """Scalar/vector/tensor dynamic polarizabilities, h*kHz/(V/cm)^2."""

    alpha_s: float
    alpha_v: float
    alpha_t: float


@dataclass(frozen=True)
class StarkShift:
    """Shift components for one (F, m_F), rad/us."""

    scalar: float
    vector: float
    tensor: float

    @property
    def total(self) -> float:
        return self.scalar + self.vector + self.tensor


def laser_omega(atom: AtomSystem, detuning_radus: float) -> float:
    """Absolute laser angular frequency (rad/us) for a detuning from F=2 -> F'=3."""
    return atom.catalog.line(2, 3).omega_radus + detuning_radus


def _check_resonance(atom: AtomSystem, omega_radus: float) -> None:
    for line in atom.catalog.lines.values():
        if abs(omega_radus - line.omega_radus) < _RESONANCE_GUARD_LINEWIDTHS * line.gamma_radus:
            raise NearResonance(
                f"laser within {_RESONANCE_GUARD_LINEWIDTHS:.0f} linewidths of the "
                f"F={line.f} -> F'={line.f_prime} line"
            )


def _vector_weight(f: int, f_prime: int) -> float:
    pref = math.sqrt(6.0 * f * (2 * f + 1) / (f + 1))
    sign = -1.0 if (f + f_prime + 1) % 2 else 1.0
    return sign * pref * wigner6j(1, 1, 1, f, f, f_prime)


def _tensor_weight(f: int, f_prime: int) -> float:
    pref = math.sqrt(40.0 * f * (2 * f + 1) * (2 * f - 1) / (3.0 * (f + 1) * (2 * f + 3)))
    sign = -1.0 if (f + f_prime) % 2 else 1.0
    return sign * pref * wigner6j(1, 1, 2, f, f, f_prime)


def polarizabilities(atom: AtomSystem, manifold: int, optical_omega_radus: float) -> Polarizabilities:
    """Hyperfine-resolved a_S, a_V, a_T of a ground manifold at a laser frequency.

    The scalar and tensor sums carry the line frequency in the numerator; the
    vector sum carries the laser frequency, which restores the exact static
    limit a_V -> 0 as omega -> 0 and is indistinguishable from the line
    frequency at the detunings used here (relative difference < 1e-4).

    Raises NearResonance within 100 natural linewidths of any D1 component.
    """
    _check_resonance(atom, optical_omega_radus)
    hbar = atom.constants.hbar_si
    d2 = atom.dipole_si ** 2
    omega_si = optical_omega_radus * 1e6
    a_s = a_v = a_t = 0.0
    for f_prime in (2, 3):
        line = atom.catalog.line(manifold, f_prime)
        strength = atom.catalog.line_strength(manifold, f_prime)
        w_si = line.omega_radus * 1e6
        den = hbar * (w_si * w_si - omega_si * omega_si)
        a_s += (2.0 / 3.0) * strength * d2 * w_si / den
        a_v += _vector_weight(manifold, f_prime) * strength * d2 * omega_si / den
        a_t += _tensor_weight(manifold, f_prime) * strength * d2 * w_si / den
    return Polarizabilities(
        alpha_s=a_s / _HKHZ_PER_VCM2_SI,
        alpha_v=a_v / _HKHZ_PER_VCM2_SI,
        alpha_t=a_t / _HKHZ_PER_VCM2_SI,
    )


def stark_shift(atom: AtomSystem, manifold: int, m_f: int, beam: BeamConfig,
                intensity_mw_mm2: float | None = None) -> StarkShift:
    """Scalar/vector/tensor shift of |F, m_F| in the given beam, rad/us.

    `intensity_mw_mm2` overrides the beam's scalar intensity (used when the
    beam carries a spatial profile and a point value is wanted).
    """
    f = manifold
    if abs(m_f) > f:
        raise ValueError(f"|m_F| = {abs(m_f)} exceeds F = {f}")
    intensity = beam.scalar_intensity if intensity_mw_mm2 is None else float(intensity_mw_mm2)
    alpha = polarizabilities(atom, f, laser_omega(atom, beam.detuning_radus))
    eps_half_sq = atom.constants.field_sq_from_intensity(intensity)
    to_radus = atom.constants.hkhz_to_radus
    scalar = -eps_half_sq * alpha.alpha_s * to_radus
    vector = -eps_half_sq * beam.k_dot_b * beam.q * (m_f / (2.0 * f)) * alpha.alpha_v * to_radus
    tensor_angular = 3.0 * beam.zeta_dot_b_sq - 1.0
    tensor_structure = (3.0 * m_f * m_f - f * (f + 1)) / (2.0 * f * (2 * f - 1))
    tensor = -eps_half_sq * tensor_angular * tensor_structure * alpha.alpha_t * to_radus
    return StarkShift(scalar=scalar, vector=vector, tensor=tensor)


def simplified_vector_shift(atom: AtomSystem, manifold: int, m_f: int, beam: BeamConfig,
                            intensity_mw_mm2: float | None = None) -> float:
    """Far-detuned estimate of the vector shift, q m_F I Gamma / delta_F (rad/us).

    delta_F is the laser detuning from the manifold's F -> F'=3 line.  The
    proportionality constant is pinned so the estimate agrees exactly with
    the full vector shift at a reference detuning 2pi x 25.6e3 rad/us above
    the F=2 -> F'=3 line.
    """
    line = atom.catalog.line(manifold, 3)
    gamma = line.gamma_radus
    delta_f = laser_omega(atom, beam.detuning_radus) - line.omega_radus
    if abs(delta_f) < _RESONANCE_GUARD_LINEWIDTHS * gamma:
        raise DivisionNearZero(
            f"|detuning from the F={manifold} -> F'=3 line| below "
            f"{_RESONANCE_GUARD_LINEWIDTHS:.0f} linewidths"
        )
    intensity = beam.scalar_intensity if intensity_mw_mm2 is None else float(intensity_mw_mm2)
    ref_beam = replace(beam, detuning_radus=_SIMPLIFIED_REFERENCE_RADUS, intensity=1.0)
    ref_full = stark_shift(atom, manifold, 1, ref_beam).vector / beam.q if beam.q else None
    if ref_full is None:
        # vector term is identically zero for linear polarization
        return 0.0
    ref_delta = laser_omega(atom, _SIMPLIFIED_REFERENCE_RADUS) - line.omega_radus
    coeff = ref_full * ref_delta / gamma
    return coeff * beam.q * m_f * intensity * gamma / delta_f


def fictitious_field_slope(atom: AtomSystem, beam: BeamConfig, q_storage: int = 1) -> float:
    """Equivalent bias field per unit intensity, mG per mW/mm^2.

    The equivalence is referenced to the two-photon pair (m_F = 0 ->
    m_F' = q_storage): the beam's differential vector phase rate for that
    pair equals mu_B g_FF' B_AC.  The result is independent of the sign of
    q_storage.  The beam's calibration factor multiplies the outcome.
    """
    alpha = polarizabilities(atom, 3, laser_omega(atom, beam.detuning_radus))
    per_intensity = atom.constants.intensity_to_field_sq  # (V/cm)^2 per mW/mm^2
    # pair rate / (mu_B g_FF') with g_FF'(0, qs) = qs * g_3
    rate_hkhz = -per_intensity * beam.k_dot_b * beam.q * alpha.alpha_v / 2.0
    field_mg = rate_hkhz * 1e-3 / atom.constants.bohr_magneton_over_h_mhz_per_g * 1e3
    return field_mg * beam.calibration


def fictitious_field(atom: AtomSystem, beam: BeamConfig) -> float:
    """Equivalent bias field (mG) of a uniform beam; linear in intensity."""
    return fictitious_field_slope(atom, beam) * beam.scalar_intensity


def fictitious_field_per_pair(atom: AtomSystem, beam: BeamConfig,
                              q_storage: int = 1) -> dict[int, float]:
    """Pair-resolved equivalent fields (mG), keyed by the lower-manifold m_F.

    Because the two manifolds' vector polarizabilities are not exactly in
    their g-factor ratio, the equivalent field depends weakly on which
    (m_F, m_F' = m_F + q_storage) pair defines it.  Pairs whose differential
    g-factor vanishes are omitted.
    """
    intensity = beam.scalar_intensity
    mu = atom.constants.mu_b_radus_per_mg
    fields = {}
    for m_f in atom.ground(2).sublevels:
        m_fp = m_f + q_storage
        if abs(m_fp) > 3:
            continue
        g_pair = atom.g_pair(m_f, m_fp)
        if g_pair == 0.0:
            continue
        rate = (
            stark_shift(atom, 3, m_fp, beam, intensity_mw_mm2=intensity).vector
            - stark_shift(atom, 2, m_f, beam, intensity_mw_mm2=intensity).vector
        )
        fields[m_f] = rate / (mu * g_pair) * beam.calibration
    return fields
