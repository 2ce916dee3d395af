"""Rotating-emitter geometry and the effective fields rotation induces.

The rotation axis is fixed to +z throughout the library.  The orbit vector R
is placed along -y and the orbital velocity along +x, so that v_c = Omega x R
holds as an exact vector identity (the spectra themselves are orientation
independent, which the test suite checks).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .constants import CODATA2018, PhysicalConstants
from .errors import ResonanceError, ValidationError

#: Minimum allowed |omega0^2 - Omega^2| as a fraction of omega0^2.  Closer to
#: the trap resonance the displaced-frame construction has diverging
#: denominators and no stationary rotating-frame spectrum to report.
RESONANCE_TOLERANCE = 1e-6


@dataclass(frozen=True)
class Harmonic:
    """Isotropic harmonic binding with trap frequency omega0 (rad/s)."""
    omega0: float

    def __post_init__(self):
        if not self.omega0 > 0:
            raise ValidationError("trap frequency omega0 must be positive")


@dataclass(frozen=True)
class Coulomb:
    """Hydrogen-like binding with nuclear charge Z."""
    Z: int = 1

    def __post_init__(self):
        if not isinstance(self.Z, int) or isinstance(self.Z, bool) or self.Z < 1:
            raise ValidationError("nuclear charge Z must be an integer >= 1")


@dataclass(frozen=True)
class RotorConfig:
    """Uniform rotation of a bound emitter about the z axis.

    Omega is the signed rotation rate in rad/s, R the orbit radius in m
    (distance from the axis to the binding center), and model selects the
    binding potential.
    """

    Omega: float
    R: float
    model: Union[Harmonic, Coulomb]

    def __post_init__(self):
        if not np.isfinite(self.Omega):
            raise ValidationError("rotation rate must be finite")
        if not (np.isfinite(self.R) and self.R >= 0):
            raise ValidationError("orbit radius must be finite and nonnegative")
        if isinstance(self.model, Harmonic):
            w0sq = self.model.omega0 ** 2
            if abs(w0sq - self.Omega ** 2) < RESONANCE_TOLERANCE * w0sq:
                raise ResonanceError(
                    "rotation rate within the resonance guard band of the trap frequency")

    @property
    def v_c(self) -> float:
        """Orbital velocity Omega*R (m/s, signed with Omega)."""
        return self.Omega * self.R

    @property
    def omega_vec(self) -> np.ndarray:
        return np.array([0.0, 0.0, self.Omega])

    @property
    def radius_vec(self) -> np.ndarray:
        return np.array([0.0, -self.R, 0.0])

    @property
    def velocity_vec(self) -> np.ndarray:
        # Omega x R with the fixed axes above: z x (-y) = +x
        return np.array([self.Omega * self.R, 0.0, 0.0])


@dataclass(frozen=True)
class CrossedFields:
    """Effective crossed fields acting on the bound electron.

    pseudo_E (V/m) is the centrifugal-equivalent electric field in the
    orbital plane, pseudo_B (T) the Coriolis-equivalent magnetic field along
    the rotation axis, and drive_E (V/m) an optional genuine electric field
    added to the Stark part.
    """

    pseudo_E: np.ndarray
    pseudo_B: np.ndarray
    drive_E: Optional[np.ndarray] = None

    def __post_init__(self):
        for name in ("pseudo_E", "pseudo_B", "drive_E"):
            v = getattr(self, name)
            if v is None:
                continue
            v = np.asarray(v, dtype=float)
            if v.shape != (3,) or not np.all(np.isfinite(v)):
                raise ValidationError(f"{name} must be a finite 3-vector")
            object.__setattr__(self, name, v)
        planar = float(np.hypot(self.pseudo_B[0], self.pseudo_B[1]))
        if planar > 1e-12 * max(1.0, float(np.abs(self.pseudo_B[2]))):
            raise ValidationError("pseudo-magnetic field must lie along the rotation axis")

    def total_stark_field(self) -> np.ndarray:
        """Vector sum of the pseudo-electric and drive fields."""
        if self.drive_E is None:
            return self.pseudo_E.copy()
        return self.pseudo_E + self.drive_E

    def total_stark_magnitude(self) -> float:
        return float(np.linalg.norm(self.total_stark_field()))


def fictitious_fields(rotor: RotorConfig,
                      constants: PhysicalConstants = CODATA2018) -> CrossedFields:
    """Crossed fields that mimic the inertial forces of uniform rotation.

    The electron feels an effective electric field with e*E = m Omega^2 R
    pointing along the orbit vector and an effective magnetic field with
    e*B = 2 m Omega along the axis.  Both vanish for Omega = 0.
    """
    m = constants.electron_mass
    e = constants.elementary_charge
    E_vec = (m * rotor.Omega ** 2 / e) * rotor.radius_vec
    B_vec = np.array([0.0, 0.0, 2.0 * m * rotor.Omega / e])
    return CrossedFields(pseudo_E=E_vec, pseudo_B=B_vec)


def drive_field_vector(rotor: RotorConfig, magnitude: float,
                       antiparallel: bool = False) -> np.ndarray:
    """True drive field along the orbit vector, of the given magnitude (V/m).

    antiparallel=True points it against the centrifugal pseudo-field so the
    two Stark contributions compete instead of adding.
    """
    if magnitude < 0:
        raise ValidationError("drive field magnitude must be nonnegative")
    if rotor.R == 0:
        raise ValidationError("drive orientation undefined for zero orbit radius")
    rhat = rotor.radius_vec / rotor.R
    return (-magnitude if antiparallel else magnitude) * rhat
