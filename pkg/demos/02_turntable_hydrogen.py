"""
Hydrogen on a turntable: the dynamical rotational frequency shift
=================================================================

Unlike the harmonic trap, a hydrogen atom carried on a rotating arm does
shift its lines.  The degenerate n-manifold responds to the fictitious
crossed fields through a square-root level fan, and the part of the root
beyond first order survives the photon bookkeeping.  The result scales
as Omega^3 R^2 and lands, for laboratory numbers, some two thousand
times above the transverse Doppler shift of the same orbit.
"""

import numpy as np

from rotoshift import (Coulomb, RotorConfig, Transition, drfs_exact,
                       drfs_series)

t = Transition(upper=(3, 2), lower=(2, 1))  # labels are (n, m_z)

# --- 1. the shift at molecule-like numbers ----------------------------

rotor = RotorConfig(Omega=1e13, R=1e-10, model=Coulomb())
rep = drfs_exact(t, rotor)
print(f"Omega = {rotor.Omega:.0e} rad/s, R = {rotor.R:.0e} m, "
      f"v_c = {rotor.v_c:.0f} m/s")
print(f"line frequency at rest:  {rep.omega_rest:.6e} rad/s")
print(f"rotational shift (drfs): {rep.drfs:+.6e} rad/s")
print(f"  kinematic part: {rep.kinematic_part:+.3e} rad/s (zero: M matches "
      f"Delta m_z)")
print(f"  dynamic part:   {rep.dynamic_part:+.3e} rad/s")
print(f"shift relative to the transverse Doppler effect: "
      f"{rep.ratios['transverse_doppler']:+.4e}")
print()

# --- 2. cubic growth with the rotation rate ---------------------------

omegas = np.geomspace(1e11, 1e13, 9)
shifts = np.array([drfs_exact(t, RotorConfig(Omega=float(W), R=1e-10,
                                             model=Coulomb())).drfs
                   for W in omegas])
slope = np.polyfit(np.log(omegas), np.log(np.abs(shifts)), 1)[0]
print("  Omega (rad/s)    drfs (rad/s)")
for W, s in zip(omegas, shifts):
    print(f"  {W:12.3e}   {s:+.6e}")
print(f"log-log slope: {slope:.4f} (cubic in Omega at fixed R)")
print()

# --- 3. leading series vs the exact root ------------------------------

# the quadratic series is the (9/8)(n^2 m - n'^2 m') Omega (v_c/v_a)^2
# form; its error against the exact expression is fourth order in the
# small expansion parameter
print("  R (m)         exact (rad/s)    series (rad/s)   rel residual")
for R in (1e-11, 1e-10, 5e-10):
    r = RotorConfig(Omega=1e13, R=R, model=Coulomb())
    exact = drfs_exact(t, r).drfs
    series = drfs_series(t, r)
    print(f"  {R:8.0e}   {exact:+.8e}  {series:+.8e}  "
          f"{abs(series - exact) / abs(exact):.2e}")
