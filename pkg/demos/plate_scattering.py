"""Scattering pattern of a flat square reflector under plane-wave incidence.

Computes the in-plane physical-optics pattern for plates of growing
electrical size, showing the main lobe narrowing, the peak growing, and
sidelobes multiplying, then cross-checks the closed-form kernel against
direct numerical quadrature.

Run:  python3 demos/plate_scattering.py
"""

import math

import numpy as np

from emgrid import PlateSpec, count_sidelobes, hpbw, po_pattern

LAM = 10e-3  # 30 GHz
THETA_I = math.radians(30.0)

print(f"incidence 30 deg, wavelength {LAM * 1e3:.0f} mm\n")
print(f"{'side':>10} {'peak angle':>11} {'HPBW':>9} {'sidelobes':>10} {'peak |I|':>12}")

for p in (0.5, 1.0, 2.0, 5.0, 10.0):
    plate = PlateSpec(p=p, lam=LAM, theta_i=THETA_I)
    pattern = po_pattern(plate, samples=3601)
    peak = math.degrees(pattern.angles[int(np.argmax(pattern.values))])
    try:
        width = f"{math.degrees(hpbw(pattern)):8.2f}"
    except ValueError:
        width = "   wide "  # main lobe fills the visible range
    print(f"{p:8.1f}λ {peak:10.2f}° {width}° {count_sidelobes(pattern):>10} "
          f"{pattern.peak_intensity:12.4e}")

# The specular peak tracks the incidence angle, and the analytic kernel
# agrees with brute-force integration of the aperture field.
plate = PlateSpec(p=10.0, lam=LAM, theta_i=THETA_I)
cf = po_pattern(plate, samples=1801)
qd = po_pattern(plate, samples=1801, method="quadrature")
print(f"\nclosed form vs quadrature, p = 10: "
      f"max |diff| = {np.abs(cf.values - qd.values).max():.3e}")
