"""Ground the drive amplitude in the gate-stack electrostatics.

Solves the 2D Poisson cross-section of the device (substrate, bottom
gate, dielectric layers, side gates, suspended wire), extracts the
lateral-field lever arm at the wire axis, and converts a side-gate bias
into a spin-orbit drive amplitude gamma_3D |e| E_y.  This is an
order-of-magnitude grounding, not a fit.

Run:  python demos/gate_electrostatics.py
"""

from spinwire.poisson2d import (default_cross_section, drive_amplitude_estimate,
                                lateral_field_at_axis, lever_arm,
                                solve_cross_section)

geometry = default_cross_section(v_lr=1.0, v_bottom=0.0, cell=5.0)
pmap = solve_cross_section(geometry)
print(f"grid                  : {geometry.shape[0]} x {geometry.shape[1]} cells, "
      f"{geometry.cell} nm each  ({pmap.iterations} SOR sweeps)")
print(f"E_y at wire axis      : {lateral_field_at_axis(pmap):.4e} V/nm per V")

arm = lever_arm(cell=5.0)
print(f"lever arm             : {arm:.4e} (V/nm)/V")

for v_lr in (0.1, 0.5, 1.0):
    est = drive_amplitude_estimate(v_lr, arm)
    print(f"  {v_lr:4.1f} V side bias -> gammaE ~ {est:6.1f} meV nm")
print("(the cat-generation presets use gammaE0 = 40 meV nm)")
