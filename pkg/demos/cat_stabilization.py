"""Freeze the cat at |alpha| = 2 with a central barrier.

The drive is switched off at 5.56 ps; the two packets coast outward
while a Gaussian barrier ramps up between 7 and 9.5 ps and carves two
side pockets that capture them.  Afterwards the amplitudes hold near 2
and each half of the wire carries <S_z> = +/- hbar/4 (half probability
times half spin, for the spin-x initial state).

Run:  python demos/cat_stabilization.py
"""

import csv

import numpy as np

from spinwire.runner import run_scenario
from spinwire.scenario import preset_fig3

OUT = "demos/output/cat_stabilization"

scenario = preset_fig3()
print(f"scenario: {scenario.name}  (drive off at {scenario.drive.t_off} ps, "
      f"barrier ramp {scenario.barrier.t_start}-{scenario.barrier.t_end} ps)")
run_scenario(scenario, OUT)

with open(f"{OUT}/timeseries.csv") as fh:
    rows = list(csv.DictReader(fh))
t = np.array([float(r["t_ps"]) for r in rows])
a_up = np.hypot([float(r["alpha_up_re"]) for r in rows],
                [float(r["alpha_up_im"]) for r in rows])
late = t >= 10.5
print(f"|alpha_up| after capture : {a_up[late].min():.3f} .. {a_up[late].max():.3f} "
      f"(target 2.0 +/- 0.15)")

tail = t >= 12.0
sz_l = np.array([float(r["sz_left"]) for r in rows])[tail]
sz_r = np.array([float(r["sz_right"]) for r in rows])[tail]
print(f"<S_z> left half          : {sz_l.mean():+.4f} hbar")
print(f"<S_z> right half         : {sz_r.mean():+.4f} hbar  (target -/+ 0.25)")
print(f"artifacts in {OUT}/  — render with:")
print(f"  figure-studio render --run {OUT} --panel spin_halves --out spin.svg")
print(f"  figure-studio render --run {OUT} --panel drive_trace --out protocol.svg")
