#!/usr/bin/env python3
"""Path dependence of swapped staircases versus time for sigma_x / sigma_z.

Prints t, residual and residual / t^2; the last column should settle at
||[H1, H2] psi0|| = 2 as t shrinks.
"""

import argparse

import numpy as np

from multitime_lab.multitime import MultiTimeState, TimePath, path_dependence_residual
from multitime_lab.opalg import SIGMA_X, SIGMA_Z
from multitime_lab.timefield import HamiltonianFamily


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=8)
    ap.add_argument("--tmax", type=float, default=1.0)
    args = ap.parse_args()

    fam = HamiltonianFamily.constant([SIGMA_X, SIGMA_Z])
    psi0 = MultiTimeState(np.array([1, 0], dtype=complex), (0.0, 0.0))
    print(f"{'t':>10} {'residual':>14} {'residual/t^2':>14}")
    for t in np.geomspace(args.tmax, args.tmax * 1e-4, args.points):
        a = TimePath.staircase((0.0, 0.0), (t, t), (0, 1))
        b = TimePath.staircase((0.0, 0.0), (t, t), (1, 0))
        r = path_dependence_residual(fam, psi0, a, b)
        print(f"{t:10.3e} {r:14.6e} {r / t**2:14.8f}")


if __name__ == "__main__":
    main()
