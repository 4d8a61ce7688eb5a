"""Local decay inside the sqrt(t)/log(t) window, and the soliton control.

A small Gaussian radiates and its H1 content inside the growing window
(-sqrt(t)/log t, sqrt(t)/log t) trends down, while the cumulative weighted
integrals (local smoothing) level off.  A unit-speed soliton instead leaves
the window in finite time: its windowed norm collapses while the global L2
stays put.  Run time: about a minute.
"""

import numpy as np

from gkdv import (Field, Grid, ScalingLaw, SolitonParams, SolverConfig, State,
                  VirialRecorder, evolve, kdv, soliton_profile, window_interval,
                  window_norms)


def main():
    g = Grid(150.0, 2048)
    rec = VirialRecorder(kdv(), g)
    u0 = State(0.0, Field.from_function(g, lambda x: 0.05 * np.exp(-x * x)))
    evolve(u0, kdv(), SolverConfig(dt=1e-3, t_end=50.0, snapshot_stride=1000),
           observers=[rec], keep_fields=False)
    series = rec.finalize()
    sel = series.times >= 2.0
    print("small-Gaussian run, window norms and cumulative local integrals:")
    print(f"{'t':>5} {'win_l2':>10} {'win_h1':>10} {'cum_i2':>10} {'cum_kato':>10}")
    for i in np.nonzero(sel)[0][::8]:
        print(f"{series.times[i]:5.0f} {series.win_l2[i]:10.3e} "
              f"{series.win_h1[i]:10.3e} {series.cum_i2[i]:10.4e} "
              f"{series.cum_kato[i]:10.4e}")
    i10 = np.argmin(np.abs(series.times - 10.0))
    print(f"trend: win_h1(50)/win_h1(10) = {series.win_h1[-1] / series.win_h1[i10]:.3f}")

    print("\nsoliton control (closed form): the traveling wave exits the window:")
    sol = SolitonParams(c=1.0, p=2)
    print(f"{'t':>5} {'window':>22} {'win_l2':>10}")
    for t in (4.0, 10.0, 20.0, 40.0):
        s = State(t, soliton_profile(sol, t, g))
        w = window_interval(t, 1.0, g)
        l2w, _ = window_norms(s, w.a, w.b)
        print(f"{t:5.0f} [{w.a:9.3f}, {w.b:8.3f}] {l2w:10.3e}")


if __name__ == "__main__":
    main()
