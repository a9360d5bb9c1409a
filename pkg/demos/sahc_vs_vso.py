"""Compare VSO with the multi-run hill climber on two low-dimensional functions.

The hill climber is run with 100 restarts instead of the default 1000 so the
demo finishes in a few seconds.

    python3 demos/sahc_vs_vso.py
"""

from vsopt import SahcConfig, lookup, run_sahc, run_vso

for fid in ("gso/f16", "gso/f17"):
    spec = lookup(fid)
    ds = spec.space()
    v = run_vso(spec.objective(), ds)
    s = run_sahc(spec.objective(), ds, SahcConfig(num_runs=100))
    print(f"{fid}: f_max {spec.fmax:.7g}")
    print(f"  vso   best {v.best.fstar:.7g} with {v.n_eval:>9,} evaluations")
    print(f"  sahc  best {s.best.fstar:.7g} with {s.n_eval:>9,} evaluations")
