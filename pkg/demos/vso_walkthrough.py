"""Walk through one VSO run on the 30-D Schwefel benchmark.

Shows the deterministic initial layout, the best-so-far trace and the
evaluation count that the saturation test settles on.

    python3 demos/vso_walkthrough.py
"""

import numpy as np

from vsopt import VsoConfig, build_ispd, gamma_schedule, lookup, run_vso

spec = lookup("gso/f8")
ds = spec.space(30)
cfg = VsoConfig()

print("gammas:", gamma_schedule(cfg.num_gammas))
pts = build_ispd(ds, cfg)
print(f"initial points: {pts.np} in {ds.nd} dimensions")
print("distinct values on the first coordinate:", np.unique(pts.positions[:, 0]).size)

res = run_vso(spec.objective(), ds, cfg)
for it, f in res.trace:
    print(f"  iteration {it:2d}  best {f: .6g}")
print(f"stopped at iteration {res.last_iteration}, n_eval {res.n_eval}")
print(f"best {res.best.fstar:.10g} against a maximum of {spec.fmax:.10g}")
