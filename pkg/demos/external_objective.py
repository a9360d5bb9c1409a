"""Optimize a function evaluated by a separate program.

The evaluator here is a throwaway Python script that reads one coordinate per
line and writes the fitness, the same file protocol a simulator would use.

    python3 demos/external_objective.py
"""

import sys
import tempfile
from pathlib import Path

from vsopt import SubprocessObjectiveSpec, VsoConfig, make_decision_space, run_vso, subprocess_objective

SOLVER = """\
import sys
x = [float(v) for v in open(sys.argv[1])]
f = -sum((v - 0.25) ** 2 for v in x)
open(sys.argv[2], "w").write(repr(f) + "\\n")
"""

with tempfile.TemporaryDirectory() as d:
    d = Path(d)
    (d / "solver.py").write_text(SOLVER)
    spec = SubprocessObjectiveSpec(
        command=[sys.executable, str(d / "solver.py"), str(d / "in.txt"), str(d / "out.txt")],
        input_path=d / "in.txt",
        output_path=d / "out.txt",
        best_artifact_path=d / "best.txt",
    )
    obj = subprocess_objective(spec)
    ds = make_decision_space([-1.0, -1.0], [1.0, 1.0])
    res = run_vso(obj, ds, VsoConfig(points_per_dim=4))
    print(f"best {res.best.fstar:.3g} at {res.best.rstar} after {obj.invocations} solver calls")
    print("snapshot of best input:", (d / "best.txt").read_text().split())
