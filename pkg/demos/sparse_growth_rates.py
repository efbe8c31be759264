"""Linear growth of regularity in the sparse regime, two ways.

At edge probability rate/n the regularity of the random edge ideal grows
linearly, and the slope is a tree quantity: the expected induced-matching
ratio of a Poisson branching tree.  We estimate the slope from random
graphs (componentwise exact computation) and from random trees, then
sandwich it between the component-count lower bound and the matching-number
fixed-point upper bound.
"""

import math

from eideal.asymptotics import karp_sipser_upper
from eideal.experiments import ExperimentConfig, run_gw_limit
from eideal.random_models import ParamSchedule

RATE = 0.5
SEED = 11

cfg = ExperimentConfig(kind="gw_limit", seed=SEED, trials=60, n_list=(1000,),
                       schedule=ParamSchedule.sparse(RATE),
                       gw_trials=30000, gw_cap=10 ** 5)
report = run_gw_limit(cfg, workers=2)
cells = {c.cell_id: c for c in report.cells}

graph_side = cells["graph_reg_star"]
tree_side = cells["tree_induced_matching"]
print(f"rate {RATE}:")
print(f"  graph side   reg*(I)/n  = {graph_side.estimate:.4f} "
      f"(+- {graph_side.extra['stderr']:.4f}, n=1000, 60 graphs)")
print(f"  tree side    E[nu/size] = {tree_side.estimate:.4f} "
      f"(+- {tree_side.extra['stderr']:.4f}, 30000 trees)")
print(f"  gap          {graph_side.extra['gap_combined_se']:.2f} combined "
      f"standard errors")

upper = karp_sipser_upper(RATE).value
print(f"\n  matching fixed-point upper bound : {upper:.4f}")
print(f"  (isolated-vertex share e^-rate   : {math.exp(-RATE):.4f})")

print("\nprojective dimension and depth columns share the same machinery:")
for name in ("pd", "depth"):
    g = cells[f"graph_{name}"]
    t = cells[f"tree_{name}"]
    print(f"  {name:5s} graph {g.estimate:.4f}  tree {t.estimate:.4f}  "
          f"gap {g.extra['gap_combined_se']:.2f} se")

print("""
The two columns agree within a few combined standard errors at n = 1000
already.  Censoring (components too large and cyclic for the exact table)
is counted, never silently dropped; at this rate it is essentially absent.""")
