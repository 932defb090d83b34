"""When is the uniform distribution the entropy maximiser?

The three structural tests each produce a certificate. The script then
checks the two counting bounds that the entropy method proves: Shearer's
projection inequality and Bregman's permanent bound.

    python3 demos/03_symmetry_and_counting.py
"""

from __future__ import annotations

import itertools
import json

from gent.counting import PointSet3D, bregman_bound, shearer_check
from gent.graph import complete_multipartite, cycle, fig51, fig52, star
from gent.symmetry import check_bipartite_symmetric, check_line_graph_symmetric, check_perfect_symmetric


def show(label, verdict):
    print(f"{label:>16}: {json.dumps(verdict.to_json(), sort_keys=True)}")


show("C6 bipartite", check_bipartite_symmetric(cycle(6)))
show("star3 bipartite", check_bipartite_symmetric(star(3)))
show("star3 perfect", check_perfect_symmetric(star(3)))
show("L(fig51)", check_line_graph_symmetric(fig51()))
show("L(fig52)", check_line_graph_symmetric(fig52()))

cube = PointSet3D(tuple(itertools.product((0, 1), repeat=3)))
print("unit cube projections:", shearer_check(cube).to_json())
for name, g in (("K33", complete_multipartite(3, 3)), ("C6", cycle(6))):
    print(f"Bregman {name}:", bregman_bound(g).to_json())
