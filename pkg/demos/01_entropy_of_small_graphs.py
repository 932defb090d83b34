"""Graph entropy of a few small graphs, computed two ways.

Frank-Wolfe works on the vertex packing polytope directly, the alternating
minimisation works on the mutual-information form. Both stop on a certified
duality gap, so their values must agree to within twice the tolerance.

    python3 demos/01_entropy_of_small_graphs.py
"""

from __future__ import annotations

import math

from gent import entropy_am, entropy_fw
from gent.graph import complete, cycle, fig52, line_graph, petersen, star
from gent.prob import uniform

lg52, _ = line_graph(fig52())
cases = [
    ("K3", complete(3), math.log2(3)),
    ("C5", cycle(5), math.log2(2.5)),
    ("Petersen", petersen(), math.log2(2.5)),
    ("star 3", star(3), None),
    ("L(fig52)", lg52, None),
]

print(f"{'graph':>10} {'n':>3} {'FW':>10} {'AM':>10} {'known':>10}")
for name, g, known in cases:
    p = uniform(g.n)
    fw = entropy_fw(g, p)
    am = entropy_am(g, p)
    ref = f"{known:10.6f}" if known is not None else " " * 10
    print(f"{name:>10} {g.n:>3} {fw.value:10.6f} {am.value:10.6f} {ref}")

# The C5 minimiser is the symmetric point 2/5 on every vertex.
print("C5 minimiser:", [round(float(x), 6) for x in entropy_fw(cycle(5), uniform(5)).minimizer])
