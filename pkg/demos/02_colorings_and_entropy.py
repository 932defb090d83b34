"""Minimum-entropy colourings and how they relate to graph entropy.

The chromatic entropy H_chi sits between graph entropy and log chi, and the
best colouring is always a Grundy colouring -- but not every Grundy
colouring is best. The 6-cycle below has two Grundy colourings with
different entropies.

    python3 demos/02_colorings_and_entropy.py
"""

from __future__ import annotations

import math

import numpy as np

from gent.coloring import Coloring, chi_H, chromatic_number, grundy_number, min_entropy_coloring
from gent.corner import entropy_fw
from gent.graph import cycle, kneser, mask_of
from gent.prob import uniform

g = cycle(5)
p = uniform(5)
col, h_chi = min_entropy_coloring(g, p)
chi, _ = chromatic_number(g)
print(f"C5: H_k = {entropy_fw(g, p).value:.5f} <= H_chi = {h_chi:.5f} <= log chi = {math.log2(chi):.5f}")
print("    classes:", col.to_json(p))

g = cycle(6)
p = np.array([0.4, 0.05, 0.4, 0.05, 0.05, 0.05])
two = Coloring((mask_of([0, 2, 4]), mask_of([1, 3, 5])))
three = Coloring((mask_of([0, 3]), mask_of([2, 5]), mask_of([1, 4])))
for name, c in (("two classes", two), ("three classes", three)):
    print(f"C6 {name}: Grundy={c.is_grundy(g)}, entropy={c.entropy(p):.4f}")
print("C6 Grundy number:", grundy_number(g)[0])

for v, r in ((4, 1), (5, 2), (6, 2)):
    kg, _ = kneser(v, r)
    print(f"Kneser K({v}:{r}): chi = {chromatic_number(kg)[0]}, chi_H(uniform) = {chi_H(kg, uniform(kg.n))}")
