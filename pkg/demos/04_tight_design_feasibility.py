"""Can a degree-4 design meet the bound b_{n,4} = (n+1)(n+2)/6 exactly?

A design of exactly that size has inner products +-sqrt(3/(n+4)) and is a
2-distance set, which makes several exact necessary conditions available:
integrality of the bound, the one-point sphere reduction, the
Larman-Rogers-Seidel integrality of the squared distance ratio, equiangular
line counts, and the Einhorn-Schoenberg rank test on candidate graphs.
"""

import networkx as nx
import numpy as np

from hidesign import (
    QuadExt,
    TwoDistGraph,
    es_embeddable,
    scan_graph_corpus,
    tightness_dossier,
)

print("=" * 72)
print("Dossiers for n = 2..30")
print("=" * 72)
print(f"{'n':>3} {'b':>8} {'alpha':>12} {'k':>4} {'p':>4}  status and deciding criterion")
for n in range(2, 31):
    d = tightness_dossier(n)
    deciding = next((v.criterion for v in d.verdicts if v.status == "fail"), "-")
    k = d.lrs_k if d.lrs_k is not None else "-"
    p = d.p if d.p is not None else "-"
    print(f"{n:>3} {str(d.b_exact):>8} {str(d.alpha):>12} {k:>4} {p:>4}  {d.status} ({deciding})")

print()
print("Only n = 2 admits one (two points on the circle); every other")
print("dimension up to 30 is excluded, and the first open case is the")
print("p = 5 family member n = 71:")
d71 = tightness_dossier(71)
print(f"  n=71: status {d71.status}, k={d71.lrs_k}, p={d71.p}, "
      f"needs {d71.min_lines} equiangular lines (absolute bound {d71.absolute_bound})")

print()
print("=" * 72)
print("The n = 23 story in detail")
print("=" * 72)
d = tightness_dossier(23)
for v in d.verdicts:
    print(f"  [{v.status:>12}] {v.criterion}: {v.note}")

print()
print("=" * 72)
print("Einhorn-Schoenberg rank test")
print("=" * 72)
square = TwoDistGraph(np.array([
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
]), QuadExt(2))
print("unit square (edges on the diagonals, squared ratio 2):")
for n in (1, 2, 3):
    res = es_embeddable(square, n)
    print(f"  embeds in R^{n}? rank {res.rank} <= {n}: {res.embeddable}")

print()
print("Scanning all 11 graphs on 4 vertices against the plane (b^2 = 2):")
graphs = [nx.to_numpy_array(g, dtype=int) for g in nx.graph_atlas_g()
          if g.number_of_nodes() == 4]
records = list(scan_graph_corpus(graphs, QuadExt(2), 2))
for g, r in zip(graphs, records):
    degs = sorted(int(x) for x in g.sum(axis=0))
    print(f"  graph #{r.index:2d} degrees {degs}: rank {r.rank}, feasible: {r.feasible}")
print(f"feasible: {sum(r.feasible for r in records)} of {len(records)}")
print("(the degree-[1,1,1,1] perfect matching is the unit square's graph)")

print()
print("An exact surd ratio keeps the rank decision exact, e.g. the n = 7")
print("candidate ratio (7+sqrt(33))/4:")
b2 = QuadExt.parse("(7+√33)/4")
empty9 = TwoDistGraph(np.zeros((9, 9), dtype=int), b2)
res = es_embeddable(empty9, 7)
print(f"  empty 9-vertex graph in R^7: rank {res.rank}, feasible: {res.embeddable}")
