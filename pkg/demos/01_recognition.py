#!/usr/bin/env python3
"""
Threshold-graph recognition
===========================

A threshold graph can be built by repeatedly adding a vertex that is either
isolated or dominating (adjacent to everything already present). Recognition
peels such vertices off; if it ever gets stuck, the graph contains an induced
2K_2, P_4 or C_4, and we get that witness back.
"""

from thdim import (complete_graph, cycle_graph, disjoint_cliques, format_threshold,
                   path_graph, recognize_threshold, star_graph, threshold_supergraph,
                   ForbiddenSubgraph)

for name, g in [
    ("K_5", complete_graph(5)),
    ("star K_{1,4}", star_graph(5)),
    ("P_4", path_graph(4)),
    ("C_4", cycle_graph(4)),
    ("2K_2", disjoint_cliques(2)),
]:
    result = recognize_threshold(g)
    if isinstance(result, ForbiddenSubgraph):
        print(f"{name:12} -> not threshold, induced {result.kind} on {result.vertices}")
    else:
        print(f"{name:12} -> threshold, creation sequence: {format_threshold(result)}")

# Any graph can be completed into a threshold supergraph: pick an independent
# set, order it, and the completion keeps exactly each clique-side vertex's
# prefix of the ordered independent side.
print()
g = path_graph(4)
t = threshold_supergraph(g, [0, 3])
print("P_4 completed over independent set (0, 3):", sorted(t.graph.edges()))
print("the completion is itself threshold:",
      not isinstance(recognize_threshold(t.graph), ForbiddenSubgraph))
