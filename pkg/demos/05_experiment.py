#!/usr/bin/env python3
"""
Random graphs, degeneracy, and girth
====================================

Sparse random graphs have small degeneracy, so the degeneracy decomposition
stays close to (average degree) * ln n factors. The experiment below runs a
few seeded trials and prints the reproducible table; rerunning with the same
seed gives byte-identical output.

High girth also forces small degeneracy: a graph of girth 5 on n vertices is
ceil(sqrt(n))-degenerate, which the Petersen graph meets with slack.
"""

from thdim import (gen_gnm, girth_degeneracy_check, petersen_graph, render_table,
                   run_experiment)

rows = run_experiment([(30, 60, 5), (50, 100, 5)], seed=0)
print(render_table(rows))

chk = girth_degeneracy_check(petersen_graph())
print(f"Petersen: girth {chk.girth}, bound ceil(10^(1/2)) = {chk.bound}, "
      f"degeneracy {chk.degeneracy}, within bound: {chk.ok}")

g = gen_gnm(40, 50, seed=1)
chk = girth_degeneracy_check(g)
print(f"G(40,50) sample: girth {chk.girth}, bound {chk.bound}, "
      f"degeneracy {chk.degeneracy}, within bound: {chk.ok}")
