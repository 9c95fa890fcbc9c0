"""Clustering and multicut-with-vertex-splitting are the same problem.

Blue pairs become edges, red pairs become terminal pairs to disconnect,
and the split budget carries over.  Solutions translate both ways
without raising the cost, so optima coincide.  Splitting a vertex in the
multicut world partitions its neighborhood; splitting a terminal's
endpoint removes that terminal pair entirely.
"""

from splitclust import (
    Clustering,
    MulticutSolution,
    ccvs_to_mcvs,
    clustering_to_multicut_solution,
    complete_graph,
    cost,
    mcvs_to_ccvs,
    multicut_solution_to_clustering,
    verify_multicut_solution,
    write_multicut_instance,
    write_multicut_solution,
)

triangle = complete_graph(3, blue=[(0, 1), (1, 2)])
inst = ccvs_to_mcvs(triangle, 1)
print("multicut instance from the bad triangle:")
print(write_multicut_instance(inst).decode(), end="")

# Translate the optimal clustering into splits: vertex 1 divides its
# neighborhood, sending 0 and 2 to different copies.
f = Clustering([{0, 1}, {1, 2}])
sol = clustering_to_multicut_solution(triangle, f)
print("\ntranslated solution (cost %d):" % sol.cost)
print(write_multicut_solution(inst.n, sol).decode(), end="")
assert verify_multicut_solution(inst, sol)

# And back again: reading the split components as clusters.
back = multicut_solution_to_clustering(inst, sol)
print("\nround-tripped clustering:", [sorted(c) for c in back])

# A different solution shape: the removal split gives vertex 0 an
# edgeless copy, wiping the terminal pair that mentioned it.
removal = MulticutSolution({0: [{1}, set()]})
print("\nremoval split verifies:", verify_multicut_solution(inst, removal))
g2 = multicut_solution_to_clustering(inst, removal)
print("its clustering:", [sorted(c) for c in g2], "cost", cost(g2, 3))

# The instance reduction is invertible exactly.
graph, budget = mcvs_to_ccvs(inst)
assert ccvs_to_mcvs(graph, budget) == inst
print("\ninstance round trip: identity")
