"""Kernelization: shrink an instance before solving it exactly.

Given a budget k, preprocessing either proves "no solution within k"
with a bad-star-forest witness, or produces an equivalent instance with
at most 24k^3 + 24k^2 + 3k vertices plus a transcript.  Any solution of
the kernel lifts back to the original graph at the same cost, so the
expensive search runs on the small graph only.
"""

from splitclust import (
    Kernelized,
    NoInstance,
    SearchBudget,
    complete_graph,
    cost,
    kernelize,
    lift_clustering,
    solve_exact,
    verify_clustering,
    write_transcript,
)

# A star center (1) in conflict with 0 and 2, plus a big friendly clique
# {3..9} hanging off the center.  Budget 2.
n = 10
blue = [(0, 1), (1, 2)]
blue += [(1, x) for x in range(3, n)]
blue += [(x, y) for x in range(3, n) for y in range(x + 1, n)]
g = complete_graph(n, blue)

outcome = kernelize(g, 2)
assert isinstance(outcome, Kernelized)
print(f"kernel: {g.n} vertices -> {outcome.graph.n}")
print("transcript:")
print(write_transcript(outcome.transcript).decode(), end="")

# Solve the kernel, then lift: the removed clique vertices rejoin the
# cluster that absorbed their marked clique-mates.
small = solve_exact(outcome.graph, SearchBudget(max_cost=2))
print("\nkernel optimum:", [sorted(c) for c in small], "cost", cost(small, outcome.graph.n))
lifted = lift_clustering(small, outcome.transcript)
print("lifted:", [sorted(c) for c in lifted], "cost", cost(lifted, g.n))
assert verify_clustering(g, lifted).ok

# With budget 0 the same graph is hopeless, and the witness proves it.
rejected = kernelize(g, 0)
assert isinstance(rejected, NoInstance)
print("\nbudget 0 is rejected by a forest of weight", rejected.witness.weight)
