"""The factor-7 approximation: fast, always valid, provably close.

The greedy bad star forest yields a vertex set S hitting every conflict.
Outside S the graph falls apart into blue cliques.  Each candidate
solution keeps one hub cluster around S, merges one guessed clique into
it, and charges every other clique a minimum vertex cover of its blue
edges towards S (computed via bipartite matching).  The cheapest
candidate costs at most 7 times the optimum.
"""

from splitclust import (
    SearchBudget,
    approximate,
    candidate_solutions,
    complete_graph,
    cost,
    gen_random,
    solve_exact,
    verify_clustering,
)

# Three conflicted vertices and two satellite vertices blue to 0.
g = complete_graph(5, blue=[(0, 1), (1, 2), (0, 3), (0, 4)])

for cand in candidate_solutions(g):
    guess = sorted(cand.guess) if cand.guess is not None else "-"
    print(f"guess {guess}: cost {cand.cost}, clusters {[sorted(c) for c in cand.assembled]}")

best = approximate(g)
print("\npicked:", [sorted(c) for c in best], "cost", cost(best, g.n))
print("optimum for comparison:", cost(solve_exact(g, SearchBudget(max_cost=5)), g.n))

# Across random graphs the observed ratio stays far below the guarantee.
worst = 0.0
for seed in range(200):
    h = gen_random(6, 0.5, 0.5, complete=True, seed=seed)
    approx_cost = cost(approximate(h), h.n)
    opt = cost(solve_exact(h, SearchBudget(max_cost=6)), h.n)
    assert verify_clustering(h, approximate(h)).ok
    assert approx_cost <= 7 * opt
    if opt:
        worst = max(worst, approx_cost / opt)
print(f"\nworst ratio over 200 random graphs: {worst:.2f} (guarantee: 7)")
