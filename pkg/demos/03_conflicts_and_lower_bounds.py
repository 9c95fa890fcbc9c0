"""Finding conflicts and proving lower bounds without solving anything.

A bad triangle (two blue edges, one red) is the smallest conflict.  A
bad star generalizes it: a center with blue edges to leaves that are
pairwise red; separating its leaves needs at least (leaves - 1) extra
memberships.  Vertex-disjoint bad stars add up, so a greedily grown
maximal bad star forest gives a certified lower bound on the optimum.
"""

from splitclust import (
    SearchBudget,
    complete_graph,
    cost,
    find_bad_triangle,
    lower_bound,
    maximal_bad_star_forest,
    solve_exact,
)

triangle = complete_graph(3, blue=[(0, 1), (1, 2)])
print("smallest conflict:", find_bad_triangle(triangle))

# A star whose four leaves hate each other: one center, weight 3.
star = complete_graph(5, blue=[(0, 1), (0, 2), (0, 3), (0, 4)])
forest = maximal_bad_star_forest(star)
for s in forest.stars:
    print(f"bad star: center {s.center}, leaves {s.leaves}, weight {s.weight}")
print("forest weight (lower bound):", forest.weight)

# The bound is tight here: the optimum really needs 3 extra memberships.
best = solve_exact(star, SearchBudget(max_cost=5))
print("exact optimum:", cost(best, star.n))

# Two disjoint conflicts accumulate.
double = complete_graph(6, blue=[(0, 1), (1, 2), (3, 4), (4, 5)])
print("\ntwo disjoint bad triangles, bound:", lower_bound(double))

# Conflict-free graphs have an empty forest.
flat = complete_graph(4, blue=[(0, 1), (2, 3)])
print("cluster graph bound:", lower_bound(flat))
