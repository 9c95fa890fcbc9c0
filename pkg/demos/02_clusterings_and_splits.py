"""Overlapping clusterings and their equivalence with vertex splitting.

A clustering is an ordered list of vertex sets.  It is valid when every
vertex is covered, every blue pair shares a cluster, and every red pair
can point at two distinct clusters separating it.  Vertices may appear
in several clusters; the cost counts those extra memberships.

The same conflicts can be resolved by splitting vertices into copies.
The two views are interchangeable: a valid clustering of cost c yields c
splits producing a conflict-free graph, and any conflict-free split
graph yields a valid clustering of at most one cluster per copy.
"""

from splitclust import (
    Clustering,
    clustering_to_splits,
    complete_graph,
    cost,
    splits_to_clustering,
    verify_clustering,
    write_clustering,
)

triangle = complete_graph(3, blue=[(0, 1), (1, 2)])

# Vertex 1 takes both memberships; the red pair 0-2 sees two clusters.
f = Clustering([{0, 1}, {1, 2}])
print("clustering:", [sorted(c) for c in f], " cost:", cost(f, 3))
print("valid:", verify_clustering(triangle, f).ok)
print(write_clustering(f).decode(), end="")

# An invalid attempt: one big cluster leaves 0-2 unresolved.
report = verify_clustering(triangle, Clustering([{0, 1, 2}]))
print("\none-cluster attempt ok:", report.ok, " unresolved:", report.unresolved_red)

# Realize the clustering as actual splits: vertex 1 becomes two copies,
# one keeping the blue edge to 0 and one keeping the edge to 2.
realized = clustering_to_splits(triangle, f)
print("\nsplit graph vertices:", realized.base.n, " ancestors:", realized.ancestors)
print("splits used:", realized.split_count, "(= cost)")
print("copies of vertex 1:", realized.descendants(1))

# And read a clustering back off the split graph.
back = splits_to_clustering(realized)
print("recovered clustering:", [sorted(c) for c in back])
assert verify_clustering(triangle, back).ok
assert cost(back, 3) <= realized.split_count
