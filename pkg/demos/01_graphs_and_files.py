"""Tour of correlation graphs: construction, inspection, and the ccg format.

A correlation graph labels vertex pairs blue (the endpoints belong
together) or red (they must be kept apart).  Complete graphs label every
pair; incomplete ones also allow neutral (unknown) pairs.
"""

from splitclust import (
    blue_components,
    cluster_decomposition,
    complete_graph,
    incomplete_graph,
    parse_graph,
    write_graph,
)

# The smallest conflicted graph: 0-1 and 1-2 want to merge, 0-2 refuses.
# Everything not listed in a complete graph is red.
triangle = complete_graph(3, blue=[(0, 1), (1, 2)])
print("bad triangle:", triangle)
print("  label(0,1) =", triangle.label(0, 1).name)
print("  label(0,2) =", triangle.label(0, 2).name)
print("  blue:", triangle.blue_edges(), " red:", triangle.red_edges())

# A cluster graph is conflict-free: its blue edges form disjoint cliques,
# so reading the clusters off the components succeeds.
flat = complete_graph(5, blue=[(0, 1), (2, 3), (2, 4), (3, 4)])
print("\ncluster graph components:", blue_components(flat))
print("  decomposition:", cluster_decomposition(flat))
print("  the bad triangle has none:", cluster_decomposition(triangle))

# Incomplete graphs leave unlisted pairs neutral rather than red.
partial = incomplete_graph(4, blue=[(0, 1), (2, 3)], red=[(0, 2)])
print("\nincomplete graph:", partial)
print("  label(1,3) =", partial.label(1, 3).name, "(no constraint)")

# Graphs serialize to a small line format; writing is canonical, so
# parse/write round trips are byte-stable.
document = write_graph(triangle)
print("\nccg document:")
print(document.decode(), end="")
assert parse_graph(document) == triangle
assert write_graph(parse_graph(document)) == document
print("round trip: stable")
