"""Instance generators: seeded randomness and two hardness gadgets.

Random graphs come from a self-contained splitmix64 stream, so a seed
pins the instance byte-for-byte on every platform.  The gadgets embed
two classic NP-hard questions into this toolkit's decision problems:
vertex cover into clustering, and graph coloring into multicut.
"""

from splitclust import (
    PlainGraph,
    decide,
    gen_coloring_gadget,
    gen_random,
    gen_vertex_cover_gadget,
    write_graph,
    write_multicut_instance,
)

# Identical seeds reproduce identical graphs; neighbors differ.
a = gen_random(6, 0.5, 0.5, complete=True, seed=2024)
b = gen_random(6, 0.5, 0.5, complete=True, seed=2024)
c = gen_random(6, 0.5, 0.5, complete=True, seed=2025)
print("same seed identical:", a == b, " different seed differs:", a != c)
print(write_graph(a).decode(), end="")

# Vertex cover: does the 5-cycle have a cover of size 2?  (No; 3 works.)
# The gadget keeps the input's edges red, everything else blue, and adds
# k+1 fresh mutually-blue vertices, forcing one cluster to swallow all.
c5 = PlainGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
for k in (2, 3):
    gadget = gen_vertex_cover_gadget(c5, k)
    print(f"cover of size {k}?", decide(gadget, k))

# Coloring: the 5-cycle is 3-colorable; an apex vertex distributes the
# colors, and input edges become terminal pairs to separate.
inst = gen_coloring_gadget(c5, 3)
print("\ncoloring gadget (split the apex into color classes):")
print(write_multicut_instance(inst).decode(), end="")
