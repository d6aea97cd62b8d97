"""
Connected-sum windows
=====================

Two ways to build the same finite window of the connected-sum complex: the
product pipeline (reorder K1 x Z, take the product with K2, relabel) and the
pairwise adjacency rule on triples.  They should agree exactly.
"""
from ordplex import BOTH, DIRECT_RULE, Window, connected_sum_window, euler_characteristic, skeleton_distance
from ordplex.complex import f_vector, induced_subcomplex
from ordplex.kakimizu import sum_distance
from ordplex.toolkit import edge, ordered_flag_corpus, point

# two one-vertex factors give a path, one vertex per level
res = connected_sum_window(point(), point(), Window(-10, 10), BOTH)
print(res.summary(), "f-vector", f_vector(res.direct.complex))
print("distance between levels -10 and 10:", skeleton_distance(res.direct.complex, "v0|v0|-10", "v0|v0|10"))

# an edge and a point over two levels: a square with one diagonal
sq = connected_sum_window(edge(), point(), Window(0, 1), BOTH)
print(sq.summary(), "f-vector", f_vector(sq.direct.complex), "euler", euler_characteristic(sq.direct.complex))
for s in sq.direct.complex.facet_list():
    print("  facet", s)

# distances near the window edge may be longer than in the infinite complex
d = sum_distance(sq.direct, "a|v0|0", "b|v0|1")
print("distance", d.distance, "possibly truncated", d.may_be_truncated)

# a smaller window is the induced subcomplex of a larger one
k1, k2 = ordered_flag_corpus(3)[-1], edge()
big = connected_sum_window(k1, k2, Window(-1, 2), DIRECT_RULE).complex
small = connected_sum_window(k1, k2, Window(0, 1), DIRECT_RULE).complex
print("coherent:", induced_subcomplex(big, small.vertices) == small)

# the two constructions agree on every pair of complexes with at most 3 vertices
corpus = ordered_flag_corpus(3)
bad = [(i, j) for i, a in enumerate(corpus) for j, b in enumerate(corpus)
       if not connected_sum_window(a, b, Window(0, 2), BOTH).equal]
print(len(corpus) ** 2, "pairs,", len(bad), "disagreements")
