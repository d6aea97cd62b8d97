"""
Ordered products
================

The product of two ordered complexes lives on pairs of vertices.  A set of
pairs is a simplex when it projects to simplices on both sides and the
componentwise order is total on it.
"""
from fractions import Fraction

from ordplex import LEFT, RIGHT, WeightedPoint, Window, euler_characteristic, is_flag, ordered_product, project, z_window
from ordplex.complex import f_vector
from ordplex.product import project_point, realize_in_product
from ordplex.toolkit import edge, path

# an interval times an interval is a square cut into two triangles
sq = ordered_product(edge(), edge("x", "y"))
print("square facets", sq.complex.facet_list())
print("euler", euler_characteristic(sq.complex), "flag", is_flag(sq.complex))

# projections of a facet land on simplices of the factors
top = sq.complex.facet_list()[0]
print(top, "->", project(sq, LEFT, top), project(sq, RIGHT, top))

# a path times a short piece of the integer line
strip = ordered_product(path(3), z_window(Window(0, 2)))
print("path x Z[0,2]: f-vector", f_vector(strip.complex))

# a point of the square sitting over two points of the factors
p1 = WeightedPoint.of({"a": Fraction(1, 3), "b": Fraction(2, 3)})
p2 = WeightedPoint.of({"x": Fraction(1, 2), "y": Fraction(1, 2)})
q = realize_in_product(edge(), edge("x", "y"), p1, p2)
print("lifted point", {k: str(w) for k, w in q.entries})
print("projects back:", project_point(q, 1, LEFT) == p1, project_point(q, 1, RIGHT) == p2)
