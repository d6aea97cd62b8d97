"""
Points of a window
==================

Given a point of each factor and a real height r, find the point of the
connected-sum window above them.  Everything is exact.
"""
from fractions import Fraction

from ordplex import WeightedPoint, Window, realize_triple
from ordplex.kakimizu import split_level, triple_projections
from ordplex.toolkit import edge, path

k1, k2 = edge(), path(3)
p1 = WeightedPoint.of({"a": Fraction(1, 4), "b": Fraction(3, 4)})
p2 = WeightedPoint.of({"p1": Fraction(2, 3), "p2": Fraction(1, 3)})

for r in (Fraction(0), Fraction(1, 2), Fraction(-7, 5)):
    n, t = split_level(r)
    q = realize_triple(k1, k2, p1, p2, r, Window(-2, 2))
    print(f"r={r} (level {n} + {t})")
    for v, w in q.entries:
        print(f"  {v:10s} {w}")
    print("  projections recover inputs:", triple_projections(q) == (p1, p2, r))
