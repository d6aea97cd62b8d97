"""
Ordered complexes and their axioms
==================================

Build a small flag complex, order it, and watch the validator react to a
few broken orders.
"""
from ordplex import FLAG, build_complex, find_violations, is_flag, skeleton_distance, validate_ordering
from ordplex.complex import euler_characteristic, f_vector

# a filled triangle a-b-c with a tail c-d
c = build_complex("abcd", FLAG, [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")])
print("f-vector", f_vector(c), "euler", euler_characteristic(c), "flag", is_flag(c))

order = [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")]
oc = validate_ordering(c, order)
print("valid order with", len(oc.order), "strict pairs")

# each axiom failure comes back as a Violation naming the witness
print(find_violations(c, set(order) | {("b", "a")}))  # both directions
print(find_violations(c, set(order) - {("c", "d")}))  # adjacent but unrelated
print(find_violations(c, set(order) | {("a", "d")}))  # related but not adjacent
print(find_violations(c, {("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")}))  # a 3-cycle

# distances in the 1-skeleton
for v in "abcd":
    print("a ->", v, skeleton_distance(c, "a", v))
