"""Brute-force reference computations, independent of the library's search code.

Everything here works from raw vertex lists, edge sets and order pairs.
"""
from fractions import Fraction
from itertools import chain, combinations, permutations
from math import lcm


def subsets(items, min_size=1):
    items = list(items)
    return chain.from_iterable(combinations(items, k) for k in range(min_size, len(items) + 1))


def brute_cliques(vertices, edges):
    """All nonempty vertex subsets whose 2-subsets are all edges."""
    es = {frozenset(e) for e in edges}
    return [frozenset(s) for s in subsets(sorted(vertices)) if all(frozenset(p) in es for p in combinations(s, 2))]


def floyd_warshall(vertices, edges):
    vs = sorted(vertices)
    inf = float("inf")
    d = {(u, v): (0 if u == v else inf) for u in vs for v in vs}
    for e in edges:
        u, v = tuple(e)
        d[u, v] = d[v, u] = 1
    for k in vs:
        for i in vs:
            for j in vs:
                if d[i, k] + d[k, j] < d[i, j]:
                    d[i, j] = d[i, k] + d[k, j]
    return d


def is_total_order(items, le):
    items = list(items)
    for a in items:
        if not le(a, a):
            return False
    for a, b in permutations(items, 2):
        if le(a, b) and le(b, a):
            return False
        if not (le(a, b) or le(b, a)):
            return False
    for a, b, c in permutations(items, 3):
        if le(a, b) and le(b, c) and not le(a, c):
            return False
    return True


def brute_product_simplices(v1, simplices1, order1, v2, simplices2, order2):
    """Every vertex set of V1 x V2 meeting the three product conditions.

    ``simplicesX`` are sets of frozensets (the full face sets of the factors),
    ``orderX`` sets of strict pairs.
    """
    def le1(a, b):
        return a == b or (a, b) in order1

    def le2(a, b):
        return a == b or (a, b) in order2

    def le(p, q):
        return le1(p[0], q[0]) and le2(p[1], q[1])

    pairs = [(a, b) for a in sorted(v1) for b in sorted(v2)]
    out = []
    for s in subsets(pairs):
        if frozenset(p[0] for p in s) not in simplices1:
            continue
        if frozenset(p[1] for p in s) not in simplices2:
            continue
        if is_total_order(s, le):
            out.append(frozenset(s))
    return out


def euler(simplices):
    return sum((-1) ** (len(s) - 1) for s in simplices)


def grid_merge(left, right):
    """Pair two weighted chains by sampling the midpoint of every cell of a
    common-denominator grid on [0, 1].

    ``left``/``right`` are lists of ``(vertex, weight)`` in chain order.
    Returns a dict ``{(l, r): weight}``.
    """
    denom = lcm(*(Fraction(w).denominator for _, w in left + right))

    def owner(chain, x):
        acc = Fraction(0)
        for v, w in chain:
            acc += Fraction(w)
            if x < acc:
                return v
        raise AssertionError("weights do not reach 1")

    out = {}
    for k in range(denom):
        x = Fraction(2 * k + 1, 2 * denom)
        key = (owner(left, x), owner(right, x))
        out[key] = out.get(key, 0) + Fraction(1, denom)
    return out


def rule_edges(k1_vertices, k1_order, k2_vertices, k2_order, levels):
    """Edges among triples (v1, v2, n) from a literal reading of the adjacency
    conditions, trying both role assignments."""
    def le1(a, b):
        return a == b or (a, b) in k1_order

    def le2(a, b):
        return a == b or (a, b) in k2_order

    triples = [(a, b, n) for a in k1_vertices for b in k2_vertices for n in levels]
    edges = set()
    for ta in triples:
        for tb in triples:
            if ta == tb:
                continue
            (ra1, ra2, na), (rb1, rb2, nb) = ta, tb
            if not le2(rb2, ra2):
                continue
            if (le1(rb1, ra1) and na == nb) or (le1(ra1, rb1) and na == nb - 1):
                edges.add(frozenset((ta, tb)))
    return triples, edges
