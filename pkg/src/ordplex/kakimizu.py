"""Finite windows of the Kakimizu complex of a connected sum.

Given ordered flag complexes ``K1`` and ``K2`` (the Kakimizu complexes of the
two summands), the complex for the connected sum has one vertex per triple
``(v1, v2, n)`` with ``n`` an integer level.  Two constructions are provided
and can be checked against each other:

* the product pipeline: ``(K1 x Z)`` reordered by ``leq2``, then multiplied
  by ``K2`` with the componentwise order ``leq3``, then flag-closed;
* the direct rule: the flag complex whose edges join triples satisfying the
  adjacency conditions for surfaces glued across the summing sphere.

Only a finite window of levels is ever built.
"""
from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .complex import (
    FLAG,
    SEP,
    UNREACHABLE,
    Complex,
    build_complex,
    check_token,
    flag_closure,
    is_flag,
    skeleton_distance,
)
from .errors import MalformedToken, NotASimplex, UnknownVertex, WindowTooSmall
from .ordering import OrderedComplex, leq, relabel, validate_ordering
from .product import (
    Window,
    WeightedPoint,
    _chain,
    merge_chains,
    ordered_product,
    point_in,
    realize_in_product,
    split_token,
    z_window,
)

PRODUCT_PIPELINE = "product"
DIRECT_RULE = "direct"
BOTH = "both"


def psi_label(v1: str, v2: str, n: int) -> str:
    check_token(v1)
    check_token(v2)
    return f"{v1}{SEP}{v2}{SEP}{int(n)}"


def psi_unlabel(token: str) -> tuple[str, str, int]:
    parts = token.split(SEP)
    if len(parts) != 3 or not parts[0] or not parts[1]:
        raise MalformedToken(f"{token!r} is not a v1|v2|n triple token")
    try:
        n = int(parts[2])
    except ValueError:
        raise MalformedToken(f"bad level in triple token {token!r}") from None
    if str(n) != parts[2]:
        raise MalformedToken(f"non-canonical level in triple token {token!r}")
    return parts[0], parts[1], n


def leq2(k1: OrderedComplex, p: tuple[str, int], q: tuple[str, int]) -> bool:
    """The twisted order on ``V(K1) x Z``.

    ``(r, m) <= (s, n)`` when ``r <= s`` on the same level, or when ``s <= r``
    and ``r`` sits one level above ``s``.
    """
    (rb, nb), (ra, na) = p, q
    if p == q:
        for v in (rb, ra):
            if v not in k1.complex.vertices:
                raise UnknownVertex(v)
        return True
    return (leq(k1, rb, ra) and nb == na) or (leq(k1, ra, rb) and na == nb - 1)


def _level_pair(token: str) -> tuple[str, int]:
    v, n = split_token(token, 1)
    return v, int(n)


@lru_cache(maxsize=128)
def reorder_with_leq2(k1: OrderedComplex, w: Window) -> OrderedComplex:
    """``K1 x Z[w]`` with its order replaced by ``leq2``.

    Raises ``ValidationFailed`` if the twisted order fails any axiom on the
    product complex, which includes comparability not matching adjacency.
    """
    base = ordered_product(k1, z_window(w))
    c = base.complex
    # the unrestricted relation: any comparable non-adjacent pair is a P2 failure
    rel = [
        (s, t)
        for s in c.vertices
        for t in c.vertices
        if s != t and leq2(k1, _level_pair(s), _level_pair(t))
    ]
    oc = validate_ordering(c, rel)
    return OrderedComplex(oc.complex, oc.order, factor_arities=base.factor_arities)


def _rule_roles(k1, k2, ta, tb) -> bool:
    """Adjacency conditions with ``ta`` in role a and ``tb`` in role b."""
    (a1, a2, na), (b1, b2, nb) = ta, tb
    if not (b2 == a2 or (b2, a2) in k2.order):
        return False
    if na == nb:
        return b1 == a1 or (b1, a1) in k1.order
    return na == nb - 1 and (a1 == b1 or (a1, b1) in k1.order)


def edgescor_adjacent(k1: OrderedComplex, k2: OrderedComplex, t, t2) -> bool:
    """Whether two triples ``(v1, v2, n)`` are joined by an edge."""
    if isinstance(t, str):
        t = psi_unlabel(t)
    if isinstance(t2, str):
        t2 = psi_unlabel(t2)
    for x in (t, t2):
        if x[0] not in k1.complex.vertices:
            raise UnknownVertex(x[0])
        if x[1] not in k2.complex.vertices:
            raise UnknownVertex(x[1])
    if t == t2:
        return False
    return _rule_roles(k1, k2, t, t2) or _rule_roles(k1, k2, t2, t)


@dataclass(frozen=True)
class SumWindowComplex:
    oc: OrderedComplex
    window: Window
    provenance: str
    # product pipeline only: whether the directly defined product simplices
    # already formed a flag complex before closure
    product_was_flag: bool | None = None
    # product pipeline only: the ordered product before closure and relabelling,
    # and its facets in the relabelled tokens
    product: OrderedComplex | None = field(default=None, compare=False, repr=False)
    product_facets: tuple | None = field(default=None, compare=False, repr=False)

    @property
    def complex(self) -> Complex:
        return self.oc.complex

    @property
    def truncated_levels(self) -> tuple[int, int]:
        return self.window.lo, self.window.hi

    def is_truncated(self, token: str) -> bool:
        return psi_unlabel(token)[2] in self.truncated_levels


@dataclass(frozen=True)
class SumComparison:
    pipeline: SumWindowComplex
    direct: SumWindowComplex
    vertices_equal: bool
    edges_equal: bool
    simplices_equal: bool
    order_equal: bool

    @property
    def equal(self) -> bool:
        return self.vertices_equal and self.edges_equal and self.simplices_equal

    def summary(self) -> str:
        if self.equal:
            return "EQUAL"
        diffs = [
            name
            for name, ok in (
                ("vertices", self.vertices_equal),
                ("edges", self.edges_equal),
                ("simplices", self.simplices_equal),
            )
            if not ok
        ]
        return "DIFFERENT: " + ", ".join(diffs)


def _check_inputs(k1, k2):
    for k in (k1, k2):
        if k.complex.arity != 1:
            raise MalformedToken("connected-sum factors must use plain vertex tokens")


def pipeline_window(k1: OrderedComplex, k2: OrderedComplex, w: Window) -> SumWindowComplex:
    _check_inputs(k1, k2)
    left = reorder_with_leq2(k1, w)
    prod = ordered_product(left, k2)
    was_flag = is_flag(prod.complex)
    mapping = {}
    for t in prod.complex.vertices:
        v1, n, v2 = t.split(SEP)
        mapping[t] = psi_label(v1, v2, int(n))
    # closure may add simplices, so the order is checked again on the result
    closed = validate_ordering(flag_closure(prod.complex), prod.order)
    oc = relabel(closed, mapping, arity=3)
    facets = tuple(sorted(tuple(sorted(mapping[t] for t in f)) for f in prod.complex.facet_list()))
    return SumWindowComplex(
        oc, w, PRODUCT_PIPELINE, product_was_flag=was_flag, product=prod, product_facets=facets
    )


def direct_window(k1: OrderedComplex, k2: OrderedComplex, w: Window) -> SumWindowComplex:
    """Flag complex of the pairwise adjacency rule, with no product involved.

    Rather than testing every pair of triples, the rule is read generatively:
    for each ``b2 <= a2`` in ``K2`` (equality allowed), role b sits below role a
    either on the same level with ``b1 <= a1``, or one level up with
    ``a1 <= b1``.
    """
    _check_inputs(k1, k2)
    v1, v2 = k1.complex.sorted_vertices(), k2.complex.sorted_vertices()
    le1 = [(x, x) for x in v1] + sorted(k1.order)
    le2 = [(x, x) for x in v2] + sorted(k2.order)
    label = {(a, b, n): psi_label(a, b, n) for a in v1 for b in v2 for n in w.levels}
    edges, order = set(), set()
    for b2, a2 in le2:
        for n in w.levels:
            for b1, a1 in le1:
                if (a1, a2) != (b1, b2):
                    # same level, b below a
                    lo, hi = label[b1, b2, n], label[a1, a2, n]
                    order.add((lo, hi))
                    edges.add(frozenset((lo, hi)))
                if n + 1 in w:
                    # b one level up, with a1 <= b1 read off the same pair
                    lo, hi = label[a1, b2, n + 1], label[b1, a2, n]
                    order.add((lo, hi))
                    edges.add(frozenset((lo, hi)))
    c = build_complex(list(label.values()), FLAG, [tuple(e) for e in edges], arity=3)
    return SumWindowComplex(validate_ordering(c, order), w, DIRECT_RULE)


def _facets(s: SumWindowComplex) -> tuple:
    if s.product_facets is not None:
        return s.product_facets
    return tuple(s.complex.facet_list())


def compare_windows(a: SumWindowComplex, b: SumWindowComplex) -> SumComparison:
    ca, cb = a.complex, b.complex
    return SumComparison(
        pipeline=a,
        direct=b,
        vertices_equal=ca.vertices == cb.vertices,
        edges_equal=ca.edge_set() == cb.edge_set(),
        # both are closed under faces, so equal facets means equal simplices;
        # the pipeline side uses the product's own simplices, not the closure
        simplices_equal=_facets(a) == _facets(b),
        order_equal=a.oc.order == b.oc.order,
    )


def connected_sum_window(k1: OrderedComplex, k2: OrderedComplex, w: Window, method: str = BOTH):
    """Build the connected-sum complex on a window of levels.

    Returns a ``SumWindowComplex`` for a single method, or a
    ``SumComparison`` of both constructions for ``method="both"``.
    """
    if method == PRODUCT_PIPELINE:
        return pipeline_window(k1, k2, w)
    if method == DIRECT_RULE:
        return direct_window(k1, k2, w)
    if method == BOTH:
        return compare_windows(pipeline_window(k1, k2, w), direct_window(k1, k2, w))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class WindowDistance:
    distance: float
    # True when a shorter path through levels outside the window cannot be ruled out
    may_be_truncated: bool


def sum_distance(s: SumWindowComplex, u: str, v: str) -> WindowDistance:
    d = skeleton_distance(s.complex, u, v)
    if d == UNREACHABLE:
        return WindowDistance(d, True)
    lu, lv = psi_unlabel(u)[2], psi_unlabel(v)[2]
    lo, hi = s.window.lo, s.window.hi
    # each edge moves at most one level, so leaving the window costs this much
    below = (lu - lo + 1) + (lv - lo + 1)
    above = (hi - lu + 1) + (hi - lv + 1)
    return WindowDistance(d, min(below, above) < d)


def split_level(r) -> tuple[int, Fraction]:
    r = Fraction(r)
    n = math.floor(r)
    return n, r - n


def realize_triple(
    k1: OrderedComplex,
    k2: OrderedComplex,
    p1: WeightedPoint,
    p2: WeightedPoint,
    r,
    w: Window,
) -> WeightedPoint:
    """Point of the connected-sum window lying over ``(p1, p2, r)``.

    The level ``r`` becomes the edge point ``{n: 1-t, n+1: t}`` of the integer
    line; ``p1`` is paired with it first, and the result is paired with ``p2``
    using the twisted order on ``K1 x Z``.
    """
    if not point_in(k2.complex, p2):
        raise NotASimplex(f"support {p2.support!r} is not a simplex")
    n, t = split_level(r)
    if n not in w or (t and n + 1 not in w):
        raise WindowTooSmall(f"level {r} needs levels outside window [{w.lo}, {w.hi}]")
    zp = {str(n): 1 - t}
    if t:
        zp[str(n + 1)] = t
    zx = z_window(Window(n, n + 1 if t else n))
    first = realize_in_product(k1, zx, p1, WeightedPoint.of(zp))

    def le2(a, b):
        return leq2(k1, _level_pair(a), _level_pair(b))

    chain = _chain(first, le2)
    merged = merge_chains(chain, _chain(p2, lambda x, y: leq(k2, x, y)))
    entries = []
    for a, b, wt in merged:
        v1, level = _level_pair(a)
        entries.append((psi_label(v1, b, level), wt))
    return WeightedPoint(tuple(entries))


def triple_projections(p: WeightedPoint) -> tuple[WeightedPoint, WeightedPoint, Fraction]:
    """Weights summed by first factor, by second factor, and the mean level."""
    first, second, level = {}, {}, Fraction(0)
    for t, w in p.entries:
        v1, v2, n = psi_unlabel(t)
        first[v1] = first.get(v1, 0) + w
        second[v2] = second.get(v2, 0) + w
        level += w * n
    return WeightedPoint.of(first), WeightedPoint.of(second), level
