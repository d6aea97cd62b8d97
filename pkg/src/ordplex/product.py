"""Ordered products of complexes, the integer line, and product points.

The product of two ordered complexes has vertex set ``V1 x V2`` (tokens
``left|right``).  A vertex set spans a simplex when both projections are
simplices of the factors and the componentwise order is a total order on it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .complex import EXPLICIT, FLAG, SEP, Complex, build_complex, grow_cliques, is_flag, is_simplex, maximal_cliques
from .errors import InvalidPoint, InvalidWindow, NotASimplex, SupportNotAChain
from .ordering import OrderedComplex, leq, sort_chain, validate_ordering

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class Window:
    """Closed integer interval ``[lo, hi]`` standing in for the integer line."""

    lo: int
    hi: int

    def __post_init__(self):
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise InvalidWindow(f"window bounds must be integers, got {self.lo!r}:{self.hi!r}")
        if self.lo > self.hi:
            raise InvalidWindow(f"empty window [{self.lo}, {self.hi}]")

    @classmethod
    def parse(cls, text: str) -> "Window":
        try:
            lo, hi = text.split(":")
            return cls(int(lo), int(hi))
        except ValueError as exc:
            if isinstance(exc, InvalidWindow):
                raise
            raise InvalidWindow(f"expected LO:HI, got {text!r}") from None

    @property
    def levels(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def width(self) -> int:
        return self.hi - self.lo

    def __contains__(self, n) -> bool:
        return self.lo <= n <= self.hi

    def __str__(self):
        return f"{self.lo}:{self.hi}"


def z_window(w: Window) -> OrderedComplex:
    """The integer line truncated to ``w``, ordered as the integers."""
    verts = [str(n) for n in w.levels]
    edges = [(str(n - 1), str(n)) for n in w.levels if n > w.lo]
    return validate_ordering(build_complex(verts, FLAG, edges), edges)


def join_token(left: str, right: str) -> str:
    return f"{left}{SEP}{right}"


def split_token(token: str, left_arity: int) -> tuple[str, str]:
    parts = token.split(SEP)
    return SEP.join(parts[:left_arity]), SEP.join(parts[left_arity:])


def ordered_product(x1: OrderedComplex, x2: OrderedComplex) -> OrderedComplex:
    """Ordered simplicial product of two ordered complexes.

    Simplices are enumerated directly from the three defining conditions and
    stored explicitly, so flagness of the result is something to check, not
    an assumption.
    """
    c1, c2 = x1.complex, x2.complex
    v1, v2 = c1.sorted_vertices(), c2.sorted_vertices()
    pairs = [(a, b) for a in v1 for b in v2]
    token = {p: join_token(*p) for p in pairs}

    o1, o2 = x1.order, x2.order

    def le(p, q):
        return (p[0] == q[0] or (p[0], q[0]) in o1) and (p[1] == q[1] or (p[1], q[1]) in o2)

    # closed neighbourhoods: equal or adjacent
    near1 = {v: c1.adjacency[v] | {v} for v in v1}
    near2 = {v: c2.adjacency[v] | {v} for v in v2}

    adjacency = {p: set() for p in pairs}
    below = set()  # (p, q) with p < q, adjacent pairs only
    for i, p in enumerate(pairs):
        n1, n2 = near1[p[0]], near2[p[1]]
        for q in pairs[i + 1:]:
            if q[0] not in n1 or q[1] not in n2:
                continue
            if le(p, q):
                below.add((p, q))
            elif le(q, p):
                below.add((q, p))
            else:
                continue
            adjacency[p].add(q)
            adjacency[q].add(p)

    # a product clique projects to cliques, which are simplices of flag factors
    check1, check2 = not is_flag(c1), not is_flag(c2)
    seen1, seen2 = {}, {}

    def face_of(c, seen, s):
        s = frozenset(s)
        if s not in seen:
            seen[s] = is_simplex(c, s)
        return seen[s]

    def accept(chain, q):
        if not chain:
            return True
        if check1 and not face_of(c1, seen1, [p[0] for p in chain] + [q[0]]):
            return False
        return not check2 or face_of(c2, seen2, [p[1] for p in chain] + [q[1]])

    index = {p: i for i, p in enumerate(pairs)}
    up = [0] * len(pairs)  # bitmask of strictly larger pairs
    down = [0] * len(pairs)
    for p, q in below:
        up[index[p]] |= 1 << index[q]
        down[index[q]] |= 1 << index[p]

    def chain_ok(mask, j):
        # the chain is already totally ordered; j must not close a 3-cycle
        lower, upper = mask & down[j], mask & up[j]
        while upper:
            low = upper & -upper
            if up[low.bit_length() - 1] & lower:
                return False
            upper ^= low
        return True

    def whole_clique_ok(q):
        # a tournament is transitive iff its out-degrees are pairwise distinct
        mask = sum(1 << index[p] for p in q)
        if len({(up[index[p]] & mask).bit_count() for p in q}) != len(q):
            return False
        if check1 and not is_simplex(c1, {p[0] for p in q}):
            return False
        return not check2 or is_simplex(c2, {p[1] for p in q})

    # the accepted family is closed under subsets, so when every maximal
    # clique is accepted the simplices are exactly the cliques
    cliques = maximal_cliques(pairs, adjacency)
    if not all(whole_clique_ok(q) for q in cliques):
        cliques = grow_cliques(
            pairs,
            adjacency,
            accept=accept if check1 or check2 else None,
            accept_bits=chain_ok,
            maximal=True,
        )
    facets = [[token[p] for p in s] for s in cliques]
    c = build_complex(
        [token[p] for p in pairs], EXPLICIT, facets, arity=c1.arity + c2.arity
    )
    order = [(token[p], token[q]) for p, q in below]
    oc = validate_ordering(c, order)
    return OrderedComplex(oc.complex, oc.order, factor_arities=(c1.arity, c2.arity))


def project(p: OrderedComplex, side: str, s: Iterable[str]) -> tuple[str, ...]:
    """Image of a product simplex under the left or right projection."""
    if p.factor_arities is None:
        raise ValueError("not a product complex")
    s = list(s)
    if not is_simplex(p.complex, s):
        raise NotASimplex(f"{s!r} is not a simplex of the product")
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
    k = 0 if side == LEFT else 1
    return tuple(sorted({split_token(t, p.factor_arities[0])[k] for t in s}))


@dataclass(frozen=True)
class WeightedPoint:
    """A point of a geometric realization in barycentric coordinates.

    ``entries`` is a sorted tuple of ``(vertex, weight)`` with exact positive
    weights summing to one.
    """

    entries: tuple

    def __post_init__(self):
        entries = tuple(sorted((str(v), Fraction(w)) for v, w in self.entries))
        verts = [v for v, _ in entries]
        if not entries:
            raise InvalidPoint("a point needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise InvalidPoint(f"repeated vertex in {verts!r}")
        if any(not (0 < w <= 1) for _, w in entries):
            raise InvalidPoint("weights must lie in (0, 1]")
        if sum(w for _, w in entries) != 1:
            raise InvalidPoint("weights must sum to exactly 1")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, mapping: Mapping[str, object]) -> "WeightedPoint":
        return cls(tuple(mapping.items()))

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.entries)

    def as_dict(self) -> dict:
        return dict(self.entries)


def point_in(c: Complex, p: WeightedPoint) -> bool:
    return is_simplex(c, p.support)


def _chain(p: WeightedPoint, le) -> list:
    ordered = sort_chain(p.support, le)
    if ordered is None:
        raise SupportNotAChain(f"support {p.support!r} is not a chain")
    w = p.as_dict()
    return [(v, w[v]) for v in ordered]


def merge_chains(left: list, right: list) -> list:
    """Pair two weighted chains by merging their cumulative breakpoints.

    Each half-open cell ``[t_k, t_{k+1})`` of the merged partition of [0, 1]
    becomes one ``(left_vertex, right_vertex, length)`` entry; cells of zero
    length never arise since breakpoints are merged as a set.
    """
    def cuts(chain):
        out, acc = [], Fraction(0)
        for v, w in chain:
            out.append((acc, acc + w, v))
            acc += w
        return out

    lc, rc = cuts(left), cuts(right)
    points = sorted({Fraction(0), Fraction(1)} | {b for _, b, _ in lc} | {b for _, b, _ in rc})
    out = []
    i = j = 0
    for t0, t1 in zip(points, points[1:]):
        while lc[i][1] <= t0:
            i += 1
        while rc[j][1] <= t0:
            j += 1
        out.append((lc[i][2], rc[j][2], t1 - t0))
    return out


def realize_in_product(
    x1: OrderedComplex, x2: OrderedComplex, p1: WeightedPoint, p2: WeightedPoint
) -> WeightedPoint:
    """The point of the product that projects onto ``(p1, p2)``."""
    for x, p in ((x1, p1), (x2, p2)):
        if not point_in(x.complex, p):
            raise NotASimplex(f"support {p.support!r} is not a simplex")
    merged = merge_chains(
        _chain(p1, lambda a, b: leq(x1, a, b)), _chain(p2, lambda a, b: leq(x2, a, b))
    )
    return WeightedPoint(tuple((join_token(a, b), w) for a, b, w in merged))


def project_point(p: WeightedPoint, left_arity: int, side: str) -> WeightedPoint:
    """Push a product point forward along a projection, summing weights."""
    k = 0 if side == LEFT else 1
    acc: dict = {}
    for t, w in p.entries:
        v = split_token(t, left_arity)[k]
        acc[v] = acc.get(v, 0) + w
    return WeightedPoint.of(acc)
