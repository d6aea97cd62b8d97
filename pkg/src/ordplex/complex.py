"""Finite abstract simplicial complexes.

A complex is stored either as a flag complex (an edge set, simplices are the
cliques) or explicitly (a set of maximal simplices, closed under faces).
Simplices are canonical tuples of vertex tokens sorted by token.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DuplicateVertex, MalformedToken, NotASimplex, ReservedCharacter, UnknownVertex

SEP = "|"
FLAG = "flag"
EXPLICIT = "explicit"
UNREACHABLE = float("inf")

Simplex = tuple  # canonical: sorted tuple of tokens


def simplex(vertices: Iterable[str]) -> tuple[str, ...]:
    """Canonical form of a vertex set; rejects repeats."""
    vs = tuple(sorted(vertices))
    if len(set(vs)) != len(vs):
        raise DuplicateVertex(f"repeated vertex in simplex {vs!r}")
    if not vs:
        raise NotASimplex("a simplex needs at least one vertex")
    return vs


def check_token(token: str, arity: int = 1) -> None:
    """Reject tokens that break the flat ``a|b|c`` naming scheme.

    Base tokens (``arity == 1``) may not contain the separator at all.
    Composite tokens must split into exactly ``arity`` nonempty parts.
    """
    if not isinstance(token, str) or not token:
        raise MalformedToken(f"vertex tokens must be nonempty strings, got {token!r}")
    parts = token.split(SEP)
    if arity == 1:
        if len(parts) != 1:
            raise ReservedCharacter(f"vertex token {token!r} contains reserved {SEP!r}")
        return
    if len(parts) != arity or not all(parts):
        raise MalformedToken(f"vertex token {token!r} is not a {arity}-part composite token")


@dataclass(frozen=True)
class Complex:
    vertices: frozenset
    mode: str
    edges: frozenset = frozenset()   # FLAG: frozensets of size 2
    facets: frozenset = frozenset()  # EXPLICIT: maximal simplices as canonical tuples
    arity: int = 1
    adjacency: Mapping = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        adj = {v: set() for v in self.vertices}
        if self.mode == FLAG:
            pairs = (tuple(e) for e in self.edges)
        else:
            pairs = (p for f in self.facets for p in combinations(f, 2))
        for u, v in pairs:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", {v: frozenset(n) for v, n in adj.items()})
        if self.mode == EXPLICIT:
            index = {v: [] for v in self.vertices}
            for f in self.facets:
                fs = frozenset(f)
                for v in f:
                    index[v].append(fs)
            object.__setattr__(self, "_facet_index", index)

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def adjacent(self, u: str, v: str) -> bool:
        return v in self.adjacency[u]

    def edge_set(self) -> frozenset:
        """All 1-simplices as frozensets of two tokens."""
        if self.mode == FLAG:
            return self.edges
        return frozenset(frozenset((u, v)) for u in self.adjacency for v in self.adjacency[u])

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edge_set())

    def simplices(self, max_dim: int | None = None) -> Iterator[tuple[str, ...]]:
        """Yield every simplex once, in deterministic order.

        Flag complexes enumerate cliques lazily; ``max_dim`` caps the size.
        """
        max_size = None if max_dim is None else max_dim + 1
        if self.mode == FLAG:
            yield from grow_cliques(self.sorted_vertices(), self.adjacency, max_size=max_size)
            return
        seen = set()
        for v in self.vertices:
            seen.add((v,))
        for f in self.facets:
            top = len(f) if max_size is None else min(len(f), max_size)
            for k in range(2, top + 1):
                seen.update(combinations(f, k))
        yield from sorted(seen, key=lambda s: (len(s), s))

    def triangles(self) -> Iterator[tuple[str, str, str]]:
        """All 2-simplices, each once as a sorted triple."""
        if self.mode == EXPLICIT:
            seen = set()
            for f in self.facets:
                seen.update(combinations(f, 3))
            yield from sorted(seen)
            return
        adj = self.adjacency
        for u in self.sorted_vertices():
            higher = sorted(v for v in adj[u] if v > u)
            for i, v in enumerate(higher):
                for w in higher[i + 1:]:
                    if w in adj[v]:
                        yield u, v, w

    def facet_list(self) -> list[tuple[str, ...]]:
        """Maximal simplices, sorted."""
        if self.mode == EXPLICIT:
            covered = {v for f in self.facets for v in f}
            isolated = [(v,) for v in self.vertices if v not in covered]
            return sorted(list(self.facets) + isolated)
        return list(self.skeleton_cliques)

    @cached_property
    def skeleton_cliques(self) -> tuple[tuple[str, ...], ...]:
        """Maximal cliques of the 1-skeleton, sorted."""
        return tuple(maximal_cliques(self.sorted_vertices(), self.adjacency))


def grow_cliques(
    order: list,
    adjacency: Mapping,
    accept: Callable[[tuple, object], bool] | None = None,
    max_size: int | None = None,
    maximal: bool = False,
    accept_bits: Callable[[int, int], bool] | None = None,
) -> Iterator[tuple]:
    """Enumerate cliques of a graph, each once, as tuples following ``order``.

    With ``accept``, a clique is extended by ``v`` only when ``accept(clique, v)``
    holds; the accepted family must be closed under taking subsets and
    ``accept`` must not depend on the position of ``v``.  ``accept_bits`` is
    the same kind of test on the clique's bitmask and the index of ``v`` in
    ``order``; both must hold when both are given.  With ``maximal``, only
    members of the family that admit no extension are yielded.
    """
    index = {v: i for i, v in enumerate(order)}
    nbr = [0] * len(order)
    for i, v in enumerate(order):
        for w in adjacency[v]:
            j = index.get(w)
            if j is not None:
                nbr[i] |= 1 << j
    higher = [m >> (i + 1) << (i + 1) for i, m in enumerate(nbr)]

    def bits(mask):
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def ok(clique, mask, j):
        if accept_bits is not None and not accept_bits(mask, j):
            return False
        return accept is None or accept(clique, order[j])

    filtered = accept is not None or accept_bits is not None
    stack = []
    for i in reversed(range(len(order))):
        if ok((), 0, i):
            stack.append(((order[i],), 1 << i, higher[i], nbr[i]))
    while stack:
        clique, mask, cand, common = stack.pop()
        full = max_size is not None and len(clique) >= max_size
        children = []
        if not full:
            for j in bits(cand):
                if ok(clique, mask, j):
                    children.append((clique + (order[j],), mask | 1 << j, cand & higher[j], common & nbr[j]))
        if maximal:
            if not filtered or children:
                extendable = common != 0
            else:
                # only lower-indexed common neighbours remain untested
                extendable = any(ok(clique, mask, j) for j in bits(common & ~cand))
            if not extendable:
                yield clique
        else:
            yield clique
        stack.extend(reversed(children))


def maximal_cliques(order: list, adjacency: Mapping) -> list[tuple]:
    """Maximal cliques by Bron-Kerbosch with pivoting, as tuples following ``order``."""
    index = {v: i for i, v in enumerate(order)}
    nbr = [0] * len(order)
    for i, v in enumerate(order):
        for w in adjacency[v]:
            j = index.get(w)
            if j is not None:
                nbr[i] |= 1 << j
    out = []
    stack = [(0, (1 << len(order)) - 1, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                out.append(tuple(order[i] for i in _bit_indices(r)))
            continue
        pivot, best = -1, -1
        for u in _bit_indices(p | x):
            k = (p & nbr[u]).bit_count()
            if k > best:
                pivot, best = u, k
        for v in _bit_indices(p & ~nbr[pivot]):
            bit = 1 << v
            stack.append((r | bit, p & nbr[v], x & nbr[v]))
            p &= ~bit
            x |= bit
    return sorted(out)


def _bit_indices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_complex(
    vertices: Iterable[str],
    mode: str,
    data: Iterable[Iterable[str]] = (),
    arity: int = 1,
) -> Complex:
    """Validate and build a complex.

    In FLAG mode ``data`` is a collection of edges; in EXPLICIT mode it is a
    collection of simplices (non-maximal entries are absorbed into the facets
    that contain them).
    """
    vertices = list(vertices)
    vset = frozenset(vertices)
    if len(vset) != len(vertices):
        dupes = sorted({v for v in vertices if vertices.count(v) > 1})
        raise DuplicateVertex(f"duplicate vertices: {dupes}")
    for v in vertices:
        check_token(v, arity)
    if mode == FLAG:
        edges = set()
        for e in data:
            e = tuple(e)
            if len(e) != 2 or e[0] == e[1]:
                raise MalformedToken(f"an edge joins two distinct vertices, got {e!r}")
            for v in e:
                if v not in vset:
                    raise UnknownVertex(v)
            edges.add(frozenset(e))
        return Complex(vset, FLAG, edges=frozenset(edges), arity=arity)
    if mode == EXPLICIT:
        listed = set()
        for s in data:
            s = simplex(s)
            for v in s:
                if v not in vset:
                    raise UnknownVertex(v)
            listed.add(s)
        facets = []
        containing: dict = {v: [] for v in vset}
        for s in sorted(listed, key=len, reverse=True):
            ss = frozenset(s)
            if not any(ss <= f for f in containing[s[0]]):
                facets.append(s)
                for v in s:
                    containing[v].append(ss)
        return Complex(vset, EXPLICIT, facets=frozenset(f for f in facets if len(f) > 1), arity=arity)
    raise ValueError(f"mode must be {FLAG!r} or {EXPLICIT!r}, got {mode!r}")


def is_simplex(c: Complex, s: Iterable[str]) -> bool:
    s = frozenset(s)
    if not s:
        return False
    for v in s:
        if v not in c.vertices:
            raise UnknownVertex(v)
    if len(s) == 1:
        return True
    if c.mode == FLAG:
        return all(b in c.adjacency[a] for a, b in combinations(s, 2))
    v = next(iter(s))
    return any(s <= f for f in c._facet_index[v])


def is_flag(c: Complex) -> bool:
    """True iff every clique of the 1-skeleton is a simplex."""
    if c.mode == FLAG:
        return True
    return all(is_simplex(c, q) for q in c.skeleton_cliques)


def flag_closure(c: Complex) -> Complex:
    """The flag complex on the 1-skeleton of ``c``."""
    return Complex(c.vertices, FLAG, edges=c.edge_set(), arity=c.arity)


def skeleton_distance(c: Complex, u: str, v: str):
    """Edge-path distance between two vertices, or ``UNREACHABLE``."""
    for x in (u, v):
        if x not in c.vertices:
            raise UnknownVertex(x)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in c.adjacency[x]:
            if y not in dist:
                if y == v:
                    return dist[x] + 1
                dist[y] = dist[x] + 1
                queue.append(y)
    return UNREACHABLE


def euler_characteristic(c: Complex) -> int:
    return sum(-1 if len(s) % 2 == 0 else 1 for s in c.simplices())


def f_vector(c: Complex) -> list[int]:
    counts: list[int] = []
    for s in c.simplices():
        while len(counts) < len(s):
            counts.append(0)
        counts[len(s) - 1] += 1
    return counts


def induced_subcomplex(c: Complex, vertices: Iterable[str]) -> Complex:
    keep = frozenset(vertices)
    for v in keep:
        if v not in c.vertices:
            raise UnknownVertex(v)
    if c.mode == FLAG:
        return Complex(keep, FLAG, edges=frozenset(e for e in c.edges if e <= keep), arity=c.arity)
    faces = [tuple(v for v in f if v in keep) for f in c.facets]
    return build_complex(sorted(keep), EXPLICIT, [f for f in faces if f], arity=c.arity)


def relabel(c: Complex, mapping: Mapping[str, str], arity: int | None = None) -> Complex:
    """Rename vertices through an injective mapping."""
    arity = c.arity if arity is None else arity
    new = [mapping[v] for v in c.vertices]
    if len(set(new)) != len(new):
        raise DuplicateVertex("relabelling is not injective")
    for v in new:
        check_token(v, arity)
    if c.mode == FLAG:
        edges = frozenset(frozenset(mapping[x] for x in e) for e in c.edges)
        return Complex(frozenset(new), FLAG, edges=edges, arity=arity)
    facets = frozenset(tuple(sorted(mapping[x] for x in f)) for f in c.facets)
    return Complex(frozenset(new), EXPLICIT, facets=facets, arity=arity)
