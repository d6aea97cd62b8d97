"""Order relations on vertices and the ordered-complex axioms.

A relation is a frozenset of directed pairs ``(u, v)`` meaning ``u <= v``.
Reflexive pairs are implicit and never stored.  An ordered complex must satisfy

* P1: ``u <= v`` and ``v <= u`` only when ``u == v``;
* P2: distinct ``u, v`` are comparable exactly when they are adjacent;
* P3: on each 2-simplex, ``u <= v <= w`` implies ``u <= w``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable

from .complex import Complex, relabel as relabel_complex
from .errors import UnknownVertex, ValidationFailed

P1, P2, P3 = "P1", "P2", "P3"


def order_relation(pairs: Iterable[tuple[str, str]]) -> frozenset:
    """Normalise pairs into a relation, dropping reflexive entries."""
    return frozenset((u, v) for u, v in pairs if u != v)


@dataclass(frozen=True, order=True)
class Violation:
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom} violated at {', '.join(self.witness)}"


@dataclass(frozen=True)
class OrderedComplex:
    complex: Complex
    order: frozenset
    # arities of (left, right) factors when this is an ordered product
    factor_arities: tuple | None = field(default=None, compare=False)

    @property
    def vertices(self):
        return self.complex.vertices

    def sorted_order(self) -> list[tuple[str, str]]:
        return sorted(self.order)


def _check_endpoints(c: Complex, rel) -> None:
    for u, v in rel:
        for x in (u, v):
            if x not in c.vertices:
                raise UnknownVertex(x)


def find_violations(c: Complex, rel: Iterable[tuple[str, str]]) -> list[Violation]:
    """Every axiom violation of ``rel`` on ``c``, each with a witness.

    P1 and P2-by-absence witnesses are sorted pairs; a P2 witness for a
    comparable non-adjacent pair keeps the stored direction; P3 witnesses are
    the offending chains ``(u, v, w)`` with ``u <= v <= w`` but not ``u <= w``.
    """
    rel = order_relation(rel)
    _check_endpoints(c, rel)
    out = set()
    for u, v in rel:
        if (v, u) in rel:
            out.add(Violation(P1, tuple(sorted((u, v)))))
        if not c.adjacent(u, v):
            out.add(Violation(P2, (u, v)))
    for e in c.edge_set():
        u, v = sorted(e)
        if (u, v) not in rel and (v, u) not in rel:
            out.add(Violation(P2, (u, v)))
    for tri in c.triangles():
        for u, v, w in permutations(tri):
            if (u, v) in rel and (v, w) in rel and (u, w) not in rel:
                out.add(Violation(P3, (u, v, w)))
    return sorted(out)


def validate_ordering(c: Complex, rel: Iterable[tuple[str, str]]) -> OrderedComplex:
    """Attach ``rel`` to ``c`` as its order, raising ``ValidationFailed`` on any violation."""
    rel = order_relation(rel)
    report = find_violations(c, rel)
    if report:
        raise ValidationFailed(report)
    return OrderedComplex(c, rel)


def restrict_to_adjacent(c: Complex, rel: Iterable[tuple[str, str]]) -> frozenset:
    rel = order_relation(rel)
    _check_endpoints(c, rel)
    return frozenset(p for p in rel if c.adjacent(*p))


def leq(oc: OrderedComplex, u: str, v: str) -> bool:
    for x in (u, v):
        if x not in oc.complex.vertices:
            raise UnknownVertex(x)
    return u == v or (u, v) in oc.order


def comparable(oc: OrderedComplex, u: str, v: str) -> bool:
    return leq(oc, u, v) or leq(oc, v, u)


def sort_chain(items, le) -> list:
    """Sort a totally ordered collection under the predicate ``le``.

    Returns ``None`` when the items are not a chain (some pair incomparable,
    or the relation is not transitive on them).
    """
    items = list(items)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if not (le(a, b) or le(b, a)):
                return None
    ranks = {a: sum(1 for b in items if le(b, a)) for a in items}
    if sorted(ranks.values()) != list(range(1, len(items) + 1)):
        return None
    return sorted(items, key=ranks.__getitem__)


def relabel(oc: OrderedComplex, mapping, arity: int | None = None) -> OrderedComplex:
    c = relabel_complex(oc.complex, mapping, arity)
    return OrderedComplex(c, frozenset((mapping[u], mapping[v]) for u, v in oc.order))
