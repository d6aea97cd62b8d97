"""Document format, DOT export, fixtures and random instances.

Documents are canonical JSON: keys sorted, every list sorted, one
top-level field per line, trailing newline.  Equal complexes serialize to
identical bytes.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product

from .complex import EXPLICIT, FLAG, Complex, build_complex
from .errors import DocumentError, InvalidPoint
from .ordering import OrderedComplex, validate_ordering
from .product import WeightedPoint

FORMAT = "ordplex-complex"
VERSION = 1


@dataclass(frozen=True)
class ComplexDocument:
    oc: OrderedComplex
    name: str = ""
    description: str = ""
    metadata: dict = field(default_factory=dict, compare=False)


def to_document(oc: OrderedComplex, name: str = "", description: str = "") -> dict:
    c = oc.complex
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "name": name,
        "description": description,
        "arity": c.arity,
        "mode": c.mode,
        "vertices": c.sorted_vertices(),
        "order": [list(p) for p in oc.sorted_order()],
    }
    if c.mode == FLAG:
        doc["edges"] = [list(e) for e in c.sorted_edges()]
    else:
        doc["simplices"] = [list(f) for f in sorted(c.facets)]
    if oc.factor_arities is not None:
        doc["factors"] = list(oc.factor_arities)
    return doc


def serialize_complex(oc: OrderedComplex, name: str = "", description: str = "") -> str:
    # one top-level field per line; values stay compact
    doc = to_document(oc, name, description)
    fields = [f"  {json.dumps(k)}: {json.dumps(doc[k], sort_keys=True)}" for k in sorted(doc)]
    return "{\n" + ",\n".join(fields) + "\n}\n"


def _field(doc, key, kind, default=None):
    if key not in doc:
        if default is not None:
            return default
        raise DocumentError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind):
        raise DocumentError(f"field {key!r} should be {kind.__name__}")
    return value


def _token_lists(value, key):
    if not all(isinstance(x, list) and all(isinstance(t, str) for t in x) for x in value):
        raise DocumentError(f"field {key!r} must be a list of lists of strings")
    return value


def read_document(text: str) -> ComplexDocument:
    """Parse and validate a document, keeping its name and description.

    Raises ``DocumentError`` for malformed text, ``ReservedCharacter`` and
    friends for bad tokens, and ``ValidationFailed`` when the order breaks an
    axiom.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("format", FORMAT) != FORMAT:
        raise DocumentError(f"unknown format {doc.get('format')!r}")
    mode = _field(doc, "mode", str)
    arity = _field(doc, "arity", int, default=1)
    vertices = _field(doc, "vertices", list)
    if not all(isinstance(v, str) for v in vertices):
        raise DocumentError("vertices must be strings")
    if mode == FLAG:
        data = _token_lists(_field(doc, "edges", list, default=[]), "edges")
        if any(len(e) != 2 for e in data):
            raise DocumentError("edges are pairs of vertices")
    elif mode == EXPLICIT:
        data = _token_lists(_field(doc, "simplices", list, default=[]), "simplices")
    else:
        raise DocumentError(f"mode must be {FLAG!r} or {EXPLICIT!r}")
    order = _token_lists(_field(doc, "order", list, default=[]), "order")
    if any(len(p) != 2 for p in order):
        raise DocumentError("order entries are pairs")
    c = build_complex(vertices, mode, data, arity=arity)
    oc = validate_ordering(c, [tuple(p) for p in order])
    factors = doc.get("factors")
    if factors is not None:
        oc = OrderedComplex(oc.complex, oc.order, factor_arities=tuple(factors))
    return ComplexDocument(
        oc,
        name=str(doc.get("name", "")),
        description=str(doc.get("description", "")),
        metadata=doc,
    )


def parse_complex(text: str) -> OrderedComplex:
    return read_document(text).oc


def export_dot(c: Complex, name: str = "complex") -> str:
    """Undirected Graphviz description of the 1-skeleton."""
    lines = [f"graph {json.dumps(name)} {{"]
    for v in c.sorted_vertices():
        lines.append(f"  {json.dumps(v)};")
    for u, v in c.sorted_edges():
        lines.append(f"  {json.dumps(u)} -- {json.dumps(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def point_to_triples(p: WeightedPoint) -> list:
    return [[v, w.numerator, w.denominator] for v, w in p.entries]


def point_from_triples(triples) -> WeightedPoint:
    try:
        return WeightedPoint(tuple((str(v), Fraction(int(n), int(d))) for v, n, d in triples))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InvalidPoint):
            raise
        raise InvalidPoint(f"bad weighted point {triples!r}") from None


def parse_point(text: str) -> WeightedPoint:
    """Read ``a:1/2,b:1/2`` or a JSON list of ``[token, num, den]`` triples."""
    text = text.strip()
    if text.startswith("["):
        try:
            return point_from_triples(json.loads(text))
        except json.JSONDecodeError:
            raise InvalidPoint(f"bad weighted point {text!r}") from None
    entries = []
    for item in text.split(","):
        tok, sep, w = item.strip().rpartition(":")
        if not sep:
            tok, w = w, "1"
        try:
            entries.append((tok, Fraction(w)))
        except (ValueError, ZeroDivisionError):
            raise InvalidPoint(f"bad weight in {item!r}") from None
    return WeightedPoint(tuple(entries))


# fixtures


def path(k: int, prefix: str = "p") -> OrderedComplex:
    """A path on ``k`` vertices ordered along the path."""
    vs = [f"{prefix}{i}" for i in range(k)]
    edges = list(zip(vs, vs[1:]))
    return validate_ordering(build_complex(vs, FLAG, edges), edges)


def point(name: str = "v0") -> OrderedComplex:
    """One vertex: a link with a unique taut Seifert surface."""
    return validate_ordering(build_complex([name], FLAG), [])


def edge(lo: str = "a", hi: str = "b") -> OrderedComplex:
    """Two comparable vertices ``lo <= hi``, as for a knot with two taut surfaces."""
    return validate_ordering(build_complex([lo, hi], FLAG, [(lo, hi)]), [(lo, hi)])


def gen_random_ordered_flag(n: int, seed: int, p: float = 0.5) -> OrderedComplex:
    """Random ordered flag complex, deterministic in ``(n, seed)``.

    Each pair of vertices is joined with probability ``p``; edges are then
    oriented by a random linear order of the vertices.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(f"ordplex:{n}:{seed}")
    vs = [f"v{i}" for i in range(n)]
    edges = [(u, v) for u, v in combinations(vs, 2) if rng.random() < p]
    rank = {v: i for i, v in enumerate(rng.sample(vs, n))}
    order = [(u, v) if rank[u] < rank[v] else (v, u) for u, v in edges]
    return validate_ordering(build_complex(vs, FLAG, edges), order)


def _canonical_key(n, rel):
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted((perm[u], perm[v]) for u, v in rel))
        if best is None or key < best:
            best = key
    return best


def ordered_flag_corpus(max_vertices: int = 4) -> list[OrderedComplex]:
    """Every ordered flag complex on at most ``max_vertices`` vertices, up to isomorphism.

    Each unordered pair is unrelated or oriented one of two ways; orientations
    that are not transitive on some triangle are discarded.
    """
    out = []
    for n in range(1, max_vertices + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for choice in product((0, 1, 2), repeat=len(pairs)):
            rel = set()
            for (u, v), c in zip(pairs, choice):
                if c == 1:
                    rel.add((u, v))
                elif c == 2:
                    rel.add((v, u))
            if not _transitive_on_triangles(n, rel):
                continue
            key = _canonical_key(n, rel)
            if key in seen:
                continue
            seen.add(key)
            vs = [f"v{i}" for i in range(n)]
            named = [(vs[u], vs[v]) for u, v in key]
            out.append(validate_ordering(build_complex(vs, FLAG, named), named))
    return out


def _transitive_on_triangles(n, rel):
    def adj(u, v):
        return (u, v) in rel or (v, u) in rel

    for a, b, c in combinations(range(n), 3):
        if not (adj(a, b) and adj(b, c) and adj(a, c)):
            continue
        for u, v, w in permutations((a, b, c)):
            if (u, v) in rel and (v, w) in rel and (u, w) not in rel:
                return False
    return True


FIXTURES = {"POINT": point, "EDGE": edge, "PATH": path}


def fixture(spec: str) -> OrderedComplex:
    """Resolve ``POINT``, ``EDGE``, ``PATH:k`` or ``RANDOM:n:seed``."""
    name, _, rest = spec.partition(":")
    name = name.upper()
    args = [int(x) for x in rest.split(":")] if rest else []
    if name == "RANDOM":
        return gen_random_ordered_flag(*args)
    if name == "PATH":
        return path(*(args or [3]))
    if name in FIXTURES and not args:
        return FIXTURES[name]()
    raise KeyError(spec)
