"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line.  All checks are
exact: integer counts, set equality and rational arithmetic.
"""
import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from ordplex import (
    BOTH,
    DIRECT_RULE,
    Violation,
    WeightedPoint,
    Window,
    connected_sum_window,
    euler_characteristic,
    find_violations,
    is_flag,
    is_simplex,
    ordered_product,
    parse_complex,
    psi_label,
    psi_unlabel,
    realize_triple,
    reorder_with_leq2,
    serialize_complex,
    skeleton_distance,
)
from ordplex.cli import main
from ordplex.complex import f_vector, induced_subcomplex
from ordplex.kakimizu import triple_projections
from ordplex.ordering import relabel
from ordplex.product import LEFT, RIGHT, project
from ordplex.toolkit import edge, gen_random_ordered_flag, point

from oracles import brute_cliques, rule_edges, euler


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def test_1_point_sum_is_a_line(report, capsys):
    code = main(["consum", "POINT", "POINT", "--window", "-10:10", "--method", "both"])
    out = capsys.readouterr().out
    res = connected_sum_window(point(), point(), Window(-10, 10), BOTH)
    bad = 0
    for swc in (res.pipeline, res.direct):
        c = swc.complex
        for m in range(-10, 11):
            for n in range(-10, 11):
                if skeleton_distance(c, f"v0|v0|{m}", f"v0|v0|{n}") != abs(m - n):
                    bad += 1
    sizes = [(len(s.complex.vertices), len(s.complex.edge_set())) for s in (res.pipeline, res.direct)]
    ok = code == 0 and "EQUAL" in out and res.equal and sizes == [(21, 20), (21, 20)] and bad == 0
    report(1, ok, f"path sizes {sizes}, cli exit {code}, distance mismatches {bad}")


def test_2_oracle_equivalence(report, corpus, corpus_sums):
    discrepancies = []
    for (i, j), res in corpus_sums.items():
        if not (res.vertices_equal and res.edges_equal and res.simplices_equal):
            discrepancies.append((serialize_complex(corpus[i]), serialize_complex(corpus[j]), res.summary()))
    report(2, not discrepancies, f"{len(corpus_sums)} corpus pairs on window 0:3, {len(discrepancies)} discrepancies")


def mutation_failures(oc, rng, samples=3):
    """Inject each mutation kind and check the expected witness is reported."""
    c = oc.complex
    failures = 0
    order = sorted(oc.order)
    for u, v in rng.sample(order, min(samples, len(order))):
        if Violation("P1", tuple(sorted((u, v)))) not in find_violations(c, oc.order | {(v, u)}):
            failures += 1
        if Violation("P2", tuple(sorted((u, v)))) not in find_violations(c, oc.order - {(u, v)}):
            failures += 1
    far = [(u, v) for u, v in combinations(sorted(c.vertices), 2) if not c.adjacent(u, v)]
    for u, v in rng.sample(far, min(samples, len(far))):
        if Violation("P2", (u, v)) not in find_violations(c, oc.order | {(u, v)}):
            failures += 1
    return failures


def test_3_leq2_leq3_axioms(report, corpus, corpus_sums):
    rng = random.Random(3)
    violations = mutations = 0
    checked2 = checked3 = 0
    for k in corpus:
        r = reorder_with_leq2(k, Window(0, 3))
        violations += len(find_violations(r.complex, r.order))
        mutations += mutation_failures(r, rng)
        checked2 += 1
    # the <=3 product of the reordered factor with each second factor
    for res in corpus_sums.values():
        p = res.pipeline.product
        violations += len(find_violations(p.complex, p.order))
        checked3 += 1
        if rng.random() < 0.1:
            mutations += mutation_failures(p, rng)
    ok = violations == 0 and mutations == 0
    report(
        3,
        ok,
        f"{checked2} leq2 complexes, {checked3} leq3 products: {violations} violations, "
        f"{mutations} undetected mutations",
    )


def test_4_product_shadows(report):
    bad_euler = bad_proj = bad_flag = 0
    for seed in range(100):
        rng = random.Random(seed)
        x1 = gen_random_ordered_flag(rng.randint(1, 6), 2 * seed)
        x2 = gen_random_ordered_flag(rng.randint(1, 6), 2 * seed + 1)
        p = ordered_product(x1, x2)
        if euler_characteristic(p.complex) != euler_characteristic(x1.complex) * euler_characteristic(x2.complex):
            bad_euler += 1
        for s in p.complex.simplices():
            if not (is_simplex(x1.complex, project(p, LEFT, s)) and is_simplex(x2.complex, project(p, RIGHT, s))):
                bad_proj += 1
        if not is_flag(p.complex):
            bad_flag += 1
    ok = bad_euler == bad_proj == bad_flag == 0
    report(4, ok, f"100 random pairs: euler {bad_euler}, projection {bad_proj}, flag {bad_flag} failures")


def test_5_square_with_diagonal(report):
    triples, edges = rule_edges(["a", "b"], {("a", "b")}, ["v0"], set(), [0, 1])
    oracle = {frozenset(psi_label(*t) for t in s) for s in brute_cliques(triples, edges)}
    oracle_f = [sum(1 for s in oracle if len(s) == k) for k in (1, 2, 3)]
    res = connected_sum_window(edge(), point(), Window(0, 1), BOTH)
    found = []
    for swc in (res.pipeline, res.direct):
        c = swc.complex
        found.append((f_vector(c), euler_characteristic(c), {frozenset(s) for s in c.simplices()} == oracle))
    ok = oracle_f == [4, 5, 2] and euler(oracle) == 1 and all(f == ([4, 5, 2], 1, True) for f in found)
    report(5, ok, f"oracle f-vector {oracle_f}, constructions {found}")


def _random_point(rng, k, denom):
    s = rng.choice(list(k.complex.simplices()))
    denom *= len(s)
    cuts = sorted(rng.sample(range(1, denom), len(s) - 1))
    return WeightedPoint(tuple(zip(s, [F(b - a, denom) for a, b in zip([0] + cuts, cuts + [denom])])))


def test_6_realization_round_trip(report):
    w = Window(-2, 2)
    rng = random.Random(6)
    factors = [(gen_random_ordered_flag(rng.randint(1, 4), s), gen_random_ordered_flag(rng.randint(1, 4), s + 50)) for s in range(20)]
    windows = {}
    bad_sum = bad_simplex = bad_proj = 0
    for i in range(1000):
        k1, k2 = factors[i % len(factors)]
        if i % len(factors) not in windows:
            windows[i % len(factors)] = connected_sum_window(k1, k2, w, DIRECT_RULE).complex
        c = windows[i % len(factors)]
        denom = rng.choice([2, 3, 4, 6, 12, 35, 97])
        p1, p2 = _random_point(rng, k1, denom), _random_point(rng, k2, denom)
        r = F(rng.randint(-2 * denom, 2 * denom), denom)
        out = realize_triple(k1, k2, p1, p2, r, w)
        bad_sum += sum(out.as_dict().values()) != 1
        bad_simplex += not is_simplex(c, out.support)
        bad_proj += triple_projections(out) != (p1, p2, r)
    ok = bad_sum == bad_simplex == bad_proj == 0
    report(6, ok, f"1000 points: sum {bad_sum}, simplex {bad_simplex}, projection {bad_proj} failures")


def _shift(oc, k):
    def move(t):
        a, b, n = psi_unlabel(t)
        return psi_label(a, b, n + k)

    return relabel(oc, {t: move(t) for t in oc.complex.vertices}, arity=3)


def test_7_structural_invariants(report, corpus):
    coherence = translation = round_trip = 0
    for k1 in corpus:
        for k2 in corpus:
            big = connected_sum_window(k1, k2, Window(-1, 2), DIRECT_RULE)
            small = connected_sum_window(k1, k2, Window(0, 1), DIRECT_RULE)
            if induced_subcomplex(big.complex, small.complex.vertices) != small.complex:
                coherence += 1
            if _shift(small.oc, 5) != connected_sum_window(k1, k2, Window(5, 6), DIRECT_RULE).oc:
                translation += 1
            text = serialize_complex(small.oc)
            if serialize_complex(parse_complex(text)) != text:
                round_trip += 1
    for k in corpus:
        text = serialize_complex(k)
        if serialize_complex(parse_complex(text)) != text or parse_complex(text) != k:
            round_trip += 1
    ok = coherence == translation == round_trip == 0
    report(
        7,
        ok,
        f"{len(corpus) ** 2} pairs: coherence {coherence}, translation {translation}, "
        f"serialization {round_trip} failures",
    )
