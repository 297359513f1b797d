"""Acceptance criteria 1-8, one pass/fail line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_report import LINES
from oracles import arcs_of, factor_indices, hamiltonian_dfs, min_index, permutation_sign
from pools import closed_open_boundary, even_2dds, family, non_hamiltonian_2dds, sweep, unique_route
from test_quotients import TABLE
from twodd.certify import certify, verify_certificate
from twodd.factors import (
    enumerate_factors,
    is_closed,
    is_hamiltonian_bruteforce,
    open_routes,
    parity_class,
)
from twodd.fixtures import AC6_FILES, ac6, odd_split_example, closed_pair_example
from twodd.generation import (
    FamilySpec,
    check_saturation_bound,
    construct_closed_splice,
    construct_unique_route_splice,
    count_family,
    in_c6,
    random_2digraph,
    random_2dd,
)
from twodd.graph_core import (
    boundary_flow,
    components,
    induced_subgraph,
    is_connected,
    is_strongly_connected,
    split_many,
)
from twodd.quotients import classify_ac6, closed_subset_search, in_family_f6, quotient
from twodd.splitting import even_pair_splice, minimal_split_sets, splice_pair

ODD_SPLIT_EXAMPLE_INDEX = 3
ORACLE_AC_LIMIT = 14


@contextmanager
def criterion(n: int, title: str, limit_s: float):
    t0 = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        ok = True
    except AssertionError as e:
        detail = f" ({str(e).splitlines()[0][:100]})" if str(e) else ""
        raise
    finally:
        dt = time.perf_counter() - t0
        slow = ok and dt > limit_s
        status = "PASS" if ok and not slow else "FAIL"
        if slow:
            detail = f" (over the {limit_s:g} s limit)"
        line = f"criterion {n}: {status}  {title}  [{dt:.2f} s]{detail}"
        LINES[n] = line
        print(line)
    assert dt <= limit_s, f"criterion {n} took {dt:.1f} s, limit {limit_s} s"


def test_criterion_1_table_reproduction():
    with criterion(1, "six-arc AC classes match every table cell", 1.0):
        for name in AC6_FILES.values():
            c = classify_ac6(ac6(name))
            got = (c.vertices, c.loops, c.exit_entry, c.open_factors, c.open_routes, c.closed)
            assert c.name == name and got == TABLE[name], f"{name}: {got}"


def test_criterion_2_split_pipeline():
    with criterion(2, "four-AC example: split set {5,7}, even pieces, split_parity", 1.0):
        g = odd_split_example()
        assert g.ac_lengths() == (6, 6, 6, 6) and all(ac.clean for ac in g.acs)
        sets = [s.vertices for s in minimal_split_sets(g, 2)]
        assert frozenset({5, 7}) in {frozenset(s) for s in sets}
        a, b = splice_pair(g, {5, 7})
        assert a.is_saturated and b.is_saturated
        assert parity_class(a) == parity_class(b) == "even"
        c = certify(g)
        assert (c.verdict, c.method) == ("NonHamiltonian", "split_parity")
        assert verify_certificate(g, c)
        idx = [f.index for f in enumerate_factors(g)]
        assert len(idx) == 16 and min(idx) >= 2
        assert min(idx) == min_index(arcs_of(g)) == ODD_SPLIT_EXAMPLE_INDEX


def test_criterion_3_closed_pipeline():
    with criterion(3, "two dirty 30-arc ACs: closed, empty quotients, closed_subset", 1.0):
        g = closed_pair_example()
        assert g.ac_lengths() == (30, 30) and not any(ac.clean for ac in g.acs)
        for i in range(2):
            assert is_closed(induced_subgraph(g, [i]))
            assert quotient(g, [i]).is_empty
        c = certify(g)
        assert (c.verdict, c.method) == ("NonHamiltonian", "closed_subset")
        assert verify_certificate(g, c)
        oracle = factor_indices(arcs_of(g))
        assert len(oracle) == 4 and min(oracle.values()) > 1
        assert not hamiltonian_dfs(arcs_of(g))


def test_criterion_4_oracle_sweep():
    with criterion(4, "certify agrees with the oracle on the sweep; closed-subset iff", 600.0):
        graphs = sweep()
        assert len(graphs) > 400
        iff_checked = 0
        for g in graphs:
            ham = hamiltonian_dfs(arcs_of(g))
            c = certify(g)
            assert c.verdict != "Undecided"
            assert (c.verdict == "Hamiltonian") == ham, arcs_of(g)
            assert verify_certificate(g, c)
            assert is_hamiltonian_bruteforce(g)[0] == ham
            if in_family_f6(g) and g.n_acs > 1 and parity_class(g) == "odd":
                iff_checked += 1
                assert (closed_subset_search(g) is not None) == (not ham), arcs_of(g)
        assert iff_checked > 50


def _random_graph(i: int):
    rng = random.Random(i)
    m, k = rng.randint(1, 4), rng.randint(1, 3)
    if i % 2:
        return random_2dd(m, k, seed=rng)
    return random_2digraph(m, k, seed=rng)


def _check_invariants(g, rng):
    assert len(g.arcs) == len(g.vertices) + len(g.saturated)
    assert len(g.entry) == len(g.exit)
    if not g.is_saturated:
        if all(ac.is_odd for ac in g.acs) and g.entry:
            assert len({r.parity for r in open_routes(g)}) <= 1
        return
    verts = list(g.vertices)
    for _ in range(100):
        u = rng.sample(verts, rng.randint(1, len(verts)))
        n_in, n_out = boundary_flow(g, u)
        assert n_in == n_out
    if is_connected(g):
        assert is_strongly_connected(g)
        for s in minimal_split_sets(g, 2):
            h, out_half = split_many(g, s.vertices)
            parts = components(h)
            assert len(parts) == 2 and len(s.vertices) % 2 == 0
            for v in s.vertices:
                assert not any(v in p and out_half[v] in p for p in parts)
                assert all(v not in ac.internal_vertices for ac in g.acs)
    n = len(g.vertices)
    for f in enumerate_factors(g):
        succ = {g.arc(e).tail: g.arc(e).head for e in f.arcs}
        assert (permutation_sign(succ) == 1) == ((n - f.index) % 2 == 0)


@pytest.mark.slow
def test_criterion_5_invariants():
    with criterion(5, "structural invariants on 10,000 random graphs and the sweep", 600.0):
        rng = random.Random(2024)
        for i in range(10_000):
            _check_invariants(_random_graph(i), rng)
        for g in sweep():
            _check_invariants(g, rng)


def test_criterion_6_closed_family_bounds():
    with criterion(6, "minimally closed clean six-arc family obeys the saturation bounds", 600.0):
        members = [g for m in (1, 2, 3) for g in family(3, m, "clean", "connected") if in_c6(g)]
        assert members
        bad = [arcs_of(g) for g in members if not check_saturation_bound(g)]
        assert not bad, bad[0]


def _certified_non_hamiltonian(g):
    c = certify(g)
    assert c.verdict == "NonHamiltonian", arcs_of(g)
    assert verify_certificate(g, c)
    if g.n_acs <= ORACLE_AC_LIMIT:
        assert not hamiltonian_dfs(arcs_of(g)), arcs_of(g)


def _closed_splice_partner(h, rng):
    n = len(h.entry)
    m = rng.randint(max(1, -(-n // 3)), max(2, -(-n // 3)))
    return random_2digraph(m, 3, seed=rng, n_splices=3 * m - n)


@pytest.mark.slow
def test_criterion_7_constructions():
    with criterion(7, "300 construction outputs certified and oracle-confirmed", 600.0):
        rng = random.Random(7)
        evens = even_2dds()
        for _ in range(100):
            a, b = rng.choice(evens), rng.choice(evens)
            _certified_non_hamiltonian(even_pair_splice(a, b, rng.choice(a.vertices), rng.choice(b.vertices)))
        closed = closed_open_boundary()
        for _ in range(100):
            h = rng.choice(closed)
            _certified_non_hamiltonian(construct_closed_splice(h, _closed_splice_partner(h, rng), seed=rng))
        firsts, seconds = unique_route(), non_hamiltonian_2dds()
        done = 0
        while done < 100:
            g1, g2 = rng.choice(firsts), rng.choice(seconds)
            if len(g1.entry) > len(g2.vertices):
                continue
            _certified_non_hamiltonian(construct_unique_route_splice(g1, g2, seed=rng))
            done += 1


def test_criterion_8_single_ac_count():
    with criterion(8, "single six-arc AC family: 10 classes, 3 saturated", 60.0):
        assert count_family(FamilySpec(3, 1)) == 10
        assert count_family(FamilySpec(3, 1, {"saturated"})) == 3


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
