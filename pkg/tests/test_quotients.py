from itertools import combinations

import pytest

from oracles import arcs_of, hamiltonian_dfs
from pools import family, sweep
from twodd.errors import CapExceeded, KNotProper, NotFamilyF6, NotSixArcs, PreconditionViolated, RouteNotOpen
from twodd.factors import (
    Route,
    enumerate_factors,
    is_closed,
    is_hamiltonian_bruteforce,
    parity_class,
)
from twodd.fixtures import AC6_FILES, ac6, doubled_digon, odd_split_example, closed_pair_example
from twodd.generation import construct_closed_splice
from twodd.graph_core import induced_subgraph, is_connected
from twodd.quotients import (
    classify_ac6,
    check_complement_closed,
    closed_subset_search,
    eliminate_dirty,
    in_family_f6,
    minor,
    quotient,
    replay_reduction,
    verify_reduction_bijection,
)

# vertices, loops, exit/entry, open factors, routes, closed
TABLE = {
    "X_clean": (6, 0, 3, 2, 2, False),
    "X_1L": (5, 1, 2, 1, 1, False),
    "X_1S": (5, 0, 2, 2, 1, False),
    "X_2L": (4, 2, 1, 1, 1, False),
    "X_2S": (4, 0, 1, 2, 1, False),
    "Xc_2L": (4, 2, 1, 0, 0, True),
    "Xc_1L1S": (4, 1, 1, 0, 0, True),
    "Xc_2L1S": (3, 2, 0, 0, 0, True),
    "Xc_3L": (3, 3, 0, 0, 0, True),
    "Xc_3S": (3, 0, 0, 0, 0, True),
}


def _proper_subsets(n):
    for size in range(1, n):
        yield from combinations(range(n), size)


@pytest.mark.parametrize("name", list(AC6_FILES.values()))
def test_classify_matches_table(name):
    c = classify_ac6(ac6(name))
    assert c.name == name
    assert (c.vertices, c.loops, c.exit_entry, c.open_factors, c.open_routes, c.closed) == TABLE[name]


def test_classify_rejects_other_lengths():
    with pytest.raises(NotSixArcs):
        classify_ac6(doubled_digon())
    with pytest.raises(NotSixArcs):
        classify_ac6(closed_pair_example(), 0)


class TestMinor:
    def test_k_must_be_proper(self):
        with pytest.raises(KNotProper):
            quotient(odd_split_example(), [0, 1, 2, 3])
        with pytest.raises(KNotProper):
            quotient(odd_split_example(), [])

    def test_route_must_be_open(self):
        with pytest.raises(RouteNotOpen):
            minor(odd_split_example(), [0], Route(((1, 1),)))

    def test_closed_pair_example_quotients_empty(self):
        g = closed_pair_example()
        assert quotient(g, [0]).is_empty and quotient(g, [1]).is_empty

    def test_x2l_quotient_singleton(self):
        hosts = [g for g in family(3, 3, "saturated", "connected")
                 if any(classify_ac6(g, i).name == "X_2L" for i in range(g.n_acs))]
        assert hosts
        for g in hosts[:10]:
            i = next(i for i in range(g.n_acs) if classify_ac6(g, i).name == "X_2L")
            assert len(quotient(g, [i])) == 1

    def test_minor_laws_on_sweep(self):
        for g in sweep():
            ham = is_hamiltonian_bruteforce(g)[0]
            for k in _proper_subsets(g.n_acs):
                q = quotient(g, k)
                assert len(q) <= 2 ** len(k)
                assert q.is_empty == is_closed(induced_subgraph(g, k))
                minor_ham = []
                for m in q.minors:
                    assert m.graph.is_saturated
                    assert m.graph.n_acs == g.n_acs - len(k)
                    assert sum(1 for _ in enumerate_factors(m.graph)) == 2 ** (g.n_acs - len(k))
                    minor_ham.append(hamiltonian_dfs(arcs_of(m.graph)))
                # Hamiltonian iff some minor is, and then every K has one
                assert ham == any(minor_ham)

    def test_bijection_singleton_k(self):
        for g in family(3, 2, "saturated", "connected"):
            sub = induced_subgraph(g, [0])
            for f in enumerate_factors(sub):
                if f.is_open:
                    assert verify_reduction_bijection(g, [0], f)

    def test_bijection_rejects_closed_factor(self):
        g = closed_pair_example()
        f = next(iter(enumerate_factors(induced_subgraph(g, [0]))))
        with pytest.raises(RouteNotOpen):
            verify_reduction_bijection(g, [0], f)

    def test_bijection_on_sweep_sample(self):
        for g in sweep()[::7]:
            for k in _proper_subsets(g.n_acs):
                sub = induced_subgraph(g, k)
                for f in enumerate_factors(sub):
                    if f.is_open:
                        assert verify_reduction_bijection(g, k, f)
                        break


class TestElimination:
    def test_clean_input_unchanged(self):
        e = eliminate_dirty(odd_split_example())
        assert e.graph == odd_split_example() and e.chain == [] and e.certificate is None

    def test_closed_dirty_ac_certified(self):
        for h in ("Xc_1L1S", "Xc_2L"):
            g = construct_closed_splice(ac6(h), ac6("X_2S"))
            cert = eliminate_dirty(g).certificate
            assert cert.verdict == "NonHamiltonian" and cert.method == "closed_ac6"

    def test_requires_six_arc_acs(self):
        with pytest.raises(NotFamilyF6):
            eliminate_dirty(closed_pair_example())

    def test_reduction_preserves_verdict(self):
        reduced = 0
        for g in family(3, 3, "saturated", "connected"):
            e = eliminate_dirty(g)
            ham = is_hamiltonian_bruteforce(g)[0]
            if e.certificate is not None:
                assert not ham
                continue
            if e.chain:
                reduced += 1
                assert e.graph.is_clean or e.graph.n_acs == 1
                assert is_connected(e.graph)
                assert is_hamiltonian_bruteforce(e.graph)[0] == ham
                assert replay_reduction(g, e.chain_json()) == e.graph
        assert reduced > 0


class TestClosedSubsets:
    def test_closed_pair_example(self):
        assert closed_subset_search(closed_pair_example()) == (0,)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            closed_subset_search(odd_split_example(), cap=3)

    def test_iff_on_odd_f6_sweep(self):
        n = 0
        for g in sweep():
            if not in_family_f6(g) or g.n_acs < 2 or parity_class(g) != "odd":
                continue
            n += 1
            found = closed_subset_search(g) is not None
            assert found == (not hamiltonian_dfs(arcs_of(g)))
        assert n > 50

    def test_hamiltonian_has_no_closed_subset(self):
        hits = [g for g in sweep() if g.n_acs > 1 and is_hamiltonian_bruteforce(g)[0]]
        assert hits
        assert all(closed_subset_search(g) is None for g in hits)

    def test_complement_closed(self):
        n = 0
        for g in sweep():
            if not in_family_f6(g) or parity_class(g) != "odd" or hamiltonian_dfs(arcs_of(g)):
                continue
            n += 1
            assert check_complement_closed(g)
        assert n > 0

    def test_complement_closed_rejects_hamiltonian(self):
        g = next(g for g in family(3, 2, "saturated", "connected")
                 if parity_class(g) == "odd" and is_hamiltonian_bruteforce(g)[0])
        with pytest.raises(PreconditionViolated):
            check_complement_closed(g)
