"""Minors defined by open routes, K-quotients, six-arc AC classes and closed subsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .certificate import NON_HAMILTONIAN, Certificate
from .errors import (
    CapExceeded,
    KNotProper,
    NotFamilyF6,
    NotSixArcs,
    PreconditionViolated,
    RouteNotOpen,
)
from .factors import (
    Factor,
    Route,
    Selection,
    enumerate_factors,
    factor,
    factor_of_arcs,
    is_closed,
    is_hamiltonian_bruteforce,
    is_open,
    open_routes,
    parity_class,
    route_of,
)
from .graph_core import Arc, TwoDigraph, induced_subgraph, is_connected

DEFAULT_SUBSET_CAP = 14


@dataclass(frozen=True)
class Minor:
    graph: TwoDigraph
    k: tuple[int, ...]
    route: Route
    selection: Selection
    defining_arcs: frozenset[int] = field(repr=False, default=frozenset())


@dataclass
class Quotient:
    k: tuple[int, ...]
    minors: list[Minor]

    def __len__(self):
        return len(self.minors)

    @property
    def is_empty(self) -> bool:
        return not self.minors


def _proper(g: TwoDigraph, k: Iterable[int]) -> tuple[int, ...]:
    k = tuple(sorted(set(k)))
    if not k or len(k) >= g.n_acs or k[0] < 0 or k[-1] >= g.n_acs:
        raise KNotProper(f"K={list(k)} is not a nonempty proper subset of {g.n_acs} ACs")
    return k


def _contract(g: TwoDigraph, k: tuple[int, ...], sub: TwoDigraph, route: Route) -> TwoDigraph:
    k_arcs = {e for i in k for e in g.acs[i].arcs}
    merge = {v: u for u, v in route.mapping}
    arcs = [Arc(a.id, merge.get(a.tail, a.tail), a.head)
            for a in g.arcs if a.id not in k_arcs]
    verts = {a.tail for a in arcs} | {a.head for a in arcs}
    return TwoDigraph(verts, arcs)


def minor(g: TwoDigraph, k: Iterable[int], route: Route) -> Minor:
    """Delete K's arcs and saturated vertices and identify each ``(u, route(u))``.

    The merged vertex keeps the entry label u; isolated vertices are dropped.
    """
    k = _proper(g, k)
    sub = induced_subgraph(g, k)
    if sub.is_saturated:
        raise RouteNotOpen("K is saturated and has no routes")
    routes = open_routes(sub)
    if route not in routes:
        raise RouteNotOpen(f"{route.mapping} is not an open route of K={list(k)}")
    mask = routes[route]
    sel = Selection.from_mask(mask, sub.n_acs)
    arcs = frozenset(e for i, ac in enumerate(sub.acs) for e in ac.half(bool(sel.bits[i])))
    return Minor(_contract(g, k, sub, route), k, route, sel, arcs)


def quotient(g: TwoDigraph, k: Iterable[int]) -> Quotient:
    """One minor per distinct open route of K (isomorphic minors are kept)."""
    k = _proper(g, k)
    sub = induced_subgraph(g, k)
    if sub.is_saturated:
        return Quotient(k, [])
    minors = [minor(g, k, r) for r in sorted(open_routes(sub), key=lambda r: r.mapping)]
    return Quotient(k, minors)


# -- six-arc alternating cycles -------------------------------------------

@dataclass(frozen=True)
class AC6Class:
    name: str
    vertices: int
    loops: int
    exit_entry: int
    open_factors: int
    open_routes: int
    closed: bool


# (vertices, loops, exits, closed) -> class name
_AC6_SIGNATURES = {
    (6, 0, 3, False): "X_clean",
    (5, 1, 2, False): "X_1L",
    (5, 0, 2, False): "X_1S",
    (4, 2, 1, False): "X_2L",
    (4, 0, 1, False): "X_2S",
    (4, 2, 1, True): "Xc_2L",
    (4, 1, 1, True): "Xc_1L1S",
    (3, 2, 0, True): "Xc_2L1S",
    (3, 3, 0, True): "Xc_3L",
    (3, 0, 0, True): "Xc_3S",
}
AC6_NAMES = tuple(_AC6_SIGNATURES.values())
UNIQUE_ROUTE_DIRTY = frozenset({"X_1L", "X_1S", "X_2L", "X_2S"})
CLOSED_DIRTY = frozenset({"Xc_2L", "Xc_1L1S"})


def classify_ac6(g: TwoDigraph, ac: int | None = None) -> AC6Class:
    """Identify a six-arc AC among the ten possible forms.

    ``g`` is either a standalone single-AC graph or, with ``ac`` given, a
    graph whose AC ``ac`` is classified as an induced subgraph.
    """
    x = g if ac is None else induced_subgraph(g, [ac])
    if x.n_acs != 1 or len(x.arcs) != 6:
        raise NotSixArcs(f"expected one AC of 6 arcs, got lengths {x.ac_lengths()}")
    n_open = sum(1 for f in enumerate_factors(x) if f.is_open)
    n_routes = len(open_routes(x)) if x.entry else 0
    closed = n_open == 0
    sig = (len(x.vertices), x.n_loops, len(x.exit), closed)
    return AC6Class(_AC6_SIGNATURES[sig], sig[0], sig[1], sig[2], n_open, n_routes, closed)


# -- dirty AC elimination --------------------------------------------------

@dataclass
class Elimination:
    graph: TwoDigraph
    chain: list[Minor]
    certificate: Certificate | None = None

    def chain_json(self) -> list[dict]:
        return [reduction_step(m) for m in self.chain]

    def lift(self, arcs: Iterable[int]) -> frozenset[int]:
        """Arc set of the factor of the original graph matching a factor of the reduced one."""
        out = set(arcs)
        for m in self.chain:
            out |= m.defining_arcs
        return frozenset(out)


def reduction_step(m: Minor) -> dict:
    return {"ac_arc": min(m.defining_arcs), "route": [list(p) for p in m.route.mapping]}


def in_family_f6(g: TwoDigraph) -> bool:
    return g.is_saturated and all(n == 6 for n in g.ac_lengths())


def eliminate_dirty(g: TwoDigraph) -> Elimination:
    """Replace dirty unique-route six-arc ACs by their single minor until none remain.

    Stops early with a non-Hamiltonian certificate when a minor is
    disconnected or an AC is one of the two closed dirty forms.
    """
    if not in_family_f6(g):
        raise NotFamilyF6("every vertex must be saturated and every AC must have 6 arcs")
    chain: list[Minor] = []
    cur = g
    while True:
        if not is_connected(cur):
            method = "dirty_reduction" if chain else "disconnected"
            steps = [reduction_step(m) for m in chain]
            return Elimination(cur, chain, Certificate(NON_HAMILTONIAN, method, {"reduction": steps}))
        classes = [classify_ac6(cur, i) for i in range(cur.n_acs)]
        bad = next((i for i, c in enumerate(classes) if c.name in CLOSED_DIRTY), None)
        if bad is not None:
            cert = Certificate(NON_HAMILTONIAN, "closed_ac6", {
                "reduction": [reduction_step(m) for m in chain],
                "ac_arc": min(cur.acs[bad].arcs),
                "class": classes[bad].name,
            })
            return Elimination(cur, chain, cert)
        target = next((i for i, c in enumerate(classes) if c.name in UNIQUE_ROUTE_DIRTY), None)
        if target is None or cur.n_acs == 1:
            return Elimination(cur, chain)
        (only,) = quotient(cur, [target]).minors
        chain.append(only)
        cur = only.graph


# -- closed subsets --------------------------------------------------------

def closed_subset_search(g: TwoDigraph, cap: int = DEFAULT_SUBSET_CAP,
                         min_size: int = 1) -> tuple[int, ...] | None:
    """Smallest nonempty proper AC subset (then least in label order) inducing a closed subgraph."""
    n = g.n_acs
    if n > cap:
        raise CapExceeded(f"{n} ACs exceeds the subset-search cap {cap}")
    for size in range(max(1, min_size), n):
        for k in combinations(range(n), size):
            if is_closed(induced_subgraph(g, k)):
                return k
    return None


def check_complement_closed(g: TwoDigraph, oracle_cap: int = 20) -> bool:
    """For a connected odd non-Hamiltonian six-arc 2-dd: every open AC has a closed complement."""
    if not in_family_f6(g) or not is_connected(g):
        raise PreconditionViolated("need a connected 2-dd with six-arc ACs")
    if parity_class(g) != "odd":
        raise PreconditionViolated("graph is not odd")
    if is_hamiltonian_bruteforce(g, oracle_cap)[0]:
        raise PreconditionViolated("graph is Hamiltonian")
    for i in range(g.n_acs):
        if is_open(induced_subgraph(g, [i])):
            rest = [j for j in range(g.n_acs) if j != i]
            if not is_closed(induced_subgraph(g, rest)):
                return False
    return True


def verify_reduction_bijection(g: TwoDigraph, k: Iterable[int],
                               sel: Selection | Factor) -> bool:
    """Check the factor correspondence between a minor and the factors of G agreeing on K."""
    k = _proper(g, k)
    sub = induced_subgraph(g, k)
    f = sel if isinstance(sel, Factor) else factor(sub, sel)
    if not f.is_open:
        raise RouteNotOpen("factor of K is not open")
    m = minor(g, k, route_of(f))
    q = {}
    for h in enumerate_factors(g):
        if all(h.selection.bits[i] == f.selection.bits[j] for j, i in enumerate(k)):
            q[h.arcs] = h
    images = set()
    for j in enumerate_factors(m.graph):
        lifted = factor_of_arcs(g, j.arcs | f.arcs)
        if lifted is None or lifted.arcs not in q or lifted.arcs in images:
            return False
        if (lifted.index, lifted.n_components) != (j.index, j.n_components):
            return False
        images.add(lifted.arcs)
    return len(images) == len(q)


def replay_reduction(g: TwoDigraph, steps: list[dict]) -> TwoDigraph:
    """Re-apply a recorded chain of single-AC minors."""
    cur = g
    for step in steps:
        k = cur.ac_of[step["ac_arc"]]
        route = Route(tuple(tuple(p) for p in step["route"]))
        cur = minor(cur, [k], route).graph
    return cur
