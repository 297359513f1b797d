"""Isomorph-free enumeration of AC gluings, census counts and non-Hamiltonian constructions.

Every 2-digraph whose m ACs all have 2k arcs arises from m disjoint clean
ACs by identifying some entries with some exits.  The base graph has entries
``0..mk-1`` and exits ``mk..2mk-1``; AC ``a`` owns entries ``ak..ak+k-1`` and
exits ``mk+ak..mk+ak+k-1`` with arcs ``E_i -> X_i`` and ``E_{i+1} -> X_i``.
Gluings are grown one splice per level and deduplicated by canonical code
at each level, which is complete because removing any one splice of a
level-(j+1) gluing gives a level-j gluing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .canonical import code_from_arrays
from .certify import certify
from .errors import (
    BudgetExceeded,
    CountMismatch,
    NotInC6,
    NotNonHamiltonian,
    RouteNotUnique,
)
from .factors import (
    is_closed,
    is_hamiltonian_bruteforce,
    is_minimally_closed,
    open_routes,
    parity_class,
)
from .graph_core import (
    TwoDigraph,
    disjoint_union,
    is_connected,
    normalized,
    splice_many,
    split_many,
)
from .splitting import certify_by_splitting

CONSTRAINTS = frozenset({"clean", "dirty", "odd", "even", "connected", "saturated"})
DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class FamilySpec:
    """ACs of length ``2k``, ``m`` of them, filtered by ``constraints``.

    ``odd``/``even`` refer to AC parity (``k`` odd or even); graph-level
    parity is reported by :func:`census`.
    """

    k: int
    m: int
    constraints: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.k < 1 or self.m < 1:
            raise ValueError("k and m must be at least 1")
        object.__setattr__(self, "constraints", frozenset(self.constraints))
        unknown = self.constraints - CONSTRAINTS
        if unknown:
            raise ValueError(f"unknown constraints {sorted(unknown)}")

    @classmethod
    def parse(cls, name: str, constraints=()) -> "FamilySpec":
        """``B6_3`` means 2-dds with three six-arc ACs."""
        body = name.strip()
        if not body.startswith("B") or "_" not in body:
            raise ValueError(f"family name {name!r} is not of the form B<2k>_<m>")
        arcs, m = body[1:].split("_", 1)
        if int(arcs) % 2:
            raise ValueError("AC length must be even")
        return cls(int(arcs) // 2, int(m), frozenset(constraints) | {"saturated"})

    @property
    def infeasible(self) -> bool:
        c = self.constraints
        if {"clean", "dirty"} <= c or {"odd", "even"} <= c:
            return True
        if "odd" in c and self.k % 2 == 0 or "even" in c and self.k % 2 == 1:
            return True
        # a clean saturated single AC would need a splice inside its own AC
        return {"clean", "saturated"} <= c and self.m == 1

    @property
    def name(self) -> str:
        extra = sorted(self.constraints - {"saturated"})
        base = f"B{2 * self.k}_{self.m}" if "saturated" in self.constraints else f"dB{2 * self.k}_{self.m}"
        return base + (f"[{','.join(extra)}]" if extra else "")


def base_gluing(m: int, k: int) -> tuple[list[int], list[int]]:
    tails: list[int] = []
    heads: list[int] = []
    for a in range(m):
        for i in range(k):
            e, e1, x = a * k + i, a * k + (i + 1) % k, m * k + a * k + i
            tails += [e, e1]
            heads += [x, x]
    return tails, heads


def gluing_graph(tails, heads, splices) -> TwoDigraph:
    """Graph of the base gluing with each ``(exit, entry)`` pair identified."""
    merge = dict(splices)
    arcs = [(i, t, merge.get(h, h)) for i, (t, h) in enumerate(zip(tails, heads))]
    return normalized(TwoDigraph.from_arcs(arcs))


def _accept(g: TwoDigraph, c: frozenset[str]) -> bool:
    if "dirty" in c and g.is_clean:
        return False
    if "clean" in c and not g.is_clean:
        return False
    return "connected" not in c or is_connected(g)


def enumerate_family(spec: FamilySpec, budget: int | None = DEFAULT_BUDGET) -> Iterator[TwoDigraph]:
    """One graph per isomorphism class, by level (number of splices) then code."""
    if spec.infeasible:
        return
    m, k = spec.m, spec.k
    nk = m * k
    c = spec.constraints
    clean = "clean" in c
    tails, heads = base_gluing(m, k)
    reps = {code_from_arrays(tails, heads): ()}
    spent = 0
    for level in range(nk + 1):
        if level:
            nxt: dict[tuple, tuple] = {}
            for splices in reps.values():
                used_x = {x for x, _ in splices}
                used_u = {u for _, u in splices}
                merge = dict(splices)
                for u in range(nk):
                    if u in used_u:
                        continue
                    for x in range(nk, 2 * nk):
                        if x in used_x or (clean and u // k == (x - nk) // k):
                            continue
                        spent += 1
                        if budget is not None and spent > budget:
                            raise BudgetExceeded(f"more than {budget} candidate gluings")
                        merge[x] = u
                        code = code_from_arrays(tails, [merge.get(h, h) for h in heads])
                        del merge[x]
                        if code not in nxt:
                            nxt[code] = splices + ((x, u),)
            reps = nxt
        if "saturated" in c and level < nk:
            continue
        for code in sorted(reps):
            g = gluing_graph(tails, heads, reps[code])
            if _accept(g, c):
                yield g


def count_family(spec: FamilySpec, budget: int | None = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in enumerate_family(spec, budget))


@dataclass(frozen=True)
class CensusRow:
    family: FamilySpec
    total: int
    connected: int
    clean_odd_nonham: int
    split_decided: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.total, self.connected, self.clean_odd_nonham, self.split_decided


def census(spec: FamilySpec, budget: int | None = DEFAULT_BUDGET, cap: int = 30) -> CensusRow:
    """Counts over the saturated members of ``spec``.

    clean_odd_nonham is decided by the brute-force oracle; split_decided
    counts those that the iterated split-parity test certifies.
    """
    spec = FamilySpec(spec.k, spec.m, spec.constraints | {"saturated"})
    total = connected = con = decided = 0
    for g in enumerate_family(spec, budget):
        total += 1
        if not is_connected(g):
            continue
        connected += 1
        if not g.is_clean or parity_class(g) != "odd" or is_hamiltonian_bruteforce(g, cap)[0]:
            continue
        con += 1
        if all(ac.is_odd for ac in g.acs) and certify_by_splitting(g).decided:
            decided += 1
    return CensusRow(spec, total, connected, con, decided)


# -- constructions ---------------------------------------------------------

def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def construct_closed_splice(h: TwoDigraph, g: TwoDigraph, seed=None) -> TwoDigraph:
    """Splice every unsaturated vertex of closed ``h`` with one of ``g``.

    Entries of h meet exits of g and exits of h meet entries of g.  With a
    seed the pairing is shuffled, otherwise both sides pair in label order.
    The ACs of h come first in the result (vertex labels of g are shifted).
    """
    if len(h.entry) != len(g.exit) or len(h.exit) != len(g.entry):
        raise CountMismatch(
            f"h has {len(h.entry)} entries/{len(h.exit)} exits, "
            f"g has {len(g.entry)} entries/{len(g.exit)} exits")
    if not h.entry:
        raise CountMismatch("h has no unsaturated vertices")
    union, vmap = disjoint_union(h, g)
    g_exit = [vmap[v] for v in g.exit]
    g_entry = [vmap[v] for v in g.entry]
    if seed is not None:
        rng = _rng(seed)
        rng.shuffle(g_exit)
        rng.shuffle(g_entry)
    pairs = list(zip(h.entry, g_exit)) + list(zip(g_entry, h.exit))
    return splice_many(union, pairs)


def construct_unique_route_splice(g1: TwoDigraph, g2: TwoDigraph, seed=None,
                                  cap: int = 30) -> TwoDigraph:
    """Insert ``g1`` into non-Hamiltonian ``g2`` along split vertices.

    For each ``(u, r(u))`` of g1's only open route a distinct saturated
    vertex v of g2 is split; u is spliced with v's in-half and r(u) with
    v's out-half.  The vertices of g2 are chosen by the seed (least labels
    without one).
    """
    routes = open_routes(g1)
    if len(routes) != 1:
        raise RouteNotUnique(f"g1 has {len(routes)} open routes")
    (route,) = routes
    if not g2.is_saturated or certify(g2, cap=cap).verdict != "NonHamiltonian":
        raise NotNonHamiltonian("g2 is not a certified non-Hamiltonian 2-dd")
    n = len(route)
    if n > len(g2.vertices):
        raise CountMismatch(f"route needs {n} vertices, g2 has {len(g2.vertices)}")
    if seed is None:
        chosen = list(g2.vertices[:n])
    else:
        chosen = _rng(seed).sample(list(g2.vertices), n)
    union, vmap = disjoint_union(g1, g2)
    split_g, out_half = split_many(union, [vmap[v] for v in chosen])
    pairs = []
    for (u, ru), v in zip(route.mapping, chosen):
        w = vmap[v]
        pairs += [(u, w), (out_half[w], ru)]
    return splice_many(split_g, pairs)


def in_c6(g: TwoDigraph) -> bool:
    """Minimally closed, connected and clean with every AC of six arcs."""
    if not all(n == 6 for n in g.ac_lengths()) or not g.is_clean or not is_connected(g):
        return False
    return is_closed(g) and is_minimally_closed(g)


def ac_boundary_counts(g: TwoDigraph) -> list[int]:
    """Number of boundary (two-AC) vertices on each AC."""
    b = g.boundary_vertices
    return [len(b & frozenset(ac.vertices)) for ac in g.acs]


def check_saturation_bound(g: TwoDigraph) -> bool:
    """For a member of the minimally-closed clean family: ``|V_sat| >= 2m`` and every AC
    has at least four boundary vertices."""
    if not in_c6(g):
        raise NotInC6("graph is not minimally closed, connected, clean with six-arc ACs")
    return len(g.saturated) >= 2 * g.n_acs and all(c >= 4 for c in ac_boundary_counts(g))


# -- random graphs -----------------------------------------------------------

def random_2digraph(m: int, k: int, seed=None, n_splices: int | None = None,
                    clean: bool = False) -> TwoDigraph:
    """Random gluing of ``m`` ACs of length ``2k`` with ``n_splices`` identifications.

    ``n_splices`` defaults to a uniform draw from ``0..mk``.  With ``clean``,
    no entry is spliced to an exit of its own AC (fewer splices may result).
    """
    if m < 1 or k < 1:
        raise ValueError("m and k must be at least 1")
    rng = _rng(seed)
    nk = m * k
    if n_splices is None:
        n_splices = rng.randint(0, nk)
    entries = rng.sample(range(nk), nk)
    exits = rng.sample(range(nk, 2 * nk), nk)
    splices = []
    for u in entries:
        if len(splices) == n_splices:
            break
        for x in exits:
            if not clean or u // k != (x - nk) // k:
                exits.remove(x)
                splices.append((x, u))
                break
    tails, heads = base_gluing(m, k)
    return gluing_graph(tails, heads, splices)


def random_2dd(m: int, k: int, seed=None) -> TwoDigraph:
    """Random 2-dd: a uniform perfect matching of entries to exits of ``m`` ACs."""
    return random_2digraph(m, k, seed, n_splices=m * k)
