"""Multigraph model for 2-digraphs and their alternating-cycle decomposition.

A 2-digraph has every vertex with (in, out) degree (0, 2), (2, 0) or (2, 2).
Arcs are entities with integer ids, so loops and parallel arcs are allowed;
a loop counts once toward in-degree and once toward out-degree.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DanglingEndpoint,
    DegreeViolation,
    DuplicateArcId,
    EmptySelection,
    NotEntry,
    NotExit,
    NotSaturated,
)

ENTRY, EXIT, SATURATED = "entry", "exit", "saturated"


@dataclass(frozen=True, order=True)
class Arc:
    id: int
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class AlternatingCycle:
    """Cyclic arc sequence e0..e(2r-1); even positions are forward.

    Consecutive arcs share an end-vertex after an even index and a
    start-vertex after an odd index.
    """

    index: int
    arcs: tuple[int, ...]
    vertices: frozenset[int]
    internal_vertices: frozenset[int]

    @property
    def forward(self) -> frozenset[int]:
        return frozenset(self.arcs[0::2])

    @property
    def backward(self) -> frozenset[int]:
        return frozenset(self.arcs[1::2])

    @property
    def r(self) -> int:
        return len(self.arcs) // 2

    @property
    def is_odd(self) -> bool:
        return self.r % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    @property
    def clean(self) -> bool:
        return not self.internal_vertices

    def half(self, backward: bool) -> tuple[int, ...]:
        return self.arcs[1::2] if backward else self.arcs[0::2]


class TwoDigraph:
    """Immutable 2-digraph with vertex classification and canonical ACs.

    Equality compares the labelled structure (vertex labels, arc ids and
    endpoints); use :func:`twodd.canonical.is_isomorphic` for isomorphism.
    """

    def __init__(self, vertices: Iterable[int], arcs: Iterable[Arc | tuple[int, int, int]]):
        verts = sorted(set(vertices))
        arc_list = [a if isinstance(a, Arc) else Arc(*a) for a in arcs]
        arc_list.sort()
        by_id: dict[int, Arc] = {}
        vset = set(verts)
        ins: dict[int, list[int]] = defaultdict(list)
        outs: dict[int, list[int]] = defaultdict(list)
        for a in arc_list:
            if a.id in by_id:
                raise DuplicateArcId(f"arc id {a.id} used twice")
            if a.id < 0:
                raise DuplicateArcId(f"arc id {a.id} is negative")
            if a.tail not in vset or a.head not in vset:
                raise DanglingEndpoint(a)
            by_id[a.id] = a
            outs[a.tail].append(a.id)
            ins[a.head].append(a.id)
        entry, exit_, sat = [], [], []
        for v in verts:
            i, o = len(ins.get(v, ())), len(outs.get(v, ()))
            if (i, o) == (0, 2):
                entry.append(v)
            elif (i, o) == (2, 0):
                exit_.append(v)
            elif (i, o) == (2, 2):
                sat.append(v)
            else:
                raise DegreeViolation(v, i, o)
        self.vertices: tuple[int, ...] = tuple(verts)
        self.arcs: tuple[Arc, ...] = tuple(arc_list)
        self._arc = by_id
        self.in_arcs: dict[int, tuple[int, ...]] = {v: tuple(ins.get(v, ())) for v in verts}
        self.out_arcs: dict[int, tuple[int, ...]] = {v: tuple(outs.get(v, ())) for v in verts}
        self.entry: tuple[int, ...] = tuple(entry)
        self.exit: tuple[int, ...] = tuple(exit_)
        self.saturated: tuple[int, ...] = tuple(sat)

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[int, int, int] | Arc]) -> "TwoDigraph":
        """Build from ``(id, tail, head)`` triples; vertices are the endpoints."""
        arcs = [a if isinstance(a, Arc) else Arc(*a) for a in arcs]
        verts = {a.tail for a in arcs} | {a.head for a in arcs}
        return cls(verts, arcs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "TwoDigraph":
        """Build from ``(tail, head)`` pairs, numbering arcs 0, 1, ..."""
        return cls.from_arcs((i, t, h) for i, (t, h) in enumerate(pairs))

    # -- basic queries -------------------------------------------------

    def arc(self, arc_id: int) -> Arc:
        return self._arc[arc_id]

    @property
    def arc_ids(self) -> tuple[int, ...]:
        return tuple(a.id for a in self.arcs)

    def kind(self, v: int) -> str:
        i, o = len(self.in_arcs[v]), len(self.out_arcs[v])
        return SATURATED if i and o else (ENTRY if o else EXIT)

    @property
    def is_saturated(self) -> bool:
        return not self.entry

    @property
    def n_loops(self) -> int:
        return sum(a.is_loop for a in self.arcs)

    def other_in(self, arc_id: int) -> int:
        a, b = self.in_arcs[self._arc[arc_id].head]
        return b if a == arc_id else a

    def other_out(self, arc_id: int) -> int:
        a, b = self.out_arcs[self._arc[arc_id].tail]
        return b if a == arc_id else a

    # -- alternating cycles --------------------------------------------

    @cached_property
    def acs(self) -> tuple[AlternatingCycle, ...]:
        return tuple(ac_decompose(self))

    @cached_property
    def ac_of(self) -> dict[int, int]:
        return {e: ac.index for ac in self.acs for e in ac.arcs}

    @property
    def n_acs(self) -> int:
        return len(self.acs)

    @cached_property
    def internal_vertices(self) -> frozenset[int]:
        return frozenset().union(*(ac.internal_vertices for ac in self.acs))

    @property
    def boundary_vertices(self) -> frozenset[int]:
        return frozenset(self.saturated) - self.internal_vertices

    @property
    def is_clean(self) -> bool:
        return not self.internal_vertices

    def ac_lengths(self) -> tuple[int, ...]:
        return tuple(len(ac.arcs) for ac in self.acs)

    # -- value semantics -----------------------------------------------

    def _key(self):
        return self.vertices, self.arcs

    def __eq__(self, other):
        return isinstance(other, TwoDigraph) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"TwoDigraph(|V|={len(self.vertices)}, |A|={len(self.arcs)}, "
                f"|C|={self.n_acs}, entry={len(self.entry)}, sat={len(self.saturated)})")

    def summary(self) -> dict:
        return {
            "vertices": len(self.vertices),
            "arcs": len(self.arcs),
            "acs": self.n_acs,
            "entry": len(self.entry),
            "exit": len(self.exit),
            "saturated": len(self.saturated),
        }


def build(vertex_labels: Iterable[int], arcs: Iterable[tuple[int, int, int]]) -> TwoDigraph:
    """Validate and build a 2-digraph.

    An isolated vertex fails the degree check like any other bad vertex.
    """
    return TwoDigraph(vertex_labels, arcs)


def ac_decompose(g: TwoDigraph) -> list[AlternatingCycle]:
    """Partition the arcs into alternating cycles in O(|A|).

    Each AC starts at its lowest arc id, traversed forward; ACs come out
    sorted by that lowest id.
    """
    seen: set[int] = set()
    out: list[AlternatingCycle] = []
    for start in g.arc_ids:
        if start in seen:
            continue
        seq = []
        e = start
        while True:
            f = g.other_in(e)
            seq.append(e)
            seq.append(f)
            e = g.other_out(f)
            if e == start:
                break
        seen.update(seq)
        arcset = set(seq)
        verts = frozenset(v for x in seq for v in (g.arc(x).tail, g.arc(x).head))
        internal = frozenset(
            v for v in verts
            if g.in_arcs[v] and g.out_arcs[v]
            and arcset.issuperset(g.in_arcs[v]) and arcset.issuperset(g.out_arcs[v])
        )
        out.append(AlternatingCycle(len(out), tuple(seq), verts, internal))
    return out


# -- structural operations ---------------------------------------------


def relabel(g: TwoDigraph, vmap: Mapping[int, int] | None = None,
            amap: Mapping[int, int] | None = None) -> TwoDigraph:
    vm = (lambda v: vmap.get(v, v)) if vmap else (lambda v: v)
    am = (lambda a: amap.get(a, a)) if amap else (lambda a: a)
    return TwoDigraph([vm(v) for v in g.vertices],
                      [Arc(am(a.id), vm(a.tail), vm(a.head)) for a in g.arcs])


def normalized(g: TwoDigraph, start: int = 1) -> TwoDigraph:
    """Relabel vertices to start, start+1, ... and arcs to 0, 1, ... in order."""
    vmap = {v: i + start for i, v in enumerate(g.vertices)}
    amap = {a.id: i for i, a in enumerate(g.arcs)}
    return relabel(g, vmap, amap)


def split(g: TwoDigraph, v: int) -> TwoDigraph:
    """Replace saturated ``v`` by exit ``v`` (in-arcs) and a fresh entry vertex.

    The fresh label is ``max(vertices) + 1`` and receives the out-arcs.
    """
    return split_many(g, [v])[0]


def split_many(g: TwoDigraph, vs: Iterable[int]) -> tuple[TwoDigraph, dict[int, int]]:
    """Split several saturated vertices; returns the graph and v -> new out-half."""
    vs = list(vs)
    nxt = max(g.vertices) + 1
    out_half: dict[int, int] = {}
    for v in vs:
        if v not in g.in_arcs or g.kind(v) != SATURATED:
            raise NotSaturated(v)
        if v in out_half:
            continue
        out_half[v] = nxt
        nxt += 1
    arcs = [Arc(a.id, out_half.get(a.tail, a.tail), a.head) for a in g.arcs]
    return TwoDigraph(list(g.vertices) + list(out_half.values()), arcs), out_half


def splice(g: TwoDigraph, u: int, v: int) -> TwoDigraph:
    """Identify entry ``u`` with exit ``v``; the merged vertex keeps ``min(u, v)``."""
    if u not in g.in_arcs or g.kind(u) != ENTRY:
        raise NotEntry(f"vertex {u} is not an entry vertex")
    if v not in g.in_arcs or g.kind(v) != EXIT:
        raise NotExit(f"vertex {v} is not an exit vertex")
    return splice_many(g, [(u, v)])


def splice_many(g: TwoDigraph, pairs: Iterable[tuple[int, int]]) -> TwoDigraph:
    """Splice several (entry, exit) pairs at once."""
    merge: dict[int, int] = {}
    for u, v in pairs:
        if u in merge or g.kind(u) != ENTRY:
            raise NotEntry(f"vertex {u} is not an unused entry vertex")
        if v in merge or g.kind(v) != EXIT:
            raise NotExit(f"vertex {v} is not an unused exit vertex")
        merge[u] = merge[v] = min(u, v)
    verts = {merge.get(x, x) for x in g.vertices}
    arcs = [Arc(a.id, merge.get(a.tail, a.tail), merge.get(a.head, a.head)) for a in g.arcs]
    return TwoDigraph(verts, arcs)


def induced_subgraph(g: TwoDigraph, k: Iterable[int]) -> TwoDigraph:
    """Subgraph on the arcs of the ACs with indices in ``k``."""
    k = sorted(set(k))
    if not k:
        raise EmptySelection("AC selection is empty")
    arcs = [g.arc(e) for i in k for e in g.acs[i].arcs]
    return TwoDigraph.from_arcs(arcs)


def subgraph_by_arcs(g: TwoDigraph, arc_ids: Iterable[int]) -> TwoDigraph:
    return TwoDigraph.from_arcs(g.arc(e) for e in arc_ids)


def disjoint_union(g1: TwoDigraph, g2: TwoDigraph) -> tuple[TwoDigraph, dict[int, int]]:
    """Union with ``g2`` shifted past ``g1``'s labels and ids; returns the vertex map."""
    voff = max(g1.vertices) + 1 - min(g2.vertices)
    aoff = max(g1.arc_ids) + 1 - min(g2.arc_ids)
    vmap = {v: v + voff for v in g2.vertices}
    shifted = relabel(g2, vmap, {a: a + aoff for a in g2.arc_ids})
    return TwoDigraph(g1.vertices + shifted.vertices, g1.arcs + shifted.arcs), vmap


# -- connectivity --------------------------------------------------------


def components(g: TwoDigraph) -> list[frozenset[int]]:
    """Weak components, each a vertex set, ordered by smallest label."""
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in g.arcs:
        ra, rb = find(a.tail), find(a.head)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, set[int]] = defaultdict(set)
    for v in g.vertices:
        groups[find(v)].add(v)
    return [frozenset(s) for _, s in sorted(groups.items())]


def n_components(g: TwoDigraph) -> int:
    return len(components(g))


def is_connected(g: TwoDigraph) -> bool:
    return n_components(g) == 1


def component_subgraphs(g: TwoDigraph) -> list[TwoDigraph]:
    out = []
    for comp in components(g):
        out.append(TwoDigraph(comp, [a for a in g.arcs if a.tail in comp]))
    return out


def strongly_connected_components(g: TwoDigraph) -> list[frozenset[int]]:
    """Tarjan's algorithm, iterative."""
    succ = {v: [g.arc(e).head for e in g.out_arcs[v]] for v in g.vertices}
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    sccs: list[frozenset[int]] = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            nbrs = succ[v]
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                scc = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    scc.add(w)
                    if w == v:
                        break
                sccs.append(frozenset(scc))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sccs


def is_strongly_connected(g: TwoDigraph) -> bool:
    return len(strongly_connected_components(g)) == 1


def boundary_flow(g: TwoDigraph, u: Iterable[int]) -> tuple[int, int]:
    """Number of arcs entering and leaving the vertex set ``u``."""
    u = set(u)
    n_in = sum(1 for a in g.arcs if a.head in u and a.tail not in u)
    n_out = sum(1 for a in g.arcs if a.tail in u and a.head not in u)
    return n_in, n_out
