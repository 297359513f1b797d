"""Split sets, split components and the two-vertex splice parity test."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .certificate import NON_HAMILTONIAN, UNDECIDED, Certificate
from .errors import (
    NotASplitSet,
    NotEven,
    NotMinimalPair,
    NotSaturated,
    PreconditionViolated,
)
from .factors import FactorEngine, parity_class
from .graph_core import (
    SATURATED,
    TwoDigraph,
    component_subgraphs,
    disjoint_union,
    is_connected,
    n_components,
    splice,
    splice_many,
    split_many,
)


@dataclass(frozen=True)
class SplitSet:
    vertices: tuple[int, ...]
    minimal: bool = True

    def __len__(self):
        return len(self.vertices)


@dataclass
class SplitReport:
    split_set: SplitSet
    components: list[TwoDigraph]
    spliced: list[TwoDigraph] = field(default_factory=list)
    parities: list[str] = field(default_factory=list)


def _count_after_split(g: TwoDigraph, s: frozenset[int]) -> int:
    """Weak component count after splitting every vertex of ``s``."""
    off = max(g.vertices) + 1
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in g.arcs:
        t = a.tail + off if a.tail in s else a.tail
        ra, rb = find(t), find(a.head)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in list(parent)})


def _check_saturated(g: TwoDigraph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if v not in g.in_arcs or g.kind(v) != SATURATED:
            raise NotSaturated(v)
    return s


def is_split_set(g: TwoDigraph, s: Iterable[int]) -> bool:
    s = _check_saturated(g, s)
    if not s:
        return False
    return _count_after_split(g, s) > n_components(g)


def is_minimal_split_set(g: TwoDigraph, s: Iterable[int]) -> bool:
    """Split set none of whose proper nonempty subsets is a split set."""
    s = tuple(sorted(_check_saturated(g, s)))
    if not is_split_set(g, s):
        return False
    return not any(is_split_set(g, sub)
                   for k in range(1, len(s)) for sub in combinations(s, k))


def minimal_split_sets(g: TwoDigraph, max_size: int = 4) -> list[SplitSet]:
    """All inclusion-minimal split sets up to ``max_size``, by size then label order."""
    base = n_components(g)
    found: list[frozenset[int]] = []
    out = []
    sat = g.saturated
    for k in range(1, min(max_size, len(sat)) + 1):
        for combo in combinations(sat, k):
            s = frozenset(combo)
            if any(f <= s for f in found):
                continue
            if _count_after_split(g, s) > base:
                found.append(s)
                out.append(SplitSet(combo))
    return out


def split_components(g: TwoDigraph, s: Iterable[int]) -> list[TwoDigraph]:
    """Components after splitting ``s``; each split vertex keeps its label on the in-half."""
    return _split_components(g, s)[0]


def _split_components(g, s):
    s = tuple(sorted(_check_saturated(g, s)))
    if not is_split_set(g, s):
        raise NotASplitSet(f"{list(s)} is not a split set")
    h, out_half = split_many(g, s)
    return component_subgraphs(h), out_half


def split_report(g: TwoDigraph, s: Iterable[int]) -> SplitReport:
    s = tuple(sorted(s))
    comps = split_components(g, s)
    report = SplitReport(SplitSet(s, is_minimal_split_set(g, s)), comps)
    if len(s) == 2 and report.split_set.minimal and g.is_saturated and is_connected(g):
        report.spliced = list(splice_pair(g, s))
        report.parities = [parity_class(x) for x in report.spliced]
    return report


def splice_pair(g: TwoDigraph, s: Iterable[int]) -> tuple[TwoDigraph, TwoDigraph]:
    """Split ``{u, v}`` (u < v) and re-splice inside each split component.

    The first graph is the component holding u's in-half and v's out-half;
    it keeps label u for the spliced vertex.  The second keeps label v.
    """
    s = tuple(sorted(s))
    if len(s) != 2:
        raise NotMinimalPair(f"need exactly two vertices, got {len(s)}")
    if not is_minimal_split_set(g, s):
        raise NotMinimalPair(f"{list(s)} is not a minimal split set")
    u, v = s
    comps, out_half = _split_components(g, s)
    uo, vo = out_half[u], out_half[v]
    if len(comps) != 2:
        raise NotMinimalPair(f"splitting gives {len(comps)} components")
    first = next(c for c in comps if u in c.in_arcs)
    second = next(c for c in comps if c is not first)
    if vo not in first.in_arcs or uo not in second.in_arcs or v not in second.in_arcs:
        raise NotMinimalPair("split halves are not distributed across the two components")
    return splice(first, vo, u), splice(second, uo, v)


def sampled_parity(g: TwoDigraph) -> str:
    """Parity of the all-forward factor's index."""
    return "odd" if FactorEngine(g).index(0) % 2 else "even"


def replay_split_steps(g: TwoDigraph, steps: list[dict]) -> dict[str, TwoDigraph]:
    """Pieces keyed by tree path ('' is the root, children append '0'/'1')."""
    pieces = {"": g}
    for step in steps:
        pid = step["piece"]
        a, b = splice_pair(pieces[pid], step["split"])
        pieces[pid + "0"] = a
        pieces[pid + "1"] = b
    return pieces


def certify_by_splitting(g: TwoDigraph) -> Certificate:
    """Iterated two-vertex split test for a connected 2-dd whose ACs are all odd.

    With every AC odd, each piece has a single index parity, read off one
    factor.  An even piece anywhere in the tree makes the root
    non-Hamiltonian.  At each piece every size-2 minimal split set is tried;
    if none gives even pieces, the least one is used to recurse.
    """
    if not g.is_saturated or not is_connected(g):
        raise PreconditionViolated("need a connected 2-dd")
    if not all(ac.is_odd for ac in g.acs):
        raise PreconditionViolated("every AC must be odd")
    pieces = {"": g}
    steps: list[dict] = []
    if sampled_parity(g) == "even":
        return Certificate(NON_HAMILTONIAN, "split_parity", {"steps": [], "even_piece": ""})
    queue = [""]
    leaves = []
    while queue:
        queue.sort(key=lambda p: (pieces[p].n_acs, p))
        pid = queue.pop(0)
        h = pieces[pid]
        pairs = [ss.vertices for ss in minimal_split_sets(h, 2) if len(ss) == 2]
        if not pairs:
            leaves.append(pid)
            continue
        spliced = None
        for s in pairs:
            a, b = splice_pair(h, s)
            pa, pb = sampled_parity(a), sampled_parity(b)
            if pa != pb:
                raise PreconditionViolated(
                    f"pieces of split {list(s)} have parities {pa}/{pb}; input is not odd")
            if pa == "even":
                steps.append({"piece": pid, "split": list(s)})
                return Certificate(NON_HAMILTONIAN, "split_parity",
                                   {"steps": steps, "even_piece": pid + "0"})
            if spliced is None:
                spliced = (s, a, b)
        s, a, b = spliced
        steps.append({"piece": pid, "split": list(s)})
        pieces[pid + "0"], pieces[pid + "1"] = a, b
        queue += [pid + "0", pid + "1"]
    return Certificate(UNDECIDED, "split_parity", {"steps": steps, "pieces": sorted(leaves)})


def even_pair_splice(g1: TwoDigraph, g2: TwoDigraph, v1: int, v2: int) -> TwoDigraph:
    """Split ``v1`` in g1 and ``v2`` in g2 and cross-splice the halves.

    g2 is shifted past g1's labels; ``v2`` refers to g2's own labels.
    """
    for name, h in (("first", g1), ("second", g2)):
        if not h.is_saturated or parity_class(h) != "even":
            raise NotEven(f"{name} graph is not an even 2-dd")
    union, vmap = disjoint_union(g1, g2)
    w2 = vmap[v2]
    split_g, out_half = split_many(union, [v1, w2])
    return splice_many(split_g, [(out_half[w2], v1), (out_half[v1], w2)])
