"""Factors, indices, routes and parity classes of 2-digraphs.

A factor takes the forward or the backward half of every AC, so factors are
indexed by a bit mask over the ACs in canonical order (bit set = backward).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    LengthMismatch,
    MixedParityFound,
    NotClosed,
    NotSaturated,
    SaturatedGraph,
    TooManyACs,
)
from .graph_core import TwoDigraph, is_connected, split

DEFAULT_CAP = 30


@dataclass(frozen=True)
class Selection:
    """One bit per AC: 0 picks the forward half, 1 the backward half."""

    bits: tuple[int, ...]

    @classmethod
    def from_mask(cls, mask: int, width: int) -> "Selection":
        return cls(tuple((mask >> i) & 1 for i in range(width)))

    @classmethod
    def forward(cls, width: int) -> "Selection":
        return cls((0,) * width)

    @property
    def mask(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    def complement(self) -> "Selection":
        return Selection(tuple(1 - b for b in self.bits))

    def __len__(self):
        return len(self.bits)


@dataclass(frozen=True)
class Factor:
    selection: Selection
    arcs: frozenset[int]
    cycles: tuple[tuple[int, ...], ...]
    paths: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.cycles)

    @property
    def is_open(self) -> bool:
        return not self.cycles

    @property
    def n_components(self) -> int:
        return len(self.cycles) + len(self.paths)

    @property
    def is_hamiltonian_cycle(self) -> bool:
        return not self.paths and len(self.cycles) == 1

    @property
    def parity(self) -> str | None:
        """Sign of the factor viewed as a permutation (only when there are no paths)."""
        if self.paths:
            return None
        n = sum(len(c) for c in self.cycles)
        return "even" if (n - len(self.cycles)) % 2 == 0 else "odd"


@dataclass(frozen=True)
class Route:
    """Entry -> exit bijection given by the path ends of a factor.

    The permutation uses entries and exits each sorted by label and numbered
    from 1.  Routes compare by mapping only.
    """

    mapping: tuple[tuple[int, int], ...]
    open: bool = field(default=True, compare=False)

    def __call__(self, u: int) -> int:
        return dict(self.mapping)[u]

    @property
    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    @property
    def permutation(self) -> tuple[int, ...]:
        exits = sorted(v for _, v in self.mapping)
        pos = {v: i + 1 for i, v in enumerate(exits)}
        return tuple(pos[v] for _, v in sorted(self.mapping))

    @property
    def parity(self) -> str:
        return permutation_parity(self.permutation)

    def __len__(self):
        return len(self.mapping)


def permutation_parity(perm: Sequence[int]) -> str:
    """'even' or 'odd' for a permutation of 1..n given as its image list."""
    n = len(perm)
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
    return "even" if (n - cycles) % 2 == 0 else "odd"


class FactorEngine:
    """Precomputed halves of every AC for fast factor evaluation by mask."""

    def __init__(self, g: TwoDigraph):
        self.g = g
        self.verts = g.vertices
        idx = {v: i for i, v in enumerate(g.vertices)}
        self.width = g.n_acs
        self.halves = []
        for ac in g.acs:
            pair = []
            for back in (False, True):
                pair.append([(idx[g.arc(e).tail], idx[g.arc(e).head]) for e in ac.half(back)])
            self.halves.append(pair)
        self.entries = [idx[v] for v in g.entry]
        self.n = len(g.vertices)

    def successors(self, mask: int) -> list[int]:
        succ = [-1] * self.n
        for i, (fwd, bwd) in enumerate(self.halves):
            for t, h in (bwd if (mask >> i) & 1 else fwd):
                succ[t] = h
        return succ

    def _walk(self, succ):
        seen = bytearray(self.n)
        ends = []
        for u in self.entries:
            x = u
            while True:
                seen[x] = 1
                nx = succ[x]
                if nx < 0:
                    break
                x = nx
            ends.append(x)
        cycles = 0
        for s in range(self.n):
            if not seen[s]:
                cycles += 1
                x = s
                while not seen[x]:
                    seen[x] = 1
                    x = succ[x]
        return cycles, ends

    def index(self, mask: int) -> int:
        return self._walk(self.successors(mask))[0]

    def index_and_route(self, mask: int) -> tuple[int, tuple[int, ...]]:
        """Index and the exit label reached from each entry (entries sorted)."""
        cycles, ends = self._walk(self.successors(mask))
        return cycles, tuple(self.verts[x] for x in ends)

    def factor(self, mask: int) -> Factor:
        g = self.g
        arcs = frozenset(e for i, ac in enumerate(g.acs) for e in ac.half(bool((mask >> i) & 1)))
        succ = self.successors(mask)
        seen = bytearray(self.n)
        paths = []
        for u in self.entries:
            p = []
            x = u
            while x >= 0:
                seen[x] = 1
                p.append(self.verts[x])
                x = succ[x]
            paths.append(tuple(p))
        cycles = []
        for s in range(self.n):
            if not seen[s]:
                c = []
                x = s
                while not seen[x]:
                    seen[x] = 1
                    c.append(self.verts[x])
                    x = succ[x]
                cycles.append(tuple(c))
        return Factor(Selection.from_mask(mask, self.width), arcs, tuple(cycles), tuple(paths))

    def masks(self) -> range:
        return range(1 << self.width)


def _engine(g: TwoDigraph, cap: int | None = DEFAULT_CAP) -> FactorEngine:
    if cap is not None and g.n_acs > cap:
        raise TooManyACs(g.n_acs, cap)
    return FactorEngine(g)


def factor(g: TwoDigraph, sel: Selection | Sequence[int]) -> Factor:
    if not isinstance(sel, Selection):
        sel = Selection(tuple(sel))
    if len(sel) != g.n_acs:
        raise LengthMismatch(f"selection has {len(sel)} bits, graph has {g.n_acs} ACs")
    return FactorEngine(g).factor(sel.mask)


def enumerate_factors(g: TwoDigraph, cap: int = DEFAULT_CAP) -> Iterator[Factor]:
    eng = _engine(g, cap)
    for m in eng.masks():
        yield eng.factor(m)


def factor_indices(g: TwoDigraph, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, int]]:
    """``(mask, index)`` for every factor, without materialising factors."""
    eng = _engine(g, cap)
    for m in eng.masks():
        yield m, eng.index(m)


def index_of(g: TwoDigraph, cap: int = DEFAULT_CAP) -> int:
    eng = _engine(g, cap)
    best = None
    for m in eng.masks():
        i = eng.index(m)
        if best is None or i < best:
            best = i
            if i == 0:
                break
    return best


def is_hamiltonian_bruteforce(g: TwoDigraph, cap: int = DEFAULT_CAP) -> tuple[bool, Factor | None]:
    """Exhaustive search over all 2^|C| factors for a spanning cycle."""
    if not g.is_saturated:
        raise NotSaturated(g.entry[0])
    eng = _engine(g, cap)
    if not is_connected(g):
        return False, None
    for m in eng.masks():
        if eng.index(m) == 1:
            return True, eng.factor(m)
    return False, None


def find_open_factor(g: TwoDigraph, cap: int = DEFAULT_CAP) -> int | None:
    """Mask of some open factor, or None when the graph is closed."""
    if g.is_saturated:
        return None
    eng = _engine(g, cap)
    for m in eng.masks():
        if eng.index(m) == 0:
            return m
    return None


def is_open(g: TwoDigraph, cap: int = DEFAULT_CAP) -> bool:
    return find_open_factor(g, cap) is not None


def is_closed(g: TwoDigraph, cap: int = DEFAULT_CAP) -> bool:
    return not is_open(g, cap)


def is_minimally_closed(g: TwoDigraph, cap: int = DEFAULT_CAP) -> bool:
    if is_open(g, cap):
        raise NotClosed("graph is open")
    return all(is_open(split(g, v), cap) for v in g.saturated)


def parity_class(g: TwoDigraph, exhaustive: bool = False, cap: int = DEFAULT_CAP) -> str:
    """'odd', 'even' or 'mixed' by the index parities of all factors.

    When every AC is odd all factors share one index parity, so a single
    factor decides unless ``exhaustive`` is set.
    """
    if not g.is_saturated:
        raise NotSaturated(g.entry[0])
    if not exhaustive and all(ac.is_odd for ac in g.acs):
        i = FactorEngine(g).index(0)
        return "odd" if i % 2 else "even"
    parities = {i % 2 for _, i in factor_indices(g, cap)}
    if parities == {1}:
        return "odd"
    if parities == {0}:
        return "even"
    return "mixed"


def route_of(f: Factor) -> Route:
    if not f.paths:
        raise SaturatedGraph("a factor without paths defines no route")
    return Route(tuple(sorted((p[0], p[-1]) for p in f.paths)), open=f.is_open)


def _routes_by_index(g: TwoDigraph, cap: int) -> Iterator[tuple[int, int, Route]]:
    if g.is_saturated:
        raise SaturatedGraph("graph has no entry vertices")
    eng = _engine(g, cap)
    entries = g.entry
    for m in eng.masks():
        i, ends = eng.index_and_route(m)
        yield m, i, Route(tuple(zip(entries, ends)), open=(i == 0))


def open_routes(g: TwoDigraph, cap: int = DEFAULT_CAP) -> dict[Route, int]:
    """Distinct open routes, each with the mask of its first defining factor."""
    out: dict[Route, int] = {}
    for m, i, r in _routes_by_index(g, cap):
        if i == 0 and r not in out:
            out[r] = m
    return out


def route_parity_partition(g: TwoDigraph, cap: int = DEFAULT_CAP) -> tuple[str | None, str | None]:
    """Permutation parity shared by the routes of odd-index and even-index factors.

    Requires every AC odd.  Raises MixedParityFound if the two route sets
    meet or either set mixes permutation parities.  ``None`` marks an empty set.
    """
    if not all(ac.is_odd for ac in g.acs):
        raise MixedParityFound("route parity law needs every AC odd")
    by_class: dict[int, set[Route]] = {0: set(), 1: set()}
    for _, i, r in _routes_by_index(g, cap):
        by_class[i % 2].add(r)
    if by_class[0] & by_class[1]:
        raise MixedParityFound("a route is defined by factors of both index parities")
    result = []
    for cls in (1, 0):
        pars = {r.parity for r in by_class[cls]}
        if len(pars) > 1:
            raise MixedParityFound(f"routes of {'odd' if cls else 'even'}-index factors mix parities")
        result.append(pars.pop() if pars else None)
    return result[0], result[1]


def factor_of_arcs(g: TwoDigraph, arcs: Iterable[int]) -> Factor | None:
    """The factor with exactly this arc set, or None if it is not a factor."""
    arcs = frozenset(arcs)
    bits = []
    for ac in g.acs:
        if ac.forward <= arcs and not (ac.backward & arcs):
            bits.append(0)
        elif ac.backward <= arcs and not (ac.forward & arcs):
            bits.append(1)
        else:
            return None
    if sum(len(ac.arcs) // 2 for ac in g.acs) != len(arcs):
        return None
    return factor(g, Selection(tuple(bits)))
