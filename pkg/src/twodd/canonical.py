"""Canonical forms for 2-digraphs.

Every arc lies in one in-pair (arcs sharing a head) and one out-pair (arcs
sharing a tail).  Fixing the image of one arc fixes its whole alternating
cycle, so a labelling is grown AC by AC: start from a root arc, walk its AC,
then, scanning arcs in label order, enter every not-yet-labelled AC through
the pair attached at a saturated endpoint.  The only freedom is which arc of
that pair starts the walk.  All (root, choice) branches are advanced in
lock-step and only branches with the smallest code prefix survive, which
yields the lexicographically least code.
"""

from __future__ import annotations

from typing import Sequence

from .graph_core import TwoDigraph

_NEW = 1 << 20


def _walk(start: int, hpair: list[int], tpair: list[int], lab: dict, order: list) -> int:
    e = start
    n = 0
    while True:
        lab[e] = len(order)
        order.append(e)
        f = hpair[e]
        lab[f] = len(order)
        order.append(f)
        n += 2
        e = tpair[f]
        if e == start:
            return n


def _component_code(roots, size, hpair, tpair, at_head, at_tail):
    states = []
    first = None
    for r in roots:
        lab: dict[int, int] = {}
        order: list[int] = []
        n = _walk(r, hpair, tpair, lab, order)
        if first is None or n < first:
            first, states = n, [(lab, order)]
        elif n == first:
            states.append((lab, order))
    code = [first]
    for p in range(size):
        best = None
        survivors = []
        for lab, order in states:
            e = order[p]
            branches = [(lab, order, [])]
            for pair in (at_head[e], at_tail[e]):
                if pair is None:
                    for b in branches:
                        b[2].append(-1)
                    continue
                c, d = pair
                if c in branches[0][0]:
                    for b in branches:
                        b[2].append(min(b[0][c], b[0][d]))
                    continue
                grown = []
                for lb, od, tk in branches:
                    for s in (c, d):
                        lb2, od2 = dict(lb), list(od)
                        n = _walk(s, hpair, tpair, lb2, od2)
                        grown.append((lb2, od2, tk + [_NEW + n]))
                branches = grown
            for lb, od, tk in branches:
                tk = tuple(tk)
                if best is None or tk < best:
                    best, survivors = tk, [(lb, od)]
                elif tk == best:
                    survivors.append((lb, od))
        code.append(best)
        states = survivors
    return tuple(code)


def code_from_arrays(tails: Sequence[int], heads: Sequence[int]) -> tuple:
    """Canonical code of the 2-digraph with arc ``i`` = ``tails[i] -> heads[i]``."""
    n = len(tails)
    ins: dict[int, list[int]] = {}
    outs: dict[int, list[int]] = {}
    for e in range(n):
        ins.setdefault(heads[e], []).append(e)
        outs.setdefault(tails[e], []).append(e)
    hpair = [0] * n
    tpair = [0] * n
    for a, b in ins.values():
        hpair[a], hpair[b] = b, a
    for a, b in outs.values():
        tpair[a], tpair[b] = b, a
    at_head = [outs.get(heads[e]) for e in range(n)]
    at_tail = [ins.get(tails[e]) for e in range(n)]

    comp = [-1] * n
    groups: list[list[int]] = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        cid = len(groups)
        comp[s] = cid
        stack, members = [s], []
        while stack:
            e = stack.pop()
            members.append(e)
            nbrs = [hpair[e], tpair[e]] + (at_head[e] or []) + (at_tail[e] or [])
            for f in nbrs:
                if comp[f] < 0:
                    comp[f] = cid
                    stack.append(f)
        groups.append(members)

    inv = [(at_tail[e] is not None, at_head[e] is not None, tails[e] == heads[e])
           for e in range(n)]
    codes = []
    for members in groups:
        lo = min(inv[e] for e in members)
        roots = [e for e in members if inv[e] == lo]
        codes.append((lo, _component_code(roots, len(members), hpair, tpair, at_head, at_tail)))
    codes.sort()
    return tuple(codes)


def canonical_form(g: TwoDigraph) -> tuple:
    """Hashable code equal for two graphs iff they are isomorphic."""
    ids = g.arc_ids
    return code_from_arrays([g.arc(e).tail for e in ids], [g.arc(e).head for e in ids])


def is_isomorphic(g: TwoDigraph, h: TwoDigraph) -> bool:
    if (len(g.vertices), len(g.arcs), len(g.entry)) != (len(h.vertices), len(h.arcs), len(h.entry)):
        return False
    return canonical_form(g) == canonical_form(h)
