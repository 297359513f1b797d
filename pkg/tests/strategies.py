"""Hypothesis strategies for 2-digraphs built from drawn gluings."""

from __future__ import annotations

from hypothesis import strategies as st

from twodd.generation import base_gluing, gluing_graph


@st.composite
def gluings(draw, max_m=4, max_k=3, saturated=None, clean=False):
    m = draw(st.integers(1, max_m))
    k = draw(st.integers(1, max_k))
    nk = m * k
    if clean and m == 1:
        m, nk = 2, 2 * k
    tails, heads = base_gluing(m, k)
    entries = draw(st.permutations(range(nk)))
    exits = draw(st.permutations(range(nk, 2 * nk)))
    if saturated is True:
        j = nk
    elif saturated is False:
        j = draw(st.integers(0, nk - 1))
    else:
        j = draw(st.integers(0, nk))
    pairs = []
    pool = list(exits)
    for u in entries:
        if len(pairs) == j:
            break
        x = next((x for x in pool if not clean or u // k != (x - nk) // k), None)
        if x is None:
            continue
        pool.remove(x)
        pairs.append((x, u))
    return gluing_graph(tails, heads, pairs)


def two_dds(max_m=4, max_k=3):
    return gluings(max_m=max_m, max_k=max_k, saturated=True)
