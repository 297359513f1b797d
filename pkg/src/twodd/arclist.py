"""Arc-list text format and Graphviz DOT export.

Format::

    2dd 1
    # comment lines start with '#'
    <arc_id> <tail> <head>
    ...

Vertices are the arc endpoints.  Several graphs may be concatenated, each
starting with its own header line.
"""

from __future__ import annotations

from typing import Iterator

from .errors import ArcListSyntaxError
from .graph_core import Arc, TwoDigraph

MAGIC = "2dd"
VERSION = 1

# one colour per AC, cycled
PALETTE = ("red", "blue", "darkgreen", "magenta", "orange", "cyan4",
           "brown", "purple", "gold3", "gray40")


def _parse_header(line: str, lineno: int) -> None:
    parts = line.split()
    if len(parts) != 2 or parts[0] != MAGIC:
        raise ArcListSyntaxError(lineno, f"expected header '{MAGIC} {VERSION}'", column=1)
    if parts[1] != str(VERSION):
        raise ArcListSyntaxError(lineno, f"unsupported format version {parts[1]!r}",
                                 column=line.index(parts[1]) + 1)


def _parse_arc(line: str, lineno: int) -> Arc:
    parts = line.split()
    if len(parts) != 3:
        raise ArcListSyntaxError(lineno, f"expected 3 integers, got {len(parts)} fields")
    vals = []
    pos = 0
    for tok in parts:
        pos = line.index(tok, pos)
        if not tok.isdigit():
            raise ArcListSyntaxError(lineno, f"not a non-negative integer: {tok!r}", column=pos + 1)
        vals.append(int(tok))
        pos += len(tok)
    return Arc(*vals)


def parse_many(text: str) -> Iterator[TwoDigraph]:
    arcs: list[Arc] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(MAGIC):
            _parse_header(line, lineno)
            if arcs is not None:
                yield _finish(arcs, lineno)
            arcs = []
            continue
        if arcs is None:
            raise ArcListSyntaxError(lineno, f"missing '{MAGIC} {VERSION}' header", column=1)
        arcs.append(_parse_arc(line, lineno))
    if arcs is None:
        raise ArcListSyntaxError(1, "empty input")
    yield _finish(arcs, None)


def _finish(arcs, lineno):
    if not arcs:
        raise ArcListSyntaxError(lineno or 1, "graph has no arcs")
    return TwoDigraph.from_arcs(arcs)


def parse(text: str) -> TwoDigraph:
    graphs = list(parse_many(text))
    if len(graphs) != 1:
        raise ArcListSyntaxError(1, f"expected one graph, found {len(graphs)}")
    return graphs[0]


def serialize(g: TwoDigraph, comment: str | None = None) -> str:
    lines = [f"{MAGIC} {VERSION}"]
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.extend(f"{a.id} {a.tail} {a.head}" for a in g.arcs)
    return "\n".join(lines) + "\n"


def serialize_many(graphs) -> str:
    return "\n".join(serialize(g) for g in graphs)


def load(path) -> TwoDigraph:
    with open(path) as fh:
        return parse(fh.read())


def export_dot(g: TwoDigraph, highlight=None, name: str = "G") -> str:
    """DOT text: one colour per AC, forward arcs solid, backward arcs dashed.

    ``highlight`` may be an AC index or anything with an ``arcs`` attribute
    (e.g. a factor); highlighted arcs are drawn bold.
    """
    if highlight is None:
        bold: frozenset[int] = frozenset()
    elif isinstance(highlight, int):
        bold = frozenset(g.acs[highlight].arcs)
    else:
        bold = frozenset(highlight.arcs)
    out = [f"digraph {name} {{"]
    for v in g.vertices:
        out.append(f'  {v} [label="{v}", shape=circle];')
    for ac in g.acs:
        colour = PALETTE[ac.index % len(PALETTE)]
        fwd = ac.forward
        for e in sorted(ac.arcs):
            a = g.arc(e)
            attrs = [f"color={colour}", f"style={'solid' if e in fwd else 'dashed'}",
                     f'label="{e}"']
            if e in bold:
                attrs.append("penwidth=3")
            out.append(f"  {a.tail} -> {a.head} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"
