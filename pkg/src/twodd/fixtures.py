"""Example graphs bundled as arc-list files."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .arclist import parse
from .graph_core import TwoDigraph

# file stem -> AC6 class name, in the order of the six-arc AC table
AC6_FILES = {
    "xclean": "X_clean",
    "x1l": "X_1L",
    "x1s": "X_1S",
    "x2l": "X_2L",
    "x2s": "X_2S",
    "xc2l": "Xc_2L",
    "xc1l1s": "Xc_1L1S",
    "xc2l1s": "Xc_2L1S",
    "xc3l": "Xc_3L",
    "xc3s": "Xc_3S",
}


def fixture_text(stem: str) -> str:
    return resources.files("twodd").joinpath("data").joinpath(f"{stem}.2dd").read_text()


@lru_cache(maxsize=None)
def load_fixture(stem: str) -> TwoDigraph:
    return parse(fixture_text(stem))


def ac6(name: str) -> TwoDigraph:
    """Standalone six-arc AC by class name, e.g. ``ac6("X_2S")``."""
    stem = {v: k for k, v in AC6_FILES.items()}[name]
    return load_fixture(stem)


def odd_split_example() -> TwoDigraph:
    return load_fixture("odd_split_example")


def closed_pair_example() -> TwoDigraph:
    return load_fixture("closed_pair_example")


def doubled_digon() -> TwoDigraph:
    """u=1, v=2 with arcs a1, a2: 1->2 (ids 0, 1) and b1, b2: 2->1 (ids 2, 3)."""
    return TwoDigraph.from_arcs([(0, 1, 2), (1, 1, 2), (2, 2, 1), (3, 2, 1)])


def double_loop() -> TwoDigraph:
    return TwoDigraph.from_arcs([(0, 1, 1), (1, 1, 1)])
