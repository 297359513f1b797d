"""Certification pipeline for 2-dds and an independent witness checker."""

from __future__ import annotations

from .certificate import HAMILTONIAN, NON_HAMILTONIAN, UNDECIDED, Certificate
from .errors import CapExceeded, GraphError, NotSaturated, PreconditionViolated
from .factors import (
    DEFAULT_CAP,
    FactorEngine,
    factor_of_arcs,
    is_closed,
    is_hamiltonian_bruteforce,
    parity_class,
)
from .graph_core import TwoDigraph, induced_subgraph, is_connected, n_components
from .quotients import (
    CLOSED_DIRTY,
    DEFAULT_SUBSET_CAP,
    Elimination,
    classify_ac6,
    closed_subset_search,
    eliminate_dirty,
    in_family_f6,
    replay_reduction,
)
from .splitting import certify_by_splitting, replay_split_steps


def _with_reduction(cert: Certificate, elim: Elimination | None) -> Certificate:
    if elim is not None and "reduction" not in cert.witness:
        cert.witness = {"reduction": elim.chain_json(), **cert.witness}
    return cert


def _closed_witness(h: TwoDigraph, k) -> dict:
    return {"K": list(k), "ac_arcs": [min(h.acs[i].arcs) for i in k]}


def _single_closed_ac(h: TwoDigraph) -> tuple[int, ...] | None:
    if h.n_acs < 2:
        return None
    return next(((i,) for i in range(h.n_acs) if is_closed(induced_subgraph(h, [i]), cap=None)), None)


def _larger_closed_subset(h: TwoDigraph, closed_cap: int) -> tuple[int, ...] | None:
    if h.n_acs < 3:
        return None
    try:
        return closed_subset_search(h, cap=closed_cap, min_size=2)
    except CapExceeded:
        return None


def certify(g: TwoDigraph, cap: int = DEFAULT_CAP, closed_cap: int = DEFAULT_SUBSET_CAP,
            exhaustive: bool = False) -> Certificate:
    """Decide Hamiltonicity of a 2-dd, preferring structural certificates.

    Order: connectivity, a single closed AC, dirty six-arc AC elimination,
    the split-parity procedure, larger closed AC subsets, then brute force
    over factors when the AC count is within ``cap``.  ``exhaustive`` skips
    the structural criteria and goes straight to brute force.
    """
    if not g.is_saturated:
        raise NotSaturated(g.entry[0])
    if not is_connected(g):
        return Certificate(NON_HAMILTONIAN, "disconnected", {"components": n_components(g)})

    elim = None
    h = g
    if not exhaustive:
        k = _single_closed_ac(g)
        if k is not None:
            return Certificate(NON_HAMILTONIAN, "closed_subset", _closed_witness(g, k))
        if in_family_f6(g):
            elim = eliminate_dirty(g)
            if elim.certificate is not None:
                cert = elim.certificate
                if cert.method in ("disconnected", "dirty_reduction"):
                    cert.witness["components"] = n_components(elim.graph)
                return cert
            h = elim.graph

        if all(ac.is_odd for ac in h.acs):
            cert = certify_by_splitting(h)
            if cert.decided:
                return _with_reduction(cert, elim)

        k = _larger_closed_subset(h, closed_cap)
        if k is not None:
            return _with_reduction(Certificate(NON_HAMILTONIAN, "closed_subset", _closed_witness(h, k)), elim)

    if h.n_acs > cap:
        return _with_reduction(Certificate(UNDECIDED, "none", {"n_acs": h.n_acs, "cap": cap}), elim)
    ham, f = is_hamiltonian_bruteforce(h, cap)
    if not ham:
        return _with_reduction(Certificate(NON_HAMILTONIAN, "brute_force",
                                           {"n_factors": 1 << h.n_acs}), elim)
    arcs = elim.lift(f.arcs) if elim is not None else f.arcs
    lifted = factor_of_arcs(g, arcs)
    if lifted is None or not lifted.is_hamiltonian_cycle:
        raise PreconditionViolated("Hamiltonian cycle of the reduced graph did not lift")
    return Certificate(HAMILTONIAN, "brute_force", {
        "factor_arcs": sorted(lifted.arcs),
        "cycle": list(lifted.cycles[0]),
    })


def _piece_parity(h: TwoDigraph) -> str:
    if all(ac.is_odd for ac in h.acs):
        return "odd" if FactorEngine(h).index(0) % 2 else "even"
    return parity_class(h, exhaustive=True)


def verify_certificate(g: TwoDigraph, cert: Certificate, cap: int = DEFAULT_CAP) -> bool:
    """Re-check only the witness carried by ``cert``; no search is repeated."""
    w = cert.witness
    if cert.verdict == UNDECIDED:
        return True
    try:
        h = replay_reduction(g, w.get("reduction", []))
    except (GraphError, KeyError, TypeError):
        return False
    m = cert.method
    if cert.verdict == HAMILTONIAN:
        f = factor_of_arcs(g, w.get("factor_arcs", ()))
        return m == "brute_force" and f is not None and f.is_hamiltonian_cycle
    if m in ("disconnected", "dirty_reduction"):
        return not is_connected(h) and (m == "dirty_reduction") == bool(w.get("reduction"))
    if m == "closed_ac6":
        if w.get("ac_arc") not in h.ac_of or h.n_acs < 2:
            return False
        name = classify_ac6(h, h.ac_of[w["ac_arc"]]).name
        return name in CLOSED_DIRTY and name == w.get("class")
    if m == "closed_subset":
        try:
            k = sorted({h.ac_of[e] for e in w["ac_arcs"]})
        except KeyError:
            return False
        return 0 < len(k) < h.n_acs and is_closed(induced_subgraph(h, k), cap=None)
    if m == "split_parity":
        try:
            pieces = replay_split_steps(h, w.get("steps", []))
        except (GraphError, KeyError, TypeError):
            return False
        piece = pieces.get(w.get("even_piece"))
        return piece is not None and _piece_parity(piece) == "even"
    if m == "brute_force":
        return h.n_acs <= cap and not is_hamiltonian_bruteforce(h, cap)[0]
    return False
