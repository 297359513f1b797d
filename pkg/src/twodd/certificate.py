"""Verdict records whose witnesses can be re-checked without re-searching."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

HAMILTONIAN = "Hamiltonian"
NON_HAMILTONIAN = "NonHamiltonian"
UNDECIDED = "Undecided"

METHODS = ("brute_force", "disconnected", "closed_subset", "split_parity",
           "closed_ac6", "dirty_reduction", "none")


@dataclass
class Certificate:
    verdict: str
    method: str
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (HAMILTONIAN, NON_HAMILTONIAN, UNDECIDED):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def decided(self) -> bool:
        return self.verdict != UNDECIDED

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(d["verdict"], d["method"], dict(d.get("witness", {})))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))
