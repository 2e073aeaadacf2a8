from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .outcome import Outcome, check_witness


@dataclass
class RunReport:
    label: str
    algorithm: str
    b: int
    x: int
    k: int
    decision: str
    witness: list[int] | None
    collapsed: list[int] | None
    residual_core_size: int | None
    stats: dict
    verified: bool

    @classmethod
    def from_outcome(cls, G, b, x, k, label, algorithm, outcome: Outcome) -> "RunReport":
        verified = False
        if outcome.witness is not None:
            verified, _, _ = check_witness(G, k, b, x, outcome.witness)
        return cls(
            label=label,
            algorithm=algorithm,
            b=b,
            x=x,
            k=k,
            decision=outcome.decision.value,
            witness=sorted(outcome.witness) if outcome.witness is not None else None,
            collapsed=sorted(outcome.collapsed) if outcome.collapsed is not None else None,
            residual_core_size=outcome.residual_core_size,
            stats=outcome.stats.as_dict(),
            verified=verified,
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))
