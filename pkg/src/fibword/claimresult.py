"""Adjudication records shared by the claim-checking modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

VERIFIED = "verified"
REFUTED = "refuted"


@dataclass(frozen=True)
class ClaimResult:
    """Outcome of checking one quantitative statement.

    `witness` is human-readable exact data: for a refutation, a concrete
    counterexample; for a verification, the sweep bounds that were checked.
    `payload` holds the same information in structured, JSON-ready form.
    """

    id: str
    location: str
    status: str
    witness: str
    payload: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in (VERIFIED, REFUTED):
            raise ValueError(f"status must be {VERIFIED!r} or {REFUTED!r}")
        if not self.witness:
            raise ValueError("a claim result must carry witness text")

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED

    def record(self) -> dict[str, Any]:
        """Plain-dict form with the fixed field names id/location/status/witness/payload."""
        return {
            "id": self.id,
            "location": self.location,
            "status": self.status,
            "witness": self.witness,
            "payload": dict(self.payload),
        }


def verified(claim_id: str, location: str, witness: str, **payload: Any) -> ClaimResult:
    return ClaimResult(claim_id, location, VERIFIED, witness, payload)


def refuted(claim_id: str, location: str, witness: str, **payload: Any) -> ClaimResult:
    return ClaimResult(claim_id, location, REFUTED, witness, payload)
