"""Pass/fail records shared by the identity-checking modules."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class IdentityCheck:
    """One verified identity: passes exactly when the canonical difference is zero."""

    name: str
    ok: bool
    witness: str | None = None
    seconds: float = 0.0

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.ok else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def check_zero(name: str, difference) -> IdentityCheck:
    """Build a check from anything with is_zero(); the witness is the nonzero rest."""
    ok = difference.is_zero()
    return IdentityCheck(name, ok, None if ok else str(difference))
