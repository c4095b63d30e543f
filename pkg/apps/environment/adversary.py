"""θ-flipping corruption with an exact budget ledger."""

from __future__ import annotations

from dataclasses import dataclass, replace

from apps.core.types import Vec

from .schemas import CorruptionSpec


@dataclass(frozen=True, slots=True)
class AdversaryState:
    """Remaining budget and the running sum of applied ``|c_t|``."""

    variant: str
    budget: float
    remaining: float
    ledger: float = 0.0
    flips: int = 0

    @classmethod
    def from_spec(cls, spec: CorruptionSpec) -> AdversaryState:
        budget = spec.budget if spec.variant == "theta_flip" else 0.0
        return cls(variant=spec.variant, budget=budget, remaining=budget)


def apply_corruption(
    adv: AdversaryState, x: Vec, theta_star: Vec, r_prime: float
) -> tuple[float, float, AdversaryState]:
    """Flip the sign of the mean reward while the budget covers the whole flip.

    Corruption starts at round 1 and never applies a partial flip, so the
    ledger never exceeds the budget.
    """
    if adv.variant != "theta_flip":
        return r_prime, 0.0, adv
    c = -2.0 * float(x @ theta_star)
    cost = abs(c)
    if cost == 0.0 or cost > adv.remaining or adv.ledger + cost > adv.budget:
        return r_prime, 0.0, adv
    return (
        r_prime + c,
        c,
        replace(adv, remaining=adv.remaining - cost, ledger=adv.ledger + cost, flips=adv.flips + 1),
    )
