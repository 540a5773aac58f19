"""Deterministic instance generation.

The label table is driven by a fixed 64-bit linear congruential generator
so that identical parameters always produce byte-identical instances,
independent of platform or Python version:

    state_0 = seed mod 2^64
    state_{t+1} = (6364136223846793005 * state_t + 1442695040888963407) mod 2^64

One draw is taken per table cell in row-major order (agent by agent, good
by good); the cell is labelled H exactly when the fresh state is below
``floor(heavy_prob * 2^64)``.  The probability is parsed exactly as a
rational, so thresholds never depend on float rounding.
"""

from __future__ import annotations

from fractions import Fraction

from .instance import Instance

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg64:
    """The package's fixed 64-bit LCG."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK
        return self.state


def generate_instance(
    agents: int,
    goods: int,
    heavy_value: int,
    heavy_prob: Fraction | str,
    seed: int,
) -> Instance:
    """Random instance with i.i.d. H labels of probability ``heavy_prob``."""
    if agents < 1:
        raise ValueError("need at least one agent")
    if goods < 0:
        raise ValueError("negative good count")
    if heavy_value % 2 == 0 or heavy_value < 3:
        raise ValueError("heavy value must be an odd number of halves >= 3")
    prob = Fraction(heavy_prob)
    if not 0 <= prob <= 1:
        raise ValueError("heavy probability must lie in [0, 1]")
    threshold = (prob.numerator << 64) // prob.denominator
    rng = Lcg64(seed)
    labels = tuple(
        "".join(
            "H" if rng.next_u64() < threshold else "L" for _ in range(goods)
        )
        for _ in range(agents)
    )
    return Instance(n=agents, m=goods, heavy_value=heavy_value, labels=labels)
