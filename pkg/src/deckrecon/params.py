from __future__ import annotations

from typing import NamedTuple


class SrgParams(NamedTuple):
    """Strongly regular parameters (degree, adjacent-pair and nonadjacent-pair common neighbours)."""

    k: int
    lam: int
    mu: int


class WdrParams(NamedTuple):
    """Weakly distance-regular parameters; ``mu_prime`` counts common
    neighbours of pairs at distance exactly 2."""

    k: int
    lam: int
    mu_prime: int
