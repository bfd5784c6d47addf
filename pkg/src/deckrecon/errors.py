"""Exception hierarchy.

Each family maps to one CLI exit code (see ``deckrecon.cli``).
"""


class DeckReconError(Exception):
    """Base class for every error raised by this package."""


class GraphError(DeckReconError, ValueError):
    """Invalid graph construction (bad vertex, loop, size out of range)."""


class Graph6Error(DeckReconError, ValueError):
    """Malformed graph6 text or deck file."""


class InconsistentDeck(DeckReconError):
    """The deck cannot be the deck of any graph."""


class NotRegularConsistent(InconsistentDeck):
    """A card's missing-edge count is neither 2k-1 nor 2k."""


class InconsistentCard(InconsistentDeck):
    """Pair counts in a card contradict the recognized parameters."""


class DeckMismatch(InconsistentDeck):
    """The reconstructed graph does not reproduce the input deck."""


class NotACardOfRegular(DeckReconError, ValueError):
    """Degree profile of a card rules out a vertex-deleted k-regular graph."""


class NotANonadjacentCard(DeckReconError, ValueError):
    """Card degree profile does not match a nonadjacent omitted pair."""


class Unrecognized(DeckReconError):
    """The deck belongs to no supported class."""


class Mu1Unsupported(Unrecognized):
    """Weakly distance-regular with mu' = 1; the single-card procedure needs mu' >= 2."""


class NeedDistance2Card(DeckReconError, ValueError):
    """The omitted pair of the card is at distance > 2 (no common neighbours)."""


class OutOfOracleRange(DeckReconError, ValueError):
    """Exhaustive oracle requested beyond its vertex ceiling."""
