"""Deck computation, recognition and 2-reconstruction of regular graphs."""

from .canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from .deck import (
    Card,
    Deck,
    compute_deck,
    deck_digest,
    decks_equal,
    edge_count_from_deck,
    format_deck,
    missing_edge_count,
    parse_deck,
    subdeck,
)
from .errors import *  # noqa: F401,F403
from .graph import (
    UNREACHABLE,
    Graph,
    common_neighbors,
    degree_sequence,
    distance_matrix,
    from_edges,
    induced_subgraph,
    is_connected,
    relabel,
)
from .graph6 import parse_graph6, to_graph6
from .params import SrgParams, WdrParams
from .recognize import (
    CardClassification,
    classify_card,
    infer_regular_degree,
    is_complete,
    recognize_clique_union,
    recognize_srg,
    recognize_wdr,
)
from .reconstruct import (
    Branch,
    PairLabel,
    ReconstructionReport,
    classify_pair_srg,
    classify_pair_wdr,
    reconstruct_from_deck,
    reconstruct_regular_1card,
    reconstruct_srg,
    reconstruct_wdr,
    split_S,
)

__version__ = "0.1.0"
