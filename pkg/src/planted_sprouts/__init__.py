"""Exact engine and bijections for the planted sprouts circle game.

The game of order n starts with arms 1..n inside a circle; each move joins
two arms of one region and splits it.  This package provides the exact state
machine, the endstate <-> noncrossing-tree correspondence, the play <->
parking-function and play <-> cycle-factorization bijections, the edge poset
whose linear extensions are the plays reaching a given endstate, and an
exhaustive verification suite for all the counting identities.
"""

from .enumeration import (
    CountReport,
    count_plays,
    count_plays_recursive,
    enumerate_games,
    variant_counts,
    verify_all,
)
from .factorizations import (
    TranspositionSeq,
    compose_in_order,
    enumerate_factorizations,
    game_to_transpositions,
    successor_cycle,
    transpositions_to_game,
)
from .game import (
    GameState,
    IllegalMoveError,
    MoveRecord,
    PlaySequence,
    apply_move,
    endstate_signature,
    legal_moves,
    move_length,
    new_game,
    play_from_json,
    play_from_text,
    play_to_json,
    play_to_text,
    replay,
    short_of,
)
from .parking import (
    ParkingFunction,
    game_to_parking,
    is_parking_function,
    parking_to_game,
)
from .poset import (
    EdgePoset,
    build_poset,
    games_with_endstate,
    linear_extensions,
    poset_to_dot,
)
from .trees import (
    NoncrossingTree,
    count_endstates,
    endstate_to_tree,
    enumerate_noncrossing_trees,
    find_primary_edge,
    is_noncrossing_tree,
    is_pivotable_clockwise,
    primary_edges,
    tree_to_canonical_game,
    tree_to_dot,
)

__version__ = "0.1.0"
