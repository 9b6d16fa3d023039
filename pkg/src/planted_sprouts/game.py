"""Exact state machine for the planted sprouts game.

A game of order n starts with arms labeled 1..n attached clockwise to the
inside of a circle.  A move joins two arms of one region with an arc and
sprouts two new arms from a notch on the arc, splitting the region in two.
The game always lasts exactly n-1 moves.

States are purely combinatorial: a subgame is the cyclic sequence of arms
of one region, and every arm carries a short label (1..n) plus a long label
recording its full ancestry.  Long labels are either an int (an original
arm) or a nested pair of long labels.  Short labels are globally unique at
every stage, which is what lets a play be serialized as a bare sequence of
unordered label pairs.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass


class IllegalMoveError(ValueError):
    """A move in a play sequence cannot be applied to the current state."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"illegal move at index {index}: {reason}")
        self.index = index
        self.reason = reason


def short_of(long_label):
    """Short label of an arm: recursively take first components of the pair."""
    while isinstance(long_label, tuple):
        long_label = long_label[0]
    return long_label


@dataclass(frozen=True)
class MoveRecord:
    """One move: its arc label, the counterclockwise-neighbor pair captured
    in the subgame the move was made in (that subgame is destroyed by the
    move, so the pair is recorded eagerly), and the joined arms' long labels.
    """

    arc_label: frozenset
    ccw_pair: frozenset
    long_pair: tuple


@dataclass(frozen=True)
class GameState:
    n: int
    subgames: tuple  # tuple of subgames; each subgame is a tuple of (short, long) arms
    history: tuple  # tuple of MoveRecord

    def is_complete(self) -> bool:
        return all(len(sg) == 1 for sg in self.subgames)


@dataclass(frozen=True)
class PlaySequence:
    """An ordered list of unordered short-label pairs (arc labels).

    Because short labels are globally unique at every state, this compact
    form determines the entire state evolution, long labels included.
    """

    n: int
    moves: tuple  # tuple of frozensets of size 2

    @classmethod
    def of(cls, n: int, pairs) -> "PlaySequence":
        moves = []
        for pair in pairs:
            a, b = sorted(pair)
            if not (isinstance(a, int) and isinstance(b, int)):
                raise ValueError(f"move labels must be integers, got {pair!r}")
            if a == b or not (1 <= a <= n) or not (1 <= b <= n):
                raise ValueError(f"move {a}-{b} is not a pair of distinct labels in 1..{n}")
            moves.append(frozenset((a, b)))
        return cls(n=n, moves=tuple(moves))


def new_game(n: int) -> GameState:
    """Initial state: one subgame with arms 1..n in clockwise order."""
    if n < 1:
        raise ValueError(f"game order must be positive, got {n}")
    subgame = tuple((k, k) for k in range(1, n + 1))
    return GameState(n=n, subgames=(subgame,), history=())


def legal_moves(state: GameState):
    """All (subgame index, (p, q)) position pairs; empty iff the state is complete."""
    out = []
    for si, sg in enumerate(state.subgames):
        m = len(sg)
        for p in range(m):
            for q in range(p + 1, m):
                out.append((si, (p, q)))
    return out


def apply_move(state: GameState, subgame_index: int, p: int, q: int) -> GameState:
    """Join the arms at positions p < q of one subgame, splitting it in two.

    With joined arms carrying short labels i, j and long labels L_i, L_j,
    the two replacement subgames are (new arm i, arms strictly between p
    and q) and (new arm j, the remaining arms in cyclic order).  The new
    arms' long labels are (L_i, L_j) and (L_j, L_i).
    """
    if not 0 <= subgame_index < len(state.subgames):
        raise ValueError(f"no subgame with index {subgame_index}")
    sg = state.subgames[subgame_index]
    m = len(sg)
    if not (0 <= p < q < m):
        raise ValueError(f"positions must satisfy 0 <= p < q < {m}, got p={p} q={q}")
    i, long_i = sg[p]
    j, long_j = sg[q]
    arc = frozenset((i, j))
    if any(rec.arc_label == arc for rec in state.history):
        raise IllegalMoveError(
            len(state.history), f"arc {min(i, j)}-{max(i, j)} repeats an earlier arc"
        )
    ccw = frozenset((sg[(p - 1) % m][0], sg[(q - 1) % m][0]))
    side_a = ((i, (long_i, long_j)),) + sg[p + 1 : q]
    side_b = ((j, (long_j, long_i)),) + sg[q + 1 :] + sg[:p]
    subgames = (
        state.subgames[:subgame_index] + (side_a, side_b) + state.subgames[subgame_index + 1 :]
    )
    record = MoveRecord(arc_label=arc, ccw_pair=ccw, long_pair=(long_i, long_j))
    return GameState(n=state.n, subgames=subgames, history=state.history + (record,))


def locate_labels(state: GameState) -> dict:
    """Map short label -> (subgame index, position).  Labels are globally unique."""
    loc = {}
    for si, sg in enumerate(state.subgames):
        for pos, (short, _) in enumerate(sg):
            loc[short] = (si, pos)
    return loc


def replay(play: PlaySequence) -> GameState:
    """Replay a play from the initial state, resolving arc labels to positions.

    Raises IllegalMoveError with the index of the first bad move if a pair
    repeats or its two labels sit in different subgames at its turn.
    """
    state = new_game(play.n)
    for index, arc in enumerate(play.moves):
        i, j = sorted(arc)
        if any(rec.arc_label == arc for rec in state.history):
            raise IllegalMoveError(index, f"arc {i}-{j} repeats an earlier arc")
        loc = locate_labels(state)
        si1, p1 = loc[i]
        si2, p2 = loc[j]
        if si1 != si2:
            raise IllegalMoveError(index, f"labels {i} and {j} lie in different subgames")
        state = apply_move(state, si1, min(p1, p2), max(p1, p2))
    return state


def move_length(n: int, i: int, j: int) -> int:
    """Length of an opening move joining arms i and j on the full circle.

    Returns the clockwise distance from i to j, in 1..n-1; the unordered
    notion is min(m, n - m).  Only meaningful for the first move.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"labels must be in 1..{n}")
    if i == j:
        raise ValueError("a move joins two distinct arms")
    return (j - i) % n


def endstate_signature(state: GameState) -> frozenset:
    """The set of n-1 arc labels of a complete game."""
    if not state.is_complete():
        raise ValueError("state is not complete; some subgame still has two or more arms")
    signature = frozenset(rec.arc_label for rec in state.history)
    assert len(signature) == state.n - 1, "arc labels must be pairwise distinct"
    return signature


# --- text and JSON forms ---------------------------------------------------

_PLAY_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*:\s*(.*?)\s*$")


def play_to_text(play: PlaySequence) -> str:
    body = ",".join("-".join(map(str, sorted(arc))) for arc in play.moves)
    return f"n={play.n}: {body}" if body else f"n={play.n}:"


def play_from_text(text: str) -> PlaySequence:
    m = _PLAY_RE.match(text)
    if not m:
        raise ValueError(f"expected a play of the form 'n=<n>: i-j,i-j,...', got {text!r}")
    n = int(m.group(1))
    body = m.group(2)
    pairs = []
    if body:
        for token in body.split(","):
            parts = token.strip().split("-")
            if len(parts) != 2:
                raise ValueError(f"bad move token {token!r}; expected 'i-j'")
            pairs.append((int(parts[0]), int(parts[1])))
    return PlaySequence.of(n, pairs)


def play_to_json(play: PlaySequence) -> str:
    obj = {"n": play.n, "moves": [sorted(arc) for arc in play.moves]}
    return json.dumps(obj, sort_keys=True)


def play_from_json(text: str) -> PlaySequence:
    obj = json.loads(text)
    return PlaySequence.of(int(obj["n"]), [tuple(pair) for pair in obj["moves"]])


def edges_to_json(n: int, edges) -> str:
    """Canonical JSON for an edge set: pairs sorted ascending, list sorted."""
    pairs = sorted(sorted(e) for e in edges)
    return json.dumps({"n": n, "edges": pairs}, sort_keys=True)


def edges_from_json(text: str):
    obj = json.loads(text)
    return int(obj["n"]), [tuple(sorted(e)) for e in obj["edges"]]
