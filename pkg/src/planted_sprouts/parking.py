"""Play sequences <-> parking functions of length n-1.

Each move contributes the smaller of the two labels immediately
counterclockwise of the joined arms, read inside the subgame the move was
made in.  The resulting value sequences are exactly the parking functions,
and the map is invertible move by move.
"""

from __future__ import annotations

from dataclasses import dataclass

from .game import PlaySequence, replay


def is_parking_function(n: int, values) -> bool:
    """Length n-1, entries in 1..n-1, and sorted entries satisfy a'_k <= k."""
    values = tuple(values)
    if len(values) != n - 1:
        return False
    if not all(isinstance(v, int) and 1 <= v <= n - 1 for v in values):
        return False
    return all(v <= k + 1 for k, v in enumerate(sorted(values)))


@dataclass(frozen=True)
class ParkingFunction:
    n: int
    values: tuple

    def __post_init__(self):
        if not is_parking_function(self.n, self.values):
            raise ValueError(f"not a parking function of length {self.n - 1}: {self.values}")


def game_to_parking(play: PlaySequence) -> ParkingFunction:
    """The k-th value is the min of the k-th move's counterclockwise pair."""
    state = replay(play)
    if not state.is_complete():
        raise ValueError("play is not complete")
    values = tuple(min(rec.ccw_pair) for rec in state.history)
    return ParkingFunction(n=play.n, values=values)


def _realize(labels, values):
    """Moves of the unique play of the subgame with the given label set
    (sorted ascending) realizing the given value subsequence (raw labels).

    Works in rank space: a subgame is isomorphic to a fresh game on its
    labels' cyclic ranks.  The first move joins the arm ranked one above
    the first value to the first arm j (scanning clockwise, wrapping to
    rank 1) at which the running count of values falling strictly inside
    the would-be first subgame matches its size.
    """
    m = len(labels)
    if m <= 1:
        return []
    rank = {v: k + 1 for k, v in enumerate(labels)}
    a1 = rank[values[0]]
    rest = [rank[v] for v in values[1:]]
    jj = None
    for cand in range(a1 + 2, m + 2):
        inside_count = sum(1 for v in rest if a1 + 1 <= v <= cand - 1)
        if inside_count == cand - a1 - 2:
            jj = cand
            break
    if jj is None:
        raise ValueError("values do not split into per-subgame parking sequences")
    arm_j = labels[0] if jj == m + 1 else labels[jj - 1]
    first = (labels[a1], arm_j)
    side_a = labels[a1 : jj - 1]
    side_b = labels[:a1] + labels[jj - 1 :]
    inside = set(range(a1 + 1, jj))
    vals_a = [labels[v - 1] for v in rest if v in inside]
    vals_b = [labels[v - 1] for v in rest if v not in inside]
    moves_a = _realize(side_a, vals_a)
    moves_b = _realize(side_b, vals_b)
    out = [first]
    ia = ib = 0
    for v in rest:
        if v in inside:
            out.append(moves_a[ia])
            ia += 1
        else:
            out.append(moves_b[ib])
            ib += 1
    return out


def parking_to_game(pf: ParkingFunction) -> PlaySequence:
    """The unique play whose parking values are the given function."""
    moves = _realize(tuple(range(1, pf.n + 1)), list(pf.values))
    return PlaySequence.of(pf.n, moves)


def parking_to_text(pf: ParkingFunction) -> str:
    return ",".join(map(str, pf.values))


def parking_from_text(n: int, text: str) -> ParkingFunction:
    body = text.strip()
    values = tuple(int(tok) for tok in body.split(",")) if body else ()
    return ParkingFunction(n=n, values=values)
