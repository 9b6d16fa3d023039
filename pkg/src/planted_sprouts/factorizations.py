"""Play sequences <-> minimal transposition factorizations of the n-cycle.

The k-th move's counterclockwise pair, read as a transposition, turns a
play into a sequence of n-1 transpositions whose product (first move
applied first) is the successor cycle k -> k+1 (mod n).  The map is a
bijection onto all such factorizations, and each transposition determines
the move that produced it, which gives the inverse.

Permutations are plain image tuples: perm[x-1] is the image of x, with n
implied by the length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .game import PlaySequence, apply_move, locate_labels, new_game, replay


def identity_permutation(n: int) -> tuple:
    return tuple(range(1, n + 1))


def successor_cycle(n: int) -> tuple:
    """The cycle k -> k+1 (mod n) as an image tuple."""
    return tuple(k % n + 1 for k in range(1, n + 1))


def compose_in_order(n: int, transpositions) -> tuple:
    """Product applying the first-listed transposition first."""

    def image(x):
        for a, b in transpositions:
            if x == a:
                x = b
            elif x == b:
                x = a
        return x

    return tuple(image(x) for x in range(1, n + 1))


def compose_last_to_first(n: int, transpositions) -> tuple:
    """Product applying the last-listed transposition first."""
    return compose_in_order(n, tuple(reversed(tuple(transpositions))))


def cycle_count(perm: tuple) -> int:
    seen = set()
    count = 0
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        count += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x - 1]
    return count


@dataclass(frozen=True)
class TranspositionSeq:
    """n-1 transpositions whose in-order product is the successor cycle."""

    n: int
    transpositions: tuple  # ordered; each entry (a, b) with a < b

    def __post_init__(self):
        for a, b in self.transpositions:
            if not (1 <= a < b <= self.n):
                raise ValueError(f"transposition ({a},{b}) is not a pair of labels in 1..{self.n}")
        if len(self.transpositions) != self.n - 1:
            raise ValueError(
                f"expected {self.n - 1} transpositions, got {len(self.transpositions)}"
            )
        if compose_in_order(self.n, self.transpositions) != successor_cycle(self.n):
            raise ValueError("in-order product is not the successor cycle")

    @classmethod
    def of(cls, n: int, pairs) -> "TranspositionSeq":
        return cls(n=n, transpositions=tuple(tuple(sorted(p)) for p in pairs))


def game_to_transpositions(play: PlaySequence) -> TranspositionSeq:
    """Counterclockwise pairs of the play's moves, in order."""
    state = replay(play)
    if not state.is_complete():
        raise ValueError("play is not complete")
    pairs = tuple(tuple(sorted(rec.ccw_pair)) for rec in state.history)
    return TranspositionSeq(n=play.n, transpositions=pairs)


def transpositions_to_game(seq: TranspositionSeq) -> PlaySequence:
    """Reconstruct the unique play: each transposition {i', j'} is produced by
    joining the arms immediately clockwise of labels i' and j' in the one
    subgame containing both."""
    state = new_game(seq.n)
    moves = []
    for index, (a, b) in enumerate(seq.transpositions):
        loc = locate_labels(state)
        si1, p1 = loc[a]
        si2, p2 = loc[b]
        if si1 != si2:
            raise ValueError(
                f"transposition {a}:{b} at index {index} acts across different subgames"
            )
        sg = state.subgames[si1]
        m = len(sg)
        q1, q2 = (p1 + 1) % m, (p2 + 1) % m
        moves.append(tuple(sorted((sg[q1][0], sg[q2][0]))))
        state = apply_move(state, si1, min(q1, q2), max(q1, q2))
    return PlaySequence.of(seq.n, moves)


def enumerate_factorizations(n: int):
    """Brute force: all (n-1)-sequences of transpositions whose in-order
    product is the successor cycle.  Candidate space is C(n,2)^(n-1), so keep
    n small (n <= 5 is instant)."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return [TranspositionSeq(1, ())]
    target = successor_cycle(n)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []
    for combo in itertools.product(pairs, repeat=n - 1):
        if compose_in_order(n, combo) == target:
            out.append(TranspositionSeq(n, combo))
    return out


def prefix_cycle_counts(seq: TranspositionSeq):
    """Cycle counts of successor-cycle ∘ t_1 ∘ ... ∘ t_k for k = 0..n-1.

    For a genuine factorization each step adds exactly one cycle, ending at
    the identity's n fixed points.
    """
    rho = successor_cycle(seq.n)
    counts = []
    for k in range(len(seq.transpositions) + 1):
        inner = compose_in_order(seq.n, tuple(reversed(seq.transpositions[:k])))
        perm = tuple(rho[inner[x - 1] - 1] for x in range(1, seq.n + 1))
        counts.append(cycle_count(perm))
    return counts


def arc_label_transpositions(play: PlaySequence) -> tuple:
    """Alternate reading: the arc labels themselves as transpositions.

    Unlike the counterclockwise-pair sequence, this variant multiplies out to
    the successor cycle when composed last-to-first (see
    compose_last_to_first).  Exposed for completeness; the canonical bijection
    uses counterclockwise pairs.
    """
    state = replay(play)
    if not state.is_complete():
        raise ValueError("play is not complete")
    return tuple(tuple(sorted(rec.arc_label)) for rec in state.history)


def seq_to_text(seq: TranspositionSeq) -> str:
    return ",".join(f"{a}:{b}" for a, b in seq.transpositions)


def seq_from_text(n: int, text: str) -> TranspositionSeq:
    body = text.strip()
    pairs = []
    if body:
        for token in body.split(","):
            parts = token.strip().split(":")
            if len(parts) != 2:
                raise ValueError(f"bad transposition token {token!r}; expected 'a:b'")
            pairs.append((int(parts[0]), int(parts[1])))
    return TranspositionSeq.of(n, pairs)
