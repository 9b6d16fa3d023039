"""Core state machine: moves, splitting, labels, replay, serialization."""

import pytest

from planted_sprouts import (
    IllegalMoveError,
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
from planted_sprouts.game import locate_labels

from helpers import all_plays


def shorts(state):
    return [tuple(short for short, _ in sg) for sg in state.subgames]


class TestNewGame:
    def test_order_4(self):
        state = new_game(4)
        assert shorts(state) == [(1, 2, 3, 4)]
        assert state.history == ()
        assert all(long == short for sg in state.subgames for short, long in sg)

    def test_order_1_already_complete(self):
        state = new_game(1)
        assert state.is_complete()
        assert legal_moves(state) == []

    def test_order_3_has_three_first_moves(self):
        assert len(legal_moves(new_game(3))) == 3

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            new_game(0)


class TestLegalMoves:
    def test_initial_order_4(self):
        assert len(legal_moves(new_game(4))) == 6

    def test_after_two_two_split(self):
        state = apply_move(new_game(4), 0, 0, 2)  # join 1 and 3
        assert sorted(map(len, state.subgames)) == [2, 2]
        assert len(legal_moves(state)) == 2

    def test_complete_game_has_none(self):
        for n in (1, 2, 3, 5):
            final = replay(all_plays(n)[0])
            assert legal_moves(final) == []


class TestApplyMove:
    def test_split_order_4(self):
        state = apply_move(new_game(4), 0, 0, 2)
        assert shorts(state) == [(1, 2), (3, 4)]

    def test_split_order_3_ccw_pair(self):
        state = apply_move(new_game(3), 0, 1, 2)  # join 2 and 3
        assert shorts(state) == [(2,), (3, 1)]
        assert state.history[-1].ccw_pair == frozenset({1, 2})

    def test_wraparound_neighbor(self):
        for n in (3, 5, 8):
            state = apply_move(new_game(n), 0, 0, 1)  # join 1 and 2
            assert shorts(state) == [(1,), tuple(range(2, n + 1))]
            assert state.history[-1].ccw_pair == frozenset({n, 1})

    def test_long_labels_record_ancestry(self):
        state = apply_move(new_game(4), 0, 0, 2)
        # new arms carry (old_i, old_j) and (old_j, old_i)
        assert state.subgames[0][0] == (1, (1, 3))
        assert state.subgames[1][0] == (3, (3, 1))

    def test_invalid_positions(self):
        with pytest.raises(ValueError):
            apply_move(new_game(4), 0, 2, 2)
        with pytest.raises(ValueError):
            apply_move(new_game(4), 1, 0, 1)


class TestReplay:
    def test_complete_n3(self):
        state = replay(PlaySequence.of(3, [(1, 2), (2, 3)]))
        assert state.is_complete()
        assert sorted(shorts(state)) == [(1,), (2,), (3,)]

    def test_illegal_second_move(self):
        with pytest.raises(IllegalMoveError) as exc:
            replay(PlaySequence.of(3, [(1, 2), (1, 3)]))
        assert exc.value.index == 1
        assert "different subgames" in exc.value.reason

    def test_repeated_arc(self):
        with pytest.raises(IllegalMoveError) as exc:
            replay(PlaySequence.of(4, [(1, 3), (1, 3)]))
        assert exc.value.index == 1
        assert "repeats" in exc.value.reason

    def test_empty_play_order_1(self):
        assert replay(PlaySequence.of(1, [])).is_complete()


class TestShortOf:
    def test_original(self):
        assert short_of(7) == 7

    def test_nested(self):
        assert short_of(((4, 3), (2, (1, 5)))) == 4

    def test_one_step(self):
        assert short_of((9, ((1, 2), 3))) == 9


class TestMoveLength:
    def test_forward(self):
        assert move_length(5, 2, 4) == 2

    def test_backward_is_complementary(self):
        assert move_length(5, 4, 2) == 3

    def test_adjacent(self):
        assert move_length(4, 1, 2) == 1

    def test_rejects_equal_labels(self):
        with pytest.raises(ValueError):
            move_length(4, 2, 2)


class TestEndstateSignature:
    def test_n3(self):
        state = replay(PlaySequence.of(3, [(1, 2), (2, 3)]))
        assert endstate_signature(state) == {frozenset({1, 2}), frozenset({2, 3})}

    def test_incomplete_rejected(self):
        with pytest.raises(ValueError):
            endstate_signature(new_game(3))

    def test_reversed_order_of_this_play_is_illegal(self):
        # the same arc set played as [{2,3},{1,2}] strands labels 1 and 2
        with pytest.raises(IllegalMoveError):
            replay(PlaySequence.of(3, [(2, 3), (1, 2)]))

    def test_n4_signature_count(self):
        sigs = {endstate_signature(replay(p)) for p in all_plays(4)}
        assert len(all_plays(4)) == 16
        assert len(sigs) == 12


def _cyclically_increasing(labels):
    m = len(labels)
    if m <= 1:
        return True
    descents = sum(1 for k in range(m) if labels[k] > labels[(k + 1) % m])
    return descents <= 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_state_invariants_exhaustive(n):
    for play in all_plays(n):
        state = new_game(n)
        seen_arcs = set()
        for k, arc in enumerate(play.moves):
            loc = locate_labels(state)
            i, j = sorted(arc)
            si, p = loc[i]
            sj, q = loc[j]
            assert si == sj
            state = apply_move(state, si, min(p, q), max(p, q))
            # global label uniqueness and conservation
            labels = [short for sg in state.subgames for short, _ in sg]
            assert sorted(labels) == list(range(1, n + 1))
            # subgame count and arm count after k+1 moves
            assert len(state.subgames) == k + 2
            assert sum(len(sg) for sg in state.subgames) == n
            # cyclic consistency of each subgame
            for sg in state.subgames:
                assert _cyclically_increasing([short for short, _ in sg])
            # no repeated arc labels
            assert state.history[-1].arc_label not in seen_arcs
            seen_arcs.add(state.history[-1].arc_label)
        assert state.is_complete()
        assert len(state.history) == n - 1
        # replaying the history arc labels reproduces the state exactly
        again = replay(PlaySequence(n, tuple(rec.arc_label for rec in state.history)))
        assert again == state


class TestSerialization:
    def test_text_round_trip(self):
        play = PlaySequence.of(4, [(1, 3), (3, 4), (1, 2)])
        assert play_to_text(play) == "n=4: 1-3,3-4,1-2"
        assert play_from_text(play_to_text(play)) == play

    def test_empty_play_text(self):
        play = PlaySequence.of(1, [])
        assert play_from_text(play_to_text(play)) == play

    def test_json_round_trip_and_canonical_pairs(self):
        play = PlaySequence.of(3, [(2, 1), (3, 2)])
        text = play_to_json(play)
        assert '"moves": [[1, 2], [2, 3]]' in text
        assert play_from_json(text) == play

    def test_bad_text_rejected(self):
        with pytest.raises(ValueError):
            play_from_text("1-2,2-3")
        with pytest.raises(ValueError):
            play_from_text("n=3: 1/2")
