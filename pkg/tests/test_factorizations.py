"""Play <-> cycle factorization bijection."""

import pytest

from planted_sprouts import (
    PlaySequence,
    TranspositionSeq,
    compose_in_order,
    enumerate_factorizations,
    game_to_transpositions,
    successor_cycle,
    transpositions_to_game,
)
from planted_sprouts.factorizations import (
    arc_label_transpositions,
    compose_last_to_first,
    cycle_count,
    identity_permutation,
    prefix_cycle_counts,
    seq_from_text,
    seq_to_text,
)

from helpers import all_plays


class TestCompose:
    def test_hand_example(self):
        assert compose_in_order(3, [(1, 3), (2, 3)]) == (2, 3, 1)

    def test_empty_product_is_identity(self):
        assert compose_in_order(1, []) == identity_permutation(1) == (1,)

    def test_two_elements(self):
        assert compose_in_order(2, [(1, 2)]) == successor_cycle(2) == (2, 1)

    def test_cycle_count(self):
        assert cycle_count((2, 3, 1)) == 1
        assert cycle_count((1, 3, 2)) == 2
        assert cycle_count(identity_permutation(4)) == 4


class TestTranspositionSeq:
    def test_validates_product(self):
        with pytest.raises(ValueError):
            TranspositionSeq.of(3, [(1, 2), (1, 2)])

    def test_rejects_out_of_range_labels(self):
        with pytest.raises(ValueError):
            TranspositionSeq.of(3, [(1, 4), (2, 3)])

    def test_text_round_trip(self):
        seq = TranspositionSeq.of(3, [(1, 3), (2, 3)])
        assert seq_to_text(seq) == "1:3,2:3"
        assert seq_from_text(3, "1:3,2:3") == seq


class TestGameToTranspositions:
    def test_hand_example(self):
        play = PlaySequence.of(3, [(1, 2), (2, 3)])
        assert game_to_transpositions(play).transpositions == ((1, 3), (2, 3))

    def test_order_2(self):
        play = PlaySequence.of(2, [(1, 2)])
        assert game_to_transpositions(play).transpositions == ((1, 2),)

    def test_n3_image_is_all_factorizations(self):
        image = {game_to_transpositions(p).transpositions for p in all_plays(3)}
        brute = {seq.transpositions for seq in enumerate_factorizations(3)}
        assert len(image) == 3
        assert image == brute

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_products_are_the_successor_cycle(self, n):
        target = successor_cycle(n)
        for play in all_plays(n):
            seq = game_to_transpositions(play)
            assert compose_in_order(n, seq.transpositions) == target


class TestTranspositionsToGame:
    def test_hand_inverse(self):
        seq = TranspositionSeq.of(3, [(2, 3), (1, 2)])
        assert transpositions_to_game(seq) == PlaySequence.of(3, [(1, 3), (1, 2)])

    def test_order_2(self):
        seq = TranspositionSeq.of(2, [(1, 2)])
        assert transpositions_to_game(seq) == PlaySequence.of(2, [(1, 2)])

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_round_trip_both_directions(self, n):
        for play in all_plays(n):
            assert transpositions_to_game(game_to_transpositions(play)) == play
        for seq in enumerate_factorizations(n):
            assert game_to_transpositions(transpositions_to_game(seq)) == seq


class TestEnumerateFactorizations:
    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)])
    def test_counts(self, n, expected):
        assert len(enumerate_factorizations(n)) == expected

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_bijection_at_desk_scale(self, n):
        image = {game_to_transpositions(p).transpositions for p in all_plays(n)}
        brute = {seq.transpositions for seq in enumerate_factorizations(n)}
        assert len(image) == len(all_plays(n))
        assert image == brute


class TestProperties:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_each_prefix_adds_one_cycle(self, n):
        for play in all_plays(n):
            counts = prefix_cycle_counts(game_to_transpositions(play))
            assert counts == list(range(1, n + 1))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_conjugation_closure(self, n):
        brute = {seq.transpositions for seq in enumerate_factorizations(n)}
        shifted = {
            tuple(tuple(sorted((a % n + 1, b % n + 1))) for a, b in seq) for seq in brute
        }
        assert shifted == brute

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_arc_label_variant_composes_in_reverse(self, n):
        # the arc labels themselves also factor the cycle, but with the
        # last-listed transposition applied first
        target = successor_cycle(n)
        for play in all_plays(n):
            arcs = arc_label_transpositions(play)
            assert compose_last_to_first(n, arcs) == target
