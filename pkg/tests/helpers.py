"""Shared cached fixtures for the test suite.

Enumerations at a given order are reused by many tests; cache them once per
session.
"""

from functools import lru_cache

from planted_sprouts import enumerate_games, enumerate_noncrossing_trees


@lru_cache(maxsize=None)
def all_plays(n):
    return tuple(enumerate_games(n))


@lru_cache(maxsize=None)
def all_trees(n):
    return tuple(enumerate_noncrossing_trees(n))


def signature_of(play):
    return frozenset(tuple(sorted(arc)) for arc in play.moves)
