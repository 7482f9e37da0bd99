"""Extremal coalitions, dual games, and equivalence of simple games.

The enumeration oracle walks all 2^n coalitions through the cached truth
table.  Because every representable game is monotone, a winning coalition is
minimal exactly when dropping any single member makes it lose, and a losing
coalition is maximal exactly when adding any single absent player makes it
win; both tests are vectorised over the table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    EXPLICIT,
    INTERSECTION,
    MINIMAL_GIVEN,
    UNION,
    WEIGHTED,
    Coalition,
    SimpleGame,
    WeightedGame,
    combine,
    make_explicit,
)


@dataclass(frozen=True)
class ExtremalSets:
    """Minimal winning and maximal losing antichains of one game."""

    minimal_winning: tuple[Coalition, ...]
    maximal_losing: tuple[Coalition, ...]


def _boundary_masks(game: SimpleGame) -> tuple[np.ndarray, np.ndarray]:
    table = game.truth_table
    n = game.n
    is_min = table.copy()
    is_max = ~table
    for j in range(n):
        # Axis view pairing each coalition with its bit-j neighbour.
        shape = (-1, 2, 1 << j)
        with_j = table.reshape(shape)[:, 1, :]
        without_j = table.reshape(shape)[:, 0, :]
        is_min.reshape(shape)[:, 1, :] &= ~without_j
        is_max.reshape(shape)[:, 0, :] &= with_j
    return np.nonzero(is_min)[0], np.nonzero(is_max)[0]


def minimal_winning(game: SimpleGame) -> tuple[Coalition, ...]:
    """Antichain of winning coalitions all of whose proper subsets lose."""
    mins, _ = _boundary_masks(game)
    return tuple(Coalition(int(m) << 1, game.n) for m in mins)


def maximal_losing(game: SimpleGame) -> tuple[Coalition, ...]:
    """Antichain of losing coalitions all of whose proper supersets win."""
    _, maxs = _boundary_masks(game)
    return tuple(Coalition(int(m) << 1, game.n) for m in maxs)


def extremal_sets(game: SimpleGame) -> ExtremalSets:
    mins, maxs = _boundary_masks(game)
    return ExtremalSets(
        tuple(Coalition(int(m) << 1, game.n) for m in mins),
        tuple(Coalition(int(m) << 1, game.n) for m in maxs),
    )


def dual_weighted(part: WeightedGame) -> WeightedGame:
    """Dual of [q; w] is [w(N) - q + 1; w]."""
    return WeightedGame(sum(part.weights) - part.quota + 1, part.weights)


def dual(game: SimpleGame) -> SimpleGame:
    """The game in which S wins iff the complement of S loses in ``game``.

    The result keeps a form matched to the input: weighted parts dualise by
    the quota flip above in a single pass, intersections become unions of the
    part duals (and vice versa), and an explicit game maps to the complements
    of its maximal losing coalitions.
    """
    if game.form == WEIGHTED:
        return SimpleGame.from_weighted(dual_weighted(game.parts[0]))
    if game.form == INTERSECTION:
        return combine(UNION, [dual_weighted(p) for p in game.parts])
    if game.form == UNION:
        return combine(INTERSECTION, [dual_weighted(p) for p in game.parts])
    losing = maximal_losing(game)
    return make_explicit(game.n, [c.complement() for c in losing], MINIMAL_GIVEN)


def equivalent(g1: SimpleGame, g2: SimpleGame) -> bool:
    """True iff both games have the same players and the same winning family."""
    if g1.n != g2.n:
        return False
    if g1.form == EXPLICIT and g2.form == EXPLICIT:
        return g1.antichain == g2.antichain
    return bool(np.array_equal(g1.truth_table, g2.truth_table))


def is_self_dual(game: SimpleGame) -> bool:
    return equivalent(game, dual(game))
