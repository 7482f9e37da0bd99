"""Exact dimension and codimension of simple games, with witness parts.

The dimension of a game is the least k for which the game is an intersection
of k weighted majority games; the codimension is the least k for a union.
Both reduce to a minimum-partition problem over the extremal coalitions:

* dimension   - partition the maximal losing coalitions into the fewest
  blocks B for which one weighted game wins on every minimal winning
  coalition and loses on all of B (``co_realizable``);
* codimension - partition the minimal winning coalitions into the fewest
  blocks A for which one weighted game loses on every maximal losing
  coalition and wins on all of A (``realizable``).

Block feasibility is an exact rational LP and is downward closed, so a
minimum cover can be assumed to be a partition.  The search memoises the
oracle over target-subset bitmasks, seeds a clique lower bound and a greedy
upper bound from the pairwise-incompatibility graph, and when the two
disagree first tries to enumerate the whole feasible-block family (the
enumeration is complete on desk-scale instances and turns the problem into
an exact minimum set cover); an iterative-deepening partition search remains
as the fallback when enumeration would be too large.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Callable, Iterable, Sequence

from . import lp as _lp
from .core import (
    INTERSECTION,
    UNION,
    WEIGHTED,
    Coalition,
    InvalidGameError,
    SimpleGame,
    SizeLimitError,
    WeightedGame,
    combine,
)
from .structure import equivalent, extremal_sets, maximal_losing, minimal_winning

COVER_MAX = 32

# Gates for the feasible-block enumeration between the greedy bounds and the
# deepening fallback.
_EXPLORE_SOLVE_BUDGET = 20_000
_EXPLORE_BLOCK_CAP = 100_000
_COVER_DP_MAX_TARGETS = 18


@dataclass(frozen=True)
class DimensionWitness:
    """An exact dimension or codimension value with realising weighted parts."""

    value: int
    parts: tuple[WeightedGame, ...]
    kind: str

    def as_game(self) -> SimpleGame:
        return combine(self.kind, self.parts)


class SeparabilityOracleCache:
    """Memoised block-feasibility oracle keyed by target-subset bitmasks.

    Feasibility is downward closed: a cached infeasible subset settles every
    superset, and the witness of a cached feasible superset is reused for
    every subset.  Writers recompute identical values, so concurrent use only
    needs last-write-wins dictionary semantics.
    """

    def __init__(self, solver: Callable[[int], WeightedGame | None]):
        self._solver = solver
        self._results: dict[int, WeightedGame | None] = {}
        self._feasible: list[tuple[int, WeightedGame]] = []
        self._infeasible: list[int] = []
        self.lp_solves = 0

    def query(self, mask: int) -> WeightedGame | None:
        try:
            return self._results[mask]
        except KeyError:
            pass
        outcome: WeightedGame | None = None
        known = False
        for fmask, witness in self._feasible:
            if mask & ~fmask == 0:
                outcome, known = witness, True
                break
        if not known:
            for imask in self._infeasible:
                if imask & ~mask == 0:
                    known = True
                    break
        if not known:
            outcome = self._solver(mask)
            self.lp_solves += 1
            if outcome is None:
                self._infeasible.append(mask)
            else:
                self._feasible.append((mask, outcome))
        self._results[mask] = outcome
        return outcome


def _player_row(mask: int, n: int, quota_coeff) -> list:
    row = [1 if mask >> (j + 1) & 1 else 0 for j in range(n)]
    row.append(quota_coeff)
    return row


def _separation_lp(
    n: int, win_masks: Sequence[int], lose_masks: Sequence[int], require_grand: bool
) -> _lp.LinearProgram:
    """Feasibility system for a weighted game [q; w] over variables w_1..w_n, q."""
    rows = []
    for m in win_masks:
        rows.append(_lp.Constraint(_player_row(m, n, -1), _lp.GE, 0))
    for m in lose_masks:
        rows.append(_lp.Constraint(_player_row(m, n, -1), _lp.LE, -1))
    rows.append(_lp.Constraint((0,) * n + (1,), _lp.GE, 1))
    if require_grand:
        rows.append(_lp.Constraint((1,) * n + (-1,), _lp.GE, 0))
    return _lp.LinearProgram(n + 1, tuple(rows), frozenset(range(n + 1)))


def _integer_game(assignment: Sequence, n: int) -> WeightedGame:
    scale = lcm(*(int(v.denominator) for v in assignment))
    values = [int(v * scale) for v in assignment]
    shrink = gcd(*values)
    if shrink > 1:
        values = [v // shrink for v in values]
    return WeightedGame(values[n], values[:n])


def _solve_separation(
    n: int, win_masks: Sequence[int], lose_masks: Sequence[int], require_grand: bool
) -> WeightedGame | None:
    program = _separation_lp(n, win_masks, lose_masks, require_grand)
    result = _lp.solve_feasibility(program)
    if not result.feasible:
        return None
    game = _integer_game(result.assignment, n)
    for m in win_masks:
        if game._weight_of_mask(m) < game.quota:
            raise _lp.CertificateError("scaled weighted game misses a winning constraint")
    for m in lose_masks:
        if game._weight_of_mask(m) > game.quota - 1:
            raise _lp.CertificateError("scaled weighted game misses a losing constraint")
    return game


def _coalition_masks(coalitions: Iterable[Coalition], n: int, label: str) -> list[int]:
    masks = []
    for c in coalitions:
        if c.n != n:
            raise InvalidGameError(f"{label} coalition over {c.n} players, expected {n}")
        masks.append(c.members)
    return masks


def co_realizable(
    mwc: Sequence[Coalition], targets: Iterable[Coalition]
) -> WeightedGame | None:
    """Weighted game winning on all of ``mwc`` and losing on all of ``targets``.

    ``mwc`` must be the minimal winning antichain of the game under study and
    ``targets`` a subset of its maximal losing coalitions.  Returns an
    integer representation obtained from the exact LP certificate, or None
    when the rational system is infeasible.
    """
    mwc = tuple(mwc)
    if not mwc:
        raise InvalidGameError("need at least one minimal winning coalition")
    n = mwc[0].n
    return _solve_separation(
        n, _coalition_masks(mwc, n, "winning"), _coalition_masks(targets, n, "losing"), False
    )


def realizable(
    mlc: Sequence[Coalition], targets: Iterable[Coalition]
) -> WeightedGame | None:
    """Weighted game losing on all of ``mlc`` and winning on all of ``targets``.

    The mirror of :func:`co_realizable` for union factors: ``mlc`` is the
    maximal losing antichain, ``targets`` a subset of the minimal winning
    coalitions.  The grand coalition is constrained to win so the empty
    target set still yields a valid weighted game.
    """
    mlc = tuple(mlc)
    if not mlc:
        raise InvalidGameError("need at least one maximal losing coalition")
    n = mlc[0].n
    return _solve_separation(
        n, _coalition_masks(targets, n, "winning"), _coalition_masks(mlc, n, "losing"), True
    )


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_clique(vertices: Sequence[int], adj: Sequence[int]) -> list[int]:
    clique: list[int] = []
    for v in vertices:
        if all(adj[v] >> u & 1 for u in clique):
            clique.append(v)
    return clique


def _explore_feasible_blocks(
    count: int, cache: SeparabilityOracleCache, adj: Sequence[int], pairs: list[int]
) -> set[int] | None:
    """Every feasible block as a target mask, or None if the family is too big.

    Blocks are grown one index at a time above their highest member; downward
    closure guarantees every feasible block is reached this way.
    """
    start_solves = cache.lp_solves
    blocks: set[int] = {1 << i for i in range(count)}
    frontier = pairs
    blocks.update(frontier)
    while frontier:
        next_frontier: list[int] = []
        seen: set[int] = set()
        for bm in frontier:
            top = bm.bit_length() - 1
            for v in range(top + 1, count):
                if adj[v] & bm:
                    continue
                cand = bm | (1 << v)
                if cand in seen:
                    continue
                seen.add(cand)
                if cache.lp_solves - start_solves > _EXPLORE_SOLVE_BUDGET:
                    return None
                if cache.query(cand) is not None:
                    next_frontier.append(cand)
        blocks.update(next_frontier)
        if len(blocks) > _EXPLORE_BLOCK_CAP:
            return None
        frontier = next_frontier
    return blocks


def _maximal_blocks(count: int, blocks: set[int], adj: Sequence[int]) -> list[int]:
    maximal = []
    for bm in blocks:
        extendable = False
        for v in range(count):
            if bm >> v & 1 or adj[v] & bm:
                continue
            if bm | (1 << v) in blocks:
                extendable = True
                break
        if not extendable:
            maximal.append(bm)
    return sorted(maximal)


def _min_cover_dp(count: int, blocks: list[int]) -> list[int]:
    """Exact minimum cover of all ``count`` indices by the given blocks."""
    full = (1 << count) - 1
    by_element: list[list[int]] = [[] for _ in range(count)]
    for bm in blocks:
        for v in _iter_bits(bm):
            by_element[v].append(bm)
    size = count + 1
    best = [size] * (full + 1)
    parent: dict[int, tuple[int, int]] = {}
    best[0] = 0
    for covered in range(full + 1):
        used = best[covered]
        if used >= size or covered == full:
            continue
        free = (~covered) & full
        element = (free & -free).bit_length() - 1
        for bm in by_element[element]:
            merged = covered | bm
            if used + 1 < best[merged]:
                best[merged] = used + 1
                parent[merged] = (covered, bm)
    chosen = []
    at = full
    while at:
        at, bm = parent[at]
        chosen.append(bm)
    return chosen


def _min_cover_branch_bound(
    count: int, blocks: list[int], upper: list[int]
) -> list[int]:
    """Branch-and-bound minimum cover for target counts beyond the DP range."""
    by_element: list[list[int]] = [[] for _ in range(count)]
    for bm in blocks:
        for v in _iter_bits(bm):
            by_element[v].append(bm)
    for cands in by_element:
        cands.sort(key=lambda bm: -bm.bit_count())
    max_size = max(bm.bit_count() for bm in blocks)
    full = (1 << count) - 1
    best = list(upper)

    def descend(covered: int, chosen: list[int]) -> None:
        nonlocal best
        if covered == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        remaining = full & ~covered
        bound = len(chosen) + -(-remaining.bit_count() // max_size)
        if bound >= len(best):
            return
        element = min(
            _iter_bits(remaining), key=lambda v: sum(1 for b in by_element[v] if b & ~covered)
        )
        for bm in by_element[element]:
            chosen.append(bm)
            descend(covered | bm, chosen)
            chosen.pop()

    descend(0, [])
    return best


def _cover_to_partition(count: int, cover: list[int]) -> list[int]:
    taken = 0
    partition = []
    for bm in cover:
        reduced = bm & ~taken
        if reduced:
            partition.append(reduced)
            taken |= reduced
    if taken != (1 << count) - 1:
        raise RuntimeError("internal error: cover does not reach every target")
    return partition


def _deepening_search(
    count: int,
    cache: SeparabilityOracleCache,
    adj: Sequence[int],
    order: Sequence[int],
    lower: int,
    upper_blocks: list[int],
) -> list[int]:
    """Iterative-deepening partition search between the greedy bounds."""

    def attempt(limit: int) -> list[int] | None:
        blocks: list[int] = []

        def extend(pos: int) -> bool:
            if pos == count:
                return True
            # Every unplaced target must still have a compatible home.
            stuck = [
                w
                for w in order[pos:]
                if all(adj[w] & bm for bm in blocks)
            ]
            if stuck and len(blocks) + len(_greedy_clique(stuck, adj)) > limit:
                return False
            v = order[pos]
            vbit = 1 << v
            for i, bm in enumerate(blocks):
                if adj[v] & bm:
                    continue
                if cache.query(bm | vbit) is not None:
                    blocks[i] = bm | vbit
                    if extend(pos + 1):
                        return True
                    blocks[i] = bm
            if len(blocks) < limit:
                blocks.append(vbit)
                if extend(pos + 1):
                    return True
                blocks.pop()
            return False

        return list(blocks) if extend(0) else None

    for limit in range(lower, len(upper_blocks)):
        found = attempt(limit)
        if found is not None:
            return found
    return upper_blocks


def _minimum_partition(count: int, cache: SeparabilityOracleCache) -> list[int]:
    """Minimum-cardinality partition of target indices into feasible blocks."""
    full = (1 << count) - 1
    if cache.query(full) is not None:
        return [full]
    for i in range(count):
        if cache.query(1 << i) is None:
            raise RuntimeError("internal error: a singleton target block is infeasible")

    adj = [0] * count
    pairs = []
    for i in range(count):
        for j in range(i + 1, count):
            pair = (1 << i) | (1 << j)
            if cache.query(pair) is None:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            else:
                pairs.append(pair)

    by_degree = sorted(range(count), key=lambda v: (-adj[v].bit_count(), v))
    clique = _greedy_clique(by_degree, adj)
    lower = max(1, len(clique))
    in_clique = set(clique)
    order = clique + [v for v in by_degree if v not in in_clique]

    greedy: list[int] = []
    for v in order:
        vbit = 1 << v
        for i, bm in enumerate(greedy):
            if not adj[v] & bm and cache.query(bm | vbit) is not None:
                greedy[i] = bm | vbit
                break
        else:
            greedy.append(vbit)
    if len(greedy) == lower:
        return greedy

    blocks = _explore_feasible_blocks(count, cache, adj, pairs)
    if blocks is not None:
        largest = max(bm.bit_count() for bm in blocks)
        lower = max(lower, -(-count // largest))
        if len(greedy) == lower:
            return greedy
        maximal = _maximal_blocks(count, blocks, adj)
        if count <= _COVER_DP_MAX_TARGETS:
            cover = _min_cover_dp(count, maximal)
        else:
            cover = _min_cover_branch_bound(count, maximal, greedy)
        return _cover_to_partition(count, cover)

    return _deepening_search(count, cache, adj, order, lower, greedy)


def _witnessed_partition(
    game: SimpleGame,
    targets: Sequence[Coalition],
    solver: Callable[[int], WeightedGame | None],
    kind: str,
) -> DimensionWitness:
    if len(targets) > COVER_MAX:
        raise SizeLimitError(
            f"{len(targets)} separation targets exceed the solver cap of {COVER_MAX}"
        )
    cache = SeparabilityOracleCache(solver)
    partition = _minimum_partition(len(targets), cache)
    parts = tuple(cache.query(bm) for bm in partition)
    witness = DimensionWitness(len(parts), parts, kind)
    if not equivalent(witness.as_game(), game):
        raise RuntimeError("internal error: witness parts do not recombine to the game")
    return witness


def dimension(game: SimpleGame) -> DimensionWitness:
    """Least k with the game an intersection of k weighted games, plus parts."""
    if game.form == WEIGHTED:
        return DimensionWitness(1, game.parts, INTERSECTION)
    sets = extremal_sets(game)
    win_masks = [c.members for c in sets.minimal_winning]
    target_masks = [c.members for c in sets.maximal_losing]

    def solver(mask: int) -> WeightedGame | None:
        lose = [target_masks[i] for i in _iter_bits(mask)]
        return _solve_separation(game.n, win_masks, lose, False)

    return _witnessed_partition(game, sets.maximal_losing, solver, INTERSECTION)


def codimension(game: SimpleGame) -> DimensionWitness:
    """Least k with the game a union of k weighted games, plus parts.

    Computed directly on the minimal winning coalitions with the union-factor
    oracle; the dual identity dim(game) = codim(dual) is then a checkable
    property rather than the implementation path.
    """
    if game.form == WEIGHTED:
        return DimensionWitness(1, game.parts, UNION)
    sets = extremal_sets(game)
    lose_masks = [c.members for c in sets.maximal_losing]
    target_masks = [c.members for c in sets.minimal_winning]

    def solver(mask: int) -> WeightedGame | None:
        win = [target_masks[i] for i in _iter_bits(mask)]
        return _solve_separation(game.n, win, lose_masks, True)

    return _witnessed_partition(game, sets.minimal_winning, solver, UNION)


def is_weighted(game: SimpleGame) -> WeightedGame | None:
    """An integer weighted representation of the game, or None if none exists."""
    sets = extremal_sets(game)
    return co_realizable(sets.minimal_winning, sets.maximal_losing)


def canonical_intersection(game: SimpleGame) -> list[WeightedGame]:
    """One quota-1 part per maximal losing coalition (zero weights inside it)."""
    parts = []
    for losing in maximal_losing(game):
        weights = [0 if j in losing else 1 for j in range(1, game.n + 1)]
        parts.append(WeightedGame(1, weights))
    return parts


def canonical_union(game: SimpleGame) -> list[WeightedGame]:
    """One unanimity-style part per minimal winning coalition."""
    parts = []
    for winning in minimal_winning(game):
        weights = [1 if j in winning else 0 for j in range(1, game.n + 1)]
        parts.append(WeightedGame(winning.size, weights))
    return parts


def convert(game: SimpleGame, to: str, mode: str = "canonical") -> list[WeightedGame]:
    """Intersection or union representation, canonical (antichain-sized) or minimal."""
    if to not in (INTERSECTION, UNION):
        raise InvalidGameError(f"conversion target must be intersection or union, got {to!r}")
    if mode == "canonical":
        return canonical_intersection(game) if to == INTERSECTION else canonical_union(game)
    if mode == "minimal":
        witness = dimension(game) if to == INTERSECTION else codimension(game)
        return list(witness.parts)
    raise InvalidGameError(f"conversion mode must be canonical or minimal, got {mode!r}")
