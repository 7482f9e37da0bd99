"""Coalitions, weighted majority games, and simple games.

Players are numbered 1..n.  A coalition is a bitmask in which bit j is set
exactly when player j belongs to the coalition; bit 0 is never used.  A
simple game stores one of four representations of a monotone winning family:

* ``explicit``      - the antichain of minimal winning coalitions,
* ``weighted``      - a single weighted majority game [q; w_1..w_n],
* ``intersection``  - a coalition wins iff it wins in every listed part,
* ``union``         - a coalition wins iff it wins in some listed part.

Every constructible game is proper: the empty coalition loses and the grand
coalition wins.  All types are immutable; the per-game truth table is built
lazily and cached (recomputation is harmless, so concurrent sharing is safe).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from operator import index as as_int
from typing import Iterable, Sequence

import numpy as np

N_MAX = 24

EXPLICIT = "explicit"
WEIGHTED = "weighted"
INTERSECTION = "intersection"
UNION = "union"
FORMS = (EXPLICIT, WEIGHTED, INTERSECTION, UNION)

MINIMAL_GIVEN = "minimal-given"
ARBITRARY_WINNING = "arbitrary-winning"


class InvalidGameError(ValueError):
    """A coalition or game violates a structural invariant."""


class SizeLimitError(InvalidGameError):
    """An operation was refused because an instance exceeds a size cap."""


def full_mask(n: int) -> int:
    """Bitmask of the grand coalition over players 1..n."""
    return ((1 << n) - 1) << 1


@dataclass(frozen=True)
class Coalition:
    """A subset of the players 1..n, encoded as a bitmask (bit j = player j)."""

    members: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise InvalidGameError(f"player count must be in 1..{N_MAX}, got {self.n}")
        if self.members & 1:
            raise InvalidGameError("bit 0 is unused; players are numbered from 1")
        if self.members & ~full_mask(self.n):
            raise InvalidGameError(f"coalition has members outside players 1..{self.n}")

    @classmethod
    def from_players(cls, players: Iterable[int], n: int) -> "Coalition":
        mask = 0
        for j in players:
            j = as_int(j)
            if not 1 <= j <= n:
                raise InvalidGameError(f"player {j} outside 1..{n}")
            mask |= 1 << j
        return cls(mask, n)

    @classmethod
    def from_bitstring(cls, bits: str, n: int | None = None) -> "Coalition":
        """Parse a left-to-right bitstring whose first character is player 1."""
        if n is None:
            n = len(bits)
        if len(bits) != n:
            raise InvalidGameError(f"bitstring length {len(bits)} != player count {n}")
        mask = 0
        for k, ch in enumerate(bits):
            if ch == "1":
                mask |= 1 << (k + 1)
            elif ch != "0":
                raise InvalidGameError(f"bitstring may contain only 0 and 1, got {ch!r}")
        return cls(mask, n)

    @classmethod
    def empty(cls, n: int) -> "Coalition":
        return cls(0, n)

    @classmethod
    def grand(cls, n: int) -> "Coalition":
        return cls(full_mask(n), n)

    @property
    def players(self) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.n + 1) if self.members >> j & 1)

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def __contains__(self, player: int) -> bool:
        return 1 <= player <= self.n and bool(self.members >> player & 1)

    def __iter__(self):
        return iter(self.players)

    def issubset(self, other: "Coalition") -> bool:
        self._check_same_n(other)
        return self.members & ~other.members == 0

    def complement(self) -> "Coalition":
        return Coalition(full_mask(self.n) ^ self.members, self.n)

    def union(self, other: "Coalition") -> "Coalition":
        self._check_same_n(other)
        return Coalition(self.members | other.members, self.n)

    def bitstring(self) -> str:
        return "".join("1" if j in self else "0" for j in range(1, self.n + 1))

    def _check_same_n(self, other: "Coalition") -> None:
        if self.n != other.n:
            raise InvalidGameError(f"player counts differ: {self.n} vs {other.n}")

    def __repr__(self) -> str:
        return f"Coalition({{{', '.join(map(str, self.players))}}}, n={self.n})"


@dataclass(frozen=True)
class WeightedGame:
    """A weighted majority game [quota; w_1..w_n] with integer entries.

    A coalition S wins iff the total weight of its members is at least the
    quota.  The invariants quota >= 1 and w(N) >= quota guarantee that the
    empty coalition loses and the grand coalition wins.
    """

    quota: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "quota", as_int(self.quota))
        object.__setattr__(self, "weights", tuple(as_int(w) for w in self.weights))
        if not 1 <= len(self.weights) <= N_MAX:
            raise InvalidGameError(f"need 1..{N_MAX} weights, got {len(self.weights)}")
        if self.quota < 1:
            raise InvalidGameError("quota must be at least 1 (the empty coalition loses)")
        if any(w < 0 for w in self.weights):
            raise InvalidGameError("weights must be nonnegative")
        if sum(self.weights) < self.quota:
            raise InvalidGameError("total weight below quota (the grand coalition must win)")

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight(self, coalition: Coalition) -> int:
        if coalition.n != self.n:
            raise InvalidGameError(f"player counts differ: {coalition.n} vs {self.n}")
        return self._weight_of_mask(coalition.members)

    def wins(self, coalition: Coalition) -> bool:
        return self.weight(coalition) >= self.quota

    def _weight_of_mask(self, mask: int) -> int:
        total = 0
        m = mask >> 1
        j = 0
        while m:
            if m & 1:
                total += self.weights[j]
            m >>= 1
            j += 1
        return total

    def __repr__(self) -> str:
        return f"[{self.quota}; {', '.join(map(str, self.weights))}]"


def _subset_weight_table(weights: Sequence[int]) -> np.ndarray:
    """Vector of coalition weights indexed by compact mask (bit j-1 = player j)."""
    if sum(weights) < 2**62:
        table = np.zeros(1, dtype=np.int64)
        for wj in weights:
            table = np.concatenate([table, table + np.int64(wj)])
        return table
    # Huge weights: fall back to exact Python integers.
    values: list[int] = [0]
    for wj in weights:
        values.extend(v + wj for v in list(values))
    return np.array(values, dtype=object)


@dataclass(frozen=True)
class SimpleGame:
    """A simple game over players 1..n in one of the four representation forms.

    ``antichain`` is populated for the explicit form only and holds the
    minimal winning coalitions sorted ascending by mask; ``parts`` is
    populated for the weighted (exactly one part), intersection, and union
    forms.  Dataclass equality is structural; use :func:`gamedim.structure.
    equivalent` to compare winning families across forms.
    """

    n: int
    form: str
    antichain: tuple[Coalition, ...] = ()
    parts: tuple[WeightedGame, ...] = ()

    def __post_init__(self) -> None:
        if not 1 <= self.n <= N_MAX:
            raise InvalidGameError(f"player count must be in 1..{N_MAX}, got {self.n}")
        if self.form not in FORMS:
            raise InvalidGameError(f"unknown form {self.form!r}")
        if self.form == EXPLICIT:
            if self.parts:
                raise InvalidGameError("explicit form takes no weighted parts")
            object.__setattr__(
                self, "antichain", tuple(sorted(self.antichain, key=lambda c: c.members))
            )
            self._check_antichain()
        else:
            if self.antichain:
                raise InvalidGameError(f"{self.form} form takes no explicit coalitions")
            object.__setattr__(self, "parts", tuple(self.parts))
            if not self.parts:
                raise InvalidGameError(f"{self.form} form needs at least one part")
            if self.form == WEIGHTED and len(self.parts) != 1:
                raise InvalidGameError("weighted form takes exactly one part")
            for part in self.parts:
                if part.n != self.n:
                    raise InvalidGameError(
                        f"part has {part.n} players, game has {self.n}"
                    )

    def _check_antichain(self) -> None:
        coalitions = self.antichain
        if not coalitions:
            raise InvalidGameError("explicit form needs at least one winning coalition")
        for c in coalitions:
            if c.n != self.n:
                raise InvalidGameError(f"coalition over {c.n} players, game has {self.n}")
            if c.members == 0:
                raise InvalidGameError("the empty coalition cannot be winning")
        masks = [c.members for c in coalitions]
        for i, mi in enumerate(masks):
            for mj in masks[i + 1 :]:
                if mi & ~mj == 0 or mj & ~mi == 0:
                    raise InvalidGameError(
                        "winning coalitions must form an antichain "
                        f"({Coalition(mi, self.n)} and {Coalition(mj, self.n)} are comparable)"
                    )

    @classmethod
    def from_weighted(cls, part: WeightedGame) -> "SimpleGame":
        return cls(part.n, WEIGHTED, parts=(part,))

    def is_winning(self, coalition: Coalition) -> bool:
        if coalition.n != self.n:
            raise InvalidGameError(f"coalition over {coalition.n} players, game has {self.n}")
        table = self.__dict__.get("truth_table")
        if table is not None:
            return bool(table[coalition.members >> 1])
        return self._eval_mask(coalition.members)

    def _eval_mask(self, mask: int) -> bool:
        if self.form == EXPLICIT:
            return any(c.members & ~mask == 0 for c in self.antichain)
        if self.form == WEIGHTED:
            part = self.parts[0]
            return part._weight_of_mask(mask) >= part.quota
        if self.form == INTERSECTION:
            return all(p._weight_of_mask(mask) >= p.quota for p in self.parts)
        return any(p._weight_of_mask(mask) >= p.quota for p in self.parts)

    @cached_property
    def truth_table(self) -> np.ndarray:
        """Boolean win/lose vector indexed by compact mask (members >> 1)."""
        size = 1 << self.n
        if self.form == EXPLICIT:
            table = np.zeros(size, dtype=bool)
            masks = np.arange(size, dtype=np.uint32)
            for c in self.antichain:
                cm = c.members >> 1
                table |= (masks & cm) == cm
        else:
            part_tables = [
                _subset_weight_table(p.weights) >= p.quota for p in self.parts
            ]
            table = part_tables[0]
            for other in part_tables[1:]:
                if self.form == INTERSECTION:
                    table &= other
                else:
                    table |= other
            table = np.asarray(table, dtype=bool)
        table.setflags(write=False)
        return table


def make_weighted(quota: int, weights: Sequence[int]) -> WeightedGame:
    """Validated weighted majority game [quota; weights]."""
    return WeightedGame(quota, tuple(weights))


def make_explicit(
    n: int, coalitions: Sequence[Coalition], mode: str = MINIMAL_GIVEN
) -> SimpleGame:
    """Explicit-form game whose winning family is the upward closure of ``coalitions``.

    In ``minimal-given`` mode the list must already be an antichain; in
    ``arbitrary-winning`` mode non-minimal and duplicate coalitions are
    discarded.
    """
    if mode not in (MINIMAL_GIVEN, ARBITRARY_WINNING):
        raise InvalidGameError(f"unknown mode {mode!r}")
    if not coalitions:
        raise InvalidGameError("need at least one winning coalition")
    for c in coalitions:
        if c.n != n:
            raise InvalidGameError(f"coalition over {c.n} players, game has {n}")
        if c.members == 0:
            raise InvalidGameError("the empty coalition cannot be winning")
    if mode == ARBITRARY_WINNING:
        masks = sorted({c.members for c in coalitions})
        minimal = [
            m
            for m in masks
            if not any(other != m and other & ~m == 0 for other in masks)
        ]
        coalitions = [Coalition(m, n) for m in minimal]
    return SimpleGame(n, EXPLICIT, antichain=tuple(coalitions))


def combine(kind: str, parts: Sequence[WeightedGame]) -> SimpleGame:
    """Intersection- or union-form game built from weighted parts."""
    if kind not in (INTERSECTION, UNION):
        raise InvalidGameError(f"combine kind must be intersection or union, got {kind!r}")
    parts = tuple(parts)
    if not parts:
        raise InvalidGameError("need at least one part")
    return SimpleGame(parts[0].n, kind, parts=parts)
