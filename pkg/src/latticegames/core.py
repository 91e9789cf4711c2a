"""Positions, moves and rule sets for lattice games on N^d.

Coordinate ``i`` (0-based) of a position counts the heaps of size ``i + 1``.
Positions and moves are plain tuples of ints; a move ``g`` takes ``p`` to
``p - g`` whenever every coordinate of the result stays nonnegative.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Position = tuple[int, ...]
Move = tuple[int, ...]


class GameError(ValueError):
    """Malformed position, move or rule set."""


class Outcome(enum.Enum):
    """Normal-play outcome. ``P`` is encoded as ``True``."""

    P = True
    N = False

    def __str__(self) -> str:
        return self.name

    def __bool__(self) -> bool:
        return self.value

    @classmethod
    def of(cls, is_p: bool) -> "Outcome":
        return cls.P if is_p else cls.N


def as_position(coords: Iterable[int], d: int | None = None) -> Position:
    p = tuple(int(c) for c in coords)
    if any(c < 0 for c in p):
        raise GameError(f"position has a negative coordinate: {p}")
    if d is not None and len(p) != d:
        raise GameError(f"position {p} has dimension {len(p)}, expected {d}")
    return p


def as_move(deltas: Iterable[int], d: int | None = None) -> Move:
    m = tuple(int(c) for c in deltas)
    if not any(m):
        raise GameError("the zero vector is not a move")
    if d is not None and len(m) != d:
        raise GameError(f"move {m} has dimension {len(m)}, expected {d}")
    return m


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise GameError(f"dimension mismatch: {len(a)} vs {len(b)}")


def positive_part(m: Sequence[int]) -> tuple[int, ...]:
    return tuple(max(x, 0) for x in m)


def apply_move(p: Sequence[int], m: Sequence[int]) -> Position | None:
    """Return ``p - m``, or ``None`` if the move is illegal at ``p``."""
    _check_dims(p, m)
    q = tuple(a - b for a, b in zip(p, m))
    if any(c < 0 for c in q):
        return None
    return q


def mod2_reduce(p: Sequence[int]) -> Position:
    return tuple(c & 1 for c in p)


def add(p: Sequence[int], q: Sequence[int]) -> Position:
    _check_dims(p, q)
    return tuple(a + b for a, b in zip(p, q))


def unit(d: int, i: int) -> tuple[int, ...]:
    """Standard basis vector ``e_i`` (0-based)."""
    return tuple(1 if k == i else 0 for k in range(d))


def in_orthant(v: Sequence[int]) -> bool:
    return all(c >= 0 for c in v)


def mask_of(p: Sequence[int]) -> int:
    """Index of a 0/1 position: bit ``i`` holds ``p[i]``."""
    idx = 0
    for i, c in enumerate(p):
        if c not in (0, 1):
            raise GameError(f"{tuple(p)} is not in the unit box")
        idx |= c << i
    return idx


def position_of(mask: int, d: int) -> Position:
    return tuple((mask >> i) & 1 for i in range(d))


@dataclass(frozen=True)
class RuleSet:
    """A dimension and a finite, duplicate-free sequence of nonzero moves."""

    d: int
    moves: tuple[Move, ...]

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise GameError(f"dimension must be a positive integer, got {self.d!r}")
        moves = tuple(as_move(m, self.d) for m in self.moves)
        if len(set(moves)) != len(moves):
            raise GameError("rule set contains duplicate moves")
        object.__setattr__(self, "moves", moves)

    @classmethod
    def of(cls, moves: Iterable[Iterable[int]], d: int | None = None) -> "RuleSet":
        moves = [tuple(m) for m in moves]
        if d is None:
            if not moves:
                raise GameError("cannot infer the dimension of an empty rule set")
            d = len(moves[0])
        return cls(d, tuple(moves))

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def options(self, p: Sequence[int]) -> list[Position]:
        """Legal options of ``p``, in rule-set order."""
        out = []
        for m in self.moves:
            q = apply_move(p, m)
            if q is not None:
                out.append(q)
        return out

    def to_dict(self) -> dict:
        return {"d": self.d, "moves": [list(m) for m in self.moves]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "RuleSet":
        try:
            d = obj["d"]
            moves = obj["moves"]
        except (KeyError, TypeError) as exc:
            raise GameError(f"rule set JSON needs 'd' and 'moves': {exc}") from None
        if not isinstance(d, int) or isinstance(d, bool):
            raise GameError(f"'d' must be an integer, got {d!r}")
        for m in moves:
            if not isinstance(m, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in m
            ):
                raise GameError(f"moves must be integer arrays, got {m!r}")
        return cls(d, tuple(tuple(m) for m in moves))

    @classmethod
    def from_json(cls, text: str) -> "RuleSet":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GameError(f"invalid JSON: {exc}") from None
        return cls.from_dict(obj)
