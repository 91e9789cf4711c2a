"""Squarefree / weakly squarefree classification with explicit witnesses."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Move, Position, RuleSet, in_orthant, positive_part, unit


class Level(enum.Enum):
    SQUAREFREE = "squarefree"
    WEAKLY_SQUAREFREE_ONLY = "weakly_squarefree_only"
    NOT_WEAKLY_SQUAREFREE = "not_weakly_squarefree"


@dataclass(frozen=True)
class Witness:
    """``p + q - move`` lies in N^d while neither ``p - move`` nor ``q - move`` does."""

    move: Move
    p: Position
    q: Position
    tag: str

    def verify(self) -> bool:
        m, p, q = self.move, self.p, self.q
        if not (len(m) == len(p) == len(q)) or not (in_orthant(p) and in_orthant(q)):
            return False
        both = tuple(a + b - g for a, b, g in zip(p, q, m))
        minus_p = tuple(a - g for a, g in zip(p, m))
        minus_q = tuple(b - g for b, g in zip(q, m))
        if self.tag == "doubling" and p != q:
            return False
        return in_orthant(both) and not in_orthant(minus_p) and not in_orthant(minus_q)

    def to_dict(self) -> dict:
        return {"move": list(self.move), "p": list(self.p), "q": list(self.q), "tag": self.tag}


@dataclass(frozen=True)
class Classification:
    level: Level
    witnesses: tuple[Witness, ...]

    def to_dict(self) -> dict:
        return {"level": self.level.value, "witnesses": [w.to_dict() for w in self.witnesses]}


def move_is_squarefree(m: Sequence[int]) -> bool:
    """At most one positive entry, and that entry is at most 1."""
    positives = [x for x in m if x > 0]
    return len(positives) <= 1 and all(x <= 1 for x in positives)


def positive_part_is_unit_or_zero(m: Sequence[int]) -> bool:
    """The positive part is a 0-1 vector with at most one 1."""
    pp = positive_part(m)
    return set(pp) <= {0, 1} and sum(pp) <= 1


def is_squarefree(rs: RuleSet) -> bool:
    return all(move_is_squarefree(m) for m in rs.moves)


def is_squarefree_via_positive_part(rs: RuleSet) -> bool:
    return all(positive_part_is_unit_or_zero(m) for m in rs.moves)


def is_weakly_squarefree(rs: RuleSet) -> bool:
    return all(x <= 1 for m in rs.moves for x in m)


def squarefree_violation_witness(m: Sequence[int]) -> Witness | None:
    m = tuple(m)
    d = len(m)
    top = max(m)
    if top >= 2:
        half = (top + 1) // 2
        p = (half,) * d
        return Witness(m, p, p, "doubling")
    ones = [i for i, x in enumerate(m) if x > 0]
    if len(ones) >= 2:
        j = ones[1]
        p = tuple(x - e for x, e in zip(positive_part(m), unit(d, j)))
        return Witness(m, p, unit(d, j), "two_positive_entries")
    return None


def classify(rs: RuleSet) -> Classification:
    witnesses = []
    for m in rs.moves:
        w = squarefree_violation_witness(m)
        if w is not None:
            witnesses.append(w)
    if is_squarefree(rs):
        level = Level.SQUAREFREE
    elif is_weakly_squarefree(rs):
        level = Level.WEAKLY_SQUAREFREE_ONLY
    else:
        level = Level.NOT_WEAKLY_SQUAREFREE
    return Classification(level, tuple(witnesses))


def _box_points(d: int, bound: int) -> np.ndarray:
    return np.array(list(itertools.product(range(bound + 1), repeat=d)), dtype=np.int64).reshape(-1, d)


def check_condition1_on_region(
    rs: RuleSet, bound: int, limit: int | None = None
) -> list[Witness]:
    """Every ``(move, p, q)`` with coordinates in ``[0, bound]`` violating condition 1.

    The search is always exhaustive; ``limit`` only truncates the returned
    list, which is ordered by move, then ``p``, then ``q`` lexicographically.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    pts = _box_points(rs.d, bound)
    out: list[Witness] = []
    for m in rs.moves:
        g = np.array(m, dtype=np.int64)
        p_bad = (pts < g).any(axis=1)
        cand = pts[p_bad]
        if not len(cand):
            continue
        ok = ((cand[:, None, :] + cand[None, :, :]) >= g).all(axis=2)
        for a, b in zip(*np.nonzero(ok)):
            out.append(Witness(m, tuple(int(x) for x in cand[a]), tuple(int(x) for x in cand[b]), "region"))
            if limit is not None and len(out) >= limit:
                return out
    return out


def check_doubling_on_region(rs: RuleSet, bound: int) -> list[Witness]:
    """Violations of ``2p - g in N^d  =>  p - g in N^d`` with ``p`` in ``[0, bound]^d``."""
    pts = _box_points(rs.d, bound)
    out = []
    for m in rs.moves:
        g = np.array(m, dtype=np.int64)
        bad = (2 * pts >= g).all(axis=1) & (pts < g).any(axis=1)
        out.extend(Witness(m, tuple(map(int, p)), tuple(map(int, p)), "doubling") for p in pts[bad])
    return out
