"""Lattice-game axioms: the move cone is pointed and contains the orthant.

A strictly positive weight ``w`` with ``w.g >= 1`` for every move ``g``
bounds the length of play from ``p`` by ``w.p`` and gives the evaluation
order used by both solvers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import simplex
from .core import GameError, RuleSet, unit

Weight = tuple[Fraction, ...]


def dot(w: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(w, v)), Fraction(0))


def normalize(w: Sequence) -> tuple[int, ...]:
    """Scale a positive rational vector to coprime integers."""
    w = [Fraction(x) for x in w]
    lcm = math.lcm(*(x.denominator for x in w)) if w else 1
    ints = [int(x * lcm) for x in w]
    g = math.gcd(*ints) or 1
    return tuple(x // g for x in ints)


def is_certificate(rs: RuleSet, w: Sequence) -> bool:
    """Exact check of ``w_i > 0`` and ``w.g >= 1`` for every move."""
    if len(w) != rs.d:
        return False
    if all(isinstance(x, int) for x in w):
        return all(x > 0 for x in w) and all(sum(a * b for a, b in zip(w, g)) >= 1 for g in rs.moves)
    w = [Fraction(x) for x in w]
    return all(x > 0 for x in w) and all(dot(w, g) >= 1 for g in rs.moves)


def find_weight(rs: RuleSet) -> tuple[int, ...] | None:
    """Smallest-sum weight with ``w >= 1`` and ``w.g >= 1``, as coprime integers.

    Writes ``w = 1 + v`` with ``v >= 0`` and one surplus variable per move.
    """
    d, moves = rs.d, rs.moves
    k = len(moves)
    A, b = [], []
    for r, g in enumerate(moves):
        row = [Fraction(x) for x in g] + [Fraction(0)] * k
        row[d + r] = Fraction(-1)
        A.append(row)
        b.append(1 - sum(g))
    c = [1] * d + [0] * k
    if not A:
        return (1,) * d
    x = simplex.solve(A, b, c)
    if x is None:
        return None
    w = normalize([1 + v for v in x[:d]])
    assert is_certificate(rs, w)
    return w


def is_pointed(rs: RuleSet) -> bool:
    """Cone pointed iff some (sign-free) ``w`` has ``w.g >= 1`` for all moves."""
    d, moves = rs.d, rs.moves
    k = len(moves)
    if k == 0:
        return True
    A, b = [], []
    for r, g in enumerate(moves):
        row = list(g) + [-x for x in g] + [0] * k
        row[2 * d + r] = -1
        A.append(row)
        b.append(1)
    return simplex.solve(A, b) is not None


def in_cone(rs: RuleSet, v: Sequence[int]) -> list[Fraction] | None:
    """Nonnegative coefficients expressing ``v`` over the moves, or None."""
    if not rs.moves:
        return [] if not any(v) else None
    A = [[g[i] for g in rs.moves] for i in range(rs.d)]
    return simplex.solve(A, list(v))


def check_orthant_containment(rs: RuleSet) -> set[int]:
    """Axes ``i`` whose basis vector is not a nonnegative combination of moves."""
    return {i for i in range(rs.d) if in_cone(rs, unit(rs.d, i)) is None}


@dataclass(frozen=True)
class ValidationReport:
    pointed: bool
    contains_orthant: bool
    certificate: tuple[int, ...] | None
    missing_axes: frozenset[int] = field(default_factory=frozenset)

    @property
    def ok(self) -> bool:
        return self.pointed and self.contains_orthant and self.certificate is not None

    def to_dict(self) -> dict:
        return {
            "pointed": self.pointed,
            "contains_orthant": self.contains_orthant,
            "certificate": None if self.certificate is None else [str(x) for x in self.certificate],
            "missing_axes": sorted(self.missing_axes),
        }


def validate(rs: RuleSet) -> ValidationReport:
    missing = check_orthant_containment(rs)
    return ValidationReport(
        pointed=is_pointed(rs),
        contains_orthant=not missing,
        certificate=find_weight(rs),
        missing_axes=frozenset(missing),
    )


def parse_weight(text: str, d: int | None = None) -> Weight:
    """Parse ``"1,2,3/2"`` into a tuple of Fractions."""
    try:
        w = tuple(Fraction(s.strip()) for s in text.split(",") if s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise GameError(f"bad weight {text!r}: {exc}") from None
    if d is not None and len(w) != d:
        raise GameError(f"weight has {len(w)} entries, expected {d}")
    return w


def require_certificate(rs: RuleSet, w: Sequence | None) -> tuple[int, ...]:
    """Validate a user weight (or find one) and return it as coprime integers.

    Scaling by a positive constant preserves ``w.g > 0``, and for integer
    ``w`` that already means ``w.g >= 1``.
    """
    if w is None:
        found = find_weight(rs)
        if found is None:
            raise GameError("rule set admits no weight certificate (cone not pointed)")
        return found
    if not is_certificate(rs, w):
        raise GameError(f"{tuple(str(x) for x in w)} is not a weight certificate for this rule set")
    return normalize(w)
