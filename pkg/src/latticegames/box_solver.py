"""P-positions of squarefree games from the unit box alone.

For a squarefree game the outcome of ``p`` depends only on ``p mod 2``, so
the 2^d outcomes on {0,1}^d determine every outcome. Each box position is
the NOR of its legal options, with options reduced mod 2 before lookup.
Positions are filled in increasing weight order: a reduced option always
weighs strictly less than its parent, because ``w.(p - g mod 2) <=
w.(p - g) <= w.p - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .axioms import require_certificate
from .classify import is_squarefree
from .core import GameError, Outcome, Position, RuleSet, as_position, mask_of, position_of

MAX_DIM = 28


class NotSquarefree(GameError):
    pass


@dataclass(frozen=True)
class SolveStats:
    positions_computed: int
    option_evaluations: int
    peak_table_entries: int

    def to_dict(self) -> dict:
        return {
            "positions_computed": self.positions_computed,
            "option_evaluations": self.option_evaluations,
            "peak_table_entries": self.peak_table_entries,
        }


@dataclass(frozen=True, eq=False)
class SolvedBox:
    """Outcomes on {0,1}^d packed one bit per position (bit set = P)."""

    rs: RuleSet
    bits: np.ndarray
    stats: SolveStats

    @property
    def d(self) -> int:
        return self.rs.d

    def is_p_mask(self, mask: int) -> bool:
        return bool((self.bits[mask >> 3] >> (mask & 7)) & 1)

    def p_masks(self) -> np.ndarray:
        flags = np.unpackbits(self.bits, bitorder="little")[: 1 << self.d]
        return np.flatnonzero(flags)

    def p0(self) -> list[Position]:
        """P-positions in the box, sorted lexicographically."""
        return sorted(position_of(int(m), self.d) for m in self.p_masks())

    def __iter__(self) -> Iterator[tuple[Position, Outcome]]:
        for mask in range(1 << self.d):
            yield position_of(mask, self.d), Outcome.of(self.is_p_mask(mask))

    def outcome(self, p: Sequence[int]) -> Outcome:
        return outcome(self, p)


def move_masks(rs: RuleSet) -> tuple[np.ndarray, np.ndarray]:
    pos = np.array([sum(1 << i for i, x in enumerate(g) if x > 0) for g in rs.moves], dtype=np.int64)
    odd = np.array([sum(1 << i for i, x in enumerate(g) if x & 1) for g in rs.moves], dtype=np.int64)
    return pos, odd


def solve_p0(
    rs: RuleSet,
    w: Sequence | None = None,
    *,
    backend: str | None = None,
    max_dim: int = MAX_DIM,
) -> SolvedBox:
    """Compute the outcome of every position of {0,1}^d.

    ``w`` is a weight certificate for ``rs``; one is found if omitted.
    ``backend`` is ``"numba"``, ``"numpy"`` or ``"python"``.
    """
    if not is_squarefree(rs):
        raise NotSquarefree("box solver needs a squarefree rule set")
    if rs.d > max_dim:
        raise GameError(f"d={rs.d} exceeds the box solver cap of {max_dim}")
    w = require_certificate(rs, w)
    if sum(w) >= 1 << 62:
        raise GameError("weight certificate too large for 64-bit levels")

    n = 1 << rs.d
    order, levels = _kernels.evaluation_order(w)
    pos, odd = move_masks(rs)
    table = np.full(n, _kernels.PENDING, dtype=np.uint8)
    evals = _kernels.nor_fill(order, levels, pos, odd, table, backend)
    if evals < 0:
        raise AssertionError("evaluation order read an uncomputed position")
    assert not (table == _kernels.PENDING).any(), "some box position was never computed"
    assert evals <= n * len(rs), "option evaluations exceed 2^d |moves|"

    stats = SolveStats(positions_computed=int(order.shape[0]), option_evaluations=evals, peak_table_entries=n)
    assert stats.positions_computed == n
    return SolvedBox(rs, np.packbits(table.astype(bool), bitorder="little"), stats)


def outcome(sb: SolvedBox, p: Sequence[int]) -> Outcome:
    p = as_position(p, sb.d)
    return Outcome.of(sb.is_p_mask(mask_of(tuple(c & 1 for c in p))))


def solve_stats(sb: SolvedBox) -> SolveStats:
    return sb.stats
