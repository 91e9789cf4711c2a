"""Heap games as lattice games via the multiplicity encoding.

A position counts heaps by size: coordinate ``i`` is the number of heaps of
size ``i + 1``. Replacing one heap of size ``s`` by heaps of sizes
``t1, t2, ...`` is the move ``e_s - e_t1 - e_t2 - ...``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterable

from .core import GameError, Move, RuleSet

log = logging.getLogger(__name__)

_OCTAL = re.compile(r"^0?\.([0-7]+)$")


@dataclass(frozen=True)
class HeapMove:
    consumed_size: int
    produced_sizes: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "produced_sizes", tuple(sorted(self.produced_sizes)))
        if self.consumed_size < 1 or any(s < 1 for s in self.produced_sizes):
            raise GameError("heap sizes must be positive")
        if self.consumed_size in self.produced_sizes:
            raise GameError("a move may not produce a heap of the size it consumes")


def encode_heap_move(hm: HeapMove, d: int) -> Move:
    sizes = (hm.consumed_size, *hm.produced_sizes)
    if max(sizes) > d:
        raise GameError(f"heap size {max(sizes)} exceeds max heap size {d}")
    g = [0] * d
    g[hm.consumed_size - 1] += 1
    for s in hm.produced_sizes:
        g[s - 1] -= 1
    return tuple(g)


def rules_from_heap_moves(moves: Iterable[HeapMove], d: int) -> RuleSet:
    seen: dict[Move, None] = {}
    for hm in moves:
        seen.setdefault(encode_heap_move(hm, d), None)
    return RuleSet(d, tuple(seen))


def parse_octal(code: str) -> tuple[int, ...]:
    m = _OCTAL.match(code.strip())
    if not m:
        raise GameError(f"malformed octal code {code!r}; expected e.g. '0.137'")
    digits = tuple(int(c) for c in m.group(1))
    if not any(digits):
        raise GameError(f"octal code {code!r} has no nonzero digit")
    return digits


def octal_heap_moves(digits: tuple[int, ...], d: int) -> list[HeapMove]:
    """Heap moves of an octal game with heaps of size at most ``d``.

    Digit ``k`` (1-based) governs removing ``k`` beans from one heap: bit 1
    leaves nothing, bit 2 leaves one heap, bit 4 leaves two heaps.
    """
    out = []
    for k, digit in enumerate(digits, start=1):
        if k > d:
            if digit:
                log.warning("octal digit %d at position %d ignored: max heap size is %d", digit, k, d)
            continue
        if digit & 1:
            out.append(HeapMove(k))
        if digit & 2:
            out.extend(HeapMove(i, (i - k,)) for i in range(k + 1, d + 1))
        if digit & 4:
            for i in range(k + 2, d + 1):
                rest = i - k
                out.extend(HeapMove(i, (a, rest - a)) for a in range(1, rest // 2 + 1))
    return out


def rules_from_octal(code: str, max_heap: int) -> RuleSet:
    if max_heap < 1:
        raise GameError("max heap size must be >= 1")
    return rules_from_heap_moves(octal_heap_moves(parse_octal(code), max_heap), max_heap)


def nim_rules(d: int) -> RuleSet:
    """Nim with heaps of size at most ``d``: remove a heap or shrink one."""
    if d < 1:
        raise GameError("d must be >= 1")
    moves = [HeapMove(i) for i in range(1, d + 1)]
    moves += [HeapMove(i, (j,)) for j in range(1, d + 1) for i in range(j + 1, d + 1)]
    return rules_from_heap_moves(moves, d)
