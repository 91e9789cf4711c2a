"""Timing sweeps for the box solver."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from typing import Iterable

from . import _kernels
from .axioms import find_weight
from .box_solver import MAX_DIM, solve_p0
from .core import GameError, RuleSet
from .heap_codec import nim_rules


@dataclass(frozen=True)
class BenchRow:
    family: str
    backend: str
    d: int
    moves: int
    seconds: float
    positions_computed: int
    option_evaluations: int

    @property
    def bound(self) -> int:
        return (1 << self.d) * self.moves

    def to_dict(self) -> dict:
        return {**asdict(self), "bound": self.bound}


def random_heap_rules(d: int, density: float, seed: int = 0) -> RuleSet:
    """Unit moves plus about ``density * d`` random shrink/split moves (squarefree)."""
    rng = random.Random(seed * 1000 + d)
    moves = {tuple(1 if k == i else 0 for k in range(d)) for i in range(d)}
    target = d + max(0, round(density * d))
    for _ in range(50 * target):
        if len(moves) >= target or d == 1:
            break
        i = rng.randrange(1, d)
        g = [0] * d
        g[i] = 1
        for _ in range(rng.randint(1, 2)):
            g[rng.randrange(0, i)] -= 1
        moves.add(tuple(g))
    return RuleSet(d, tuple(sorted(moves, reverse=True)))


def family_rules(family: str, d: int, density: float = 2.0, seed: int = 0) -> RuleSet:
    if family == "nim":
        return nim_rules(d)
    if family == "random":
        return random_heap_rules(d, density, seed)
    raise GameError(f"unknown bench family {family!r}")


def bench(
    d_range: Iterable[int],
    family: str = "nim",
    gamma_density: float = 2.0,
    repetitions: int = 3,
    backends: Iterable[str] | None = None,
    max_dim: int = MAX_DIM,
) -> list[BenchRow]:
    """Best-of-``repetitions`` wall clock of ``solve_p0`` per (backend, d).

    The weight certificate is found outside the timed region. Each backend
    is warmed up on a tiny instance first so JIT compilation is not timed.
    """
    backends = list(backends or [_kernels.DEFAULT_BACKEND])
    rows = []
    for backend in backends:
        solve_p0(nim_rules(2), backend=backend)
        for d in d_range:
            if d > max_dim:
                raise GameError(f"d={d} exceeds the cap of {max_dim}")
            rs = family_rules(family, d, gamma_density)
            w = find_weight(rs)
            best = None
            for _ in range(max(1, repetitions)):
                t0 = time.perf_counter()
                sb = solve_p0(rs, w, backend=backend, max_dim=max_dim)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            st = sb.stats
            assert st.positions_computed == 1 << d
            assert st.option_evaluations <= (1 << d) * len(rs)
            rows.append(BenchRow(family, backend, d, len(rs), best, st.positions_computed, st.option_evaluations))
    return rows


def growth_per_two(rows: list[BenchRow]) -> list[float]:
    """Wall-clock growth factor per +2 in d between consecutive rows."""
    out = []
    for a, b in zip(rows, rows[1:]):
        out.append((b.seconds / a.seconds) ** (2.0 / (b.d - a.d)))
    return out
