"""Seeded random rule-set generators shared by the test modules."""

from __future__ import annotations

import random

from latticegames.axioms import validate
from latticegames.core import RuleSet


def _squarefree_move(rng: random.Random, d: int, lo: int) -> tuple[int, ...]:
    i = rng.randrange(d)
    g = [rng.randint(lo, 0) for _ in range(d)]
    g[i] = 1
    return tuple(g)


def random_rules(rng: random.Random, d: int, lo: int = -3, hi: int = 3, squarefree_bias: float = 0.5) -> RuleSet:
    """Entries in [lo, hi]; each move is squarefree-shaped with probability ``squarefree_bias``."""
    k = rng.randint(1, d + 3)
    moves = set()
    for _ in range(k):
        if rng.random() < squarefree_bias:
            moves.add(_squarefree_move(rng, d, lo))
        else:
            top = hi if rng.random() < 0.5 else min(hi, 1)
            g = tuple(rng.randint(lo, top) for _ in range(d))
            if any(g):
                moves.add(g)
    if not moves:
        moves.add(_squarefree_move(rng, d, lo))
    return RuleSet(d, tuple(sorted(moves)))


def random_squarefree_rules(rng: random.Random, d: int, lo: int = -2, extra: int | None = None) -> RuleSet:
    """Squarefree rule set; some unit vectors may be missing (then rejected by validation).

    Most moves only lower coordinates ranked below their positive one in a
    random order, which keeps the cone pointed; a quarter are unrestricted.
    """
    rank = rng.sample(range(d), d)
    below = {i: [j for j in range(d) if rank[j] < rank[i]] for i in range(d)}
    moves = {tuple(1 if j == i else 0 for j in range(d)) for i in range(d) if rng.random() < 0.8}
    for _ in range(rng.randint(1, 2 * d) if extra is None else extra):
        i = rng.randrange(d)
        if rng.random() < 0.25 or not below[i]:
            moves.add(_squarefree_move(rng, d, lo))
            continue
        g = [0] * d
        g[i] = 1
        for j in rng.sample(below[i], min(len(below[i]), rng.randint(1, 2))):
            g[j] = rng.randint(lo, -1)
        moves.add(tuple(g))
    return RuleSet(d, tuple(sorted(moves)))


def validated(gen, rng: random.Random, count: int, dims, max_tries: int = 100_000, **kw):
    """``count`` rule sets from ``gen`` that pass validation, with their reports."""
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError(f"only {len(out)} valid rule sets after {max_tries} tries")
        rs = gen(rng, rng.choice(dims), **kw)
        report = validate(rs)
        if report.ok:
            out.append((rs, report))
    return out


def random_weak_rules(rng: random.Random, d: int, lo: int = -3) -> RuleSet:
    """All unit vectors plus moves with entries in [lo, 1]; usually weakly squarefree only."""
    moves = {tuple(1 if j == i else 0 for j in range(d)) for i in range(d)}
    for _ in range(rng.randint(1, 3)):
        g = tuple(rng.randint(lo, 1) for _ in range(d))
        if any(x > 0 for x in g):
            moves.add(g)
    return RuleSet(d, tuple(sorted(moves)))
