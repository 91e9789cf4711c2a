"""Brute-force outcomes on the weight simplex {p : w.p <= W}.

The region is closed under legal moves (every option weighs at least 1
less), so plain retrograde analysis over increasing weight is exact. No
periodicity or squarefree assumption is used anywhere here.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .axioms import is_certificate, normalize
from .core import GameError, Outcome, Position, RuleSet, as_position

DEFAULT_MAX_REGION = 10**7


class RegionTooLarge(GameError):
    pass


def max_region_default() -> int:
    env = os.environ.get("LATTICEGAMES_MAX_REGION")
    return int(env) if env else DEFAULT_MAX_REGION


def scaled_budget(w: Sequence, budget) -> tuple[tuple[int, ...], int]:
    """Integer weights and the matching integer budget for the same region."""
    wf = [Fraction(x) for x in w]
    wi = normalize(wf)
    scale = Fraction(wi[0]) / wf[0]
    return wi, math.floor(Fraction(budget) * scale)


def count_region(w: Sequence[int], budget: int) -> int:
    """Number of ``p`` in N^d with ``w.p <= budget`` (integer ``w``)."""
    if budget < 0:
        return 0
    ways = [1] + [0] * budget
    for wi in w:
        for b in range(wi, budget + 1):
            ways[b] += ways[b - wi]
    return sum(ways)


def enumerate_region(w: Sequence[int], budget: int) -> tuple[np.ndarray, np.ndarray]:
    """All points of the region as rows, sorted by (weight, coordinates)."""
    d = len(w)
    pts = np.zeros((1, 0), dtype=np.int64)
    lv = np.zeros(1, dtype=np.int64)
    for wi in w:
        counts = (budget - lv) // wi + 1
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        k = np.arange(int(counts.sum()), dtype=np.int64) - starts
        pts = np.concatenate((np.repeat(pts, counts, axis=0), k[:, None]), axis=1)
        lv = np.repeat(lv, counts) + wi * k
    keys = [pts[:, i] for i in reversed(range(d))] + [lv]
    order = np.lexsort(keys)
    return pts[order].reshape(-1, d), lv[order]


@dataclass(frozen=True)
class Violation:
    p: Position
    q: Position
    outcome_p: Outcome
    outcome_q: Outcome
    outcome_sum: Outcome | None = None

    def to_dict(self) -> dict:
        out = {
            "p": list(self.p),
            "q": list(self.q),
            "outcome_p": str(self.outcome_p),
            "outcome_q": str(self.outcome_q),
        }
        if self.outcome_sum is not None:
            out["outcome_sum"] = str(self.outcome_sum)
        return out


@dataclass(frozen=True)
class PropertyReport:
    name: str
    checked_pairs: int
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "property": self.name,
            "checked_pairs": self.checked_pairs,
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass(frozen=True, eq=False)
class SolvedRegion:
    """Outcome table on a weight simplex; rows sorted by (weight, coords)."""

    rs: RuleSet
    w: tuple[Fraction, ...]
    budget: Fraction
    int_weight: tuple[int, ...]
    int_budget: int
    points: np.ndarray
    levels: np.ndarray
    is_p: np.ndarray
    _radix: np.ndarray = field(repr=False)
    _keys_sorted: np.ndarray = field(repr=False)
    _key_rows: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return self.points.shape[0]

    def keys(self, pts: np.ndarray) -> np.ndarray:
        return pts @ self._radix

    def rows_of(self, pts: np.ndarray) -> np.ndarray:
        """Row index of each point, or -1 for points outside the region."""
        pts = np.asarray(pts, dtype=np.int64).reshape(-1, self.rs.d)
        inside = (pts >= 0).all(axis=1) & (pts @ np.array(self.int_weight, dtype=np.int64) <= self.int_budget)
        k = self.keys(np.where(inside[:, None], pts, 0))
        pos = np.searchsorted(self._keys_sorted, k)
        pos = np.minimum(pos, len(self._keys_sorted) - 1)
        found = inside & (self._keys_sorted[pos] == k)
        return np.where(found, self._key_rows[pos], -1)

    def __contains__(self, p) -> bool:
        return bool(self.rows_of(np.array(p))[0] >= 0)

    def outcome(self, p: Sequence[int]) -> Outcome:
        p = as_position(p, self.rs.d)
        row = int(self.rows_of(np.array(p))[0])
        if row < 0:
            raise KeyError(f"{p} is outside the region")
        return Outcome.of(bool(self.is_p[row]))

    def __getitem__(self, p) -> Outcome:
        return self.outcome(p)

    def items(self):
        for row in range(len(self)):
            yield tuple(int(x) for x in self.points[row]), Outcome.of(bool(self.is_p[row]))

    @property
    def table(self) -> dict[Position, Outcome]:
        return dict(self.items())

    def p_positions(self) -> list[Position]:
        return sorted(tuple(int(x) for x in r) for r in self.points[self.is_p])


def solve_region(
    rs: RuleSet,
    w: Sequence,
    budget,
    *,
    max_region: int | None = None,
) -> SolvedRegion:
    """Exact outcomes of every ``p`` with ``w.p <= budget``."""
    w = tuple(Fraction(x) for x in w)
    if not is_certificate(rs, w):
        raise GameError("weight is not a certificate for this rule set")
    budget = Fraction(budget)
    if budget < 0:
        raise GameError("budget must be nonnegative")
    wi, B = scaled_budget(w, budget)
    cap = max_region_default() if max_region is None else max_region
    size = count_region(wi, B)
    if size > cap:
        raise RegionTooLarge(f"region has {size} positions, cap is {cap}")

    pts, lv = enumerate_region(wi, B)
    d = rs.d
    bound = np.array([B // x + 1 for x in wi], dtype=np.int64)
    if math.prod(int(x) for x in bound) >= 1 << 62:
        raise RegionTooLarge("region bounding box does not fit 64-bit keys")
    radix = np.ones(d, dtype=np.int64)
    for i in range(1, d):
        radix[i] = radix[i - 1] * bound[i - 1]
    keys = pts @ radix
    key_rows = np.argsort(keys, kind="stable")
    keys_sorted = keys[key_rows]

    is_p = np.zeros(len(pts), dtype=bool)
    done = np.zeros(len(pts), dtype=bool)
    moves = np.array(rs.moves, dtype=np.int64).reshape(-1, d)
    move_keys = moves @ radix
    cuts = np.flatnonzero(np.diff(lv)) + 1
    bounds = np.concatenate(([0], cuts, [len(pts)]))
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        chunk = pts[lo:hi]
        ck = keys[lo:hi]
        p_here = np.ones(hi - lo, dtype=bool)
        for g, gk in zip(moves, move_keys):
            legal = (chunk >= g).all(axis=1)
            if not legal.any():
                continue
            ok = ck[legal] - gk
            at = np.searchsorted(keys_sorted, ok)
            at = np.minimum(at, len(keys_sorted) - 1)
            assert (keys_sorted[at] == ok).all(), "region is not closed under moves"
            rows = key_rows[at]
            assert done[rows].all(), "option evaluated after its parent"
            p_here[legal] &= ~is_p[rows]
        is_p[lo:hi] = p_here
        done[lo:hi] = True

    return SolvedRegion(rs, w, budget, wi, B, pts, lv, is_p, radix, keys_sorted, key_rows)


def _pt(row) -> Position:
    return tuple(int(x) for x in row)


def check_mod2_periodicity(sr: SolvedRegion) -> PropertyReport:
    reduced = sr.points & 1
    rows = sr.rows_of(reduced)
    assert (rows >= 0).all()
    bad = np.flatnonzero(sr.is_p != sr.is_p[rows])
    violations = sorted(
        (
            Violation(_pt(sr.points[i]), _pt(reduced[i]), Outcome.of(bool(sr.is_p[i])), Outcome.of(bool(sr.is_p[rows[i]])))
            for i in bad
        ),
        key=lambda v: v.p,
    )
    return PropertyReport("mod2", len(sr), tuple(violations))


def check_monoid_closure(sr: SolvedRegion, backend: str | None = None) -> PropertyReport:
    """P + P -> P and P + N -> N over pairs with ``w.(p+q) <= W``.

    Addition is symmetric, so each unordered pair is checked once and
    recorded with ``p`` the lexicographically larger member (``p == q``
    included). Violations are sorted on ``(p, q)``.
    """
    lex = np.empty(len(sr), dtype=np.int64)
    lex[np.lexsort(sr.points.T[::-1])] = np.arange(len(sr))
    bad, checked = _kernels.pair_scan(
        np.flatnonzero(sr.is_p),
        sr.levels,
        sr.is_p,
        lex,
        sr.keys(sr.points),
        sr._keys_sorted,
        sr._key_rows,
        sr.int_budget,
        backend,
    )
    violations = []
    for i, q, s in bad:
        assert (sr.points[i] + sr.points[q] == sr.points[s]).all()
        a, b = (i, q) if lex[i] >= lex[q] else (q, i)
        violations.append(
            Violation(
                _pt(sr.points[a]),
                _pt(sr.points[b]),
                Outcome.of(bool(sr.is_p[a])),
                Outcome.of(bool(sr.is_p[b])),
                Outcome.of(bool(sr.is_p[s])),
            )
        )
    violations.sort(key=lambda v: (v.p, v.q))
    return PropertyReport("monoid", checked, tuple(violations))


def check_indistinguishability_from_zero(sr: SolvedRegion, p: Sequence[int]) -> PropertyReport:
    """All ``q`` with ``w.(p+q) <= W`` whose outcome changes when translated by ``p``."""
    p = as_position(p, sr.rs.d)
    i = int(sr.rows_of(np.array(p))[0])
    if i < 0:
        raise GameError(f"{p} is outside the region")
    room = sr.int_budget - sr.levels[i]
    end = int(np.searchsorted(sr.levels, room, side="right"))
    sums = sr.rows_of(sr.points[:end] + sr.points[i])
    bad = np.flatnonzero(sr.is_p[sums] != sr.is_p[:end])
    violations = sorted(
        (
            Violation(p, _pt(sr.points[q]), Outcome.of(bool(sr.is_p[i])), Outcome.of(bool(sr.is_p[q])), Outcome.of(bool(sr.is_p[sums[q]])))
            for q in bad
        ),
        key=lambda v: v.q,
    )
    return PropertyReport("equiv-zero", end, tuple(violations))


def default_budget(w: Sequence) -> Fraction:
    """Twice the heaviest box position, so every sum of two box points fits."""
    return 2 * sum(Fraction(x) for x in w)


def find_prop2_counterexample(rs: RuleSet, w: Sequence, budget=None, **kw) -> Violation | None:
    """Lexicographically first (p, q) breaking P-position closure, or None."""
    if budget is None:
        budget = default_budget(w)
    sr = solve_region(rs, w, budget, **kw)
    report = check_monoid_closure(sr)
    return report.violations[0] if report.violations else None
