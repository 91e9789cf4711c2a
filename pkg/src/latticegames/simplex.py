"""Two-phase simplex over exact rationals (Bland's rule).

Solves ``min c.x  s.t.  A x = b, x >= 0``. Rows are kept sparse (dicts of
column -> Fraction) since move matrices are mostly zeros. Column ``-1``
holds the right-hand side.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

RHS = -1


class Unbounded(ArithmeticError):
    pass


def _eliminate(row: dict, f: Fraction, prow: dict) -> None:
    """row -= f * prow, dropping exact zeros."""
    for k, v in prow.items():
        nv = row.get(k, 0) - f * v
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)


def _pivot(rows: list[dict], obj: dict, basis: list[int], r: int, j: int) -> None:
    prow = rows[r]
    piv = prow[j]
    if piv != 1:
        prow = {k: v / piv for k, v in prow.items()}
        rows[r] = prow
    for k, row in enumerate(rows):
        if k != r:
            f = row.get(j)
            if f:
                _eliminate(row, f, prow)
    f = obj.get(j)
    if f:
        _eliminate(obj, f, prow)
    basis[r] = j


def _run(rows, obj, basis, allowed: int) -> None:
    """Minimize; ``obj`` holds reduced costs over columns ``< allowed``."""
    while True:
        entering = min((j for j, v in obj.items() if 0 <= j < allowed and v < 0), default=None)
        if entering is None:
            return
        leave, best = -1, None
        for r, row in enumerate(rows):
            a = row.get(entering)
            if a is not None and a > 0:
                ratio = row.get(RHS, 0) / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave < 0:
            raise Unbounded("objective is unbounded below")
        _pivot(rows, obj, basis, leave, entering)


def _reduced(cost: dict, rows: list[dict], basis: list[int]) -> dict:
    obj = {k: Fraction(v) for k, v in cost.items() if v}
    for r, j in enumerate(basis):
        cb = obj.get(j)
        if cb:
            _eliminate(obj, cb, rows[r])
    return obj


def solve(
    A: Sequence[Sequence], b: Sequence, c: Sequence | None = None
) -> list[Fraction] | None:
    """Return an optimal ``x`` (any feasible one if ``c`` is None), else None.

    Rows with a +1 singleton column and nonnegative rhs seed the basis
    directly; the rest get artificial variables.
    """
    m = len(A)
    n = len(A[0]) if m else (len(c) if c is not None else 0)
    rows: list[dict] = []
    for row, rhs in zip(A, b):
        if len(row) != n:
            raise ValueError("ragged constraint matrix")
        d = {j: Fraction(x) for j, x in enumerate(row) if x}
        rhs = Fraction(rhs)
        if rhs < 0:
            d = {j: -v for j, v in d.items()}
            rhs = -rhs
        if rhs:
            d[RHS] = rhs
        rows.append(d)

    colcount: dict[int, int] = {}
    for d in rows:
        for j in d:
            if j != RHS:
                colcount[j] = colcount.get(j, 0) + 1
    basis = []
    used = set()
    n_art = 0
    for r, d in enumerate(rows):
        slack = next((j for j, v in d.items() if j != RHS and v == 1 and colcount[j] == 1 and j not in used), None)
        if slack is None:
            slack = n + n_art
            n_art += 1
            d[slack] = Fraction(1)
        used.add(slack)
        basis.append(slack)

    if n_art:
        obj = _reduced({n + a: 1 for a in range(n_art)}, rows, basis)
        _run(rows, obj, basis, n + n_art)
        if obj.get(RHS, 0) != 0:
            return None
        # drive zero-valued artificials out; drop redundant rows
        r = 0
        while r < len(rows):
            if basis[r] >= n:
                j = min((k for k in rows[r] if 0 <= k < n), default=None)
                if j is None:
                    del rows[r]
                    del basis[r]
                    continue
                _pivot(rows, {}, basis, r, j)
            r += 1
        for d in rows:
            for k in [k for k in d if k >= n]:
                del d[k]

    if c is not None:
        obj = _reduced({j: v for j, v in enumerate(c)}, rows, basis)
        _run(rows, obj, basis, n)

    x = [Fraction(0)] * n
    for r, j in enumerate(basis):
        x[j] = rows[r].get(RHS, Fraction(0))
    return x
