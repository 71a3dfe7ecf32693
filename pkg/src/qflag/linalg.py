"""Exact dense linear algebra over the rationals (small matrices only)."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence


def inverse(m: Sequence[Sequence]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse; raises ZeroDivisionError if singular."""
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        if pv != 1:
            a[col] = [v / pv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                row = a[col]
                a[r] = [vr - f * vc for vr, vc in zip(a[r], row)]
    return [row[n:] for row in a]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[list]:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def is_identity(m: Sequence[Sequence]) -> bool:
    return all(v == (1 if i == j else 0) for i, row in enumerate(m) for j, v in enumerate(row))
