"""Exact ranks over Q and GF(p), plus the decodability test.

Matrices travel as lists of rows. The working fields wrap python-flint;
:func:`bareiss_rank` is an independent pure-Python reference.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np
from flint import fmpq, fmpq_mat, nmod, nmod_mat

MERSENNE_61 = 2**61 - 1
DRAW_BOUND = 10**6


class RationalField:
    name = "rational"
    zero, one = fmpq(0), fmpq(1)

    def scalar(self, value: int):
        return fmpq(value)

    def matrix(self, rows: Sequence[Sequence], ncols: int | None = None):
        ncols = len(rows[0]) if rows else (ncols or 0)
        return fmpq_mat(len(rows), ncols, [x for row in rows for x in row])

    def rank(self, rows: Sequence[Sequence], ncols: int | None = None) -> int:
        if not rows:
            return 0
        return self.matrix(rows, ncols).rank()


class PrimeField:
    """GF(p); a fast stand-in for Q when a sweep needs it."""

    def __init__(self, p: int = MERSENNE_61):
        self.p = p
        self.name = "prime" if p == MERSENNE_61 else f"prime-{p}"
        self.zero, self.one = nmod(0, p), nmod(1, p)

    def scalar(self, value: int):
        return nmod(value, self.p)

    def matrix(self, rows: Sequence[Sequence], ncols: int | None = None):
        ncols = len(rows[0]) if rows else (ncols or 0)
        return nmod_mat(len(rows), ncols, [x for row in rows for x in row], self.p)

    def rank(self, rows: Sequence[Sequence], ncols: int | None = None) -> int:
        if not rows:
            return 0
        return self.matrix(rows, ncols).rank()


def get_field(name: str):
    if name == "rational":
        return RationalField()
    if name == "prime":
        return PrimeField()
    raise ValueError(f"unknown field {name!r} (expected 'rational' or 'prime')")


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free elimination; entries may be int or Fraction."""
    mat = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        mat.append([int(x * scale) for x in row])
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][col]
        for r in range(rank + 1, nrows):
            lead = mat[r][col]
            mat[r] = [(p * mat[r][c] - lead * mat[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def float_rank(rows: Sequence[Sequence], tol: float = 1e-9) -> int:
    """SVD rank with relative tolerance; only for speed comparisons."""
    if not rows:
        return 0
    s = np.linalg.svd(np.array([[float(x) for x in row] for row in rows]), compute_uv=False)
    return int(np.sum(s > tol * s[0])) if s.size and s[0] > 0 else 0


def _drop_columns(rows, columns):
    drop = set(columns)
    return [[x for c, x in enumerate(row) if c not in drop] for row in rows]


def decodability_ranks(G: Sequence[Sequence], desired: Sequence[int], rank=None) -> tuple[int, int]:
    """``(rank G, rank of G without the desired columns)``."""
    rank = rank or RationalField().rank
    ncols = len(G[0]) if G else 0
    drop = set(desired)
    return rank(G, ncols), rank(_drop_columns(G, drop), ncols - len(drop))


def decodable(G: Sequence[Sequence], desired: Sequence[int], rank=None) -> bool:
    """True iff the desired columns are independent of each other and of the rest.

    ``rank`` maps a list of rows (and a column count) to an integer; the
    default is exact rank over Q.
    """
    desired = set(desired)
    if not desired:
        return True
    if not G:
        return False
    full, rest = decodability_ranks(G, desired, rank)
    return full == rest + len(desired)
