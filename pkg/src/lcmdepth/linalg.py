"""Exact matrix rank over the rationals and over prime fields."""

from __future__ import annotations

from typing import Sequence


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            row_r, row_p = m[r], m[rank]
            for c in range(col, ncols):
                # exact division is guaranteed by Sylvester's identity
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination."""
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        row_p = [(x * inv) % p for x in m[rank]]
        m[rank] = row_p
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                row_r = m[r]
                for c in range(col, ncols):
                    row_r[c] = (row_r[c] - f * row_p[c]) % p
        rank += 1
        if rank == len(m):
            break
    return rank


def rank(rows: Sequence[Sequence[int]], field: int | str = "Q") -> int:
    """Dispatch on ``field``: ``"Q"`` for the rationals or a prime ``p``."""
    if field in ("Q", "q", 0, None):
        return rank_rational(rows)
    return rank_mod_p(rows, int(field))
