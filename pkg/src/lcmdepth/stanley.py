"""Exact Stanley depth via interval partitions of the characteristic poset.

For a box g (at least the lcm of all generators), the characteristic poset
of I/J is {a <= g : x^a ∈ I \\ J}. An interval [a, b] inside it encodes the
Stanley space x^a K[Z] with Z = {x_i : b_i = g_i}, so sdepth(I/J) is the
largest s admitting a partition into intervals whose tops all have
rho(b) = |{i : b_i = g_i}| >= s.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Sequence

from .errors import PreconditionError, ResourceCapError
from .monomial import Quotient, as_quotient, free_variable_shift, grlex_key, lcm_all  # noqa: F401

DEFAULT_MAX_POINTS = 10**6


@dataclass(frozen=True)
class Interval:
    bottom: tuple
    top: tuple

    def points(self):
        return product(*(range(lo, hi + 1) for lo, hi in zip(self.bottom, self.top)))


@dataclass(frozen=True, eq=False)
class CharacteristicPoset:
    g: tuple
    points: tuple  # graded-lex order, a linear extension of the componentwise order

    @property
    def n(self) -> int:
        return len(self.g)

    @cached_property
    def index(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}

    def rho(self, b: Sequence[int]) -> int:
        return sum(1 for x, y in zip(b, self.g) if x == y)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.index

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class StanleyCertificate:
    value: int
    g: tuple
    intervals: tuple

    def stanley_spaces(self) -> list[tuple[tuple, tuple]]:
        """Each interval as (u, Z): exponent of u and the indices of Z."""
        return [
            (iv.bottom, tuple(i for i, (t, gi) in enumerate(zip(iv.top, self.g)) if t == gi))
            for iv in self.intervals
        ]

    def to_json(self) -> str:
        doc = {
            "value": self.value,
            "g": list(self.g),
            "intervals": [{"bottom": list(iv.bottom), "top": list(iv.top)} for iv in self.intervals],
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "StanleyCertificate":
        doc = json.loads(text)
        ivs = tuple(Interval(tuple(d["bottom"]), tuple(d["top"])) for d in doc["intervals"])
        return cls(doc["value"], tuple(doc["g"]), ivs)


def default_box(Q) -> tuple:
    Q = as_quotient(Q)
    return lcm_all(Q.generator_set, Q.n)


def characteristic_poset(Q, g=None, max_points: int = DEFAULT_MAX_POINTS) -> CharacteristicPoset:
    Q: Quotient = as_quotient(Q)
    g0 = default_box(Q)
    g = g0 if g is None else tuple(g)
    if len(g) != Q.n or any(a < b for a, b in zip(g, g0)):
        raise PreconditionError(f"box {g} does not dominate the generator lcm {g0}")
    size = 1
    for x in g:
        size *= x + 1
    if size > max_points:
        raise ResourceCapError(f"box of {size} points exceeds cap {max_points}")
    pts = [a for a in product(*(range(x + 1) for x in g)) if Q.contains(a)]
    return CharacteristicPoset(g, tuple(sorted(pts, key=grlex_key)))


def _box_mask(P: CharacteristicPoset, a: tuple, b: tuple) -> int | None:
    mask = 0
    index = P.index
    for c in Interval(a, b).points():
        i = index.get(c)
        if i is None:
            return None
        mask |= 1 << i
    return mask


def _candidate_tops(P: CharacteristicPoset, a: tuple, s: int, minimal_tops: bool):
    if minimal_tops:
        # any valid top dominates one of these, and the rest of its box splits
        # into intervals whose tops keep rho >= s
        need = s - P.rho(a)
        if need <= 0:
            yield a
            return
        free = [i for i in range(P.n) if a[i] < P.g[i]]
        for T in combinations(free, need):
            b = list(a)
            for i in T:
                b[i] = P.g[i]
            yield tuple(b)
    else:
        for b in P.points:
            if P.rho(b) >= s and all(x <= y for x, y in zip(a, b)):
                yield b


def sdepth_decision(
    P: CharacteristicPoset,
    s: int,
    minimal_tops: bool = True,
    max_nodes: int | None = None,
) -> StanleyCertificate | None:
    """A partition of P into intervals with every rho(top) >= s, or None.

    The least uncovered point (graded lex) must be the bottom of its
    interval, so the search branches only over its possible tops. Failed
    cover states are memoized; a None answer is exhaustive.
    """
    if not 0 <= s <= P.n:
        raise PreconditionError(f"s={s} outside 0..{P.n}")
    N = len(P)
    full = (1 << N) - 1
    pts = P.points
    # prune: every uncovered point needs an uncovered point above it with rho >= s
    high = [P.rho(b) >= s for b in pts]
    reach = [0] * N
    for i, c in enumerate(pts):
        for j in range(i, N):
            if high[j] and all(x <= y for x, y in zip(c, pts[j])):
                reach[i] |= 1 << j
    options: dict[int, list[tuple[int, tuple]]] = {}

    def opts(i: int):
        if i not in options:
            a = pts[i]
            lst = []
            for b in _candidate_tops(P, a, s, minimal_tops):
                m = _box_mask(P, a, b)
                if m is not None:
                    lst.append((m, b))
            options[i] = lst
        return options[i]

    failed: set[int] = set()
    chosen: list[Interval] = []
    nodes = 0

    def rec(covered: int) -> bool:
        nonlocal nodes
        if covered == full:
            return True
        if covered in failed:
            return False
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise ResourceCapError(f"sdepth search exceeded {max_nodes} nodes")
        free = full & ~covered
        rest = free
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            if not reach[c] & free:
                failed.add(covered)
                return False
            rest ^= low
        i = (free & -free).bit_length() - 1
        for m, b in opts(i):
            if m & covered:
                continue
            chosen.append(Interval(pts[i], b))
            if rec(covered | m):
                return True
            chosen.pop()
        failed.add(covered)
        return False

    if not rec(0):
        return None
    value = min(P.rho(iv.top) for iv in chosen)
    return StanleyCertificate(value, P.g, tuple(chosen))


def sdepth_exact(Q, g=None, minimal_tops: bool = True, max_points: int = DEFAULT_MAX_POINTS) -> StanleyCertificate:
    """sdepth(Q) with a certificate, trying s = n, n-1, ... until one succeeds."""
    P = characteristic_poset(Q, g, max_points)
    for s in range(P.n, -1, -1):
        cert = sdepth_decision(P, s, minimal_tops)
        if cert is not None:
            return cert
    raise AssertionError("the singleton partition always certifies s = 0")


def sdepth(Q, g=None) -> int:
    return sdepth_exact(Q, g).value


def verify_certificate(P: CharacteristicPoset, C: StanleyCertificate) -> bool:
    """Disjoint exact cover of P by boxes inside P, with min rho(top) = value."""
    if tuple(C.g) != tuple(P.g) or not C.intervals:
        return False
    seen: set = set()
    target = set(P.points)
    for iv in C.intervals:
        if len(iv.bottom) != P.n or len(iv.top) != P.n:
            return False
        if any(x > y for x, y in zip(iv.bottom, iv.top)):
            return False
        for c in iv.points():
            if c not in target or c in seen:
                return False
            seen.add(c)
    if seen != target:
        return False
    return min(P.rho(iv.top) for iv in C.intervals) == C.value
