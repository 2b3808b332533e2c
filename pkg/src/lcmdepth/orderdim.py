"""Order dimension of finite posets, grid embeddings, and the join-closure maps.

The realizer search works on critical pairs: a family of linear extensions
realizes P iff every critical pair (a, b) is reversed (b below a) in one of
them. Each reversal is assigned to one of d buckets; a bucket stays feasible
while the transitive closure of (order ∪ its reversals) is acyclic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BoundExceededError, InvariantError, PreconditionError, ResourceCapError


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """Poset on {0, ..., N-1} given by its order matrix.

    Reflexivity, antisymmetry and transitivity are checked on construction.
    """

    def __init__(self, leq: Sequence[Sequence[bool]], labels: Sequence | None = None):
        N = len(leq)
        if N < 1:
            raise PreconditionError("a poset needs at least one element")
        if any(len(row) != N for row in leq):
            raise PreconditionError("order matrix is not square")
        up = [sum(1 << j for j in range(N) if leq[i][j]) for i in range(N)]
        for i in range(N):
            if not up[i] >> i & 1:
                raise InvariantError(f"order is not reflexive at {i}")
            for j in _bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise InvariantError(f"order is not antisymmetric at ({i}, {j})")
                if up[j] & ~up[i]:
                    raise InvariantError(f"order is not transitive through {j}")
        self.N = N
        self.up = tuple(up)
        down = [0] * N
        for i in range(N):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        self.down = tuple(down)
        self.labels = list(labels) if labels is not None else list(range(N))

    @classmethod
    def from_lattice(cls, L) -> "FinitePoset":
        return cls(L.leq_matrix(), [L.label(i) for i in range(len(L))])

    @classmethod
    def from_relation(cls, N: int, pairs: Iterable[tuple[int, int]], labels=None) -> "FinitePoset":
        """Reflexive-transitive closure of the given (lower, upper) pairs."""
        up = [1 << i for i in range(N)]
        for a, b in pairs:
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for i in range(N):
                acc = up[i]
                for j in _bits(up[i]):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        return cls([[bool(up[i] >> j & 1) for j in range(N)] for i in range(N)], labels)

    @classmethod
    def chain(cls, N: int) -> "FinitePoset":
        return cls([[i <= j for j in range(N)] for i in range(N)])

    @classmethod
    def antichain(cls, N: int) -> "FinitePoset":
        return cls([[i == j for j in range(N)] for i in range(N)])

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def leq_matrix(self) -> list[list[bool]]:
        return [[self.leq(i, j) for j in range(self.N)] for i in range(self.N)]

    def join(self, a: int, b: int) -> int:
        common = self.up[a] & self.up[b]
        for c in _bits(common):
            if self.down[c] & common == 1 << c:
                return c
        raise PreconditionError(f"elements {a}, {b} have no join")

    def minimum(self) -> int | None:
        for i in range(self.N):
            if self.up[i] == (1 << self.N) - 1:
                return i
        return None

    def relabel(self, perm: Sequence[int]) -> "FinitePoset":
        """Isomorphic copy where old element i becomes perm[i]."""
        N = self.N
        m = [[False] * N for _ in range(N)]
        for i in range(N):
            for j in _bits(self.up[i]):
                m[perm[i]][perm[j]] = True
        return FinitePoset(m)

    def with_new_minimum(self) -> "FinitePoset":
        N = self.N + 1
        m = [[i == 0 or (i > 0 and j > 0 and self.leq(i - 1, j - 1)) for j in range(N)] for i in range(N)]
        return FinitePoset(m)

    def to_json(self) -> str:
        return json.dumps({"n": self.N, "leq": self.leq_matrix()})

    @classmethod
    def from_json(cls, text: str) -> "FinitePoset":
        doc = json.loads(text)
        if len(doc["leq"]) != doc["n"]:
            raise PreconditionError("'n' does not match the order matrix")
        return cls(doc["leq"])


def incomparable_pairs(P: FinitePoset) -> list[tuple[int, int]]:
    return [(a, b) for a in range(P.N) for b in range(a + 1, P.N) if not P.comparable(a, b)]


def critical_pairs(P: FinitePoset) -> list[tuple[int, int]]:
    """Ordered incomparable (a, b) with D(a) ⊆ D(b) and U(b) ⊆ U(a), strict parts."""
    out = []
    for a in range(P.N):
        for b in range(P.N):
            if a == b or P.comparable(a, b):
                continue
            da, db = P.down[a] & ~(1 << a), P.down[b] & ~(1 << b)
            ua, ub = P.up[a] & ~(1 << a), P.up[b] & ~(1 << b)
            if da & ~db == 0 and ub & ~ua == 0:
                out.append((a, b))
    return out


@dataclass(frozen=True)
class Realizer:
    extensions: tuple  # each a tuple listing the elements bottom to top

    @property
    def d(self) -> int:
        return len(self.extensions)

    def to_json(self) -> str:
        return json.dumps({"d": self.d, "extensions": [list(e) for e in self.extensions]})


def is_linear_extension(P: FinitePoset, ext: Sequence[int]) -> bool:
    if sorted(ext) != list(range(P.N)):
        return False
    pos = {e: k for k, e in enumerate(ext)}
    return all(pos[a] <= pos[b] for a in range(P.N) for b in _bits(P.up[a]))


def verify_realizer(P: FinitePoset, R: Realizer) -> bool:
    if not R.extensions or not all(is_linear_extension(P, e) for e in R.extensions):
        return False
    positions = [{e: k for k, e in enumerate(ext)} for ext in R.extensions]
    for a in range(P.N):
        for b in range(P.N):
            if all(pos[a] <= pos[b] for pos in positions) != P.leq(a, b):
                return False
    return True


@dataclass
class SearchStats:
    nodes: int = 0


def _linear_extension(up: Sequence[int], N: int) -> tuple:
    """Topological sort of a (transitively closed) order, smallest index first."""
    placed = 0
    out = []
    down = [0] * N
    for i in range(N):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    while len(out) < N:
        for v in range(N):
            if not placed >> v & 1 and down[v] & ~placed == 1 << v:
                out.append(v)
                placed |= 1 << v
                break
        else:
            raise InvariantError("bucket order has a cycle")
    return tuple(out)


def realizer_exists(
    P: FinitePoset,
    d: int,
    pairs: str = "critical",
    max_nodes: int | None = None,
    stats: SearchStats | None = None,
) -> Realizer | None:
    """Complete backtracking search for a realizer of size ``d``.

    Returns a verified realizer, or None when none exists. ``pairs="all"``
    requires every ordered incomparable pair instead of only the critical ones.
    """
    N = P.N
    if d < 1:
        raise PreconditionError("d must be positive")
    if pairs == "critical":
        reqs = [(b, a) for a, b in critical_pairs(P)]  # put b below a
    elif pairs == "all":
        reqs = [(b, a) for a, b in incomparable_pairs(P)] + incomparable_pairs(P)
    else:
        raise ValueError(f"unknown pair mode {pairs!r}")
    stats = stats if stats is not None else SearchStats()
    if not reqs:
        R = Realizer((_linear_extension(P.up, N),) * d)
        return R

    # most-constrained first: pairs sharing an element with many others
    touch = [0] * N
    for lo, hi in reqs:
        touch[lo] += 1
        touch[hi] += 1
    reqs.sort(key=lambda p: (-(touch[p[0]] + touch[p[1]]), p))

    base_up = list(P.up)
    base_down = list(P.down)
    ups = [list(base_up) for _ in range(d)]
    downs = [list(base_down) for _ in range(d)]
    used = [False] * d

    def add(k: int, lo: int, hi: int) -> list:
        """Force lo < hi in bucket k; return an undo log."""
        up, down = ups[k], downs[k]
        log = []
        hi_up = up[hi]
        lo_down = down[lo]
        for x in _bits(lo_down):
            if hi_up & ~up[x]:
                log.append((0, x, up[x]))
                up[x] |= hi_up
        for y in _bits(hi_up):
            if lo_down & ~down[y]:
                log.append((1, y, down[y]))
                down[y] |= lo_down
        return log

    def undo(k: int, log: list) -> None:
        up, down = ups[k], downs[k]
        for kind, v, old in reversed(log):
            if kind == 0:
                up[v] = old
            else:
                down[v] = old

    def solve(remaining: list) -> bool:
        stats.nodes += 1
        if max_nodes is not None and stats.nodes > max_nodes:
            raise ResourceCapError(f"realizer search exceeded {max_nodes} nodes")
        best = None
        best_opts = None
        rest = []
        for lo, hi in remaining:
            if any(ups[k][lo] >> hi & 1 for k in range(d)):
                continue  # already satisfied somewhere
            opts = [k for k in range(d) if not ups[k][hi] >> lo & 1]
            if not opts:
                return False
            rest.append((lo, hi))
            if best is None or len(opts) < len(best_opts):
                best, best_opts = (lo, hi), opts
        if best is None:
            return True
        rest.remove(best)
        lo, hi = best
        tried_empty = False
        for k in best_opts:
            if not used[k]:
                # unused buckets are interchangeable
                if tried_empty:
                    continue
                tried_empty = True
            was_used = used[k]
            used[k] = True
            log = add(k, lo, hi)
            if solve(rest):
                return True
            undo(k, log)
            used[k] = was_used
        return False

    if not solve(reqs):
        return None
    R = Realizer(tuple(_linear_extension(ups[k], N) for k in range(d)))
    if not verify_realizer(P, R):
        raise InvariantError("realizer search produced an invalid realizer")
    return R


@dataclass(frozen=True)
class DimensionResult:
    dimension: int
    realizer: Realizer
    refuted_below: bool  # complete search failed at dimension - 1
    nodes: int

    def __iter__(self):
        # unpacks as (d, realizer)
        return iter((self.dimension, self.realizer))


def order_dimension(P: FinitePoset, d_max: int = 6, max_nodes: int | None = None) -> DimensionResult:
    """Minimal d <= d_max admitting a realizer, with the witness.

    Every smaller d is refuted by complete search, so the value is exact.
    """
    stats = SearchStats()
    for d in range(1, d_max + 1):
        R = realizer_exists(P, d, max_nodes=max_nodes, stats=stats)
        if R is not None:
            return DimensionResult(d, R, d >= 2, stats.nodes)
    raise BoundExceededError(f"order dimension exceeds d_max={d_max}")


@dataclass(frozen=True)
class GridEmbedding:
    d: int
    coords: tuple  # coords[i] is the point of element i

    def __call__(self, i: int) -> tuple:
        return self.coords[i]

    def to_json(self) -> str:
        return json.dumps({"d": self.d, "coordinates": [list(c) for c in self.coords]})


def _vleq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def _vmax(u: Sequence[int], v: Sequence[int]) -> tuple:
    return tuple(max(a, b) for a, b in zip(u, v))


def embed_from_realizer(P: FinitePoset, R: Realizer) -> GridEmbedding:
    if not verify_realizer(P, R):
        raise InvariantError("not a realizer of this poset")
    positions = [{e: k for k, e in enumerate(ext)} for ext in R.extensions]
    coords = tuple(tuple(pos[i] for pos in positions) for i in range(P.N))
    return GridEmbedding(R.d, coords)


def verify_embedding(P: FinitePoset, E: GridEmbedding) -> bool:
    """p <= q iff E(p) <= E(q) componentwise, for all ordered pairs."""
    if len(E.coords) != P.N:
        return False
    return all(
        P.leq(p, q) == _vleq(E.coords[p], E.coords[q]) for p in range(P.N) for q in range(P.N)
    )


@dataclass(frozen=True)
class GridSemilattice:
    d: int
    points: tuple  # sorted, closed under componentwise max

    def join(self, u, v) -> tuple:
        return _vmax(u, v)


def join_closure_in_grid(points: Iterable[Sequence[int]], max_points: int = 10**6) -> GridSemilattice:
    pts = [tuple(p) for p in points]
    if not pts:
        raise PreconditionError("join closure of an empty point set")
    d = len(pts[0])
    closure: set = set()
    for p in pts:
        closure |= {p} | {_vmax(s, p) for s in closure}
        if len(closure) > max_points:
            raise ResourceCapError(f"join closure exceeds {max_points} points")
    return GridSemilattice(d, tuple(sorted(closure, key=lambda p: (sum(p), p))))


@dataclass(frozen=True)
class JoinMap:
    """A map φ from a grid semilattice onto the elements of a poset."""

    domain: GridSemilattice
    table: Mapping  # point -> element index


def _join_all(P: FinitePoset, elems: Iterable[int]) -> int:
    acc = None
    for e in elems:
        acc = e if acc is None else P.join(acc, e)
    if acc is None:
        raise PreconditionError("join of an empty set in a poset without a minimum")
    return acc


def check_join_map(P: FinitePoset, phi: JoinMap) -> list[str]:
    """Names of the failed properties among surjective / monotonic / join-preserving."""
    bad = []
    pts = phi.domain.points
    if set(phi.table.values()) != set(range(P.N)):
        bad.append("surjective")
    for u in pts:
        for v in pts:
            if _vleq(u, v) and not P.leq(phi.table[u], phi.table[v]):
                bad.append("monotonic")
                break
        else:
            continue
        break
    for u in pts:
        for v in pts:
            if phi.table[_vmax(u, v)] != P.join(phi.table[u], phi.table[v]):
                bad.append("join-preserving")
                return bad
    return bad


def phi_from_embedding(P: FinitePoset, E: GridEmbedding, max_points: int = 10**6) -> JoinMap:
    """φ(x') = ⋁{x : E(x) <= x'} on the join closure of the image of E.

    Checked on return: surjective, monotonic, join-preserving, φ∘E = id and
    E(φ(x')) >= x' for every x'.
    """
    if not verify_embedding(P, E):
        raise InvariantError("not a valid embedding")
    if P.minimum() is None:
        raise PreconditionError("φ needs a join-semilattice with a minimum")
    dom = join_closure_in_grid(E.coords, max_points)
    table = {}
    for x in dom.points:
        table[x] = _join_all(P, (i for i in range(P.N) if _vleq(E.coords[i], x)))
    phi = JoinMap(dom, table)
    bad = check_join_map(P, phi)
    if bad:
        raise InvariantError(f"φ fails: {', '.join(bad)}")
    for i in range(P.N):
        if table[E.coords[i]] != i:
            raise InvariantError("φ∘j is not the identity")
    for x in dom.points:
        if not _vleq(x, E.coords[table[x]]):
            raise InvariantError("j(φ(x')) >= x' fails")
    return phi


def phi_dagger(P: FinitePoset, phi: JoinMap) -> GridEmbedding:
    """a ↦ componentwise max of φ⁻¹(a); an embedding of P into the grid."""
    bad = [b for b in check_join_map(P, phi) if b != "monotonic"]
    if bad:
        raise PreconditionError(f"φ is not {' and '.join(bad)}")
    pre: dict[int, tuple] = {}
    for x, a in phi.table.items():
        pre[a] = x if a not in pre else _vmax(pre[a], x)
    E = GridEmbedding(phi.domain.d, tuple(pre[a] for a in range(P.N)))
    if not verify_embedding(P, E):
        raise InvariantError("φ† is not an embedding")
    return E
