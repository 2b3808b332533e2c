"""Simplicial complexes, Stanley-Reisner ideals and vertex decomposability.

A complex lives on an explicit ground set of vertex labels (``ground``); the
i-th ground vertex corresponds to the i-th variable of its Stanley-Reisner
ring. Faces are frozensets of labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import NotFoundError, PreconditionError
from .monomial import MonomialIdeal


def _maximal(sets: Iterable[frozenset]) -> tuple:
    cands = sorted(set(sets), key=lambda s: (-len(s), sorted(s)))
    kept: list[frozenset] = []
    for s in cands:
        if not any(s <= t for t in kept):
            kept.append(s)
    return tuple(sorted(kept, key=lambda s: (len(s), sorted(s))))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex given by its facets.

    ``facets=()`` is the void complex (no faces at all); ``facets=(frozenset(),)``
    is the empty complex {∅}. The two are distinct.
    """

    ground: tuple
    facets: tuple = ()

    def __post_init__(self):
        ground = tuple(sorted(set(self.ground)))
        facets = _maximal(frozenset(f) for f in self.facets)
        gset = set(ground)
        for f in facets:
            if not f <= gset:
                raise PreconditionError(f"facet {sorted(f)} not inside ground set {ground}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "facets", facets)

    @classmethod
    def on(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Complex on ground set {0, ..., n-1}."""
        return cls(tuple(range(n)), tuple(frozenset(f) for f in facets))

    @classmethod
    def simplex(cls, ground: Iterable[int]) -> "SimplicialComplex":
        g = tuple(ground)
        return cls(g, (frozenset(g),))

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    @property
    def dim(self) -> int:
        if self.is_void:
            raise PreconditionError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    def contains(self, face: Iterable) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self) -> Iterator[frozenset]:
        seen: set[frozenset] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                for c in combinations(sorted(f), k):
                    s = frozenset(c)
                    if s not in seen:
                        seen.add(s)
                        yield s

    def facet_lists(self) -> list[list]:
        return [sorted(f) for f in self.facets]

    def __str__(self) -> str:
        if self.is_void:
            return "<void>"
        return "<" + ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets) + ">"


def _variable_index(D: SimplicialComplex) -> dict:
    return {v: i for i, v in enumerate(D.ground)}


def _squarefree(face: Iterable, index: dict, n: int) -> tuple:
    e = [0] * n
    for v in face:
        e[index[v]] = 1
    return tuple(e)


def stanley_reisner_ideal(D: SimplicialComplex) -> MonomialIdeal:
    """I_Δ, generated by x_F for the minimal nonfaces F."""
    if D.is_void:
        raise PreconditionError("the void complex has no Stanley-Reisner ideal")
    index = _variable_index(D)
    nonfaces = set()
    # breadth-first: a minimal nonface is F ∪ {v} with F a face whose every
    # one-smaller subset is a face
    for F in D.faces():
        for v in D.ground:
            if v in F:
                continue
            G = F | {v}
            if D.contains(G):
                continue
            if all(D.contains(G - {w}) for w in G):
                nonfaces.add(G)
    return MonomialIdeal(D.n, tuple(_squarefree(G, index, D.n) for G in nonfaces))


def complex_from_squarefree_ideal(I: MonomialIdeal, ground: Iterable | None = None) -> SimplicialComplex:
    """The unique Δ with I_Δ = I."""
    if not I.is_squarefree:
        raise PreconditionError("ideal is not squarefree")
    if I.is_unit:
        raise PreconditionError("the unit ideal corresponds to the void complex")
    ground = tuple(range(I.n)) if ground is None else tuple(ground)
    if len(ground) != I.n:
        raise PreconditionError("ground set size does not match the number of variables")
    gen_masks = [sum(1 << i for i, a in enumerate(g) if a) for g in I.generators]
    faces = []
    for mask in range(1 << I.n):
        if not any(g & mask == g for g in gen_masks):
            faces.append(frozenset(ground[i] for i in range(I.n) if mask >> i & 1))
    return SimplicialComplex(ground, tuple(faces))


def link(D: SimplicialComplex, F: Iterable) -> SimplicialComplex:
    return link_and_deletion(D, F)[0]


def deletion(D: SimplicialComplex, F: Iterable) -> SimplicialComplex:
    return link_and_deletion(D, F)[1]


def link_and_deletion(D: SimplicialComplex, F: Iterable) -> tuple:
    """(lk_Δ(F), del_Δ(F)), both on the ground set [n] minus F."""
    F = frozenset(F)
    if not D.contains(F):
        raise NotFoundError(f"{sorted(F)} is not a face")
    ground = tuple(v for v in D.ground if v not in F)
    lk = SimplicialComplex(ground, tuple(G - F for G in D.facets if F <= G))
    dl = SimplicialComplex(ground, tuple(G - F for G in D.facets))
    return lk, dl


def pure_skeleton(D: SimplicialComplex, i: int) -> SimplicialComplex:
    """⟨F ∈ Δ : dim F = i⟩."""
    if D.is_void or not 0 <= i <= D.dim:
        raise PreconditionError(f"skeleton index {i} out of range")
    faces = set()
    for f in D.facets:
        if len(f) >= i + 1:
            faces.update(frozenset(c) for c in combinations(sorted(f), i + 1))
    return SimplicialComplex(D.ground, tuple(faces))


def min_facet_size(D: SimplicialComplex) -> int:
    if D.is_void:
        raise PreconditionError("the void complex has no facets")
    return min(len(f) for f in D.facets)


@dataclass(frozen=True)
class SheddingTree:
    """Witness of vertex decomposability.

    ``vertex is None`` marks a simplex leaf; otherwise ``vertex`` is a shedding
    vertex and the subtrees certify its link and deletion.
    """

    facets: tuple
    vertex: object = None
    link: "SheddingTree | None" = None
    deletion: "SheddingTree | None" = None

    def depth(self) -> int:
        if self.vertex is None:
            return 0
        return 1 + max(self.link.depth(), self.deletion.depth())


@dataclass
class VertexDecomposability:
    decomposable: bool
    witness: SheddingTree | None = None
    # number of distinct subcomplexes examined; a refutation is exhaustive over them
    explored: int = 0
    memo: dict = field(default_factory=dict, repr=False)

    def __bool__(self) -> bool:
        return self.decomposable


def is_vertex_decomposable(D: SimplicialComplex) -> VertexDecomposability:
    if D.is_void:
        raise PreconditionError("vertex decomposability of the void complex")
    memo: dict[tuple, SheddingTree | None] = {}

    def rec(C: SimplicialComplex) -> SheddingTree | None:
        key = C.facets
        if key in memo:
            return memo[key]
        if C.is_simplex:
            memo[key] = SheddingTree(C.facets)
            return memo[key]
        memo[key] = None
        facet_set = set(C.facets)
        for k in sorted(C.vertices):
            lk, dl = link_and_deletion(C, {k})
            if not all(f in facet_set for f in dl.facets):
                continue
            t_dl = rec(dl)
            if t_dl is None:
                continue
            t_lk = rec(lk)
            if t_lk is None:
                continue
            memo[key] = SheddingTree(C.facets, k, t_lk, t_dl)
            break
        return memo[key]

    tree = rec(D)
    return VertexDecomposability(tree is not None, tree, len(memo), memo)


def all_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every non-void complex on ground set {0, ..., n-1} (one per antichain)."""
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]

    def antichains(i: int, chosen: list) -> Iterator[list]:
        if i == len(subsets):
            yield list(chosen)
            return
        yield from antichains(i + 1, chosen)
        s = subsets[i]
        if not any(s <= t or t <= s for t in chosen):
            chosen.append(s)
            yield from antichains(i + 1, chosen)
            chosen.pop()

    for ac in antichains(0, []):
        if ac:
            yield SimplicialComplex(tuple(range(n)), tuple(ac))
