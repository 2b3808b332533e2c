"""Reduced simplicial homology and multigraded Betti numbers of monomial ideals.

Two independent routes to the Betti numbers of S/I:

* upper Koszul complexes: b_{i,a}(I) = dim H̃_{i-1}(K^a(I)),
  K^a(I) = {W ⊆ supp(a) : x^(a - W) ∈ I};
* the lcm lattice: b_{i,m}(S/I) = dim H̃_{i-2}((0̂, m)) for m ∈ L_I.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvariantError, PreconditionError
from .lattice import build_lcm_lattice, open_interval_order_complex
from .linalg import rank
from .monomial import MonomialIdeal, grlex_key
from .simplicial import SimplicialComplex

DEFAULT_PRIME = 32003


def reduced_homology_dims(K: SimplicialComplex, field="Q") -> dict[int, int]:
    """{k: dim H̃_k(K)} for k = -1 .. dim K (all zeros for the void complex)."""
    if K.is_void:
        return {}
    by_dim: dict[int, list[tuple]] = {}
    for f in K.faces():
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    top = max(by_dim)
    for k in by_dim:
        by_dim[k].sort()
    index = {k: {f: i for i, f in enumerate(fs)} for k, fs in by_dim.items()}

    def boundary_rank(k: int) -> int:
        # rank of ∂_k : C_k -> C_{k-1}
        if k not in by_dim or k - 1 not in by_dim:
            return 0
        rows = []
        lower = index[k - 1]
        for f in by_dim[k]:
            row = [0] * len(lower)
            for j in range(len(f)):
                row[lower[f[:j] + f[j + 1:]]] = -1 if j % 2 else 1
            rows.append(row)
        return rank(rows, field)

    ranks = {k: boundary_rank(k) for k in range(0, top + 2)}
    return {
        k: len(by_dim.get(k, ())) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        for k in range(-1, top + 1)
    }


def upper_koszul_complex(I: MonomialIdeal, a) -> SimplicialComplex:
    a = tuple(a)
    verts = [i for i, e in enumerate(a) if e >= 1]
    faces = []
    for k in range(len(verts) + 1):
        for W in combinations(verts, k):
            b = tuple(e - (1 if i in W else 0) for i, e in enumerate(a))
            if I.contains(b):
                faces.append(frozenset(W))
    return SimplicialComplex(tuple(range(I.n)), tuple(faces))


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers {(i, degree): value}.

    ``scope`` is "ideal" for b_{i,a}(I) or "quotient" for b_{i,a}(S/I).
    """

    n: int
    scope: str
    entries: dict = field(default_factory=dict)

    def to_quotient(self) -> "BettiTable":
        if self.scope == "quotient":
            return self
        out = {(0, (0,) * self.n): 1}
        out.update({(i + 1, a): v for (i, a), v in self.entries.items()})
        return BettiTable(self.n, "quotient", out)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def graded(self) -> dict[tuple[int, int], int]:
        """Coarsen to the standard grading {(i, total degree): value}."""
        out: dict = {}
        for (i, a), v in self.entries.items():
            out[(i, sum(a))] = out.get((i, sum(a)), 0) + v
        return out

    def totals(self) -> dict[int, int]:
        out: dict = {}
        for (i, _), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return dict(sorted(out.items()))

    def sorted_entries(self) -> list:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], grlex_key(kv[0][1])))

    def to_json(self) -> str:
        rows = [{"i": i, "degree": list(a), "value": v} for (i, a), v in self.sorted_entries()]
        return json.dumps(rows, indent=2)


def _check_ideal(I: MonomialIdeal) -> None:
    if I.is_zero or I.is_unit:
        raise PreconditionError("Betti numbers need a nonzero proper ideal")


def multigraded_betti(I: MonomialIdeal, field="Q", degrees=None) -> BettiTable:
    """Betti table of I via upper Koszul complexes.

    Candidate degrees default to the monomials of L_I; pass ``degrees`` to
    scan a different set.
    """
    _check_ideal(I)
    if degrees is None:
        degrees = build_lcm_lattice(I).monomials
    entries = {}
    for a in degrees:
        a = tuple(a)
        for k, v in reduced_homology_dims(upper_koszul_complex(I, a), field).items():
            if v:
                entries[(k + 1, a)] = v
    return BettiTable(I.n, "ideal", entries)


def betti_via_lcm_lattice(I: MonomialIdeal, field="Q") -> BettiTable:
    """Betti table of S/I from the open lower intervals of L_I."""
    _check_ideal(I)
    L = build_lcm_lattice(I)
    entries = {(0, (0,) * I.n): 1}
    for mi in range(1, len(L)):
        K, _ = open_interval_order_complex(L, mi)
        for k, v in reduced_homology_dims(K, field).items():
            if v:
                entries[(k + 2, L.elements[mi])] = v
    return BettiTable(I.n, "quotient", entries)


@dataclass(frozen=True)
class DepthData:
    pd_SI: int
    depth_SI: int
    depth_I: int


def depth_and_pd(I: MonomialIdeal, field="Q") -> DepthData:
    """pd(S/I), depth(S/I) = n - pd(S/I) and depth(I) = depth(S/I) + 1.

    Both Betti routes are computed and required to agree.
    """
    koszul = multigraded_betti(I, field).to_quotient()
    lattice = betti_via_lcm_lattice(I, field)
    if koszul.entries != lattice.entries:
        raise InvariantError(f"Betti routes disagree for {I}")
    pd = koszul.projective_dimension
    return DepthData(pd, I.n - pd, I.n - pd + 1)


def depth_of_quotient_ring(I: MonomialIdeal, field="Q") -> int:
    """depth(S/I), extended to I = 0 (depth n)."""
    if I.is_zero:
        return I.n
    return depth_and_pd(I, field).depth_SI
