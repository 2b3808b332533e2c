"""The lcm lattice L_{I/J}: all lcms of nonempty subsets of G(I) ∪ G(J), plus 0̂."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import InvariantError, NotFoundError, ResourceCapError, UndefinedInvariantError
from .monomial import Quotient, as_quotient, divides, format_monomial, grlex_key, lcm
from .simplicial import SimplicialComplex


class _Bottom:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "0̂"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()

DEFAULT_MAX_ELEMENTS = 10**6


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class LcmLattice:
    """Index 0 is 0̂; indices 1.. are monomials in graded-lex order.

    ``up[i]`` / ``down[i]`` are bitmasks of the elements above / below i
    (inclusive), so ``i <= j`` iff ``up[i] >> j & 1``.
    """

    n: int
    elements: tuple
    marks: tuple  # per element: frozenset of {"I", "J"}
    up: tuple
    down: tuple

    @cached_property
    def index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def monomials(self) -> tuple:
        return self.elements[1:]

    @property
    def top(self) -> int:
        return len(self.elements) - 1

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def join(self, i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        return self.index[lcm(self.elements[i], self.elements[j])]

    @cached_property
    def join_table(self) -> tuple:
        N = len(self)
        return tuple(tuple(self.join(i, j) for j in range(N)) for i in range(N))

    @cached_property
    def covers(self) -> tuple:
        """Hasse diagram as a sorted tuple of (lower, upper) index pairs."""
        out = []
        for i in range(len(self)):
            above = self.up[i] & ~(1 << i)
            for j in _bits(above):
                if self.down[j] & above == 1 << j:
                    out.append((i, j))
        return tuple(sorted(out))

    def leq_matrix(self) -> list[list[bool]]:
        N = len(self)
        return [[self.leq(i, j) for j in range(N)] for i in range(N)]

    def label(self, i: int, names=None) -> str:
        e = self.elements[i]
        return "0̂" if e is BOTTOM else format_monomial(e, names)

    def find(self, m) -> int:
        if m is BOTTOM:
            return 0
        try:
            return self.index[tuple(m)]
        except (KeyError, TypeError):
            raise NotFoundError(f"{m} is not an element of the lattice") from None


def build_lcm_lattice(Q, max_elements: int = DEFAULT_MAX_ELEMENTS) -> LcmLattice:
    Q: Quotient = as_quotient(Q)
    gens = Q.generator_set
    if not gens:
        raise UndefinedInvariantError("lcm lattice of an empty generator set")
    closure: set = set()
    for g in gens:
        new = {g} | {lcm(s, g) for s in closure}
        closure |= new
        if len(closure) + 1 > max_elements:
            raise ResourceCapError(f"lcm lattice exceeds {max_elements} elements")
    mons = sorted(closure, key=grlex_key)
    elements = (BOTTOM, *mons)
    gI, gJ = set(Q.numerator.generators), set(Q.denominator.generators)
    marks = [frozenset()]
    for m in mons:
        marks.append(frozenset(t for t, s in (("I", gI), ("J", gJ)) if m in s))
    N = len(elements)
    up = [0] * N
    down = [0] * N
    up[0] = (1 << N) - 1
    for j in range(N):
        down[j] |= 1
    for i in range(1, N):
        up[i] |= 1 << i
        down[i] |= 1 << i
        for j in range(i + 1, N):
            if divides(mons[i - 1], mons[j - 1]):
                up[i] |= 1 << j
                down[j] |= 1 << i
    return LcmLattice(Q.n, elements, tuple(marks), tuple(up), tuple(down))


def lattice_length(L: LcmLattice) -> int:
    """Longest chain length, as a longest path in the Hasse diagram."""
    # indices are a linear extension, so one forward pass suffices
    longest = [0] * len(L)
    for lo, hi in L.covers:
        if longest[lo] + 1 > longest[hi]:
            longest[hi] = longest[lo] + 1
    return max(longest)


def join_irreducibles(L: LcmLattice) -> list[int]:
    """Non-bottom m that are not a join of two elements strictly below m."""
    out = []
    for m in range(1, len(L)):
        below = list(_bits(L.down[m] & ~(1 << m)))
        if not any(L.join(a, b) == m for k, a in enumerate(below) for b in below[k:]):
            out.append(m)
    for m in range(1, len(L)):
        acc = 0
        for a in out:
            if L.leq(a, m):
                acc = L.join(acc, a)
        if acc != m:
            raise InvariantError(f"element {L.label(m)} is not a join of join-irreducibles")
    return out


def open_interval_order_complex(L: LcmLattice, m) -> tuple:
    """Order complex of the open interval (0̂, m).

    Returns ``(complex, vertex_elements)``: the complex has lattice indices as
    vertices and the maximal chains as facets. An empty interval gives the
    empty complex {∅}.
    """
    mi = m if isinstance(m, int) else L.find(m)
    if not 0 < mi < len(L):
        raise NotFoundError(f"{m!r} is not a non-bottom element of the lattice")
    inside = L.down[mi] & ~(1 << mi) & ~1
    verts = list(_bits(inside))
    if not verts:
        return SimplicialComplex((), (frozenset(),)), []
    covers_in: dict[int, list[int]] = {v: [] for v in verts}
    for lo, hi in L.covers:
        if lo in covers_in and hi in covers_in:
            covers_in[lo].append(hi)
    has_lower = {hi for lo in verts for hi in covers_in[lo]}
    chains: list[frozenset] = []

    def extend(path: list[int]):
        nxt = covers_in[path[-1]]
        if not nxt:
            chains.append(frozenset(path))
            return
        for h in nxt:
            path.append(h)
            extend(path)
            path.pop()

    for v in verts:
        if v not in has_lower:
            extend([v])
    return SimplicialComplex(tuple(verts), tuple(chains)), [L.elements[v] for v in verts]


def export_lattice(L: LcmLattice, fmt: str = "json", names=None) -> str:
    if fmt == "dot":
        lines = ["digraph lcm_lattice {", "  rankdir=BT;"]
        for i in range(len(L)):
            shape = ', shape=box' if L.marks[i] else ""
            lines.append(f'  n{i} [label="{L.label(i, names)}"{shape}];')
        for lo, hi in L.covers:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "variables": L.n,
            "elements": [
                {
                    "id": i,
                    "monomial": None if e is BOTTOM else list(e),
                    "generator_of": sorted(L.marks[i]),
                }
                for i, e in enumerate(L.elements)
            ],
            "covers": [list(c) for c in L.covers],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")


def import_lattice_json(text: str) -> LcmLattice:
    """Rebuild a lattice from :func:`export_lattice` JSON (order from covers)."""
    doc = json.loads(text)
    elems = sorted(doc["elements"], key=lambda d: d["id"])
    elements = tuple(BOTTOM if d["monomial"] is None else tuple(d["monomial"]) for d in elems)
    marks = tuple(frozenset(d.get("generator_of", ())) for d in elems)
    N = len(elements)
    succ: list[list[int]] = [[] for _ in range(N)]
    for lo, hi in doc["covers"]:
        succ[lo].append(hi)
    up = [1 << i for i in range(N)]
    for i in reversed(range(N)):
        for h in succ[i]:
            up[i] |= up[h]
    down = [0] * N
    for i in range(N):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    return LcmLattice(doc["variables"], elements, marks, tuple(up), tuple(down))
