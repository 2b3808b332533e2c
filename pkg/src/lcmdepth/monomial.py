"""Exponent vectors, monomial ideals and quotients I/J.

Monomials are plain tuples of non-negative ints (the exponent vector).
Variables are indexed from 0 in the Python API.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DegenerateQuotientError,
    DimensionError,
    PreconditionError,
    UndefinedInvariantError,
)
from .linalg import rank_rational

Monomial = tuple  # tuple[int, ...]


def _same_n(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise DimensionError(f"ambient dimensions differ: {len(u)} vs {len(v)}")


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _same_n(u, v)
    return tuple(a if a >= b else b for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _same_n(u, v)
    return tuple(a if a <= b else b for a, b in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff x^u divides x^v."""
    _same_n(u, v)
    return all(a <= b for a, b in zip(u, v))


def degree(u: Monomial) -> int:
    return sum(u)


def support(u: Monomial) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(u) if a)


def is_squarefree(u: Monomial) -> bool:
    return all(a <= 1 for a in u)


def lcm_all(monomials: Iterable[Monomial], n: int) -> Monomial:
    out = (0,) * n
    for u in monomials:
        out = lcm(out, u)
    return out


def variable(i: int, n: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(n))


def grlex_key(u: Monomial):
    """Graded lex: lower degree first, then larger leading exponents first.

    For two variables this orders degree-2 monomials as x^2, xy, y^2.
    """
    return (sum(u), tuple(-a for a in u))


def _as_monomial(u: Iterable[int], n: int) -> Monomial:
    t = tuple(int(a) for a in u)
    if len(t) != n:
        raise DimensionError(f"exponent vector {t} has length {len(t)}, expected {n}")
    if any(a < 0 for a in t):
        raise PreconditionError(f"negative exponent in {t}")
    return t


def minimal_elements(gens: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal elements of ``gens``, sorted in graded lex order."""
    cands = sorted(set(gens), key=grlex_key)
    kept: list[Monomial] = []
    for u in cands:
        # sorted by degree, so only earlier elements can divide u
        if not any(divides(g, u) for g in kept):
            kept.append(u)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators G(I).

    Construction always minimalizes and sorts, so two ideals compare equal
    iff they are the same ideal.
    """

    n: int
    generators: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("n must be non-negative")
        gens = [_as_monomial(g, self.n) for g in self.generators]
        object.__setattr__(self, "generators", tuple(minimal_elements(gens)))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.n,)

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.generators)

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def contains(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.generators)

    def __contains__(self, u) -> bool:
        return self.contains(tuple(u))

    def is_subideal_of(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def lcm_of_generators(self) -> Monomial:
        return lcm_all(self.generators, self.n)

    def __str__(self) -> str:
        names = default_variable_names(self.n)
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, names) for g in self.generators) + ")"


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise PreconditionError("cannot infer n from an empty generator set")
        n = len(gens[0])
    return MonomialIdeal(n, tuple(gens))


def default_variable_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


def format_monomial(u: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or default_variable_names(len(u))
    parts = []
    for name, a in zip(names, u):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts) if parts else "1"


class Shape(enum.Enum):
    IDEAL = "ideal"  # J = 0
    RING = "ring-quotient"  # I = S
    PROPER = "proper"


@dataclass(frozen=True)
class Quotient:
    """The module I/J for monomial ideals J strictly contained in I."""

    numerator: MonomialIdeal
    denominator: MonomialIdeal

    def __post_init__(self):
        I, J = self.numerator, self.denominator
        if I.n != J.n:
            raise DimensionError(f"numerator has n={I.n}, denominator n={J.n}")
        if not J.is_subideal_of(I):
            raise DegenerateQuotientError("denominator is not contained in numerator")
        if I.is_subideal_of(J):
            raise DegenerateQuotientError("numerator equals denominator")

    @classmethod
    def ideal(cls, I: MonomialIdeal) -> "Quotient":
        return cls(I, MonomialIdeal.zero(I.n))

    @classmethod
    def ring(cls, I: MonomialIdeal) -> "Quotient":
        """S/I."""
        return cls(MonomialIdeal.unit(I.n), I)

    @property
    def n(self) -> int:
        return self.numerator.n

    @property
    def shape(self) -> Shape:
        if self.denominator.is_zero:
            return Shape.IDEAL
        if self.numerator.is_unit:
            return Shape.RING
        return Shape.PROPER

    @cached_property
    def generator_set(self) -> tuple:
        """G(I) ∪ G(J) as a sorted set."""
        return tuple(
            sorted(set(self.numerator.generators) | set(self.denominator.generators), key=grlex_key)
        )

    def contains(self, u: Monomial) -> bool:
        """True iff x^u is a nonzero element of I/J."""
        return self.numerator.contains(u) and not self.denominator.contains(u)

    def __str__(self) -> str:
        if self.shape is Shape.IDEAL:
            return str(self.numerator)
        if self.shape is Shape.RING:
            return f"S/{self.denominator}"
        return f"{self.numerator}/{self.denominator}"


def as_quotient(Q) -> Quotient:
    """Accept a Quotient, or a MonomialIdeal read as I/0."""
    if isinstance(Q, Quotient):
        return Q
    if isinstance(Q, MonomialIdeal):
        if Q.is_zero:
            raise UndefinedInvariantError("invariant of the zero ideal (empty generator set)")
        return Quotient.ideal(Q)
    raise TypeError(f"expected Quotient or MonomialIdeal, got {type(Q).__name__}")


def _check_var(i: int, n: int) -> None:
    if not 0 <= i < n:
        raise PreconditionError(f"variable index {i} out of range for n={n}")


def colon_ideal(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """(I : x_i), generated by u / gcd(u, x_i)."""
    _check_var(i, I.n)
    return MonomialIdeal(
        I.n, tuple(u[:i] + (max(u[i] - 1, 0),) + u[i + 1:] for u in I.generators)
    )


def colon_by_variable(Q: Quotient, i: int) -> Quotient:
    I, J = colon_ideal(Q.numerator, i), colon_ideal(Q.denominator, i)
    if I == J:
        raise DegenerateQuotientError(f"(I:x_{i}) = (J:x_{i})")
    return Quotient(I, J)


def _eliminate_ideal(I: MonomialIdeal, i: int) -> MonomialIdeal:
    return MonomialIdeal(I.n - 1, tuple(u[:i] + u[i + 1:] for u in I.generators if u[i] == 0))


def eliminate_variable(Q: Quotient, i: int) -> Quotient:
    """(I ∩ S') / (J ∩ S') where S' drops the variable x_i."""
    _check_var(i, Q.n)
    I, J = _eliminate_ideal(Q.numerator, i), _eliminate_ideal(Q.denominator, i)
    if I == J:
        raise DegenerateQuotientError(f"eliminating x_{i} leaves I' = J'")
    return Quotient(I, J)


def free_variable_shift(Q: Quotient) -> Quotient:
    """Embed Q into a ring with one extra (unused) variable appended."""
    def ext(I: MonomialIdeal) -> MonomialIdeal:
        return MonomialIdeal(I.n + 1, tuple(u + (0,) for u in I.generators))

    return Quotient(ext(Q.numerator), ext(Q.denominator))


def polarization_variables(I: MonomialIdeal) -> list[tuple[int, int]]:
    """Labels (i, k) of the polarized variables, k counted from 1."""
    top = I.lcm_of_generators()
    return [(i, k) for i in range(I.n) for k in range(1, top[i] + 1)]


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Squarefree polarization: x_i^a ↦ x_{i,1} ... x_{i,a}."""
    if I.is_zero:
        raise PreconditionError("polarization of the zero ideal")
    if I.is_unit:
        return I
    top = I.lcm_of_generators()
    gens = []
    for u in I.generators:
        v: list[int] = []
        for a, m in zip(u, top):
            v.extend([1] * a + [0] * (m - a))
        gens.append(tuple(v))
    return MonomialIdeal(sum(top), tuple(gens))


def longest_lcm_chain(gens: Sequence[Monomial]) -> list[Monomial]:
    """A longest sequence u_1, ..., u_t of ``gens`` with strictly growing running lcm.

    Depth-first search over running-lcm states, memoized on the current lcm.
    """
    gens = sorted(set(gens), key=grlex_key)
    memo: dict[Monomial, tuple[int, Monomial | None]] = {}

    def best(cur: Monomial) -> int:
        # longest extension starting from running lcm `cur`
        if cur in memo:
            return memo[cur][0]
        top, arg = 0, None
        for u in gens:
            nxt = lcm(cur, u)
            if nxt != cur:
                t = 1 + best(nxt)
                if t > top:
                    top, arg = t, u
        memo[cur] = (top, arg)
        return top

    start, first = 0, None
    for u in gens:
        t = 1 + best(u)
        if t > start:
            start, first = t, u
    if first is None:
        return []
    chain = [first]
    cur = first
    while memo[cur][1] is not None:
        nxt_u = memo[cur][1]
        chain.append(nxt_u)
        cur = lcm(cur, nxt_u)
    return chain


def lcm_number(Q) -> int:
    """l(I/J): length of a longest strictly increasing running-lcm chain.

    For S/I this counts the unit generator, so l(S/I) = l(I) + 1.
    """
    return len(lcm_chain(Q))


def lcm_chain(Q) -> list[Monomial]:
    Q = as_quotient(Q)
    return longest_lcm_chain(Q.generator_set)


def rank_over_rationals(I: MonomialIdeal) -> int:
    return rank_rational([list(g) for g in I.generators])


def indeg(I: MonomialIdeal) -> int:
    if I.is_zero:
        raise UndefinedInvariantError("initial degree of the zero ideal")
    return min(degree(g) for g in I.generators)
