import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcmdepth.errors import NotFoundError, PreconditionError
from lcmdepth.homology import depth_of_quotient_ring
from lcmdepth.monomial import MonomialIdeal
from lcmdepth.simplicial import (
    SimplicialComplex,
    all_complexes,
    complex_from_squarefree_ideal,
    deletion,
    is_vertex_decomposable,
    link,
    link_and_deletion,
    min_facet_size,
    pure_skeleton,
    stanley_reisner_ideal,
)

VOID = SimplicialComplex((), ())
EMPTY = SimplicialComplex((), (frozenset(),))
TWO_EDGES = SimplicialComplex.on(4, [[0, 1], [2, 3]])
MIXED = SimplicialComplex.on(4, [[0, 1, 2], [2, 3]])


def brute_sr_ideal(D):
    gens = []
    for k in range(D.n + 1):
        for F in itertools.combinations(D.ground, k):
            F = frozenset(F)
            if not D.contains(F) and all(D.contains(F - {v}) for v in F):
                gens.append(tuple(1 if v in F else 0 for v in D.ground))
    return MonomialIdeal(D.n, tuple(gens))


def plain_vd(D):
    """Definition-level check with no memo and no witness."""
    if len(D.facets) == 1:
        return True
    for v in sorted(D.vertices):
        lk, dl = link_and_deletion(D, {v})
        faces_lk = set(lk.faces())
        if any(f in faces_lk for f in dl.facets):
            continue
        if plain_vd(lk) and plain_vd(dl):
            return True
    return False


def check_witness(D, tree):
    assert tree.facets == D.facets
    if tree.vertex is None:
        assert len(D.facets) == 1
        return
    lk, dl = link_and_deletion(D, {tree.vertex})
    assert set(dl.facets) <= set(D.facets)
    check_witness(lk, tree.link)
    check_witness(dl, tree.deletion)


@st.composite
def complexes(draw, n_max=5):
    n = draw(st.integers(1, n_max))
    faces = draw(st.lists(st.sets(st.integers(0, n - 1)), min_size=1, max_size=6))
    return SimplicialComplex.on(n, faces)


def test_void_and_empty_are_distinct():
    assert VOID != EMPTY
    assert VOID.is_void and not EMPTY.is_void
    assert EMPTY.dim == -1 and EMPTY.is_simplex
    assert list(EMPTY.faces()) == [frozenset()]
    assert list(VOID.faces()) == []


def test_facets_normalized():
    D = SimplicialComplex.on(3, [[0, 1], [0], [0, 1], [2]])
    assert set(D.facets) == {frozenset({0, 1}), frozenset({2})}
    with pytest.raises(PreconditionError):
        SimplicialComplex.on(2, [[0, 5]])


def test_all_complexes_counts():
    # Dedekind numbers minus the void complex
    assert [sum(1 for _ in all_complexes(n)) for n in range(5)] == [1, 2, 5, 19, 167]


def test_sr_examples():
    assert set(stanley_reisner_ideal(TWO_EDGES).generators) == {
        (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)
    }
    assert stanley_reisner_ideal(SimplicialComplex.simplex(range(3))).is_zero
    e = SimplicialComplex(tuple(range(3)), (frozenset(),))
    assert stanley_reisner_ideal(e).generators == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    with pytest.raises(PreconditionError):
        stanley_reisner_ideal(VOID)


def test_sr_matches_brute_force_and_round_trips():
    for n in range(5):
        for D in all_complexes(n):
            I = stanley_reisner_ideal(D)
            assert I == brute_sr_ideal(D)
            assert complex_from_squarefree_ideal(I) == D


def test_complex_from_ideal():
    assert complex_from_squarefree_ideal(MonomialIdeal.zero(3)) == SimplicialComplex.simplex(range(3))
    with pytest.raises(PreconditionError):
        complex_from_squarefree_ideal(MonomialIdeal(2, ((2, 0),)))
    with pytest.raises(PreconditionError):
        complex_from_squarefree_ideal(MonomialIdeal.unit(2))


def test_link_and_deletion():
    assert link(MIXED, {2}).facets == SimplicialComplex((0, 1, 3), [[0, 1], [3]]).facets
    assert deletion(MIXED, {2}).facets == link(MIXED, {2}).facets
    assert link(MIXED, {0}).facets == (frozenset({1, 2}),)
    assert set(deletion(MIXED, {0}).facets) == {frozenset({1, 2}), frozenset({2, 3})}
    assert deletion(MIXED, {0}).ground == (1, 2, 3)
    assert link(MIXED, {0, 1, 2}) == SimplicialComplex((3,), (frozenset(),))
    with pytest.raises(NotFoundError):
        link(MIXED, {0, 3})


def test_pure_skeleton():
    S = pure_skeleton(MIXED, 1)
    assert set(S.facets) == {frozenset(e) for e in ([0, 1], [0, 2], [1, 2], [2, 3])}
    assert pure_skeleton(MIXED, 2).facets == (frozenset({0, 1, 2}),)
    assert set(pure_skeleton(MIXED, 0).facets) == {frozenset({v}) for v in range(4)}
    with pytest.raises(PreconditionError):
        pure_skeleton(MIXED, 3)


def test_min_facet_size():
    assert min_facet_size(MIXED) == 2
    assert min_facet_size(EMPTY) == 0
    with pytest.raises(PreconditionError):
        min_facet_size(VOID)


def test_vd_examples():
    assert not is_vertex_decomposable(TWO_EDGES)
    assert is_vertex_decomposable(MIXED)
    assert is_vertex_decomposable(EMPTY)
    path = SimplicialComplex.on(4, [[0, 1], [1, 2], [2, 3]])
    res = is_vertex_decomposable(path)
    assert res.decomposable and res.witness.depth() >= 1
    check_witness(path, res.witness)
    with pytest.raises(PreconditionError):
        is_vertex_decomposable(VOID)


def test_vd_matches_definition_on_small_complexes():
    for n in range(5):
        for D in all_complexes(n):
            res = is_vertex_decomposable(D)
            assert bool(res) == plain_vd(D)
            if res:
                check_witness(D, res.witness)


def test_graphs_vd_iff_connected():
    # a pure one-dimensional complex is vertex decomposable iff connected
    edges = list(itertools.combinations(range(5), 2))
    for k in range(1, len(edges) + 1, 2):
        for chosen in itertools.islice(itertools.combinations(edges, k), 40):
            D = SimplicialComplex.on(5, chosen)
            comp = {v: v for v in D.vertices}

            def find(v):
                while comp[v] != v:
                    v = comp[v]
                return v

            for a, b in chosen:
                comp[find(a)] = find(b)
            connected = len({find(v) for v in D.vertices}) == 1
            assert bool(is_vertex_decomposable(D)) == connected


@given(complexes())
def test_vd_depth_is_min_facet_size(D):
    res = is_vertex_decomposable(D)
    if res:
        check_witness(D, res.witness)
        I = stanley_reisner_ideal(D)
        if not I.is_zero:
            assert depth_of_quotient_ring(I) == min_facet_size(D)


@given(complexes(n_max=4))
def test_link_deletion_faces(D):
    for v in D.vertices:
        lk, dl = link_and_deletion(D, {v})
        faces = set(D.faces())
        assert set(dl.faces()) == {F for F in faces if v not in F}
        assert set(lk.faces()) == {F - {v} for F in faces if v in F}
