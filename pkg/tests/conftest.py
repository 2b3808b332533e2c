import itertools
import os

import hypothesis
from hypothesis import strategies as st

from lcmdepth.monomial import MonomialIdeal, Quotient, lcm

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=400, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def squarefree_degree_ideal(n, d):
    return MonomialIdeal(n, tuple(tuple(1 if i in c else 0 for i in range(n)) for c in itertools.combinations(range(n), d)))


def mono(*exps):
    return tuple(exps)


@st.composite
def ideals(draw, n_min=1, n_max=3, e_max=2, g_max=4, squarefree=False):
    n = draw(st.integers(n_min, n_max))
    top = 1 if squarefree else e_max
    vec = st.tuples(*[st.integers(0, top)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=g_max))
    return MonomialIdeal(n, tuple(gens))


@st.composite
def quotients(draw, n_max=3, e_max=2, g_max=4):
    I = draw(ideals(n_max=n_max, e_max=e_max, g_max=g_max))
    kind = draw(st.sampled_from(["ideal", "ring", "proper"]))
    if kind == "ideal":
        return Quotient.ideal(I)
    if kind == "ring":
        return Quotient.ring(I)
    mults = draw(
        st.lists(
            st.tuples(st.sampled_from(I.generators), st.tuples(*[st.integers(0, 1)] * I.n)),
            min_size=1,
            max_size=3,
        )
    )
    J = MonomialIdeal(I.n, tuple(tuple(a + b for a, b in zip(g, s)) for g, s in mults))
    hypothesis.assume(not I.is_subideal_of(J))
    return Quotient(I, J)


# independent oracles -------------------------------------------------------


def brute_force_lcm_number(gens):
    """Max length of a sequence of distinct gens with strictly growing running lcm."""
    gens = list(set(gens))
    best = 0
    for r in range(1, len(gens) + 1):
        for seq in itertools.permutations(gens, r):
            cur = seq[0]
            ok = True
            for u in seq[1:]:
                nxt = lcm(cur, u)
                if nxt == cur:
                    ok = False
                    break
                cur = nxt
            if ok:
                best = max(best, r)
    return best


def subset_lcms(gens):
    out = set()
    gens = list(gens)
    for r in range(1, len(gens) + 1):
        for c in itertools.combinations(gens, r):
            m = c[0]
            for u in c[1:]:
                m = lcm(m, u)
            out.add(m)
    return out


# acceptance summary -------------------------------------------------------

ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
