"""Randomized bound checks, conjecture sweeps and the worked-example report."""

from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations

from . import __version__
from .errors import BoundExceededError, GenerationError, PreconditionError, ResourceCapError
from .homology import depth_and_pd
from .lattice import build_lcm_lattice, lattice_length
from .monomial import (
    MonomialIdeal,
    Quotient,
    Shape,
    as_quotient,
    indeg,
    lcm_number,
    rank_over_rationals,
)
from .orderdim import FinitePoset, embed_from_realizer, order_dimension, realizer_exists, verify_embedding, GridEmbedding
from .simplicial import (
    SimplicialComplex,
    all_complexes,
    is_vertex_decomposable,
    min_facet_size,
    stanley_reisner_ideal,
)
from .stanley import characteristic_poset, sdepth_exact, verify_certificate

RANDOM_MODEL = (
    "generators: count uniform in 1..max_generators, exponents i.i.d. uniform in "
    "0..max_exponent (0..1 if squarefree), zero vector rejected, then minimalized; "
    "denominators: multiples of numerator generators by uniform random monomials"
)


@dataclass(frozen=True)
class ExperimentConfig:
    seed: int = 0
    n: int = 3
    max_exponent: int = 2
    max_generators: int = 4
    squarefree: bool = False
    count: int = 20
    shapes: tuple = ("ideal", "ring", "proper")
    max_poset_points: int = 100_000
    max_lattice: int = 100_000
    d_max: int = 6
    time_budget: float | None = None  # seconds per instance
    field: str = "Q"
    complex_vertices: int = 5
    complex_count: int = 0
    exhaustive_complexes_up_to: int = 0

    def __post_init__(self):
        for name in ("n", "max_generators", "max_poset_points", "max_lattice", "d_max"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be positive")
        if self.max_exponent < 1:
            raise PreconditionError("max_exponent must be positive")
        if self.count < 0 or self.complex_count < 0:
            raise PreconditionError("sample counts must be non-negative")
        if self.time_budget is not None and self.time_budget <= 0:
            raise PreconditionError("time_budget must be positive")
        bad = set(self.shapes) - {"ideal", "ring", "proper"}
        if bad or not self.shapes:
            raise PreconditionError(f"unknown shapes {sorted(bad)}")
        object.__setattr__(self, "shapes", tuple(self.shapes))


def _rng(cfg: ExperimentConfig, stream: str, index: int) -> random.Random:
    # str seeds are hashed deterministically (independent of PYTHONHASHSEED)
    return random.Random(f"{cfg.seed}:{stream}:{index}")


def _random_vector(rng: random.Random, n: int, top: int, tries: int = 1000) -> tuple:
    for _ in range(tries):
        v = tuple(rng.randint(0, top) for _ in range(n))
        if any(v):
            return v
    raise GenerationError("rejection budget exhausted drawing a nonzero exponent vector")


def _random_gens(rng: random.Random, cfg: ExperimentConfig, k: int) -> list:
    top = 1 if cfg.squarefree else cfg.max_exponent
    return [_random_vector(rng, cfg.n, top) for _ in range(k)]


def random_monomial_ideal(cfg: ExperimentConfig, index: int) -> MonomialIdeal:
    """Deterministic nonzero proper ideal for (cfg.seed, index)."""
    rng = _rng(cfg, "ideal", index)
    k = rng.randint(1, cfg.max_generators)
    return MonomialIdeal(cfg.n, tuple(_random_gens(rng, cfg, k)))


def random_quotient(cfg: ExperimentConfig, index: int, tries: int = 1000) -> Quotient:
    """Deterministic quotient; the shape is drawn from ``cfg.shapes``.

    For the proper shape, |G(I) ∪ G(J)| stays within ``max_generators``.
    """
    rng = _rng(cfg, "quotient", index)
    shape = rng.choice(cfg.shapes)
    if shape == "ideal":
        k = rng.randint(1, cfg.max_generators)
        return Quotient.ideal(MonomialIdeal(cfg.n, tuple(_random_gens(rng, cfg, k))))
    if shape == "ring":
        k = rng.randint(1, cfg.max_generators)
        return Quotient.ring(MonomialIdeal(cfg.n, tuple(_random_gens(rng, cfg, k))))
    top = 1 if cfg.squarefree else cfg.max_exponent
    for _ in range(tries):
        kI = rng.randint(1, max(1, cfg.max_generators - 1))
        I = MonomialIdeal(cfg.n, tuple(_random_gens(rng, cfg, kI)))
        kJ = rng.randint(1, max(1, cfg.max_generators - I.num_generators))
        mults = []
        for _ in range(kJ):
            g = rng.choice(I.generators)
            shift = tuple(rng.randint(0, 1) for _ in range(cfg.n))
            mults.append(tuple(min(a + b, max(top, a)) for a, b in zip(g, shift)))
        J = MonomialIdeal(cfg.n, tuple(mults))
        if I.is_subideal_of(J):
            continue
        Q = Quotient(I, J)
        if len(Q.generator_set) <= cfg.max_generators:
            return Q
    raise GenerationError("rejection budget exhausted drawing a proper quotient")


def random_complex(cfg: ExperimentConfig, index: int, n: int | None = None) -> SimplicialComplex:
    rng = _rng(cfg, "complex", index)
    n = cfg.complex_vertices if n is None else n
    k = rng.randint(1, 5)
    p = rng.choice((0.3, 0.5, 0.7))
    facets = [frozenset(v for v in range(n) if rng.random() < p) for _ in range(k)]
    return SimplicialComplex(tuple(range(n)), tuple(facets))


@dataclass
class BoundRow:
    index: int
    kind: str
    label: str
    values: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    skipped: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    note: str = ""

    @property
    def status(self) -> str:
        if any(v is False for v in self.checks.values()):
            return "fail"
        if self.note:
            return "filtered"
        if self.skipped:
            return "skipped"
        return "pass"

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]

    def as_dict(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d


@dataclass
class BoundReport:
    header: dict
    rows: list = field(default_factory=list)

    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "skipped": 0, "filtered": 0}
        for r in self.rows:
            out[r.status] += 1
        out["checks"] = sum(len(r.checks) for r in self.rows)
        return out

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.rows)

    def to_json(self) -> str:
        doc = {"header": self.header, "summary": self.summary(), "rows": [r.as_dict() for r in self.rows]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        vkeys: list = []
        ckeys: list = []
        for r in self.rows:
            vkeys += [k for k in r.values if k not in vkeys]
            ckeys += [k for k in r.checks if k not in ckeys]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "kind", "label", "status", *vkeys, *ckeys, "skipped", "note"])
        for r in self.rows:
            w.writerow(
                [r.index, r.kind, r.label, r.status]
                + [r.values.get(k, "") for k in vkeys]
                + [{True: "ok", False: "FAIL", None: ""}[r.checks.get(k)] for k in ckeys]
                + ["; ".join(r.skipped), r.note]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"# {k}: {v}" for k, v in self.header.items()]
        for r in self.rows:
            vals = " ".join(f"{k}={v}" for k, v in r.values.items())
            line = f"{r.index:4d} {r.status:8s} {r.label}  {vals}"
            if r.failures():
                line += "  FAILED: " + ", ".join(r.failures())
            if r.skipped:
                line += "  skipped: " + "; ".join(r.skipped)
            if r.note:
                line += f"  ({r.note})"
            lines.append(line)
        s = self.summary()
        lines.append(
            f"# summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped, "
            f"{s['filtered']} filtered, {s['checks']} checks"
        )
        return "\n".join(lines) + "\n"


def _header(cfg: ExperimentConfig, kind: str) -> dict:
    return {"kind": kind, "version": __version__, "random_model": RANDOM_MODEL, "config": asdict(cfg)}


class _Budget:
    def __init__(self, seconds: float | None):
        self.seconds = seconds
        self.start = time.perf_counter()

    def exhausted(self) -> bool:
        return self.seconds is not None and time.perf_counter() - self.start > self.seconds


def check_bounds(Q, cfg: ExperimentConfig | None = None, index: int = 0, witness_dir: str | None = None) -> BoundRow:
    """Compute every applicable invariant of Q and test every applicable inequality.

    Instances hitting a cap get the affected stages listed in ``skipped``;
    they never count as passes.
    """
    Q = as_quotient(Q)
    cfg = cfg or ExperimentConfig(n=Q.n)
    budget = _Budget(cfg.time_budget)
    row = BoundRow(index, "quotient", str(Q))
    n = Q.n
    shape = Q.shape
    v, c = row.values, row.checks
    v["n"] = n
    v["shape"] = shape.value
    # the ideal whose ring/ideal invariants apply, if any
    base = {Shape.IDEAL: Q.numerator, Shape.RING: Q.denominator}.get(shape)

    l = lcm_number(Q)
    v["lcm_number"] = l
    try:
        L = build_lcm_lattice(Q, cfg.max_lattice)
    except ResourceCapError as exc:
        row.skipped.append(f"lattice: {exc}")
        L = None
    if L is not None:
        v["lattice_size"] = len(L)
        c["lcm_number_equals_lattice_length"] = lattice_length(L) == l

    dim = None
    if L is not None and not budget.exhausted():
        P = FinitePoset.from_lattice(L)
        try:
            res = order_dimension(P, cfg.d_max)
            dim = res.dimension
            v["order_dimension"] = dim
            if witness_dir:
                path = os.path.join(witness_dir, f"realizer_{index}.json")
                with open(path, "w") as fh:
                    fh.write(res.realizer.to_json())
                row.witnesses["realizer"] = path
        except BoundExceededError as exc:
            row.skipped.append(f"order dimension: {exc}")
    elif L is not None:
        row.skipped.append("order dimension: time budget")

    if base is not None:
        v["num_generators"] = base.num_generators
        if base.is_squarefree:
            v["rank"] = rank_over_rationals(base)
            v["indeg"] = indeg(base)
            c["lcm_indeg_bound"] = lcm_number(base) <= n - v["indeg"] + 1
            c["lcm_at_most_rank"] = lcm_number(base) <= v["rank"]

    sd = None
    if budget.exhausted():
        row.skipped.append("sdepth: time budget")
    else:
        try:
            cert = sdepth_exact(Q, max_points=cfg.max_poset_points)
            sd = cert.value
            v["sdepth"] = sd
            if witness_dir:
                path = os.path.join(witness_dir, f"certificate_{index}.json")
                with open(path, "w") as fh:
                    fh.write(cert.to_json())
                row.witnesses["certificate"] = path
        except ResourceCapError as exc:
            row.skipped.append(f"sdepth: {exc}")

    if sd is not None:
        v["lcm_bound"] = n - l + 1
        c["sdepth_lcm_bound"] = sd >= n - l + 1
        if dim is not None:
            v["dim_bound"] = n - dim
            c["sdepth_dim_bound"] = sd >= n - dim
            if shape is Shape.IDEAL:
                c["sdepth_ideal_dim_bound"] = sd >= n - dim + 1
        if shape is Shape.RING:
            c["sdepth_ring_lcm_bound"] = sd >= n - lcm_number(base)
        if base is not None and base.is_squarefree:
            shift = 1 if shape is Shape.IDEAL else 0
            c["sdepth_rank_bound"] = sd >= n - v["rank"] + shift
            c["sdepth_indeg_bound"] = sd >= v["indeg"] - 1 + shift

    if base is not None:
        if budget.exhausted():
            row.skipped.append("depth: time budget")
        else:
            dd = depth_and_pd(base, cfg.field)
            dep = dd.depth_I if shape is Shape.IDEAL else dd.depth_SI
            v["depth"] = dep
            c["depth_lcm_bound"] = dep >= n - l + 1
            if dim is not None:
                c["depth_dim_bound"] = dep >= n - dim
                if shape is Shape.IDEAL:
                    c["depth_ideal_dim_bound"] = dep >= n - dim + 1
            small = lcm_number(base) <= 3 or (dim is not None and dim <= 3)
            if sd is not None and small:
                c["stanley_inequality"] = sd >= dep
    return row


def sweep(cfg: ExperimentConfig, witness_dir: str | None = None) -> BoundReport:
    """check_bounds over ``cfg.count`` random quotients, in index order."""
    report = BoundReport(_header(cfg, "bounds"))
    for i in range(cfg.count):
        report.rows.append(check_bounds(random_quotient(cfg, i), cfg, i, witness_dir))
    return report


def _complex_row(D: SimplicialComplex, index: int, cfg: ExperimentConfig) -> BoundRow:
    row = BoundRow(index, "complex", str(D))
    vd = is_vertex_decomposable(D)
    row.values["n"] = D.n
    row.values["vertex_decomposable"] = vd.decomposable
    if not vd:
        row.note = "not vertex decomposable"
        return row
    I = stanley_reisner_ideal(D)
    mfs = min_facet_size(D)
    row.values["min_facet_size"] = mfs
    if I.is_zero:
        row.values["depth"] = D.n
        row.checks["depth_equals_min_facet_size"] = D.n == mfs
        return row
    dd = depth_and_pd(I, cfg.field)
    row.values["depth"] = dd.depth_SI
    row.checks["depth_equals_min_facet_size"] = dd.depth_SI == mfs
    try:
        sd = sdepth_exact(I, max_points=cfg.max_poset_points).value
    except ResourceCapError as exc:
        row.skipped.append(f"sdepth: {exc}")
        return row
    row.values["sdepth_ideal"] = sd
    row.checks["stanley_inequality_ideal"] = sd >= dd.depth_I
    return row


def conjecture_sweep(cfg: ExperimentConfig) -> BoundReport:
    """Stanley inequalities on small-invariant ideals and on vertex decomposable complexes.

    Ideals enter only when their lcm number or lattice order dimension is at
    most 3; complexes only when vertex decomposable. Others are listed as
    filtered.
    """
    report = BoundReport(_header(cfg, "conjecture"))
    for i in range(cfg.count):
        I = random_monomial_ideal(cfg, i)
        row = BoundRow(i, "ideal", str(I))
        l = lcm_number(I)
        row.values["lcm_number"] = l
        try:
            dim = order_dimension(FinitePoset.from_lattice(build_lcm_lattice(I, cfg.max_lattice)), cfg.d_max).dimension
        except ResourceCapError as exc:
            dim = None
            row.skipped.append(f"order dimension: {exc}")
        row.values["order_dimension"] = dim
        if not (l <= 3 or (dim is not None and dim <= 3)):
            row.note = "lcm number and order dimension both exceed 3"
            report.rows.append(row)
            continue
        dd = depth_and_pd(I, cfg.field)
        try:
            s_ring = sdepth_exact(Quotient.ring(I), max_points=cfg.max_poset_points).value
            s_ideal = sdepth_exact(I, max_points=cfg.max_poset_points).value
        except ResourceCapError as exc:
            row.skipped.append(f"sdepth: {exc}")
            report.rows.append(row)
            continue
        row.values.update(depth_ring=dd.depth_SI, sdepth_ring=s_ring, depth_ideal=dd.depth_I, sdepth_ideal=s_ideal)
        row.checks["stanley_inequality_ring"] = s_ring >= dd.depth_SI
        row.checks["stanley_inequality_ideal"] = s_ideal >= dd.depth_I
        report.rows.append(row)
    idx = cfg.count
    for nv in range(1, cfg.exhaustive_complexes_up_to + 1):
        for D in all_complexes(nv):
            report.rows.append(_complex_row(D, idx, cfg))
            idx += 1
    for j in range(cfg.complex_count):
        report.rows.append(_complex_row(random_complex(cfg, j), idx, cfg))
        idx += 1
    return report


# worked examples ----------------------------------------------------------


@dataclass
class ReportItem:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def squarefree_degree_ideal(n: int, d: int) -> MonomialIdeal:
    """All squarefree monomials of degree d in n variables."""
    return MonomialIdeal(n, tuple(tuple(1 if i in c else 0 for i in range(n)) for c in combinations(range(n), d)))


def _dimension_items(name: str, I: MonomialIdeal, expected_dim: int) -> tuple[list[ReportItem], int]:
    L = build_lcm_lattice(I)
    P = FinitePoset.from_lattice(L)
    res = order_dimension(P, max(expected_dim + 1, 2))
    items = [ReportItem(f"{name}: order dimension of the lcm lattice", expected_dim, res.dimension)]
    E = embed_from_realizer(P, res.realizer)
    items.append(ReportItem(f"{name}: realizer of size {res.dimension} is a valid embedding", True, verify_embedding(P, E)))
    if res.dimension >= 2:
        refuted = realizer_exists(P, res.dimension - 1) is None
        items.append(ReportItem(f"{name}: no realizer of size {res.dimension - 1}", True, refuted))
    return items, res.dimension


def reproduce_paper_examples() -> list[ReportItem]:
    items: list[ReportItem] = []

    # (x^2, xy, y^2) in K[x,y,z]
    I = MonomialIdeal(3, ((2, 0, 0), (1, 1, 0), (0, 2, 0)))
    name = "(x^2,xy,y^2) in 3 variables"
    items.append(ReportItem(f"{name}: lcm number", 3, lcm_number(I)))
    dim_items, dim = _dimension_items(name, I, 2)
    items += dim_items
    L = build_lcm_lattice(I)
    P = FinitePoset.from_lattice(L)
    exps = GridEmbedding(2, tuple((0, 0) if i == 0 else L.elements[i][:2] for i in range(len(L))))
    items.append(ReportItem(f"{name}: exponent vectors embed the lattice in N^2", True, verify_embedding(P, exps)))
    items.append(ReportItem(f"{name}: lcm bound for sdepth(S/I)", 0, 3 - lcm_number(Quotient.ring(I)) + 1))
    items.append(ReportItem(f"{name}: dimension bound for sdepth(S/I)", 1, 3 - dim))

    # all squarefree cubics in 5 variables
    I5 = squarefree_degree_ideal(5, 3)
    name = "squarefree cubics in 5 variables"
    items.append(ReportItem(f"{name}: lcm number", 3, lcm_number(I5)))
    dim_items, dim = _dimension_items(name, I5, 4)
    items += dim_items
    items.append(ReportItem(f"{name}: lcm bound for sdepth(S/I)", 2, 5 - lcm_number(I5)))
    items.append(ReportItem(f"{name}: dimension bound for sdepth(S/I)", 1, 5 - dim))

    # (x_i x_j : i < j)
    for n in (3, 4, 5):
        I = squarefree_degree_ideal(n, 2)
        name = f"quadratic squarefree ideal, n={n}"
        l = lcm_number(I)
        items.append(ReportItem(f"{name}: lcm number n-1", n - 1, l))
        items.append(ReportItem(f"{name}: m - l = (n-1)(n-2)/2", (n - 1) * (n - 2) // 2, I.num_generators - l))
        R = Quotient.ring(I)
        cert = sdepth_exact(R)
        items.append(ReportItem(f"{name}: sdepth(S/I)", 1, cert.value))
        items.append(ReportItem(f"{name}: certificate verifies", True, verify_certificate(characteristic_poset(R), cert)))
        items.append(ReportItem(f"{name}: sdepth(S/I) = n - l(I)", 1, n - l))
        items.append(ReportItem(f"{name}: depth(S/I)", 1, depth_and_pd(I).depth_SI))

    # principal ideals
    for n in (1, 2, 3, 4):
        x1 = MonomialIdeal(n, ((1,) + (0,) * (n - 1),))
        items.append(ReportItem(f"(x1) in {n} variables: sdepth(S/I) = n-1", n - 1, sdepth_exact(Quotient.ring(x1)).value))
        items.append(ReportItem(f"(x1) in {n} variables: sdepth(I) = n", n, sdepth_exact(x1).value))

    # lattice length equals lcm number on every example above
    examples = [
        Quotient.ideal(MonomialIdeal(3, ((2, 0, 0), (1, 1, 0), (0, 2, 0)))),
        Quotient.ring(MonomialIdeal(3, ((2, 0, 0), (1, 1, 0), (0, 2, 0)))),
        Quotient.ideal(I5),
        Quotient.ring(I5),
    ] + [Quotient.ideal(squarefree_degree_ideal(n, 2)) for n in (3, 4, 5)]
    for Q in examples:
        items.append(ReportItem(f"{Q}: lattice length equals lcm number", lcm_number(Q), lattice_length(build_lcm_lattice(Q))))

    # vertex decomposability
    for D, expected in (
        (SimplicialComplex.simplex(range(3)), True),
        (SimplicialComplex.on(3, [{0, 1}, {1, 2}, {0, 2}]), True),
        (SimplicialComplex.on(4, [{0, 1}, {2, 3}]), False),
    ):
        items.append(ReportItem(f"{D}: vertex decomposable", expected, is_vertex_decomposable(D).decomposable))
    return items
