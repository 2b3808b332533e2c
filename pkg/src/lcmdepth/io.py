"""Reading and writing ideals and complexes.

Ideal JSON::

    {"variables": 3, "generators": [[2,0,0],[1,1,0],[0,2,0]]}

with optional ``"names"`` and ``"denominator"`` (generators of J for I/J).

Ideal text::

    vars: x,y,z
    x^2, x*y, y^2
    denominator: x^3        # optional

Complex JSON uses 1-based vertex labels::

    {"vertices": 3, "facets": [[1,2],[2,3]]}

Complex text: ``facets: {1,2},{2,3}`` with an optional ``vertices: 3`` line.
"""

from __future__ import annotations

import json
import re
import sys
from dataclasses import dataclass

from .errors import ParseError
from .monomial import MonomialIdeal, Quotient, default_variable_names, format_monomial
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class IdealInput:
    ideal: MonomialIdeal
    denominator: MonomialIdeal | None
    names: tuple

    def quotient(self, shape: str = "ideal") -> Quotient:
        """The module described by the input: I/J, I/0, or S/I."""
        if self.denominator is not None:
            if shape == "ring":
                raise ParseError("--ring cannot be combined with a denominator")
            return Quotient(self.ideal, self.denominator)
        if shape == "ring":
            return Quotient.ring(self.ideal)
        return Quotient.ideal(self.ideal)


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


_TERM = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


def parse_monomial(text: str, names) -> tuple:
    index = {v: i for i, v in enumerate(names)}
    e = [0] * len(names)
    text = text.strip()
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        m = _TERM.match(factor.strip())
        if not m:
            raise ParseError(f"bad monomial factor {factor!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        if name not in index:
            raise ParseError(f"undeclared variable {name!r}")
        e[index[name]] += power
    return tuple(e)


def _parse_generators(text: str, names) -> list[tuple]:
    parts = [p.strip() for p in text.split(",")]
    parts = [p for p in parts if p]
    if parts == ["0"]:
        return []
    return [parse_monomial(p, names) for p in parts]


def parse_ideal_text(text: str) -> IdealInput:
    names = None
    gens_text, den_text = [], []
    target = gens_text
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if sep and key in ("vars", "variables"):
            names = tuple(v.strip() for v in rest.split(",") if v.strip())
            continue
        if sep and key in ("denominator", "ideal", "generators", "numerator"):
            target = den_text if key == "denominator" else gens_text
            line = rest
        target.append(line)
    if names is None:
        raise ParseError("missing 'vars:' declaration")
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names")
    I = MonomialIdeal(len(names), tuple(_parse_generators(",".join(gens_text), names)))
    J = None
    if den_text:
        J = MonomialIdeal(len(names), tuple(_parse_generators(",".join(den_text), names)))
    return IdealInput(I, J, names)


def parse_ideal_json(text: str) -> IdealInput:
    try:
        doc = json.loads(text)
        n = int(doc["variables"])
        I = MonomialIdeal(n, tuple(tuple(g) for g in doc["generators"]))
        J = None
        if "denominator" in doc:
            J = MonomialIdeal(n, tuple(tuple(g) for g in doc["denominator"]))
        names = tuple(doc.get("names") or default_variable_names(n))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"invalid ideal JSON: {exc}") from exc
    return IdealInput(I, J, names)


def parse_ideal(text: str) -> IdealInput:
    """Parse either ideal format, detected by a leading '{'."""
    if text.lstrip().startswith("{"):
        return parse_ideal_json(text)
    return parse_ideal_text(text)


def ideal_to_json(I: MonomialIdeal, denominator: MonomialIdeal | None = None, names=None) -> str:
    doc = {"variables": I.n, "generators": [list(g) for g in I.generators]}
    if denominator is not None:
        doc["denominator"] = [list(g) for g in denominator.generators]
    if names is not None:
        doc["names"] = list(names)
    return json.dumps(doc)


def ideal_to_text(I: MonomialIdeal, names=None) -> str:
    names = list(names or default_variable_names(I.n))
    gens = ", ".join(format_monomial(g, names) for g in I.generators) or "0"
    return f"vars: {','.join(names)}\n{gens}\n"


_FACE = re.compile(r"\{([^}]*)\}")


def parse_complex_text(text: str) -> SimplicialComplex:
    n = None
    facets = []
    seen_facets = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if sep and key == "vertices":
            n = int(rest)
        elif sep and key == "facets":
            seen_facets = True
            for body in _FACE.findall(rest):
                items = [x.strip() for x in body.split(",") if x.strip()]
                try:
                    facets.append([int(x) for x in items])
                except ValueError as exc:
                    raise ParseError(f"bad face {{{body}}}") from exc
        else:
            raise ParseError(f"unexpected line {raw!r}")
    if not seen_facets:
        raise ParseError("missing 'facets:' line")
    return _complex_from_labels(n, facets)


def _complex_from_labels(n, facets) -> SimplicialComplex:
    labels = [v for f in facets for v in f]
    if n is None:
        n = max(labels, default=0)
    if any(not 1 <= v <= n for v in labels):
        raise ParseError(f"vertex labels must lie in 1..{n}")
    return SimplicialComplex.on(n, [[v - 1 for v in f] for f in facets])


def parse_complex_json(text: str) -> SimplicialComplex:
    try:
        doc = json.loads(text)
        return _complex_from_labels(doc.get("vertices"), doc["facets"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"invalid complex JSON: {exc}") from exc


def parse_complex(text: str) -> SimplicialComplex:
    if text.lstrip().startswith("{"):
        return parse_complex_json(text)
    return parse_complex_text(text)


def complex_to_json(D: SimplicialComplex) -> str:
    pos = {v: i + 1 for i, v in enumerate(D.ground)}
    return json.dumps({"vertices": D.n, "facets": [sorted(pos[v] for v in f) for f in D.facets]})


def complex_to_text(D: SimplicialComplex) -> str:
    pos = {v: i + 1 for i, v in enumerate(D.ground)}
    faces = ",".join("{" + ",".join(str(x) for x in sorted(pos[v] for v in f)) + "}" for f in D.facets)
    return f"vertices: {D.n}\nfacets: {faces}\n"
