"""Fiber graphs: the multigraph of irreducible components of a special
fiber, with per-vertex genus and multiplicity, plus everything computed
from it per degree n: self-intersections on the resolved surface, the
total trace, and the character multiset on H^1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadInput,
    NegativeCharacterCoefficient,
    NonIntegralSelfIntersection,
    ParseError,
    ValidationError,
)
from .exactalg import GroupRingElement
from .resolution import Singularity, resolve
from .singtrace import trace_polynomial, vertex_trace


@dataclass(frozen=True)
class Vertex:
    id: str
    genus: int
    mult: int


@dataclass(frozen=True)
class FiberGraph:
    """Connected multigraph (loops and parallel edges allowed) with at
    least one multiplicity-1 vertex.  Edges are unordered id pairs,
    stored sorted for determinism."""

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[str, str], ...]

    @classmethod
    def build(cls, vertices, edges) -> "FiberGraph":
        vs = tuple(Vertex(*v) if not isinstance(v, Vertex) else v for v in vertices)
        ids = [v.id for v in vs]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise ValidationError(f"duplicate vertex id(s): {', '.join(dup)}")
        for v in vs:
            if v.genus < 0:
                raise ValidationError(f"vertex {v.id}: genus must be >= 0")
            if v.mult < 1:
                raise ValidationError(f"vertex {v.id}: multiplicity must be >= 1")
        known = set(ids)
        es = []
        for a, b in edges:
            if a not in known or b not in known:
                missing = a if a not in known else b
                raise ValidationError(f"edge endpoint {missing!r} is not a declared vertex")
            es.append((a, b) if a <= b else (b, a))
        g = cls(vertices=tuple(sorted(vs, key=lambda v: v.id)), edges=tuple(sorted(es)))
        g._validate()
        return g

    def _validate(self) -> None:
        if not self.vertices:
            raise ValidationError("graph has no vertices")
        if not self._connected():
            raise ValidationError("graph is not connected")
        if all(v.mult != 1 for v in self.vertices):
            raise ValidationError("no vertex has multiplicity 1")

    def _connected(self) -> bool:
        adj: dict[str, set[str]] = {v.id: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        start = self.vertices[0].id
        seen = {start}
        stack = [start]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.vertices)

    def vertex(self, vid: str) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def degree(self, vid: str) -> int:
        """Number of edge-ends at the vertex; a loop counts twice."""
        return sum((a == vid) + (b == vid) for a, b in self.edges)

    @property
    def mult_lcm(self) -> int:
        return math.lcm(*(v.mult for v in self.vertices))

    @property
    def genus_sum(self) -> int:
        return sum(v.genus for v in self.vertices)


@dataclass(frozen=True)
class CharacterMultiset:
    """Exponents (with multiplicities) of the irreducible characters of
    the degree-n action on H^1; ``total`` is the arithmetic genus."""

    n: int
    exponents: tuple[tuple[int, int], ...]  # (exponent, multiplicity), ascending
    total: int


def parse_graph(text: str) -> FiberGraph:
    """Parse the line-oriented graph format:

        vertex <id> genus=<int> mult=<int>
        edge <id> <id>

    '#' starts a comment; blank lines are skipped.
    """
    vertices: list[Vertex] = []
    edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) != 4:
                raise ParseError(lineno, "expected: vertex <id> genus=<int> mult=<int>")
            vid = tokens[1]
            if not vid.isascii():
                raise ParseError(lineno, f"vertex id {vid!r} is not ASCII")
            fields = {}
            for tok in tokens[2:]:
                key, eq, value = tok.partition("=")
                if not eq or key not in ("genus", "mult"):
                    raise ParseError(lineno, f"expected genus=<int> or mult=<int>, got {tok!r}")
                try:
                    fields[key] = int(value)
                except ValueError:
                    raise ParseError(lineno, f"{key} must be an integer, got {value!r}") from None
            if set(fields) != {"genus", "mult"}:
                raise ParseError(lineno, "vertex needs both genus= and mult=")
            vertices.append(Vertex(vid, fields["genus"], fields["mult"]))
        elif kind == "edge":
            if len(tokens) != 3:
                raise ParseError(lineno, "expected: edge <id> <id>")
            if not (tokens[1].isascii() and tokens[2].isascii()):
                raise ParseError(lineno, "edge endpoints must be ASCII tokens")
            edges.append((tokens[1], tokens[2]))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    return FiberGraph.build(vertices, edges)


def edge_singularity(g: FiberGraph, edge: tuple[str, str], n: int) -> tuple[Singularity, str, str]:
    """The singularity sitting over one intersection point, plus which
    endpoint carries the m1 branch and which the m2 branch.

    The pair (m1, m2) is ordered as (multiplicity of the lexicographically
    larger endpoint id, the other); branch symmetry of the trace makes the
    choice immaterial, the fixed rule only buys determinism.
    """
    a, b = edge
    lo, hi = (a, b) if a <= b else (b, a)
    m1 = g.vertex(hi).mult
    m2 = g.vertex(lo).mult
    return Singularity(m1, m2, n), hi, lo


def self_intersections(g: FiberGraph, n: int) -> dict[str, int]:
    """Self-intersection of each surviving component on the resolved
    degree-n surface: minus the sum of the adjacent exceptional chain-end
    multiplicities, divided by the component multiplicity.

    The end of a chain on the m2 branch has multiplicity mu_1, the end on
    the m1 branch mu_L; a loop contributes both ends to its vertex.
    Isolated vertices get 0.
    """
    _check_degree(g, n)
    ends: dict[str, int] = {v.id: 0 for v in g.vertices}
    for edge in g.edges:
        sing, hi, lo = edge_singularity(g, edge, n)
        res = resolve(sing)
        ends[lo] += res.mu[1]
        ends[hi] += res.mu[res.length]
    out: dict[str, int] = {}
    for v in g.vertices:
        total = ends[v.id]
        if total % v.mult != 0:
            raise NonIntegralSelfIntersection(
                f"vertex {v.id}: adjacent chain-end multiplicities sum to {total}, "
                f"not a multiple of mult {v.mult}; not a valid fiber"
            )
        out[v.id] = -(total // v.mult)
    return out


def total_trace(g: FiberGraph, n: int) -> GroupRingElement:
    """Trace of the degree-n action on the alternating sum of fiber
    cohomology: vertex contributions plus one chain trace per edge."""
    _check_degree(g, n)
    si = self_intersections(g, n)
    acc = GroupRingElement.zero(n)
    for v in g.vertices:
        acc += vertex_trace(v.mult, v.genus, si[v.id], n)
    for edge in g.edges:
        sing, _, _ = edge_singularity(g, edge, n)
        acc += trace_polynomial(resolve(sing))
    return acc


def h1_character(g: FiberGraph, n: int) -> CharacterMultiset:
    """Character multiset of the action on H^1: the exponents of
    1 - total_trace, which must have nonnegative coefficients."""
    one_minus = 1 - total_trace(g, n)
    if any(c < 0 for c in one_minus.coeffs):
        bad = [(e, c) for e, c in enumerate(one_minus.coeffs) if c < 0]
        raise NegativeCharacterCoefficient(
            f"1 - total trace has negative coefficients {bad}; not a valid fiber"
        )
    items = tuple(one_minus.items())
    return CharacterMultiset(n=n, exponents=items, total=one_minus.eval_at_one())


def _check_degree(g: FiberGraph, n: int) -> None:
    if n < 2:
        raise BadInput(f"degree must be >= 2, got {n}")
    if math.gcd(n, g.mult_lcm) != 1:
        raise BadInput(
            f"degree {n} must be coprime to the multiplicity lcm {g.mult_lcm}"
        )
