"""Word graphs ``G_{n,k}``, their edge weights, weighted Laplacians and spanning trees.

``G_{n,k}`` has a source ``s``, a sink ``z`` and one vertex per word of
distinct letters from ``[n]`` of length ``1..k``. Edges come in three rule
classes: ``s`` to each one-letter word (rule 1), each word to its one-letter
extensions (rule 2), and each length-``k`` word to ``z`` (rule 3). ``G_{n,0}``
is the single edge ``s - z``.
"""

from __future__ import annotations

import enum
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial, perm

from .errors import DegreeError, GuardExceeded
from .linalg import SymMatrix
from .poly import Polynomial, RationalFunction, q_ratio

MAX_BRUTEFORCE_EDGES = 25


class VertexKind(enum.Enum):
    S = "s"
    WORD = "word"
    Z = "z"


@dataclass(frozen=True)
class Vertex:
    kind: VertexKind
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind is VertexKind.WORD:
            if not self.word:
                raise ValueError("word vertices need a nonempty word")
            if len(set(self.word)) != len(self.word):
                raise ValueError(f"word {self.word} repeats a letter")
        elif self.word:
            raise ValueError("s and z carry no word")

    @classmethod
    def source(cls) -> Vertex:
        return cls(VertexKind.S)

    @classmethod
    def sink(cls) -> Vertex:
        return cls(VertexKind.Z)

    @classmethod
    def of(cls, *letters: int) -> Vertex:
        return cls(VertexKind.WORD, tuple(letters))

    @property
    def label(self) -> str:
        if self.kind is VertexKind.S:
            return "s"
        if self.kind is VertexKind.Z:
            return "z"
        if max(self.word) < 10:
            return "".join(map(str, self.word))
        return "-".join(map(str, self.word))

    def sort_key(self) -> tuple:
        # s first, words by length then lexicographically, z last
        order = {VertexKind.S: 0, VertexKind.WORD: 1, VertexKind.Z: 2}
        return (order[self.kind], len(self.word), self.word)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Edge:
    u: Hashable
    v: Hashable
    edge_id: int
    rule: int | None = None
    label: str = ""

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("loops are not allowed")


@dataclass(frozen=True)
class Graph:
    """Finite multigraph with an explicit vertex order and 1-based edge ids."""

    vertices: tuple
    edges: tuple[Edge, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for pos, e in enumerate(self.edges, start=1):
            if e.edge_id != pos:
                raise ValueError("edge ids must be 1..|E| in order")
            if e.u not in index or e.v not in index:
                raise ValueError(f"edge {e.edge_id} has an unknown endpoint")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, vertices: Sequence, edges: Iterable[tuple]) -> Graph:
        """Build from ``(u, v)`` or ``(u, v, label)`` tuples; ids follow the given order."""
        out = []
        for pos, spec in enumerate(edges, start=1):
            u, v = spec[0], spec[1]
            label = spec[2] if len(spec) > 2 else str(pos)
            out.append(Edge(u, v, pos, None, label))
        return cls(tuple(vertices), tuple(out))

    def index(self, vertex) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise KeyError(f"unknown vertex {vertex!r}") from None

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_variable(self, edge_id: int) -> Polynomial:
        return Polynomial.variable(self.num_edges, edge_id)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class LabeledGraph(Graph):
    n: int = 0
    k: int = 0


def vertex_count(n: int, k: int) -> int:
    return 2 + sum(perm(n, length) for length in range(1, k + 1))


def edge_count(n: int, k: int) -> int:
    if k == 0:
        return 1
    return n + sum(perm(n, i) for i in range(2, k + 1)) + perm(n, k)


def build_G(n: int, k: int) -> LabeledGraph:
    """The graph ``G_{n,k}`` with canonical vertex and edge ordering."""
    if n < 1:
        raise DegreeError("n must be positive")
    if not 0 <= k <= n - 1:
        raise DegreeError(f"k out of range: need 0 <= k <= n-1, got n={n}, k={k}")
    s, z = Vertex.source(), Vertex.sink()
    words = [Vertex(VertexKind.WORD, w)
             for length in range(1, k + 1)
             for w in permutations(range(1, n + 1), length)]
    vertices = (s, *words, z)
    raw: list[tuple[int, Vertex, Vertex]] = []
    if k == 0:
        raw.append((1, s, z))
    else:
        for w in words:
            if len(w.word) == 1:
                raw.append((1, s, w))
            else:
                raw.append((2, Vertex(VertexKind.WORD, w.word[:-1]), w))
            if len(w.word) == k:
                raw.append((3, w, z))
    position = {v: i for i, v in enumerate(vertices)}
    raw.sort(key=lambda t: (t[0], position[t[1]], position[t[2]]))
    edges = tuple(Edge(u, v, pos, rule, f"{u.label}-{v.label}")
                  for pos, (rule, u, v) in enumerate(raw, start=1))
    return LabeledGraph(vertices, edges, n, k)


@dataclass(frozen=True)
class EdgeWeightAssignment:
    graph: LabeledGraph
    r: int
    weights: Mapping[int, RationalFunction]

    def weight(self, edge_id: int) -> RationalFunction:
        return self.weights[edge_id]

    def values(self, point: Sequence) -> dict[int, Fraction]:
        """Evaluate every edge weight at ``point``; raises ``PoleError`` on a pole."""
        cache: dict[int, Fraction] = {}
        out = {}
        for eid, w in self.weights.items():
            key = id(w)
            if key not in cache:
                cache[key] = w.evaluate(point)
            out[eid] = cache[key]
        return out


def assign_weights(g: LabeledGraph, r: int) -> EdgeWeightAssignment:
    """Edge weights defining ``H_{k,r}``.

    Rule 1 and rule 2 edges ending in a word of length ``i`` get
    ``(r-i+1)! x_{w_i}``; rule 3 edges get ``(r-k+1)! q_{r-k+1}([n] - {w})``.
    For ``k = 0`` the single edge gets ``(r+1)! q_{r+1}([n])``.
    """
    n, k = g.n, g.k
    if r < k:
        raise DegreeError(f"r must be at least k: r={r}, k={k}")
    if r > n - 1:
        raise DegreeError(f"r must be at most n-1: r={r}, n={n}")
    if k == 0:
        w = q_ratio(n, range(1, n + 1), r + 1) * factorial(r + 1)
        return EdgeWeightAssignment(g, r, {g.edges[0].edge_id: w})
    sink_weights: dict[frozenset, RationalFunction] = {}
    weights: dict[int, RationalFunction] = {}
    for e in g.edges:
        if e.rule in (1, 2):
            word = e.v.word
            i = len(word)
            poly = Polynomial.variable(n, word[-1]) * factorial(r - i + 1)
            weights[e.edge_id] = RationalFunction(poly)
        else:
            complement = frozenset(range(1, n + 1)) - set(e.u.word)
            if complement not in sink_weights:
                sink_weights[complement] = (
                    q_ratio(n, complement, r - k + 1) * factorial(r - k + 1))
            weights[e.edge_id] = sink_weights[complement]
    return EdgeWeightAssignment(g, r, weights)


@dataclass(frozen=True)
class SymbolicLaplacian:
    """Sparse symmetric matrix of rational functions indexed by an explicit vertex order."""

    order: tuple
    entries: Mapping[tuple[int, int], RationalFunction]
    ambient_dim: int

    @property
    def size(self) -> int:
        return len(self.order)

    def __getitem__(self, key: tuple[int, int]) -> RationalFunction:
        i, j = key
        if i > j:
            i, j = j, i
        return self.entries.get((i, j)) or RationalFunction.zero(self.ambient_dim)

    def to_dense(self) -> list[list[RationalFunction]]:
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]

    def polynomial_matrix(self) -> list[list[Polynomial]]:
        """Dense matrix of polynomials; every entry must have a constant denominator."""
        zero = Polynomial.zero(self.ambient_dim)
        out = [[zero] * self.size for _ in range(self.size)]
        for (i, j), rf in self.entries.items():
            p = rf.as_polynomial()
            out[i][j] = p
            out[j][i] = p
        return out

    def evaluate(self, point: Sequence) -> SymMatrix:
        return SymMatrix(self.size, ((i, j, rf.evaluate(point))
                                     for (i, j), rf in self.entries.items()))


def _edge_weights_or_variables(g: Graph, w: EdgeWeightAssignment | None) -> tuple[dict, int]:
    if w is None:
        return {e.edge_id: RationalFunction(g.edge_variable(e.edge_id)) for e in g.edges}, g.num_edges
    if w.graph is not g and w.graph != g:
        raise ValueError("weights were assigned on a different graph")
    return dict(w.weights), w.graph.n


def weighted_laplacian(g: Graph, w: EdgeWeightAssignment | None = None) -> SymbolicLaplacian:
    """``sum_e w_e (d_u - d_v)(d_u - d_v)^T``; edge variables are used when ``w`` is omitted."""
    weights, dim = _edge_weights_or_variables(g, w)
    entries: dict[tuple[int, int], RationalFunction] = {}

    def bump(key, value):
        entries[key] = entries[key] + value if key in entries else value

    for e in g.edges:
        a, b = g.index(e.u), g.index(e.v)
        we = weights[e.edge_id]
        bump((a, a), we)
        bump((b, b), we)
        bump((min(a, b), max(a, b)), -we)
    entries = {key: v for key, v in entries.items() if not v.is_zero()}
    return SymbolicLaplacian(g.vertices, entries, dim)


def reduced_laplacian(L: SymbolicLaplacian, vertex) -> SymbolicLaplacian:
    """Delete the row and column of ``vertex``, keeping the remaining order."""
    if vertex not in L.order:
        raise KeyError(f"unknown vertex {vertex!r}")
    drop = L.order.index(vertex)

    def shift(i):
        return i - 1 if i > drop else i

    entries = {(shift(i), shift(j)): v for (i, j), v in L.entries.items()
               if i != drop and j != drop}
    order = L.order[:drop] + L.order[drop + 1:]
    return SymbolicLaplacian(order, entries, L.ambient_dim)


def numeric_reduced_laplacian(g: Graph, values: Mapping[int, Fraction], deleted) -> SymMatrix:
    """Reduced Laplacian with numeric edge weights, assembled directly without symbolic entries."""
    drop = g.index(deleted)

    def idx(v):
        i = g.index(v)
        return i - 1 if i > drop else i

    entries = []
    for e in g.edges:
        we = values[e.edge_id]
        ui, vi = g.index(e.u), g.index(e.v)
        a, b = idx(e.u), idx(e.v)
        if ui != drop:
            entries.append((a, a, we))
        if vi != drop:
            entries.append((b, b, we))
        if ui != drop and vi != drop:
            entries.append((a, b, -we))
    return SymMatrix(g.num_vertices - 1, entries)


def spanning_trees_bruteforce(g: Graph) -> list[frozenset[int]]:
    """All spanning trees as sets of edge ids, by backtracking over the edge list."""
    if g.num_edges > MAX_BRUTEFORCE_EDGES:
        raise GuardExceeded(
            f"{g.num_edges} edges exceeds the brute-force limit of {MAX_BRUTEFORCE_EDGES}")
    nv = g.num_vertices
    need = nv - 1
    ends = [(g.index(e.u), g.index(e.v), e.edge_id) for e in g.edges]
    trees: list[frozenset[int]] = []

    def find(parent, i):
        while parent[i] != i:
            i = parent[i]
        return i

    def extend(pos: int, chosen: list[int], parent: list[int]):
        if len(chosen) == need:
            trees.append(frozenset(chosen))
            return
        if len(ends) - pos < need - len(chosen):
            return
        a, b, eid = ends[pos]
        ra, rb = find(parent, a), find(parent, b)
        if ra != rb:
            merged = list(parent)
            merged[ra] = rb
            chosen.append(eid)
            extend(pos + 1, chosen, merged)
            chosen.pop()
        extend(pos + 1, chosen, parent)

    if nv == 1:
        return [frozenset()]
    extend(0, [], list(range(nv)))
    return sorted(trees, key=lambda t: sorted(t))


def spanning_tree_polynomial(g: Graph) -> Polynomial:
    """``T_G``: sum over spanning trees of the product of their edge variables."""
    terms = {}
    for tree in spanning_trees_bruteforce(g):
        exps = [0] * g.num_edges
        for eid in tree:
            exps[eid - 1] += 1
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + 1
    return Polynomial(g.num_edges, terms)
