"""Multigraphs and their graphic and cographic matroids."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import (
    Disconnected,
    FreeMatroid,
    FreeResult,
    NotANeighborhoodMinor,
    NotTwoConnected,
    ParseError,
    PropertyViolation,
)
from .matroid import BinaryMatroid, CycleSet, are_isomorphic, cycles, dual, from_gf2_matrix, same_circuits, set_key
from .minors import COLOOP, DELETE, RETRACT, SERIES, MinorStep, MinorWitness, find_minor, replay

Edge = Tuple[int, int, str]


@dataclass(frozen=True)
class Multigraph:
    nv: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        seen = set()
        for u, v, lab in self.edges:
            if not (0 <= u < self.nv and 0 <= v < self.nv):
                raise ValueError(f"edge {lab} has an endpoint outside 0..{self.nv - 1}")
            if lab in seen:
                raise ValueError(f"duplicate edge label {lab!r}")
            seen.add(lab)

    @classmethod
    def from_pairs(cls, nv: int, pairs: Iterable[Tuple[int, int]], prefix: str = "e") -> "Multigraph":
        return cls(nv, tuple((u, v, f"{prefix}{k}") for k, (u, v) in enumerate(pairs)))

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(lab for _, _, lab in self.edges)

    def edge(self, label: str) -> Edge:
        for e in self.edges:
            if e[2] == label:
                return e
        raise KeyError(label)

    def neighbors(self, v: int) -> Set[int]:
        out = set()
        for a, b, _ in self.edges:
            if a == v and b != v:
                out.add(b)
            elif b == v and a != v:
                out.add(a)
        return out

    def neighbors_of_set(self, T: Iterable[int]) -> Set[int]:
        T = set(T)
        out: Set[int] = set()
        for v in T:
            out |= self.neighbors(v)
        return out - T

    def induced(self, W: Iterable[int]) -> "Multigraph":
        """Induced subgraph on ``W``; vertex numbering is kept."""
        W = set(W)
        return Multigraph(self.nv, tuple(e for e in self.edges if e[0] in W and e[1] in W))

    def is_simple(self) -> bool:
        pairs = set()
        for u, v, _ in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def active_vertices(self) -> List[int]:
        return sorted({x for u, v, _ in self.edges for x in (u, v)})

    def components(self, vertices: Optional[Iterable[int]] = None) -> List[List[int]]:
        verts = sorted(set(self.active_vertices() if vertices is None else vertices))
        adj: Dict[int, Set[int]] = {v: set() for v in verts}
        for u, v, _ in self.edges:
            if u in adj and v in adj:
                adj[u].add(v)
                adj[v].add(u)
        seen: Set[int] = set()
        out = []
        for s in verts:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        """Connectivity ignoring isolated vertices."""
        return len(self.components()) <= 1


def complete_graph(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Multigraph:
    return Multigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


# -------------------------------------------------------------- file format


def parse_graph(text: str) -> Multigraph:
    """``graph NV`` header, then ``u v label`` per line; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "graph" or not head[1].isdigit():
        raise ParseError(f"bad graph header {lines[0]!r}")
    nv = int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad vertex index in {ln!r}") from exc
        edges.append((u, v, parts[2]))
    try:
        return Multigraph(nv, tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(G: Multigraph) -> str:
    return "\n".join([f"graph {G.nv}"] + [f"{u} {v} {lab}" for u, v, lab in G.edges]) + "\n"


# --------------------------------------------------------------- matroids


def incidence_rows(G: Multigraph) -> List[int]:
    rows = []
    for x in range(G.nv):
        r = 0
        for j, (u, v, _) in enumerate(G.edges):
            if u != v and x in (u, v):
                r |= 1 << j
        rows.append(r)
    return rows


def cycle_matroid(G: Multigraph) -> BinaryMatroid:
    try:
        return from_gf2_matrix(incidence_rows(G), G.labels, ncols=len(G.edges))
    except FreeMatroid as exc:
        raise FreeResult("graph has no cycles") from exc


def _dual_of_graphic(G: Multigraph) -> BinaryMatroid:
    M = dual(cycle_matroid(G))
    assert isinstance(M, BinaryMatroid)
    return M


def cographic_matroid(G: Multigraph) -> BinaryMatroid:
    if not G.is_connected():
        raise Disconnected("cographic matroid needs a connected graph; take the sum over components")
    return _dual_of_graphic(G)


def even_degree_subsets(G: Multigraph) -> List[int]:
    """Brute force over edge subsets; a loop adds 2 to its vertex degree."""
    m = len(G.edges)
    out = []
    for mask in range(1 << m):
        deg = [0] * G.nv
        for j, (u, v, _) in enumerate(G.edges):
            if (mask >> j) & 1 and u != v:
                deg[u] ^= 1
                deg[v] ^= 1
        if not any(deg):
            out.append(mask)
    return sorted(out, key=set_key)


def eulerian_subgraphs(G: Multigraph, cross_check: bool = True) -> CycleSet:
    C = cycles(cycle_matroid(G))
    if cross_check and len(G.edges) <= 16:
        if list(C.cycles) != even_degree_subsets(G):
            raise PropertyViolation("cycle space differs from even-degree subgraphs")
    return C


def cut_of(G: Multigraph, A: Iterable[int]) -> int:
    A = set(A)
    mask = 0
    for j, (u, v, _) in enumerate(G.edges):
        if (u in A) != (v in A):
            mask |= 1 << j
    return mask


def cut_sets(G: Multigraph, cross_check: bool = True) -> CycleSet:
    if not G.is_connected():
        raise Disconnected("cut sets are computed for connected graphs")
    verts = G.active_vertices()
    found = {0}
    rest = verts[1:]
    for k in range(len(rest) + 1):
        for A in combinations(rest, k):
            found.add(cut_of(G, A))
    C = CycleSet(G.labels, tuple(sorted(found, key=set_key)))
    if cross_check:
        try:
            other = cycles(cographic_matroid(G))
        except FreeMatroid:
            other = None
        if other is not None and other.cycles != C.cycles:
            raise PropertyViolation("cut sets differ from cocycles")
    return C


# ---------------------------------------------------------- graph operations


def edge_delete(G: Multigraph, label: str) -> Multigraph:
    G.edge(label)
    return Multigraph(G.nv, tuple(e for e in G.edges if e[2] != label))


def edge_contract(G: Multigraph, label: str) -> Multigraph:
    """Merge the second endpoint into the first; contracting a loop deletes it."""
    u, v, _ = G.edge(label)
    out = []
    for a, b, lab in G.edges:
        if lab == label:
            continue
        out.append((u if a == v else a, u if b == v else b, lab))
    return Multigraph(G.nv, tuple(out))


# -------------------------------------------------------- neighbourhoods


@dataclass(frozen=True)
class NeighborhoodMinorSpec:
    W: FrozenSet[int]
    Wprime: FrozenSet[int]
    v: int

    @classmethod
    def make(cls, W: Iterable[int], Wprime: Iterable[int], v: int) -> "NeighborhoodMinorSpec":
        return cls(frozenset(W), frozenset(Wprime), v)


def _validate_spec(G: Multigraph, spec: NeighborhoodMinorSpec) -> None:
    if not spec.W or not spec.Wprime:
        raise ValueError("W and W' must be nonempty")
    if spec.W & spec.Wprime or (spec.W | spec.Wprime) != set(range(G.nv)):
        raise ValueError("W and W' must partition the vertex set")
    if spec.v not in spec.W:
        raise ValueError("v must lie in W")


def is_neighborhood_minor(G: Multigraph, spec: NeighborhoodMinorSpec) -> bool:
    _validate_spec(G, spec)
    H = G.induced(spec.W)
    closed = H.neighbors(spec.v) | {spec.v}
    return (spec.W & G.neighbors_of_set(spec.Wprime)) <= closed


class _Tracker:
    """A graph being reduced, with the matching cographic steps."""

    def __init__(self, G: Multigraph):
        self.G = G
        self.steps: List[MinorStep] = []

    def contract(self, label: str, keep: Optional[int] = None) -> None:
        """Contract ``label``; ``keep`` names the endpoint that survives."""
        if keep is not None:
            self.G = Multigraph(self.G.nv, tuple(
                (keep, (b if a == keep else a), l) if l == label else (a, b, l) for a, b, l in self.G.edges))
        self.G = edge_contract(self.G, label)
        self.steps.append(MinorStep(DELETE, (label,)))

    def drop_loop(self, label: str, kind: str = COLOOP) -> None:
        self.G = edge_delete(self.G, label)
        self.steps.append(MinorStep(kind, (label,)))

    def drop_parallel(self, label: str) -> None:
        self.G = edge_delete(self.G, label)
        self.steps.append(MinorStep(SERIES, (label,)))

    def drop_cut(self, E: Sequence[str], Eprime: Sequence[str]) -> None:
        for lab in Eprime:
            self.G = edge_delete(self.G, lab)
        self.steps.append(MinorStep(RETRACT, tuple(Eprime), tuple(E)))


def _shrink_component(t: _Tracker, comp: Set[int], kind_for_loops: str) -> int:
    """Contract ``comp`` to its smallest vertex; drop the loops this creates."""
    w = min(comp)
    while True:
        e = next((e for e in t.G.edges if e[0] in comp and e[1] in comp and e[0] != e[1]), None)
        if e is None:
            break
        t.contract(e[2], keep=w if w in e[:2] else None)
    for e in [e for e in t.G.edges if e[0] == e[1] == w]:
        t.drop_loop(e[2], kind_for_loops)
    return w


def neighborhood_minor_witness(G: Multigraph, spec: NeighborhoodMinorSpec) -> MinorWitness:
    """Explicit g-series steps from ``M(G)*`` down to ``M(G_W)*``.

    Each component of ``G_{W'}`` is contracted to a vertex ``w'``.  If ``v``
    is adjacent to ``w'`` the edge ``v w'`` is contracted and the resulting
    parallel copies removed; otherwise the star of ``w'`` is removed by one
    binary retract paired with the edges from ``v``.
    """
    if not G.is_simple():
        raise ValueError("neighborhood-minor witnesses are built for simple graphs")
    if not is_neighborhood_minor(G, spec):
        raise NotANeighborhoodMinor("W ∩ N(W') is not inside N_H[v]")
    v = spec.v
    W = set(spec.W)
    H = G.induced(W)
    t = _Tracker(G)
    for comp in G.components(spec.Wprime):
        comp = set(comp)
        touching = W & G.neighbors_of_set(comp)
        if not touching:
            _shrink_component(t, comp, DELETE)
            continue
        w = _shrink_component(t, comp, COLOOP)
        # one edge per neighbour of w
        kept: Dict[int, str] = {}
        for a, b, lab in list(t.G.edges):
            if w in (a, b):
                x = b if a == w else a
                if x in kept:
                    t.drop_parallel(lab)
                else:
                    kept[x] = lab
        others = sorted(x for x in kept if x != v)
        h_edge = {}
        for a, b, lab in H.edges:
            if v in (a, b):
                h_edge[b if a == v else a] = lab
        if v in kept:
            t.contract(kept[v], keep=v)
            for x in others:
                t.drop_parallel(kept[x])
        else:
            t.drop_cut([h_edge[x] for x in others], [kept[x] for x in others])
    witness = MinorWitness(t.steps)
    start = _dual_of_graphic(G)
    end = replay(start, witness.steps)
    target = _dual_of_graphic(H)
    if not same_circuits(end, target):
        raise PropertyViolation("neighborhood-minor steps do not reach M(H)*")
    witness.final_iso = {lab: lab for lab in end.labels}
    return witness


# ------------------------------------------------------------ recognition


def _articulation_free(G: Multigraph) -> bool:
    verts = G.active_vertices()
    adj: Dict[int, List[Tuple[int, str]]] = {x: [] for x in verts}
    for a, b, lab in G.edges:
        adj[a].append((b, lab))
        adj[b].append((a, lab))
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    ok = [True]

    def dfs(x: int, via: Optional[str]) -> None:
        disc[x] = low[x] = len(disc)
        children = 0
        for y, lab in adj[x]:
            if lab == via:
                continue
            if y in disc:
                low[x] = min(low[x], disc[y])
                continue
            children += 1
            dfs(y, lab)
            low[x] = min(low[x], low[y])
            if via is not None and low[y] >= disc[x]:
                ok[0] = False
        if via is None and children > 1:
            ok[0] = False

    dfs(verts[0], None)
    return ok[0] and len(disc) == len(verts)


def is_two_connected(G: Multigraph) -> bool:
    """Loopless, connected, at least two edges and no cut vertex."""
    if len(G.edges) < 2 or any(u == v for u, v, _ in G.edges):
        return False
    return _articulation_free(G)


def is_series_parallel(G: Multigraph) -> bool:
    if not is_two_connected(G):
        raise NotTwoConnected("series-parallel test needs a 2-connected loopless graph")
    return find_minor(cycle_matroid(G), cycle_matroid(complete_graph(4)), "general") is None
