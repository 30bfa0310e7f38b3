"""Named matroids and graphs used by the CLI and the checks."""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Optional

from .graphs import Multigraph, cographic_matroid, complete_graph, cycle_graph, cycle_matroid
from .matroid import BinaryMatroid, Matroid, direct_sum, dual, from_gf2_matrix, uniform

FANO_ROWS = ["1000111", "0101011", "0011101"]


def fano() -> BinaryMatroid:
    return from_gf2_matrix(FANO_ROWS, [str(i) for i in range(1, 8)])


def fano_dual() -> Matroid:
    return dual(fano())


def k4_minus_edge() -> Multigraph:
    return Multigraph.from_pairs(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def theta6() -> Multigraph:
    """Three internally disjoint paths of length two between vertices 0 and 1."""
    return Multigraph.from_pairs(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])


def triangle_with_bridge() -> Multigraph:
    return Multigraph(4, ((0, 1, "a"), (1, 2, "b"), (2, 0, "c"), (2, 3, "bridge")))


GRAPHS: Dict[str, Callable[[], Multigraph]] = {
    "k2": lambda: complete_graph(2),
    "k3": lambda: complete_graph(3),
    "k4": lambda: complete_graph(4),
    "k5": lambda: complete_graph(5),
    "c4": lambda: cycle_graph(4),
    "c5": lambda: cycle_graph(5),
    "k4-e": k4_minus_edge,
    "theta6": theta6,
    "triangle-bridge": triangle_with_bridge,
}

MATROIDS: Dict[str, Callable[[], Matroid]] = {
    "fano": fano,
    "fanodual": fano_dual,
    "k4": lambda: cycle_matroid(complete_graph(4)),
    "k4dual": lambda: cographic_matroid(complete_graph(4)),
    "u24": lambda: uniform(2, 4),
    "k5dual": lambda: cographic_matroid(complete_graph(5)),
    "c4": lambda: cycle_matroid(cycle_graph(4)),
    "c4dual": lambda: cographic_matroid(cycle_graph(4)),
}


def named(name: str) -> Optional[Matroid]:
    f = MATROIDS.get(name.lower())
    return f() if f else None


def small_fixtures() -> Dict[str, Matroid]:
    """Fixtures whose cycle ideals are cheap; direct sums included."""
    out = {k: MATROIDS[k]() for k in ("fanodual", "k4", "k4dual", "c4", "c4dual", "u24")}
    out["c4+k3"] = direct_sum(out["c4"], cycle_matroid(complete_graph(3)))
    out["fanodual+k3"] = direct_sum(out["fanodual"], cycle_matroid(complete_graph(3)))
    out["triangle-bridge"] = cycle_matroid(triangle_with_bridge())
    return out


def random_binary_matroid(rng: random.Random, max_elements: int = 8, max_nullity: int = 4) -> BinaryMatroid:
    """Random non-free binary matroid; rejection-samples the nullity bound."""
    while True:
        n = rng.randint(2, max_elements)
        r = rng.randint(max(0, n - max_nullity), n - 1)
        rows = [rng.getrandbits(n) for _ in range(r)]
        M = from_gf2_matrix(rows, [f"x{i}" for i in range(n)], ncols=n)
        if 1 <= M.nullity <= max_nullity:
            return M


def random_binary_matroids(count: int, seed: int = 0, **kw) -> List[BinaryMatroid]:
    rng = random.Random(seed)
    return [random_binary_matroid(rng, **kw) for _ in range(count)]
