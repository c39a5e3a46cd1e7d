"""Hardness gadget: attach a 3-vertex path center to every vertex and verify
the weight identity gamma_oidR(G') = 4n - alpha(G)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, gadget as gadget_graph
from .labeling import Labeling, is_oidrd, weight
from .solver import solve_alpha, solve_oidrd

IDENTITY_BASE_CAP = 5


class ReductionError(ValueError):
    """Bad reduction input: oversized base graph or dependent vertex set."""


@dataclass(frozen=True)
class GadgetMap:
    """The gadget graph plus index maps back to the base graph.

    u_index[v] is the path center attached to base vertex v; leaf_index[u]
    gives the two leaves of center u.
    """

    base: Graph
    gadget: Graph
    u_index: dict[int, int]
    leaf_index: dict[int, tuple[int, int]]


def build_gadget(g: Graph) -> GadgetMap:
    gp = gadget_graph(g)
    n = g.n
    u_index = {v: n + v for v in range(n)}
    leaf_index = {n + v: (2 * n + 2 * v, 2 * n + 2 * v + 1) for v in range(n)}
    assert gp.n == 4 * n
    assert all(gp.degree(u) == 3 for u in u_index.values())
    assert all(gp.degree(leaf) == 1 for pair in leaf_index.values() for leaf in pair)
    # centers always have degree 3, so the gadget degree is max(deg+1, 3)
    assert gp.max_degree <= max(g.max_degree + 1, 3)
    return GadgetMap(g, gp, u_index, leaf_index)


@dataclass(frozen=True)
class IdentityReport:
    lhs: int  # gamma_oidR of the gadget
    rhs: int  # 4n - alpha of the base
    equal: bool


def verify_identity(g: Graph, max_n: int = IDENTITY_BASE_CAP) -> IdentityReport:
    """Compute both sides of the gadget identity exactly."""
    if g.n > max_n:
        raise ReductionError(
            f"identity verification capped at base n <= {max_n} (the gadget has 4n vertices)")
    gm = build_gadget(g)
    lhs = solve_oidrd(gm.gadget).value
    rhs = 4 * g.n - solve_alpha(g).value
    return IdentityReport(lhs, rhs, lhs == rhs)


def witness_from_independent_set(g: Graph, independent: Iterable[int]) -> Labeling:
    """The gadget labeling induced by an independent set of the base: 3 on
    every path center, 0 on leaves and on the set, 1 on remaining base vertices."""
    chosen = set(independent)
    if not chosen <= set(range(g.n)):
        raise ReductionError("independent set contains vertices outside the base graph")
    for v in chosen:
        if g.adj[v] & chosen:
            raise ReductionError(f"vertex set is not independent: {v} has a chosen neighbor")
    gm = build_gadget(g)
    values = [0] * gm.gadget.n
    for v in range(g.n):
        values[gm.u_index[v]] = 3
        if v not in chosen:
            values[v] = 1
    lab = Labeling(tuple(values))
    assert is_oidrd(gm.gadget, lab)
    assert weight(lab) == 4 * g.n - len(chosen)
    return lab
