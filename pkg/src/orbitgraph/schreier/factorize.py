"""Permutation actions with lazily discovered state spaces, and the
realization of connected 2m-regular multigraphs as such actions.

The construction: orient the edges along an Euler circuit, which balances
in- and out-degrees at m, then peel m perfect matchings off the resulting
m-regular bipartite out/in incidence graph.  Each matching is a permutation
of the vertex set, and the m permutations reproduce the original edge
multiset as {v, sigma_i(v)}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..errors import ConstructionError
from ..graphs import Ball, FiniteGraph, LazyGraph, bfs_ball


@dataclass
class SchreierAction:
    """Generators acting on states, each either an involution or a
    permutation given with its inverse.

    ``generators`` hold callables state -> state.  For involutive actions the
    generators are their own inverses and each contributes a single edge at a
    state; for permutation actions each generator contributes the edges to
    sigma(x) and sigma^{-1}(x), so the orbit graph is 2m-regular counting
    multiplicity.
    """

    generators: list
    root: object
    involutive: bool = False
    inverses: list | None = None
    name: str = "action"
    # set by two_factorize for finite actions with explicit permutations
    permutations: list | None = None
    states: list | None = None

    def __post_init__(self):
        if not self.involutive and self.inverses is None:
            raise ValueError("permutation actions need explicit inverses")

    def neighbors(self, state) -> list:
        if self.involutive:
            return [g(state) for g in self.generators]
        out = [g(state) for g in self.generators]
        out += [g(state) for g in self.inverses]
        return out

    def degree(self) -> int:
        return len(self.generators) * (1 if self.involutive else 2)

    def graph(self) -> LazyGraph:
        return LazyGraph(root=self.root, neighbors=self.neighbors,
                         degree_bound=self.degree(), name=self.name)

    def check_involutive(self, states) -> None:
        if not self.involutive:
            return
        for x in states:
            for g in self.generators:
                if g(g(x)) != x:
                    raise ConstructionError(f"generator not involutive at {x!r}")


def schreier_ball(action: SchreierAction, root=None, radius: int = 3) -> Ball:
    """Materialized ball of the orbit graph of an action."""
    g = action.graph()
    if root is not None:
        g = LazyGraph(root=root, neighbors=g.neighbors,
                      degree_bound=g.degree_bound, name=g.name)
    return bfs_ball(g, radius)


def _euler_orientation(graph: FiniteGraph) -> list:
    """Directed edge list of an Euler circuit over the whole multigraph."""
    index = {v: i for i, v in enumerate(graph.vertices)}
    adj: list = [[] for _ in graph.vertices]
    for eid, (u, v) in enumerate(sorted(graph.edges)):
        adj[index[u]].append((index[v], eid))
        adj[index[v]].append((index[u], eid))
    for a in adj:
        a.sort()
    used = [False] * graph.n_edges
    ptr = [0] * graph.n_vertices
    arcs = []
    stack = [0]
    trail = []  # vertices in traversal order, rebuilt on backtrack
    while stack:
        v = stack[-1]
        advanced = False
        while ptr[v] < len(adj[v]):
            u, eid = adj[v][ptr[v]]
            ptr[v] += 1
            if not used[eid]:
                used[eid] = True
                stack.append(u)
                advanced = True
                break
        if not advanced:
            trail.append(stack.pop())
    # trail is the Euler circuit reversed; consecutive pairs are the arcs
    for a, b in zip(trail, trail[1:]):
        arcs.append((a, b))
    if len(arcs) != graph.n_edges:
        raise ConstructionError("graph is not connected (Euler circuit failed)")
    return arcs


def two_factorize(graph: FiniteGraph) -> SchreierAction:
    """Decompose a connected 2m-regular multigraph into m permutations whose
    orbit graph reproduces it exactly.

    Raises ConstructionError on odd or unequal degrees or a disconnected
    input.  Loops count two toward the degree and are preserved as fixed
    points with loops in the reconstruction.
    """
    if not graph.vertices:
        raise ConstructionError("empty graph")
    degrees = graph.degrees()
    degset = set(degrees.values())
    if len(degset) != 1:
        raise ConstructionError(f"not regular: degrees {sorted(degset)}")
    deg = degset.pop()
    if deg % 2:
        raise ConstructionError(f"degree {deg} is odd; need 2m-regular")
    m = deg // 2
    if not graph.is_connected():
        raise ConstructionError("graph is not connected")
    nv = graph.n_vertices
    arcs = Counter(_euler_orientation(graph))
    perms = []
    for round_ in range(m):
        rows, cols, mult = [], [], []
        for (a, b), c in sorted(arcs.items()):
            rows.append(a)
            cols.append(b)
            mult.append(c)
        support = csr_matrix((np.ones(len(rows), dtype=np.int8),
                              (np.array(rows), np.array(cols))),
                             shape=(nv, nv))
        match = maximum_bipartite_matching(support, perm_type="column")
        if (match < 0).any():
            raise ConstructionError(
                f"no perfect matching in factor {round_ + 1}; input not 2m-regular?")
        perm = match.astype(np.int64)
        for a in range(nv):
            arc = (a, int(perm[a]))
            arcs[arc] -= 1
            if arcs[arc] == 0:
                del arcs[arc]
            elif arcs[arc] < 0:
                raise ConstructionError("matching used a missing arc")
        perms.append(perm)
    if arcs:
        raise ConstructionError("arcs left over after factor extraction")

    vertices = graph.vertices
    index = {v: i for i, v in enumerate(vertices)}
    gens, invs = [], []
    for perm in perms:
        inv = np.empty_like(perm)
        inv[perm] = np.arange(nv)
        gens.append(lambda v, p=perm: vertices[p[index[v]]])
        invs.append(lambda v, p=inv: vertices[p[index[v]]])
    action = SchreierAction(generators=gens, inverses=invs,
                            root=vertices[0], involutive=False,
                            name=f"factorized(m={m})")
    action.permutations = [p.copy() for p in perms]
    action.states = list(vertices)
    return action


def reconstruct_edges(action: SchreierAction) -> Counter:
    """Edge multiset {v, sigma_i(v)} over all states and permutation
    generators; the round-trip partner of two_factorize."""
    if not hasattr(action, "permutations"):
        raise ValueError("action does not carry explicit permutations")
    edges: Counter = Counter()
    verts = action.states
    for perm in action.permutations:
        for i, v in enumerate(verts):
            u = verts[perm[i]]
            edges[(v, u) if not u < v else (u, v)] += 1
    return edges
