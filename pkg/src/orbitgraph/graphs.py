"""Graph substrate: lazy graphs given by neighbor oracles, finite multigraphs,
deterministic BFS balls, and growth profiles.

Vertex keys are hashable, mutually comparable values (integers or tuples of
integers/strings by convention of each builder).  Neighbor oracles return the
full adjacency *multiset* of a vertex as a list; a self-loop of multiplicity m
appears 2m times in the list, so that ``len(neighbors(v))`` is the degree with
loops counted twice.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable

from .errors import ConstructionError

VertexKey = Hashable


@dataclass(frozen=True)
class LazyGraph:
    """A (possibly infinite) graph given by a pure neighbor oracle.

    The oracle must be symmetric (u occurs in neighbors(v) with the same
    multiplicity as v in neighbors(u)) and deterministic; BFS verifies both
    properties on the materialized part and fails loudly otherwise.
    """

    root: VertexKey
    neighbors: Callable[[VertexKey], list]
    degree_bound: int
    name: str = "graph"
    # optional hook for vectorized random walks: see walk.simulate
    stepper: object | None = None

    def degree(self, v: VertexKey) -> int:
        return len(self.neighbors(v))


@dataclass(frozen=True)
class Ball:
    """Materialized BFS ball of radius ``radius`` around ``root``.

    ``dist`` maps every vertex within the radius to its exact graph distance;
    ``edges`` is the multiset of unordered edges with both ends in the ball
    (loops keyed as (v, v) with multiplicity = number of loops).  Instances
    are treated as immutable after construction.
    """

    root: VertexKey
    radius: int
    dist: dict
    edges: Counter

    def boundary(self) -> list:
        return [v for v, d in self.dist.items() if d == self.radius]

    def sphere(self, n: int) -> list:
        return [v for v, d in self.dist.items() if d == n]

    def degree(self, v: VertexKey) -> int:
        deg = 0
        for (a, b), m in self.edges.items():
            if a == v or b == v:
                deg += m * (2 if a == b else 1)
        return deg

    def adjacency(self) -> dict:
        """Vertex -> list of (neighbor, multiplicity); loops reported once."""
        adj = {v: [] for v in self.dist}
        for (a, b), m in self.edges.items():
            adj[a].append((b, m))
            if a != b:
                adj[b].append((a, m))
        return adj

    def interior_vertices(self) -> list:
        return [v for v, d in self.dist.items() if d < self.radius]


@dataclass(frozen=True)
class GrowthProfile:
    """Sphere sizes, ball sizes and sphere-edge cutset sizes of a Ball."""

    radius: int
    spheres: tuple  # S(0..R)
    balls: tuple  # D(0..R), cumulative
    cutsets: tuple  # #E(0..R-1): edges from sphere n to sphere n+1


def _sorted_pair(u, v):
    return (u, v) if not v < u else (v, u)


def bfs_ball(g: LazyGraph, radius: int) -> Ball:
    """Breadth-first ball with exact distances and a verified edge multiset.

    Deterministic: each frontier is expanded in sorted key order, so repeated
    runs produce identical iteration order.  Raises ConstructionError when the
    oracle violates symmetry or the declared degree bound.
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    dist: dict = {g.root: 0}
    edges: Counter = Counter()
    # one-sided edge records awaiting confirmation from the other endpoint
    pending: dict = {}
    expanded: set = set()
    frontier = [g.root]
    for d in range(radius):
        nxt = []
        for v in sorted(frontier):
            expanded.add(v)
            local = Counter(g.neighbors(v))
            degree = sum(local.values())
            if degree > g.degree_bound:
                raise ConstructionError(
                    f"degree {degree} of {v!r} exceeds bound {g.degree_bound}")
            loops = local.pop(v, 0)
            if loops % 2:
                raise ConstructionError(f"odd loop count at {v!r}")
            if loops:
                edges[(v, v)] = loops // 2
            for u, mult in local.items():
                if u not in dist:
                    dist[u] = d + 1
                    nxt.append(u)
                key = _sorted_pair(u, v)
                prev = pending.pop(key, None)
                if prev is None:
                    pending[key] = (v, mult)
                    edges[key] = mult
                elif prev[0] == v or prev[1] != mult:
                    raise ConstructionError(
                        f"asymmetric adjacency between {v!r} and {u!r}: "
                        f"{mult} vs {prev[1]}")
        frontier = nxt
    for (u, v), (reporter, _) in pending.items():
        other = u if reporter == v else v
        if other in expanded:
            raise ConstructionError(
                f"asymmetric adjacency between {reporter!r} and {other!r}: "
                f"the edge is reported by one side only")
    return Ball(root=g.root, radius=radius, dist=dist, edges=edges)


def growth_profile(ball: Ball) -> GrowthProfile:
    """Sphere sizes S(n), ball sizes D(n) and cutset sizes #E(n) of a ball."""
    spheres = [0] * (ball.radius + 1)
    for d in ball.dist.values():
        spheres[d] += 1
    balls = []
    total = 0
    for s in spheres:
        total += s
        balls.append(total)
    cutsets = [0] * ball.radius if ball.radius else []
    for (u, v), m in ball.edges.items():
        du, dv = ball.dist[u], ball.dist[v]
        if abs(du - dv) > 1:
            raise ConstructionError(f"edge ({u!r},{v!r}) spans distances {du},{dv}")
        if du != dv:
            cutsets[min(du, dv)] += m
    return GrowthProfile(radius=ball.radius, spheres=tuple(spheres),
                         balls=tuple(balls), cutsets=tuple(cutsets))


def to_dot(ball: Ball, graph_name: str = "ball") -> str:
    """Graphviz DOT text with deterministic (sorted) vertex ordering."""
    names = {v: f'"{v}"' for v in sorted(ball.dist)}
    lines = [f"graph {graph_name} {{"]
    for v in sorted(ball.dist):
        lines.append(f'  {names[v]} [dist={ball.dist[v]}];')
    for (u, v) in sorted(ball.edges):
        for _ in range(ball.edges[(u, v)]):
            lines.append(f"  {names[u]} -- {names[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def growth_csv(profile: GrowthProfile) -> str:
    """CSV with columns n, sphere, ball, cutset (cutset empty at n = R)."""
    lines = ["n,sphere,ball,cutset"]
    for n in range(profile.radius + 1):
        cut = profile.cutsets[n] if n < profile.radius else ""
        lines.append(f"{n},{profile.spheres[n]},{profile.balls[n]},{cut}")
    return "\n".join(lines) + "\n"


@dataclass
class FiniteGraph:
    """A finite multigraph as an explicit vertex list and edge multiset.

    Edges are stored as sorted pairs; a loop (v, v) with multiplicity m
    contributes 2m to the degree of v.
    """

    vertices: list
    edges: list = field(default_factory=list)  # list of sorted pairs, with repeats

    def __post_init__(self):
        self.vertices = sorted(self.vertices)
        self.edges = [_sorted_pair(u, v) for u, v in self.edges]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_multiset(self) -> Counter:
        return Counter(self.edges)

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> dict:
        """Vertex -> neighbor multiset list (loops listed twice)."""
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.vertices)

    def as_lazy(self, root=None, name: str = "finite") -> LazyGraph:
        adj = self.adjacency()
        bound = max((len(a) for a in adj.values()), default=0)
        if root is None:
            root = self.vertices[0]
        return LazyGraph(root=root, neighbors=lambda v: adj[v],
                         degree_bound=bound, name=name)


# ---------------------------------------------------------------------------
# stock graph families used throughout tests and the CLI

def line_graph() -> LazyGraph:
    """The two-sided integer line."""
    return LazyGraph(root=0, neighbors=lambda n: [n - 1, n + 1],
                     degree_bound=2, name="z", stepper=("zd", 1))


def half_line_graph(length: int | None = None) -> LazyGraph:
    """One-sided path from 0; finite with an end vertex when length is given."""
    def nbrs(n):
        if n == 0:
            return [1]
        if length is not None and n == length:
            return [n - 1]
        return [n - 1, n + 1]
    return LazyGraph(root=0, neighbors=nbrs, degree_bound=2, name="path")


def integer_lattice(d: int) -> LazyGraph:
    """The hypercubic lattice Z^d with 2d-regular adjacency."""
    if d < 1:
        raise ValueError("dimension must be positive")
    root = (0,) * d

    def nbrs(v):
        out = []
        for k in range(d):
            for s in (-1, 1):
                out.append(v[:k] + (v[k] + s,) + v[k + 1:])
        return out

    return LazyGraph(root=root, neighbors=nbrs, degree_bound=2 * d,
                     name=f"z{d}", stepper=("zd", d))


def single_vertex_graph(loops: int = 0) -> LazyGraph:
    """One vertex carrying the given number of self-loops."""
    return LazyGraph(root=0, neighbors=lambda v: [0] * (2 * loops),
                     degree_bound=2 * loops, name="point")
