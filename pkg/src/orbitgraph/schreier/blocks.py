"""Finite building blocks (triangle tubes and doubled ternary-tree blocks),
graded two-sided assemblies of them, and assembly specs derived from a target
growth function.

Level layout of an assembly with pairs (a_1, b_1), (a_2, b_2), ...:

* block n sits at levels [a_n, b_n - 1], its internal level j in [1, 2k-1]
  (k = (b_n - a_n + 1) // 2) at graph level a_n + j - 1, with 3^min(j, 2k-j)
  vertices;
* every other level is a tube column of 3 vertices; tube columns strictly
  between blocks carry a triangle, shared boundary columns do not (they carry
  the block's tree edges instead);
* the negative side mirrors the positive side, with a single central tube
  through level 0.

Every vertex whose whole neighborhood is inside the covered range has degree
exactly 4.  Note the blocks span 2k-1 levels while the pair (a_n, b_n) spans
2k slots; the top slot b_n is the first column of the outgoing tube.  This is
the one consistent reading of the source constraints (odd b_n - a_n, shared
boundary triples, 4-regularity), and it is what the closed-form counts below
describe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..errors import SpecError
from ..graphs import FiniteGraph, LazyGraph


def tube_graph(n: int) -> FiniteGraph:
    """Triangle tube with n columns: rails between consecutive columns,
    triangles on the interior columns only."""
    if n < 1:
        raise SpecError("tube needs at least one column")
    vertices = [(k, i) for k in range(1, n + 1) for i in range(3)]
    edges = []
    for k in range(1, n):
        for i in range(3):
            edges.append(((k, i), (k + 1, i)))
    for k in range(2, n):
        for i in range(3):
            edges.append(((k, i), (k, (i + 1) % 3)))
    return FiniteGraph(vertices=vertices, edges=edges)


def block_graph(k: int) -> FiniteGraph:
    """Doubled ternary-tree block: levels 1..2k-1 with 3^min(j, 2k-j)
    vertices at level j, a cycle on the middle level, and complete ternary
    branching toward it from both ends."""
    if k < 1:
        raise SpecError("block parameter must be positive")
    sizes = {j: 3 ** min(j, 2 * k - j) for j in range(1, 2 * k)}
    vertices = [(j, i) for j in sizes for i in range(1, sizes[j] + 1)]
    edges = []
    for j in range(1, k):  # downward tree toward the middle
        for i in range(1, sizes[j] + 1):
            for c in (3 * i - 2, 3 * i - 1, 3 * i):
                edges.append(((j, i), (j + 1, c)))
    m = sizes[k]
    for i in range(1, m + 1):  # middle cycle
        edges.append(((k, i), (k, i % m + 1)))
    for j in range(k, 2 * k - 1):  # upward tree away from the middle
        for i in range(1, sizes[j + 1] + 1):
            for c in (3 * i - 2, 3 * i - 1, 3 * i):
                edges.append(((j + 1, i), (j, c)))
    return FiniteGraph(vertices=vertices, edges=edges)


@dataclass(frozen=True)
class AssemblySpec:
    """Interleaved level pairs (a_1 < b_1 < a_2 < ...) with odd b_n - a_n.

    ``shift`` and ``source`` record how the spec was produced when it came
    from a growth function; they are metadata only.
    """

    pairs: tuple
    name: str = "assembly"
    shift: int | None = None
    source: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))
        self.validate()

    def validate(self) -> None:
        prev_b = 0
        for n, (a, b) in enumerate(self.pairs, start=1):
            if a < 1:
                raise SpecError(f"pair {n}: a = {a} is not a positive integer")
            if a <= prev_b:
                raise SpecError(
                    f"pair {n}: a = {a} does not exceed previous b = {prev_b}")
            if b <= a:
                raise SpecError(f"pair {n}: b = {b} must exceed a = {a}")
            if (b - a) % 2 == 0:
                raise SpecError(f"pair {n}: b - a = {b - a} must be odd")
            prev_b = b

    def block_size(self, n: int) -> int:
        """Block parameter k_n; by symmetry k_{-n} = k_n."""
        a, b = self.pairs[abs(n) - 1]
        return (b - a + 1) // 2

    @property
    def max_level(self) -> int:
        """Largest level covered by the spec (top tube column of the last block)."""
        return self.pairs[-1][1]

    def to_text(self) -> str:
        lines = [f"name = {self.name}"]
        if self.shift is not None:
            lines.append(f"shift = {self.shift}")
        if self.source is not None:
            lines.append(f"source = {self.source}")
        lines.append("pairs = " + " ".join(f"{a}:{b}" for a, b in self.pairs))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "AssemblySpec":
        kv = {}
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SpecError(f"bad spec line: {line!r}")
            key, val = (s.strip() for s in line.split("=", 1))
            kv[key] = val
        if "pairs" not in kv:
            raise SpecError("spec file lacks a 'pairs' entry")
        pairs = []
        for tok in kv["pairs"].split():
            a, b = tok.split(":")
            pairs.append((int(a), int(b)))
        return cls(pairs=tuple(pairs), name=kv.get("name", "assembly"),
                   shift=int(kv["shift"]) if "shift" in kv else None,
                   source=kv.get("source"))


def uniform_assembly_spec(count: int, k: int = 1, gap: int = 1,
                          a1: int = 1) -> AssemblySpec:
    """Spec with constant block size k and constant tube gaps; with k = 1 and
    gap = 1 every level holds 3 vertices and the assembly has linear growth."""
    pairs = []
    a = a1
    for _ in range(count):
        b = a + 2 * k - 1
        pairs.append((a, b))
        a = b + gap
    return AssemblySpec(pairs=tuple(pairs), name=f"uniform(k={k},gap={gap})")


# ---------------------------------------------------------------------------
# closed-form level counting

def assembly_level_size(spec: AssemblySpec, level: int) -> int:
    """Number of vertices at a signed level, from the graded description."""
    j = abs(level)
    if j > spec.max_level:
        raise SpecError(f"level {level} beyond spec coverage ({spec.max_level})")
    for a, b in spec.pairs:
        if j < a:
            break
        if a <= j <= b - 1:
            k2 = b - a + 1  # 2k
            return 3 ** min(j - a + 1, k2 - (j - a + 1))
    return 3


def assembly_ball_counts(spec: AssemblySpec, lmax: int):
    """Cumulative vertex counts D(0..lmax) over levels [-l, l]."""
    if lmax > spec.max_level:
        raise SpecError(f"lmax {lmax} beyond spec coverage ({spec.max_level})")
    counts = [assembly_level_size(spec, 0)]
    for l in range(1, lmax + 1):
        counts.append(counts[-1] + 2 * assembly_level_size(spec, l))
    return counts


def assembly_ball_count(spec: AssemblySpec, level: int) -> int:
    return assembly_ball_counts(spec, level)[-1]


def assembly_cross_edges(spec: AssemblySpec, level: int) -> int:
    """Edges between levels `level` and `level + 1` on one side (level >= 0).

    Inside a block the tree edges give max(size(j), size(j+1)); across tube
    columns and at block boundaries the three rails cross.
    """
    lo, hi = abs(level), abs(level) + 1
    s_lo, s_hi = assembly_level_size(spec, lo), assembly_level_size(spec, hi)
    if s_lo == 3 and s_hi == 3:
        # tube-tube, tube-boundary or boundary-boundary: the three rails
        return 3
    return max(s_lo, s_hi)


def assembly_cutset_sizes(spec: AssemblySpec, lmax: int) -> list:
    """Two-sided cutset sizes: edges crossing levels +-l to +-(l+1)."""
    return [2 * assembly_cross_edges(spec, l) for l in range(lmax)]


def assembly_level_census(graph: "AssemblyGraph", ball) -> dict:
    """Vertices of a materialized ball binned by level.

    Every vertex at level j sits within graph distance |j| + 1 of the root,
    so the census is complete (and comparable to the closed form) for all
    levels |j| <= ball.radius - 1.
    """
    census: dict = {}
    for v in ball.dist:
        lv = graph.level(v)
        census[lv] = census.get(lv, 0) + 1
    return census


# ---------------------------------------------------------------------------
# the lazy assembled graph

class AssemblyGraph(LazyGraph):
    """Lazy 4-regular assembly; vertex keys are ("t", level, rail) for tube
    columns and ("b", +-n, j, i) for block-internal vertices."""

    def __init__(self, spec: AssemblySpec):
        object.__setattr__(self, "spec", spec)
        super().__init__(root=("t", 0, 0), neighbors=self._neighbors,
                         degree_bound=4, name=f"assembly[{spec.name}]")

    # -- level bookkeeping ---------------------------------------------------

    def level(self, key) -> int:
        if key[0] == "t":
            return key[1]
        _, n, j, _ = key
        a, _ = self.spec.pairs[abs(n) - 1]
        lv = a + j - 1
        return lv if n > 0 else -lv

    def _block_at(self, j: int):
        """Block index n >= 1 and internal level for unsigned level j, or None."""
        for n, (a, b) in enumerate(self.spec.pairs, start=1):
            if j < a:
                return None
            if a <= j <= b - 1:
                return n, j - a + 1
        return None

    def _vertex_at(self, level: int, rail: int):
        """Canonical key of the vertex on a 3-vertex level for a rail index."""
        j = abs(level)
        if j > self.spec.max_level:
            raise SpecError(
                f"level {level} beyond spec coverage; extend the spec horizon")
        hit = self._block_at(j)
        if hit is None:
            return ("t", level, rail)
        n, bj = hit
        sign = 1 if level > 0 else -1
        return ("b", sign * n, bj, rail + 1)

    # -- adjacency -----------------------------------------------------------

    def _neighbors(self, key) -> list:
        if key[0] == "t":
            _, level, rail = key
            out = [self._vertex_at(level - 1, rail), self._vertex_at(level + 1, rail),
                   ("t", level, (rail + 1) % 3), ("t", level, (rail + 2) % 3)]
            return out
        _, n, j, i = key
        if n < 0:  # mirror the positive-side logic
            return [self._mirror(u) for u in self._neighbors(("b", -n, j, i))]
        a, b = self.spec.pairs[n - 1]
        k = (b - a + 1) // 2
        out = []
        if k == 1:
            # single-level block: a triangle shared between two tubes
            out.append(self._vertex_at(a - 1, i - 1))
            out.append(self._vertex_at(a + 1, i - 1))
            out.append(("b", n, 1, i % 3 + 1))
            out.append(("b", n, 1, (i - 2) % 3 + 1))
            return out
        if j == 1:
            out.append(self._vertex_at(a - 1, i - 1))  # outward tube rail
            out.extend(("b", n, 2, c) for c in (3 * i - 2, 3 * i - 1, 3 * i))
        elif j < k:
            out.append(("b", n, j - 1, (i + 2) // 3))
            out.extend(("b", n, j + 1, c) for c in (3 * i - 2, 3 * i - 1, 3 * i))
        elif j == k:
            m = 3 ** k
            out.append(("b", n, k - 1, (i + 2) // 3))
            out.append(("b", n, k, i % m + 1))
            out.append(("b", n, k, (i - 2) % m + 1))
            out.append(("b", n, k + 1, (i + 2) // 3) if k + 1 <= 2 * k - 1
                       else self._vertex_at(b, i - 1))
        elif j < 2 * k - 1:
            out.extend(("b", n, j - 1, c) for c in (3 * i - 2, 3 * i - 1, 3 * i))
            out.append(("b", n, j + 1, (i + 2) // 3))
        else:  # j == 2k - 1, the top boundary triple
            out.extend(("b", n, j - 1, c) for c in (3 * i - 2, 3 * i - 1, 3 * i))
            out.append(self._vertex_at(b, i - 1))  # outgoing tube rail
        return out

    @staticmethod
    def _mirror(key):
        if key[0] == "t":
            return ("t", -key[1], key[2])
        _, n, j, i = key
        return ("b", -n, j, i)


def assembly_graph(spec: AssemblySpec) -> AssemblyGraph:
    """Assemble the lazy graded graph described by the spec."""
    return AssemblyGraph(spec)


# ---------------------------------------------------------------------------
# specs from a growth target

def growth_assembly_spec(f: Callable[[int], int], count: int,
                         shift: int | None = None, max_shift: int = 40,
                         name: str | None = None) -> AssemblySpec:
    """Assembly spec whose ball growth tracks a strictly increasing
    subexponential integer function f.

    For index j, the raw top level is max{l >= 1 : f(l) <= 3^j} and the raw
    bottom level sits 2j - 1 below it.  The returned spec uses pairs at
    indices shift+1 .. shift+count; when ``shift`` is None the smallest shift
    making all ``count`` pairs valid is chosen.  Raises SpecError when the
    requested shift fails, naming the smallest valid one.
    """

    tops: dict = {}

    def raw_top(j: int) -> int:
        if j in tops:
            return tops[j]
        cap = 3 ** j
        if f(1) > cap:
            raise SpecError(f"f(1) = {f(1)} already exceeds 3^{j}")
        lo = max([1] + [t for jj, t in tops.items() if jj < j])
        hi = lo + 1
        while f(hi) <= cap:
            lo, hi = hi, hi * 2
        while hi - lo > 1:  # f(lo) <= cap < f(hi)
            mid = (lo + hi) // 2
            if f(mid) <= cap:
                lo = mid
            else:
                hi = mid
        tops[j] = lo
        return lo

    def pairs_for(m: int):
        out = []
        for n in range(1, count + 1):
            j = n + m
            b = raw_top(j)
            out.append((b - 2 * j + 1, b))
        return out

    def first_violation(pairs):
        prev_b = 0
        for n, (a, b) in enumerate(pairs, start=1):
            if a <= prev_b or a < 1:
                return n
            prev_b = b
        return None

    # monotonicity audit of f over the probed range
    top = raw_top(count + (shift if shift is not None else max_shift))
    last = f(1)
    for l in range(2, min(top, 5000) + 1):
        cur = f(l)
        if cur <= last:
            raise SpecError(f"growth function is not strictly increasing at {l}")
        last = cur

    minimal = None
    for m in range(0, max_shift + 1):
        if first_violation(pairs_for(m)) is None:
            minimal = m
            break
    if shift is None:
        if minimal is None:
            raise SpecError(
                f"no shift up to {max_shift} yields a valid spec "
                f"(growth too fast for interleaving?)")
        shift = minimal
    else:
        pairs = pairs_for(shift)
        bad = first_violation(pairs)
        if bad is not None:
            hint = (f"; smallest valid shift is {minimal}" if minimal is not None
                    else f"; no shift up to {max_shift} works")
            raise SpecError(f"shift {shift} invalid at pair {bad}{hint}")
    return AssemblySpec(pairs=tuple(pairs_for(shift)),
                        name=name or f"growth(shift={shift})",
                        shift=shift, source=name)
