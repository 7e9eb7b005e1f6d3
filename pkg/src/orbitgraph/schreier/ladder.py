"""The two-rail infinite ladder, proper 3-edge-colorings driven by a color
sequence, and the induced action of three involutions on its vertices.

A color sequence assigns a color in {0, 1, 2} to every rail edge column; both
rails carry the same sequence, and the rung of a column then receives the one
color missing at its endpoints.  The sequence must never repeat a color on
consecutive columns, otherwise no proper coloring exists there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from ..errors import SpecError
from ..graphs import LazyGraph


@dataclass(frozen=True)
class ColorSequence:
    """Two-sided sequence k -> color in {0,1,2} with no equal neighbors.

    ``aperiodic`` is an attestation supplied by the constructor, not a
    verified property (not decidable from finitely many samples).
    """

    at: Callable[[int], int]
    aperiodic: bool
    name: str = "tau"

    def __call__(self, k: int) -> int:
        c = self.at(k)
        if c not in (0, 1, 2):
            raise SpecError(f"{self.name}({k}) = {c!r} is not a color")
        return c

    def check_window(self, lo: int, hi: int) -> None:
        for k in range(lo, hi):
            if self(k) == self(k + 1):
                raise SpecError(
                    f"color sequence {self.name} repeats color {self(k)} "
                    f"at columns {k}, {k + 1}")


def periodic_colors(pattern=(0, 1, 2), name: str = "periodic") -> ColorSequence:
    pattern = tuple(pattern)
    if any(pattern[i] == pattern[(i + 1) % len(pattern)] for i in range(len(pattern))):
        raise SpecError("periodic pattern repeats a color on consecutive entries")
    return ColorSequence(at=lambda k: pattern[k % len(pattern)],
                         aperiodic=False, name=name)


def _golden_bit(k: int) -> int:
    """k-th letter of the two-sided Fibonacci (golden rotation) word.

    bit(k) = floor((k+1)/phi) - floor(k/phi), computed exactly with integer
    square roots: floor(m/phi) = floor(m*sqrt(5)) // 2 ... via
    floor(m*(sqrt(5)-1)/2) = (floor(m*sqrt(5)) - m) // 2.
    """
    def fl(m):  # floor(m * sqrt(5)), exact for any integer m
        if m >= 0:
            return math.isqrt(5 * m * m)
        return -math.isqrt(5 * m * m) - 1  # sqrt(5)*m irrational for m != 0

    def fphi(m):  # floor(m / phi) = floor(m * (sqrt(5) - 1) / 2)
        return (fl(m) - m) // 2

    return fphi(k + 1) - fphi(k)


def fibonacci_colors(name: str = "fib") -> ColorSequence:
    """Aperiodic sequence coded by the Fibonacci word: each step advances the
    color by 1 or 2 (mod 3) according to the word, so neighbors always differ.
    """
    cache = {0: 0}

    def at(k: int) -> int:
        if k in cache:
            return cache[k]
        if k > 0:
            lo = max(i for i in cache if i < k)  # walk up from nearest known
            c = cache[lo]
            for i in range(lo, k):
                c = (c + 1 + _golden_bit(i)) % 3
                cache[i + 1] = c
        else:
            hi = min(i for i in cache if i > k)
            c = cache[hi]
            for i in range(hi - 1, k - 1, -1):
                c = (c - 1 - _golden_bit(i)) % 3
                cache[i] = c
        return cache[k]

    return ColorSequence(at=at, aperiodic=True, name=name)


class LadderGraph(LazyGraph):
    """Ladder on Z x {0,1} with a Tait coloring induced by a color sequence.

    Edge colors: rail edge (k,i)-(k+1,i) has color tau(k); the rung
    (k,0)-(k,1) has the color missing from {tau(k-1), tau(k)}.
    """

    def __init__(self, tau: ColorSequence):
        def nbrs(v):
            k, i = v
            return [(k - 1, i), (k + 1, i), (k, 1 - i)]

        super().__init__(root=(0, 0), neighbors=nbrs, degree_bound=3,
                         name=f"ladder[{tau.name}]", stepper=("ladder",))
        object.__setattr__(self, "tau", tau)

    def rung_color(self, k: int) -> int:
        a, b = self.tau(k - 1), self.tau(k)
        if a == b:
            raise SpecError(
                f"no rung color at column {k}: rails {a} and {b} coincide")
        return 3 - a - b

    def edge_color(self, u, v) -> int:
        (ku, iu), (kv, iv) = u, v
        if iu == iv and abs(ku - kv) == 1:
            return self.tau(min(ku, kv))
        if ku == kv and iu != iv:
            return self.rung_color(ku)
        raise ValueError(f"{u!r}-{v!r} is not a ladder edge")

    def colors_at(self, v) -> dict:
        """Incident edge -> color map at a vertex; a valid coloring hits
        each of the three colors exactly once."""
        k, i = v
        return {
            (k - 1, i): self.tau(k - 1),
            (k + 1, i): self.tau(k),
            (k, 1 - i): self.rung_color(k),
        }


def ladder_graph(tau: ColorSequence, check_window: int = 64) -> LadderGraph:
    """Build the colored ladder, rejecting sequences with equal consecutive
    colors on a probe window around the origin (violations further out are
    raised lazily when the offending column is touched)."""
    tau.check_window(-check_window, check_window)
    return LadderGraph(tau)


def ladder_action(ladder: LadderGraph):
    """Action of three involutions on the ladder vertices.

    Generator c moves a vertex along its unique incident edge of color c; the
    resulting permutation action has the colored ladder as its orbit graph.
    """
    from .factorize import SchreierAction

    def move(c: int):
        def apply(v):
            for u, color in ladder.colors_at(v).items():
                if color == c:
                    return u
            raise SpecError(f"no edge of color {c} at {v!r}")
        return apply

    return SchreierAction(generators=[move(0), move(1), move(2)],
                          involutive=True, root=(0, 0),
                          name=f"f23[{ladder.tau.name}]")
