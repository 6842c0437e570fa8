"""The Diffusion firing rule and its trajectory analysis.

A configuration assigns an integer chip stack to every vertex. One firing step
moves, simultaneously on every edge, one chip from the richer endpoint to the
poorer endpoint; equal stacks exchange nothing. Stacks are plain Python ints,
so arithmetic can never wrap silently.

Configurations are tuples indexed by vertex. Every trajectory on a finite
graph enters a cycle of length 1 or 2; `run` relies on that and detects the
cycle from a two-configuration window. The preperiod, however, has no known
bound, so `run` keeps a step cap that turns a would-be hang into a loud error.

Every function here is pure: inputs are never mutated, and simulations may
share Graph objects across threads or processes freely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph

Configuration = tuple[int, ...]

# Engineering guard, not a theoretical bound: preperiod lengths are unbounded
# in general, but desk-scale inputs settle in far fewer steps.
DEFAULT_MAX_STEPS = 10_000


class Arrow(enum.IntEnum):
    """Direction of chip flow on an edge (u, v) with u < v."""

    TO_LOWER = -1   # chips flow v -> u
    FLAT = 0        # equal stacks, nothing moves
    TO_HIGHER = 1   # chips flow u -> v


@dataclass(frozen=True)
class Orientation:
    """Per-edge arrow assignment; edge order matches Graph.edges."""

    n: int
    edges: tuple[tuple[int, int], ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(self.edges) != len(self.arrows):
            raise ValueError("one arrow required per edge")

    def arrow(self, u: int, v: int) -> Arrow:
        """Arrow on edge {u, v}, normalized to the (min, max) key."""
        key = (u, v) if u < v else (v, u)
        i = self.edges.index(key)
        return self.arrows[i]

    def out_degree(self, v: int) -> int:
        d = 0
        for (a, b), arrow in zip(self.edges, self.arrows):
            if arrow is Arrow.TO_HIGHER and a == v:
                d += 1
            elif arrow is Arrow.TO_LOWER and b == v:
                d += 1
        return d

    def in_degree(self, v: int) -> int:
        d = 0
        for (a, b), arrow in zip(self.edges, self.arrows):
            if arrow is Arrow.TO_HIGHER and b == v:
                d += 1
            elif arrow is Arrow.TO_LOWER and a == v:
                d += 1
        return d


@dataclass(frozen=True)
class PeriodReport:
    """Outcome of running a trajectory to its cycle.

    preperiod is the least N with C_t = C_{t+period} for all t >= N; period is
    1 or 2; period_configs lists C_N (and C_{N+1} when period is 2);
    steps_taken counts the firings performed before the cycle was confirmed.
    """

    preperiod: int
    period: int
    period_configs: tuple[Configuration, ...]
    steps_taken: int


class CapExceededError(RuntimeError):
    """No cycle confirmed within the step cap; carries the trace tail for diagnosis."""

    def __init__(self, steps_taken: int, tail: tuple[Configuration, ...]):
        super().__init__(
            f"no period found within {steps_taken} steps "
            f"(theory guarantees one exists; raise the cap or suspect the input)"
        )
        self.steps_taken = steps_taken
        self.tail = tail


_TAIL_KEEP = 16


def _as_config(g: Graph, c: Sequence[int]) -> Configuration:
    t = tuple(c)
    if len(t) != g.n:
        raise ValueError(f"configuration has {len(t)} stacks but graph has {g.n} vertices")
    return t


def fire(g: Graph, c: Sequence[int]) -> Configuration:
    """One simultaneous firing: each vertex gains a chip per strictly richer
    neighbour and loses one per strictly poorer neighbour."""
    c = _as_config(g, c)
    out = []
    for v, nbrs in enumerate(g.adj):
        s = c[v]
        d = 0
        for u in nbrs:
            t = c[u]
            if t > s:
                d += 1
            elif t < s:
                d -= 1
        out.append(s + d)
    return tuple(out)


def shift(c: Sequence[int], k: int) -> Configuration:
    """Add the constant k to every stack. Firing commutes with shifting."""
    return tuple(x + k for x in c)


def is_zero_configuration(c: Sequence[int]) -> bool:
    return not any(c)


def trace(g: Graph, c0: Sequence[int], t_max: int) -> list[Configuration]:
    """Configurations C_0..C_{t_max} under repeated firing."""
    if t_max < 0:
        raise ValueError(f"t_max must be >= 0, got {t_max}")
    c = _as_config(g, c0)
    out = [c]
    for _ in range(t_max):
        c = fire(g, c)
        out.append(c)
    return out


def induced_orientation(g: Graph, c: Sequence[int]) -> Orientation:
    """Point every edge from its richer endpoint to its poorer one; flat on ties."""
    c = _as_config(g, c)
    arrows = []
    for u, v in g.edges:
        if c[u] > c[v]:
            arrows.append(Arrow.TO_HIGHER)
        elif c[u] < c[v]:
            arrows.append(Arrow.TO_LOWER)
        else:
            arrows.append(Arrow.FLAT)
    return Orientation(g.n, g.edges, tuple(arrows))


def zero_preposition_from_orientation(g: Graph, r: Orientation) -> Configuration | None:
    """Reconstruct the unique configuration that induces r and fires to all-zero.

    Each vertex must sit at (out-degree) - (in-degree) for the next firing to
    zero it out; returns that candidate iff it actually induces r, else None.
    """
    if r.n != g.n or r.edges != g.edges:
        raise ValueError("orientation does not match the graph's edge set")
    stacks = [0] * g.n
    for (u, v), arrow in zip(r.edges, r.arrows):
        if arrow is Arrow.TO_HIGHER:
            stacks[u] += 1
            stacks[v] -= 1
        elif arrow is Arrow.TO_LOWER:
            stacks[v] += 1
            stacks[u] -= 1
    candidate = tuple(stacks)
    if induced_orientation(g, candidate) != r:
        return None
    return candidate


def run(g: Graph, c0: Sequence[int], max_steps: int = DEFAULT_MAX_STEPS) -> PeriodReport:
    """Fire until the trajectory provably cycles; report least preperiod and period.

    The cycle is confirmed the first time a configuration repeats at distance
    1 or 2, which by the period-{1,2} theorem is the true minimum period.
    Raises CapExceededError if max_steps firings pass without a repeat.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    prev1 = _as_config(g, c0)
    prev2: Configuration | None = None
    tail = [prev1]
    for k in range(1, max_steps + 1):
        c = fire(g, prev1)
        if c == prev1:
            return PeriodReport(preperiod=k - 1, period=1, period_configs=(prev1,), steps_taken=k)
        if c == prev2:
            return PeriodReport(
                preperiod=k - 2, period=2, period_configs=(prev2, prev1), steps_taken=k
            )
        prev2, prev1 = prev1, c
        tail.append(c)
        if len(tail) > _TAIL_KEEP:
            del tail[0]
    raise CapExceededError(max_steps, tuple(tail))
