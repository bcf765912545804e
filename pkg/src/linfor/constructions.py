"""Extremal host graphs H(n, k, a) and their closed-form clique counts.

The host on parts A, B, C (|A| = a, |B| = k - 2a, |C| = n - k + a) carries all
edges inside A ∪ B plus the complete bipartite A-C edges; C is independent.
The "plus" variant adds one edge inside C, "plusplus" two independent ones.
Counts stay exact Python ints, so they work far beyond the 64-vertex dense cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphcore import MAX_VERTICES, Graph

VARIANTS = ("plain", "plus", "plusplus")

# extra C-edges required by each variant, hence minimum |C|
_EXTRA_EDGES = {"plain": 0, "plus": 1, "plusplus": 2}


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters (n, k, a, variant) of a host graph."""

    n: int
    k: int
    a: int
    variant: str = "plain"

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.a < 0:
            raise ValueError("part A has negative size")
        if self.k - 2 * self.a < 0:
            raise ValueError(f"part B has negative size k-2a = {self.k - 2 * self.a}")
        if self.n - self.k + self.a < 0:
            raise ValueError(f"part C has negative size n-k+a = {self.n - self.k + self.a}")
        need_c = 2 * _EXTRA_EDGES[self.variant]
        if self.c_size < need_c:
            raise ValueError(
                f"variant {self.variant!r} needs |C| >= {need_c}, got {self.c_size}"
            )

    @property
    def b_size(self) -> int:
        return self.k - 2 * self.a

    @property
    def c_size(self) -> int:
        return self.n - self.k + self.a

    @property
    def extra_edge_count(self) -> int:
        return _EXTRA_EDGES[self.variant]


def binomial(n: int, r: int) -> int:
    """Exact C(n, r); zero outside 0 <= r <= n."""
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


def real_binomial(x: float, r: int) -> float:
    """Falling-factorial binomial x(x-1)...(x-r+1)/r! for real x."""
    if r < 0:
        return 0.0
    out = 1.0
    for i in range(r):
        out *= (x - i)
    return out / math.factorial(r)


def build_host(p: ConstructionParams) -> Graph:
    """Materialize the host graph with A = 0..a-1, B = a..k-a-1, C = rest.

    The plus variant adds the C-edge (k-a, k-a+1); plusplus additionally adds
    (k-a+2, k-a+3).  Requires n within the dense vertex cap.
    """
    if p.n > MAX_VERTICES:
        raise ValueError(f"n={p.n} exceeds dense cap {MAX_VERTICES}; use host_clique_count")
    edges = []
    core = p.k - p.a  # |A ∪ B|
    for v in range(1, core):
        for u in range(v):
            edges.append((u, v))
    for u in range(p.a):
        for c in range(core, p.n):
            edges.append((u, c))
    for i in range(p.extra_edge_count):
        edges.append((core + 2 * i, core + 2 * i + 1))
    return Graph.from_edges(p.n, edges)


def h_r(n: int, k: int, a: int, r: int) -> int:
    """Closed-form r-clique count of the plain host: C(k-a, r) + (n-k+a)·C(a, r-1)."""
    ConstructionParams(n, k, a)  # validates part sizes
    if r < 1:
        raise ValueError("r must be at least 1")
    return binomial(k - a, r) + (n - k + a) * binomial(a, r - 1)


def host_clique_count(p: ConstructionParams, r: int) -> int:
    """Exact r-clique count of any host variant, purely arithmetic.

    Each extra C-edge has common neighborhood exactly A, so it contributes
    C(a, r-2) cliques; the two plusplus edges are independent, hence additive.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    base = h_r(p.n, p.k, p.a, r)
    return base + p.extra_edge_count * binomial(p.a, r - 2)


def clique_bound_from_edges(m: int, r: int) -> float:
    """Upper bound on the number of r-cliques of a graph with m edges.

    Inverts C(x, 2) = m over the reals and evaluates C(x, r) with the
    generalized binomial; zero when x < r.
    """
    if m < 0:
        raise ValueError("negative edge count")
    if r < 3:
        raise ValueError("bound is stated for r >= 3")
    x = (1.0 + math.sqrt(1.0 + 8.0 * m)) / 2.0
    if x < r:
        return 0.0
    return real_binomial(x, r)
