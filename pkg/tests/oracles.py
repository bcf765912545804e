"""Independent brute-force oracles used to back the library's fast paths.

These deliberately share no code with the implementations they check:
cliques are counted by scanning vertex subsets, linear forests by a
Hamiltonian-path subset DP (and, for tiny graphs, by filtering literal edge
subsets), matchings by a subset DP.
"""

from __future__ import annotations

from itertools import combinations

from linfor import Graph


def count_cliques_subsets(g: Graph, r: int) -> int:
    """All-subsets r-clique counter."""
    if r < 1:
        raise ValueError
    if r > g.n:
        return 0
    count = 0
    for vs in combinations(range(g.n), r):
        if all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
            count += 1
    return count


def lf_subset_dp(g: Graph) -> int:
    """Max linear-forest size as n minus the minimum spanning path cover.

    endpoints[s] holds the possible Hamiltonian-path endpoints inside vertex
    subset s; cover[s] is the minimum number of disjoint paths (trivial ones
    allowed) covering s exactly.
    """
    n = g.n
    if n == 0:
        return 0
    size = 1 << n
    endpoints = [0] * size
    for v in range(n):
        endpoints[1 << v] = 1 << v
    for s in range(1, size):
        if s & (s - 1) == 0:
            continue
        acc = 0
        t = s
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            if endpoints[s ^ low] & g.adj[v]:
                acc |= low
        endpoints[s] = acc
    inf = n + 1
    cover = [inf] * size
    cover[0] = 0
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        sub = rest
        while True:
            piece = sub | low
            if endpoints[piece] and cover[s ^ piece] + 1 < cover[s]:
                cover[s] = cover[s ^ piece] + 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return n - cover[size - 1]


def lf_edge_subsets(g: Graph) -> int:
    """Max linear forest by filtering edge subsets, grown with pruning.

    Explores exactly the edge subsets that are linear forests (any subset
    failing the degree or acyclicity filter is abandoned with all its
    supersets that extend it in order).
    """
    edges = g.edges()
    m = len(edges)
    best = 0

    def rec(idx: int, deg: list[int], parent: list[int], size: int) -> None:
        nonlocal best
        best = max(best, size)
        for j in range(idx, m):
            u, v = edges[j]
            if deg[u] >= 2 or deg[v] >= 2:
                continue
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                continue
            deg[u] += 1
            deg[v] += 1
            parent[ru] = rv
            rec(j + 1, deg, parent, size + 1)
            parent[ru] = ru
            deg[u] -= 1
            deg[v] -= 1

    def _find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rec(0, [0] * g.n, list(range(g.n)), 0)
    return best


def embeds_in_host_naive(g: Graph, p) -> bool:
    """Host-embedding decision by scanning all (A, B) part choices.

    g fits the host iff for some A of size a and B of size k-2a disjoint from
    it, every edge avoiding A lies inside B or is one of at most the allowed
    number of pairwise-disjoint leftover (C) edges.
    """
    allow = p.extra_edge_count
    for a_set in combinations(range(g.n), p.a):
        amask = set(a_set)
        rest = [v for v in range(g.n) if v not in amask]
        for b_set in combinations(rest, p.b_size):
            bmask = set(b_set)
            leftover = []
            ok = True
            for u, v in g.edges():
                if u in amask or v in amask:
                    continue
                if u in bmask and v in bmask:
                    continue
                if u in bmask or v in bmask:
                    ok = False  # forbidden B-C edge
                    break
                leftover.append((u, v))
            if not ok or len(leftover) > allow:
                continue
            used: set[int] = set()
            disjoint = True
            for u, v in leftover:
                if u in used or v in used:
                    disjoint = False
                    break
                used.update((u, v))
            if disjoint:
                return True
    return False


def matching_subset_dp(g: Graph) -> int:
    """Matching number by subset DP."""
    n = g.n
    size = 1 << n
    best = [0] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        val = best[rest]
        t = rest & g.adj[v]
        while t:
            lo2 = t & -t
            u = lo2.bit_length() - 1
            t ^= lo2
            cand = best[s ^ low ^ lo2] + 1
            if cand > val:
                val = cand
        best[s] = val
    return best[size - 1]
