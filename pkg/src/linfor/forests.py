"""Exact linear-forest and matching computations.

A linear forest is a subgraph whose components are paths; its size is its
edge count.  ``max_linear_forest`` is the L_k-freeness oracle: a graph is
L_k-free iff its maximum linear forest has at most k-1 edges.

The forest search builds paths edge by edge and memoizes on twin-collapsed
states: vertices with identical neighborhoods (adjacent or not) are
interchangeable, so a state is the per-class count of consumed vertices plus
the class of the open path end.  On the symmetric host graphs this collapses
n ~ 40 instances to a few thousand states; on arbitrary graphs it degrades to
the usual exponential search, guarded by a node budget.

Determinism: twin classes are indexed by their smallest vertex; from an open
path the search tries extensions by ascending class index and then closing;
with no open path it tries starting edges by ascending class-index pairs and
then stopping.  The witness replays the first action achieving the optimal
value, always consuming the lowest-index unused vertex of a class.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphcore import Graph, disjoint_union, iter_bits

DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """Search exceeded its node budget; distinct from any computed answer."""


@dataclass(frozen=True)
class ForestResult:
    """Maximum linear-forest size with a realizing edge list."""

    size: int
    witness: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MatchingResult:
    """Matching number with a maximum matching."""

    size: int
    witness: tuple[tuple[int, int], ...]


def is_linear_forest(n: int, edges: list[tuple[int, int]]) -> bool:
    """True iff the edge list forms a disjoint union of paths on 0..n-1."""
    deg = [0] * n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seen = set()
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            return False
        key = (min(u, v), max(u, v))
        if key in seen:
            return False
        seen.add(key)
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 2 or deg[v] > 2:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


# -- twin classes ----------------------------------------------------------


def _twin_classes_rows(n: int, rows: tuple[int, ...]) -> list[tuple[int, ...]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_false: dict[int, int] = {}
    by_true: dict[int, int] = {}
    for v in range(n):
        kf = rows[v]
        kt = rows[v] | (1 << v)
        if kf in by_false:
            parent[find(v)] = find(by_false[kf])
        else:
            by_false[kf] = v
        if kt in by_true:
            parent[find(v)] = find(by_true[kt])
        else:
            by_true[kt] = v
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(vs)) for vs in groups.values()), key=lambda c: c[0])


def twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Partition vertices into interchangeability classes.

    Two vertices are merged when their adjacency rows agree exactly (false
    twins) or agree after including themselves (adjacent true twins).  Either
    way the transposition is an automorphism, so class members are fully
    interchangeable in any subgraph search.
    """
    return _twin_classes_rows(g.n, g.adj)


def max_linear_forest(g: Graph, budget: int = DEFAULT_BUDGET) -> ForestResult:
    """Maximum number of edges over all linear-forest subgraphs, with witness.

    Raises BudgetExceeded when the memoized state count passes ``budget``.
    """
    classes = twin_classes(g)
    m = len(classes)
    sizes = [len(c) for c in classes]
    reps = [c[0] for c in classes]
    # class-level adjacency; within a class: complete for true twins, empty
    # for false twins
    adj_between = [[False] * m for _ in range(m)]
    internal = [False] * m
    for ci in range(m):
        for cj in range(ci + 1, m):
            adj_between[ci][cj] = adj_between[cj][ci] = bool(
                g.adj[reps[ci]] >> reps[cj] & 1
            )
        if sizes[ci] >= 2:
            internal[ci] = bool(g.adj[classes[ci][0]] >> classes[ci][1] & 1)
    nbr_classes = [
        [e for e in range(m) if (adj_between[c][e] if e != c else internal[c])]
        for c in range(m)
    ]

    memo: dict[tuple[tuple[int, ...], int], int] = {}

    def best(counts: tuple[int, ...], tail: int) -> int:
        key = (counts, tail)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if len(memo) >= budget:
            raise BudgetExceeded(f"linear-forest search exceeded {budget} states")
        val = 0
        if tail >= 0:
            for e in nbr_classes[tail]:
                if counts[e] < sizes[e]:
                    nxt = list(counts)
                    nxt[e] += 1
                    val = max(val, 1 + best(tuple(nxt), e))
            val = max(val, best(counts, -1))
        else:
            for c in range(m):
                if counts[c] >= sizes[c]:
                    continue
                for e in nbr_classes[c]:
                    free = sizes[e] - counts[e] - (1 if e == c else 0)
                    if free < 1:
                        continue
                    nxt = list(counts)
                    nxt[c] += 1
                    nxt[e] += 1
                    val = max(val, 1 + best(tuple(nxt), e))
        memo[key] = val
        return val

    size = best((0,) * m, -1)

    # replay the first optimal action sequence, mapping classes to their
    # lowest unused vertices
    used = [0] * m  # per class: count consumed; members taken in index order

    def take(c: int) -> int:
        v = classes[c][used[c]]
        used[c] += 1
        return v

    edges: list[tuple[int, int]] = []
    counts = (0,) * m
    tail = -1
    tail_vertex = -1
    remaining = size
    while remaining > 0:
        if tail >= 0:
            moved = False
            for e in nbr_classes[tail]:
                if counts[e] < sizes[e]:
                    nxt = list(counts)
                    nxt[e] += 1
                    if 1 + best(tuple(nxt), e) == remaining:
                        w = take(e)
                        edges.append((tail_vertex, w))
                        counts, tail, tail_vertex = tuple(nxt), e, w
                        remaining -= 1
                        moved = True
                        break
            if not moved:
                tail, tail_vertex = -1, -1
        else:
            for c in range(m):
                if counts[c] >= sizes[c]:
                    continue
                done = False
                for e in nbr_classes[c]:
                    free = sizes[e] - counts[e] - (1 if e == c else 0)
                    if free < 1:
                        continue
                    nxt = list(counts)
                    nxt[c] += 1
                    nxt[e] += 1
                    if 1 + best(tuple(nxt), e) == remaining:
                        u = take(c)
                        w = take(e)
                        edges.append((u, w))
                        counts, tail, tail_vertex = tuple(nxt), e, w
                        remaining -= 1
                        done = True
                        break
                if done:
                    break
    return ForestResult(size, tuple(edges))


def is_lk_free(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff g contains no linear forest with exactly k edges.

    Any linear forest of size >= k contains one of exactly k edges (delete
    edges), so this is equivalent to max_linear_forest(g).size <= k - 1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return max_linear_forest(g, budget=budget).size <= k - 1


# -- maximum matching ------------------------------------------------------


def matching_number(g: Graph) -> MatchingResult:
    """Exact maximum matching via augmenting paths with blossom contraction.

    Roots are scanned in ascending vertex order and neighbors in ascending
    index order, so the returned matching is deterministic.
    """
    n = g.n
    match = [-1] * n
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n

    def lca(a: int, b: int) -> int:
        mark = [False] * n
        while True:
            a = base[a]
            mark[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if mark[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            used[i] = False
            p[i] = -1
            base[i] = i
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in iter_bits(g.adj[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, curbase, to)
                    mark_path(to, curbase, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        while to != -1:
                            v2 = p[to]
                            nxt = match[v2]
                            match[to] = v2
                            match[v2] = to
                            to = nxt
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    size = 0
    for v in range(n):
        if match[v] == -1 and find_path(v):
            size += 1
    witness = tuple((v, match[v]) for v in range(n) if v < match[v])
    return MatchingResult(size, witness)


# -- bounded-degree extremal edge counts -----------------------------------


def _connected_components_bound(k: int, delta: int) -> int:
    # Max degree <= 2 means paths and cycles: at most k+1 vertices once the
    # forest size is capped at k.  Otherwise take a maximum linear forest F
    # with f edges and t paths (f+t vertices, f-t internal).  Uncovered
    # vertices form an independent set attached only to internal vertices
    # (else F extends), each of which has at most delta-2 spare slots, so
    # v <= f + t + (f-t)(delta-2): 2k for delta=3, 3k-1 for delta=4.
    if delta <= 2:
        return k + 1
    if delta == 3:
        return 2 * k
    return max(3 * k - 1, 2)


def _class_choices(classes: list[list[int]], total_max: int):
    """Yield neighbor masks choosing 0..|class| lowest members per twin class,
    at least one vertex overall and at most total_max."""

    def rec(idx: int, left: int, mask: int):
        if idx == len(classes):
            if mask:
                yield mask
            return
        cls = classes[idx]
        for take in range(0, min(len(cls), left) + 1):
            add = 0
            for v in cls[:take]:
                add |= 1 << v
            yield from rec(idx + 1, left - take, mask | add)

    yield from rec(0, total_max, 0)


def _enumerate_components(k: int, delta: int, budget: int):
    """Connected graphs with max linear forest <= k and max degree <= delta.

    Grown one vertex at a time (each new vertex attached to a nonempty subset
    of the old ones) with isomorphism dedup, so exactly one representative of
    every class is produced.  All three filters are subgraph-monotone, which
    makes the level-wise pruning sound.  Attachment subsets are enumerated up
    to parent twin-equivalence only: permuting interchangeable parent
    vertices yields isomorphic children.
    """
    from .canon import refined_canonical_key

    cap = _connected_components_bound(k, delta)
    if delta == 1:
        max_edges = 1  # a connected graph with max degree 1 is a single edge
    elif delta == 2:
        max_edges = (3 * k) // 2
    else:
        max_edges = k * (delta - 1)
    level: dict[tuple[int, ...], tuple[int, ...]] = {(): (0,)}
    produced = 0
    for size in range(2, cap + 1):
        n0 = size - 1
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for _, prows in sorted(level.items()):
            degs = [prows[v].bit_count() for v in range(n0)]
            p_edges = sum(degs) // 2
            open_classes = [
                [v for v in cls if degs[v] < delta]
                for cls in _twin_classes_rows(n0, prows)
            ]
            open_classes = [cls for cls in open_classes if cls]
            nb_cap = min(delta, max_edges - p_edges)
            if nb_cap < 1:
                continue
            for nb_mask in _class_choices(open_classes, nb_cap):
                rows = tuple(
                    row | ((nb_mask >> v & 1) << n0) for v, row in enumerate(prows)
                ) + (nb_mask,)
                key = refined_canonical_key(size, rows)
                if key in nxt:
                    continue
                produced += 1
                if produced > budget:
                    raise BudgetExceeded(
                        f"component enumeration exceeded {budget} graphs"
                    )
                child = Graph(size, rows)
                if max_linear_forest(child, budget=budget).size > k:
                    continue
                nxt[key] = rows
                yield child
        if not nxt:
            break
        level = nxt


def g_extremal(
    k: int, delta: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, Graph]:
    """Maximum edges of a graph with max linear forest <= k and max degree <= delta.

    Components are enumerated exhaustively (lf and degree are additive /
    component-wise), profiled by (lf, edges), and combined by an unbounded
    knapsack over the forest-size budget.  Desk-scale only: k <= 6, delta <= 4.
    """
    if not 0 <= k <= 6:
        raise ValueError("g_extremal supports 0 <= k <= 6")
    if not 0 <= delta <= 4:
        raise ValueError("g_extremal supports 0 <= delta <= 4")
    if k == 0 or delta == 0:
        return 0, Graph.empty(0)

    # best connected component per exact forest size
    best_comp: dict[int, tuple[int, Graph]] = {}
    for comp in _enumerate_components(k, delta, budget):
        if comp.edge_count == 0:
            continue
        f = max_linear_forest(comp, budget=budget).size
        cur = best_comp.get(f)
        if cur is None or comp.edge_count > cur[0]:
            best_comp[f] = (comp.edge_count, comp)

    dp: list[tuple[int, list[Graph]]] = [(0, [])]
    for j in range(1, k + 1):
        best = dp[j - 1]
        for f, (edges, comp) in best_comp.items():
            if f <= j and dp[j - f][0] + edges > best[0]:
                best = (dp[j - f][0] + edges, dp[j - f][1] + [comp])
        dp.append(best)

    total, comps = dp[k]
    witness = Graph.empty(0)
    for comp in comps:
        witness = disjoint_union(witness, comp)
    return total, witness
