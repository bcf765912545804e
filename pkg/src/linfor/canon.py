"""Minimum-adjacency-matrix canonical labeling for small graphs.

The canonical representative minimizes the upper-triangle bit sequence read
in column order (the graph6 body bit order), so isomorphic graphs share one
canonical edge mask and the representative's graph6 string is the smallest
in its class.  Backtracking places one vertex per position; interchangeable
candidates (twins) are tried once and worse-than-best prefixes are cut.
Worst case is exponential, which is fine at the desk scales used here.
"""

from __future__ import annotations

from .graphcore import Graph


def canonical_blocks(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical column blocks: blocks[j] = adjacency bits of canonical vertex
    j+1 toward canonical vertices 0..j, earliest position most significant.

    Minimal over all labelings, compared level by level (fixed widths make
    that the same as comparing the packed bit string).
    """
    if n <= 1:
        return ()
    degs = [rows[v].bit_count() for v in range(n)]
    best: list[int] | None = None

    def rec(placed: list[int], placed_mask: int, blocks: list[int]) -> None:
        nonlocal best
        level = len(placed)
        if level == n:
            if best is None or blocks < best:
                best = blocks.copy()
            return
        cands: list[tuple[int, int, int]] = []
        tried: list[int] = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            row = rows[v]
            # twins of an already-collected candidate explore identical
            # subtrees: keep one representative
            dup = False
            for u in tried:
                ru = rows[u]
                if row == ru or row | 1 << v == ru | 1 << u:
                    dup = True
                    break
            if dup:
                continue
            tried.append(v)
            block = 0
            for u in placed:
                block = block << 1 | (row >> u & 1)
            cands.append((block, degs[v], v))
        cands.sort()
        lo = cands[0][0]
        for block, _, v in cands:
            if block != lo:
                break
            if best is not None:
                if blocks[:level] == best[:level] and block > best[level]:
                    continue
            blocks.append(block)
            placed.append(v)
            rec(placed, placed_mask | 1 << v, blocks)
            placed.pop()
            blocks.pop()

    rec([], 0, [])
    assert best is not None
    return tuple(best[1:])  # level 0 contributes an empty block


def refined_canonical_key(n: int, rows: tuple[int, ...]) -> tuple:
    """Fast exact canonical key: minimize the per-level (invariant, block)
    sequence instead of blocks alone.

    Ranking candidates by (degree, sorted neighbor degrees) first separates
    structurally distinct vertices at the top of the search, which cuts the
    backtracking by orders of magnitude on sparse symmetric graphs.  The
    winning block sequence still determines the graph exactly, so equal keys
    mean isomorphic graphs; the representative is just not the minimum-mask
    one.
    """
    if n <= 1:
        return (n,)
    degs = [rows[v].bit_count() for v in range(n)]
    raw = []
    for v in range(n):
        nbr = sorted(degs[u] for u in range(n) if rows[v] >> u & 1)
        raw.append((degs[v], tuple(nbr)))
    order = {val: i for i, val in enumerate(sorted(set(raw)))}
    inv = [order[x] for x in raw]
    best: list[tuple[int, int]] | None = None

    def rec(placed: list[int], placed_mask: int, seq: list[tuple[int, int]]) -> None:
        nonlocal best
        level = len(placed)
        if level == n:
            if best is None or seq < best:
                best = seq.copy()
            return
        cands: list[tuple[tuple[int, int], int]] = []
        tried: list[int] = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            row = rows[v]
            dup = False
            for u in tried:
                ru = rows[u]
                if row == ru or row | 1 << v == ru | 1 << u:
                    dup = True
                    break
            if dup:
                continue
            tried.append(v)
            block = 0
            for u in placed:
                block = block << 1 | (row >> u & 1)
            cands.append(((block, inv[v]), v))
        cands.sort()
        lo = cands[0][0]
        for entry, v in cands:
            if entry != lo:
                break
            if best is not None:
                if seq[:level] == best[:level] and entry > best[level]:
                    continue
            seq.append(entry)
            placed.append(v)
            rec(placed, placed_mask | 1 << v, seq)
            placed.pop()
            seq.pop()

    rec([], 0, [])
    assert best is not None
    return tuple(best)


def _graph_from_blocks(n: int, blocks: tuple[int, ...]) -> Graph:
    rows = [0] * n
    for j, block in enumerate(blocks, start=1):
        for i in range(j):
            if block >> (j - 1 - i) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def canonical_graph(g: Graph) -> Graph:
    """Return the canonically labeled copy of g."""
    return _graph_from_blocks(g.n, canonical_blocks(g.n, g.adj))


def canonical_edge_mask(g: Graph) -> int:
    return canonical_graph(g).edge_mask()


def is_canonical(g: Graph) -> bool:
    return g.edge_mask() == canonical_edge_mask(g)
