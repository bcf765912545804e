"""Vectorized per-graph profiles over all labeled graphs on n vertices.

For every edge mask m (bit p = edge p in column order) the kernel computes
the maximum linear-forest size, the matching number, all vertex degrees, and
the full clique vector, as numpy arrays indexed by m.  This backs the
brute-force theorem oracles: every reduction over "all graphs with property
P" becomes a boolean mask over these arrays.

The linear-forest size comes from an independent formulation: lf = n minus
the minimum number of vertex-disjoint paths covering V (trivial paths
allowed).  Hamiltonian-path endpoint sets per vertex subset are computed by
the standard subset DP, then the cover minimum by a submask DP.  Matching
numbers use the usual subset DP.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..graphcore import pair_index

PROFILE_CEILING = 8
# full profile arrays are cached only up to this n (n = 8 would need ~5 GB)
CACHE_CEILING = 7

_INF = np.uint8(200)


@dataclass
class GraphProfiles:
    """Per-edge-mask graph invariants; index = edge mask."""

    n: int
    lf: np.ndarray  # uint8: maximum linear-forest size
    nu: np.ndarray  # uint8: matching number
    mindeg: np.ndarray  # uint8
    degs: np.ndarray  # (graphs, n) uint8
    cliques: np.ndarray  # (graphs, n+1) uint8, column r = N_r, column 0 unused

    @property
    def count(self) -> int:
        return len(self.lf)


_cache: dict[int, GraphProfiles] = {}
_cache_lock = threading.Lock()


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(n) for u in range(v)]


def _chunk_profiles(n: int, masks: np.ndarray):
    """Profile one chunk of edge masks; returns (lf, nu, mindeg, degs, cliques)."""
    m = len(masks)
    pairs = _pairs(n)
    full = (1 << n) - 1

    rows = np.zeros((n, m), dtype=np.uint8)
    for p, (u, v) in enumerate(pairs):
        bit = (masks >> p & 1).astype(np.uint8)
        rows[u] |= bit << v
        rows[v] |= bit << u

    degs = np.bitwise_count(rows).T.astype(np.uint8).copy()
    mindeg = degs.min(axis=1) if n else np.zeros(m, np.uint8)

    cliques = np.zeros((m, n + 1), dtype=np.uint8)
    if n >= 1:
        cliques[:, 1] = n
    subsets = [1 << v for v in range(n)]
    for r in range(2, n + 1):
        nxt = []
        for smask in subsets:
            top = smask.bit_length()  # extend by vertices above the current top
            for v in range(top, n):
                nxt.append(smask | 1 << v)
        subsets = nxt
        for smask in subsets:
            vs = [v for v in range(n) if smask >> v & 1]
            em = 0
            for i, v in enumerate(vs):
                for u in vs[:i]:
                    em |= 1 << pair_index(u, v)
            cliques[:, r] += (masks & em) == em

    # Hamiltonian-path endpoints per subset
    ep = np.zeros((1 << n, m), dtype=np.uint8)
    for v in range(n):
        ep[1 << v] = np.uint8(1 << v)
    for s in range(1, 1 << n):
        if s & (s - 1) == 0:
            continue
        acc = ep[s]
        t = s
        while t:
            low = t & -t
            v = low.bit_length() - 1
            t ^= low
            reach = (ep[s ^ low] & rows[v]) != 0
            acc |= reach.astype(np.uint8) << np.uint8(v)
    hp = ep != 0
    del ep

    # minimum path cover by submask DP; lf = n - cover(full)
    mpc = np.zeros((1 << n, m), dtype=np.uint8)
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        best = np.full(m, _INF, dtype=np.uint8)
        sub = rest
        while True:
            t = sub | low
            cand = mpc[s ^ t] + np.uint8(1)
            np.minimum(best, cand, out=best, where=hp[t])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        mpc[s] = best
    lf = (np.uint8(n) - mpc[full]) if n else np.zeros(m, np.uint8)
    del mpc, hp

    # matching number by subset DP
    nu = np.zeros((1 << n, m), dtype=np.uint8)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        best = nu[rest].copy()
        t = rest
        while t:
            lo2 = t & -t
            u = lo2.bit_length() - 1
            t ^= lo2
            has = (masks >> pair_index(u, v) & 1) != 0
            cand = nu[s ^ low ^ lo2] + np.uint8(1)
            np.maximum(best, cand, out=best, where=has)
        nu[s] = best
    nu_full = nu[full].copy() if n else np.zeros(m, np.uint8)
    del nu

    return lf, nu_full, mindeg, degs, cliques


def iter_profile_chunks(n: int, threads: int = 1, chunk_bits: int = 16):
    """Yield (start_mask, chunk profile tuple) over all 2^C(n,2) masks in order."""
    if not 0 <= n <= PROFILE_CEILING:
        raise ValueError(f"profiles support 0 <= n <= {PROFILE_CEILING}")
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    size = min(total, 1 << chunk_bits)
    starts = list(range(0, total, size))

    def work(start: int):
        masks = np.arange(start, min(start + size, total), dtype=np.uint32)
        return _chunk_profiles(n, masks)

    if threads <= 1 or len(starts) == 1:
        for start in starts:
            yield start, work(start)
        return
    # submit in waves so unconsumed results cannot pile up in memory
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for i in range(0, len(starts), threads):
            wave = starts[i : i + threads]
            futures = [pool.submit(work, start) for start in wave]
            for start, fut in zip(wave, futures):
                yield start, fut.result()


def graph_profiles(n: int, threads: int = 1) -> GraphProfiles:
    """Full profile arrays for all labeled graphs on n vertices (cached)."""
    if not 0 <= n <= CACHE_CEILING:
        raise ValueError(
            f"full profile arrays support n <= {CACHE_CEILING}; "
            "use iter_profile_chunks for streaming"
        )
    with _cache_lock:
        hit = _cache.get(n)
    if hit is not None:
        return hit
    total = 1 << (n * (n - 1) // 2)
    lf = np.zeros(total, np.uint8)
    nu = np.zeros(total, np.uint8)
    mindeg = np.zeros(total, np.uint8)
    degs = np.zeros((total, n), np.uint8)
    cliques = np.zeros((total, n + 1), np.uint8)
    for start, (clf, cnu, cmind, cdegs, ccl) in iter_profile_chunks(n, threads):
        end = start + len(clf)
        lf[start:end] = clf
        nu[start:end] = cnu
        mindeg[start:end] = cmind
        degs[start:end] = cdegs
        cliques[start:end] = ccl
    prof = GraphProfiles(n, lf, nu, mindeg, degs, cliques)
    with _cache_lock:
        _cache[n] = prof
    return prof
