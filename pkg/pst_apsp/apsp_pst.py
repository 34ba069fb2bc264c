"""PST: all-pairs shortest paths by pruning with shortest path trees.

All n trees grow one level at a time. At level 1 a source v attaches its
neighbors w, each pointing (``cor``) at the root of T(w). At level d > 1 the
search from v through a depth-(d-1) t-vertex w' only looks at the children of
``w'.cor`` in the neighbor's tree instead of at every graph neighbor. Those
children sit at depth d-1 of the neighbor's tree and were all created during
level d-1, which is why the global level barrier is enough.

Memory: besides D and S, every tree is kept for the whole run. The pool holds
at most n t-vertices per source (24 bytes each) and every source owns a
d-queue ring of capacity n.
"""
import logging
import time
from dataclasses import dataclass
from typing import Iterator, List

import numpy as np

from .dqueue import DQueue
from .graph_model import Graph
from .matrices import (NOT_SEARCHED, AccessStats, ApspResult,
                       new_distance_matrix, new_parent_matrix)

logger = logging.getLogger(__name__)

NO_HANDLE = -1


class TVertexPool:
    """Append-only storage for every shortest path tree.

    Source v owns the slots [v*n, v*n + n); a handle is the global slot
    index. A t-vertex's children are allocated back to back, so they are
    stored as (first child slot, child count) relative to the owner's
    segment. ``parent`` is a slot in the same segment, ``cor`` a global
    handle into the first-hop neighbor's tree."""

    def __init__(self, n: int):
        self.n = n
        capacity = n * n
        self.vertex = np.empty(capacity, dtype=np.int32)
        self.parent = np.empty(capacity, dtype=np.int32)
        self.cor = np.empty(capacity, dtype=np.int64)
        self.first_child = np.empty(capacity, dtype=np.int32)
        self.child_count = np.zeros(capacity, dtype=np.int32)
        self.sizes = [0] * n

    @property
    def size(self) -> int:
        return sum(self.sizes)

    @property
    def nbytes(self) -> int:
        per_node = (self.vertex.itemsize + self.parent.itemsize
                    + self.cor.itemsize + self.first_child.itemsize
                    + self.child_count.itemsize)
        return self.size * per_node

    def root(self, source: int) -> int:
        return source * self.n

    def new_root(self, source: int) -> int:
        if self.sizes[source]:
            raise ValueError(f'tree of source {source} already has a root')
        handle = source * self.n
        self.vertex[handle] = source
        self.parent[handle] = NO_HANDLE
        self.cor[handle] = NO_HANDLE
        self.sizes[source] = 1
        return handle

    def add_child(self, parent: int, vertex: int, cor: int) -> int:
        source, parent_slot = divmod(parent, self.n)
        slot = self.sizes[source]
        if slot == self.n:
            raise IndexError(f'tree of source {source} is full')
        handle = parent - parent_slot + slot
        self.vertex[handle] = vertex
        self.parent[handle] = parent_slot
        self.cor[handle] = cor
        if not self.child_count[parent]:
            self.first_child[parent] = slot
        self.child_count[parent] += 1
        self.sizes[source] = slot + 1
        return handle

    def children(self, handle: int) -> range:
        count = int(self.child_count[handle])
        if not count:
            return range(0)
        start = handle - handle % self.n + int(self.first_child[handle])
        return range(start, start + count)

    def parent_of(self, handle: int) -> int:
        slot = int(self.parent[handle])
        if slot == NO_HANDLE:
            return NO_HANDLE
        return handle - handle % self.n + slot

    def depth(self, handle: int) -> int:
        depth = 0
        handle = self.parent_of(handle)
        while handle != NO_HANDLE:
            depth += 1
            handle = self.parent_of(handle)
        return depth

    def handles(self, source: int) -> Iterator[int]:
        base = source * self.n
        return iter(range(base, base + self.sizes[source]))


@dataclass
class SourceState:
    source: int
    root: int
    que: DQueue
    c: int = 1


@dataclass
class PstContext:
    graph: Graph
    pool: TVertexPool
    distances: np.ndarray
    parents: np.ndarray
    stats: AccessStats


def extend(ctx: PstContext, state: SourceState, d: int) -> bool:
    """Grow T(state.source) by level d.

    Returns False when the pass found nothing to expand, which marks the
    source complete even if it never reached all n vertices."""
    v = state.source
    pool = ctx.pool
    que = state.que
    dist_column = ctx.distances[:, v]
    parent_column = ctx.parents[:, v]

    if d == 1:
        neighbors = ctx.graph.adjacency[v]
        for w in neighbors:
            dist_column[w] = 1
            parent_column[w] = v
            child = pool.add_child(state.root, w, pool.root(w))
            que.enqueue(child - state.root, 1)
            state.c += 1
        ctx.stats.accesses += len(neighbors)
        ctx.stats.expansions += 1 if neighbors else 0
        return bool(neighbors)

    n = pool.n
    base = state.root
    vertex = pool.vertex
    cor = pool.cor
    first_child = pool.first_child
    child_count = pool.child_count
    accesses = 0
    expansions = 0

    slot = que.dequeue(d - 1)
    if slot is None:
        return False
    try:
        while slot is not None:
            expansions += 1
            w_handle = base + slot
            target = int(cor[w_handle])
            count = int(child_count[target])
            if count:
                w = int(vertex[w_handle])
                start = target - target % n + int(first_child[target])
                for offset, x in enumerate(vertex[start:start + count].tolist()):
                    accesses += 1
                    if parent_column[x] == NOT_SEARCHED:
                        dist_column[x] = d
                        parent_column[x] = w
                        child = pool.add_child(w_handle, x, start + offset)
                        que.enqueue(child - base, d)
                        state.c += 1
                        if state.c == n:
                            return True
            slot = que.dequeue(d - 1)
    finally:
        ctx.stats.accesses += accesses
        ctx.stats.expansions += expansions
    return True


def initialize(g: Graph):
    n = g.n
    pool = TVertexPool(n)
    ctx = PstContext(g, pool, new_distance_matrix(n), new_parent_matrix(n),
                     AccessStats(n))
    states = [SourceState(v, pool.new_root(v), DQueue(n)) for v in range(n)]
    return ctx, states


def grow_trees(ctx: PstContext, states: List[SourceState]) -> int:
    """Extend every unfinished tree one level at a time; returns the number
    of levels run."""
    n = ctx.graph.n
    active = [state for state in states if state.c < n]
    d = 0
    while active:
        d += 1
        still_growing = []
        for state in active:
            if extend(ctx, state, d) and state.c < n:
                still_growing.append(state)
        logger.debug('level %d: %d sources expanded, %d still growing, '
                     '%d t-vertices', d, len(active), len(still_growing),
                     ctx.pool.size)
        active = still_growing
    return d


def pst_apsp(g: Graph) -> ApspResult:
    started = time.perf_counter()
    ctx, states = initialize(g)
    initialized = time.perf_counter()
    d = grow_trees(ctx, states)
    finished = time.perf_counter()

    n = g.n

    result = ApspResult(ctx.distances, ctx.parents, ctx.stats,
                        time_init=initialized - started,
                        time_main=finished - initialized,
                        tree_nodes=ctx.pool.size,
                        pool_bytes=ctx.pool.nbytes)
    logger.info('pst n=%d: accesses=%d alpha=%.4f levels=%d t-vertices=%d '
                'init=%.4fs main=%.4fs', n, ctx.stats.accesses,
                float(ctx.stats.alpha), d, result.tree_nodes,
                result.time_init, result.time_main)
    return result
