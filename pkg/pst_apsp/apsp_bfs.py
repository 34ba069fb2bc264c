"""AP-BFS: one breadth-first search per source, counting every neighbor
examination and stopping as soon as all n vertices are discovered."""
import logging
import time

import numpy as np

from .graph_model import Graph
from .matrices import (NO_PARENT, NOT_SEARCHED, UNREACHED, AccessStats,
                       ApspResult, new_distance_matrix, new_parent_matrix)

logger = logging.getLogger(__name__)


def bfs_single_source(g: Graph, source: int, distances: np.ndarray,
                      parents: np.ndarray, stats: AccessStats) -> None:
    """Fill column `source` of D and S.

    The FIFO queue is a ring of capacity n. The discovered count is checked
    after every discovery, so the search can stop in the middle of a
    neighbor loop."""
    n = g.n
    adjacency = g.adjacency
    dist = [UNREACHED] * n
    parent = [NOT_SEARCHED] * n
    dist[source] = 0
    parent[source] = NO_PARENT

    ring = [0] * n
    head = 0
    size = 1
    ring[0] = source
    found = 1
    accesses = 0
    expansions = 0

    while size and found < n:
        u = ring[head]
        head = (head + 1) % n
        size -= 1
        expansions += 1
        level = dist[u] + 1
        for w in adjacency[u]:
            accesses += 1
            if parent[w] == NOT_SEARCHED:
                dist[w] = level
                parent[w] = u
                ring[(head + size) % n] = w
                size += 1
                found += 1
                if found == n:
                    break

    distances[:, source] = dist
    parents[:, source] = parent
    stats.accesses += accesses
    stats.expansions += expansions


def bfs_apsp(g: Graph) -> ApspResult:
    started = time.perf_counter()
    distances = new_distance_matrix(g.n)
    parents = new_parent_matrix(g.n)
    stats = AccessStats(g.n)
    initialized = time.perf_counter()

    for source in range(g.n):
        bfs_single_source(g, source, distances, parents, stats)
    finished = time.perf_counter()

    result = ApspResult(distances, parents, stats,
                        time_init=initialized - started,
                        time_main=finished - initialized)
    logger.info('bfs n=%d: accesses=%d alpha=%.4f init=%.4fs main=%.4fs',
                g.n, stats.accesses, float(stats.alpha),
                result.time_init, result.time_main)
    return result
