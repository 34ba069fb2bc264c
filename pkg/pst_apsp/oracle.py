"""Independent references: Floyd-Warshall hop distances and a validator for
parent matrices."""
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional

import numpy as np

from .errors import DimensionMismatch
from .graph_model import Graph
from .matrices import (NO_PARENT, NOT_SEARCHED, UNREACHED,
                       new_distance_matrix)

logger = logging.getLogger(__name__)


def floyd_warshall(g: Graph) -> np.ndarray:
    """Unit-weight Floyd-Warshall. Each relaxation round only touches rows
    and columns whose operands are finite, so UNREACHED never takes part in
    an addition."""
    n = g.n
    distances = new_distance_matrix(n)
    distances[g.adjacency_matrix] = 1
    for k in range(n):
        through = np.flatnonzero(distances[:, k] != UNREACHED)
        onward = np.flatnonzero(distances[k, :] != UNREACHED)
        if through.size == 0 or onward.size == 0:
            continue
        block = np.ix_(through, onward)
        candidate = (distances[through, k][:, None]
                     + distances[k, onward][None, :])
        np.minimum(distances[block], candidate, out=candidate)
        distances[block] = candidate
    return distances


@dataclass(frozen=True)
class Violation:
    vertex: int
    source: int
    reason: str

    def __str__(self):
        return f'S[{self.vertex}][{self.source}]: {self.reason}'


class Divergence(NamedTuple):
    source: int
    vertex: int
    expected: int
    actual: int


def verify_parents(g: Graph, distances: np.ndarray,
                   parents: np.ndarray) -> List[Violation]:
    n = g.n
    for matrix in (distances, parents):
        if matrix.shape != (n, n):
            raise DimensionMismatch((n, n), matrix.shape)

    dist = distances.astype(np.int64)
    par = parents.astype(np.int64)
    off_diagonal = ~np.eye(n, dtype=bool)
    reached = (distances != UNREACHED) & off_diagonal
    unreached = (distances == UNREACHED) & off_diagonal

    real = (par >= 0) & (par < n)
    safe = np.where(real, par, 0)
    columns = np.broadcast_to(np.arange(n), (n, n))
    rows = np.broadcast_to(np.arange(n)[:, None], (n, n))
    adjacent = real & g.adjacency_matrix[rows, safe]
    one_closer = real & (dist[safe, columns] == dist - 1)

    checks = [
        (np.diag(np.diag(par != NO_PARENT)), 'diagonal entry is not NO_PARENT'),
        (reached & ~real, 'reachable vertex has no real parent'),
        (reached & real & ~adjacent, 'parent is not adjacent'),
        (reached & adjacent & ~one_closer,
         'parent is not one hop closer to the source'),
        (unreached & (par != NOT_SEARCHED),
         'unreachable vertex is not NOT_SEARCHED'),
    ]
    violations = []
    for mask, reason in checks:
        for i, j in np.argwhere(mask).tolist():
            violations.append(Violation(i, j, reason))
    violations.sort(key=lambda v: (v.source, v.vertex))
    if violations:
        logger.warning('%d parent-matrix violations, first: %s',
                       len(violations), violations[0])
    return violations


def first_divergence(expected: np.ndarray,
                     actual: np.ndarray) -> Optional[Divergence]:
    """First (source, vertex) pair, in source-major order, where the two
    distance matrices disagree."""
    if expected.shape != actual.shape:
        raise DimensionMismatch(expected.shape, actual.shape)
    differing = np.argwhere((expected != actual).T)
    if differing.size == 0:
        return None
    source, vertex = differing[0].tolist()
    return Divergence(source, vertex, int(expected[vertex, source]),
                      int(actual[vertex, source]))
