"""Distance/parent matrices, their sentinels and the access counters.

D[i, j] is the hop distance from vertex i to source j; S[i, j] is the parent
of i in the shortest path tree rooted at j. Column j therefore holds the whole
search from source j.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

DISTANCE_DTYPE = np.uint32
PARENT_DTYPE = np.int32

UNREACHED = int(np.iinfo(DISTANCE_DTYPE).max)
# Both parent sentinels lie outside [0, n).
NO_PARENT = -1
NOT_SEARCHED = -2


def new_distance_matrix(n: int) -> np.ndarray:
    distances = np.full((n, n), UNREACHED, dtype=DISTANCE_DTYPE)
    np.fill_diagonal(distances, 0)
    return distances


def new_parent_matrix(n: int) -> np.ndarray:
    parents = np.full((n, n), NOT_SEARCHED, dtype=PARENT_DTYPE)
    np.fill_diagonal(parents, NO_PARENT)
    return parents


@dataclass
class AccessStats:
    n: int
    accesses: int = 0
    expansions: int = 0

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.accesses, self.n * self.n)


@dataclass
class ApspResult:
    distances: np.ndarray
    parents: np.ndarray
    stats: AccessStats
    time_init: float = 0.0
    time_main: float = 0.0
    tree_nodes: int = 0
    pool_bytes: int = 0
