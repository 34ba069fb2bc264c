"""Undirected unweighted graphs in CSR form, the two benchmark generators and
edge-list file I/O.

Vertices are dense 0-based ids. Each vertex keeps its neighbors in insertion
order; the algorithms iterate neighbors in exactly that order, so it is the
tie-breaking order for every shortest path tree they build.

Scale-free graphs draw from numpy's PCG64 bit generator
(``numpy.random.Generator(numpy.random.PCG64(seed))``), which produces the
same stream on every platform for a given 64-bit seed.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (DuplicateEdge, IdOutOfRange, InvalidParams, ParseError,
                     SelfLoop)

logger = logging.getLogger(__name__)

HYPERCUBE = 'hypercube'
SCALE_FREE = 'scale_free'
MAX_SEED = 2 ** 64


class Graph:
    """Immutable graph stored as CSR arrays (``indptr``, ``indices``)."""

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        self.n = n
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int32)
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Sequence[int]]) -> 'Graph':
        degrees = np.fromiter((len(a) for a in adjacency), dtype=np.int64,
                              count=len(adjacency))
        indptr = np.zeros(len(adjacency) + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        if indptr[-1]:
            indices = np.concatenate(
                [np.asarray(a, dtype=np.int32) for a in adjacency])
        else:
            indices = np.zeros(0, dtype=np.int32)
        return cls(len(adjacency), indptr, indices)

    @property
    def m(self) -> int:
        return int(self.indptr[-1]) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @cached_property
    def adjacency(self) -> List[List[int]]:
        """Neighbor lists as plain Python lists, for the per-vertex loops."""
        flat = self.indices.tolist()
        bounds = self.indptr.tolist()
        return [flat[bounds[v]:bounds[v + 1]] for v in range(self.n)]

    @cached_property
    def adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=bool)
        rows = np.repeat(np.arange(self.n), self.degrees)
        matrix[rows, self.indices] = True
        return matrix

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(np.any(self.neighbors(u) == v))

    def edges(self) -> List[Tuple[int, int]]:
        """Undirected edges as (min id, max id) pairs, sorted."""
        rows = np.repeat(np.arange(self.n), self.degrees)
        keep = rows < self.indices
        pairs = np.stack([rows[keep], self.indices[keep]], axis=1)
        order = np.lexsort((pairs[:, 1], pairs[:, 0]))
        return [tuple(p) for p in pairs[order].tolist()]

    def same_order(self, other: 'Graph') -> bool:
        return (self.n == other.n
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges() == other.edges()

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return f'Graph(n={self.n}, m={self.m})'


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    n_prime: Optional[int] = None
    seed: int = 0

    def validate(self):
        if self.kind == HYPERCUBE:
            if self.n < 2 or self.n & (self.n - 1):
                raise InvalidParams(
                    f'hypercube size {self.n} is not a power of two >= 2.')
        elif self.kind == SCALE_FREE:
            if self.n_prime is None or not 2 <= self.n_prime < self.n:
                raise InvalidParams(
                    f'scale-free needs 2 <= n_prime < n '
                    f'(got n={self.n}, n_prime={self.n_prime}).')
            if not 0 <= self.seed < MAX_SEED:
                raise InvalidParams(f'seed {self.seed} is not a 64-bit value.')
        else:
            raise InvalidParams(f'unknown graph kind {self.kind!r}.')


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    if n < 1:
        raise InvalidParams(f'vertex count must be positive (got {n}).')
    adjacency = [[] for _ in range(n)]
    seen = set()
    for u, v in edges:
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise IdOutOfRange(vertex, n)
        if u == v:
            raise SelfLoop(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(u, v)
        seen.add(key)
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph.from_adjacency(adjacency)


def validate_graph(g: Graph) -> List[str]:
    problems = []
    if int(g.degrees.sum()) != 2 * g.m or g.indices.size % 2:
        problems.append('degree sum is not 2m')
    if g.indices.size and (g.indices.min() < 0 or g.indices.max() >= g.n):
        problems.append('neighbor id out of range')
        return problems
    for v, neighbors in enumerate(g.adjacency):
        if v in neighbors:
            problems.append(f'self-loop at {v}')
        if len(set(neighbors)) != len(neighbors):
            problems.append(f'duplicate neighbor at {v}')
    matrix = g.adjacency_matrix
    asymmetric = np.argwhere(matrix != matrix.T)
    for u, v in asymmetric[:10].tolist():
        problems.append(f'edge ({u}, {v}) has no reverse')
    return problems


def gen_hypercube(k: int) -> Graph:
    if k < 1:
        raise InvalidParams(f'hypercube dimension must be >= 1 (got {k}).')
    n = 1 << k
    ids = np.arange(n, dtype=np.int64)
    # neighbor order: descending flipped-bit position
    bits = np.left_shift(1, np.arange(k - 1, -1, -1, dtype=np.int64))
    indices = (ids[:, None] ^ bits[None, :]).ravel()
    indptr = np.arange(0, n * k + 1, k, dtype=np.int64)
    logger.debug('hypercube k=%d: n=%d m=%d', k, n, n * k // 2)
    return Graph(n, indptr, indices)


def gen_scale_free(n: int, n_prime: int, seed: int) -> Graph:
    """Preferential attachment grown from the complete graph on n_prime
    vertices. Every new vertex picks n_prime distinct existing vertices by
    roulette wheel over the degree snapshot taken before it attaches;
    already-picked vertices are rejected and redrawn."""
    GenSpec(SCALE_FREE, n, n_prime, seed).validate()
    rng = np.random.Generator(np.random.PCG64(seed))
    adjacency = [[] for _ in range(n)]
    degrees = np.zeros(n, dtype=np.int64)
    for u in range(n_prime):
        for v in range(u + 1, n_prime):
            adjacency[u].append(v)
            adjacency[v].append(u)
    degrees[:n_prime] = n_prime - 1

    for v in range(n_prime, n):
        wheel = np.cumsum(degrees[:v])
        total = int(wheel[-1])
        chosen = []
        picked = set()
        while len(chosen) < n_prime:
            spin = int(rng.integers(total))
            target = int(np.searchsorted(wheel, spin, side='right'))
            if target in picked:
                continue
            picked.add(target)
            chosen.append(target)
        for target in chosen:
            adjacency[v].append(target)
            adjacency[target].append(v)
        degrees[chosen] += 1
        degrees[v] = n_prime

    g = Graph.from_adjacency(adjacency)
    logger.debug('scale-free n=%d n_prime=%d seed=%d: m=%d max degree=%d',
                 n, n_prime, seed, g.m, int(g.degrees.max()))
    return g


def generate(spec: GenSpec) -> Graph:
    spec.validate()
    if spec.kind == HYPERCUBE:
        return gen_hypercube(spec.n.bit_length() - 1)
    return gen_scale_free(spec.n, spec.n_prime, spec.seed)


def degree_summary(g: Graph) -> Tuple[int, float, int]:
    if g.n == 0:
        return 0, 0.0, 0
    return int(g.degrees.min()), 2 * g.m / g.n, int(g.degrees.max())


def _parse_ints(line: str, line_no: int) -> Tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise ParseError(line_no, f'expected 2 fields, got {len(fields)}')
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(line_no, f'not an integer pair: {line.strip()!r}')


def _read_edges(lines: Iterator[Tuple[int, str]],
                m: int) -> Iterator[Tuple[int, int]]:
    count = 0
    line_no = 1
    for line_no, line in lines:
        if not line.strip():
            continue
        u, v = _parse_ints(line, line_no)
        if u > v:
            raise ParseError(line_no, f'endpoints must be ascending ({u} > {v})')
        count += 1
        if count > m:
            raise ParseError(line_no, f'more than the declared {m} edges')
        yield u, v
    if count != m:
        raise ParseError(line_no, f'declared {m} edges, found {count}')


def _decoded_lines(handle) -> Iterator[Tuple[int, str]]:
    for line_no, raw in enumerate(handle, start=1):
        try:
            yield line_no, raw.decode('ascii')
        except UnicodeDecodeError as ex:
            raise ParseError(
                line_no, f'non-ASCII byte 0x{raw[ex.start]:02x} at column '
                         f'{ex.start + 1}')


def load_edge_list(path) -> Graph:
    with open(path, 'rb') as handle:
        lines = _decoded_lines(handle)
        header = next(lines, None)
        if header is None:
            raise ParseError(1, 'missing "n m" header')
        n, m = _parse_ints(header[1], header[0])
        if m < 0:
            raise ParseError(1, f'negative edge count {m}')
        g = build_graph(n, _read_edges(lines, m))
    logger.info('loaded %s: n=%d m=%d', path, g.n, g.m)
    return g


def save_edge_list(g: Graph, path) -> None:
    edges = g.edges()
    with open(path, 'w', encoding='ascii', newline='\n') as handle:
        handle.write(f'{g.n} {len(edges)}\n')
        handle.writelines(f'{u} {v}\n' for u, v in edges)
    logger.info('saved %s: n=%d m=%d', path, g.n, len(edges))
