"""Queue with distances: a fixed-capacity FIFO ring of (item, distance) pairs
whose dequeue only releases the front pair when its distance is the one
asked for."""
from typing import Iterator, Optional, Tuple

import numpy as np

from .errors import QueueOverflow


class DQueue:
    def __init__(self, capacity: int):
        if capacity <= 0:
            raise ValueError('capacity must be > 0')
        self._capacity = capacity
        self._items = np.empty(capacity, dtype=np.int32)
        self._distances = np.empty(capacity, dtype=np.int32)
        self._head = 0
        self._size = 0

    @property
    def capacity(self) -> int:
        return self._capacity

    def __len__(self) -> int:
        return self._size

    def enqueue(self, item: int, distance: int) -> None:
        if self._size == self._capacity:
            raise QueueOverflow(self._capacity)
        tail = (self._head + self._size) % self._capacity
        self._items[tail] = item
        self._distances[tail] = distance
        self._size += 1

    def dequeue(self, distance: int) -> Optional[int]:
        """Pop the front item if its distance equals `distance`, else None."""
        if not self._size or self._distances[self._head] != distance:
            return None
        item = int(self._items[self._head])
        self._head = (self._head + 1) % self._capacity
        self._size -= 1
        return item

    def peek(self) -> Optional[Tuple[int, int]]:
        if not self._size:
            return None
        return int(self._items[self._head]), int(self._distances[self._head])

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        for offset in range(self._size):
            slot = (self._head + offset) % self._capacity
            yield int(self._items[slot]), int(self._distances[slot])

    def __repr__(self):
        return f'DQueue({list(self)!r}, capacity={self._capacity})'
