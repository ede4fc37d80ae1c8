"""Small shared helpers: union-find (plain and Z2-twisted) and permutations
of {0,1,2,3} encoded as 4-tuples."""

from __future__ import annotations

from typing import Dict, Hashable, List, Tuple

Perm = Tuple[int, int, int, int]


class UnionFind:
    """Union-find over arbitrary hashable items, created lazily."""

    def __init__(self):
        self._parent: Dict[Hashable, Hashable] = {}

    def find(self, x):
        parent = self._parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self._parent[ra] = rb

    def classes(self, items=None) -> List[list]:
        """Equivalence classes, each sorted, ordered by smallest member."""
        groups: Dict[Hashable, list] = {}
        for x in (self._parent if items is None else items):
            groups.setdefault(self.find(x), []).append(x)
        out = [sorted(members) for members in groups.values()]
        out.sort(key=lambda c: c[0])
        return out


class ParityUnionFind:
    """Union-find where every element carries a Z2 offset to its root.

    union(a, b, parity) asserts offset(a) + offset(b) == parity (mod 2) and
    returns False when that contradicts the existing relation.  Used for
    orientation propagation: parity 1 means "opposite orientation classes".
    """

    def __init__(self):
        self._parent: Dict[Hashable, Hashable] = {}
        self._offset: Dict[Hashable, int] = {}

    def find(self, x):
        parent, offset = self._parent, self._offset
        if x not in parent:
            parent[x] = x
            offset[x] = 0
            return x, 0
        path = []
        root = x
        while parent[root] != root:
            path.append(root)
            root = parent[root]
        acc = 0
        for node in reversed(path):
            acc ^= offset[node]
            parent[node] = root
            offset[node] = acc
        return root, offset[x]

    def union(self, a, b, parity: int) -> bool:
        """Merge; returns False iff the relation is inconsistent."""
        ra, oa = self.find(a)
        rb, ob = self.find(b)
        if ra == rb:
            return (oa ^ ob) == parity
        self._parent[ra] = rb
        self._offset[ra] = oa ^ ob ^ parity
        return True


def perm_inverse(p: Perm) -> Perm:
    inv = [0, 0, 0, 0]
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def perm_is_odd(p: Perm) -> bool:
    """Sign of a permutation of {0,1,2,3}: True for odd."""
    inversions = sum(
        1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]
    )
    return inversions % 2 == 1


def perm_is_valid(p) -> bool:
    return len(p) == 4 and sorted(p) == [0, 1, 2, 3]
