"""Mod-2 cellular homology of the triangulation and the spanning-tree count.

The chain complex C3 -> C2 -> C1 -> C0 has one generator per tetrahedron,
face orbit, edge orbit and vertex orbit.  Boundary maps count incidences mod
2: a loop edge contributes nothing to d1, and a face whose boundary meets
the same edge orbit twice contributes nothing for that edge.  Ranks are
computed by dense Gaussian elimination over GF(2) with rows stored as
integer bitsets; at the scales this toolkit targets exactness is the only
concern.

A maximal tree of the 1-skeleton gives the edge count e_N = e - (v - 1),
which equals t + 1 for every connected closed triangulation; the exact
rank of H1 with Z2 coefficients can never exceed it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import List, Tuple

from .skeleton import SkeletonIndex
from .triangulation import Triangulation


@dataclass(frozen=True)
class TreeCertificate:
    """A maximal tree of the 1-skeleton and the resulting edge counts."""

    tree_edges: Tuple[int, ...]
    e_tree: int
    e_non_tree: int


@dataclass(frozen=True)
class Z2HomologyProfile:
    rank_h1: int
    betti_mod2: Tuple[int, int, int, int]


def gf2_rank(rows: List[int]) -> int:
    """Rank over GF(2) of a matrix given as integer-bitset rows."""
    rank = 0
    pivots: List[int] = []
    for row in rows:
        for pivot_row in pivots:
            low = pivot_row & -pivot_row
            if row & low:
                row ^= pivot_row
        if row:
            pivots.append(row)
            rank += 1
    return rank


def spanning_tree_bound(skel: SkeletonIndex) -> TreeCertificate:
    """Maximal tree of the 1-skeleton, grown breadth-first from vertex
    orbit 0 with ties broken by edge orbit index."""
    v = skel.vertex_count
    adjacency: List[List[Tuple[int, int]]] = [[] for _ in range(v)]
    for i in range(skel.edge_count):
        p, q = skel.edge_endpoints(i)
        if p == q:
            continue
        adjacency[p].append((i, q))
        adjacency[q].append((i, p))
    for lst in adjacency:
        lst.sort()

    tree: List[int] = []
    visited = [False] * v
    visited[0] = True
    frontier = [0]
    while frontier:
        next_frontier = []
        for node in frontier:
            for edge, other in adjacency[node]:
                if not visited[other]:
                    visited[other] = True
                    tree.append(edge)
                    next_frontier.append(other)
        frontier = next_frontier
    assert all(visited), "1-skeleton of a connected triangulation is connected"
    tree.sort()
    return TreeCertificate(
        tree_edges=tuple(tree),
        e_tree=len(tree),
        e_non_tree=skel.edge_count - len(tree),
    )


def boundary_maps(tri: Triangulation, skel: SkeletonIndex):
    """The three boundary matrices as bitset rows (row = one generator of
    the higher group, bit i = coefficient on generator i below)."""
    d1 = []
    for i in range(skel.edge_count):
        p, q = skel.edge_endpoints(i)
        d1.append(0 if p == q else (1 << p) | (1 << q))

    d2 = []
    for a, f, _b, _f2, _p in skel.face_orbits:
        face = [w for w in range(4) if w != f]
        counts = Counter()
        for i in range(3):
            for j in range(i + 1, 3):
                u, v = sorted((face[i], face[j]))
                counts[skel.edge_orbit_of[(a, u, v)]] += 1
        row = 0
        for orbit, mult in counts.items():
            if mult % 2:
                row |= 1 << orbit
        d2.append(row)

    face_orbit_of = {}
    for i, (a, f, b, f2, _p) in enumerate(skel.face_orbits):
        face_orbit_of[(a, f)] = i
        face_orbit_of[(b, f2)] = i

    d3 = []
    for a in range(skel.tet_count):
        counts = Counter(face_orbit_of[(a, f)] for f in range(4))
        row = 0
        for orbit, mult in counts.items():
            if mult % 2:
                row |= 1 << orbit
        d3.append(row)
    return d1, d2, d3


def h1_z2_rank(tri: Triangulation, skel: SkeletonIndex) -> Z2HomologyProfile:
    """Exact rank of H1(M; Z2) plus all four mod-2 Betti numbers."""
    d1, d2, d3 = boundary_maps(tri, skel)
    r1 = gf2_rank(d1)
    r2 = gf2_rank(d2)
    r3 = gf2_rank(d3)
    v, e, f, t = (
        skel.vertex_count,
        skel.edge_count,
        skel.face_count,
        skel.tet_count,
    )
    betti = (v - r1, (e - r1) - r2, (f - r2) - r3, t - r3)
    return Z2HomologyProfile(rank_h1=betti[1], betti_mod2=betti)
