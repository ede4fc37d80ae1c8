"""Orbit structure of a closed pseudo-triangulation.

Gluing maps identify the 4t tetrahedron corners into vertex orbits, the 6t
edges into edge orbits, and the 4t faces into 2t face orbits.  Edges are
tracked as directed pairs so that an orbit identifying a directed edge with
its own reverse can be detected (allowed, but flagged: downstream surface
reconstruction refuses to cross such an edge).

Validation implemented here:

* connectivity (the gluing graph on tetrahedra must be connected);
* every vertex link is a 2-sphere.  Links are assembled from one corner
  triangle per corner; since all faces are glued, each link is a closed
  surface, so the sphere condition reduces to Euler characteristic 2.

Orientability is decided by 2-colouring tetrahedra: with every tetrahedron
carrying the standard orientation of its labels 0123, a gluing is
orientation-compatible exactly when its vertex permutation is odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .errors import NonManifoldError
from .triangulation import Triangulation
from .util import ParityUnionFind, UnionFind, perm_is_odd

Corner = Tuple[int, int]          # (tet, vertex)
EdgeEmbedding = Tuple[int, int, int]   # (tet, u, v) with u < v


@dataclass(frozen=True)
class SkeletonIndex:
    """Immutable orbit data for a valid closed triangulation."""

    tet_count: int
    vertex_orbits: Tuple[Tuple[Corner, ...], ...]
    edge_orbits: Tuple[Tuple[EdgeEmbedding, ...], ...]
    face_orbits: Tuple[Tuple[int, int, int, int, tuple], ...]
    vertex_orbit_of: Dict[Corner, int] = field(repr=False)
    edge_orbit_of: Dict[Tuple[int, int, int], int] = field(repr=False)
    reversed_edge_orbits: Tuple[int, ...] = ()
    orientable: bool = True

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_orbits)

    @property
    def edge_count(self) -> int:
        return len(self.edge_orbits)

    @property
    def face_count(self) -> int:
        return len(self.face_orbits)

    @property
    def euler_char(self) -> int:
        return (
            self.vertex_count
            - self.edge_count
            + self.face_count
            - self.tet_count
        )

    def edge_endpoints(self, orbit: int) -> Tuple[int, int]:
        """Vertex orbits of the two endpoints (equal for a loop edge)."""
        a, u, v = self.edge_orbits[orbit][0]
        return self.vertex_orbit_of[(a, u)], self.vertex_orbit_of[(a, v)]

    def is_loop_edge(self, orbit: int) -> bool:
        p, q = self.edge_endpoints(orbit)
        return p == q


def _check_connected(tri: Triangulation) -> None:
    t = tri.tet_count
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for f in range(4):
            b, _ = tri.gluing(a, f)
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != t:
        raise NonManifoldError(
            f"disconnected triangulation: reached {len(seen)} of {t} tetrahedra"
        )


def build_skeleton(tri: Triangulation) -> SkeletonIndex:
    """Compute all orbits and validate the closed-manifold conditions.

    Raises NonManifoldError if the triangulation is disconnected or some
    vertex link is not a sphere.
    """
    _check_connected(tri)
    t = tri.tet_count

    corners = UnionFind()
    directed = UnionFind()
    for a, f, b, f2, p in tri.face_pairs():
        face = [w for w in range(4) if w != f]
        for u in face:
            corners.union((a, u), (b, p[u]))
        for u in face:
            for v in face:
                if u != v:
                    directed.union((a, u, v), (b, p[u], p[v]))

    all_corners = [(a, v) for a in range(t) for v in range(4)]
    vertex_orbits = tuple(tuple(c) for c in corners.classes(all_corners))
    vertex_orbit_of = {
        c: i for i, orbit in enumerate(vertex_orbits) for c in orbit
    }

    all_directed = [
        (a, u, v) for a in range(t) for u in range(4) for v in range(4) if u != v
    ]
    directed_root_of = {de: directed.find(de) for de in all_directed}

    undirected = UnionFind()
    for a in range(t):
        for u in range(4):
            for v in range(u + 1, 4):
                undirected.union((a, u, v), (a, v, u))
    for de in all_directed:
        undirected.union(de, directed_root_of[de])

    orbit_members: Dict[object, set] = {}
    for a in range(t):
        for u in range(4):
            for v in range(u + 1, 4):
                orbit_members.setdefault(undirected.find((a, u, v)), set()).add((a, u, v))
    edge_orbits = tuple(
        tuple(sorted(members))
        for members in sorted(orbit_members.values(), key=lambda m: min(m))
    )
    edge_orbit_of: Dict[Tuple[int, int, int], int] = {}
    for i, orbit in enumerate(edge_orbits):
        for (a, u, v) in orbit:
            edge_orbit_of[(a, u, v)] = i
            edge_orbit_of[(a, v, u)] = i

    reversed_orbits = []
    for i, orbit in enumerate(edge_orbits):
        a, u, v = orbit[0]
        if directed_root_of[(a, u, v)] == directed_root_of[(a, v, u)]:
            reversed_orbits.append(i)

    face_orbits = tuple(tri.face_pairs())
    assert len(face_orbits) == 2 * t

    # Vertex links: faces of the link are corner triangles, edges are the
    # glued triangle sides (3 per corner, glued in pairs), and vertices are
    # directed-edge classes grouped by their tail corner.
    tails_per_class: Dict[object, set] = {}
    for de in all_directed:
        tails_per_class.setdefault(directed_root_of[de], set()).add(
            vertex_orbit_of[(de[0], de[1])]
        )
    for root, tails in tails_per_class.items():
        assert len(tails) == 1, "directed edge class with mixed tail orbits"

    link_vertex_count = [0] * len(vertex_orbits)
    for root, tails in tails_per_class.items():
        link_vertex_count[next(iter(tails))] += 1
    for i, orbit in enumerate(vertex_orbits):
        faces_l = len(orbit)
        edges_l, rem = divmod(3 * faces_l, 2)
        assert rem == 0
        chi_link = link_vertex_count[i] - edges_l + faces_l
        if chi_link != 2:
            raise NonManifoldError(
                f"vertex orbit {i} has a non-sphere link (chi = {chi_link}); "
                "input is not a closed 3-manifold"
            )

    orient = ParityUnionFind()
    orientable = True
    for a, f, b, f2, p in face_orbits:
        # odd permutation <-> compatible with equal orientation classes
        parity = 0 if perm_is_odd(p) else 1
        if not orient.union(a, b, parity):
            orientable = False

    return SkeletonIndex(
        tet_count=t,
        vertex_orbits=vertex_orbits,
        edge_orbits=edge_orbits,
        face_orbits=face_orbits,
        vertex_orbit_of=vertex_orbit_of,
        edge_orbit_of=edge_orbit_of,
        reversed_edge_orbits=tuple(reversed_orbits),
        orientable=orientable,
    )
