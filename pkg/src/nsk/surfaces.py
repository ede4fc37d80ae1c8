"""Normal surface coordinates and their embedded realization.

Coordinates are vectors of 7t non-negative integers, one block per
tetrahedron in the fixed order

    [T0, T1, T2, T3, Q01|23, Q02|13, Q03|12]

where Tv counts normal triangles cutting off vertex v and Qab|cd counts
quadrilaterals separating edge ab from edge cd.  An embedded surface needs
at most one nonzero quad type per tetrahedron (the quad condition) and equal
normal-arc counts on the two sides of every face orbit (the matching
equations): the arcs on face f cutting off vertex w number Tw + Q, with Q
the quad type separating the edge wf from its opposite edge.

Stack conventions used for the canonical embedded realization:

* triangles of type Tv are indexed 0..n-1 outward from vertex v;
* quads of type Qab|cd are indexed 0..m-1 from the ab edge toward cd
  (side A of a quad faces ab, side B faces cd; for triangles side 0 faces
  the cut-off vertex, side 1 faces away);
* on a face, the arcs of one type are ordered by distance from the vertex
  they cut off - triangle arcs first in stack order, then quad arcs - and
  the i-th arc on one side of a face orbit is glued to the i-th on the
  other.

Any embedded normal surface with the given coordinates is normally isotopic
to this realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    CoordinateError,
    IncompatibleSurfacesError,
    UnsupportedTriangulationError,
)
from .skeleton import SkeletonIndex, build_skeleton
from .triangulation import Triangulation
from .util import ParityUnionFind, UnionFind

Vector = Tuple[int, ...]

# Local quad type k separates NEAR_PAIR[k] from FAR_PAIR[k].
NEAR_PAIR = ((0, 1), (0, 2), (0, 3))
FAR_PAIR = ((2, 3), (1, 3), (1, 2))

# QUAD_SEP[u][v]: the quad type separating edge uv from its opposite edge.
QUAD_SEP = {}
for _k in range(3):
    for _pair in (NEAR_PAIR[_k], FAR_PAIR[_k]):
        QUAD_SEP[_pair] = _k
        QUAD_SEP[_pair[::-1]] = _k


def quad_partner(k: int, x: int) -> int:
    """The vertex paired with x by quad type k."""
    for pair in (NEAR_PAIR[k], FAR_PAIR[k]):
        if x == pair[0]:
            return pair[1]
        if x == pair[1]:
            return pair[0]
    raise ValueError(x)


@dataclass(frozen=True, order=True)
class Disk:
    """One normal disk: kind 0-3 is a triangle cutting off that vertex,
    kind 4-6 is a quad of local type kind-4; index is the stack position."""

    tet: int
    kind: int
    index: int

    @property
    def is_quad(self) -> bool:
        return self.kind >= 4


@dataclass(frozen=True)
class ArcGluing:
    """One identified pair of normal arcs across a face orbit.

    toward1/toward2 name the side (0/1) of each disk facing the cut-off
    vertex of its arc; endpoints maps each corner of the first arc (a tet
    edge, as a frozenset) to the matching corner of the second.
    """

    disk1: Disk
    face1: int
    disk2: Disk
    face2: int
    toward1: int
    toward2: int
    endpoints: Tuple[Tuple[frozenset, frozenset], ...]


@dataclass(frozen=True)
class SurfaceComponent:
    disks: Tuple[Disk, ...]
    coords: Vector
    euler_char: int
    orientable: bool
    two_sided: bool
    vertex_link_orbit: Optional[int]


@dataclass(frozen=True)
class EmbeddedSurface:
    coords: Vector
    disks: Tuple[Disk, ...]
    arc_gluings: Tuple[ArcGluing, ...]
    components: Tuple[SurfaceComponent, ...]
    side_classes: Tuple[Tuple[Tuple[Disk, int], ...], ...]
    weight: int
    euler_char: int

    def component_of(self, disk: Disk) -> int:
        for i, comp in enumerate(self.components):
            if disk in comp.disks:
                return i
        raise KeyError(disk)

    def side_class_of(self, disk: Disk, side: int) -> int:
        for i, cls in enumerate(self.side_classes):
            if (disk, side) in cls:
                return i
        raise KeyError((disk, side))


def _require_vector(tri: Triangulation, x: Sequence[int]) -> Vector:
    if len(x) != 7 * tri.tet_count:
        raise CoordinateError(
            f"expected {7 * tri.tet_count} coordinates, got {len(x)}"
        )
    vec = tuple(int(c) for c in x)
    for i, c in enumerate(vec):
        if c < 0:
            raise CoordinateError(f"negative coordinate at position {i}")
    return vec


def tri_count(x: Vector, tet: int, v: int) -> int:
    return x[7 * tet + v]


def quad_type_and_count(x: Vector, tet: int) -> Tuple[Optional[int], int]:
    """The tetrahedron's (unique) nonzero quad type and its count.

    Raises CoordinateError if more than one type is nonzero.
    """
    nonzero = [k for k in range(3) if x[7 * tet + 4 + k] > 0]
    if len(nonzero) > 1:
        raise CoordinateError(f"quad condition violated in tetrahedron {tet}")
    if not nonzero:
        return None, 0
    k = nonzero[0]
    return k, x[7 * tet + 4 + k]


def check_admissible(tri: Triangulation, x: Sequence[int]):
    """Quad condition in every tetrahedron. Returns (ok, first_violation)
    where the violation is the offending tetrahedron index."""
    vec = _require_vector(tri, x)
    for tet in range(tri.tet_count):
        nonzero = [k for k in range(3) if vec[7 * tet + 4 + k] > 0]
        if len(nonzero) > 1:
            return False, tet
    return True, None


def arc_count(x: Vector, tet: int, face: int, w: int) -> int:
    """Arcs on the given face cutting off vertex w (w must lie on the face)."""
    assert w != face
    return x[7 * tet + w] + x[7 * tet + 4 + QUAD_SEP[(w, face)]]


def check_matching(tri: Triangulation, x: Sequence[int]):
    """Matching equations over all face orbits.

    Returns (ok, violations) with violations a list of (face orbit index,
    cut-off vertex on the lexicographically smaller side).
    """
    vec = _require_vector(tri, x)
    ok, tet = check_admissible(tri, vec)
    if not ok:
        raise CoordinateError(f"inadmissible vector (quad condition fails in tet {tet})")
    violations = []
    for idx, (a, f, b, f2, p) in enumerate(tri.face_pairs()):
        for w in range(4):
            if w == f:
                continue
            if arc_count(vec, a, f, w) != arc_count(vec, b, f2, p[w]):
                violations.append((idx, w))
    return not violations, violations


def _edge_corner_count(x: Vector, a: int, u: int, v: int) -> int:
    """Disk corners of tetrahedron a on its edge uv."""
    total = x[7 * a + u] + x[7 * a + v]
    sep = QUAD_SEP[(u, v)]
    for k in range(3):
        if k != sep:
            total += x[7 * a + 4 + k]
    return total


def weight(tri: Triangulation, x: Sequence[int], skel: Optional[SkeletonIndex] = None) -> int:
    """|S intersect T^1|: the corner count summed over edge orbits.

    The count must be constant over each orbit; this is a consequence of
    the matching equations, which are therefore checked first.
    """
    vec = _require_vector(tri, x)
    ok, violations = check_matching(tri, vec)
    if not ok:
        raise CoordinateError(f"matching equations violated: {violations[:3]}")
    if skel is None:
        skel = build_skeleton(tri)
    total = 0
    for orbit in skel.edge_orbits:
        counts = {_edge_corner_count(vec, a, u, v) for a, u, v in orbit}
        assert len(counts) == 1, f"corner count varies over edge orbit {orbit}"
        total += counts.pop()
    return total


def euler_characteristic(
    tri: Triangulation, x: Sequence[int], skel: Optional[SkeletonIndex] = None
) -> int:
    """chi(S) = P - A + D from coordinates alone: P the weight, A the total
    arc count over face orbits, D the disk count."""
    vec = _require_vector(tri, x)
    if skel is None:
        skel = build_skeleton(tri)
    p = weight(tri, vec, skel)
    a_total = 0
    for a, f, _b, _f2, _p in tri.face_pairs():
        for w in range(4):
            if w != f:
                a_total += arc_count(vec, a, f, w)
    return p - a_total + sum(vec)


def vertex_link(skel: SkeletonIndex, orbit: int) -> Vector:
    """Coordinates of the normal sphere linking the given vertex orbit."""
    if not 0 <= orbit < skel.vertex_count:
        raise CoordinateError(f"vertex orbit {orbit} out of range")
    x = [0] * (7 * skel.tet_count)
    for a, v in skel.vertex_orbits[orbit]:
        x[7 * a + v] += 1
    return tuple(x)


def link_combination(skel: SkeletonIndex, x: Sequence[int]) -> Optional[Dict[int, int]]:
    """If x is a non-negative integer combination of vertex-link vectors,
    return {orbit: coefficient}; otherwise None.  Link vectors have
    disjoint supports, so the decomposition is unique."""
    t = skel.tet_count
    vec = tuple(x)
    if any(vec[7 * a + 4 + k] for a in range(t) for k in range(3)):
        return None
    coeffs = {}
    for i, orbit in enumerate(skel.vertex_orbits):
        values = {vec[7 * a + v] for a, v in orbit}
        if len(values) != 1:
            return None
        c = values.pop()
        if c:
            coeffs[i] = c
    return coeffs


def haken_sum(tri: Triangulation, x: Sequence[int], y: Sequence[int]) -> Vector:
    """Entrywise sum of compatible admissible vectors."""
    vx = _require_vector(tri, x)
    vy = _require_vector(tri, y)
    for vec in (vx, vy):
        ok, tet = check_admissible(tri, vec)
        if not ok:
            raise CoordinateError(f"inadmissible summand (tet {tet})")
    for tet in range(tri.tet_count):
        kx, mx = quad_type_and_count(vx, tet)
        ky, my = quad_type_and_count(vy, tet)
        if mx and my and kx != ky:
            raise IncompatibleSurfacesError(tet)
    return tuple(a + b for a, b in zip(vx, vy))


# ---------------------------------------------------------------------------
# Embedded realization


def _disk_cycle(disk: Disk) -> Dict[int, Tuple[frozenset, frozenset]]:
    """Boundary cycle of a disk: face -> (from_corner, to_corner), corners
    named by the tet edge (frozenset) they sit on, in a fixed cyclic
    traversal of the disk boundary."""
    if not disk.is_quad:
        v = disk.kind
        others = sorted(w for w in range(4) if w != v)
        cycle = {}
        for i in range(3):
            face = others[(i + 2) % 3]
            cycle[face] = (
                frozenset((v, others[i])),
                frozenset((v, others[(i + 1) % 3])),
            )
        return cycle
    k = disk.kind - 4
    zero, n = NEAR_PAIR[k]
    c, d = FAR_PAIR[k]
    return {
        d: (frozenset((zero, c)), frozenset((n, c))),
        zero: (frozenset((n, c)), frozenset((n, d))),
        c: (frozenset((n, d)), frozenset((zero, d))),
        n: (frozenset((zero, d)), frozenset((zero, c))),
    }


def arc_cutoff_vertex(disk: Disk, face: int) -> int:
    """The vertex cut off by this disk's arc on the given face."""
    if not disk.is_quad:
        assert face != disk.kind
        return disk.kind
    return quad_partner(disk.kind - 4, face)


def arc_toward_side(disk: Disk, face: int) -> int:
    """The side (0/1) of the disk facing the vertex its arc cuts off."""
    if not disk.is_quad:
        return 0
    return 0 if arc_cutoff_vertex(disk, face) in NEAR_PAIR[disk.kind - 4] else 1


def _arc_stack(x: Vector, tet: int, face: int, w: int) -> List[Disk]:
    """Arcs of type w on the given face, ordered by distance from w."""
    arcs = [Disk(tet, w, i) for i in range(x[7 * tet + w])]
    k = QUAD_SEP[(w, face)]
    m = x[7 * tet + 4 + k]
    if m:
        if w in NEAR_PAIR[k]:
            arcs.extend(Disk(tet, 4 + k, j) for j in range(m))
        else:
            arcs.extend(Disk(tet, 4 + k, j) for j in reversed(range(m)))
    return arcs


def surface_disks(x: Vector, t: int) -> List[Disk]:
    disks = []
    for tet in range(t):
        for kind in range(7):
            for i in range(x[7 * tet + kind]):
                disks.append(Disk(tet, kind, i))
    return disks


def reconstruct(
    tri: Triangulation, x: Sequence[int], skel: Optional[SkeletonIndex] = None
) -> EmbeddedSurface:
    """Instantiate the canonical embedded surface for admissible matching
    coordinates and split it into connected components.

    Refuses coordinates that put disk corners on an edge orbit identified
    with itself in reverse: the glued-up complex would not be a surface
    there (corner points at mirrored heights collapse together).
    """
    vec = _require_vector(tri, x)
    if skel is None:
        skel = build_skeleton(tri)
    ok, violations = check_matching(tri, vec)
    if not ok:
        raise CoordinateError(f"matching equations violated: {violations[:3]}")
    for orbit_idx in skel.reversed_edge_orbits:
        a, u, v = skel.edge_orbits[orbit_idx][0]
        if _edge_corner_count(vec, a, u, v):
            raise UnsupportedTriangulationError(
                f"surface crosses edge orbit {orbit_idx}, which is identified "
                "with itself in reverse; reconstruction is not defined there"
            )

    t = tri.tet_count
    disks = surface_disks(vec, t)

    gluings: List[ArcGluing] = []
    for a, f, b, f2, p in tri.face_pairs():
        for w in range(4):
            if w == f:
                continue
            side1 = _arc_stack(vec, a, f, w)
            side2 = _arc_stack(vec, b, f2, p[w])
            assert len(side1) == len(side2), "matching equations guarantee equal stacks"
            for d1, d2 in zip(side1, side2):
                cyc1 = _disk_cycle(d1)[f]
                ends1 = (cyc1[0], cyc1[1])
                endpoints = tuple(
                    (e, frozenset(p[u] for u in e)) for e in ends1
                )
                gluings.append(
                    ArcGluing(
                        disk1=d1,
                        face1=f,
                        disk2=d2,
                        face2=f2,
                        toward1=arc_toward_side(d1, f),
                        toward2=arc_toward_side(d2, f2),
                        endpoints=endpoints,
                    )
                )

    # Connectivity, sidedness, orientability and corner identifications all
    # propagate along arc gluings.
    conn = UnionFind()
    sides = UnionFind()
    corners = UnionFind()
    orient = ParityUnionFind()
    for disk in disks:
        conn.find(disk)
        sides.find((disk, 0))
        sides.find((disk, 1))
        for edge in {e for pair in _disk_cycle(disk).values() for e in pair}:
            corners.find((disk, edge))

    nonorientable_seeds: List[Disk] = []
    for g in gluings:
        conn.union(g.disk1, g.disk2)
        sides.union((g.disk1, g.toward1), (g.disk2, g.toward2))
        sides.union((g.disk1, 1 - g.toward1), (g.disk2, 1 - g.toward2))
        for e1, e2 in g.endpoints:
            corners.union((g.disk1, e1), (g.disk2, e2))
        from1, to1 = _disk_cycle(g.disk1)[g.face1]
        from2, to2 = _disk_cycle(g.disk2)[g.face2]
        image_from1 = g.endpoints[0][1] if g.endpoints[0][0] == from1 else g.endpoints[1][1]
        assert image_from1 in (from2, to2)
        parity = 1 if image_from1 == from2 else 0
        if not orient.union(g.disk1, g.disk2, parity):
            nonorientable_seeds.append(g.disk1)

    component_classes = conn.classes(disks)
    side_classes = tuple(
        tuple(cls) for cls in sides.classes([(d, s) for d in disks for s in (0, 1)])
    )

    link_vectors = {
        vertex_link(skel, i): i for i in range(skel.vertex_count)
    }

    components = []
    for members in component_classes:
        comp_coords = [0] * (7 * t)
        for d in members:
            comp_coords[7 * d.tet + d.kind] += 1
        comp_coords = tuple(comp_coords)
        member_set = set(members)
        n_arcs = sum(1 for g in gluings if g.disk1 in member_set)
        n_corners = len(
            {corners.find((d, e)) for d in members for pair in _disk_cycle(d).values() for e in pair}
        )
        chi = n_corners - n_arcs + len(members)
        side_ids = {
            sides.find((d, s)) for d in members for s in (0, 1)
        }
        assert len(side_ids) in (1, 2)
        two_sided = len(side_ids) == 2
        orientable = not any(seed in member_set for seed in nonorientable_seeds)
        components.append(
            SurfaceComponent(
                disks=tuple(members),
                coords=comp_coords,
                euler_char=chi,
                orientable=orientable,
                two_sided=two_sided,
                vertex_link_orbit=link_vectors.get(comp_coords),
            )
        )

    total_corners = len(
        {corners.find((d, e)) for d in disks for pair in _disk_cycle(d).values() for e in pair}
    )
    total_chi = total_corners - len(gluings) + len(disks)

    return EmbeddedSurface(
        coords=vec,
        disks=tuple(disks),
        arc_gluings=tuple(gluings),
        components=tuple(components),
        side_classes=side_classes,
        weight=total_corners,
        euler_char=total_chi,
    )
