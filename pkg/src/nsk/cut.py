"""Cutting the vertex-truncated manifold along an embedded normal surface.

Within one truncated tetrahedron the complement of the surface falls into
regions of four kinds.  Between consecutive parallel triangles of a vertex
stack (or between the boundary link triangle and the innermost one) lies a
triangle prism; between consecutive quads lies a quad prism.  What is left
is one central region when the tetrahedron carries no quads - a truncated
tetrahedron - or two truncated prisms, one on each side of the quad stack.
Prisms meet the truncated boundary of the tetrahedron in annuli (good);
the central regions do not (bad).

Regions glue across face orbits along the strips into which the normal arcs
divide each hexagonal face; the arc matching is order-preserving, so the
j-th strip of an arc family on one side meets the j-th strip on the other,
and the central piece of a hexagon meets the opposite central piece.
Components of the cut manifold inherit a good/bad label (good = every
region good), boundary surfaces that are not vertex-link spheres are the
remnants, and a normal disk side is bad when it bounds a bad region.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .skeleton import SkeletonIndex
from .surfaces import (
    Disk,
    EmbeddedSurface,
    NEAR_PAIR,
    QUAD_SEP,
    _disk_cycle,
    arc_count,
    arc_toward_side,
    quad_type_and_count,
    tri_count,
)
from .triangulation import Triangulation
from .util import UnionFind

RegionId = Tuple[int, tuple]

GOOD_KINDS = frozenset({"tri_prism", "quad_prism"})
_KIND_OF_TAG = {
    "tri": "tri_prism",
    "quad": "quad_prism",
    "core": "trunc_tet",
    "wedge": "trunc_prism",
}


@dataclass(frozen=True)
class Region:
    tet: int
    tag: tuple

    @property
    def kind(self) -> str:
        return _KIND_OF_TAG[self.tag[0]]

    @property
    def good(self) -> bool:
        return self.kind in GOOD_KINDS

    @property
    def id(self) -> RegionId:
        return (self.tet, self.tag)


class TetRegions:
    """Region table of one tetrahedron, with the lookups used to glue
    regions together and to attribute disk sides and link triangles."""

    def __init__(self, x, tet: int):
        self.tet = tet
        self.tri_counts = tuple(tri_count(x, tet, v) for v in range(4))
        self.quad_type, self.quad_count = quad_type_and_count(x, tet)
        tags: List[tuple] = []
        for v in range(4):
            tags.extend(("tri", v, j) for j in range(self.tri_counts[v]))
        tags.extend(("quad", j) for j in range(max(self.quad_count - 1, 0)))
        if self.quad_count == 0:
            tags.append(("core",))
        else:
            tags.extend((("wedge", 0), ("wedge", 1)))
        self.regions = tuple(Region(tet, tag) for tag in tags)
        self._by_tag = {r.tag: r for r in self.regions}

    def region(self, tag: tuple) -> Region:
        return self._by_tag[tag]

    def _central_for_vertex(self, v: int) -> Region:
        if self.quad_count == 0:
            return self.region(("core",))
        side = 0 if v in NEAR_PAIR[self.quad_type] else 1
        return self.region(("wedge", side))

    def for_disk_side(self, disk: Disk, side: int) -> Region:
        assert disk.tet == self.tet
        if not disk.is_quad:
            v, i = disk.kind, disk.index
            if side == 0:
                return self.region(("tri", v, i))
            if i + 1 < self.tri_counts[v]:
                return self.region(("tri", v, i + 1))
            return self._central_for_vertex(v)
        j, m = disk.index, self.quad_count
        if side == 0:
            return self.region(("quad", j - 1)) if j >= 1 else self.region(("wedge", 0))
        return self.region(("quad", j)) if j + 1 < m else self.region(("wedge", 1))

    def for_link_triangle(self, v: int) -> Region:
        if self.tri_counts[v]:
            return self.region(("tri", v, 0))
        return self._central_for_vertex(v)

    def _disk_at_arc(self, face: int, w: int, i: int) -> Disk:
        """i-th arc of type w on the face, in distance order from w."""
        if i < self.tri_counts[w]:
            return Disk(self.tet, w, i)
        j = i - self.tri_counts[w]
        assert self.quad_type is not None and j < self.quad_count
        if w in NEAR_PAIR[self.quad_type]:
            return Disk(self.tet, 4 + self.quad_type, j)
        return Disk(self.tet, 4 + self.quad_type, self.quad_count - 1 - j)

    def for_strip(self, face: int, w: int, j: int) -> Region:
        """Region meeting the hexagon strip between arcs j-1 and j of the
        w family (strip 0 touches the link edge at w)."""
        disk = self._disk_at_arc(face, w, j)
        return self.for_disk_side(disk, arc_toward_side(disk, face))

    def for_central_piece(self, face: int) -> Region:
        if self.quad_count == 0:
            return self.region(("core",))
        side = 1 if face in NEAR_PAIR[self.quad_type] else 0
        return self.region(("wedge", side))

    def edge_stack(self, u: int, v: int) -> List[Disk]:
        """Disks with a corner on edge uv, ordered from the u end."""
        stack = [Disk(self.tet, u, i) for i in range(self.tri_counts[u])]
        k, m = self.quad_type, self.quad_count
        if m and QUAD_SEP[(u, v)] != k:
            if u in NEAR_PAIR[k]:
                stack.extend(Disk(self.tet, 4 + k, j) for j in range(m))
            else:
                stack.extend(Disk(self.tet, 4 + k, j) for j in reversed(range(m)))
        stack.extend(
            Disk(self.tet, v, i) for i in reversed(range(self.tri_counts[v]))
        )
        return stack

    def _side_toward(self, disk: Disk, u: int) -> int:
        if not disk.is_quad:
            return 0 if disk.kind == u else 1
        return 0 if u in NEAR_PAIR[disk.kind - 4] else 1

    def for_edge_segment(self, u: int, v: int, i: int) -> Region:
        """Region containing the i-th open segment of edge uv (segment 0
        starts at the link triangle of u)."""
        stack = self.edge_stack(u, v)
        if not stack:
            below = self.for_link_triangle(u)
            above = self.for_link_triangle(v)
            assert below == above
            return below
        if i == 0:
            return self.for_disk_side(stack[0], self._side_toward(stack[0], u))
        if i == len(stack):
            return self.for_disk_side(stack[-1], 1 - self._side_toward(stack[-1], u))
        below = self.for_disk_side(stack[i - 1], 1 - self._side_toward(stack[i - 1], u))
        above = self.for_disk_side(stack[i], self._side_toward(stack[i], u))
        assert below == above
        return below


@dataclass(frozen=True)
class CutComponent:
    index: int
    regions: Tuple[RegionId, ...]
    good: bool
    remnants: Tuple[int, ...]
    link_orbits: Tuple[int, ...]

    @property
    def horizontal_boundary_count(self) -> int:
        return len(self.remnants) + len(self.link_orbits)


@dataclass(frozen=True)
class Remnant:
    index: int
    component: int
    good: bool
    sides: Tuple[Tuple[Disk, int], ...]
    bad_sides: Tuple[Tuple[Disk, int], ...]
    euler_char: int

    @property
    def bad_disk_count(self) -> int:
        return len(self.bad_sides)


@dataclass(frozen=True)
class ParallelismFlag:
    kind: str            # "parallel-surfaces" | "vertex-link-parallel"
    component: int
    remnants: Tuple[int, ...]
    link_orbit: Optional[int] = None


@dataclass(frozen=True)
class RemnantSet:
    remnants: Tuple[Remnant, ...]
    g: int
    b: int
    s: int
    q: int
    flags: Tuple[ParallelismFlag, ...]


@dataclass(frozen=True)
class ClaimTwoAudit:
    """Per-bad-remnant bad-disk counts; a count below two is diagnostic
    (the hypotheses behind the bound are input assumptions)."""

    bad_remnant_counts: Tuple[Tuple[int, int], ...]
    violations: Tuple[int, ...]

    @property
    def min_count(self) -> Optional[int]:
        if not self.bad_remnant_counts:
            return None
        return min(count for _idx, count in self.bad_remnant_counts)

    @property
    def passed(self) -> bool:
        return not self.violations


def build_regions(tri: Triangulation, surface: EmbeddedSurface) -> List[TetRegions]:
    return [TetRegions(surface.coords, tet) for tet in range(tri.tet_count)]


def assemble_components(
    tri: Triangulation,
    surface: EmbeddedSurface,
    tables: Sequence[TetRegions],
) -> List[CutComponent]:
    """Glue regions across face orbits and return components (remnant and
    link-orbit attribution is filled in by collect_remnants)."""
    uf = UnionFind()
    for table in tables:
        for region in table.regions:
            uf.find(region.id)
    x = surface.coords
    for a, f, b, f2, p in tri.face_pairs():
        for w in range(4):
            if w == f:
                continue
            n = arc_count(x, a, f, w)
            assert n == arc_count(x, b, f2, p[w])
            for j in range(n):
                uf.union(
                    tables[a].for_strip(f, w, j).id,
                    tables[b].for_strip(f2, p[w], j).id,
                )
        uf.union(
            tables[a].for_central_piece(f).id,
            tables[b].for_central_piece(f2).id,
        )
    components = []
    for i, members in enumerate(uf.classes()):
        good = all(Region(tet, tag).good for tet, tag in members)
        components.append(
            CutComponent(
                index=i,
                regions=tuple(members),
                good=good,
                remnants=(),
                link_orbits=(),
            )
        )
    return components


def _component_lookup(components: Sequence[CutComponent]) -> Dict[RegionId, int]:
    lookup = {}
    for comp in components:
        for rid in comp.regions:
            lookup[rid] = comp.index
    return lookup


def collect_remnants(
    tri: Triangulation,
    skel: SkeletonIndex,
    surface: EmbeddedSurface,
    tables: Sequence[TetRegions],
    components: Sequence[CutComponent],
) -> Tuple[RemnantSet, List[CutComponent]]:
    """Group disk sides into remnants, attribute them and the vertex-link
    spheres to components, and count bad disks.

    Returns the remnant set together with the components updated with
    their remnant / link-sphere boundary lists.
    """
    comp_of_region = _component_lookup(components)

    def comp_of_side(disk: Disk, side: int) -> int:
        return comp_of_region[tables[disk.tet].for_disk_side(disk, side).id]

    # Corner identifications carried to each side of the surface, for the
    # per-remnant Euler characteristic.
    corner_sides = UnionFind()
    for g in surface.arc_gluings:
        for e1, e2 in g.endpoints:
            corner_sides.union((g.disk1, e1, g.toward1), (g.disk2, e2, g.toward2))
            corner_sides.union(
                (g.disk1, e1, 1 - g.toward1), (g.disk2, e2, 1 - g.toward2)
            )

    remnants: List[Remnant] = []
    comp_remnants: Dict[int, List[int]] = {}
    s_total = 0
    q_total = 0
    for idx, side_class in enumerate(surface.side_classes):
        owners = {comp_of_side(d, s) for d, s in side_class}
        assert len(owners) == 1, "remnant touching several cut components"
        owner = owners.pop()
        good = components[owner].good
        bad_sides = tuple(
            (d, s)
            for d, s in side_class
            if not tables[d.tet].for_disk_side(d, s).good
        )
        s_total += sum(1 for d, _s in bad_sides if not d.is_quad)
        q_total += sum(1 for d, _s in bad_sides if d.is_quad)
        n_faces = len(side_class)
        n_edges, rem = divmod(
            sum(len(_disk_cycle(d)) for d, _s in side_class), 2
        )
        assert rem == 0
        corners = {
            corner_sides.find((d, e, s))
            for d, s in side_class
            for pair in _disk_cycle(d).values()
            for e in pair
        }
        remnants.append(
            Remnant(
                index=idx,
                component=owner,
                good=good,
                sides=tuple(side_class),
                bad_sides=bad_sides,
                euler_char=len(corners) - n_edges + n_faces,
            )
        )
        comp_remnants.setdefault(owner, []).append(idx)

    comp_links: Dict[int, List[int]] = {}
    for orbit_idx, orbit in enumerate(skel.vertex_orbits):
        owners = {
            comp_of_region[tables[a].for_link_triangle(v).id] for a, v in orbit
        }
        assert len(owners) == 1, "vertex-link sphere touching several components"
        comp_links.setdefault(owners.pop(), []).append(orbit_idx)

    updated = []
    flags: List[ParallelismFlag] = []
    for comp in components:
        rem_ids = tuple(comp_remnants.get(comp.index, ()))
        link_ids = tuple(comp_links.get(comp.index, ()))
        comp = CutComponent(
            index=comp.index,
            regions=comp.regions,
            good=comp.good,
            remnants=rem_ids,
            link_orbits=link_ids,
        )
        updated.append(comp)
        if comp.good:
            count = comp.horizontal_boundary_count
            assert 1 <= count <= 2, "good component is an I-bundle"
            if len(rem_ids) == 2:
                flags.append(
                    ParallelismFlag(
                        kind="parallel-surfaces",
                        component=comp.index,
                        remnants=rem_ids,
                    )
                )
            elif len(rem_ids) == 1 and len(link_ids) == 1:
                flags.append(
                    ParallelismFlag(
                        kind="vertex-link-parallel",
                        component=comp.index,
                        remnants=rem_ids,
                        link_orbit=link_ids[0],
                    )
                )

    g = sum(1 for r in remnants if r.good)
    b = len(remnants) - g
    remnant_set = RemnantSet(
        remnants=tuple(remnants),
        g=g,
        b=b,
        s=s_total,
        q=q_total,
        flags=tuple(flags),
    )
    return remnant_set, updated


def claim_two_audit(remnant_set: RemnantSet) -> ClaimTwoAudit:
    counts = tuple(
        (r.index, r.bad_disk_count) for r in remnant_set.remnants if not r.good
    )
    violations = tuple(idx for idx, count in counts if count < 2)
    return ClaimTwoAudit(bad_remnant_counts=counts, violations=violations)


def cut_along(tri: Triangulation, skel: SkeletonIndex, surface: EmbeddedSurface):
    """Full pipeline: regions, components, remnants, audit."""
    tables = build_regions(tri, surface)
    components = assemble_components(tri, surface, tables)
    remnant_set, components = collect_remnants(tri, skel, surface, tables, components)
    audit = claim_two_audit(remnant_set)
    return tables, components, remnant_set, audit
