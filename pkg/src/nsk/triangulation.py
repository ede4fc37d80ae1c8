"""Closed pseudo-triangulations given as face-gluing tables.

A triangulation is a list of tetrahedra 0..t-1, each with four faces; face f
of a tetrahedron is the face opposite vertex f.  A gluing record for face f
of tetrahedron a is a pair (b, p) where p is a permutation of {0,1,2,3}
mapping the vertex labels of a to those of b; face f of a is glued onto face
p[f] of b.  Every face must be glued (closed manifolds only) and the records
must form an involution: the record at face p[f] of b is (a, p^-1).

The text format (.tri) is line oriented:

    % optional comments
    tets N
    j:abcd j:abcd j:abcd j:abcd     (one line per tetrahedron, faces 0..3)

where j is the target tetrahedron and abcd is the permutation as a digit
string (the images of vertices 0,1,2,3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .errors import GluingError, TriParseError
from .util import Perm, perm_inverse, perm_is_valid

Gluing = Tuple[int, Perm]


@dataclass(frozen=True)
class Triangulation:
    """Immutable face-gluing table. gluings[a][f] = (b, p) as above."""

    gluings: Tuple[Tuple[Gluing, ...], ...]

    @property
    def tet_count(self) -> int:
        return len(self.gluings)

    def gluing(self, tet: int, face: int) -> Gluing:
        return self.gluings[tet][face]

    def face_pairs(self) -> List[Tuple[int, int, int, int, Perm]]:
        """One entry (a, f, b, f2, p) per face orbit, with (a, f) the
        lexicographically smaller side."""
        pairs = []
        seen = set()
        for a, row in enumerate(self.gluings):
            for f, (b, p) in enumerate(row):
                if (a, f) in seen:
                    continue
                f2 = p[f]
                seen.add((a, f))
                seen.add((b, f2))
                pairs.append((a, f, b, f2, p))
        return pairs


def make_triangulation(gluings) -> Triangulation:
    """Build and structurally validate a Triangulation from nested lists.

    Checks index ranges, permutation validity, the involution condition and
    that no face is glued to itself.  Vertex-link (manifold) conditions are
    checked later by build_skeleton.
    """
    t = len(gluings)
    if t == 0:
        raise GluingError("empty triangulation (no tetrahedra)")
    table = []
    for a, row in enumerate(gluings):
        if len(row) != 4:
            raise GluingError(f"tetrahedron {a}: expected 4 face records, got {len(row)}")
        fixed = []
        for f, rec in enumerate(row):
            if rec is None:
                raise GluingError(f"tetrahedron {a} face {f} is unglued (boundary not supported)")
            b, p = rec
            if not 0 <= b < t:
                raise GluingError(f"tetrahedron {a} face {f}: target tetrahedron {b} out of range")
            p = tuple(p)
            if not perm_is_valid(p):
                raise GluingError(f"tetrahedron {a} face {f}: {p} is not a permutation of 0123")
            fixed.append((b, p))
        table.append(tuple(fixed))
    for a in range(t):
        for f in range(4):
            b, p = table[a][f]
            f2 = p[f]
            if b == a and f2 == f:
                raise GluingError(f"tetrahedron {a} face {f} is glued to itself")
            back_b, back_p = table[b][f2]
            if back_b != a or back_p != perm_inverse(p):
                raise GluingError(
                    f"involution violated: tet {a} face {f} -> tet {b} face {f2}, "
                    f"but tet {b} face {f2} -> tet {back_b} via {''.join(map(str, back_p))}"
                )
    return Triangulation(tuple(table))


def parse_triangulation(text: str) -> Triangulation:
    """Parse .tri file contents into a validated Triangulation."""
    tet_count = None
    rows = []
    row_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if tet_count is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "tets":
                raise TriParseError("expected header 'tets N'", lineno)
            try:
                tet_count = int(parts[1])
            except ValueError:
                raise TriParseError(f"bad tetrahedron count {parts[1]!r}", lineno) from None
            if tet_count <= 0:
                raise TriParseError("tetrahedron count must be positive", lineno)
            continue
        if len(rows) >= tet_count:
            raise TriParseError("more data lines than declared tetrahedra", lineno)
        records = line.split()
        if len(records) != 4:
            raise TriParseError(f"expected 4 face records, got {len(records)}", lineno)
        row = []
        for f, rec in enumerate(records):
            target, _, perm = rec.partition(":")
            if not perm:
                raise TriParseError(f"face {f}: record {rec!r} is not of the form j:abcd", lineno)
            try:
                b = int(target)
            except ValueError:
                raise TriParseError(f"face {f}: bad tetrahedron index {target!r}", lineno) from None
            if len(perm) != 4 or not perm.isdigit():
                raise TriParseError(f"face {f}: bad permutation {perm!r}", lineno)
            p = tuple(int(c) for c in perm)
            if not perm_is_valid(p):
                raise TriParseError(f"face {f}: {perm!r} is not a permutation of 0123", lineno)
            row.append((b, p))
        rows.append(row)
        row_lines.append(lineno)
    if tet_count is None:
        raise TriParseError("missing 'tets N' header")
    if len(rows) < tet_count:
        raise TriParseError(f"expected {tet_count} tetrahedron lines, got {len(rows)}")
    try:
        return make_triangulation(rows)
    except GluingError:
        raise


def serialize_triangulation(tri: Triangulation) -> str:
    """Inverse of parse_triangulation (up to comments and whitespace)."""
    lines = [f"tets {tri.tet_count}"]
    for row in tri.gluings:
        lines.append(" ".join(f"{b}:{''.join(map(str, p))}" for b, p in row))
    return "\n".join(lines) + "\n"


def load_triangulation(path) -> Triangulation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_triangulation(fh.read())
