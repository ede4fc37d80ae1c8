"""The finiteness certificate: one report per (triangulation, collection).

certify() runs the whole pipeline - skeleton, Z2 homology, embedded
reconstruction, cut complex, remnant accounting - and evaluates the
inequality ledger

    2k = g + b        g <= rankH1        rankH1 <= t + 1     2b <= s + q
    s <= 4t           q <= 2t            2k <= 4t + 1        k <= 2t

The first, third, fifth and sixth lines hold for every valid input and are
reported as pass/fail; the others encode the twisted-I-bundle and
bad-disk-pairing arguments, which are valid only under hypotheses this
toolkit cannot verify (essential, non-parallel, least-weight input), so a
failing one marks the input as violating hypotheses rather than the
arithmetic as wrong.  Multiple input vectors are cut simultaneously: their
sum must be admissible and the cut runs along the sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from .cut import cut_along
from .errors import CoordinateError, NskError
from .homology import h1_z2_rank, spanning_tree_bound
from .skeleton import SkeletonIndex, build_skeleton
from .surfaces import check_matching, haken_sum, reconstruct, weight
from .triangulation import Triangulation

ASSUMPTIONS = (
    "essentiality of the input surfaces is assumed, not verified",
    "least-weight position of the input surfaces is assumed, not verified",
    "non-parallelism is only checked structurally (product components are flagged)",
)


@dataclass(frozen=True)
class LedgerLine:
    name: str
    conditional: bool
    holds: bool
    detail: str

    @property
    def status(self) -> str:
        if self.holds:
            return "pass"
        return "conditional" if self.conditional else "fail"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "conditional": self.conditional,
            "holds": self.holds,
            "status": self.status,
            "detail": self.detail,
        }

    @staticmethod
    def from_dict(d: dict) -> "LedgerLine":
        return LedgerLine(
            name=d["name"],
            conditional=d["conditional"],
            holds=d["holds"],
            detail=d["detail"],
        )


@dataclass(frozen=True)
class ComponentSummary:
    euler_char: int
    orientable: bool
    vertex_link_orbit: Optional[int]

    def to_dict(self) -> dict:
        return {
            "chi": self.euler_char,
            "orientable": self.orientable,
            "vertexLinkOrbit": self.vertex_link_orbit,
        }

    @staticmethod
    def from_dict(d: dict) -> "ComponentSummary":
        return ComponentSummary(
            euler_char=d["chi"],
            orientable=d["orientable"],
            vertex_link_orbit=d["vertexLinkOrbit"],
        )


@dataclass(frozen=True)
class FinitenessReport:
    t: int
    v: int
    e: int
    e_non_tree: int
    rank_h1: int
    k: int
    g: int
    b: int
    s: int
    q: int
    weight: int
    euler_char: int
    components: Tuple[ComponentSummary, ...]
    ledger: Tuple[LedgerLine, ...]
    flags: Tuple[dict, ...]
    claim_two: dict
    assumptions: Tuple[str, ...]

    @property
    def unconditional_ok(self) -> bool:
        return all(line.holds for line in self.ledger if not line.conditional)

    @property
    def conditional_failures(self) -> Tuple[str, ...]:
        return tuple(
            line.name for line in self.ledger if line.conditional and not line.holds
        )

    @property
    def all_pass(self) -> bool:
        return all(line.holds for line in self.ledger)

    def exit_code(self) -> int:
        if not self.unconditional_ok:
            return 1
        return 2 if self.conditional_failures else 0

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "v": self.v,
            "e": self.e,
            "eN": self.e_non_tree,
            "rankH1Z2": self.rank_h1,
            "k": self.k,
            "g": self.g,
            "b": self.b,
            "s": self.s,
            "q": self.q,
            "weight": self.weight,
            "chi": self.euler_char,
            "components": [c.to_dict() for c in self.components],
            "ledger": [line.to_dict() for line in self.ledger],
            "flags": list(self.flags),
            "claimTwo": self.claim_two,
            "assumptions": list(self.assumptions),
        }

    @staticmethod
    def from_dict(d: dict) -> "FinitenessReport":
        return FinitenessReport(
            t=d["t"],
            v=d["v"],
            e=d["e"],
            e_non_tree=d["eN"],
            rank_h1=d["rankH1Z2"],
            k=d["k"],
            g=d["g"],
            b=d["b"],
            s=d["s"],
            q=d["q"],
            weight=d["weight"],
            euler_char=d["chi"],
            components=tuple(ComponentSummary.from_dict(c) for c in d["components"]),
            ledger=tuple(LedgerLine.from_dict(l) for l in d["ledger"]),
            flags=tuple(d["flags"]),
            claim_two=d["claimTwo"],
            assumptions=tuple(d["assumptions"]),
        )


def _ledger(t, rank_h1, k, g, b, s, q) -> Tuple[LedgerLine, ...]:
    lines = [
        LedgerLine(
            "2k = g + b", False, 2 * k == g + b,
            f"2k = {2 * k}, g + b = {g + b}",
        ),
        LedgerLine(
            "g <= rankH1", True, g <= rank_h1,
            f"g = {g}, rankH1 = {rank_h1}",
        ),
        LedgerLine(
            "rankH1 <= t + 1", False, rank_h1 <= t + 1,
            f"rankH1 = {rank_h1}, t + 1 = {t + 1}",
        ),
        LedgerLine(
            "2b <= s + q", True, 2 * b <= s + q,
            f"2b = {2 * b}, s + q = {s + q}",
        ),
        LedgerLine("s <= 4t", False, s <= 4 * t, f"s = {s}, 4t = {4 * t}"),
        LedgerLine("q <= 2t", False, q <= 2 * t, f"q = {q}, 2t = {2 * t}"),
        LedgerLine(
            "2k <= 4t + 1", True, 2 * k <= 4 * t + 1,
            f"2k = {2 * k}, 4t + 1 = {4 * t + 1}",
        ),
        LedgerLine("k <= 2t", True, k <= 2 * t, f"k = {k}, 2t = {2 * t}"),
    ]
    return tuple(lines)


def certify(
    tri: Triangulation,
    vectors: Sequence[Sequence[int]],
    skel: Optional[SkeletonIndex] = None,
) -> FinitenessReport:
    """Certificate for cutting along the (Haken) sum of the given vectors.

    Raises NskError subclasses for a non-orientable ambient manifold,
    incompatible/inadmissible/non-matching coordinates, or a surface with a
    one-sided (non-orientable) component.
    """
    if skel is None:
        skel = build_skeleton(tri)
    if not skel.orientable:
        raise NskError("the bound requires an orientable manifold")
    if not vectors:
        raise CoordinateError("no surface vectors given")
    if vectors and isinstance(vectors[0], int):
        vectors = [vectors]
    total = reduce(lambda a, b: haken_sum(tri, a, b), vectors)
    ok, violations = check_matching(tri, total)
    if not ok:
        raise CoordinateError(f"matching equations violated: {violations[:3]}")

    surface = reconstruct(tri, total, skel)
    for i, comp in enumerate(surface.components):
        if not comp.two_sided:
            raise NskError(
                f"surface component {i} is one-sided (non-orientable); "
                "the bound counts 2-sided surfaces"
            )

    _tables, _components, remnant_set, audit = cut_along(tri, skel, surface)
    tree = spanning_tree_bound(skel)
    profile = h1_z2_rank(tri, skel)

    k = len(surface.components)
    ledger = _ledger(
        tri.tet_count, profile.rank_h1, k, remnant_set.g, remnant_set.b,
        remnant_set.s, remnant_set.q,
    )
    flags = tuple(
        {
            "kind": flag.kind,
            "component": flag.component,
            "remnants": list(flag.remnants),
            "linkOrbit": flag.link_orbit,
        }
        for flag in remnant_set.flags
    )
    claim_two = {
        "badRemnantCounts": [list(pair) for pair in audit.bad_remnant_counts],
        "violations": list(audit.violations),
        "passed": audit.passed,
    }
    return FinitenessReport(
        t=tri.tet_count,
        v=skel.vertex_count,
        e=skel.edge_count,
        e_non_tree=tree.e_non_tree,
        rank_h1=profile.rank_h1,
        k=k,
        g=remnant_set.g,
        b=remnant_set.b,
        s=remnant_set.s,
        q=remnant_set.q,
        weight=weight(tri, total, skel),
        euler_char=surface.euler_char,
        components=tuple(
            ComponentSummary(
                euler_char=c.euler_char,
                orientable=c.orientable,
                vertex_link_orbit=c.vertex_link_orbit,
            )
            for c in surface.components
        ),
        ledger=ledger,
        flags=flags,
        claim_two=claim_two,
        assumptions=ASSUMPTIONS,
    )
