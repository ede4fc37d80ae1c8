"""Pure-Python search kernel for bounded admissible-vector enumeration.

Reference implementation of the contract shared with the compiled kernel
(nsk._enumcore): depth-first assignment of one tetrahedron block at a time,
with the matching equations whose supports are complete at a given depth
checked before descending.  Equation layout and argument meaning are
described in nsk.enumeration, which is the only caller.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

KERNEL = "python"


def enumerate_profile(
    t: int,
    cap: int,
    equations: Sequence[int],
    offsets: Sequence[int],
    quad_types: Sequence[int],
    quad_mins: Sequence[int],
) -> List[Tuple[int, ...]]:
    x = [0] * (7 * t)
    out: List[Tuple[int, ...]] = []
    values = range(cap + 1)

    def ok(depth: int) -> bool:
        for e in range(offsets[depth], offsets[depth + 1]):
            i = 4 * e
            if (
                x[equations[i]] + x[equations[i + 1]]
                != x[equations[i + 2]] + x[equations[i + 3]]
            ):
                return False
        return True

    def assign(depth: int) -> None:
        if depth == t:
            out.append(tuple(x))
            return
        base = 7 * depth
        qt = quad_types[depth]
        quad_values = (
            (0,) if qt < 0 else tuple(range(quad_mins[depth], cap + 1))
        )
        for t0 in values:
            x[base] = t0
            for t1 in values:
                x[base + 1] = t1
                for t2 in values:
                    x[base + 2] = t2
                    for t3 in values:
                        x[base + 3] = t3
                        for q in quad_values:
                            if qt >= 0:
                                x[base + 4 + qt] = q
                            if ok(depth):
                                assign(depth + 1)
        if qt >= 0:
            x[base + 4 + qt] = 0
        x[base : base + 4] = (0, 0, 0, 0)

    assign(0)
    return out
