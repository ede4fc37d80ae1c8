"""Bounded enumeration of admissible matching vectors, plus the surface
generators used to build test collections (vertex links, Haken sums).

The search fixes a quad profile per tetrahedron first (which quad type, if
any, is allowed to be nonzero - at most 4^t branches), then runs a
depth-first assignment of tetrahedron blocks with every matching equation
checked as soon as both of its tetrahedra are bound.  Profiles that allow a
quad type require at least one such quad, so each vector is produced by
exactly one branch and no deduplication is needed.

The inner loop is the one hot spot of the toolkit, so it lives in a small
compiled kernel (nsk._enumcore, built from Cython) with a pure-Python
fallback of identical semantics; whichever is importable is selected here.
Set NSK_PURE_PYTHON=1 to force the fallback.  benchmarks/bench_enumeration.py
compares the two.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import EnvelopeExceededError
from .skeleton import SkeletonIndex, build_skeleton
from .surfaces import (
    QUAD_SEP,
    Vector,
    euler_characteristic,
    link_combination,
    reconstruct,
)
from .triangulation import Triangulation

MAX_TETS = 3
MAX_CAP = 2

if os.environ.get("NSK_PURE_PYTHON") == "1":
    from . import _enumcore_py as _kernel
else:
    try:
        from . import _enumcore as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _enumcore_py as _kernel


def kernel_name() -> str:
    """Which search kernel is active ("cython" or "python")."""
    return _kernel.KERNEL


@dataclass(frozen=True)
class EnumerationQuery:
    """Search request: cap bounds every coordinate; quad_profile optionally
    restricts each tetrahedron to one allowed quad type (None = no quads);
    the remaining fields are output filters.  exclude_links drops every
    non-negative combination of vertex-link vectors, the empty surface
    included."""

    cap: int
    quad_profile: Optional[Dict[int, Optional[int]]] = None
    connected: bool = False
    orientable: Optional[bool] = None
    exclude_links: bool = False
    chi_range: Tuple[Optional[int], Optional[int]] = (None, None)


def matching_equations(tri: Triangulation) -> List[Tuple[int, int, int, int]]:
    """All matching equations as index quadruples (i1, i2, j1, j2) into the
    7t coordinate vector, meaning x[i1] + x[i2] == x[j1] + x[j2]."""
    eqs = []
    for a, f, b, f2, p in tri.face_pairs():
        for w in range(4):
            if w == f:
                continue
            eqs.append(
                (
                    7 * a + w,
                    7 * a + 4 + QUAD_SEP[(w, f)],
                    7 * b + p[w],
                    7 * b + 4 + QUAD_SEP[(p[w], f2)],
                )
            )
    return eqs


def _grouped_equations(tri: Triangulation):
    """Equations flattened and grouped by the depth (max tetrahedron index)
    at which they become checkable."""
    t = tri.tet_count
    by_depth: List[List[Tuple[int, int, int, int]]] = [[] for _ in range(t)]
    for eq in matching_equations(tri):
        depth = max(idx // 7 for idx in eq)
        by_depth[depth].append(eq)
    flat: List[int] = []
    offsets = [0]
    for group in by_depth:
        for eq in group:
            flat.extend(eq)
        offsets.append(len(flat) // 4)
    return flat, offsets


def _profiles(t: int, quad_profile):
    """Per-tetrahedron (quad_type, min_count) option lists; quad branches
    require count >= 1 so the no-quad branch is never duplicated."""
    options = []
    for tet in range(t):
        if quad_profile is not None and tet in quad_profile:
            allowed = quad_profile[tet]
            if allowed is None:
                options.append([(-1, 0)])
            else:
                if not 0 <= allowed <= 2:
                    raise ValueError(f"quad type {allowed} out of range")
                options.append([(-1, 0), (allowed, 1)])
        else:
            options.append([(-1, 0)] + [(k, 1) for k in range(3)])
    return product(*options)


def enumerate_surfaces(
    tri: Triangulation,
    query: EnumerationQuery,
    skel: Optional[SkeletonIndex] = None,
) -> List[Vector]:
    """All admissible matching vectors with entries <= cap satisfying the
    query filters, sorted lexicographically."""
    t = tri.tet_count
    if query.cap < 0:
        raise ValueError("cap must be non-negative")
    if t > MAX_TETS or query.cap > MAX_CAP:
        estimate = float(query.cap + 1) ** (7 * t)
        raise EnvelopeExceededError(
            f"enumeration supports t <= {MAX_TETS}, cap <= {MAX_CAP}; "
            f"this request scans on the order of (cap+1)^(7t) = {estimate:.3g} vectors"
        )
    flat, offsets = _grouped_equations(tri)
    results: List[Vector] = []
    for profile in _profiles(t, query.quad_profile):
        quad_types = [qt for qt, _ in profile]
        quad_mins = [qm for _, qm in profile]
        results.extend(
            _kernel.enumerate_profile(t, query.cap, flat, offsets, quad_types, quad_mins)
        )
    results.sort()

    need_skel = (
        query.connected
        or query.orientable is not None
        or query.exclude_links
        or query.chi_range != (None, None)
    )
    if not need_skel:
        return results
    if skel is None:
        skel = build_skeleton(tri)

    lo, hi = query.chi_range
    filtered = []
    for vec in results:
        if query.exclude_links and link_combination(skel, vec) is not None:
            continue
        if lo is not None or hi is not None:
            chi = euler_characteristic(tri, vec, skel)
            if lo is not None and chi < lo:
                continue
            if hi is not None and chi > hi:
                continue
        if query.connected or query.orientable is not None:
            surface = reconstruct(tri, vec, skel)
            if query.connected and len(surface.components) != 1:
                continue
            if query.orientable is not None:
                if not all(
                    c.orientable == query.orientable for c in surface.components
                ):
                    continue
        filtered.append(vec)
    return filtered
