"""Exact rational plane geometry kernel.

All predicates work on points given as pairs of ``Fraction`` (or ``int``)
coordinates and never touch floating point, so every comparison made by the
generators is exact.  Degeneracies (collinear overlaps, endpoints in segment
interiors, concurrent crossings) are reported, not resolved.
"""

from __future__ import annotations

import functools
from fractions import Fraction

Point = tuple[Fraction, Fraction]


class DegeneracyError(ValueError):
    """A scene violates a general-position assumption."""


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right, 0 collinear."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def point_in_segment_interior(p: Point, a: Point, b: Point) -> bool:
    if orient(a, b, p) != 0:
        return False
    lo, hi = (a, b) if (a[0], a[1]) <= (b[0], b[1]) else (b, a)
    return (lo[0], lo[1]) < (p[0], p[1]) < (hi[0], hi[1])


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Proper (interior, transversal) crossing of segments ab and cd.

    Raises DegeneracyError for collinear overlaps or endpoint-interior
    incidences between distinct segments; shared endpoints are fine.
    """
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 == 0 and o2 == 0:
        lo1, hi1 = min(a[0], b[0]), max(a[0], b[0])
        lo2, hi2 = min(c[0], d[0]), max(c[0], d[0])
        ly1, hy1 = min(a[1], b[1]), max(a[1], b[1])
        ly2, hy2 = min(c[1], d[1]), max(c[1], d[1])
        if max(lo1, lo2) < min(hi1, hi2) or max(ly1, ly2) < min(hy1, hy2):
            raise DegeneracyError("collinear overlapping segments")
        return False
    for p, o in ((c, o1), (d, o2)):
        if o == 0 and point_in_segment_interior(p, a, b):
            raise DegeneracyError("segment endpoint inside another segment")
    for p, o in ((a, o3), (b, o4)):
        if o == 0 and point_in_segment_interior(p, c, d):
            raise DegeneracyError("segment endpoint inside another segment")
    return o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4)


def cross_point(a: Point, b: Point, c: Point, d: Point) -> Point:
    """Intersection point of the supporting lines of ab and cd (must not be parallel)."""
    d1 = (b[0] - a[0], b[1] - a[1])
    d2 = (d[0] - c[0], d[1] - c[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if den == 0:
        raise DegeneracyError("parallel segments have no crossing point")
    t = Fraction((c[0] - a[0]) * d2[1] - (c[1] - a[1]) * d2[0], den)
    return (a[0] + t * d1[0], a[1] + t * d1[1])


def segment_param(p: Point, a: Point, b: Point) -> Fraction:
    """Parameter t in [0,1] with p = a + t*(b-a) for p on line ab."""
    if b[0] != a[0]:
        return Fraction(p[0] - a[0], b[0] - a[0])
    return Fraction(p[1] - a[1], b[1] - a[1])


def _angle_cmp(u: tuple[Fraction, Fraction], v: tuple[Fraction, Fraction]) -> int:
    """Counterclockwise comparison of direction vectors, starting at +x axis."""

    def half(w):
        if w[1] > 0 or (w[1] == 0 and w[0] > 0):
            return 0
        return 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    cr = u[0] * v[1] - u[1] * v[0]
    if cr == 0:
        raise DegeneracyError("equal-direction germs at a vertex")
    return -1 if cr > 0 else 1


def sort_ccw(vectors: list[tuple[Fraction, Fraction]]) -> list[int]:
    """Indices of `vectors` sorted counterclockwise from the +x axis."""
    idx = list(range(len(vectors)))
    idx.sort(key=functools.cmp_to_key(lambda i, j: _angle_cmp(vectors[i], vectors[j])))
    return idx


def ray_hits_segment(origin: Point, direction: tuple[Fraction, Fraction],
                     a: Point, b: Point) -> bool:
    """True iff the open ray origin + t*direction (t>0) crosses the open segment ab."""
    tip = (origin[0] + direction[0], origin[1] + direction[1])
    oa, ob = orient(origin, tip, a), orient(origin, tip, b)
    if oa == 0 or ob == 0 or oa == ob:
        return False
    # segment straddles the ray's line; crossing lies on the forward side?
    o = orient(a, b, origin)
    ot = orient(a, b, tip)
    if o == 0 or o == ot:
        # origin on segment line, or direction tip on same side as origin: walk further
        if o == 0:
            return False
        # tip may be too short; use the signed comparison via cross products
    # solve: crossing parameter s along the ray has sign of (a-origin) x (b-a) ... use
    # exact: point = line intersection, then check t > 0.
    p = cross_point(origin, tip, a, b)
    dx, dy = direction
    if dx != 0:
        t = Fraction(p[0] - origin[0], dx)
    else:
        t = Fraction(p[1] - origin[1], dy)
    return t > 0
