"""Exact lattice geometry for two-dimensional Fano polygons.

All arithmetic is over Python ints and fractions.Fraction; there are no
floats anywhere. Points are plain tuples and polygons are tuples of points
in counterclockwise order starting from the lexicographically smallest
vertex, so equality of canonicalized polygons is plain tuple equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, lcm

Point = tuple[int, int]


class LatticeError(ValueError):
    """Base class for errors raised by the lattice-geometry layer."""


class NonPrimitiveVertex(LatticeError):
    pass


class OriginNotInterior(LatticeError):
    pass


class HeightOutOfRange(LatticeError):
    pass


def det(u, v):
    """Determinant of the 2x2 matrix with columns u, v."""
    return u[0] * v[1] - u[1] * v[0]


def is_primitive(p) -> bool:
    """True iff p is a nonzero lattice point with coprime coordinates."""
    x, y = p
    return (x, y) != (0, 0) and gcd(abs(x), abs(y)) == 1


def primitivize(u) -> Point:
    """The primitive lattice point on the ray through u (u may be rational)."""
    x, y = Fraction(u[0]), Fraction(u[1])
    if x == 0 and y == 0:
        raise ValueError("zero vector has no direction")
    m = lcm(x.denominator, y.denominator)
    a, b = int(x * m), int(y * m)
    g = gcd(abs(a), abs(b))
    return (a // g, b // g)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Convex hull (monotone chain), counterclockwise from the lex-min point.

    Works for integer and Fraction coordinates alike; collinear boundary
    points are dropped.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return tuple(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def validate_fano_polygon(vertices) -> None:
    """Raise unless vertices form a CCW convex polygon with primitive
    vertices and the origin strictly interior."""
    k = len(vertices)
    if k < 3:
        raise OriginNotInterior(f"degenerate polygon {vertices!r}")
    for v in vertices:
        if not is_primitive(v):
            raise NonPrimitiveVertex(f"vertex {v!r} is not primitive")
    for i in range(k):
        p, q = vertices[i], vertices[(i + 1) % k]
        if det(p, q) <= 0:
            raise OriginNotInterior(
                f"origin not strictly interior (edge {p!r} -> {q!r})"
            )


@dataclass(frozen=True)
class FanoTriangle:
    """A Fano triangle: primitive vertices, origin strictly interior,
    stored counterclockwise from the lexicographically smallest vertex."""

    vertices: tuple[Point, Point, Point]

    @property
    def v0(self) -> Point:
        return self.vertices[0]

    @property
    def v1(self) -> Point:
        return self.vertices[1]

    @property
    def v2(self) -> Point:
        return self.vertices[2]


@dataclass(frozen=True)
class HeightRange:
    h_min: int
    h_max: int


def canonical_cycle(vertices):
    """Rotate a cyclic vertex list so the lex-min vertex comes first."""
    i = vertices.index(min(vertices))
    return tuple(vertices[i:]) + tuple(vertices[:i])


def make_fano_triangle(v0, v1, v2) -> FanoTriangle:
    vs = [(int(v0[0]), int(v0[1])), (int(v1[0]), int(v1[1])), (int(v2[0]), int(v2[1]))]
    for v in vs:
        if not is_primitive(v):
            raise NonPrimitiveVertex(f"vertex {v!r} is not primitive")
    if det(vs[0], vs[1]) < 0:
        vs = [vs[0], vs[2], vs[1]]
    verts = tuple(vs)
    validate_fano_polygon(verts)
    return FanoTriangle(canonical_cycle(verts))


def polygon_vertices(P):
    """Vertex tuple of a FanoTriangle or a bare vertex sequence."""
    if isinstance(P, FanoTriangle):
        return P.vertices
    return tuple(tuple(v) for v in P)


def dual_polygon(P):
    """Vertices of the dual polygon {u : u(v) >= -1 for all v in P}.

    One rational vertex per edge of P; accepts integer or rational input,
    so applying it twice recovers the original vertex set.
    """
    vs = polygon_vertices(P)
    k = len(vs)
    duals = []
    for i in range(k):
        p, q = vs[i], vs[(i + 1) % k]
        d = Fraction(det(p, q))
        duals.append((Fraction(p[1] - q[1]) / d, Fraction(q[0] - p[0]) / d))
    return convex_hull(duals)


def pairing(w, v):
    """Evaluate the dual vector w on the point v."""
    return w[0] * v[0] + w[1] * v[1]


def height_range(P, w) -> HeightRange:
    vs = polygon_vertices(P)
    hs = [pairing(w, v) for v in vs]
    return HeightRange(min(hs), max(hs))


def width_transform(w):
    """Unimodular change of basis U (and its inverse) with second row w,
    so that heights w(v) become plain y-coordinates."""
    a, b = w
    g, s, t = _egcd(a, b)
    if g != 1:
        raise ValueError(f"width vector {w!r} must be primitive")
    U = ((t, -s), (a, b))
    Uinv = ((b, s), (-a, t))
    return U, Uinv


def apply_matrix(U, p):
    return (U[0][0] * p[0] + U[0][1] * p[1], U[1][0] * p[0] + U[1][1] * p[1])


def slice_x_interval(norm_vertices, h):
    """Exact x-interval cut out of a convex polygon by the line y = h,
    or None when the line misses the polygon. Vertices may be rational."""
    xs = []
    k = len(norm_vertices)
    for i in range(k):
        p, q = norm_vertices[i], norm_vertices[(i + 1) % k]
        if p[1] == h:
            xs.append(Fraction(p[0]))
        lo, hi = min(p[1], q[1]), max(p[1], q[1])
        if lo < h < hi:
            t = Fraction(h - p[1], q[1] - p[1])
            xs.append(p[0] + t * (q[0] - p[0]))
    if not xs:
        return None
    return min(xs), max(xs)


def lattice_slice_interval(norm_vertices, h):
    """Integer x-range [a, b] of lattice points at height h, or None."""
    iv = slice_x_interval(norm_vertices, h)
    if iv is None:
        return None
    a, b = ceil(iv[0]), floor(iv[1])
    if a > b:
        return None
    return a, b


def height_slice(P, w, h: int):
    """Endpoints of the convex hull of lattice points of P at height h.

    Returns a (point, point) pair (equal for a single point) or None when
    the slice contains no lattice points.
    """
    vs = polygon_vertices(P)
    hr = height_range(vs, w)
    if not (hr.h_min <= h <= hr.h_max):
        raise HeightOutOfRange(f"height {h} outside [{hr.h_min}, {hr.h_max}]")
    U, Uinv = width_transform(w)
    nvs = [apply_matrix(U, v) for v in vs]
    iv = lattice_slice_interval(nvs, h)
    if iv is None:
        return None
    a, b = iv
    return apply_matrix(Uinv, (a, h)), apply_matrix(Uinv, (b, h))


def degree(P) -> Fraction:
    """Anticanonical degree of the spanning-fan toric surface: twice the
    Euclidean area of the dual polygon, as an exact rational."""
    dual = dual_polygon(P)
    k = len(dual)
    total = Fraction(0)
    for i in range(k):
        total += det(dual[i], dual[(i + 1) % k])
    return total


def edge_lattice_length(a, b) -> int:
    """Number of lattice points on the segment [a, b] minus one."""
    if tuple(a) == tuple(b):
        raise ValueError("endpoints must differ")
    return gcd(abs(a[0] - b[0]), abs(a[1] - b[1]))


# --- JSON wire format -------------------------------------------------------
#
# Triangles and polygons travel as {"vertices": [[x, y], ...]} with each
# coordinate a decimal string, so arbitrary-precision integers survive
# consumers that parse JSON numbers as 64-bit.

def polygon_to_obj(vertices) -> dict:
    return {"vertices": [[str(x), str(y)] for x, y in polygon_vertices(vertices)]}


def polygon_from_obj(obj) -> tuple[Point, ...]:
    verts = obj["vertices"]
    return tuple((int(x), int(y)) for x, y in verts)


def triangle_to_json(P) -> str:
    return json.dumps(polygon_to_obj(P), sort_keys=True)


def triangle_from_json(text: str) -> FanoTriangle:
    vs = polygon_from_obj(json.loads(text))
    if len(vs) != 3:
        raise ValueError(f"expected 3 vertices, got {len(vs)}")
    return make_fano_triangle(*vs)
