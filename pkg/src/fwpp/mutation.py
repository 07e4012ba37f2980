"""Combinatorial mutations of two-dimensional Fano polygons.

The engine works in a normalized coordinate system where the chosen width
vector becomes (0, 1): heights are then y-coordinates, factors are
horizontal segments, and every slice is an integer x-interval. Results are
mapped back through the inverse basis change.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import (
    LatticeError,
    Point,
    apply_matrix,
    convex_hull,
    dual_polygon,
    is_primitive,
    lattice_slice_interval,
    pairing,
    polygon_vertices,
    primitivize,
    validate_fano_polygon,
    width_transform,
    _egcd,
)


class InvalidMutationData(LatticeError):
    pass


class InvalidFactor(LatticeError):
    pass


@dataclass(frozen=True)
class Factor:
    """The data of one mutation: width vector w and the lattice segment
    conv{0, length*f} at height zero (w(f) = 0, f primitive)."""

    w: Point
    f: Point
    length: int

    def __post_init__(self):
        if not is_primitive(self.w):
            raise InvalidFactor(f"width {self.w!r} must be primitive")
        if not is_primitive(self.f):
            raise InvalidFactor(f"direction {self.f!r} must be primitive")
        if pairing(self.w, self.f) != 0:
            raise InvalidFactor("factor direction must lie at height zero")
        if self.length < 1:
            raise InvalidFactor("factor length must be >= 1")

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return (0, 0), (self.length * self.f[0], self.length * self.f[1])

    def inverse(self) -> "Factor":
        return Factor(w=(-self.w[0], -self.w[1]), f=self.f, length=self.length)


@dataclass(frozen=True)
class MutationData:
    """A factor together with an explicit choice of segments {G_h}.

    g_segments maps each height h in [h_min, -1] to a lattice segment
    (pair of endpoints) or None for the empty choice.
    """

    source: tuple[Point, ...]
    factor: Factor
    g_segments: dict = field(hash=False)


def admissible_widths(P):
    """Primitive generators of the rays through the dual polygon's vertices;
    these are exactly the widths admitting a nontrivial factor in 2D."""
    return sorted(set(primitivize(u) for u in dual_polygon(P)))


def _normalized_setup(vertices, w):
    U, Uinv = width_transform(w)
    nvs = [apply_matrix(U, v) for v in vertices]
    hs = [v[1] for v in nvs]
    return U, Uinv, nvs, min(hs), max(hs)


def _g_interval(slice_iv, need, direction):
    """Maximal Minkowski difference of an integer interval by the shifted
    factor interval; None when empty."""
    if slice_iv is None:
        return None
    a, b = slice_iv
    if b - a < need:
        return None
    if direction == 1:
        return a, b - need
    return a + need, b


def find_factors(P, w):
    """All factors of P with respect to w, paired with the maximal valid
    {G_h} segments (in original coordinates). Empty when no factor exists."""
    vs = polygon_vertices(P)
    U, Uinv, nvs, h_min, h_max = _normalized_setup(vs, w)
    if h_min >= 0:
        return []
    slices = {h: lattice_slice_interval(nvs, h) for h in range(h_min, 0)}
    vertex_heights = {}
    for v in nvs:
        if v[1] < 0:
            vertex_heights.setdefault(v[1], []).append(v[0])

    # Heights carrying vertices bound the feasible factor length.
    l_max = None
    for h, xs in vertex_heights.items():
        a, b = slices[h]  # vertex heights always hold lattice points
        cap = (b - a) // (-h)
        l_max = cap if l_max is None else min(l_max, cap)
    if not l_max:
        return []

    results = []
    for direction in (1, -1):
        f = apply_matrix(Uinv, (direction, 0))
        for length in range(1, l_max + 1):
            g_segments = {}
            feasible = True
            for h in range(h_min, 0):
                need = (-h) * length
                g = _g_interval(slices[h], need, direction)
                if g is None and h in vertex_heights:
                    feasible = False
                    break
                if g is None:
                    g_segments[h] = None
                else:
                    g_segments[h] = (
                        apply_matrix(Uinv, (g[0], h)),
                        apply_matrix(Uinv, (g[1], h)),
                    )
            if feasible:
                results.append((Factor(w=w, f=f, length=length), g_segments))
    return results


def _check_g_segment(seg, h, slice_iv, need, direction, vertex_xs, U):
    """Validate a caller-supplied G_h against the inclusion condition
    vertices <= G_h + (-h)F <= w_h(P); returns the integer interval."""
    if seg is None:
        if vertex_xs:
            raise InvalidMutationData(f"empty G at height {h} excludes vertices")
        return None
    p, q = (apply_matrix(U, seg[0]), apply_matrix(U, seg[1]))
    if p[1] != h or q[1] != h:
        raise InvalidMutationData(f"G segment not at height {h}")
    ga, gb = min(p[0], q[0]), max(p[0], q[0])
    if direction == 1:
        lo, hi = ga, gb + need
    else:
        lo, hi = ga - need, gb
    if slice_iv is None or lo < slice_iv[0] or hi > slice_iv[1]:
        raise InvalidMutationData(f"G + (-h)F not contained in slice at {h}")
    for x in vertex_xs:
        if not (lo <= x <= hi):
            raise InvalidMutationData(f"vertex at height {h} not covered")
    return ga, gb


def _mutate_core(vertices, factor, g_segments=None):
    vs = polygon_vertices(vertices)
    U, Uinv, nvs, h_min, h_max = _normalized_setup(vs, factor.w)
    fn = apply_matrix(U, factor.f)
    direction = fn[0]
    if fn[1] != 0 or abs(direction) != 1:
        raise InvalidMutationData("factor direction not at height zero")
    length = factor.length
    vertex_heights = {}
    for v in nvs:
        if v[1] < 0:
            vertex_heights.setdefault(v[1], []).append(v[0])

    points = []
    for h in range(h_min, 0):
        need = (-h) * length
        slice_iv = lattice_slice_interval(nvs, h)
        if g_segments is not None:
            g = _check_g_segment(
                g_segments.get(h), h, slice_iv, need, direction,
                vertex_heights.get(h, []), U,
            )
        else:
            g = _g_interval(slice_iv, need, direction)
            if g is None and h in vertex_heights:
                raise InvalidMutationData(
                    f"no valid G at height {h} for length {length}"
                )
        if g is not None:
            points.append((g[0], h))
            points.append((g[1], h))
    for h in range(0, h_max + 1):
        slice_iv = lattice_slice_interval(nvs, h)
        if slice_iv is None:
            continue
        a, b = slice_iv
        shift = h * length
        if direction == 1:
            points.append((a, h))
            points.append((b + shift, h))
        else:
            points.append((a - shift, h))
            points.append((b, h))

    hull = convex_hull(points)
    out = convex_hull([apply_matrix(Uinv, p) for p in hull])
    validate_fano_polygon(out)
    return out


def mutate(P, data: MutationData):
    """Combinatorial mutation of P by the given factor and {G_h} choice."""
    vs = polygon_vertices(P)
    if convex_hull(vs) != convex_hull(data.source):
        raise InvalidMutationData("mutation data built for a different polygon")
    return _mutate_core(vs, data.factor, data.g_segments)


def mutate_with(P, factor: Factor):
    """Mutation using the maximal (deterministic) choice of {G_h}."""
    return _mutate_core(P, factor)


def apply_dual_map(P, factor: Factor):
    """Image of the dual polygon under the piecewise linear map induced by
    the factor; equals the dual of the mutated polygon."""
    try:
        _mutate_core(P, factor)
    except InvalidMutationData as exc:
        raise InvalidFactor(str(exc)) from exc
    dual = dual_polygon(P)
    f, w, length = factor.f, factor.w, factor.length
    pts = list(dual)
    k = len(dual)
    for i in range(k):
        u, v = dual[i], dual[(i + 1) % k]
        su, sv = pairing(u, f), pairing(v, f)
        if (su < 0 < sv) or (sv < 0 < su):
            t = Fraction(su, su - sv)
            pts.append((u[0] + t * (v[0] - u[0]), u[1] + t * (v[1] - u[1])))
    images = []
    for u in pts:
        uf = pairing(u, f)
        if uf >= 0:
            images.append((Fraction(u[0]), Fraction(u[1])))
        else:
            images.append((u[0] - length * uf * w[0], u[1] - length * uf * w[1]))
    return convex_hull(images)


# --- unimodular equivalence -------------------------------------------------

def _left_hnf(cols):
    """Canonical representative of {U @ M : U in GL(2, Z)} for a rank-2
    integer matrix given by its columns."""
    cols = [tuple(c) for c in cols]
    j0 = next(j for j, c in enumerate(cols) if c != (0, 0))
    a, b = cols[j0]
    g, s, t = _egcd(a, b)
    u, v = -b // g, a // g  # second row of the Bezout matrix
    cols = [(s * x + t * y, u * x + v * y) for x, y in cols]
    j1 = next((j for j, c in enumerate(cols) if c[1] != 0), None)
    if j1 is not None:
        if cols[j1][1] < 0:
            cols = [(x, -y) for x, y in cols]
        q = cols[j1][0] // cols[j1][1]
        if q:
            cols = [(x - q * y, y) for x, y in cols]
    return tuple(cols)


def canonical_form(vertices):
    """Canonical form of a polygon up to unimodular equivalence: the minimum
    left-HNF over all cyclic rotations and both orientations."""
    vs = list(polygon_vertices(vertices))
    k = len(vs)
    best = None
    for seq in (vs, vs[::-1]):
        for r in range(k):
            cand = _left_hnf(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def unimodular_equivalent(A, B) -> bool:
    return canonical_form(A) == canonical_form(B)


def enumerate_one_step(P, triangles_only: bool = False):
    """All one-step mutations of P over admissible widths and factors,
    deduplicated up to unimodular equivalence of the outputs."""
    seen = {}
    for w in admissible_widths(P):
        for factor, g_segments in find_factors(P, w):
            Q = _mutate_core(P, factor, g_segments)
            if triangles_only and len(Q) != 3:
                continue
            key = canonical_form(Q)
            if key not in seen:
                seen[key] = (factor, Q)
    return [seen[k] for k in sorted(seen)]
