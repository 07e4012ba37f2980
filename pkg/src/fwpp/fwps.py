"""Fake weighted projective plane invariants.

Weights, multiplicity, cyclic quotient singularities of the vertex cones,
the T-singularity criterion, and one-step mutation at the level of weight
triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lattice import (
    FanoTriangle,
    LatticeError,
    Point,
    det,
    is_primitive,
    make_fano_triangle,
    polygon_vertices,
    _egcd,
)


class DegenerateCone(LatticeError):
    pass


class NotDivisible(LatticeError):
    """The pivot weight does not divide the square of the other two's sum,
    so no weight-level mutation exists at this pivot."""


@dataclass(frozen=True)
class QuotientSingularity:
    """A cyclic quotient surface singularity 1/r(1, a), stored with the
    smaller of the two parameters presenting the same unordered type."""

    r: int
    a: int
    raw: tuple[int, int, int]

    @property
    def is_smooth(self) -> bool:
        return self.r == 1

    def __str__(self) -> str:
        if self.is_smooth:
            return "smooth"
        return f"1/{self.r}(1,{self.a})"


@dataclass(frozen=True)
class FwpsInvariants:
    weights: tuple[int, int, int]
    mult: int
    degree: Fraction


def canon_weights(weights) -> tuple[int, int, int]:
    w = tuple(sorted(int(x) for x in weights))
    if len(w) != 3 or w[0] < 1:
        raise ValueError(f"need three positive weights, got {weights!r}")
    return w


def is_well_formed(weights) -> bool:
    """True iff the weights are pairwise coprime."""
    l0, l1, l2 = (int(x) for x in weights)
    return gcd(l0, l1) == gcd(l0, l2) == gcd(l1, l2) == 1


def vertex_weights(P) -> tuple[tuple[int, int, int], int]:
    """Per-vertex weights (in vertex order) and the multiplicity.

    lambda_i is the opposite edge determinant divided by the gcd g of the
    three determinants; g is the index of the vertex-generated sublattice.
    """
    v0, v1, v2 = polygon_vertices(P)
    d0, d1, d2 = det(v1, v2), det(v2, v0), det(v0, v1)
    g = gcd(gcd(d0, d1), d2)
    return (d0 // g, d1 // g, d2 // g), g


def weights_of(P) -> FwpsInvariants:
    """Weights, multiplicity, and degree of the fake weighted projective
    plane defined by the triangle."""
    lams, mult = vertex_weights(P)
    w = canon_weights(lams)
    deg = Fraction(sum(w) ** 2, w[0] * w[1] * w[2] * mult)
    return FwpsInvariants(weights=w, mult=mult, degree=deg)


def _normalize_parameter(r: int, c: int) -> int:
    if r == 1:
        return 0
    c %= r
    return min(c, pow(c, -1, r))


def quotient_singularity(r: int, a: int, b: int) -> QuotientSingularity:
    """The type 1/r(a, b), normalized. Requires an isolated singularity:
    gcd(r, a) = gcd(r, b) = 1 (vacuous for r = 1)."""
    if r < 1:
        raise ValueError("index r must be positive")
    if r > 1 and (gcd(a % r, r) != 1 or gcd(b % r, r) != 1):
        raise ValueError(f"1/{r}({a},{b}) is not isolated")
    if r == 1:
        return QuotientSingularity(r=1, a=0, raw=(r, a, b))
    c = (b * pow(a, -1, r)) % r
    return QuotientSingularity(r=r, a=_normalize_parameter(r, c), raw=(r, a, b))


def cone_singularity(u, v) -> QuotientSingularity:
    """Singularity type of the two-dimensional cone spanned by the primitive
    lattice points u and v."""
    u, v = tuple(u), tuple(v)
    if not (is_primitive(u) and is_primitive(v)):
        raise ValueError("cone generators must be primitive")
    r = abs(det(u, v))
    if r == 0:
        raise DegenerateCone(f"generators {u!r}, {v!r} are parallel")
    # Send u to (1,0); then v = (p, r) and the type is 1/r(-p, 1).
    _, s, t = _egcd(u[0], u[1])
    p = s * v[0] + t * v[1]
    return quotient_singularity(r, (-p) % r if r > 1 else 1, 1)


def is_T_singularity(s: QuotientSingularity) -> bool:
    """T-singularity criterion: r divides (a + b)^2; smooth cones qualify."""
    return (1 + s.a) ** 2 % s.r == 0


def mutate_weights(weights, pivot: int) -> tuple[int, int, int]:
    """One-step mutation of well-formed weights at the given pivot of the
    sorted triple: (li, lj, (li+lj)^2 / lp), sorted."""
    w = canon_weights(weights)
    if not is_well_formed(w):
        raise ValueError(f"weights {w!r} are not well-formed")
    lp = w[pivot]
    li, lj = (w[i] for i in range(3) if i != pivot)
    sq = (li + lj) ** 2
    if sq % lp != 0:
        raise NotDivisible(f"{lp} does not divide ({li}+{lj})^2")
    return tuple(sorted((li, lj, sq // lp)))


def one_step_targets(X) -> list[tuple[int, tuple[int, int, int], bool]]:
    """For each pivot where the divisibility condition holds, the mutated
    weight triple and whether the pivot's cone type 1/lp(li, lj) is a
    T-singularity.

    For mult = 1 this decides geometric existence; for mult > 1 it is only
    a necessary condition and a geometric witness is required.
    """
    weights = X.weights if isinstance(X, FwpsInvariants) else canon_weights(X)
    out = []
    for pivot in range(3):
        try:
            target = mutate_weights(weights, pivot)
        except NotDivisible:
            continue
        lp = weights[pivot]
        li, lj = (weights[i] for i in range(3) if i != pivot)
        t_sing = is_T_singularity(quotient_singularity(lp, li, lj))
        out.append((pivot, target, t_sing))
    return out


def wps_triangle(l0: int, l1: int, l2: int) -> FanoTriangle:
    """A Fano triangle whose spanning fan defines P(l0, l1, l2); requires
    well-formed weights."""
    w = (int(l0), int(l1), int(l2))
    if min(w) < 1 or not is_well_formed(w):
        raise ValueError(f"weights {w!r} must be positive and well-formed")
    l0, l1, l2 = w
    v1: Point = (1, 0)
    c = (-l1 * pow(l2, -1, l0)) % l0 if l0 > 1 else 0
    v2: Point = (c, l0)
    v0: Point = (-(l1 + l2 * c) // l0, -l2)
    return make_fano_triangle(v0, v1, v2)
