"""Markov-type Diophantine equations attached to weight triples.

Square-free decompositions, equation derivation, solution mutation, the
height order on weights, descent to minimal weights, and mutation trees
with DOT/JSON export.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from sympy import factorint

from .fwps import NotDivisible, canon_weights, is_well_formed, mutate_weights


class NonIntegral(ValueError):
    """The solution transformation leaves the positive integers, so there is
    no weight-level mutation at this pivot."""


@dataclass(frozen=True)
class SquareFreeDecomposition:
    c: int  # square-free part
    a: int  # n == c * a**2


@dataclass(frozen=True)
class DiophantineEquation:
    """m x0 x1 x2 = k (c0 x0^2 + c1 x1^2 + c2 x2^2), with square-free r such
    that m^2 / (r k^2) is the degree of the generating weighted plane."""

    m: int
    k: int
    c: tuple[int, int, int]
    r: int

    def __str__(self) -> str:
        def term(ci, i):
            return f"{ci}*x{i}^2" if ci != 1 else f"x{i}^2"

        rhs = " + ".join(term(ci, i) for i, ci in enumerate(self.c))
        lhs = f"{self.m}*x0*x1*x2" if self.m != 1 else "x0*x1*x2"
        if self.k != 1:
            rhs = f"{self.k}*({rhs})"
        return f"{lhs} = {rhs}"


@dataclass(frozen=True)
class GeneralDerivation:
    """Bookkeeping of the general (not necessarily well-formed) derivation;
    d = S = T = 1 for well-formed weights and g is square-free."""

    d: int
    S: int
    T: int
    g: int


def square_free_decompose(n: int) -> SquareFreeDecomposition:
    """Unique (c, a) with n = c * a^2 and c square-free."""
    if n < 1:
        raise ValueError("n must be positive")
    c = 1
    for p, e in factorint(n).items():
        if e % 2:
            c *= p
    return SquareFreeDecomposition(c=c, a=isqrt(n // c))


def derive_equation(weights):
    """Equation, solution, and derivation data for a positive weight triple.

    The order of the input weights is preserved in the coefficients c_i and
    in the solution, so callers can keep the labelling of their plane.
    """
    lams = tuple(int(x) for x in weights)
    if len(lams) != 3 or min(lams) < 1:
        raise ValueError(f"need three positive weights, got {weights!r}")
    d = gcd(gcd(lams[0], lams[1]), lams[2])
    decs = [square_free_decompose(l // d) for l in lams]
    c = tuple(dec.c for dec in decs)
    a = tuple(dec.a for dec in decs)

    q = Fraction(sum(lams) ** 2, lams[0] * lams[1] * lams[2])
    num = square_free_decompose(q.numerator)
    den = square_free_decompose(q.denominator)
    m, k, r = num.a * num.c, den.a, num.c * den.c

    prod_c = square_free_decompose(c[0] * c[1] * c[2])
    dr = square_free_decompose(d * r)
    assert prod_c.c == dr.c  # the lemma's square-free parts agree
    derivation = GeneralDerivation(d=d, S=prod_c.a, T=dr.a, g=prod_c.c)

    eq = DiophantineEquation(m=m, k=k, c=c, r=r)
    solution = tuple(d * ai for ai in a)
    return eq, solution, derivation


def verify_solution(eq: DiophantineEquation, s) -> bool:
    x0, x1, x2 = (int(x) for x in s)
    c0, c1, c2 = eq.c
    return eq.m * x0 * x1 * x2 == eq.k * (c0 * x0**2 + c1 * x1**2 + c2 * x2**2)


def mutate_solution(eq: DiophantineEquation, s, pivot: int):
    """(a0,a1,a2) -> ((m/k) ai aj / cp - ap, ...) at the pivot index;
    raises NonIntegral when the image is not a positive integer."""
    s = tuple(int(x) for x in s)
    ai, aj = (s[i] for i in range(3) if i != pivot)
    new = Fraction(eq.m, eq.k) * ai * aj / eq.c[pivot] - s[pivot]
    if new.denominator != 1 or new <= 0:
        raise NonIntegral(
            f"pivot {pivot} transform of {s} gives {new}, not a positive integer"
        )
    out = list(s)
    out[pivot] = int(new)
    return tuple(out)


def height(weights) -> int:
    """Height of a weight triple: the sum of the weights."""
    return sum(int(x) for x in weights)


def _decreasing_mutations(w):
    """Distinct strictly height-decreasing weight mutations of w, as a list
    of (pivot, target); by the descent lemma there is at most one target."""
    h = height(w)
    out = {}
    for pivot in range(3):
        try:
            target = mutate_weights(w, pivot)
        except NotDivisible:
            continue
        if height(target) < h:
            out.setdefault(target, pivot)
    return [(pivot, target) for target, pivot in out.items()]


def descend_to_minimal(weights):
    """Path of weight triples from the input down to the minimal weights of
    its mutation component (heights strictly decreasing)."""
    w = canon_weights(weights)
    if not is_well_formed(w):
        raise ValueError(f"weights {w!r} are not well-formed")
    path = [w]
    while True:
        steps = _decreasing_mutations(path[-1])
        if not steps:
            return path
        assert len(steps) == 1, "descent lemma violated"
        path.append(steps[0][1])


@dataclass
class TreeNode:
    weights: tuple[int, int, int]
    height: int
    depth: int
    parent: int | None = None
    pivot: int | None = None  # pivot in the parent's sorted triple
    children: list[int] = field(default_factory=list)
    truncated: bool = False


@dataclass
class MutationTree:
    """Directed tree of weight triples ordered by height, rooted at the
    minimal weights of the component."""

    nodes: list[TreeNode]

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def weight_set(self):
        return {n.weights for n in self.nodes}


def build_mutation_tree(weights, max_depth=None, max_height=None) -> MutationTree:
    """Descend to the minimal root, then expand all height-increasing weight
    mutations breadth-first until a bound is hit (truncated nodes flagged)."""
    if max_depth is None and max_height is None:
        raise ValueError("need max_depth and/or max_height")
    root_w = descend_to_minimal(weights)[-1]
    nodes = [TreeNode(weights=root_w, height=height(root_w), depth=0)]
    seen = {root_w}
    queue = [0]
    while queue:
        idx = queue.pop(0)
        node = nodes[idx]
        if max_depth is not None and node.depth >= max_depth:
            node.truncated = True
            continue
        targets = {}
        for pivot in range(3):
            try:
                target = mutate_weights(node.weights, pivot)
            except NotDivisible:
                continue
            if height(target) > node.height:
                targets.setdefault(target, pivot)
        for target in sorted(targets):
            if target in seen:
                continue
            if max_height is not None and height(target) > max_height:
                node.truncated = True
                continue
            seen.add(target)
            child = TreeNode(
                weights=target,
                height=height(target),
                depth=node.depth + 1,
                parent=idx,
                pivot=targets[target],
            )
            nodes.append(child)
            node.children.append(len(nodes) - 1)
            queue.append(len(nodes) - 1)
    return MutationTree(nodes=nodes)


def tree_to_obj(tree: MutationTree) -> dict:
    """JSON-ready document: nodes array with parent indices and pivots."""
    return {
        "nodes": [
            {
                "weights": [str(x) for x in n.weights],
                "height": str(n.height),
                "depth": n.depth,
                "parent": n.parent,
                "pivot": n.pivot,
                "truncated": n.truncated,
            }
            for n in tree.nodes
        ]
    }


def tree_to_json(tree: MutationTree) -> str:
    return json.dumps(tree_to_obj(tree), sort_keys=True, indent=2)


def tree_to_dot(tree: MutationTree) -> str:
    lines = ["digraph mutations {"]
    for i, n in enumerate(tree.nodes):
        label = ",".join(str(x) for x in n.weights) + f" (h={n.height})"
        shape = ' style=dashed' if n.truncated else ""
        lines.append(f'  n{i} [label="{label}"{shape}];')
    for i, n in enumerate(tree.nodes):
        for c in n.children:
            lines.append(f'  n{i} -> n{c} [label="{tree.nodes[c].pivot}"];')
    lines.append("}")
    return "\n".join(lines)
