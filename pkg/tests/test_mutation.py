import itertools

import pytest

from fwpp.fwps import weights_of, wps_triangle
from fwpp.lattice import degree, dual_polygon, make_fano_triangle
from fwpp.mutation import (
    Factor,
    InvalidFactor,
    InvalidMutationData,
    MutationData,
    admissible_widths,
    apply_dual_map,
    enumerate_one_step,
    find_factors,
    mutate,
    mutate_with,
    unimodular_equivalent,
)

P2 = make_fano_triangle((1, -1), (-1, 2), (0, -1))
Q114 = make_fano_triangle((1, 2), (-1, 2), (0, -1))
T35 = make_fano_triangle((10, -7), (-5, 2), (0, 1))


class TestAdmissibleWidths:
    def test_example_width(self):
        assert (0, 1) in admissible_widths(P2)

    def test_always_three(self, corpus):
        for P in corpus[:50]:
            assert len(admissible_widths(P)) == 3

    def test_standard_simplex(self):
        T = make_fano_triangle((1, 0), (0, 1), (-1, -1))
        # primitivizations of the dual vertices (-1,-1), (2,-1), (-1,2)
        assert set(admissible_widths(T)) == {(-1, -1), (2, -1), (-1, 2)}


class TestFindFactors:
    def test_example_factor(self):
        factors = find_factors(P2, (0, 1))
        by_dir = {f.f: (f, g) for f, g in factors}
        f, g = by_dir[(1, 0)]
        assert f.length == 1
        assert g == {-1: ((0, -1), (0, -1))}

    def test_rigid_triangle_has_no_factors(self):
        for w in admissible_widths(T35):
            assert find_factors(T35, w) == []

    def test_sharp_vertex_blocks_factor(self):
        # single vertex at h_min with a width-0 slice there
        T = make_fano_triangle((1, 0), (0, 1), (-1, -1))
        assert find_factors(T, (1, 1)) == []

    def test_non_admissible_widths_have_no_factors(self, small_corpus):
        from fwpp.lattice import is_primitive
        for P in small_corpus[:12]:
            adm = set(admissible_widths(P))
            for w in itertools.product(range(-5, 6), repeat=2):
                if not is_primitive(w) or tuple(w) in adm:
                    continue
                assert find_factors(P, tuple(w)) == []


class TestMutate:
    def test_p2_to_p114(self):
        factor, g = next(
            (f, g) for f, g in find_factors(P2, (0, 1)) if f.f == (1, 0)
        )
        data = MutationData(source=P2.vertices, factor=factor, g_segments=g)
        assert mutate(P2, data) == Q114.vertices

    def test_invertible(self):
        factor = Factor(w=(0, 1), f=(1, 0), length=1)
        Q = mutate_with(P2, factor)
        assert mutate_with(Q, factor.inverse()) == P2.vertices

    def test_invalid_data_rejected(self):
        factor = Factor(w=(0, 1), f=(1, 0), length=1)
        bad = MutationData(
            source=P2.vertices, factor=factor,
            g_segments={-1: ((1, -1), (1, -1))},  # excludes vertex (0,-1)+F
        )
        with pytest.raises(InvalidMutationData):
            mutate(P2, bad)

    def test_infeasible_length(self):
        with pytest.raises(InvalidMutationData):
            mutate_with(P2, Factor(w=(0, 1), f=(1, 0), length=2))

    def test_g_choice_irrelevant_up_to_equivalence(self, small_corpus):
        # enumerate every valid G-translate on small instances
        for P in small_corpus[:10]:
            for w in admissible_widths(P):
                for factor, maximal_g in find_factors(P, w):
                    base = mutate(P, MutationData(P.vertices, factor, maximal_g))
                    choices = _all_g_choices(P, w, factor)
                    for g in choices:
                        out = mutate(P, MutationData(P.vertices, factor, g))
                        assert unimodular_equivalent(out, base)


def _all_g_choices(P, w, factor, cap=200):
    """Every collection {G_h} satisfying the inclusion condition: all
    sub-intervals of the slice, of any width, at every negative height."""
    from fwpp.lattice import (
        apply_matrix, lattice_slice_interval, width_transform,
    )
    U, Uinv = width_transform(w)
    nvs = [apply_matrix(U, v) for v in P.vertices]
    fn = apply_matrix(U, factor.f)
    h_min = min(v[1] for v in nvs)
    per_height = []
    heights = list(range(h_min, 0))
    for h in heights:
        iv = lattice_slice_interval(nvs, h)
        need = (-h) * factor.length
        vxs = [v[0] for v in nvs if v[1] == h]
        options = []
        if not vxs:
            options.append(None)
        if iv is not None:
            a, b = iv
            for ga in range(a, b + 1):
                for gb in range(ga, b + 1):
                    lo, hi = (ga, gb + need) if fn[0] == 1 else (ga - need, gb)
                    if lo >= a and hi <= b and all(lo <= x <= hi for x in vxs):
                        options.append((
                            apply_matrix(Uinv, (ga, h)),
                            apply_matrix(Uinv, (gb, h)),
                        ))
        per_height.append(options)
    combos = itertools.islice(itertools.product(*per_height), cap)
    return [dict(zip(heights, combo)) for combo in combos]


class TestDualMap:
    def test_p2_to_p114_dual(self):
        factor = Factor(w=(0, 1), f=(1, 0), length=1)
        assert set(apply_dual_map(P2, factor)) == set(dual_polygon(Q114))

    def test_fixed_chamber_vertices_stay_in_image(self):
        # vertices with u(f) >= 0 are fixed pointwise, so they still lie in
        # the dual of the mutated polygon (possibly no longer as vertices)
        factor = Factor(w=(0, 1), f=(1, 0), length=1)
        Q = mutate_with(P2, factor)
        for u in dual_polygon(P2):
            if u[0] * factor.f[0] + u[1] * factor.f[1] >= 0:
                assert all(u[0] * x + u[1] * y >= -1 for x, y in Q)

    def test_matches_dual_of_mutation(self, small_corpus):
        for P in small_corpus[:12]:
            for w in admissible_widths(P):
                for factor, _ in find_factors(P, w):
                    Q = mutate_with(P, factor)
                    assert set(apply_dual_map(P, factor)) == set(dual_polygon(Q))

    def test_invalid_factor(self):
        with pytest.raises(InvalidFactor):
            apply_dual_map(P2, Factor(w=(0, 1), f=(1, 0), length=2))


class TestEnumerate:
    def test_p2_single_class(self):
        results = enumerate_one_step(P2, triangles_only=True)
        assert len(results) == 1
        _, Q = results[0]
        assert unimodular_equivalent(Q, wps_triangle(1, 1, 4).vertices)

    def test_p3511_rigid(self):
        assert enumerate_one_step(wps_triangle(3, 5, 11)) == []

    def test_fake_plane_rigid(self):
        assert enumerate_one_step(T35) == []


class TestCanonicalForm:
    def test_unimodular_images_equivalent(self, corpus):
        for P in corpus[:30]:
            sheared = make_fano_triangle(*[(x, x + y) for x, y in P.vertices])
            flipped = make_fano_triangle(*[(y, x) for x, y in P.vertices])
            assert unimodular_equivalent(P.vertices, sheared.vertices)
            assert unimodular_equivalent(P.vertices, flipped.vertices)

    def test_distinguishes_different_planes(self):
        assert not unimodular_equivalent(P2.vertices, Q114.vertices)
        assert not unimodular_equivalent(P2.vertices, T35.vertices)


class TestInvariants:
    def test_degree_and_fano_preserved(self, corpus):
        from fwpp.lattice import validate_fano_polygon
        total = 0
        for P in corpus[:200]:
            d = degree(P)
            for factor, Q in enumerate_one_step(P):
                total += 1
                validate_fano_polygon(Q)
                assert degree(Q) == d
                assert mutate_with(Q, factor.inverse()) == P.vertices
        assert total > 0

    def test_mult_preserved_on_triangles(self, corpus):
        for P in corpus[:200]:
            inv = weights_of(P)
            for _, Q in enumerate_one_step(P, triangles_only=True):
                assert weights_of(Q).mult == inv.mult
