import itertools
import random
from fractions import Fraction as F

import pytest

from uqdim import (
    PoleAtParameters,
    PowerSeries,
    UnknownAlgebra,
    VogelParams,
    build_root_system,
    casimir_adjoint,
    casimir_y2,
    dim_adjoint,
    exc_line_dim,
    exc_line_params,
    line_params,
    parse_algebra,
    qdim_adjoint,
    qdim_cartan_adjoint,
    qdim_x2,
    qdim_y2,
    qdim_z,
    sinh_ratio_series,
    vogel_params,
    weyl_qdim,
    z_block_a,
    z_block_btilde,
    z_block_c1,
    z_block_c2,
    z_block_f,
)
from uqdim.universal import (
    adjoint_product,
    x2_product,
    y2_product,
    z_dim_along_family,
    z_dim_along_line,
    z_product,
)

from conftest import rand_fraction, rand_params, sample_regular_points

ALGEBRA_DIMS = {
    "sl6": 35, "so7": 21, "sp6": 21, "so12": 66, "g2": 14,
    "f4": 52, "e6": 78, "e7": 133, "e8": 248,
}

DUAL_COXETER = {
    "sl6": 6, "so7": 5, "sp6": 4, "so12": 10, "g2": 4,
    "f4": 9, "e6": 12, "e7": 18, "e8": 30,
}


def j_dim_formula(lam):
    """Closed-form dimension of the Cartan square of Y2(beta) on the
    exceptional line (lam, 1-lam, 2)."""
    lam = F(lam)
    num = (81 * (lam - 6) * (lam - 4) * (lam - 3) * (lam + 2) * (lam + 3)
           * (lam + 5) * (2 * lam - 5) * (2 * lam + 3))
    den = ((lam - 1) ** 2 * lam ** 2 * (2 * lam - 1) ** 2
           * (3 * lam - 2) * (3 * lam - 1))
    return num / den


class TestParameters:
    def test_exceptional_rows(self):
        assert vogel_params("e8").as_tuple() == (-2, 12, 20)
        assert vogel_params("g2").as_tuple() == (-2, F(10, 3), F(8, 3))
        assert vogel_params("f4").as_tuple() == (-2, 5, 6)

    def test_sl_row(self):
        for n in (2, 3, 6, 9):
            assert vogel_params(f"sl{n}").as_tuple() == (-2, 2, n)

    def test_t_is_dual_coxeter(self):
        for name, h in DUAL_COXETER.items():
            assert vogel_params(name).t == h

    def test_name_grammar(self):
        assert parse_algebra("sl 6").label == "sl6"
        assert parse_algebra("so 12") == parse_algebra("so12")
        assert parse_algebra("E8").family == "E"
        for bad in ("sl1", "so4", "sp5", "e9", "f5", "q7", "sl"):
            with pytest.raises(UnknownAlgebra):
                parse_algebra(bad)

    def test_lines(self):
        assert line_params("so", 12).as_tuple() == (-2, 4, 8)
        assert line_params("sl", 6).as_tuple() == (-2, 2, 6)
        assert line_params("sp", 6).as_tuple() == (-2, 1, 5)
        exc8 = line_params("exc", 8)
        assert exc8.as_tuple() == (-2, 20, 12)
        assert sorted(exc8.as_tuple()) == sorted(vogel_params("e8").as_tuple())

    def test_exc_line_parametrisation(self):
        v = exc_line_params(F(3, 7))
        assert v.gamma == 2 * (v.alpha + v.beta)
        assert 3 * exc_line_params(F(-2, 3)).beta == 5

    def test_vieta(self):
        v = VogelParams(2, 3, 5)
        assert (v.t, v.s, v.p) == (10, 31, 30)

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            VogelParams(0, 0, 0)

    def test_permuted_and_slot_first(self):
        v = VogelParams(1, 2, 3)
        assert v.permuted((2, 0, 1)).as_tuple() == (3, 1, 2)
        assert v.slot_first("gamma").as_tuple() == (3, 2, 1)

    def test_scaled(self):
        v = VogelParams(-2, 4, 8).scaled(2)
        assert v.as_tuple() == (-1, 2, 4)


class TestDimAndCasimir:
    def test_table_dimensions(self):
        for name, dim in ALGEBRA_DIMS.items():
            assert dim_adjoint(vogel_params(name)) == dim

    def test_sl_line_closed_form(self):
        for n in (2, 3, 5, 8, 13):
            assert dim_adjoint(VogelParams(-2, 2, n)) == n * n - 1

    def test_pole(self):
        with pytest.raises(PoleAtParameters):
            dim_adjoint(VogelParams(0, 1, 1))

    def test_casimirs(self):
        v = vogel_params("e7")
        assert casimir_adjoint(v) == 36
        assert casimir_y2(v, "alpha") == 4 * 18 + 4
        assert casimir_y2(v, "beta") == 4 * 18 - 16
        assert casimir_y2(v, "gamma") == 4 * 18 - 24

    def test_casimir_slot_relabelling(self):
        v = VogelParams(F(1, 2), F(-3, 4), 5)
        w = v.permuted((1, 0, 2))
        assert casimir_y2(v, "beta") == casimir_y2(w, "alpha")


class TestAdjoint:
    def test_sl2_closed_form(self):
        assert qdim_adjoint(VogelParams(-2, 2, 2), 16) == sinh_ratio_series(6, 2, 16)

    def test_constant_term_is_dimension(self):
        points = sample_regular_points(31, 20, lambda v: adjoint_product(v))
        for v in points:
            assert qdim_adjoint(v, 0).constant_term == dim_adjoint(v)

    def test_full_permutation_invariance(self):
        points = sample_regular_points(33, 10, lambda v: adjoint_product(v))
        for v in points:
            base = qdim_adjoint(v, 12)
            for perm in itertools.permutations(range(3)):
                assert qdim_adjoint(v.permuted(perm), 12) == base

    def test_pole(self):
        with pytest.raises(PoleAtParameters):
            qdim_adjoint(VogelParams(-2, 0, 3), 4)


class TestCartanPowers:
    def test_n1_is_adjoint(self):
        points = sample_regular_points(35, 10, lambda v: adjoint_product(v))
        for v in points:
            assert qdim_cartan_adjoint(v, 1, 12) == qdim_adjoint(v, 12)

    @pytest.mark.parametrize("name,n,dim", [
        ("sl6", 2, 405), ("sl6", 3, 2695),
        ("f4", 2, 1053), ("f4", 3, 12376),
        ("so12", 3, 23100), ("e8", 2, 27000),
    ])
    def test_dimensions(self, name, n, dim):
        # 1053 (f4 Cartan square) and 27000 (e8) pin the Weyl oracle too.
        v = vogel_params(name)
        assert qdim_cartan_adjoint(v, n, 0).constant_term == dim
        aid = parse_algebra(name)
        rs = build_root_system(aid.family, aid.rank)
        lam = rs.weight(tuple(n * c for c in rs.theta))
        from uqdim import weyl_dim
        assert weyl_dim(rs, lam) == dim

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            qdim_cartan_adjoint(vogel_params("e6"), 0, 4)


class TestY2:
    def test_slot_alpha_is_cartan_square(self):
        points = sample_regular_points(37, 10, lambda v: y2_product(v, "alpha"))
        for v in points:
            try:
                cartan = qdim_cartan_adjoint(v, 2, 12)
            except PoleAtParameters:
                continue
            assert qdim_y2(v, "alpha", 12) == cartan

    def test_slot_beta_sl6(self):
        assert qdim_y2(vogel_params("sl6"), "beta", 0).constant_term == 189

    def test_other_slots_symmetric(self):
        v = VogelParams(F(2, 3), F(-5, 7), F(9, 4))
        assert qdim_y2(v, "beta", 10) == qdim_y2(v.permuted((1, 2, 0)), "alpha", 10)

    def test_sum_rule(self):
        def probe(v):
            for slot in ("alpha", "beta", "gamma"):
                y2_product(v, slot)
            dim_adjoint(v)

        points = sample_regular_points(39, 200, probe)
        for v in points:
            d = dim_adjoint(v)
            total = 1 + sum(qdim_y2(v, slot, 0).constant_term
                            for slot in ("alpha", "beta", "gamma"))
            assert total == d * (d + 1) / 2


class TestX2:
    @pytest.mark.parametrize("name,dim", [("sl6", 560), ("f4", 1274), ("so12", 2079)])
    def test_dimensions(self, name, dim):
        assert qdim_x2(vogel_params(name), 0).constant_term == dim

    def test_vanishes_for_rank_one(self):
        # At (-2, 2, 2) the antisymmetric square is the adjoint alone.
        assert qdim_x2(VogelParams(-2, 2, 2), 8).is_zero

    def test_full_permutation_invariance(self):
        points = sample_regular_points(41, 10, x2_product)
        for v in points:
            base = qdim_x2(v, 12)
            for perm in itertools.permutations(range(3)):
                assert qdim_x2(v.permuted(perm), 12) == base

    def test_regular_when_t_equals_gamma(self):
        # sl6 has t = gamma; the doubled-argument factors are entire there.
        v = vogel_params("sl6")
        series = qdim_x2(v, 8)
        assert series.constant_term == 560


class TestZBlocks:
    def test_empty_products(self):
        v = rand_params(random.Random(43))
        assert z_block_a(v, 0, 6) == PowerSeries.one(6)
        assert z_block_c1(v, 0, 6) == PowerSeries.one(6)
        assert z_block_c2(v, 0, 6) == PowerSeries.one(6)
        assert z_block_btilde(v, 0, 6) == PowerSeries.one(6)

    def test_c2_first_factor(self):
        v = VogelParams(F(-7, 5), F(3, 2), F(1, 3))
        assert z_block_c2(v, 1, 10) == sinh_ratio_series(-2 * v.beta, v.alpha, 10)

    def test_btilde_delegates_to_border_factors(self):
        # The orthogonal-subalgebra block is the border block at
        # (alpha, beta, gamma - beta).
        v = VogelParams(F(-2), F(3, 4), F(7, 3))
        a, b, c = v.alpha, v.beta, v.gamma - v.beta
        expected = PowerSeries.one(10)
        for i in (1, 2):
            expected = expected * sinh_ratio_series(c + 2 * b + (3 - i) * a,
                                                    c + (1 - i) * a, 10)
            expected = expected * sinh_ratio_series(2 * c + b + (3 - i) * a,
                                                    b + (1 - i) * a, 10)
            expected = expected * sinh_ratio_series(2 * c + 2 * b + (4 - i) * a,
                                                    -i * a, 10)
        assert z_block_btilde(v, 2, 10) == expected

    def test_f_block_trivial_at_origin(self):
        v = rand_params(random.Random(47))
        assert z_block_f(v, 0, 0, 6) == PowerSeries.one(6)


class TestZ:
    def test_trivial(self):
        v = rand_params(random.Random(49))
        assert qdim_z(v, 0, 0, 8) == PowerSeries.one(8)

    def test_reduces_to_adjoint(self):
        points = sample_regular_points(51, 10, lambda v: z_product(v, 1, 0))
        for v in points:
            assert qdim_z(v, 1, 0, 12) == qdim_adjoint(v, 12)

    def test_reduces_to_cartan_powers(self):
        def probe(v):
            for n in (1, 2, 3):
                z_product(v, n, 0)

        for v in sample_regular_points(53, 10, probe):
            for n in (1, 2, 3):
                assert qdim_z(v, n, 0, 10) == qdim_cartan_adjoint(v, n, 10)

    def test_z01_is_y2_beta(self):
        def probe(v):
            z_product(v, 0, 1)
            y2_product(v, "beta")

        for v in sample_regular_points(55, 10, probe):
            assert qdim_z(v, 0, 1, 10) == qdim_y2(v, "beta", 10)

    def test_mixed_product_symmetric_in_first_two_slots(self):
        for v in sample_regular_points(57, 10, lambda v: z_product(v, 1, 1)):
            try:
                swapped = qdim_z(v.permuted((1, 0, 2)), 1, 1, 10)
            except PoleAtParameters:
                continue
            assert qdim_z(v, 1, 1, 10) == swapped

    def test_symmetry_fails_beyond_one_one(self):
        # The first-two-slot symmetry is special to (k, l) = (1, 1).
        v = VogelParams(F(3, 5), F(-7, 3), F(11, 4))
        assert qdim_z(v, 2, 1, 8) != qdim_z(v.permuted((1, 0, 2)), 2, 1, 8)

    @pytest.mark.parametrize("name,dim", [
        ("sl6", 3675), ("f4", 10829), ("so12", 21021),
    ])
    def test_one_one_dimensions(self, name, dim):
        assert z_product(vogel_params(name), 1, 1).dim() == dim

    def test_g2_vanishing(self):
        v = vogel_params("g2")
        for k in range(4):
            for p in (2, 3):
                assert qdim_z(v, k, p, 16).is_zero

    def test_g2_matches_weyl_for_one_y2(self):
        v = vogel_params("g2")
        rs = build_root_system("G", 2)
        for k in range(4):
            vec = tuple((k + 1) * t + s for t, s in zip(rs.theta, rs.sigma))
            assert qdim_z(v, k, 1, 16) == weyl_qdim(rs, rs.weight(vec), 16)


class TestLineEvaluation:
    def test_so12_cube_beta_slot(self):
        # Indeterminate as a point evaluation, regular along the so family.
        with pytest.raises(PoleAtParameters):
            z_product(vogel_params("so12").permuted((1, 0, 2)), 3, 0).dim()
        assert z_dim_along_line("so", 12, (1, 0, 2), 3, 0) == 924

    def test_so_family_closed_form(self):
        for n in (8, 10, 14, 16, 20):
            expected = F((n - 5) * (n - 4) * (n - 3) * (n - 2) * (n - 1) * n, 720)
            assert z_dim_along_line("so", n, (1, 0, 2), 3, 0) == expected

    def test_agrees_with_point_when_regular(self):
        assert z_dim_along_line("sl", 6, (0, 1, 2), 3, 0) == 2695
        # the exceptional-series row carries beta and gamma swapped relative
        # to the f4 parameters, so the unpermuted slot arrangement gives the
        # vanishing mixed product and the swap restores 10829
        assert z_dim_along_line("exc", 1, (0, 1, 2), 1, 1) == 0
        assert z_dim_along_line("exc", 1, (0, 2, 1), 1, 1) == 10829

    def test_family_evaluation(self):
        assert z_dim_along_family(
            lambda n: line_params("exc", n).permuted((0, 2, 1)), F(1), 1, 1
        ) == 10829


class TestExceptionalLine:
    def test_matches_closed_form_at_sampled_points(self):
        rng = random.Random(61)
        checked = 0
        while checked < 20:
            lam = F(rng.randint(-48, 48), rng.randint(1, 16))
            try:
                value = exc_line_dim(lam, 0, 2)
            except PoleAtParameters:
                continue
            assert value == j_dim_formula(lam)
            checked += 1

    def test_removable_points_evaluate(self):
        for lam in (2, -1, 4, -6, F(-4, 3), F(-5, 2), -2, -4):
            assert exc_line_dim(lam, 0, 2) == j_dim_formula(lam)

    def test_pole_set(self):
        for lam in (0, 1, F(1, 2), F(2, 3), F(1, 3)):
            with pytest.raises(PoleAtParameters):
                exc_line_dim(lam, 0, 2)

    def test_vanishes_at_the_g2_points(self):
        # (lam, 1-lam, 2) is a rescaling of (-2, 10/3, 8/3) exactly at
        # lam = -3/2 and, with the first two slots swapped, at lam = 5/2.
        assert exc_line_dim(F(-3, 2), 0, 2) == 0
        assert exc_line_dim(F(5, 2), 0, 2) == 0
        g2 = vogel_params("g2").scaled(F(4, 3))
        assert g2.as_tuple() == (F(-3, 2), F(5, 2), 2)

    def test_f4_point_value(self):
        # lam = -2/3 rescales to (-2, 5, 6); the value is the f4 dimension
        # of the Cartan square of Y2(beta), confirmed by the Weyl oracle.
        assert 3 * exc_line_params(F(-2, 3)).alpha == -2
        assert exc_line_dim(F(-2, 3), 0, 2) == 16302

    def test_adjoint_dimension_along_line(self):
        rng = random.Random(63)
        for _ in range(10):
            lam = F(rng.randint(-20, 20), rng.randint(1, 8))
            if lam in (0, 1):
                continue
            assert exc_line_dim(lam, 1, 0) == dim_adjoint(exc_line_params(lam))


class TestScalingInvariance:
    def test_series_transform(self):
        rng = random.Random(65)

        def probe(v):
            adjoint_product(v)
            x2_product(v)
            z_product(v, 1, 1)
            z_product(v, 2, 0)

        points = sample_regular_points(67, 12, probe)
        for v in points:
            z = rand_fraction(rng, 8)
            scaled = v.scaled(z)
            for series_of in (
                lambda w: qdim_adjoint(w, 10),
                lambda w: qdim_cartan_adjoint(w, 2, 10),
                lambda w: qdim_x2(w, 10),
                lambda w: qdim_z(w, 1, 1, 10),
            ):
                assert series_of(scaled).scale_x(z) == series_of(v)


class TestPoleDiagnostics:
    def test_message_names_the_form(self):
        with pytest.raises(PoleAtParameters, match="alpha"):
            qdim_adjoint(VogelParams(0, 2, 3), 4)
        with pytest.raises(PoleAtParameters, match="beta"):
            qdim_z(VogelParams(-2, 0, 3), 1, 1, 4)
