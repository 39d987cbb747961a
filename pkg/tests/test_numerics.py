"""Numerical invariants: records, covers, counting identities."""

import pytest

from godeaux.errors import ContextError
from godeaux.numerics import (InvariantRecord, betti_consistency,
                              chi_of_anticanonical_power,
                              descend_invariants, e1_degeneration_check,
                              feasible_characteristics,
                              hypersurface_invariants, noether_check,
                              self_intersection_from_chis, torsion_order_bound,
                              torsor_invariants)


class TestInvariantRecord:
    def test_basic_construction(self):
        rec = InvariantRecord(p=5, chi=1, k2=1)
        assert (rec.p, rec.chi, rec.k2) == (5, 1, 1)

    def test_hodge_consistency_enforced(self):
        InvariantRecord(p=5, chi=1, k2=1, pg=0, h01=0)  # 1 = 1 - 0 + 0
        with pytest.raises(ContextError):
            InvariantRecord(p=5, chi=1, k2=1, pg=1, h01=0)

    def test_nonprime_characteristic_rejected(self):
        with pytest.raises(ContextError):
            InvariantRecord(p=6, chi=1, k2=1)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ContextError):
            InvariantRecord(p=5, chi=1, k2=1, kind="ordinary")

    def test_frozen(self):
        rec = InvariantRecord(p=5, chi=1, k2=1)
        with pytest.raises(AttributeError):
            rec.chi = 2


class TestCovers:
    def test_torsor_multiplies_by_degree(self):
        base = InvariantRecord(p=5, chi=1, k2=1, kind="singular")
        total = torsor_invariants(base)
        assert (total.chi, total.k2) == (5, 5)
        assert total.h0_omega_lower == 4
        assert total.kind == "singular"

    def test_descend_divides_exactly(self):
        big = InvariantRecord(p=5, chi=5, k2=5)
        small = descend_invariants(big)
        assert (small.chi, small.k2) == (1, 1)

    def test_descend_rejects_nondivisible(self):
        with pytest.raises(ContextError):
            descend_invariants(InvariantRecord(p=5, chi=3, k2=5))

    def test_round_trip(self):
        base = InvariantRecord(p=5, chi=1, k2=1, kind="supersingular")
        back = descend_invariants(torsor_invariants(base))
        assert (back.p, back.chi, back.k2, back.kind) == (5, 1, 1,
                                                          "supersingular")


class TestRiemannRoch:
    def test_known_second_differences(self):
        assert self_intersection_from_chis(5, 10, 20) == 5
        assert self_intersection_from_chis(1, 1, 1) == 0
        assert self_intersection_from_chis(1, 2, 4) == 1

    def test_second_difference_recovers_k2_exhaustively(self):
        for chi in range(-10, 11):
            for k2 in range(-10, 11):
                chis = [chi_of_anticanonical_power(chi, k2, n)
                        for n in (0, 1, 2)]
                assert self_intersection_from_chis(*chis) == k2

    def test_anticanonical_chi_values(self):
        assert chi_of_anticanonical_power(1, 1, 0) == 1
        assert chi_of_anticanonical_power(1, 1, 1) == 2
        assert chi_of_anticanonical_power(1, 1, 2) == 4
        assert chi_of_anticanonical_power(5, 5, 1) == 10


class TestNoether:
    def test_examples(self):
        assert noether_check(5, 4, image_is_curve=False) is True
        assert noether_check(10, 9, image_is_curve=False) is False
        assert noether_check(0, 0, image_is_curve=False) is True

    def test_curve_image_constant(self):
        # K^2 >= 2*h0 - 2 for curve images: equality case passes
        assert noether_check(4, 3, image_is_curve=True) is True
        assert noether_check(3, 3, image_is_curve=True) is False

    def test_vacuous_without_forms(self):
        assert noether_check(-7, 0, image_is_curve=False) is True
        assert noether_check(-7, -1, image_is_curve=True) is True


class TestFeasibility:
    def test_default_windows(self):
        assert feasible_characteristics("singular") == [2, 3, 5]
        assert feasible_characteristics("supersingular") == [2, 3, 5]

    def test_threshold_widens_supersingular(self):
        assert feasible_characteristics("supersingular",
                                        threshold=-6) == [2, 3, 5, 7]

    def test_cover_bound_widens_singular(self):
        assert feasible_characteristics("singular",
                                        cover_bound=7) == [2, 3, 5, 7]

    def test_unknown_kind(self):
        with pytest.raises(ContextError):
            feasible_characteristics("mixed")

    def test_torsion_bounds(self):
        assert torsion_order_bound(5) == 1
        assert torsion_order_bound(2) == 3
        assert torsion_order_bound(7) == 0
        assert torsion_order_bound(3, cover_bound=6) == 2


class TestBetti:
    def test_examples(self):
        assert betti_consistency(1, 1, 0) == (11, 9, 0)
        assert betti_consistency(5, 5, 0) == (55, 53, 0)
        assert betti_consistency(1, 0, 1) == (12, 12, 1)

    def test_euler_identity(self):
        # c2 = 2 - 2*b1 + b2 must agree with 12*chi - K^2
        for chi in range(-3, 6):
            for k2 in range(-3, 6):
                for b1 in range(0, 3):
                    try:
                        c2, b2, b3 = betti_consistency(chi, k2, b1)
                    except ContextError:
                        continue
                    assert c2 == 12 * chi - k2
                    assert c2 == 2 - 2 * b1 + b2
                    assert b3 == b1

    def test_negative_b2_rejected(self):
        with pytest.raises(ContextError):
            betti_consistency(0, 5, 0)


class TestDegeneration:
    def _grid(self, rows):
        # rows printed top-down; bottom row is vertical index 0
        grid = {}
        height = len(rows)
        for r, row in enumerate(rows):
            for q, value in enumerate(row):
                grid[(q, height - 1 - r)] = value
        return grid

    def test_singular_grid_degenerates(self):
        grid = self._grid([[1, 0, 1], [1, 9, 1], [1, 0, 1]])
        de_rham = {0: 1, 1: 1, 2: 11, 3: 1, 4: 1}
        assert e1_degeneration_check(grid, de_rham) == {
            0: True, 1: True, 2: True, 3: True, 4: True}

    def test_supersingular_grid_does_not(self):
        grid = self._grid([[1, 1, 1], [1, 11, 1], [1, 1, 1]])
        de_rham = {0: 1, 1: 1, 2: 11, 3: 1, 4: 1}
        verdicts = e1_degeneration_check(grid, de_rham)
        assert verdicts[0] is True
        assert verdicts[1] is False  # 1 + 1 > 1: extra forms collapse
        assert verdicts[2] is False

    def test_fixture_grids(self):
        from godeaux.fixtures import load_fixtures
        fx = load_fixtures()
        ok = e1_degeneration_check(fx.hodge["singular"], fx.de_rham)
        bad = e1_degeneration_check(fx.hodge["supersingular"], fx.de_rham)
        assert all(ok.values())
        assert not all(bad.values())


class TestHypersurfaces:
    def test_examples(self):
        assert hypersurface_invariants(5) == (5, 5)
        assert hypersurface_invariants(4) == (2, 0)
        assert hypersurface_invariants(1) == (1, 9)

    def test_degree_must_be_positive(self):
        with pytest.raises(ContextError):
            hypersurface_invariants(0)
