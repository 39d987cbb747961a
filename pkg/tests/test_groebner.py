"""Groebner engine: bases, membership, elimination, kernels, smoothness."""

import pytest

from godeaux.errors import BudgetExceeded, ContextError
from godeaux.fixtures import load_fixtures
from godeaux.groebner import (buchberger, eliminate, ideal_member,
                              jacobian_minors, jacobian_smoothness,
                              radical_member, reduce, reduce_tracked,
                              ring_map_kernel, spolynomial)
from godeaux.rings import DEGREVLEX, LEX, PolyRing, parse_poly

R3 = PolyRing(("x", "y", "z"), 5, DEGREVLEX)
R2 = PolyRing(("x", "y"), 5, DEGREVLEX)


def p3(text):
    return parse_poly(R3, text)


def p2(text):
    return parse_poly(R2, text)


class TestBuchberger:
    def test_already_a_basis(self):
        gb = buchberger([p2("x"), p2("y")])
        assert [str(f) for f in gb] == ["x", "y"]

    def test_classic_lex_example(self):
        # (x^2 - y, x^3 - z) under lex picks up the relation y^3 - z^2
        ring = PolyRing(("x", "y", "z"), 5, LEX)
        f = parse_poly(ring, "x^2 - y")
        g = parse_poly(ring, "x^3 - z")
        gb = buchberger([f, g])
        assert parse_poly(ring, "y^3 - z^2") in list(gb)

    def test_reduced_and_sorted(self):
        # x^2 - y^2 reduces the redundant generator x^2 + x*y away
        gb = buchberger([p2("x^2 - y^2"), p2("x^2 + x*y")])
        leads = gb.leading_monomials()
        keys = [R2.sort_key(e) for e in leads]
        assert keys == sorted(keys, reverse=True)
        for f in gb:
            assert f.leading_coefficient() == 1
            others = [g for g in gb if g is not f]
            assert reduce(f, others) == f  # fully inter-reduced

    def test_unit_ideal(self):
        gb = buchberger([p2("x"), p2("x + 1")])
        assert gb.is_unit_ideal()

    def test_empty_input(self):
        with pytest.raises(ValueError):
            buchberger([])

    def test_zero_generators_dropped(self):
        gb = buchberger([p2("x"), R2.zero()])
        assert [str(f) for f in gb] == ["x"]

    def test_budget_exhaustion(self):
        fx = load_fixtures()
        from godeaux.derivations import fixed_locus_ideal
        minors = fixed_locus_ideal(fx.field)
        with pytest.raises(BudgetExceeded) as info:
            buchberger(minors, budget=1)
        assert info.value.pairs_processed >= 1
        assert info.value.basis_size > 0

    def test_budget_counts_match_across_backends(self):
        fx = load_fixtures()
        from godeaux.derivations import fixed_locus_ideal
        minors = fixed_locus_ideal(fx.field)
        gp = buchberger(minors, backend_name="pure")
        gc = buchberger(minors, backend_name="compiled")
        assert gp.polynomials == gc.polynomials
        assert gp.pairs_processed == gc.pairs_processed


class TestReduction:
    def test_spolynomial_cancels_leads(self):
        f, g = p2("x^2 + y"), p2("x*y + 1")
        s = spolynomial(f, g)
        assert s == p2("y^2 - x")

    def test_spolynomial_of_coprime_leads(self):
        s = spolynomial(p2("x + 1"), p2("y + 1"))
        assert s == p2("y - x")  # y*(x+1) - x*(y+1)

    def test_reduce_to_normal_form(self):
        gb = buchberger([p2("x^2 - y"), p2("y^2 - 1")])
        assert reduce(p2("x^4"), gb) == R2.one()

    def test_reduce_idempotent(self):
        gb = buchberger([p2("x^2 - y"), p2("y^2 - 1")])
        nf = reduce(p2("x^3*y + x*y^2 + 3"), gb)
        assert reduce(nf, gb) == nf

    def test_reduce_tracked_expands_back(self):
        gens = [p2("x^2 - y"), p2("y^2 - 1")]
        f = p2("x^4 + x*y + 2")
        nf, cofs = reduce_tracked(f, gens)
        acc = nf
        for c, g in zip(cofs, gens):
            acc = acc + c * g
        assert acc == f


class TestMembership:
    def test_member_with_witness(self):
        gens = [p2("x^2 - y"), p2("y^2 - 1")]
        ok, wit = ideal_member(p2("x^4 - 1"), gens, witness=True)
        assert ok and wit.is_member and wit.verify()
        assert wit.generators == tuple(gens)

    def test_non_member(self):
        gens = [p2("x^2 - y")]
        ok, wit = ideal_member(p2("x"), gens, witness=True)
        assert not ok and not wit.is_member
        assert wit.verify()  # identity still holds, remainder nonzero

    def test_bare_bool_form(self):
        assert ideal_member(p2("x^2 - y"), [p2("x^2 - y")]) is True

    def test_groebner_basis_input(self):
        gb = buchberger([p2("x^2 - y"), p2("y^2 - 1")])
        ok, wit = ideal_member(p2("x^4 - 1"), gb, witness=True)
        assert ok and wit.verify()
        assert wit.generators == gb.polynomials

    def test_radical_member(self):
        # x in rad(x^2) but not in (x^2); y in neither
        gens = [p2("x^2")]
        assert radical_member(p2("x"), gens) is True
        assert ideal_member(p2("x"), gens) is False
        assert radical_member(p2("y"), gens) is False

    def test_radical_of_power_product(self):
        # rad(x^3*y^2, z^4) = (x*y, z): multiples of z qualify, bare x does not
        gens = [p3("x^3*y^2"), p3("z^4")]
        assert radical_member(p3("x*y*z"), gens) is True
        assert radical_member(p3("x*z"), gens) is True
        assert radical_member(p3("x"), gens) is False


class TestEliminate:
    def test_parabola(self):
        # graph of y = t^2 under (x - t, y - t^2): eliminating t leaves y - x^2
        ring = PolyRing(("t", "x", "y"), 5, DEGREVLEX)
        gens = [parse_poly(ring, "x - t"), parse_poly(ring, "y - t^2")]
        out = eliminate(gens, drop=("t",))
        assert len(out) == 1
        assert str(out[0]) == "x^2 + 4*y"
        assert out[0].ring.variables == ("x", "y")

    def test_nothing_kept_rejected(self):
        with pytest.raises(ValueError):
            eliminate([p2("x + y")], drop=("x", "y"))

    def test_nothing_dropped_rejected(self):
        with pytest.raises(ValueError):
            eliminate([p2("x + y")], drop=())

    def test_no_relation(self):
        ring = PolyRing(("t", "x"), 5, DEGREVLEX)
        out = eliminate([parse_poly(ring, "t^2 - x")], drop=("t",))
        assert out == []


class TestRingMapKernel:
    def test_injective_map_has_zero_kernel(self):
        src = PolyRing(("u",), 5, DEGREVLEX)
        out = ring_map_kernel(src, R2, [p2("x")])
        assert out.generators == ()

    def test_plane_curve_kernel(self):
        # u -> t^2, v -> t^3 presents the cuspidal cubic u^3 - v^2
        src = PolyRing(("u", "v"), 5, DEGREVLEX)
        tgt = PolyRing(("t",), 5, DEGREVLEX)
        out = ring_map_kernel(src, tgt, [parse_poly(tgt, "t^2"),
                                         parse_poly(tgt, "t^3")])
        assert [str(g) for g in out.generators] == ["u^3 + 4*v^2"]

    def test_generators_vanish_under_substitution(self):
        fx = load_fixtures()
        src = PolyRing(("s", "t"), 5, DEGREVLEX)
        tgt = fx.chart_fields["x3"].ring
        images = [fx.chart_gens["x3"][0], fx.chart_gens["x3"][1]]
        from godeaux.rings import substitute
        out = ring_map_kernel(src, tgt, images)
        for g in out.generators:
            assert substitute(g, tgt, images).is_zero()

    def test_seeding_preserves_answer(self):
        src = PolyRing(("u", "v"), 5, DEGREVLEX)
        tgt = PolyRing(("t",), 5, DEGREVLEX)
        images = [parse_poly(tgt, "t^5"), parse_poly(tgt, "t^10")]
        seeded = ring_map_kernel(src, tgt, images, seed=True)
        plain = ring_map_kernel(src, tgt, images, seed=False)
        assert seeded.generators == plain.generators
        assert seeded.seeds != ()

    def test_variable_overlap_rejected(self):
        src = PolyRing(("x", "s"), 5, DEGREVLEX)
        with pytest.raises(ContextError):
            ring_map_kernel(src, R2, [p2("x"), p2("y")])

    def test_wrong_image_count_rejected(self):
        src = PolyRing(("u", "v"), 5, DEGREVLEX)
        with pytest.raises(ContextError):
            ring_map_kernel(src, R2, [p2("x")])


class TestJacobianMinors:
    def test_power_of_char_differentiates_to_zero(self):
        # formal derivative in characteristic 5: d(s^5)/ds = 0
        ring = PolyRing(("s",), 5, DEGREVLEX)
        assert jacobian_minors([parse_poly(ring, "s^5 - 1")], 1) == []

    def test_full_rank_linear_system(self):
        minors = jacobian_minors([p2("x + y"), p2("x - y")], 2)
        assert [str(m) for m in minors] == ["3"]  # det [[1,1],[1,-1]] = -2

    def test_codim_bounds(self):
        with pytest.raises(ValueError):
            jacobian_minors([p2("x")], 2)
        with pytest.raises(ValueError):
            jacobian_minors([p2("x")], 0)


class TestSmoothness:
    def test_smooth_hypersurface(self):
        cert = jacobian_smoothness([p2("x^2 + y^2 - 1")], 1)
        assert cert.verdict == "smooth"
        assert cert.unit_witness.verify()
        assert cert.unit_witness.target == R2.one()
        assert cert.verify()

    def test_singular_cone_inconclusive(self):
        # x*y = 0 is singular at the origin: no locus, no unit
        cert = jacobian_smoothness([p2("x*y")], 1)
        assert cert.verdict == "inconclusive"
        assert cert.residual is not None
        assert cert.verify()

    def test_smooth_on_locus(self):
        # cusp y^2 = x^3: singular only at origin, smooth where x = 1 - u
        # is invertible; localizing away from the singular point via the
        # locus (x - 1) certifies smoothness over that locus.
        cert = jacobian_smoothness([p2("y^2 - x^3")], 1, locus=[p2("x - 1")])
        assert cert.verdict == "smooth-on-locus"
        assert cert.unit_witness.verify()
        assert cert.verify()

    def test_presentation_relations_globally_smooth(self):
        # the five-variable presentation has a constant 2x2 Jacobian
        # minor, so the certificate is unconditional
        fx = load_fixtures()
        cert = jacobian_smoothness(list(fx.presentation_rels), 2)
        assert cert.verdict == "smooth"
        assert cert.unit_witness.verify()
        assert cert.verify()
        assert any(m.total_degree() == 0 for m in cert.minors)

    def test_foreign_locus_rejected(self):
        with pytest.raises(ContextError):
            jacobian_smoothness([p2("x")], 1, locus=[p3("z")])
