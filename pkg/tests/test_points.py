import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bgcheb import (
    BGChebFunction,
    DomainError,
    PointKind,
    PointSet,
    cheb_as_lobatto,
    cheb_points,
    equispaced_first_kind,
    equispaced_lobatto,
    eval_direct,
    extrema_points,
    kte_map,
    lobatto_points,
    make_params,
    make_params_float,
    map_pointset,
    omega_interval,
)

from .strategies import param_pairs, random_pair

C = make_params(0, 0)


class TestChebPoints:
    def test_single(self):
        assert cheb_points(1, C).abscissae == (0.0,)

    def test_two(self):
        np.testing.assert_allclose(cheb_points(2, C).array, [math.sqrt(2) / 2, -math.sqrt(2) / 2], atol=1e-16)

    def test_fig1_left_set(self):
        p = make_params("1/3", "1/3")
        ps = cheb_points(4, p)
        om = omega_interval(p)
        assert ps.count == 4
        for x in ps:
            assert om.contains(x)
            assert abs(eval_direct(BGChebFunction(4, p), x)) < 1e-12

    def test_zero_count(self):
        with pytest.raises(DomainError):
            cheb_points(0, C)

    @settings(max_examples=200)
    @given(st.integers(1, 120), param_pairs())
    def test_zero_property_and_containment(self, n, p):
        ps = cheb_points(n, p)
        om = omega_interval(p)
        vals = eval_direct(BGChebFunction(n, p), ps.array)
        # a point rounded near +-1 is amplified by arccos (1/sin) and the
        # frequency 2n/rho: |T| ~ 8 n^2 eps / (pi rho^2) at worst
        rho = float(p.rho)
        bound = max(1e-12, 10 * 8 * n * n * 2.2e-16 / (math.pi * rho * rho))
        assert np.max(np.abs(vals)) < bound
        assert all(om.contains(x, 1e-14) for x in ps)

    @given(st.integers(1, 30), param_pairs())
    def test_zero_property_well_conditioned(self, n, p):
        assume(n / float(p.rho) <= 60)
        vals = eval_direct(BGChebFunction(n, p), cheb_points(n, p).array)
        assert np.max(np.abs(vals)) < 1e-12


class TestLobattoPoints:
    def test_classical_three(self):
        assert lobatto_points(3, C).abscissae == (1.0, 0.0, -1.0)

    def test_two_fifths(self):
        # oracle: cos(k pi / 5), k = 1..4, from mpmath
        expected = [0.80901699437494742, 0.30901699437494742, -0.30901699437494742, -0.80901699437494742]
        np.testing.assert_allclose(lobatto_points(4, make_params("2/5", "2/5")).array, expected, atol=1e-15)

    def test_two_points_are_omega_endpoints(self):
        p = make_params("1/2", "1/4")
        ps = lobatto_points(2, p)
        assert ps[0] == pytest.approx(math.cos(math.pi / 8), abs=1e-16)
        assert ps[1] == pytest.approx(-math.cos(math.pi / 4), abs=1e-16)

    def test_count_too_small(self):
        with pytest.raises(DomainError):
            lobatto_points(1, C)

    @given(st.integers(2, 100), param_pairs())
    def test_endpoints(self, count, p):
        ps = lobatto_points(count, p)
        om = omega_interval(p)
        assert ps[0] == om.hi and ps[-1] == om.lo
        assert ps.count == count


class TestExtrema:
    def test_t2(self):
        assert extrema_points(2, C).abscissae == (0.0,)

    def test_t3(self):
        np.testing.assert_allclose(extrema_points(3, C).array, [0.5, -0.5], atol=1e-16)

    def test_fig1_right(self):
        p = make_params("3/4", "1/5")
        ps = extrema_points(5, p)
        assert ps.count == 4
        v = np.abs(eval_direct(BGChebFunction(5, p), ps.array))
        np.testing.assert_allclose(v, 1.0, atol=1e-12)

    def test_small_n(self):
        with pytest.raises(DomainError):
            extrema_points(1, C)


class TestKTE:
    def test_values(self):
        assert kte_map(1, 0.0) == 0.0
        assert kte_map(1, 0.5) == pytest.approx(math.sqrt(2) / 2, abs=1e-15)
        assert kte_map(0.5, 1.0) == pytest.approx(1.0, abs=1e-16)

    @pytest.mark.parametrize("alpha, x", [(0, 0.1), (-0.5, 0.1), (1.5, 0.1), (1, 1.2), (0.5, -2)])
    def test_domain(self, alpha, x):
        with pytest.raises(DomainError):
            kte_map(alpha, x)

    @given(st.floats(1e-3, 1.0), st.floats(-1.0, 1.0))
    def test_odd_and_bounded(self, alpha, x):
        v = kte_map(alpha, x)
        assert -1.0 - 1e-15 <= v <= 1.0 + 1e-15
        assert kte_map(alpha, -x) == pytest.approx(-v, abs=1e-15)

    @given(st.floats(1e-3, 1.0))
    def test_fixes_endpoints(self, alpha):
        assert kte_map(alpha, 1.0) == pytest.approx(1.0, abs=1e-15)
        assert kte_map(alpha, -1.0) == pytest.approx(-1.0, abs=1e-15)

    def test_exact_argument(self):
        assert kte_map(1, Fraction(1, 3)) == pytest.approx(0.5, abs=1e-16)


class TestEquispaced:
    def test_first_kind_classical(self):
        assert equispaced_first_kind(2, C).abscissae == (0.5, -0.5)
        assert equispaced_first_kind(1, C).abscissae == (0.0,)

    def test_first_kind_shifted(self):
        ps = equispaced_first_kind(3, make_params("1/2", "1/4"))
        assert ps.exact == (Fraction(13, 24), Fraction(3, 24), Fraction(-7, 24))

    def test_lobatto(self):
        assert equispaced_lobatto(2, C).abscissae == (1.0, -1.0)
        assert equispaced_lobatto(3, C).abscissae == (1.0, 0.0, -1.0)
        assert equispaced_lobatto(4, make_params("1/2", 0)).abscissae == (1.0, 0.5, 0.0, -0.5)

    def test_errors(self):
        with pytest.raises(DomainError):
            equispaced_first_kind(0, C)
        with pytest.raises(DomainError):
            equispaced_lobatto(1, C)

    @given(st.integers(2, 60), param_pairs())
    def test_lobatto_spans_omega_bar(self, count, p):
        ps = equispaced_lobatto(count, p)
        assert ps.exact[0] == 1 - p.gamma and ps.exact[-1] == p.beta - 1


class TestMapping:
    def test_first_kind(self):
        got = map_pointset(equispaced_first_kind(5, C), 1).array
        np.testing.assert_allclose(got, cheb_points(5, C).array, atol=1e-15, rtol=0)

    def test_lobatto(self):
        p = make_params("1/3", "1/5")
        got = map_pointset(equispaced_lobatto(6, p), 1)
        np.testing.assert_allclose(got.array, lobatto_points(6, p).array, atol=1e-15, rtol=0)
        assert got.kind is PointKind.LOBATTO

    def test_single_zero(self):
        assert map_pointset(equispaced_first_kind(1, C), 1).abscissae == (0.0,)

    def test_float_params(self):
        p = make_params_float(0.3141, 0.2718)
        got = map_pointset(equispaced_lobatto(17, p), 1).array
        np.testing.assert_allclose(got, lobatto_points(17, p).array, atol=1e-14, rtol=0)
        got = map_pointset(equispaced_first_kind(17, p), 1).array
        np.testing.assert_allclose(got, cheb_points(17, p).array, atol=1e-14, rtol=0)

    def test_alpha_below_one_keeps_order(self):
        got = map_pointset(equispaced_lobatto(9, C), 0.5)
        assert got.kind is PointKind.EQUISPACED_LOBATTO and got.alpha == 0.5
        assert got.count == 9


class TestChebAsLobatto:
    def test_classical_three(self):
        shifted, ps = cheb_as_lobatto(3, C)
        assert (shifted.beta, shifted.gamma) == (Fraction(1, 3), Fraction(1, 3))
        np.testing.assert_allclose(ps.array, [math.sqrt(3) / 2, 0.0, -math.sqrt(3) / 2], atol=1e-15)

    def test_classical_two(self):
        shifted, ps = cheb_as_lobatto(2, C)
        assert (shifted.beta, shifted.gamma) == (Fraction(1, 2), Fraction(1, 2))
        np.testing.assert_allclose(ps.array, cheb_points(2, C).array, atol=1e-15, rtol=0)

    def test_general(self):
        p = make_params("1/3", "1/5")
        shifted, ps = cheb_as_lobatto(4, p)
        assert shifted.beta == Fraction(1, 3) + Fraction(11, 60)
        assert shifted.gamma == Fraction(1, 5) + Fraction(11, 60)
        np.testing.assert_allclose(ps.array, cheb_points(4, p).array, atol=1e-14, rtol=0)

    def test_single_point_degenerate(self):
        with pytest.raises(DomainError):
            cheb_as_lobatto(1, C)

    def test_float(self):
        p = make_params_float(0.4, 0.1)
        _, ps = cheb_as_lobatto(11, p)
        np.testing.assert_allclose(ps.array, cheb_points(11, p).array, atol=1e-14, rtol=0)


class TestSetSymmetry:
    @given(st.integers(1, 80), st.fractions(min_value=0, max_value=Fraction(59, 30), max_denominator=60))
    def test_first_kind(self, n, nu):
        a = cheb_points(n, make_params(nu, 0)).array
        b = cheb_points(n, make_params(0, nu)).array
        np.testing.assert_allclose(-a[::-1], b, atol=1e-14, rtol=0)

    @given(st.integers(2, 80), st.fractions(min_value=0, max_value=Fraction(59, 30), max_denominator=60))
    def test_lobatto(self, n, nu):
        a = lobatto_points(n, make_params(nu, 0)).array
        b = lobatto_points(n, make_params(0, nu)).array
        np.testing.assert_allclose(-a[::-1], b, atol=1e-14, rtol=0)


class TestPointSet:
    @given(st.integers(2, 50), param_pairs())
    def test_strictly_decreasing(self, n, p):
        for ps in (cheb_points(n, p), lobatto_points(n, p), extrema_points(n, p)):
            assert all(a > b for a, b in zip(ps.abscissae, ps.abscissae[1:]))

    def test_validation(self):
        with pytest.raises(DomainError):
            PointSet((0.1, 0.2), PointKind.LOBATTO, C)
        with pytest.raises(DomainError):
            PointSet((1.5,), PointKind.LOBATTO, C)
        with pytest.raises(DomainError):
            PointSet((), PointKind.LOBATTO, C)

    def test_csv(self):
        assert lobatto_points(3, C).to_csv() == "1\n0\n-1\n"
        line = cheb_points(3, C).to_csv().splitlines()[0]
        assert float(line) == math.cos(math.pi / 6) or abs(float(line) - math.cos(math.pi / 6)) < 1e-16
        assert len(line.replace("0.", "").lstrip("0")) >= 16

    @given(st.integers(2, 40), param_pairs())
    def test_json_round_trip(self, n, p):
        ps = lobatto_points(n, p)
        assert PointSet.from_json(ps.to_json()) == ps

    def test_json_round_trip_float(self):
        ps = cheb_points(7, make_params_float(0.123, 0.456))
        back = PointSet.from_json(ps.to_json())
        assert back == ps and not back.params.exact

    def test_json_layout(self):
        d = lobatto_points(3, make_params("1/3", 0)).to_dict()
        assert d["kind"] == "lobatto"
        assert d["params"]["beta"] == "1/3" and d["params"]["gamma"] == "0"
        assert len(d["abscissae"]) == 3

    def test_random_mapping_identities(self):
        rng = random.Random(3)
        for _ in range(10):
            p = random_pair(rng)
            n = rng.randint(2, 100)
            np.testing.assert_allclose(
                map_pointset(equispaced_lobatto(n, p), 1).array, lobatto_points(n, p).array, atol=1e-14, rtol=0
            )
