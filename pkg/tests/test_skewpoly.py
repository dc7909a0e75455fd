from __future__ import annotations

from random import Random

import pytest

from skewcodes import FieldMismatchError, FiniteField, SkewPolyRing
from conftest import nonzero, nonzero_poly, random_poly


class TestMul:
    def test_commutation_rule(self, ring9):
        # x * y = sigma(y) x = (2y) x
        gf9 = ring9.field
        prod = ring9.x * ring9.constant(gf9.parse_element("0:1"))
        assert prod == ring9.poly([gf9.zero, gf9.parse_element("0:2")])

    def test_classical_product(self, ring3):
        gf3 = ring3.field
        f = ring3.poly([gf3.one, gf3.one])               # x + 1
        g = ring3.poly([gf3.from_int(2), gf3.one])       # x + 2
        assert f * g == ring3.poly([gf3.from_int(2), gf3.zero, gf3.one])  # x^2 + 2

    def test_identity(self, ring9):
        rng = Random(41)
        for _ in range(50):
            f = random_poly(ring9, rng, 5)
            assert f * ring9.one == f
            assert ring9.one * f == f

    def test_commutation_with_inner_derivation(self, ring9_inner):
        # x*a = sigma(a) x + delta(a), checked coefficient by coefficient
        field = ring9_inner.field
        rng = Random(43)
        for _ in range(200):
            a = field.random_element(rng)
            prod = ring9_inner.x * ring9_inner.constant(a)
            assert prod.coeff(1) == field.sigma(a)
            assert prod.coeff(0) == field.delta(a)

    @pytest.mark.parametrize("ring_name", ["ring9", "ring9_inner", "ring25", "ringz"])
    def test_degree_additivity(self, ring_name, request):
        ring = request.getfixturevalue(ring_name)
        rng = Random(47)
        count = 120 if ring.field.kind == "rational" else 400
        for _ in range(count):
            f = nonzero_poly(ring, rng, rng.randint(0, 4), 2)
            g = nonzero_poly(ring, rng, rng.randint(0, 4), 2)
            assert (f * g).degree == f.degree + g.degree

    def test_associativity_randomized(self, ring9_inner):
        rng = Random(53)
        for _ in range(200):
            f = random_poly(ring9_inner, rng, 3)
            g = random_poly(ring9_inner, rng, 3)
            h = random_poly(ring9_inner, rng, 3)
            assert (f * g) * h == f * (g * h)

    def test_field_mismatch_rejected(self, ring9, ring25):
        with pytest.raises(FieldMismatchError):
            ring9.x * ring25.x


class TestRightDivmod:
    def test_classical_division(self, ring3):
        gf3 = ring3.field
        f = ring3.monomial(2)
        q, r = divmod(f, ring3.x_minus(gf3.one))
        assert q == ring3.poly([gf3.one, gf3.one])
        assert r == ring3.one

    def test_remainder_is_norm(self, ring9):
        # x^2 divided by (x - 1) leaves N_2(1) = 1
        q, r = divmod(ring9.monomial(2), ring9.x_minus(ring9.field.one))
        assert r == ring9.one

    def test_divide_by_constant(self, ring9):
        rng = Random(59)
        for _ in range(100):
            f = random_poly(ring9, rng, 4)
            c = ring9.constant(nonzero(ring9.field, rng))
            q, r = divmod(f, c)
            assert r.is_zero
            assert q * c == f

    def test_zero_divisor_rejected(self, ring9):
        with pytest.raises(ZeroDivisionError):
            divmod(ring9.one, ring9.zero)

    @pytest.mark.parametrize("ring_name", ["ring9", "ring9_inner", "ring25", "ringz"])
    def test_reconstruction(self, ring_name, request):
        ring = request.getfixturevalue(ring_name)
        rng = Random(61)
        count = 120 if ring.field.kind == "rational" else 400
        for _ in range(count):
            f = random_poly(ring, rng, rng.randint(0, 6), 2)
            g = nonzero_poly(ring, rng, rng.randint(0, 4), 2)
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree


class TestEvaluation:
    def test_classical_power(self, ring3):
        two = ring3.field.from_int(2)
        assert ring3.monomial(2).evaluate(two) == ring3.field.one  # 4 mod 3

    def test_gf9_norm_evaluation(self, ring9):
        a = ring9.field.parse_element("1:1")
        assert ring9.monomial(2).evaluate(a) == ring9.field.from_int(2)  # (y+1)^4 = 2

    def test_zero_polynomial(self, ring9):
        rng = Random(67)
        for _ in range(20):
            assert ring9.zero.evaluate(ring9.field.random_element(rng)) == ring9.field.zero

    @pytest.mark.parametrize("ring_name", ["ring9", "ring9_inner", "ring25", "ringz"])
    def test_recursion_equals_division_remainder(self, ring_name, request):
        ring = request.getfixturevalue(ring_name)
        rng = Random(71)
        count = 120 if ring.field.kind == "rational" else 400
        for _ in range(count):
            f = random_poly(ring, rng, rng.randint(0, 5), 2)
            a = ring.field.random_element(rng, 2)
            assert f.evaluate(a) == f.evaluate_by_remainder(a)

    def test_left_linearity(self, ring9_inner):
        field = ring9_inner.field
        rng = Random(73)
        for _ in range(300):
            f = random_poly(ring9_inner, rng, 4)
            g = random_poly(ring9_inner, rng, 4)
            c = field.random_element(rng)
            a = field.random_element(rng)
            lhs = (ring9_inner.constant(c) * f + g).evaluate(a)
            rhs = field.add(field.mul(c, f.evaluate(a)), g.evaluate(a))
            assert lhs == rhs


class TestTruncatedNorm:
    def test_n0_is_one(self, ring9):
        rng = Random(79)
        for _ in range(20):
            assert ring9.truncated_norm(ring9.field.random_element(rng), 0) == ring9.field.one

    def test_classical_norms_are_powers(self, ring3):
        field = ring3.field
        for n in range(3):
            a = field.from_int(n)
            for i in range(5):
                assert ring3.truncated_norm(a, i) == field.pow(a, i)

    def test_gf9_example(self, ring9):
        assert ring9.truncated_norm(ring9.field.parse_element("1:1"), 2) == ring9.field.from_int(2)

    @pytest.mark.parametrize("ring_name", ["ring9", "ring9_inner", "ring25", "ringz"])
    def test_recursion_step(self, ring_name, request):
        # N_{i+1}(b) = sigma(N_i(b)) * b + delta(N_i(b)), and N_i = eval of x^i
        ring = request.getfixturevalue(ring_name)
        field = ring.field
        rng = Random(83)
        count = 120 if field.kind == "rational" else 400
        for _ in range(count):
            b = field.random_element(rng, 2)
            i = rng.randint(0, 5)
            ni = ring.truncated_norm(b, i)
            step = field.add(field.mul(field.sigma(ni), b), field.delta(ni))
            assert step == ring.truncated_norm(b, i + 1)
            assert ni == ring.monomial(i).evaluate(b)


class TestOperators:
    def test_power_zero_is_identity(self, ring9):
        rng = Random(89)
        for _ in range(20):
            a = ring9.field.random_element(rng)
            b = ring9.field.random_element(rng)
            assert ring9.operator_power(a, b, 0) == b

    def test_gabidulin_case(self, ring9):
        # a = 1, delta = 0: D_1^i(b) = sigma^i(b)
        field = ring9.field
        rng = Random(97)
        for _ in range(100):
            b = field.random_element(rng)
            i = rng.randint(0, 4)
            expect = b
            for _ in range(i):
                expect = field.sigma(expect)
            assert ring9.operator_power(field.one, b, i) == expect

    def test_hand_expansion(self, ring9):
        field = ring9.field
        a = field.parse_element("1:1")
        y = field.parse_element("0:1")
        assert ring9.operator_power(a, y, 1) == field.parse_element("1:2")  # y^3(y+1) = 2y+1

    def test_operator_eval_constant(self, ring9):
        field = ring9.field
        rng = Random(101)
        for _ in range(50):
            c = field.random_element(rng)
            b = field.random_element(rng)
            assert ring9.operator_eval(field.one, ring9.constant(c), b) == field.mul(c, b)

    def test_sigma_square_via_x2(self, ring9):
        field = ring9.field
        y = field.parse_element("0:1")
        assert ring9.operator_eval(field.one, ring9.monomial(2), y) == y  # sigma has order 2

    @pytest.mark.parametrize("ring_name", ["ring9", "ring9_inner", "ring25", "ringz"])
    def test_operator_lemma(self, ring_name, request):
        # F(D(b) b^-1) = F^D(b) b^-1 for every a, nonzero b
        ring = request.getfixturevalue(ring_name)
        field = ring.field
        rng = Random(103)
        count = 120 if field.kind == "rational" else 500
        for _ in range(count):
            a = field.random_element(rng, 2)
            b = nonzero(field, rng, 2)
            f = random_poly(ring, rng, 4, 2)
            binv = field.inv(b)
            conj = field.add(
                field.mul(field.mul(field.sigma(b), a), binv),
                field.mul(field.delta(b), binv),
            )
            assert f.evaluate(conj) == field.mul(ring.operator_eval(a, f, b), binv)

    @pytest.mark.parametrize("ring_name", ["ring9", "ring9_inner", "ring25"])
    def test_right_centralizer_linearity(self, ring_name, request):
        # F(b*lam) = F(b)*lam for lam in the centralizer of a
        from skewcodes import in_centralizer

        ring = request.getfixturevalue(ring_name)
        field = ring.field
        rng = Random(107)
        for _ in range(500):
            a = field.random_element(rng)
            b = field.random_element(rng)
            lam = rng.choice(field.subfield_elements(field.centralizer_tag(a)))
            assert in_centralizer(field, a, lam)
            f = random_poly(ring, rng, 4)
            lhs = ring.operator_eval(a, f, field.mul(b, lam))
            rhs = field.mul(ring.operator_eval(a, f, b), lam)
            assert lhs == rhs

    def test_right_centralizer_linearity_rational(self, ringz):
        field = ringz.field
        rng = Random(109)
        for _ in range(120):
            a = field.random_element(rng, 2)
            b = field.random_element(rng, 2)
            lam = field.random_base_element(rng, 1)
            f = random_poly(ringz, rng, 3, 2)
            lhs = ringz.operator_eval(a, f, field.mul(b, lam))
            rhs = field.mul(ringz.operator_eval(a, f, b), lam)
            assert lhs == rhs

    @pytest.mark.parametrize("ring_name", ["ring9", "ring25"])
    def test_zero_derivation_power_formula(self, ring_name, request):
        # delta = 0: D_a^i(b) = sigma^i(b) * N_i(a)
        ring = request.getfixturevalue(ring_name)
        field = ring.field
        rng = Random(113)
        for _ in range(500):
            a = field.random_element(rng)
            b = field.random_element(rng)
            i = rng.randint(0, 5)
            sig = b
            for _ in range(i):
                sig = field.sigma(sig)
            assert ring.operator_power(a, b, i) == field.mul(sig, ring.truncated_norm(a, i))


class TestZeroDerivationIsomorphism:
    def test_constant_fixed(self, ring9_inner):
        c = ring9_inner.constant(ring9_inner.field.parse_element("2:1"))
        image = ring9_inner.to_zero_derivation(c)
        assert image.coeffs == c.coeffs

    def test_variable_translation(self, ring9_inner):
        field = ring9_inner.field
        target = ring9_inner.zero_derivation_ring()
        # forward: x -> x + gamma; inverse: x -> x - gamma
        assert ring9_inner.to_zero_derivation(ring9_inner.x) == target.poly(
            (field.gamma, field.one)
        )
        assert ring9_inner.from_zero_derivation(target.x) == ring9_inner.x_minus(field.gamma)

    def test_x_minus_gamma_commutes_like_zero_derivation_variable(self, ring9_inner):
        # (x - gamma) * b = sigma(b) * (x - gamma): the substitution is forced.
        field = ring9_inner.field
        rng = Random(125)
        t = ring9_inner.x_minus(field.gamma)
        for _ in range(100):
            b = field.random_element(rng)
            assert t * ring9_inner.constant(b) == ring9_inner.constant(field.sigma(b)) * t

    def test_ring_isomorphism_randomized(self, ring9_inner):
        rng = Random(127)
        for _ in range(300):
            f = random_poly(ring9_inner, rng, 4)
            g = random_poly(ring9_inner, rng, 4)
            fi = ring9_inner.to_zero_derivation(f)
            gi = ring9_inner.to_zero_derivation(g)
            assert ring9_inner.to_zero_derivation(f * g) == fi * gi
            assert ring9_inner.to_zero_derivation(f + g) == fi + gi
            assert fi.degree == f.degree
            assert ring9_inner.from_zero_derivation(fi) == f

    def test_rational_kind_rejected(self, ringz):
        with pytest.raises(ValueError):
            ringz.to_zero_derivation(ringz.x)


class TestSerialization:
    def test_format_example(self, ring9):
        gf9 = ring9.field
        f = ring9.poly([gf9.one, gf9.parse_element("0:2")])
        assert ring9.format_poly(f) == "1;0:2"
        assert ring9.parse_poly("1;0:2") == f

    def test_zero_prints_as_zero(self, ring9):
        assert ring9.format_poly(ring9.zero) == "0"
        assert ring9.parse_poly("0") == ring9.zero

    @pytest.mark.parametrize("ring_name", ["ring9", "ringz"])
    def test_roundtrip(self, ring_name, request):
        ring = request.getfixturevalue(ring_name)
        rng = Random(131)
        for _ in range(100):
            f = random_poly(ring, rng, 5, 2)
            assert ring.parse_poly(ring.format_poly(f)) == f
