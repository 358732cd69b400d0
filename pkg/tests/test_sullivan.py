from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higher_tc.errors import (
    AlgebraError,
    ContradictionError,
    DomainError,
    InsufficientTruncation,
    ParseError,
    ResourceError,
)
from higher_tc.graded_algebra import cup_length, validate, zcl_r
from higher_tc.sullivan import (
    MtcBounds,
    PureOddCertificate,
    apply_d,
    cat_pure_odd,
    cohomology,
    cohomology_ring,
    is_minimal,
    is_pure_odd,
    kr_generators,
    kr_ideal_powers,
    kr_power_vanishes,
    kr_power_vanishes_bruteforce,
    make_model,
    mtc_bounds,
    mu_r,
    parse_model,
    pure_odd_certificate,
    tc_mtc_pure_odd,
)

from conftest import EXAMPLE_ODD_TEXT

ODD_SPHERE = "gen x 3\n"
S2 = "gen a 2\ngen b 3\nd b = a^2\n"
# pure-odd, two nontrivial differentials
FOUR = "gen x 3\ngen y 3\ngen z 5\ngen w 7\nd z = x*y\nd w = x*z\n"
CP2 = "gen a 2\ngen b 5\nd b = a^3\n"
MIXED = "gen a 2\ngen b 2\ngen c 3\ngen e 3\nd c = a*b\nd e = a^2 - b^2\n"

PURE_ODD_SUITE = [
    ODD_SPHERE,
    "gen x 3\ngen y 3\n",
    "gen x 3\ngen y 5\ngen z 7\n",
    EXAMPLE_ODD_TEXT,
    "gen x 3\ngen y 3\ngen z 3\n",
]


def mono(m, s):
    return m.algebra.parse(s)


class TestParseModel:
    def test_example(self, odd_model):
        assert odd_model.names == ("x", "y", "z")
        assert odd_model.degrees == (3, 3, 5)
        assert odd_model.dgen[2] == mono(odd_model, "x*y")

    def test_implicit_zero_differential(self):
        m = parse_model(ODD_SPHERE)
        assert m.dgen == ({},)

    def test_degree_mismatch(self):
        with pytest.raises(ParseError, match="degree 5, expected 6") as exc:
            parse_model("gen z 5\nd z = z")
        assert exc.value.line == 2

    def test_d_squared_reports_residue(self):
        # d(ab) = a^3 != 0
        with pytest.raises(AlgebraError, match=r"d\(d c\) = a\^3"):
            parse_model("gen a 2\ngen b 3\ngen c 4\nd b = a^2\nd c = a*b\n")

    def test_odd_square_rejected(self):
        with pytest.raises(ParseError, match="squared") as exc:
            parse_model("gen x 3\ngen w 7\nd w = x*x\n")
        assert (exc.value.line, exc.value.col) == (3, 7)

    def test_column_of_bad_token(self):
        with pytest.raises(ParseError) as exc:
            parse_model("gen x 3\ngen z 5\nd z = x * $\n")
        assert exc.value.line == 3 and exc.value.col == 11

    def test_juxtaposition_is_a_name(self):
        with pytest.raises(ParseError, match="unknown generator 'xy'"):
            parse_model("gen x 3\ngen y 3\ngen z 5\nd z = xy\n")

    def test_low_degree_rejected(self):
        with pytest.raises(ParseError):
            parse_model("gen t 1\n")

    def test_rational_coefficients_and_unicode_minus(self):
        m = parse_model("gen a 2\ngen b 2\ngen c 3\nd c = 1/2*a*b − 3*b^2\n")
        assert m.dgen[2] == {(1, 1, 0): Fraction(1, 2), (0, 2, 0): Fraction(-3)}

    def test_make_model_matches_parser(self, odd_model):
        m = make_model([("x", 3), ("y", 3), ("z", 5)], {"z": "x*y"})
        assert m.dgen == odd_model.dgen


class TestDifferential:
    def test_examples(self, odd_model):
        assert apply_d(odd_model, "z") == mono(odd_model, "x*y")
        assert apply_d(odd_model, odd_model.algebra.one()) == {}
        assert apply_d(odd_model, "x*z") == {}

    def test_sign_on_odd_prefix(self):
        m = parse_model(FOUR)
        # d(yz) = -y*xy = 0, d(zw) = xy*w - z*xz = x*y*w
        assert apply_d(m, "z*w") == mono(m, "x*y*w")

    @pytest.mark.parametrize("text", [EXAMPLE_ODD_TEXT, FOUR, S2, CP2, MIXED])
    def test_d_squared_zero_on_monomials(self, text):
        m = parse_model(text)
        for d in range(0, 16):
            for e in m.algebra.monomials(d):
                assert m.d(m.d_mono(e)) == {}

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([FOUR, S2, CP2, MIXED]), st.data())
    def test_leibniz(self, text, data):
        m = parse_model(text)
        A = m.algebra
        monos = [e for d in range(0, 12) for e in A.monomials(d)]
        p = {data.draw(st.sampled_from(monos)): Fraction(data.draw(st.integers(-3, 3)))}
        q = {data.draw(st.sampled_from(monos)): Fraction(data.draw(st.integers(-3, 3)))}
        p = {k: v for k, v in p.items() if v}
        q = {k: v for k, v in q.items() if v}
        if not p or not q:
            return
        sign = -1 if A.degree(p) % 2 else 1
        lhs = m.d(A.mul(p, q))
        rhs = A.mul(m.d(p), q)
        for k, v in A.mul(p, m.d(q)).items():
            rhs[k] = rhs.get(k, 0) + sign * v
        assert lhs == {k: v for k, v in rhs.items() if v}


class TestCohomology:
    def test_example_dims(self, odd_model):
        H = cohomology(odd_model, 11)
        assert H.dims == {0: 1, 3: 2, 8: 2, 11: 1}
        assert H.betti(6) == 0
        reps = {d: [odd_model.algebra.format(p) for p in ps] for d, ps in H.representatives.items()}
        assert reps == {0: ["1"], 3: ["x", "y"], 8: ["xz", "yz"], 11: ["xyz"]}

    def test_xy_is_a_coboundary(self, odd_model):
        H = cohomology(odd_model)
        assert H.class_of(mono(odd_model, "x*y")) == []

    def test_odd_sphere(self):
        assert cohomology(parse_model(ODD_SPHERE)).dims == {0: 1, 3: 1}

    def test_cp2(self):
        assert cohomology(parse_model(CP2), 12).dims == {0: 1, 2: 1, 4: 1}

    def test_truncation_errors(self):
        m = parse_model(S2)
        with pytest.raises(InsufficientTruncation):
            cohomology(m)
        H = cohomology(m, 5)
        with pytest.raises(InsufficientTruncation) as exc:
            H.betti(9)
        assert exc.value.required_degree == 9

    @pytest.mark.parametrize("text", PURE_ODD_SUITE + [FOUR])
    def test_euler_characteristic_vanishes(self, text):
        assert cohomology(parse_model(text)).euler_characteristic() == 0


class TestCohomologyRing:
    def test_example_ring(self, odd_model, ring):
        R = cohomology_ring(odd_model)
        assert R.labels == ring.labels
        assert R.degrees == ring.degrees
        assert R._table == ring._table
        assert R.complete
        assert cup_length(R) == 2

    def test_odd_sphere(self):
        R = cohomology_ring(parse_model(ODD_SPHERE))
        assert R.labels == ["1", "x"] and R.degrees == [0, 3]

    def test_cp2_truncated(self):
        m = parse_model(CP2)
        R = cohomology_ring(m, 4)
        assert R.labels == ["1", "a", "a^2"]
        assert cup_length(R) == 2
        assert not R.complete

    def test_products_beyond_truncation(self):
        with pytest.raises(InsufficientTruncation) as exc:
            cohomology_ring(parse_model(CP2), 2)
        assert exc.value.required_degree == 4

    def test_even_model_needs_truncation(self):
        with pytest.raises(InsufficientTruncation):
            cohomology_ring(parse_model(S2))

    def test_non_monomial_representatives(self):
        m = parse_model(MIXED)
        R = cohomology_ring(m, 8)
        validate(R)
        assert R.degrees.count(4) == 1  # a^2 ~ b^2, ab ~ 0

    @pytest.mark.parametrize("text", PURE_ODD_SUITE + [FOUR])
    def test_passes_validation(self, text):
        validate(cohomology_ring(parse_model(text)))


class TestPureOdd:
    def test_is_pure_odd(self, odd_model):
        assert is_pure_odd(odd_model)
        assert not is_pure_odd(parse_model(S2))
        assert is_pure_odd(make_model([]))

    def test_minimality(self):
        assert is_minimal(parse_model(FOUR))
        assert not is_minimal(parse_model("gen a 4\ngen b 3\nd b = a\n"))

    def test_cat(self, odd_model):
        assert cat_pure_odd(odd_model) == 3
        assert cat_pure_odd(parse_model(ODD_SPHERE)) == 1
        five = make_model([(f"x{i}", 3) for i in range(5)])
        assert cat_pure_odd(five) == 5
        assert cup_length(cohomology_ring(five)) == 5

    def test_cat_refuses_even(self):
        with pytest.raises(DomainError):
            cat_pure_odd(parse_model(S2))

    def test_tc(self, odd_model):
        assert tc_mtc_pure_odd(odd_model, 2) == 3
        assert tc_mtc_pure_odd(odd_model, 5) == 12
        assert tc_mtc_pure_odd(parse_model(ODD_SPHERE), 4) == 3
        with pytest.raises(DomainError):
            tc_mtc_pure_odd(odd_model, 1)


class TestKr:
    def test_generators(self, odd_model):
        K = kr_generators(odd_model, 2)
        assert K.labels == ("x(1) - x(2)", "y(1) - y(2)", "z(1) - z(2)")
        K3 = kr_generators(parse_model(ODD_SPHERE), 3)
        assert K3.labels == ("x(1) - x(2)", "x(2) - x(3)")

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_generator_count_and_mu(self, odd_model, r):
        K = kr_generators(odd_model, r)
        assert len(K.generators) == odd_model.dim_v * (r - 1)
        for g in K.generators:
            assert mu_r(odd_model, r, g) == {}

    def test_mu_on_a_product(self, odd_model):
        K = kr_generators(odd_model, 2)
        T = K.algebra
        # y(1) * x(2) multiplies out to y*x = -x*y
        p = T.mul(T.generator(1), T.generator(3))
        assert mu_r(odd_model, 2, p) == {(1, 1, 0): -1}

    def test_vanishing_examples(self, odd_model):
        assert kr_power_vanishes(odd_model, 2, 3)
        assert not kr_power_vanishes(odd_model, 2, 2)
        assert kr_power_vanishes(parse_model(ODD_SPHERE), 2, 1)

    def test_ideal_power_dimensions(self, odd_model):
        # ker(mu_2) has dimension 64 - 8 = 56
        assert kr_ideal_powers(odd_model, 2, 5) == [56, 32, 8, 0]

    @pytest.mark.parametrize("text", PURE_ODD_SUITE[:4])
    @pytest.mark.parametrize("r", [2, 3])
    def test_pure_odd_exponent_is_sharp(self, text, r):
        m = parse_model(text)
        n = (r - 1) * m.dim_v
        assert kr_power_vanishes(m, r, n)
        assert not kr_power_vanishes(m, r, n - 1)
        assert kr_power_vanishes_bruteforce(m, r, n)
        assert not kr_power_vanishes_bruteforce(m, r, n - 1)

    @pytest.mark.parametrize("text", PURE_ODD_SUITE[:4])
    def test_monotone(self, text):
        m = parse_model(text)
        flags = [kr_power_vanishes(m, 2, n) for n in range(0, 6)]
        first = flags.index(True)
        assert all(flags[first:])

    def test_refuses_even(self):
        with pytest.raises(DomainError):
            kr_power_vanishes(parse_model(S2), 2, 1)

    def test_cap(self, odd_model):
        with pytest.raises(ResourceError):
            kr_power_vanishes(odd_model, 3, 6, cap=100)


class TestBounds:
    def test_examples(self, odd_model):
        assert mtc_bounds(3, 2, None, 4) == MtcBounds(4, 9, 12, None)
        assert mtc_bounds(1, 1, None, 2) == MtcBounds(2, 1, 2, None)
        b = mtc_bounds(3, 2, None, 5, certificate=tc_mtc_pure_odd(odd_model, 5))
        assert (b.lower, b.upper, b.exact) == (12, 15, 12)

    def test_zcl_iteration(self):
        # MTC_2 >= zcl_2 = 4, then +cup per step
        b = mtc_bounds(3, 2, {2: 4}, 4)
        assert b.lower == 9
        b = mtc_bounds(5, 3, {2: 6}, 3)
        assert b.lower == 10

    def test_contradictions(self):
        with pytest.raises(ContradictionError):
            mtc_bounds(2, 3, None, 2)
        with pytest.raises(ContradictionError):
            mtc_bounds(1, 1, {2: 5}, 2)
        with pytest.raises(ContradictionError):
            mtc_bounds(3, 2, None, 2, certificate=9)

    def test_unknown_cat(self):
        b = mtc_bounds(None, 1, {2: 2}, 3)
        assert b.lower == 3 and b.upper is None

    def test_certificate(self, odd_model):
        c = pure_odd_certificate(odd_model, 2)
        assert c == PureOddCertificate(2, 3, 3, True)
        assert mtc_bounds(3, 2, None, 2, certificate=c).exact == 3
        with pytest.raises(DomainError):
            mtc_bounds(3, 2, None, 3, certificate=c)

    @pytest.mark.slow
    def test_bound_chain_example(self, odd_model):
        R = cohomology_ring(odd_model)
        for r in (2, 3):
            assert zcl_r(R, r) <= (r - 1) * 3 <= r * 3
        assert zcl_r(R, 4) < 3 * 3
