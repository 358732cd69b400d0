"""
Acceptance suite. Each criterion prints one PASS/FAIL line to the terminal.

    pytest tests/test_acceptance.py -v
"""

import random
from itertools import combinations

import pytest

from higher_tc import (
    cat_pure_odd,
    clique_number,
    cohomology_ring,
    cup_length,
    gamma_degree_check,
    gamma_n,
    kr_power_vanishes,
    make_sequence,
    mtc_bounds,
    parse_graph,
    parse_model,
    series_to_P,
    tc_mtc_pure_odd,
    z_gamma_closed_form,
    z_r,
    z_r_bruteforce,
    zcl_r,
)
from higher_tc.errors import ContradictionError
from higher_tc.genfunc import expand_over_one_minus_x_squared
from higher_tc.graph_core import Graph, complete_graph
from higher_tc.sullivan import kr_power_vanishes_bruteforce

from conftest import EXAMPLE_GRAPH_TEXT, EXAMPLE_ODD_TEXT, even_sphere, example_ring, exterior, odd_sphere


@pytest.fixture
def report(request, capsys):
    """Run the body; print PASS or FAIL for the criterion either way."""
    name = request.node.name

    def _report(ok_label, fn):
        try:
            fn()
        except BaseException:
            with capsys.disabled():
                print(f"\nFAIL  {ok_label}")
            raise
        with capsys.disabled():
            print(f"\nPASS  {ok_label}")

    return _report


def random_graphs(count, max_n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.random()
        out.append(Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p]))
    return out


def test_1_example_graph(report):
    def body():
        g = parse_graph(EXAMPLE_GRAPH_TEXT)
        assert clique_number(g) == 3
        assert z_r(g, 2) == 5
        assert z_r(g, 3) == 9
        for r in range(3, 7):
            assert z_r(g, r) == 3 * r

    report("1 example graph: c = 3, z_2 = 5, z_3 = 9, z_r = 3r (3 <= r <= 6)", body)


def test_2_gamma_family(report):
    def body():
        for n in (2, 3, 4):
            g = gamma_n(n)
            z = {r: z_r(g, r) for r in range(2, max(7, n + 3))}
            for r in range(2, 7):
                expected = (r - 1) * (n + 1) + r if r <= n else r * (n + 1)
                assert z[r] == expected == z_gamma_closed_form(n, r), (n, r)
            cat = clique_number(g)
            assert cat == n + 1
            assert z[n + 1] - z[n] == n + 2 > cat
            for r in range(n + 1, max(z)):
                assert z[r + 1] - z[r] == cat

    report("2 Gamma_n (n = 2,3,4): search == closed form, TC_{n+1} - TC_n = n+2 > cat", body)


def test_3_oracle_equivalence(report):
    def body():
        suite = [parse_graph(EXAMPLE_GRAPH_TEXT), gamma_n(2)] + [complete_graph(m) for m in range(1, 8)]
        graphs = suite + random_graphs(50, 7, seed=20260415)
        assert len(graphs) == len(suite) + 50
        for g in graphs:
            assert g.n <= 7
            for r in (2, 3):
                assert z_r(g, r) == z_r_bruteforce(g, r), (g, r)

    report("3 z_r == brute force on suite graphs and 50 random graphs (<= 7 vertices, r = 2,3)", body)


def test_4_generating_function(report):
    def body():
        seq = make_sequence([5, 9, 12], 3, 2)
        P = series_to_P(seq)
        assert P.coefficients == (0, 5, -1, -1)
        assert expand_over_one_minus_x_squared(P, 10) == seq.terms(10)
        assert P(1) == 3 == clique_number(gamma_n(2))
        for n in range(2, 6):
            Pn, ok = gamma_degree_check(n)
            assert ok and Pn.degree == n + 1 and Pn(1) == n + 1

    report("4 P(x) = 5x - x^2 - x^3 for Gamma_2, P(1) = 3; deg P = P(1) = n+1 for n = 2..5", body)


def test_5_example_odd_model(report):
    def body():
        m = parse_model(EXAMPLE_ODD_TEXT)
        R = cohomology_ring(m)
        assert sorted(zip(R.labels, R.degrees)) == sorted(
            [("1", 0), ("x", 3), ("y", 3), ("xz", 8), ("yz", 8), ("xyz", 11)]
        )
        # every product of three positive-degree classes vanishes
        pos = [i for i, d in enumerate(R.degrees) if d > 0]
        for a in pos:
            for b in pos:
                ab = R.product_vec({a: 1}, {b: 1})
                for c in pos:
                    assert not R.product_vec(ab, {c: 1})
        assert cup_length(R) == 2
        assert cat_pure_odd(m) == 3
        for r in range(2, 7):
            assert tc_mtc_pure_odd(m, r) == 3 * (r - 1)

    report("5 example-odd model: basis 1,x,y,xz,yz,xyz; reduced cube zero; cup 2; cat 3; TC_r = 3(r-1)", body)


def test_6_kr_nilpotency(report):
    def body():
        m = parse_model(EXAMPLE_ODD_TEXT)
        assert kr_power_vanishes(m, 2, 3) is True
        assert kr_power_vanishes(m, 2, 2) is False
        assert kr_power_vanishes(parse_model("gen x 3\n"), 2, 1) is True
        xy = parse_model("gen x 3\ngen y 3\n")
        assert kr_power_vanishes_bruteforce(xy, 3, 4) is True
        assert kr_power_vanishes_bruteforce(xy, 3, 3) is False
        assert kr_power_vanishes(xy, 3, 4) is True
        assert kr_power_vanishes(xy, 3, 3) is False

    report("6 K_r nilpotency: example (2,3) yes, (2,2) no; L(x) (2,1) yes; L(x,y) r=3 at 4 yes, 3 no", body)


def zcl_suite():
    return {
        "odd sphere": odd_sphere(),
        "even sphere": even_sphere(),
        "S3xS3": exterior(3, 3),
        "S2xS2": exterior(2, 2),
        "T^3": exterior(1, 1, 1),
        "example ring": example_ring(),
    }


def test_7_zcl_suite(report):
    def body():
        assert zcl_r(odd_sphere(), 2) == 1
        assert zcl_r(even_sphere(), 2) == 2
        R = example_ring()
        assert zcl_r(R, 2) <= 3
        for r in (2, 3):
            assert zcl_r(R, r) <= 2 * r
        for name, H in zcl_suite().items():
            cup = cup_length(H)
            z = {r: zcl_r(H, r) for r in (2, 3)}
            assert z[3] >= z[2] + cup, name

    report("7 zcl: odd sphere 1, even sphere 2, example ring zcl_r <= 2r, superadditivity on suite", body)


def test_8_bound_chain(report):
    def body():
        # (name, cohomology ring, cat, pure-odd model or None)
        spaces = [
            ("odd sphere", odd_sphere(), 1, parse_model("gen x 3\n")),
            ("S3xS3", exterior(3, 3), 2, parse_model("gen x 3\ngen y 3\n")),
            ("example", cohomology_ring(parse_model(EXAMPLE_ODD_TEXT)), 3, parse_model(EXAMPLE_ODD_TEXT)),
            ("even sphere", even_sphere(), 1, None),
            ("S2xS2", exterior(2, 2), 2, None),
            ("T^3", exterior(1, 1, 1), 3, None),
        ]
        for name, H, cat, model in spaces:
            cup = cup_length(H)
            zcl = {r: zcl_r(H, r) for r in (2, 3)}
            for r in (2, 3, 4):
                try:
                    cert = tc_mtc_pure_odd(model, r) if model is not None else None
                    b = mtc_bounds(cat, cup, zcl, r, certificate=cert)
                except ContradictionError as e:
                    raise AssertionError(f"{name}, r={r}: {e}") from e
                assert b.lower <= b.upper
                if r in zcl:
                    assert zcl[r] <= b.upper
                if model is not None:
                    assert (r - 1) * cat <= b.exact <= r * cat

    report("8 bound chain: no contradictions on suite spaces; pure-odd exact value in [(r-1)cat, r cat]", body)
