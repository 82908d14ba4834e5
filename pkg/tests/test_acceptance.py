"""One test per acceptance criterion; exact set equality throughout."""

from itertools import combinations, product
from math import gcd

from ratelem.classify import TheoremId, count_rational, enumerate_rational, verify
from ratelem.cyclo import all_roots, primitive_roots, product_set, totient, trivial
from ratelem.elements import GroupTag, f2_block_decomposition, parse_element, singular_indices
from ratelem.lambdas import (
    delta_brute,
    delta_closed,
    identity_suite,
    lambda3_star,
    lambda_all_brute,
    lambda_closed,
)
from ratelem.spectra import (
    spectrum_exterior,
    spectrum_natural,
    spectrum_spin_brute,
    spectrum_spin_closed,
    spin_case,
    spin_case_formula,
)


def _shape(syntax):
    g = parse_element(syntax)
    return g.group.n, tuple(g.orbit_orders)


def _isolated(orders, m):
    return orders.count(m) == 1 and all(gcd(m, o) == 1 for o in orders if o != m)


def test_criterion_1_identity_suite():
    for m in range(3, 46, 2):
        if m > 3:
            for i, s in lambda_all_brute(m).items():
                assert s == lambda_closed(m, i)
            assert lambda3_star(m) == all_roots(m)
        assert delta_brute(m) == delta_closed(m)
        assert primitive_roots(m) * primitive_roots(m) == all_roots(m)
        for m2 in range(3, 46, 2):
            if gcd(m, m2) > 1:
                prod = (all_roots(m) - trivial(m)) * (all_roots(m2) - trivial(m2))
                assert prod == all_roots(prod.modulus)
    suite = identity_suite(45)
    assert len(suite) == 13
    assert all(v is not False for per_m in suite.values() for v in per_m.values())


def test_criterion_2_sl_table():
    report = verify(TheoremId.TH1, (2, 14), 45)
    assert report.mismatches == []
    found = set()
    for e in report.exceptions:
        n, orbits = _shape(e["element"])
        g = parse_element(e["element"])
        i = int(e["weight"].split(":")[1])
        if g.trivial_count == 0 and i in (1, n - 1):
            found.add(("item1", i == 1))
        else:
            found.add((n, orbits, i))
    expected = {
        ("item1", True),
        ("item1", False),
        (6, (9,), 3),
        (6, (3, 5), 3),
        (8, (15,), 3),
        (8, (15,), 5),
        (8, (3, 3, 5), 3),
        (8, (3, 3, 5), 5),
        (10, (5, 9), 3),
        (10, (5, 9), 5),
        (10, (5, 9), 7),
        (14, (9, 15), 3),
        (14, (9, 15), 11),
    }
    assert found == expected
    # every element with no eigenvalue 1 on the natural module is hit by item (1)
    k0 = {
        g.syntax
        for n in range(2, 15)
        for g in enumerate_rational(GroupTag("A", n))
        if g.trivial_count == 0
    }
    item1 = {e["element"] for e in report.exceptions if e["weight"] == "fund:1"}
    assert item1 == k0
    assert {e["anchor"].split(":")[0] for e in report.exceptions} == {f"th1({k})" for k in range(1, 8)}


def test_criterion_3_omega3_omega5():
    ts1 = verify(TheoremId.TS1, (5, 14), 45)
    assert ts1.mismatches == []
    assert {_shape(e["element"]) for e in ts1.exceptions} == {
        (6, (9,)),
        (6, (3, 5)),
        (8, (15,)),
        (8, (3, 3, 5)),
        (10, (5, 9)),
        (14, (9, 15)),
    }
    om12 = verify(TheoremId.OM12, (10, 14), 45)
    assert om12.mismatches == []
    assert om12.exceptional_pairs() == {("a:10:phi(5)+phi(9)", "fund:5")}
    for n in range(5, 15):
        for g in enumerate_rational(GroupTag("A", n)):
            assert spectrum_natural(g).values <= spectrum_exterior(g, 3).values


def test_criterion_4_natural_containment():
    report = verify(TheoremId.TT9, (2, 14), 45)
    assert report.mismatches == []
    violations = set()
    for n in range(2, 15):
        for g in enumerate_rational(GroupTag("A", n)):
            nat = spectrum_natural(g).values
            for i in range(1, n):
                if not nat <= spectrum_exterior(g, i).values:
                    violations.add((g.syntax, f"fund:{i}"))
                    three = sum(totient(m) for m in g.orbit_orders if m % 3 == 0)
                    M = g.order
                    assert n % 2 == 0 and i % 2 == 0 and M % 3 == 0 and (M // 3) % 3 and three == 2
    assert violations == report.exceptional_pairs()


def test_criterion_5_spin_oracle():
    for n in range(3, 13):
        for g in enumerate_rational(GroupTag("B", n)):
            brute = spectrum_spin_brute(g).values
            assert brute == spectrum_spin_closed(g).values
            assert brute == spin_case_formula(g)
            if n <= 9:
                M, top = g.order, g.top_half()
                signs = product((1, -1), repeat=len(top))
                assert set(brute) == {sum(s * d for s, d in zip(sg, top)) % M for sg in signs}
    report = verify(TheoremId.TH3_SPIN, (3, 12), 45)
    assert report.mismatches == []


def test_criterion_6_spin_products():
    spin = verify(TheoremId.TH3_SPIN, (3, 12), 45)
    assert spin.mismatches == []
    mixed = verify(TheoremId.TH3_MIXED, (3, 12), 45)
    assert mixed.mismatches == []
    case3 = set()
    for n in range(3, 13):
        for g in enumerate_rational(GroupTag("B", n)):
            label = spin_case(g)
            if label.startswith("Case3"):
                case3.add(g.syntax)
                m = int(label[6:-1])
                natural = spectrum_natural(g).values
                prod = product_set(natural, spectrum_spin_brute(g).values)
                assert prod == all_roots(g.order) - all_roots(g.order // (5 * m))
    lacking = {el for el, w in mixed.exceptional_pairs() if w == "sum:1,n"}
    assert lacking == case3
    assert not any(w == "sum:2,n" for _, w in mixed.exceptional_pairs())


def test_criterion_7_symplectic_odd_p():
    report = verify(TheoremId.TH2_ODD, (2, 8), 45)
    assert report.mismatches == []
    found = set()
    for e in report.exceptions:
        n, orbits = _shape(e["element"])
        if e["weight"] == "fund:1":
            assert parse_element(e["element"]).trivial_count == 0
            found.add("A")
        else:
            found.add((n, orbits, e["weight"]))
    assert found == {
        "A",
        (3, (9,), "fund:3"),
        (3, (3, 5), "fund:3"),
        (4, (15,), "fund:3"),
        (4, (3, 3, 5), "fund:3"),
        (5, (5, 9), "fund:3"),
        (7, (9, 15), "fund:3"),
        (5, (5, 9), "fund:5"),
    }


def test_criterion_8_char2():
    d1, d2 = set(), set()
    for n in range(2, 9):
        for g in enumerate_rational(GroupTag("C", n)):
            sing = singular_indices(g)
            assert len(sing) <= 2
            assert {(b.d, b.m) for b in sing} <= {(1, 3), (2, 5), (3, 9)}
            if len(sing) == 1:
                d1.add((sing[0].d, sing[0].m))
            if len(sing) == 2:
                pair = tuple(sorted(b.m for b in sing))
                assert 5 in pair
                d2.add(pair)
    assert d1 == {(1, 3), (2, 5), (3, 9)}
    assert d2 == {(3, 5), (5, 9)}
    for theorem in (TheoremId.TH2_CHAR2_SPIN, TheoremId.TH2_CHAR2_MIXED):
        report = verify(theorem, (2, 8), 45)
        assert report.mismatches == []
        assert report.regenerated["match"] is True
        assert report.regenerated["E"] == [[3, 5], [5, 9]]
    spin = verify(TheoremId.TH2_CHAR2_SPIN, (2, 8), 45)
    for e in spin.exceptions:
        orders = parse_element(e["element"]).orbit_orders
        assert any(_isolated(orders, m) for m in (3, 5, 9))


def test_criterion_9_properties():
    for fam, lo, hi in (("A", 2, 14), ("C", 2, 8), ("B", 3, 12)):
        for n in range(lo, hi + 1):
            group = GroupTag(fam, n)
            elems = list(enumerate_rational(group))
            assert len(elems) == len({g.syntax for g in elems}) == count_rational(group)
            for g in elems:
                diag = g.diagonal()
                assert sum(diag) % g.order == 0
                if fam == "C":
                    assert g.trivial_count % 2 == 0
                    assert sum(b.dim for b in f2_block_decomposition(g)) == 2 * n - g.trivial_count
                if fam == "B":
                    assert g.trivial_count % 2 == 1
    for n in range(2, 11):
        for g in enumerate_rational(GroupTag("A", n)):
            M = g.order
            units = [u for u in range(1, M) if gcd(u, M) == 1]
            triple = n >= 4 and n % 2 == 0 and any(sum(c) % M == 0 for c in combinations(g.diagonal(), 3))
            for i in range(1, n):
                s = spectrum_exterior(g, i).values
                assert all(s.scale(u) == s for u in units)
                if i % 2 == 0:
                    assert 0 in s
                if 2 * i <= n - 2:
                    assert s <= spectrum_exterior(g, i + 2).values
                if triple and 2 <= i <= n - 2:
                    assert 0 in s
