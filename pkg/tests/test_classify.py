from itertools import combinations_with_replacement

import pytest

from ratelem.classify import (
    TheoremId,
    VerificationReport,
    count_rational,
    enumerate_rational,
    predicted_exception,
    th2_char2_tables,
    verify,
)
from ratelem.cyclo import lcm, totient
from ratelem.elements import GroupTag, parse_element
from ratelem.spectra import Fund


def brute_count(group, max_order):
    """Count orbit multisets by plain combinations over allowed orders."""
    cap = {"A": group.n, "C": 2 * group.n, "B": 2 * group.n}[group.family]
    orders = [m for m in range(3, max_order + 1, 2) if totient(m) <= cap]
    total = 0
    for size in range(0, cap // 2 + 1):
        for combo in combinations_with_replacement(orders, size):
            if sum(totient(m) for m in combo) > cap:
                continue
            L = 1
            for m in combo:
                L = lcm(L, m)
            if L <= max_order:
                total += 1
    return total


def test_enumerate_sl2():
    elems = [g.syntax for g in enumerate_rational(GroupTag("A", 2))]
    assert elems == ["a:2:1*2", "a:2:phi(3)"]


def test_enumerate_sl6_small_orders():
    elems = {g.syntax for g in enumerate_rational(GroupTag("A", 6), 9)}
    assert {"a:6:phi(9)", "a:6:phi(3)*3", "a:6:phi(3)*2+1*2"} <= elems
    assert all(g.order <= 9 for g in enumerate_rational(GroupTag("A", 6), 9))


def test_enumerate_b3_small_orders():
    elems = list(enumerate_rational(GroupTag("B", 3), 9))
    assert all(g.trivial_count % 2 == 1 for g in elems)
    got = {tuple(g.orbit_orders) for g in elems}
    # orders 3, 5, 7, 9 with phi = 2, 4, 6, 6; total at most 6 (room 7 minus one fixed 1)
    expected = {(), (3,), (3, 3), (3, 3, 3), (5,), (3, 5), (7,), (9,)}
    expected = {e for e in expected if _lcm_all(e) <= 9}
    assert got == expected


def _lcm_all(orders):
    L = 1
    for m in orders:
        L = lcm(L, m)
    return L


@pytest.mark.parametrize("family,n", [("A", n) for n in range(2, 15)] + [("C", n) for n in range(2, 9)] + [("B", n) for n in range(3, 13)])
def test_enumeration_counts(family, n):
    g = GroupTag(family, n)
    elems = [e.syntax for e in enumerate_rational(g)]
    assert len(elems) == len(set(elems))
    assert len(elems) == count_rational(g)
    if n <= 10:
        assert len(elems) == brute_count(g, 45)


def test_enumerate_rejects_even_bound():
    with pytest.raises(ValueError):
        list(enumerate_rational(GroupTag("A", 4), 10))


def test_predicted_exception_examples():
    assert predicted_exception(TheoremId.TH1, parse_element("a:8:phi(15)"), Fund(5))
    assert not predicted_exception(TheoremId.TH1, parse_element("a:8:phi(15)"), Fund(4))
    assert predicted_exception(TheoremId.TH2_ODD, parse_element("c:14:phi(9)+phi(15)"), Fund(3))
    assert predicted_exception(TheoremId.TH2_CHAR2_SPIN, parse_element("c:10:phi(5)+phi(7)"), Fund(5))
    assert predicted_exception(TheoremId.TH2_CHAR2_MIXED, parse_element("c:16:phi(5)+phi(7)+phi(9)"), (1, 0, 0, 0, 0, 0, 0, 1))
    assert not predicted_exception(TheoremId.TH2_CHAR2_SPIN, parse_element("c:8:phi(3)+phi(9)"), Fund(4))
    with pytest.raises(ValueError):
        predicted_exception(TheoremId.TH1, parse_element("c:6:phi(9)"), Fund(3))


@pytest.mark.parametrize("theorem", list(TheoremId))
def test_verify_default_window(theorem):
    report = verify(theorem)
    assert isinstance(report, VerificationReport)
    assert report.mismatches == []
    assert report.table_complete
    assert report.ok


def test_sl_exceptions_are_the_seven_items():
    report = verify(TheoremId.TH1)
    anchors = {e["anchor"] for e in report.exceptions}
    assert None not in anchors
    assert {a.split(":")[0] for a in anchors} == {f"th1({k})" for k in range(1, 8)}


def test_omega3_and_omega5_shapes():
    ts1 = verify(TheoremId.TS1)
    shapes = {e["element"] for e in ts1.exceptions}
    assert shapes == {
        "a:6:phi(9)",
        "a:6:phi(3)+phi(5)",
        "a:8:phi(15)",
        "a:8:phi(3)*2+phi(5)",
        "a:10:phi(5)+phi(9)",
        "a:14:phi(9)+phi(15)",
    }
    om12 = verify(TheoremId.OM12)
    assert om12.exceptional_pairs() == {("a:10:phi(5)+phi(9)", "fund:5")}


def test_natural_containment_violations_inside_shape():
    report = verify(TheoremId.TT9)
    assert report.mismatches == []
    for e in report.exceptions:
        g = parse_element(e["element"])
        i = int(e["weight"].split(":")[1])
        three = sum(totient(m) for m in g.orbit_orders if m % 3 == 0)
        assert g.group.n % 2 == 0 and i % 2 == 0 and three == 2


def test_char2_tables():
    regen = th2_char2_tables()
    assert regen["match"]
    assert regen["D1"] == [[1, 3], [2, 5], [3, 9]]
    assert regen["D2"] == [[3, 5], [5, 9]]
    assert regen["E"] == [[3, 5], [5, 9]]


def test_spin_formula_finding_only_for_nine():
    report = verify(TheoremId.TH3_SPIN)
    assert report.findings
    assert all("Phi(9)" in f for f in report.findings)


def test_jobs_do_not_change_report():
    a = verify(TheoremId.TH3_MIXED, (3, 6), jobs=1).to_record()
    b = verify(TheoremId.TH3_MIXED, (3, 6), jobs=2).to_record()
    assert a == b


def test_verify_rejects_bad_characteristic():
    with pytest.raises(ValueError):
        verify(TheoremId.TH2_CHAR2_SPIN, p=0)
    with pytest.raises(ValueError):
        verify(TheoremId.TH2_ODD, p=2)
