import pytest
from hypothesis import given, strategies as st

from coalitions import (
    BoundEntry,
    CertificationError,
    InadmissibleModeError,
    Kind,
    bound_report_dc,
    bound_report_tc,
    certify,
    complete,
    conjectured_tc2,
    cycle,
    double_upper_formula,
    petersen,
)


def entry(report, name) -> BoundEntry:
    matches = [e for e in report if e.name == name]
    assert len(matches) == 1, f"expected exactly one {name} entry"
    return matches[0]


def test_conjectured_formula_values():
    assert conjectured_tc2(2, 2) == 2  # cycles
    assert conjectured_tc2(3, 3) == 4
    assert conjectured_tc2(4, 6) == 8
    assert conjectured_tc2(10, 18) == 50
    with pytest.raises(ValueError):
        conjectured_tc2(3, 2)


def test_double_upper_values():
    assert double_upper_formula(3, 6) == 10
    assert double_upper_formula(9, 17) == 50
    assert double_upper_formula(3, 3) == 4  # cubic graphs


@given(st.integers(2, 30), st.integers(0, 30))
def test_conjectured_tc2_monotone_in_max_degree(delta, bump):
    Delta = delta + bump
    assert conjectured_tc2(delta, Delta + 1) >= conjectured_tc2(delta, Delta)


def test_tc_report_core_entries(k5):
    report = bound_report_tc(k5, 2)
    assert entry(report, "min_degree_lower").value == 4  # delta - k + 2
    assert entry(report, "order_upper").value == 4  # n - k + 1
    assert entry(report, "conjectured_upper").kind is Kind.CONJECTURED_UPPER


def test_tc_report_k3_has_no_k2_entries(k5):
    names = {e.name for e in bound_report_tc(k5, 3)}
    assert "degree_mix_upper" not in names
    assert "half_delta_upper" not in names


def test_tc_report_gating(pete):
    # Petersen: delta = Delta = 3, gate needs Delta >= 2 -> applicable
    e = entry(bound_report_tc(pete, 2), "half_delta_upper")
    assert e.applicable and e.value == 4


def test_tc_report_gate_fails_for_dense_regular():
    # K_9: delta = Delta = 8, gate needs Delta >= 14
    e = entry(bound_report_tc(complete(9), 2), "half_delta_upper")
    assert not e.applicable
    assert "needs Delta >= 14" in e.reason


def test_tc_report_exact_rules(pete):
    assert entry(bound_report_tc(pete, 2), "cubic_exact").value == 3
    assert entry(bound_report_tc(pete, 3), "cubic_exact").value == 2
    report = bound_report_tc(complete(5), 2)  # 4-regular
    assert entry(report, "four_regular_exact").value == 4


def test_tc_report_rejects_low_degree():
    with pytest.raises(InadmissibleModeError):
        bound_report_tc(cycle(5), 3)


def test_tc_report_domatic_lower(k5):
    # K_5 admits no 2-block split into open-2 dominating sets (each needs 3)
    report = bound_report_tc(k5, 2, include_domatic=True)
    assert entry(report, "domatic_lower").value == 2
    report7 = bound_report_tc(complete(7), 2, include_domatic=True)
    assert entry(report7, "domatic_lower").value == 4


def test_dc_report(pete):
    report = bound_report_dc(pete)
    assert entry(report, "trivial_lower").value == 2
    assert entry(report, "order_upper").value == 10
    # cubic graphs miss the gate (needs Delta >= 5), leaving only order_upper
    e = entry(report, "double_half_delta_upper")
    assert not e.applicable and e.value == 4
    assert "needs Delta >= 5" in e.reason


def test_dc_report_gate():
    # K_9: delta = Delta = 8, gate needs Delta >= 13
    e = entry(bound_report_dc(complete(9)), "double_half_delta_upper")
    assert not e.applicable


def test_certify_sandwich():
    report = [
        BoundEntry("lo", Kind.LOWER, 3, True),
        BoundEntry("hi", Kind.UPPER, 5, True),
    ]
    cert = certify(4, report)
    assert (cert.lower, cert.upper) == (4, 5)
    assert not cert.exact
    assert cert.status == "Interval(4,5)"


def test_certify_exact_and_status():
    report = [
        BoundEntry("lo", Kind.LOWER, 2, True),
        BoundEntry("hi", Kind.UPPER, 3, True),
    ]
    cert = certify(3, report)
    assert cert.exact and cert.status == "Exact(3)"


def test_certify_ignores_conjectured_and_inapplicable():
    report = [
        BoundEntry("lo", Kind.LOWER, 2, True),
        BoundEntry("hi", Kind.UPPER, 9, True),
        BoundEntry("conj", Kind.CONJECTURED_UPPER, 3, True),
        BoundEntry("gated", Kind.UPPER, 4, False, reason="gate"),
    ]
    assert certify(5, report).upper == 9


def test_certify_exact_rule_feeds_upper_only():
    report = [BoundEntry("rule", Kind.EXACT_RULE, 3, True)]
    cert = certify(None, report)
    assert (cert.lower, cert.upper) == (0, 3)


def test_certify_errors():
    with pytest.raises(CertificationError):
        certify(2, [BoundEntry("lo", Kind.LOWER, 2, True)])  # no upper
    with pytest.raises(CertificationError):
        certify(7, [BoundEntry("hi", Kind.UPPER, 5, True)])  # witness beats proof


def test_report_consistency_on_small_regular_graphs():
    # every applicable proven lower must stay below every applicable upper
    for g in (cycle(5), cycle(8), petersen(), complete(6)):
        report = bound_report_tc(g, 2)
        lows = [e.value for e in report if e.applicable and e.kind is Kind.LOWER]
        highs = [
            e.value
            for e in report
            if e.applicable and e.kind in (Kind.UPPER, Kind.EXACT_RULE)
        ]
        assert max(lows) <= min(highs)
