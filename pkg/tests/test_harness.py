import pandas as pd
import pytest

from hopfbench import catalog, config, harness
from hopfbench.errors import BudgetExceeded, CatalogError, HopfbenchError
from hopfbench.gf import make_field
from hopfbench.harness import (
    AmbiguityRow,
    IsoComparisonReport,
    IsoPair,
    NicholsRow,
    Outcome,
    Sampling,
    VerificationReport,
)
from hopfbench.hopf import HopfPresentation


def test_sampling_defaults():
    s = Sampling.sample()
    assert (s.mode, s.n, s.seed) == ("sample", config.SAMPLE_SIZE, config.SEED)
    assert Sampling.full().mode == "full"


def test_full_sweep_assignments(F2):
    spec = catalog.get_family("T4.2-5")
    assert harness.assignments(spec, F2) == [{"lam": 0}, {"lam": 1}]
    assert harness.assignments(catalog.get_family("T4.2-1"), F2) == [{}]


def test_default_sampling(F2, F4):
    assert harness.default_sampling(catalog.get_family("T4.2-26"), F4).mode == "full"
    assert harness.default_sampling(catalog.get_family("L3.9"), F4).mode == "sample"
    assert harness.parameter_space_size(catalog.get_family("L3.9"), F2) == 4096


def test_seeded_samples_are_reproducible(F4):
    spec = catalog.get_family("L3.9")
    first = harness.assignments(spec, F4, Sampling.sample(5, 7))
    again = harness.assignments(spec, F4, Sampling.sample(5, 7))
    assert first == again
    assert len(first) == 5
    assert len({catalog.format_params(p) for p in first}) == 5
    assert all(set(p) == set(spec.param_names) for p in first)


def test_full_sweep_over_the_limit_is_refused(F4):
    with pytest.raises(BudgetExceeded):
        harness.assignments(catalog.get_family("L3.9"), F4, Sampling.full())


def test_report_record_and_pass_rules():
    r = VerificationReport("T4.2-5", "GF(2)", {"lam": 0}, Outcome.OK, dim=16, claimed_dim=16, axioms="pass")
    assert r.to_record() == "family=T4.2-5 field=GF(2) params=lam=0 outcome=ok dim=16 claimed=16 axioms=pass"
    assert r.passed
    loose = VerificationReport("L3.9", "GF(3)", {}, Outcome.COLLAPSE, expected=None)
    assert loose.passed
    assert "expected=ok|collapse" in loose.to_record()
    assert not VerificationReport("L3.9", "GF(3)", {}, Outcome.MISMATCH, expected=None).passed
    assert not VerificationReport("x", "GF(2)", {}, Outcome.COLLAPSE).passed


def test_verify_family(F2):
    reports = harness.verify_family("T4.2-5", F2)
    assert [r.params for r in reports] == [{"lam": 0}, {"lam": 1}]
    for r in reports:
        assert r.outcome is Outcome.OK, r.to_record()
        assert (r.dim, r.claimed_dim, r.axioms) == (16, 16, "pass")
        assert r.passed


def test_verify_family_checks_characteristic(F3):
    with pytest.raises(CatalogError):
        harness.verify_family("T4.2-1", F3)


def test_wrong_claims_are_caught(F2):
    P = catalog.instantiate("T4.2-1", F2)
    low = harness.check_presentation(P, 8)
    assert low.outcome is Outcome.MISMATCH
    assert low.reason == "dimension 16 != 8"
    high = harness.check_presentation(P, 32)
    assert high.outcome is Outcome.COLLAPSE
    assert high.dim == 16


def test_completed_dimension(F2):
    assert harness.completed_dimension(catalog.instantiate("T4.2-1", F2), 16) == 16
    P = HopfPresentation.build(F2, ["g"], {"g": None}, ["g^2 - 1", "g"])
    assert harness.completed_dimension(P) == 0


def test_fault_injection(F2):
    P = catalog.instantiate("T4.2-1", F2)
    faulty = harness.fault_inject(P)
    assert faulty.name == "T4.2-1!fault"
    changed = [(a, b) for a, b in zip(P.relations, faulty.relations) if a != b]
    assert len(changed) == 1
    report = harness.check_presentation(faulty, 16, expected=Outcome.COLLAPSE)
    assert report.outcome is Outcome.COLLAPSE
    assert report.passed


def test_fault_injection_needs_skew_primitives(F2):
    P = HopfPresentation.build(F2, ["g"], {"g": None}, ["g^2 - 1"])
    with pytest.raises(HopfbenchError):
        harness.fault_inject(P)


def test_negative_controls(F2):
    reports = harness.negative_controls(F2, ["T4.2-1", "T4.2-14"])
    assert [r.family for r in reports] == ["T4.2-1!fault", "T4.2-14!fault"]
    assert all(r.passed for r in reports)


def test_verify_scope_orders_and_filters(F2, monkeypatch):
    specs = [catalog.get_family("T4.2-1"), catalog.get_family("T3.7-4")]
    monkeypatch.setattr(catalog, "list_families", lambda scope: specs)
    reports = harness.verify_scope("all", F2)
    assert [r.family for r in reports] == ["T3.7-4", "T4.2-1"]
    assert all(r.outcome is Outcome.OK for r in reports)


@pytest.mark.parametrize("suite", ["jacobson", "lemma210", "lemma211"])
def test_identity_suites_in_characteristic_two(F2, suite):
    report = harness.verify_identity_suite(suite, F2, trials=10, seed=3)
    assert report.passed, report.to_records()
    assert report.checks > 0


@pytest.mark.parametrize("suite", ["jacobson", "lemma210"])
def test_identity_suites_in_characteristic_three(F3, suite):
    report = harness.verify_identity_suite(suite, F3, trials=10, seed=4)
    assert report.passed, report.to_records()


def test_lemma210_counts_checks(F3):
    report = harness.verify_identity_suite("lemma210", F3, trials=5, seed=1)
    assert report.checks == 35
    assert report.to_records()[0] == "suite=lemma210 field=GF(3) trials=5 checks=35 failures=0"


def test_unknown_identity_suite(F2):
    with pytest.raises(HopfbenchError):
        harness.verify_identity_suite("cartan", F2)


def test_nichols_suite_in_characteristic_two(F2):
    report = harness.verify_nichols_suite(F2)
    assert report.passed, report.to_records()
    assert len(report.rows) == 5


@pytest.mark.slow
def test_nichols_suite_in_characteristic_three(F3):
    report = harness.verify_nichols_suite(F3)
    assert report.passed, report.to_records()


def test_nichols_suite_needs_targets(F5):
    with pytest.raises(HopfbenchError):
        harness.verify_nichols_suite(F5)


def test_nichols_row_rules():
    assert NicholsRow("a", 8, (1, 3, 5), 9, False, lower_bound=True).passed
    assert not NicholsRow("a", 8, (1, 3, 4), 8, True).passed
    assert NicholsRow("a", 8, (1, 3, 3, 1, 0), 8, True).passed


def test_iso_classes():
    report = IsoComparisonReport("T", "GF(4)")
    a, b, c = {"lam": 0}, {"lam": 1}, {"lam": 2}
    report.pairs = [
        IsoPair(a, a, True, True),
        IsoPair(a, b, True, True),
        IsoPair(b, c, False, False),
        IsoPair(c, c, True, True),
    ]
    assert report.agreement
    assert report.classes() == [["lam=0", "lam=1"], ["lam=2"]]
    report.pairs.append(IsoPair(a, c, None, False, "budget"))
    assert not report.agreement


def test_ambiguity_row_agreement():
    assert AmbiguityRow({}, 16, True).agrees(16)
    assert AmbiguityRow({}, 8, False).agrees(16)
    assert not AmbiguityRow({}, 8, True).agrees(16)
    assert not AmbiguityRow({}, None, True).agrees(16)


def test_vacuous_rows_expect_the_claimed_dimension():
    row = AmbiguityRow({"l1": 1}, 16, False, vacuous=True)
    assert row.agrees(16)
    assert row.discrepancy
    assert not AmbiguityRow({}, 8, False, vacuous=True).agrees(16)
    assert not AmbiguityRow({}, 16, True, vacuous=True).discrepancy
    report = harness.AmbiguityReport("L3.5", "GF(2)", lambda params: 16, [row])
    assert report.discrepancies == [row]
    assert report.to_records()[0].endswith("agree=True discrepancy=vacuous")


@pytest.mark.slow
def test_iso_criterion_of_a_one_parameter_family(F2):
    report = harness.verify_iso_criteria("T4.2-5", F2)
    assert len(report.pairs) == 4
    assert report.agreement, report.to_records()
    assert report.classes() == [["lam=0", "lam=1"]]


@pytest.mark.slow
def test_ambiguity_condition_in_characteristic_two(F2):
    report = harness.verify_ambiguity_condition("L3.11", F2)
    assert report.rows
    assert report.agreement, report.to_records()


@pytest.mark.slow
def test_ambiguity_condition_where_it_is_vacuous(F2):
    report = harness.verify_ambiguity_condition("L3.5", F2)
    assert len(report.rows) == 64
    assert report.agreement, report.to_records()
    assert {"l1": 1, "l2": 1, "l3": 0, "l4": 0, "l5": 1, "l6": 0} in [r.params for r in report.discrepancies]


@pytest.mark.slow
def test_ambiguity_condition_where_it_binds(F5):
    report = harness.verify_ambiguity_condition("L3.5", F5, harness.Sampling.sample(3, seed=11))
    assert not report.discrepancies
    assert report.agreement, report.to_records()


@pytest.mark.slow
def test_ambiguity_conditions_in_characteristic_two(F2):
    report = harness.verify_ambiguity_condition("L3.9", F2, harness.Sampling.sample(8, seed=3))
    assert report.agreement, report.to_records()


def test_ambiguity_needs_a_condition(F2):
    with pytest.raises(CatalogError):
        harness.verify_ambiguity_condition("T4.2-1", F2)


def test_summarize():
    reports = [
        VerificationReport("T4.2-5", "GF(2)", {"lam": 0}, Outcome.OK),
        VerificationReport("T4.2-5", "GF(2)", {"lam": 1}, Outcome.COLLAPSE),
        VerificationReport("T3.7-1", "GF(2)", {"lam": 0}, Outcome.OK),
    ]
    table = harness.summarize(reports)
    assert list(table.columns) == ["runs", "ok", "collapse", "mismatch", "budget-exceeded", "passed"]
    assert list(table.index.get_level_values(0)) == ["T3.7-1", "T4.2-5"]
    row = table.loc[("T4.2-5", "GF(2)")]
    assert (row["runs"], row["ok"], row["collapse"]) == (2, 1, 1)
    assert not row["passed"]
    assert table.loc[("T3.7-1", "GF(2)"), "passed"]
    assert isinstance(harness.summarize([]), pd.DataFrame)
    assert harness.summarize([]).empty


def test_summarize_does_not_hide_bad_input():
    with pytest.raises(AttributeError):
        harness.summarize([object()])


@pytest.mark.slow
def test_t42_sweep_in_characteristic_two(F2):
    reports = harness.verify_scope("T4.2", F2)
    failures = [r.to_record() for r in reports if not r.passed]
    assert not failures, failures
    assert {r.family for r in reports} == {spec.id for spec in catalog.list_families("T4.2")}


@pytest.mark.slow
def test_t37_sweep_in_characteristic_two(F2):
    reports = harness.verify_scope("T3.7", F2)
    assert all(r.passed for r in reports), [r.to_record() for r in reports if not r.passed]
    assert {r.dim for r in reports if r.outcome is Outcome.OK} == {16}


@pytest.mark.slow
def test_t37_sample_in_characteristic_three(F3):
    reports = harness.verify_scope("T3.7", F3, Sampling.sample(2, seed=1))
    assert len({r.family for r in reports}) == 35
    assert all(r.passed for r in reports), [r.to_record() for r in reports if not r.passed]
    assert {r.dim for r in reports if r.outcome is Outcome.OK} == {81}


@pytest.mark.slow
@pytest.mark.parametrize(
    "family_id,p,k",
    [("T4.2-5", 2, 2), ("T4.2-9", 2, 2), ("T4.2-46", 2, 2), ("T3.7-1", 2, 1), ("T3.7-1", 3, 1)],
)
def test_iso_criteria_over_small_fields(family_id, p, k):
    report = harness.verify_iso_criteria(family_id, make_field(p, k))
    assert report.pairs
    assert report.agreement, report.to_records()


@pytest.mark.slow
def test_iso_classes_of_a_one_parameter_family_over_gf4(F4):
    report = harness.verify_iso_criteria("T4.2-5", F4)
    assert len(report.pairs) == 16
    assert report.classes() == [["lam=0", "lam=1"], ["lam=2", "lam=3"]]


@pytest.mark.slow
def test_t37_1_classes_are_singletons(F3):
    report = harness.verify_iso_criteria("T3.7-1", F3)
    assert report.classes() == [["lam=0"], ["lam=1"], ["lam=2"]]


def test_default_negative_controls_cover_every_group(F2):
    groups = {
        spec.group
        for spec in catalog.list_families("all")
        if harness.applicable(spec, F2) and spec.ambiguity is None
    }
    reports = harness.negative_controls(F2)
    covered = {catalog.get_family(r.family.removesuffix("!fault")).group for r in reports}
    assert covered == groups
    assert {"D4", "Q8"} <= covered
    assert all(r.passed for r in reports), [r.to_record() for r in reports if not r.passed]


@pytest.mark.slow
def test_negative_controls_on_every_t42_family(F2):
    families = [spec.id for spec in catalog.list_families("T4.2")]
    reports = harness.negative_controls(F2, families)
    assert len(reports) == len(families)
    assert all(r.passed for r in reports), [r.to_record() for r in reports if not r.passed]


def test_vacuous_primes_expect_the_claimed_dimension(F2, F5):
    spec = catalog.get_family("L3.5")
    violated = {"l1": 1, "l2": 1, "l3": 0, "l4": 0, "l5": 1, "l6": 0}
    assert harness._expected_outcome(spec, F2, violated) is Outcome.OK
    assert harness._expected_outcome(spec, F5, violated) is Outcome.COLLAPSE
