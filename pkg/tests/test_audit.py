"""Auditor tests: claim replay, per-cell verdicts, and the full results grid."""

import pytest

from paramat.audit import (
    COLUMN_NAMES,
    KNOWN_DISCREPANCIES,
    PUBLISHED_TABLE,
    TABLE_ROWS,
    AuditBudget,
    Method,
    Outcome,
    PropertyId,
    check_property,
    replay_claim,
    replay_claims,
    run_table,
    table_columns,
    verify_witness_suite,
)
from paramat.matrix import builtin
from paramat.para import LogicSpec

L3, G3, K3 = (builtin(n) for n in ("l3", "g3", "k3"))

SMALL = AuditBudget(samples=40, depth=3, letters=3, gamma_size=5, seed=0)


class TestBudget:
    def test_defaults(self):
        b = AuditBudget()
        assert (b.samples, b.depth, b.letters, b.gamma_size, b.seed) == (
            500, 3, 3, 5, 0,
        )
        b.validate()

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"samples": 0},
            {"depth": -1},
            {"letters": 0},
            {"gamma_size": 0},
        ],
    )
    def test_rejects_nonpositive(self, kwargs):
        with pytest.raises(ValueError):
            AuditBudget(**kwargs).validate()


class TestReplay:
    def test_entails(self):
        assert replay_claim(
            L3, {"kind": "entails", "gamma": ["p | q", "~p"], "alpha": "q",
                 "expected": True}
        )
        assert not replay_claim(
            L3, {"kind": "entails", "gamma": [], "alpha": "q", "expected": True}
        )

    def test_para_entails(self):
        assert replay_claim(
            L3, {"kind": "para_entails", "gamma": ["p", "~p"], "alpha": "q",
                 "expected": False}
        )

    def test_consistency_kinds(self):
        assert replay_claim(
            L3, {"kind": "consistent", "gamma": ["p", "~p"], "expected": False}
        )
        assert replay_claim(
            L3, {"kind": "para_consistent", "gamma": ["p", "~p"], "expected": True}
        )

    def test_classify(self):
        assert replay_claim(
            G3, {"kind": "classify", "alpha": "p & ~p", "expected": "contradiction"}
        )

    def test_consistent_subsets(self):
        assert replay_claim(
            L3,
            {
                "kind": "consistent_subsets",
                "gamma": ["p", "~p"],
                "expected": [[], ["p"], ["~p"]],
            },
        )

    def test_eval(self):
        assert replay_claim(
            K3,
            {"kind": "eval", "valuation": {"p": "1/2"}, "formula": "p -> p",
             "expected": "1/2"},
        )

    def test_star_property(self):
        assert replay_claim(L3, {"kind": "star_property", "expected": True})

    def test_tautology_free(self):
        assert replay_claim(
            K3,
            {"kind": "tautology_free", "letters": ["p", "q"], "depth": 2,
             "expected": True},
        )

    def test_logic_entails(self):
        assert replay_claim(
            L3,
            {"kind": "logic_entails", "depth": 2, "gamma": ["p", "~p"],
             "alpha": "q", "expected": False},
        )

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            replay_claim(L3, {"kind": "zzz"})


class TestColumns:
    def test_order_and_names(self):
        specs = table_columns()
        assert [s.name for s in specs] == list(COLUMN_NAMES)
        assert [s.para_depth for s in specs] == [0, 1, 0, 1, 0, 1]


class TestCells:
    def test_explosive_base_exact(self):
        v = check_property(LogicSpec(L3, 0), PropertyId.EXPLOSIVE, SMALL)
        assert v.outcome is Outcome.HOLDS
        assert v.method is Method.EXACT

    def test_explosive_para_fails_with_witness(self):
        v = check_property(LogicSpec(L3, 1), PropertyId.EXPLOSIVE, SMALL)
        assert v.outcome is Outcome.FAILS
        assert replay_claims(L3, v.witness["claims"])

    def test_joint_consistency_para_exact_fails(self):
        for m in (L3, G3, K3):
            v = check_property(LogicSpec(m, 1), PropertyId.JOINT_CONSISTENCY, SMALL)
            assert v.outcome is Outcome.FAILS
            assert v.method is Method.EXACT

    def test_full_dt_holds_only_for_g3(self):
        outcomes = {
            spec.name: check_property(spec, PropertyId.FULL_DT, SMALL).outcome
            for spec in table_columns()
        }
        assert outcomes == {
            "L3": Outcome.FAILS,
            "P(L3)": Outcome.FAILS,
            "G3": Outcome.HOLDS,
            "P(G3)": Outcome.FAILS,
            "K3": Outcome.FAILS,
            "P(K3)": Outcome.FAILS,
        }

    def test_conjunctive_para_fails_bounded(self):
        v = check_property(LogicSpec(L3, 1), PropertyId.CONJUNCTIVE_PROPERTY, SMALL)
        assert v.outcome is Outcome.FAILS
        assert v.method is Method.BOUNDED
        assert v.witness["candidates_checked"] > 100

    def test_modus_ponens_para_witness(self):
        v = check_property(LogicSpec(K3, 1), PropertyId.MODUS_PONENS, SMALL)
        assert v.outcome is Outcome.FAILS
        assert v.method is Method.WITNESS

    def test_deduction_variant_guard(self):
        from paramat.audit import check_deduction_variant

        with pytest.raises(ValueError):
            check_deduction_variant(LogicSpec(L3, 0), PropertyId.INCLUSION, SMALL)

    def test_fails_verdicts_carry_replayable_witnesses(self):
        for spec in table_columns():
            for prop in TABLE_ROWS:
                v = check_property(spec, prop, SMALL)
                if v.outcome is Outcome.FAILS:
                    assert v.witness is not None
                    assert replay_claims(spec.matrix, v.witness["claims"])

    def test_determinism(self):
        a = check_property(LogicSpec(L3, 0), PropertyId.MONOTONICITY, SMALL)
        b = check_property(LogicSpec(L3, 0), PropertyId.MONOTONICITY, SMALL)
        assert a.to_json() == b.to_json()


@pytest.fixture(scope="module")
def report():
    return run_table(SMALL)


class TestRunTable:
    def test_every_cell_decided(self, report):
        assert len(report.verdicts) == 96
        assert all(
            v.outcome in (Outcome.HOLDS, Outcome.FAILS)
            for v in report.verdicts.values()
        )

    def test_matches_expected_table_up_to_known_discrepancies(self, report):
        for prop in TABLE_ROWS:
            for i, col in enumerate(COLUMN_NAMES):
                computed = report.verdicts[(prop, col)].outcome is Outcome.HOLDS
                expected = PUBLISHED_TABLE[prop][i]
                if (prop, col) in KNOWN_DISCREPANCIES:
                    assert computed != expected, f"{prop.value}/{col}"
                else:
                    assert computed == expected, f"{prop.value}/{col}"

    def test_discrepancies_are_exactly_the_known_ones(self, report):
        cells = {
            (PropertyId(d["cell"].split("/")[0]), d["cell"].split("/")[1])
            for d in report.discrepancies
        }
        assert cells == set(KNOWN_DISCREPANCIES)
        assert all(d["known"] for d in report.discrepancies)
        assert report.unexpected_discrepancies() == []
        assert all(d["evidence"] is not None for d in report.discrepancies)

    def test_json_shape(self, report):
        doc = report.to_json()
        assert set(doc) == {"budget", "columns", "grid", "discrepancies"}
        assert len(doc["grid"]) == 96
        cell = doc["grid"]["explosive/L3"]
        assert cell["outcome"] == "HOLDS"
        assert cell["bounds"] == [3, 3, 5]

    def test_text_grid(self, report):
        text = report.format_text()
        lines = text.splitlines()
        assert any("explosive" in line for line in lines)
        assert "✓" in text and "×" in text
        assert "Discrepancies:" in text


class TestWitnessSuites:
    @pytest.mark.parametrize("m", [L3, G3, K3], ids=lambda m: m.name)
    def test_all_pass(self, m):
        results = verify_witness_suite(LogicSpec(m))
        assert results
        failed = [r.description for r in results if not r.passed]
        assert failed == []

    def test_total_count(self):
        total = sum(
            len(verify_witness_suite(LogicSpec(m))) for m in (L3, G3, K3)
        )
        assert total >= 14

    def test_unknown_matrix(self):
        with pytest.raises(ValueError):
            verify_witness_suite(LogicSpec(builtin("cl2")))
