"""End-to-end verdicts for all 24 rank-2 permutation endomorphisms.

Golden values frozen from the published classification after the
commutant, subspace, order, and diagonal routes were cross-checked
against independent implementations.
"""

import json

import pytest

from o2endo.classify import classify, verify_paper_relations
from o2endo.endos import PermEndomorphism
from o2endo.errors import RankUnsupported, WordError
from o2endo.perms import parse_perm, table_order_specs

# name -> (property, index, order or None)
GOLDEN = {
    "id": ("inn", 1, 1),
    "(12)": ("irr", 2, None),
    "(13)": ("irr", 2, None),
    "(14)": ("red", 4, None),
    "(23)": ("red", 4, None),
    "(24)": ("irr", 2, None),
    "(34)": ("irr", 2, None),
    "(123)": ("red", 4, None),
    "(132)": ("red", 4, None),
    "(124)": ("red", 4, None),
    "(134)": ("irr", 4, None),
    "(142)": ("irr", 4, None),
    "(143)": ("red", 4, None),
    "(234)": ("red", 4, None),
    "(243)": ("red", 4, None),
    "(1234)": ("irr", 2, None),
    "(1243)": ("red", 4, None),
    "(1324)": ("irr", 2, None),
    "(1342)": ("red", 4, None),
    "(1423)": ("irr", 2, None),
    "(1432)": ("irr", 2, None),
    "(12)(34)": ("out", 1, 2),
    "(13)(24)": ("out", 1, 2),
    "(14)(23)": ("inn", 1, 2),
}

# rows whose restriction to the diagonal is an automorphism
DIAGONAL_AUTOS = {
    "id", "(12)", "(34)", "(1324)", "(1423)",
    "(12)(34)", "(13)(24)", "(14)(23)",
}

# rows carrying a verified composition identity
FACTORED = {"(34)", "(24)", "(134)", "(1234)", "(1324)", "(1423)", "(1432)"}


@pytest.fixture(scope="module")
def verdicts():
    return {
        spec.cycle_notation(): classify(spec)
        for spec in table_order_specs()
    }


class TestVerdicts:
    def test_golden_table(self, verdicts):
        assert set(verdicts) == set(GOLDEN)
        for name, (prop, index, order) in GOLDEN.items():
            c = verdicts[name]
            assert (c.property, c.index, c.order) == (prop, index, order), name

    def test_entropy_labels(self, verdicts):
        for name, c in verdicts.items():
            expected = "0" if c.property in ("inn", "out") else "log 2"
            assert c.entropy_label == expected, name
            expected_diag = "0" if name in DIAGONAL_AUTOS else "log 2"
            assert c.diagonal_entropy_label == expected_diag, name
            assert c.diagonal_automorphism == (name in DIAGONAL_AUTOS), name

    def test_inner_witness_only_for_inner(self, verdicts):
        for name, c in verdicts.items():
            if c.property == "inn":
                assert c.inner_witness is not None, name
            else:
                assert c.inner_witness is None, name

    def test_reducibility_witness_only_for_reducible(self, verdicts):
        for name, c in verdicts.items():
            if c.property == "red":
                assert c.commutant is not None and c.commutant.verified, name
            else:
                assert c.commutant is None, name

    def test_factorizations_recorded_for_listed_rows(self, verdicts):
        traced = {n for n, c in verdicts.items() if c.factorization}
        assert traced == FACTORED
        assert verdicts["(34)"].factorization == (
            "rho_34 = rho_(12)(34) . rho_12",
            "index 1 x 2 = 2",
        )
        assert verdicts["(1324)"].factorization == (
            "rho_1324 = Ad(u_(13)(24)) . rho_12",
            "index 2 (inner perturbation preserves it)",
        )

    def test_index_matches_subspace_route(self, verdicts):
        for name, c in verdicts.items():
            assert c.xi.index == c.index, name

    def test_equivalent_rows_share_verdict(self, verdicts):
        pairs = [
            ("(134)", "(142)"), ("(243)", "(123)"), ("(1234)", "(24)"),
            ("(1324)", "(12)"), ("(1423)", "(34)"), ("(1432)", "(13)"),
            ("(12)(34)", "(13)(24)"), ("(14)(23)", "id"),
        ]
        for left, right in pairs:
            a, b = verdicts[left], verdicts[right]
            assert a.index == b.index, (left, right)
            # inn/out may differ across a class; aut/irr/red may not
            kind = lambda p: "aut" if p in ("inn", "out") else p
            assert kind(a.property) == kind(b.property), (left, right)


class TestInputsAndPayload:
    def test_accepts_text_spec_and_endomorphism(self):
        by_text = classify("(23)")
        by_spec = classify(parse_perm("(23)"))
        by_endo = classify(PermEndomorphism(parse_perm("(23)")))
        assert by_text.property == by_spec.property == by_endo.property == "red"

    def test_rank_guard(self):
        with pytest.raises(RankUnsupported):
            classify(parse_perm("(58)"))

    def test_depth_cap_guard(self):
        with pytest.raises(WordError):
            classify("(13)", depth_cap=1)

    def test_payload_is_json_ready(self, verdicts):
        payload = verdicts["(13)"].to_payload()
        json.dumps(payload)
        assert payload["perm"] == "(13)"
        assert payload["property"] == "irr"
        assert payload["index"] == 2
        assert payload["xi"]["chain_dims"] == [4, 2, 2]
        assert payload["xi"]["index"] == 2
        assert payload["xi"]["basis"] == ["s_{1,1}", "s_{2,2}"]
        assert payload["commutant"]["dims"] == [1, 1, 1]
        assert payload["ht"] == "log 2"
        assert payload["ht_diag"] == "log 2"

    def test_payload_witness_fields(self, verdicts):
        inn = verdicts["(14)(23)"].to_payload()
        assert inn["inner_witness"]["cycles"] == "(12)"
        assert inn["inner_witness"]["rank"] == 1
        red = verdicts["(23)"].to_payload()
        assert red["commutant"]["witness"]["level"] == 1
        assert red["commutant"]["witness"]["verified"] is True


class TestRelationReport:
    def test_all_relations_hold(self):
        report = verify_paper_relations()
        assert len(report.checks) == 7
        assert report.all_ok
        for check in report.checks:
            assert check.holds, check.name
            assert check.derived_index == check.direct_index, check.name

    def test_report_names(self):
        names = {c.name for c in verify_paper_relations().checks}
        assert "rho_34 = rho_(12)(34) . rho_12" in names
        assert "rho_24 = rho_13 . rho_(13)(24)" in names
        assert "rho_1432 = Ad(u_(13)(24)) . rho_13" in names
