import json

import pytest

from bielliptic import atlas
from bielliptic._data import GENUS_TABLE_3P, PRINTED_DEVIATIONS
from bielliptic.errors import DataError
from bielliptic.modsym import invariant_genus
from bielliptic.ntheory import ALSubgroup


def _by_key(records):
    return {r.key(): r for r in records}


class TestEnumeration:
    def test_level_40(self):
        pairs = [sub.label() for N, sub in atlas.enumerate_pairs() if N == 40]
        assert pairs == ["<w8>", "<w5>"]

    def test_level_12_and_60(self):
        by_level = {}
        for N, sub in atlas.enumerate_pairs():
            by_level.setdefault(N, []).append(sub)
        assert 12 not in by_level
        assert len(by_level[60]) == 7
        # the Fricke subgroup never appears even when its genus is >= 2
        assert all(not sub.is_fricke for subs in by_level.values() for sub in subs)
        assert all(not sub.is_full for subs in by_level.values() for sub in subs)

    def test_genus_filter(self):
        for N, sub in atlas.enumerate_pairs():
            assert invariant_genus(N, sub) >= 2


class TestECTable:
    def test_parse_line(self):
        table = atlas.ingest_ec_table("99a 99 1 4")
        rec = table["99a"]
        assert (rec.label, rec.conductor, rec.rank, rec.modular_degree) == ("99a", 99, 1, 4)

    def test_absent_degree(self):
        rec = atlas.ingest_ec_table("380a1 380 0 24\n15a 15 0 -")
        assert rec["380a1"].modular_degree == 24
        assert rec["15a"].modular_degree is None

    def test_duplicate_label(self):
        with pytest.raises(DataError):
            atlas.ingest_ec_table("15a 15 0 -\n15a 15 0 -")

    def test_malformed(self):
        with pytest.raises(DataError) as err:
            atlas.ingest_ec_table("ok 15 0 -\nbroken line here")
        assert err.value.line == 2

    def test_default_table_parses(self, ec_table):
        assert ec_table["99a"].rank == 1
        assert all(rec.conductor >= 11 for rec in ec_table.values())


class TestAdjudications:
    def test_default_parse(self):
        adj = atlas.default_adjudications()
        key = (84, ALSubgroup(84, (3,)).elements)
        verdict, citation = adj[key]
        assert verdict == "not-bielliptic"
        assert "Petri" in citation

    def test_bad_verdict(self):
        with pytest.raises(DataError):
            atlas.ingest_adjudications("84;w3;maybe;because")


class TestConfirm:
    def test_90_w9(self):
        w = atlas.confirm_bielliptic(90, (9,))
        assert w.element.name == "V3*w10"
        assert w.field == "Q"
        names = w.group.names()
        assert "V3*w90" in names

    def test_126_w63_field(self):
        w = atlas.confirm_bielliptic(126, (63,))
        assert w.element.kind == "v3"
        assert w.field == "Q(sqrt(-3))"

    def test_104_w8_family(self):
        w = atlas.confirm_bielliptic(104, (8,))
        assert w.element.kind == "v2"
        assert "V2*w104" in w.group.names()

    def test_44_reduction(self):
        w = atlas.confirm_bielliptic(44, (4,))
        assert w.chain and w.level == 22
        assert w.element.kind == "al"

    def test_none_found(self):
        assert atlas.confirm_bielliptic(54, (2,)) is None


class TestClassification:
    def test_every_pair_terminal(self, classification):
        assert all(
            r.status in ("bielliptic-confirmed", "excluded", "adjudicated")
            for r in classification
        )

    def test_regression(self, classification):
        stats = atlas.verify_classification(classification)
        assert stats["bielliptic"] == 124
        assert stats["adjudicated"] > 0

    def test_published_list_structure(self):
        # degree-2 families: 16 two-prime levels x 2 subgroups and
        # 9 three-prime levels x 7 subgroups, plus 29 sporadic pairs
        from bielliptic._data import (
            BIELLIPTIC_DEG2_LEVELS_2P,
            BIELLIPTIC_DEG2_LEVELS_3P,
            BIELLIPTIC_SPORADIC,
        )

        expected = atlas.published_bielliptic_pairs()
        assert len(BIELLIPTIC_DEG2_LEVELS_2P) == 16
        assert len(BIELLIPTIC_DEG2_LEVELS_3P) == 9
        assert len(BIELLIPTIC_SPORADIC) == 29
        two = sum(1 for (N, _) in expected if N in BIELLIPTIC_DEG2_LEVELS_2P)
        assert two == 32
        assert len(expected) == 32 + 63 + 29

    def test_examples(self, classification):
        recs = _by_key(classification)
        r = recs[(284, ALSubgroup(284, (4,)).elements)]
        assert r.status == "excluded"
        assert any(res.rule_id == "ogg-bound" for res in r.rule_trace)
        r = recs[(92, ALSubgroup(92, (4,)).elements)]
        assert r.status == "excluded"
        assert r.rule_trace[-1].rule_id == "castelnuovo"
        r = recs[(84, ALSubgroup(84, (3,)).elements)]
        assert r.status == "adjudicated"

    def test_every_adjudication_entry_consumed(self, classification):
        # the adjudication table contains exactly the pairs the rules leave open
        used = {r.key() for r in classification if r.status == "adjudicated"}
        assert used == set(atlas.default_adjudications())

    def test_rule_preconditions_in_traces(self, classification):
        # no trace cites a rule whose stated preconditions were unmet
        for rec in classification:
            for res in rec.rule_trace:
                if res.rule_id == "ogg-bound":
                    N, order, p = res.inputs
                    assert N % p != 0
                if res.rule_id == "unramified-cover":
                    g, order, h, y_hyp = res.inputs
                    assert h >= 2 and not y_hyp
                if res.rule_id == "two-group":
                    g, order = res.inputs
                    assert g >= 6 and order & (order - 1) == 0
                if res.rule_id == "castelnuovo":
                    g, d, gy = res.inputs
                    assert d >= 2

    def test_non_rational_pairs(self, classification):
        recs = _by_key(classification)
        for N, gens in [(126, (63,)), (252, (4, 63))]:
            r = recs[(N, ALSubgroup(N, gens).elements)]
            assert r.field == "Q(sqrt(-3))"
            assert r.quadratic_points == "finite"

    def test_witness_families_match_annotations(self, classification):
        annotations = atlas.witness_annotations()
        for rec in classification:
            if rec.witness is None:
                continue
            ann = annotations.get(rec.key())
            assert ann is not None, rec.key()
            assert rec.witness.family in ann[0], (
                rec.N, rec.subgroup.label(), rec.witness.family, ann[0],
            )

    def test_witness_groups_reverify(self, classification):
        from bielliptic.involutions import quotient_genus_hurwitz

        for rec in classification:
            if rec.witness is not None:
                assert quotient_genus_hurwitz(rec.witness.level, rec.witness.group) == 1
                if all(e.kind in ("id", "al") for e in rec.witness.group):
                    # AL-only witnesses re-verify through the invariant route
                    divisors = [
                        e._al_part() for e in rec.witness.group.nontrivial()
                    ]
                    assert invariant_genus(rec.witness.level, divisors) == 1


class TestQuadraticPoints:
    def test_examples(self, classification):
        recs = _by_key(classification)
        assert recs[(40, ALSubgroup(40, (8,)).elements)].quadratic_points == (
            "infinite(hyperelliptic)"
        )
        qp = recs[(99, ALSubgroup(99, (9,)).elements)].quadratic_points
        assert qp.startswith("infinite(bielliptic:99a")
        assert recs[(171, ALSubgroup(171, (9,)).elements)].quadratic_points == "finite"

    def test_missing_rank_data(self, classification):
        # a bielliptic pair that is not hyperelliptic must consult the table
        rec = next(
            r for r in classification
            if r.bielliptic and r.key() not in atlas.hyperelliptic_pairs()
            and r.field == "Q"
        )
        with pytest.raises(DataError):
            atlas.quadratic_points(rec, {})


class TestReports:
    def test_csv_252_row(self, classification):
        text = atlas.emit_report([r for r in classification if r.N == 252], "csv")
        row = next(line for line in text.splitlines() if line.startswith("252,"))
        assert row == "252," + ",".join(map(str, GENUS_TABLE_3P[252]))

    def test_json_deterministic(self, classification):
        sample = [r for r in classification if r.N in (44, 120)]
        assert atlas.emit_report(sample, "json") == atlas.emit_report(sample, "json")
        json.loads(atlas.emit_report(sample, "json"))

    def test_markdown(self, classification):
        sample = [r for r in classification if r.N == 126]
        text = atlas.emit_report(sample, "markdown")
        assert "| 126 | <w9> | 9 |" in text

    def test_unknown_format(self, classification):
        with pytest.raises(ValueError):
            atlas.emit_report(classification[:1], "xml")


class TestGoldenTables:
    def test_genus_table_spot_levels(self):
        assert atlas.verify_genus_tables({60, 120, 252}) == 48

    def test_fix_tables(self):
        assert atlas.verify_fix_tables() == 37

    def test_printed_deviation_cells_are_provably_misprints(self):
        # the published 294 row contradicts its own Hurwitz identity; see the
        # acceptance module for the full argument
        assert set(PRINTED_DEVIATIONS) == {
            (294, (3,)), (294, (6,)), (294, (147,)), (294, (294,)),
        }
