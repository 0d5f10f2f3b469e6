"""Deterministic sampling, report assembly, and JSON rendering."""

import json
from fractions import Fraction

import pytest

from hypervec.checker import (
    CheckItem,
    CheckReport,
    ItemCheck,
    MAX_WITNESSES,
    SUITE_NAMES,
    SampleConfig,
    SplitMix64,
    Witness,
    forced_scalars,
    forced_vectors,
    render_json,
    report_document,
    run_suites,
    sample_stream,
    vacuous_report,
)
from hypervec.inner import DotProduct
from hypervec.models import ModelSpec, Trivial, ZeroAugmented
from hypervec.scalars import FieldTag, GaussianRational

F = Fraction


class TestSplitMix64:
    def test_reference_vector_seed_zero(self):
        # first outputs of the public-domain reference implementation
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(4)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
            0xF88BB8A8724C81EC,
        ]

    def test_determinism_and_seed_sensitivity(self):
        a = [SplitMix64(42).next_u64() for _ in range(8)]
        b = [SplitMix64(42).next_u64() for _ in range(8)]
        c = [SplitMix64(43).next_u64() for _ in range(8)]
        assert a == b != c

    def test_below(self):
        rng = SplitMix64(7)
        draws = [rng.below(10) for _ in range(100)]
        assert all(0 <= d < 10 for d in draws)
        with pytest.raises(ValueError):
            rng.below(0)

    def test_seed_wraps_to_64_bits(self):
        assert SplitMix64(1 << 64).next_u64() == SplitMix64(0).next_u64()


class TestSampleConfig:
    def test_defaults(self):
        cfg = SampleConfig()
        assert (cfg.seed, cfg.samples, cfg.height, cfg.depth) == (42, 500, 10, 8)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"seed": -1},
            {"seed": 1 << 64},
            {"samples": 0},
            {"height": 0},
            {"depth": 0},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            SampleConfig(**kwargs)


class TestSampleStream:
    def test_exact_count_and_determinism(self):
        cfg = SampleConfig(samples=50)
        a = list(sample_stream(cfg, FieldTag.Q, 2, 1, 1))
        b = list(sample_stream(cfg, FieldTag.Q, 2, 1, 1))
        assert len(a) == 50
        assert a == b

    def test_forced_prefix_comes_first(self):
        cfg = SampleConfig(samples=30)
        tuples = list(sample_stream(cfg, FieldTag.Q, 2, 1, 1))
        scalars = forced_scalars(FieldTag.Q)
        vectors = forced_vectors(FieldTag.Q, 2)
        expected = [(s, v) for s in scalars for v in vectors]
        assert tuples[: len(expected)] == expected

    def test_forced_prefix_truncated_when_samples_small(self):
        cfg = SampleConfig(samples=4)
        tuples = list(sample_stream(cfg, FieldTag.Q, 2, 1, 1))
        assert len(tuples) == 4

    def test_qi_prefix_includes_one_plus_i(self):
        cfg = SampleConfig(samples=40)
        tuples = list(sample_stream(cfg, FieldTag.QI, 1, 1, 1))
        assert GaussianRational(1, 1) in {t[0] for t in tuples}

    def test_tail_respects_height(self):
        cfg = SampleConfig(samples=300, height=4)
        for tup in sample_stream(cfg, FieldTag.Q, 2, 1, 1):
            a, v = tup
            for q in (a, *v.coords):
                assert abs(q.numerator) <= 4 * q.denominator or abs(q) <= 4

    def test_shape(self):
        cfg = SampleConfig(samples=10)
        for tup in sample_stream(cfg, FieldTag.Q, 3, 2, 2):
            assert len(tup) == 4
            assert isinstance(tup[0], Fraction) and isinstance(tup[1], Fraction)
            assert tup[2].dim == 3 and tup[3].dim == 3

    def test_scalars_only(self):
        cfg = SampleConfig(samples=12)
        tuples = list(sample_stream(cfg, FieldTag.Q, 2, 2, 0))
        assert len(tuples) == 12
        assert all(len(t) == 2 for t in tuples)


def w(tag):
    return Witness({"k": tag}, "broken")


class TestItemCheck:
    def test_pass(self):
        c = ItemCheck("x", "anchor")
        c.sample([])
        item = c.finish()
        assert (item.status, item.samples, item.witnesses) == ("pass", 1, [])

    def test_fail_collects_witnesses(self):
        c = ItemCheck("x", "anchor")
        c.sample([w("a")])
        c.sample([])
        item = c.finish()
        assert item.status == "fail"
        assert item.samples == 2
        assert [x.bindings["k"] for x in item.witnesses] == ["a"]

    def test_witness_cap_and_dedup(self):
        c = ItemCheck("x", "anchor")
        for i in range(10):
            c.sample([w(str(i))])
            c.sample([w(str(i))])  # duplicate; must not crowd the list
        item = c.finish()
        assert len(item.witnesses) == MAX_WITNESSES
        assert [x.bindings["k"] for x in item.witnesses] == ["0", "1", "2", "3", "4"]

    def test_zero_samples_is_vacuous(self):
        assert ItemCheck("x", "a").finish().status == "vacuous"

    def test_vacuous_flag_hides_failures(self):
        c = ItemCheck("x", "a")
        c.sample([w("hidden")])
        item = c.finish(vacuous=True)
        assert item.status == "vacuous"
        assert item.witnesses == []

    def test_unbounded_beats_everything(self):
        c = ItemCheck("x", "a")
        c.sample([w("f")])
        c.mark_unbounded(w("u"))
        item = c.finish(vacuous=True)  # even under a failed precondition
        assert item.status == "unbounded"
        assert [x.bindings["k"] for x in item.witnesses] == ["u"]


class TestReports:
    def test_vacuous_report(self):
        rep = vacuous_report("m", "hip", [("a", "anchor a"), ("b", "anchor b")])
        assert rep.suite == "hip"
        assert [i.status for i in rep.items] == ["vacuous", "vacuous"]
        assert rep.clean and not rep.all_passed

    def test_item_lookup(self):
        rep = CheckReport("m", "s", [CheckItem("a", "x", "pass", 1, [])])
        assert rep.item("a").status == "pass"
        with pytest.raises(KeyError):
            rep.item("nope")

    def test_run_suites_validates_names(self, fast_cfg):
        m = ModelSpec(FieldTag.Q, 2, Trivial())
        with pytest.raises(ValueError):
            run_suites(m, DotProduct(), fast_cfg, ["nope"])

    def test_run_suites_order_preserved(self, fast_cfg):
        m = ModelSpec(FieldTag.Q, 2, Trivial())
        reports = run_suites(m, DotProduct(), fast_cfg, ["hip", "wvs_axioms"])
        assert [r.suite for r in reports] == ["hip", "wvs_axioms"]

    def test_all_suite_names_runnable(self, fast_cfg):
        m = ModelSpec(FieldTag.Q, 2, ZeroAugmented())
        reports = run_suites(m, DotProduct(), fast_cfg, list(SUITE_NAMES))
        assert [r.suite for r in reports] == list(SUITE_NAMES)


class TestJson:
    def test_schema_and_stability(self, fast_cfg):
        m = ModelSpec(FieldTag.Q, 2, ZeroAugmented())
        reports = run_suites(m, DotProduct(), fast_cfg, ["real_ip"])
        doc = report_document(m.describe(), fast_cfg.seed, reports)
        text = render_json(doc)
        assert text == render_json(doc)
        assert text.endswith("\n")
        parsed = json.loads(text)
        assert set(parsed) == {"model", "seed", "suites"}
        assert parsed["model"] == "zero_augmented Q dim=2"
        assert parsed["seed"] == fast_cfg.seed
        suite = parsed["suites"][0]
        assert set(suite) == {"name", "items"}
        item = suite["items"][0]
        assert set(item) == {"id", "anchor", "status", "samples", "witnesses"}
        fail = next(i for i in suite["items"] if i["status"] == "fail")
        assert set(fail["witnesses"][0]) == {"bindings", "relation"}

    def test_keys_sorted(self):
        doc = report_document("m", 1, [])
        assert render_json(doc).index('"model"') < render_json(doc).index('"seed"')
