"""Essential points and the two normality readings."""

from fractions import Fraction

import pytest

from hypervec.checker import SampleConfig
from hypervec.essential import (
    check_lemma_basic,
    check_normal_equivalence,
    check_strong_normal,
    check_weak_normal,
    essential_points,
)
from hypervec.models import (
    Geometric,
    ModelSpec,
    Sign,
    Trivial,
    ZeroAugmented,
    contains,
    product,
)
from hypervec.scalars import FieldTag, invert, parse_scalar
from hypervec.vectors import make_vector, parse_vector, zero_vector

F = Fraction


def qv(*coords):
    return make_vector(FieldTag.Q, list(coords))


def mk(family, dim=2):
    return ModelSpec(FieldTag.Q, dim, family)


CATALOG = [
    mk(Trivial()),
    mk(ZeroAugmented()),
    mk(Geometric(F(1, 2))),
    mk(Geometric(F(2))),
    mk(Sign()),
]


class TestEssentialPoints:
    def test_zero_augmented_example(self):
        ess = essential_points(mk(ZeroAugmented()), 3, qv(1, 2))
        assert list(ess) == [qv(3, 6)]
        assert ess.complete
        assert ess.singleton
        assert str(ess) == "{(3, 6)}"

    def test_zero_scalar_convention(self):
        for model in CATALOG:
            ess = essential_points(model, 0, qv(1, 2))
            assert list(ess) == [zero_vector(FieldTag.Q, 2)]
            assert ess.complete

    def test_sign_pair(self):
        ess = essential_points(mk(Sign()), 1, qv(1, 0))
        assert list(ess) == [qv(-1, 0), qv(1, 0)]
        assert ess.complete
        assert not ess.singleton

    def test_origin_not_essential_in_zero_augmented(self):
        # 0 sits in 3 o x but x never sits in (1/3) o 0 = {0}
        ess = essential_points(mk(ZeroAugmented()), 3, qv(1, 2))
        assert qv(0, 0) not in ess

    def test_ray_closed_form(self):
        ess = essential_points(mk(Geometric(F(1, 2))), 2, qv(3, 0))
        assert list(ess) == [qv(6, 0)]
        assert ess.complete
        ess2 = essential_points(mk(Geometric(F(2))), F(1, 2), qv(4, 4))
        assert list(ess2) == [qv(2, 2)]
        assert ess2.complete

    def test_ray_enumerated_path_agrees(self):
        m = mk(Geometric(F(1, 2)))
        closed = essential_points(m, 2, qv(3, 0))
        walked = essential_points(m, 2, qv(3, 0), closed_form=False)
        assert list(closed) == list(walked)
        assert closed.complete and not walked.complete

    def test_membership_definition_holds(self):
        # every reported point e satisfies e in a o x and x in inv(a) o e
        for model in CATALOG:
            for a in (F(3), F(-1, 2)):
                x = qv(1, 2)
                for e in essential_points(model, a, x):
                    assert contains(product(model, a, x), e)
                    assert contains(product(model, invert(a), e), x)

    def test_zero_vector(self):
        for model in CATALOG:
            ess = essential_points(model, 3, zero_vector(FieldTag.Q, 2))
            assert list(ess) == [zero_vector(FieldTag.Q, 2)]


class TestLemmaBasic:
    @pytest.mark.parametrize("model", CATALOG, ids=lambda m: m.describe())
    def test_passes_everywhere(self, model, fast_cfg):
        report = check_lemma_basic(model, fast_cfg)
        assert report.clean, [(i.id, i.status) for i in report.items]

    def test_singleton_item_vacuous_on_sign(self, fast_cfg):
        report = check_lemma_basic(mk(Sign()), fast_cfg)
        assert report.item("singleton_under_strong_normality").status == "vacuous"

    def test_singleton_item_live_on_trivial(self, fast_cfg):
        report = check_lemma_basic(mk(Trivial()), fast_cfg)
        assert report.item("singleton_under_strong_normality").status == "pass"


class TestNormalityReadings:
    @pytest.mark.parametrize(
        "model",
        [mk(Trivial()), mk(ZeroAugmented()), mk(Geometric(F(1, 2))), mk(Sign())],
        ids=lambda m: m.describe(),
    )
    def test_weak_passes(self, model, fast_cfg):
        assert check_weak_normal(model, fast_cfg).all_passed

    @pytest.mark.parametrize(
        "model",
        [mk(Trivial()), mk(ZeroAugmented()), mk(Geometric(F(1, 2)))],
        ids=lambda m: m.describe(),
    )
    def test_strong_passes_on_singleton_families(self, model, fast_cfg):
        assert check_strong_normal(model, fast_cfg).all_passed

    def test_sign_fails_strong(self, fast_cfg):
        report = check_strong_normal(mk(Sign()), fast_cfg)
        assert not report.all_passed
        assert report.item("scalar_condition").status == "fail"

    def test_sign_strong_witness_replays(self, fast_cfg):
        report = check_strong_normal(mk(Sign()), fast_cfg)
        w = report.item("scalar_condition").witnesses[0]
        model = mk(Sign())
        a1 = parse_scalar(w.bindings["a1"], FieldTag.Q)
        a2 = parse_scalar(w.bindings["a2"], FieldTag.Q)
        x = parse_vector(w.bindings["x"], FieldTag.Q)
        e1 = parse_vector(w.bindings["choice1"], FieldTag.Q)
        e2 = parse_vector(w.bindings["choice2"], FieldTag.Q)
        assert e1 in essential_points(model, a1, x)
        assert e2 in essential_points(model, a2, x)
        assert e1 + e2 not in essential_points(model, a1 + a2, x)
        # the documented counterexample: x and -x summing to 0
        assert e1 + e2 == zero_vector(FieldTag.Q, 2)

    def test_equivalence_report(self, fast_cfg):
        good = check_normal_equivalence(mk(ZeroAugmented()), fast_cfg)
        assert good.all_passed
        bad = check_normal_equivalence(mk(Sign()), fast_cfg)
        agree = bad.item("readings_agree")
        assert agree.status == "fail"
        assert "readings disagree" in agree.witnesses[0].relation
        assert bad.item("weak_normality").status == "pass"
        assert bad.item("strong_normality").status == "fail"


def test_geometric_two_strongly_normal(fast_cfg):
    # growing ray still has singleton essentials, both readings pass
    report = check_strong_normal(mk(Geometric(F(2))), fast_cfg)
    assert report.all_passed
    cfg = SampleConfig(samples=200)
    report_qi = check_strong_normal(
        ModelSpec(FieldTag.QI, 2, Geometric(F(2))), cfg
    )
    assert report_qi.all_passed
