from itertools import product

import pytest
from hypothesis import given, strategies as st

from blowup_calc.chow import epsilon_override
from blowup_calc.curves import (
    QUOTIENT_TWIST,
    Component,
    CurveProfile,
    CurveSheafData,
    LineType,
    grr_pushforward,
    lines,
)
from blowup_calc.errors import StepError, ValidationError
from blowup_calc.instanton import (
    InstantonData,
    Stability,
    Verdict,
    definition_checklist,
    instanton_vanishing_tables,
    is_admissible_charge,
    rank0_instanton_check,
)
from blowup_calc.sheafdata import ChernData, TwistDescriptor
from blowup_calc.transform import (
    ElementaryData,
    ElementaryVerdict,
    Witness,
    catalog_step,
    iterate_transforms,
    paper_literal_charge,
    quotient_sheaf,
    thooft_seed,
    transform_charge,
    transform_chern_via_grr,
    transform_tables,
    validate_elementary,
)

SEED = InstantonData.of_charge(3, 1, stability=Stability.MU_STABLE)
steps = st.lists(st.sampled_from("PFX"), max_size=6)


def _elem(tags, seed=SEED):
    return ElementaryData(CurveSheafData.theta(lines(tags)), seed)


def test_validate_examples():
    assert validate_elementary(_elem("P")).verdict is ElementaryVerdict.VALID
    rep = validate_elementary(_elem("X"))
    assert rep.verdict is ElementaryVerdict.VALID
    assert rep.witness is Witness.CATALOG_VERIFIED
    bad = ElementaryData(CurveSheafData(lines("P"), (0,)), SEED)
    assert validate_elementary(bad).verdict is ElementaryVerdict.INVALID
    with pytest.raises(ValidationError):
        transform_charge(bad)


def test_positive_genus_needs_assertion():
    curve = CurveSheafData.theta(CurveProfile((Component(2, 0, 1),)))
    rep = validate_elementary(ElementaryData(curve, SEED))
    assert rep.verdict is ElementaryVerdict.VALID_BY_ASSERTION
    assert rep.untwisted_vanishing is Verdict.UNKNOWN


def test_charge_examples():
    k, l = SEED.charge
    assert transform_charge(_elem("P")).charge == (k + 1, l)
    assert transform_charge(_elem("F")).charge == (k + 1, l + 1)
    assert transform_charge(_elem("")) == SEED


def test_transform_keeps_stability_and_drops_local_freeness():
    out = transform_charge(_elem("P"))
    assert out.stability is Stability.MU_STABLE
    assert not out.locally_free


@pytest.mark.parametrize("tags", ["P", "F", "X", "PF", "PPFX", "FFF"])
def test_charge_agrees_with_grr(tags):
    e = _elem(tags)
    via_grr = transform_chern_via_grr(e)
    assert (via_grr.k, via_grr.l, via_grr.m) == (*transform_charge(e).charge, 0)
    assert grr_pushforward(e.curve, QUOTIENT_TWIST).degPt == 0


def test_paper_literal_reading():
    k, l = SEED.charge
    assert paper_literal_charge(_elem("X")) == (k, l + 1)
    assert transform_charge(_elem("X")).charge == (k, l - 1)
    with epsilon_override(-1):
        assert transform_charge(_elem("X")).charge == (k, l + 1)


def test_admissibility_monotone():
    for k, l in product(range(-3, 12), repeat=2):
        if is_admissible_charge(2, k, l):
            assert is_admissible_charge(2, k + 1, l)
            assert is_admissible_charge(2, k + 1, l + 1)


def test_iterate_examples():
    k, l = SEED.charge
    traj = iterate_transforms(SEED, [catalog_step("P")] * 3)
    assert [s.data.charge for s in traj] == [(k, l), (k + 1, l), (k + 2, l), (k + 3, l)]
    assert iterate_transforms(SEED, []) == iterate_transforms(SEED, [])[:1]
    assert len(iterate_transforms(SEED, [])) == 1


def test_large_gap_seed():
    seed = thooft_seed(14, 0).instanton
    last = iterate_transforms(seed, [catalog_step("P")])[-1]
    assert last.data.charge == (15, 0)
    assert last.admissible
    assert last.data.stability is Stability.MU_STABLE


@given(steps, steps)
def test_iteration_concatenates(first, second):
    whole = iterate_transforms(SEED, [catalog_step(t) for t in first + second])
    head = iterate_transforms(SEED, [catalog_step(t) for t in first])
    tail = iterate_transforms(head[-1].data, [catalog_step(t) for t in second])
    assert whole[-1].data == tail[-1].data
    assert whole[-1].data.charge == transform_charge(_elem(first + second)).charge


@given(steps)
def test_quotient_is_rank0_instanton(tags):
    traj = iterate_transforms(SEED, [catalog_step(t) for t in tags])
    for s in traj:
        assert rank0_instanton_check(s.quotient.profile, s.quotient.degrees)
        d = s.as_dict()
        assert d["quotient_rank0_instanton"] is True
        assert d["quotient_charge"] == [s.data.charge[0] - 3, s.data.charge[1] - 1]


def test_quotient_degree_condition_is_equivalent():
    for deg in range(-4, 3):
        curve = CurveSheafData(lines("F"), (deg,))
        q = quotient_sheaf(curve)
        assert rank0_instanton_check(q.profile, q.degrees) == (deg == -1)


def test_step_error_reports_index():
    seed = InstantonData.of_charge(1, 0)
    with pytest.raises(StepError) as info:
        iterate_transforms(seed, [catalog_step("P"), CurveSheafData(lines("P"), (0,))])
    assert info.value.index == 2


@pytest.mark.parametrize("k, l, n_p, n_f", [(1, 0, 1, 1), (2, 2, 0, 3), (5, 1, 4, 2)])
def test_thooft_seed_scheme(k, l, n_p, n_f):
    s = thooft_seed(k, l)
    assert s.scheme.type_counts == (n_p, n_f)
    assert s.scheme_charge() == (k, l)


def test_thooft_seed_rejects():
    for k, l in [(1, 1), (0, -2), (1, 2)]:
        with pytest.raises(ValidationError):
            thooft_seed(k, l)


def test_thooft_scheme_charge_sweep():
    for k, l in product(range(12), range(-1, 12)):
        if k - l >= 0 and is_admissible_charge(2, k, l):
            assert thooft_seed(k, l).scheme_charge() == (k, l)


@pytest.mark.parametrize("tags", ["P", "F", "X", "PF", "PPX"])
def test_transformed_tables_satisfy_checklist(tags):
    e = _elem(tags)
    tables = transform_tables(instanton_vanishing_tables(), e.curve)
    assert definition_checklist(transform_charge(e), tables).verdict is Verdict.PASS


def test_tables_need_surjectivity_when_quotient_has_h1():
    curve = CurveSheafData(lines("P"), (-3,))
    # at (-2,1) the quotient is O(-3) on the line, with h1 = 2
    t = TwistDescriptor(-2, 1)
    source = {t: {"h0": 0, "h1": 2, "h2": 0}}
    assert "h1" not in transform_tables(source, curve, twists=[t], surjective=())[t]
    assert transform_tables(source, curve, twists=[t], surjective=[t])[t]["h1"] == 0


def test_trajectory_paper_literal_field():
    traj = iterate_transforms(SEED, [catalog_step("X")])
    assert traj[-1].as_dict(paper_literal=True)["paper_literal_charge"] == [3, 2]
    assert "paper_literal_charge" not in traj[-1].as_dict()


def test_non_instanton_source_rejected():
    with pytest.raises(ValidationError):
        InstantonData(ChernData(2, 0, 0, 0, 0, 0))
