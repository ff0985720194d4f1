from fractions import Fraction

import pytest

from spinact.equivariant_sum import (
    ActionScenario,
    GeneratorAction,
    InvalidScenarioError,
    ROTATE_BOTH,
    ROTATE_FIRST,
    ROTATE_SECOND,
    Summand,
)
from spinact.obstruction import (
    NONSMOOTHABLE,
    NO_OBSTRUCTION,
    SMOOTHABLE_BY_CONSTRUCTION,
    UNKNOWN,
    check,
    check_z2,
    check_z2xz2,
    subgroup_smoothability_hint,
)
from spinact.templates import klein_template, z2_template


def test_z2_headline_example():
    report = check_z2(z2_template(3, 1))
    assert report.b == 0
    assert report.k == 1
    assert report.verdict == NONSMOOTHABLE
    assert report.all_hypotheses_pass
    assert report.trace_value == Fraction(1, 2)
    assert report.trace_is_algebraic_integer is False
    assert (report.b2, report.signature) == (22, -16)


def test_z2_no_e8_content_gives_no_obstruction():
    report = check_z2(z2_template(3, 0))
    assert report.b == 0 and report.k == 0
    assert report.verdict == NO_OBSTRUCTION
    assert report.all_hypotheses_pass
    assert report.trace_value == 1 and report.trace_is_algebraic_integer


def test_z2_free_generator_is_a_hypothesis_failure():
    # everything swapped in pairs: empty fixed set, zero signature
    s = ActionScenario(
        "Z2",
        (Summand("s0", "s2xs2"), Summand("s1", "s2xs2")),
        GeneratorAction((("s0", "s1"),), {}),
    )
    report = check_z2(s)
    assert not report.all_hypotheses_pass
    failed = {h.name for h in report.hypotheses if not h.passed}
    assert failed == {"generator_odd"}
    assert report.verdict == NO_OBSTRUCTION


def test_z2_even_generator_is_a_hypothesis_failure():
    s = ActionScenario(
        "Z2",
        (Summand("s0", "s2xs2"),),
        GeneratorAction((), {"s0": ROTATE_BOTH}),
    )
    report = check_z2(s)
    failed = {h.name for h in report.hypotheses if not h.passed}
    assert failed == {"generator_odd"}
    assert report.verdict == NO_OBSTRUCTION


def test_z2_odd_form_fails_spin_hypothesis():
    from spinact.lattice import IntegerLattice

    odd = IntegerLattice(((1,),))
    s = ActionScenario(
        "Z2",
        (
            Summand("s0", "s2xs2"),
            Summand("c0", "custom", odd),
            Summand("c1", "custom", odd),
        ),
        GeneratorAction((("c0", "c1"),), {"s0": ROTATE_FIRST}),
    )
    report = check_z2(s)
    failed = {h.name for h in report.hypotheses if not h.passed}
    assert "intersection_form_even" in failed
    assert report.verdict == NO_OBSTRUCTION


def test_z2_wrong_group_rejected():
    with pytest.raises(ValueError):
        check_z2(klein_template(1, 1, 1))
    with pytest.raises(ValueError):
        check_z2xz2(z2_template(1, 1))


def test_z2_invalid_scenario_raises():
    s = ActionScenario("Z2", (Summand("w", "minus_e8"),), GeneratorAction())
    with pytest.raises(InvalidScenarioError):
        check_z2(s)


@pytest.mark.parametrize(
    "l,k",
    [(l, k) for k in range(1, 5) for l in range(3 * k, 3 * k + 4)],
)
def test_z2_family_sweep_nonsmoothable(l, k):
    report = check_z2(z2_template(l, k))
    assert report.verdict == NONSMOOTHABLE
    assert report.b == 0 and report.k == k


@pytest.mark.parametrize("l", [0, 2, 5])
def test_z2_family_k_zero_never_obstructs(l):
    if l == 0:
        # no fixed set at all: hypothesis failure rather than certificate
        report = check_z2(z2_template(0, 0))
        assert report.verdict == NO_OBSTRUCTION
    else:
        report = check_z2(z2_template(l, 0))
        assert report.verdict == NO_OBSTRUCTION
        assert report.all_hypotheses_pass


def test_klein_headline_example():
    report = check_z2xz2(klein_template(3, 3, 1))
    assert report.b == 0
    assert report.k == 1
    assert report.verdict == NONSMOOTHABLE
    assert report.all_hypotheses_pass
    assert report.index_data.index_twisted == 0
    parities = {er.element: er.parity.value for er in report.elements}
    assert parities == {"gen1": "odd", "gen2": "odd", "composition": "even"}


def test_klein_no_e8_content():
    report = check_z2xz2(klein_template(3, 3, 0))
    assert report.b == 0 and report.k == 0
    assert report.verdict == NO_OBSTRUCTION
    assert report.all_hypotheses_pass


@pytest.mark.parametrize(
    "l1,l2,k",
    [
        (l1, l2, k)
        for k in range(1, 4)
        for l1 in (3 * k, 3 * k + 1)
        for l2 in (3 * k, 3 * k + 1)
    ],
)
def test_klein_family_sweep_nonsmoothable(l1, l2, k):
    report = check_z2xz2(klein_template(l1, l2, k))
    assert report.verdict == NONSMOOTHABLE
    assert report.b == 0 and report.k == k
    assert report.index_data.index_twisted == 0


def test_klein_asymmetric_points_shift_the_bound():
    # overriding the sign split makes the twisted index nonzero and the
    # bound larger in absolute value via the sign maximum
    s = klein_template(3, 3, 1)
    gen1 = GeneratorAction(s.gen1.permutation, dict(s.gen1.local), {"core": (4, 0)})
    s2 = ActionScenario(s.group, s.summands, gen1, s.gen2)
    report = check_z2xz2(s2)
    assert report.index_data.index_twisted == 2
    assert report.k == Fraction(5, 4)
    assert report.verdict == NONSMOOTHABLE


def test_klein_verdict_invariant_under_relabelling():
    s = klein_template(3, 3, 1)
    renamed = ActionScenario(
        s.group,
        tuple(reversed([Summand("q" + sm.id, sm.kind) for sm in s.summands])),
        GeneratorAction(
            tuple(("q" + a, "q" + b) for a, b in s.gen1.permutation),
            {"q" + i: lbl for i, lbl in s.gen1.local.items()},
        ),
        GeneratorAction(
            tuple(("q" + a, "q" + b) for a, b in s.gen2.permutation),
            {"q" + i: lbl for i, lbl in s.gen2.local.items()},
        ),
    )
    a = check_z2xz2(s)
    b = check_z2xz2(renamed)
    assert (a.b, a.k, a.verdict) == (b.b, b.k, b.verdict)


def test_trace_integral_exactly_when_no_obstruction():
    for l, k in [(3, 0), (3, 1), (6, 2), (9, 3)]:
        report = check_z2(z2_template(l, k))
        if report.all_hypotheses_pass and report.trace_value is not None:
            assert report.trace_is_algebraic_integer == (report.b >= report.k)
            assert report.trace_is_algebraic_integer == (
                report.verdict == NO_OBSTRUCTION
            )


def test_check_dispatches_on_group():
    assert check(z2_template(3, 1)).theorem == "z2_odd_involution"
    assert check(klein_template(3, 3, 1)).theorem == "z2xz2_odd_pair"


def test_subgroup_hints_on_template():
    s = klein_template(3, 3, 1)
    for sub in ("gen1", "gen2", "diagonal"):
        assert subgroup_smoothability_hint(s, sub) == SMOOTHABLE_BY_CONSTRUCTION
    tight = klein_template(3, 2, 1)
    for sub in ("gen1", "gen2", "diagonal"):
        assert subgroup_smoothability_hint(tight, sub) == UNKNOWN


def test_subgroup_hint_never_claims_off_template():
    # a hand-built commuting action that is not the template shape: two
    # jointly rotated cores
    summands = (Summand("c1", "s2xs2"), Summand("c2", "s2xs2"))
    gen1 = GeneratorAction((), {"c1": ROTATE_FIRST, "c2": ROTATE_FIRST})
    gen2 = GeneratorAction((), {"c1": ROTATE_SECOND, "c2": ROTATE_SECOND})
    s = ActionScenario("Z2xZ2", summands, gen1, gen2)
    assert subgroup_smoothability_hint(s, "gen1") == UNKNOWN


def test_subgroup_hint_argument_validation():
    s = klein_template(3, 3, 1)
    with pytest.raises(ValueError):
        subgroup_smoothability_hint(s, "whole_group")
    with pytest.raises(ValueError):
        subgroup_smoothability_hint(z2_template(3, 1), "gen1")


def test_k3_swap_scenario_obstruction_does_not_fire():
    # swapped K3 pair: the fixed sublattice carries twice the K3 form, so
    # b = 3 beats the bound k = 2 (values cross-checked against the float
    # eigenvalue and rational nullspace oracles)
    s = ActionScenario(
        "Z2",
        (Summand("s0", "s2xs2"), Summand("k0", "k3"), Summand("k1", "k3")),
        GeneratorAction((("k0", "k1"),), {"s0": ROTATE_FIRST}),
    )
    report = check_z2(s)
    assert report.all_hypotheses_pass
    assert (report.b2, report.signature) == (46, -32)
    assert report.b == 3
    assert report.k == 2
    assert report.verdict == NO_OBSTRUCTION
    assert report.trace_value == 2 and report.trace_is_algebraic_integer
