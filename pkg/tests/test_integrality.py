import pytest
from hypothesis import given, settings, strategies as st

from circint import (
    CirculantSpec,
    DegenerateOrder,
    InvalidSet,
    TooManyOrbits,
    count_integral,
    enumerate_integral,
    field_cyclotomic,
    field_gaussian,
    field_quadratic,
    field_rationals,
    is_gauss_integral,
    is_integral,
    verdict_to_json,
)

PRESETS = [
    field_rationals(),
    field_gaussian(),
    field_quadratic(2),
    field_quadratic(-3),
    field_cyclotomic(8),
]


def test_circulant_spec_validation():
    assert CirculantSpec.of(6, [5, 1, 5]).connection_set == (1, 5)
    with pytest.raises(InvalidSet):
        CirculantSpec.of(6, [0, 1])
    with pytest.raises(InvalidSet):
        CirculantSpec.of(6, [6])
    with pytest.raises(InvalidSet):
        CirculantSpec(6, (2, 1))
    with pytest.raises(DegenerateOrder):
        CirculantSpec.of(1, [])


def test_is_integral_verdicts():
    verdict = is_integral(CirculantSpec.of(6, [1, 5]), field_rationals())
    assert verdict.integral and verdict.block_indices == (0,)
    verdict = is_integral(CirculantSpec.of(6, [1, 3, 5]), field_rationals())
    assert verdict.integral and verdict.block_indices == (0, 2)

    verdict = is_integral(CirculantSpec.of(8, [1]), field_gaussian())
    assert not verdict.integral
    assert verdict.violation.block_index == 0
    assert verdict.violation.missing == (5,)
    assert verdict.violation.present == (1,)

    verdict = is_integral(CirculantSpec.of(9, []), field_quadratic(2))
    assert verdict.integral and verdict.block_indices == ()

    assert is_integral(CirculantSpec.of(4, [1]), field_gaussian()).integral


def test_is_gauss_integral_examples():
    assert is_gauss_integral(CirculantSpec.of(8, [1, 5])).integral
    assert is_gauss_integral(CirculantSpec.of(8, [2, 6])).integral
    verdict = is_gauss_integral(CirculantSpec.of(8, [3]))
    assert not verdict.integral and verdict.violation.missing == (7,)


def test_enumerate_order_and_content():
    specs = list(enumerate_integral(6, field_rationals()))
    assert [s.connection_set for s in specs] == [
        (),
        (1, 5),
        (2, 4),
        (1, 2, 4, 5),
        (3,),
        (1, 3, 5),
        (2, 3, 4),
        (1, 2, 3, 4, 5),
    ]
    assert [s.connection_set for s in enumerate_integral(2, field_rationals())] == [(), (1,)]
    first_five = [s.connection_set for s in enumerate_integral(8, field_gaussian(), limit=5)]
    assert first_five == [(), (1, 5), (3, 7), (1, 3, 5, 7), (2,)]
    assert len(list(enumerate_integral(8, field_gaussian()))) == 32


def test_enumerate_budget():
    with pytest.raises(TooManyOrbits):
        list(enumerate_integral(6, field_rationals(), budget=4))
    # a limit waives the budget
    assert len(list(enumerate_integral(6, field_rationals(), limit=3, budget=4))) == 3


def test_count_integral():
    assert count_integral(6, field_rationals()) == 8
    assert count_integral(8, field_gaussian()) == 32
    for n in (2, 5, 9, 12):
        assert count_integral(n, field_cyclotomic(n)) == 1 << (n - 1)


def test_enumerate_agrees_with_decision_exhaustively():
    from circint import orbit_partition

    for field in PRESETS:
        for n in range(2, 13):
            part = orbit_partition(n, field)
            accepted = set()
            for mask in range(1 << (n - 1)):
                members = tuple(i + 1 for i in range(n - 1) if mask >> i & 1)
                verdict = is_integral(CirculantSpec(n, members), field)
                if verdict.integral:
                    accepted.add(members)
                    rebuilt = sorted(
                        x for i in verdict.block_indices for x in part.blocks[i].members)
                    assert tuple(rebuilt) == members
            enumerated = [s.connection_set for s in enumerate_integral(n, field)]
            assert len(enumerated) == len(set(enumerated))
            assert set(enumerated) == accepted
            assert len(enumerated) == count_integral(n, field)


def test_verdict_json_shape():
    spec = CirculantSpec.of(8, [1])
    doc = verdict_to_json(spec, field_gaussian(), is_integral(spec, field_gaussian()))
    assert list(doc.keys()) == ["n", "S", "field", "integral", "blocks", "violation"]
    assert doc["integral"] is False and doc["blocks"] is None
    assert doc["violation"] == {"block": 0, "missing": [5], "present": [1]}

    spec = CirculantSpec.of(8, [2, 6])
    doc = verdict_to_json(spec, field_gaussian(), is_integral(spec, field_gaussian()))
    assert doc["integral"] is True and doc["blocks"] == [2, 3] and doc["violation"] is None


@given(st.integers(2, 24), st.sampled_from(PRESETS), st.data())
@settings(max_examples=100, deadline=None)
def test_complement_of_integral_is_integral(n, field, data):
    members = data.draw(st.sets(st.integers(1, n - 1)))
    spec = CirculantSpec.of(n, members)
    if is_integral(spec, field).integral:
        rest = set(range(1, n)) - set(members)
        assert is_integral(CirculantSpec.of(n, rest), field).integral


@given(st.integers(2, 24), st.sampled_from(PRESETS), st.data())
@settings(max_examples=100, deadline=None)
def test_integral_over_rationals_stays_integral(n, field, data):
    members = data.draw(st.sets(st.integers(1, n - 1)))
    spec = CirculantSpec.of(n, members)
    if is_integral(spec, field_rationals()).integral:
        assert is_integral(spec, field).integral
