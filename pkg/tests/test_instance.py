import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nsw2v.errors import FormatError
from nsw2v.instance import (
    Allocation,
    Instance,
    parse_allocation,
    parse_instance,
    serialize_allocation,
    serialize_instance,
    validate_allocation,
)

from conftest import make_instance

P1_TEXT = "nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nHHLL\n"


def test_parse_two_heavy_two_light():
    inst = parse_instance(P1_TEXT)
    assert (inst.n, inst.m, inst.heavy_value) == (2, 4, 3)
    assert inst.heavy == (True, True, False, False)
    assert inst.eligible[0] == (0, 1)
    assert inst.eligible[2] == ()


def test_parse_rejects_integer_s():
    with pytest.raises(FormatError) as err:
        parse_instance("nsw2v v1\ns 4/2\nagents 2\ngoods 0\n\n\n")
    assert err.value.code == "s_integer"


def test_parse_empty_goods_single_agent():
    inst = parse_instance("nsw2v v1\ns 5/2\nagents 1\ngoods 0\n\n")
    assert (inst.n, inst.m, inst.heavy_value) == (1, 0, 5)


@pytest.mark.parametrize(
    "text,code",
    [
        ("wrong v1\ns 3/2\nagents 1\ngoods 0\n\n", "magic"),
        ("nsw2v v1\ns 3/4\nagents 1\ngoods 0\n\n", "s_format"),
        ("nsw2v v1\ns 1/2\nagents 1\ngoods 0\n\n", "s_range"),
        ("nsw2v v1\ns 3/2\nagents 0\ngoods 0\n", "agents_range"),
        ("nsw2v v1\ns 3/2\nagents 2\ngoods 1\nH\n", "row_count"),
        ("nsw2v v1\ns 3/2\nagents 1\ngoods 2\nHLL\n", "row_length"),
        ("nsw2v v1\ns 3/2\nagents 1\ngoods 2\nHX\n", "label_char"),
    ],
)
def test_parse_error_codes(text, code):
    with pytest.raises(FormatError) as err:
        parse_instance(text)
    assert err.value.code == code


def test_good_value():
    inst = make_instance(["HL"])
    assert inst.good_value(0, 0) == 3
    assert inst.good_value(0, 1) == 2
    assert make_instance(["H"], heavy_value=5).good_value(0, 0) == 5
    with pytest.raises(IndexError):
        inst.good_value(0, 2)


def test_validate_allocation(two_heavy_two_light):
    ok = Allocation(owners=(0, 1, 0, 1))
    assert validate_allocation(two_heavy_two_light, ok) is None
    inst = make_instance(["HL", "LL"])
    bad = Allocation(owners=(1, 0))
    report = validate_allocation(inst, bad)
    assert report is not None and "good 0" in report


def test_validate_empty_instance():
    inst = make_instance(["", ""])
    assert validate_allocation(inst, Allocation(owners=())) is None


def test_allocation_round_trip(two_heavy_two_light):
    alloc = Allocation(owners=(0, 1, 1, 0))
    text = serialize_allocation(alloc)
    assert parse_allocation(text, two_heavy_two_light) == alloc


@pytest.mark.parametrize(
    "text,code",
    [
        ("allocation v1\n0 1\n", "alloc_length"),
        ("wrong v1\n0 1 0 1\n", "alloc_magic"),
        ("allocation v1\n0 1 x 1\n", "alloc_token"),
        ("allocation v1\n0 1 5 1\n", "alloc_range"),
        ("allocation v1\n", "alloc_lines"),
    ],
)
def test_allocation_errors(text, code, two_heavy_two_light):
    with pytest.raises(FormatError) as err:
        parse_allocation(text, two_heavy_two_light)
    assert err.value.code == code


@st.composite
def instances(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(0, 6))
    hv = draw(st.sampled_from([3, 5, 9]))
    rows = tuple(
        "".join(draw(st.sampled_from("HL")) for _ in range(m)) for _ in range(n)
    )
    return Instance(n=n, m=m, heavy_value=hv, labels=rows)


@given(instances())
@settings(max_examples=150, deadline=None, derandomize=True)
def test_serialize_parse_round_trip(inst):
    assert parse_instance(serialize_instance(inst)) == inst


@given(instances())
@settings(max_examples=100, deadline=None, derandomize=True)
def test_heavy_classification_is_columnwise(inst):
    for g in range(inst.m):
        column = [row[g] for row in inst.labels]
        assert inst.heavy[g] == ("H" in column)
        # heavy goods always have someone to take them
        if inst.heavy[g]:
            assert inst.eligible[g]
        else:
            assert not inst.eligible[g]
