from dataclasses import replace

from nsw2v.generator import generate_instance
from nsw2v.greedy import greedy_fill, post_greedy_checks
from nsw2v.instance import Allocation
from nsw2v.lexmin import lexmin

from conftest import make_instance


def test_greedy_two_lights(two_heavy_two_light):
    result = greedy_fill(two_heavy_two_light, lexmin(two_heavy_two_light))
    assert sorted(result.values) == [5, 5]
    assert result.min_value == 5
    assert result.small_agents == (0, 1)


def test_greedy_three_lights(two_heavy_three_light):
    result = greedy_fill(two_heavy_three_light, lexmin(two_heavy_three_light))
    assert sorted(result.values, reverse=True) == [7, 5]
    assert result.min_value == 5
    assert result.heavy_cutoff == 3  # three heavies are the first to top 7 halves
    assert result.small_agents == (0, 1)
    assert post_greedy_checks(two_heavy_three_light, result) is None


def test_greedy_no_lights():
    inst = make_instance(["H", "L"])
    result = greedy_fill(inst, lexmin(inst))
    assert result.values == (3, 0)
    assert result.min_value == 0
    assert result.small_agents == (1,)


def test_greedy_empty_instance():
    inst = make_instance(["", ""])
    result = greedy_fill(inst, {})
    assert result.values == (0, 0)
    assert post_greedy_checks(inst, result) is None


def test_post_greedy_flags_light_in_large_bundle():
    inst = make_instance(["HHHHL", "LLLLL"])  # four heavies locked on agent 0
    result = greedy_fill(inst, lexmin(inst))
    assert post_greedy_checks(inst, result) is None
    owners = list(result.alloc.owners)
    owners[4] = 0  # light good into the large bundle
    doctored = replace(
        result,
        alloc=Allocation(owners=tuple(owners)),
        values=(14, 0),
    )
    assert post_greedy_checks(inst, doctored) is not None


def _family(count):
    for idx in range(count):
        yield generate_instance(
            agents=1 + idx % 5,
            goods=idx % 9,
            heavy_value=3 if idx % 2 == 0 else 5,
            heavy_prob=["0.25", "0.5", "0.75"][idx % 3],
            seed=900 + idx,
        )


def test_greedy_invariants_on_random_instances():
    for inst in _family(150):
        result = greedy_fill(inst, lexmin(inst))
        assert post_greedy_checks(inst, result) is None
        placed = sum(
            1 for g in inst.light_goods if result.alloc.owners[g] is not None
        )
        assert placed == len(inst.light_goods)
        assert sum(result.lights_added) == len(inst.light_goods)
        small_values = [result.values[a] for a in result.small_agents]
        assert max(small_values) - min(small_values) <= 2
        assert min(result.values) == result.min_value
        # greedy only ever stacks onto a current minimum, so every light
        # landed while its bundle was at most the final minimum
        for a in result.small_agents:
            assert result.values[a] <= result.min_value + 2
