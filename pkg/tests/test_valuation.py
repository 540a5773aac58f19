import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nsw2v.generator import Lcg64
from nsw2v.instance import Allocation
from nsw2v.valuation import (
    NswProduct,
    bundle_values,
    factorization_check,
    format_half,
    nsw_compare,
    nsw_display,
)

from conftest import make_instance


def test_bundle_values_split(two_heavy_two_light):
    alloc = Allocation(owners=(0, 1, 0, 1))
    assert bundle_values(two_heavy_two_light, alloc) == (5, 5)


def test_bundle_values_lopsided(two_heavy_three_light):
    alloc = Allocation(owners=(0, 0, 1, 1, 1))
    assert bundle_values(two_heavy_three_light, alloc) == (6, 6)


def test_bundle_values_empty():
    inst = make_instance(["", ""])
    assert bundle_values(inst, Allocation(owners=())) == (0, 0)


def test_nsw_compare():
    assert nsw_compare((6, 6), (5, 7)) == 1  # 36 beats 35
    assert nsw_compare((0, 4), (0, 11)) == 0  # zero annihilates both
    assert nsw_compare((5, 5), (5, 5)) == 0
    with pytest.raises(ValueError):
        nsw_compare((5, 5), (5, 5, 5))


def test_nsw_product():
    assert NswProduct.of((6, 6)) == NswProduct(product=36, n=2)


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(0, 12), min_size=n, max_size=n)] * 3)
))
@settings(max_examples=200, deadline=None, derandomize=True)
def test_nsw_compare_transitive(triple):
    p, q, r = (tuple(sorted(x)) for x in triple)
    if nsw_compare(p, q) <= 0 and nsw_compare(q, r) <= 0:
        assert nsw_compare(p, r) <= 0


def test_nsw_display():
    assert nsw_display((6, 6)) == "3.000000"
    assert nsw_display((7, 5)) == "2.958040"  # sqrt(8.75)
    assert nsw_display((0, 6)) == "0.000000"


def test_format_half():
    assert format_half(6) == "3"
    assert format_half(5) == "2.5"
    assert format_half(0) == "0"


def test_factorization_check_ok():
    assert factorization_check(5, (6, 6)) is None
    assert factorization_check(5, (5, 7)) is None


def test_factorization_check_errors():
    with pytest.raises(ValueError):
        factorization_check(5, (5, 8))
    with pytest.raises(ValueError):
        factorization_check(0, (0, 1))


def test_more_mid_values_beat_fewer():
    # equal size and equal sum: the profile with strictly more mid values
    # has a strictly larger product
    for mv in range(1, 7):
        for count in range(1, 7):
            by_mid = {}
            for n_low in range(count + 1):
                for n_mid in range(count + 1 - n_low):
                    n_high = count - n_low - n_mid
                    profile = (
                        (mv,) * n_low + (mv + 1,) * n_mid + (mv + 2,) * n_high
                    )
                    by_mid.setdefault((sum(profile)), []).append((n_mid, profile))
            for versions in by_mid.values():
                versions.sort()
                for (m_a, p_a), (m_b, p_b) in zip(versions, versions[1:]):
                    if m_a < m_b:
                        assert nsw_compare(p_b, p_a) == 1


def test_bundle_sum_matches_owner_values():
    rng = Lcg64(7)
    for _ in range(50):
        n, m = 1 + rng.next_u64() % 4, rng.next_u64() % 7
        rows = tuple(
            "".join("H" if rng.next_u64() % 2 else "L" for _ in range(m))
            for _ in range(n)
        )
        inst = make_instance(rows, heavy_value=5)
        owners = tuple(
            (inst.eligible[g][rng.next_u64() % len(inst.eligible[g])]
             if inst.heavy[g] else rng.next_u64() % n)
            for g in range(m)
        )
        profile = bundle_values(inst, Allocation(owners=owners))
        assert sum(profile) == sum(inst.good_value(owners[g], g) for g in range(m))
