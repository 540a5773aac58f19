import pytest

from nsw2v.instance import Instance


def make_instance(rows, heavy_value=3) -> Instance:
    rows = tuple(rows)
    n = len(rows)
    m = len(rows[0]) if rows else 0
    return Instance(n=n, m=m, heavy_value=heavy_value, labels=rows)


@pytest.fixture
def two_heavy_two_light() -> Instance:
    """Two identical agents, two heavy and two light goods, s = 3/2."""
    return make_instance(["HHLL", "HHLL"])


@pytest.fixture
def two_heavy_three_light() -> Instance:
    """Two identical agents, two heavy and three light goods, s = 3/2."""
    return make_instance(["HHLLL", "HHLLL"])
