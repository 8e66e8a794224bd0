from __future__ import annotations

from hypothesis import settings, strategies as st

from trigraphs.core import _make, pair_count

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def trigraphs(draw, min_n: int = 0, max_n: int = 6, values=(-1, 0, 1)):
    n = draw(st.integers(min_n, max_n))
    theta = draw(st.lists(st.sampled_from(values), min_size=pair_count(n), max_size=pair_count(n)))
    return _make(n, theta)


def graphs(min_n: int = 0, max_n: int = 7):
    return trigraphs(min_n, max_n, values=(-1, 1))
