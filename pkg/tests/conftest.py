import hypothesis.strategies as st
from hypothesis import settings

settings.register_profile("desk", max_examples=60, deadline=None)
settings.load_profile("desk")


@st.composite
def partitions(draw, max_size=12):
    """Random partition of size at most max_size."""
    n = draw(st.integers(min_value=0, max_value=max_size))
    parts = []
    remaining, bound = n, n
    while remaining:
        p = draw(st.integers(min_value=1, max_value=min(bound, remaining)))
        parts.append(p)
        bound, remaining = p, remaining - p
    return tuple(parts)


levels = st.integers(min_value=2, max_value=5)
