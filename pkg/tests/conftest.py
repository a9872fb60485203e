import hypothesis.strategies as st
from hypothesis import settings

from thickribbons import OneDotRibbon, ThickRibbon

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


compositions = st.lists(st.integers(1, 6), min_size=1, max_size=5).map(tuple)


@st.composite
def one_dot_ribbons(draw, ms=(2, 3), max_extra=3):
    m = draw(st.sampled_from(ms))
    head = draw(st.lists(st.integers(1, m + 2), max_size=max_extra))
    tail = draw(st.lists(st.integers(1, m + 2), max_size=max_extra))
    alpha = tuple(head) + (draw(st.integers(m, m + 3)),)
    beta = (draw(st.integers(m, m + 3)),) + tuple(tail)
    return OneDotRibbon(alpha, beta, m)


@st.composite
def thick_ribbons(draw, ms=(2, 3), max_segments=4):
    m = draw(st.sampled_from(ms))
    n_seg = draw(st.integers(1, max_segments))
    segments = []
    for i in range(n_seg):
        length = draw(st.integers(1, 3))
        parts = []
        for j in range(length):
            pin_first = j == 0 and i > 0
            pin_last = j == length - 1 and i < n_seg - 1
            if pin_first and pin_last:
                low = 2 * m - 1  # single row between two box-dots
            elif pin_first or pin_last:
                low = m
            else:
                low = 1
            parts.append(draw(st.integers(low, 2 * m + 2)))
        segments.append(tuple(parts))
    return ThickRibbon(tuple(segments), m)


@st.composite
def glue_data(draw):
    """(p, q, t, m) triples valid for the composition operator."""
    m = draw(st.sampled_from((2, 3)))
    p = draw(st.integers(1, 3))
    q = draw(st.integers(1, 3))
    length = draw(st.integers(1, 4))
    if length == 1:
        t = (draw(st.integers(m, m + 3)),)
    else:
        ends = st.one_of(st.just(m - 1), st.integers(m, m + 2))
        middle = draw(
            st.lists(st.integers(1, m + 2), min_size=length - 2, max_size=length - 2)
        )
        t = (draw(ends), *middle, draw(ends))
    return p, q, t, m
