"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from linkinv.families import braid_closure


@st.composite
def braid_words(draw, max_strands=4, max_len=12):
    n = draw(st.integers(2, max_strands))
    gens = st.integers(1, n - 1).flatmap(lambda k: st.sampled_from([k, -k]))
    return draw(st.lists(gens, min_size=1, max_size=max_len)), n


@st.composite
def diagrams(draw, max_strands=4, max_len=12):
    word, n = draw(braid_words(max_strands, max_len))
    return braid_closure(word, n)
