"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from schurcalc.partitions import Partition
from schurcalc.schur_calculus import GradedObject


@st.composite
def partitions(draw, max_size: int = 10, min_size: int = 0):
    n = draw(st.integers(min_size, max_size))
    parts = []
    left, cap = n, n
    while left:
        k = draw(st.integers(1, min(left, cap)))
        parts.append(k)
        left -= k
        cap = k
    return Partition(parts)


def graded(degrees=range(-2, 3), max_mult: int = 2, max_total: int = 4):
    return st.dictionaries(st.sampled_from(list(degrees)), st.integers(0, max_mult), max_size=5).filter(
        lambda d: sum(d.values()) <= max_total
    ).map(GradedObject)
