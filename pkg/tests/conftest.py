import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from solenoids import BondingSequence  # noqa: E402

degrees = st.integers(min_value=2, max_value=30)


@st.composite
def sequences(draw, max_len=6):
    prefix = draw(st.lists(degrees, max_size=max_len))
    period = draw(st.lists(degrees, min_size=1, max_size=max_len))
    return BondingSequence(tuple(prefix), tuple(period))
