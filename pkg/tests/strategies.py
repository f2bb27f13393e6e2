from hypothesis import strategies as st

from scx.profile import AlternativeSet, Profile


@st.composite
def profiles(draw, m_values=(3, 4, 5), max_n=7):
    m = draw(st.sampled_from(m_values))
    n = draw(st.integers(2, max_n))
    alts = AlternativeSet.default(m)
    cols = [draw(st.permutations(alts.names)) for _ in range(n)]
    return Profile.from_columns(cols, alts)
