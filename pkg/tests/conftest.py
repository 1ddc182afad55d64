from fractions import Fraction

from hypothesis import settings, strategies as st

from terravis.terrain import Terrain

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def terrains(draw, min_n=2, max_n=25, bound=50):
    """Integer or small-denominator rational terrains; strictly increasing x."""
    n = draw(st.integers(min_n, max_n))
    gaps = draw(st.lists(st.integers(1, 4), min_size=n - 1, max_size=n - 1))
    ys = draw(st.lists(st.integers(-bound, bound), min_size=n, max_size=n))
    den = draw(st.sampled_from([1, 1, 2, 3]))
    xs, x = [0], 0
    for gap in gaps:
        x += gap
        xs.append(x)
    return Terrain.from_xy([Fraction(v, den) for v in xs], ys)


def ordered_edges(g):
    return [tuple(e) for e in g.edges()]
