import pytest
from hypothesis import strategies as st

from midset import Body, Point, hull


@pytest.fixture
def t0():
    return Body.polygon([Point(0, 0), Point(4, 0), Point(0, 4)])


@pytest.fixture
def p5():
    return Body.polygon(
        [Point(0, 0), Point(3, 0), Point(4, 2), Point(2, 4), Point(0, 3)]
    )


@pytest.fixture
def unit_square():
    return Body.polygon([Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])


@pytest.fixture
def sym_hexagon():
    return hull(
        [Point(2, 0), Point(1, 2), Point(-1, 2), Point(-2, 0), Point(-1, -2), Point(1, -2)]
    )


coords = st.one_of(
    st.integers(-30, 30),
    st.fractions(min_value=-30, max_value=30, max_denominator=6),
)
points = st.builds(Point, coords, coords)
point_lists = st.lists(points, min_size=1, max_size=10)
bodies = point_lists.map(hull)
polygons = (
    st.lists(points, min_size=3, max_size=10)
    .map(hull)
    .filter(lambda b: b.kind == "polygon")
)
