import pytest
from hypothesis import strategies as st

from zz_strips.catalog import enumerate_shape_sequences
from zz_strips.config import load_settings
from zz_strips.dib_poset import Dib, DibPoset
from zz_strips.strip_geometry import make_strip, minimal_length

# Every Kekuléan family with at most four tiers, mirror images included
CATALOG_SHAPES = enumerate_shape_sequences(4, dedup=False)

CATALOG_STRIPS = [make_strip(shapes, n)
                  for shapes in CATALOG_SHAPES
                  for n in range(minimal_length(shapes), 5)]


@pytest.fixture(params=CATALOG_STRIPS, ids=str)
def catalog_strip(request):
    return request.param


@pytest.fixture(params=CATALOG_SHAPES)
def catalog_shapes(request):
    return request.param


@pytest.fixture
def settings():
    return load_settings()


@pytest.fixture
def o32():
    """Four-tier strip WWRNN of length 3 (interface orders 1, 2, 2, 1)."""
    return make_strip("WWRNN", 3)


@pytest.fixture
def m22():
    return make_strip("WRN", 2)


@st.composite
def posets(draw, max_size=6):
    """Random posets on s_{1,1}..s_{p,1}; relations only go from lower to higher k."""
    p = draw(st.integers(min_value=0, max_value=max_size))
    elements = [Dib(k, 1) for k in range(1, p + 1)]
    pairs = [(a, b) for i, a in enumerate(elements) for b in elements[i + 1:]]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return DibPoset(elements, [pair for pair, flag in zip(pairs, keep) if flag])
