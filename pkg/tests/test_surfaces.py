import pytest
from hypothesis import given, strategies as st

from sutkit.errors import InconsistentIntersectionData, InvalidSurface
from sutkit.surfaces import Component, SurfaceSpec, beta_norm, euler, exceptional_predicate, surface, thurston_norm

components = st.builds(Component, st.integers(0, 4), st.integers(0, 4), st.integers(0, 6))
specs = st.lists(components, max_size=4).map(lambda cs: SurfaceSpec(tuple(cs)))


@pytest.mark.parametrize(
    "comps, chi, x, xb",
    [
        ([(0, 0, 0)], 2, 0, 0),
        ([(0, 1, 0)], 1, 0, 0),
        ([(0, 1, 1)], 1, 0, 0),
        ([(0, 1, 2)], 1, 0, 1),
        ([(0, 2, 0)], 0, 0, 0),
        ([(1, 0, 0)], 0, 0, 0),
        ([(1, 0, 3)], 0, 0, 3),
        ([(2, 0, 0)], -2, 2, 2),
        ([(2, 1, 0), (0, 0, 4)], -1, 3, 5),
    ],
)
def test_norm_table(comps, chi, x, xb):
    s = surface(*comps)
    assert (euler(s), thurston_norm(s), beta_norm(s)) == (chi, x, xb)


@given(specs)
def test_norms_dominate(s):
    assert 0 <= thurston_norm(s) <= beta_norm(s)
    assert thurston_norm(s) >= -euler(s)


@given(specs, specs)
def test_norms_additive(s, t):
    for f in (euler, thurston_norm, beta_norm):
        assert f(s + t) == f(s) + f(t)


@given(specs)
def test_record_round_trip(s):
    assert SurfaceSpec.from_records(s.to_records()) == s


@pytest.mark.parametrize("bad", [dict(genus=-1), dict(boundary=1.5), dict(punctures=True)])
def test_bad_components(bad):
    with pytest.raises(InvalidSurface):
        Component(**bad)


def test_puncture_signs():
    assert Component(0, 0, 2, (1, 1)).coherent is True
    assert Component(0, 0, 2, (1, -1)).coherent is False
    assert Component(0, 0, 2).coherent is None
    with pytest.raises(InvalidSurface):
        Component(0, 0, 2, (1,))
    with pytest.raises(InvalidSurface):
        Component(0, 0, 1, (0,))
    with pytest.raises(InvalidSurface):
        SurfaceSpec.from_records([{"g": 1, "orientable": False}])


def test_exceptional_predicate():
    assert exceptional_predicate(3, 1)
    assert not exceptional_predicate(2, 2)
    assert not exceptional_predicate(0, 0)
    for bad in [(1, 2), (3, 0), (-1, 1)]:
        with pytest.raises(InconsistentIntersectionData):
            exceptional_predicate(*bad)


@given(st.integers(0, 20), st.integers(0, 20))
def test_exceptional_is_inequality(wrap, wind):
    if wind > wrap or (wrap - wind) % 2:
        with pytest.raises(InconsistentIntersectionData):
            exceptional_predicate(wrap, wind)
    else:
        assert exceptional_predicate(wrap, wind) == (wrap != wind)
