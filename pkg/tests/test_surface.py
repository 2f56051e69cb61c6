import pytest
from hypothesis import given

from sqpbands import (
    BandWord,
    euler_characteristic,
    first_betti,
    genus_profile,
    is_unlink_surface,
    parse_band_word,
    surface_graph,
    trace_boundary,
    underlying_permutation,
)

from wordgen import ALPHA_TEXT, band_words


@pytest.fixture
def alpha():
    return parse_band_word(ALPHA_TEXT, 8)


def test_alpha_graph_is_connected_cycle(alpha):
    graph = surface_graph(alpha)
    assert graph.vertices == 8
    assert len(graph.edges) == 8
    assert graph.component_count == 1
    # the retraction graph of an annulus word is a single cycle
    assert set(graph.non_bridge_edges()) == set(range(1, 9))


def test_empty_word_graph():
    graph = surface_graph(BandWord(3, ()))
    assert graph.component_count == 3
    assert graph.is_forest()


def test_trefoil_graph_parallel_edges():
    graph = surface_graph(BandWord(2, ((1, 2),) * 3))
    assert graph.vertices == 2 and len(graph.edges) == 3
    assert graph.component_count == 1
    assert not graph.is_forest()


def test_euler_characteristic_examples(alpha):
    assert euler_characteristic(alpha) == 0
    assert euler_characteristic(BandWord(1, ())) == 1
    assert euler_characteristic(BandWord(2, ((1, 2),) * 3)) == -1


def test_first_betti_examples(alpha):
    assert first_betti(alpha) == 1
    assert first_betti(BandWord(4, ((1, 2), (3, 4)))) == 0
    assert first_betti(BandWord(2, ((1, 2),) * 3)) == 2


def test_boundary_trace_hopf():
    trace = trace_boundary(BandWord(2, ((1, 2), (1, 2))))
    assert trace.count == 2
    assert trace.sides_split(1) and trace.sides_split(2)


def test_boundary_trace_trefoil():
    assert trace_boundary(BandWord(2, ((1, 2),) * 3)).count == 1


def test_boundary_trace_alpha(alpha):
    assert trace_boundary(alpha).count == 2


def test_genus_profile_examples(alpha):
    assert genus_profile(alpha) == [(0, 0, 2)]
    assert genus_profile(BandWord(2, ((1, 2),) * 3)) == [(0, 1, 1)]
    assert genus_profile(BandWord(2, ())) == [(0, 0, 1), (1, 0, 1)]


def test_is_unlink_surface_examples():
    assert is_unlink_surface(BandWord(3, ()))
    assert is_unlink_surface(BandWord(2, ((1, 2),)))
    assert not is_unlink_surface(BandWord(2, ((1, 2), (1, 2))))


@given(band_words())
def test_boundary_count_matches_permutation(word):
    assert trace_boundary(word).count == underlying_permutation(word).cycle_count()


@given(band_words())
def test_chi_plus_betti_is_component_count(word):
    graph = surface_graph(word)
    assert euler_characteristic(word) + first_betti(word) == graph.component_count


@given(band_words())
def test_genus_sum_identity(word):
    profile = genus_profile(word)
    assert all(g >= 0 for _, g, _ in profile)
    assert sum(2 - 2 * g - b for _, g, b in profile) == euler_characteristic(word)


@given(band_words())
def test_unlink_iff_betti_zero(word):
    assert is_unlink_surface(word) == (first_betti(word) == 0)


@given(band_words())
def test_circle_cycle_map_is_bijection(word):
    trace = trace_boundary(word)
    assert sorted(trace.circle_of_cycle) == list(range(trace.count))
