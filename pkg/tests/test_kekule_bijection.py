from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from zz_strips.catalog import enumerate_shape_sequences
from zz_strips.dib_poset import Dib, build_poset, induced_subposets, natural_labeling
from zz_strips.errors import KekuleAssignmentError, OrderMapError
from zz_strips.extension_engine import descent_stats, linear_extensions
from zz_strips.kekule_bijection import (ClarCoverRecord, KekuleAssignment, OrderMap, check_assignment,
                                        clar_attribution, enumerate_kekule, generate_clar_covers,
                                        iter_strict_maps, kekule_from_map, map_from_kekule)
from zz_strips.order_polynomials import binom, zz_polynomial
from zz_strips.strip_geometry import interface_profile, make_strip, minimal_length


def s(k, j):
    return Dib(k, j)


def test_empty_map_gives_leftmost_bonds(m22):
    ka = kekule_from_map(m22, OrderMap(()))
    assert ka.as_dict() == {s(1, 1): 1, s(2, 1): 1}


def test_full_map(m22):
    ka = kekule_from_map(m22, OrderMap.from_mapping({s(1, 1): 1, s(2, 1): 2}))
    assert ka.as_dict() == {s(1, 1): 2, s(2, 1): 3}


def test_map_on_upper_element_only(m22):
    ka = kekule_from_map(m22, OrderMap.from_mapping({s(2, 1): 1}))
    assert ka.as_dict() == {s(1, 1): 1, s(2, 1): 2}


def test_lifted_value_follows_predecessors(o32):
    poset = build_poset(o32)
    for om, ka in enumerate_kekule(o32, poset):
        mu = om.as_dict()
        for dib in poset.elements:
            if dib in mu:
                continue
            lifted = max((mu[a] for a in poset.predecessors(dib) if a in mu), default=0)
            assert ka.position(dib) == lifted + dib.j


def test_order_map_must_be_strict(m22):
    with pytest.raises(OrderMapError):
        kekule_from_map(m22, OrderMap.from_mapping({s(1, 1): 2, s(2, 1): 2}))
    with pytest.raises(OrderMapError):
        kekule_from_map(m22, OrderMap.from_mapping({s(1, 1): 3}))
    with pytest.raises(OrderMapError):
        kekule_from_map(m22, OrderMap.from_mapping({s(5, 1): 1}))


def test_map_from_leftmost_structure(m22):
    om = map_from_kekule(m22, KekuleAssignment.from_mapping({s(1, 1): 1, s(2, 1): 1}))
    assert om.support == ()


def test_equal_values_drop_the_upper_dib(m22):
    om = map_from_kekule(m22, KekuleAssignment.from_mapping({s(1, 1): 2, s(2, 1): 2}))
    assert om.as_dict() == {s(1, 1): 1}


def test_assignment_must_alternate(m22):
    # e_{2,1} lies left of e_{1,2}, so the lower interface would start the R fragment
    with pytest.raises(KekuleAssignmentError):
        map_from_kekule(m22, KekuleAssignment.from_mapping({s(1, 1): 2, s(2, 1): 1}))


def test_assignment_bounds(m22):
    with pytest.raises(KekuleAssignmentError):
        check_assignment(m22, build_poset(m22), KekuleAssignment.from_mapping({s(1, 1): 4, s(2, 1): 4}))
    with pytest.raises(KekuleAssignmentError):
        check_assignment(m22, build_poset(m22), KekuleAssignment.from_mapping({s(1, 1): 1}))


def test_positions_increase_within_interface(o32):
    poset = build_poset(o32)
    ka = kekule_from_map(o32, OrderMap(()), poset)
    pos = ka.as_dict()
    pos[s(2, 2)] = pos[s(2, 1)]
    with pytest.raises(KekuleAssignmentError):
        check_assignment(o32, poset, KekuleAssignment.from_mapping(pos))


def test_iter_strict_maps_order():
    poset = build_poset(make_strip("WRN", 3))
    maps = [tuple(v for _, v in om.values) for om in iter_strict_maps(poset, 3)]
    assert maps == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("shapes,n,count", [("WRN", 2, 6), ("WN", 3, 4), ("WN", 1, 2)])
def test_kekule_counts(shapes, n, count):
    assert sum(1 for _ in enumerate_kekule(make_strip(shapes, n))) == count


def test_kekule_count_of_example(o32):
    assert sum(1 for _ in enumerate_kekule(o32)) == zz_polynomial(o32).kekule_count


def test_enumeration_covers_all_structures(catalog_strip):
    structures = list(enumerate_kekule(catalog_strip))
    assert len(structures) == zz_polynomial(catalog_strip).kekule_count
    assert len({ka for _, ka in structures}) == len(structures)


def test_round_trips(catalog_strip):
    poset = build_poset(catalog_strip)
    n = catalog_strip.n
    for om, ka in enumerate_kekule(catalog_strip, poset):
        assert map_from_kekule(catalog_strip, ka, poset) == om
        assert kekule_from_map(catalog_strip, map_from_kekule(catalog_strip, ka, poset), poset) == ka
        mu = {d: p - d.j for d, p in ka.positions}
        assert all(0 <= v <= n for v in mu.values())
        assert all(mu[a] <= mu[b] for a, b in poset.covers)


def test_clar_covers_of_m22(m22):
    records = list(generate_clar_covers(m22))
    assert len(records) == 13
    assert Counter(r.order for r in records) == {0: 6, 1: 6, 2: 1}


def test_clar_covers_of_benzene():
    records = list(generate_clar_covers(make_strip("WN", 1)))
    assert len(records) == 3


def test_order_zero_covers_are_kekule_structures(catalog_strip):
    records = [r for r in generate_clar_covers(catalog_strip) if r.order == 0]
    assert [r.base for r in records] == [ka for _, ka in enumerate_kekule(catalog_strip)]


@pytest.mark.slow
def test_clar_cover_stream_matches_zz(catalog_strip):
    zz = zz_polynomial(catalog_strip)
    records = list(generate_clar_covers(catalog_strip))
    assert len(records) == zz.clar_cover_count
    histogram = Counter(r.order for r in records)
    assert tuple(histogram.get(k, 0) for k in range(len(zz.coeffs))) == zz.coeffs


@pytest.mark.slow
def test_covers_per_linear_extension(catalog_strip):
    poset = build_poset(catalog_strip)
    labeling = natural_labeling(poset)
    n = catalog_strip.n
    counts = Counter((r.order_map.support, r.word) for r in generate_clar_covers(catalog_strip, poset, labeling))
    for sub in induced_subposets(poset):
        local = labeling.restrict(sub.elements)
        for word in linear_extensions(sub, local):
            _, des = descent_stats(word)
            expected = 2 ** sub.size * binom(n + des, sub.size)
            assert counts.get((sub.elements, word), 0) == expected


def test_selection_is_increasing(o32):
    poset = build_poset(o32)
    labeling = natural_labeling(poset)
    for om, _ in enumerate_kekule(o32, poset):
        word, selection = clar_attribution(om, labeling)
        _, des = descent_stats(word)
        assert list(selection) == sorted(set(selection))
        assert all(1 <= g <= o32.n + des for g in selection)


def test_attributed_word_is_a_linear_extension(o32):
    poset = build_poset(o32)
    labeling = natural_labeling(poset)
    words = {}
    for om, _ in enumerate_kekule(o32, poset):
        support = om.support
        if support not in words:
            words[support] = set(linear_extensions(poset.induced(support), labeling.restrict(support)))
        word, _ = clar_attribution(om, labeling)
        assert word in words[support]


def test_record_json(m22):
    record = ClarCoverRecord(
        base=KekuleAssignment.from_mapping({s(1, 1): 2, s(2, 1): 3}),
        order_map=OrderMap.from_mapping({s(1, 1): 1, s(2, 1): 2}),
        aromatic=(s(2, 1),), word=(1, 2), selection=(1, 2))
    assert record.to_dict() == {
        "A": [{"k": 1, "j": 1}, {"k": 2, "j": 1}], "mu": [1, 2], "pos": [[1, 2], [2, 3]],
        "aromatic": [{"k": 2, "j": 1}], "word": [1, 2], "selection": [1, 2],
    }
    assert record.order == 1


def test_assignment_json_round_trip(o32):
    for _, ka in enumerate_kekule(o32):
        assert KekuleAssignment.from_dict(ka.to_dict()) == ka


@given(st.sampled_from(enumerate_shape_sequences(4)), st.integers(min_value=2, max_value=4), st.data())
@settings(max_examples=60, deadline=None)
def test_random_maps_round_trip(shapes, n, data):
    n = max(n, minimal_length(shapes))
    spec = make_strip(shapes, n)
    poset = build_poset(spec)
    subs = list(induced_subposets(poset))
    sub = data.draw(st.sampled_from(subs))
    maps = list(iter_strict_maps(sub, n))
    if not maps:
        return
    om = data.draw(st.sampled_from(maps))
    ka = kekule_from_map(spec, om, poset)
    assert map_from_kekule(spec, ka, poset) == om
    profile = interface_profile(spec)
    assert all(1 <= p <= profile.size(d.k) for d, p in ka.positions)
