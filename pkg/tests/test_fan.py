from fractions import Fraction

import pytest

from multifan.fan import (
    certify_fan,
    classify_ridge,
    condition_one,
    facet_rank,
    fan_statistics,
    format_stats_table,
    ratio_str,
)
from multifan.rays import RayAssignment, build_rays
from multifan.subword import bitset_of, greedy_facet
from multifan.words import Word

from conftest import get_index


def test_ratio_str():
    assert ratio_str(0, 252) == "0"
    assert ratio_str(11, 252) == "4.37"
    assert ratio_str(282, 2376) == "11.87"
    assert ratio_str(6026814, 29695328) == "20.30"


def test_facet_rank_pattern_n1():
    ra = build_rays("pattern", 1)
    assert facet_rank(ra, bitset_of([1, 2])) == 2
    assert facet_rank(ra, bitset_of([2, 3])) == 2


def test_classify_ridge_pattern_n1():
    ra = build_rays("pattern", 1)
    idx = get_index(2, 1)
    for ia, ib, _ in idx.dual_edges:
        rep = classify_ridge(ra, idx.facets[ia], idx.facets[ib])
        assert rep.status == "good"
        # normalised dependence has positive weight on both exchanged rays
        assert rep.dependence[-1] > 0
    # symmetry in the two facets
    for ia, ib, _ in idx.dual_edges:
        a = classify_ridge(ra, idx.facets[ia], idx.facets[ib])
        b = classify_ridge(ra, idx.facets[ib], idx.facets[ia])
        assert a.status == b.status


def test_classify_ridge_rejects_non_adjacent():
    ra = build_rays("pattern", 1)
    with pytest.raises(ValueError):
        classify_ridge(ra, bitset_of([1, 2]), bitset_of([1, 2]))


def test_naive_n3_degeneracies():
    ra = build_rays("naive", 3)
    idx = get_index(2, 3)
    stats = fan_statistics(ra, idx)
    assert stats.degenerate_ridges == 11
    assert stats.degenerate_cones == 2
    assert stats.bad_ridges == 0
    assert stats.min_dimension == 5
    # classify_ridge agrees with the bulk counts
    per_ridge = [
        classify_ridge(ra, idx.facets[ia], idx.facets[ib]).status
        for ia, ib, _ in idx.dual_edges
    ]
    assert per_ridge.count("degenerate") == 11
    assert per_ridge.count("bad") == 0
    # 2 deficient cones of 84, sharing one ridge: 6 + 6 - 1 = 11
    ranks = [facet_rank(ra, f) for f in idx.facets]
    assert sum(1 for r in ranks if r < 6) == 2


def test_naive_n4_column():
    stats = fan_statistics(build_rays("naive", 4), get_index(2, 4))
    assert (stats.bad_ridges, stats.degenerate_ridges, stats.degenerate_cones,
            stats.min_dimension) == (0, 282, 48, 6)


def test_condition_one_orthants():
    # base = positive quadrant, other = negative quadrant: disjoint
    word = Word(1, (1, 1, 1, 1))
    rays = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
            (Fraction(-1), Fraction(0)), (Fraction(0), Fraction(-1)))
    ra = RayAssignment(word, rays, 2)
    facets = [bitset_of([1, 2]), bitset_of([3, 4])]
    ok, witness = condition_one(ra, facets, bitset_of([1, 2]))
    assert ok and witness is None


def test_condition_one_pattern():
    for n in (1, 2, 3):
        ra = build_rays("pattern", n)
        idx = get_index(2, n)
        ok, witness = condition_one(ra, idx, greedy_facet(ra.word))
        assert ok and witness is None
    # any full-rank base works; {1, 2} at n=1 spans the plane and the other
    # two facets avoid its interior
    ra = build_rays("pattern", 1)
    ok, witness = condition_one(ra, get_index(2, 1), bitset_of([1, 2]))
    assert ok and witness is None


def test_certify_pattern_small():
    for n in (1, 2, 3):
        rep = certify_fan(build_rays("pattern", n), get_index(2, n))
        assert rep.certified
        assert rep.condition1 == "full"
        assert rep.stats.min_dimension == 2 * n


def test_certify_rejects_word_mismatch():
    with pytest.raises(ValueError):
        certify_fan(build_rays("pattern", 2), get_index(2, 3))


def test_certify_rejects_bad_sets():
    rep = certify_fan(build_rays("naive", 3), get_index(2, 3))
    assert not rep.certified
    assert rep.first_failure.startswith("degenerate ridge")
    assert rep.condition1 == "skipped"


def test_fixed_53_certifies_n3():
    rep = certify_fan(build_rays("fixed:5,3", 3), get_index(2, 3))
    assert rep.certified


def test_stats_threads_equal():
    ra = build_rays("naive", 3)
    idx = get_index(2, 3)
    assert fan_statistics(ra, idx, threads=1) == fan_statistics(ra, idx, threads=8)


def test_stream_certify_matches_indexed():
    from multifan.fan import stream_certify

    for name, n in [("pattern", 2), ("pattern", 3), ("naive", 3)]:
        ra = build_rays(name, n)
        indexed = certify_fan(ra, get_index(2, n), condition1="full")
        streamed = stream_certify(ra, sample=None)
        assert streamed.certified == indexed.certified
        assert streamed.stats == indexed.stats


def test_format_stats_table():
    stats = fan_statistics(build_rays("naive", 3), get_index(2, 3))
    text = format_stats_table([stats])
    lines = text.splitlines()
    assert lines[0].split() == ["n", "3"]
    assert "# degenerate ridges" in text and "minimal dimension" in text
