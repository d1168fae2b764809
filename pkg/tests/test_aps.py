from __future__ import annotations

import pytest

from ttr.errors import LemmaViolationError
from ttr.grid import Orientation, Rect, Tiling
from ttr.aps import APWitness, dxdy_class, enumerate_aps, longest_ap, mod4_class
from ttr.width4 import UNIT_A_TILES


def test_pinwheel_has_no_pairs(pinwheel_a):
    assert enumerate_aps(pinwheel_a, 2) == []
    best = longest_ap(pinwheel_a)
    assert best.length == 1 and best.step == (0, 0)
    # tie-break starts from the U tile (canonical orientation order)
    assert best.orientation is Orientation.U


def test_aa_strip_contains_step_four_pair():
    tiles = [t.translated(0, off) for off in (0, 4) for t in UNIT_A_TILES]
    tiling = Tiling(Rect(4, 8), tiles)
    aps = enumerate_aps(tiling, 2)
    assert APWitness(Orientation.D, (0, 1), (0, 4), 2) in aps
    assert all(ap.verifies_against(tiling) for ap in aps)


def test_periodic_20x20_has_length_five_rows(periodic_20x20):
    aps = enumerate_aps(periodic_20x20, 5)
    assert APWitness(Orientation.D, (0, 1), (0, 4), 5) in aps
    assert longest_ap(periodic_20x20).length == 5
    for ap in aps:
        assert ap.verifies_against(periodic_20x20)


def test_maximal_aps_are_not_extendable(corpus):
    for tiling in corpus[(8, 8)]:
        anchors = tiling.anchors_by_orientation()
        for ap in enumerate_aps(tiling, 2):
            dy, dx = ap.step
            r, c = ap.start
            assert (r - dy, c - dx) not in anchors[ap.orientation]
            last = (r + (ap.length - 1) * dy, c + (ap.length - 1) * dx)
            assert (last[0] + dy, last[1] + dx) not in anchors[ap.orientation]


def test_pair_completeness(corpus):
    for tiling in corpus[(4, 12)]:
        repeats = any(
            len(anchors) >= 2 for anchors in tiling.anchors_by_orientation().values()
        )
        assert (longest_ap(tiling).length >= 2) == repeats


def test_mod4_class_examples():
    assert mod4_class([4, 8, 12]) == 0
    assert mod4_class([1, 5, 9]) == 1
    assert mod4_class([3, 7, 11]) == 3


def test_mod4_class_rejects_bad_input():
    with pytest.raises(ValueError):
        mod4_class([0, 4])  # too short
    with pytest.raises(ValueError):
        mod4_class([0, 3, 5])  # not an AP
    with pytest.raises(ValueError):
        mod4_class([0, 2, 4])  # residues {0, 2} not adjacent


def test_mod4_class_brute_force_property():
    # Over every AP of length 3 within 0..99 whose residues fit in {r, r+1}
    # for some r, all residues agree.
    for start in range(100):
        for step in range(1, 50):
            terms = [start, start + step, start + 2 * step]
            if terms[-1] > 99:
                break
            residues = {t % 4 for t in terms}
            confined = any(residues <= {r, (r + 1) % 4} for r in range(4))
            if confined:
                assert len(residues) == 1
                assert mod4_class(terms) == terms[0] % 4


def test_dxdy_class_arithmetic():
    assert dxdy_class(APWitness(Orientation.D, (0, 0), (0, 4), 5)) == (0, 0)
    assert dxdy_class(APWitness(Orientation.D, (0, 0), (2, 6), 3)) == (2, 2)
    with pytest.raises(ValueError):
        dxdy_class(APWitness(Orientation.D, (0, 0), (0, 4), 2))
    with pytest.raises(LemmaViolationError):
        dxdy_class(APWitness(Orientation.D, (0, 0), (1, 4), 3))


def test_dxdy_lemma_exhaustive_on_small_rects(corpus):
    for rect_key in [(4, 8), (4, 12), (4, 16), (8, 8), (8, 12)]:
        for tiling in corpus[rect_key]:
            for ap in enumerate_aps(tiling, 3):
                assert dxdy_class(ap) in {(0, 0), (2, 2)}


def test_dxdy_lemma_on_long_strips():
    from ttr.enumerator import enumerate_tilings

    for n in (20, 24):
        for tiling in enumerate_tilings(Rect(4, n)):
            for ap in enumerate_aps(tiling, 3):
                assert dxdy_class(ap) in {(0, 0), (2, 2)}


def test_canonical_output_order(corpus):
    for tiling in corpus[(8, 8)][:20]:
        aps = enumerate_aps(tiling, 2)
        keys = [(ap.orientation.index, ap.start, ap.step) for ap in aps]
        assert keys == sorted(keys)


def test_longest_ap_requires_tiles():
    with pytest.raises(ValueError):
        longest_ap.__call__(type("T", (), {"tiles": ()})())
