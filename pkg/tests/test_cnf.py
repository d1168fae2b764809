from __future__ import annotations

import itertools

import pytest

from ttr.errors import ParseError
from ttr.grid import ORIENTATIONS, TILE_BBOX, Rect
from ttr.cnf import (
    PlacementIndex,
    add_ap_blocking,
    add_rot180_symmetry,
    ap_steps,
    build_cnf,
    clauses_to_dimacs,
    decode_model,
    parse_dimacs,
    to_dimacs,
    var_map_sidecar,
)
from ttr.cdcl import solve_clauses


def brute_force_placement_count(rect: Rect) -> int:
    # Slide each orientation's bounding box over the rectangle.
    total = 0
    for o in ORIENTATIONS:
        rows, cols = TILE_BBOX[o]
        total += max(0, rect.height - rows + 1) * max(0, rect.width - cols + 1)
    return total


def test_4x4_has_24_placement_variables():
    cnf = build_cnf(Rect(4, 4))
    assert cnf.num_vars == brute_force_placement_count(Rect(4, 4)) == 24


def test_cell_clauses_shapes():
    cnf = build_cnf(Rect(4, 4))
    alo = [c for c in cnf.clauses if all(l > 0 for l in c)]
    amo = [c for c in cnf.clauses if all(l < 0 for l in c)]
    assert len(alo) == 16
    assert all(len(c) == 2 for c in amo)


def test_every_model_decodes_to_a_valid_tiling():
    cnf = build_cnf(Rect(4, 8))
    result = solve_clauses(cnf.num_vars, cnf.clauses)
    assert result.status == "SAT"
    tiling = decode_model(cnf, result.model)  # Tiling constructor validates
    assert tiling.rect == Rect(4, 8)


def test_cover_clauses_unsat_for_4x6():
    cnf = build_cnf(Rect(4, 6))
    assert solve_clauses(cnf.num_vars, cnf.clauses).status == "UNSAT"


def test_build_cnf_rejects_uncoverable_cells():
    with pytest.raises(ValueError):
        build_cnf(Rect(2, 2))


def test_ap_blocking_marks_metadata():
    cnf = add_ap_blocking(build_cnf(Rect(4, 8)), 2)
    assert cnf.blocked_len == 2
    assert cnf.num_clauses > build_cnf(Rect(4, 8)).num_clauses


def test_blocking_clauses_cover_every_window():
    # Independent count of 2-AP windows for one orientation on a tiny board.
    rect = Rect(4, 8)
    base = build_cnf(rect)
    blocked = add_ap_blocking(base, 2)
    added = blocked.num_clauses - base.num_clauses
    index = PlacementIndex(rect)
    expect = 0
    for o in ORIENTATIONS:
        anchors = [t.anchor for t in index.tiles if t.orientation is o]
        expect += sum(
            1 for a, b in itertools.combinations(sorted(anchors), 2) if a != b
        )
    assert added == expect


def test_dxdy_filter_is_a_subset():
    rect = Rect(8, 12)
    full = set(ap_steps(rect))
    filtered = set(ap_steps(rect, dxdy_filter=True))
    assert filtered < full
    assert all((dy % 4, dx % 4) in {(0, 0), (2, 2)} for dy, dx in filtered)


def test_rot180_symmetry_clauses_pair_variables():
    rect = Rect(4, 8)
    base = build_cnf(rect)
    sym = add_rot180_symmetry(base)
    assert sym.rot180
    added = sym.num_clauses - base.num_clauses
    assert added == base.num_vars  # two implications per unordered pair


def test_dimacs_round_trip():
    cnf = add_ap_blocking(build_cnf(Rect(4, 8)), 3)
    text = to_dimacs(cnf, comments=["generated for a test"])
    num_vars, clauses = parse_dimacs(text)
    assert num_vars == cnf.num_vars
    assert [tuple(c) for c in clauses] == list(cnf.clauses)


def test_dimacs_parse_errors():
    with pytest.raises(ParseError):
        parse_dimacs("1 2 0\n")
    with pytest.raises(ParseError):
        parse_dimacs("p cnf 2 1\n1 3 0\n")
    with pytest.raises(ParseError):
        parse_dimacs("p cnf 2 5\n1 2 0\n")


def test_var_map_sidecar_lines():
    cnf = build_cnf(Rect(4, 4))
    lines = var_map_sidecar(cnf).splitlines()
    assert len(lines) == 24
    assert lines[0] == "1 u 0 0"
    index = PlacementIndex(Rect(4, 4))
    var, letter, row, col = lines[7].split()
    t = index.tiles[int(var) - 1]
    assert (t.orientation.value, str(t.row), str(t.col)) == (letter, row, col)


def test_clauses_to_dimacs_header():
    text = clauses_to_dimacs(3, [(1, -2), (2, 3)])
    assert text.splitlines()[0] == "p cnf 3 2"
