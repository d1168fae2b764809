"""CNF encodings of tiling questions, and the DIMACS wire format.

One boolean variable per placement.  Per cell: an at-least-one clause over
the placements covering it plus pairwise at-most-one clauses, so models
correspond exactly to complete tilings.  AP blocking adds one clause per
window of l equally spaced same-orientation placements.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .errors import ParseError
from .grid import ORIENTATIONS, Orientation, Rect, Tile, Tiling, rotate_tile_180, tile_cells
from .enumerator import placements

Clause = tuple[int, ...]


class PlacementIndex:
    """Dense ids for every placement that fits in a rectangle, canonical order."""

    def __init__(self, rect: Rect):
        self.rect = rect
        self.tiles: tuple[Tile, ...] = placements(rect)
        self.id_of: dict[Tile, int] = {t: i for i, t in enumerate(self.tiles)}
        by_cell: dict[tuple[int, int], list[int]] = {cell: [] for cell in rect.cells()}
        for i, t in enumerate(self.tiles):
            for cell in tile_cells(t):
                by_cell[cell].append(i)
        self.ids_by_cell = by_cell

    def __len__(self) -> int:
        return len(self.tiles)


@dataclass(frozen=True)
class CNF:
    """A propositional encoding plus the variable-to-placement map.

    Variables are 1-based; variable i+1 corresponds to ``index.tiles[i]``.
    ``blocked_len``/``rot180`` record which extra constraint groups were added
    so witnesses can be re-verified independently after decoding.
    """

    rect: Rect
    num_vars: int
    clauses: tuple[Clause, ...]
    blocked_len: int | None = None
    rot180: bool = False

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def var_of(self, tile: Tile) -> int:
        return PlacementIndex(self.rect).id_of[tile] + 1


def build_cnf(rect: Rect) -> CNF:
    """Exact-cover encoding of complete tilings of ``rect``.

    Any rectangle whose every cell is coverable is accepted; rectangles that
    admit no tiling simply yield an unsatisfiable formula.
    """
    index = PlacementIndex(rect)
    clauses: list[Clause] = []
    for cell in rect.cells():
        ids = index.ids_by_cell[cell]
        if not ids:
            raise ValueError(f"cell {cell} of {rect} cannot be covered by any placement")
        clauses.append(tuple(i + 1 for i in ids))
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                clauses.append((-(ids[a] + 1), -(ids[b] + 1)))
    return CNF(rect, len(index), tuple(clauses))


def ap_steps(rect: Rect, *, dxdy_filter: bool = False) -> list[tuple[int, int]]:
    """Candidate AP steps, one direction per axis of symmetry.

    ``dxdy_filter`` keeps only steps congruent to (0,0) or (2,2) mod 4; that
    is sound for blocking length >= 3 but off by default so correctness never
    depends on it.
    """
    steps = []
    for dy in range(0, rect.height):
        for dx in range(-rect.width + 1, rect.width):
            if dy == 0 and dx <= 0:
                continue
            if dxdy_filter and (dy % 4, dx % 4) not in {(0, 0), (2, 2)}:
                continue
            steps.append((dy, dx))
    return steps


def add_ap_blocking(cnf: CNF, l: int, *, dxdy_filter: bool = False) -> CNF:
    """Forbid every window of l equally spaced same-orientation placements.

    The result is satisfiable exactly when a tiling without any l-term AP
    exists.
    """
    if l < 2:
        raise ValueError(f"l must be >= 2, got {l}")
    index = PlacementIndex(cnf.rect)
    anchors_by_orient: dict[Orientation, dict[tuple[int, int], int]] = {o: {} for o in ORIENTATIONS}
    for i, t in enumerate(index.tiles):
        anchors_by_orient[t.orientation][t.anchor] = i
    new_clauses: list[Clause] = []
    for orient in ORIENTATIONS:
        anchors = anchors_by_orient[orient]
        for dy, dx in ap_steps(cnf.rect, dxdy_filter=dxdy_filter):
            for (r, c), first_id in anchors.items():
                window = [first_id]
                rr, cc = r, c
                ok = True
                for _ in range(l - 1):
                    rr += dy
                    cc += dx
                    nxt = anchors.get((rr, cc))
                    if nxt is None:
                        ok = False
                        break
                    window.append(nxt)
                if ok:
                    new_clauses.append(tuple(-(i + 1) for i in window))
    return replace(cnf, clauses=cnf.clauses + tuple(new_clauses), blocked_len=l)


def add_rot180_symmetry(cnf: CNF) -> CNF:
    """Constrain models to 180-degree rotationally symmetric tilings."""
    index = PlacementIndex(cnf.rect)
    new_clauses: list[Clause] = []
    for i, t in enumerate(index.tiles):
        j = index.id_of[rotate_tile_180(cnf.rect, t)]
        if i < j:
            new_clauses.append((-(i + 1), j + 1))
            new_clauses.append((-(j + 1), i + 1))
    return replace(cnf, clauses=cnf.clauses + tuple(new_clauses), rot180=True)


def decode_model(cnf: CNF, model: Sequence[bool]) -> Tiling:
    """Rebuild the tiling from a satisfying assignment (model[v] for var v)."""
    index = PlacementIndex(cnf.rect)
    tiles = [index.tiles[v - 1] for v in range(1, cnf.num_vars + 1) if model[v]]
    return Tiling(cnf.rect, tiles)


# --------------------------------------------------------------------------
# DIMACS CNF and the variable-map sidecar


def clauses_to_dimacs(num_vars: int, clauses: Sequence[Clause], comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {num_vars} {len(clauses)}")
    for clause in clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def to_dimacs(cnf: CNF, comments: Sequence[str] = ()) -> str:
    return clauses_to_dimacs(cnf.num_vars, cnf.clauses, comments)


def var_map_sidecar(cnf: CNF) -> str:
    """One line per variable: ``<var> <orient-letter> <row> <col>``."""
    index = PlacementIndex(cnf.rect)
    lines = [
        f"{i + 1} {t.orientation.value} {t.row} {t.col}"
        for i, t in enumerate(index.tiles)
    ]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[Clause]]:
    """Parse a DIMACS CNF file; returns (num_vars, clauses)."""
    num_vars = None
    num_clauses = None
    clauses: list[Clause] = []
    pending: list[int] = []
    for ln, line in enumerate(text.split("\n"), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(ln, 1, f"bad problem line {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ParseError(ln, 1, "clause before problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(ln, 1, f"bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                if abs(lit) > num_vars:
                    raise ParseError(ln, 1, f"literal {lit} out of range (p cnf {num_vars} ...)")
                pending.append(lit)
    if pending:
        clauses.append(tuple(pending))
    if num_vars is None:
        raise ParseError(1, 1, "missing problem line")
    if num_clauses is not None and num_clauses != len(clauses):
        raise ParseError(1, 1, f"problem line declares {num_clauses} clauses, found {len(clauses)}")
    return num_vars, clauses
