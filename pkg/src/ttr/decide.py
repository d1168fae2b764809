"""Deciding whether every tiling of a rectangle is forced to contain long APs.

``decide_forces(h, w, l)`` answers whether every complete tiling of the h x w
rectangle contains an AP of length >= l, either through the CNF/SAT pipeline
(blocking clauses; UNSAT means forced) or by exhaustive enumeration with AP
pruning.  ``compute_T`` and ``compute_L`` scan those answers for the least
forcing length and the greatest forced AP length.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import IndeterminateError, LemmaViolationError, ResourceLimitError
from .enumerator import DEFAULT_ENUM_AREA, _candidates_by_first_cell
from .grid import Rect, Tile, Tiling
from .aps import longest_ap
from .cnf import add_ap_blocking, build_cnf
from .solver import SearchConfig, SolverStatus, solve
from .vdw import vdw_number


@dataclass
class DecideResult:
    """Answer to "does (h, w) force an l-term AP?", with certificate."""

    height: int
    width: int
    length: int
    forced: bool
    witness: Tiling | None = None  # AP-free certificate when not forced
    method: str = "sat"

    def __bool__(self) -> bool:
        return self.forced


def _apfree_enumerate(rect: Rect, l: int, limit: int | None = None) -> Iterator[Tiling]:
    """Complete tilings whose longest AP is < l, by pruned backtracking.

    Prunes a branch as soon as the newest placement completes a window of l
    equally spaced same-orientation anchors, so only AP-free partial tilings
    are explored.
    """
    area = rect.area
    if area % 4:
        return
    by_cell = _candidates_by_first_cell(rect)
    full = (1 << area) - 1
    anchors: dict = {}
    stack: list[Tile] = []
    found = 0

    def completes_window(tile: Tile) -> bool:
        same = anchors.get(tile.orientation)
        if not same:
            return False
        r, c = tile.row, tile.col
        for (br, bc) in same:
            dy, dx = r - br, c - bc
            # Longest run through (r, c) with step (dy, dx), counting both sides.
            run = 1
            rr, cc = r - dy, c - dx
            while (rr, cc) in same:
                run += 1
                rr -= dy
                cc -= dx
            rr, cc = r + dy, c + dx
            while (rr, cc) in same:
                run += 1
                rr += dy
                cc += dx
            if run >= l:
                return True
        return False

    def search(covered: int, first_free: int) -> Iterator[Tiling]:
        nonlocal found
        if covered == full:
            found += 1
            yield Tiling(rect, stack)
            return
        while (covered >> first_free) & 1:
            first_free += 1
        for mask, tile in by_cell[first_free]:
            if covered & mask:
                continue
            if completes_window(tile):
                continue
            anchors.setdefault(tile.orientation, set()).add(tile.anchor)
            stack.append(tile)
            yield from search(covered | mask, first_free + 1)
            stack.pop()
            anchors[tile.orientation].discard(tile.anchor)
            if limit is not None and found >= limit:
                return

    yield from search(0, 0)


def decide_forces(
    h: int,
    w: int,
    l: int,
    config: SearchConfig | None = None,
    *,
    witness_hint: Tiling | None = None,
) -> DecideResult:
    """True iff every tiling of h x w contains an AP of length >= l.

    A ``witness_hint`` (an alleged AP-free tiling, e.g. from a stacked-row
    construction) is verified and, if good, answers the question immediately.
    SAT answers are cross-checked against the exhaustive enumerator for small
    rectangles unless disabled in the config.  Budget exhaustion raises
    :class:`IndeterminateError`; it is never coerced to a boolean.
    """
    if h % 4 or w % 4:
        raise ValueError(f"sides must be multiples of 4, got {h}x{w}")
    if l < 2:
        raise ValueError(f"l must be >= 2, got {l}")
    config = config or SearchConfig()

    if witness_hint is not None:
        if witness_hint.rect != Rect(h, w):
            raise ValueError(f"witness is for {witness_hint.rect}, expected {h}x{w}")
        if longest_ap(witness_hint).length < l:
            return DecideResult(h, w, l, forced=False, witness=witness_hint, method="hint")
        # A bad hint proves nothing; fall through to the search.

    if config.engine == "internal-backtracking":
        return _decide_by_enumeration(h, w, l, config)

    cnf = add_ap_blocking(build_cnf(Rect(h, w)), l, dxdy_filter=config.dxdy_step_filter)
    verdict = solve(cnf, config)
    if verdict.status is SolverStatus.UNKNOWN:
        raise IndeterminateError(f"budget exhausted deciding ({h},{w}) -> {l}")
    result = DecideResult(h, w, l, forced=verdict.status is SolverStatus.UNSAT,
                          witness=verdict.witness, method="sat")
    if config.oracle_cross_check and h * w <= config.oracle_area_limit:
        oracle = _decide_by_enumeration(h, w, l, config)
        if oracle.forced != result.forced:
            raise LemmaViolationError(
                f"solver and enumerator disagree on ({h},{w}) -> {l}: "
                f"sat={result.forced} enumeration={oracle.forced}"
            )
    return result


def _decide_by_enumeration(h: int, w: int, l: int, config: SearchConfig) -> DecideResult:
    rect = Rect(h, w)
    if rect.area > max(config.oracle_area_limit, DEFAULT_ENUM_AREA) and rect.height > 4:
        raise ResourceLimitError(
            f"exhaustive decision for {rect} exceeds the enumeration bound; use the sat engine"
        )
    for tiling in _apfree_enumerate(rect, l, limit=1):
        return DecideResult(h, w, l, forced=False, witness=tiling, method="enumeration")
    return DecideResult(h, w, l, forced=True, method="enumeration")


@dataclass
class ScanResult:
    """Exact value when pinned; otherwise the bracketing interval [lower, upper]."""

    value: int | None
    lower: int
    upper: int | None

    @property
    def exact(self) -> bool:
        return self.value is not None


def _decide_task(args: tuple[int, int, int, SearchConfig]) -> bool | None:
    h, w, l, config = args
    try:
        return decide_forces(h, w, l, config).forced
    except IndeterminateError:
        return None


def _scan_forced(
    questions: Sequence[tuple[int, int, int]],
    config: SearchConfig,
) -> Iterator[bool | None]:
    """Answer (h, w, l) forcing questions in order; None marks budget exhaustion.

    With ``config.jobs > 1``, a sliding window of that many questions runs
    speculatively on worker processes; answers still stream back in order, so
    scans that stop at the first forced answer give identical results.
    """
    if config.jobs <= 1:
        for h, w, l in questions:
            yield _decide_task((h, w, l, config))
        return
    tasks = [(h, w, l, config) for h, w, l in questions]
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        pending = deque(pool.submit(_decide_task, t) for t in tasks[: config.jobs])
        next_idx = len(pending)
        try:
            while pending:
                yield pending.popleft().result()
                if next_idx < len(tasks):
                    pending.append(pool.submit(_decide_task, tasks[next_idx]))
                    next_idx += 1
        finally:
            for fut in pending:
                fut.cancel()
            pool.shutdown(wait=True, cancel_futures=True)


def compute_T(w: int, l: int, config: SearchConfig | None = None, *, max_length: int = 400) -> ScanResult:
    """Least length N (multiple of 4) such that (w, N) forces an l-term AP.

    Scans N = 4, 8, ... upward (forcedness is not known to be monotone in N
    for general widths, so no binary search).  For widths 4..16 and l in
    {3, 4} the scan is capped by the 4*W(2, l) ceiling; reaching the ceiling
    without a forced answer indicates a bug and raises.
    """
    if w % 4:
        raise ValueError(f"width must be a multiple of 4, got {w}")
    config = config or SearchConfig()
    ceiling: int | None = None
    if w in (4, 8, 12, 16) and 3 <= l <= 4:
        ceiling = 4 * vdw_number(l)
    lengths = list(range(4, (ceiling or max_length) + 1, 4))
    for n, forced in zip(lengths, _scan_forced([(w, n, l) for n in lengths], config)):
        if forced is None:
            return ScanResult(None, n, ceiling)
        if forced:
            return ScanResult(n, n, n)
    if ceiling is not None:
        raise LemmaViolationError(
            f"scan passed the 4*W(2,{l}) = {ceiling} ceiling for width {w} without forcing"
        )
    return ScanResult(None, lengths[-1] + 4 if lengths else 4, None)


def compute_L(h: int, w: int, config: SearchConfig | None = None) -> ScanResult:
    """Greatest l such that every tiling of h x w contains an l-term AP.

    Every nonempty tiling contains a 1-term AP, so the floor is 1; the scan
    ascends l = 2, 3, ... until an AP-free-at-l tiling exists (a tiling that
    avoids l-APs also avoids longer ones, so the first avoidable l pins L).
    """
    if h % 4 or w % 4:
        raise ValueError(f"sides must be multiples of 4, got {h}x{w}")
    config = config or SearchConfig()
    ceiling = h * w // 4 + 1  # more terms than tiles is trivially avoidable
    lengths = list(range(2, ceiling + 1))
    for l, forced in zip(lengths, _scan_forced([(h, w, l) for l in lengths], config)):
        if forced is None:
            return ScanResult(None, l - 1, None)
        if not forced:
            return ScanResult(l - 1, l - 1, l - 1)
    raise LemmaViolationError(f"every length up to {ceiling} is forced on {h}x{w}; impossible")
