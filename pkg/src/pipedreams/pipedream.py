"""Pipe dreams: cross-sets in the positive quadrant and their pipe geometry.

A pipe dream is a finite set of ``(row, column)`` cross positions; every
other position holds a bump tile.  Pipes enter from the north boundary
(pipe ``k`` above column ``k``) and exit on the west boundary; reading the
west-boundary labels top to bottom gives the permutation of the diagram.

Tile connectivity: at a cross the strands pass straight through (the label
exiting west equals the one entering east, and south equals north); at a
bump the strand from the north turns west and the strand from the east
turns south.  Consequently a pipe's path moves weakly down and weakly left,
so it crosses any given tile edge at most once.

Tracing works on a finite ``box x box`` grid.  The truncation is exact: the
north edge of tile ``(1, j)`` carries pipe ``j``, and the east edge of tile
``(i, box)`` carries pipe ``box + i``, the label forced by the all-bump
region east of the box.  Tiles are filled top-to-bottom, right-to-left.
Any box at least as wide as every cross column yields exact labels; we
require the slightly larger spec ``box >= max(i + j) + 1`` so the west
boundary always spells the full permutation window.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .perm import Partition, Permutation, Position, weak_le

__all__ = [
    "TileLabels",
    "Trace",
    "PipeDream",
    "MarkedPipeDream",
    "DominatedPositions",
    "InvariantError",
    "permutation_of",
    "pipe_dreams",
    "pipe_dreams_bruteforce",
    "dominated_positions",
    "is_slidable",
    "slide",
    "is_swappable",
    "swap",
    "render_ascii",
]


class InvariantError(RuntimeError):
    """An internal invariant the library guarantees was violated."""


class TileLabels(NamedTuple):
    """Labels of the pipes crossing the four edges of one tile."""

    n: int
    e: int
    s: int
    w: int


class Trace(NamedTuple):
    """Exact pipe labels for every tile of a ``box x box`` grid."""

    box: int
    grid: dict[Position, TileLabels]
    entry: tuple[dict[int, int], ...]  # entry[i][pipe] = column entering row i
    cross_at: dict[tuple[int, int], Position]  # (lo, hi) pipe pair -> crossing
    west_edge: tuple[int, ...]  # west-boundary labels, top to bottom

    def labels(self, p: Position) -> TileLabels:
        return self.grid[p]

    def entry_column(self, pipe: int, row: int) -> int | None:
        """Column where ``pipe`` enters ``row`` from the north, if it does."""
        return self.entry[row].get(pipe)

    def crossing_of(self, a: int, b: int) -> Position | None:
        """The tile where pipes ``a`` and ``b`` cross, if they do."""
        return self.cross_at.get((a, b) if a < b else (b, a))


def _compute_trace(crosses: frozenset[Position], box: int) -> Trace:
    grid: dict[Position, TileLabels] = {}
    cross_at: dict[tuple[int, int], Position] = {}
    entry: list[dict[int, int]] = [dict() for _ in range(box + 1)]
    south_above = list(range(box + 1))  # south labels of the previous row
    west_edge = []
    for i in range(1, box + 1):
        east_right = box + i  # east-boundary seed for this row
        row_entry = entry[i]
        for j in range(box, 0, -1):
            n = south_above[j]
            e = east_right
            if (i, j) in crosses:
                w, s = e, n
                cross_at[(n, e) if n < e else (e, n)] = (i, j)
            else:
                w, s = n, e
            grid[(i, j)] = TileLabels(n, e, s, w)
            row_entry[n] = j
            south_above[j] = s
            east_right = w
        west_edge.append(east_right)
    return Trace(box, grid, tuple(entry), cross_at, tuple(west_edge))


def _natural_box(crosses: frozenset[Position]) -> int:
    staircase = max((i + j for (i, j) in crosses), default=0)
    return staircase + 1 if staircase else 1


def permutation_of(crosses: Iterable[Position]) -> tuple[Permutation, bool]:
    """Permutation of an arbitrary cross-set, plus whether it is reduced.

    Reduced means no two pipes cross more than once; equivalently the number
    of crosses equals the length of the permutation.
    """
    cs = frozenset((int(i), int(j)) for (i, j) in crosses)
    if any(i < 1 or j < 1 for (i, j) in cs):
        raise ValueError("cross positions must have row, column >= 1")
    trace = _compute_trace(cs, _natural_box(cs))
    perm = Permutation(trace.west_edge)
    return perm, len(cs) == perm.length()


_TRACE_LOCK = threading.Lock()


class PipeDream:
    """An immutable reduced pipe dream.

    ``crosses`` is the frozenset of cross positions; ``permutation`` is the
    cached west-boundary reading.  Construction rejects non-reduced sets.
    Traces are memoized per box behind a lock, so instances are safe to
    share between threads.
    """

    __slots__ = ("crosses", "permutation", "natural_box", "_traces")

    def __init__(self, crosses: Iterable[Position] = ()):
        cs = frozenset((int(i), int(j)) for (i, j) in crosses)
        if any(i < 1 or j < 1 for (i, j) in cs):
            raise ValueError("cross positions must have row, column >= 1")
        self.crosses = cs
        self.natural_box = _natural_box(cs)
        self._traces: dict[int, Trace] = {}
        perm = Permutation(self.trace().west_edge)
        if len(cs) != perm.length():
            raise ValueError(f"cross-set is not reduced: {sorted(cs)}")
        self.permutation = perm

    def trace(self, box: int | None = None) -> Trace:
        if box is None:
            box = self.natural_box
        if box < self.natural_box:
            raise ValueError(f"box {box} too small, need >= {self.natural_box}")
        tr = self._traces.get(box)
        if tr is None:
            with _TRACE_LOCK:
                tr = self._traces.get(box)
                if tr is None:
                    tr = _compute_trace(self.crosses, box)
                    self._traces[box] = tr
        return tr

    def tile(self, p: Position, box: int | None = None) -> TileLabels:
        """Labels at position ``p``, growing the trace box as needed."""
        if box is None:
            box = max(self.natural_box, p[0] + 1, p[1] + 1)
        return self.trace(box).labels(p)

    def to_json_obj(self) -> dict:
        return {"crosses": [list(p) for p in sorted(self.crosses)]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PipeDream":
        return cls((int(i), int(j)) for (i, j) in obj["crosses"])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PipeDream) and self.crosses == other.crosses

    def __hash__(self) -> int:
        return hash(self.crosses)

    def __lt__(self, other: "PipeDream") -> bool:
        return sorted(self.crosses) < sorted(other.crosses)

    def __repr__(self) -> str:
        return f"PipeDream({sorted(self.crosses)!r})"


@dataclass(frozen=True)
class MarkedPipeDream:
    """A pipe dream with a distinguished bump position."""

    pd: PipeDream
    mark: Position

    def __post_init__(self):
        i, j = self.mark
        if i < 1 or j < 1:
            raise ValueError(f"mark must have row, column >= 1: {self.mark}")
        if self.mark in self.pd.crosses:
            raise ValueError(f"mark {self.mark} sits on a cross")

    def tile(self, box: int | None = None) -> TileLabels:
        return self.pd.tile(self.mark, box)

    def to_json_obj(self) -> dict:
        obj = self.pd.to_json_obj()
        obj["mark"] = list(self.mark)
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "MarkedPipeDream":
        i, j = obj["mark"]
        return cls(PipeDream.from_json_obj(obj), (int(i), int(j)))

    def __lt__(self, other: "MarkedPipeDream") -> bool:
        return (sorted(self.pd.crosses), self.mark) < (
            sorted(other.pd.crosses),
            other.mark,
        )


@lru_cache(maxsize=None)
def pipe_dreams(w: Permutation) -> frozenset[PipeDream]:
    """All reduced pipe dreams with permutation ``w``.

    Generated as the ladder-move closure of the bottom pipe dream whose
    row ``i`` holds crosses in columns ``1 .. code(w)[i]``.  Checked against
    :func:`pipe_dreams_bruteforce` at small rank by the test suite.
    """
    bottom = frozenset(
        (i, j) for i, c in enumerate(w.code(), start=1) for j in range(1, c + 1)
    )
    seen = {bottom}
    queue = [bottom]
    while queue:
        cs = queue.pop()
        for moved in _ladder_moves(cs):
            if moved not in seen:
                seen.add(moved)
                queue.append(moved)
    out = frozenset(PipeDream(cs) for cs in seen)
    assert all(pd.permutation == w for pd in out)
    return out


def _ladder_moves(cs: frozenset[Position]):
    """Yield cross-sets reachable by one ladder move.

    A cross at ``(i, j)`` with ``(i, j+1)`` empty climbs past a stack of
    rows fully occupied in columns ``j`` and ``j+1``, landing at ``(r, j+1)``
    in the first row where both columns are empty.
    """
    for (i, j) in cs:
        if (i, j + 1) in cs:
            continue
        r = i - 1
        while r >= 1 and (r, j) in cs and (r, j + 1) in cs:
            r -= 1
        if r >= 1 and (r, j) not in cs and (r, j + 1) not in cs:
            yield (cs - {(i, j)}) | {(r, j + 1)}


def pipe_dreams_bruteforce(w: Permutation) -> frozenset[PipeDream]:
    """Oracle enumeration: filter all length(w)-subsets of the staircase."""
    import itertools

    if w.size > 7:
        raise ValueError(f"window {w.size} too large for brute force")
    n = max(w.size, 1)
    cells = [(i, j) for i in range(1, n) for j in range(1, n + 1 - i)]
    target = w.length()
    found = []
    for combo in itertools.combinations(cells, target):
        perm, reduced = permutation_of(combo)
        if reduced and perm == w:
            found.append(PipeDream(combo))
    return frozenset(found)


@dataclass(frozen=True)
class DominatedPositions:
    """The positions of a pipe dream dominated by a dominant permutation.

    Row ``i`` holds exactly ``code(above)[i]`` positions, and every cross of
    the underlying pipe dream is dominated.
    """

    positions: frozenset[Position]
    base: Permutation
    above: Permutation


@lru_cache(maxsize=None)
def dominated_positions(pd: PipeDream, above: Permutation) -> DominatedPositions:
    """Positions ``p`` whose south pipe ``k`` satisfies ``above(w^-1(k)) <= shape[i_p]``.

    ``above`` must be dominant with ``permutation(pd)`` weakly below it.
    """
    w = pd.permutation
    if not above.is_dominant():
        raise ValueError(f"{above!r} is not dominant")
    if not weak_le(w, above):
        raise ValueError(f"{w!r} is not weakly below {above!r}")
    shape = Partition(above.code())
    winv = w.inverse()
    box = max(pd.natural_box, w.size + 1, above.size + 1)
    trace = pd.trace(box)
    positions = set()
    for i in range(1, len(shape) + 1):
        cap = shape.part(i)
        for j in range(1, box + 1):
            k = trace.labels((i, j)).s
            if k <= box and above(winv(k)) <= cap:
                positions.add((i, j))
    if __debug__:
        for i in range(1, len(shape) + 1):
            count = sum(1 for (r, _) in positions if r == i)
            assert count == shape.part(i), "row count differs from the shape"
        assert pd.crosses <= positions, "a cross escaped the dominated set"
    return DominatedPositions(frozenset(positions), w, above)


def _move_box(mpd: MarkedPipeDream, box: int | None) -> int:
    if box is not None:
        return box
    i, j = mpd.mark
    return max(mpd.pd.natural_box, i + 1, j + 1)


def is_slidable(mpd: MarkedPipeDream, box: int | None = None) -> bool:
    """True when the pipe exiting the mark westward turns south in this row."""
    box = _move_box(mpd, box)
    west_pipe = mpd.tile(box).w
    exit_row = mpd.pd.permutation.inverse()(west_pipe)
    assert exit_row >= mpd.mark[0], "a pipe exits weakly below every row it touches"
    return exit_row > mpd.mark[0]


def slide(mpd: MarkedPipeDream, box: int | None = None) -> MarkedPipeDream:
    """Move the mark west to the bump where its west pipe turns south."""
    box = _move_box(mpd, box)
    if not is_slidable(mpd, box):
        raise ValueError(f"{mpd!r} is not slidable")
    i, j = mpd.mark
    crosses = mpd.pd.crosses
    for jj in range(j - 1, 0, -1):
        if (i, jj) not in crosses:
            target = MarkedPipeDream(mpd.pd, (i, jj))
            assert target.tile(box).s == mpd.tile(box).w
            return target
    raise InvariantError("slidable mark had no bump to its west")


def _inverse_slide(mpd: MarkedPipeDream, box: int | None = None) -> MarkedPipeDream:
    """The unique mark in this row whose slide lands on ``mpd``.

    The south pipe of the mark entered the row from the north at a bump
    strictly to the east; that bump is the preimage.
    """
    box = _move_box(mpd, box)
    i, _ = mpd.mark
    south_pipe = mpd.tile(box).s
    col = mpd.pd.trace(box).entry_column(south_pipe, i)
    if col is None or col <= mpd.mark[1] or (i, col) in mpd.pd.crosses:
        raise InvariantError("no slide preimage; tracing invariant broken")
    source = MarkedPipeDream(mpd.pd, (i, col))
    if __debug__:
        assert slide(source, max(box, col + 1)) == mpd
    return source


def is_swappable(mpd: MarkedPipeDream, box: int | None = None) -> bool:
    """True when the mark's west and south pipes cross somewhere."""
    box = _move_box(mpd, box)
    labels = mpd.tile(box)
    winv = mpd.pd.permutation.inverse()
    return (labels.w > labels.s) != (winv(labels.w) > winv(labels.s))


def swap(mpd: MarkedPipeDream, box: int | None = None) -> MarkedPipeDream:
    """Exchange the marked bump with the crossing of its two pipes.

    Returns the new pipe dream (same permutation) marked at the old
    crossing position.
    """
    box = _move_box(mpd, box)
    labels = mpd.tile(box)
    crossing = mpd.pd.trace(box).crossing_of(labels.w, labels.s)
    if crossing is None:
        if __debug__:
            assert not is_swappable(mpd, box)
        raise ValueError(f"{mpd!r} is not swappable")
    if __debug__:
        assert is_swappable(mpd, box)
    swapped = PipeDream((mpd.pd.crosses - {crossing}) | {mpd.mark})
    assert swapped.permutation == mpd.pd.permutation
    return MarkedPipeDream(swapped, crossing)


def render_ascii(
    pd: PipeDream,
    above: Permutation | None = None,
    mark: Position | None = None,
    box: int | None = None,
) -> str:
    """Character grid: ``+`` cross, ``.`` bump, ``o`` dominated bump, ``*`` mark."""
    if mark is not None and mark in pd.crosses:
        raise ValueError(f"mark {mark} sits on a cross")
    if box is None:
        box = max(
            [1]
            + [i + j for (i, j) in pd.crosses]
            + ([above.size] if above is not None else [])
            + ([mark[0], mark[1]] if mark is not None else [])
        )
    dominated: frozenset[Position] = frozenset()
    if above is not None:
        dominated = dominated_positions(pd, above).positions
    rows = []
    for i in range(1, box + 1):
        chars = []
        for j in range(1, box + 1):
            p = (i, j)
            if mark is not None and p == mark:
                chars.append("*")
            elif p in pd.crosses:
                chars.append("+")
            elif p in dominated:
                chars.append("o")
            else:
                chars.append(".")
        rows.append("".join(chars))
    return "\n".join(rows)
