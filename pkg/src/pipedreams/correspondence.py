"""Transport of marked bumps to crossings, and the identity verifiers.

A *marked pair* is a pipe dream for ``w`` together with a distinguished
dominated bump.  Writing ``a`` and ``b`` for the pipes exiting the mark
west and south, each pair falls into exactly one class:

* ``DIRECT``: ``a < b`` and the pair is inverted by ``above * w^-1`` --
  crossing the two pipes at the mark lands on a cover of ``w`` below the
  dominant bound, so the mark is filled immediately;
* ``POSITION``: ``b < a`` -- the two pipes already cross above the mark;
* ``VALUE``: ``a < b`` in ``above * w^-1``-order as well.

POSITION and VALUE pairs are resolved by a chain of slide/swap steps that
walks the mark northwest while staying *aligned* with a fixed pipe ``k``
(the mark sits weakly northwest of pipe ``k`` and an inversion condition
ties the mark's west pipe to ``k``).  The chain strictly shrinks the region
jointly northwest of the mark's west pipe and pipe ``k``, so it terminates,
and the first non-aligned pair is DIRECT and gets filled.

Resolving every marked pair of ``w`` hits each pipe dream of each cover
``t * w`` once per class member: once directly, once for every pipe
squeezed between the swapped values in position order, and once for every
pipe squeezed in dominant-rank order.  That fiber count is exactly the
cover's coefficient in the raising-operator identity checked by
:func:`verify_raising`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .perm import Partition, Permutation, Position, Transposition, covers_below, weak_le
from .pipedream import (
    InvariantError,
    MarkedPipeDream,
    PipeDream,
    _inverse_slide,
    dominated_positions,
    is_swappable,
    pipe_dreams,
    slide,
    swap,
)
from .poly import (
    Monomial,
    Polynomial,
    in_degree_profile,
    lowering_op,
    padded_schubert_poly,
    profile_basis,
    raising_op,
    weight_op,
)

__all__ = [
    "MarkClass",
    "classify",
    "marked_pairs",
    "is_aligned",
    "chain_step",
    "northwest_shadow",
    "fill_mark",
    "open_cross",
    "Resolution",
    "resolve",
    "BetweenSets",
    "between_sets",
    "fiber_forward",
    "fiber_backward",
    "fiber",
    "IdentityReport",
    "CoverContribution",
    "verify_raising",
    "verify_lowering",
    "Sl2Report",
    "verify_sl2",
]


class MarkClass(Enum):
    """How a marked pair resolves; the values are the wire-format codes."""

    DIRECT = "0"
    POSITION = "A"
    VALUE = "B"


@lru_cache(maxsize=None)
def _shape(above: Permutation) -> Partition:
    return Partition(above.code())


def _context_box(mpd: MarkedPipeDream, above: Permutation, pipe: int = 0) -> int:
    w = mpd.pd.permutation
    i, j = mpd.mark
    return max(mpd.pd.natural_box, w.size + 1, above.size + 1, pipe + 1, i + 1, j + 1)


def classify(mpd: MarkedPipeDream, above: Permutation) -> MarkClass:
    """Class of a marked pair; the mark must be a dominated bump."""
    if not above.is_dominant():
        raise ValueError(f"{above!r} is not dominant")
    w = mpd.pd.permutation
    if not weak_le(w, above):
        raise ValueError(f"{w!r} is not weakly below {above!r}")
    box = _context_box(mpd, above)
    labels = mpd.tile(box)
    winv = w.inverse()
    shape = _shape(above)
    if above(winv(labels.s)) > shape.part(mpd.mark[0]):
        raise ValueError(f"mark {mpd.mark} is not dominated by {above!r}")
    if labels.s < labels.w:
        return MarkClass.POSITION
    if above(winv(labels.w)) > above(winv(labels.s)):
        return MarkClass.DIRECT
    return MarkClass.VALUE


def marked_pairs(w: Permutation, above: Permutation) -> tuple[MarkedPipeDream, ...]:
    """Every pipe dream of ``w`` with every dominated bump marked, sorted."""
    out = []
    for pd in sorted(pipe_dreams(w)):
        dominated = dominated_positions(pd, above).positions
        for mark in sorted(dominated - pd.crosses):
            out.append(MarkedPipeDream(pd, mark))
    return tuple(out)


def is_aligned(
    mpd: MarkedPipeDream, pipe: int, kind: MarkClass, above: Permutation
) -> bool:
    """Whether the mark is aligned with ``pipe`` for the given chain kind.

    Alignment always requires the mark to sit weakly northwest of the pipe:
    its row may not pass the pipe's exit row and its column may not pass
    the column where the pipe enters that row.  POSITION alignment adds
    that the mark's west pipe crosses ``pipe``; VALUE alignment instead
    requires the west pipe to precede ``pipe`` in dominant-rank order and
    the mark to sit weakly above the pipe's cutoff row.
    """
    if kind is MarkClass.DIRECT:
        raise ValueError("alignment is defined for POSITION and VALUE kinds only")
    w = mpd.pd.permutation
    winv = w.inverse()
    i, j = mpd.mark
    if i > winv(pipe):
        return False
    box = _context_box(mpd, above, pipe)
    trace = mpd.pd.trace(box)
    entry = trace.entry_column(pipe, i)
    if entry is None or j > entry:
        return False
    a = trace.labels(mpd.mark).w
    if kind is MarkClass.POSITION:
        return a < pipe and winv(a) > winv(pipe)
    if not (a < pipe and above(winv(a)) < above(winv(pipe))):
        return False
    return above(winv(pipe)) <= _shape(above).part(i)


def chain_step(
    mpd: MarkedPipeDream, pipe: int, kind: MarkClass, above: Permutation
) -> MarkedPipeDream:
    """One transport step: slide, then swap if the slid pair still qualifies."""
    if not is_aligned(mpd, pipe, kind, above):
        raise ValueError(f"{mpd!r} is not aligned with pipe {pipe}")
    box = _context_box(mpd, above, pipe)
    slid = slide(mpd, box)
    if is_aligned(slid, pipe, kind, above) and is_swappable(slid, box):
        out = swap(slid, box)
    else:
        out = slid
    if __debug__:
        before = mpd.tile(box)
        after = out.tile(_context_box(out, above, pipe))
        assert after.w <= before.w, "west label must weakly decrease"
        assert after.s != pipe, "south label may not return to the chain pipe"
    return out


def northwest_shadow(
    mpd: MarkedPipeDream, pipe: int, kind: MarkClass, above: Permutation
) -> frozenset[Position]:
    """Positions weakly northwest of both the mark's west pipe and ``pipe``.

    For VALUE chains the region is additionally truncated at the cutoff row
    of ``pipe``.  This set shrinks strictly along a chain, which certifies
    termination.
    """
    if kind is MarkClass.DIRECT:
        raise ValueError("shadow is defined for POSITION and VALUE kinds only")
    w = mpd.pd.permutation
    winv = w.inverse()
    box = _context_box(mpd, above, pipe)
    trace = mpd.pd.trace(box)
    a = trace.labels(mpd.mark).w
    rows = min(winv(a), winv(pipe))
    if kind is MarkClass.VALUE:
        rows = min(rows, _shape(above).conjugate().part(above(winv(pipe))))
    cells = set()
    for i in range(1, rows + 1):
        edge = min(trace.entry_column(a, i), trace.entry_column(pipe, i))
        cells.update((i, j) for j in range(1, edge + 1))
    return frozenset(cells)


def fill_mark(mpd: MarkedPipeDream, above: Permutation) -> tuple[PipeDream, Transposition]:
    """Replace a DIRECT mark by a cross, producing a cover's pipe dream."""
    if classify(mpd, above) is not MarkClass.DIRECT:
        raise ValueError(f"{mpd!r} is not a DIRECT pair")
    labels = mpd.tile(_context_box(mpd, above))
    cover = Transposition(labels.w, labels.s)
    filled = PipeDream(mpd.pd.crosses | {mpd.mark})
    assert filled.permutation == cover.times(mpd.pd.permutation)
    if __debug__:
        assert weak_le(filled.permutation, above)
    return filled, cover


def open_cross(
    filled: PipeDream, cover: Transposition, above: Permutation
) -> MarkedPipeDream:
    """Inverse of :func:`fill_mark`: remove the crossing of the cover's pipes."""
    box = max(filled.natural_box, filled.permutation.size + 1, cover.b + 1)
    crossing = filled.trace(box).crossing_of(cover.a, cover.b)
    if crossing is None:
        raise ValueError(f"pipes {cover.a} and {cover.b} do not cross")
    opened = MarkedPipeDream(PipeDream(filled.crosses - {crossing}), crossing)
    if __debug__:
        assert classify(opened, above) is MarkClass.DIRECT
        assert fill_mark(opened, above)[0] == filled
    return opened


@dataclass(frozen=True)
class Resolution:
    """The full transport record for one marked pair.

    ``steps`` lists the chain pairs: all but the last are aligned with
    ``pipe`` and the last is the DIRECT pair that got filled.  For DIRECT
    input the chain is the input itself and ``pipe`` is 0.
    """

    kind: MarkClass
    pipe: int
    steps: tuple[MarkedPipeDream, ...]
    result: PipeDream
    cover: Transposition

    @property
    def aligned_steps(self) -> int:
        return len(self.steps) - 1

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind.value,
            "k": self.pipe,
            "cover": [self.cover.a, self.cover.b],
            "steps": [step.to_json_obj() for step in self.steps],
            "result": self.result.to_json_obj(),
        }


def resolve(mpd: MarkedPipeDream, above: Permutation) -> Resolution:
    """Transport a marked pair to the pipe dream of a cover.

    DIRECT pairs are filled immediately.  Otherwise the chain pipe is the
    mark's west pipe (POSITION, after one swap) or south pipe (VALUE), and
    chain steps repeat until alignment fails, which lands on a DIRECT pair.
    """
    kind = classify(mpd, above)
    if kind is MarkClass.DIRECT:
        result, cover = fill_mark(mpd, above)
        resolution = Resolution(kind, 0, (mpd,), result, cover)
    else:
        box = _context_box(mpd, above)
        labels = mpd.tile(box)
        if kind is MarkClass.POSITION:
            pipe = labels.w
            current = swap(mpd, box)
            assert current.tile(_context_box(current, above, pipe)).s == pipe
        else:
            pipe = labels.s
            current = mpd
        steps = [current]
        budget = len(northwest_shadow(current, pipe, kind, above))
        while is_aligned(current, pipe, kind, above):
            if budget <= 0:
                raise InvariantError("transport chain exceeded its shadow budget")
            budget -= 1
            current = chain_step(current, pipe, kind, above)
            steps.append(current)
        assert len(steps) >= 2, "the first chain pair is always aligned"
        result, cover = fill_mark(current, above)
        resolution = Resolution(kind, pipe, tuple(steps), result, cover)
    if __debug__:
        _assert_weight_preserved(mpd, resolution, above)
    return resolution


def _marked_weight(mpd: MarkedPipeDream, dominated: frozenset[Position]) -> Monomial:
    """Weight of a marked pair: cross rows to x, dominated bump rows to y,
    with the mark's row moved from y to x."""
    crosses = mpd.pd.crosses
    xrows = [i for (i, _) in crosses] + [mpd.mark[0]]
    yrows = [i for (i, _) in dominated - crosses]
    yrows.remove(mpd.mark[0])
    return Monomial.from_rows(xrows, yrows)


def _assert_weight_preserved(
    mpd: MarkedPipeDream, resolution: Resolution, above: Permutation
) -> None:
    dominated = dominated_positions(mpd.pd, above).positions
    lhs = _marked_weight(mpd, dominated)
    result = resolution.result
    rhs = Monomial.from_rows(
        (i for (i, _) in result.crosses),
        (i for (i, _) in dominated - result.crosses),
    )
    assert lhs == rhs, "transport must preserve the marked weight"


@dataclass(frozen=True)
class BetweenSets:
    """Pipes squeezed between the swapped values of a cover.

    ``position``: pipes ``k > b`` sitting between ``a`` and ``b`` in the
    one-line order of ``w``.  ``value``: pipes ``k > b`` whose dominant rank
    sits between those of ``b`` and ``a``.
    """

    position: frozenset[int]
    value: frozenset[int]

    @property
    def total(self) -> int:
        return len(self.position) + len(self.value)


def between_sets(
    w: Permutation, cover: Transposition, above: Permutation
) -> BetweenSets:
    """The two statistics attached to a cover ``t * w`` below ``above``."""
    if cover not in covers_below(w, above):
        raise ValueError(f"{cover!r} is not a cover of {w!r} below {above!r}")
    winv = w.inverse()
    lo, hi = winv(cover.a), winv(cover.b)
    position = frozenset(
        w(q) for q in range(lo + 1, hi) if w(q) > cover.b
    )
    ainv = above.inverse()
    vlo, vhi = above(winv(cover.b)), above(winv(cover.a))
    value = frozenset(
        k
        for v in range(vlo + 1, vhi)
        if (k := w(ainv(v))) > cover.b
    )
    return BetweenSets(position, value)


@lru_cache(maxsize=None)
def _resolve_map(
    w: Permutation, above: Permutation
) -> dict[PipeDream, tuple[tuple[MarkedPipeDream, MarkClass], ...]]:
    """Resolve every marked pair of ``w`` and bucket the inputs by result."""
    buckets: dict[PipeDream, list[tuple[MarkedPipeDream, MarkClass]]] = {}
    for mpd in marked_pairs(w, above):
        res = resolve(mpd, above)
        buckets.setdefault(res.result, []).append((mpd, res.kind))
    return {pd: tuple(pairs) for pd, pairs in buckets.items()}


def _check_fiber_args(
    target: PipeDream, w: Permutation, cover: Transposition, above: Permutation
) -> None:
    if cover not in covers_below(w, above):
        raise ValueError(f"{cover!r} is not a cover of {w!r} below {above!r}")
    if target.permutation != cover.times(w):
        raise ValueError(f"{target!r} does not belong to the cover {cover!r}")


def fiber_forward(
    target: PipeDream, w: Permutation, cover: Transposition, above: Permutation
) -> dict[MarkClass, frozenset[MarkedPipeDream]]:
    """Preimage of ``target`` by brute-force resolution of every marked pair."""
    _check_fiber_args(target, w, cover, above)
    out: dict[MarkClass, set[MarkedPipeDream]] = {cls: set() for cls in MarkClass}
    for mpd, cls in _resolve_map(w, above).get(target, ()):
        out[cls].add(mpd)
    return {cls: frozenset(members) for cls, members in out.items()}


def _backward_step(
    mpd: MarkedPipeDream, pipe: int, kind: MarkClass, above: Permutation
) -> MarkedPipeDream:
    """The unique aligned pair one chain step before ``mpd``.

    Try both shapes a step can take: a plain slide (same pipe dream, mark
    pulled back east) and a swap preceded by a slide (undo the swap, then
    pull the mark back).  Exactly one candidate resolves forward to ``mpd``.
    """
    box = _context_box(mpd, above, pipe)
    candidates = []
    source = _inverse_slide(mpd, box)
    if (
        is_aligned(source, pipe, kind, above)
        and chain_step(source, pipe, kind, above) == mpd
    ):
        candidates.append(source)
    if is_swappable(mpd, box):
        unswapped = swap(mpd, box)
        source = _inverse_slide(unswapped, _context_box(unswapped, above, pipe))
        if (
            is_aligned(source, pipe, kind, above)
            and chain_step(source, pipe, kind, above) == mpd
        ):
            candidates.append(source)
    if len(candidates) != 1:
        raise InvariantError(
            f"expected exactly one chain preimage, found {len(candidates)}"
        )
    return candidates[0]


def fiber_backward(
    target: PipeDream, w: Permutation, cover: Transposition, above: Permutation
) -> dict[MarkClass, frozenset[MarkedPipeDream]]:
    """Preimage of ``target`` built by running the chains backwards.

    Seed with the opened cross; for each squeezed pipe ``k``, pull the mark
    back step by step until its south pipe is ``k`` (the head of a forward
    chain), then undo the initial swap for position-type chains.
    """
    _check_fiber_args(target, w, cover, above)
    seed = open_cross(target, cover, above)
    sets = between_sets(w, cover, above)
    out = {
        MarkClass.DIRECT: {seed},
        MarkClass.POSITION: set(),
        MarkClass.VALUE: set(),
    }
    for kind, pipes in (
        (MarkClass.POSITION, sets.position),
        (MarkClass.VALUE, sets.value),
    ):
        for pipe in pipes:
            current = _backward_step(seed, pipe, kind, above)
            budget = (max(w.size, above.size, pipe) + 2) ** 2
            while current.tile(_context_box(current, above, pipe)).s != pipe:
                if budget <= 0:
                    raise InvariantError("backward chain exceeded its area budget")
                budget -= 1
                current = _backward_step(current, pipe, kind, above)
            if kind is MarkClass.POSITION:
                head = swap(current, _context_box(current, above, pipe))
            else:
                head = current
            if __debug__:
                assert classify(head, above) is kind
                res = resolve(head, above)
                assert res.result == target and res.pipe == pipe
            out[kind].add(head)
    return {cls: frozenset(members) for cls, members in out.items()}


def fiber(
    target: PipeDream, w: Permutation, cover: Transposition, above: Permutation
) -> dict[MarkClass, frozenset[MarkedPipeDream]]:
    """The full preimage of ``target``, computed both ways and cross-checked."""
    forward = fiber_forward(target, w, cover, above)
    backward = fiber_backward(target, w, cover, above)
    if forward != backward:
        raise InvariantError(
            f"forward and backward fibers disagree for {target!r}: "
            f"{forward} vs {backward}"
        )
    return forward


@dataclass(frozen=True)
class CoverContribution:
    cover: Transposition
    coefficient: int
    position_pipes: tuple[int, ...]
    value_pipes: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "t": [self.cover.a, self.cover.b],
            "coeff": self.coefficient,
            "A": list(self.position_pipes),
            "B": list(self.value_pipes),
        }


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one operator-identity check, with both sides kept."""

    ok: bool
    lhs: Polynomial
    rhs: Polynomial
    covers: tuple[CoverContribution, ...]
    mismatches: tuple[tuple[Monomial, int, int], ...]

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "lhs": self.lhs.to_json_obj(),
            "rhs": self.rhs.to_json_obj(),
            "covers": [c.to_json_obj() for c in self.covers],
            "mismatches": [
                {"monomial": m.to_text(), "lhs": lc, "rhs": rc}
                for m, lc, rc in self.mismatches
            ],
        }


def _mismatches(lhs: Polynomial, rhs: Polynomial):
    monos = set(lhs.terms) | set(rhs.terms)
    out = [
        (m, lhs.coefficient(m), rhs.coefficient(m))
        for m in monos
        if lhs.coefficient(m) != rhs.coefficient(m)
    ]
    return tuple(sorted(out, key=lambda item: item[0].key))


def verify_raising(w: Permutation, above: Permutation) -> IdentityReport:
    """Check that raising the padded polynomial expands over covers.

    The left side applies the raising operator; the right side sums, over
    covers ``t * w`` below ``above``, the cover's padded polynomial with
    coefficient ``1 + |position pipes| + |value pipes|``.
    """
    lhs = raising_op(padded_schubert_poly(w, above))
    rhs = Polynomial.zero()
    contributions = []
    for cover in covers_below(w, above):
        sets = between_sets(w, cover, above)
        coefficient = 1 + sets.total
        rhs = rhs + coefficient * padded_schubert_poly(cover.times(w), above)
        contributions.append(
            CoverContribution(
                cover,
                coefficient,
                tuple(sorted(sets.position)),
                tuple(sorted(sets.value)),
            )
        )
    bad = _mismatches(lhs, rhs)
    return IdentityReport(not bad, lhs, rhs, tuple(contributions), bad)


def verify_lowering(w: Permutation, above: Permutation) -> IdentityReport:
    """Check that lowering the padded polynomial expands over weak co-covers.

    The right side sums ``k`` times the padded polynomial of ``s_k * w``
    over all ``k`` with ``w^-1(k) > w^-1(k + 1)``.
    """
    if not above.is_dominant():
        raise ValueError(f"{above!r} is not dominant")
    if not weak_le(w, above):
        raise ValueError(f"{w!r} is not weakly below {above!r}")
    lhs = lowering_op(padded_schubert_poly(w, above))
    rhs = Polynomial.zero()
    contributions = []
    winv = w.inverse()
    for k in range(1, w.size):
        if winv(k) > winv(k + 1):
            t = Transposition(k, k + 1)
            rhs = rhs + k * padded_schubert_poly(t.times(w), above)
            contributions.append(CoverContribution(t, k, (), ()))
    bad = _mismatches(lhs, rhs)
    return IdentityReport(not bad, lhs, rhs, tuple(contributions), bad)


@dataclass(frozen=True)
class Sl2Report:
    ok: bool
    cases: int
    failures: tuple[str, ...]

    def to_json_obj(self) -> dict:
        return {"ok": self.ok, "cases": self.cases, "failures": list(self.failures)}


def verify_sl2(shape: Partition) -> Sl2Report:
    """Check the three commutator relations on every basis monomial.

    On the span of monomials with degree profile ``shape``: the commutator
    of raising and lowering is the weight operator (definitional here, but
    evaluated), commuting the weight operator past raising doubles it, and
    past lowering negates the double.  Raising and lowering must also
    preserve the degree profile.
    """
    failures = []
    cases = 0
    for mono in profile_basis(shape):
        cases += 1
        f = Polynomial.monomial(mono)
        rf, lf, wf = raising_op(f), lowering_op(f), weight_op(f)
        if raising_op(lowering_op(f)) - lowering_op(raising_op(f)) != wf:
            failures.append(f"[raise,lower] != weight at {mono.to_text()}")
        if weight_op(rf) - raising_op(wf) != 2 * rf:
            failures.append(f"[weight,raise] != 2*raise at {mono.to_text()}")
        if weight_op(lf) - lowering_op(wf) != -2 * lf:
            failures.append(f"[weight,lower] != -2*lower at {mono.to_text()}")
        if not (in_degree_profile(rf, shape) and in_degree_profile(lf, shape)):
            failures.append(f"profile not preserved at {mono.to_text()}")
    return Sl2Report(not failures, cases, tuple(failures))
