"""Permutations of {1, 2, ...} with finite support, and integer partitions.

Everything is 1-based.  Permutations, partitions and transpositions are
immutable values: hashable, comparable, and safe to share between threads.
Positions in the plane are plain ``(row, column)`` tuples in matrix
coordinates (row 1 at the top, column 1 at the left).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

Position = tuple[int, int]


class Permutation:
    """A bijection of the positive integers fixing all but finitely many.

    Stored in one-line notation as the minimal window ``(w(1), ..., w(n))``;
    the identity has an empty window.  Points beyond the window are fixed.

    >>> w = Permutation([2, 1, 3])
    >>> w.window                    # trailing fixed points are trimmed
    (2, 1)
    >>> w(1), w(2), w(99)
    (2, 1, 99)
    """

    __slots__ = ("window",)

    def __init__(self, window: Iterable[int] = ()):
        win = tuple(int(v) for v in window)
        if sorted(win) != list(range(1, len(win) + 1)):
            raise ValueError(f"not a permutation of [n] in one-line notation: {win}")
        while win and win[-1] == len(win):
            win = win[:-1]
        self.window = win

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """Parse comma-separated one-line notation, e.g. ``"2,1,3,6,7,5,4"``."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(part) for part in text.split(","))

    @classmethod
    def from_code(cls, code: Iterable[int]) -> "Permutation":
        """Rebuild a permutation from its Lehmer code.

        >>> Permutation.from_code((2, 2, 1)).window
        (3, 4, 2, 1)
        """
        cs = list(code)
        n = len(cs) + max(cs, default=0)
        available = list(range(1, n + 1))
        cs += [0] * (n - len(cs))
        window = []
        for c in cs:
            if c >= len(available):
                raise ValueError(f"invalid Lehmer code {tuple(code)}")
            window.append(available.pop(c))
        return cls(window)

    @property
    def size(self) -> int:
        """Length of the minimal window (0 for the identity)."""
        return len(self.window)

    def __call__(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"permutations act on positive integers, got {k}")
        return self.window[k - 1] if k <= len(self.window) else k

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(u * w)(k) = u(w(k))`` (apply ``w`` first)."""
        n = max(self.size, other.size)
        return Permutation(self(other(k)) for k in range(1, n + 1))

    def inverse(self) -> "Permutation":
        return _inverse(self)

    def length(self) -> int:
        """Coxeter length; equals the number of inversions."""
        win = self.window
        return sum(
            1
            for i in range(len(win))
            for j in range(i + 1, len(win))
            if win[i] > win[j]
        )

    def inversions(self) -> frozenset[Position]:
        """All pairs ``(i, j)`` with ``i < j`` and ``w(i) > w(j)``."""
        win = self.window
        return frozenset(
            (i + 1, j + 1)
            for i in range(len(win))
            for j in range(i + 1, len(win))
            if win[i] > win[j]
        )

    def coinversions(self, bound: int) -> frozenset[Position]:
        """All pairs ``(i, j)`` with ``i < j <= bound`` and ``w(i) < w(j)``.

        The full set is infinite, so the caller supplies the bound.
        """
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        return frozenset(
            (i, j)
            for i in range(1, bound + 1)
            for j in range(i + 1, bound + 1)
            if self(i) < self(j)
        )

    def diagram(self) -> frozenset[Position]:
        """The Rothe diagram ``{(i, j) : i < w^-1(j) and j < w(i)}``."""
        n = self.size
        inv = self.inverse()
        cells = frozenset(
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i < inv(j) and j < self(i)
        )
        if __debug__:
            image = frozenset((i, self(j)) for (i, j) in self.inversions())
            assert image == cells, "the two diagram characterizations disagree"
        return cells

    def code(self) -> tuple[int, ...]:
        """The Lehmer code ``c_i = #{j > i : w(j) < w(i)}``, window length.

        >>> Permutation([3, 4, 2, 1]).code()
        (2, 2, 1, 0)
        """
        win = self.window
        return tuple(
            sum(1 for j in range(i + 1, len(win)) if win[j] < win[i])
            for i in range(len(win))
        )

    def is_dominant(self) -> bool:
        """True when the Lehmer code is weakly decreasing (no 132 pattern)."""
        return _is_dominant(self)

    def to_string(self) -> str:
        return ",".join(str(v) for v in self.window) if self.window else "1"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.window == other.window

    def __hash__(self) -> int:
        return hash(self.window)

    def __lt__(self, other: "Permutation") -> "bool":
        return self.window < other.window

    def __repr__(self) -> str:
        return f"Permutation({list(self.window)!r})"


@lru_cache(maxsize=None)
def _inverse(w: Permutation) -> Permutation:
    win = w.window
    out = [0] * len(win)
    for pos, val in enumerate(win, start=1):
        out[val - 1] = pos
    return Permutation(out)


@lru_cache(maxsize=None)
def _is_dominant(w: Permutation) -> bool:
    code = w.code()
    decreasing = all(code[i] >= code[i + 1] for i in range(len(code) - 1))
    if __debug__:
        win = w.window
        has_132 = any(
            win[a] < win[c] < win[b]
            for a in range(len(win))
            for b in range(a + 1, len(win))
            for c in range(b + 1, len(win))
        )
        assert decreasing == (not has_132), "dominance criteria disagree"
    return decreasing


class Partition:
    """A weakly decreasing tuple of nonnegative integers, zeros trimmed.

    >>> Partition((5, 4, 4, 2, 2, 1, 0)).parts
    (5, 4, 4, 2, 2, 1)
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        if any(p < 0 for p in ps):
            raise ValueError(f"negative part in {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts must weakly decrease: {ps}")
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        self.parts = ps

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls()
        return cls(int(part) for part in text.split(","))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based), 0 beyond the last."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram.

        >>> Partition((2, 2, 1)).conjugate().parts
        (3, 2)
        """
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    def to_string(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition exchanging the values ``a < b``."""

    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got ({self.a}, {self.b})")

    def as_permutation(self) -> Permutation:
        window = list(range(1, self.b + 1))
        window[self.a - 1], window[self.b - 1] = self.b, self.a
        return Permutation(window)

    def times(self, w: Permutation) -> Permutation:
        """Left multiplication: swap the values ``a`` and ``b`` in ``w``."""
        n = max(w.size, self.b)
        out = []
        for k in range(1, n + 1):
            v = w(k)
            if v == self.a:
                v = self.b
            elif v == self.b:
                v = self.a
            out.append(v)
        return Permutation(out)


def dominant(shape: Partition) -> Permutation:
    """The dominant permutation whose Lehmer code is ``shape``.

    >>> dominant(Partition((2, 2, 1))).window
    (3, 4, 2, 1)
    """
    w = Permutation.from_code(shape.parts)
    assert w.is_dominant() and Partition(w.code()) == shape
    return w


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation ``n ... 2 1`` of ``S_n``."""
    return Permutation(range(n, 0, -1))


@lru_cache(maxsize=None)
def weak_le(w: Permutation, u: Permutation) -> bool:
    """Left weak order: containment of inversion sets.

    >>> weak_le(Permutation([1, 4, 3, 2]), Permutation([3, 4, 2, 1]))
    True
    """
    bound = max(w.size, u.size)
    result = all(
        u(i) > u(j)
        for i in range(1, bound + 1)
        for j in range(i + 1, bound + 1)
        if w(i) > w(j)
    )
    if __debug__:
        # Equivalent criterion: Inv(w^-1) contained in coInv(u w^-1).
        winv = w.inverse()
        sig = u * winv
        alt = all(
            sig(i) < sig(j)
            for i in range(1, bound + 1)
            for j in range(i + 1, bound + 1)
            if winv(i) > winv(j)
        )
        assert alt == result, "weak order criteria disagree"
    return result


def bruhat_covers(w: Permutation, bound: int) -> frozenset[Transposition]:
    """All ``t`` with values ``<= bound`` and ``length(t * w) == length(w) + 1``."""
    if bound < w.size:
        raise ValueError(f"bound {bound} smaller than window {w.size}")
    base = w.length()
    out = set()
    for a in range(1, bound + 1):
        for b in range(a + 1, bound + 1):
            t = Transposition(a, b)
            if t.times(w).length() == base + 1:
                out.add(t)
    return frozenset(out)


@lru_cache(maxsize=None)
def covers_below(w: Permutation, bound_perm: Permutation) -> tuple[Transposition, ...]:
    """Bruhat covers ``t * w`` of ``w`` that stay weakly below ``bound_perm``.

    ``bound_perm`` must be dominant and ``w`` weakly below it.  A cover
    ``t * w`` stays below exactly when ``(w^-1(a), w^-1(b))`` is an
    inversion of ``bound_perm``.
    """
    if not bound_perm.is_dominant():
        raise ValueError(f"{bound_perm!r} is not dominant")
    if not weak_le(w, bound_perm):
        raise ValueError(f"{w!r} is not weakly below {bound_perm!r}")
    bound = max(w.size, bound_perm.size)
    winv = w.inverse()
    out = []
    for t in sorted(bruhat_covers(w, bound)):
        keep = bound_perm(winv(t.a)) > bound_perm(winv(t.b))
        if __debug__:
            assert keep == weak_le(t.times(w), bound_perm), "cover criterion disagrees"
        if keep:
            out.append(t)
    return tuple(out)


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All permutations with window contained in ``[n]``, lexicographically."""
    for win in itertools.permutations(range(1, n + 1)):
        yield Permutation(win)


def dominant_permutations(n: int) -> list[Permutation]:
    """All dominant permutations with window contained in ``[n]``."""
    return [w for w in symmetric_group(n) if w.is_dominant()]


@lru_cache(maxsize=None)
def weak_interval_below(top: Permutation) -> tuple[Permutation, ...]:
    """All ``w`` with ``w <=_L top``, sorted by (length, window)."""
    members = [w for w in symmetric_group(top.size) if weak_le(w, top)]
    return tuple(sorted(members, key=lambda w: (w.length(), w.window)))


def partitions_of(total: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``total``, largest part first, in decreasing lex order."""
    if total == 0:
        yield Partition()
        return
    cap = total if largest is None else min(largest, total)
    for first in range(cap, 0, -1):
        for rest in partitions_of(total - first, first):
            yield Partition((first, *rest.parts))


def partitions_up_to(max_total: int) -> Iterator[Partition]:
    """All partitions with ``|shape| <= max_total``."""
    for total in range(max_total + 1):
        yield from partitions_of(total)
