"""Exact sparse polynomials in two families of variables ``x_i`` and ``y_i``.

Coefficients are Python integers, so overflow is never a correctness
question.  Monomials are stored as sorted ``(index, exponent)`` pairs with
no zero exponents; polynomials as monomial-to-coefficient maps with no zero
coefficients.  The canonical term order is lexicographic on the pair of
exponent tuples, which makes text and JSON serialization deterministic.

The raising operator substitutes one ``y_i`` by ``x_i`` (with multiplicity)
and sums over ``i``; the lowering operator is the mirror image; the weight
operator is their commutator.  On the span of monomials with per-index
degree profile ``shape`` these are the standard sl2 raising, lowering and
weight actions.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .perm import Partition, Permutation, weak_le
from .pipedream import PipeDream, dominated_positions, pipe_dreams

__all__ = [
    "Monomial",
    "Polynomial",
    "schubert_poly",
    "padded_schubert_poly",
    "padded_by_homogenization",
    "raising_op",
    "lowering_op",
    "weight_op",
    "in_degree_profile",
    "profile_basis",
]

ExpTuple = tuple[tuple[int, int], ...]


def _normalize(exps: Mapping[int, int] | Iterable[tuple[int, int]]) -> ExpTuple:
    items = exps.items() if isinstance(exps, Mapping) else exps
    merged: dict[int, int] = {}
    for idx, e in items:
        if idx < 1:
            raise ValueError(f"variable index must be >= 1, got {idx}")
        merged[idx] = merged.get(idx, 0) + e
    if any(e < 0 for e in merged.values()):
        raise ValueError("negative exponent")
    return tuple(sorted((i, e) for i, e in merged.items() if e))


class Monomial:
    """A product ``x^alpha * y^beta`` with finitely many variables."""

    __slots__ = ("xexp", "yexp")

    def __init__(self, xexp=(), yexp=()):
        self.xexp: ExpTuple = _normalize(xexp)
        self.yexp: ExpTuple = _normalize(yexp)

    @classmethod
    def from_rows(cls, xrows: Iterable[int], yrows: Iterable[int]) -> "Monomial":
        """Monomial from multisets of row indices, one variable per element."""
        return cls(((i, 1) for i in xrows), ((i, 1) for i in yrows))

    def xdeg(self, i: int) -> int:
        return dict(self.xexp).get(i, 0)

    def ydeg(self, i: int) -> int:
        return dict(self.yexp).get(i, 0)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.xexp + other.xexp, self.yexp + other.yexp)

    def shift_y_to_x(self, i: int) -> "Monomial":
        """Divide by ``y_i`` and multiply by ``x_i``."""
        return Monomial(self.xexp + ((i, 1),), self.yexp + ((i, -1),))

    def shift_x_to_y(self, i: int) -> "Monomial":
        return Monomial(self.xexp + ((i, -1),), self.yexp + ((i, 1),))

    @property
    def key(self) -> tuple[ExpTuple, ExpTuple]:
        return (self.xexp, self.yexp)

    def to_text(self) -> str:
        factors = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in self.xexp]
        factors += [f"y{i}" + (f"^{e}" if e > 1 else "") for i, e in self.yexp]
        return "*".join(factors) if factors else "1"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Monomial)
            and self.xexp == other.xexp
            and self.yexp == other.yexp
        )

    def __hash__(self) -> int:
        return hash((self.xexp, self.yexp))

    def __repr__(self) -> str:
        return f"Monomial({self.to_text()!r})"


_ONE = Monomial()


class Polynomial:
    """An integer linear combination of monomials; treated as immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mono, coeff in items:
            new = acc.get(mono, 0) + coeff
            if new:
                acc[mono] = new
            else:
                acc.pop(mono, None)
        self.terms = acc

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def monomial(cls, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return cls({mono: coeff} if coeff else {})

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls.monomial(_ONE, value)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda item: item[0].key)

    def coefficient(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(itertools.chain(self.terms.items(), other.terms.items()))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __rmul__(self, scalar: int) -> "Polynomial":
        if not isinstance(scalar, int):
            return NotImplemented
        return Polynomial({m: scalar * c for m, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            body = mono.to_text()
            if body == "1":
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts)

    def to_json_obj(self) -> list[dict]:
        return [
            {
                "coeff": coeff,
                "x": {str(i): e for i, e in mono.xexp},
                "y": {str(i): e for i, e in mono.yexp},
            }
            for mono, coeff in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def raising_op(f: Polynomial) -> Polynomial:
    """Replace one ``y_i`` by ``x_i`` with multiplicity, summed over ``i``."""
    out: dict[Monomial, int] = {}
    for mono, coeff in f.terms.items():
        for i, e in mono.yexp:
            shifted = mono.shift_y_to_x(i)
            new = out.get(shifted, 0) + coeff * e
            if new:
                out[shifted] = new
            else:
                del out[shifted]
    return Polynomial(out)


def lowering_op(f: Polynomial) -> Polynomial:
    """Replace one ``x_i`` by ``y_i`` with multiplicity, summed over ``i``."""
    out: dict[Monomial, int] = {}
    for mono, coeff in f.terms.items():
        for i, e in mono.xexp:
            shifted = mono.shift_x_to_y(i)
            new = out.get(shifted, 0) + coeff * e
            if new:
                out[shifted] = new
            else:
                del out[shifted]
    return Polynomial(out)


def weight_op(f: Polynomial) -> Polynomial:
    """The commutator of raising and lowering."""
    return raising_op(lowering_op(f)) - lowering_op(raising_op(f))


def in_degree_profile(f: Polynomial, shape: Partition) -> bool:
    """True when every monomial has ``xdeg_i + ydeg_i == shape[i]`` for all ``i``."""
    for mono in f.terms:
        degrees: dict[int, int] = {}
        for i, e in mono.xexp:
            degrees[i] = degrees.get(i, 0) + e
        for i, e in mono.yexp:
            degrees[i] = degrees.get(i, 0) + e
        if any(i > len(shape) for i in degrees):
            return False
        if any(degrees.get(i, 0) != shape.part(i) for i in range(1, len(shape) + 1)):
            return False
    return True


def profile_basis(shape: Partition) -> Iterator[Monomial]:
    """All monomials with per-index degree profile ``shape``."""
    ranges = [range(p + 1) for p in shape.parts]
    for choice in itertools.product(*ranges):
        yield Monomial(
            ((i, a) for i, a in enumerate(choice, start=1)),
            ((i, p - a) for (i, a), p in zip(enumerate(choice, start=1), shape.parts)),
        )


@lru_cache(maxsize=None)
def schubert_poly(w: Permutation) -> Polynomial:
    """Generating function of the pipe dreams of ``w``, weighted by cross rows.

    >>> schubert_poly(Permutation([3, 4, 2, 1])).to_text()
    'x1^2*x2^2*x3'
    """
    return Polynomial(
        (Monomial.from_rows((i for (i, _) in pd.crosses), ()), 1)
        for pd in pipe_dreams(w)
    )


def _padded_uncached(w: Permutation, above: Permutation) -> Polynomial:
    if not above.is_dominant():
        raise ValueError(f"{above!r} is not dominant")
    if not weak_le(w, above):
        raise ValueError(f"{w!r} is not weakly below {above!r}")
    terms = []
    for pd in pipe_dreams(w):
        dominated = dominated_positions(pd, above).positions
        terms.append(
            (
                Monomial.from_rows(
                    (i for (i, _) in pd.crosses),
                    (i for (i, _) in dominated - pd.crosses),
                ),
                1,
            )
        )
    return Polynomial(terms)


@lru_cache(maxsize=None)
def padded_schubert_poly(w: Permutation, above: Permutation) -> Polynomial:
    """Padded Schubert polynomial via dominated bump weights.

    Each pipe dream contributes ``x`` variables for cross rows and ``y``
    variables for the rows of its dominated bumps.  ``above`` must be
    dominant with ``w`` weakly below it.
    """
    return _padded_uncached(w, above)


def padded_by_homogenization(w: Permutation, above: Permutation) -> Polynomial:
    """Pad each Schubert monomial ``x^alpha`` with ``y^(shape - alpha)``.

    Independent route to the same polynomial as :func:`padded_schubert_poly`;
    raises when some exponent exceeds the shape (which signals that ``w`` is
    not weakly below ``above``).
    """
    if not above.is_dominant():
        raise ValueError(f"{above!r} is not dominant")
    shape = Partition(above.code())
    terms = []
    for mono, coeff in schubert_poly(w).terms.items():
        ypairs = []
        for i in range(1, len(shape) + 1):
            gap = shape.part(i) - mono.xdeg(i)
            if gap < 0:
                raise ValueError(f"monomial {mono!r} does not divide the shape {shape!r}")
            if gap:
                ypairs.append((i, gap))
        if any(i > len(shape) for i, _ in mono.xexp):
            raise ValueError(f"monomial {mono!r} does not divide the shape {shape!r}")
        terms.append((Monomial(mono.xexp, ypairs), coeff))
    return Polynomial(terms)
