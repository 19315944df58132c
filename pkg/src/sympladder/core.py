"""Segments and multisegments on a single supercuspidal line.

Exponents are powers of ``nu`` and live on the half-integer grid, so that
Speh ladders ``nu^{(s-1)/2} delta x ... x nu^{-(s-1)/2} delta`` fit in the
same type as ordinary integral segments.  Everything here is immutable.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

ExponentLike = Union[int, str, Fraction]


class SegmentError(ValueError):
    """Base class for invalid segment input."""


class MixedLines(SegmentError):
    pass


class MixedGrid(SegmentError):
    """Exponent differences are not integral."""


class NotALadder(SegmentError):
    pass


class RankMismatch(SegmentError):
    pass


class Indivisible(SegmentError):
    """Some block size is not a multiple of the line rank (the Jacquet module vanishes)."""


def exponent(x: ExponentLike) -> Fraction:
    """Coerce ``x`` to a half-integer ``Fraction``.

    >>> exponent("3/2")
    Fraction(3, 2)
    """
    if isinstance(x, float):
        raise TypeError("float exponents are ambiguous; use int, Fraction or 'p/2'")
    v = Fraction(x)
    if v.denominator not in (1, 2):
        raise SegmentError(f"exponent {v} is not a half-integer")
    return v


def is_integral(x: Fraction) -> bool:
    return x.denominator == 1


@dataclass(frozen=True)
class Line:
    """An abstract supercuspidal line ``{nu^k rho}``.

    Only ``label`` takes part in equality; ``r`` is the rank of ``rho``
    (``rho`` is a representation of ``G_r``), ``sc_distinguished`` records
    whether ``rho`` itself has a symplectic model and ``dim_gt_one`` separates
    characters of ``G_1`` from higher-dimensional ``rho`` when ``r == 1``.
    """

    label: str
    r: int = field(default=1, compare=False)
    sc_distinguished: bool = field(default=False, compare=False)
    dim_gt_one: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"line rank must be a positive integer, got {self.r!r}")
        if not self.label:
            raise ValueError("line label must be non-empty")

    def same_as(self, other: "Line") -> bool:
        """Full structural equality, including the flags."""
        return (self.label, self.r, self.sc_distinguished, self.dim_gt_one) == (
            other.label, other.r, other.sc_distinguished, other.dim_gt_one)

    @property
    def is_character(self) -> bool:
        return self.r == 1 and not self.dim_gt_one


@dataclass(frozen=True, order=False)
class Segment:
    line: Line
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = exponent(self.a), exponent(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if a > b:
            raise SegmentError(f"segment [{a},{b}] is empty")
        if not is_integral(b - a):
            raise SegmentError(f"segment [{a},{b}] has non-integral length")

    @property
    def length(self) -> int:
        return int(self.b - self.a) + 1

    @property
    def key(self) -> tuple:
        return (self.a, self.b)

    def exponents(self) -> list[Fraction]:
        return [self.a + i for i in range(self.length)]

    def __repr__(self):
        return f"[{_fmt(self.a)},{_fmt(self.b)}]"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/2"


def seg(line: Line, a: ExponentLike, b: Optional[ExponentLike] = None) -> Segment:
    """Shorthand constructor; ``seg(L, a)`` is the point segment ``[a,a]``."""
    return Segment(line, exponent(a), exponent(a if b is None else b))


def shift(d: Segment, k: ExponentLike = 1) -> Segment:
    k = exponent(k)
    return Segment(d.line, d.a + k, d.b + k)


def precedes(d1: Segment, d2: Segment) -> bool:
    if d1.line != d2.line or not is_integral(d2.a - d1.a):
        return False
    return d1.a < d2.a and d1.b < d2.b and d1.b >= d2.a - 1


def linked(d1: Segment, d2: Segment) -> bool:
    return precedes(d1, d2) or precedes(d2, d1)


def _check_compatible(d1: Segment, d2: Segment) -> None:
    if d1.line != d2.line:
        raise MixedLines(f"{d1!r} and {d2!r} lie on different lines")
    if not is_integral(d2.a - d1.a):
        raise MixedGrid(f"{d1!r} and {d2!r} are on different exponent grids")


def meet_join(d1: Segment, d2: Segment) -> tuple[Optional[Segment], Optional[Segment]]:
    """Intersection and union of two segments, each ``None`` when not a segment."""
    _check_compatible(d1, d2)
    lo, hi = max(d1.a, d2.a), min(d1.b, d2.b)
    meet = Segment(d1.line, lo, hi) if lo <= hi else None
    join = Segment(d1.line, min(d1.a, d2.a), max(d1.b, d2.b)) if lo <= hi + 1 else None
    return meet, join


class Multisegment:
    """A finite multiset of segments on one line, kept sorted by ``(a, b)``."""

    __slots__ = ("line", "segments", "_hash")

    def __init__(self, line: Line, segments: Iterable[Segment] = ()):
        segs = tuple(sorted(segments, key=lambda d: d.key))
        for d in segs:
            if d.line != line:
                raise MixedLines(f"segment {d!r} is on line {d.line.label}, not {line.label}")
        self.line = line
        self.segments = segs
        self._hash = hash((line, segs))

    @classmethod
    def of(cls, line: Line, *pairs) -> "Multisegment":
        """``Multisegment.of(L, (0, 1), (1, 2), 3)``; a bare number is a point."""
        segs = []
        for p in pairs:
            if isinstance(p, Segment):
                segs.append(p)
            elif isinstance(p, tuple):
                segs.append(seg(line, *p))
            else:
                segs.append(seg(line, p))
        return cls(line, segs)

    def __eq__(self, other):
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.line == other.line and self.segments == other.segments

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.segments)

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.segments)

    def __add__(self, other: "Multisegment") -> "Multisegment":
        if self.line != other.line:
            raise MixedLines("cannot add multisegments on different lines")
        return Multisegment(self.line, self.segments + other.segments)

    def __repr__(self):
        body = "+".join(repr(d) for d in self.segments) or "0"
        return f"{body} @ {self.line.label}"

    def counter(self) -> Counter:
        return Counter(self.segments)

    def support(self) -> Counter:
        """Multiset of exponents covered, counted with multiplicity."""
        c: Counter = Counter()
        for d in self.segments:
            c.update(d.exponents())
        return c

    def shifted(self, k: ExponentLike = 1) -> "Multisegment":
        return Multisegment(self.line, (shift(d, k) for d in self.segments))


@dataclass(frozen=True)
class OrderedMultisegment:
    line: Line
    segments: tuple[Segment, ...]

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))
        for d in self.segments:
            if d.line != self.line:
                raise MixedLines(f"segment {d!r} is not on line {self.line.label}")

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __getitem__(self, i):
        return self.segments[i]

    def is_standard(self) -> bool:
        s = self.segments
        return not any(precedes(s[i], s[j]) for i in range(len(s)) for j in range(i + 1, len(s)))

    def is_ladder_order(self) -> bool:
        s = self.segments
        return all(s[i].a > s[i + 1].a and s[i].b > s[i + 1].b for i in range(len(s) - 1))

    def unordered(self) -> Multisegment:
        return Multisegment(self.line, self.segments)

    def __repr__(self):
        return "(" + ", ".join(repr(d) for d in self.segments) + ")"


def rank(m: Multisegment) -> int:
    return m.line.r * sum(d.length for d in m)


def _desc_key(d: Segment) -> tuple:
    return (-d.b, -d.a)


def standard_orders(m: Multisegment) -> list[OrderedMultisegment]:
    """All distinct standard orderings of ``m``.

    An ordering is standard when no earlier segment precedes a later one.
    Orders come out lexicographically in the ``(-e, -b)`` key of each
    position, so the decreasing-end order is always first.
    """
    counts = m.counter()
    distinct = sorted(counts, key=_desc_key)
    out: list[OrderedMultisegment] = []
    placed: list[Segment] = []

    def rec():
        if len(placed) == len(m):
            out.append(OrderedMultisegment(m.line, tuple(placed)))
            return
        for d in distinct:
            if counts[d] == 0 or any(precedes(p, d) for p in placed):
                continue
            counts[d] -= 1
            placed.append(d)
            rec()
            placed.pop()
            counts[d] += 1

    rec()
    return out


def is_ladder(m: Multisegment) -> Optional[OrderedMultisegment]:
    order = tuple(sorted(m, key=_desc_key))
    om = OrderedMultisegment(m.line, order)
    return om if om.is_ladder_order() else None


def speh_halve(m: Multisegment) -> Optional[Multisegment]:
    """Return ``m'`` with ``m = m' + nu m'``, or ``None``.

    Greedy: the ``(a, b)``-minimal remaining segment cannot be a ``nu``-shift
    of anything remaining, so it must belong to ``m'`` and consume one copy of
    its shift.
    """
    remaining = m.counter()
    half = []
    for d in m.segments:  # sorted by (a, b)
        if remaining[d] == 0:
            continue
        remaining[d] -= 1
        up = shift(d, 1)
        if remaining[up] == 0:
            return None
        remaining[up] -= 1
        half.append(d)
    return Multisegment(m.line, half)


class _Zero:
    """Marker for a vanishing kernel summand."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "Zero"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


def kernel_components(m: OrderedMultisegment) -> list:
    """Multisegments of the summands of the kernel of ``lambda(m) -> Q(m)``.

    For each adjacent pair of the ladder, ``Delta_i, Delta_{i+1}`` is replaced
    by ``[a_{i+1}, b_i]`` and ``[a_i, b_{i+1}]``.  The entry is ``ZERO`` when
    ``a_i > b_{i+1} + 1``; when ``a_i == b_{i+1} + 1`` the second segment is
    empty and is dropped.
    """
    if not m.is_ladder_order():
        raise NotALadder(f"{m!r} is not in ladder order")
    s = m.segments
    out: list = []
    for i in range(len(s) - 1):
        top, low = s[i], s[i + 1]
        if top.a > low.b + 1:
            out.append(ZERO)
            continue
        new = list(s[:i]) + [Segment(m.line, low.a, top.b)]
        if top.a <= low.b:
            new.append(Segment(m.line, top.a, low.b))
        new += s[i + 2:]
        out.append(Multisegment(m.line, new))
    return out


def jacquet_decomposition(d: Segment, parts: Sequence[int]) -> list[Segment]:
    """Split ``d`` top-down into blocks of ``G``-rank ``parts``.

    The first block ends at ``e(d)`` and each next one ends just below the
    previous beginning.
    """
    r = d.line.r
    if any(p <= 0 for p in parts):
        raise RankMismatch(f"parts must be positive, got {tuple(parts)}")
    if sum(parts) != r * d.length:
        raise RankMismatch(f"parts {tuple(parts)} do not sum to {r * d.length}")
    bad = [p for p in parts if p % r]
    if bad:
        raise Indivisible(f"parts {bad} are not multiples of r={r}")
    out = []
    top = d.b
    for p in parts:
        length = p // r
        out.append(Segment(d.line, top - length + 1, top))
        top -= length
    return out
