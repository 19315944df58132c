"""Good decompositions and symplectic multisegments.

Indices are 1-based pairs ``(i, j)``: ``i`` is the position of a segment in
the order, ``j`` counts its pieces from the top down.  ``(i1, j1) << (i2, j2)``
means ``i1 < i2``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .core import (
    Line,
    Multisegment,
    OrderedMultisegment,
    Segment,
    SegmentError,
    seg,
    shift,
    speh_halve,
    standard_orders,
)

Index = tuple[int, int]


class NotStandardOrder(SegmentError):
    pass


class DistinguishedLineUnsupported(SegmentError):
    """Good decompositions with fixed points are not modelled."""


def compositions(n: int) -> list[tuple[int, ...]]:
    """Compositions of ``n``, ordered by number of parts then lexicographically."""
    out = []
    for k in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            out.append(tuple(bounds[t + 1] - bounds[t] for t in range(k)))
    return out


def decompose(d: Segment, parts: Sequence[int]) -> tuple[Segment, ...]:
    """Top-down decomposition of ``d`` into pieces of the given lengths."""
    pieces = []
    top = d.b
    for p in parts:
        pieces.append(Segment(d.line, top - p + 1, top))
        top -= p
    return tuple(pieces)


@dataclass(frozen=True)
class DecomposedMultisegment:
    order: OrderedMultisegment
    pieces: tuple[tuple[Segment, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.pieces)

    def indices(self) -> list[Index]:
        return [(i + 1, j + 1) for i, row in enumerate(self.pieces) for j in range(len(row))]

    def piece(self, idx: Index) -> Segment:
        return self.pieces[idx[0] - 1][idx[1] - 1]

    def is_valid(self) -> bool:
        if len(self.pieces) != len(self.order):
            return False
        for d, row in zip(self.order, self.pieces):
            if not row or row[0].b != d.b or row[-1].a != d.a:
                return False
            if any(row[j + 1].b != row[j].a - 1 for j in range(len(row) - 1)):
                return False
        return True


@dataclass(frozen=True)
class GoodDecomposition:
    decomposition: DecomposedMultisegment
    pairs: tuple[tuple[Index, Index], ...]  # each pair (x, y) has x before y
    _tau: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        tau = {}
        for x, y in self.pairs:
            tau[x], tau[y] = y, x
        object.__setattr__(self, "_tau", tau)

    def tau(self, idx: Index) -> Index:
        return self._tau.get(idx, idx)


def check_good_decomposition(gd: GoodDecomposition) -> list[str]:
    """Independent re-check; returns the list of violated conditions."""
    dec = gd.decomposition
    problems = []
    if not dec.is_valid():
        problems.append("pieces do not decompose the ordered segments")
    idx = dec.indices()
    if sorted(x for p in gd.pairs for x in p) != sorted(idx):
        problems.append("involution is not a fixed-point-free perfect pairing of the index set")
        return problems
    for x in idx:
        if gd.tau(gd.tau(x)) != x:
            problems.append(f"tau is not an involution at {x}")
        if gd.tau(x) == x:
            problems.append(f"tau fixes {x}")
    for i, row in enumerate(dec.pieces, start=1):
        for j in range(1, len(row)):
            if not gd.tau((i, j + 1))[0] < gd.tau((i, j))[0]:
                problems.append(f"row condition fails at {(i, j)}")
    for x in idx:
        y = gd.tau(x)
        if x < y and dec.piece(x) != shift(dec.piece(y), 1):
            problems.append(f"piece {x} is not the shift of piece {y}")
    return problems


def _check_inputs(order: OrderedMultisegment) -> None:
    if order.line.sc_distinguished:
        raise DistinguishedLineUnsupported(
            f"line {order.line.label} has a distinguished supercuspidal; not supported")
    if not order.is_standard():
        raise NotStandardOrder(f"{order!r} is not a standard order")


def _pairings(flat: list[Segment], rows: list[int]) -> Iterator[list[tuple[int, int]]]:
    """Fixed-point-free involutions on ``range(len(flat))`` meeting the shift and row conditions.

    Backtracks on the first unpaired index; the shift match prunes before the
    row condition is checked.
    """
    n = len(flat)
    if n % 2:
        return
    partner = [-1] * n
    # position of (i, j) in the flattened order, to find (i, j +- 1)
    nxt = [k + 1 if k + 1 < n and rows[k + 1] == rows[k] else -1 for k in range(n)]
    prv = [k - 1 if k > 0 and rows[k - 1] == rows[k] else -1 for k in range(n)]
    ups = [shift(d, 1) for d in flat]

    def row_ok(k: int) -> bool:
        # condition: row(tau(i, j+1)) < row(tau(i, j)) whenever both are known
        p = prv[k]
        if p >= 0 and partner[p] >= 0 and not rows[partner[k]] < rows[partner[p]]:
            return False
        q = nxt[k]
        if q >= 0 and partner[q] >= 0 and not rows[partner[q]] < rows[partner[k]]:
            return False
        return True

    def rec(start: int):
        x = start
        while x < n and partner[x] >= 0:
            x += 1
        if x == n:
            yield [(k, partner[k]) for k in range(n) if k < partner[k]]
            return
        for y in range(x + 1, n):
            if partner[y] >= 0 or flat[x] != ups[y]:
                continue
            partner[x], partner[y] = y, x
            if row_ok(x) and row_ok(y):
                yield from rec(x + 1)
            partner[x] = partner[y] = -1

    yield from rec(0)


def _iter_good(order: OrderedMultisegment) -> Iterator[GoodDecomposition]:
    choices = [compositions(d.length) for d in order]
    for shape in itertools.product(*choices):
        if sum(len(c) for c in shape) % 2:
            continue
        pieces = tuple(decompose(d, c) for d, c in zip(order, shape))
        dec = DecomposedMultisegment(order, pieces)
        idx = dec.indices()
        flat = [dec.piece(x) for x in idx]
        rows = [x[0] for x in idx]
        for pairing in _pairings(flat, rows):
            yield GoodDecomposition(dec, tuple((idx[x], idx[y]) for x, y in pairing))


def good_decompositions(order: OrderedMultisegment) -> list[GoodDecomposition]:
    """All good decompositions of a standard order (possibly none)."""
    _check_inputs(order)
    return list(_iter_good(order))


def has_good_decomposition(order: OrderedMultisegment) -> Optional[GoodDecomposition]:
    _check_inputs(order)
    return next(_iter_good(order), None)


def is_symplectic(m: Multisegment) -> bool:
    """Whether every standard order of ``m`` has a good decomposition."""
    if m.line.sc_distinguished:
        raise DistinguishedLineUnsupported(
            f"line {m.line.label} has a distinguished supercuspidal; not supported")
    return all(has_good_decomposition(o) is not None for o in standard_orders(m))


def enumerate_multisegments(line: Line, max_segs: int, lo: int, hi: int,
                            max_len: Optional[int] = None) -> Iterator[Multisegment]:
    """Every multisegment with at most ``max_segs`` segments supported in ``[lo, hi]``."""
    segs = [seg(line, a, b) for a in range(lo, hi + 1) for b in range(a, hi + 1)
            if max_len is None or b - a + 1 <= max_len]
    for t in range(max_segs + 1):
        for combo in itertools.combinations_with_replacement(segs, t):
            yield Multisegment(line, combo)


@dataclass
class SpehImplicationReport:
    cases: int = 0
    symplectic: int = 0
    speh_type: int = 0
    both: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_speh_implication(max_segs: int = 3, lo: int = 0, hi: int = 3,
                            line: Optional[Line] = None) -> SpehImplicationReport:
    """Check that every symplectic multisegment in the window is of Speh type."""
    line = line or Line("rho", 1, False, True)
    rep = SpehImplicationReport()
    for m in enumerate_multisegments(line, max_segs, lo, hi):
        rep.cases += 1
        sym = is_symplectic(m)
        sp = speh_halve(m) is not None
        rep.symplectic += sym
        rep.speh_type += sp
        rep.both += sym and sp
        if sym and not sp:
            rep.counterexamples.append(m)
    return rep
