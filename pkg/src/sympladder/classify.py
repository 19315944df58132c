"""Decisions on which ladder and unitary representations have a symplectic model.

Every verdict names the result that decides it.  Cases no result covers come
back ``UNDETERMINED``; nothing here extrapolates.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence, Union

from .core import (
    Line,
    Multisegment,
    NotALadder,
    OrderedMultisegment,
    Segment,
    is_ladder,
    meet_join,
    shift,
    speh_halve,
)
from .zelevinsky import mw_dual


class Status(enum.Enum):
    DISTINGUISHED = "Distinguished"
    NOT_DISTINGUISHED = "NotDistinguished"
    UNDETERMINED = "Undetermined"

    def __str__(self):
        return self.value


class PreconditionViolated(ValueError):
    pass


class InvalidFactor(ValueError):
    pass


# citation strings, by what each result says
LADDER_SPEH = "ladder criterion: Q(m) distinguished iff m = m' + nu m'"
STEINBERG = "Steinberg representations have no symplectic model"
SINGLE_SEGMENT = "Q([a,b]) with a < b over non-distinguished rho has no symplectic model"
POINT_TWIST = "nu^a rho is distinguished iff rho is"
SC_OPEN = "open case: the supercuspidal rho itself has a symplectic model"
ZELEVINSKY_PARITY = "Zelevinsky ladder criterion: even lengths, odd overlaps within each connected block"
NU_PAIR = "Q(nu D, D) has a symplectic model for a < b"
SPEH_EVEN = "Speh Sp(delta, s) with s even has a symplectic model"
SPEH_ODD = "Speh Sp(delta, s) with s odd is a ladder without a symplectic model"
HEREDITARY = "hereditary: a product of distinguished factors is distinguished"
NO_PRODUCT_RESULT = "no result decides a product with a non-distinguished factor"
UNITARY_FAMILY = "unitary family: even Speh, complementary series, distinguished supercuspidal, rank-3 principal series"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: str
    witness: Any = None
    witness_label: str = "m'"

    @property
    def distinguished(self) -> bool:
        return self.status is Status.DISTINGUISHED

    def __str__(self):
        return f"{self.status} ({self.reason})"


def _verdict(ok: bool, reason: str, witness=None) -> Verdict:
    return Verdict(Status.DISTINGUISHED if ok else Status.NOT_DISTINGUISHED, reason, witness)


def _ladder_order(m: Multisegment) -> OrderedMultisegment:
    order = is_ladder(m)
    if order is None:
        raise NotALadder(f"{m!r} is not a ladder")
    return order


def adjacent_nu_pairing(order: OrderedMultisegment) -> bool:
    """``Delta_{2i-1} = nu Delta_{2i}`` for all ``i``, with an even number of segments."""
    s = order.segments
    return len(s) % 2 == 0 and all(s[2 * i] == shift(s[2 * i + 1], 1) for i in range(len(s) // 2))


def connected_blocks(order: OrderedMultisegment) -> list[list[Segment]]:
    """Split a ladder where the union of two neighbours is not a segment."""
    s = order.segments
    if not s:
        return []
    blocks = [[s[0]]]
    for x, y in zip(s, s[1:]):
        if meet_join(x, y)[1] is None:
            blocks.append([y])
        else:
            blocks[-1].append(y)
    return blocks


def parity_conditions(order: OrderedMultisegment, blockwise: bool = True) -> bool:
    """Length parity test on a ladder order.

    Every segment has even length and every pair of neighbours meets in a
    segment of odd length.  With ``blockwise=False`` every neighbouring pair
    must also have a segment as union, which is the condition as usually
    stated; it misreads ladders whose pieces lie far apart, e.g. the dual of
    ``{[4],[3],[1],[0]}`` is ``{[3,4],[0,1]}``.  With ``blockwise=True`` the
    overlap test is only applied inside connected blocks.
    """
    s = order.segments
    if any(d.length % 2 for d in s):
        return False
    groups = connected_blocks(order) if blockwise else [list(s)]
    for g in groups:
        for x, y in zip(g, g[1:]):
            meet, join = meet_join(x, y)
            if meet is None or meet.length % 2 == 0 or join is None:
                return False
    return True


def classify_ladder_Q(m: Multisegment) -> Verdict:
    """Symplectic model of the ladder Langlands quotient ``Q(m)``."""
    _ladder_order(m)
    line = m.line
    if line.sc_distinguished:
        return Verdict(Status.UNDETERMINED, SC_OPEN)
    if len(m) == 1:
        (d,) = m.segments
        if d.length >= 2:
            return _verdict(False, STEINBERG if line.is_character else SINGLE_SEGMENT)
    half = speh_halve(m)
    return _verdict(half is not None, LADDER_SPEH, half)


def classify_ladder_Z(m: Multisegment) -> Verdict:
    """Symplectic model of ``Z(m)`` for a ladder ``m``, read off ``m`` directly."""
    order = _ladder_order(m)
    if m.line.sc_distinguished:
        return Verdict(Status.UNDETERMINED, SC_OPEN)
    return _verdict(parity_conditions(order, blockwise=True), ZELEVINSKY_PARITY)


def classify_ladder_Z_via_dual(m: Multisegment) -> Verdict:
    _ladder_order(m)
    return classify_ladder_Q(mw_dual(m))


def classify_single_segment(d: Segment) -> Verdict:
    line = d.line
    if d.length == 1:
        return _verdict(line.sc_distinguished, POINT_TWIST)
    if line.sc_distinguished:
        return Verdict(Status.UNDETERMINED, SC_OPEN)
    return _verdict(False, STEINBERG if line.is_character else SINGLE_SEGMENT)


def classify_nu_pair(d: Segment) -> Verdict:
    """``Q(nu D, D)``; needs ``a < b`` and a non-distinguished ``rho``."""
    if d.length < 2:
        raise PreconditionViolated(f"{d!r}: need a < b")
    if d.line.sc_distinguished:
        raise PreconditionViolated(f"line {d.line.label} has a distinguished supercuspidal")
    m = Multisegment(d.line, [shift(d, 1), d])
    via_ladder = classify_ladder_Q(m)
    if not via_ladder.distinguished:
        raise RuntimeError(f"ladder criterion disagrees on {m!r}")
    return Verdict(Status.DISTINGUISHED, NU_PAIR, via_ladder.witness)


def speh_ladder(base: Segment, s: int) -> Multisegment:
    """Segments ``nu^{(s-1)/2 - i} base`` for ``i = 0..s-1``."""
    if s < 1:
        raise ValueError("s must be positive")
    top = Fraction(s - 1, 2)
    return Multisegment(base.line, (shift(base, top - i) for i in range(s)))


def integral_translate(m: Multisegment) -> Multisegment:
    if not m.segments:
        return m
    frac = m.segments[0].a - (m.segments[0].a // 1)
    return m.shifted(-frac) if frac else m


def classify_speh(line: Line, base: Segment, s: int) -> Verdict:
    if base.line != line:
        raise ValueError(f"{base!r} is not on line {line.label}")
    if line.sc_distinguished:
        return Verdict(Status.UNDETERMINED, SC_OPEN)
    ladder = speh_ladder(base, s)
    even = s % 2 == 0
    check = classify_ladder_Q(integral_translate(ladder))
    if check.distinguished != even:
        raise RuntimeError(f"Speh parity and ladder criterion disagree for s={s}, base {base!r}")
    return Verdict(Status.DISTINGUISHED if even else Status.NOT_DISTINGUISHED,
                   SPEH_EVEN if even else SPEH_ODD, ladder, "ladder")


def product_distinguished(verdicts: Sequence[Verdict]) -> Verdict:
    if all(v.distinguished for v in verdicts):
        return Verdict(Status.DISTINGUISHED, HEREDITARY)
    return Verdict(Status.UNDETERMINED, NO_PRODUCT_RESULT)


# -- unitary building blocks ----------------------------------------------


@dataclass(frozen=True)
class Speh:
    line: Line
    base: Segment
    s: int

    def __post_init__(self):
        if not isinstance(self.s, int) or self.s < 1:
            raise InvalidFactor(f"Speh multiplicity must be a positive integer, got {self.s!r}")
        if self.base.line != self.line:
            raise InvalidFactor(f"{self.base!r} is not on line {self.line.label}")

    @property
    def rank(self) -> int:
        return self.s * self.line.r * self.base.length


@dataclass(frozen=True)
class Complementary:
    inner: Speh
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if not abs(self.alpha) < Fraction(1, 2):
            raise InvalidFactor(f"complementary series needs |alpha| < 1/2, got {self.alpha}")

    @property
    def line(self) -> Line:
        return self.inner.line

    @property
    def rank(self) -> int:
        return 2 * self.inner.rank


@dataclass(frozen=True)
class Supercuspidal:
    line: Line

    @property
    def rank(self) -> int:
        return self.line.r


@dataclass(frozen=True)
class PS3:
    """``chi_2 St_2 x chi_1`` on ``G_3``, with ``chi_2 St_2`` a quotient of ``nu^-1 chi_1 x nu chi_1``."""

    line: Line
    notes: str = field(default="", compare=False)

    @property
    def rank(self) -> int:
        return 3


UnitaryFactor = Union[Speh, Complementary, Supercuspidal, PS3]


def _factor_clause(f: UnitaryFactor) -> Optional[str]:
    """Reason the factor falls outside the family, or ``None`` if it matches."""
    if isinstance(f, Speh):
        if f.line.sc_distinguished:
            return SC_OPEN
        return None if f.s % 2 == 0 else "Speh factor with odd s is outside the family"
    if isinstance(f, Complementary):
        if f.inner.line.sc_distinguished:
            return SC_OPEN
        return None if f.inner.s % 2 == 0 else "complementary series around an odd Speh is outside the family"
    if isinstance(f, Supercuspidal):
        return None if f.line.sc_distinguished else "supercuspidal without symplectic model"
    if isinstance(f, PS3):
        return None
    raise InvalidFactor(f"not a unitary factor: {f!r}")


def unitary_family_member(factors: Sequence[UnitaryFactor]) -> Verdict:
    for f in factors:
        why = _factor_clause(f)
        if why is not None:
            return Verdict(Status.UNDETERMINED, f"{why}: {f!r}")
    return Verdict(Status.DISTINGUISHED, UNITARY_FAMILY)
