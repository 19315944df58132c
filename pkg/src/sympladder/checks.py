"""Exhaustive verification suites over bounded windows.

Each suite returns a ``SuiteResult`` counting cases and listing every case
that breaks the property.  The CLI ``verify`` command and the scripts in
``scripts/`` are thin wrappers around these.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .classify import (
    Status,
    adjacent_nu_pairing,
    classify_ladder_Q,
    classify_ladder_Z,
    classify_speh,
    parity_conditions,
)
from .core import Line, Multisegment, is_ladder, rank, seg, speh_halve
from .orbits import character_exponents, maximal_parabolic_exponent, s2_of
from .symplectic import enumerate_multisegments, verify_speh_implication
from .zelevinsky import mw_dual


@dataclass(frozen=True)
class Window:
    max_segs: int = 4
    lo: int = 0
    hi: int = 6
    max_len: Optional[int] = 3


LADDER_WINDOW = Window(4, 0, 6, 3)
MW_WINDOW = Window(4, 0, 4, None)
SPEH_IMPLICATION_WINDOW = Window(3, 0, 3, None)
RANK4_WINDOW = Window(4, -2, 3, None)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    note: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        s = f"{self.name}: {len(self.failures)} counterexamples / {self.cases} cases"
        return s + (f" ({self.note})" if self.note else "")


def default_line(**kw) -> Line:
    opts = dict(label="rho", r=1, sc_distinguished=False, dim_gt_one=True)
    opts.update(kw)
    return Line(**opts)


def ladders(line: Line, w: Window) -> Iterator[Multisegment]:
    """All ladders in the window; ladders never repeat a segment."""
    segs = [seg(line, a, b) for a in range(w.lo, w.hi + 1) for b in range(a, w.hi + 1)
            if w.max_len is None or b - a + 1 <= w.max_len]
    for t in range(1, w.max_segs + 1):
        for combo in itertools.combinations(segs, t):
            m = Multisegment(line, combo)
            if is_ladder(m) is not None:
                yield m


def _timed(fn: Callable[[], SuiteResult]) -> SuiteResult:
    t0 = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - t0
    return res


# -- suites ----------------------------------------------------------------


def rank4_expected(m: Multisegment) -> bool:
    """The rank-4 table as stated: Distinguished exactly on the listed shapes."""
    s = [(d.a, d.b) for d in sorted(m, key=lambda d: -d.b)]
    if m.line.r == 2:
        return len(s) == 2 and s[0] == (s[1][0] + 1,) * 2 and s[1][0] == s[1][1]
    if len(s) == 2:
        (a2, b2), (a1, b1) = s
        return b1 == a1 + 1 and (a2, b2) == (a1 + 1, a1 + 2)
    if len(s) == 4:
        a = s[2][0]
        return s == [(a + 2, a + 2), (a + 1, a + 1), (a, a), (a - 1, a - 1)]
    return False


def rank4_ladders(line: Line, w: Window = RANK4_WINDOW) -> Iterator[Multisegment]:
    for m in ladders(line, Window(w.max_segs, w.lo, w.hi, None)):
        if rank(m) == 4:
            yield m


def suite_rank4_table(w: Window = RANK4_WINDOW) -> SuiteResult:
    def run():
        res = SuiteResult("rank4-table")
        for line in (Line("rho2", 2, False, False), Line("mu", 1, False, True)):
            for m in rank4_ladders(line, w):
                res.cases += 1
                got = classify_ladder_Q(m).status
                want = Status.DISTINGUISHED if rank4_expected(m) else Status.NOT_DISTINGUISHED
                if got != want:
                    res.failures.append((m, str(got), str(want)))
        return res
    return _timed(run)


def suite_ladder_pairing(w: Window = LADDER_WINDOW) -> SuiteResult:
    def run():
        res = SuiteResult("ladder-pairing")
        for m in ladders(default_line(), w):
            res.cases += 1
            if (speh_halve(m) is not None) != adjacent_nu_pairing(is_ladder(m)):
                res.failures.append(m)
        return res
    return _timed(run)


def suite_dual_parity(w: Window = LADDER_WINDOW, blockwise: bool = False) -> SuiteResult:
    def run():
        res = SuiteResult("dual-parity-blockwise" if blockwise else "dual-parity")
        for m in ladders(default_line(), w):
            res.cases += 1
            dual = mw_dual(m)
            order = is_ladder(dual)
            if order is None:
                res.failures.append((m, "dual is not a ladder"))
            elif (speh_halve(m) is not None) != parity_conditions(order, blockwise=blockwise):
                res.failures.append((m, dual))
        return res
    return _timed(run)


def mw_law_violations(m: Multisegment) -> list[str]:
    dual = mw_dual(m)
    bad = []
    if mw_dual(dual) != m:
        bad.append("not an involution")
    if dual.support() != m.support():
        bad.append("support changed")
    if rank(dual) != rank(m):
        bad.append("rank changed")
    if is_ladder(m) is not None and is_ladder(dual) is None:
        bad.append("ladder mapped to non-ladder")
    return bad


def suite_mw_laws(w: Window = MW_WINDOW) -> SuiteResult:
    def run():
        res = SuiteResult("mw-laws")
        line = default_line()
        for m in enumerate_multisegments(line, w.max_segs, w.lo, w.hi, w.max_len):
            res.cases += 1
            bad = mw_law_violations(m)
            if bad:
                res.failures.append((m, bad))
        for a in range(w.lo, w.hi + 1):
            for b in range(a, w.hi + 1):
                res.cases += 1
                single = Multisegment(line, [seg(line, a, b)])
                points = Multisegment(line, [seg(line, x) for x in range(a, b + 1)])
                if mw_dual(single) != points or mw_dual(points) != single:
                    res.failures.append((single, "segment/point duality"))
        return res
    return _timed(run)


def suite_speh_implication(w: Window = SPEH_IMPLICATION_WINDOW) -> SuiteResult:
    def run():
        rep = verify_speh_implication(w.max_segs, w.lo, w.hi, default_line())
        return SuiteResult("speh-implication", rep.cases, list(rep.counterexamples),
                           note=f"{rep.symplectic} symplectic, {rep.speh_type} of Speh type")
    return _timed(run)


def suite_speh_parity(max_s: int = 6, max_len: int = 3) -> SuiteResult:
    def run():
        res = SuiteResult("speh-parity")
        for line in (default_line(), Line("chi", 1, False, False), Line("rho2", 2, False, False)):
            for length in range(1, max_len + 1):
                base = seg(line, 0, length - 1)
                for s in range(1, max_s + 1):
                    res.cases += 1
                    try:
                        v = classify_speh(line, base, s)
                    except RuntimeError as exc:
                        res.failures.append((base, s, str(exc)))
                        continue
                    if v.distinguished != (s % 2 == 0):
                        res.failures.append((base, s, str(v.status)))
        return res
    return _timed(run)


INVOLUTION_NUMBERS = (1, 2, 4, 10, 26, 76)


def suite_orbits() -> SuiteResult:
    def run():
        res = SuiteResult("orbits")
        for k, want in enumerate(INVOLUTION_NUMBERS, start=1):
            res.cases += 1
            if len(s2_of((1,) * k)) != want:
                res.failures.append(("s2 count", k))
        for alpha in [(1,), (1, 1), (2, 1, 2), (1, 2, 1), (1, 1, 1, 1), (2, 2, 1, 2), (1, 1, 1, 1, 1)]:
            for tau in s2_of(alpha):
                res.cases += 1
                ex = character_exponents(alpha, tau)
                if sum(ex) != len(tau.cycles()) or any(ex[i - 1] != 1 for i, _ in tau.cycles()):
                    res.failures.append(("exponents", alpha, tau))
        for n in range(1, 11):
            for k in range(0, n // 2 + 1):
                for r in range(0, k + 1):
                    res.cases += 1
                    if maximal_parabolic_exponent(n, k, r) != -(n - 2 * r + 1):
                        res.failures.append(("parabolic", n, k, r))
        return res
    return _timed(run)


def suite_classifier_duality(w: Window = LADDER_WINDOW) -> SuiteResult:
    def run():
        res = SuiteResult("classifier-duality")
        for m in ladders(default_line(), w):
            res.cases += 1
            z = classify_ladder_Z(m).status
            q = classify_ladder_Q(mw_dual(m)).status
            if z != q:
                res.failures.append((m, str(z), str(q)))
        return res
    return _timed(run)


def suite_roundtrip() -> SuiteResult:
    from .textformat import DocumentError, parse, to_text
    from .corpus import ERROR_CASES, VALID_DOCUMENTS

    def run():
        res = SuiteResult("roundtrip")
        for text in VALID_DOCUMENTS:
            res.cases += 1
            doc = parse(text)
            canon = to_text(doc)
            if parse(canon) != doc or to_text(parse(canon)) != canon:
                res.failures.append(text)
        for text, exc_name in ERROR_CASES:
            res.cases += 1
            try:
                parse(text)
                res.failures.append((text, "accepted"))
            except DocumentError as exc:
                if type(exc).__name__ != exc_name:
                    res.failures.append((text, type(exc).__name__))
        return res
    return _timed(run)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "rank4-table": suite_rank4_table,
    "ladder-pairing": suite_ladder_pairing,
    "dual-parity": suite_dual_parity,
    "dual-parity-blockwise": lambda w=LADDER_WINDOW: suite_dual_parity(w, blockwise=True),
    "mw-laws": suite_mw_laws,
    "speh-implication": suite_speh_implication,
    "speh-parity": lambda w=None: suite_speh_parity(),
    "orbits": lambda w=None: suite_orbits(),
    "classifier-duality": suite_classifier_duality,
    "roundtrip": lambda w=None: suite_roundtrip(),
}
