"""Zelevinsky dual ``m -> m^t`` by the Moeglin-Waldspurger procedure."""
from __future__ import annotations

from .core import MixedGrid, Multisegment, Segment, is_integral, precedes


def _check_grid(m: Multisegment) -> None:
    if not m.segments:
        return
    base = m.segments[0].a
    for d in m.segments:
        if not is_integral(d.a - base):
            raise MixedGrid(f"{m!r} mixes integral and half-integral exponents")


def mw_dual(m: Multisegment) -> Multisegment:
    """Return ``m^t``.

    Each round starts at the largest end, taking the shortest segment there,
    then walks down one end at a time, each time taking the shortest segment
    that ends one lower and precedes the last one taken.  The run of ends
    visited is one segment of the dual; every segment used loses its end.
    """
    _check_grid(m)
    line = m.line
    cur = [(d.a, d.b) for d in m.segments]
    dual = []
    while cur:
        top = max(b for _, b in cur)
        first = max((i for i, (_, b) in enumerate(cur) if b == top), key=lambda i: cur[i][0])
        chosen = [first]
        e = top
        while True:
            a_last = cur[chosen[-1]][0]
            cands = [
                i for i, (a, b) in enumerate(cur)
                if b == e - 1 and i not in chosen
                and precedes(Segment(line, a, b), Segment(line, a_last, e))
            ]
            if not cands:
                break
            chosen.append(max(cands, key=lambda i: cur[i][0]))
            e -= 1
        dual.append(Segment(line, e, top))
        for i in chosen:
            a, b = cur[i]
            cur[i] = (a, b - 1)
        cur = [(a, b) for a, b in cur if a <= b]
    return Multisegment(line, dual)
