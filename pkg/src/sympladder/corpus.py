"""Round-trip corpus for the text format.

``VALID_DOCUMENTS`` exercises every production at least once;
``ERROR_CASES`` pairs malformed text with the exception class it must raise.
"""
from __future__ import annotations

_HAND = [
    "line rho r=2 sc=no; [1,1]+[0,0] @ rho",
    "line rho r=1 sc=no dim>1\n[0,2] @ rho\n",
    "line rho r=1 sc=no\n0 @ rho\n",
    "line rho r=1 sc=yes\n[0] @ rho\n",
    "line rho r=1 sc=no nu=1\n[0,1]+[1,2] @ rho",
    "# only a comment\n",
    "",
    "line a r=3 sc=no\n",
    "line rho r=1 sc=no dim>1 # trailing comment\n[-1/2,1/2]+[1/2,3/2] @ rho",
    "line rho r=1 sc=no\n[-3/2] @ rho ; [1/2,5/2] @ rho",
    "line rho r=2 sc=no\nclassify-q: [0,0]+[1,1] @ rho",
    "line rho r=2 sc=no\nclassify-z: [0,1]+[2,3] @ rho",
    "line rho r=1 sc=no\ndual: [0,2] @ rho",
    "line rho r=1 sc=no\nis-symplectic: [0,1]+[1,2]+[1,2]+[2,3] @ rho",
    "line rho r=1 sc=no\nspeh-halve: 0 @ rho",
    "line rho r=1 sc=no\n[2]+[1]+[0]+[-1] @ rho",
    "line rho r=1 sc=no\n[-2,-1]+[-1,0] @ rho",
    "line rho r=1 sc=no\n[0,0]+[0,0]+[0,0] @ rho",
    "line rho r=2 sc=no\nline sigma r=1 sc=no dim>1\n[0] @ rho\n[0] @ sigma",
    "line rho r=2 sc=no\n[0] @ sigma\nline sigma r=1 sc=no",
    "line rho r=1 sc=no\nline rho r=1 sc=no\n[0] @ rho",
    "line rho r=1 sc=no\nunitary: Sp([0,1],2) @ rho",
    "line rho r=1 sc=no\nunitary: Sp([0],4) @ rho x Sp([-1/2,1/2],2) @ rho",
    "line rho r=1 sc=no\nunitary: Cp([0,0],2,3/10) @ rho",
    "line rho r=1 sc=no\nunitary: Cp([0,1],2,-1/4) @ rho",
    "line rho r=1 sc=no\nunitary: Cp([0],2,0) @ rho",
    "line rho r=1 sc=yes\nunitary: Sc @ rho",
    "line chi r=1 sc=no\nunitary: PS3 @ chi",
    'line chi r=1 sc=no\nunitary: PS3("chi2 St2 x chi1") @ chi',
    'line rho r=2 sc=no\nline sigma r=1 sc=yes\nline chi r=1 sc=no\n'
    'unitary: Sp([0,1],2) @ rho x Cp([0,0],2,3/10) @ rho x Sc @ sigma x PS3("x") @ chi',
    "line rho r=1 sc=no\nSp([0],1) @ rho",
    "line rho r=1 sc=no\n\n\n   [0]   +   [1]   @   rho   \n\n",
    "line rho r=1 sc=no;;;[0] @ rho;",
    "line rho r=1 sc=no\n\t[0,1]\t+\t[2,3] @ rho",
    "line rho_2 r=2 sc=no\n[0] @ rho_2",
    "line rho' r=1 sc=no\n[0] @ rho'",
    "line Rho9 r=9 sc=no\n[5/2,7/2] @ Rho9",
    "line rho r=1 sc=no\nkernel: [2,3]+[1,2]+[0,1] @ rho",
    "line rho r=1 sc=no\ngood-decomps: [1,2]+[0,1] @ rho",
    "line rho dim>1 sc=no r=1\n[0] @ rho",
]


def _generated() -> list[str]:
    out = []
    halves = ["-5/2", "-3/2", "-1/2", "1/2", "3/2", "5/2"]
    for i, a in enumerate(halves):
        b = halves[min(i + 2, len(halves) - 1)]
        out.append(f"line L{i} r={i + 1} sc={'yes' if i % 2 else 'no'}\n[{a},{b}]+[{a}] @ L{i}")
    for lo in range(-2, 3):
        segs = "+".join(f"[{x},{x + 1}]" for x in range(lo, lo + 3))
        out.append(f"line rho r=1 sc=no dim>1\nclassify-q: {segs} @ rho")
    for s in range(1, 5):
        out.append(f"line rho r=1 sc=no\nspeh: Sp([0,{s - 1}],{s}) @ rho")
    return out


VALID_DOCUMENTS: list[str] = _HAND + _generated()

ERROR_CASES: list[tuple[str, str]] = [
    ("[0,1]+[1,2] @ rho", "UnknownLine"),
    ("line rho r=1 sc=no nu=2; [0] @ rho", "S2LineRejected"),
    ("line rho r=1 sc=no\nunitary: Sp([0],2) @ tau", "UnknownLine"),
    ("line rho r=1; [0] @ rho", "ParseError"),
    ("line rho sc=no; [0] @ rho", "ParseError"),
    ("line rho r=1 sc=maybe", "ParseError"),
    ("line rho r=1 sc=no colour=red", "ParseError"),
    ("line rho r=1 sc=no r=2", "ParseError"),
    ("line rho r=1 sc=no nu=3", "ParseError"),
    ("line rho r=0 sc=no", "ParseError"),
    ("line rho r=1 sc=no\nline rho r=2 sc=no", "DuplicateLine"),
    ("line rho r=1 sc=no\n[0,1 @ rho", "ParseError"),
    ("line rho r=1 sc=no\n[0,1] rho", "ParseError"),
    ("line rho r=1 sc=no\n[0,1] @", "ParseError"),
    ("line rho r=1 sc=no\n[2,1] @ rho", "ParseError"),
    ("line rho r=1 sc=no\n[0,1/2] @ rho", "ParseError"),
    ("line rho r=1 sc=no\n[1/3] @ rho", "ParseError"),
    ("line rho r=1 sc=no\n[0]+ @ rho", "ParseError"),
    ("line rho r=1 sc=no\n[0] [1] @ rho", "ParseError"),
    ("line rho r=1 sc=no\n[0] @ rho $", "ParseError"),
    ("line rho r=1 sc=no\nunitary: Xx([0],2) @ rho", "ParseError"),
    ("line rho r=1 sc=no\nunitary: Cp([0],2,1/2) @ rho", "ParseError"),
    ("line rho r=1 sc=no\nunitary: Cp([0],2,1/0) @ rho", "ParseError"),
    ("line rho r=1 sc=no\nunitary: Sp([0],0) @ rho", "ParseError"),
    ("line rho r=1 sc=no\nunitary: Sp([0]) @ rho", "ParseError"),
    ('line rho r=1 sc=no\nunitary: PS3("open @ rho', "ParseError"),
    ("line rho r=1 sc=no\nunitary: Sc @ rho x", "ParseError"),
    ("line rho r=1 sc=no\n: [0] @ rho", "ParseError"),
    ("line rho r=1 sc=no\n1 @ rho", "ParseError"),
    ("line rho r=1 sc=no dim>2", "ParseError"),
]
