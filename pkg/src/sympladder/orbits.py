"""Block involutions of a composition and the admissible-orbit data attached to them.

Blocks are numbered from 1.  An involution is stored as the tuple
``(tau(1), ..., tau(k))``.
"""
from __future__ import annotations

from dataclasses import dataclass


class InvalidInvolution(ValueError):
    pass


class InvalidRange(ValueError):
    pass


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts or any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive integers, got {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class BlockInvolution:
    tau: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.tau[i - 1]

    def cycles(self) -> list[tuple[int, int]]:
        return [(i, t) for i, t in enumerate(self.tau, start=1) if i < t]

    def __repr__(self):
        cyc = "".join(f"({i} {j})" for i, j in self.cycles())
        return cyc or "e"


@dataclass(frozen=True)
class OrbitRep:
    composition: Composition
    tau: BlockInvolution
    blocks: tuple[tuple[int, int], ...]  # (row, column) of each J_{n_i} block

    def marker(self, row: int, col: int) -> str | None:
        return f"J_{self.composition.parts[col - 1]}" if (row, col) in self.blocks else None

    def matrix(self) -> list[list[int]]:
        k = self.composition.k
        return [[int((r, c) in self.blocks) for c in range(1, k + 1)] for r in range(1, k + 1)]


def _as_composition(alpha) -> Composition:
    return alpha if isinstance(alpha, Composition) else Composition(tuple(alpha))


def _as_involution(tau) -> BlockInvolution:
    return tau if isinstance(tau, BlockInvolution) else BlockInvolution(tuple(tau))


def validate(alpha, tau) -> tuple[Composition, BlockInvolution]:
    alpha, tau = _as_composition(alpha), _as_involution(tau)
    k = alpha.k
    if len(tau.tau) != k or sorted(tau.tau) != list(range(1, k + 1)):
        raise InvalidInvolution(f"{tau.tau} is not a permutation of 1..{k}")
    for i in range(1, k + 1):
        if tau(tau(i)) != i:
            raise InvalidInvolution(f"{tau.tau} is not an involution")
        if alpha.parts[tau(i) - 1] != alpha.parts[i - 1]:
            raise InvalidInvolution(f"{tau!r} swaps blocks of different sizes in {alpha.parts}")
    return alpha, tau


def s2_of(alpha) -> list[BlockInvolution]:
    """Involutions of the blocks that only swap blocks of equal size.

    Built by deciding the smallest undecided block first: fixed, or swapped
    with a later block of the same size.  Fixed-first gives a deterministic
    order starting with the identity.
    """
    alpha = _as_composition(alpha)
    parts = alpha.parts
    k = len(parts)
    out = []
    tau = [0] * k

    def rec(i: int):
        while i < k and tau[i]:
            i += 1
        if i == k:
            out.append(BlockInvolution(tuple(tau)))
            return
        tau[i] = i + 1
        rec(i + 1)
        tau[i] = 0
        for j in range(i + 1, k):
            if not tau[j] and parts[j] == parts[i]:
                tau[i], tau[j] = j + 1, i + 1
                rec(i + 1)
                tau[i] = tau[j] = 0

    rec(0)
    return out


def admissible_rep(alpha, tau) -> OrbitRep:
    """Block pattern of the representative: ``J_{n_i}`` in block ``(tau(i), i)``."""
    alpha, tau = validate(alpha, tau)
    blocks = tuple((tau(i), i) for i in range(1, alpha.k + 1))
    return OrbitRep(alpha, tau, blocks)


def character_exponents(alpha, tau) -> tuple[int, ...]:
    """Exponent of ``|Nrd(g_i)|`` in the modular-character ratio on the stabiliser.

    Only the smaller index of each swapped pair carries an exponent (1); the
    partner block is determined by it and fixed blocks contribute nothing.
    """
    alpha, tau = validate(alpha, tau)
    return tuple(int(i < tau(i)) for i in range(1, alpha.k + 1))


def maximal_parabolic_exponent(n: int, k: int, r: int) -> int:
    """Exponent of ``|Nrd(g)|`` on the ``G_r`` factor for the orbit with radical of dimension ``r``
    in ``P_{k,n-k} \\ G``."""
    if not (0 <= r <= k <= n - k):
        raise InvalidRange(f"need 0 <= r <= k <= n - k, got n={n}, k={k}, r={r}")
    return -(n - 2 * r + 1)

