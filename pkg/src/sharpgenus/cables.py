"""Iterated (2, a)-cables of the unknot attaining the sharp genus bound.

Stage n is the (2, a_n)-cable of the (2, a_{n-1})-cable of ... of the
unknot, with a_{k+1} = 2 p_k + 1 and p_k = 2 a_k - 1 starting at p_0 = 0.
The surgery slope p_n equals (4^n - 1)/3 and the changemaker is
(1, 2, ..., 2^(n-1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .alexander import cable_genus
from .changemaker import Changemaker, sharp_genus
from .lattice import GramMatrix, gram, inner_product


@dataclass(frozen=True)
class CableStage:
    n: int
    cable_params: tuple[int, ...]  # a_1, ..., a_n
    p: int
    sigma: Changemaker
    genus: int

    @property
    def a(self) -> int:
        return self.cable_params[-1]

    @property
    def degenerate(self) -> bool:
        # stage 1 is the unknot with slope 1
        return self.n == 1

    @property
    def cables(self) -> tuple[tuple[int, int], ...]:
        return tuple((2, a) for a in self.cable_params)


def family(n: int) -> CableStage:
    if n < 1:
        raise ValueError("n must be at least 1")
    p, g = 0, 0
    params = []
    for _ in range(n):
        a = 2 * p + 1
        p = 2 * a - 1
        g = cable_genus(2, a, g)
        params.append(a)
    sigma = Changemaker(tuple(2 ** i for i in range(n)))
    return CableStage(n=n, cable_params=tuple(params), p=p, sigma=sigma, genus=g)


def linking_matrix(n: int) -> GramMatrix:
    """Chain of n - 1 unknots framed -5, neighbours linked twice."""
    if n < 2:
        raise ValueError("the link is empty for n < 2")
    k = n - 1
    return tuple(tuple(-5 if i == j else 2 if abs(i - j) == 1 else 0 for j in range(k))
                 for i in range(k))


def complement_chain(n: int) -> list[tuple[int, ...]]:
    """The vectors 2e_i - e_{i+1} spanning the complement of (1, 2, ..., 2^(n-1))."""
    return [tuple(2 if t == i else -1 if t == i + 1 else 0 for t in range(n))
            for i in range(n - 1)]


def verify_stage(stage: CableStage) -> bool:
    """Check the stage against its lattice picture, all in exact integers."""
    sigma = stage.sigma.sigma
    if stage.n >= 2:
        chain = complement_chain(stage.n)
        if gram(chain) != linking_matrix(stage.n):
            return False
        if any(inner_product(v, sigma) != 0 for v in chain):
            return False
    root = isqrt(3 * stage.p + 1)
    if root * root != 3 * stage.p + 1:
        return False
    if 2 * stage.genus - 1 != stage.p - root:
        return False
    return stage.sigma.norm == stage.p and sharp_genus(stage.sigma) == stage.genus
