"""Alexander polynomials of L-space knots and their torsion coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class AlexanderPoly:
    """Symmetric Laurent polynomial stored by its non-negative half.

    ``half[j]`` is the coefficient a_j = a_{-j} of T^j for 0 <= j <= g.
    """

    half: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(a) for a in self.half)
        if not h:
            raise ValueError("empty polynomial")
        if h[-1] == 0 and len(h) > 1:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "half", h)

    @classmethod
    def from_laurent(cls, coeffs: Sequence[int]) -> "AlexanderPoly":
        """Build from the full list a_{-g}, ..., a_g."""
        c = list(coeffs)
        while len(c) > 1 and c[0] == 0 and c[-1] == 0:
            c = c[1:-1]
        if len(c) % 2 == 0 or c != c[::-1]:
            raise ValueError(f"not a symmetric Laurent polynomial: {coeffs}")
        return cls(tuple(c[len(c) // 2:]))

    @classmethod
    def parse(cls, text: str) -> "AlexanderPoly":
        """Read the comma-separated form "a_0,a_1,...,a_g"."""
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    @property
    def degree(self) -> int:
        return len(self.half) - 1

    def coeff(self, j: int) -> int:
        j = abs(j)
        return self.half[j] if j < len(self.half) else 0

    def laurent(self) -> tuple[int, ...]:
        return self.half[:0:-1] + self.half

    def __str__(self) -> str:
        return ",".join(map(str, self.half))


UNKNOT = AlexanderPoly((1,))
TREFOIL = AlexanderPoly((-1, 1))


def validate_lspace_form(poly: AlexanderPoly) -> bool:
    """Nonzero coefficients are +-1, alternate in sign, and a_g = 1."""
    nonzero = [a for a in reversed(poly.laurent()) if a]
    if not nonzero or nonzero[0] != 1:
        return False
    if any(abs(a) != 1 for a in nonzero):
        return False
    return all(a == -b for a, b in zip(nonzero, nonzero[1:]))


def torsion(poly: AlexanderPoly, i: int) -> int:
    """t_i = sum over j >= 1 of j * a_{|i| + j}."""
    i = abs(i)
    return sum(j * poly.coeff(i + j) for j in range(1, poly.degree - i + 1))


def torsion_profile(poly: AlexanderPoly) -> tuple[int, ...]:
    """(t_0, ..., t_g); every later coefficient is zero."""
    return tuple(torsion(poly, i) for i in range(poly.degree + 1))


def genus(poly: AlexanderPoly) -> int:
    return poly.degree


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    quo = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(quo) - 1, -1, -1):
        c, r = divmod(num[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError("division is not exact")
        quo[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    if any(num):
        raise ArithmeticError("division is not exact")
    return quo


def _binomial(n: int) -> list[int]:
    # coefficients of T^n - 1, lowest degree first
    return [-1] + [0] * (n - 1) + [1]


def torus_poly(r: int, s: int) -> AlexanderPoly:
    """(T^{rs} - 1)(T - 1) / ((T^r - 1)(T^s - 1)), recentred."""
    if r < 2 or s < 2:
        raise ValueError("torus knot parameters must be >= 2")
    if gcd(r, s) != 1:
        raise ValueError(f"r={r} and s={s} are not coprime")
    num = _poly_mul(_binomial(r * s), _binomial(1))
    den = _poly_mul(_binomial(r), _binomial(s))
    return AlexanderPoly.from_laurent(_poly_divexact(num, den))


def cable_genus(q: int, r: int, g_companion: int) -> int:
    """Genus of the (q, r)-cable of a genus g_companion knot.

    Uses 2g - 1 = qr + q(2 g_companion - 1) - r.
    """
    if q < 2 or r < 1:
        raise ValueError("need q >= 2 and r >= 1")
    if gcd(q, r) != 1:
        raise ValueError(f"q={q} and r={r} are not coprime")
    if g_companion < 0:
        raise ValueError("genus must be non-negative")
    twice = q * r + q * (2 * g_companion - 1) - r + 1
    if twice % 2:
        raise ValueError(f"parity violation: 2g = {twice}")
    return twice // 2


def cable_lspace_criterion(q: int, r: int, g_companion: int) -> bool:
    """Does the companion's r/q surgery stay in the L-space range?"""
    if q < 2:
        raise ValueError("need q >= 2")
    return q * (2 * g_companion - 1) < r
