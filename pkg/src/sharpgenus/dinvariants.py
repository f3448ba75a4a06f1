"""Correction terms of integer surgeries and the characteristic covector test.

Spin^c structures on p-surgery are labelled by residues i mod p.  All
values are exact fractions with denominator dividing 4p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .alexander import AlexanderPoly, torsion, validate_lspace_form
from .changemaker import Changemaker
from .lattice import inner_product


def _as_changemaker(sigma) -> Changemaker:
    return sigma if isinstance(sigma, Changemaker) else Changemaker(tuple(sigma))


def spinc_label(c: Sequence[int], sigma: Changemaker | Sequence[int],
                p: Optional[int] = None) -> int:
    """i with <c, sigma> + p = 2i (mod 2p)."""
    s = tuple(sigma)
    if p is None:
        p = sum(x * x for x in s)
    v = inner_product(c, s) + p
    if v % 2:
        raise ValueError("<c, sigma> + p is odd; c is not characteristic here")
    return (v // 2) % p


def reduce_label(p: int, i: int) -> int:
    """Representative of i mod p with absolute value at most p/2."""
    i %= p
    return min(i, p - i)


def d_unknot(p: int, i: int) -> Fraction:
    """d(U_p, i) = ((2i - p)^2 - p) / (4p) for 0 <= i <= p."""
    if p < 1:
        raise ValueError("p must be positive")
    if not 0 <= i <= p:
        raise ValueError(f"label {i} outside [0, {p}]")
    return Fraction((2 * i - p) ** 2 - p, 4 * p)


def d_unknot_oracle(p: int, i: int) -> Fraction:
    """d(U_p, i) by maximising c^2 + 1 = 1 - v^2/p over the disk bundle.

    v runs over every pairing of a characteristic covector with the
    generator, v = 2i - p (mod 2p), inside |v| <= 10p; the maximum is
    -4 d(U_p, i).
    """
    best = None
    for v in range(-10 * p, 10 * p + 1):
        if (v - (2 * i - p)) % (2 * p):
            continue
        value = 1 - Fraction(v * v, p)
        if best is None or value > best:
            best = value
    return -best / 4


def d_lspace_surgery(p: int, i: int, poly: AlexanderPoly) -> Fraction:
    """d(K_p, i) = d(U_p, i) - 2 t_{i'} with i' the reduced label."""
    if not validate_lspace_form(poly):
        raise ValueError(f"{poly} is not the Alexander polynomial of an L-space knot")
    return d_unknot(p, i) - 2 * torsion(poly, reduce_label(p, i))


@dataclass
class CovectorCheckReport:
    """Outcome of checking c^2 + (n+1) <= -8 t_i over a box of covectors.

    ``witnesses[i]`` holds a covector attaining equality for label i, or
    None when the box holds none; absence inside a finite box is evidence
    only, since the set of characteristic covectors is infinite.
    """

    p: int
    box: int
    violations: list[tuple[tuple[int, ...], int, int, int]] = field(default_factory=list)
    witnesses: dict[int, Optional[tuple[int, ...]]] = field(default_factory=dict)

    @property
    def obstructed(self) -> bool:
        return bool(self.violations)

    @property
    def sharp_evidence(self) -> bool:
        return all(w is not None for w in self.witnesses.values())

    @property
    def caveat(self) -> Optional[str]:
        missing = [i for i, w in self.witnesses.items() if w is None]
        if not missing:
            return None
        return (f"no equality witness with |c_j| <= {self.box} for labels {missing}; "
                "a larger box may still contain one")


def lemma_c_check(sigma: Changemaker | Sequence[int], poly: AlexanderPoly,
                  box: int = 3) -> CovectorCheckReport:
    """Test every characteristic c with |c_j| <= box against the torsion.

    Each violation is recorded as (c, label, c^2 + n + 1, -8 t_label).
    """
    cm = _as_changemaker(sigma)
    if not validate_lspace_form(poly):
        raise ValueError(f"{poly} is not the Alexander polynomial of an L-space knot")
    if box < 1:
        raise ValueError("box must be at least 1")
    p, s = cm.norm, cm.sigma
    rank = len(s)
    odd = [x for x in range(-box, box + 1) if x % 2]
    report = CovectorCheckReport(p=p, box=box, witnesses={i: None for i in range(p)})
    tors = {i: torsion(poly, reduce_label(p, i)) for i in range(p)}
    for c in product(odd, repeat=rank):
        i = spinc_label(c, s, p)
        lhs = inner_product(c, c) + rank
        rhs = -8 * tors[i]
        if lhs > rhs:
            report.violations.append((c, i, lhs, rhs))
        elif lhs == rhs and report.witnesses[i] is None:
            report.witnesses[i] = c
    return report


def sign_vector_pairings(sigma: Changemaker | Sequence[int]) -> set[int]:
    """Every value of <c, sigma> as c ranges over {+-1}^(n+1)."""
    reach = {0}
    for x in sigma:
        reach = {r + x for r in reach} | {r - x for r in reach}
    return {-r for r in reach}


def max_genus_from_sign_vectors(sigma: Changemaker | Sequence[int]) -> int:
    """Largest g with 2g <= <c, sigma> + p for every sign covector c."""
    cm = _as_changemaker(sigma)
    return (min(sign_vector_pairings(cm)) + cm.norm) // 2
