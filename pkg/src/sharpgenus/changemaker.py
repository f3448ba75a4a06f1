"""Changemaker vectors and the genus bounds they force.

A changemaker is a non-decreasing vector of non-negative integers from
which every amount between 0 and its total can be paid exactly, like a
purse of coins.  Equivalently each entry is at most one more than the sum
of the entries before it (the first entry included, so sigma_0 <= 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Sequence


def _check_sorted(sigma: Sequence[int]) -> tuple[int, ...]:
    s = tuple(int(x) for x in sigma)
    if any(x < 0 for x in s):
        raise ValueError(f"entries must be non-negative: {s}")
    if any(a > b for a, b in zip(s, s[1:])):
        raise ValueError(f"entries must be non-decreasing: {s}")
    return s


def is_changemaker(sigma: Sequence[int]) -> bool:
    s = _check_sorted(sigma)
    total = 0
    for x in s:
        if x > total + 1:
            return False
        total += x
    return True


def subset_sums_complete(sigma: Sequence[int]) -> bool:
    """Brute force: is every 0 <= k <= sum(sigma) a subset sum?"""
    if any(x < 0 for x in sigma):
        raise ValueError("entries must be non-negative")
    reach = 1
    for x in sigma:
        reach |= reach << x
    total = sum(sigma)
    full = (1 << (total + 1)) - 1
    return reach & full == full


@dataclass(frozen=True, order=True)
class Changemaker:
    sigma: tuple[int, ...]

    def __post_init__(self):
        s = _check_sorted(self.sigma)
        if not s:
            raise ValueError("a changemaker needs at least one entry")
        if not is_changemaker(s):
            raise ValueError(f"{s} is not a changemaker")
        object.__setattr__(self, "sigma", s)

    @property
    def norm(self) -> int:
        return sum(x * x for x in self.sigma)

    @property
    def l1(self) -> int:
        return sum(self.sigma)

    @property
    def has_zeros(self) -> bool:
        return self.sigma[0] == 0

    def __len__(self) -> int:
        return len(self.sigma)

    def __iter__(self):
        return iter(self.sigma)


def make_change(sigma: Changemaker | Sequence[int], k: int) -> tuple[int, ...]:
    """Indices S with sum(sigma[i] for i in S) == k, by greedy descent.

    Repeatedly takes the largest j with k >= sigma_0 + ... + sigma_{j-1} + 1
    and pays sigma_j.  The changemaker inequality keeps the remainder
    payable from the coins before j.
    """
    cm = sigma if isinstance(sigma, Changemaker) else Changemaker(tuple(sigma))
    s = cm.sigma
    if not 0 <= k <= cm.l1:
        raise ValueError(f"k={k} outside [0, {cm.l1}]")
    prefix = [0]
    for x in s:
        prefix.append(prefix[-1] + x)
    chosen = []
    top = len(s)
    while k > 0:
        j = max(i for i in range(top) if prefix[i] + 1 <= k)
        chosen.append(j)
        k -= s[j]
        top = j
    return tuple(sorted(chosen))


def _extensions(p: int, length: Optional[int]) -> list[tuple[int, ...]]:
    """Zero-free changemakers of norm p (optionally of one length), lexicographic."""
    out: list[int] = []
    found: list[tuple[int, ...]] = []

    def walk(total: int, left: int, last: int) -> None:
        if left == 0:
            if length is None or len(out) == length:
                found.append(tuple(out))
            return
        slots = None if length is None else length - len(out)
        if slots == 0:
            return
        hi = min(total + 1, isqrt(left))
        for v in range(last, hi + 1):
            rest = left - v * v
            if 0 < rest < v * v:
                continue  # the next entry would have to be smaller than v
            if slots is not None and slots * v * v > left:
                break
            out.append(v)
            walk(total + v, rest, v)
            out.pop()

    walk(0, p, 1)
    return found


def enumerate_changemakers(p: int, length: Optional[int] = None,
                           allow_zeros: bool = False) -> list[Changemaker]:
    """All changemakers of norm p in lexicographic order.

    With ``allow_zeros`` the vectors are padded with leading zeros to the
    requested ``length``; zeros can only lead, since entries are sorted.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if not allow_zeros:
        return [Changemaker(s) for s in _extensions(p, length)]
    if length is None:
        raise ValueError("allow_zeros needs a fixed length")
    found = []
    for k in range(1, length + 1):
        for s in _extensions(p, k):
            found.append((0,) * (length - k) + s)
    return [Changemaker(s) for s in sorted(found)]


def sharp_genus(sigma: Changemaker | Sequence[int]) -> int:
    """Genus forced by a sharp filling: (p - |sigma|_1) / 2."""
    cm = sigma if isinstance(sigma, Changemaker) else Changemaker(tuple(sigma))
    return (cm.norm - cm.l1) // 2


def bound_nonsharp(p: int) -> int:
    """Largest 2g - 1 allowed when the filling is merely negative definite."""
    if p < 1:
        raise ValueError("p must be positive")
    root = isqrt(p)
    ceil_root = root if root * root == p else root + 1
    return p - ceil_root - 1


def bound_sharp(p: int) -> int:
    """Largest odd x with x <= p - sqrt(3p + 1), decided in integers."""
    if p < 1:
        raise ValueError("p must be positive")
    x = p - isqrt(3 * p + 1)
    while x > p or (p - x) ** 2 < 3 * p + 1:
        x -= 1
    if x % 2 == 0:
        x -= 1
    return x


def l1_census(p_max: int, l1_cap: int) -> list[dict[int, int]]:
    """Count changemakers (no zeros) by norm and L1 norm.

    Entry ``p`` of the result maps each L1 value up to ``l1_cap`` to the
    number of changemakers of norm p attaining it, saturated at 2 so that
    "exactly one" stays distinguishable from "several".  Vectors whose L1
    norm passes the cap are dropped.

    The counts come from a forward sweep over states (norm, last entry)
    holding two bitmasks over the running sum: bit s of the first is set
    when at least one prefix reaches that state with sum s, of the second
    when at least two do.
    """
    mask = (1 << (l1_cap + 1)) - 1
    states: list[dict[int, list[int]]] = [dict() for _ in range(p_max + 1)]
    states[0][0] = [1, 0]
    for n in range(p_max + 1):
        for last, (one, two) in sorted(states[n].items()):
            lo = max(last, 1)
            v = lo
            while n + v * v <= p_max and v <= l1_cap:
                keep = ~((1 << (v - 1)) - 1)  # prefixes with sum >= v - 1
                s1 = ((one & keep) << v) & mask
                if s1:
                    s2 = ((two & keep) << v) & mask
                    slot = states[n + v * v].setdefault(v, [0, 0])
                    slot[1] |= s2 | (slot[0] & s1)
                    slot[0] |= s1
                v += 1
    census: list[dict[int, int]] = []
    for n in range(p_max + 1):
        one = two = 0
        for last, (a, b) in states[n].items():
            if last == 0:
                continue
            two |= b | (one & a)
            one |= a
        census.append({s: (2 if two >> s & 1 else 1)
                       for s in range(l1_cap + 1) if one >> s & 1})
    return census
