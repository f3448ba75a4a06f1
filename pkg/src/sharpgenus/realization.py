"""Which lens spaces pass the changemaker complement test.

L(p, q) here is the oriented boundary of the linear plumbing on the
weights of p/q.  If it arises by p-surgery on a knot, its plumbing
lattice must be the orthogonal complement of a changemaker of norm p in
-Z^(n+1).  ``realize`` searches for that embedding; a negative answer
certifies that no knot has such a surgery.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional

from .changemaker import Changemaker, _extensions, enumerate_changemakers, sharp_genus
from .lattice import LinearLattice, Vector, find_chain, hj_expand


@dataclass(frozen=True)
class RealizationWitness:
    p: int
    q: int
    sigma: Changemaker
    chain: tuple[Vector, ...]
    weights: tuple[int, ...]  # order realised by the chain; may be the reverse

    @property
    def genus(self) -> int:
        return sharp_genus(self.sigma)


@dataclass(frozen=True)
class ScanRecord:
    p: int
    q: int
    weights: tuple[int, ...]
    realized: bool
    sigma: Optional[tuple[int, ...]]
    genus: Optional[int]
    berge_ok: bool

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "weights": list(self.weights),
            "realized": self.realized,
            "sigma": list(self.sigma) if self.sigma is not None else None,
            "genus": self.genus,
            "berge_ok": self.berge_ok,
        }

    def csv_row(self) -> list[str]:
        return [
            str(self.p),
            str(self.q),
            ";".join(map(str, self.weights)),
            "true" if self.realized else "false",
            ";".join(map(str, self.sigma)) if self.sigma is not None else "",
            "" if self.genus is None else str(self.genus),
            "true" if self.berge_ok else "false",
        ]


CSV_COLUMNS = ["p", "q", "weights", "realized", "sigma", "genus", "berge_ok"]


def _check_pair(p: int, q: int) -> None:
    if p < 2 or not p > q >= 1 or gcd(p, q) != 1:
        raise ValueError(f"need coprime p > q >= 1 with p >= 2, got ({p}, {q})")


def flip_orientation(p: int, q: int) -> tuple[int, int]:
    """Parameters of -L(p, q) = L(p, p - q)."""
    _check_pair(p, q)
    return p, p - q


def _root_ranks_sigma(sigma: tuple[int, ...]) -> list[int]:
    # norm-2 vectors orthogonal to a zero-free sigma are e_j - e_k with
    # sigma_j = sigma_k, one A_{m-1} root system per repeated value
    return sorted(m - 1 for m in Counter(sigma).values() if m > 1)


def _root_ranks_linear(weights: tuple[int, ...]) -> list[int]:
    # norm-2 vectors of a linear lattice are the sums over runs of 2s
    runs, run = [], 0
    for a in weights + (0,):
        if a == 2:
            run += 1
        elif run:
            runs.append(run)
            run = 0
    return sorted(runs)


@lru_cache(maxsize=8)
def _changemakers_by_length(p: int) -> dict[int, list[tuple[tuple[int, ...], list[int]]]]:
    """Zero-free changemakers of norm p keyed by length, with root profiles."""
    table: dict[int, list] = {}
    for s in _extensions(p, None):
        table.setdefault(len(s), []).append((s, _root_ranks_sigma(s)))
    return table


def embed(sigma: Changemaker, lattice: LinearLattice) -> Optional[RealizationWitness]:
    """Chain basis of the complement of sigma realising ``lattice`` (or its reverse)."""
    s = sigma.sigma
    if len(s) != len(lattice) + 1 or s[0] == 0:
        # a zero coordinate puts a norm-1 vector in the complement, while a
        # linear lattice has minimum norm 2
        return None
    if _root_ranks_sigma(s) != _root_ranks_linear(lattice.weights):
        return None
    return _embed_raw(s, lattice)


def _embed_raw(s: tuple[int, ...], lattice: LinearLattice) -> Optional[RealizationWitness]:
    orders = [lattice.weights]
    if lattice.weights[::-1] != lattice.weights:
        orders.append(lattice.weights[::-1])
    p, q = lattice.fraction()
    for w in orders:
        chain = find_chain(w, [s], len(s))
        if chain is not None:
            return RealizationWitness(p=p, q=q, sigma=Changemaker(s), chain=tuple(chain),
                                      weights=w)
    return None


def realize(p: int, q: int) -> Optional[RealizationWitness]:
    """Least changemaker (lexicographically) whose complement is the plumbing lattice.

    Candidates are all changemakers of norm p and length n + 1, zeros
    allowed.  Zero-padded ones, which sort first, are rejected together:
    see ``embed``.  The rest are screened by their root systems (a
    reversed chain has the same runs of 2s) before the chain search.
    """
    _check_pair(p, q)
    lattice = hj_expand(p, q)
    roots = _root_ranks_linear(lattice.weights)
    for s, sroots in _changemakers_by_length(p).get(len(lattice) + 1, ()):
        if sroots == roots:
            witness = _embed_raw(s, lattice)
            if witness is not None:
                return witness
    return None


def berge_bound(p: int, g: int) -> bool:
    """2g - 1 <= p - 2 sqrt((4p + 1)/5), decided in integers."""
    gap = p - (2 * g - 1)
    return gap >= 0 and 5 * gap * gap >= 4 * (4 * p + 1)


def goda_teragaito_max(p: int) -> int:
    """Largest 2g - 1 over all changemakers of norm p."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return max(2 * sharp_genus(s) - 1 for s in enumerate_changemakers(p))


@dataclass(frozen=True)
class CablingSumData:
    kind: str  # "torus" or "cable"
    slope: int
    orders: tuple[int, int]
    summands: tuple[tuple[int, int], tuple[int, int]]  # (order, parameter), opposite orientation


def cabling_sum_data(q: int, p: Optional[int] = None, r: Optional[int] = None,
                     s: Optional[int] = None, sign: int = 1) -> CablingSumData:
    """Slope and lens summands of a reducible surgery on a torus knot or cable.

    Pass ``p`` for the (p, q)-torus knot, or ``r``, ``s`` and ``sign`` for
    the (p, q)-cable of the (r, s)-torus knot with p = qrs + sign.  The
    summands are L(p, q) # L(q, p) or L(p, q s^2) # L(q, sign), both with
    the opposite orientation; parameters are reduced mod the order.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if r is None and s is None:
        if p is None or p < 2 or gcd(p, q) != 1:
            raise ValueError("torus knot needs coprime p, q >= 2")
        return CablingSumData("torus", p * q, (p, q), ((p, q % p), (q, p % q)))
    if p is not None:
        raise ValueError("give either p (torus knot) or r and s (cable), not both")
    if r is None or s is None or r < 2 or s < 2 or gcd(r, s) != 1:
        raise ValueError("cable needs a coprime companion (r, s) with r, s >= 2")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    p = q * r * s + sign
    return CablingSumData("cable", p * q, (p, q), ((p, q * s * s % p), (q, sign % q)))


# ---------------------------------------------------------------------------
# scans


def _scan_p(p: int) -> list[ScanRecord]:
    out = []
    for q in range(1, p):
        if gcd(p, q) != 1:
            continue
        weights = hj_expand(p, q).weights
        w = realize(p, q)
        if w is None:
            out.append(ScanRecord(p, q, weights, False, None, None, True))
        else:
            out.append(ScanRecord(p, q, weights, True, w.sigma.sigma, w.genus,
                                  berge_bound(p, w.genus)))
    _changemakers_by_length.cache_clear()
    return out


def scan(p_max: int, workers: int = 1, p_min: int = 2) -> list[ScanRecord]:
    """Realize every coprime pair p_min <= p <= p_max, q < p, sorted by (p, q)."""
    if p_max < 2:
        raise ValueError("p_max must be at least 2")
    ps = list(range(max(2, p_min), p_max + 1))
    if workers <= 1:
        chunks: Iterable[list[ScanRecord]] = map(_scan_p, ps)
        records = [r for chunk in chunks for r in chunk]
    else:
        # largest slopes first so the slowest chunks start early
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_scan_p, sorted(ps, reverse=True))
            records = [r for chunk in chunks for r in chunk]
    return sorted(records, key=lambda r: (r.p, r.q))


def berge_violations(records: Iterable[ScanRecord]) -> list[ScanRecord]:
    return [r for r in records if r.realized and not r.berge_ok]


def records_to_jsonl(records: Iterable[ScanRecord]) -> str:
    return "".join(json.dumps(r.as_dict(), sort_keys=True) + "\n" for r in records)
