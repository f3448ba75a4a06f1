"""Exact arithmetic in the negative definite lattice -Z^(n+1).

Vectors are plain tuples of Python ints.  The pairing is minus the
Euclidean dot product, so every nonzero vector has negative square.
Sublattices are handled through Hermite normal forms computed with
unimodular row operations; nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, Optional, Sequence

Vector = tuple[int, ...]
GramMatrix = tuple[tuple[int, ...], ...]


def inner_product(u: Sequence[int], v: Sequence[int]) -> int:
    """Pairing on -Z^(n+1): minus the Euclidean dot product."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return -sum(a * b for a, b in zip(u, v))


def norm(v: Sequence[int]) -> int:
    """The positive quantity -<v, v>."""
    return sum(a * a for a in v)


def basis_vector(i: int, length: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(length))


def is_characteristic(c: Sequence[int]) -> bool:
    return all(x % 2 == 1 for x in c)


def gram(vectors: Sequence[Sequence[int]]) -> GramMatrix:
    vecs = [tuple(v) for v in vectors]
    if vecs and any(len(v) != len(vecs[0]) for v in vecs):
        raise ValueError("vectors have different lengths")
    return tuple(tuple(inner_product(u, v) for v in vecs) for u in vecs)


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hirzebruch-Jung continued fractions


@dataclass(frozen=True)
class LinearLattice:
    """Linear chain lattice with weights (a_1, ..., a_n), every a_i >= 2.

    Its Gram matrix has -a_i on the diagonal and +1 between neighbours.
    """

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(a) for a in self.weights))
        if not self.weights:
            raise ValueError("a linear lattice needs at least one weight")
        if any(a < 2 for a in self.weights):
            raise ValueError(f"weights must all be >= 2: {self.weights}")

    def __len__(self) -> int:
        return len(self.weights)

    def reversed(self) -> "LinearLattice":
        return LinearLattice(self.weights[::-1])

    def fraction(self) -> tuple[int, int]:
        return hj_evaluate(self)

    def gram(self) -> GramMatrix:
        n = len(self.weights)
        rows = []
        for i in range(n):
            row = [0] * n
            row[i] = -self.weights[i]
            if i > 0:
                row[i - 1] = 1
            if i + 1 < n:
                row[i + 1] = 1
            rows.append(tuple(row))
        return tuple(rows)


def hj_expand(p: int, q: int) -> LinearLattice:
    """Weights of p/q = a_1 - 1/(a_2 - 1/(... - 1/a_n)) with each a_i >= 2."""
    if not p > q >= 1:
        raise ValueError(f"need p > q >= 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    weights = []
    while q:
        a = -(-p // q)
        weights.append(a)
        p, q = q, a * q - p
    return LinearLattice(tuple(weights))


def hj_evaluate(lattice: LinearLattice | Sequence[int]) -> tuple[int, int]:
    weights = lattice.weights if isinstance(lattice, LinearLattice) else tuple(lattice)
    if not weights or any(a < 2 for a in weights):
        raise ValueError(f"weights must be nonempty and >= 2: {weights}")
    p, q = weights[-1], 1
    for a in reversed(weights[:-1]):
        p, q = a * p - q, p
    return p, q


# ---------------------------------------------------------------------------
# Hermite normal form and kernels


def _reduce_above(x: int, d: int) -> int:
    # quotient that moves x into [-(d // 2), d - 1 - d // 2]
    return (x + d // 2) // d


def _echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Row-style Hermite normal form on the first ``ncols`` columns.

    Pivots are positive and entries above a pivot are reduced into the
    balanced residue range.  Rows that vanish on the first ``ncols``
    columns are returned after the pivot rows, in their reduced state.
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top == len(rows):
            break
        while True:
            nz = [i for i in range(top, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(rows[i][col]), i))
            rows[top], rows[best] = rows[best], rows[top]
            piv = rows[top]
            clean = True
            for i in range(top + 1, len(rows)):
                x = rows[i][col]
                if x:
                    f = x // piv[col]
                    if f:
                        rows[i] = [a - f * b for a, b in zip(rows[i], piv)]
                    if rows[i][col]:
                        clean = False
            if clean:
                break
        if top < len(rows) and rows[top][col] != 0:
            if rows[top][col] < 0:
                rows[top] = [-a for a in rows[top]]
            piv = rows[top]
            d = piv[col]
            for i in range(top):
                f = _reduce_above(rows[i][col], d)
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], piv)]
            pivots.append(col)
            top += 1
    return rows, pivots


def hermite_form(vectors: Sequence[Sequence[int]]) -> list[Vector]:
    """Canonical basis (row Hermite normal form) of the span of ``vectors``."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        return []
    m = len(vecs[0])
    if any(len(v) != m for v in vecs):
        raise ValueError("vectors have different lengths")
    rows, pivots = _echelon(vecs, m)
    return [tuple(r) for r in rows[: len(pivots)]]


def rank(vectors: Sequence[Sequence[int]]) -> int:
    return len(hermite_form(vectors))


def integer_kernel(rows: Sequence[Sequence[int]], m: Optional[int] = None) -> list[Vector]:
    """Hermite basis of {x in Z^m : r . x = 0 for every row r}."""
    rows = [tuple(r) for r in rows]
    if m is None:
        if not rows:
            raise ValueError("need rows or an explicit ambient length")
        m = len(rows[0])
    k = len(rows)
    # echelonise [A^T | I]; rows whose A^T part dies carry kernel vectors
    aug = [[rows[j][i] for j in range(k)] + [1 if t == i else 0 for t in range(m)]
           for i in range(m)]
    reduced, pivots = _echelon(aug, k)
    kernel = [r[k:] for r in reduced[len(pivots):]]
    return hermite_form(kernel) if kernel else []


def complement_basis(sigma: Sequence[int]) -> list[Vector]:
    """Hermite basis of the sublattice {v : <v, sigma> = 0}.

    Built one pivot column at a time from suffix gcds, so the cost stays
    quadratic in the length even for long vectors.
    """
    s = tuple(sigma)
    m = len(s)
    if not any(s):
        raise ValueError("sigma must be nonzero")
    suffix = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = gcd(s[j], suffix[j + 1])
    rows: list[list[int]] = []
    pivots: list[int] = []
    for k in range(m):
        g_next = suffix[k + 1]
        if g_next == 0:
            if s[k] != 0:
                continue  # last nonzero coordinate carries no pivot
            row = [0] * m
            row[k] = 1
        else:
            lead = g_next // gcd(s[k], g_next)
            row = [0] * m
            row[k] = lead
            _solve_tail(s, k + 1, -lead * s[k], row)
        rows.append(row)
        pivots.append(k)
    # reduce above each pivot, left to right, into the balanced residue range
    for t in range(len(rows)):
        col, d = pivots[t], rows[t][pivots[t]]
        piv = rows[t]
        for i in range(t):
            f = _reduce_above(rows[i][col], d)
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], piv)]
    return [tuple(r) for r in rows]


def _solve_tail(s: Vector, start: int, target: int, out: list[int]) -> None:
    """Write into out[start:] some integers x with sum s_j x_j = target."""
    # extended gcd across the tail, accumulating Bezout coefficients
    g, coeffs = 0, []
    for j in range(start, len(s)):
        if s[j] == 0:
            continue
        if g == 0:
            g, coeffs = abs(s[j]), [(j, 1 if s[j] > 0 else -1)]
            continue
        h, a, b = _xgcd(g, s[j])
        coeffs = [(i, c * a) for i, c in coeffs] + [(j, b)]
        g = h
    if target % g:
        raise ArithmeticError("tail cannot reach the target")
    f = target // g
    for j, c in coeffs:
        out[j] += c * f


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def in_span(v: Sequence[int], hermite_basis: Sequence[Sequence[int]]) -> bool:
    """Membership of v in the Z-span of a Hermite basis."""
    w = list(v)
    for row in hermite_basis:
        col = next(j for j, a in enumerate(row) if a)
        if w[col] % row[col]:
            return False
        f = w[col] // row[col]
        if f:
            w = [a - f * b for a, b in zip(w, row)]
    return not any(w)


# ---------------------------------------------------------------------------
# Short vectors


def vectors_of_norm(basis: Sequence[Sequence[int]], m: int) -> list[Vector]:
    """All v in the Z-span of ``basis`` with <v, v> = -m, sorted.

    Fincke-Pohst enumeration over coefficient vectors: the exact LDL^T
    decomposition of the definite form bounds each coefficient given the
    ones after it.
    """
    basis = [tuple(b) for b in basis]
    if m < 1:
        raise ValueError("m must be positive")
    if not basis:
        return []
    r, length = len(basis), len(basis[0])
    q = [[Fraction(-x) for x in row] for row in gram(basis)]
    for i in range(r):
        if q[i][i] <= 0:
            raise ValueError("basis vectors are linearly dependent")
        for j in range(i + 1, r):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, r):
            for t in range(k, r):
                q[k][t] -= q[k][i] * q[i][t]

    found: list[Vector] = []
    x = [0] * r

    def descend(i: int, budget: Fraction) -> None:
        center = -sum((q[i][j] * x[j] for j in range(i + 1, r)), Fraction(0))
        d = q[i][i]
        radius = isqrt(int(budget / d)) + 1
        for xi in range(int(center) - radius - 1, int(center) + radius + 2):
            used = d * (xi - center) ** 2
            if used > budget:
                continue
            x[i] = xi
            if i == 0:
                if used == budget:
                    found.append(tuple(sum(x[k] * basis[k][t] for k in range(r))
                                       for t in range(length)))
            else:
                descend(i - 1, budget - used)
        x[i] = 0

    descend(r - 1, Fraction(m))
    return sorted(found)


# ---------------------------------------------------------------------------
# Chain search


def _cells(constraints: Sequence[Vector], m: int) -> list[int]:
    """Previous coordinate in the same symmetry cell, or -1.

    Coordinates whose constraint columns agree may be permuted freely, so
    a lexicographically least solution is non-decreasing along each cell.
    """
    seen: dict[tuple[int, ...], int] = {}
    prev = []
    for j in range(m):
        key = tuple(c[j] for c in constraints)
        prev.append(seen.get(key, -1))
        seen[key] = j
    return prev


def _refine(prev: list[int], v: Vector) -> list[int]:
    """Split every cell by the values of the newly chosen vector."""
    out = []
    root: list[int] = []
    last: dict[tuple[int, int], int] = {}
    for j, pj in enumerate(prev):
        root.append(j if pj < 0 else root[pj])
        key = (root[j], v[j])
        out.append(last.get(key, -1))
        last[key] = j
    return out


class _Constraint:
    """A linear condition c . x = target with its pruning tables."""

    __slots__ = ("coeff", "target", "support", "last", "suffix")

    def __init__(self, coeff: Vector, target: int):
        m = len(coeff)
        self.coeff = coeff
        self.target = target
        self.support = [j for j in range(m) if coeff[j]]
        self.last = self.support[-1] if self.support else -1
        tail = [0] * (m + 1)
        for j in range(m - 1, -1, -1):
            tail[j] = tail[j + 1] + coeff[j] * coeff[j]
        self.suffix = tail

    def retarget(self, target: int) -> "_Constraint":
        other = object.__new__(_Constraint)
        other.coeff, other.support = self.coeff, self.support
        other.last, other.suffix = self.last, self.suffix
        other.target = target
        return other


def _solutions(m: int, target_norm: int, eqs: list[_Constraint],
               prev: list[int]) -> Iterator[Vector]:
    """Lexicographic stream of x in Z^m with |x|^2 = target_norm meeting ``eqs``.

    Coordinates are fixed left to right; a constraint is abandoned as soon
    as Cauchy-Schwarz says the remaining budget cannot close it, and is
    forced exact at its last nonzero coordinate.
    """
    if any(e.last < 0 and e.target != 0 for e in eqs):
        return
    touch: list[list[int]] = [[] for _ in range(m)]
    for k, e in enumerate(eqs):
        for j in e.support:
            touch[j].append(k)
    need = [e.target for e in eqs]
    coeff = [e.coeff for e in eqs]
    suffix = [e.suffix for e in eqs]
    x = [0] * m

    def walk(j: int, budget: int) -> Iterator[Vector]:
        if budget == 0:
            # the rest is zero, so every constraint must already be met
            if any(need):
                return
            for t in range(j, m):
                if prev[t] >= 0 and x[prev[t]] > 0:
                    return
                x[t] = 0
            yield tuple(x)
            return
        if j == m:
            return
        r = isqrt(budget)
        lo = -r
        if prev[j] >= 0 and x[prev[j]] > lo:
            lo = x[prev[j]]
        es = touch[j]
        for v in range(lo, r + 1):
            nb = budget - v * v
            if v:
                for k in es:
                    need[k] -= coeff[k][j] * v
            ok = True
            for k in es:
                rem = need[k]
                if rem:
                    cap = suffix[k][j + 1]
                    if cap == 0 or rem * rem > nb * cap:
                        ok = False
                        break
            if ok:
                x[j] = v
                yield from walk(j + 1, nb)
            if v:
                for k in es:
                    need[k] += coeff[k][j] * v
        x[j] = 0

    yield from walk(0, target_norm)


def find_chain(weights: Sequence[int], constraints: Sequence[Sequence[int]], m: int,
               member=None) -> Optional[list[Vector]]:
    """Lexicographically least chain v_1..v_n in {x in Z^m : c . x = 0}.

    The chain has <v_i, v_i> = -a_i, <v_i, v_{i+1}> = 1 and is otherwise
    orthogonal.  ``member`` is an optional extra membership predicate for
    sublattices that are not saturated.
    """
    cons = [_Constraint(tuple(c), 0) for c in constraints]
    chain: list[Vector] = []
    orth: list[_Constraint] = []  # chain[k] as an orthogonality condition
    n = len(weights)

    def extend(prev: list[int]) -> bool:
        i = len(chain)
        if i == n:
            return True
        eqs = list(cons)
        if i >= 1:
            eqs.extend(orth[:-1])
            eqs.append(orth[-1].retarget(-1))
        for cand in _solutions(m, weights[i], eqs, prev):
            if member is not None and not member(cand):
                continue
            chain.append(cand)
            orth.append(_Constraint(cand, 0))
            if extend(_refine(prev, cand)):
                return True
            chain.pop()
            orth.pop()
        return False

    # coordinate permutations only preserve a saturated sublattice
    start = _cells([c.coeff for c in cons], m) if member is None else [-1] * m
    return list(chain) if extend(start) else None


def is_isometric_to_linear(vectors: Sequence[Sequence[int]],
                           lattice: LinearLattice) -> Optional[list[Vector]]:
    """Search the span of ``vectors`` for a chain basis realising ``lattice``.

    Returns the lexicographically least chain for the given weight order,
    falling back to the reversed order, or None when neither embeds.
    """
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    m = len(vecs[0])
    basis = hermite_form(vecs)
    if len(basis) != len(lattice):
        raise ValueError(f"rank {len(basis)} does not match {len(lattice)} weights")
    cons = integer_kernel(basis, m)
    target = abs(determinant(gram(basis)))
    saturation = integer_kernel(cons, m)
    saturated = abs(determinant(gram(saturation))) == target
    member = None if saturated else (lambda v: in_span(v, basis))
    orders = [lattice.weights]
    if lattice.weights[::-1] != lattice.weights:
        orders.append(lattice.weights[::-1])
    for w in orders:
        if abs(determinant(LinearLattice(w).gram())) != target:
            continue
        chain = find_chain(w, cons, m, member)
        if chain is not None:
            return chain
    return None
