import itertools
from math import gcd

import pytest

from sharpgenus.alexander import (
    TREFOIL,
    UNKNOT,
    AlexanderPoly,
    cable_genus,
    cable_lspace_criterion,
    genus,
    torsion,
    torsion_profile,
    torus_poly,
    validate_lspace_form,
)

T25 = AlexanderPoly((1, -1, 1))


def lspace_polys(g):
    for tail in itertools.product((-1, 0, 1), repeat=g):
        poly = AlexanderPoly(tail + (1,))
        if validate_lspace_form(poly):
            yield poly


def test_parse_and_laurent():
    poly = AlexanderPoly.parse("1,-1,1")
    assert poly == T25
    assert poly.laurent() == (1, -1, 1, -1, 1)
    assert AlexanderPoly.from_laurent((1, -1, 1)) == TREFOIL
    assert str(T25) == "1,-1,1"


def test_asymmetric_rejected():
    with pytest.raises(ValueError):
        AlexanderPoly.from_laurent((1, -1, 2))
    with pytest.raises(ValueError):
        AlexanderPoly((1, 0))


def test_validate_examples():
    assert validate_lspace_form(TREFOIL)
    assert validate_lspace_form(T25)
    assert not validate_lspace_form(AlexanderPoly((-2, 1)))
    assert validate_lspace_form(UNKNOT)
    assert not validate_lspace_form(AlexanderPoly((1, -1)))


def test_torsion_examples():
    assert torsion(TREFOIL, 0) == 1
    assert torsion(TREFOIL, 1) == 0
    assert torsion(T25, 1) == 1
    assert torsion(T25, -1) == 1


def test_genus_examples():
    assert genus(UNKNOT) == 0
    assert genus(TREFOIL) == 1
    assert genus(T25) == 2


def _torsion_by_tail_sums(poly, i):
    # t_i = sum over k > i of (a_k + a_{k+1} + ...)
    g = poly.degree
    return sum(sum(poly.coeff(j) for j in range(k, g + 1)) for k in range(i + 1, g + 1))


def test_torsion_properties_all_patterns():
    seen = 0
    for g in range(0, 9):
        for poly in lspace_polys(g):
            seen += 1
            t = [torsion(poly, i) for i in range(g + 3)]
            assert t[:g + 1] == list(torsion_profile(poly))
            for i in range(g + 2):
                assert t[i] - t[i + 1] in (0, 1)
                assert t[i] == _torsion_by_tail_sums(poly, i)
            assert all(x >= 0 for x in t)
            assert [x == 0 for x in t] == [i >= g for i in range(g + 3)]
    assert seen > 100


def _semigroup_poly(r, s):
    # 1 + (T - 1) * sum of T^n over the gaps of the semigroup <r, s>
    bound = (r - 1) * (s - 1)
    reachable = {a * r + b * s for a in range(s) for b in range(r)}
    gaps = [n for n in range(bound) if n not in reachable]
    coeffs = [0] * (bound + 1)
    coeffs[0] += 1
    for n in gaps:
        coeffs[n + 1] += 1
        coeffs[n] -= 1
    return AlexanderPoly.from_laurent(coeffs)


def test_torus_examples():
    assert torus_poly(2, 3) == TREFOIL
    assert torus_poly(2, 5) == T25
    p35 = torus_poly(3, 5)
    assert p35.degree == 4 and validate_lspace_form(p35)


def test_torus_against_semigroup():
    for r in range(2, 13):
        for s in range(2, 13):
            if gcd(r, s) != 1:
                continue
            poly = torus_poly(r, s)
            assert validate_lspace_form(poly)
            assert poly.degree == (r - 1) * (s - 1) // 2
            assert poly == _semigroup_poly(r, s)
            assert sum(poly.laurent()) == 1


def test_torus_rejects():
    with pytest.raises(ValueError):
        torus_poly(2, 4)
    with pytest.raises(ValueError):
        torus_poly(1, 3)


def _gaps(r, s):
    reachable = {a * r + b * s for a in range(s) for b in range(r)}
    return [n for n in range((r - 1) * (s - 1)) if n not in reachable]


def test_torsion_zero_counts_upper_gaps():
    # t_0 is the number of semigroup gaps at or above the genus
    for r in range(2, 8):
        for s in range(r + 1, 12):
            if gcd(r, s) == 1:
                poly = torus_poly(r, s)
                assert torsion(poly, 0) == sum(n >= poly.degree for n in _gaps(r, s))


def test_torus_two_strand_torsion():
    for k in range(1, 21):
        assert torsion(torus_poly(2, 2 * k + 1), 0) == (k + 1) // 2


@pytest.mark.parametrize("q,r,g,expected", [(2, 3, 0, 1), (2, 11, 1, 7), (2, 1, 0, 0)])
def test_cable_genus_examples(q, r, g, expected):
    assert cable_genus(q, r, g) == expected


def test_cable_genus_classical_identity():
    for q in range(2, 6):
        for r in range(1, 22):
            if gcd(q, r) != 1:
                continue
            for g in range(0, 6):
                assert 2 * cable_genus(q, r, g) == 2 * q * g + (q - 1) * (r - 1)


def test_cable_genus_rejects():
    with pytest.raises(ValueError):
        cable_genus(1, 3, 0)
    with pytest.raises(ValueError):
        cable_genus(2, 4, 0)
    with pytest.raises(ValueError):
        cable_genus(2, 3, -1)


def test_two_strand_cable_of_unknot_is_torus_knot():
    for k in range(1, 10):
        assert cable_genus(2, 2 * k + 1, 0) == torus_poly(2, 2 * k + 1).degree


@pytest.mark.parametrize("q,r,g,expected", [(2, 3, 0, True), (2, 1, 1, False), (2, 11, 1, True)])
def test_cable_lspace_examples(q, r, g, expected):
    assert cable_lspace_criterion(q, r, g) is expected
