import time
from math import isqrt

import pytest

from sharpgenus.cables import complement_chain, family, linking_matrix, verify_stage
from sharpgenus.changemaker import sharp_genus
from sharpgenus.lattice import determinant, gram


def test_family_examples():
    st = family(2)
    assert (st.cable_params, st.p, st.genus) == ((1, 3), 5, 1)
    st = family(3)
    assert (st.a, st.p, st.genus) == (11, 21, 7)
    st = family(1)
    assert (st.a, st.p, st.genus, st.degenerate) == (1, 1, 0, True)
    assert family(3).cables == ((2, 1), (2, 3), (2, 11))


def test_family_rejects():
    with pytest.raises(ValueError):
        family(0)


def test_linking_matrix_examples():
    assert linking_matrix(2) == ((-5,),)
    assert linking_matrix(3) == ((-5, 2), (2, -5))
    assert linking_matrix(4) == ((-5, 2, 0), (2, -5, 2), (0, 2, -5))
    with pytest.raises(ValueError):
        linking_matrix(1)


def test_stage_identities():
    start = time.perf_counter()
    for n in range(1, 13):
        st = family(n)
        assert st.p == (4 ** n - 1) // 3
        assert isqrt(3 * st.p + 1) ** 2 == 3 * st.p + 1 == 4 ** n
        assert 2 * st.genus - 1 == st.p - 2 ** n
        assert 2 * sharp_genus(st.sigma) == st.p - (2 ** n - 1) == 2 * st.genus
        assert st.sigma.sigma == tuple(2 ** i for i in range(n))
        assert verify_stage(st)
        if n >= 2:
            assert gram(complement_chain(n)) == linking_matrix(n)
            assert abs(determinant(linking_matrix(n))) == st.p
    assert time.perf_counter() - start < 1.0


def test_recursion():
    for n in range(2, 13):
        prev, cur = family(n - 1), family(n)
        assert cur.a == 2 * prev.p + 1
        assert cur.p == 2 * cur.a - 1


def test_verify_stage_rejects_tampered():
    from dataclasses import replace
    st = family(4)
    assert not verify_stage(replace(st, genus=st.genus + 1))
    assert not verify_stage(replace(st, p=st.p + 1))
