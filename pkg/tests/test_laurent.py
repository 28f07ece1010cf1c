import pytest

from hecke2b.errors import DomainError
from hecke2b.laurent import LaurentPoly, divided_difference
from hecke2b.scalar import S


def _poly(k, terms):
    return LaurentPoly(k, {e: S(c) for e, c in terms.items()})


def test_reflections():
    f = _poly(2, {(0, 2, -1): 3, (1, 0, 1): 1})
    assert f.reflect(0) == _poly(2, {(0, -2, -1): 3, (1, 0, 1): 1})
    assert f.reflect(1) == _poly(2, {(0, -1, 2): 3, (1, 1, 0): 1})
    assert f.reflect(1).reflect(1) == f


def test_invariance():
    k = 2
    sym = sum((LaurentPoly.var(k, i) + LaurentPoly.var(k, i, -1) for i in (1, 2)), LaurentPoly(k))
    assert sym.is_invariant()
    assert not LaurentPoly.var(k, 1).is_invariant()
    assert LaurentPoly.var(k, 0).is_invariant()


@pytest.mark.parametrize("i", [0, 1])
def test_divided_difference_is_exact(i):
    k = 2
    f = _poly(k, {(0, 3, -1): 2, (1, -2, 2): 5, (0, 0, 0): 7})
    y = LaurentPoly.var(k, 1, -2) if i == 0 else LaurentPoly.var(k, 1) * LaurentPoly.var(k, 2, -1)
    assert (LaurentPoly.constant(k) - y) * divided_difference(f, i) == f - f.reflect(i)


def test_evaluate_scalars():
    f = _poly(1, {(0, 2): 1, (1, -1): 3})
    assert f.evaluate([S(5), S(2)]) == S(4) + S(15) / 2


def test_bad_variable():
    with pytest.raises(DomainError):
        LaurentPoly.var(1, 2)
