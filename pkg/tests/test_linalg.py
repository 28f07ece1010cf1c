from hecke2b.linalg import Matrix, kernel, rank
from hecke2b.scalar import I, S


def test_inverse_round_trip():
    m = Matrix.from_dense([[S(2), I], [S(1), S(3)]])
    assert m @ m.inverse() == Matrix.identity(2)


def test_kernel_and_rank():
    m = Matrix.from_dense([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(m) == 2
    basis = kernel(m)
    assert len(basis) == 1
    assert all(v == 0 for v in m.apply(basis[0]))


def test_powers_and_diagonal():
    m = Matrix.diag([S(2), S(-1)])
    assert (m ** 3).diagonal() == [S(8), S(-1)]
    assert (m ** -1).diagonal() == [S(1, 0) / 2, S(-1)]
    assert m.is_diagonal()
