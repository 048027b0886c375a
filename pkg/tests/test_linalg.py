import random
from fractions import Fraction

from halphen.field import GF
from halphen.linalg import (invariant_factors, kernel_basis, rank,
                            smith_normal_form, solve)


def _matmul(X, Y):
    return [[sum(X[i][k] * Y[k][j] for k in range(len(Y)))
             for j in range(len(Y[0]))] for i in range(len(X))]


def _det(M):
    M = [[Fraction(x) for x in row] for row in M]
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d *= M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] * inv
            M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return d


def test_smith_normal_form_random():
    rng = random.Random(11)
    for _ in range(150):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        D, U, V = smith_normal_form(A)
        assert _matmul(_matmul(U, A), V) == D
        assert abs(_det(U)) == 1 and abs(_det(V)) == 1
        diag = [D[i][i] for i in range(min(m, n)) if D[i][i] != 0]
        for x, y in zip(diag, diag[1:]):
            assert y % x == 0
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert D[i][j] == 0


def test_diagonal_two_three_quotient():
    # Z^2 / span{(2,0), (0,3)} is Z/2 + Z/3; the invariant chain is (1, 6)
    facs = invariant_factors([[2, 0], [0, 3]])
    assert facs == [1, 6]
    order = 1
    for f in facs:
        order *= f
    assert order == 6


def test_field_linear_algebra():
    F = GF(13)

    def row(*vals):
        return [F.from_int(v) for v in vals]

    A = [row(1, 2, 3), row(2, 4, 6), row(1, 0, 1)]
    assert rank(A, F) == 2
    kern = kernel_basis(A, F)
    assert len(kern) == 1
    for r in A:
        acc = F.zero()
        for c, x in zip(r, kern[0]):
            acc = acc + c * x
        assert acc.is_zero()
    sol = solve([row(1, 1), row(1, 2)], row(3, 5), F)
    assert sol is not None and sol[0] == 1 and sol[1] == 2
    assert solve([row(1, 1), row(2, 2)], row(1, 3), F) is None
