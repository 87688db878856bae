import pytest

from chroma.exactmat import (
    IntMatrix,
    block_diag,
    block_matrix,
    det,
    kron,
    mat_pow,
    matrix_order,
)
from chroma.restriction import restriction_number
from chroma.rotrep import (
    COMPANION_PRIME_POWER,
    KRONECKER_COMPOSITE,
    TWO_D,
    CrystallographicRestriction,
    basis_images,
    companion_prime_power,
    factorize,
    hermann_allowed,
    is_prime,
    kronecker_rep,
    prime_power_entry_closed_form,
    rep,
    rep_2d,
    totient,
)

from .conftest import golden_matrix

PRIMES_TO_31 = [p for p in range(2, 32) if is_prime(p)]


def R(p):
    return companion_prime_power(p, 1).matrix


def e(i, d):
    return tuple(int(j == i - 1) for j in range(d))


def brute_totient(k):
    from math import gcd
    return sum(1 for j in range(1, k + 1) if gcd(j, k) == 1)


@pytest.mark.parametrize("k,expected", [(1, 1), (9, 6), (15, 8)])
def test_totient_examples(k, expected):
    assert totient(k) == expected


def test_totient_against_counting():
    for k in range(1, 500):
        assert totient(k) == brute_totient(k)


def test_totient_even_beyond_two():
    assert all(totient(k) % 2 == 0 for k in range(3, 300))


@pytest.mark.parametrize("k,expected", [(1, ()), (15, ((3, 1), (5, 1))), (12, ((2, 2), (3, 1)))])
def test_factorize_examples(k, expected):
    assert factorize(k) == expected


def test_factorize_reconstructs():
    for k in range(1, 2000):
        f = factorize(k)
        prod = 1
        for p, r in f:
            assert is_prime(p) and r >= 1
            prod *= p ** r
        assert prod == k
        assert [p for p, _ in f] == sorted({p for p, _ in f})


def test_rep_2d_examples():
    assert rep_2d(4).matrix == IntMatrix(((0, -1), (1, 0)))
    assert rep_2d(2).matrix == -IntMatrix.identity(2)
    assert rep_2d(1).matrix == IntMatrix.identity(2)
    assert rep_2d(3).matrix == IntMatrix(((0, -1), (1, -1)))
    assert rep_2d(6).matrix == IntMatrix(((0, -1), (1, 1)))
    assert rep_2d(6).kind == TWO_D


@pytest.mark.parametrize("k", [5, 7, 8, 12, 0])
def test_rep_2d_rejects(k):
    with pytest.raises(CrystallographicRestriction):
        rep_2d(k)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
def test_rep_2d_order(k):
    m = rep_2d(k).matrix
    assert matrix_order(m, 12) == k
    assert det(m) == 1


def test_companion_examples():
    assert companion_prime_power(5, 1).matrix == golden_matrix("R5.txt")
    r9 = companion_prime_power(3, 2)
    assert r9.matrix == golden_matrix("R9.txt")
    assert [i for i in range(6) if r9.matrix[i, 5] == -1] == [0, 3]
    assert companion_prime_power(2, 1).matrix == IntMatrix(((-1,),))
    assert r9.kind == COMPANION_PRIME_POWER and r9.k == 9


def test_companion_rejects_composite():
    with pytest.raises(ValueError):
        companion_prime_power(6, 1)


def test_companion_is_cyclotomic():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    for p, r in [(2, 1), (2, 3), (3, 2), (5, 1), (5, 2), (7, 1)]:
        m = sympy.Matrix(companion_prime_power(p, r).matrix.rows)
        charpoly = m.charpoly(x).as_expr()
        assert sympy.expand(charpoly - sympy.cyclotomic_poly(p ** r, x)) == 0


@pytest.mark.parametrize("p,t,i,j,expected", [(5, 2, 3, 1, 1), (5, 2, 2, 3, -1), (5, 4, 1, 2, 1)])
def test_closed_form_examples(p, t, i, j, expected):
    assert prime_power_entry_closed_form(p, t, i, j) == expected


def test_closed_form_rejects_bad_index():
    with pytest.raises(IndexError):
        prime_power_entry_closed_form(5, 2, 5, 1)
    with pytest.raises(ValueError):
        prime_power_entry_closed_form(5, 5, 1, 1)


@pytest.mark.parametrize("p", PRIMES_TO_31)
def test_closed_form_matches_powers(p):
    for t in range(1, p):
        pw = mat_pow(R(p), t)
        for i in range(1, p):
            for j in range(1, p):
                assert pw[i - 1, j - 1] == prime_power_entry_closed_form(p, t, i, j)


def test_rep_examples():
    assert rep(9).matrix == golden_matrix("R9.txt")
    r15 = rep(15)
    assert r15.matrix == kron(R(3), R(5)) == golden_matrix("A15.txt")
    assert r15.kind == KRONECKER_COMPOSITE and r15.dim == 8
    assert matrix_order(r15.matrix, 30) == 15
    assert rep(6).matrix == IntMatrix(((0, 1), (-1, 1))) == -rep_2d(3).matrix
    assert rep(1).matrix == IntMatrix.identity(1)


def test_a15_block_form():
    a15 = rep(15).matrix
    r5 = R(5)
    assert a15.block(0, 0, 4) == IntMatrix.zeros(4)
    assert a15.block(0, 1, 4) == -r5
    assert a15.block(1, 0, 4) == r5
    assert a15.block(1, 1, 4) == -r5


def test_b15_block_form():
    b15 = kronecker_rep(15, [(5, 1), (3, 1)]).matrix
    r3, z = R(3), IntMatrix.zeros(2)
    expected = block_matrix([
        [z, z, z, -r3],
        [r3, z, z, -r3],
        [z, r3, z, -r3],
        [z, z, r3, -r3],
    ])
    assert b15 == expected


def test_r9_cubed_block_form():
    i3, z = IntMatrix.identity(3), IntMatrix.zeros(3)
    assert mat_pow(rep(9).matrix, 3) == block_matrix([[z, -i3], [i3, -i3]])


def test_rep_order_dim_det_to_210():
    for k in range(2, 211):
        r = rep(k)
        assert r.dim == totient(k)
        # exact order k means no proper power is the identity
        assert matrix_order(r.matrix, k) == k
        if r.dim >= 2:
            assert det(r.matrix) == 1


def test_rep_six_vs_2d_same_restriction():
    assert rep(6).matrix != rep_2d(6).matrix
    assert restriction_number(rep(6)).n_max == restriction_number(rep_2d(6)).n_max == 1


@pytest.mark.parametrize("k", [3, 4])
def test_rep_equals_rep_2d(k):
    assert rep(k).matrix == rep_2d(k).matrix


def test_basis_images_examples():
    assert basis_images(rep(5), 1)[3] == (-1, -1, -1, -1)
    assert basis_images(rep(9), 1)[5] == tuple(-a - b for a, b in zip(e(1, 6), e(4, 6)))
    for k in (1, 5, 9, 15):
        r = rep(k)
        assert basis_images(r, 0) == [e(j, r.dim) for j in range(1, r.dim + 1)]
    with pytest.raises(ValueError):
        basis_images(rep(5), 5)


def test_basis_images_r9_all():
    imgs = basis_images(rep(9), 1)
    for j in range(1, 6):
        assert imgs[j - 1] == e(j + 1, 6)


def test_a15_basis_action():
    imgs = basis_images(rep(15), 1)
    d = 8

    def vec(*terms):
        out = [0] * d
        for c, i in terms:
            out[i - 1] += c
        return tuple(out)

    assert imgs[0] == vec((1, 6))
    assert imgs[1] == vec((1, 7))
    assert imgs[2] == vec((1, 8))
    assert imgs[3] == vec(*[(-1, j) for j in range(5, 9)])
    assert imgs[4] == vec((-1, 2), (-1, 6))
    assert imgs[5] == vec((-1, 3), (-1, 7))
    assert imgs[6] == vec((-1, 4), (-1, 8))
    assert imgs[7] == vec(*[(1, j) for j in range(1, 9)])


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_prime_basis_images_closed_form(p):
    d = p - 1
    ones = tuple(-1 for _ in range(d))
    for t in range(1, p):
        imgs = basis_images(rep(p), t)
        assert imgs[p - t - 1] == ones
        for j in range(1, p - t):
            assert imgs[p - t - j - 1] == e(p - j, d)
        for j in range(1, t):
            assert imgs[p - t + j - 1] == e(j, d)


def test_prime_power_basis_action():
    for p, r in [(2, 3), (3, 2), (5, 2)]:
        m = rep(p ** r)
        d, step = m.dim, p ** (r - 1)
        imgs = basis_images(m, 1)
        for j in range(1, d):
            assert imgs[j - 1] == e(j + 1, d)
        last = [0] * d
        for s in range(p - 1):
            last[s * step] = -1
        assert imgs[d - 1] == tuple(last)


def test_hermann_allowed_examples():
    assert hermann_allowed(2, 6)
    assert not hermann_allowed(2, 5)
    assert not hermann_allowed(4, 15)
    assert hermann_allowed(8, 15)


def _pattern_with_identity(p, r, size):
    c = companion_prime_power(p, r).matrix
    one, z = IntMatrix.identity(size), IntMatrix.zeros(size)
    return block_matrix([[one if x == 1 else -one if x == -1 else z for x in row] for row in c.rows])


@pytest.mark.parametrize("p,a,b", [(2, 2, 1), (3, 2, 1), (2, 3, 1), (2, 3, 2), (5, 2, 1)])
def test_prime_power_remarkable_power(p, a, b):
    assert mat_pow(rep(p ** a).matrix, p ** b) == _pattern_with_identity(p, a - b, p ** b)


@pytest.mark.parametrize("p1,p2", [(3, 5), (2, 3), (2, 5), (3, 7)])
def test_block_diagonal_powers(p1, p2):
    # block entries R_p1 laid out in the R_p2 companion pattern, as displayed for A_15
    a = kron(R(p2), R(p1))
    for t2 in range(1, p1 + 1):
        pw = mat_pow(a, p2 * t2)
        assert pw == block_diag([mat_pow(R(p1), p2 * t2 % p1)] * (p2 - 1))
    powers = {mat_pow(a, p2 * t2) for t2 in range(1, p1 + 1)}
    assert powers == {block_diag([mat_pow(R(p1), t2 % p1)] * (p2 - 1)) for t2 in range(1, p1 + 1)}


def test_r5_power_cycle_for_seven():
    r5 = R(5)
    assert [mat_pow(r5, 7 * t) for t in range(1, 6)] == [mat_pow(r5, t) for t in (2, 4, 1, 3, 5)]


def test_a15_triple_powers():
    a15 = rep(15).matrix
    r5 = R(5)
    got = {mat_pow(a15, 3 * t) for t in range(1, 6)}
    assert got == {block_diag([mat_pow(r5, t)] * 2) for t in range(1, 6)}


def test_b15_quintuple_powers():
    b15 = kronecker_rep(15, [(5, 1), (3, 1)]).matrix
    r3 = R(3)
    got = {mat_pow(b15, 5 * t) for t in range(1, 4)}
    assert got == {block_diag([mat_pow(r3, t)] * 4) for t in range(1, 4)}


def test_composite_ordering_is_ascending():
    r = rep(30)
    assert r.matrix == kron(kron(R(2), R(3)), R(5))
    assert r.factorization == ((2, 1), (3, 1), (5, 1))
