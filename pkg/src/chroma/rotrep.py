"""Integer representations of the k-fold rotation C_k.

Two families are built here:

* ``rep_2d(k)`` -- the plane-lattice matrices for k in {1, 2, 3, 4, 6};
* ``rep(k)`` -- a Psi(k)-dimensional unimodular matrix for any k >= 1.  For a
  prime power p**r it is the companion matrix of the cyclotomic polynomial
  Phi_{p**r}; otherwise it is the Kronecker product of the prime-power
  companions taken in ascending-prime order, the first factor outermost.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import isqrt
from typing import List, Sequence, Tuple

from .exactmat import IntMatrix, IntVector, kron, mat_pow

TWO_D = "TwoD"
COMPANION_PRIME_POWER = "CompanionPrimePower"
KRONECKER_COMPOSITE = "KroneckerComposite"

Factorization = Tuple[Tuple[int, int], ...]


class CrystallographicRestriction(ValueError):
    """A rotation order that the requested lattice cannot carry."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(k: int) -> Factorization:
    """Ascending ``((p, r), ...)`` by trial division; ``()`` for k = 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out: List[Tuple[int, int]] = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            r = 0
            while k % d == 0:
                k //= d
                r += 1
            out.append((d, r))
        d += 1 if d == 2 else 2
    if k > 1:
        out.append((k, 1))
    return tuple(out)


def totient(k: int) -> int:
    result = 1
    for p, r in factorize(k):
        result *= p ** (r - 1) * (p - 1)
    return result


def hermann_allowed(d: int, k: int) -> bool:
    """True when a d-dimensional lattice admits C_k, i.e. d >= Psi(k)."""
    return d >= totient(k)


@dataclass(frozen=True)
class RotationRep:
    k: int
    matrix: IntMatrix
    kind: str
    factorization: Factorization

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def to_json(self) -> dict:
        return {"k": self.k, "dim": self.dim, "kind": self.kind,
                "matrix": self.matrix.to_json()}


_A_K = {3: -1, 4: 0, 6: 1}


def rep_2d(k: int) -> RotationRep:
    """Plane-lattice rotation: I, -I, or rows (0, -1), (1, a_k)."""
    if k == 1:
        m = IntMatrix.identity(2)
    elif k == 2:
        m = -IntMatrix.identity(2)
    elif k in _A_K:
        m = IntMatrix(((0, -1), (1, _A_K[k])))
    else:
        raise CrystallographicRestriction(
            f"C_{k} is not a rotation of a plane lattice (allowed: 1, 2, 3, 4, 6)")
    return RotationRep(k, m, TWO_D, factorize(k))


def companion_prime_power(p: int, r: int) -> RotationRep:
    """Companion matrix of Phi_{p**r}.

    Subdiagonal ones, and -1 in the last column at rows 1 + s*p**(r-1)
    (1-based) for s = 0..p-2.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError("exponent must be >= 1")
    step = p ** (r - 1)
    dim = step * (p - 1)
    rows = [[0] * dim for _ in range(dim)]
    for i in range(1, dim):
        rows[i][i - 1] = 1
    for s in range(p - 1):
        rows[s * step][dim - 1] = -1
    return RotationRep(p ** r, IntMatrix.from_rows(rows), COMPANION_PRIME_POWER, ((p, r),))


def prime_power_entry_closed_form(p: int, t: int, i: int, j: int) -> int:
    """Entry (i, j), 1-based, of the t-th power of the prime companion R_p.

    Written out entry by entry so it can check ``mat_pow`` independently.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= t <= p - 1:
        raise ValueError(f"t must lie in 1..{p - 1}")
    if not (1 <= i <= p - 1 and 1 <= j <= p - 1):
        raise IndexError(f"index ({i}, {j}) out of range for dimension {p - 1}")
    if j == p + i - t and 1 <= i <= t - 1:
        return 1
    if j == p - t:
        return -1
    if j == i - t and t + 1 <= i <= p - 1:
        return 1
    return 0


def kronecker_rep(k: int, factors: Sequence[Tuple[int, int]]) -> RotationRep:
    """Kronecker product of prime-power companions in the order given."""
    mats = [companion_prime_power(p, r).matrix for p, r in factors]
    m = reduce(kron, mats, IntMatrix.identity(1))
    return RotationRep(k, m, KRONECKER_COMPOSITE, tuple(sorted(factors)))


def rep(k: int) -> RotationRep:
    """The canonical Psi(k)-dimensional integer representation of C_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    f = factorize(k)
    if len(f) == 1:
        return companion_prime_power(*f[0])
    # k = 1 is the empty product: the 1x1 identity
    return kronecker_rep(k, f)


def basis_images(r: RotationRep, t: int) -> List[IntVector]:
    """Images of e_1..e_dim under R**t, i.e. the columns of the power."""
    if not 0 <= t < r.k:
        raise ValueError(f"t must lie in 0..{r.k - 1}")
    pw = mat_pow(r.matrix, t)
    return [pw.column(j) for j in range(pw.dim)]
