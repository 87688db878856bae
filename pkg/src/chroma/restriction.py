"""Maximal colour counts for rotation-invariant modular colourings.

The coordinate sum of R**t m is the linear functional c_t . m, where c_t is
the vector of column sums of R**t.  Every colour class of the modulus-n
colouring is preserved by every power iff n divides each coefficient of
each difference c_t - c_0, so the maximal modulus is the gcd of those
coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple, Union

from .exactmat import IntVector
from .rotrep import RotationRep, factorize, is_prime, rep, totient


class _Unbounded:
    """Marker for "every modulus works" (only the identity rotation)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"

    def __str__(self):
        return "unbounded"

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()
Bound = Union[int, _Unbounded]


def divides(n: int, bound: Bound) -> bool:
    """Is n a valid modulus under ``bound``?  Everything divides UNBOUNDED."""
    return bound is UNBOUNDED or bound % n == 0


@dataclass(frozen=True)
class ModularSystem:
    k: int
    dim: int
    functionals: Tuple[IntVector, ...]
    differences: Tuple[IntVector, ...]


@dataclass(frozen=True)
class RestrictionResult:
    k: int
    dim: int
    n_max: Bound
    gcd_witness: Tuple[int, ...]
    valid_moduli: Tuple[int, ...]

    @property
    def unbounded(self) -> bool:
        return self.n_max is UNBOUNDED

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "dim": self.dim,
            "n_max": "unbounded" if self.unbounded else self.n_max,
            "valid_moduli": "all" if self.unbounded else list(self.valid_moduli),
        }


def derive_system(r: RotationRep) -> ModularSystem:
    """Column sums c_t of R**t for t = 0..k-1 and the differences c_t - c_0."""
    nonzero = [[(j, x) for j, x in enumerate(row) if x] for row in r.matrix.rows]
    c = (1,) * r.dim
    functionals = [c]
    for _ in range(1, r.k):
        # 1^T R^t = (1^T R^(t-1)) R
        acc = [0] * r.dim
        for ci, row in zip(c, nonzero):
            if ci:
                for j, x in row:
                    acc[j] += ci * x
        c = tuple(acc)
        functionals.append(c)
    c0 = functionals[0]
    differences = tuple(tuple(a - b for a, b in zip(ct, c0)) for ct in functionals[1:])
    return ModularSystem(r.k, r.dim, tuple(functionals), differences)


def divisors(n: int) -> Tuple[int, ...]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return tuple(sorted(set(small + [n // d for d in small])))


def restriction_number(r: RotationRep) -> RestrictionResult:
    system = derive_system(r)
    witness = tuple(x for d in system.differences for x in d if x)
    if not witness:
        return RestrictionResult(r.k, r.dim, UNBOUNDED, (), ())
    g = 0
    for x in witness:
        g = gcd(g, x)
    return RestrictionResult(r.k, r.dim, g, witness, divisors(g))


def closed_form_N(k: int) -> Bound:
    """p for k = p**r, 1 for k with two or more prime factors."""
    f = factorize(k)
    if not f:
        return UNBOUNDED
    if len(f) == 1:
        return f[0][0]
    return 1


def min_dimension(n: int) -> Tuple[int, int]:
    """Smallest (k, d = k - 1) carrying an n-colour modular lattice with C_k, k >= n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    k = n
    while not is_prime(k):
        k += 1
    return k, k - 1


def _term(coef: int, idx: int, first: bool) -> str:
    sign = "-" if coef < 0 else ("" if first else "+")
    mag = abs(coef)
    body = f"m{idx}" if mag == 1 else f"{mag}m{idx}"
    return f"{sign}{body}" if first else f" {sign} {body}"


def _linear(vec: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(vec, start=1):
        if c:
            parts.append(_term(c, i, not parts))
    return "".join(parts) if parts else "0"


def _reduced(vec: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Split vec into (content, primitive part with positive leading coefficient)."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    lead = next(x for x in vec if x)
    if lead < 0:
        g = -g
    return abs(g), tuple(x // g for x in vec)


def render_equations(r: RotationRep, reduce: bool = False) -> str:
    system = derive_system(r)
    lines = [f"{_linear(system.functionals[0])} ≡ q (mod n)"]
    if not reduce:
        for t, d in enumerate(system.differences, start=1):
            lines.append(f"t={t}: {_linear(d)} ≡ 0 (mod n)")
        return "\n".join(lines)
    seen = set()
    for t, d in enumerate(system.differences, start=1):
        if not any(d):
            continue
        content, prim = _reduced(d)
        if (content, prim) in seen:
            continue
        seen.add((content, prim))
        inner = _linear(prim)
        if sum(1 for x in prim if x) > 1:
            inner = f"({inner})"
        prefix = "" if content == 1 else str(content)
        lines.append(f"t={t}: {prefix}{inner} ≡ 0 (mod n)")
    return "\n".join(lines)


def restriction_table(k_max: int) -> List[Tuple[int, int, Bound]]:
    """Rows (k, Psi(k), n_max) for k = 1..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return [(k, totient(k), restriction_number(rep(k)).n_max) for k in range(1, k_max + 1)]
