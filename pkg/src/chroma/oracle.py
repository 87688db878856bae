"""Brute-force invariance checks on a finite box of lattice points.

Nothing here looks at column sums or gcds: every point of [-M, M]^d is
rotated by every nontrivial power and its colour compared with the
original.  Image points may leave the box; colours are defined everywhere.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import numpy as np

from .exactmat import mat_pow
from .restriction import divides, restriction_number
from .rotrep import RotationRep, rep

DEFAULT_POINT_BUDGET = 10 ** 7
CHUNK = 1 << 16
_INT64_SAFE = 1 << 62


class BudgetExceeded(RuntimeError):
    pass


def point_budget() -> int:
    env = os.environ.get("CHROMA_POINT_BUDGET")
    return int(env) if env else DEFAULT_POINT_BUDGET


@dataclass(frozen=True)
class BoxSpec:
    dim: int
    half_width: int
    budget: int = field(default_factory=point_budget)

    def __post_init__(self):
        if self.dim < 1 or self.half_width < 1:
            raise ValueError("box needs dim >= 1 and half_width >= 1")

    @property
    def side(self) -> int:
        return 2 * self.half_width + 1

    @property
    def size(self) -> int:
        return self.side ** self.dim

    def fits(self) -> bool:
        return self.size <= self.budget

    def chunks(self, dtype=np.int64):
        """Yield the box points in lexicographic order, as (rows, dim) arrays."""
        shape = (self.side,) * self.dim
        for start in range(0, self.size, CHUNK):
            idx = np.arange(start, min(start + CHUNK, self.size))
            pts = np.stack(np.unravel_index(idx, shape), axis=1) - self.half_width
            yield pts.astype(dtype)


@dataclass(frozen=True)
class Violation:
    """Point m whose image under R**t changes colour."""
    n: int
    point: Tuple[int, ...]
    t: int
    colours: Tuple[int, int]

    def to_json(self) -> dict:
        return {"n": self.n, "m": [str(x) for x in self.point], "t": self.t,
                "colours": list(self.colours)}


def _powers(r: RotationRep, box: BoxSpec):
    """Transposed powers R**t, t = 1..k-1, as arrays of a dtype that cannot overflow."""
    mats = [mat_pow(r.matrix, t) for t in range(1, r.k)]
    biggest = max((abs(x) for m in mats for x in m.entries), default=0)
    safe = biggest * box.half_width * box.dim < _INT64_SAFE
    dtype = np.int64 if safe else object
    return dtype, [np.array(m.rows, dtype=dtype).T for m in mats]


def find_violation(r: RotationRep, n: int, box: BoxSpec) -> Optional[Violation]:
    """First (in box order, then by t) point whose colour is not preserved."""
    if box.dim != r.dim:
        raise ValueError(f"{box.dim}-dimensional box for a {r.dim}-dimensional rotation")
    if n < 1:
        raise ValueError("n must be >= 1")
    if not box.fits():
        raise BudgetExceeded(f"box has {box.size} points, budget is {box.budget}")
    dtype, powers = _powers(r, box)
    for pts in box.chunks(dtype):
        base = pts.sum(axis=1) % n
        first = None
        for t, pt in enumerate(powers, start=1):
            img = (pts @ pt).sum(axis=1) % n
            bad = np.flatnonzero(img != base)
            if bad.size and (first is None or bad[0] < first[0]):
                first = (int(bad[0]), t, int(base[bad[0]]), int(img[bad[0]]))
                if first[0] == 0:
                    break
        if first is not None:
            i, t, c0, c1 = first
            return Violation(n, tuple(int(x) for x in pts[i]), t, (c0, c1))
    return None


def check_invariance(r: RotationRep, n: int, box: BoxSpec) -> bool:
    return find_violation(r, n, box) is None


def valid_moduli_bruteforce(r: RotationRep, n_max_scan: int, box: BoxSpec) -> List[int]:
    if n_max_scan < 1:
        raise ValueError("n_max_scan must be >= 1")
    return [n for n in range(1, n_max_scan + 1) if check_invariance(r, n, box)]


@dataclass(frozen=True)
class AgreementRow:
    k: int
    dim: int
    symbolic: Union[str, Tuple[int, ...]]
    bruteforce: Optional[Tuple[int, ...]]
    agree: bool
    skipped: bool = False
    counterexamples: Tuple[Violation, ...] = ()

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "dim": self.dim,
            "symbolic": self.symbolic if isinstance(self.symbolic, str) else list(self.symbolic),
            "bruteforce": None if self.bruteforce is None else list(self.bruteforce),
            "agree": self.agree,
            "skipped": self.skipped,
            "counterexamples": [v.to_json() for v in self.counterexamples],
        }


def agreement_row(k: int, n_scan: int, half_width: int, budget: Optional[int] = None) -> AgreementRow:
    r = rep(k)
    box = BoxSpec(r.dim, half_width, budget if budget is not None else point_budget())
    res = restriction_number(r)
    symbolic = "all" if res.unbounded else tuple(n for n in res.valid_moduli if n <= n_scan)
    if not box.fits():
        return AgreementRow(k, r.dim, symbolic, None, True, skipped=True)
    found, violations = [], []
    for n in range(1, n_scan + 1):
        v = find_violation(r, n, box)
        if v is None:
            found.append(n)
        else:
            violations.append(v)
    expected = [n for n in range(1, n_scan + 1) if divides(n, res.n_max)]
    return AgreementRow(k, r.dim, symbolic, tuple(found), found == expected,
                        counterexamples=tuple(violations))


def agreement_report(k_max: int, n_scan: int, half_width: int,
                     budget: Optional[int] = None) -> List[AgreementRow]:
    """One row per k in 1..k_max; rows whose box exceeds the budget are skipped."""
    return [agreement_row(k, n_scan, half_width, budget) for k in range(1, k_max + 1)]

