"""Modular colour lattices: point m gets colour (sum of m) mod n."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .exactmat import DimensionMismatch
from .rotrep import RotationRep


@dataclass(frozen=True)
class ColourLattice:
    dim: int
    modulus: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")


def colour_of(lat: ColourLattice, m: Sequence[int]) -> int:
    if len(m) != lat.dim:
        raise DimensionMismatch(f"point of dimension {len(m)} in a {lat.dim}-dimensional lattice")
    # Python's % already lands in 0..n-1 for negative sums
    return sum(m) % lat.modulus


def in_sublattice(lat: ColourLattice, q: int, m: Sequence[int]) -> bool:
    if not 0 <= q < lat.modulus:
        raise ValueError(f"residue {q} outside 0..{lat.modulus - 1}")
    return colour_of(lat, m) == q


def orbit_colours(lat: ColourLattice, r: RotationRep, m: Sequence[int]) -> List[int]:
    """Colours of R**t m for t = 0..k-1; all equal iff the orbit is monochrome."""
    if r.dim != lat.dim:
        raise DimensionMismatch(f"{r.dim}-dimensional rotation on a {lat.dim}-dimensional lattice")
    out = []
    v = tuple(m)
    for _ in range(r.k):
        out.append(colour_of(lat, v))
        v = r.matrix.apply(v)
    return out
