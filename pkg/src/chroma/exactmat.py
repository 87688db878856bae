"""Exact square integer matrices.

Entries are Python ints, so nothing ever overflows.  Products skip zero
entries of the left factor, which keeps the companion-matrix powers used
throughout the package cheap even at dimension ~200.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

IntVector = tuple  # tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows:
            raise ValueError("matrix must have dimension >= 1")
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _trusted(cls, rows: tuple) -> "IntMatrix":
        # rows already a square tuple of int tuples; skip validation
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", rows)
        return obj

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @classmethod
    def zeros(cls, dim: int) -> "IntMatrix":
        return cls(tuple((0,) * dim for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def entries(self) -> tuple:
        """Row-major flattening, length ``dim**2``."""
        return tuple(x for r in self.rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return mat_mul(self, other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix._trusted(tuple(tuple(-x for x in r) for r in self.rows))

    def apply(self, v: Sequence[int]) -> IntVector:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.dim}x{self.dim} matrix")
        return tuple(sum(a * b for a, b in zip(r, v) if a) for r in self.rows)

    def column(self, j: int) -> IntVector:
        return tuple(r[j] for r in self.rows)

    def is_identity(self) -> bool:
        return self.rows == IntMatrix.identity(self.dim).rows

    def block(self, i: int, j: int, size: int) -> "IntMatrix":
        """The ``size``-square block at block-row ``i``, block-column ``j``."""
        return IntMatrix(
            tuple(r[j * size:(j + 1) * size] for r in self.rows[i * size:(i + 1) * size])
        )

    def to_json(self) -> dict:
        return {"dim": self.dim, "rows": [[str(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntMatrix":
        m = cls.from_rows([[int(x) for x in r] for r in obj["rows"]])
        if m.dim != obj["dim"]:
            raise ValueError("dim field does not match rows")
        return m

    def format(self) -> str:
        """Right-aligned integer grid, one row per line."""
        w = max(len(str(x)) for x in self.entries)
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.rows)


def block_matrix(blocks: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble equally sized square blocks into one matrix."""
    rows = []
    for brow in blocks:
        for i in range(brow[0].dim):
            rows.append(tuple(x for b in brow for x in b.rows[i]))
    return IntMatrix(tuple(rows))


def block_diag(blocks: Sequence[IntMatrix]) -> IntMatrix:
    size = blocks[0].dim
    z = IntMatrix.zeros(size)
    return block_matrix([[b if i == j else z for j in range(len(blocks))]
                         for i, b in enumerate(blocks)])


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    d = a.dim
    brows = b.rows
    # Nonzero pattern of each row of b, so sparse factors stay cheap.
    bnz = [[(j, x) for j, x in enumerate(r) if x] for r in brows]
    out = []
    for r in a.rows:
        acc = [0] * d
        for k, x in enumerate(r):
            if x:
                for j, y in bnz[k]:
                    acc[j] += x * y
        out.append(tuple(acc))
    return IntMatrix._trusted(tuple(out))


def mat_pow(a: IntMatrix, t: int) -> IntMatrix:
    """``a**t`` by binary exponentiation; ``a**0`` is the identity."""
    if t < 0:
        raise ValueError("exponent must be nonnegative")
    result = IntMatrix.identity(a.dim)
    base = a
    while t:
        if t & 1:
            result = result @ base
        t >>= 1
        if t:
            base = base @ base
    return result


def kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    rows = []
    for ar in a.rows:
        for br in b.rows:
            rows.append(tuple(x * y for x in ar for y in br))
    return IntMatrix._trusted(tuple(rows))


def det(a: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    m = [list(r) for r in a.rows]
    n = a.dim
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: Bareiss guarantees divisibility by the previous pivot
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def col_sums(a: IntMatrix) -> IntVector:
    return tuple(sum(col) for col in zip(*a.rows))


def row_times(v: Sequence[int], a: IntMatrix) -> IntVector:
    """Row vector times matrix, ``v @ a``."""
    if len(v) != a.dim:
        raise DimensionMismatch(f"vector of length {len(v)} for {a.dim}x{a.dim} matrix")
    acc = [0] * a.dim
    for x, r in zip(v, a.rows):
        if x:
            for j, y in enumerate(r):
                if y:
                    acc[j] += x * y
    return tuple(acc)


def matrix_order(a: IntMatrix, bound: int) -> Optional[int]:
    """Smallest ``t`` in ``1..bound`` with ``a**t == I``, or None."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    anz = [[(j, x) for j, x in enumerate(r) if x] for r in a.rows]
    # powers kept as sparse rows {col: value}
    p = [dict(r) for r in anz]
    for t in range(1, bound + 1):
        if all(len(r) == 1 and r.get(i) == 1 for i, r in enumerate(p)):
            return t
        if t == bound:
            break
        nxt = []
        for r in p:
            acc = {}
            for k, x in r.items():
                for j, y in anz[k]:
                    acc[j] = acc.get(j, 0) + x * y
            nxt.append({j: v for j, v in acc.items() if v})
        p = nxt
    return None
