"""Dense exact linear algebra and tensor-index bookkeeping.

Matrices are dense and row-major.  Everything is small (dimensions stay
below ~512 even for triple tensor products), so plain Gaussian elimination
over exact scalars is the whole story: no pivot-size heuristics, no
floating point, no sparse formats.

Index convention used throughout the package: a tensor factor list
(d1, ..., dr) flattens (i1, ..., ir) to i1*(d2*...*dr) + ... + ir, i.e.
row-major with the leftmost factor slowest.  Kronecker products of
matrices follow the same convention, so `a.kron(b)` is the matrix of the
map `x ⊗ y -> A(x) ⊗ B(y)` on flattened tensors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .fields import Field, Scalar


@dataclass(frozen=True)
class TensorIndex:
    """Flattening of a multi-index over factor dimensions."""

    dims: Tuple[int, ...]

    def __post_init__(self):
        if any(d <= 0 for d in self.dims):
            raise ValueError(f"tensor factor dimensions must be positive: {self.dims}")

    @property
    def size(self) -> int:
        n = 1
        for d in self.dims:
            n *= d
        return n

    def flatten(self, multi: Sequence[int]) -> int:
        if len(multi) != len(self.dims):
            raise ValueError(f"multi-index {multi} does not match factors {self.dims}")
        flat = 0
        for i, d in zip(multi, self.dims):
            if not 0 <= i < d:
                raise ValueError(f"index {multi} out of range for factors {self.dims}")
            flat = flat * d + i
        return flat

    def unflatten(self, flat: int) -> Tuple[int, ...]:
        if not 0 <= flat < self.size:
            raise ValueError(f"flat index {flat} out of range for factors {self.dims}")
        out = []
        for d in reversed(self.dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        for flat in range(self.size):
            yield self.unflatten(flat)


class Mat:
    """Immutable dense matrix with exact entries (row-major flat storage)."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: Sequence[Scalar]):
        if len(data) != rows * cols:
            raise ValueError(f"entry count {len(data)} != {rows}x{cols}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = tuple(data)

    # -- constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Mat":
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        data = [field.zero] * (n * n)
        for i in range(n):
            data[i * n + i] = field.one
        return cls(field, n, n, data)

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[Scalar]]) -> "Mat":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat: List[Scalar] = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(field, r, c, flat)

    @classmethod
    def from_entries(cls, field: Field, rows: int, cols: int,
                     entries: Sequence[Tuple[int, int, Scalar]]) -> "Mat":
        data = [field.zero] * (rows * cols)
        for i, j, v in entries:
            data[i * cols + j] = field.add(data[i * cols + j], v)
        return cls(field, rows, cols, data)

    # -- access ------------------------------------------------------------
    def at(self, i: int, j: int) -> Scalar:
        return self.data[i * self.cols + j]

    def row(self, i: int) -> List[Scalar]:
        return list(self.data[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> List[Scalar]:
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> List[List[Scalar]]:
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.to_rows()!r})"

    # -- arithmetic --------------------------------------------------------
    def mul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        F = self.field
        data = [F.zero] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.data[base + k]
                if a == 0:
                    continue
                obase = k * other.cols
                dbase = i * other.cols
                for j in range(other.cols):
                    b = other.data[obase + j]
                    if b != 0:
                        data[dbase + j] = F.add(data[dbase + j], F.mul(a, b))
        return Mat(F, self.rows, other.cols, data)

    def mul_vec(self, v: Sequence[Scalar]) -> List[Scalar]:
        if self.cols != len(v):
            raise ValueError(f"cannot apply {self.rows}x{self.cols} to vector of length {len(v)}")
        F = self.field
        out = [F.zero] * self.rows
        for i in range(self.rows):
            acc = F.zero
            base = i * self.cols
            for j, x in enumerate(v):
                if x != 0:
                    acc = F.add(acc, F.mul(self.data[base + j], x))
            out[i] = acc
        return out

    def add(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        F = self.field
        return Mat(F, self.rows, self.cols,
                   [F.add(a, b) for a, b in zip(self.data, other.data)])

    def sub(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        F = self.field
        return Mat(F, self.rows, self.cols,
                   [F.sub(a, b) for a, b in zip(self.data, other.data)])

    def scaled(self, c: Scalar) -> "Mat":
        F = self.field
        return Mat(F, self.rows, self.cols, [F.mul(c, a) for a in self.data])

    def transpose(self) -> "Mat":
        data = [self.field.zero] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                data[j * self.rows + i] = self.data[i * self.cols + j]
        return Mat(self.field, self.cols, self.rows, data)

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product, leftmost factor slowest (matches TensorIndex)."""
        F = self.field
        R, C = self.rows * other.rows, self.cols * other.cols
        data = [F.zero] * (R * C)
        for i1 in range(self.rows):
            for j1 in range(self.cols):
                a = self.data[i1 * self.cols + j1]
                if a == 0:
                    continue
                for i2 in range(other.rows):
                    for j2 in range(other.cols):
                        b = other.data[i2 * other.cols + j2]
                        if b != 0:
                            data[(i1 * other.rows + i2) * C + (j1 * other.cols + j2)] = F.mul(a, b)
        return Mat(F, R, C, data)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data)

    def _same_shape(self, other: "Mat"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


# -- vector helpers ----------------------------------------------------------

def vec_add(field: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> List[Scalar]:
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field: Field, u: Sequence[Scalar], v: Sequence[Scalar]) -> List[Scalar]:
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field: Field, c: Scalar, v: Sequence[Scalar]) -> List[Scalar]:
    return [field.mul(c, a) for a in v]


def vec_is_zero(v: Sequence[Scalar]) -> bool:
    return all(x == 0 for x in v)


def basis_vector(field: Field, n: int, i: int) -> List[Scalar]:
    v = [field.zero] * n
    v[i] = field.one
    return v


# -- elimination --------------------------------------------------------------

def _rref(field: Field, rows: List[List[Scalar]]) -> List[int]:
    """Reduce `rows` in place to reduced row echelon form; return pivot columns."""
    pivots: List[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank_of(a: Mat) -> int:
    rows = a.to_rows()
    if not rows:
        return 0
    return len(_rref(a.field, rows))


@dataclass
class AffineSolution:
    """Result of solving A x = b: a particular solution plus a kernel basis.

    `consistent` is False iff the system has no solution, in which case
    `particular` is None (the kernel basis is still returned).
    """

    consistent: bool
    particular: Optional[List[Scalar]]
    kernel: List[List[Scalar]]
    rank: int


def solve_affine(a: Mat, b: Sequence[Scalar]) -> AffineSolution:
    """Solve A x = b exactly; report one solution and the homogeneous kernel."""
    if a.rows != len(b):
        raise ValueError(f"matrix has {a.rows} rows but b has {len(b)} entries")
    F = a.field
    aug = [a.row(i) + [b[i]] for i in range(a.rows)]
    if not aug:
        # no equations: everything solves
        return AffineSolution(True, [F.zero] * a.cols, _standard_kernel(F, a.cols), 0)
    pivots = _rref(F, aug)
    bcol = a.cols
    if bcol in pivots:
        pivots_a = [p for p in pivots if p < bcol]
        return AffineSolution(False, None, _kernel_from_rref(F, aug, pivots_a, bcol), len(pivots_a))
    particular = [F.zero] * a.cols
    for r, c in enumerate(pivots):
        particular[c] = aug[r][bcol]
    return AffineSolution(True, particular, _kernel_from_rref(F, aug, pivots, bcol), len(pivots))


def _standard_kernel(field: Field, n: int) -> List[List[Scalar]]:
    return [basis_vector(field, n, i) for i in range(n)]


def _kernel_from_rref(field: Field, rref_rows: List[List[Scalar]],
                      pivots: List[int], ncols: int) -> List[List[Scalar]]:
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(rref_rows[r][fc])
        basis.append(v)
    return basis


def kernel_basis(a: Mat) -> List[List[Scalar]]:
    """Basis of {x : A x = 0}; its length is cols - rank(A) by construction."""
    F = a.field
    rows = a.to_rows()
    if not rows:
        return _standard_kernel(F, a.cols)
    pivots = _rref(F, rows)
    return _kernel_from_rref(F, rows, pivots, a.cols)


def invert(a: Mat) -> Optional[Mat]:
    """Inverse of a square matrix, or None if singular/non-square."""
    if a.rows != a.cols:
        return None
    F = a.field
    n = a.rows
    aug = [a.row(i) + Mat.identity(F, n).row(i) for i in range(n)]
    pivots = _rref(F, aug)
    if pivots != list(range(n)):
        return None
    return Mat.from_rows(F, [row[n:] for row in aug])


def is_bijective(a: Mat) -> Tuple[bool, Optional[Mat]]:
    """Verdict plus a two-sided inverse (checked exactly) when bijective."""
    inv = invert(a)
    if inv is None:
        return False, None
    n = a.rows
    ident = Mat.identity(a.field, n)
    if a.mul(inv) != ident or inv.mul(a) != ident:
        raise AssertionError("inverse failed re-verification")  # pragma: no cover
    return True, inv
