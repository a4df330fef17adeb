"""Exact linear algebra over the rationals.

Entries are ``fractions.Fraction``. Vectors are rows multiplied into a
matrix from the left, so the kernel of ``M`` is ``{v : v M = 0}`` and
``solve(A, b)`` looks for ``x`` with ``x A = b``.

Small problems run through plain-Python fraction-free (Bareiss)
elimination. Once a matrix has more than ``LARGE_ENTRIES`` entries the
work is handed to FLINT via python-flint, which is exact as well. The test
suite runs both paths on the same inputs.
"""

from fractions import Fraction
from math import lcm
import random

try:
    import flint
except ImportError:  # pragma: no cover - python-flint is a declared dependency
    flint = None

LARGE_ENTRIES = 2500

# Prime used for modular rank certificates. Products of two residues stay
# below 2**52, so numpy int64 accumulation of a few hundred terms is safe.
CERT_PRIME = 67108859


class RatMatrix:
    """Dense immutable matrix of exact rationals.

    Build one with ``RatMatrix.from_rows([[1, 2], [3, 4]])``; the column
    count must be passed explicitly for matrices without rows.
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        if entries is None:
            data = tuple((Fraction(0),) * cols for _ in range(rows))
        else:
            flat = [Fraction(x) for x in entries]
            if len(flat) != rows * cols:
                raise ValueError(
                    f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(flat)}")
            data = tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count is required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def to_lists(self):
        return [list(r) for r in self._data]

    @property
    def entries(self):
        return [x for r in self._data for x in r]

    def transpose(self):
        return RatMatrix(self.cols, self.rows,
                         [self._data[i][j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        out = []
        for r in self._data:
            nz = [(k, x) for k, x in enumerate(r) if x]
            for c in ocols:
                out.append(sum((x * c[k] for k, x in nz), Fraction(0)))
        return RatMatrix(self.rows, other.cols, out)

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols,
                         [a + b for ra, rb in zip(self._data, other._data) for a, b in zip(ra, rb)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return RatMatrix(self.rows, self.cols, [c * x for x in self.entries])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        return all(x == 0 for r in self._data for x in r)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"


def as_matrix(M):
    """Accept a RatMatrix or a non-empty list of rows."""
    if isinstance(M, RatMatrix):
        return M
    return RatMatrix.from_rows(M)


def integer_rows(rows):
    """Scale each row of rationals by the lcm of its denominators."""
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = lcm(den, x.denominator)
        if den == 1:
            out.append([int(x) for x in r])
        else:
            out.append([int(x * den) for x in r])
    return out


def bareiss_rank(int_rows, ncols):
    """Rank of an integer matrix by fraction-free elimination (plain Python)."""
    a = [list(r) for r in int_rows if any(r)]
    n = len(a)
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == n:
            break
        piv = None
        for i in range(rank, n):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        p = prow[c]
        for i in range(rank + 1, n):
            row = a[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - f * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def _flint_rank_int(int_rows, ncols):
    n = len(int_rows)
    if n == 0 or ncols == 0:
        return 0
    full = min(n, ncols)
    flat = [x for r in int_rows for x in r]
    modp = flint.nmod_mat(n, ncols, [x % CERT_PRIME for x in flat], CERT_PRIME).rank()
    if modp == full:
        # rank mod p never exceeds the rational rank, so this is exact
        return full
    return flint.fmpz_mat(n, ncols, flat).rank()


def rank_int(int_rows, ncols, backend="auto"):
    """Exact rank of an integer matrix given as a list of rows."""
    n = len(int_rows)
    if backend == "python" or flint is None or (backend == "auto" and n * ncols <= LARGE_ENTRIES):
        return bareiss_rank(int_rows, ncols)
    return _flint_rank_int(int_rows, ncols)


def rank(M, backend="auto"):
    """Rank of a rational matrix.

    ``backend`` is ``"auto"``, ``"python"`` (Bareiss only) or ``"flint"``.
    """
    M = as_matrix(M)
    if M.rows == 0 or M.cols == 0:
        return 0
    return rank_int(integer_rows(M._data), M.cols, backend=backend)


def rank_mod_p(int_rows, ncols, p=CERT_PRIME):
    """Rank modulo a prime; a lower bound for the rational rank of an integer matrix."""
    n = len(int_rows)
    if n == 0 or ncols == 0:
        return 0
    if flint is not None:
        return flint.nmod_mat(n, ncols, [x % p for r in int_rows for x in r], p).rank()
    a = [[x % p for x in r] for r in int_rows]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, n) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(r + 1, n):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


def rref_rows(rows, ncols, backend="auto"):
    """Reduced row echelon form of a list of rational rows.

    Returns ``(nonzero_rows, pivot_columns)``.
    """
    rows = [[Fraction(x) for x in r] for r in rows]
    n = len(rows)
    if n == 0 or ncols == 0:
        return [], []
    use_flint = flint is not None and (backend == "flint" or (backend == "auto" and n * ncols > LARGE_ENTRIES))
    if use_flint:
        ints = integer_rows(rows)
        R, rk = flint.fmpq_mat(n, ncols, [x for r in ints for x in r]).rref()
        out, pivots = [], []
        for i in range(rk):
            vals = [R[i, j] for j in range(ncols)]
            out.append([Fraction(int(x.p), int(x.q)) for x in vals])
            pivots.append(next(j for j, x in enumerate(vals) if x != 0))
        return out, pivots
    a = rows
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, n):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        inv = 1 / pr[c]
        if inv != 1:
            pr = [x * inv for x in pr]
            a[r] = pr
        nzc = [j for j in range(c, ncols) if pr[j] != 0]
        for i in range(n):
            if i != r:
                f = a[i][c]
                if f != 0:
                    row = a[i]
                    for j in nzc:
                        row[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return a[:r], pivots


def _nullspace_of_rref(R, pivots, ncols):
    """Right nullspace basis from an RREF; returns (basis rows, free columns)."""
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            if row[f] != 0:
                v[p] = -row[f]
        basis.append(v)
    return basis, free


def left_kernel(M, backend="auto"):
    """Basis of ``{v : v M = 0}`` together with its free coordinates.

    The returned rows restricted to the free coordinates form an identity
    matrix, so the coordinates of any kernel vector in this basis are just
    its entries at those positions.
    """
    M = as_matrix(M)
    cols_as_rows = [list(M.column(j)) for j in range(M.cols)]
    R, pivots = rref_rows(cols_as_rows, M.rows, backend=backend)
    return _nullspace_of_rref(R, pivots, M.rows)


def kernel_basis(M, backend="auto"):
    """Rows forming a basis of the left kernel ``{v : v M = 0}``."""
    M = as_matrix(M)
    basis, _ = left_kernel(M, backend=backend)
    return RatMatrix(len(basis), M.rows, [x for r in basis for x in r])


def solve(A, b):
    """One exact solution ``x`` of ``x A = b``, or ``None`` if there is none."""
    A = as_matrix(A)
    b = [Fraction(x) for x in b]
    if len(b) != A.cols:
        raise ValueError(f"right-hand side has length {len(b)}, expected {A.cols}")
    # transpose the system: A^T x^T = b^T, one equation per column of A
    aug = [list(A.column(j)) + [b[j]] for j in range(A.cols)]
    R, pivots = rref_rows(aug, A.rows + 1)
    if pivots and pivots[-1] == A.rows:
        return None
    x = [Fraction(0)] * A.rows
    for row, p in zip(R, pivots):
        x[p] = row[A.rows]
    return x


def vec_mat(v, M):
    """Row vector times matrix."""
    M = as_matrix(M)
    out = [Fraction(0)] * M.cols
    for k, x in enumerate(v):
        if x:
            r = M.row(k)
            for j in range(M.cols):
                if r[j]:
                    out[j] += x * r[j]
    return out


def random_matrix(rows, cols, bound, rng):
    """Matrix with integer entries drawn uniformly from ``[-bound, bound]``."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    return RatMatrix(rows, cols, [rng.randint(-bound, bound) for _ in range(rows * cols)])


def make_rng(seed):
    """A ``random.Random`` seeded from any hashable description."""
    return random.Random(str(seed))
