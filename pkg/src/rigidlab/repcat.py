"""Quiver representations over the rationals.

A representation assigns to vertex ``v`` the row space ``Q^{d_v}`` and to
an arrow ``u -> w`` a ``d_u x d_w`` matrix; a vector ``x`` at ``u`` is sent
to ``x f`` at ``w``. Paths compose left to right. The indecomposable
projective ``P(v)`` is spanned by the paths starting at ``v``.

Hom and Ext^1 dimensions come from a minimal projective presentation
``Q1 -> Q0 -> X -> 0``: applying ``Hom(-, Y)`` gives a matrix ``B`` whose
left kernel is ``Hom(X, Y)`` and whose cokernel is ``Ext^1(X, Y)``. The
intertwiner system gives a second, independent route to Hom.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np

from .exact import (CERT_PRIME, RatMatrix, flint, left_kernel, make_rng, random_matrix,
                    rank, rank_int, rref_rows, vec_mat)
from .roots import (Quiver, coxeter_transform, kronecker_sequences, tits_form)


class GenericityError(RuntimeError):
    """Sampling did not produce the requested generic representation."""


class TooLargeError(RuntimeError):
    """The linear system needed for a computation exceeds the size limit."""


class DomainError(ValueError):
    """An operation was applied outside the objects it is defined on."""


# ---------------------------------------------------------------- paths

@lru_cache(maxsize=None)
def paths_from(Q, v):
    """Paths starting at v, grouped by end vertex; a path is a tuple of arrow indices."""
    out = {w: [] for w in Q.vertices}
    stack = [(v, ())]
    while stack:
        x, p = stack.pop()
        out[x].append(p)
        for a, (u, w) in enumerate(Q.arrows):
            if u == x:
                stack.append((w, p + (a,)))
    for w in out:
        out[w].sort(key=lambda p: (len(p), p))
    return out


@lru_cache(maxsize=None)
def _path_index(Q, v):
    return {w: {p: i for i, p in enumerate(ps)} for w, ps in paths_from(Q, v).items()}


# ---------------------------------------------------------------- Rep

def _to_matrix(M, rows, cols):
    if isinstance(M, RatMatrix):
        if M.shape != (rows, cols):
            raise ValueError(f"matrix of shape {M.shape}, expected {(rows, cols)}")
        return M
    M = [list(r) for r in M]
    if len(M) != rows or any(len(r) != cols for r in M):
        raise ValueError(f"matrix does not have shape {(rows, cols)}")
    return RatMatrix(rows, cols, [x for r in M for x in r])


class Rep:
    """A representation of an acyclic quiver with rational matrices."""

    def __init__(self, quiver, dims, maps):
        dims = tuple(int(x) for x in dims)
        if len(dims) != quiver.vertex_count:
            raise ValueError("dimension vector length does not match the quiver")
        if any(x < 0 for x in dims):
            raise ValueError("dimensions must be non-negative")
        maps = list(maps)
        if len(maps) != len(quiver.arrows):
            raise ValueError(f"expected {len(quiver.arrows)} arrow matrices, got {len(maps)}")
        self.quiver = quiver
        self.dims = dims
        self.maps = tuple(_to_matrix(M, dims[u - 1], dims[w - 1])
                          for M, (u, w) in zip(maps, quiver.arrows))
        self._cache = {}

    def dim(self, v):
        return self.dims[v - 1]

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def __eq__(self, other):
        if not isinstance(other, Rep):
            return NotImplemented
        return (self.quiver, self.dims, self.maps) == (other.quiver, other.dims, other.maps)

    def __hash__(self):
        return hash((self.quiver, self.dims, self.maps))

    def __repr__(self):
        return f"Rep(dims={self.dims}, arrows={len(self.maps)})"

    def path_matrix(self, path, start):
        """Matrix of a path starting at ``start`` (identity for the empty path)."""
        key = ("path", path, start)
        if key not in self._cache:
            if not path:
                M = RatMatrix.identity(self.dim(start))
            else:
                M = self.maps[path[0]]
                for a in path[1:]:
                    M = M @ self.maps[a]
            self._cache[key] = M
        return self._cache[key]

    def dual(self):
        """The dual representation, over the opposite quiver."""
        if "dual" not in self._cache:
            D = Rep(self.quiver.opposite(), self.dims, [M.transpose() for M in self.maps])
            D._cache["dual"] = self
            self._cache["dual"] = D
        return self._cache["dual"]


def zero_rep(Q):
    return Rep(Q, (0,) * Q.vertex_count, [RatMatrix(0, 0) for _ in Q.arrows])


def random_rep(Q, d, bound, rng):
    d = tuple(d)
    if len(d) != Q.vertex_count:
        raise ValueError("dimension vector length does not match the quiver")
    return Rep(Q, d, [random_matrix(d[u - 1], d[w - 1], bound, rng) for u, w in Q.arrows])


def projective_rep(Q, v):
    """P(v): basis at w is the list of paths from v to w."""
    paths = paths_from(Q, v)
    index = _path_index(Q, v)
    dims = tuple(len(paths[w]) for w in Q.vertices)
    maps = []
    for a, (x, y) in enumerate(Q.arrows):
        M = [[0] * dims[y - 1] for _ in range(dims[x - 1])]
        for i, p in enumerate(paths[x]):
            M[i][index[y][p + (a,)]] = 1
        maps.append(RatMatrix(dims[x - 1], dims[y - 1], [e for r in M for e in r]))
    return Rep(Q, dims, maps)


def injective_rep(Q, v):
    return projective_rep(Q.opposite(), v).dual()


def simple_rep(Q, v):
    d = tuple(1 if w == v else 0 for w in Q.vertices)
    return Rep(Q, d, [RatMatrix(d[u - 1], d[w - 1]) for u, w in Q.arrows])


def direct_sum(*reps):
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    Q = reps[0].quiver
    if any(X.quiver != Q for X in reps):
        raise ValueError("summands live over different quivers")
    dims = tuple(sum(X.dims[i] for X in reps) for i in range(Q.vertex_count))
    maps = []
    for a, (u, w) in enumerate(Q.arrows):
        rows = []
        col_off = 0
        for X in reps:
            M = X.maps[a]
            for r in M.to_lists():
                rows.append([0] * col_off + r + [0] * (dims[w - 1] - col_off - M.cols))
            col_off += M.cols
        maps.append(RatMatrix(dims[u - 1], dims[w - 1], [e for r in rows for e in r]))
    return Rep(Q, dims, maps)


def _same_quiver(X, Y):
    if X.quiver != Y.quiver:
        raise ValueError("representations live over different quivers")


# ---------------------------------------------------------------- presentations

class _Echelon:
    """Incrementally maintained echelon basis for testing independence."""

    def __init__(self):
        self.rows = []

    def add(self, v):
        v = list(v)
        for p, r in self.rows:
            c = v[p]
            if c:
                for j, x in enumerate(r):
                    if x:
                        v[j] -= c * x
        piv = next((j for j, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = 1 / Fraction(v[piv])
        self.rows.append((piv, [x * inv for x in v]))
        return True


def _primitive(v):
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


@dataclass
class Presentation:
    """A minimal projective presentation Q1 -> Q0 -> X -> 0.

    ``gens`` lists the generators of Q0 as ``(vertex, vector in X)``;
    ``relations`` lists the generators of Q1 as ``(vertex, coefficients)``
    where the coefficients refer to ``q0_basis[vertex]``, a list of
    ``(generator index, path)`` pairs spanning Q0 at that vertex.
    """

    quiver: Quiver
    gens: list
    relations: list
    q0_basis: dict

    @property
    def p0(self):
        return tuple(sum(1 for v, _ in self.gens if v == w) for w in self.quiver.vertices)

    @property
    def p1(self):
        return tuple(sum(1 for v, _ in self.relations if v == w) for w in self.quiver.vertices)


def projective_presentation(X):
    """Minimal projective presentation of X (cached on X)."""
    if "pres" in X._cache:
        return X._cache["pres"]
    Q = X.quiver
    gens = []
    for v in Q.vertices:
        dv = X.dim(v)
        if dv == 0:
            continue
        image = [list(r) for a, (u, w) in enumerate(Q.arrows) if w == v
                 for r in X.maps[a].to_lists()]
        _, pivots = rref_rows(image, dv)
        pivset = set(pivots)
        for j in range(dv):
            if j not in pivset:
                gens.append((v, [Fraction(int(i == j)) for i in range(dv)]))
    q0 = {t: [(g, p) for g, (v, _) in enumerate(gens) for p in paths_from(Q, v)[t]]
          for t in Q.vertices}
    kernels = {}
    for t in Q.vertices:
        basis_t = q0[t]
        if not basis_t:
            kernels[t] = []
            continue
        if X.dim(t) == 0:
            kernels[t] = [[Fraction(int(i == j)) for j in range(len(basis_t))]
                          for i in range(len(basis_t))]
            continue
        rows = [vec_mat(gens[g][1], X.path_matrix(p, gens[g][0])) for g, p in basis_t]
        kernels[t], _ = left_kernel(RatMatrix(len(rows), X.dim(t), [x for r in rows for x in r]))
    pos = {t: {gp: i for i, gp in enumerate(q0[t])} for t in Q.vertices}
    relations = []
    for t in Q.vertices:
        ech = _Echelon()
        for a, (u, w) in enumerate(Q.arrows):
            if w != t:
                continue
            for k in kernels[u]:
                image = [Fraction(0)] * len(q0[t])
                for i, (g, p) in enumerate(q0[u]):
                    if k[i]:
                        image[pos[t][(g, p + (a,))]] += k[i]
                ech.add(image)
        if not ech.rows:
            # nothing comes in, and the kernel basis is already independent
            relations.extend((t, _primitive(k)) for k in kernels[t])
            continue
        for k in kernels[t]:
            if ech.add(k):
                relations.append((t, _primitive(k)))
    pres = Presentation(Q, gens, relations, q0)
    X._cache["pres"] = pres
    return pres


def _blocks(pres, Y):
    """Offsets and block contributions of the map Hom(Q0, Y) -> Hom(Q1, Y)."""
    row_off, r = [], 0
    for v, _ in pres.gens:
        row_off.append(r)
        r += Y.dim(v)
    col_off, c = [], 0
    for t, _ in pres.relations:
        col_off.append(c)
        c += Y.dim(t)
    return row_off, r, col_off, c


def _path_matrices(pres, Y):
    """Path matrices of Y used by the presentation, keyed by (path, start)."""
    out = {}
    for t, coeffs in pres.relations:
        for idx, c in enumerate(coeffs):
            if c:
                g, path = pres.q0_basis[t][idx]
                key = (path, pres.gens[g][0])
                if key not in out:
                    out[key] = Y.path_matrix(path, pres.gens[g][0])
    return out


def hom_ext_matrix(pres, Y):
    """The matrix B of Hom(Q0, Y) -> Hom(Q1, Y), scaled to integer entries.

    Returns ``(rows, nrows, ncols)``; the rows are integer lists equal to a
    positive multiple of B, which has the same rank and kernel.
    """
    row_off, nrows, col_off, ncols = _blocks(pres, Y)
    mats = _path_matrices(pres, Y)
    den = 1
    for F in mats.values():
        for x in F.entries:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
    ints = {key: [[int(x * den) for x in F.row(i)] for i in range(F.rows)]
            for key, F in mats.items()}
    B = [[0] * ncols for _ in range(nrows)]
    for h, (t, coeffs) in enumerate(pres.relations):
        c0 = col_off[h]
        for idx, c in enumerate(coeffs):
            if not c:
                continue
            g, path = pres.q0_basis[t][idx]
            r0 = row_off[g]
            for i, Fi in enumerate(ints[(path, pres.gens[g][0])]):
                Bi = B[r0 + i]
                for j, x in enumerate(Fi):
                    if x:
                        Bi[c0 + j] += c * x
    return B, nrows, ncols


def _mod_p(x, p):
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ZeroDivisionError
    return x.numerator * pow(x.denominator, -1, p) % p


def _hom_ext_matrix_mod_p(pres, Y, p):
    row_off, nrows, col_off, ncols = _blocks(pres, Y)
    B = np.zeros((nrows, ncols), dtype=np.int64)
    cache = {}
    for key, F in _path_matrices(pres, Y).items():
        cache[key] = np.array([_mod_p(x, p) for x in F.entries],
                              dtype=np.int64).reshape(F.rows, F.cols)
    for h, (t, coeffs) in enumerate(pres.relations):
        for idx, c in enumerate(coeffs):
            if not c:
                continue
            g, path = pres.q0_basis[t][idx]
            F = cache[(path, pres.gens[g][0])]
            r0, c0 = row_off[g], col_off[h]
            blk = B[r0:r0 + F.shape[0], c0:c0 + F.shape[1]]
            blk += (_mod_p(c, p) * F) % p
            blk %= p
    return B, nrows, ncols


EXACT_ASSEMBLY_LIMIT = 250_000
SECOND_PRIME = 67108837
# about 2.4 GB of int64 entries; larger systems are refused
MAX_MATRIX_ENTRIES = 300_000_000


def _modular_full_rank(pres, Y, nrows, ncols):
    """True when B has full rank modulo one of two primes (an exact certificate)."""
    for p in (CERT_PRIME, SECOND_PRIME):
        try:
            Bp, _, _ = _hom_ext_matrix_mod_p(pres, Y, p)
        except ZeroDivisionError:
            continue
        full = flint.nmod_mat(nrows, ncols, Bp.ravel().tolist(), p).rank() == min(nrows, ncols)
        del Bp
        if full:
            return True
    return False


def _hom_ext_rank(pres, Y, full_rank_only=False):
    """(rows, cols, rank) of the matrix B for presentation ``pres`` against ``Y``.

    Large matrices are first tried modulo two primes; a full modular rank is
    exact. With ``full_rank_only`` the rank is reported as ``None`` instead of
    computed exactly when neither prime certifies full rank.
    """
    _, nrows, _, ncols = _blocks(pres, Y)
    if nrows == 0 or ncols == 0:
        return nrows, ncols, 0
    if nrows * ncols > MAX_MATRIX_ENTRIES:
        raise TooLargeError(f"a {nrows} x {ncols} system is beyond the size limit")
    if nrows * ncols > EXACT_ASSEMBLY_LIMIT and flint is not None:
        if _modular_full_rank(pres, Y, nrows, ncols):
            return nrows, ncols, min(nrows, ncols)
        if full_rank_only:
            return nrows, ncols, None
    B, _, _ = hom_ext_matrix(pres, Y)
    return nrows, ncols, rank_int(B, ncols)


def _route_sizes(X, Y):
    pres = projective_presentation(X)
    _, r1, _, c1 = _blocks(pres, Y)
    copres = projective_presentation(Y.dual())
    _, r2, _, c2 = _blocks(copres, X.dual())
    return r1 * c1, r2 * c2


def hom_ext_dims(X, Y, route="auto"):
    """(dim Hom(X, Y), dim Ext^1(X, Y)) from a presentation.

    ``route`` is ``"presentation"`` (resolve X), ``"copresentation"``
    (resolve the dual of Y over the opposite quiver) or ``"auto"``.
    """
    _same_quiver(X, Y)
    if route == "auto":
        s1, s2 = _route_sizes(X, Y)
        route = "presentation" if s1 <= s2 else "copresentation"
    if route == "presentation":
        r, c, k = _hom_ext_rank(projective_presentation(X), Y)
    elif route == "copresentation":
        r, c, k = _hom_ext_rank(projective_presentation(Y.dual()), X.dual())
    else:
        raise ValueError(f"unknown route {route!r}")
    return r - k, c - k


# ---------------------------------------------------------------- Hom spaces

@dataclass
class HomSpace:
    source: Rep
    target: Rep
    basis: list

    @property
    def dim(self):
        return len(self.basis)


def _intertwiner_system(X, Y):
    Q = X.quiver
    off, n = {}, 0
    for v in Q.vertices:
        off[v] = n
        n += X.dim(v) * Y.dim(v)
    ncols = sum(X.dim(u) * Y.dim(w) for u, w in Q.arrows)
    R = [[Fraction(0)] * ncols for _ in range(n)]
    col = 0
    for a, (u, w) in enumerate(Q.arrows):
        fX, fY = X.maps[a], Y.maps[a]
        xu, yu, xw, yw = X.dim(u), Y.dim(u), X.dim(w), Y.dim(w)
        for r in range(xu):
            for s in range(yw):
                e = col + r * yw + s
                # + (f^X phi_w)[r, s] = sum_t f^X[r, t] phi_w[t, s]
                for t in range(xw):
                    x = fX[r, t]
                    if x:
                        R[off[w] + t * yw + s][e] += x
                # - (phi_u f^Y)[r, s] = - sum_k phi_u[r, k] f^Y[k, s]
                for k in range(yu):
                    y = fY[k, s]
                    if y:
                        R[off[u] + r * yu + k][e] -= y
        col += xu * yw
    return R, n, ncols, off


def hom_space(X, Y):
    """Basis of all intertwiners X -> Y, from the kernel of the relation system."""
    _same_quiver(X, Y)
    vecs, _, off = _intertwiner_kernel(X, Y)
    return HomSpace(X, Y, [_unflatten(v, X, Y, off) for v in vecs])


def hom_dim(X, Y, route="auto"):
    """dim Hom(X, Y); routes: intertwiner, presentation, copresentation, auto."""
    _same_quiver(X, Y)
    if route == "intertwiner":
        R, n, ncols, _ = _intertwiner_system(X, Y)
        if n == 0 or ncols == 0:
            return n
        return n - rank(RatMatrix(n, ncols, [x for r in R for x in r]))
    return hom_ext_dims(X, Y, route)[0]


def ext1_dim(X, Y, route="auto"):
    """dim Ext^1(X, Y) as the cokernel of Hom(Q0, Y) -> Hom(Q1, Y)."""
    return hom_ext_dims(X, Y, route)[1]


# ---------------------------------------------------------------- endomorphisms

def _intertwiner_kernel(X, Y):
    """Kernel rows of the intertwiner system with their free coordinates."""
    R, n, ncols, off = _intertwiner_system(X, Y)
    if n == 0:
        return [], [], off
    if ncols == 0:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)], list(range(n)), off
    basis, free = left_kernel(RatMatrix(n, ncols, [x for r in R for x in r]))
    return basis, free, off


def _unflatten(vec, X, Y, off):
    return tuple(RatMatrix(X.dim(v), Y.dim(v), vec[off[v]:off[v] + X.dim(v) * Y.dim(v)])
                 for v in X.quiver.vertices)


def end_radical_dim(X):
    """Dimension of the Jacobson radical of End(X).

    Uses the trace form (a, b) -> trace of left multiplication by ab on
    End(X), whose kernel is the radical in characteristic zero.
    """
    vecs, free, off = _intertwiner_kernel(X, X)
    n = len(vecs)
    if n == 0:
        return 0
    basis = [_unflatten(v, X, X, off) for v in vecs]

    def coords(phi):
        # kernel rows restricted to the free coordinates form an identity
        flat = [x for M in phi for x in M.entries]
        return [flat[j] for j in free]

    c = [[coords(tuple(x @ y for x, y in zip(basis[a], basis[b]))) for b in range(n)]
         for a in range(n)]
    t = [sum(c[k][j][j] for j in range(n)) for k in range(n)]
    gram = [[sum(c[a][b][k] * t[k] for k in range(n)) for b in range(n)] for a in range(n)]
    return n - rank(RatMatrix(n, n, [x for r in gram for x in r]))


def is_indecomposable(X):
    """True iff End(X) is local with residue field the base field."""
    if X.is_zero():
        raise ValueError("the zero representation is not a valid input")
    return hom_dim(X, X, route="intertwiner") - end_radical_dim(X) == 1


def _estimated_size(Q, d):
    """Rough size of the matrix B for Ext^1 between modules at d, before resolving.

    Generators are estimated from the generic top and relations from the
    class of the kernel, so this only serves to choose between routes.
    """
    p0 = [max(0, d[v - 1] - sum(d[u - 1] for u, w in Q.arrows if w == v)) for v in Q.vertices]
    # class of Q1 is [Q0] - [X]; P(t) is supported on t and vertices after it
    rest = [sum(p0[v - 1] * len(paths_from(Q, v)[t]) for v in Q.vertices) - d[t - 1]
            for t in Q.vertices]
    p1 = [0] * Q.vertex_count
    for t in Q.topological_order():
        k = max(0, rest[t - 1])
        p1[t - 1] = k
        for s in Q.vertices:
            rest[s - 1] -= k * len(paths_from(Q, t)[s])
    rows = sum(p0[v - 1] * d[v - 1] for v in Q.vertices)
    cols = sum(p1[v - 1] * d[v - 1] for v in Q.vertices)
    return rows * cols


def _check_size(Q, d):
    """Refuse dimension vectors whose self-extension system is beyond the size limit."""
    size = min(_estimated_size(Q, d), _estimated_size(Q.opposite(), d))
    if size > MAX_MATRIX_ENTRIES:
        raise TooLargeError(f"Ext^1 at {tuple(d)} needs a system beyond the size limit")


def _self_route(X):
    """Presentation and target for Ext^1(X, X), resolving X or its dual."""
    D = X.dual()
    _check_size(X.quiver, X.dims)
    if _estimated_size(D.quiver, D.dims) < _estimated_size(X.quiver, X.dims):
        return projective_presentation(D), D
    return projective_presentation(X), X


def is_rigid(X):
    """True iff Ext^1(X, X) = 0."""
    if X.is_zero():
        return True
    pres, Y = _self_route(X)
    _, r, _, c = _blocks(pres, Y)
    if c > r:
        # dim Ext^1 = c - rank >= c - r > 0
        return False
    _, c, k = _hom_ext_rank(pres, Y)
    return c == k


# ---------------------------------------------------------------- generic objects

def _is_rigid_brick(X):
    """End(X) = k and Ext^1(X, X) = 0."""
    pres, Y = _self_route(X)
    r, c, k = _hom_ext_rank(pres, Y, full_rank_only=True)
    # an uncertified rank only costs another trial
    return k is not None and k == c and r - k == 1


def generic_rigid_rep(Q, d, trials=8, bound=10, rng=None):
    """Sample the rigid indecomposable at d and verify End = k and Ext^1 = 0."""
    d = tuple(d)
    if len(d) != Q.vertex_count or any(x < 0 for x in d):
        raise ValueError(f"invalid dimension vector {d}")
    q = tits_form(Q, d)
    if q != 1:
        raise GenericityError(
            f"genericity not attained at {d}: q = {q}, while dim End - dim Ext^1 = 1 is needed")
    _check_size(Q, d)
    if rng is None:
        rng = make_rng(("generic", Q.arrows, d))
    for _ in range(trials):
        X = random_rep(Q, d, bound, rng)
        if _is_rigid_brick(X):
            return X
    raise GenericityError(f"genericity not attained at {d} after {trials} trials")


def generic_module_is_rigid(Q, d, trials=8, bound=10, rng=None):
    """Whether a sampled representation at d is rigid.

    For q(d) <= 0 no representation at d is rigid, because
    dim Ext^1 = dim End - q(d) >= 1, so no sampling is needed.
    """
    d = tuple(d)
    if sum(d) == 0:
        return True
    if tits_form(Q, d) <= 0:
        return False
    if rng is None:
        rng = make_rng(("rigid", Q.arrows, d))
    return any(is_rigid(random_rep(Q, d, bound, rng)) for _ in range(trials))


def is_schur_root(Q, d, trials=8, bound=10, rng=None):
    """One-sided test: some sampled representation at d has End of dimension 1."""
    d = tuple(d)
    if sum(d) == 0:
        return False
    if rng is None:
        rng = make_rng(("schur", Q.arrows, d))
    return any(hom_dim(X, X) == 1 for X in (random_rep(Q, d, bound, rng) for _ in range(trials)))


def iso_check(X, Y, tries=6, bound=10, rng=None):
    """Look for an invertible element of Hom(X, Y) by random combination."""
    _same_quiver(X, Y)
    if X.dims != Y.dims:
        return False
    if X.is_zero():
        return True
    basis = hom_space(X, Y).basis
    if not basis:
        return False
    if rng is None:
        rng = make_rng(("iso", X.dims))
    for _ in range(tries):
        coeffs = [rng.randint(-bound, bound) for _ in basis]
        ok = True
        for v in X.quiver.vertices:
            n = X.dim(v)
            if n == 0:
                continue
            M = RatMatrix(n, n)
            for c, phi in zip(coeffs, basis):
                if c:
                    M = M + phi[v - 1].scale(c)
            if rank(M) != n:
                ok = False
                break
        if ok:
            return True
    return False


def projective_vertex(X):
    """v if X is isomorphic to P(v), else None."""
    pres = projective_presentation(X)
    if len(pres.gens) == 1 and not pres.relations:
        return pres.gens[0][0]
    return None


def injective_vertex(X):
    return projective_vertex(X.dual())


# ---------------------------------------------------------------- translate

def ar_translate(X):
    """The translate D Ext^1(X, kQ), computed exactly.

    At vertex v it is the dual of Ext^1(X, P(v)); the arrow a: u -> w acts
    through left multiplication by a, which maps P(w) into P(u).
    """
    Q = X.quiver
    pres = projective_presentation(X)
    K, free, colmap = {}, {}, {}
    for v in Q.vertices:
        Pv = projective_rep(Q, v)
        B, nrows, ncols = hom_ext_matrix(pres, Pv)
        cols = []
        for h, (t, _) in enumerate(pres.relations):
            for p in paths_from(Q, v)[t]:
                cols.append((h, t, p))
        colmap[v] = {(h, p): j for j, (h, t, p) in enumerate(cols)}
        if ncols == 0:
            K[v], free[v] = [], []
        elif nrows == 0:
            K[v] = [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
            free[v] = list(range(ncols))
        else:
            Bt = RatMatrix(nrows, ncols, [x for r in B for x in r]).transpose()
            K[v], free[v] = left_kernel(Bt)
    dims = tuple(len(K[v]) for v in Q.vertices)
    maps = []
    for a, (u, w) in enumerate(Q.arrows):
        rows = []
        for k in K[u]:
            y = [Fraction(0)] * len(colmap[w])
            for (h, q), jw in colmap[w].items():
                y[jw] = k[colmap[u][(h, (a,) + q)]]
            rows.append([y[j] for j in free[w]])
        maps.append(RatMatrix(dims[u - 1], dims[w - 1], [x for r in rows for x in r]))
    return Rep(Q, dims, maps)


def ar_translate_inverse(X):
    return ar_translate(X.dual()).dual()


# ---------------------------------------------------------------- Kronecker modules

def kronecker_standard(m, which, i, rng=None, trials=8, bound=10):
    """Representative of the preprojective P_i or preinjective I_i of K_m."""
    if m < 1:
        raise ValueError("degree must be at least 1")
    if which not in ("P", "I") or i < 0:
        raise ValueError("which must be 'P' or 'I' and i non-negative")
    Q = Quiver.kronecker(m)
    if which == "P" and i == 0:
        return projective_rep(Q, 1)
    if which == "P" and i == 1:
        return projective_rep(Q, 2)
    if which == "I" and i == 0:
        return injective_rep(Q, 2)
    if which == "I" and i == 1:
        return injective_rep(Q, 1)
    P, I = kronecker_sequences(m, i + 1)
    d = (P if which == "P" else I)[i]
    if rng is None:
        rng = make_rng(("kronecker", m, which, i))
    return generic_rigid_rep(Q, d, trials=trials, bound=bound, rng=rng)


def tau_rigid(X, direction="forward", trials=8, bound=10, rng=None):
    """Translate of a rigid indecomposable, rebuilt by generic sampling."""
    Q = X.quiver
    d = coxeter_transform(Q, X.dims, direction)
    if any(x < 0 for x in d):
        kind = "projective" if direction == "forward" else "injective"
        raise DomainError(f"{X.dims} is {kind}; its translate is zero")
    if rng is None:
        rng = make_rng(("tau", Q.arrows, X.dims, direction))
    return generic_rigid_rep(Q, d, trials=trials, bound=bound, rng=rng)


def rigid_indec_classify(m, bound, trials=8, seed=0):
    """Dimension vectors with entries <= bound carrying a rigid indecomposable of K_m."""
    if m < 2:
        raise ValueError("degree must be at least 2")
    Q = Quiver.kronecker(m)
    found = []
    for a in range(bound + 1):
        for b in range(bound + 1):
            d = (a, b)
            if d == (0, 0) or tits_form(Q, d) != 1:
                continue
            try:
                generic_rigid_rep(Q, d, trials=trials, rng=make_rng((seed, d)))
            except GenericityError:
                continue
            found.append(d)
    return sorted(found)


# ---------------------------------------------------------------- JSON

def _fmt(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rep_to_json(X):
    return {"quiver": X.quiver.to_json(), "dims": list(X.dims),
            "maps": [[[_fmt(x) for x in r] for r in M.to_lists()] for M in X.maps]}


def rep_from_json(obj):
    try:
        Q = Quiver.from_json(obj["quiver"])
        dims = [int(x) for x in obj["dims"]]
        maps = [[[Fraction(str(x)) for x in r] for r in M] for M in obj["maps"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed representation: {exc}") from exc
    return Rep(Q, dims, maps)
