"""Exact linear algebra over Q and prime fields: RREF, solving, subspaces, polynomials.

Vectors are tuples of scalars; matrices are sequences of row tuples. A Subspace
is identified by the unique reduced row-echelon basis of its span, so subspace
equality is plain `==`. All operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionMismatchError

Vector = tuple
MatrixRows = tuple


def zero_vector(field, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Vector) -> Vector:
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return not any(x)


def identity_rows(field, n: int) -> MatrixRows:
    return tuple(unit_vector(field, n, i) for i in range(n))


def mat_mul(field, a: Sequence[Sequence], b: Sequence[Sequence]) -> MatrixRows:
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append(tuple(sum((x * y for x, y in zip(row, col)), field.zero) for col in bt))
    return tuple(out)


def row_mat(field, v: Sequence, a: Sequence[Sequence]) -> Vector:
    """Row vector v times matrix a."""
    n_out = len(a[0]) if a else 0
    acc = [field.zero] * n_out
    for vi, row in zip(v, a):
        if not vi:
            continue
        for j, rj in enumerate(row):
            if rj:
                acc[j] = acc[j] + vi * rj
    return tuple(acc)


@dataclass(frozen=True)
class Matrix:
    """Rectangular grid of same-field scalars."""

    field: object
    rows: MatrixRows

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise DimensionMismatchError("ragged matrix")
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0


def rref(field, rows: Sequence[Sequence]):
    """Reduced row echelon form. Returns (rows, rank, pivot_cols).

    The output keeps the input shape; it is the unique RREF of the span,
    computed with deterministic first-nonzero pivoting.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = None
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        lead = m[r][c]
        if lead != field.one:
            inv = field.one / lead
            m[r] = [inv * x for x in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i == r:
                continue
            f = m[i][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return tuple(tuple(r_) for r_ in m), len(pivots), tuple(pivots)


def nullspace(field, rows: Sequence[Sequence], ncols: Optional[int] = None):
    """Basis of the (column-vector) kernel of the matrix, one vector per row."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, rank, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(tuple(v))
    return basis


def solve(field, a_rows: Sequence[Sequence], b: Sequence):
    """Solve a·x = b for a column vector x.

    Returns (particular, kernel) where particular is None when inconsistent
    and kernel is the full nullspace of a as a Subspace. The particular
    solution sets all free variables to zero.
    """
    nrows = len(a_rows)
    if nrows != len(b):
        raise DimensionMismatchError("solve: length of b must match row count")
    ncols = len(a_rows[0]) if nrows else 0
    aug = [tuple(row) + (bv,) for row, bv in zip(a_rows, b)]
    red, rank, pivots = rref(field, aug)
    particular: Optional[Vector]
    if ncols in pivots:
        particular = None
    else:
        x = [field.zero] * ncols
        for r, pc in enumerate(pivots):
            x[pc] = red[r][ncols]
        particular = tuple(x)
    kernel = Subspace.from_vectors(field, ncols, nullspace(field, a_rows, ncols))
    return particular, kernel


def mat_inverse(field, rows: Sequence[Sequence]):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [tuple(r) + unit_vector(field, n, i) for i, r in enumerate(rows)]
    red, rank, pivots = rref(field, aug)
    if rank < n or any(p >= n for p in pivots[:n]):
        return None
    return tuple(r[n:] for r in red[:n])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace, canonically represented by its RREF basis rows."""

    field: object
    ambient: int
    rows: MatrixRows
    pivots: tuple

    @classmethod
    def from_vectors(cls, field, ambient: int, vectors: Sequence[Sequence]) -> "Subspace":
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatchError("vector length differs from ambient dimension")
        if not vectors:
            return cls(field, ambient, (), ())
        red, rank, pivots = rref(field, vectors)
        return cls(field, ambient, red[:rank], pivots)

    @classmethod
    def zero(cls, field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field, ambient: int) -> "Subspace":
        return cls(field, ambient, identity_rows(field, ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> Vector:
        """Residual of v after eliminating the pivot coordinates against the basis."""
        if len(v) != self.ambient:
            raise DimensionMismatchError("vector length differs from ambient dimension")
        w = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = w[pc]
            if c:
                for j, rj in enumerate(row):
                    if rj:
                        w[j] = w[j] - c * rj
        return tuple(w)

    def contains_vector(self, v: Sequence) -> bool:
        return vec_is_zero(self.reduce(v))

    def coords_of(self, v: Sequence) -> Vector:
        """Coordinates of v over the RREF basis; raises if v is outside."""
        res = self.reduce(v)
        if not vec_is_zero(res):
            raise DimensionMismatchError("vector not contained in subspace")
        return tuple(v[pc] for pc in self.pivots)

    def linear_combination(self, coeffs: Sequence) -> Vector:
        acc = [self.field.zero] * self.ambient
        for c, row in zip(coeffs, self.rows):
            if not c:
                continue
            for j, rj in enumerate(row):
                if rj:
                    acc[j] = acc[j] + c * rj
        return tuple(acc)

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(self.field, self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection: rows [u|u] and [v|0]; rows with zero left half
        carry the intersection in their right half."""
        self._check_ambient(other)
        F, n = self.field, self.ambient
        z = zero_vector(F, n)
        block = [tuple(u) + tuple(u) for u in self.rows] + [tuple(v) + z for v in other.rows]
        if not block:
            return Subspace.zero(F, n)
        red, rank, _ = rref(F, block)
        inter = [row[n:] for row in red[:rank] if vec_is_zero(row[:n])]
        return Subspace.from_vectors(F, n, inter)

    def _check_ambient(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise DimensionMismatchError("subspaces live in different ambient spaces")


def subspace_ops(s1: Subspace, s2: Subspace):
    """Sum, intersection, and containment (s2 inside s1) in one call."""
    return {"sum": s1.sum(s2), "intersection": s1.intersect(s2), "contains": s1.contains(s2)}


def complement(inner: Subspace, outer: Subspace) -> Subspace:
    """Deterministic direct complement C of inner inside outer (C ⊕ inner = outer).

    Greedy over outer's canonical basis in index order.
    """
    if not outer.contains(inner):
        raise DimensionMismatchError("complement: outer does not contain inner")
    chosen = []
    current = list(inner.rows)
    cur_rank = inner.dim
    for row in outer.rows:
        _, rank, _ = rref(inner.field, current + [row])
        if rank > cur_rank:
            chosen.append(row)
            current.append(row)
            cur_rank = rank
        if cur_rank == outer.dim:
            break
    return Subspace.from_vectors(inner.field, inner.ambient, chosen)


class TrackedSpan:
    """Incremental echelon span remembering how stored rows combine inserted vectors.

    insert(v) returns None when v was independent (and is stored), otherwise the
    coefficients expressing v over the previously inserted vectors.
    """

    def __init__(self, field, width: int):
        self.field = field
        self.width = width
        self._rows = []  # (vector list, combination list, pivot index)
        self.count = 0

    def insert(self, v: Sequence):
        F = self.field
        w = list(v)
        # invariant during reduction: w = v + sum comb[j] * inserted_j
        comb = [F.zero] * self.count
        for row, rcomb, piv in self._rows:
            c = w[piv]
            if c:
                for j in range(self.width):
                    if row[j]:
                        w[j] = w[j] - c * row[j]
                for j in range(len(rcomb)):
                    if rcomb[j]:
                        comb[j] = comb[j] - c * rcomb[j]
        piv = next((j for j in range(self.width) if w[j]), None)
        if piv is None:
            self.count += 1
            return tuple(-c for c in comb)
        inv = F.one / w[piv]
        w = [inv * x for x in w]
        full = [inv * x for x in comb] + [inv]
        self._rows.append((w, full, piv))
        self.count += 1
        return None


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial, coefficients low-degree first, normalized."""

    field: object
    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        inv = self.field.one / self.coeffs[-1]
        return Polynomial(self.field, tuple(inv * c for c in self.coeffs))

    def __add__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [F.zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [F.zero] * (n - len(other.coeffs))
        return Polynomial(F, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [F.zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [F.zero] * (n - len(other.coeffs))
        return Polynomial(F, tuple(x - y for x, y in zip(a, b)))

    def __mul__(self, other):
        F = self.field
        if self.is_zero or other.is_zero:
            return Polynomial(F, ())
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(F, tuple(out))

    def scale(self, c) -> "Polynomial":
        return Polynomial(self.field, tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by T^k."""
        if self.is_zero:
            return self
        return Polynomial(self.field, (self.field.zero,) * k + self.coeffs)

    def divmod(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = F.one / other.leading()
        quo = [F.zero] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c * lead_inv
            quo[i - d] = f
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] = rem[i - d + j] - f * b
        return Polynomial(F, tuple(quo)), Polynomial(F, tuple(rem))

    def __mod__(self, other):
        return self.divmod(other)[1]

    def eval(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, field, op_rows):
        """Evaluate on a square matrix (constant term times identity)."""
        n = len(op_rows)
        acc = [[field.zero] * n for _ in range(n)]
        for c in reversed(self.coeffs):
            acc = [list(r) for r in mat_mul(field, acc, op_rows)]
            for i in range(n):
                acc[i][i] = acc[i][i] + c
        return tuple(tuple(r) for r in acc)

    def deflate(self, r):
        """Divide by (T − r); remainder must be zero."""
        F = self.field
        lin = Polynomial(F, (-r, F.one))
        q, rem = self.divmod(lin)
        if not rem.is_zero:
            raise ValueError("deflate: r is not a root")
        return q

    def root_multiplicity(self, r) -> int:
        p, k = self, 0
        while not p.is_zero and not p.eval(r):
            p = p.deflate(r)
            k += 1
        return k


def poly_xgcd(a: Polynomial, b: Polynomial):
    """Extended Euclid: returns (g, u, v) monic g with u·a + v·b = g."""
    F = a.field
    zero, one = Polynomial(F, ()), Polynomial(F, (F.one,))
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    inv = F.one / r0.leading()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def minimal_polynomial(field, op_rows: Sequence[Sequence]) -> Polynomial:
    """Monic least-degree polynomial annihilating a square matrix.

    Found by inserting flattened powers I, A, A², ... into a tracked span until
    the first linear dependence.
    """
    n = len(op_rows)
    if n == 0:
        return Polynomial(field, (field.zero, field.one)).monic()  # x annihilates the empty operator
    span = TrackedSpan(field, n * n)
    power = identity_rows(field, n)
    while True:
        flat = tuple(x for row in power for x in row)
        comb = span.insert(flat)
        if comb is not None:
            # A^k = sum comb[i] A^i  =>  monic poly T^k - sum comb[i] T^i
            coeffs = [-c for c in comb] + [field.one]
            return Polynomial(field, tuple(coeffs))
        power = mat_mul(field, power, op_rows)


def _int_divisors(n: int):
    n = abs(n)
    if n == 0:
        return [1]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
        if d > 10**6:
            # desk-scale cutoff: divisors beyond this bound are not enumerated;
            # callers must treat missing roots as non-split signals
            break
    return small + large[::-1]


def rational_roots(p: Polynomial):
    """All roots of p in its base field, with multiplicity, sorted ascending.

    Over Q: integer divisor search on the primitive integer form. Over F_p:
    exhaustive evaluation. Never produces roots outside the base field.
    """
    if p.is_zero:
        raise ValueError("rational_roots: zero polynomial")
    F = p.field
    roots = []
    if getattr(F, "characteristic", 0) != 0:
        q = p
        for v in range(F.p):
            r = F.from_int(v)
            while not q.is_zero and q.degree >= 1 and not q.eval(r):
                roots.append(r)
                q = q.deflate(r)
        return sorted(roots)
    # multiplicity of the root 0
    q = p
    while q.degree >= 1 and not q.coeffs[0]:
        roots.append(F.zero)
        q = Polynomial(F, q.coeffs[1:])
    if q.degree < 1:
        return sorted(roots)
    # clear denominators to a primitive integer polynomial
    deno = 1
    for c in q.coeffs:
        deno = deno * c.denominator // _gcd(deno, c.denominator)
    ints = [int(c * deno) for c in q.coeffs]
    g = 0
    for c in ints:
        g = _gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    a0, an = ints[0], ints[-1]
    candidates = set()
    for num in _int_divisors(a0):
        for den in _int_divisors(an):
            if _gcd(num, den) == 1:
                candidates.add(F.parse(f"{num}/{den}"))
                candidates.add(F.parse(f"-{num}/{den}"))
    for r in sorted(candidates):
        while q.degree >= 1 and not q.eval(r):
            roots.append(r)
            q = q.deflate(r)
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
