"""Structure-constants representation of a finite-dimensional nonassociative algebra.

Elements are coordinate tuples over the algebra's field. The table entry
table[i][j] is the coordinate vector of b_i·b_j, i.e. the tensor slice c_{ij}^*.
Algebras are immutable after construction; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionMismatchError, NotAnIdealError
from .linalg import (
    Subspace,
    Vector,
    mat_inverse,
    row_mat,
    solve,
    vec_add,
    vec_is_zero,
    vec_sub,
    zero_vector,
)


@dataclass(frozen=True)
class MultOperators:
    """Left and right multiplication matrices of a fixed element."""

    left: tuple
    right: tuple


@dataclass(frozen=True)
class AlternativeWitness:
    """A pair (x, y) violating one of the alternative identities."""

    kind: str  # "left" for (x,x,y) != 0, "right" for (y,x,x) != 0
    x: Vector
    y: Vector


class Algebra:
    """dim, basis labels, and the structure tensor c_{ij}^k over an exact field."""

    def __init__(self, field, table, labels: Optional[Sequence[str]] = None):
        dim = len(table)
        for row in table:
            if len(row) != dim or any(len(cell) != dim for cell in row):
                raise DimensionMismatchError("structure tensor is not dim x dim x dim")
        self.field = field
        self.dim = dim
        self.table = tuple(
            tuple(tuple(field.coerce(c) for c in cell) for cell in row) for row in table
        )
        if labels is None:
            labels = [f"b{i}" for i in range(dim)]
        if len(labels) != dim:
            raise DimensionMismatchError("label count differs from dim")
        self.labels = tuple(labels)
        # sparse view of each product row for fast multiplication
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(cell) if c) for cell in row)
            for row in self.table
        )
        self._cache = {}

    # -- basic element helpers -------------------------------------------------

    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)

    def basis_element(self, i: int) -> Vector:
        return tuple(self.field.one if j == i else self.field.zero for j in range(self.dim))

    def element(self, coeffs) -> Vector:
        """Element from {label_or_index: coefficient}."""
        v = [self.field.zero] * self.dim
        for key, c in coeffs.items():
            i = key if isinstance(key, int) else self.labels.index(key)
            v[i] = self.field.coerce(c)
        return tuple(v)

    # -- multiplication ---------------------------------------------------------

    def mul(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError("element length differs from algebra dimension")
        acc = [self.field.zero] * self.dim
        sparse = self._sparse
        for i, xi in enumerate(x):
            if not xi:
                continue
            srow = sparse[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, ck in srow[j]:
                    acc[k] = acc[k] + c * ck
        return tuple(acc)

    def mul_basis_left(self, i: int, y: Vector) -> Vector:
        """b_i · y"""
        acc = [self.field.zero] * self.dim
        srow = self._sparse[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            for k, ck in srow[j]:
                acc[k] = acc[k] + yj * ck
        return tuple(acc)

    def mul_basis_right(self, x: Vector, j: int) -> Vector:
        """x · b_j"""
        acc = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for k, ck in self._sparse[i][j]:
                acc[k] = acc[k] + xi * ck
        return tuple(acc)

    def lmul_matrix(self, x: Vector) -> tuple:
        """Matrix of y -> x·y on column vectors."""
        cols = [self.mul_basis_right(x, j) for j in range(self.dim)]
        return tuple(tuple(cols[j][k] for j in range(self.dim)) for k in range(self.dim))

    def rmul_matrix(self, x: Vector) -> tuple:
        """Matrix of y -> y·x on column vectors."""
        cols = [self.mul_basis_left(i, x) for i in range(self.dim)]
        return tuple(tuple(cols[i][k] for i in range(self.dim)) for k in range(self.dim))

    def mult_operators(self, x: Vector) -> MultOperators:
        return MultOperators(self.lmul_matrix(x), self.rmul_matrix(x))

    def associator(self, x: Vector, y: Vector, z: Vector) -> Vector:
        return vec_sub(self.mul(self.mul(x, y), z), self.mul(x, self.mul(y, z)))

    def power(self, x: Vector, n: int) -> Vector:
        """x^n by left bracketing; alternative algebras are power-associative."""
        if n < 1:
            raise ValueError("power: exponent must be >= 1")
        acc = x
        for _ in range(n - 1):
            acc = self.mul(x, acc)
        return acc

    # -- identities -------------------------------------------------------------

    def _basis_associator(self, i: int, j: int, k: int) -> Vector:
        return vec_sub(
            self.mul_basis_right(self.table[i][j], k),
            self.mul_basis_left(i, self.table[j][k]),
        )

    def check_alternative(self) -> Optional[AlternativeWitness]:
        """Complete decision procedure over all basis triples (char != 2).

        Checks (b_i,b_i,b_j) = (b_j,b_i,b_i) = 0 plus both multilinearized
        identities; returns a verified witness pair on failure, None on pass.
        """
        n = self.dim
        for i in range(n):
            for j in range(n):
                if not vec_is_zero(self._basis_associator(i, i, j)):
                    return AlternativeWitness("left", self.basis_element(i), self.basis_element(j))
                if not vec_is_zero(self._basis_associator(j, i, i)):
                    return AlternativeWitness("right", self.basis_element(i), self.basis_element(j))
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    lhs = vec_add(self._basis_associator(i, j, k), self._basis_associator(j, i, k))
                    if not vec_is_zero(lhs):
                        return AlternativeWitness(
                            "left", vec_add(self.basis_element(i), self.basis_element(j)), self.basis_element(k)
                        )
        for i in range(n):
            for j in range(n):
                for k in range(j + 1, n):
                    lhs = vec_add(self._basis_associator(i, j, k), self._basis_associator(i, k, j))
                    if not vec_is_zero(lhs):
                        return AlternativeWitness(
                            "right", vec_add(self.basis_element(j), self.basis_element(k)), self.basis_element(i)
                        )
        return None

    def find_identity(self) -> Optional[Vector]:
        """Two-sided unit element, or None. Solves e·b_i = b_i·e = b_i for all i."""
        if "identity" in self._cache:
            return self._cache["identity"]
        F, n = self.field, self.dim
        rows, rhs = [], []
        for i in range(n):
            # (e·b_i)_m = sum_k e_k c_{ki}^m ; (b_i·e)_m = sum_k e_k c_{ik}^m
            for m in range(n):
                rows.append(tuple(self.table[k][i][m] for k in range(n)))
                rhs.append(F.one if m == i else F.zero)
            for m in range(n):
                rows.append(tuple(self.table[i][k][m] for k in range(n)))
                rhs.append(F.one if m == i else F.zero)
        particular, _ = solve(F, rows, rhs)
        self._cache["identity"] = particular
        return particular

    # -- ideals, quotients, subalgebras ----------------------------------------

    def is_ideal(self, s: Subspace) -> bool:
        for v in s.rows:
            for i in range(self.dim):
                if not s.contains_vector(self.mul_basis_left(i, v)):
                    return False
                if not s.contains_vector(self.mul_basis_right(v, i)):
                    return False
        return True

    def ideal_generated(self, gens: Sequence[Vector]) -> Subspace:
        """Smallest subspace containing gens, closed under both multiplications.

        Saturation with a frontier of newly inserted residuals.
        """
        span = Subspace.from_vectors(self.field, self.dim, list(gens))
        frontier = list(span.rows)
        while frontier:
            products = []
            for v in frontier:
                for i in range(self.dim):
                    products.append(self.mul_basis_left(i, v))
                    products.append(self.mul_basis_right(v, i))
            new_span = span.sum(Subspace.from_vectors(self.field, self.dim, products))
            if new_span.dim == span.dim:
                break
            frontier = [r for r in new_span.rows if not span.contains_vector(r)]
            span = new_span
        return span

    def quotient(self, ideal: Subspace) -> "QuotientMap":
        if not self.is_ideal(ideal):
            raise NotAnIdealError("quotient requires a two-sided ideal")
        return QuotientMap._build(self, ideal)

    def restrict(self, sub: Subspace, labels: Optional[Sequence[str]] = None) -> "SubView":
        """View of a multiplicatively closed subspace as an algebra in its own right."""
        rows = sub.rows
        table = []
        for u in rows:
            table_row = []
            for v in rows:
                p = self.mul(u, v)
                if not sub.contains_vector(p):
                    raise NotAnIdealError("restrict: subspace is not multiplicatively closed")
                table_row.append(sub.coords_of(p))
            table.append(table_row)
        if labels is None:
            labels = [f"s{i}" for i in range(sub.dim)]
        sub_alg = Algebra(self.field, table, labels)
        return SubView(self, sub, sub_alg)

    def change_basis(self, p_rows) -> "Algebra":
        """Algebra in the basis whose i-th vector has old coordinates p_rows[i]."""
        inv = mat_inverse(self.field, p_rows)
        if inv is None:
            raise DimensionMismatchError("change_basis: singular matrix")
        n = self.dim
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                prod_old = self.mul(tuple(p_rows[i]), tuple(p_rows[j]))
                row.append(row_mat(self.field, prod_old, inv))
            table.append(row)
        return Algebra(self.field, table, self.labels)


@dataclass(frozen=True)
class QuotientMap:
    """Quotient algebra with its projection and a right-inverse section.

    The quotient basis is the set of non-pivot coordinates of the ideal's RREF
    basis, making both maps deterministic.
    """

    algebra: Algebra
    ideal: Subspace
    kept: tuple  # ambient coordinate indices forming the quotient basis
    quotient: Algebra

    @classmethod
    def _build(cls, alg: Algebra, ideal: Subspace) -> "QuotientMap":
        F = alg.field
        pivots = set(ideal.pivots)
        kept = tuple(c for c in range(alg.dim) if c not in pivots)
        qm = cls.__new__(cls)
        object.__setattr__(qm, "algebra", alg)
        object.__setattr__(qm, "ideal", ideal)
        object.__setattr__(qm, "kept", kept)
        qdim = len(kept)
        table = []
        for a in kept:
            row = []
            for b in kept:
                prod = alg.mul(alg.basis_element(a), alg.basis_element(b))
                red = ideal.reduce(prod)
                row.append(tuple(red[c] for c in kept))
            table.append(row)
        qlabels = [alg.labels[c] for c in kept]
        object.__setattr__(qm, "quotient", Algebra(F, table, qlabels))
        return qm

    def project(self, x: Vector) -> Vector:
        red = self.ideal.reduce(x)
        return tuple(red[c] for c in self.kept)

    def embed(self, q: Vector) -> Vector:
        v = [self.algebra.field.zero] * self.algebra.dim
        for c, qc in zip(self.kept, q):
            v[c] = qc
        return tuple(v)


@dataclass(frozen=True)
class SubView:
    """A multiplicatively closed subspace presented as an algebra, with both maps."""

    parent: Algebra
    subspace: Subspace
    algebra: Algebra

    def up(self, x: Vector) -> Vector:
        return self.subspace.linear_combination(x)

    def down(self, v: Vector) -> Vector:
        return self.subspace.coords_of(v)

    def up_subspace(self, s: Subspace) -> Subspace:
        return Subspace.from_vectors(self.parent.field, self.parent.dim, [self.up(r) for r in s.rows])

    def down_subspace(self, s: Subspace) -> Subspace:
        return Subspace.from_vectors(self.parent.field, self.subspace.dim, [self.down(r) for r in s.rows])


def multiply(a: Algebra, x: Vector, y: Vector) -> Vector:
    return a.mul(x, y)


def associator(a: Algebra, x: Vector, y: Vector, z: Vector) -> Vector:
    return a.associator(x, y, z)


def check_alternative(a: Algebra) -> Optional[AlternativeWitness]:
    return a.check_alternative()


def find_identity(a: Algebra) -> Optional[Vector]:
    return a.find_identity()


def ideal_generated(a: Algebra, gens: Sequence[Vector]) -> Subspace:
    return a.ideal_generated(gens)


def quotient(a: Algebra, ideal: Subspace) -> QuotientMap:
    return a.quotient(ideal)


def change_basis(a: Algebra, p_rows) -> Algebra:
    return a.change_basis(p_rows)


def power(a: Algebra, x: Vector, n: int) -> Vector:
    return a.power(x, n)


def span_of_products(a: Algebra, s1: Subspace, s2: Subspace) -> Subspace:
    """Span of all pairwise products of the two bases."""
    prods = [a.mul(u, v) for u in s1.rows for v in s2.rows]
    return Subspace.from_vectors(a.field, a.dim, prods)
