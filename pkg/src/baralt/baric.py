"""Weight functionals, bar ideals, b-ideals, and baric quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .algebra import Algebra, QuotientMap
from .errors import DimensionMismatchError, NotAnIdealError, WeightError
from .linalg import Subspace, vec_is_zero


@dataclass(frozen=True)
class WeightWitness:
    """Basis pair (i, j) with w(b_i·b_j) != w(b_i)·w(b_j)."""

    i: int
    j: int


def check_weight(a: Algebra, w: Sequence) -> Optional[WeightWitness]:
    """Verify w is a nonzero algebra homomorphism to the base field.

    Returns the first failing basis pair in scan order, or None on pass.
    A zero functional is reported as witness (-1, -1).
    """
    if len(w) != a.dim:
        raise DimensionMismatchError("weight length differs from dim")
    w = tuple(a.field.coerce(c) for c in w)
    if vec_is_zero(w):
        return WeightWitness(-1, -1)
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = sum((c * wk for c, wk in zip(a.table[i][j], w)), a.field.zero)
            if lhs != w[i] * w[j]:
                return WeightWitness(i, j)
    return None


class BaricAlgebra:
    """An algebra together with a weight: a nonzero homomorphism onto the field."""

    def __init__(self, algebra: Algebra, weight: Sequence, validate: bool = True):
        self.algebra = algebra
        self.weight = tuple(algebra.field.coerce(c) for c in weight)
        if validate:
            witness = check_weight(algebra, self.weight)
            if witness is not None:
                if witness.i < 0:
                    raise WeightError("weight must be a nonzero homomorphism onto the field")
                raise WeightError(
                    f"weight is not multiplicative on basis pair "
                    f"({algebra.labels[witness.i]}, {algebra.labels[witness.j]})"
                )

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    def wt(self, x) -> object:
        return sum((c * wk for c, wk in zip(x, self.weight)), self.field.zero)

    def _cached(self, key, fn):
        cache = self.algebra._cache.setdefault(("baric", self.weight), {})
        if key not in cache:
            cache[key] = fn()
        return cache[key]


def bar_ideal(u: BaricAlgebra) -> Subspace:
    """Kernel of the weight: the codimension-1 bar ideal."""

    def compute():
        from .linalg import nullspace

        ker = nullspace(u.field, [u.weight], u.dim)
        sub = Subspace.from_vectors(u.field, u.dim, ker)
        if sub.dim != u.dim - 1:
            raise WeightError("bar ideal does not have codimension 1")
        return sub

    return u._cached("bar", compute)


def is_b_ideal(u: BaricAlgebra, s: Subspace) -> bool:
    """True iff s is inside bar(U) and is a two-sided ideal of U."""
    return bar_ideal(u).contains(s) and u.algebra.is_ideal(s)


@dataclass(frozen=True)
class BaricQuotient:
    """Baric quotient with projection/section; weight is the induced one."""

    qmap: QuotientMap
    baric: BaricAlgebra

    def project(self, x):
        return self.qmap.project(x)

    def embed(self, q):
        return self.qmap.embed(q)


def quotient_baric(u: BaricAlgebra, ideal: Subspace) -> BaricQuotient:
    """Quotient by a b-ideal, carrying the induced weight w(x + I) = w(x)."""
    if not is_b_ideal(u, ideal):
        raise NotAnIdealError("quotient_baric requires a b-ideal")
    qm = u.algebra.quotient(ideal)
    qweight = tuple(u.wt(qm.embed(qm.quotient.basis_element(k))) for k in range(qm.quotient.dim))
    qbar = BaricAlgebra(qm.quotient, qweight)
    return BaricQuotient(qm, qbar)


def change_basis_baric(u: BaricAlgebra, p_rows) -> BaricAlgebra:
    """Conjugate the algebra and transport the weight to the new basis."""
    new_alg = u.algebra.change_basis(p_rows)
    new_weight = tuple(u.wt(tuple(row)) for row in p_rows)
    return BaricAlgebra(new_alg, new_weight)


def restrict_baric(u: BaricAlgebra, sub: Subspace) -> Tuple[BaricAlgebra, object]:
    """Baric view of a multiplicatively closed subspace not inside ker(w)."""
    view = u.algebra.restrict(sub)
    wrow = tuple(u.wt(r) for r in sub.rows)
    return BaricAlgebra(view.algebra, wrow), view
