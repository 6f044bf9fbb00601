"""Nilpotency tests, the nilradical R(U) with certificates, and the b-radical.

The nilradical candidate comes from the radical of the trace form
B(x,y) = trace(L_{xy} + R_{xy}); the result is only accepted once three
certificates pass: the candidate is an ideal, its power chain reaches zero,
and no ambient basis vector outside it generates a nilpotent enlargement.
A greedy direct search backs the trace form up when certification fails,
so correctness never depends on which method produced the candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .algebra import Algebra, span_of_products
from .baric import BaricAlgebra, bar_ideal, is_b_ideal
from .errors import NotAnIdealError, VerificationError
from .linalg import Subspace, nullspace, vec_is_zero


@dataclass(frozen=True)
class NilCertificate:
    """Strictly decreasing chain I ⊇ I² ⊇ ... ending at {0}."""

    ideal: Subspace
    chain: tuple
    nil_index: int


@dataclass(frozen=True)
class RadicalReport:
    nilradical: Subspace
    b_radical: Subspace
    semisimple: bool
    b_semisimple: bool


def is_nilpotent_element(a: Algebra, x) -> Tuple[bool, Optional[int]]:
    """First n <= dim+1 with x^n = 0, or (False, None)."""
    acc = x
    for n in range(1, a.dim + 2):
        if vec_is_zero(acc):
            return True, n
        acc = a.mul(x, acc)
    return False, None


def ideal_power_chain(a: Algebra, ideal: Subspace) -> Optional[NilCertificate]:
    """Iterate I^{k+1} = I^k·I + I·I^k until {0} (certificate) or stabilization (None).

    The chain is monotonically decreasing: I^{k+1} ⊆ I^k holds by induction
    once I is an ideal.
    """
    if not a.is_ideal(ideal):
        raise NotAnIdealError("ideal_power_chain requires an ideal")
    chain = [ideal]
    cur = ideal
    while cur.dim > 0:
        prods = [a.mul(u, v) for u in cur.rows for v in ideal.rows]
        prods += [a.mul(v, u) for u in cur.rows for v in ideal.rows]
        nxt = Subspace.from_vectors(a.field, a.dim, prods)
        if nxt.dim == cur.dim:
            return None
        chain.append(nxt)
        cur = nxt
    return NilCertificate(ideal, tuple(chain), len(chain))


def _trace_form_radical(a: Algebra) -> Subspace:
    """Nullspace of the Gram matrix of B(x,y) = tr(L_{xy} + R_{xy})."""
    F, n = a.field, a.dim
    tl = [sum((a.table[i][k][k] for k in range(n)), F.zero) for i in range(n)]
    tr = [sum((a.table[k][i][k] for k in range(n)), F.zero) for i in range(n)]
    weights = [tl[m] + tr[m] for m in range(n)]
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            cell = a.table[i][j]
            row.append(sum((cell[m] * weights[m] for m in range(n) if cell[m]), F.zero))
        gram.append(tuple(row))
    return Subspace.from_vectors(F, n, nullspace(F, gram, n))


def _extension_is_nilpotent(a: Algebra, n_sub: Subspace, vidx: int, qm=None) -> bool:
    """Whether ideal_generated(N ∪ {b_vidx}) is nilpotent.

    Fast path: the image ideal in U/N; a non-nilpotent image certifies a
    non-nilpotent extension. Falls back to the full ambient computation.
    """
    if qm is not None:
        img = qm.quotient.ideal_generated([qm.project(a.basis_element(vidx))])
        if ideal_power_chain(qm.quotient, img) is None:
            return False
    ext = a.ideal_generated(list(n_sub.rows) + [a.basis_element(vidx)])
    return ideal_power_chain(a, ext) is not None


def _certify_nilradical(a: Algebra, cand: Subspace) -> bool:
    """(a) ideal, (b) nilpotent chain, (c) basis-vector maximality oracle."""
    if not a.is_ideal(cand):
        return False
    if ideal_power_chain(a, cand) is None:
        return False
    qm = a.quotient(cand)
    for v in range(a.dim):
        if cand.contains_vector(a.basis_element(v)):
            continue
        if _extension_is_nilpotent(a, cand, v, qm):
            return False
    return True


def _greedy_nil_ideal(a: Algebra, seed_rows) -> Subspace:
    """Grow a nil ideal by vectors whose generated enlargement stays nilpotent."""
    n_sub = Subspace.zero(a.field, a.dim)
    candidates = list(seed_rows) + [a.basis_element(i) for i in range(a.dim)]
    changed = True
    while changed:
        changed = False
        for v in candidates:
            if n_sub.contains_vector(v):
                continue
            ext = a.ideal_generated(list(n_sub.rows) + [tuple(v)])
            if ideal_power_chain(a, ext) is not None:
                n_sub = ext
                changed = True
    return n_sub


def nilradical(a: Algebra) -> Subspace:
    """The unique maximal nil ideal R(U), always returned with certificates.

    Raises VerificationError when no candidate passes the maximality oracle.
    """
    if "nilradical" in a._cache:
        return a._cache["nilradical"]
    cand = _trace_form_radical(a)
    if not _certify_nilradical(a, cand):
        cand = _greedy_nil_ideal(a, cand.rows)
        if not _certify_nilradical(a, cand):
            raise VerificationError("nilradical: no candidate passes the maximality oracle")
    a._cache["nilradical"] = cand
    return cand


def nilradical_report(a: Algebra):
    """Nilradical plus its certificates, for reporting."""
    rad = nilradical(a)
    cert = ideal_power_chain(a, rad)
    outside = [i for i in range(a.dim) if not rad.contains_vector(a.basis_element(i))]
    return rad, cert, outside


def peirce_radical_check(a: Algebra, e) -> bool:
    """R(U_ii) = R(U) ∩ U_ii for the diagonal Peirce corners of an idempotent."""
    from .peirce import peirce_single

    system = peirce_single(a, e)
    rad = nilradical(a)
    for i in (0, 1):
        corner = system.components[(i, i)]
        if corner.dim == 0:
            if rad.intersect(corner).dim != 0:
                return False
            continue
        view = a.restrict(corner)
        corner_rad = view.up_subspace(nilradical(view.algebra))
        if corner_rad != rad.intersect(corner):
            return False
    return True


def bar_square(u: BaricAlgebra) -> Subspace:
    """Span of all pairwise products of a bar(U) basis."""
    bar = bar_ideal(u)
    return span_of_products(u.algebra, bar, bar)


def b_radical(u: BaricAlgebra) -> Subspace:
    """rad(U) = bar(U)² ∩ R(U); certified to be a b-ideal."""

    def compute():
        rad = bar_square(u).intersect(nilradical(u.algebra))
        if not is_b_ideal(u, rad):
            raise VerificationError("b_radical: result failed the b-ideal certificate")
        return rad

    return u._cached("b_radical", compute)


def is_b_semisimple(u: BaricAlgebra) -> bool:
    return b_radical(u).dim == 0


def radical_report(u: BaricAlgebra) -> RadicalReport:
    nil = nilradical(u.algebra)
    brad = b_radical(u)
    return RadicalReport(nil, brad, nil.dim == 0, brad.dim == 0)
