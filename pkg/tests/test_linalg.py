"""Exact linear algebra kernel: RREF, solving, subspaces, polynomials."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from baralt.fields import GF, QQ
from baralt.errors import DimensionMismatchError
from baralt.linalg import (
    Matrix,
    Polynomial,
    Subspace,
    complement,
    identity_rows,
    minimal_polynomial,
    rational_roots,
    rref,
    solve,
    subspace_ops,
    vec_is_zero,
)

from conftest import q, qv


def rows(*rs):
    return tuple(qv(*r) for r in rs)


small_scalar = st.integers(-6, 6).map(lambda n: QQ.from_int(n))


def matrices(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(1, max_n).flatmap(
            lambda m: st.lists(
                st.lists(small_scalar, min_size=m, max_size=m), min_size=n, max_size=n
            )
        )
    )


# -- rref ---------------------------------------------------------------------


def test_matrix_value_type():
    m = Matrix(QQ, rows(["1", "2"], ["3", "4"]))
    assert m.nrows == 2 and m.ncols == 2
    with pytest.raises(DimensionMismatchError):
        Matrix(QQ, (qv("1", "2"), qv("3")))


def test_rref_identity_is_fixed():
    ident = identity_rows(QQ, 2)
    red, rank, pivots = rref(QQ, ident)
    assert red == ident and rank == 2 and pivots == (0, 1)


def test_rref_rank_one_example():
    # hand row-reduction: R2 -= R1/2, then scale R1
    red, rank, pivots = rref(QQ, rows(["2", "4"], ["1", "2"]))
    assert red == rows(["1", "2"], ["0", "0"])
    assert rank == 1 and pivots == (0,)


def test_rref_zero_matrix():
    z = rows(["0", "0"], ["0", "0"])
    red, rank, pivots = rref(QQ, z)
    assert red == z and rank == 0 and pivots == ()


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rref_is_idempotent(m):
    red, rank, piv = rref(QQ, m)
    again, rank2, piv2 = rref(QQ, red)
    assert again == red and rank2 == rank and piv2 == piv


# -- solve --------------------------------------------------------------------


def test_solve_identity_case():
    b = qv("3", "-7")
    particular, kernel = solve(QQ, identity_rows(QQ, 2), b)
    assert particular == b and kernel.dim == 0


def test_solve_underdetermined():
    # x + y = 2: particular sets the free variable to zero
    particular, kernel = solve(QQ, rows(["1", "1"]), qv("2"))
    assert particular == qv("2", "0")
    assert kernel.dim == 1


def test_solve_inconsistent():
    particular, kernel = solve(QQ, rows(["1"], ["1"]), qv("0", "1"))
    assert particular is None and kernel.dim == 0


@given(matrices(), st.lists(small_scalar, min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_solve_postconditions(m, x):
    # build a consistent system from a random solution
    ncols = len(m[0])
    xs = (list(x) + [QQ.zero] * ncols)[:ncols]
    b = [sum((r[j] * xs[j] for j in range(ncols)), QQ.zero) for r in m]
    particular, kernel = solve(QQ, m, b)
    assert particular is not None
    check = [sum((r[j] * particular[j] for j in range(ncols)), QQ.zero) for r in m]
    assert check == b
    for k in kernel.rows:
        img = [sum((r[j] * k[j] for j in range(ncols)), QQ.zero) for r in m]
        assert all(not c for c in img)


# -- subspaces ----------------------------------------------------------------


def test_subspace_ops_idempotence():
    s = Subspace.from_vectors(QQ, 3, rows(["1", "1", "0"]))
    ops = subspace_ops(s, s)
    assert ops["sum"] == s and ops["intersection"] == s and ops["contains"]


def test_subspace_ops_complementary_axes():
    x_axis = Subspace.from_vectors(QQ, 2, rows(["1", "0"]))
    y_axis = Subspace.from_vectors(QQ, 2, rows(["0", "1"]))
    ops = subspace_ops(x_axis, y_axis)
    assert ops["sum"] == Subspace.full(QQ, 2)
    assert ops["intersection"].dim == 0
    assert not ops["contains"]


def test_subspace_containment():
    small = Subspace.from_vectors(QQ, 3, rows(["1", "1", "0"]))
    big = Subspace.from_vectors(QQ, 3, rows(["1", "1", "0"], ["0", "0", "1"]))
    assert big.contains(small) and not small.contains(big)


@given(matrices(3), matrices(3))
@settings(max_examples=60, deadline=None)
def test_dimension_formula(m1, m2):
    n = 3
    pad = lambda m: [tuple((list(r) + [QQ.zero] * n)[:n]) for r in m]
    s1 = Subspace.from_vectors(QQ, n, pad(m1))
    s2 = Subspace.from_vectors(QQ, n, pad(m2))
    assert s1.sum(s2).dim + s1.intersect(s2).dim == s1.dim + s2.dim


def test_complement_zero_inner_returns_outer():
    outer = Subspace.from_vectors(QQ, 3, rows(["1", "0", "2"], ["0", "1", "1"]))
    assert complement(Subspace.zero(QQ, 3), outer) == outer


def test_complement_full_inner_returns_zero():
    outer = Subspace.from_vectors(QQ, 2, rows(["1", "0"], ["0", "1"]))
    assert complement(outer, outer).dim == 0


def test_complement_greedy_choice_is_forced():
    inner = Subspace.from_vectors(QQ, 2, rows(["1", "0"]))
    outer = Subspace.full(QQ, 2)
    assert complement(inner, outer) == Subspace.from_vectors(QQ, 2, rows(["0", "1"]))


@given(matrices(4))
@settings(max_examples=40, deadline=None)
def test_complement_properties(m):
    ncols = len(m[0])
    outer = Subspace.from_vectors(QQ, ncols, m)
    if outer.dim == 0:
        return
    inner = Subspace.from_vectors(QQ, ncols, outer.rows[: outer.dim // 2])
    comp = complement(inner, outer)
    assert inner.dim + comp.dim == outer.dim
    assert inner.intersect(comp).dim == 0
    assert inner.sum(comp) == outer


# -- minimal polynomial -------------------------------------------------------


def test_minimal_polynomial_zero_operator():
    z = rows(["0", "0"], ["0", "0"])
    p = minimal_polynomial(QQ, z)
    assert p.coeffs == (QQ.zero, QQ.one)  # T


def test_minimal_polynomial_identity():
    p = minimal_polynomial(QQ, identity_rows(QQ, 3))
    assert p.coeffs == (QQ.parse("-1"), QQ.one)  # T - 1


def test_minimal_polynomial_nilpotent_jordan_block():
    # J² = 0 by hand, J != 0
    j = rows(["0", "1"], ["0", "0"])
    p = minimal_polynomial(QQ, j)
    assert p.coeffs == (QQ.zero, QQ.zero, QQ.one)  # T²


@given(matrices(3))
@settings(max_examples=40, deadline=None)
def test_minimal_polynomial_annihilates(m):
    n = len(m)
    sq = [tuple((list(r) + [QQ.zero] * n)[:n]) for r in m][:n]
    while len(sq) < n:
        sq.append(tuple([QQ.zero] * n))
    p = minimal_polynomial(QQ, sq)
    val = p.eval_matrix(QQ, sq)
    assert all(vec_is_zero(r) for r in val)


# -- rational roots -----------------------------------------------------------


def test_rational_roots_idempotent_polynomial():
    p = Polynomial(QQ, (QQ.zero, QQ.parse("-1"), QQ.one))  # T² − T
    assert rational_roots(p) == [QQ.zero, QQ.one]


def test_rational_roots_factorable():
    p = Polynomial(QQ, (QQ.parse("2"), QQ.parse("-3"), QQ.one))  # (T−1)(T−2)
    assert rational_roots(p) == [QQ.one, QQ.parse("2")]


def test_rational_roots_none_over_q():
    p = Polynomial(QQ, (QQ.one, QQ.zero, QQ.one))  # T² + 1
    assert rational_roots(p) == []


def test_rational_roots_with_multiplicity():
    # (T − 1/2)² cleared: hand expansion T² − T + 1/4
    p = Polynomial(QQ, (q("1/4"), q("-1"), QQ.one))
    assert rational_roots(p) == [q("1/2"), q("1/2")]


def test_rational_roots_non_monic():
    # 2T² − 3T + 1 = (2T − 1)(T − 1) by hand
    p = Polynomial(QQ, (QQ.one, q("-3"), q("2")))
    assert rational_roots(p) == [q("1/2"), QQ.one]


def test_rational_roots_prime_field():
    F = GF(7)
    # T² − 1 = (T−1)(T−6) over F_7
    p = Polynomial(F, (F.parse("-1"), F.zero, F.one))
    assert rational_roots(p) == [F.one, F.from_int(6)]


def test_prime_field_arithmetic():
    F = GF(7)
    a = F.from_int(3)
    assert a + 5 == 1 and a * 5 == 1 and -a == 4
    assert (F.one / a) * a == F.one
    with pytest.raises(Exception):
        GF(5)
    with pytest.raises(Exception):
        GF(9)
