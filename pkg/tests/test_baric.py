"""Weight functionals, bar ideals, b-ideals, and baric quotients."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from baralt import fixtures as fx
from baralt.baric import (
    BaricAlgebra,
    bar_ideal,
    check_weight,
    is_b_ideal,
    quotient_baric,
)
from baralt.errors import NotAnIdealError, WeightError
from baralt.fields import QQ
from baralt.linalg import Subspace

from conftest import q, qv


def elements_of(algebra, max_coeff=3):
    scalar = st.integers(-max_coeff, max_coeff).map(QQ.from_int)
    return st.lists(scalar, min_size=algebra.dim, max_size=algebra.dim).map(tuple)


def test_check_weight_passes_on_projection():
    a = fx.t2().algebra
    assert check_weight(a, qv("1", "0", "0", "0", "0")) is None


def test_check_weight_rejects_zero_functional():
    a = fx.t2().algebra
    wit = check_weight(a, [0, 0, 0, 0, 0])
    assert wit is not None and wit.i == -1
    with pytest.raises(WeightError):
        BaricAlgebra(a, [0, 0, 0, 0, 0])


def test_check_weight_witness_on_bad_functional():
    # w(e11) = 1: first failure in scan order is (e12, e21), since
    # w(e12·e21) = w(e11) = 1 but w(e12)·w(e21) = 0
    a = fx.t2().algebra
    wit = check_weight(a, qv("1", "1", "0", "0", "0"))
    assert wit is not None
    assert (a.labels[wit.i], a.labels[wit.j]) == ("e12", "e21")


def test_bar_ideal_dim_one_fixture():
    assert bar_ideal(fx.t1()).dim == 0


def test_bar_ideal_t2_is_matrix_component():
    u = fx.t2()
    a = u.algebra
    expected = Subspace.from_vectors(QQ, 5, [a.basis_element(i) for i in (1, 2, 3, 4)])
    assert bar_ideal(u) == expected


def test_bar_ideal_codimension_one(all_fixtures):
    for u in all_fixtures.values():
        assert bar_ideal(u).dim == u.dim - 1


def test_bar_absorbs_products(all_fixtures):
    for u in all_fixtures.values():
        a = u.algebra
        bar = bar_ideal(u)
        for b in bar.rows:
            for i in range(a.dim):
                assert bar.contains_vector(a.mul(a.basis_element(i), b))
                assert bar.contains_vector(a.mul(b, a.basis_element(i)))


def test_weight_line_plus_bar_spans(all_fixtures):
    # U = F·u0 ⊕ bar(U) for any u0 of nonzero weight
    for u in all_fixtures.values():
        a = u.algebra
        bar = bar_ideal(u)
        u0 = next(a.basis_element(i) for i in range(a.dim) if u.weight[i])
        line = Subspace.from_vectors(a.field, a.dim, [u0])
        assert line.intersect(bar).dim == 0
        assert line.sum(bar).dim == a.dim


def test_is_b_ideal_cases():
    u = fx.t2()
    a = u.algebra
    assert is_b_ideal(u, Subspace.zero(QQ, 5))
    assert is_b_ideal(u, bar_ideal(u))
    weight_line = Subspace.from_vectors(QQ, 5, [a.basis_element(0)])
    assert not is_b_ideal(u, weight_line)


def test_quotient_baric_by_zero_keeps_weights():
    u = fx.t3()
    bq = quotient_baric(u, Subspace.zero(QQ, 4))
    assert bq.baric.weight == u.weight


def test_quotient_baric_t3():
    u = fx.t3()
    ideal = Subspace.from_vectors(QQ, 4, [u.algebra.element({"e12": 1})])
    bq = quotient_baric(u, ideal)
    assert bq.baric.dim == 3
    assert bar_ideal(bq.baric).dim == 2


def test_quotient_baric_preserves_weight_one():
    u = fx.t6()
    ideal = u.algebra.ideal_generated([u.algebra.element({"j11": 1})])
    bq = quotient_baric(u, ideal)
    one = u.algebra.find_identity()
    assert bq.baric.wt(bq.project(one)) == QQ.one


def test_quotient_baric_rejects_non_b_ideal():
    u = fx.t2()
    line = Subspace.from_vectors(QQ, 5, [u.algebra.basis_element(0)])
    with pytest.raises(NotAnIdealError):
        quotient_baric(u, line)


@given(st.data())
@settings(max_examples=25, deadline=None)
def test_weight_factors_through_projection(data):
    u = fx.t6()
    ideal = u.algebra.ideal_generated([u.algebra.element({"j11": 1})])
    bq = quotient_baric(u, ideal)
    x = data.draw(elements_of(u.algebra))
    assert u.wt(x) == bq.baric.wt(bq.project(x))


def test_projection_section_identity_on_quotient():
    u = fx.t6()
    ideal = u.algebra.ideal_generated([u.algebra.element({"j11": 1})])
    bq = quotient_baric(u, ideal)
    for k in range(bq.baric.dim):
        e = bq.baric.algebra.basis_element(k)
        assert bq.project(bq.embed(e)) == e
