"""Peirce systems, relation verification, and idempotent extraction."""

import math

import pytest

from baralt import fixtures as fx
from baralt.errors import LiftError, NotIdempotentError, OrthogonalityError
from baralt.fields import QQ
from baralt.linalg import Subspace
from baralt.peirce import (
    PeirceSystem,
    find_weight_one_idempotent,
    hensel_idempotent,
    hensel_max_steps,
    is_idempotent,
    peirce_set,
    peirce_single,
    principal_idempotent,
    spectral_root_idempotent,
    verify_peirce_relations,
)


def test_peirce_single_unity():
    a = fx.t2().algebra
    system = peirce_single(a, a.find_identity())
    dims = system.component_dims()
    assert dims[(1, 1)] == a.dim
    assert dims[(1, 0)] == dims[(0, 1)] == dims[(0, 0)] == 0


def test_peirce_single_t2_memberships():
    a = fx.t2().algebra
    system = peirce_single(a, a.element({"e11": 1}))
    comp = system.components
    assert comp[(1, 1)].contains_vector(a.element({"e11": 1}))
    assert comp[(1, 0)].contains_vector(a.element({"e12": 1}))
    assert comp[(0, 1)].contains_vector(a.element({"e21": 1}))
    assert comp[(0, 0)].contains_vector(a.element({"e22": 1}))
    # the adjoined unit splits as e11 + (u − e11), so the (0,0) corner is 2-dim
    dims = system.component_dims()
    assert (dims[(1, 1)], dims[(1, 0)], dims[(0, 1)], dims[(0, 0)]) == (1, 1, 1, 2)


def test_peirce_single_zorn_corner_dims():
    z = fx.zorn_algebra()
    system = peirce_single(z, z.basis_element(0))
    dims = system.component_dims()
    assert (dims[(1, 1)], dims[(1, 0)], dims[(0, 1)], dims[(0, 0)]) == (1, 3, 3, 1)


def test_peirce_eigen_definitions_hold_literally(all_fixtures):
    a = all_fixtures["t6"].algebra
    e = a.element({"e11": 1})
    system = peirce_single(a, e)
    for (i, j), comp in system.components.items():
        for x in comp.rows:
            assert a.mul(e, x) == tuple(QQ.from_int(i) * c for c in x)
            assert a.mul(x, e) == tuple(QQ.from_int(j) * c for c in x)


def test_peirce_set_reduces_to_single():
    a = fx.t2().algebra
    e = a.element({"e11": 1})
    single = peirce_single(a, e)
    multi = peirce_set(a, [e])
    assert single.component_dims() == multi.component_dims()


def test_peirce_set_t2_full_diagonal():
    a = fx.t2().algebra
    e11, e22 = a.element({"e11": 1}), a.element({"e22": 1})
    system = peirce_set(a, [e11, e22])
    comp = system.components
    assert comp[(1, 2)] == Subspace.from_vectors(QQ, 5, [a.element({"e12": 1})])
    assert comp[(2, 1)] == Subspace.from_vectors(QQ, 5, [a.element({"e21": 1})])
    assert comp[(1, 1)] == Subspace.from_vectors(QQ, 5, [e11])
    assert comp[(2, 2)] == Subspace.from_vectors(QQ, 5, [e22])
    # adjoined-unit complement line u − e11 − e22
    assert comp[(0, 0)] == Subspace.from_vectors(
        QQ, 5, [a.element({"u": 1, "e11": -1, "e22": -1})]
    )


def test_peirce_completeness(all_fixtures):
    for name, u in all_fixtures.items():
        a = u.algebra
        e = principal_idempotent(u).element
        system = peirce_single(a, e)
        assert sum(system.component_dims().values()) == a.dim, name


def test_peirce_set_rejects_non_orthogonal():
    a = fx.t2().algebra
    e11 = a.element({"e11": 1})
    one = a.find_identity()
    with pytest.raises(OrthogonalityError):
        peirce_set(a, [e11, one])
    with pytest.raises(NotIdempotentError):
        peirce_set(a, [a.element({"e12": 1})])


def test_verify_relations_pass_on_fixtures(all_fixtures):
    for name, u in all_fixtures.items():
        a = u.algebra
        e = principal_idempotent(u).element
        assert verify_peirce_relations(peirce_single(a, e)) is None, name


def test_verify_relations_off_diagonal_squares():
    # U_10·U_10 ⊆ U_01 with nonzero products in the split Cayley algebra
    z = fx.zorn_algebra()
    system = peirce_single(z, z.basis_element(0))
    u10 = system.components[(1, 0)]
    u01 = system.components[(0, 1)]
    x, y = u10.rows[0], u10.rows[1]
    p = z.mul(x, y)
    assert not all(not c for c in p)
    assert u01.contains_vector(p)


def test_verify_relations_catches_doctored_system():
    a = fx.t2().algebra
    system = peirce_single(a, a.element({"e11": 1}))
    comps = dict(system.components)
    comps[(1, 0)], comps[(0, 1)] = comps[(0, 1)], comps[(1, 0)]
    doctored = PeirceSystem(a, system.idempotents, comps)
    assert verify_peirce_relations(doctored) is not None


# -- idempotent extraction ------------------------------------------------------


def test_hensel_converges_from_unit_plus_nilpotent():
    u = fx.t3()
    a = u.algebra
    x = a.element({"u": 1, "e12": 1})
    e, steps = hensel_idempotent(a, x)
    assert e == a.find_identity()
    assert steps == 1


def test_hensel_rejects_divergent_defect():
    a = fx.t2().algebra
    with pytest.raises(LiftError):
        hensel_idempotent(a, a.element({"u": 1, "e11": 1}))


def test_hensel_step_bound(all_fixtures):
    # convergence in at most ceil(log2(dim+1)) steps whenever the defect is nil
    u = all_fixtures["t4"]
    a = u.algebra
    x = a.element({"one": 1, "x1": 1, "x3": -2})  # unit plus nilpotent
    e, steps = hensel_idempotent(a, x)
    assert is_idempotent(a, e)
    assert steps <= hensel_max_steps(a.dim) == math.ceil(math.log2(a.dim + 1))


def test_spectral_idempotent_splits_eigenvalue_one():
    a = fx.t2().algebra
    x = a.element({"u": 1, "e11": 1})  # eigenvalues 1 and 2 in F[x]
    e = spectral_root_idempotent(a, x, QQ.one)
    assert e == a.element({"u": 1, "e11": -1})
    assert is_idempotent(a, e)


def test_find_weight_one_idempotent_dim_one():
    u = fx.t1()
    assert find_weight_one_idempotent(u).element == (QQ.one,)


def test_find_weight_one_idempotent_postconditions(all_fixtures):
    for name, u in all_fixtures.items():
        e = find_weight_one_idempotent(u)
        assert is_idempotent(u.algebra, e.element), name
        assert u.wt(e.element) == QQ.one, name


def test_find_weight_one_on_conjugates():
    for seed in range(6):
        u = fx.conjugated(fx.t5(), seed)
        e = find_weight_one_idempotent(u)
        assert is_idempotent(u.algebra, e.element)
        assert u.wt(e.element) == QQ.one


def test_principal_idempotent_unital_cases():
    for ctor in (fx.t2, fx.t3):
        u = ctor()
        e = principal_idempotent(u)
        assert e.element == u.algebra.find_identity()


def test_principal_idempotent_non_unital():
    u = fx.t7()
    e = principal_idempotent(u)
    assert e.element == u.algebra.basis_element(0)
    system = peirce_single(u.algebra, e.element)
    assert system.components[(0, 0)].dim == 0
    # n sits in the (1,0) component: c·n = n, n·c = 0
    assert system.components[(1, 0)].contains_vector(u.algebra.basis_element(1))


def test_principal_idempotent_growth_loop():
    # on this conjugate the weight-one idempotent leaves the whole Cayley part
    # in the (0,0) corner; the principal search must absorb idempotents from it
    u = fx.conjugated(fx.zorn_baric(), 2)
    e0 = find_weight_one_idempotent(u)
    assert peirce_single(u.algebra, e0.element).components[(0, 0)].dim == 8
    e = principal_idempotent(u)
    assert e.element != e0.element
    assert peirce_single(u.algebra, e.element).components[(0, 0)].dim == 0


def test_principal_idempotent_has_nil_corner(all_fixtures):
    from baralt.radical import ideal_power_chain

    for name, u in all_fixtures.items():
        e = principal_idempotent(u)
        assert u.wt(e.element) == QQ.one, name
        corner = peirce_single(u.algebra, e.element).components[(0, 0)]
        if corner.dim:
            view = u.algebra.restrict(corner)
            assert ideal_power_chain(view.algebra, Subspace.full(QQ, corner.dim)) is not None
