"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v` (add -s to see the lines live).
All tolerances are exact equality: the engine computes over Q or F_p and no
check in this file accepts an approximation.
"""

import json
import math

from baralt import fixtures as fx
from baralt.baric import quotient_baric
from baralt.fields import QQ
from baralt.files import decomposition_to_text, parse_decomposition_text
from baralt.lifting import (
    LiftContext,
    lift_cayley,
    lift_matrix_units,
    lift_orthogonal_set,
    verify_matrix_units,
)
from baralt.linalg import Subspace, vec_add, vec_is_zero
from baralt.peirce import (
    Idempotent,
    find_weight_one_idempotent,
    hensel_idempotent,
    hensel_max_steps,
    is_idempotent,
    peirce_single,
    principal_idempotent,
    verify_peirce_relations,
)
from baralt.radical import b_radical, ideal_power_chain, nilradical
from baralt.structure import (
    matrix_units_of_simple,
    simple_components,
    split_semisimple_bar,
    zorn_frame_of_cayley,
)
from baralt.wedderburn import decompose, verify_decomposition

CONJUGATES = 50
CAYLEY_CONJUGATES = 25
PERTURBATIONS = 20


def _report(n, text):
    print(f"ACCEPTANCE CRITERION {n}: PASS — {text}")


def test_criterion_1_axiom_suite(all_fixtures):
    # complete linearized-identity scan (no sampling): all fixtures pass,
    # 20 seeded single-coefficient perturbations of Zorn fail with a witness
    for name, u in all_fixtures.items():
        assert u.algebra.check_alternative() is None, name
    assert fx.zorn_algebra().check_alternative() is None
    for seed in range(PERTURBATIONS):
        perturbed = fx.perturbed_zorn(seed)
        wit = perturbed.check_alternative()
        assert wit is not None, f"perturbation seed {seed} stayed alternative"
        if wit.kind == "left":
            assert not vec_is_zero(perturbed.associator(wit.x, wit.x, wit.y))
        else:
            assert not vec_is_zero(perturbed.associator(wit.y, wit.x, wit.x))
    _report(1, f"axiom suite on T1–T9 + Zorn, {PERTURBATIONS} perturbation witnesses")


def test_criterion_2_peirce_suite(all_fixtures):
    checked = 0
    for name, u in all_fixtures.items():
        a = u.algebra
        produced = [find_weight_one_idempotent(u).element, principal_idempotent(u).element]
        for e in produced:
            system = peirce_single(a, e)
            assert verify_peirce_relations(system) is None, name
            assert sum(system.component_dims().values()) == a.dim, name
            checked += 1
    z = fx.zorn_algebra()
    system = peirce_single(z, z.basis_element(0))
    dims = system.component_dims()
    assert (dims[(1, 1)], dims[(1, 0)], dims[(0, 1)], dims[(0, 0)]) == (1, 3, 3, 1)
    assert verify_peirce_relations(system) is None
    _report(2, f"{checked} engine idempotents verified; Zorn corners (1,3,3,1)")


def test_criterion_3_radical_suite(all_fixtures):
    small = 0
    for name, u in all_fixtures.items():
        if u.dim > 9:
            continue
        a = u.algebra
        rad = nilradical(a)
        assert a.is_ideal(rad), name
        assert ideal_power_chain(a, rad) is not None, name
        for i in range(a.dim):
            v = a.basis_element(i)
            if rad.contains_vector(v):
                continue
            ext = a.ideal_generated(list(rad.rows) + [v])
            assert ideal_power_chain(a, ext) is None, f"{name}: maximality fails at {a.labels[i]}"
        small += 1
    u3 = fx.t3()
    assert b_radical(u3) == Subspace.from_vectors(QQ, 4, [u3.algebra.element({"e12": 1})])
    assert b_radical(fx.t5()).dim == 0
    for name, u in all_fixtures.items():
        bq = quotient_baric(u, b_radical(u))
        assert b_radical(bq.baric).dim == 0, name
    _report(3, f"certificates on {small} fixtures of dim ≤ 9; rad(U/rad(U)) = 0 everywhere")


def test_criterion_4_lifting_suite():
    bound_hit = 0
    for seed in range(CONJUGATES):
        u = fx.conjugated(fx.t6(), seed)
        amb = u.algebra
        ctx = LiftContext.build(u, b_radical(u))
        q = ctx.quotient
        split = split_semisimple_bar(q)
        comps = simple_components(q.algebra, split.semisimple_part, seed=seed)
        mu_bar = matrix_units_of_simple(q.algebra, comps[0].subspace, seed=seed)
        # Hensel convergence within ceil(log2(dim+1)) steps on the anchor seed
        e_anchor, steps = hensel_idempotent(amb, ctx.embed(mu_bar.identity_element()))
        assert steps <= hensel_max_steps(amb.dim) == math.ceil(math.log2(amb.dim + 1))
        bound_hit = max(bound_hit, steps)
        assert is_idempotent(amb, e_anchor)
        anchor = Idempotent(e_anchor, QQ.zero)
        # anchored orthogonal lifting sums to the anchor exactly
        diag_bars = [mu_bar.units[(i, i)] for i in (1, 2)]
        lifted_diag = lift_orthogonal_set(ctx, diag_bars, anchor)
        for e in lifted_diag:
            assert amb.mul(e, e) == e
        assert vec_add(lifted_diag[0], lifted_diag[1]) == e_anchor
        # all 16 matrix-unit products exact
        mu = lift_matrix_units(ctx, mu_bar, anchor)
        assert verify_matrix_units(amb, mu) is None
        for key, el in mu.units.items():
            assert ctx.project(el) == mu_bar.units[key]
    # uniqueness clause on the dedicated fixture: bar(T6) is unital with unit f
    u6 = fx.t6()
    ctx6 = LiftContext.build(u6, b_radical(u6))
    f = u6.algebra.element({"e11": 1, "e22": 1})
    from baralt.lifting import lift_idempotent

    assert lift_idempotent(ctx6, ctx6.project(f)).element == f
    _report(4, f"{CONJUGATES} T6 conjugates lifted exactly; max Hensel steps {bound_hit}")


def test_criterion_5_cayley_suite():
    for seed in range(CAYLEY_CONJUGATES):
        u = fx.conjugated(fx.t8(), seed)
        amb = u.algebra
        ctx = LiftContext.build(u, b_radical(u))
        q = ctx.quotient
        split = split_semisimple_bar(q)
        comps = simple_components(q.algebra, split.semisimple_part, seed=seed)
        assert [c.kind for c in comps] == ["cayley"]
        frame_bar = zorn_frame_of_cayley(q.algebra, comps[0].subspace, seed=seed)
        lifted = lift_cayley(ctx, frame_bar)
        unit = lifted.units.identity_element()
        assert amb.mul(lifted.v, lifted.v) == unit
        for key in ((1, 1), (1, 2), (2, 1), (2, 2)):
            x = lifted.units.units[key]
            img, sign = lifted.involution_of(key)
            iota = img if sign == 1 else tuple(-c for c in img)
            assert amb.mul(x, lifted.v) == amb.mul(lifted.v, iota)
        assert ctx.project(lifted.v) == frame_bar.v
    _report(5, f"{CAYLEY_CONJUGATES} T8 conjugates: v² = 1, involution law, projection exact")


def test_criterion_6_end_to_end(all_fixtures):
    branch_seen = {"trivial": False, "recursion": False, "non_unital": False}
    for name, u in all_fixtures.items():
        dec = decompose(u)
        assert dec.certificate.accepted, name
        assert dec.s_basis.dim + dec.v_basis.dim + dec.rad_basis.dim == u.dim, name
        for seed in range(CONJUGATES):
            cu = fx.conjugated(u, seed)
            cdec = decompose(cu, seed=seed)
            assert cdec.certificate.accepted, f"{name} seed {seed}"
            assert (
                cdec.s_basis.dim + cdec.v_basis.dim + cdec.rad_basis.dim == cu.dim
            ), f"{name} seed {seed}"
    # branch coverage: J² = 0 trivial part (T5), rad² != 0 recursion (T4),
    # non-unital principal-idempotent path (T7, T9)
    assert decompose(fx.t5()).v_basis.dim == 1
    u4 = fx.t4()
    rad4 = b_radical(u4)
    rad4_sq = [u4.algebra.mul(x, y) for x in rad4.rows for y in rad4.rows]
    assert any(not vec_is_zero(p) for p in rad4_sq)
    assert decompose(u4).certificate.accepted
    for ctor in (fx.t7, fx.t9):
        u = ctor()
        assert u.algebra.find_identity() is None
        assert decompose(u).certificate.accepted
    _report(6, f"decompose+verify on {len(all_fixtures)} fixtures × (1 + {CONJUGATES} conjugates)")


def test_criterion_7_negative_controls(tmp_path):
    u = fx.t5()
    dec = decompose(u)
    base = json.loads(decomposition_to_text(u, dec, 0, 3))
    a = u.algebra

    def verdict(doc):
        text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
        parsed, _ = parse_decomposition_text(text, u)
        return verify_decomposition(u, parsed)

    # (a) vector moved from rad to V  (built on T3, whose radical is nonzero)
    u3 = fx.t3()
    dec3 = decompose(u3)
    doc3 = json.loads(decomposition_to_text(u3, dec3, 0, 3))
    doc3["v_basis"], doc3["rad_basis"] = doc3["rad_basis"], []
    text3 = json.dumps(doc3, indent=1, sort_keys=True) + "\n"
    parsed3, _ = parse_decomposition_text(text3, u3)
    cert_a = verify_decomposition(u3, parsed3)
    assert not cert_a.accepted and "rad_matches" in cert_a.failing()

    # (b) S basis broken: mixing n into the e21 row keeps the dimensions and
    # the direct sum but destroys closure ((e21+n)·e11 = e21 escapes the span)
    doc_b = dict(base)
    doc_b["s_basis"] = [
        [QQ.fmt(c) for c in a.basis_element(0)],
        [QQ.fmt(c) for c in a.element({"e11": 1})],
        [QQ.fmt(c) for c in a.element({"e12": 1})],
        [QQ.fmt(c) for c in a.element({"e21": 1, "n": 1})],
        [QQ.fmt(c) for c in a.element({"e22": 1})],
    ]
    cert_b = verdict(doc_b)
    assert not cert_b.accepted and "s_closure" in cert_b.failing()

    # (c) V enlarged past bar(U)
    doc_c = dict(base)
    doc_c["v_basis"] = [[QQ.fmt(c) for c in a.element({"u": 1, "n": 1})]]
    cert_c = verdict(doc_c)
    assert not cert_c.accepted and "v_containment" in cert_c.failing()
    _report(7, "3 doctored decomposition files rejected with the correct named checks")


def test_criterion_8_determinism(tmp_path):
    for name in ("t3", "t6", "zorn_baric"):
        u1 = fx.ALL_FIXTURES[name]()
        u2 = fx.ALL_FIXTURES[name]()
        t1 = decomposition_to_text(u1, decompose(u1, seed=11, search_bound=3), 11, 3)
        t2 = decomposition_to_text(u2, decompose(u2, seed=11, search_bound=3), 11, 3)
        assert t1.encode() == t2.encode(), name
    _report(8, "byte-identical decomposition files across repeated runs")
