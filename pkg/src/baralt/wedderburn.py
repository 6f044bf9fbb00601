"""Wedderburn b-decomposition drivers U = S ⊕ V ⊕ rad(U), with an independent
certificate verifier.

decompose_unital handles unital inputs: when rad(U)² = 0 it lifts the
recognized structure of the b-semisimple quotient (matrix blocks, Cayley
blocks, trivial part) through rad(U); otherwise it recurses through the
quotient by rad(U)² and the pulled-back preimage of S, whose b-radical sits
inside rad(U)², so the nilpotency index halves per level.

decompose handles the general case through a principal idempotent: the unital
corner U_11 is decomposed, and complements of rad(U) inside the remaining
Peirce components assemble V.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import List, Optional, Tuple

from .algebra import span_of_products
from .baric import BaricAlgebra, bar_ideal, quotient_baric, restrict_baric
from .errors import BaraltError, VerificationError
from .lifting import (
    LiftContext,
    lift_cayley,
    lift_matrix_units,
    lift_orthogonal_set,
    lift_trivial_part,
)
from .linalg import Subspace, complement, vec_is_zero
from .peirce import Idempotent, peirce_single, principal_idempotent
from .radical import b_radical, is_nilpotent_element, nilradical
from .structure import (
    matrix_units_of_simple,
    simple_components,
    split_semisimple_bar,
    zorn_frame_of_cayley,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    informative: bool = False
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    checks: tuple

    @property
    def accepted(self) -> bool:
        return all(c.passed for c in self.checks if not c.informative)

    def failing(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed and not c.informative]


@dataclass(frozen=True)
class Decomposition:
    s_basis: Subspace
    v_basis: Subspace
    rad_basis: Subspace
    certificate: Optional[Certificate] = None


CHECK_NAMES = (
    "spanning",
    "directness",
    "s_closure",
    "s_b_semisimple",
    "v_containment",
    "v_square",
    "rad_matches",
    "nil_ideal",
)


def verify_decomposition(u: BaricAlgebra, d: Decomposition) -> Certificate:
    """Independent verification of a claimed decomposition; nothing is reused
    from the producer beyond the three claimed bases."""
    a = u.algebra
    checks = []
    s, v, r = d.s_basis, d.v_basis, d.rad_basis

    dims_ok = s.dim + v.dim + r.dim == a.dim
    total = Subspace.from_vectors(a.field, a.dim, list(s.rows) + list(v.rows) + list(r.rows))
    checks.append(
        CheckResult(
            "spanning",
            dims_ok and total.dim == a.dim,
            detail=f"dim S+V+rad = {s.dim}+{v.dim}+{r.dim}, span dim {total.dim}, dim U = {a.dim}",
        )
    )
    pair_ok = (
        s.intersect(v).dim == 0 and s.intersect(r).dim == 0 and v.intersect(r).dim == 0
    )
    checks.append(CheckResult("directness", pair_ok))

    closed = all(s.contains_vector(a.mul(x, y)) for x in s.rows for y in s.rows)
    has_weight_one = any(u.wt(x) for x in s.rows)
    checks.append(
        CheckResult(
            "s_closure",
            closed and has_weight_one,
            detail="S closed under multiplication and meets weight 1",
        )
    )

    if closed and has_weight_one:
        try:
            s_baric, _view = restrict_baric(u, s)
            checks.append(CheckResult("s_b_semisimple", b_radical(s_baric).dim == 0))
        except BaraltError as exc:
            checks.append(CheckResult("s_b_semisimple", False, detail=str(exc)))
    else:
        checks.append(CheckResult("s_b_semisimple", False, detail="S is not a b-subalgebra"))

    checks.append(CheckResult("v_containment", bar_ideal(u).contains(v)))

    v_sq = all(r.contains_vector(a.mul(x, y)) for x in v.rows for y in v.rows)
    checks.append(CheckResult("v_square", v_sq))

    checks.append(CheckResult("rad_matches", r == b_radical(u)))

    informative = a.find_identity() is None
    w_space = v.sum(r)
    bar = bar_ideal(u)
    ideal_ok = all(
        w_space.contains_vector(a.mul(x, y)) and w_space.contains_vector(a.mul(y, x))
        for x in bar.rows
        for y in w_space.rows
    )
    nil_ok = all(is_nilpotent_element(a, y)[0] for y in w_space.rows)
    checks.append(
        CheckResult(
            "nil_ideal",
            ideal_ok and nil_ok,
            informative=informative,
            detail="V ⊕ rad is a nil ideal of bar(U)" + (" [informative: no unit]" if informative else ""),
        )
    )
    return Certificate(tuple(checks))


def _lift_recognized_structure(ctx: LiftContext, seed: int, search_bound: int):
    """Recognize the b-semisimple quotient and lift all blocks coherently.

    Returns (s_rows, v_space): the spanning rows of S (unit included) and the
    lifted trivial part.
    """
    u = ctx.ambient
    amb = u.algebra
    ubar = ctx.quotient
    split = split_semisimple_bar(ubar)
    comps = simple_components(ubar.algebra, split.semisimple_part, seed=seed)
    presentations: List[Tuple[str, object]] = []
    for comp in comps:
        if comp.kind == "matrix":
            presentations.append(("matrix", matrix_units_of_simple(ubar.algebra, comp.subspace, seed)))
        else:
            presentations.append(
                ("cayley", zorn_frame_of_cayley(ubar.algebra, comp.subspace, search_bound, seed))
            )
    identities = []
    for kind, pres in presentations:
        units = pres if kind == "matrix" else pres.units
        identities.append(units.identity_element())
    anchors = lift_orthogonal_set(ctx, identities, None) if identities else []
    zero_w = u.field.zero
    s_rows = [amb.find_identity()]
    lifted_spans = []
    for (kind, pres), anchor_el in zip(presentations, anchors):
        anchor = Idempotent(anchor_el, zero_w)
        if kind == "matrix":
            block = lift_matrix_units(ctx, pres, anchor)
            rows = block.span_rows()
        else:
            frame = lift_cayley(ctx, pres, anchor)
            rows = frame.span_rows(amb)
        lifted_spans.append(rows)
        s_rows.extend(rows)
    for i in range(len(lifted_spans)):
        for j in range(len(lifted_spans)):
            if i == j:
                continue
            for x in lifted_spans[i]:
                for y in lifted_spans[j]:
                    if not vec_is_zero(amb.mul(x, y)):
                        raise VerificationError("lifted blocks are not pairwise orthogonal")
    if split.trivial_part.dim:
        v_space = lift_trivial_part(ctx, [split.trivial_part])
    else:
        v_space = Subspace.zero(amb.field, amb.dim)
    return s_rows, v_space


def decompose_unital(u: BaricAlgebra, seed: int = 0, search_bound: int = 3) -> Decomposition:
    """Wedderburn b-decomposition of a unital baric alternative algebra."""
    a = u.algebra
    one = a.find_identity()
    if one is None:
        raise VerificationError("decompose_unital requires an identity element")
    rad = b_radical(u)
    rad_sq = span_of_products(a, rad, rad)
    if rad_sq.dim == 0:
        ctx = LiftContext.build(u, rad)
        s_rows, v_space = _lift_recognized_structure(ctx, seed, search_bound)
        s_space = Subspace.from_vectors(a.field, a.dim, s_rows)
        if s_space.dim != len(s_rows):
            raise VerificationError("S spanning rows are linearly dependent")
        dec = Decomposition(s_space, v_space, rad)
    else:
        k_ideal = a.ideal_generated(rad_sq.rows)
        if not rad.contains(k_ideal):
            raise VerificationError("rad(U)² closure escaped rad(U)")
        bq = quotient_baric(u, k_ideal)
        res_q = decompose_unital(bq.baric, seed=seed, search_bound=search_bound)
        p_rows = [bq.embed(r) for r in res_q.s_basis.rows] + list(k_ideal.rows)
        p_space = Subspace.from_vectors(a.field, a.dim, p_rows)
        if not p_space.contains_vector(one):
            raise VerificationError("preimage of S lost the identity element")
        if p_space.dim >= a.dim:
            raise VerificationError("preimage recursion does not shrink")
        p_baric, p_view = restrict_baric(u, p_space)
        res_p = decompose_unital(p_baric, seed=seed, search_bound=search_bound)
        s_space = p_view.up_subspace(res_p.s_basis)
        v_space = Subspace.from_vectors(
            a.field, a.dim, [bq.embed(r) for r in res_q.v_basis.rows]
        )
        dec = Decomposition(s_space, v_space, rad)
    cert = verify_decomposition(u, dec)
    if not cert.accepted:
        raise VerificationError(f"decomposition certificate failed: {cert.failing()}")
    return replace(dec, certificate=cert)


def decompose(u: BaricAlgebra, seed: int = 0, search_bound: int = 3) -> Decomposition:
    """Wedderburn b-decomposition through a principal idempotent (unit optional)."""
    a = u.algebra
    e = principal_idempotent(u, seed=seed)
    system = peirce_single(a, e.element)
    u11 = system.components[(1, 1)]
    off_parts = [system.components[key] for key in ((1, 0), (0, 1), (0, 0))]
    nil = nilradical(a)
    for part in off_parts:
        if not nil.contains(part):
            raise VerificationError("off-diagonal Peirce components escape the nilradical")
    corner_baric, corner_view = restrict_baric(u, u11)
    res_corner = decompose_unital(corner_baric, seed=seed, search_bound=search_bound)
    rad_u = b_radical(u)
    r11 = rad_u.intersect(u11)
    w_plus_rad = corner_view.up_subspace(res_corner.v_basis).sum(
        corner_view.up_subspace(res_corner.rad_basis)
    )
    if not w_plus_rad.contains(r11):
        raise VerificationError("rad(U) ∩ U_11 is not inside W ⊕ rad(U_11)")
    v_space = complement(r11, w_plus_rad)
    for part in off_parts:
        v_space = v_space.sum(complement(rad_u.intersect(part), part))
    s_space = corner_view.up_subspace(res_corner.s_basis)
    dec = Decomposition(s_space, v_space, rad_u)
    cert = verify_decomposition(u, dec)
    if not cert.accepted:
        raise VerificationError(f"decomposition certificate failed: {cert.failing()}")
    return replace(dec, certificate=cert)
