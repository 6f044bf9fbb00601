"""Lifting constructions through a nil b-ideal J: every lifted object projects
back exactly to its quotient original, and every claimed identity is verified
by explicit multiplication before the result is returned.

Covers: single idempotents, pairwise orthogonal sets (optionally anchored so
the lifts sum to a prescribed idempotent), total matrix-unit tables with the
geometric correction series b_j = sum (−a_j)^i, orthogonal sums of matrix
algebras, square-zero trivial parts, and split Cayley frames.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .baric import BaricAlgebra, BaricQuotient, is_b_ideal, quotient_baric
from .errors import LiftError, NotAnIdealError, NotIdempotentError, OrthogonalityError
from .linalg import Subspace, vec_add, vec_is_zero, vec_sub
from .peirce import (
    Idempotent,
    _require_orthogonal_idempotents,
    corner_project,
    hensel_idempotent,
    is_idempotent,
    peirce_set,
)
from .radical import b_radical, ideal_power_chain, is_nilpotent_element


@dataclass(frozen=True)
class MatrixUnits:
    """Total matrix-unit table of a given degree, 1-indexed."""

    degree: int
    units: Dict[Tuple[int, int], tuple]

    def identity_element(self) -> tuple:
        diag = [self.units[(i, i)] for i in range(1, self.degree + 1)]
        return reduce(vec_add, diag)

    def span_rows(self) -> List[tuple]:
        return [self.units[(i, j)] for i in range(1, self.degree + 1) for j in range(1, self.degree + 1)]


def verify_matrix_units(a: Algebra, mu: MatrixUnits) -> Optional[tuple]:
    """First quadruple (i,j,k,l) with f_ij·f_kl != δ_jk·f_il, or None."""
    t = mu.degree
    zero = a.zero()
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            for k in range(1, t + 1):
                for l in range(1, t + 1):
                    want = mu.units[(i, l)] if j == k else zero
                    if a.mul(mu.units[(i, j)], mu.units[(k, l)]) != want:
                        return (i, j, k, l)
    return None


@dataclass(frozen=True)
class CayleyFrame:
    """Degree-2 matrix units plus an off-frame v with v² = 1 and x·v = v·ι(x)."""

    units: MatrixUnits
    v: tuple

    def involution_of(self, key: Tuple[int, int]) -> Tuple[tuple, int]:
        """ι on a unit: swaps the diagonal and negates the off-diagonal."""
        i, j = key
        if i == j:
            return self.units.units[(2, 2) if i == 1 else (1, 1)], 1
        return self.units.units[key], -1

    def span_rows(self, a: Algebra) -> List[tuple]:
        rows = self.units.span_rows()
        rows += [a.mul(self.v, u) for u in self.units.span_rows()]
        return rows


def verify_cayley_frame(a: Algebra, frame: CayleyFrame) -> Optional[str]:
    """Exact verification of the frame identities; returns a description on failure."""
    bad = verify_matrix_units(a, frame.units)
    if bad is not None:
        return f"matrix-unit product {bad} violated"
    unit = frame.units.identity_element()
    if a.mul(frame.v, frame.v) != unit:
        return "v² != 1"
    for key in ((1, 1), (1, 2), (2, 1), (2, 2)):
        x = frame.units.units[key]
        img, sign = frame.involution_of(key)
        iota = img if sign == 1 else tuple(-c for c in img)
        if a.mul(x, frame.v) != a.mul(frame.v, iota):
            return f"x·v != v·ι(x) for unit {key}"
    span = Subspace.from_vectors(a.field, a.dim, frame.units.span_rows())
    if span.contains_vector(frame.v):
        return "v lies in the span of the matrix units"
    return None


@dataclass(frozen=True)
class LiftContext:
    """Unital baric ambient, a nil b-ideal J, and the baric quotient by J."""

    ambient: BaricAlgebra
    ideal: Subspace
    bquotient: BaricQuotient

    @classmethod
    def build(cls, ambient: BaricAlgebra, ideal: Subspace) -> "LiftContext":
        if ambient.algebra.find_identity() is None:
            raise LiftError("lift context requires a unital ambient algebra")
        if not is_b_ideal(ambient, ideal):
            raise NotAnIdealError("lift context requires a b-ideal")
        if ideal.dim and ideal_power_chain(ambient.algebra, ideal) is None:
            # nilpotency certifies containment in the maximal nil ideal
            raise NotAnIdealError("lift context requires a nil ideal (J ⊆ R(U))")
        return cls(ambient, ideal, quotient_baric(ambient, ideal))

    @property
    def quotient(self) -> BaricAlgebra:
        return self.bquotient.baric

    def project(self, x):
        return self.bquotient.project(x)

    def embed(self, q):
        return self.bquotient.embed(q)

    def ideal_is_square_zero(self) -> bool:
        a = self.ambient.algebra
        return all(
            vec_is_zero(a.mul(x, y)) for x in self.ideal.rows for y in self.ideal.rows
        )


def lift_idempotent(ctx: LiftContext, u_bar) -> Idempotent:
    """Idempotent e in bar(U) with projection(e) = u_bar, inside F[section(u_bar)].

    The section's defect lies in J, hence is nilpotent, and the quadratic
    iteration converges; each step fixes the coset mod J.
    """
    q = ctx.quotient
    u_bar = tuple(u_bar)
    if not is_idempotent(q.algebra, u_bar):
        raise NotIdempotentError("input is not a nonzero idempotent in the quotient")
    if q.wt(u_bar) != q.field.zero:
        raise LiftError("quotient idempotent must lie in the bar ideal")
    amb = ctx.ambient.algebra
    e, _ = hensel_idempotent(amb, ctx.embed(u_bar))
    if ctx.project(e) != u_bar:
        raise LiftError("lifted idempotent does not project to its original")
    if ctx.ambient.wt(e) != ctx.ambient.field.zero:
        raise LiftError("lifted idempotent escaped the bar ideal")
    return Idempotent(e, ctx.ambient.field.zero)


def lift_orthogonal_set(
    ctx: LiftContext, quotient_set: Sequence[tuple], anchor: Optional[Idempotent] = None
) -> List[tuple]:
    """Lift pairwise orthogonal quotient idempotents to pairwise orthogonal ones.

    Inductive corner walk: each next representative is pushed into the (0,0)
    Peirce corner of the running sum (and into the (1,1) corner of the anchor,
    when one is given) before the idempotent iteration. With an anchor e whose
    projection is the sum of the originals, the lifts satisfy sum(e_i) = e
    exactly: the difference is an idempotent inside the nil ideal.
    """
    q = ctx.quotient
    amb = ctx.ambient.algebra
    members = [tuple(m) for m in quotient_set]
    _require_orthogonal_idempotents(q.algebra, members)
    for m in members:
        if q.wt(m) != q.field.zero:
            raise LiftError("quotient idempotents must lie in the bar ideal")
    anchor_el = None
    if anchor is not None:
        anchor_el = anchor.element
        if not is_idempotent(amb, anchor_el):
            raise NotIdempotentError("anchor is not an idempotent")
        if ctx.project(anchor_el) != reduce(vec_add, members):
            raise LiftError("anchor does not project to the sum of the quotient set")
    lifted: List[tuple] = []
    for m in members:
        s = ctx.embed(m)
        if anchor_el is not None:
            s = corner_project(amb, anchor_el, s, (1, 1))
        if lifted:
            running = reduce(vec_add, lifted)
            s = corner_project(amb, running, s, (0, 0))
        e, _ = hensel_idempotent(amb, s)
        if ctx.project(e) != m:
            raise LiftError("orthogonal lift does not project to its original")
        for prev in lifted:
            if not vec_is_zero(amb.mul(e, prev)) or not vec_is_zero(amb.mul(prev, e)):
                raise OrthogonalityError("lifted idempotents failed exact orthogonality")
        lifted.append(e)
    if anchor_el is not None and reduce(vec_add, lifted) != anchor_el:
        raise LiftError("anchored lifts do not sum to the anchor")
    return lifted


def lift_matrix_units(ctx: LiftContext, quotient_units: MatrixUnits, anchor: Idempotent) -> MatrixUnits:
    """Lift a degree-t matrix-unit table; the full δ table is verified exactly.

    Off-diagonal representatives are Peirce-projected sections; the defect
    u_1j·u_j1 − f_11 = a_j is killed with the correction b_j = sum_{i<m} (−a_j)^i,
    then f_1j = (f_11 + b_j)·u_1j, f_i1 = u_i1, f_ij = f_i1·f_1j.
    """
    q = ctx.quotient
    amb = ctx.ambient.algebra
    bad = verify_matrix_units(q.algebra, quotient_units)
    if bad is not None:
        raise LiftError(f"quotient matrix-unit table violated at {bad}")
    t = quotient_units.degree
    diag = lift_orthogonal_set(
        ctx, [quotient_units.units[(i, i)] for i in range(1, t + 1)], anchor
    )
    units: Dict[Tuple[int, int], tuple] = {(i, i): diag[i - 1] for i in range(1, t + 1)}
    if t > 1:
        system = peirce_set(amb, diag)
        reps_1j, reps_j1 = {}, {}
        for j in range(2, t + 1):
            s = ctx.embed(quotient_units.units[(1, j)])
            reps_1j[j] = system.split_element(s)[(1, j)]
            s = ctx.embed(quotient_units.units[(j, 1)])
            reps_j1[j] = system.split_element(s)[(j, 1)]
            if ctx.project(reps_1j[j]) != quotient_units.units[(1, j)]:
                raise LiftError("Peirce representative lost its projection")
            if ctx.project(reps_j1[j]) != quotient_units.units[(j, 1)]:
                raise LiftError("Peirce representative lost its projection")
        f11 = units[(1, 1)]
        for j in range(2, t + 1):
            prod = amb.mul(reps_1j[j], reps_j1[j])
            a_j = vec_sub(prod, f11)
            if not vec_is_zero(ctx.project(a_j)):
                raise LiftError("matrix-unit defect escapes the ideal")
            nil, m = is_nilpotent_element(amb, a_j)
            if not nil:
                raise LiftError("matrix-unit defect is not nilpotent (ideal outside the nilradical)")
            b_j = amb.zero()
            p = tuple(-c for c in a_j)
            for _ in range(m - 1):
                b_j = vec_add(b_j, p)
                p = amb.mul(tuple(-c for c in a_j), p)
            units[(1, j)] = amb.mul(vec_add(f11, b_j), reps_1j[j])
            units[(j, 1)] = reps_j1[j]
        for i in range(2, t + 1):
            for j in range(2, t + 1):
                if i != j:
                    units[(i, j)] = amb.mul(units[(i, 1)], units[(1, j)])
    lifted = MatrixUnits(t, units)
    bad = verify_matrix_units(amb, lifted)
    if bad is not None:
        raise LiftError(f"lifted matrix-unit table violated at {bad}")
    if lifted.identity_element() != anchor.element:
        raise LiftError("lifted diagonal does not sum to the anchor")
    for key, val in lifted.units.items():
        if ctx.project(val) != quotient_units.units[key]:
            raise LiftError(f"lifted unit {key} does not project to its original")
    return lifted


def lift_matrix_algebra_sum(ctx: LiftContext, blocks: Sequence[MatrixUnits]) -> List[MatrixUnits]:
    """Lift pairwise orthogonal matrix blocks; cross-block products vanish exactly."""
    identities = [b.identity_element() for b in blocks]
    anchors = lift_orthogonal_set(ctx, identities, None)
    amb = ctx.ambient.algebra
    zero_w = ctx.ambient.field.zero
    lifted = [
        lift_matrix_units(ctx, block, Idempotent(anchor, zero_w))
        for block, anchor in zip(blocks, anchors)
    ]
    for bi in range(len(lifted)):
        for bj in range(len(lifted)):
            if bi == bj:
                continue
            for x in lifted[bi].span_rows():
                for y in lifted[bj].span_rows():
                    if not vec_is_zero(amb.mul(x, y)):
                        raise LiftError("cross-block product of lifted matrix algebras is nonzero")
    return lifted


def lift_trivial_part(ctx: LiftContext, trivial_ideals: Sequence[Subspace]) -> Subspace:
    """Sections of square-zero quotient ideals; pairwise products land in rad(U)."""
    q = ctx.quotient.algebra
    amb = ctx.ambient.algebra
    total = 0
    sections = []
    for sub in trivial_ideals:
        for x in sub.rows:
            for y in sub.rows:
                if not vec_is_zero(q.mul(x, y)):
                    raise LiftError("trivial part: quotient ideal has a nonzero square")
        sections.extend(ctx.embed(r) for r in sub.rows)
        total += sub.dim
    v_space = Subspace.from_vectors(amb.field, amb.dim, sections)
    if v_space.dim != total:
        raise LiftError("trivial part: section basis is linearly dependent")
    rad = b_radical(ctx.ambient)
    for x in v_space.rows:
        for y in v_space.rows:
            if not rad.contains_vector(amb.mul(x, y)):
                raise LiftError("trivial part: a product escapes the b-radical")
    return v_space


def lift_cayley(ctx: LiftContext, frame_bar: CayleyFrame, anchor: Optional[Idempotent] = None) -> CayleyFrame:
    """Lift a split Cayley frame through a square-zero ideal.

    Multi-step correction: representatives f_ij of w̄·ē_jj are pushed into the
    off-diagonal Peirce components, the contaminations c_j = e_ji·f_ij are
    removed (h_ij = f_ij − e_ij·c_j), and the remaining defect
    h_12·h_21 = e_11 + a_1 (a_1² = 0) is absorbed into p_12 = (e_11 − a_1)·h_12,
    p_21 = h_21, v = p_12 + p_21. All frame identities are then verified exactly.
    """
    if not ctx.ideal_is_square_zero():
        raise LiftError("lift_cayley requires J² = 0 (reduce through rad² first)")
    q = ctx.quotient
    amb = ctx.ambient.algebra
    bad = verify_cayley_frame(q.algebra, frame_bar)
    if bad is not None:
        raise LiftError(f"quotient Cayley frame invalid: {bad}")
    one_bar = frame_bar.units.identity_element()
    if anchor is None:
        anchor = lift_idempotent(ctx, one_bar)
    d_units = lift_matrix_units(ctx, frame_bar.units, anchor)
    e11, e12 = d_units.units[(1, 1)], d_units.units[(1, 2)]
    e21, e22 = d_units.units[(2, 1)], d_units.units[(2, 2)]
    system = peirce_set(amb, [e11, e22])
    wbar = frame_bar.v
    fbar = {
        (1, 2): q.algebra.mul(wbar, frame_bar.units.units[(2, 2)]),
        (2, 1): q.algebra.mul(wbar, frame_bar.units.units[(1, 1)]),
    }
    f12 = system.split_element(ctx.embed(fbar[(1, 2)]))[(1, 2)]
    f21 = system.split_element(ctx.embed(fbar[(2, 1)]))[(2, 1)]
    if ctx.project(f12) != fbar[(1, 2)] or ctx.project(f21) != fbar[(2, 1)]:
        raise LiftError("Cayley representatives lost their projections")
    c2 = amb.mul(e21, f12)
    c1 = amb.mul(e12, f21)
    h12 = vec_sub(f12, amb.mul(e12, c2))
    h21 = vec_sub(f21, amb.mul(e21, c1))
    for x, y in ((e21, h12), (h12, e21), (e12, h21), (h21, e12)):
        if not vec_is_zero(amb.mul(x, y)):
            raise LiftError("Cayley correction bookkeeping failed: e_ji·h_ij != 0")
    a1 = vec_sub(amb.mul(h12, h21), e11)
    if not vec_is_zero(ctx.project(a1)):
        raise LiftError("Cayley defect escapes the ideal")
    if not vec_is_zero(amb.mul(a1, a1)):
        raise LiftError("Cayley defect does not square to zero")
    p12 = amb.mul(vec_sub(e11, a1), h12)
    p21 = h21
    v = vec_add(p12, p21)
    lifted = CayleyFrame(d_units, v)
    bad = verify_cayley_frame(amb, lifted)
    if bad is not None:
        raise LiftError(f"lifted Cayley frame invalid: {bad}")
    if ctx.project(v) != wbar:
        raise LiftError("lifted v does not project to w̄")
    return lifted
