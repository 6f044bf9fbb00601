"""Recognition on a b-semisimple quotient: split bar(U) into its semisimple and
trivial parts, cut the semisimple part into simple components along the
centroid, and present each component by matrix units or a split Cayley frame.

All recognition works over the base field; when a step would need a root or a
presentation outside it, a NonSplitError is raised instead of extending the
field.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from .algebra import Algebra, SubView, span_of_products
from .baric import BaricAlgebra, bar_ideal
from .errors import NonSplitError, VerificationError
from .lifting import CayleyFrame, MatrixUnits, verify_cayley_frame, verify_matrix_units
from .linalg import (
    Polynomial,
    Subspace,
    mat_mul,
    minimal_polynomial,
    nullspace,
    poly_xgcd,
    rational_roots,
    vec_add,
    vec_is_zero,
    vec_sub,
)
from .peirce import (
    element_relation_poly,
    is_idempotent,
    peirce_set,
    peirce_single,
    spectral_root_idempotent,
)
from .radical import is_b_semisimple, nilradical


@dataclass(frozen=True)
class SemisimpleSplit:
    """bar = semisimple_part ⊕ trivial_part with trivial_part annihilating bar."""

    semisimple_part: Subspace
    trivial_part: Subspace


@dataclass(frozen=True)
class SimpleComponent:
    subspace: Subspace
    kind: str  # "matrix" or "cayley"
    degree: Optional[int]  # t for matrix(t), None for cayley


def split_semisimple_bar(u: BaricAlgebra) -> SemisimpleSplit:
    """C = bar², N = R(bar); verifies C ⊕ N = bar, N·bar = bar·N = 0, N² = 0."""
    if not is_b_semisimple(u):
        raise VerificationError("split_semisimple_bar requires a b-semisimple input")
    a = u.algebra
    bar = bar_ideal(u)
    c_part = span_of_products(a, bar, bar)
    if bar.dim == 0:
        return SemisimpleSplit(c_part, Subspace.zero(a.field, a.dim))
    view = a.restrict(bar)
    n_part = view.up_subspace(nilradical(view.algebra))
    if c_part.intersect(n_part).dim != 0 or c_part.sum(n_part) != bar:
        raise VerificationError("bar does not split as bar² ⊕ R(bar)")
    for x in n_part.rows:
        for y in bar.rows:
            if not vec_is_zero(a.mul(x, y)) or not vec_is_zero(a.mul(y, x)):
                raise VerificationError("trivial part does not annihilate bar")
    return SemisimpleSplit(c_part, n_part)


def centroid(a: Algebra, c: Subspace) -> List[tuple]:
    """Operators on C commuting with every left and right multiplication.

    For unital C the solution space is exactly {L_t : t central}, solved with
    dim-many unknowns; non-unital inputs fall back to the full operator solve.
    Returned matrices act on C-internal coordinates.
    """
    view, ops = _centroid_view(a, c)
    return ops


def _centroid_view(a: Algebra, c: Subspace) -> Tuple[SubView, List[tuple]]:
    view = a.restrict(c)
    b = view.algebra
    d = b.dim
    F = b.field
    if d == 0:
        return view, []
    unit = b.find_identity()
    if unit is not None:
        rmats = [b.rmul_matrix(b.basis_element(i)) for i in range(d)]
        lmats = [b.lmul_matrix(b.basis_element(i)) for i in range(d)]
        rows = []
        for i in range(d):
            for j in range(d):
                r_prod = b.rmul_matrix(b.table[i][j])
                lr = mat_mul(F, lmats[i], rmats[j])
                rr = mat_mul(F, rmats[j], rmats[i])
                for m in range(d):
                    rows.append(tuple(r_prod[m][k] - lr[m][k] for k in range(d)))
                    rows.append(tuple(r_prod[m][k] - rr[m][k] for k in range(d)))
        centers = nullspace(F, rows, d)
        return view, [b.lmul_matrix(tuple(t)) for t in centers]
    # non-unital fallback: solve for the operator entries directly
    n2 = d * d
    rows = []
    for i in range(d):
        for mats in (b.lmul_matrix(b.basis_element(i)), b.rmul_matrix(b.basis_element(i))):
            for r in range(d):
                for ccol in range(d):
                    row = [F.zero] * n2
                    for k in range(d):
                        row[r * d + k] = row[r * d + k] + mats[k][ccol]
                        row[k * d + ccol] = row[k * d + ccol] - mats[r][k]
                    rows.append(tuple(row))
    sols = nullspace(F, rows, n2)
    ops = [tuple(tuple(s[r * d + k] for k in range(d)) for r in range(d)) for s in sols]
    return view, ops


def _spectral_projector(field, op, dim: int):
    """A nontrivial spectral projector of op from a rational eigenvalue, or None."""
    p = minimal_polynomial(field, op)
    roots = []
    seen = set()
    for r in rational_roots(p):
        if r not in seen:
            seen.add(r)
            roots.append(r)
    for lam in roots:
        k = p.root_multiplicity(lam)
        lin = Polynomial(field, (-lam, field.one))
        pk = Polynomial(field, (field.one,))
        for _ in range(k):
            pk = pk * lin
        q, rem = p.divmod(pk)
        if not rem.is_zero:
            raise VerificationError("root multiplicity inconsistent")
        if q.degree == 0:
            continue  # the whole space is one primary component
        g, u, v = poly_xgcd(pk, q)
        if g.degree != 0:
            raise VerificationError("spectral projector: factors are not coprime")
        proj = (v * q) % p
        e_mat = proj.eval_matrix(field, op)
        if all(vec_is_zero(r) for r in e_mat):
            continue
        if e_mat == tuple(tuple(field.one if i == j else field.zero for j in range(dim)) for i in range(dim)):
            continue
        return e_mat
    return None


def _centroid_probes(field, ops, seed: int, extra: int = 16):
    for op in ops:
        yield op
    for o1, o2 in combinations(range(len(ops)), 2):
        yield tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(ops[o1], ops[o2]))
    rng = random.Random(seed)
    d = len(ops[0]) if ops else 0
    for _ in range(extra):
        coeffs = [field.from_int(rng.randint(-3, 3)) for _ in ops]
        acc = [[field.zero] * d for _ in range(d)]
        for cf, op in zip(coeffs, ops):
            if not cf:
                continue
            for r in range(d):
                for k in range(d):
                    if op[r][k]:
                        acc[r][k] = acc[r][k] + cf * op[r][k]
        yield tuple(tuple(r) for r in acc)


def simple_components(a: Algebra, c: Subspace, seed: int = 0) -> List[SimpleComponent]:
    """Cut a semisimple ideal into simple components along centroid idempotents.

    Components are refined until each centroid is one-dimensional, then
    classified: associative → matrix(t) with t² = dim, else split Cayley
    (dim 8, some associator nonzero).
    """
    if c.dim == 0:
        return []
    worklist = [c]
    final = []
    while worklist:
        sub = worklist.pop(0)
        view, ops = _centroid_view(a, sub)
        if not ops:
            raise VerificationError("semisimple component has an empty centroid")
        if len(ops) == 1:
            final.append(sub)
            continue
        d = view.algebra.dim
        projector = None
        for probe in _centroid_probes(a.field, ops, seed):
            projector = _spectral_projector(a.field, probe, d)
            if projector is not None:
                break
        if projector is None:
            raise NonSplitError(
                "centroid has no rational spectral split (component not split over the base field)"
            )
        image_rows = [tuple(projector[m][k] for m in range(d)) for k in range(d)]
        img = Subspace.from_vectors(a.field, d, image_rows)
        ident = tuple(
            tuple(a.field.one if i == j else a.field.zero for j in range(d)) for i in range(d)
        )
        co_rows = [
            tuple(ident[m][k] - projector[m][k] for m in range(d)) for k in range(d)
        ]
        coimg = Subspace.from_vectors(a.field, d, co_rows)
        if img.dim + coimg.dim != d:
            raise VerificationError("spectral projector images do not split the component")
        worklist.append(view.up_subspace(img))
        worklist.append(view.up_subspace(coimg))
    out = []
    for sub in final:
        out.append(_classify_component(a, sub))
    return out


def _classify_component(a: Algebra, sub: Subspace) -> SimpleComponent:
    view = a.restrict(sub)
    b = view.algebra
    assoc = True
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                if not vec_is_zero(
                    b.associator(b.basis_element(i), b.basis_element(j), b.basis_element(k))
                ):
                    assoc = False
                    break
            if not assoc:
                break
        if not assoc:
            break
    if assoc:
        t = math.isqrt(b.dim)
        if t * t != b.dim:
            raise NonSplitError("associative simple component dimension is not a perfect square")
        return SimpleComponent(sub, "matrix", t)
    if b.dim != 8:
        raise NonSplitError("nonassociative simple component is not 8-dimensional")
    return SimpleComponent(sub, "cayley", None)


# ---------------------------------------------------------------------------
# idempotent searches inside a simple component
# ---------------------------------------------------------------------------


def _small_combination_candidates(b: Algebra, bound: int, max_support: int = 3, cap: int = 30000):
    """Deterministic small integer combinations of basis vectors."""
    F = b.field
    n = b.dim
    count = 0
    for support_size in range(1, min(max_support, n) + 1):
        for support in combinations(range(n), support_size):
            ranges = []
            for pos in range(support_size):
                lo = 1 if pos == 0 else -bound
                ranges.append([c for c in range(lo, bound + 1) if c or support_size == 1])

            def rec(idx, current):
                if idx == support_size:
                    if any(current):
                        vec = [F.zero] * n
                        for s_i, cf in zip(support, current):
                            vec[s_i] = F.from_int(cf)
                        yield tuple(vec)
                    return
                for cf in ranges[idx]:
                    yield from rec(idx + 1, current + [cf])

            for cand in rec(0, []):
                yield cand
                count += 1
                if count >= cap:
                    return


def idempotent_from_nilpotent(b: Algebra, z) -> Optional[tuple]:
    """Nontrivial idempotent from a nonzero square-zero z: solve e·z = z, z·e = 0.

    Any solution satisfies e != 0 (e·z = z) and e != 1 (z·e = 0); the particular
    solution is polished over the kernel until e² = e holds exactly.
    """
    F = b.field
    rows = list(b.rmul_matrix(z)) + list(b.lmul_matrix(z))
    rhs = list(z) + list(b.zero())
    particular, kernel = (None, None)
    from .linalg import solve as lin_solve

    particular, kernel = lin_solve(F, rows, rhs)
    if particular is None:
        return None
    if is_idempotent(b, particular):
        return particular
    for coeffs in _integer_tuples(kernel.dim, 2):
        e = vec_add(particular, kernel.linear_combination([F.from_int(c) for c in coeffs]))
        if is_idempotent(b, e):
            return e
    return None


def _integer_tuples(n: int, bound: int, cap: int = 4000):
    if n == 0:
        return
    count = 0
    for radius in range(1, bound + 1):
        stack = [[]]
        while stack:
            cur = stack.pop()
            if len(cur) == n:
                if any(abs(c) == radius for c in cur):
                    yield tuple(cur)
                    count += 1
                    if count >= cap:
                        return
                continue
            for c in range(-radius, radius + 1):
                stack.append(cur + [c])


def find_nontrivial_idempotent(b: Algebra, unit, seed: int = 0, bound: int = 3) -> Optional[tuple]:
    """Search for an idempotent distinct from 0 and the unit.

    Route 1: rational-eigenvalue spectral idempotents of small candidates.
    Route 2: small square-zero vectors turned into idempotents linearly.
    """
    F = b.field
    candidates = []
    for i in range(b.dim):
        candidates.append(b.basis_element(i))
    for i in range(b.dim):
        for j in range(i + 1, b.dim):
            candidates.append(vec_add(b.basis_element(i), b.basis_element(j)))
    rng = random.Random(seed)
    for _ in range(16):
        candidates.append(tuple(F.from_int(rng.randint(-2, 2)) for _ in range(b.dim)))
    for y in candidates:
        if vec_is_zero(y):
            continue
        f, _powers = element_relation_poly(b, y)
        seen = set()
        for lam in rational_roots(f):
            if not lam or lam in seen:
                continue
            seen.add(lam)
            e = spectral_root_idempotent(b, y, lam)
            if e is not None and e != tuple(unit):
                return e
    for z in _small_combination_candidates(b, bound):
        if vec_is_zero(b.mul(z, z)) and not vec_is_zero(z):
            e = idempotent_from_nilpotent(b, z)
            if e is not None and e != tuple(unit):
                return e
    return None


def matrix_units_of_simple(a: Algebra, comp: Subspace, seed: int = 0) -> MatrixUnits:
    """Present an associative simple component of dimension t² by matrix units.

    Finds a primitive orthogonal idempotent system (primitive ⟺ dim e·C·e = 1),
    then solves x_1j·y_j1 = e_1 inside the one-dimensional Peirce components.
    Elements are returned in the parent algebra's coordinates.
    """
    view = a.restrict(comp)
    b = view.algebra
    t = math.isqrt(b.dim)
    if t * t != b.dim:
        raise NonSplitError("component dimension is not a perfect square")
    unit = b.find_identity()
    if unit is None:
        raise NonSplitError("simple component has no identity element")
    parts = [unit]
    while True:
        refined = False
        for idx, e in enumerate(parts):
            corner = _corner_subspace(b, e)
            if corner.dim == 1:
                continue
            corner_view = b.restrict(corner)
            e_in_corner = corner_view.down(e)
            extra = find_nontrivial_idempotent(corner_view.algebra, e_in_corner, seed)
            if extra is None:
                raise NonSplitError("primitive refinement stalls (non-split component)")
            e1 = corner_view.up(extra)
            e2 = vec_sub(e, e1)
            if not is_idempotent(b, e1) or not is_idempotent(b, e2):
                raise VerificationError("primitive refinement produced a non-idempotent")
            parts[idx : idx + 1] = [e1, e2]
            refined = True
            break
        if not refined:
            break
    if len(parts) != t:
        raise NonSplitError(
            f"primitive system has {len(parts)} idempotents, expected {t} (non-split component)"
        )
    system = peirce_set(b, parts)
    for i in range(1, t + 1):
        for j in range(1, t + 1):
            if system.components[(i, j)].dim != 1:
                raise NonSplitError("Peirce components of the primitive system are not lines")
    units = {(i, i): parts[i - 1] for i in range(1, t + 1)}
    e1 = parts[0]
    from .linalg import solve as lin_solve

    for j in range(2, t + 1):
        x = system.components[(1, j)].rows[0]
        y0 = system.components[(j, 1)].rows[0]
        prod = b.mul(x, y0)
        cols = [[c] for c in prod]
        particular, _ = lin_solve(b.field, cols, list(e1))
        if particular is None or not particular[0]:
            raise NonSplitError("Peirce line product degenerates")
        gamma = particular[0]
        units[(1, j)] = x
        units[(j, 1)] = tuple(gamma * c for c in y0)
    for i in range(2, t + 1):
        for j in range(2, t + 1):
            if i != j:
                units[(i, j)] = b.mul(units[(i, 1)], units[(1, j)])
    mu = MatrixUnits(t, units)
    bad = verify_matrix_units(b, mu)
    if bad is not None:
        raise VerificationError(f"matrix-unit table verification failed at {bad}")
    span = Subspace.from_vectors(b.field, b.dim, mu.span_rows())
    if span.dim != b.dim:
        raise VerificationError("matrix units do not span the component")
    return MatrixUnits(t, {k: view.up(v) for k, v in mu.units.items()})


def _corner_subspace(b: Algebra, e) -> Subspace:
    lm = b.lmul_matrix(e)
    rm = b.rmul_matrix(e)
    ident = tuple(tuple(b.field.one if i == j else b.field.zero for j in range(b.dim)) for i in range(b.dim))
    rows = [tuple(lm[m][k] - ident[m][k] for k in range(b.dim)) for m in range(b.dim)]
    rows += [tuple(rm[m][k] - ident[m][k] for k in range(b.dim)) for m in range(b.dim)]
    return Subspace.from_vectors(b.field, b.dim, nullspace(b.field, rows, b.dim))


def zorn_frame_of_cayley(a: Algebra, comp: Subspace, search_bound: int = 3, seed: int = 0) -> CayleyFrame:
    """Present a split Cayley component by a Zorn frame (2x2 units plus v, v² = 1).

    After building the 2x2 matrix span D, the linear system x·v = v·ι(x) is
    solved; on its 4-dimensional solution space v ↦ v² is a quadratic multiple
    of the unit, and v with q(v) = 1 is found by bounded integer search with an
    exact isotropic-vector completion as fallback.
    """
    view = a.restrict(comp)
    b = view.algebra
    if b.dim != 8:
        raise NonSplitError("Cayley component must have dimension 8")
    if _is_associative(b):
        raise NonSplitError("component is associative; not a Cayley algebra")
    unit = b.find_identity()
    if unit is None:
        raise NonSplitError("Cayley component has no identity element")
    e1 = find_nontrivial_idempotent(b, unit, seed, search_bound)
    if e1 is None:
        raise NonSplitError("no nontrivial idempotent found (non-split presentation)")
    system = peirce_single(b, e1)
    dims = system.component_dims()
    if (dims[(1, 1)], dims[(1, 0)], dims[(0, 1)], dims[(0, 0)]) != (1, 3, 3, 1):
        raise NonSplitError("idempotent corner dimensions are not (1,3,3,1)")
    e2 = vec_sub(unit, e1)
    a_el = system.components[(1, 0)].rows[0]
    u01 = system.components[(0, 1)]
    from .linalg import solve as lin_solve

    prods = [b.mul(a_el, r) for r in u01.rows]
    cols = [tuple(p[m] for p in prods) for m in range(b.dim)]
    particular, _ = lin_solve(b.field, cols, list(e1))
    if particular is None:
        raise NonSplitError("a·b = e1 is unsolvable in the (0,1) component")
    b_el = u01.linear_combination(particular)
    if b.mul(b_el, a_el) != e2:
        raise VerificationError("b·a != e2 after solving a·b = e1")
    d_units = MatrixUnits(2, {(1, 1): e1, (1, 2): a_el, (2, 1): b_el, (2, 2): e2})
    bad = verify_matrix_units(b, d_units)
    if bad is not None:
        raise VerificationError(f"2x2 frame table failed at {bad}")
    # solution space of x·v = v·ι(x) over the four units
    iota = {(1, 1): ((2, 2), 1), (2, 2): ((1, 1), 1), (1, 2): ((1, 2), -1), (2, 1): ((2, 1), -1)}
    rows = []
    for key, (ikey, sign) in iota.items():
        lx = b.lmul_matrix(d_units.units[key])
        rx = b.rmul_matrix(tuple(sign * c for c in d_units.units[ikey]))
        for m in range(b.dim):
            rows.append(tuple(lx[m][k] - rx[m][k] for k in range(b.dim)))
    kernel = Subspace.from_vectors(b.field, b.dim, nullspace(b.field, rows, b.dim))
    if kernel.dim != 4:
        raise NonSplitError("the involution-compatible space is not 4-dimensional")

    def q_of(v):
        s = b.mul(v, v)
        idx = next(i for i, c in enumerate(unit) if c)
        lam = s[idx] / unit[idx]
        if s != tuple(lam * c for c in unit):
            raise VerificationError("v² is not a multiple of the unit on the solution space")
        return lam

    F = b.field
    isotropic = []
    v_found = None
    for coeffs in _integer_tuples(4, search_bound):
        v = kernel.linear_combination([F.from_int(c) for c in coeffs])
        if vec_is_zero(v):
            continue
        lam = q_of(v)
        if lam == F.one:
            v_found = v
            break
        if not lam:
            isotropic.append(v)
    if v_found is None:
        # exact completion. An isotropic u0 always exists: the norm is
        # multiplicative and the off-diagonal units are singular, so k·e_12
        # (or a variant) is isotropic for any kernel element k; then
        # v = λ·u0 + z with 2λ·B(u0,z) + q(z) = 1 has q(v) = 1 exactly.
        if not isotropic:
            k0 = next((r for r in kernel.rows if q_of(r)), None)
            if k0 is not None:
                for x in (d_units.units[(1, 2)], d_units.units[(2, 1)]):
                    for cand in (b.mul(k0, x), b.mul(x, k0)):
                        if not vec_is_zero(cand) and kernel.contains_vector(cand) and not q_of(cand):
                            isotropic.append(cand)
                            break
                    if isotropic:
                        break
        partners = list(kernel.rows) + isotropic
        for u0 in isotropic:
            for z in partners:
                bb = vec_add(b.mul(u0, z), b.mul(z, u0))
                idx = next(i for i, c in enumerate(unit) if c)
                mu = bb[idx] / unit[idx]
                if bb != tuple(mu * c for c in unit) or not mu:
                    continue
                lam = (F.one - q_of(z)) / mu
                v = vec_add(tuple(lam * c for c in u0), z)
                if q_of(v) == F.one:
                    v_found = v
                    break
            if v_found is not None:
                break
    if v_found is None:
        raise NonSplitError("no unit-norm element found within the search bound")
    frame = CayleyFrame(d_units, v_found)
    bad = verify_cayley_frame(b, frame)
    if bad is not None:
        raise VerificationError(f"Zorn frame verification failed: {bad}")
    return CayleyFrame(
        MatrixUnits(2, {k: view.up(v) for k, v in d_units.units.items()}), view.up(v_found)
    )


def _is_associative(b: Algebra) -> bool:
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                if not vec_is_zero(
                    b.associator(b.basis_element(i), b.basis_element(j), b.basis_element(k))
                ):
                    return False
    return True
