"""Peirce decompositions, idempotent extraction, and the principal idempotent search.

Idempotent extraction combines two exact mechanisms:
  * the quadratic iteration e <- 3e² − 2e³, which converges (quadratically, in
    at most ceil(log2(dim+1)) steps) whenever the defect e² − e is nilpotent —
    the situation in every lift through a nil ideal;
  * spectral idempotents inside the one-generated commutative associative
    subalgebra F[x], built from the relation polynomial of x by a Bezout split,
    for starting elements whose defect is not nilpotent.

A principal idempotent is an idempotent of weight 1 whose (0,0) Peirce corner
is a nil subalgebra; it is grown by absorbing idempotents extracted from
non-nilpotent corner elements.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .baric import BaricAlgebra
from .errors import (
    LiftError,
    NotIdempotentError,
    OrthogonalityError,
    SearchExhaustedError,
    VerificationError,
)
from .linalg import (
    Polynomial,
    Subspace,
    TrackedSpan,
    mat_inverse,
    nullspace,
    poly_xgcd,
    row_mat,
    vec_add,
    vec_is_zero,
    vec_sub,
)
from .radical import ideal_power_chain, is_nilpotent_element


@dataclass(frozen=True)
class Idempotent:
    element: tuple
    weight_value: Optional[object] = None


@dataclass(frozen=True)
class RelationWitness:
    """Product of components ((i,j),(k,l)) escaping its prescribed target."""

    source: tuple
    other: tuple
    x: tuple
    y: tuple


class PeirceSystem:
    """Simultaneous eigenspace components relative to orthogonal idempotents.

    Components are keyed (i, j) with i, j in 0..t; index m >= 1 refers to the
    m-th idempotent and 0 to "annihilated by all of them".
    """

    def __init__(self, algebra: Algebra, idempotents: Sequence[tuple], components: Dict):
        self.algebra = algebra
        self.idempotents = tuple(idempotents)
        self.components = components
        self.t = len(self.idempotents)
        self._coeff_inverse = None

    def component_dims(self) -> Dict:
        return {k: s.dim for k, s in self.components.items()}

    def keys(self):
        t = self.t
        return [(i, j) for i in range(t + 1) for j in range(t + 1)]

    def split_element(self, x) -> Dict:
        """Unique decomposition of x over the direct sum of components."""
        alg = self.algebra
        if self._coeff_inverse is None:
            rows = []
            order = []
            for key in self.keys():
                for r in self.components[key].rows:
                    rows.append(r)
                    order.append(key)
            inv = mat_inverse(alg.field, rows)
            if inv is None:
                raise VerificationError("Peirce components do not span the algebra")
            self._coeff_inverse = (tuple(rows), tuple(order), inv)
        rows, order, inv = self._coeff_inverse
        coeffs = row_mat(alg.field, x, inv)
        parts = {key: list(alg.zero()) for key in self.keys()}
        for c, key, row in zip(coeffs, order, rows):
            if not c:
                continue
            tgt = parts[key]
            for m, rm in enumerate(row):
                if rm:
                    tgt[m] = tgt[m] + c * rm
        return {key: tuple(v) for key, v in parts.items()}


def is_idempotent(a: Algebra, e) -> bool:
    return not vec_is_zero(e) and a.mul(e, e) == tuple(e)


def _require_orthogonal_idempotents(a: Algebra, els: Sequence[tuple]):
    for e in els:
        if not is_idempotent(a, e):
            raise NotIdempotentError("element is not a nonzero idempotent")
    for i, e in enumerate(els):
        for j, f in enumerate(els):
            if i != j and not vec_is_zero(a.mul(e, f)):
                raise OrthogonalityError(f"idempotents {i} and {j} are not orthogonal")


def peirce_set(a: Algebra, idempotents: Sequence[tuple]) -> PeirceSystem:
    """Components U_ij = {x : e_k x = δ_ki x, x e_k = δ_jk x for all k}."""
    els = [tuple(e) for e in idempotents]
    _require_orthogonal_idempotents(a, els)
    F, n, t = a.field, a.dim, len(els)
    lmats = [a.lmul_matrix(e) for e in els]
    rmats = [a.rmul_matrix(e) for e in els]
    components = {}
    total = 0
    for i in range(t + 1):
        for j in range(t + 1):
            rows = []
            for k in range(t):
                dki = F.one if k + 1 == i else F.zero
                djk = F.one if k + 1 == j else F.zero
                for m in range(n):
                    row = list(lmats[k][m])
                    row[m] = row[m] - dki
                    rows.append(tuple(row))
                for m in range(n):
                    row = list(rmats[k][m])
                    row[m] = row[m] - djk
                    rows.append(tuple(row))
            comp = Subspace.from_vectors(F, n, nullspace(F, rows, n))
            components[(i, j)] = comp
            total += comp.dim
    if total != n:
        raise VerificationError("Peirce component dimensions do not sum to dim")
    stacked = [r for comp in components.values() for r in comp.rows]
    if Subspace.from_vectors(F, n, stacked).dim != n:
        raise VerificationError("Peirce components do not span the algebra")
    return PeirceSystem(a, els, components)


def peirce_single(a: Algebra, e) -> PeirceSystem:
    """Four-component decomposition relative to one idempotent (t = 1)."""
    element = e.element if isinstance(e, Idempotent) else tuple(e)
    return peirce_set(a, [element])


def corner_project(a: Algebra, e, x, ij: Tuple[int, int]):
    """Single-idempotent Peirce projection by the closed formulas.

    Valid in alternative algebras, where (e, x, e) = 0 makes e·x·e unambiguous.
    """
    ex = a.mul(e, x)
    xe = a.mul(x, e)
    exe = a.mul(e, xe)
    if ij == (1, 1):
        return exe
    if ij == (1, 0):
        return vec_sub(ex, exe)
    if ij == (0, 1):
        return vec_sub(xe, exe)
    if ij == (0, 0):
        return vec_add(vec_sub(vec_sub(x, ex), xe), exe)
    raise ValueError("corner index must be in {0,1}²")


def verify_peirce_relations(system: PeirceSystem) -> Optional[RelationWitness]:
    """Check products of component bases against the multiplication rules.

    Target of U_ij·U_kl: U_il when j = k; U_ji when (i,j) = (k,l); zero otherwise.
    """
    a = system.algebra
    comps = system.components
    for src in system.keys():
        for oth in system.keys():
            i, j = src
            k, l = oth
            if j == k:
                target = comps[(i, l)]
            elif src == oth:
                target = comps[(j, i)]
            else:
                target = None
            for x in comps[src].rows:
                for y in comps[oth].rows:
                    p = a.mul(x, y)
                    if target is None:
                        if not vec_is_zero(p):
                            return RelationWitness(src, oth, x, y)
                    elif not target.contains_vector(p):
                        return RelationWitness(src, oth, x, y)
    return None


def hensel_max_steps(dim: int) -> int:
    return max(1, math.ceil(math.log2(dim + 1)))


def hensel_idempotent(a: Algebra, x, max_steps: Optional[int] = None) -> Tuple[tuple, int]:
    """Iterate e <- 3e² − 2e³ until e² = e; the defect must be nilpotent.

    Each step squares the defect ideal, so convergence takes at most
    ceil(log2(dim+1)) steps; exceeding the bound raises LiftError.
    """
    if max_steps is None:
        max_steps = hensel_max_steps(a.dim)
    e = tuple(x)
    for steps in range(max_steps + 1):
        sq = a.mul(e, e)
        if sq == e:
            return e, steps
        cube = a.mul(sq, e)
        e = tuple(3 * s - 2 * c for s, c in zip(sq, cube))
    raise LiftError("idempotent iteration did not converge (defect not nilpotent?)")


def element_relation_poly(a: Algebra, x) -> Tuple[Polynomial, List[tuple]]:
    """Least monic f with f(x) = 0 and f(0) = 0, plus the powers x, x², ...

    Found by inserting successive powers into a tracked span; degree is at
    most dim + 1.
    """
    F = a.field
    span = TrackedSpan(F, a.dim)
    powers = []
    acc = tuple(x)
    while True:
        comb = span.insert(acc)
        if comb is not None:
            coeffs = [F.zero] + [-c for c in comb] + [F.one]
            return Polynomial(F, tuple(coeffs)), powers
        powers.append(acc)
        acc = a.mul(x, acc)


def _eval_positive_poly(a: Algebra, poly: Polynomial, powers: List[tuple]):
    """Evaluate a polynomial with zero constant term on x, given its powers."""
    if poly.coeffs and poly.coeffs[0]:
        raise ValueError("polynomial has a constant term; not evaluable without a unit")
    acc = a.zero()
    for i, c in enumerate(poly.coeffs[1:], start=1):
        if c:
            acc = vec_add(acc, tuple(c * p for p in powers[i - 1]))
    return acc


def spectral_root_idempotent(a: Algebra, x, root) -> Optional[tuple]:
    """Idempotent of F[x] projecting onto the (T − root)-primary component.

    root must be nonzero; returns None when root is not an eigenvalue.
    Built by the Bezout identity u·(T−root)^k + v·q = 1 with q = f/(T−root)^k:
    the class of v·q is the wanted idempotent, and it has zero constant term
    because q(0) = 0.
    """
    F = a.field
    if not root:
        raise ValueError("spectral idempotent needs a nonzero eigenvalue")
    f, powers = element_relation_poly(a, x)
    k = f.root_multiplicity(root)
    if k == 0:
        return None
    lin = Polynomial(F, (-root, F.one))
    q = f
    for _ in range(k):
        q = q.deflate(root)
    pk = Polynomial(F, (F.one,))
    for _ in range(k):
        pk = pk * lin
    g, u, v = poly_xgcd(pk, q)
    if g.degree != 0:
        raise VerificationError("spectral split: factors are not coprime")
    eps = (v * q) % f
    e = _eval_positive_poly(a, eps, powers)
    if vec_is_zero(e) or a.mul(e, e) != e:
        raise VerificationError("spectral idempotent failed its defining identity")
    return e


def semisimple_unit_idempotent(a: Algebra, x) -> Optional[tuple]:
    """The unit of the non-nilpotent part of F[x]; None when x is nilpotent.

    With f = T^a·h, h(0) != 0, the Bezout identity u·T^a + v·h = 1 gives the
    idempotent class u·T^a (congruent to 1 mod h, to 0 mod T^a).
    """
    F = a.field
    f, powers = element_relation_poly(a, x)
    aa = 0
    h = f
    while h.degree >= 1 and not h.coeffs[0]:
        h = Polynomial(F, h.coeffs[1:])
        aa += 1
    if h.degree < 1:
        return None  # x nilpotent
    ta = Polynomial(F, (F.zero,) * aa + (F.one,))
    g, u, v = poly_xgcd(ta, h)
    if g.degree != 0:
        raise VerificationError("semisimple split: factors are not coprime")
    eps = (u * ta) % f
    e = _eval_positive_poly(a, eps, powers)
    if vec_is_zero(e) or a.mul(e, e) != e:
        raise VerificationError("spectral idempotent failed its defining identity")
    return e


def find_weight_one_idempotent(u: BaricAlgebra) -> Idempotent:
    """Idempotent of weight 1, from the first basis vector of nonzero weight.

    Runs the quadratic iteration when the defect x² − x is nilpotent (the
    spec's unit-plus-nilpotent case); otherwise takes the exact spectral
    idempotent onto the eigenvalue-1 component of F[x], whose weight is 1.
    """
    a = u.algebra
    idx = next((i for i, w in enumerate(u.weight) if w), None)
    if idx is None:
        raise VerificationError("baric algebra with zero weight")
    x = tuple(c / u.weight[idx] for c in a.basis_element(idx))
    defect = vec_sub(a.mul(x, x), x)
    if vec_is_zero(defect):
        return Idempotent(x, u.field.one)
    nil, _ = is_nilpotent_element(a, defect)
    if nil:
        e, _ = hensel_idempotent(a, x)
    else:
        e = spectral_root_idempotent(a, x, u.field.one)
        if e is None:
            raise VerificationError("weight-one element has no eigenvalue-1 idempotent")
    if u.wt(e) != u.field.one or not is_idempotent(a, e):
        raise VerificationError("weight-one idempotent postcondition failed")
    return Idempotent(e, u.field.one)


def extract_nonzero_idempotent(a: Algebra, y) -> Optional[tuple]:
    """Some nonzero idempotent of F[y], or None when y is nilpotent."""
    if is_idempotent(a, y):
        return tuple(y)
    defect = vec_sub(a.mul(y, y), y)
    nil, _ = is_nilpotent_element(a, defect)
    if nil and not vec_is_zero(defect):
        e, _ = hensel_idempotent(a, y)
        return e if not vec_is_zero(e) else None
    return semisimple_unit_idempotent(a, y)


def _corner_candidates(corner_alg: Algebra, seed: int, max_random: int):
    n = corner_alg.dim
    for i in range(n):
        yield corner_alg.basis_element(i)
    for i in range(n):
        for j in range(i + 1, n):
            yield vec_add(corner_alg.basis_element(i), corner_alg.basis_element(j))
    rng = random.Random(seed)
    F = corner_alg.field
    for _ in range(max_random):
        yield tuple(F.from_int(rng.randint(-2, 2)) for _ in range(n))


def principal_idempotent(u: BaricAlgebra, seed: int = 0, max_random_tries: int = 64) -> Idempotent:
    """Weight-1 idempotent whose (0,0) Peirce corner is a nil subalgebra.

    Grows the idempotent by absorbing ones extracted from non-nilpotent corner
    elements; the corner dimension strictly decreases, so the loop terminates.
    """
    a = u.algebra
    e = find_weight_one_idempotent(u).element
    while True:
        system = peirce_single(a, e)
        corner = system.components[(0, 0)]
        if corner.dim == 0:
            break
        view = a.restrict(corner)
        full = Subspace.full(a.field, corner.dim)
        if ideal_power_chain(view.algebra, full) is not None:
            break
        found = None
        for cand in _corner_candidates(view.algebra, seed, max_random_tries):
            if vec_is_zero(cand):
                continue
            nil, _ = is_nilpotent_element(view.algebra, cand)
            if not nil:
                found = cand
                break
        if found is None:
            raise SearchExhaustedError(
                "principal idempotent: no non-nilpotent element found in the corner"
            )
        extra = extract_nonzero_idempotent(view.algebra, found)
        if extra is None or vec_is_zero(extra):
            raise SearchExhaustedError("principal idempotent: corner idempotent extraction failed")
        e_new = vec_add(e, view.up(extra))
        if not is_idempotent(a, e_new):
            raise VerificationError("principal idempotent growth lost idempotency")
        new_corner = peirce_single(a, e_new).components[(0, 0)]
        if new_corner.dim >= corner.dim:
            raise VerificationError("principal idempotent corner did not shrink")
        e = e_new
    if u.wt(e) != u.field.one:
        raise VerificationError("principal idempotent must have weight 1")
    return Idempotent(e, u.field.one)
