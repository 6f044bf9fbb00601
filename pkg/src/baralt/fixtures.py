"""Built-in test algebras and seeded transformations.

All fixtures are baric alternative algebras over Q unless noted:

  t1  — F·1, dim 1
  t2  — F1 ⊕ M2 (adjoined unit over the 2x2 matrix units), dim 5
  t3  — F1 ⊕ upper-triangular 2x2, dim 4
  t4  — F[x]/(x^8) truncated polynomials, dim 8 (b-radical of nilpotency index 4)
  t5  — F1 ⊕ M2 ⊕ F·n with n annihilating everything but the unit, dim 6
  t6  — F1 ⊕ M2 ⊕ square-zero regular M2-bimodule, dim 9
  t7  — span{c, n}: c² = c, cn = n, nc = 0, n² = 0 (non-unital), dim 2
  t8  — F1 ⊕ Zorn ⊕ square-zero regular Zorn-bimodule, dim 17
  t9  — span{c, m1, m2, n} ⊂ Zorn: one-sided weight-1 idempotent with
        m1·m2 = n, giving rad(U) = F·n and rad ∩ U_10 = 0 ⊊ U_10, dim 4
  zorn_algebra — the split Cayley (vector-matrix) algebra, dim 8, no weight
  zorn_baric   — F1 ⊕ Zorn, dim 9
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional, Tuple

from .algebra import Algebra
from .baric import BaricAlgebra, change_basis_baric
from .fields import QQ, GF


def _table_from_dict(field, dim: int, entries: Dict[Tuple[int, int], Dict[int, object]]):
    z = field.zero
    table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), cell in entries.items():
        for k, c in cell.items():
            table[i][j][k] = field.coerce(c)
    return table


def _matrix_unit_entries(offset: int, t: int, target_offset: Optional[int] = None):
    """Products of t x t matrix units living at basis positions offset + (a*t+b)."""
    if target_offset is None:
        target_offset = offset
    entries = {}
    for a in range(t):
        for b in range(t):
            for c in range(t):
                for d in range(t):
                    if b == c:
                        entries[(offset + a * t + b, offset + c * t + d)] = {
                            target_offset + a * t + d: 1
                        }
    return entries


def _with_unit(entries: Dict, dim: int, unit_index: int = 0):
    for i in range(dim):
        if i == unit_index:
            entries[(unit_index, unit_index)] = {unit_index: 1}
        else:
            entries[(unit_index, i)] = {i: 1}
            entries[(i, unit_index)] = {i: 1}
    return entries


def t1(field=QQ) -> BaricAlgebra:
    alg = Algebra(field, _table_from_dict(field, 1, {(0, 0): {0: 1}}), ["u"])
    return BaricAlgebra(alg, [1])


def t2(field=QQ) -> BaricAlgebra:
    entries = _matrix_unit_entries(1, 2)
    _with_unit(entries, 5)
    labels = ["u", "e11", "e12", "e21", "e22"]
    alg = Algebra(field, _table_from_dict(field, 5, entries), labels)
    return BaricAlgebra(alg, [1, 0, 0, 0, 0])


def t3(field=QQ) -> BaricAlgebra:
    # basis u, e11, e12, e22 of F1 + upper triangular 2x2
    entries = {
        (1, 1): {1: 1},
        (1, 2): {2: 1},
        (2, 3): {2: 1},
        (3, 3): {3: 1},
    }
    _with_unit(entries, 4)
    alg = Algebra(field, _table_from_dict(field, 4, entries), ["u", "e11", "e12", "e22"])
    return BaricAlgebra(alg, [1, 0, 0, 0])


def t4(field=QQ) -> BaricAlgebra:
    # truncated polynomials 1, x, ..., x^7 with x^8 = 0
    entries = {}
    for i in range(8):
        for j in range(8):
            if i + j < 8:
                entries[(i, j)] = {i + j: 1}
    labels = ["one"] + [f"x{k}" for k in range(1, 8)]
    alg = Algebra(field, _table_from_dict(field, 8, entries), labels)
    return BaricAlgebra(alg, [1] + [0] * 7)


def t5(field=QQ) -> BaricAlgebra:
    entries = _matrix_unit_entries(1, 2)
    _with_unit(entries, 6)
    labels = ["u", "e11", "e12", "e21", "e22", "n"]
    alg = Algebra(field, _table_from_dict(field, 6, entries), labels)
    return BaricAlgebra(alg, [1, 0, 0, 0, 0, 0])


def t6(field=QQ) -> BaricAlgebra:
    # unit, matrix units e_ab at 1..4, bimodule copies j_ab at 5..8
    entries = _matrix_unit_entries(1, 2)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b == c:
                        entries[(1 + a * 2 + b, 5 + c * 2 + d)] = {5 + a * 2 + d: 1}
                        entries[(5 + a * 2 + b, 1 + c * 2 + d)] = {5 + a * 2 + d: 1}
    _with_unit(entries, 9)
    labels = ["u", "e11", "e12", "e21", "e22", "j11", "j12", "j21", "j22"]
    alg = Algebra(field, _table_from_dict(field, 9, entries), labels)
    return BaricAlgebra(alg, [1] + [0] * 8)


def t7(field=QQ) -> BaricAlgebra:
    entries = {(0, 0): {0: 1}, (0, 1): {1: 1}}
    alg = Algebra(field, _table_from_dict(field, 2, entries), ["c", "n"])
    return BaricAlgebra(alg, [1, 0])


def _zorn_product(x, y):
    """Vector-matrix product of (alpha, v, w, beta) quadruples with v, w in F³."""
    a1, v1, w1, b1 = x
    a2, v2, w2, b2 = y

    def dot(p, q):
        return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]

    def cross(p, q):
        return (
            p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0],
        )

    alpha = a1 * a2 + dot(v1, w2)
    v = tuple(a1 * v2[i] + b2 * v1[i] - cross(w1, w2)[i] for i in range(3))
    w = tuple(a2 * w1[i] + b1 * w2[i] + cross(v1, v2)[i] for i in range(3))
    beta = dot(w1, v2) + b1 * b2
    return alpha, v, w, beta


_ZORN_BASIS = []
for _slot in range(8):
    _a = 1 if _slot == 0 else 0
    _b = 1 if _slot == 1 else 0
    _v = tuple(1 if _slot == 2 + _i else 0 for _i in range(3))
    _w = tuple(1 if _slot == 5 + _i else 0 for _i in range(3))
    _ZORN_BASIS.append((_a, _v, _w, _b))

ZORN_LABELS = ["e1", "e2", "v1", "v2", "v3", "w1", "w2", "w3"]


def _zorn_coords(q) -> List[int]:
    alpha, v, w, beta = q
    return [alpha, beta, v[0], v[1], v[2], w[0], w[1], w[2]]


def zorn_structure_entries(offset: int = 0, target_offset: Optional[int] = None) -> Dict:
    if target_offset is None:
        target_offset = offset
    entries = {}
    for i, bi in enumerate(_ZORN_BASIS):
        for j, bj in enumerate(_ZORN_BASIS):
            coords = _zorn_coords(_zorn_product(bi, bj))
            cell = {target_offset + k: c for k, c in enumerate(coords) if c}
            if cell:
                entries[(offset + i, offset + j)] = cell
    return entries


def zorn_algebra(field=QQ) -> Algebra:
    return Algebra(field, _table_from_dict(field, 8, zorn_structure_entries()), ZORN_LABELS)


def zorn_baric(field=QQ) -> BaricAlgebra:
    entries = zorn_structure_entries(offset=1)
    _with_unit(entries, 9)
    alg = Algebra(field, _table_from_dict(field, 9, entries), ["u"] + ZORN_LABELS)
    return BaricAlgebra(alg, [1] + [0] * 8)


def t8(field=QQ) -> BaricAlgebra:
    # unit at 0, Zorn at 1..8, regular-bimodule copies at 9..16 (square zero)
    entries = zorn_structure_entries(offset=1)
    for i, bi in enumerate(_ZORN_BASIS):
        for j, bj in enumerate(_ZORN_BASIS):
            coords = _zorn_coords(_zorn_product(bi, bj))
            cell = {9 + k: c for k, c in enumerate(coords) if c}
            if cell:
                entries[(1 + i, 9 + j)] = cell
                entries[(9 + i, 1 + j)] = cell
    _with_unit(entries, 17)
    labels = ["u"] + ZORN_LABELS + [f"m_{l}" for l in ZORN_LABELS]
    alg = Algebra(field, _table_from_dict(field, 17, entries), labels)
    return BaricAlgebra(alg, [1] + [0] * 16)


def t9(field=QQ) -> BaricAlgebra:
    # c = e11-type idempotent, m1, m2 in U_10, n = m1·m2 in U_01
    entries = {
        (0, 0): {0: 1},
        (0, 1): {1: 1},
        (0, 2): {2: 1},
        (3, 0): {3: 1},
        (1, 2): {3: 1},
        (2, 1): {3: -1},
    }
    alg = Algebra(field, _table_from_dict(field, 4, entries), ["c", "m1", "m2", "n"])
    return BaricAlgebra(alg, [1, 0, 0, 0])


def t2_f7() -> BaricAlgebra:
    return t2(GF(7))


ALL_FIXTURES = {
    "t1": t1,
    "t2": t2,
    "t3": t3,
    "t4": t4,
    "t5": t5,
    "t6": t6,
    "t7": t7,
    "t8": t8,
    "t9": t9,
    "zorn_baric": zorn_baric,
}


def perturbed_zorn(seed: int, field=QQ) -> Algebra:
    """Zorn tensor with one structure coefficient bumped by +1 (seeded choice)."""
    rng = random.Random(seed)
    base = zorn_algebra(field)
    i = rng.randrange(8)
    j = rng.randrange(8)
    k = rng.randrange(8)
    table = [[[c for c in cell] for cell in row] for row in base.table]
    table[i][j][k] = table[i][j][k] + field.one
    return Algebra(field, table, base.labels)


def random_unimodular(field, n: int, seed: int, steps: Optional[int] = None):
    """Integer unimodular matrix from seeded elementary row operations."""
    rng = random.Random(seed)
    if steps is None:
        steps = 2 * n
    rows = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = field.from_int(rng.choice([-2, -1, 1, 2]))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return tuple(tuple(r) for r in rows)


def conjugated(u: BaricAlgebra, seed: int) -> BaricAlgebra:
    """Seeded unimodular change of basis, weight transported along."""
    p = random_unimodular(u.field, u.dim, seed)
    return change_basis_baric(u, p)
