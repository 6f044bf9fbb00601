"""Algebra and decomposition file formats (JSON, exact coefficient strings).

Algebra files:
    {
      "field": "Q" | {"Fp": p},
      "dim": n,
      "basis": ["u", ...],
      "structure": [[i, j, k, "coeff"], ...],   # omitted triples are zero
      "weight": ["1", "0", ...],
      "metadata": {"name": ..., "description": ...}   # optional
    }

Decomposition files echo a hash of the canonical input serialization and list
the three bases row by row plus the full certificate. Serialization is
canonical (sorted triples, fixed separators), so identical inputs and seeds
produce byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
from typing import Optional, Tuple

from .algebra import Algebra
from .baric import BaricAlgebra
from .errors import ParseError
from .fields import GF, QQ
from .linalg import Subspace
from .wedderburn import Decomposition


def _parse_field(spec):
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and set(spec.keys()) == {"Fp"}:
        return GF(int(spec["Fp"]))
    raise ParseError(f"unknown field spec {spec!r}")


def _field_spec(field):
    if field == QQ:
        return "Q"
    return {"Fp": field.p}


def parse_algebra_text(text: str) -> Tuple[BaricAlgebra, dict]:
    """Parse and validate an algebra file; returns (baric algebra, metadata).

    Field characteristic and the weight homomorphism are checked here;
    alternativity is checked only by the `check` command.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    for key in ("field", "dim", "basis", "structure", "weight"):
        if key not in data:
            raise ParseError(f"missing required key {key!r}")
    field = _parse_field(data["field"])
    dim = int(data["dim"])
    basis = list(data["basis"])
    if len(basis) != dim:
        raise ParseError("basis label count differs from dim")
    z = field.zero
    table = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
    for entry in data["structure"]:
        if len(entry) != 4:
            raise ParseError(f"structure triple {entry!r} must be [i, j, k, coefficient]")
        i, j, k, coeff = entry
        if not all(0 <= idx < dim for idx in (i, j, k)):
            raise ParseError(f"structure indices {entry[:3]} out of range for dim {dim}")
        table[i][j][k] = field.parse(coeff)
    weight = [field.parse(c) for c in data["weight"]]
    if len(weight) != dim:
        raise ParseError("weight length differs from dim")
    algebra = Algebra(field, table, basis)
    baric = BaricAlgebra(algebra, weight)  # raises WeightError with a witness
    return baric, data.get("metadata", {})


def algebra_to_text(u: BaricAlgebra, metadata: Optional[dict] = None) -> str:
    """Canonical serialization; round-trips through parse_algebra_text exactly."""
    a = u.algebra
    triples = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                c = a.table[i][j][k]
                if c:
                    triples.append([i, j, k, a.field.fmt(c)])
    doc = {
        "field": _field_spec(a.field),
        "dim": a.dim,
        "basis": list(a.labels),
        "structure": triples,
        "weight": [a.field.fmt(c) for c in u.weight],
    }
    if metadata:
        doc["metadata"] = metadata
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def algebra_sha256(u: BaricAlgebra) -> str:
    return hashlib.sha256(algebra_to_text(u).encode()).hexdigest()


def _rows_to_strings(field, sub: Subspace):
    return [[field.fmt(c) for c in row] for row in sub.rows]


def decomposition_to_text(u: BaricAlgebra, dec: Decomposition, seed: int, search_bound: int) -> str:
    field = u.field
    cert = dec.certificate
    doc = {
        "input_sha256": algebra_sha256(u),
        "dim": u.dim,
        "seed": seed,
        "search_bound": search_bound,
        "s_basis": _rows_to_strings(field, dec.s_basis),
        "v_basis": _rows_to_strings(field, dec.v_basis),
        "rad_basis": _rows_to_strings(field, dec.rad_basis),
        "certificate": [
            {
                "name": c.name,
                "passed": c.passed,
                "informative": c.informative,
                "detail": c.detail,
            }
            for c in (cert.checks if cert else ())
        ],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def parse_decomposition_text(text: str, u: BaricAlgebra) -> Tuple[Decomposition, dict]:
    """Parse a decomposition file against its algebra; hash echo is enforced."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    for key in ("input_sha256", "s_basis", "v_basis", "rad_basis", "certificate"):
        if key not in data:
            raise ParseError(f"missing required key {key!r}")
    if data["input_sha256"] != algebra_sha256(u):
        raise ParseError("decomposition file does not match the algebra file (hash mismatch)")
    field = u.field
    dim = u.dim

    def sub_of(rows_key):
        rows = data[rows_key]
        parsed = []
        for row in rows:
            if len(row) != dim:
                raise ParseError(f"{rows_key}: row length differs from dim")
            parsed.append(tuple(field.parse(c) for c in row))
        return Subspace.from_vectors(field, dim, parsed)

    dec = Decomposition(sub_of("s_basis"), sub_of("v_basis"), sub_of("rad_basis"))
    return dec, data
