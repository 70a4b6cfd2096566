"""JSON text formats for matrices, states, fields, families and paths.

Complex scalars are ``[re, im]`` pairs. A matrix is
``{"dim": d, "entries": [[[re, im], ...], ...]}`` in row-major order; a
scenario may instead ask for ``{"random_hermitian": {"dim": d, "seed": s}}``.
Parsing errors raise SchemaError naming the dotted field path.
"""

from __future__ import annotations

import math
from numbers import Real
from typing import Any

import numpy as np

from .errors import SchemaError
from .multitime import MultiTimeState, Segment, TimePath
from .opalg import random_hermitian
from .timefield import KINDS, Coefficient, HamiltonianFamily, TimeDependentOperator


def _is_number(x) -> bool:
    return isinstance(x, Real) and not isinstance(x, bool)


def require(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    if key not in obj:
        raise SchemaError(f"{where}.{key}: missing required field")
    return obj[key]


def parse_real(x, where: str) -> float:
    if not _is_number(x) or not math.isfinite(x):
        raise SchemaError(f"{where}: expected a finite number, got {x!r}")
    return float(x)


def parse_int(x, where: str, minimum: int | None = None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{where}: expected an integer, got {x!r}")
    if minimum is not None and x < minimum:
        raise SchemaError(f"{where}: must be >= {minimum}, got {x}")
    return x


def complex_to_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def parse_complex(x, where: str) -> complex:
    if _is_number(x):
        return complex(parse_real(x, where))
    if isinstance(x, list) and len(x) == 2:
        return complex(parse_real(x[0], f"{where}[0]"), parse_real(x[1], f"{where}[1]"))
    raise SchemaError(f"{where}: expected [re, im] pair, got {x!r}")


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    return {"dim": int(m.shape[0]), "entries": [[complex_to_pair(z) for z in row] for row in m]}


def parse_matrix(obj: Any, where: str, seed: int | None = None) -> np.ndarray:
    if isinstance(obj, dict) and "random_hermitian" in obj:
        spec = obj["random_hermitian"]
        w = f"{where}.random_hermitian"
        dim = parse_int(require(spec, "dim", w), f"{w}.dim", 1)
        s = spec.get("seed", seed)
        if s is None:
            raise SchemaError(f"{w}.seed: no seed given and the scenario has none")
        s = parse_int(s, f"{w}.seed", 0)
        return random_hermitian(dim, s + parse_int(spec.get("seed_offset", 0), f"{w}.seed_offset", 0))
    dim = parse_int(require(obj, "dim", where), f"{where}.dim", 1)
    rows = require(obj, "entries", where)
    if not isinstance(rows, list) or len(rows) != dim:
        raise SchemaError(f"{where}.entries: shape must be {dim}x{dim}, got {len(rows) if isinstance(rows, list) else '?'} rows")
    out = np.empty((dim, dim), dtype=complex)
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError(f"{where}.entries[{r}]: shape must be {dim}x{dim}, row has {len(row) if isinstance(row, list) else '?'} entries")
        for c, z in enumerate(row):
            out[r, c] = parse_complex(z, f"{where}.entries[{r}][{c}]")
    return out


def state_to_json(psi: np.ndarray) -> list:
    return [complex_to_pair(z) for z in np.asarray(psi, dtype=complex)]


def parse_state(obj: Any, where: str) -> np.ndarray:
    if not isinstance(obj, list) or not obj:
        raise SchemaError(f"{where}: expected a non-empty list of [re, im] pairs")
    return np.array([parse_complex(z, f"{where}[{i}]") for i, z in enumerate(obj)], dtype=complex)


def parse_times(obj: Any, where: str) -> tuple[float, ...]:
    if not isinstance(obj, list) or not obj:
        raise SchemaError(f"{where}: expected a non-empty list of times")
    return tuple(parse_real(t, f"{where}[{i}]") for i, t in enumerate(obj))


def coefficient_to_json(c: Coefficient) -> dict:
    out = {"kind": c.kind, "params": list(c.params)}
    if c.var is not None:
        out["var"] = c.var
    return out


def parse_coefficient(obj: Any, where: str) -> Coefficient:
    kind = require(obj, "kind", where)
    if kind not in KINDS:
        raise SchemaError(f"{where}.kind: unknown kind {kind!r}")
    var = obj.get("var")
    if var is not None:
        var = parse_int(var, f"{where}.var", 0)
    params = obj.get("params", [1.0])
    if not isinstance(params, list):
        raise SchemaError(f"{where}.params: expected a list")
    params = tuple(parse_real(p, f"{where}.params[{i}]") for i, p in enumerate(params))
    try:
        return Coefficient(kind, var, params)
    except ValueError as exc:
        raise SchemaError(f"{where}: {exc}") from exc


def field_to_json(f: TimeDependentOperator) -> dict:
    return {
        "n_times": f.n_times,
        "dim": f.dim,
        "terms": [{"coeff": coefficient_to_json(c), "op": matrix_to_json(op)} for c, op in f.terms],
    }


def parse_field(obj: Any, where: str, seed: int | None = None) -> TimeDependentOperator:
    n = parse_int(require(obj, "n_times", where), f"{where}.n_times", 1)
    dim = parse_int(require(obj, "dim", where), f"{where}.dim", 1)
    terms_obj = require(obj, "terms", where)
    if not isinstance(terms_obj, list):
        raise SchemaError(f"{where}.terms: expected a list")
    terms = []
    for i, term in enumerate(terms_obj):
        w = f"{where}.terms[{i}]"
        coeff = parse_coefficient(require(term, "coeff", w), f"{w}.coeff")
        op = parse_matrix(require(term, "op", w), f"{w}.op", seed)
        if op.shape[0] != dim:
            raise SchemaError(f"{w}.op: dim {op.shape[0]} does not match field dim {dim}")
        if coeff.var is not None and coeff.var >= n:
            raise SchemaError(f"{w}.coeff.var: index {coeff.var} >= n_times {n}")
        terms.append((coeff, op))
    return TimeDependentOperator(n, dim, tuple(terms))


def family_to_json(fam: HamiltonianFamily) -> dict:
    return {"hermitian_required": fam.hermitian_required, "members": [field_to_json(m) for m in fam.members]}


def parse_family(obj: Any, where: str, seed: int | None = None, allow_non_hermitian: bool = False,
                 check=None) -> HamiltonianFamily:
    """Parse a family; ``check(op, field_path)`` sees every term operator first."""
    members_obj = require(obj, "members", where)
    if not isinstance(members_obj, list) or not members_obj:
        raise SchemaError(f"{where}.members: expected a non-empty list")
    members = tuple(parse_field(m, f"{where}.members[{i}]", seed) for i, m in enumerate(members_obj))
    n = len(members)
    dims = {m.dim for m in members}
    if len(dims) != 1:
        raise SchemaError(f"{where}.members: differing dims {sorted(dims)}")
    for i, m in enumerate(members):
        if m.n_times != n:
            raise SchemaError(f"{where}.members[{i}].n_times: {m.n_times} != number of members {n}")
    herm = obj.get("hermitian_required", True)
    if not isinstance(herm, bool):
        raise SchemaError(f"{where}.hermitian_required: expected a boolean")
    if check is not None:
        for i, m in enumerate(members):
            for k, (_, op) in enumerate(m.terms):
                check(op, f"{where}.members[{i}].terms[{k}].op")
    if allow_non_hermitian:
        herm = False
    return HamiltonianFamily(members, herm)


def path_to_json(p: TimePath) -> dict:
    return {
        "start": list(p.start),
        "segments": [{"axis": s.axis, "delta": s.delta, "steps": s.steps} for s in p.segments],
    }


def parse_path(obj: Any, where: str) -> TimePath:
    start = parse_times(require(obj, "start", where), f"{where}.start")
    segs_obj = require(obj, "segments", where)
    if not isinstance(segs_obj, list):
        raise SchemaError(f"{where}.segments: expected a list")
    segs = []
    for i, s in enumerate(segs_obj):
        w = f"{where}.segments[{i}]"
        axis = parse_int(require(s, "axis", w), f"{w}.axis", 0)
        if axis >= len(start):
            raise SchemaError(f"{w}.axis: {axis} out of range for {len(start)} times")
        delta = parse_real(require(s, "delta", w), f"{w}.delta")
        steps = parse_int(s.get("steps", 1), f"{w}.steps", 1)
        segs.append(Segment(axis, delta, steps))
    return TimePath(start, tuple(segs))


def parse_multitime_state(obj: Any, where: str) -> MultiTimeState:
    state = parse_state(require(obj, "state", where), f"{where}.state")
    times = parse_times(require(obj, "times", where), f"{where}.times")
    return MultiTimeState(state, times)
