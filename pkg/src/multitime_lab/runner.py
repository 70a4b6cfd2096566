"""Declarative scenarios: load, validate, run check batteries, emit reports."""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable

import numpy as np

from . import __version__
from .errors import GateRefusal, MultitimeError, ParseError, SchemaError
from .formats import (
    parse_family,
    parse_int,
    parse_matrix,
    parse_multitime_state,
    parse_path,
    parse_real,
    parse_state,
    parse_times,
    require,
)
from .multitime import diagonal_consistency_gap, integrability_report, path_dependence_residual, propagate
from .opalg import as_projector, frobenius, hermiticity_defect, projector_from_basis
from .partitions import (
    block_commutator_residual,
    decompose,
    dirac_frenkel_error,
    feshbach_eigenconsistency,
    subspace_spectrum_gaps,
)
from .spectra import norm_decay_curve, schroedinger_picture_gate
from .tensorprod import (
    TensorDecomposition,
    assemble,
    evolve_full,
    interaction_entanglement_sweep,
    product_ansatz_residual,
)

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
KINDS = (
    "integrability",
    "path_independence",
    "diagonal_consistency",
    "partition_feshbach",
    "tensor_product",
    "spectrum",
)
# kinds that assume a unitary (Schroedinger-picture) generator
GATED_KINDS = frozenset(KINDS) - {"spectrum"}

DEFAULT_TOLERANCES = {
    # exact algebra
    "max_residual": 1e-12,
    "reassembly": 1e-12,
    "block_commutator": 1e-12,
    "off_block_adjoint": 1e-12,
    "dirac_frenkel": 1e-12,
    "assembled_hermitian": 1e-12,
    "unitarity": 1e-12,
    "product_residual": 1e-12,
    "entropy_bound": 1e-12,
    # eigensolver-limited
    "eigen_consistency": 1e-8,
    "expected_eigenvalues": 1e-10,
    "expected_entropy": 1e-9,
    "entropy_zero": 1e-10,
    "max_imag": 1e-10,
    "squared_norms": 1e-10,
    # propagation
    "path_residual": 1e-9,
    "norm_drift": 1e-9,
    "gap": 1e-9,
    # truncated expansions, relative
    "path_residual_rel": 0.05,
    "first_order_law": 0.05,
    # lower bounds
    "subspace_gap": 1e-3,
    "hermitian_flag": 0.0,
    "monotone_decay": 0.0,
}

EXIT_OK, EXIT_FAILED, EXIT_LOAD_ERROR = 0, 1, 2


@dataclass
class Scenario:
    name: str
    kind: str
    payload: dict
    tolerances: dict[str, float] = field(default_factory=dict)
    seed: int | None = None
    allow_non_hermitian: bool = False
    inputs: dict[str, Any] = field(default_factory=dict, repr=False)

    def tol(self, check: str) -> float:
        return self.tolerances.get(check, DEFAULT_TOLERANCES[check])


@dataclass
class Check:
    name: str
    value: float | None
    tolerance: float
    passed: bool
    detail: str = ""


@dataclass
class Report:
    scenario_name: str
    checks: list[Check]
    overall_passed: bool
    runtime_ms: int
    tool_version: str = __version__

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(d["scenario_name"], [Check(**c) for c in d["checks"]], d["overall_passed"],
                   d["runtime_ms"], d["tool_version"])


# --------------------------------------------------------------------------
# loading


def _gate(allow: bool) -> Callable[[np.ndarray, str], None]:
    def check(op: np.ndarray, where: str) -> None:
        if allow:
            return
        decision = schroedinger_picture_gate(op)
        if not decision.admits_unitary_picture:
            raise GateRefusal(
                f"{where}: non-Hermitian matrix (defect {decision.report.hermiticity_defect:.3e}); "
                "pass --allow-non-hermitian to run anyway"
            )
    return check


def _parse_integrability(p: dict, s: Scenario, gate) -> dict:
    inputs = {"family": parse_family(require(p, "family", "payload"), "payload.family", s.seed,
                                     s.allow_non_hermitian, gate)}
    samples = require(p, "sample_times", "payload")
    if not isinstance(samples, list) or not samples:
        raise SchemaError("payload.sample_times: expected a non-empty list of time tuples")
    inputs["sample_times"] = [parse_times(t, f"payload.sample_times[{i}]") for i, t in enumerate(samples)]
    for i, t in enumerate(inputs["sample_times"]):
        if len(t) != inputs["family"].n_times:
            raise SchemaError(f"payload.sample_times[{i}]: expected {inputs['family'].n_times} times")
    if "expected_max_residual" in p:
        inputs["expected_max_residual"] = parse_real(p["expected_max_residual"], "payload.expected_max_residual")
    return inputs


def _parse_path_independence(p: dict, s: Scenario, gate) -> dict:
    family = parse_family(require(p, "family", "payload"), "payload.family", s.seed, s.allow_non_hermitian, gate)
    inputs = {
        "family": family,
        "initial": parse_multitime_state(require(p, "initial", "payload"), "payload.initial"),
        "path_a": parse_path(require(p, "path_a", "payload"), "payload.path_a"),
        "path_b": parse_path(require(p, "path_b", "payload"), "payload.path_b"),
    }
    if inputs["initial"].state.size != family.dim:
        raise SchemaError(f"payload.initial.state: length {inputs['initial'].state.size} != family dim {family.dim}")
    if "expected_residual" in p:
        inputs["expected_residual"] = parse_real(p["expected_residual"], "payload.expected_residual")
    return inputs


def _parse_diagonal(p: dict, s: Scenario, gate) -> dict:
    family = parse_family(require(p, "family", "payload"), "payload.family", s.seed, s.allow_non_hermitian, gate)
    inputs = {
        "family": family,
        "initial": parse_state(require(p, "initial", "payload"), "payload.initial"),
        "t": parse_real(require(p, "t", "payload"), "payload.t"),
        "steps": parse_int(p.get("steps", 1), "payload.steps", 1),
    }
    if inputs["initial"].size != family.dim:
        raise SchemaError(f"payload.initial: length {inputs['initial'].size} != family dim {family.dim}")
    if "expected_gap" in p:
        inputs["expected_gap"] = parse_real(p["expected_gap"], "payload.expected_gap")
    return inputs


def _parse_partition(p: dict, s: Scenario, gate) -> dict:
    h = parse_matrix(require(p, "h", "payload"), "payload.h", s.seed)
    gate(h, "payload.h")
    if "projector" in p:
        try:
            proj = as_projector(parse_matrix(p["projector"], "payload.projector", s.seed))
        except MultitimeError as exc:
            raise SchemaError(f"payload.projector: {exc}") from exc
    elif "basis" in p:
        basis = p["basis"]
        if not isinstance(basis, list) or not basis:
            raise SchemaError("payload.basis: expected a non-empty list of states")
        cols = [parse_state(c, f"payload.basis[{i}]") for i, c in enumerate(basis)]
        try:
            proj = projector_from_basis(cols)
        except MultitimeError as exc:
            raise SchemaError(f"payload.basis: {exc}") from exc
    else:
        raise SchemaError("payload: needs either 'projector' or 'basis'")
    if proj.dim != h.shape[0]:
        raise SchemaError(f"payload.projector: dim {proj.dim} != h dim {h.shape[0]}")
    inputs = {"h": h, "p_a": proj}
    if "psi_v" in p:
        inputs["psi_v"] = parse_state(p["psi_v"], "payload.psi_v")
    if "expected_dirac_frenkel" in p:
        inputs["expected_dirac_frenkel"] = parse_real(p["expected_dirac_frenkel"], "payload.expected_dirac_frenkel")
    if "expected_eigenvalues" in p:
        ev = p["expected_eigenvalues"]
        if not isinstance(ev, list):
            raise SchemaError("payload.expected_eigenvalues: expected a list")
        inputs["expected_eigenvalues"] = [parse_real(e, f"payload.expected_eigenvalues[{i}]") for i, e in enumerate(ev)]
    if "negative_control" in p:
        if not isinstance(p["negative_control"], bool):
            raise SchemaError("payload.negative_control: expected a boolean")
        inputs["negative_control"] = p["negative_control"]
    return inputs


def _parse_tensor(p: dict, s: Scenario, gate) -> dict:
    h_a = parse_matrix(require(p, "h_a", "payload"), "payload.h_a", s.seed)
    h_b = parse_matrix(require(p, "h_b", "payload"), "payload.h_b", s.seed)
    gate(h_a, "payload.h_a")
    gate(h_b, "payload.h_b")
    inter = require(p, "interaction", "payload")
    if inter is not None:
        inter = parse_matrix(inter, "payload.interaction", s.seed)
        gate(inter, "payload.interaction")
        if inter.shape[0] != h_a.shape[0] * h_b.shape[0]:
            raise SchemaError(f"payload.interaction: dim {inter.shape[0]} != {h_a.shape[0]}*{h_b.shape[0]}")
    inputs = {
        "dec": TensorDecomposition(h_a, h_b, inter),
        "psi_a": parse_state(require(p, "psi_a", "payload"), "payload.psi_a"),
        "psi_b": parse_state(require(p, "psi_b", "payload"), "payload.psi_b"),
        "t_grid": list(parse_times(require(p, "t_grid", "payload"), "payload.t_grid")),
        "zero_interaction": inter is None or not np.any(inter),
    }
    if inputs["psi_a"].size != h_a.shape[0]:
        raise SchemaError(f"payload.psi_a: length {inputs['psi_a'].size} != dim {h_a.shape[0]}")
    if inputs["psi_b"].size != h_b.shape[0]:
        raise SchemaError(f"payload.psi_b: length {inputs['psi_b'].size} != dim {h_b.shape[0]}")
    if "expected_entropy" in p:
        rows = p["expected_entropy"]
        if not isinstance(rows, list):
            raise SchemaError("payload.expected_entropy: expected a list")
        inputs["expected_entropy"] = [
            (parse_real(require(r, "t", f"payload.expected_entropy[{i}]"), f"payload.expected_entropy[{i}].t"),
             parse_real(require(r, "entropy", f"payload.expected_entropy[{i}]"), f"payload.expected_entropy[{i}].entropy"))
            for i, r in enumerate(rows)
        ]
    if "first_order_t" in p:
        inputs["first_order_t"] = parse_real(p["first_order_t"], "payload.first_order_t")
    return inputs


def _parse_spectrum(p: dict, s: Scenario, gate) -> dict:
    h = parse_matrix(require(p, "h", "payload"), "payload.h", s.seed)
    inputs = {"h": h}
    if "psi0" in p:
        inputs["psi0"] = parse_state(p["psi0"], "payload.psi0")
        if inputs["psi0"].size != h.shape[0]:
            raise SchemaError(f"payload.psi0: length {inputs['psi0'].size} != dim {h.shape[0]}")
        inputs["t_grid"] = list(parse_times(require(p, "t_grid", "payload"), "payload.t_grid"))
    if "expect_hermitian" in p:
        if not isinstance(p["expect_hermitian"], bool):
            raise SchemaError("payload.expect_hermitian: expected a boolean")
        inputs["expect_hermitian"] = p["expect_hermitian"]
    if "expected_max_imag" in p:
        inputs["expected_max_imag"] = parse_real(p["expected_max_imag"], "payload.expected_max_imag")
    if "expected_squared_norms" in p:
        norms = p["expected_squared_norms"]
        if not isinstance(norms, list) or len(norms) != len(inputs.get("t_grid", [])):
            raise SchemaError("payload.expected_squared_norms: must list one value per t_grid entry")
        inputs["expected_squared_norms"] = [parse_real(x, f"payload.expected_squared_norms[{i}]") for i, x in enumerate(norms)]
    if "expect_monotone_decay" in p:
        inputs["expect_monotone_decay"] = bool(p["expect_monotone_decay"])
    return inputs


_PARSERS = {
    "integrability": _parse_integrability,
    "path_independence": _parse_path_independence,
    "diagonal_consistency": _parse_diagonal,
    "partition_feshbach": _parse_partition,
    "tensor_product": _parse_tensor,
    "spectrum": _parse_spectrum,
}


def scenario_from_dict(doc: Any, allow_non_hermitian: bool = False, seed: int | None = None) -> Scenario:
    """Validate a parsed scenario document. ``seed`` overrides the document's seed."""
    if not isinstance(doc, dict):
        raise SchemaError("scenario: top level must be an object")
    version = require(doc, "schema_version", "scenario")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"scenario.schema_version: unsupported version {version!r} (supported: {SCHEMA_VERSION})")
    name = require(doc, "name", "scenario")
    if not isinstance(name, str) or not name:
        raise SchemaError("scenario.name: expected a non-empty string")
    kind = require(doc, "kind", "scenario")
    if kind not in KINDS:
        raise SchemaError(f"scenario.kind: unknown kind {kind!r}; expected one of {KINDS}")
    tolerances = doc.get("tolerances", {})
    if not isinstance(tolerances, dict):
        raise SchemaError("scenario.tolerances: expected an object")
    for key, value in tolerances.items():
        if key not in DEFAULT_TOLERANCES:
            raise SchemaError(f"scenario.tolerances.{key}: unknown check name")
        if parse_real(value, f"scenario.tolerances.{key}") < 0:
            raise SchemaError(f"scenario.tolerances.{key}: must be non-negative")
    doc_seed = doc.get("seed")
    if doc_seed is not None:
        doc_seed = parse_int(doc_seed, "scenario.seed", 0)
    if seed is not None:
        doc_seed = seed
    if doc_seed is not None and doc_seed >= 2**64:
        raise SchemaError("scenario.seed: must fit in 64 bits")
    payload = require(doc, "payload", "scenario")
    if not isinstance(payload, dict):
        raise SchemaError("scenario.payload: expected an object")
    s = Scenario(name, kind, payload, {k: float(v) for k, v in tolerances.items()}, doc_seed, allow_non_hermitian)
    gate = _gate(allow_non_hermitian or kind not in GATED_KINDS)
    try:
        s.inputs = _PARSERS[kind](payload, s, gate)
    except (SchemaError, GateRefusal):
        raise
    except MultitimeError as exc:
        raise SchemaError(f"payload: {exc}") from exc
    return s


def load_scenario(path, allow_non_hermitian: bool = False, seed: int | None = None) -> Scenario:
    path = Path(path)
    text = path.read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return scenario_from_dict(doc, allow_non_hermitian, seed)


# --------------------------------------------------------------------------
# check batteries


def _bound(name: str, value: float, tol: float, detail: str = "") -> Check:
    return Check(name, float(value), tol, bool(value <= tol), detail)


def _lower(name: str, value: float, tol: float, detail: str = "") -> Check:
    return Check(name, float(value), tol, bool(value > tol), detail)


def _match(name: str, value: float, expected: float, tol: float, relative: bool = False) -> Check:
    diff = abs(value - expected)
    if relative:
        diff = diff / abs(expected) if expected != 0 else math.inf
    kind = "relative" if relative else "absolute"
    return Check(name, float(value), tol, bool(diff <= tol), f"expected {expected!r}, {kind} deviation {diff!r}")


def _run_integrability(s: Scenario) -> list[Check]:
    inp = s.inputs
    rep = integrability_report(inp["family"], inp["sample_times"])
    where = "no index pairs" if rep.argmax is None else f"argmax pair ({rep.argmax[0]}, {rep.argmax[1]}) at times {list(rep.argmax[2])}"
    tol = s.tol("max_residual")
    if "expected_max_residual" in inp:
        exp = inp["expected_max_residual"]
        c = _match("max_residual", rep.max_residual, exp, tol * (1.0 + abs(exp)))
        c.detail += f"; {where}"
        return [c]
    return [_bound("max_residual", rep.max_residual, tol, where)]


def _norm_checks(s: Scenario, family, initial, paths) -> list[Check]:
    if not family.hermitian_required:
        return []
    out = []
    n0 = np.linalg.norm(initial.state)
    for label, path in paths:
        drift = abs(np.linalg.norm(propagate(family, initial, path).state) - n0)
        out.append(_bound(f"norm_drift_{label}", drift, s.tol("norm_drift") * max(1.0, path.length),
                          f"path length {path.length!r}"))
    return out


def _run_path_independence(s: Scenario) -> list[Check]:
    inp = s.inputs
    fam, init = inp["family"], inp["initial"]
    r = path_dependence_residual(fam, init, inp["path_a"], inp["path_b"])
    if "expected_residual" in inp:
        checks = [_match("path_residual_rel", r, inp["expected_residual"], s.tol("path_residual_rel"), relative=True)]
    else:
        checks = [_bound("path_residual", r, s.tol("path_residual"))]
    return checks + _norm_checks(s, fam, init, [("a", inp["path_a"]), ("b", inp["path_b"])])


def _run_diagonal(s: Scenario) -> list[Check]:
    inp = s.inputs
    gap = diagonal_consistency_gap(inp["family"], inp["initial"], inp["t"], inp["steps"])
    if "expected_gap" in inp:
        return [_match("gap", gap, inp["expected_gap"], s.tol("gap"))]
    return [_bound("gap", gap, s.tol("gap"))]


def _run_partition(s: Scenario) -> list[Check]:
    inp = s.inputs
    h, p_a = inp["h"], inp["p_a"]
    hn = frobenius(h)
    blocks = decompose(h, p_a)
    checks = [
        _bound("reassembly", frobenius(blocks.reassemble() - h) / max(hn, 1e-300), s.tol("reassembly"),
               "relative Frobenius error of H_AA + H_AB + H_BA + H_BB"),
        _bound("off_block_adjoint", frobenius(blocks.h_ab.conj().T - blocks.h_ba) / max(hn, 1e-300),
               s.tol("off_block_adjoint"), "||H_AB^dagger - H_BA||_F / ||H||_F"),
        _bound("block_commutator", block_commutator_residual(blocks) / max(hn**2, 1e-300),
               s.tol("block_commutator"), "||[H_AA, H_BB]||_F / ||H||_F^2"),
    ]
    fesh = feshbach_eigenconsistency(h, p_a)
    regular = [f for f in fesh if not f.singular]
    singular = [f.energy for f in fesh if f.singular]
    worst = max((f.residual for f in regular), default=0.0)
    detail = f"{len(regular)} eigenvalues checked"
    if singular:
        detail += f"; resolvent singular at {singular}"
    checks.append(_bound("eigen_consistency", worst, s.tol("eigen_consistency"), detail))
    if "expected_eigenvalues" in inp:
        found = sorted(f.energy for f in fesh)
        expected = sorted(inp["expected_eigenvalues"])
        if len(found) != len(expected):
            checks.append(Check("expected_eigenvalues", None, s.tol("expected_eigenvalues"), False,
                                f"found {len(found)} energies {found}, expected {len(expected)}"))
        else:
            dev = max(abs(a - b) for a, b in zip(found, expected))
            checks.append(_bound("expected_eigenvalues", dev, s.tol("expected_eigenvalues"),
                                 f"fixed-point energies {found}"))
    if "psi_v" in inp:
        err = dirac_frenkel_error(h, p_a, inp["psi_v"])
        if "expected_dirac_frenkel" in inp:
            checks.append(_match("dirac_frenkel", err, inp["expected_dirac_frenkel"], s.tol("dirac_frenkel")))
        else:
            checks.append(Check("dirac_frenkel", err, s.tol("dirac_frenkel"), True, "informational"))
    if inp.get("negative_control"):
        gaps = subspace_spectrum_gaps(h, p_a)
        smallest = min(g.gap for g in gaps)
        checks.append(_lower("subspace_gap", smallest, s.tol("subspace_gap"),
                             "H_AA eigenvalues vs nearest full eigenvalues: "
                             + ", ".join(f"{g.subspace_eigenvalue!r}->{g.nearest_full_eigenvalue!r}" for g in gaps)))
    return checks


def _run_tensor(s: Scenario) -> list[Check]:
    inp = s.inputs
    dec = inp["dec"]
    psi_a, psi_b = inp["psi_a"], inp["psi_b"]
    h = assemble(dec)
    checks = []
    if not s.allow_non_hermitian:
        checks.append(_bound("assembled_hermitian", hermiticity_defect(h), s.tol("assembled_hermitian")))
    sweep = interaction_entanglement_sweep(dec, psi_a, psi_b, inp["t_grid"])
    drift = max(abs(np.linalg.norm(evolve_full(dec, psi_a, psi_b, t)) - 1.0) for t in inp["t_grid"])
    checks.append(_bound("unitarity", drift, s.tol("unitarity"), "max | ||psi(t)|| - 1 | over the grid"))
    max_s = max(p.entropy for p in sweep)
    bound = math.log(min(dec.d_a, dec.d_b))
    checks.append(_bound("entropy_bound", max_s - bound, s.tol("entropy_bound"),
                         f"max entropy {max_s!r} vs ln(min(d_a, d_b)) = {bound!r}"))
    if inp["zero_interaction"]:
        checks.append(_bound("product_residual", max(p.residual for p in sweep), s.tol("product_residual"),
                             "interaction is zero: evolution must factorize"))
        checks.append(_bound("entropy_zero", max_s, s.tol("entropy_zero")))
    for t, expected in inp.get("expected_entropy", []):
        pts = [p for p in sweep if abs(p.t - t) <= 1e-12]
        if not pts:
            checks.append(Check(f"expected_entropy@{t!r}", None, s.tol("expected_entropy"), False, "t not on grid"))
            continue
        checks.append(_match(f"expected_entropy@{t!r}", pts[0].entropy, expected, s.tol("expected_entropy")))
    if "first_order_t" in inp:
        t = inp["first_order_t"]
        rate = product_ansatz_residual(dec, psi_a, psi_b, t) / t
        target = float(np.linalg.norm(dec.interaction @ np.kron(psi_a, psi_b)))
        checks.append(_match("first_order_law", rate, target, s.tol("first_order_law"), relative=True))
    return checks


def _run_spectrum(s: Scenario) -> list[Check]:
    inp = s.inputs
    decision = schroedinger_picture_gate(inp["h"])
    rep = decision.report
    eig = ", ".join(f"{z.real!r}{z.imag:+.17g}j" for z in rep.eigenvalues)
    checks = []
    if "expect_hermitian" in inp:
        ok = rep.hermitian == inp["expect_hermitian"]
        checks.append(Check("hermitian_flag", rep.hermiticity_defect, 1e-12, ok,
                            f"admits_unitary_picture={decision.admits_unitary_picture}, "
                            f"complex_spectrum_detected={decision.complex_spectrum_detected}; eigenvalues [{eig}]"))
    if "expected_max_imag" in inp:
        checks.append(_match("max_imag", rep.max_imag, inp["expected_max_imag"], s.tol("max_imag")))
    if "psi0" in inp:
        curve = norm_decay_curve(inp["h"], inp["psi0"], inp["t_grid"])
        values = [v for _, v in curve]
        if "expected_squared_norms" in inp:
            dev = max(abs(a - b) for a, b in zip(values, inp["expected_squared_norms"]))
            checks.append(_bound("squared_norms", dev, s.tol("squared_norms"), f"curve {values}"))
        elif rep.hermitian:
            dev = max(abs(v - 1.0) for v in values)
            checks.append(_bound("squared_norms", dev, s.tol("squared_norms"), "unitary: squared norm stays 1"))
        if inp.get("expect_monotone_decay"):
            steps = np.diff(values)
            worst = float(np.max(steps)) if steps.size else -math.inf
            checks.append(Check("monotone_decay", worst, 0.0, bool(worst < 0.0),
                                "largest increment of the squared norm along the grid"))
    return checks


_BATTERIES = {
    "integrability": _run_integrability,
    "path_independence": _run_path_independence,
    "diagonal_consistency": _run_diagonal,
    "partition_feshbach": _run_partition,
    "tensor_product": _run_tensor,
    "spectrum": _run_spectrum,
}


def run_scenario(s: Scenario) -> Report:
    start = time.perf_counter()
    try:
        checks = _BATTERIES[s.kind](s)
    except Exception as exc:  # surfaced as a failed check, never swallowed
        checks = [Check("error", None, 0.0, False, f"{type(exc).__name__}: {exc}")]
    if not checks:
        checks = [Check("no_checks", None, 0.0, False, "scenario requested no checks")]
    ms = int((time.perf_counter() - start) * 1000)
    return Report(s.name, checks, all(c.passed for c in checks), ms)


# --------------------------------------------------------------------------
# output


def report_to_json(r: Report) -> str:
    return json.dumps(r.to_dict(), indent=2) + "\n"


def report_to_csv(r: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "value", "tolerance", "passed"])
    for c in r.checks:
        w.writerow([c.name, "" if c.value is None else repr(c.value), repr(c.tolerance), str(c.passed).lower()])
    return buf.getvalue()


def emit_report(r: Report, fmt: str = "json", destination=None) -> None:
    """Write ``r`` as json or csv to ``destination`` (a path) or stdout when None."""
    if fmt == "json":
        text = report_to_json(r)
    elif fmt == "csv":
        text = report_to_csv(r)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if destination is None or str(destination) == "-":
        sys.stdout.write(text)
        return
    path = Path(destination)
    try:
        path.write_text(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write report to {path}: {exc.strerror}", str(path)) from exc


# --------------------------------------------------------------------------
# suites


def _load_and_run(path: Path, allow_non_hermitian: bool, seed: int | None) -> tuple[Report, bool]:
    try:
        s = load_scenario(path, allow_non_hermitian, seed)
    except (MultitimeError, OSError) as exc:
        check = Check("load", None, 0.0, False, f"{type(exc).__name__}: {exc}")
        return Report(path.stem, [check], False, 0), True
    return run_scenario(s), False


def run_suite(directory, parallelism: int = 1, allow_non_hermitian: bool = False,
              seed: int | None = None) -> tuple[list[Report], int]:
    """Run every ``*.json`` scenario in ``directory``.

    Returns reports ordered by scenario name and the exit status: 0 when all
    pass, 1 when any check failed, 2 when any file failed to load.
    """
    if parallelism < 1:
        raise ValueError(f"parallelism must be positive, got {parallelism}")
    files = sorted(Path(directory).glob("*.json"))
    if not files:
        log.warning("no scenario files found in %s", directory)
        return [], EXIT_OK
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        results = list(pool.map(lambda f: _load_and_run(f, allow_non_hermitian, seed), files))
    results.sort(key=lambda rb: rb[0].scenario_name)
    reports = [r for r, _ in results]
    if any(bad for _, bad in results):
        status = EXIT_LOAD_ERROR
    elif all(r.overall_passed for r in reports):
        status = EXIT_OK
    else:
        status = EXIT_FAILED
    return reports, status


def golden_dir() -> Path:
    return Path(__file__).parent / "golden"
