#!/usr/bin/env python3
"""Regenerate the shipped golden scenarios.

Expected values are closed-form or come from mpmath, never from the package's
own numerics. Run from the repository root:

    python scripts/build_golden.py
"""

import json
import math
from pathlib import Path

import mpmath as mp

OUT = Path(__file__).resolve().parents[1] / "src" / "multitime_lab" / "golden"

I2 = [[1, 0], [0, 1]]
SX = [[0, 1], [1, 0]]
SZ = [[1, 0], [0, -1]]


def mat(rows):
    return {"dim": len(rows), "entries": [[[complex(z).real, complex(z).imag] for z in r] for r in rows]}


def vec(xs):
    return [[complex(z).real, complex(z).imag] for z in xs]


def kron(a, b):
    n, m = len(a), len(b)
    return [[a[i // m][j // m] * b[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def const_field(op, n):
    return {"n_times": n, "dim": len(op), "terms": [{"coeff": {"kind": "constant", "params": [1.0]}, "op": mat(op)}]}


def family(*fields):
    return {"hermitian_required": True, "members": list(fields)}


def staircase(deltas, order, steps=1):
    return {"start": [0.0] * len(deltas),
            "segments": [{"axis": j, "delta": deltas[j], "steps": steps} for j in order]}


def scenario(name, kind, payload, tolerances=None, seed=None):
    doc = {"schema_version": 1, "name": name, "kind": kind}
    if seed is not None:
        doc["seed"] = seed
    if tolerances:
        doc["tolerances"] = tolerances
    doc["payload"] = payload
    return doc


def diag_gap_oracle():
    mp.mp.dps = 40
    sx, sz = mp.matrix(SX), mp.matrix(SZ)
    psi = mp.matrix([1, 0])
    full = mp.expm(-1j * (sx + sz)) * psi
    stair = mp.expm(-1j * sz) * (mp.expm(-1j * sx) * psi)
    return float(mp.norm(full - stair))


def entropy_oracle(t):
    # |00>, |11> block of sz(x)1 + 1(x)sz + sx(x)sx is [[2, 1], [1, -2]]
    p = math.sin(math.sqrt(5) * t) ** 2 / 5
    return -(p * math.log(p) + (1 - p) * math.log(1 - p))


def build():
    t_small = 1e-3
    cross = lambda var: {  # noqa: E731
        "n_times": 2, "dim": 2,
        "terms": [{"coeff": {"kind": "monomial", "var": var, "params": [1.0, 1]}, "op": mat([[0.5, 0.2], [0.2, -1.0]])}],
    }
    docs = [
        scenario("integrability_commuting", "integrability", {
            "family": family(const_field(kron(SX, I2), 2), const_field(kron(I2, SZ), 2)),
            "sample_times": [[0.0, 0.0], [0.5, -1.0], [2.0, 3.0]],
        }),
        scenario("integrability_violating", "integrability", {
            "family": family(const_field(SX, 2), const_field(SZ, 2)),
            "sample_times": [[0.0, 0.0], [1.0, 2.0]],
            "expected_max_residual": 2 * math.sqrt(2),
        }),
        scenario("path_dependence_bch", "path_independence", {
            "family": family(const_field(SX, 2), const_field(SZ, 2)),
            "initial": {"state": vec([1, 0]), "times": [0.0, 0.0]},
            "path_a": staircase([t_small, t_small], [0, 1]),
            "path_b": staircase([t_small, t_small], [1, 0]),
            "expected_residual": t_small * t_small * 2.0,
        }, tolerances={"path_residual_rel": 0.05}),
        scenario("path_independence_integrable", "path_independence", {
            "family": family(cross(1), cross(0)),
            "initial": {"state": vec([0.6, 0.8j]), "times": [0.0, 0.0]},
            "path_a": staircase([1.2, -0.7], [0, 1], steps=4),
            "path_b": staircase([1.2, -0.7], [1, 0], steps=4),
        }, tolerances={"path_residual": 1e-10}),
        scenario("diagonal_gap_sx_sz", "diagonal_consistency", {
            "family": family(const_field(SX, 2), const_field(SZ, 2)),
            "initial": vec([1, 0]),
            "t": 1.0,
            "steps": 10,
            "expected_gap": diag_gap_oracle(),
        }),
        scenario("diagonal_gap_commuting", "diagonal_consistency", {
            "family": family(const_field(kron(SX, I2), 2), const_field(kron(I2, SZ), 2)),
            "initial": vec([0.5, 0.5, 0.5j, -0.5]),
            "t": 1.0,
            "steps": 10,
        }),
        scenario("feshbach_two_level", "partition_feshbach", {
            "h": mat([[0, 2], [2, 1]]),
            "basis": [vec([1, 0])],
            "expected_eigenvalues": [(1 - math.sqrt(17)) / 2, (1 + math.sqrt(17)) / 2],
            "psi_v": vec([1, 0]),
            "expected_dirac_frenkel": 2.0,
        }, tolerances={"eigen_consistency": 1e-10}),
        scenario("feshbach_negative_control", "partition_feshbach", {
            "h": mat([[0, 1], [1, 1]]),
            "projector": mat([[1, 0], [0, 0]]),
            "negative_control": True,
            "expected_eigenvalues": [(1 - math.sqrt(5)) / 2, (1 + math.sqrt(5)) / 2],
        }),
        scenario("block_commutator_random", "partition_feshbach", {
            "h": {"random_hermitian": {"dim": 8}},
            "basis": [
                vec([1, 0, 0, 0, 0, 0, 0, 0]),
                vec([0, 1, 1j, 0, 0, 0, 0, 0]),
                vec([0.5, 0, 0, 1, -1, 0.25j, 0, 0]),
            ],
        }, seed=2024),
        scenario("interaction_sweep_ising", "tensor_product", {
            "h_a": mat(SZ),
            "h_b": mat(SZ),
            "interaction": mat(kron(SX, SX)),
            "psi_a": vec([1, 0]),
            "psi_b": vec([1, 0]),
            "t_grid": [0.0, 0.25, math.pi / 4, 1.0],
            "expected_entropy": [{"t": 0.0, "entropy": 0.0}, {"t": math.pi / 4, "entropy": entropy_oracle(math.pi / 4)},
                                 {"t": 1.0, "entropy": entropy_oracle(1.0)}],
            "first_order_t": t_small,
        }),
        scenario("no_interaction_factorizes", "tensor_product", {
            "h_a": {"random_hermitian": {"dim": 2}},
            "h_b": {"random_hermitian": {"dim": 3, "seed_offset": 1}},
            "interaction": None,
            "psi_a": vec([0.6, 0.8]),
            "psi_b": vec([0, 1j, 0]),
            "t_grid": [round(0.1 * k, 1) for k in range(11)],
        }, seed=7),
        scenario("gamow_decay", "spectrum", {
            "h": mat([[1 - 0.5j, 0], [0, 2]]),
            "psi0": vec([1, 0]),
            "t_grid": [0.0, 0.5, 1.0, 2.0, 4.0],
            "expect_hermitian": False,
            "expected_max_imag": 0.5,
            "expected_squared_norms": [math.exp(-t) for t in (0.0, 0.5, 1.0, 2.0, 4.0)],
            "expect_monotone_decay": True,
        }),
        scenario("hermitian_unitarity", "spectrum", {
            "h": mat(SX),
            "psi0": vec([0.6, 0.8j]),
            "t_grid": [0.0, 1.0, 10.0, 100.0],
            "expect_hermitian": True,
            "expected_max_imag": 0.0,
        }),
    ]
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for doc in docs:
        (OUT / f"{doc['name']}.json").write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {len(docs)} scenarios to {OUT}")


if __name__ == "__main__":
    build()
