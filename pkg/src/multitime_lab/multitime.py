"""Multi-time propagation, the integrability residual and path dependence."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, EndpointMismatch, IndexOutOfRange, PathStartMismatch
from .opalg import as_state, commutator, frobenius, matrix_exponential
from .timefield import HamiltonianFamily

ENDPOINT_TOL = 1e-12


@dataclass(frozen=True)
class Segment:
    axis: int
    delta: float
    steps: int = 1

    def __post_init__(self):
        if self.axis < 0:
            raise IndexOutOfRange(f"segment axis must be non-negative, got {self.axis}")
        if self.steps < 1:
            raise ValueError(f"segment needs at least one substep, got {self.steps}")
        object.__setattr__(self, "delta", float(self.delta))


@dataclass(frozen=True)
class TimePath:
    """Axis-aligned staircase through time-tuple space."""

    start: tuple[float, ...]
    segments: tuple[Segment, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "start", tuple(float(t) for t in self.start))
        object.__setattr__(self, "segments", tuple(self.segments))
        for seg in self.segments:
            if seg.axis >= len(self.start):
                raise IndexOutOfRange(f"segment axis {seg.axis} out of range for {len(self.start)} times")

    @property
    def endpoint(self) -> tuple[float, ...]:
        end = list(self.start)
        for seg in self.segments:
            end[seg.axis] += seg.delta
        return tuple(end)

    @property
    def length(self) -> float:
        return sum(abs(seg.delta) for seg in self.segments)

    @classmethod
    def staircase(cls, start: Sequence[float], deltas: Sequence[float], order: Sequence[int] | None = None,
                  steps: int = 1) -> TimePath:
        """Visit each axis once, in ``order`` (default ascending), moving by ``deltas[axis]``."""
        order = range(len(deltas)) if order is None else order
        return cls(tuple(start), tuple(Segment(j, deltas[j], steps) for j in order))


@dataclass(frozen=True, eq=False)
class MultiTimeState:
    state: np.ndarray
    times: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "state", as_state(self.state))
        object.__setattr__(self, "times", tuple(float(t) for t in self.times))


def integrability_residual(family: HamiltonianFamily, times: Sequence[float], j: int, k: int) -> float:
    """Frobenius norm of ``dH_k/dt_j - dH_j/dt_k + i [H_j, H_k]`` at ``times``."""
    n = family.n_times
    for idx in (j, k):
        if not 0 <= idx < n:
            raise IndexOutOfRange(f"time index {idx} out of range for n_times {n}")
    if j == k:
        raise IndexOutOfRange("integrability residual needs two distinct indices")
    hj = family[j].evaluate(times)
    hk = family[k].evaluate(times)
    term = (family[k].partial_derivative(j).evaluate(times)
            - family[j].partial_derivative(k).evaluate(times)
            + 1j * commutator(hj, hk))
    return frobenius(term)


@dataclass(frozen=True)
class IntegrabilityReport:
    max_residual: float
    argmax: tuple[int, int, tuple[float, ...]] | None
    n_checked: int = 0


def integrability_report(family: HamiltonianFamily, sample_times: Sequence[Sequence[float]]) -> IntegrabilityReport:
    if not sample_times:
        raise ValueError("need at least one sample time tuple")
    best, where, count = 0.0, None, 0
    for times in sample_times:
        times = tuple(float(t) for t in times)
        for j, k in combinations(range(family.n_times), 2):
            r = integrability_residual(family, times, j, k)
            count += 1
            if where is None or r > best:
                best, where = r, (j, k, times)
    return IntegrabilityReport(best, where, count)


def _segment_propagator(family: HamiltonianFamily, times: list[float], seg: Segment) -> np.ndarray:
    member = family[seg.axis]
    if not member.depends_on(seg.axis):
        # H_j is constant along its own axis: one exact exponential
        return matrix_exponential(member.evaluate(times), -1j * seg.delta)
    h = seg.delta / seg.steps
    u = np.eye(family.dim, dtype=complex)
    t0 = times[seg.axis]
    mid = list(times)
    for s in range(seg.steps):
        mid[seg.axis] = t0 + (s + 0.5) * h
        u = matrix_exponential(member.evaluate(mid), -1j * h) @ u
    return u


def propagate(family: HamiltonianFamily, initial: MultiTimeState, path: TimePath) -> MultiTimeState:
    """Evolve ``initial`` along ``path`` with ``i d/dt_j phi = H_j phi`` on each segment.

    Each substep of width ``h`` applies ``exp(-i h H_j(midpoint))``.
    """
    if len(path.start) != family.n_times or len(initial.times) != family.n_times:
        raise DimensionMismatch("path/state time tuples do not match the family's n_times")
    if initial.state.size != family.dim:
        raise DimensionMismatch(f"state dim {initial.state.size} != family dim {family.dim}")
    if max(abs(a - b) for a, b in zip(path.start, initial.times)) > ENDPOINT_TOL:
        raise PathStartMismatch(f"path starts at {path.start}, state is at {initial.times}")
    psi = initial.state.copy()
    times = list(initial.times)
    for seg in path.segments:
        psi = _segment_propagator(family, times, seg) @ psi
        times[seg.axis] += seg.delta
    return MultiTimeState(psi, path.endpoint)


def path_dependence_residual(family: HamiltonianFamily, initial: MultiTimeState,
                             path_a: TimePath, path_b: TimePath) -> float:
    ea, eb = path_a.endpoint, path_b.endpoint
    if len(ea) != len(eb) or max(abs(a - b) for a, b in zip(ea, eb)) > ENDPOINT_TOL:
        raise EndpointMismatch(f"paths end at {ea} and {eb}")
    if path_a == path_b:
        return 0.0
    fa = propagate(family, initial, path_a).state
    fb = propagate(family, initial, path_b).state
    return float(np.linalg.norm(fa - fb))


def evolve_full(family: HamiltonianFamily, psi: np.ndarray, t: float, steps: int) -> np.ndarray:
    """Ordinary single-time evolution under ``sum_j H_j(s, ..., s)`` from 0 to ``t``."""
    psi = as_state(psi, family.dim)
    if all(m.is_constant() for m in family.members):
        return matrix_exponential(family.total(0.0), -1j * t) @ psi
    h = t / steps
    for s in range(steps):
        psi = matrix_exponential(family.total((s + 0.5) * h), -1j * h) @ psi
    return psi


def diagonal_consistency_gap(family: HamiltonianFamily, initial, t: float, steps: int) -> float:
    """Distance between full evolution to ``t`` and the multi-time staircase to ``(t, ..., t)``.

    The staircase advances ``t_0`` first, then ``t_1``, and so on.
    """
    if steps < 1:
        raise ValueError(f"steps must be positive, got {steps}")
    psi0 = as_state(initial, family.dim)
    full = evolve_full(family, psi0, t, steps)
    zero = (0.0,) * family.n_times
    path = TimePath.staircase(zero, (t,) * family.n_times, steps=steps)
    multi = propagate(family, MultiTimeState(psi0, zero), path)
    return float(np.linalg.norm(full - multi.state))
